"""Exact construction of an n-adic doubling measure that is not m-adic
doubling, with the number theory that decides which witness applies."""
from ._kernels import BACKEND
from .adic import AdicInterval, Position, are_siblings, locate
from .errors import CapacityError, DependentPairError, DomainError
from .exactnum import PrimeFactorization, factorize, floor_log_ratio, multiplicatively_dependent
from .farness import FarReport, far_constant, is_far
from .measure import (
    MeasureSpec,
    cdf,
    density,
    doubling_audit,
    measure_interval,
    non_doubling_witness,
    unit_cells,
)
from .pairs import (
    Dependent,
    FarCase,
    GoodLift,
    classify_pair,
    exponent_pair,
    is_good_pair,
    is_semi_good_pair,
    is_solvable,
    lift_to_good,
    make_semi_good,
)
from .witness import (
    DivergenceWitness,
    divergence_sweep,
    far_case_witness,
    nonfar_case_witness,
    separate_families,
)

__version__ = "0.1.0"
