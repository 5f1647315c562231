from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as st

from ndoubling.errors import CapacityError, DomainError
from ndoubling.exactnum import (
    factorize,
    floor_log_ratio,
    format_rational,
    multiplicatively_dependent,
    parse_rational,
)


@pytest.mark.parametrize("x,expected", [(108, {2: 2, 3: 3}), (6, {2: 1, 3: 1}), (1, {})])
def test_factorize_examples(x, expected):
    assert factorize(x).as_dict() == expected


def test_factorize_errors(monkeypatch):
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(CapacityError):
        factorize(2**63)
    monkeypatch.setenv("NDOUBLING_FACTOR_BOUND", "2**10")
    with pytest.raises(CapacityError):
        factorize(1024)
    assert factorize(1023).value() == 1023


def test_factorize_reproduces_every_small_input():
    for x in range(2, 5000):
        f = factorize(x)
        assert f.value() == x
        assert list(f.primes()) == sorted(f.primes())
        assert all(e >= 1 for _, e in f)


def test_factorization_power():
    assert (factorize(18) ** 6).value() == 18**6


@pytest.mark.parametrize("m,ell,n,t", [(108, 1, 36, 1), (5, 7, 5, 7), (2, 10, 3, 6), (7, 0, 3, 0)])
def test_floor_log_ratio_examples(m, ell, n, t):
    assert floor_log_ratio(m, ell, n) == t


@given(st.integers(2, 500), st.integers(0, 200), st.integers(2, 500))
def test_floor_log_ratio_brackets(m, ell, n):
    t = floor_log_ratio(m, ell, n)
    assert n**t <= m**ell < n ** (t + 1)


def test_floor_log_ratio_domain():
    with pytest.raises(DomainError):
        floor_log_ratio(1, 3, 2)


@pytest.mark.parametrize("m,n,expected", [(2, 4, (2, 1, 2)), (12, 18, None), (8, 32, (2, 3, 5)), (36, 216, (6, 2, 3))])
def test_multiplicatively_dependent_examples(m, n, expected):
    assert multiplicatively_dependent(m, n) == expected


def dependence_by_search(m, n):
    for base in range(2, min(m, n) + 1):
        powers, p, e = {}, base, 1
        while p <= max(m, n) and e <= 64:
            powers[p] = e
            p, e = p * base, e + 1
        if m in powers and n in powers:
            return base, powers[m], powers[n]
    return None


def test_multiplicatively_dependent_matches_search():
    for m in range(2, 130):
        for n in range(2, 130):
            assert multiplicatively_dependent(m, n) == dependence_by_search(m, n), (m, n)


fractions = st.fractions(max_denominator=10**6)


@given(fractions, fractions, fractions)
def test_rational_field_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x and x * y == y * x
    from math import gcd
    assert gcd(abs(x.numerator), x.denominator) == 1 and x.denominator > 0


@given(fractions)
def test_rational_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x


@pytest.mark.parametrize("text", ["1/x", "", "1/0", "3.5", "/4"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)
