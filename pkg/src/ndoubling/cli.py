"""Command-line interface.

Every subcommand prints exact rationals as ``p/q``; ``--format csv`` and
``--format json`` give machine-readable output.  Exit status is 0 on
success, 1 on a domain error and 2 on a usage error.
"""
import argparse
import csv
import io
import json
import os
import random
import sys
from decimal import Context
from fractions import Fraction

from .errors import DependentPairError, DomainError
from .exactnum import format_rational, parse_rational
from .farness import far_constant, is_far
from .measure import (
    DEFAULT_A,
    MeasureSpec,
    cdf,
    cells_measure,
    density,
    doubling_audit,
    measure_interval,
    non_doubling_witness,
)
from .pairs import (
    Dependent,
    FarCase,
    classify_pair,
    exponent_pair,
    is_solvable,
    lift_exponents,
    semi_good_exponent,
)
from .witness import divergence_sweep, separate_families

APPROX_DIGITS = 12
SWEEP_COLUMNS = ["ell", "case", "left", "right", "ratio_num", "ratio_den", "ratio_approx", "bound_num", "bound_den"]


def approx(x):
    """Decimal rendering to 12 significant digits; display only."""
    x = Fraction(x)
    ctx = Context(prec=APPROX_DIGITS)
    return str(ctx.divide(ctx.create_decimal(x.numerator), ctx.create_decimal(x.denominator)))


def _rational(text):
    try:
        return parse_rational(text)
    except ValueError:
        pos = next((i for i, ch in enumerate(text) if not (ch.isdigit() or ch in "+-/ ")), len(text))
        raise argparse.ArgumentTypeError(f"malformed rational {text!r} at character {pos}") from None


def _natural(lo):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"expected an integer >= {lo}, got {v}")
        return v

    return parse


class Result:
    """What a subcommand produced, in a form every output format can render."""

    def __init__(self, command, inputs, result, exact=None, lines=None, table=None):
        self.command = command
        self.inputs = inputs
        self.result = result
        self.exact = exact or {}
        self.lines = lines or []
        self.table = table

    def as_json(self):
        return {
            "command": self.command,
            "inputs": _jsonable(self.inputs),
            "result": _jsonable(self.result),
            "exact": {k: format_rational(v) for k, v in self.exact.items()},
            "approx": {k: approx(v) for k, v in self.exact.items()},
        }

    def as_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.table is not None:
            header, rows = self.table
            w.writerow(header)
            w.writerows(rows)
        else:
            flat = {k: v for k, v in self.result.items() if not isinstance(v, (dict, list))}
            flat.update({k: format_rational(v) for k, v in self.exact.items()})
            w.writerow(flat.keys())
            w.writerow(_jsonable(list(flat.values())))
        return buf.getvalue()

    def as_text(self):
        return "\n".join(self.lines) + "\n"


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _spec(args):
    return MeasureSpec(args.n, args.a, args.b)


def _spec_inputs(spec):
    d = {"n": spec.n, "a": spec.a, "b": spec.b}
    if spec.promoted:
        d["requested_n"] = spec.requested_n
    return d


def _classification_dict(cls):
    if isinstance(cls, Dependent):
        return {"kind": cls.kind, "base": cls.base, "m_exponent": cls.s, "n_exponent": cls.t}
    if isinstance(cls, FarCase):
        r = cls.report
        return {"kind": cls.kind, "far_constant": r.constant, "witness_level": r.witness_level}
    return {
        "kind": cls.kind,
        "m_exponent": cls.x,
        "n_exponent": cls.y,
        "semi_good_exponent": cls.semi_good_exponent,
        "lifted_m": str(cls.lifted_m),
        "lifted_n": str(cls.lifted_n),
    }


def _classification_line(cls):
    if isinstance(cls, Dependent):
        return f"Dependent: {cls.m} = {cls.base}^{cls.s}, {cls.n} = {cls.base}^{cls.t}"
    if isinstance(cls, FarCase):
        r = cls.report
        return f"FarCase: 1/{cls.n} is {cls.m}-far, C = {format_rational(r.constant)} (level {r.witness_level})"
    return (
        f"GoodLift: ({cls.m}^{cls.x}, {cls.n}^{cls.y}) is a good pair "
        f"(semi-good exponent {cls.semi_good_exponent}, lift ({cls.lift_x}, {cls.y}))"
    )


# ---------------------------------------------------------------------------
# subcommands

def cmd_classify(args):
    cls = classify_pair(args.n, args.m)
    return Result("classify", {"n": args.n, "m": args.m}, _classification_dict(cls),
                  {"far_constant": cls.report.constant} if isinstance(cls, FarCase) else {},
                  [_classification_line(cls)])


def cmd_far(args):
    far = is_far(args.delta, args.n)
    return Result("far", {"delta": args.delta, "n": args.n}, {"far": far}, {},
                  [f"far: {'true' if far else 'false'}"])


def cmd_far_constant(args):
    rep = far_constant(args.delta, args.n)
    if not rep.is_far:
        return Result("far-constant", {"delta": args.delta, "n": args.n}, {"far": False}, {}, ["far: false"])
    return Result(
        "far-constant",
        {"delta": args.delta, "n": args.n},
        {"far": True, "witness_level": rep.witness_level, "orbit_length": rep.orbit_length},
        {"constant": rep.constant},
        ["far: true", f"constant: {format_rational(rep.constant)}", f"witness_level: {rep.witness_level}"],
    )


def cmd_solvable(args):
    res = is_solvable(args.m, args.n)
    out = {"solvable": res.solvable, "ell_min": res.ell_min, "k": res.k_witness}
    lines = [f"solvable: {'true' if res.solvable else 'false'}"]
    if res.solvable:
        lines += [f"ell_min: {res.ell_min}", f"k: {res.k_witness}"]
    return Result("solvable", {"m": args.m, "n": args.n}, out, {}, lines)


def cmd_lift(args):
    ep = exponent_pair(args.m, args.n)
    semi = ep.is_semi_good()
    e = 1 if semi else semi_good_exponent(ep)
    x, y = lift_exponents(ep.lift(e, 1))
    out = {
        "primes": list(ep.primes),
        "m_exponents": list(ep.b_vec),
        "n_exponents": list(ep.a_vec),
        "good": ep.is_good(),
        "semi_good": semi,
        "semi_good_exponent": e,
        "m_exponent": e * x,
        "n_exponent": y,
    }
    lines = [
        f"semi_good_exponent: {e}",
        f"lift: ({args.m}^{e * x}, {args.n}^{y}) is a good pair",
    ]
    return Result("lift", {"m": args.m, "n": args.n}, out, {}, lines)


def cmd_density(args):
    spec = _spec(args)
    v = density(args.x, spec)
    return Result("density", {"x": args.x, **_spec_inputs(spec)}, {}, {"density": v}, [format_rational(v)])


def cmd_cdf(args):
    spec = _spec(args)
    v = cdf(args.x, spec)
    return Result("cdf", {"x": args.x, **_spec_inputs(spec)}, {}, {"cdf": v}, [format_rational(v)])


def cmd_measure(args):
    spec = _spec(args)
    v = measure_interval(args.p, args.q, spec)
    return Result("measure", {"p": args.p, "q": args.q, **_spec_inputs(spec)}, {}, {"measure": v},
                  [format_rational(v)])


def cmd_audit_doubling(args):
    spec = _spec(args)
    v = doubling_audit(spec, args.depth, args.range)
    ok = v == spec.b / spec.a
    return Result(
        "audit-doubling",
        {"depth": args.depth, "range": args.range, **_spec_inputs(spec)},
        {"equals_b_over_a": ok},
        {"max_ratio": v},
        [f"max_ratio: {format_rational(v)}", f"equals b/a: {'true' if ok else 'false'}"],
    )


def cmd_audit_nondoubling(args):
    spec = _spec(args)
    w = non_doubling_witness(spec, args.ell)
    closed = spec.b**args.ell / spec.a ** (args.ell + 1)
    return Result(
        "audit-nondoubling",
        {"ell": args.ell, **_spec_inputs(spec)},
        {"interval": [w.left, w.right], "matches_closed_form": w.ratio == closed},
        {"ratio": w.ratio},
        [f"interval: [{format_rational(w.left)}, {format_rational(w.right)})", f"ratio: {format_rational(w.ratio)}"],
    )


def _sweep_table(sweep):
    rows = []
    for w in sweep.witnesses:
        rows.append([
            w.ell, w.case_tag, w.left_interval.tag(), w.right_interval.tag(),
            w.ratio.numerator, w.ratio.denominator, approx(w.ratio),
            w.lower_bound.numerator, w.lower_bound.denominator,
        ])
    return SWEEP_COLUMNS, rows


def _sweep_result(command, inputs, sweep):
    table = _sweep_table(sweep)
    lines = [_classification_line(sweep.classification), f"measure base: {sweep.measure_base}"]
    for w in sweep.witnesses:
        lines.append(
            f"ell={w.ell} {w.case_tag} {w.left_interval} {w.right_interval} "
            f"ratio={format_rational(w.ratio)} (~{approx(w.ratio)}) bound={format_rational(w.lower_bound)}"
        )
    result = {
        "classification": _classification_dict(sweep.classification),
        "measure_base": sweep.measure_base,
        "rows": [dict(zip(table[0], r)) for r in table[1]],
    }
    exact = {f"ratio_{w.ell}": w.ratio for w in sweep.witnesses}
    return Result(command, inputs, result, exact, lines, table)


def cmd_witness(args):
    sweep = divergence_sweep(args.n, args.m, [args.ell], args.a, args.b)
    return _sweep_result("witness", {"n": args.n, "m": args.m, "ell": args.ell}, sweep)


def cmd_sweep(args):
    if args.ell_to < args.ell_from:
        raise DomainError("--ell-to must not be below --ell-from")
    ells = range(args.ell_from, args.ell_to + 1)
    sweep = divergence_sweep(args.n, args.m, ells, args.a, args.b)
    inputs = {"n": args.n, "m": args.m, "ell_from": args.ell_from, "ell_to": args.ell_to}
    return _sweep_result("sweep", inputs, sweep)


def cmd_separate(args):
    rep = separate_families(args.ns, args.ms, args.ells, args.a, args.b)
    inputs = {"ns": args.ns, "ms": args.ms, "ells": args.ells}
    if not rep.separable:
        deps = [{"i": i, "j": j, "base": base} for i, j, base in rep.dependence_witnesses]
        lines = ["separable: false"] + [
            f"n[{i}]={args.ns[i]} and m[{j}]={args.ms[j]} are powers of {base}" for i, j, base in rep.dependence_witnesses
        ]
        return Result("separate", inputs, {"separable": False, "dependence": deps}, {}, lines)
    lines = [f"separable: true (i={rep.chosen_i}, n={args.ns[rep.chosen_i]})",
             f"uniform measure: {'true' if rep.uniform else 'false'}"]
    targets = []
    exact = {}
    header = ["m"] + SWEEP_COLUMNS
    rows = []
    for t in rep.per_target:
        lines.append(f"m={t.m}: {_classification_line(t.classification)}; measure base {t.sweep.measure_base}")
        for w in t.sweep.witnesses:
            lines.append(f"  ell={w.ell} {w.case_tag} ratio={format_rational(w.ratio)} (~{approx(w.ratio)})")
            exact[f"ratio_m{t.m}_ell{w.ell}"] = w.ratio
        rows += [[t.m] + r for r in _sweep_table(t.sweep)[1]]
        targets.append({"m": t.m, "classification": _classification_dict(t.classification),
                        "measure_base": t.sweep.measure_base,
                        "ratios": [w.ratio for w in t.sweep.witnesses]})
    result = {"separable": True, "chosen_i": rep.chosen_i, "uniform": rep.uniform, "targets": targets}
    return Result("separate", inputs, result, exact, lines, (header, rows))


def _random_rational(rng, hi, max_den):
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, hi * den - 1), den)


def cmd_oracle_check(args):
    spec = _spec(args)
    rng = random.Random(args.seed)
    failures = []
    for _ in range(args.cases):
        p = _random_rational(rng, args.upper, args.max_den)
        q = _random_rational(rng, args.upper, args.max_den)
        p, q = min(p, q), max(p, q)
        if measure_interval(p, q, spec) != cells_measure(p, q, spec):
            failures.append([p, q])
    ok = not failures
    return Result(
        "oracle-check",
        {"seed": args.seed, "cases": args.cases, **_spec_inputs(spec)},
        {"agree": ok, "failures": failures},
        {},
        [f"oracle agreement: {args.cases - len(failures)}/{args.cases}"],
    )


def cmd_grid(args):
    header = ["n", "m", "kind", "detail"]
    rows = []
    for n in range(2, args.max + 1):
        for m in range(n, args.max + 1):
            cls = classify_pair(n, m)
            if isinstance(cls, Dependent):
                detail = str(cls.base)
            elif isinstance(cls, FarCase):
                detail = format_rational(cls.report.constant)
            else:
                detail = f"{cls.x}:{cls.y}"
            rows.append([n, m, cls.kind, detail])
    counts = {}
    for r in rows:
        counts[r[2]] = counts.get(r[2], 0) + 1
    lines = [f"{k}: {v}" for k, v in sorted(counts.items())]
    return Result("grid", {"max": args.max}, {"counts": counts}, {}, lines, (header, rows))


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["human", "csv", "json"], default="human")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    common.add_argument("--factor-bound", type=_natural(2), metavar="N",
                        help="trial-division bound (also NDOUBLING_FACTOR_BOUND)")

    weights = argparse.ArgumentParser(add_help=False)
    weights.add_argument("--a", type=_rational, default=DEFAULT_A)
    weights.add_argument("--b", type=_rational, default=None, help="defaults to 2 - a")

    measure = argparse.ArgumentParser(add_help=False, parents=[weights])
    measure.add_argument("--n", type=_natural(2), default=3)

    parser = argparse.ArgumentParser(prog="ndoubling", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, parents=(), **kw):
        p = sub.add_parser(name, parents=[common, *parents], **kw)
        p.set_defaults(func=func)
        return p

    p = add("classify", cmd_classify, help="dependent / far / good-lift class of (n, m)")
    p.add_argument("n", type=_natural(2))
    p.add_argument("m", type=_natural(2))

    for name, func in (("far", cmd_far), ("far-constant", cmd_far_constant)):
        p = add(name, func)
        p.add_argument("delta", type=_rational)
        p.add_argument("n", type=_natural(2))

    p = add("solvable", cmd_solvable)
    p.add_argument("m", type=_natural(2))
    p.add_argument("n", type=_natural(2))

    p = add("lift", cmd_lift)
    p.add_argument("m", type=_natural(2))
    p.add_argument("n", type=_natural(2))

    for name, func in (("density", cmd_density), ("cdf", cmd_cdf)):
        p = add(name, func, [measure])
        p.add_argument("x", type=_rational)

    p = add("measure", cmd_measure, [measure])
    p.add_argument("p", type=_rational)
    p.add_argument("q", type=_rational)

    p = add("audit-doubling", cmd_audit_doubling, [measure])
    p.add_argument("--depth", type=_natural(1), default=6)
    p.add_argument("--range", type=_natural(1), default=4)

    p = add("audit-nondoubling", cmd_audit_nondoubling, [measure])
    p.add_argument("--ell", type=_natural(1), default=1)

    p = add("witness", cmd_witness, [weights])
    p.add_argument("n", type=_natural(2))
    p.add_argument("m", type=_natural(2))
    p.add_argument("--ell", type=_natural(1), default=2)

    p = add("sweep", cmd_sweep, [weights])
    p.add_argument("n", type=_natural(2))
    p.add_argument("m", type=_natural(2))
    p.add_argument("--ell-from", type=_natural(1), default=2)
    p.add_argument("--ell-to", type=_natural(1), default=12)

    p = add("separate", cmd_separate, [weights])
    p.add_argument("--ns", type=_natural(2), nargs="+", required=True)
    p.add_argument("--ms", type=_natural(2), nargs="+", required=True)
    p.add_argument("--ells", type=_natural(1), nargs="+", default=[2, 5, 10])

    p = add("oracle-check", cmd_oracle_check, [measure])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=_natural(1), default=100)
    p.add_argument("--upper", type=_natural(1), default=6, help="sample intervals inside [0, upper)")
    p.add_argument("--max-den", type=_natural(1), default=200)

    p = add("grid", cmd_grid, help="classification of all 2 <= n <= m <= MAX")
    p.add_argument("--max", type=_natural(2), default=30)

    return parser


def render(res, fmt):
    if fmt == "json":
        return json.dumps(res.as_json(), indent=2) + "\n"
    if fmt == "csv":
        return res.as_csv()
    return res.as_text()


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    saved = os.environ.get("NDOUBLING_FACTOR_BOUND")
    if args.factor_bound is not None:
        os.environ["NDOUBLING_FACTOR_BOUND"] = str(args.factor_bound)
    try:
        res = args.func(args)
    except DependentPairError as exc:
        print(f"error: dependent pair, common base {exc.base}: {exc}", file=stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    finally:
        # run() may be called repeatedly in one process
        if saved is None:
            os.environ.pop("NDOUBLING_FACTOR_BOUND", None)
        else:
            os.environ["NDOUBLING_FACTOR_BOUND"] = saved
    text = render(res, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
