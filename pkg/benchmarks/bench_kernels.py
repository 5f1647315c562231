"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Every pair of implementations is checked for agreement before timing.
"""
import argparse
import timeit

import numpy as np

from ndoubling import _kernels as K


def cases():
    dens = np.arange(2, 400)
    bases = np.arange(2, 200)
    return [
        ("trial_division(2**31-1)", K.trial_division_np, getattr(K, "trial_division_nb", None), (2**31 - 1,)),
        ("trial_division(600851475143)", K.trial_division_np, getattr(K, "trial_division_nb", None), (600851475143,)),
        ("orbit_min(1, 2, 1000003)", K.orbit_min_np, getattr(K, "orbit_min_nb", None), (1, 2, 1000003)),
        ("strip_common(3**30*7, 6)", K.strip_common_np, getattr(K, "strip_common_nb", None), (3**30 * 7, 6)),
        ("far_mask(398 x 198)", K.far_mask_np, getattr(K, "far_mask_nb", None), (dens, bases)),
    ]


def _same(x, y):
    if isinstance(x, np.ndarray) or isinstance(y, np.ndarray):
        return np.array_equal(np.asarray(x), np.asarray(y))
    if isinstance(x, tuple):
        return all(_same(a, b) for a, b in zip(x, y))
    return int(x) == int(y)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"numba available: {K.HAVE_NUMBA}")
    print(f"{'kernel':32} {'numpy (ms)':>12} {'numba (ms)':>12} {'speedup':>8}")
    for name, np_fn, nb_fn, argv in cases():
        t_np = min(timeit.repeat(lambda: np_fn(*argv), number=1, repeat=args.repeat)) * 1e3
        if nb_fn is None:
            print(f"{name:32} {t_np:12.3f} {'-':>12} {'-':>8}")
            continue
        nb_argv = tuple(a if isinstance(a, np.ndarray) else np.int64(a) for a in argv)
        got = nb_fn(*nb_argv)  # compiles on first call
        if not _same(np_fn(*argv), got):
            raise SystemExit(f"{name}: numpy and numba disagree")
        t_nb = min(timeit.repeat(lambda: nb_fn(*nb_argv), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:32} {t_np:12.3f} {t_nb:12.3f} {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()
