"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --lengths 64 512 4096 --repeat 5 --golay 16 20 26
"""
import argparse
import timeit

import numpy as np

from zccs import _backend


def _gauss(rng, shape):
    return rng.integers(-1, 2, shape).astype(np.int64), rng.integers(-1, 2, shape).astype(np.int64)


def cases(L, rng):
    ar, ai = _gauss(rng, L)
    br, bi = _gauss(rng, L)
    cr, ci = _gauss(rng, (4, L))
    dr, di = _gauss(rng, (4, L))
    za = np.exp(2j * np.pi * rng.random(L))
    zb = np.exp(2j * np.pi * rng.random(L))
    return {
        "gauss_xcorr": lambda k: k.gauss_xcorr(ar, ai, br, bi),
        "gauss_code_xcorr(M=4)": lambda k: k.gauss_code_xcorr(cr, ci, dr, di),
        "complex_xcorr": lambda k: k.complex_xcorr(za, zb),
    }


def best_of(fn, repeat):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--lengths", type=int, nargs="+", default=[64, 512, 4096])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--golay", type=int, nargs="*", default=[16, 20],
                   help="Golay search lengths (the numpy search at 26 takes minutes)")
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    names = _backend.available()
    if len(names) < 2:
        print("compiled extension not built; only the numpy fallback is available")
    kernels = {n: _backend.get(n) for n in names}
    rng = np.random.default_rng(args.seed)

    header = f"{'kernel':<24}{'L':>7}" + "".join(f"{n + ' (ms)':>16}" for n in names)
    if len(names) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for L in args.lengths:
        for label, fn in cases(L, rng).items():
            times = [best_of(lambda k=kernels[n]: fn(k), args.repeat) for n in names]
            line = f"{label:<24}{L:>7}" + "".join(f"{t * 1e3:>16.4f}" for t in times)
            if len(times) > 1:
                line += f"{times[0] / times[1]:>9.1f}x"
            print(line)
    for n in args.golay:
        times = [best_of(lambda k=kernels[name]: k.golay_search(n), 1) for name in names]
        line = f"{'golay_search':<24}{n:>7}" + "".join(f"{t * 1e3:>16.4f}" for t in times)
        if len(times) > 1:
            line += f"{times[0] / times[1]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
