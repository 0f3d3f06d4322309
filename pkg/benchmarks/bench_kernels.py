"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit


from apolar import _kernels_py
from apolar.apolarity import catalecticant_matrix
from apolar.forms import BinaryForm
from apolar.linalg import _integer_rows

try:
    from apolar import _ckernels
except ImportError:
    _ckernels = None


def elimination_cases(rng):
    cases = []
    for d in (8, 12, 16):
        f = BinaryForm(tuple(rng.randint(-10, 10) for _ in range(d + 1)))
        C = catalecticant_matrix(f, d // 2)
        cases.append((f"catalecticant d={d}", _integer_rows(C.rows), C.ncols))
    for n in (10, 20):
        rows = [[rng.randint(-50, 50) for _ in range(n)] for _ in range(n)]
        cases.append((f"random {n}x{n}", rows, n))
    return cases


def root_cases(rng):
    return [(f"degree {n}", [complex(rng.randint(-9, 9) or 1) for _ in range(n + 1)]) for n in (6, 12, 24)]


def bench(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = random.Random(0)
    if _ckernels is None:
        print("compiled kernels not built; only the Python timings are shown")
    print(f"{'kernel':<36}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    rows = [("ff_gauss_jordan " + name, lambda m, r=rows, n=n: m.ff_gauss_jordan([list(x) for x in r], n)) for name, rows, n in elimination_cases(rng)]
    rows += [("aberth " + name, lambda m, c=c: m.aberth(c, 1e-14, 500)) for name, c in root_cases(rng)]
    for name, call in rows:
        tp = bench(lambda: call(_kernels_py), args.repeat) * 1e3
        if _ckernels is None:
            print(f"{name:<36}{tp:>14.3f}{'-':>14}{'-':>10}")
            continue
        tc = bench(lambda: call(_ckernels), args.repeat) * 1e3
        print(f"{name:<36}{tp:>14.3f}{tc:>14.3f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
