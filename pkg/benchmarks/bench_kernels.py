"""Compare the compiled and pure-Python braid-word kernels.

    python3 benchmarks/bench_kernels.py [--length N] [--strands N] [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import timeit

from lensfib import _kernels_py

try:
    from lensfib import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _workload(strands: int, length: int, seed: int = 0) -> list[int]:
    rng = random.Random(seed)
    return [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]


def _components(images: list[int]) -> tuple[list[int], int]:
    comp = [-1] * len(images)
    k = 0
    for s in range(len(images)):
        if comp[s] < 0:
            t = s
            while comp[t] < 0:
                comp[t] = k
                t = images[t] - 1
            k += 1
    return comp, k


def bench(mod, strands: int, letters: list[int], repeat: int) -> dict[str, float]:
    comp, k = _components(list(_kernels_py.permutation(strands, letters)))
    cases = {
        "free_reduce": lambda: mod.free_reduce(letters),
        "permutation": lambda: mod.permutation(strands, letters),
        "crossing_tally": lambda: mod.crossing_tally(strands, letters, comp, k),
    }
    return {name: min(timeit.repeat(fn, number=1, repeat=repeat)) for name, fn in cases.items()}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--length", type=int, default=200_000)
    ap.add_argument("--strands", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    letters = _workload(args.strands, args.length)
    py = bench(_kernels_py, args.strands, letters, args.repeat)
    print(f"word length {args.length}, {args.strands} strands, best of {args.repeat}")
    if _kernels_c is None:
        print("compiled kernels not built; python timings only")
        for name, t in py.items():
            print(f"  {name:<15} python {t * 1e3:9.2f} ms")
        return
    c = bench(_kernels_c, args.strands, letters, args.repeat)
    print(f"  {'kernel':<15} {'python':>11} {'cython':>11} {'speedup':>8}")
    for name in py:
        print(f"  {name:<15} {py[name] * 1e3:8.2f} ms {c[name] * 1e3:8.2f} ms {py[name] / c[name]:7.1f}x")


if __name__ == "__main__":
    main()
