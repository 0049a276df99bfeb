"""Compare the compiled kernels with the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py``. The end-to-end timing
spawns a subprocess per backend so that each one is selected at import.
"""

import argparse
import os
import subprocess
import sys
import timeit

from circlearea import _pykernels

try:
    from circlearea import _ckernels
except ImportError:
    _ckernels = None

KINDS = ["SIN", "COS", "SINC", "THETA_MINUS_SIN", "SIN_MINUS_THETA_COS", "ONE_MINUS_COS"]

E2E = (
    "import time; from circlearea import Interval; from circlearea.squeeze import verify_theorem2; "
    "t = time.perf_counter(); verify_theorem2(Interval(1e-6, 1.5), 10000, 12); "
    "print(time.perf_counter() - t)"
)


def per_call(fn, number):
    return min(timeit.repeat(fn, number=number, repeat=5)) / number * 1e6


def kernel_rows(number):
    x = (0.7, 0.7000000000000001)
    y = (1.3, 1.3000000000000003)
    mods = [("python", _pykernels)]
    if _ckernels is not None:
        mods.append(("cython", _ckernels))
    rows = []
    for kind in KINDS:
        k = getattr(_pykernels, kind)
        rows.append((f"series {kind.lower()}", [per_call(lambda m=m: m.series(k, 0.7), number) for _, m in mods]))
    for op in ("add", "mul", "div"):
        rows.append((op, [per_call(lambda m=m: getattr(m, op)(x[0], x[1], y[0], y[1]), number) for _, m in mods]))
    rows.append(("sqrt_out", [per_call(lambda m=m: m.sqrt_out(x[0], x[1]), number) for _, m in mods]))
    return [name for name, _ in mods], rows


def end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["CIRCLEAREA_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--number", type=int, default=20000)
    args = ap.parse_args()
    names, rows = kernel_rows(args.number)
    print(f"{'kernel':28}" + "".join(f"{n + ' us':>14}" for n in names) + ("   speedup" if len(names) > 1 else ""))
    for name, times in rows:
        line = f"{name:28}" + "".join(f"{t:14.3f}" for t in times)
        if len(times) > 1:
            line += f"{times[0] / times[1]:9.1f}x"
        print(line)
    py = end_to_end(pure=True)
    print(f"\nverify_theorem2, 1e4 cells: python {py:.3f} s", end="")
    if _ckernels is not None:
        cy = end_to_end(pure=False)
        print(f", cython {cy:.3f} s ({py / cy:.1f}x)")
    else:
        print(" (compiled extension not built)")


if __name__ == "__main__":
    main()
