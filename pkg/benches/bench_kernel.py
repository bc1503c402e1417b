"""Compare the compiled diagram kernel with the pure-Python one.

    python benches/bench_kernel.py [--n 4] [--repeat 5]

Times raw ``compose`` and ``validate`` over all pairs of basis diagrams, then
an end-to-end projector computation in a fresh interpreter per backend (the
backend is fixed at import, so it cannot be switched in-process).
"""

import argparse
import itertools
import os
import subprocess
import sys
import timeit

from tlbd import _kernel_py
from tlbd.diagrams import enumerate_basis

try:
    from tlbd import _kernel
except ImportError:
    _kernel = None

END_TO_END = "import time; t = time.perf_counter(); from tlbd.jones_wenzl import jw_type_d; jw_type_d({n}); print(time.perf_counter() - t)"


def kernel_times(impl, pairs, n, repeat):
    def compose_all():
        for a, b in pairs:
            impl.compose(a.partner, a.dots, b.partner, b.dots, n, n, n)

    def validate_all():
        for a, _ in pairs:
            impl.validate(a.partner, a.dots, n, n)

    return (
        min(timeit.repeat(compose_all, number=1, repeat=repeat)),
        min(timeit.repeat(validate_all, number=1, repeat=repeat)),
    )


def end_to_end(n, pure):
    env = dict(os.environ)
    env.pop("TLBD_PURE_PYTHON", None)
    if pure:
        env["TLBD_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", END_TO_END.format(n=n)], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--projector-n", type=int, default=5)
    args = parser.parse_args()

    basis = enumerate_basis(args.n, "B")
    pairs = list(itertools.product(basis, repeat=2))
    print(f"{len(pairs)} diagram pairs on {args.n} strands")
    py = kernel_times(_kernel_py, pairs, args.n, args.repeat)
    print(f"python    compose {py[0]:.4f}s  validate {py[1]:.4f}s")
    if _kernel is None:
        print("compiled kernel not built; nothing to compare")
        return
    c = kernel_times(_kernel, pairs, args.n, args.repeat)
    print(f"compiled  compose {c[0]:.4f}s  validate {c[1]:.4f}s")
    print(f"speedup   compose {py[0] / c[0]:.1f}x  validate {py[1] / c[1]:.1f}x")

    k = args.projector_n
    slow, fast = end_to_end(k, True), end_to_end(k, False)
    print(f"d_{k} end to end: python {slow:.3f}s, compiled {fast:.3f}s ({slow / fast:.1f}x)")


if __name__ == "__main__":
    main()
