"""Compare the numba and numpy backends on the intersection and separation kernels.

Run with ``python3 benchmarks/bench_kernels.py [--samples N]``.  Each kernel
is warmed up once (numba compiles on first call), then timed on the same
batch of motions with both backends; the outputs are compared as well.
"""

import argparse
import os
import time

import numpy as np

from kinemetry import kernels
from kinemetry._accel import BACKEND_ENV
from kinemetry.convex import Ball, Polygon, Polytope3, SupportBody2
from kinemetry.kinematic.sampling import generator, sample_motions
from kinemetry.kinematic.window import TranslationWindow

PAIRS = [
    ("square/square", Polygon.box(), Polygon.box()),
    ("hexagon/disk", Polygon.regular(6), Ball(np.zeros(2), 1.0)),
    ("smooth/smooth", SupportBody2(1.0, [0.0, 0.05, 0.02], [0.0, 0.0, 0.01]), SupportBody2(0.7, [], [])),
    ("cube/ball", Polytope3.box(), Ball(np.zeros(3), 1.0)),
    ("cube/cube", Polytope3.box(), Polytope3.box()),
]


def run(kind, a, b, rot, trans):
    if kind == "separation":
        return kernels.separation_2d(a, b, rot, trans[:, 0], trans[:, 1])[0]
    return kernels.hits(a, b, rot, trans)


def timed(kind, a, b, rot, trans, backend):
    os.environ[BACKEND_ENV] = backend
    run(kind, a, b, rot[:8], trans[:8])
    t0 = time.perf_counter()
    out = run(kind, a, b, rot, trans)
    return time.perf_counter() - t0, out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=200_000)
    args = parser.parse_args()
    print(f"{'kernel':<28}{'numba [s]':>11}{'numpy [s]':>11}{'speedup':>9}  agree")
    for name, a, b in PAIRS:
        window = TranslationWindow.for_pair(a, b)
        rot, trans = sample_motions(a.dim, args.samples, generator(0), window.lo, window.hi)
        kinds = ["hits"] + (["separation"] if name == "smooth/smooth" else [])
        for kind in kinds:
            t_jit, out_jit = timed(kind, a, b, rot, trans, "numba")
            t_np, out_np = timed(kind, a, b, rot, trans, "numpy")
            agree = np.array_equal(out_jit, out_np) if kind == "hits" else float(np.max(np.abs(out_jit - out_np)))
            print(f"{name + ' ' + kind:<28}{t_jit:>11.4f}{t_np:>11.4f}{t_np / t_jit:>9.1f}  {agree}")


if __name__ == "__main__":
    main()
