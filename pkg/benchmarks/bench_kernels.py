#!/usr/bin/env python3
"""Compare the numba and numpy kernel backends on the hot operations and on a
full autoencoder training step.

Usage: python benchmarks/bench_kernels.py [--batch 20] [--repeats 5]
"""
import argparse
import time

import numpy as np

from rrto import rrae
from rrto.nn import kernels
from rrto.nn.losses import relative_frobenius
from rrto.nn.optim import AdaBelief

try:
    from threadpoolctl import threadpool_limits
except ImportError:
    from contextlib import nullcontext

    def threadpool_limits(*a, **k):
        return nullcontext()


def timeit(fn, repeats):
    fn()  # warm up / JIT compile
    t0 = time.time()
    for _ in range(repeats):
        fn()
    return (time.time() - t0) / repeats


def bench_primitives(repeats):
    rng = np.random.default_rng(0)
    cases = [
        ("im2col  80x80 conv1", lambda: kernels.im2col(x1, 3, 3, 2, 1, 40, 40)),
        ("im2col  40x40 conv2", lambda: kernels.im2col(x2, 3, 3, 2, 1, 20, 20)),
        ("col2im  -> 80x80", lambda: kernels.col2im(c3, (32, 20, 80, 80), 3, 3, 2, 1, 40, 40)),
        ("adabelief 8.2M params", lambda: kernels.adabelief_update(
            p, g, m, v, 1e-3, 0.9, 0.999, 1e-8, 0.5, 0.5)),
        ("relu backward 33MB", lambda: kernels.relu_backward(r1, r2, r3)),
    ]
    x1 = rng.random((1, 20, 80, 80))
    x2 = rng.random((32, 20, 40, 40))
    c3 = rng.random((32 * 9, 20 * 40 * 40))
    p, g, m, v = (rng.random(8_200_000) for _ in range(4))
    r1, r2, r3 = (rng.random((32, 20, 80, 80)) for _ in range(3))
    rows = []
    for name, fn in cases:
        per_backend = {}
        for backend in ("numpy", "numba") if kernels.HAS_NUMBA else ("numpy",):
            kernels.set_backend(backend)
            per_backend[backend] = timeit(fn, repeats) * 1000
        rows.append((name, per_backend))
    return rows


def bench_training_step(batch, repeats):
    x = np.random.default_rng(0).random((1, batch, 80, 80))
    rows = []
    for backend in ("numpy", "numba") if kernels.HAS_NUMBA else ("numpy",):
        kernels.set_backend(backend)
        model = rrae.RraeModel("geometry", seed=0)
        opt = AdaBelief(model.encoder.params + model.decoder.params, lr=1e-3)

        def step():
            y = model.encoder.forward(x)
            u_b, _, _ = rrae.truncated_svd(y, model.k_max)
            y_t = u_b @ (u_b.T @ y)
            recon = model.decoder.forward(y_t)
            _, grad = relative_frobenius(recon, x)
            gy = model.decoder.backward(grad)
            model.encoder.backward(u_b @ (u_b.T @ gy), input_grad=False)
            opt.step(model.encoder.grads + model.decoder.grads)

        with threadpool_limits(limits=1, user_api="blas"):
            rows.append((backend, timeit(step, repeats)))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--batch", type=int, default=20)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    print(f"numba available: {kernels.HAS_NUMBA} | default backend: {kernels.BACKEND}")
    print("\nprimitive kernels (ms per call):")
    for name, per_backend in bench_primitives(args.repeats):
        cells = "  ".join(f"{k}: {v:8.2f}" for k, v in per_backend.items())
        print(f"  {name:24s} {cells}")

    print(f"\nfull geometry-autoencoder training step, batch {args.batch} (s):")
    for backend, dt in bench_training_step(args.batch, args.repeats):
        print(f"  {backend:6s} {dt:8.3f}")
    print("\nselect a backend with RRTO_BACKEND=numba|numpy")


if __name__ == "__main__":
    main()
