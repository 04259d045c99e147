"""Time the compiled kernels against the NumPy fallback on representative inputs.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints one line per kernel with the best-of-N time of each implementation,
the speed-up, and whether the two produced matching results.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from lensless_ml import _backend
from lensless_ml.surf import grid_keypoints, integral_image


def _inputs():
    rng = np.random.default_rng(0)
    frame = rng.random((48, 64))
    ii = np.ascontiguousarray(integral_image(frame))
    kps = grid_keypoints(64, 48, 8, (1.6, 3.2))
    xs = np.array([k.x for k in kps], dtype=np.float64)
    ys = np.array([k.y for k in kps], dtype=np.float64)
    sc = np.array([k.scale for k in kps], dtype=np.float64)

    X = rng.normal(size=(300, 2)) + np.where(rng.random(300) < 0.5, 2.0, -2.0)[:, None]
    y = np.where(X.sum(axis=1) > 0, 1.0, -1.0)
    Q = np.ascontiguousarray((y[:, None] * y[None, :]) * (X @ X.T))

    Xt = np.ascontiguousarray(rng.random((2000, 50)))
    yt = np.ascontiguousarray(rng.integers(0, 10, 2000).astype(np.int64))

    yq = rng.random(3072) * 0.8
    sd = np.full(3072, 0.01)
    z = np.ascontiguousarray(rng.standard_normal((100, 3072)))
    return {
        "quantize_accumulate": lambda m: m.quantize_accumulate(yq, sd, z, 255.0),
        "hessian_layer": lambda m: m.hessian_layer(ii, 15, 1, 48, 64),
        "describe_batch (upright)": lambda m: m.describe_batch(ii, xs, ys, sc, np.zeros(len(xs)), True, 1e-9),
        "describe_batch (oriented)": lambda m: m.describe_batch(ii, xs, ys, sc, np.zeros(len(xs)), False, 1e-9),
        "smo_solve": lambda m: m.smo_solve(Q, y, 1.0, 1e-3, 100000, False),
        "best_split": lambda m: m.best_split(Xt, yt, 10, 1),
    }


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return a.shape == b.shape and np.allclose(a, b, rtol=1e-12, atol=1e-12)
    if isinstance(a, float):
        return a == b or abs(a - b) <= 1e-12 * max(1.0, abs(a))
    return a == b or a is None


def _best_time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    impls = _backend.implementations()
    if "compiled" not in impls:
        print("compiled kernels are not built; only the fallback can be timed")
    print(f"active backend: {_backend.NAME}")
    print(f"{'kernel':28s} {'python ms':>10s} {'compiled ms':>12s} {'speed-up':>9s}  match")
    for name, call in _inputs().items():
        times = {k: _best_time(lambda m=m: call(m), args.repeat) * 1e3 for k, m in impls.items()}
        if "compiled" in impls:
            match = _same(call(impls["python"]), call(impls["compiled"]))
            print(f"{name:28s} {times['python']:10.3f} {times['compiled']:12.3f} "
                  f"{times['python'] / times['compiled']:8.1f}x  {'yes' if match else 'NO'}")
        else:
            print(f"{name:28s} {times['python']:10.3f} {'-':>12s} {'-':>9s}  -")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
