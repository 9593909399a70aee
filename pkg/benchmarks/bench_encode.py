"""Throughput of the sparse binary encoder: compiled core vs Python fallback vs dense matmul.

    python benchmarks/bench_encode.py [--batches 256 1024 4096] [--repeat 20]

Prints images/second for y = Phi x with Phi of shape [m, 784] holding d ones per row.
"""
from __future__ import annotations

import argparse
import time

import numpy as np
import torch

from glocal import kernels


def random_indices(m, n, d, seed=0):
    g = np.random.default_rng(seed)
    return np.sort(np.stack([g.choice(n, d, replace=False) for _ in range(m)]), axis=1).astype(np.int32)


def dense_from(idx, n):
    phi = np.zeros((idx.shape[0], n), dtype=np.float32)
    np.put_along_axis(phi, idx.astype(np.int64), 1.0, axis=1)
    return phi


def best_rate(fn, batch, repeat):
    fn()  # warm-up
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return batch / best


def measure(batch, m=78, n=784, d=32, repeat=20, python=True, seed=0):
    idx = random_indices(m, n, d, seed)
    phi = dense_from(idx, n)
    x = np.random.default_rng(seed + 1).random((batch, n), dtype=np.float32)
    xt, phit = torch.from_numpy(x), torch.from_numpy(phi)
    rates = {}
    if kernels.BACKEND == "cython":
        rates["sparse_compiled"] = best_rate(lambda: kernels.sparse_encode(x, idx, "cython"), batch, repeat)
    if python:
        rates["sparse_python"] = best_rate(lambda: kernels.sparse_encode(x, idx, "python"), batch, max(3, repeat // 5))
    rates["dense_numpy"] = best_rate(lambda: kernels.dense_encode(x, phi), batch, repeat)
    rates["dense_torch"] = best_rate(lambda: xt @ phit.T, batch, repeat)
    return rates


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--batches", nargs="+", type=int, default=[256, 1024, 4096, 16384])
    p.add_argument("--repeat", type=int, default=20)
    p.add_argument("-m", type=int, default=78)
    p.add_argument("-d", type=int, default=32)
    args = p.parse_args(argv)
    torch.set_num_threads(1)
    print(f"backend={kernels.BACKEND} m={args.m} d={args.d} (images/s, best of {args.repeat})")
    cols = ["sparse_compiled", "sparse_python", "dense_numpy", "dense_torch"]
    print(f"{'batch':>7} " + " ".join(f"{c:>16}" for c in cols) + f" {'speedup':>8}")
    for b in args.batches:
        r = measure(b, m=args.m, d=args.d, repeat=args.repeat)
        fast = r.get("sparse_compiled", r["sparse_python"])
        dense = max(r["dense_numpy"], r["dense_torch"])
        print(f"{b:>7} " + " ".join(f"{r.get(c, float('nan')):>16,.0f}" for c in cols) + f" {fast / dense:>7.1f}x")


if __name__ == "__main__":
    main()
