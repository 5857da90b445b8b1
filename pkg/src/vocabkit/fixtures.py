"""Deterministic word2vec-text fixture files for tests and demos.

Vectors are drawn as cluster centroid plus small noise so same-cluster
terms stay mutually more similar than cross-cluster terms. Identical
arguments always produce a byte-identical file.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np


def generate_fixture(out_path: str | Path, seed: int, n: int, dim: int,
                     clusters: int = 1) -> Path:
    """Write an n-term, dim-dimensional model file to `out_path`.

    Terms are named term_000 .. term_{n-1} and assigned round-robin to
    `clusters` cluster centroids.
    """
    if n < 1 or dim < 1 or clusters < 1:
        raise ValueError("n, dim, and clusters must be >= 1")
    if clusters > n:
        raise ValueError("clusters must not exceed n")

    rng = np.random.default_rng(seed)
    centroids = rng.normal(size=(clusters, dim))
    centroids /= np.linalg.norm(centroids, axis=1, keepdims=True)
    noise_scale = 0.35 / np.sqrt(dim)

    out_path = Path(out_path)
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{n} {dim}\n")
        for i in range(n):
            vec = centroids[i % clusters] + noise_scale * rng.normal(size=dim)
            components = " ".join(f"{x:.6f}" for x in vec)
            fh.write(f"term_{i:03d} {components}\n")
    return out_path
