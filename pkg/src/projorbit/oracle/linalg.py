"""Numerical linear algebra shared by the oracle.

All rank decisions and residual thresholds live here.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

import numpy as np
from scipy.linalg import subspace_angles

# Rank decisions: singular values below RANK_RTOL * s_max count as zero.
RANK_RTOL = 1e-7
# Residual assertions, after normalizing matrix scale.
RESIDUAL_ATOL = 1e-9
# Principal angles between subspaces that should coincide.
ANGLE_TOL = 1e-7
# Eigenvalues closer than this are treated as one level.
EIG_CLUSTER_TOL = 1e-6


def numerical_rank(m: np.ndarray, rtol: float = RANK_RTOL) -> int:
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def null_space(m: np.ndarray, rtol: float = RANK_RTOL) -> np.ndarray:
    """Orthonormal basis (columns) of the right null space."""
    n = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(n, dtype=m.dtype)
    _, s, vh = np.linalg.svd(m, full_matrices=m.shape[0] < n)
    if s.size == 0 or s[0] == 0.0:
        return np.eye(n, dtype=m.dtype)
    r = int(np.sum(s > rtol * s[0]))
    return vh[r:].conj().T


def joint_kernel(mats: Sequence[np.ndarray]) -> np.ndarray:
    """Orthonormal basis of the common null space of ``mats``."""
    if len(mats) == 0:
        raise ValueError("joint_kernel needs at least one matrix")
    shapes = {m.shape for m in mats}
    if len(shapes) != 1:
        raise ValueError(f"matrices have different shapes: {sorted(shapes)}")
    return null_space(np.vstack(list(mats)))


def orth(vectors: np.ndarray) -> np.ndarray:
    if vectors.shape[1] == 0:
        return vectors
    u, s, _ = np.linalg.svd(vectors, full_matrices=False)
    r = int(np.sum(s > RANK_RTOL * s[0])) if s.size and s[0] > 0 else 0
    return u[:, :r]


def max_principal_angle(a: np.ndarray, b: np.ndarray) -> float:
    if a.shape[1] != b.shape[1]:
        return float(np.pi / 2)
    if a.shape[1] == 0:
        return 0.0
    return float(np.max(subspace_angles(a, b)))


def eigen_levels(m: np.ndarray) -> Tuple[List[float], Dict[float, np.ndarray], float]:
    """Cluster the spectrum of a diagonalizable matrix with real eigenvalues.

    Returns sorted levels (descending), spectral projectors per level and the
    largest imaginary part seen (a realness diagnostic).
    """
    vals, vecs = np.linalg.eig(m)
    imag = float(np.max(np.abs(vals.imag))) if vals.size else 0.0
    vals = vals.real
    order = np.argsort(-vals)
    levels: List[float] = []
    groups: List[List[int]] = []
    for i in order:
        if levels and abs(vals[i] - levels[-1]) < EIG_CLUSTER_TOL:
            groups[-1].append(i)
        else:
            levels.append(float(vals[i]))
            groups.append([i])
    levels = [float(np.mean(vals[g])) for g in groups]
    inv = np.linalg.inv(vecs)
    proj = {}
    for lev, g in zip(levels, groups):
        p = vecs[:, g] @ inv[g, :]
        proj[lev] = p.real if np.isrealobj(m) else p
    return levels, proj, imag


def realify(m: np.ndarray) -> np.ndarray:
    """Complex n x n -> real 2n x 2n acting on (Re, Im)."""
    a, b = m.real, m.imag
    return np.block([[a, -b], [b, a]])
