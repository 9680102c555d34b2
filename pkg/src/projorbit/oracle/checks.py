"""Numerical checks on graded matrix modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.linalg import expm

from .linalg import (
    ANGLE_TOL,
    EIG_CLUSTER_TOL,
    RANK_RTOL,
    RESIDUAL_ATOL,
    eigen_levels,
    joint_kernel,
    max_principal_angle,
    numerical_rank,
    orth,
)
from .modules import MatrixModule


class OracleError(ValueError):
    pass


@dataclass
class GradedRealization:
    """A real module together with a grading element of its algebra.

    ``z_coords`` are the coordinates of Z in the algebra basis.
    """

    module: MatrixModule
    z_coords: np.ndarray
    _levels: Optional[tuple] = field(default=None, repr=False)
    _alg_levels: Optional[tuple] = field(default=None, repr=False)

    @classmethod
    def from_matrix(cls, module: MatrixModule, z: np.ndarray) -> "GradedRealization":
        alg = module.algebra
        coef = alg.coordinates(z)
        if np.linalg.norm(alg.element(coef) - z) > RESIDUAL_ATOL * max(1.0, np.linalg.norm(z)):
            raise OracleError("grading element is not in the algebra")
        return cls(module, coef)

    @property
    def z_matrix(self) -> np.ndarray:
        return self.module.rho(self.z_coords)

    @property
    def algebra_z(self) -> np.ndarray:
        return self.module.algebra.ad(self.z_coords)

    def module_levels(self):
        if self._levels is None:
            self._levels = eigen_levels(self.z_matrix)
        return self._levels

    def algebra_levels(self):
        if self._alg_levels is None:
            self._alg_levels = eigen_levels(self.algebra_z)
        return self._alg_levels

    def spectrum_report(self) -> Dict[str, object]:
        levels, proj, imag = self.module_levels()
        alevels, _, aimag = self.algebra_levels()
        dims = {round(l, 9): numerical_rank(proj[l]) for l in levels}
        return {
            "module_levels": dims,
            "module_imag": imag,
            "algebra_levels": [round(l, 9) for l in alevels],
            "algebra_imag": aimag,
            "algebra_integral": max((abs(l - round(l)) for l in alevels), default=0.0),
        }

    def graded_pieces(self) -> Dict[int, List[np.ndarray]]:
        """Algebra elements (as coordinate vectors) sorted by ad(Z) eigenvalue."""
        vals, vecs = np.linalg.eig(self.algebra_z)
        out: Dict[int, List[np.ndarray]] = {}
        for v, col in zip(vals, vecs.T):
            out.setdefault(int(round(v.real)), []).append(np.real_if_close(col))
        return out

    def positive_action(self) -> List[np.ndarray]:
        mats = []
        for i, cols in self.graded_pieces().items():
            if i > 0:
                mats.extend(np.real(self.module.rho(c)) for c in cols)
        return mats

    def top_space(self) -> np.ndarray:
        levels, proj, _ = self.module_levels()
        return orth(proj[levels[0]])

    def top_projector(self) -> np.ndarray:
        levels, proj, _ = self.module_levels()
        return proj[levels[0]]


def graded_action_check(g: GradedRealization) -> Dict[str, object]:
    """Verify that grade-i elements move level-theta vectors to level theta+i."""
    levels, proj, _ = g.module_levels()
    worst = 0.0
    for i, cols in g.graded_pieces().items():
        for c in cols:
            r = g.module.rho(c)
            rn = np.linalg.norm(r)
            if rn == 0:
                continue
            for th in levels:
                vs = orth(proj[th])
                target = th + i
                match = [l for l in levels if abs(l - target) < EIG_CLUSTER_TOL]
                image = r @ vs
                if match:
                    image = image - proj[match[0]] @ image
                worst = max(worst, float(np.linalg.norm(image)) / rn)
    return {"max_residual": worst, "pass": worst < RESIDUAL_ATOL}


def kernel_vs_top(g: GradedRealization) -> Dict[str, object]:
    ker = joint_kernel(g.positive_action())
    top = g.top_space()
    ang = max_principal_angle(ker, top)
    return {
        "kernel_dim": int(ker.shape[1]),
        "top_dim": int(top.shape[1]),
        "max_angle": ang,
        "pass": ker.shape[1] == top.shape[1] and ang < ANGLE_TOL,
    }


@dataclass
class FlowReport:
    ok: bool
    precondition: bool
    distances: List[float]
    monotone: bool
    message: str = ""


def flow_to_top(g: GradedRealization, v: np.ndarray, steps: int = 60, tol: float = ANGLE_TOL) -> FlowReport:
    """Track the line through exp(m Z) v, m = 0..steps, against the top component of v."""
    v = np.asarray(v, dtype=float)
    levels, proj, _ = g.module_levels()
    top = proj[levels[0]] @ v
    if np.linalg.norm(top) <= 1e-9 * np.linalg.norm(v):
        return FlowReport(False, False, [], False, "precondition violated: v has no component in the top eigenspace")
    u = top / np.linalg.norm(top)
    shifted = g.z_matrix - levels[0] * np.eye(g.module.dim)
    step = expm(shifted)
    w = v.copy()
    dists = []
    for m in range(steps + 1):
        if m:
            w = step @ w
            w = w / np.linalg.norm(w)
        perp = w - np.dot(w, u) * u
        dists.append(float(np.linalg.norm(perp) / np.linalg.norm(w)))
    monotone = all(b <= a + 1e-12 for a, b in zip(dists, dists[1:]))
    ok = monotone and dists[-1] < tol
    return FlowReport(ok, True, dists, monotone)


def projective_stab_dim(m: MatrixModule, v: np.ndarray) -> int:
    """dim{X : rho(X) v in span(v)}."""
    v = np.asarray(v, dtype=float)
    nv = np.linalg.norm(v)
    if nv == 0:
        raise OracleError("projective stabilizer of the zero vector is undefined")
    u = v / nv
    cols = np.array([a @ u for a in m.action]).T
    cols = cols - np.outer(u, u @ cols)
    return m.algebra.dim - numerical_rank(cols, RANK_RTOL)


def projective_orbit_dim(m: MatrixModule, v: np.ndarray) -> int:
    return m.algebra.dim - projective_stab_dim(m, v)
