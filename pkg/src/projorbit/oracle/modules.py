"""Explicit modules over matrix Lie algebras and the usual functors on them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebras import MatrixLieAlgebra
from .linalg import RESIDUAL_ATOL, null_space, realify

MAX_MODULE_DIM = 10_000


class ModuleError(ValueError):
    pass


@dataclass
class MatrixModule:
    algebra: MatrixLieAlgebra
    action: List[np.ndarray]
    label: str = ""

    def __post_init__(self) -> None:
        if len(self.action) != self.algebra.dim:
            raise ModuleError("one action matrix per algebra basis element is required")
        if self.dim > MAX_MODULE_DIM:
            raise ModuleError(f"module dimension {self.dim} exceeds the guard {MAX_MODULE_DIM}")

    @property
    def dim(self) -> int:
        return self.action[0].shape[0]

    @property
    def is_complex(self) -> bool:
        return any(np.iscomplexobj(a) and np.any(np.abs(a.imag) > 0) for a in self.action)

    def rho(self, coef: Sequence[float]) -> np.ndarray:
        return sum(c * a for c, a in zip(coef, self.action))

    def homomorphism_residual(self) -> float:
        c = self.algebra.structure_constants
        n = self.algebra.dim
        scale = max(1.0, max(float(np.linalg.norm(a)) for a in self.action) ** 2)
        worst = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.rho(c[:, i, j])
                rhs = self.action[i] @ self.action[j] - self.action[j] @ self.action[i]
                worst = max(worst, float(np.linalg.norm(lhs - rhs)) / scale)
        return worst

    def check(self) -> bool:
        return self.homomorphism_residual() < RESIDUAL_ATOL


def standard(alg: MatrixLieAlgebra) -> MatrixModule:
    return MatrixModule(alg, [b.copy() for b in alg.basis], f"std({alg.name})")


def complex_standard(alg: MatrixLieAlgebra) -> MatrixModule:
    if alg.complex_basis is None:
        return MatrixModule(alg, [b.astype(complex) for b in alg.basis], f"std_C({alg.name})")
    return MatrixModule(alg, [b.copy() for b in alg.complex_basis], f"std_C({alg.name})")


def adjoint(alg: MatrixLieAlgebra) -> MatrixModule:
    c = alg.structure_constants
    return MatrixModule(alg, [c[:, i, :].copy() for i in range(alg.dim)], f"ad({alg.name})")


def dual(m: MatrixModule) -> MatrixModule:
    return MatrixModule(m.algebra, [-a.T for a in m.action], f"({m.label})*")


def tensor(a: MatrixModule, b: MatrixModule) -> MatrixModule:
    if a.algebra is not b.algebra:
        raise ModuleError("tensor needs two modules over the same algebra")
    if a.dim * b.dim > MAX_MODULE_DIM:
        raise ModuleError(f"tensor product dimension {a.dim * b.dim} exceeds the guard")
    ia, ib = np.eye(a.dim), np.eye(b.dim)
    return MatrixModule(a.algebra, [np.kron(x, ib) + np.kron(ia, y) for x, y in zip(a.action, b.action)], f"{a.label}(x){b.label}")


def outer_tensor(alg: MatrixLieAlgebra, a: MatrixModule, b: MatrixModule) -> MatrixModule:
    """Module over ``alg = a.algebra + b.algebra`` (as built by ``direct_sum``)."""
    if alg.dim != a.algebra.dim + b.algebra.dim:
        raise ModuleError("outer tensor needs the direct-sum algebra of the two factors")
    ia, ib = np.eye(a.dim), np.eye(b.dim)
    act = [np.kron(x, ib) for x in a.action] + [np.kron(ia, y) for y in b.action]
    return MatrixModule(alg, act, f"{a.label}[x]{b.label}")


def _wedge_matrix(x: np.ndarray, basis: List[Tuple[int, ...]], index: Dict[Tuple[int, ...], int]) -> np.ndarray:
    n = x.shape[0]
    out = np.zeros((len(basis), len(basis)), dtype=x.dtype)
    for col, s in enumerate(basis):
        for pos, i in enumerate(s):
            for l in range(n):
                v = x[l, i]
                if v == 0:
                    continue
                t = list(s)
                t[pos] = l
                if len(set(t)) < len(t):
                    continue
                # sort with sign
                perm = sorted(range(len(t)), key=lambda k: t[k])
                sign = _perm_sign(perm)
                out[index[tuple(sorted(t))], col] += sign * v
    return out


def _perm_sign(perm: Sequence[int]) -> int:
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def _sym_matrix(x: np.ndarray, basis: List[Tuple[int, ...]], index: Dict[Tuple[int, ...], int]) -> np.ndarray:
    n = x.shape[0]
    out = np.zeros((len(basis), len(basis)), dtype=x.dtype)
    for col, s in enumerate(basis):
        for pos, i in enumerate(s):
            for l in range(n):
                v = x[l, i]
                if v == 0:
                    continue
                t = list(s)
                t[pos] = l
                out[index[tuple(sorted(t))], col] += v
    return out


def wedge(m: MatrixModule, k: int) -> MatrixModule:
    if not 0 <= k <= m.dim:
        raise ModuleError(f"wedge power {k} out of range for dimension {m.dim}")
    if comb(m.dim, k) > MAX_MODULE_DIM:
        raise ModuleError(f"wedge power dimension {comb(m.dim, k)} exceeds the guard")
    basis = list(combinations(range(m.dim), k))
    index = {s: i for i, s in enumerate(basis)}
    return MatrixModule(m.algebra, [_wedge_matrix(a, basis, index) for a in m.action], f"L^{k}({m.label})")


def sym(m: MatrixModule, k: int) -> MatrixModule:
    if k < 0:
        raise ModuleError(f"symmetric power {k} is negative")
    size = comb(m.dim + k - 1, k)
    if size > MAX_MODULE_DIM:
        raise ModuleError(f"symmetric power dimension {size} exceeds the guard")
    basis = list(combinations_with_replacement(range(m.dim), k))
    index = {s: i for i, s in enumerate(basis)}
    return MatrixModule(m.algebra, [_sym_matrix(a, basis, index) for a in m.action], f"S^{k}({m.label})")


def functor(m: MatrixModule, op: str, k: int = 0, other: Optional[MatrixModule] = None) -> MatrixModule:
    """Dispatch ``op`` in {dual, tensor, wedge, sym}."""
    if op == "dual":
        return dual(m)
    if op == "tensor":
        if other is None:
            raise ModuleError("tensor needs a second module")
        return tensor(m, other)
    if op == "wedge":
        return wedge(m, k)
    if op == "sym":
        return sym(m, k)
    raise ModuleError(f"unknown functor {op!r}")


def realify_module(m: MatrixModule) -> MatrixModule:
    return MatrixModule(m.algebra, [realify(a.astype(complex)) for a in m.action], f"R({m.label})")


# -- real structures -------------------------------------------------------------------


def conjugate_intertwiner(m: MatrixModule) -> Optional[np.ndarray]:
    """Solve ``A conj(rho(X)) = rho(X) A`` for all basis X; None if no solution."""
    n = m.dim
    eye = np.eye(n)
    rows = [np.kron(a.conj().T, eye) - np.kron(eye, a) for a in m.action]
    ns = null_space(np.vstack(rows))
    if ns.shape[1] == 0:
        return None
    if ns.shape[1] > 1:
        raise ModuleError("module is reducible: intertwiner space has dimension > 1")
    return ns[:, 0].reshape(n, n, order="F")


def structure_type(m: MatrixModule) -> str:
    """real / quaternionic / complex, from the antilinear intertwiner."""
    a = conjugate_intertwiner(m)
    if a is None:
        return "complex"
    c = (a @ a.conj())[0, 0] / 1.0
    return "real" if c.real > 0 else "quaternionic"


def real_form(m: MatrixModule) -> MatrixModule:
    """Real submodule fixed by an antilinear involution commuting with the action."""
    a = conjugate_intertwiner(m)
    if a is None:
        raise ModuleError("module is of complex type; it has no real form")
    c = (a @ a.conj())
    scale = c[0, 0]
    if scale.real <= 0 or not np.allclose(c, scale * np.eye(m.dim), atol=1e-8):
        raise ModuleError("module is of quaternionic type; it has no real form")
    a = a / np.sqrt(scale.real)
    p, q = a.real, a.imag
    tau = np.block([[p, q], [q, -p]])
    basis = null_space(tau - np.eye(2 * m.dim))
    act = [basis.T @ realify(x.astype(complex)) @ basis for x in m.action]
    return MatrixModule(m.algebra, act, f"real({m.label})")


def invariant_form_symmetry(m: MatrixModule) -> str:
    """Symmetry of the invariant bilinear form: 'symmetric', 'antisymmetric' or 'none'.

    The linear system is set up for two generic elements (which generate a
    semisimple algebra); the solution is then checked against every basis element.
    """
    n = m.dim
    eye = np.eye(n)
    rng = np.random.default_rng(0)
    gens = [m.rho(rng.standard_normal(m.algebra.dim)) for _ in range(2)]
    # rho^T B + B rho = 0  <=>  (I kron rho^T + rho^T kron I) vec(B) = 0 (column-major)
    rows = [np.kron(eye, a.T) + np.kron(a.T, eye) for a in gens]
    ns = null_space(np.vstack(rows))
    if ns.shape[1] != 1:
        return "none"
    b = ns[:, 0].reshape(n, n, order="F")
    scale = np.abs(b).max()
    for a in m.action:
        if np.abs(a.T @ b + b @ a).max() > 1e-8 * scale * max(1.0, np.abs(a).max()):
            return "none"
    if np.allclose(b, b.T, atol=1e-8 * scale):
        return "symmetric"
    if np.allclose(b, -b.T, atol=1e-8 * scale):
        return "antisymmetric"
    return "none"
