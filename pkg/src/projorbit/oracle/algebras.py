"""Explicit matrix models of small real Lie algebras.

Each builder returns the algebra in its defining real representation
together with the coweight data needed to write down grading elements.
Orthogonal and symplectic algebras use a Witt basis (null pairs ``e_i, f_i``
followed by an anisotropic block), so grading elements are diagonal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence

import numpy as np

from .linalg import RESIDUAL_ATOL, null_space, numerical_rank, realify


class UnsupportedForm(ValueError):
    pass


@dataclass
class MatrixLieAlgebra:
    """A real Lie algebra given by a basis of matrices.

    ``basis`` holds real matrices.  ``complex_basis``, when present, is a
    complex representation with the same structure constants (used to build
    complex modules, e.g. C^4 for sl(2,H)).
    """

    name: str
    basis: List[np.ndarray]
    complex_basis: Optional[List[np.ndarray]] = None
    grading: Optional[Callable[[FrozenSet[int]], np.ndarray]] = None
    _structure: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.basis[0].shape[0]

    def _flat(self) -> np.ndarray:
        return np.array([b.ravel() for b in self.basis]).T

    def coordinates(self, x: np.ndarray) -> np.ndarray:
        """Coordinates of a matrix in the span of ``basis`` (least squares)."""
        coef, *_ = np.linalg.lstsq(self._flat(), x.ravel(), rcond=None)
        return coef

    def element(self, coef: Sequence[float]) -> np.ndarray:
        return sum(c * b for c, b in zip(coef, self.basis))

    @property
    def structure_constants(self) -> np.ndarray:
        """``C[k, i, j]`` with ``[X_i, X_j] = sum_k C[k, i, j] X_k``."""
        if self._structure is None:
            n = self.dim
            flat = self._flat()
            pinv = np.linalg.pinv(flat)
            c = np.zeros((n, n, n))
            for i in range(n):
                for j in range(n):
                    br = self.basis[i] @ self.basis[j] - self.basis[j] @ self.basis[i]
                    c[:, i, j] = pinv @ br.ravel()
            self._structure = c
        return self._structure

    def ad(self, coef: Sequence[float]) -> np.ndarray:
        """Matrix of ad(X) in the basis, for X with the given coordinates."""
        return np.einsum("kij,i->kj", self.structure_constants, np.asarray(coef, dtype=float))

    def structure_report(self) -> Dict[str, float]:
        n = self.dim
        scale = max(np.linalg.norm(b) for b in self.basis) ** 2
        c = self.structure_constants
        closure = 0.0
        for i in range(n):
            for j in range(n):
                br = self.basis[i] @ self.basis[j] - self.basis[j] @ self.basis[i]
                closure = max(closure, float(np.linalg.norm(br - self.element(c[:, i, j]))) / scale)
        # Jacobi on structure constants: sum_cyc [[X_i, X_j], X_k] = 0
        t = np.einsum("mij,lmk->lijk", c, c)
        jac = t + np.transpose(t, (0, 2, 3, 1)) + np.transpose(t, (0, 3, 1, 2))
        cscale = max(1.0, float(np.max(np.abs(c))) ** 2)
        return {
            "rank": numerical_rank(self._flat()),
            "dim": n,
            "closure_residual": closure,
            "jacobi_residual": float(np.max(np.abs(jac))) / cscale if n else 0.0,
        }

    def check(self) -> bool:
        r = self.structure_report()
        return r["rank"] == r["dim"] and r["closure_residual"] < RESIDUAL_ATOL and r["jacobi_residual"] < RESIDUAL_ATOL


def _unit(n: int, i: int, j: int, dtype=float) -> np.ndarray:
    m = np.zeros((n, n), dtype=dtype)
    m[i, j] = 1
    return m


# -- builders ------------------------------------------------------------------------


def sl_R(n: int) -> MatrixLieAlgebra:
    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                basis.append(_unit(n, i, j))
    for i in range(n - 1):
        basis.append(_unit(n, i, i) - _unit(n, i + 1, i + 1))

    def grading(crossed: FrozenSet[int]) -> np.ndarray:
        z = np.zeros(n)
        for k in crossed:  # omega_k^vee = diag((n-k)/n x k, -k/n x (n-k))
            z += np.array([(n - k) / n] * k + [-k / n] * (n - k))
        return np.diag(z)

    return MatrixLieAlgebra(f"sl({n},R)", basis, grading=grading)


def _witt_form(p: int, q: int) -> np.ndarray:
    """Symmetric form of signature (p, q), p <= q, on e_1..e_p, f_1..f_p, x_1..x_{q-p}."""
    n = p + q
    j = np.zeros((n, n))
    for i in range(p):
        j[i, p + i] = j[p + i, i] = 1.0
    for i in range(2 * p, n):
        j[i, i] = -1.0
    return j


def _diag_witt(a: Sequence[float], p: int, n: int) -> np.ndarray:
    z = np.zeros(n)
    z[:p] = a
    z[p:2 * p] = -np.asarray(a)
    return np.diag(z)


def so_pq(p: int, q: int) -> MatrixLieAlgebra:
    p, q = sorted((p, q))
    n = p + q
    if n < 3:
        raise UnsupportedForm("so(p,q) needs p+q >= 3")
    j = _witt_form(p, q)
    jinv = np.linalg.inv(j)
    basis = []
    for a in range(n):
        for b in range(a + 1, n):
            basis.append(jinv @ (_unit(n, a, b) - _unit(n, b, a)))

    r = n // 2

    def coweight(k: int) -> np.ndarray:
        # fundamental coweight of node k in epsilon coordinates (length r)
        v = np.zeros(r)
        if n == 3:  # so(1,2) = A1; node 1 <-> epsilon_1
            v[0] = 1.0
            return v
        if n % 2 == 0 and k >= r - 1:
            v[: r - 1] = 0.5
            v[r - 1] = 0.5 if k == r else -0.5
            return v
        v[:k] = 1.0
        return v

    def grading(crossed: FrozenSet[int]) -> np.ndarray:
        a = np.zeros(r)
        for k in crossed:
            a += coweight(k)
        if np.any(np.abs(a[p:]) > 0):
            raise UnsupportedForm("grading element leaves the split torus of the Witt basis")
        return _diag_witt(a[:p], p, n)

    return MatrixLieAlgebra(f"so({p},{q})", basis, grading=grading)


def sp_R(n2: int) -> MatrixLieAlgebra:
    if n2 % 2:
        raise UnsupportedForm("sp(2n,R) needs an even size")
    n = n2 // 2
    j = np.zeros((n2, n2))
    j[:n, n:] = np.eye(n)
    j[n:, :n] = -np.eye(n)
    jinv = np.linalg.inv(j)
    basis = []
    for a in range(n2):
        for b in range(a, n2):
            s = _unit(n2, a, b) + _unit(n2, b, a)
            basis.append(jinv @ s)

    def grading(crossed: FrozenSet[int]) -> np.ndarray:
        a = np.zeros(n)
        for k in crossed:
            a[:k] += 0.5 if k == n else 1.0
        return _diag_witt(a, n, n2)

    return MatrixLieAlgebra(f"sp({n2},R)", basis, grading=grading)


def su_pq(p: int, q: int) -> MatrixLieAlgebra:
    """su(p,q) as real matrices (realification of the complex defining representation)."""
    p, q = sorted((p, q))
    n = p + q
    herm = _witt_form(p, q).astype(complex)
    # unknowns: Re X, Im X (2 n^2 reals); constraints: X^dag J + J X = 0, tr X = 0
    rows = []
    for a in range(n):
        for b in range(n):
            e = _unit(n, a, b, complex)
            for unit in (1.0, 1j):
                x = unit * e
                c = x.conj().T @ herm + herm @ x
                rows.append(np.concatenate([c.real.ravel(), c.imag.ravel(), [np.trace(x).real, np.trace(x).imag]]))
    m = np.array(rows).T
    ns = null_space(m)
    cbasis = []
    for v in ns.T:
        x = np.zeros((n, n), dtype=complex)
        for idx, (a, b) in enumerate((a, b) for a in range(n) for b in range(n)):
            x[a, b] = v[2 * idx] + 1j * v[2 * idx + 1]
        cbasis.append(x)

    def grading(crossed: FrozenSet[int]) -> np.ndarray:
        # arrow pair {k, n-k} contributes epsilon_1 + ... + epsilon_k; a self-paired
        # middle node (p = q) contributes half of that
        a = np.zeros(p)
        for k in crossed:
            if k != n - k and (n - k) not in crossed:
                raise UnsupportedForm("crossed set of su(p,q) must be arrow-symmetric")
            kk = min(k, n - k)
            if kk > p:
                raise UnsupportedForm(f"node {k} of su({p},{q}) is black")
            a[:kk] += 0.5
        z = np.zeros(n, dtype=complex)
        z[:p] = a
        z[p:2 * p] = -a
        return realify(np.diag(z))

    return MatrixLieAlgebra(f"su({p},{q})", [realify(x) for x in cbasis], complex_basis=cbasis, grading=grading)


def _quaternion_units() -> List[np.ndarray]:
    one = np.eye(2, dtype=complex)
    i = np.array([[1j, 0], [0, -1j]])
    j = np.array([[0, 1], [-1, 0]], dtype=complex)
    k = i @ j
    return [one, i, j, k]


def sl_H(n: int) -> MatrixLieAlgebra:
    """sl(n,H) on H^n = C^{2n}; real basis is the realification (4n x 4n)."""
    units = _quaternion_units()
    cbasis = []
    for a in range(n):
        for b in range(n):
            for u_idx, u in enumerate(units):
                if a == b and u_idx == 0:
                    continue
                m = np.zeros((2 * n, 2 * n), dtype=complex)
                m[2 * a:2 * a + 2, 2 * b:2 * b + 2] = u
                cbasis.append(m)
    for a in range(n - 1):
        m = np.zeros((2 * n, 2 * n), dtype=complex)
        m[2 * a:2 * a + 2, 2 * a:2 * a + 2] = np.eye(2)
        m[2 * a + 2:2 * a + 4, 2 * a + 2:2 * a + 4] = -np.eye(2)
        cbasis.append(m)

    def grading(crossed: FrozenSet[int]) -> np.ndarray:
        # white node 2k of A_{2n-1}: coweight diag((n-k)/n x 2k, -k/n x 2(n-k)) on C^{2n}
        z = np.zeros(2 * n)
        for node in crossed:
            if node % 2:
                raise UnsupportedForm("only white (even) nodes of sl(n,H) can be crossed")
            k = node // 2
            z += np.array([(n - k) / n] * (2 * k) + [-k / n] * (2 * (n - k)))
        return realify(np.diag(z).astype(complex))

    return MatrixLieAlgebra(f"sl({n},H)", [realify(x) for x in cbasis], complex_basis=cbasis, grading=grading)


def su2() -> MatrixLieAlgebra:
    """Compact su(2) = sp(1)."""
    sig = [np.array([[0, 1], [1, 0]], dtype=complex), np.array([[0, -1j], [1j, 0]]), np.array([[1, 0], [0, -1]], dtype=complex)]
    cbasis = [1j * s / 2 for s in sig]

    def grading(crossed: FrozenSet[int]) -> np.ndarray:
        if crossed:
            raise UnsupportedForm("compact su(2) has no grading")
        return np.zeros((4, 4))

    return MatrixLieAlgebra("su(2)", [realify(x) for x in cbasis], complex_basis=cbasis, grading=grading)


def direct_sum(a: MatrixLieAlgebra, b: MatrixLieAlgebra) -> MatrixLieAlgebra:
    def block(x, y):
        out = np.zeros((x.shape[0] + y.shape[0],) * 2, dtype=np.result_type(x, y))
        out[: x.shape[0], : x.shape[0]] = x
        out[x.shape[0]:, x.shape[0]:] = y
        return out

    za, zb = np.zeros((a.size,) * 2), np.zeros((b.size,) * 2)
    basis = [block(x, zb) for x in a.basis] + [block(za, y) for y in b.basis]
    cb = None
    if a.complex_basis is not None and b.complex_basis is not None:
        ca = np.zeros(a.complex_basis[0].shape, complex)
        cz = np.zeros(b.complex_basis[0].shape, complex)
        cb = [block(x, cz) for x in a.complex_basis] + [block(ca, y) for y in b.complex_basis]
    ra = a.dim

    def grading(crossed: FrozenSet[int]) -> np.ndarray:
        # crossed nodes are given per summand as (summand index, node)
        ca = frozenset(k for s, k in crossed if s == 0)
        cbb = frozenset(k for s, k in crossed if s == 1)
        return block(a.grading(ca), b.grading(cbb))

    return MatrixLieAlgebra(f"{a.name}+{b.name}", basis, complex_basis=cb, grading=grading)


SUPPORTED = [
    "sl(2,R)", "sl(3,R)", "sl(4,R)",
    "so(1,2)", "so(1,3)", "so(2,2)", "so(1,4)", "so(2,3)", "so(1,5)", "so(2,4)", "so(3,3)", "so(2,5)",
    "sp(4,R)", "su(1,1)", "su(1,2)", "sl(2,H)", "su(2)", "su(2)+sl(2,H)",
]


def build_algebra(form: str) -> MatrixLieAlgebra:
    form = form.replace(" ", "")
    if form not in SUPPORTED:
        raise UnsupportedForm(f"oracle does not model {form!r}; supported: {', '.join(SUPPORTED)}")
    if form == "su(2)+sl(2,H)":
        return direct_sum(su2(), sl_H(2))
    if form == "su(2)":
        return su2()
    m = re.fullmatch(r"sl\((\d+),R\)", form)
    if m:
        return sl_R(int(m.group(1)))
    m = re.fullmatch(r"so\((\d+),(\d+)\)", form)
    if m:
        return so_pq(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"su\((\d+),(\d+)\)", form)
    if m:
        return su_pq(int(m.group(1)), int(m.group(2)))
    if form == "sp(4,R)":
        return sp_R(4)
    return sl_H(2)
