"""Exact root-system and highest-weight arithmetic for the simple types A-G.

Weights are integer tuples in the fundamental-weight basis.  Root-basis
coordinates are exact rationals obtained through the inverse Cartan matrix.
Nothing in this module touches floating point.

Conventions: ``cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (a_i, a_j) / (a_j, a_j)``
so row ``i`` of the Cartan matrix is the simple root ``alpha_i`` written in
fundamental weights, and row ``i`` of the inverse is ``omega_i`` written in
simple roots.  Node numbering is Bourbaki, 1-based in all user-facing text and
0-based in code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

Weight = Tuple[int, ...]

FAMILIES = "ABCDEFG"


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        f, n = self.family, self.rank
        if f not in FAMILIES:
            raise RootSystemError(f"unknown family {f!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": 6 <= n <= 8,
            "F": n == 4,
            "G": n == 2,
        }[f]
        if not ok:
            raise RootSystemError(f"invalid rank {n} for family {f}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise RootSystemError(f"cannot parse simple type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _chain(n: int, lengths: Sequence[int], links: Dict[Tuple[int, int], int]) -> List[List[int]]:
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = lengths[i]
    for (i, j), v in links.items():
        g[i][j] = g[j][i] = v
    return g


def gram_matrix(t: SimpleType) -> List[List[int]]:
    """Integer Gram matrix ``(alpha_i, alpha_j)`` of the simple roots (scaled)."""
    n = t.rank
    path = {(i, i + 1): -1 for i in range(n - 1)}
    if t.family == "A":
        return _chain(n, [2] * n, path)
    if t.family == "B":
        return _chain(n, [2] * (n - 1) + [1], path)
    if t.family == "C":
        links = dict(path)
        links[(n - 2, n - 1)] = -2
        return _chain(n, [2] * (n - 1) + [4], links)
    if t.family == "D":
        links = {(i, i + 1): -1 for i in range(n - 2)}
        links[(n - 3, n - 1)] = -1
        return _chain(n, [2] * n, links)
    if t.family == "E":
        links = {(0, 2): -1, (1, 3): -1, (2, 3): -1}
        links.update({(i, i + 1): -1 for i in range(3, n - 1)})
        return _chain(n, [2] * n, links)
    if t.family == "F":
        return _chain(4, [4, 4, 2, 2], {(0, 1): -2, (1, 2): -2, (2, 3): -1})
    return _chain(2, [2, 6], {(0, 1): -3})  # G2, alpha_1 short


def cartan_from_gram(gram: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    n = len(gram)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = Fraction(2 * gram[i][j], gram[j][j])
            if v.denominator != 1:
                raise RootSystemError("Gram matrix does not give an integral Cartan matrix")
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


def _inverse(mat: Sequence[Sequence[int]]) -> Tuple[Tuple[Fraction, ...], ...]:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def _det(mat: Sequence[Sequence[int]]) -> int:
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return int(det)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Root system of a (not necessarily simple) Cartan matrix.

    Built from an integer Gram matrix of simple roots, so Levi subsystems can
    be formed by taking principal submatrices.  ``type`` is set when the
    system came from :func:`build_root_system`.
    """

    gram: Tuple[Tuple[int, ...], ...]
    type: Optional[SimpleType] = None
    cartan: Tuple[Tuple[int, ...], ...] = field(init=False)
    inverse_cartan: Tuple[Tuple[Fraction, ...], ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gram", tuple(tuple(int(x) for x in r) for r in self.gram))
        object.__setattr__(self, "cartan", cartan_from_gram(self.gram))
        object.__setattr__(self, "inverse_cartan", _inverse(self.cartan))

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return _det(self.cartan)

    # -- coordinates ------------------------------------------------------
    @cached_property
    def _inv_scaled(self) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
        den = 1
        for row in self.inverse_cartan:
            for x in row:
                den = lcm(den, x.denominator)
        return den, tuple(tuple(int(x * den) for x in row) for row in self.inverse_cartan)

    def to_root_coords(self, mu: Sequence[int]) -> Tuple[Fraction, ...]:
        """Fundamental-weight coordinates -> simple-root coordinates (exact)."""
        den, inv = self._inv_scaled
        n = self.rank
        return tuple(Fraction(sum(mu[i] * inv[i][j] for i in range(n)), den) for j in range(n))

    def to_fundamental(self, c: Sequence[int | Fraction]) -> Tuple[int, ...]:
        n = self.rank
        out = []
        for j in range(n):
            v = sum(Fraction(c[i]) * self.cartan[i][j] for i in range(n))
            if v.denominator != 1:
                raise RootSystemError("root-lattice element is not integral in the weight lattice")
            out.append(int(v))
        return tuple(out)

    @cached_property
    def simple_roots(self) -> Tuple[Weight, ...]:
        return tuple(tuple(row) for row in self.cartan)

    # -- bilinear form ----------------------------------------------------
    @cached_property
    def _form(self) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
        # (mu, nu) = c_mu . diag(|a_j|^2/2) . m_nu, with c = m . inv(cartan)
        n = self.rank
        q = [[self.inverse_cartan[i][j] * Fraction(self.gram[j][j], 2) for j in range(n)] for i in range(n)]
        den = 1
        for row in q:
            for x in row:
                den = lcm(den, x.denominator)
        return den, tuple(tuple(int(x * den) for x in row) for row in q)

    def inner_scaled(self, mu: Sequence[int], nu: Sequence[int]) -> int:
        """``form_denominator * (mu, nu)``; always an integer."""
        _, q = self._form
        n = self.rank
        return sum(mu[i] * q[i][j] * nu[j] for i in range(n) for j in range(n) if q[i][j])

    @property
    def form_denominator(self) -> int:
        return self._form[0]

    def inner(self, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
        return Fraction(self.inner_scaled(mu, nu), self.form_denominator)

    # -- roots ------------------------------------------------------------
    def reflect(self, mu: Sequence[int], i: int) -> Weight:
        k = mu[i]
        a = self.cartan[i]
        return tuple(m - k * x for m, x in zip(mu, a))

    @cached_property
    def _roots(self) -> Tuple[Tuple[Tuple[int, ...], Weight], ...]:
        # reflection closure of the simple roots, tracked in root coordinates
        n = self.rank
        start = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(start)
        frontier = list(start)
        while frontier:
            nxt = []
            for c in frontier:
                fund = self.to_fundamental(c)
                for i in range(n):
                    k = fund[i]
                    if k == 0:
                        continue
                    r = tuple(x - (k if j == i else 0) for j, x in enumerate(c))
                    if r not in seen:
                        seen.add(r)
                        nxt.append(r)
            frontier = nxt
        pos = [c for c in seen if all(x >= 0 for x in c)]
        pos.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
        return tuple((c, self.to_fundamental(c)) for c in pos)

    @property
    def positive_roots(self) -> Tuple[Weight, ...]:
        """Positive roots in fundamental-weight coordinates, by increasing height."""
        return tuple(f for _, f in self._roots)

    @property
    def positive_roots_root_coords(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(c for c, _ in self._roots)

    @property
    def highest_root(self) -> Weight:
        return self.positive_roots[-1]

    def coroot_pairing(self, mu: Sequence[int], root_c: Sequence[int]) -> Fraction:
        """``<mu, alpha^vee>`` for the root with simple-root coordinates ``root_c``."""
        n = self.rank
        # alpha^vee = sum_j c_j |a_j|^2 / |alpha|^2 alpha_j^vee
        norm2 = sum(root_c[i] * root_c[j] * self.gram[i][j] for i in range(n) for j in range(n))
        return Fraction(sum(root_c[j] * self.gram[j][j] * mu[j] for j in range(n)), norm2)

    # -- Weyl group helpers -------------------------------------------------
    def dominant_conjugate(self, mu: Sequence[int]) -> Weight:
        mu = tuple(mu)
        while True:
            for i, k in enumerate(mu):
                if k < 0:
                    mu = self.reflect(mu, i)
                    break
            else:
                return mu

    def weyl_orbit_array(self, mu: Sequence[int]) -> np.ndarray:
        """Weyl orbit of ``mu`` as an integer array, one weight per row."""
        return self.orbits_array([self.dominant_conjugate(mu)], [0])[:, :-1]

    def orbits_array(self, dominant: Sequence[Sequence[int]], tags: Sequence[int]) -> np.ndarray:
        """Union of the Weyl orbits of distinct dominant weights.

        Each row is a weight followed by the tag of its dominant weight.  The
        walk reflects only where a coordinate is positive; every step raises
        the length of the coset representative by one, so layers never overlap
        (and distinct dominant weights have disjoint orbits).
        """
        n = self.rank
        cart = np.zeros((n, n + 1), dtype=np.int64)
        cart[:, :n] = self.cartan
        frontier = np.column_stack([np.array(dominant, dtype=np.int64).reshape(-1, n), np.asarray(tags, dtype=np.int64)])
        layers = [frontier]
        while len(frontier):
            nxt = []
            for i in range(n):
                f = frontier[frontier[:, i] > 0]
                if len(f):
                    nxt.append(f - np.outer(f[:, i], cart[i]))
            if not nxt:
                break
            frontier = _unique_rows(np.concatenate(nxt), n)
            layers.append(frontier)
        return np.concatenate(layers)

    def weyl_orbit(self, mu: Sequence[int]) -> List[Weight]:
        return sorted((tuple(int(x) for x in row) for row in self.weyl_orbit_array(mu)), reverse=True)

    def height_below(self, lam: Sequence[int], mu: Sequence[int]) -> Optional[int]:
        """Height of ``lam - mu`` if it is a non-negative integer root combination."""
        diff = [a - b for a, b in zip(lam, mu)]
        c = self.to_root_coords(diff)
        if any(x.denominator != 1 or x < 0 for x in c):
            return None
        return int(sum(c))


def _unique_rows(a: np.ndarray, n: int) -> np.ndarray:
    """Rows of ``a`` with distinct first ``n`` entries (packed into one integer key)."""
    m = int(np.abs(a[:, :n]).max()) if len(a) else 0
    base = 2 * m + 1
    if base ** n >= 2 ** 62:
        return np.unique(a, axis=0)
    key = np.zeros(len(a), dtype=np.int64)
    for i in range(n):
        key = key * base + (a[:, i] + m)
    _, idx = np.unique(key, return_index=True)
    return a[np.sort(idx)]


def build_root_system(t: SimpleType | str) -> RootSystem:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    return RootSystem(tuple(tuple(r) for r in gram_matrix(t)), type=t)


def sub_root_system(rs: RootSystem, nodes: Sequence[int]) -> RootSystem:
    """Levi subsystem on the given 0-based nodes (principal Gram submatrix)."""
    return RootSystem(tuple(tuple(rs.gram[i][j] for j in nodes) for i in nodes))


def _check_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    if len(lam) != rs.rank:
        raise RootSystemError(f"weight has {len(lam)} coordinates, rank is {rs.rank}")
    out = []
    for x in lam:
        if isinstance(x, Fraction) and x.denominator != 1:
            raise RootSystemError(f"weight {tuple(lam)} is not integral")
        if isinstance(x, float) and not x.is_integer():
            raise RootSystemError(f"weight {tuple(lam)} is not integral")
        if x < 0:
            raise RootSystemError(f"weight {tuple(lam)} is not dominant")
        out.append(int(x))
    return tuple(out)


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    lam = _check_dominant(rs, lam)
    rho = (1,) * rs.rank
    lr = tuple(a + 1 for a in lam)
    num = Fraction(1)
    for c in rs.positive_roots_root_coords:
        num *= rs.coroot_pairing(lr, c) / rs.coroot_pairing(rho, c)
    assert num.denominator == 1
    return int(num)


@dataclass(frozen=True)
class WeightSystem:
    highest: Weight
    entries: Dict[Weight, int]

    @property
    def dim(self) -> int:
        return sum(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)


def dominant_weights(rs: RootSystem, lam: Sequence[int]) -> List[Weight]:
    """Dominant weights of V(lam), ordered by height of ``lam - mu`` then lexicographically (descending)."""
    lam = tuple(lam)
    seen = {lam: 0}
    frontier = [lam]
    pos = rs.positive_roots
    while frontier:
        nxt = []
        for mu in frontier:
            for a in pos:
                nu = tuple(x - y for x, y in zip(mu, a))
                if min(nu) < 0 or nu in seen:
                    continue
                h = rs.height_below(lam, nu)
                if h is None:
                    continue
                seen[nu] = h
                nxt.append(nu)
        frontier = nxt
    return sorted(seen, key=lambda m: (seen[m], tuple(-x for x in m)))


def dominant_multiplicities(rs: RootSystem, lam: Sequence[int]) -> Dict[Weight, int]:
    """Freudenthal recursion restricted to dominant weights."""
    lam = _check_dominant(rs, lam)
    order = dominant_weights(rs, lam)
    known = set(order)
    n = rs.rank
    rho = (1,) * n
    lr = tuple(a + 1 for a in lam)
    top = rs.inner_scaled(lr, lr)
    mult: Dict[Weight, int] = {}
    dom: Dict[Weight, Weight] = {}
    pos = rs.positive_roots
    for mu in order:
        if mu == lam:
            mult[mu] = 1
            continue
        acc = 0
        for a in pos:
            nu = tuple(x + y for x, y in zip(mu, a))
            while True:
                d = dom.get(nu)
                if d is None:
                    d = dom[nu] = rs.dominant_conjugate(nu)
                if d not in known:
                    break
                acc += mult[d] * rs.inner_scaled(nu, a)
                nu = tuple(x + y for x, y in zip(nu, a))
        mr = tuple(x + 1 for x in mu)
        den = top - rs.inner_scaled(mr, mr)
        m, r = divmod(2 * acc, den)
        if r:
            raise ArithmeticError(f"non-integral Freudenthal multiplicity at {mu}")
        if m:
            mult[mu] = m
    return mult


def weight_array(rs: RootSystem, lam: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    """All weights of V(lam) as integer rows, with their multiplicities."""
    lam = _check_dominant(rs, lam)
    dom = dominant_multiplicities(rs, lam)
    keys = list(dom)
    rows = rs.orbits_array(keys, [dom[k] for k in keys])
    return rows[:, :-1], rows[:, -1]


def weight_multiplicities(rs: RootSystem, lam: Sequence[int]) -> WeightSystem:
    lam = _check_dominant(rs, lam)
    w, m = weight_array(rs, lam)
    return WeightSystem(lam, dict(zip(map(tuple, w.tolist()), m.tolist())))


def longest_element_action(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """``-w0(lam)`` via Weyl-group reflection: the dominant conjugate of ``-lam``."""
    return rs.dominant_conjugate(tuple(-x for x in lam))


def diagram_involution(t: SimpleType) -> Tuple[int, ...]:
    """Permutation of 0-based nodes induced by ``-w0``."""
    n = t.rank
    ident = tuple(range(n))
    if t.family == "A":
        return tuple(reversed(ident))
    if t.family == "D" and n % 2 == 1:
        return ident[:-2] + (n - 1, n - 2)
    if t.family == "E" and n == 6:
        return (5, 1, 4, 3, 2, 0)
    return ident


def dual_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = _check_dominant(rs, lam)
    if rs.type is None:
        return longest_element_action(rs, lam)
    perm = diagram_involution(rs.type)
    return tuple(lam[perm[i]] for i in range(rs.rank))


def two_rho_check_pairing(rs: RootSystem, lam: Sequence[int]) -> int:
    """``<lam, 2 rho^vee>`` = sum over positive coroots."""
    tot = sum(rs.coroot_pairing(lam, c) for c in rs.positive_roots_root_coords)
    assert tot.denominator == 1
    return int(tot)


def frobenius_schur(rs: RootSystem, lam: Sequence[int]) -> str:
    """Return ``'real'``, ``'complex'`` or ``'quaternionic'`` for the compact-form module V(lam)."""
    lam = _check_dominant(rs, lam)
    if dual_weight(rs, lam) != lam:
        return "complex"
    return "quaternionic" if two_rho_check_pairing(rs, lam) % 2 else "real"


def combine_types(types: Iterable[str]) -> str:
    """Frobenius-Schur type of an outer tensor product of irreducibles."""
    out = "real"
    for t in types:
        if t == "complex" or out == "complex":
            out = "complex"
        elif t == "quaternionic":
            out = "real" if out == "quaternionic" else "quaternionic"
    return out


def positive_root_count(t: SimpleType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[t.family]


def connected_blocks(rs: RootSystem, nodes: Iterable[int]) -> List[List[int]]:
    """Connected components of the Dynkin subgraph induced on ``nodes``."""
    nodes = sorted(set(nodes))
    left = set(nodes)
    out = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        left.discard(start)
        while stack:
            i = stack.pop()
            for j in list(left):
                if rs.gram[i][j] != 0:
                    left.discard(j)
                    comp.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


_CANDIDATES = {}


def identify_type(cartan: Sequence[Sequence[int]]) -> Tuple[SimpleType, Tuple[int, ...]]:
    """Identify a connected Cartan matrix.

    Returns the simple type and ``order`` with ``order[k]`` the row of
    ``cartan`` that plays Bourbaki node ``k + 1``.  B2 is preferred to C2 and
    A3 to D3.
    """
    n = len(cartan)
    for fam in FAMILIES:
        try:
            t = SimpleType(fam, n)
        except RootSystemError:
            continue
        if (fam == "C" and n == 2) or (fam == "D" and n == 3):
            continue
        ref = _CANDIDATES.get(t)
        if ref is None:
            ref = _CANDIDATES[t] = cartan_from_gram(gram_matrix(t))
        perm = _match(ref, cartan)
        if perm is not None:
            return t, perm
    raise RootSystemError("Cartan matrix is not of finite simple type")


def _match(ref, cartan) -> Optional[Tuple[int, ...]]:
    n = len(ref)
    used = [False] * n
    perm: List[int] = []

    def extend(k: int) -> bool:
        if k == n:
            return True
        for cand in range(n):
            if used[cand]:
                continue
            if all(ref[k][j] == cartan[cand][perm[j]] and ref[j][k] == cartan[perm[j]][cand] for j in range(k)):
                used[cand] = True
                perm.append(cand)
                if extend(k + 1):
                    return True
                perm.pop()
                used[cand] = False
        return False

    return tuple(perm) if extend(0) else None

