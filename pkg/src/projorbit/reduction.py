"""Reduce a decorated Satake diagram to its compact pair (K, W).

A white node is crossed when its coefficient is non-zero or when it touches a
maximal all-black connected subdiagram carrying a non-zero coefficient.
Deleting the crossed nodes leaves all-zero pieces (dropped) and all-black
pieces with some non-zero coefficient; the latter are the simple factors of
K and their coefficients are the highest weights of the factors of W.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import catalog
from .rootsystem import (
    SimpleType,
    build_root_system,
    combine_types,
    frobenius_schur,
    identify_type,
    weight_multiplicities,
    weyl_dim,
)
from .satake import (
    Component,
    DecoratedSatakeDiagram,
    DiagramError,
    SatakeDiagram,
    is_compact,
    validate_decorated,
)


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class KeptFactor:
    """One simple factor of K with the highest weight of its W factor.

    ``nodes`` lists the original 1-based node indices in the factor's own
    Bourbaki order, so ``weight[k]`` is the coefficient found at ``nodes[k]``.
    """

    type: SimpleType
    nodes: Tuple[int, ...]
    weight: Tuple[int, ...]

    @property
    def diagram(self) -> DecoratedSatakeDiagram:
        comp = Component(self.type, frozenset(range(1, self.type.rank + 1)))
        return DecoratedSatakeDiagram(SatakeDiagram((comp,)), self.weight)

    @property
    def fs_type(self) -> str:
        return frobenius_schur(build_root_system(self.type), self.weight)

    @property
    def dim_complex(self) -> int:
        return weyl_dim(build_root_system(self.type), self.weight)


@dataclass(frozen=True)
class DiscardedPiece:
    nodes: Tuple[int, ...]
    type: SimpleType


@dataclass(frozen=True)
class ReductionResult:
    source: DecoratedSatakeDiagram
    crossed: FrozenSet[int]
    kept: Tuple[KeptFactor, ...]
    discarded: Tuple[DiscardedPiece, ...]
    notice: Optional[str] = None

    @property
    def k_summary(self) -> List[Tuple[str, Tuple[int, ...]]]:
        return [(str(f.type), f.weight) for f in self.kept]

    @property
    def w_dim_complex(self) -> int:
        out = 1
        for f in self.kept:
            out *= f.dim_complex
        return out

    @property
    def w_type(self) -> str:
        return combine_types(f.fs_type for f in self.kept)

    @property
    def w_dim_real(self) -> int:
        return self.w_dim_complex * (1 if self.w_type == "real" else 2)

    @property
    def k_trivial(self) -> bool:
        return not self.kept

    def as_dict(self) -> dict:
        return {
            "crossed": sorted(self.crossed),
            "kept": [
                {"type": str(f.type), "nodes": list(f.nodes), "w": list(f.weight), "fs_type": f.fs_type}
                for f in self.kept
            ],
            "discarded": [{"type": str(p.type), "nodes": list(p.nodes)} for p in self.discarded],
            "k_summary": [[t, list(w)] for t, w in self.k_summary],
            "w_dim_complex": self.w_dim_complex,
            "w_dim_real": self.w_dim_real,
        }


@dataclass(frozen=True)
class UniquenessVerdict:
    verdict: str  # "unique" | "unknown"
    reason: str


def _black_blocks(d: SatakeDiagram) -> List[FrozenSet[int]]:
    """Maximal connected components of the black-induced subgraph (0-based)."""
    left = set(d.black)
    out = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        left.discard(start)
        while stack:
            i = stack.pop()
            for j in d.neighbors(i):
                if j in left:
                    left.discard(j)
                    comp.add(j)
                    stack.append(j)
        out.append(frozenset(comp))
    return out


def _crossed0(dd: DecoratedSatakeDiagram) -> FrozenSet[int]:
    d, w = dd.diagram, dd.coefficients
    live = [b for b in _black_blocks(d) if any(w[i] for i in b)]
    out = set()
    for i in d.white:
        if w[i]:
            out.add(i)
        elif any(j in b for b in live for j in d.neighbors(i)):
            out.add(i)
    return frozenset(out)


def cross_nodes(dd: DecoratedSatakeDiagram) -> FrozenSet[int]:
    """1-based indices of the nodes to cross."""
    return frozenset(i + 1 for i in _crossed0(dd))


def _pieces(d: SatakeDiagram, keep: Iterable[int]) -> List[List[int]]:
    left = set(keep)
    out = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        left.discard(start)
        while stack:
            i = stack.pop()
            for j in d.neighbors(i):
                if j in left:
                    left.discard(j)
                    comp.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def _identify(d: SatakeDiagram, nodes: Sequence[int]) -> Tuple[SimpleType, Tuple[int, ...]]:
    sub = [[d.cartan[i][j] for j in nodes] for i in nodes]
    t, order = identify_type(sub)
    return t, tuple(nodes[k] for k in order)


def _check(dd: DecoratedSatakeDiagram, allow_complex_type: bool) -> None:
    errors, _ = validate_decorated(dd, allow_complex_type=allow_complex_type)
    trivial = [e for e in errors if e.startswith("trivial decoration")]
    if trivial:
        raise ReductionError("trivial decoration: the module must be non-trivial (all coefficients are zero)")
    if errors:
        raise DiagramError("; ".join(errors))


def reduce(dd: DecoratedSatakeDiagram, allow_complex_type: bool = False) -> ReductionResult:
    _check(dd, allow_complex_type)
    d, w = dd.diagram, dd.coefficients
    notice = None
    if is_compact(d):
        crossed: FrozenSet[int] = frozenset()
        notice = "compact input: K = G and W = V (identity reduction)"
    else:
        crossed = _crossed0(dd)
    remaining = [i for i in range(d.n_nodes) if i not in crossed]
    kept, discarded = [], []
    for piece in _pieces(d, remaining):
        t, order = _identify(d, piece)
        if any(w[i] for i in piece):
            if not all(i in d.black for i in piece):
                raise AssertionError(f"kept piece {[i + 1 for i in piece]} is not fully black")
            kept.append(KeptFactor(t, tuple(i + 1 for i in order), tuple(w[i] for i in order)))
        else:
            discarded.append(DiscardedPiece(tuple(i + 1 for i in order), t))
    return ReductionResult(dd, frozenset(i + 1 for i in crossed), tuple(kept), tuple(discarded), notice)


def kept_diagram(r: ReductionResult) -> DecoratedSatakeDiagram:
    """The compact decorated diagram formed by the kept factors."""
    comps, coeffs = [], []
    for f in r.kept:
        comps.append(Component(f.type, frozenset(range(1, f.type.rank + 1))))
        coeffs.extend(f.weight)
    return DecoratedSatakeDiagram(SatakeDiagram(tuple(comps)), tuple(coeffs))


# -- uniqueness ---------------------------------------------------------------------


def _names(t: SimpleType, w: Tuple[int, ...]) -> List[Tuple[str, int, Tuple[int, ...]]]:
    """The factor under every low-rank coincidence of names."""
    out = [(t.family, t.rank, w)]
    if t.family == "A" and t.rank == 1:
        if w == (2,):
            out.append(("B", 1, (1,)))
        out.append(("C", 1, w))
    if t.family == "B" and t.rank == 2:
        out.append(("C", 2, (w[1], w[0])))
    if t.family == "C" and t.rank == 2:
        out.append(("B", 2, (w[1], w[0])))
    if t.family == "A" and t.rank == 3:
        out.append(("D", 3, (w[1], w[0], w[2])))
    return out


def _unit(k: int, n: int) -> Tuple[int, ...]:
    return tuple(int(i == k) for i in range(n))


def _single(t: SimpleType, w: Tuple[int, ...]) -> Optional[str]:
    for fam, n, v in _names(t, w):
        if fam in "BD" and v == _unit(0, n):
            return f"sphere-transitive pair (SO({2 * n + 1 if fam == 'B' else 2 * n}), standard)"
        if fam == "A" and v in (_unit(0, n), _unit(n - 1, n)):
            return f"sphere-transitive pair (SU({n + 1}), standard)"
        if fam == "C" and v == _unit(0, n):
            return f"sphere-transitive pair (Sp({n}), standard)"
        if fam == "B" and n == 3 and v == (0, 0, 1):
            return "sphere-transitive pair (Spin(7), spin)"
        if fam == "B" and n == 4 and v == (0, 0, 0, 1):
            return "sphere-transitive pair (Spin(9), spin)"
        if fam == "D" and n == 4 and v in ((0, 0, 1, 0), (0, 0, 0, 1)):
            return "sphere-transitive pair (Spin(8), half-spin = SO(8) standard up to triality)"
    return None


def _is_quaternionic_line(t: SimpleType, w: Tuple[int, ...]) -> Optional[int]:
    """Return n if (t, w) is (C_n, omega_1) under some name, else None."""
    for fam, n, v in _names(t, w):
        if fam == "C" and v == _unit(0, n):
            return n
    return None


def unique_closed_orbit(r: ReductionResult) -> UniquenessVerdict:
    if not r.kept:
        return UniquenessVerdict("unique", "K trivial")
    if len(r.kept) == 1:
        f = r.kept[0]
        reason = _single(f.type, f.weight)
        if reason:
            return UniquenessVerdict("unique", reason)
    if len(r.kept) == 2:
        a, b = r.kept
        for x, y in ((a, b), (b, a)):
            n = _is_quaternionic_line(x.type, x.weight)
            if n is not None and y.type == SimpleType("A", 1) and y.weight == (1,):
                return UniquenessVerdict("unique", f"sphere-transitive pair (Sp({n})Sp(1), standard)")
    return UniquenessVerdict("unknown", "(K, W) is not in the sphere-transitive catalog")


# -- families ------------------------------------------------------------------------


def _unit_w(n: int, *hot: Tuple[int, int]) -> List[int]:
    w = [0] * n
    for i, c in hot:
        w[i - 1] += c
    return w


def wedge_highest_weight(rs, standard: Sequence[int], k: int) -> Tuple[int, ...]:
    """Highest weight of the k-th exterior power of V(standard).

    Weights of V are ordered by a regular dominant functional; the top k sum
    to the highest weight of the summand generated by the top wedge vector.
    A tie across the cut means the wedge power is not generated by one line,
    and is rejected.
    """
    ws = weight_multiplicities(rs, standard)
    flat = []
    for mu, m in ws.entries.items():
        flat.extend([mu] * m)
    # strictly dominant functional rho^vee, ties broken by a second generic one
    n = rs.rank
    key = lambda mu: (sum(rs.to_root_coords(mu)), rs.to_root_coords(mu))
    flat.sort(key=key, reverse=True)
    if not 1 <= k <= len(flat):
        raise ReductionError(f"wedge power {k} out of range for a {len(flat)}-dimensional module")
    if k < len(flat) and key(flat[k - 1]) == key(flat[k]):
        raise ReductionError(f"wedge power {k} has no unique highest weight")
    tot = [0] * n
    for mu in flat[:k]:
        tot = [a + b for a, b in zip(tot, mu)]
    return tuple(tot)


def so_standard_weight(d: SatakeDiagram) -> Tuple[int, ...]:
    """Highest weight of the defining module of so(p,q) on its (single) Dynkin component."""
    t = d.components[0].type
    if t == SimpleType("A", 1):
        return (2,)
    if t == SimpleType("A", 3):
        return (0, 1, 0)
    if t.family in "BD":
        return _unit(0, t.rank)
    raise ReductionError(f"no standard so-module for {t}")


def so_wedge(p: int, q: int) -> DecoratedSatakeDiagram:
    """so(p,q) decorated by the (p+1)-th exterior power of its defining module."""
    if p + q in (4,):
        raise ReductionError("so(p,q) with p+q = 4 is not simple")
    d = catalog.so(p, q)
    rs = build_root_system(d.components[0].type)
    n = p + q
    k = p + 1
    if 2 * k > n:
        k = n - k  # Hodge duality
    if 2 * k == n:
        raise ReductionError(f"the {k}-th exterior power of R^{n} is reducible (self-dual and anti-self-dual parts)")
    lam = wedge_highest_weight(rs, so_standard_weight(d), k)
    return DecoratedSatakeDiagram(d, lam)


def _need(n: int, lo: int) -> None:
    if n < lo:
        raise ReductionError(f"parameter {n} out of range (needs >= {lo})")


def sp1_slH_torsion(n: int) -> DecoratedSatakeDiagram:
    _need(n, 2)
    d = catalog.real_form_diagram(f"sp(1)+sl({n},H)")
    r = 2 * n - 1
    return DecoratedSatakeDiagram(d, tuple([3] + _unit_w(r, (2, 1), (r, 1))))


def sp1_slH_curvature(n: int) -> DecoratedSatakeDiagram:
    _need(n, 2)
    d = catalog.real_form_diagram(f"sp(1)+sl({n},H)")
    r = 2 * n - 1
    return DecoratedSatakeDiagram(d, tuple([0] + _unit_w(r, (1, 3), (r, 1))))


def slR_adjoint(n: int) -> DecoratedSatakeDiagram:
    _need(n, 2)
    d = catalog.sl_R(n)
    return DecoratedSatakeDiagram(d, tuple(_unit_w(n - 1, (1, 1), (n - 1, 1))))


FAMILIES: Dict[str, Tuple[str, Callable[[int], DecoratedSatakeDiagram]]] = {
    "sp1-slH-torsion": ("sp(1)+sl(n,H), S^3H (x) L^2 H^n* . H^n  [n >= 2]", sp1_slH_torsion),
    "sp1-slH-curvature": ("sp(1)+sl(n,H), S^3 H^n* . H^n  [n >= 2]", sp1_slH_curvature),
    "so-p-p+3-wedge": ("so(p,p+3), exterior (p+1)-th power of R^(2p+3)  [p >= 1]", lambda p: so_wedge(p, p + 3)),
    "so-p-p+1-wedge": ("so(p,p+1) (split), exterior (p+1)-th power  [p >= 1]", lambda p: so_wedge(p, p + 1)),
    "slR-adjoint": ("sl(n,R), adjoint module  [n >= 2]", slR_adjoint),
}


@dataclass(frozen=True)
class FamilyReport:
    family: str
    results: Tuple[Tuple[int, ReductionResult], ...]

    @property
    def signatures(self) -> List[Tuple]:
        return [tuple(r.k_summary) for _, r in self.results]

    @property
    def stable(self) -> bool:
        return len(set(self.signatures)) <= 1


def family_reduce(family: str, params: Iterable[int]) -> FamilyReport:
    try:
        _, build = FAMILIES[family]
    except KeyError:
        raise ReductionError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}") from None
    out = []
    for n in sorted(set(params)):
        try:
            dd = build(n)
        except (DiagramError, ReductionError, ValueError) as exc:
            raise ReductionError(f"parameter {n} gives an invalid diagram: {exc}") from exc
        out.append((n, reduce(dd)))
    return FamilyReport(family, tuple(out))
