"""Parabolic Z-gradings attached to sets of crossed simple roots.

The grading element is the sum of the fundamental coweights of the crossed
nodes, so its eigenvalue on a weight is the sum of that weight's simple-root
coordinates over the crossed nodes.  Module levels are kept as exact
fractions; only their differences are integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .rootsystem import (
    RootSystem,
    Weight,
    build_root_system,
    connected_blocks,
    sub_root_system,
    weight_array,
    weight_multiplicities,
    weyl_dim,
)
from .satake import DecoratedSatakeDiagram, SatakeDiagram, is_compact, is_split


class GradingError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ZGrading:
    root_system: RootSystem
    crossed: FrozenSet[int]  # 1-based

    def __post_init__(self) -> None:
        c = frozenset(int(i) for i in self.crossed)
        object.__setattr__(self, "crossed", c)
        if not c:
            raise GradingError("a non-trivial grading needs at least one crossed node")
        if not all(1 <= i <= self.root_system.rank for i in c):
            raise GradingError(f"crossed nodes {sorted(c)} out of range 1..{self.root_system.rank}")

    @property
    def depth(self) -> int:
        rs = self.root_system
        return max(sum(c[i - 1] for i in self.crossed) for c in rs.positive_roots_root_coords)

    def eigenvalue(self, mu: Sequence[int]) -> Fraction:
        return grading_element_eigenvalue(self, mu)

    @property
    def levi_nodes(self) -> List[int]:
        """0-based uncrossed nodes."""
        return [i for i in range(self.root_system.rank) if i + 1 not in self.crossed]


def _theta_vector(rs: RootSystem, crossed: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    den, inv = rs._inv_scaled
    cols = [i - 1 for i in crossed]
    return den, tuple(sum(inv[r][c] for c in cols) for r in range(rs.rank))


def grading_element_eigenvalue(g: ZGrading, mu: Sequence[int]) -> Fraction:
    den, vec = _theta_vector(g.root_system, g.crossed)
    return Fraction(sum(m * v for m, v in zip(mu, vec)), den)


@dataclass(frozen=True)
class EigenDecomposition:
    levels: Dict[Fraction, int]

    @property
    def theta_max(self) -> Fraction:
        return max(self.levels)

    @property
    def theta_min(self) -> Fraction:
        return min(self.levels)

    @property
    def top_dim(self) -> int:
        return self.levels[self.theta_max]

    @property
    def dim(self) -> int:
        return sum(self.levels.values())

    def report(self) -> List[Tuple[str, int]]:
        """Ordered (theta as exact fraction text, dimension), top level first."""
        return [(str(t), self.levels[t]) for t in sorted(self.levels, reverse=True)]


def _levels(rs: RootSystem, lam: Sequence[int], crossed: Iterable[int]) -> Dict[Fraction, int]:
    crossed = list(crossed)
    w, mult = weight_array(rs, lam)
    if not crossed:
        return {Fraction(0): int(mult.sum())}
    den, vec = _theta_vector(rs, crossed)
    theta = w @ np.array(vec, dtype=np.int64)
    keys, inv = np.unique(theta, return_inverse=True)
    dims = np.zeros(len(keys), dtype=np.int64)
    np.add.at(dims, inv.ravel(), mult)
    return {Fraction(int(k), den): int(d) for k, d in zip(keys, dims)}


def eigenspace_dims(rs: RootSystem, lam: Sequence[int], crossed: Iterable[int]) -> EigenDecomposition:
    g = ZGrading(rs, frozenset(crossed))
    return EigenDecomposition(_levels(rs, lam, g.crossed))


def _convolve(a: Dict[Fraction, int], b: Dict[Fraction, int]) -> Dict[Fraction, int]:
    out: Counter = Counter()
    for x, m in a.items():
        for y, n in b.items():
            out[x + y] += m * n
    return dict(out)


def diagram_eigenspace_dims(dd: DecoratedSatakeDiagram, crossed: Iterable[int]) -> EigenDecomposition:
    """Levels of the outer tensor product over the components of ``dd``.

    ``crossed`` uses global 1-based node indices; components without crossed
    nodes contribute their whole module at level 0.
    """
    crossed = set(crossed)
    if not crossed:
        raise GradingError("a non-trivial grading needs at least one crossed node")
    d = dd.diagram
    levels: Dict[Fraction, int] = {Fraction(0): 1}
    for c, off, w in zip(d.components, d.offsets, dd.component_weights()):
        local = [i - off for i in crossed if off < i <= off + c.rank]
        levels = _convolve(levels, _levels(build_root_system(c.type), w, local))
    return EigenDecomposition(levels)


def levi_dim(rs: RootSystem, lam: Sequence[int], crossed: Iterable[int]) -> int:
    """Weyl dimension of the Levi module: uncrossed subdiagram, restricted highest weight."""
    crossed = set(crossed)
    out = 1
    keep = [i for i in range(rs.rank) if i + 1 not in crossed]
    for block in connected_blocks(rs, keep):
        out *= weyl_dim(sub_root_system(rs, block), [lam[i] for i in block])
    return out


@dataclass(frozen=True)
class TopLevelCheck:
    ok: bool
    top_dim: int
    levi_dim: int
    theta_max: Fraction

    def __bool__(self) -> bool:
        return self.ok


def top_level_check(rs: RootSystem, lam: Sequence[int], crossed: Iterable[int]) -> TopLevelCheck:
    crossed = frozenset(crossed)
    ed = eigenspace_dims(rs, lam, crossed)
    ld = levi_dim(rs, lam, crossed)
    return TopLevelCheck(ed.top_dim == ld, ed.top_dim, ld, ed.theta_max)


def diagram_top_level_check(dd: DecoratedSatakeDiagram, crossed: Iterable[int]) -> TopLevelCheck:
    """Componentwise version for direct sums (global 1-based ``crossed``)."""
    crossed = set(crossed)
    ed = diagram_eigenspace_dims(dd, crossed)
    d = dd.diagram
    ld = 1
    for c, off, w in zip(d.components, d.offsets, dd.component_weights()):
        local = [i - off for i in crossed if off < i <= off + c.rank]
        ld *= levi_dim(build_root_system(c.type), w, local)
    return TopLevelCheck(ed.top_dim == ld, ed.top_dim, ld, ed.theta_max)


def minimal_parabolic_crossing(d: SatakeDiagram) -> FrozenSet[int]:
    """All white nodes (1-based) -- the minimal parabolic."""
    if is_compact(d):
        raise GradingError("compact real form has no proper parabolic subalgebra")
    return frozenset(i + 1 for i in d.white)


def split_minimal_orbit_dim(rs: RootSystem, lam: Sequence[int], diagram: SatakeDiagram) -> int:
    """Dimension of the projective orbit through the highest-weight line, split forms only."""
    if not is_split(diagram):
        raise GradingError("split_minimal_orbit_dim is only valid for split real forms (all-white diagram)")
    if diagram.n_nodes != rs.rank:
        raise GradingError("diagram and root system ranks differ")
    if not any(lam):
        raise GradingError("highest weight must be non-zero")
    return sum(1 for c in rs.positive_roots_root_coords if rs.coroot_pairing(lam, c) != 0)


def adjoint_level_zero_dim(rs: RootSystem, crossed: Iterable[int]) -> int:
    """rank + number of roots of the uncrossed subsystem."""
    crossed = set(crossed)
    levi = sum(1 for c in rs.positive_roots_root_coords if all(c[i - 1] == 0 for i in crossed))
    return rs.rank + 2 * levi


def top_level_weights(rs: RootSystem, lam: Sequence[int], crossed: Iterable[int]) -> Dict[Weight, int]:
    g = ZGrading(rs, frozenset(crossed))
    ws = weight_multiplicities(rs, lam)
    den, vec = _theta_vector(rs, g.crossed)
    vals = {mu: sum(a * b for a, b in zip(mu, vec)) for mu in ws.entries}
    top = max(vals.values())
    return {mu: ws.entries[mu] for mu, v in vals.items() if v == top}
