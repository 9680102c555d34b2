"""Satake diagrams, decorated by highest-weight coefficients.

Nodes are numbered globally (0-based in code, 1-based in reports) by
concatenating the Bourbaki numbering of the components in input order.

Text format, one block per simple component joined by ``+``::

    A3 black=[1,3] arrows=[] w=[0,1,1] + A1 black=[1] arrows=[] w=[3]

Arrow endpoints are local 1-based indices, or ``k.j`` for node ``j`` of
component ``k`` when an arrow crosses components.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import chain
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .rootsystem import SimpleType, cartan_from_gram, gram_matrix


class DiagramError(ValueError):
    """Invalid diagram or decoration."""


class DiagramSyntaxError(DiagramError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Component:
    type: SimpleType
    black: FrozenSet[int] = frozenset()  # 1-based local indices

    @property
    def rank(self) -> int:
        return self.type.rank


@dataclass(frozen=True)
class SatakeDiagram:
    components: Tuple[Component, ...]
    arrows: FrozenSet[Tuple[int, int]] = frozenset()  # global 0-based, a < b

    def __post_init__(self) -> None:
        norm = frozenset((min(a, b), max(a, b)) for a, b in self.arrows)
        object.__setattr__(self, "arrows", norm)

    # -- geometry --------------------------------------------------------------
    @cached_property
    def offsets(self) -> Tuple[int, ...]:
        out, k = [], 0
        for c in self.components:
            out.append(k)
            k += c.rank
        return tuple(out)

    @property
    def n_nodes(self) -> int:
        return sum(c.rank for c in self.components)

    def locate(self, node: int) -> Tuple[int, int]:
        """Global 0-based node -> (component index, local 0-based index)."""
        for ci in range(len(self.components) - 1, -1, -1):
            if node >= self.offsets[ci]:
                return ci, node - self.offsets[ci]
        raise IndexError(node)

    def label(self, node: int) -> str:
        ci, li = self.locate(node)
        return f"{ci + 1}.{li + 1}" if len(self.components) > 1 else str(li + 1)

    @cached_property
    def cartan(self) -> Tuple[Tuple[int, ...], ...]:
        n = self.n_nodes
        m = [[0] * n for _ in range(n)]
        for c, off in zip(self.components, self.offsets):
            cm = cartan_from_gram(gram_matrix(c.type))
            for i in range(c.rank):
                for j in range(c.rank):
                    m[off + i][off + j] = cm[i][j]
        return tuple(tuple(r) for r in m)

    @cached_property
    def gram(self) -> Tuple[Tuple[int, ...], ...]:
        n = self.n_nodes
        m = [[0] * n for _ in range(n)]
        for c, off in zip(self.components, self.offsets):
            g = gram_matrix(c.type)
            for i in range(c.rank):
                for j in range(c.rank):
                    m[off + i][off + j] = g[i][j]
        return tuple(tuple(r) for r in m)

    def neighbors(self, node: int) -> List[int]:
        row = self.cartan[node]
        return [j for j, v in enumerate(row) if j != node and v != 0]

    @cached_property
    def black(self) -> FrozenSet[int]:
        return frozenset(
            off + i - 1 for c, off in zip(self.components, self.offsets) for i in c.black
        )

    def is_black(self, node: int) -> bool:
        return node in self.black

    @cached_property
    def white(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.n_nodes) if i not in self.black)

    def partner(self, node: int) -> Optional[int]:
        for a, b in self.arrows:
            if a == node:
                return b
            if b == node:
                return a
        return None


@dataclass(frozen=True)
class DecoratedSatakeDiagram:
    diagram: SatakeDiagram
    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(x) for x in self.coefficients))
        if len(self.coefficients) != self.diagram.n_nodes:
            raise DiagramError(
                f"coefficient count ≠ rank (got {len(self.coefficients)}, rank {self.diagram.n_nodes})"
            )

    def component_weights(self) -> List[Tuple[int, ...]]:
        d = self.diagram
        return [self.coefficients[off:off + c.rank] for c, off in zip(d.components, d.offsets)]


# -- validation ------------------------------------------------------------------


def _automorphism_exists(d: SatakeDiagram, prescribed: Dict[int, int]) -> bool:
    """Search for a Cartan-matrix automorphism extending ``prescribed`` that maps black to black."""
    n = d.n_nodes
    cm = d.cartan
    perm: Dict[int, int] = dict(prescribed)
    free = [i for i in range(n) if i not in perm]
    targets = [i for i in range(n) if i not in set(perm.values())]

    def consistent(i: int) -> bool:
        pi = perm[i]
        for j, pj in perm.items():
            if cm[i][j] != cm[pi][pj] or cm[j][i] != cm[pj][pi]:
                return False
        return True

    if not all(consistent(i) for i in list(perm)):
        return False

    def extend(k: int) -> bool:
        if k == len(free):
            return True
        i = free[k]
        for t in targets:
            if t in perm.values() or (t in d.black) != (i in d.black):
                continue
            perm[i] = t
            if consistent(i) and extend(k + 1):
                return True
            del perm[i]
        return False

    return extend(0)


def validate(d: SatakeDiagram) -> List[str]:
    """Return the list of invariant violations (empty when valid)."""
    out: List[str] = []
    n = d.n_nodes
    for ci, c in enumerate(d.components):
        for i in sorted(c.black):
            if not 1 <= i <= c.rank:
                out.append(f"component {ci + 1} ({c.type}): black index {i} out of range")
    seen: Dict[int, int] = {}
    arrows_ok = True
    for a, b in sorted(d.arrows):
        if a == b:
            out.append(f"arrow not between distinct nodes ({d.label(a)},{d.label(a)})")
            arrows_ok = False
            continue
        if not (0 <= a < n and 0 <= b < n):
            out.append(f"arrow ({a + 1},{b + 1}) out of range")
            arrows_ok = False
            continue
        for x in (a, b):
            ci, _ = d.locate(x)
            comp = d.components[ci]
            if len(comp.black) == comp.rank:
                msg = f"arrows on black component {ci + 1} ({comp.type})"
                if msg not in out:
                    out.append(msg)
                arrows_ok = False
            elif x in d.black:
                out.append(f"arrow endpoint {d.label(x)} is black")
                arrows_ok = False
            if x in seen:
                out.append(f"node {d.label(x)} is in more than one arrow")
                arrows_ok = False
            seen[x] = 1
    if arrows_ok and not out:
        prescribed = {w: w for w in d.white}
        for a, b in d.arrows:
            prescribed[a], prescribed[b] = b, a
        if not _automorphism_exists(d, prescribed):
            out.append("arrow pairing is not induced by a diagram automorphism")
    return out


def validate_decorated(dd: DecoratedSatakeDiagram, allow_complex_type: bool = False) -> Tuple[List[str], List[str]]:
    """Return ``(violations, warnings)`` for a decorated diagram."""
    errors = validate(dd.diagram)
    warnings: List[str] = []
    w = dd.coefficients
    for i, x in enumerate(w):
        if x < 0:
            errors.append(f"negative coefficient {x} at node {dd.diagram.label(i)}")
    if not any(w):
        errors.append("trivial decoration: all coefficients are zero")
    for a, b in sorted(dd.diagram.arrows):
        if 0 <= a < len(w) and 0 <= b < len(w) and w[a] != w[b]:
            msg = (
                f"unequal coefficients on arrow pair ({dd.diagram.label(a)},{dd.diagram.label(b)}): "
                f"{w[a]} vs {w[b]} (complex-type module)"
            )
            (warnings if allow_complex_type else errors).append(msg)
    return errors, warnings


def is_compact(d: SatakeDiagram) -> bool:
    return len(d.black) == d.n_nodes and not d.arrows


def is_split(d: SatakeDiagram) -> bool:
    return not d.black and not d.arrows


def connected_components(d: SatakeDiagram) -> List[Tuple[SatakeDiagram, Tuple[int, ...]]]:
    """Split into simple components, keeping arrow-linked components together.

    Each entry carries the global 0-based node indices it came from.
    """
    k = len(d.components)
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in d.arrows:
        ca, cb = d.locate(a)[0], d.locate(b)[0]
        parent[find(ca)] = find(cb)
    groups: Dict[int, List[int]] = {}
    for ci in range(k):
        groups.setdefault(find(ci), []).append(ci)
    out = []
    for members in sorted(groups.values()):
        nodes = tuple(chain.from_iterable(range(d.offsets[ci], d.offsets[ci] + d.components[ci].rank) for ci in members))
        index = {g: i for i, g in enumerate(nodes)}
        sub = SatakeDiagram(
            tuple(d.components[ci] for ci in members),
            frozenset((index[a], index[b]) for a, b in d.arrows if a in index),
        )
        out.append((sub, nodes))
    return out


def direct_sum(*diagrams: SatakeDiagram) -> SatakeDiagram:
    comps: List[Component] = []
    arrows = set()
    off = 0
    for d in diagrams:
        comps.extend(d.components)
        arrows.update((a + off, b + off) for a, b in d.arrows)
        off += d.n_nodes
    return SatakeDiagram(tuple(comps), frozenset(arrows))


def decorate(d: SatakeDiagram, coefficients: Sequence[int]) -> DecoratedSatakeDiagram:
    return DecoratedSatakeDiagram(d, tuple(coefficients))


# -- text format ------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<type>[A-Ga-g]\d+)|(?P<key>black|arrows|w)\b|(?P<ref>\d+(?:\.\d+)?)"
    r"|(?P<punct>[\[\](),=+])"
)


def _tokenize(text: str) -> List[Tuple[str, str, int, int]]:
    toks = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DiagramSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        val = m.group()
        if kind == "ws":
            for k, ch in enumerate(val):
                if ch == "\n":
                    line += 1
                    line_start = pos + k + 1
        else:
            toks.append((kind, val, line, pos - line_start + 1))
        pos = m.end()
    toks.append(("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str, val: Optional[str] = None):
        t = self.toks[self.i]
        if t[0] != kind or (val is not None and t[1] != val):
            want = val or kind
            got = t[1] or "end of input"
            raise DiagramSyntaxError(f"expected {want!r}, got {got!r}", t[2], t[3])
        self.i += 1
        return t

    def intlist(self) -> List[int]:
        self.take("punct", "[")
        out = []
        if self.peek()[1] != "]":
            while True:
                t = self.take("ref")
                if "." in t[1]:
                    raise DiagramSyntaxError(f"expected integer, got {t[1]!r}", t[2], t[3])
                out.append(int(t[1]))
                if self.peek()[1] == ",":
                    self.take("punct", ",")
                    continue
                break
        self.take("punct", "]")
        return out

    def ref(self):
        t = self.take("ref")
        if "." in t[1]:
            a, b = t[1].split(".")
            return (int(a), int(b)), t
        return int(t[1]), t

    def arrowlist(self):
        self.take("punct", "[")
        out = []
        if self.peek()[1] != "]":
            while True:
                self.take("punct", "(")
                a = self.ref()
                self.take("punct", ",")
                b = self.ref()
                self.take("punct", ")")
                out.append((a, b))
                if self.peek()[1] == ",":
                    self.take("punct", ",")
                    continue
                break
        self.take("punct", "]")
        return out

    def component(self):
        t = self.take("type")
        try:
            st = SimpleType.parse(t[1])
        except ValueError as exc:
            raise DiagramSyntaxError(str(exc), t[2], t[3]) from None
        fields: Dict[str, object] = {}
        while self.peek()[0] == "key":
            k = self.take("key")
            if k[1] in fields:
                raise DiagramSyntaxError(f"duplicate field {k[1]!r}", k[2], k[3])
            self.take("punct", "=")
            fields[k[1]] = self.arrowlist() if k[1] == "arrows" else self.intlist()
        return st, fields, t

    def diagram(self):
        comps = [self.component()]
        while self.peek()[1] == "+":
            self.take("punct", "+")
            comps.append(self.component())
        self.take("eof")
        return comps


def _assemble(comps, need_w: bool) -> Tuple[SatakeDiagram, Optional[Tuple[int, ...]]]:
    offsets, k = [], 0
    for st, _, _ in comps:
        offsets.append(k)
        k += st.rank

    def resolve(ref, ci: int, tok) -> int:
        if isinstance(ref, tuple):
            cj, j = ref
            if not 1 <= cj <= len(comps):
                raise DiagramSyntaxError(f"arrow refers to missing component {cj}", tok[2], tok[3])
            ci, ref = cj - 1, j
        rank = comps[ci][0].rank
        if not 1 <= ref <= rank:
            raise DiagramSyntaxError(f"arrow endpoint {ref} out of range for {comps[ci][0]}", tok[2], tok[3])
        return offsets[ci] + ref - 1

    components, arrows, coeffs = [], set(), []
    have_w = [("w" in f) for _, f, _ in comps]
    if need_w and not all(have_w):
        t = comps[have_w.index(False)][2]
        raise DiagramSyntaxError("missing field 'w'", t[2], t[3])
    for ci, (st, f, tok) in enumerate(comps):
        components.append(Component(st, frozenset(f.get("black", []))))
        for (ra, ta), (rb, tb) in f.get("arrows", []):
            a, b = resolve(ra, ci, ta), resolve(rb, ci, tb)
            arrows.add((min(a, b), max(a, b)) if a != b else (a, b))
        if "w" in f:
            w = f["w"]
            if len(w) != st.rank:
                raise DiagramError(
                    f"component {ci + 1} ({st}): coefficient count ≠ rank (got {len(w)}, rank {st.rank})"
                )
            coeffs.extend(w)
    d = SatakeDiagram(tuple(components), frozenset(arrows))
    return d, (tuple(coeffs) if all(have_w) else None)


def parse(text: str) -> DecoratedSatakeDiagram:
    d, w = _assemble(_Parser(text).diagram(), need_w=True)
    return DecoratedSatakeDiagram(d, w)


def parse_diagram(text: str) -> SatakeDiagram:
    return _assemble(_Parser(text).diagram(), need_w=False)[0]


def _arrow_texts(d: SatakeDiagram) -> List[List[str]]:
    per: List[List[str]] = [[] for _ in d.components]
    for a, b in sorted(d.arrows):
        ca, la = d.locate(a)
        cb, lb = d.locate(b)
        other = str(lb + 1) if cb == ca else f"{cb + 1}.{lb + 1}"
        per[ca].append(f"({la + 1},{other})")
    return per


def serialize(x: DecoratedSatakeDiagram | SatakeDiagram) -> str:
    if isinstance(x, DecoratedSatakeDiagram):
        d, ws = x.diagram, x.component_weights()
    else:
        d, ws = x, None
    parts = []
    for ci, (c, arrows) in enumerate(zip(d.components, _arrow_texts(d))):
        s = f"{c.type} black=[{','.join(map(str, sorted(c.black)))}] arrows=[{','.join(arrows)}]"
        if ws is not None:
            s += f" w=[{','.join(map(str, ws[ci]))}]"
        parts.append(s)
    return " + ".join(parts)


# -- structured (JSON) form ---------------------------------------------------------


def to_json(x: DecoratedSatakeDiagram | SatakeDiagram) -> dict:
    if isinstance(x, DecoratedSatakeDiagram):
        d, ws = x.diagram, x.component_weights()
    else:
        d, ws = x, None
    comps = []
    for ci, c in enumerate(d.components):
        arrows = []
        for a, b in sorted(d.arrows):
            ca, la = d.locate(a)
            if ca != ci:
                continue
            cb, lb = d.locate(b)
            arrows.append([la + 1, lb + 1 if cb == ca else f"{cb + 1}.{lb + 1}"])
        entry = {"type": str(c.type), "black": sorted(c.black), "arrows": arrows}
        if ws is not None:
            entry["w"] = list(ws[ci])
        comps.append(entry)
    return {"components": comps}


def from_json(obj: dict | str) -> DecoratedSatakeDiagram | SatakeDiagram:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        raw = obj["components"]
    except (KeyError, TypeError):
        raise DiagramError("structured diagram needs a 'components' list") from None
    comps = []
    for entry in raw:
        st = SimpleType.parse(entry["type"])
        fields: Dict[str, object] = {"black": list(entry.get("black", []))}
        arrows = []
        for a, b in entry.get("arrows", []):
            arrows.append((_json_ref(a), _json_ref(b)))
        fields["arrows"] = arrows
        if "w" in entry:
            fields["w"] = list(entry["w"])
        comps.append((st, fields, ("json", "", 1, 1)))
    has_w = ["w" in f for _, f, _ in comps]
    d, w = _assemble(comps, need_w=all(has_w) and bool(has_w))
    return DecoratedSatakeDiagram(d, w) if w is not None else d


def _json_ref(x):
    tok = ("json", str(x), 1, 1)
    if isinstance(x, str) and "." in x:
        a, b = x.split(".")
        return (int(a), int(b)), tok
    return int(x), tok


# -- rendering --------------------------------------------------------------------


def render(dd: DecoratedSatakeDiagram, crossed: Iterable[int] = ()) -> str:
    """ASCII picture: ``*`` black, ``o`` white, ``x`` crossed; coefficient follows each glyph.

    ``crossed`` holds global 1-based node indices.
    """
    crossed = set(crossed)
    d = dd.diagram
    lines = []
    for ci, (c, off) in enumerate(zip(d.components, d.offsets)):
        glyphs = []
        for i in range(c.rank):
            g = off + i
            mark = "x" if g + 1 in crossed else ("*" if g in d.black else "o")
            glyphs.append(f"{mark}{dd.coefficients[g]}")
        extra = ""
        arrows = _arrow_texts(d)[ci]
        if arrows:
            extra = "  arrows " + " ".join(arrows)
        lines.append(f"{c.type}: " + " ".join(glyphs) + extra)
    return "\n".join(lines)
