"""Named real forms and their Satake diagrams.

Classical families are parametrised (``sl(n,R)``, ``su(p,q)``, ``sl(n,H)``,
``so(p,q)``, ``sp(2n,R)``, ``sp(p,q)``, ``so*(2n)``, complex algebras viewed
as real); exceptional forms use their signature names (``e6(-26)``) or
Cartan's labels (``EIV``).  Direct sums are written with ``+``.
"""

from __future__ import annotations

import re
from typing import Callable, Dict, Iterable, List, Tuple

from .rootsystem import SimpleType
from .satake import Component, DiagramError, SatakeDiagram, direct_sum


def _simple(family: str, rank: int, black: Iterable[int] = (), arrows: Iterable[Tuple[int, int]] = ()) -> SatakeDiagram:
    st = SimpleType(family, rank)
    return SatakeDiagram(
        (Component(st, frozenset(black)),),
        frozenset((a - 1, b - 1) for a, b in arrows),
    )


def _compact(family: str, rank: int) -> SatakeDiagram:
    return _simple(family, rank, range(1, rank + 1))


def sl_R(n: int) -> SatakeDiagram:
    if n < 2:
        raise DiagramError("sl(n,R) needs n >= 2")
    return _simple("A", n - 1)


def su(p: int, q: int) -> SatakeDiagram:
    p, q = sorted((p, q))
    n = p + q
    if n < 2:
        raise DiagramError("su(p,q) needs p+q >= 2")
    r = n - 1
    if p == 0:
        return _compact("A", r)
    white = set(range(1, p + 1)) | set(range(q, r + 1))
    black = [i for i in range(1, r + 1) if i not in white]
    arrows = [(i, n - i) for i in range(1, p + 1) if i != n - i]
    return _simple("A", r, black, arrows)


def sl_H(n: int) -> SatakeDiagram:
    if n < 1:
        raise DiagramError("sl(n,H) needs n >= 1")
    r = 2 * n - 1
    return _simple("A", r, range(1, r + 1, 2))


def so(p: int, q: int) -> SatakeDiagram:
    p, q = sorted((p, q))
    n = p + q
    if n < 3:
        raise DiagramError("so(p,q) needs p+q >= 3")
    if n == 3:
        return _compact("A", 1) if p == 0 else _simple("A", 1)
    if n == 4:
        if p == 0:
            return direct_sum(_compact("A", 1), _compact("A", 1))
        if p == 1:  # sl(2,C)
            return SatakeDiagram((Component(SimpleType("A", 1)),) * 2, frozenset({(0, 1)}))
        return direct_sum(_simple("A", 1), _simple("A", 1))
    if n % 2:
        r = (n - 1) // 2
        return _simple("B", r, range(p + 1, r + 1))
    r = n // 2
    if p == r - 1:
        return _simple("D", r, arrows=[(r - 1, r)])
    if p >= r - 1:
        return _simple("D", r)
    return _simple("D", r, range(p + 1, r + 1))


def sp_R(n: int) -> SatakeDiagram:
    if n < 1:
        raise DiagramError("sp(2n,R) needs n >= 1")
    return _simple("A", 1) if n == 1 else _simple("C", n)


def sp(p: int, q: int) -> SatakeDiagram:
    p, q = sorted((p, q))
    n = p + q
    if n < 1:
        raise DiagramError("sp(p,q) needs p+q >= 1")
    if n == 1:
        return _compact("A", 1)
    white = {2 * i for i in range(1, p + 1)}
    return _simple("C", n, [i for i in range(1, n + 1) if i not in white])


def so_star(n: int) -> SatakeDiagram:
    """so*(2n) for n >= 3 (D_n diagram)."""
    if n < 3:
        raise DiagramError("so*(2n) needs n >= 3")
    if n % 2 == 0:
        return _simple("D", n, range(1, n, 2))
    return _simple("D", n, range(1, n - 1, 2), [(n - 1, n)])


def complex_as_real(t: SimpleType) -> SatakeDiagram:
    comps = (Component(t), Component(t))
    return SatakeDiagram(comps, frozenset((i, t.rank + i) for i in range(t.rank)))


_EXCEPTIONAL: Dict[str, Tuple[str, SatakeDiagram]] = {}


def _ex(names: Iterable[str], family: str, rank: int, black=(), arrows=()) -> None:
    d = _simple(family, rank, black, arrows)
    names = list(names)
    for nm in names:
        _EXCEPTIONAL[nm.lower()] = (names[0], d)


_ex(["e6(6)", "EI"], "E", 6)
_ex(["e6(2)", "EII"], "E", 6, (), [(1, 6), (3, 5)])
_ex(["e6(-14)", "EIII"], "E", 6, [3, 4, 5], [(1, 6)])
_ex(["e6(-26)", "EIV"], "E", 6, [2, 3, 4, 5])
_ex(["e7(7)", "EV"], "E", 7)
_ex(["e7(-5)", "EVI"], "E", 7, [2, 5, 7])
_ex(["e7(-25)", "EVII"], "E", 7, [2, 3, 4, 5])
_ex(["e8(8)", "EVIII"], "E", 8)
_ex(["e8(-24)", "EIX"], "E", 8, [2, 3, 4, 5])
_ex(["f4(4)", "FI"], "F", 4)
_ex(["f4(-20)", "FII"], "F", 4, [1, 2, 3])
_ex(["g2(2)", "G"], "G", 2)
for _nm, (_f, _r) in {"e6": ("E", 6), "e7": ("E", 7), "e8": ("E", 8), "f4": ("F", 4), "g2": ("G", 2)}.items():
    _EXCEPTIONAL[_nm] = (_nm, _compact(_f, _r))


_INT = r"\s*(\d+)\s*"
_PATTERNS: List[Tuple[re.Pattern, Callable[..., SatakeDiagram]]] = [
    (re.compile(rf"sl\({_INT},\s*R\s*\)$"), lambda n: sl_R(n)),
    (re.compile(rf"sl\({_INT},\s*H\s*\)$"), lambda n: sl_H(n)),
    (re.compile(rf"su\*\({_INT}\)$"), lambda n: sl_H(n // 2) if n % 2 == 0 else _bad("su*(n) needs even n")),
    (re.compile(rf"sl\({_INT},\s*C\s*\)$"), lambda n: complex_as_real(SimpleType("A", n - 1))),
    (re.compile(rf"su\({_INT},{_INT}\)$"), lambda p, q: su(p, q)),
    (re.compile(rf"su\({_INT}\)$"), lambda n: su(0, n)),
    (re.compile(rf"so\({_INT},{_INT}\)$"), lambda p, q: so(p, q)),
    (re.compile(rf"so\({_INT},\s*C\s*\)$"), lambda n: _so_complex(n)),
    (re.compile(rf"so\({_INT}\)$"), lambda n: so(0, n)),
    (re.compile(rf"so\*\({_INT}\)$"), lambda n: so_star(n // 2) if n % 2 == 0 else _bad("so*(2n) needs an even argument")),
    (re.compile(rf"sp\({_INT},\s*R\s*\)$"), lambda n: sp_R(n // 2) if n % 2 == 0 else _bad("sp(2n,R) needs an even argument")),
    (re.compile(rf"sp\({_INT},\s*C\s*\)$"), lambda n: _sp_complex(n)),
    (re.compile(rf"sp\({_INT},{_INT}\)$"), lambda p, q: sp(p, q)),
    (re.compile(rf"sp\({_INT}\)$"), lambda n: sp(0, n)),
    (re.compile(r"complex\(\s*([A-Ga-g]\d+)\s*\)$"), lambda t: complex_as_real(SimpleType.parse(t))),
]


def _bad(msg: str):
    raise DiagramError(msg)


def _so_complex(n: int) -> SatakeDiagram:
    if n < 5 or n == 6:
        base = {3: "A1", 6: "A3"}.get(n)
        if base is None:
            raise DiagramError("so(n,C) supported for n = 3 or n >= 5")
        return complex_as_real(SimpleType.parse(base))
    return complex_as_real(SimpleType("B", (n - 1) // 2) if n % 2 else SimpleType("D", n // 2))


def _sp_complex(n: int) -> SatakeDiagram:
    if n % 2:
        raise DiagramError("sp(2n,C) needs an even argument")
    r = n // 2
    return complex_as_real(SimpleType("A", 1) if r == 1 else SimpleType("C", r))


def real_form_diagram(name: str) -> SatakeDiagram:
    """Satake diagram of a named real form; ``+`` forms direct sums."""
    parts = [p.strip() for p in _split_sum(name)]
    if len(parts) > 1:
        return direct_sum(*(real_form_diagram(p) for p in parts))
    key = parts[0]
    ex = _EXCEPTIONAL.get(key.lower())
    if ex is not None:
        return ex[1]
    for pat, build in _PATTERNS:
        m = pat.match(key)
        if m:
            args = [int(g) if g.isdigit() else g for g in m.groups()]
            return build(*args)
    raise DiagramError(f"unknown real form {name!r}")


def _split_sum(name: str) -> List[str]:
    out, depth, cur = [], 0, ""
    for ch in name:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


FAMILY_SYNTAX = [
    "sl(n,R)", "su(n)", "su(p,q)", "sl(n,H)", "su*(2n)", "sl(n,C)",
    "so(n)", "so(p,q)", "so(n,C)", "so*(2n)",
    "sp(2n,R)", "sp(n)", "sp(p,q)", "sp(2n,C)", "complex(X)",
]


def exceptional_names() -> List[str]:
    seen = []
    for canon, _ in _EXCEPTIONAL.values():
        if canon not in seen:
            seen.append(canon)
    return seen


def sample_catalog() -> Dict[str, SatakeDiagram]:
    """A representative, finite slice of the catalog (used by tests and ``catalog``)."""
    names: List[str] = []
    names += [f"sl({n},R)" for n in range(2, 7)]
    names += [f"su({n})" for n in range(2, 6)]
    names += [f"su({p},{q})" for p in range(1, 4) for q in range(p, 6)]
    names += [f"sl({n},H)" for n in range(1, 5)]
    names += [f"so({n})" for n in range(3, 11)]
    names += [f"so({p},{q})" for p in range(1, 6) for q in range(p, 9) if p + q >= 3]
    names += [f"sp({2 * n},R)" for n in range(1, 5)]
    names += [f"sp({n})" for n in range(1, 5)]
    names += [f"sp({p},{q})" for p in range(1, 3) for q in range(p, 4)]
    names += [f"so*({2 * n})" for n in range(3, 8)]
    names += ["sl(2,C)", "sl(3,C)", "so(7,C)", "sp(4,C)", "complex(G2)"]
    names += exceptional_names()
    return {n: real_form_diagram(n) for n in names}


def is_split_name(name: str) -> bool:
    return bool(
        re.match(r"sl\(\d+,R\)$", name)
        or re.match(r"sp\(\d+,R\)$", name)
        or name in {"su(1,1)", "e6(6)", "e7(7)", "e8(8)", "f4(4)", "g2(2)"}
        or _is_split_so(name)
    )


def _is_split_so(name: str) -> bool:
    m = re.match(r"so\((\d+),(\d+)\)$", name)
    if not m:
        return False
    p, q = sorted(map(int, m.groups()))
    return q - p <= 1


def is_compact_name(name: str) -> bool:
    return bool(re.match(r"(su|so|sp)\(\d+\)$", name)) or name in {"sl(1,H)", "e6", "e7", "e8", "f4", "g2"}
