"""Hypothesis strategies for random valid (decorated) Satake diagrams."""

from hypothesis import strategies as st

from projorbit import catalog
from projorbit.satake import DecoratedSatakeDiagram, direct_sum

POOL = [d for d in catalog.sample_catalog().values() if d.n_nodes <= 8]
SPLIT_POOL = [d for name, d in catalog.sample_catalog().items() if catalog.is_split_name(name) and d.n_nodes <= 8]


@st.composite
def diagrams(draw, max_rank: int = 8, pool=None):
    pool = [d for d in (pool or POOL) if d.n_nodes <= max_rank]
    parts = [draw(st.sampled_from(pool))]
    while draw(st.booleans()):
        room = max_rank - sum(p.n_nodes for p in parts)
        fits = [d for d in pool if d.n_nodes <= room]
        if not fits:
            break
        parts.append(draw(st.sampled_from(fits)))
    return parts[0] if len(parts) == 1 else direct_sum(*parts)


def _coefficients(draw, d, hi):
    w = [draw(st.integers(0, hi)) for _ in range(d.n_nodes)]
    for a, b in d.arrows:
        w[b] = w[a]
    if not any(w):
        w[draw(st.integers(0, d.n_nodes - 1))] = draw(st.integers(1, hi))
        for a, b in d.arrows:
            w[b] = w[a] = max(w[a], w[b])
    return w


@st.composite
def decorated(draw, max_rank: int = 8, hi: int = 3, pool=None):
    d = draw(diagrams(max_rank, pool))
    return DecoratedSatakeDiagram(d, tuple(_coefficients(draw, d, hi)))
