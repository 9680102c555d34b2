import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from projorbit import catalog
from projorbit.reduction import (
    ReductionError,
    cross_nodes,
    family_reduce,
    kept_diagram,
    reduce,
    slR_adjoint,
    so_wedge,
    sp1_slH_curvature,
    sp1_slH_torsion,
    unique_closed_orbit,
    wedge_highest_weight,
)
from projorbit.rootsystem import build_root_system
from projorbit.satake import DecoratedSatakeDiagram, DiagramError, is_split, parse
from strategies import SPLIT_POOL, decorated


def test_cross_nodes_examples():
    assert cross_nodes(parse("A2 w=[1,1]")) == {1, 2}
    assert cross_nodes(parse("A2 w=[1,0]")) == {1}
    # A1 is node 1 and A_{2n-1} holds nodes 2..2n; crossed are its nodes 2 and 2n-2
    for n in (2, 3, 5):
        assert cross_nodes(sp1_slH_torsion(n)) == {3, 2 * n - 1}
        assert cross_nodes(sp1_slH_curvature(n)) == {3, 2 * n - 1}


@pytest.mark.parametrize("build", [sp1_slH_torsion, sp1_slH_curvature])
@pytest.mark.parametrize("n", [2, 3, 5])
def test_example_pair(build, n):
    r = reduce(build(n))
    assert sorted(w for _, w in r.k_summary) == [(1,), (3,)]
    assert all(t == "A1" for t, _ in r.k_summary)
    assert r.w_dim_complex == 8 and r.w_dim_real == 8 and r.w_type == "real"
    assert unique_closed_orbit(r).verdict == "unknown"


def test_so14_wedge2():
    dd = so_wedge(1, 4)
    assert dd.coefficients == (0, 2)
    r = reduce(dd)
    assert r.crossed == {1}
    assert r.k_summary == [("A1", (2,))]
    assert r.w_dim_real == 3
    v = unique_closed_orbit(r)
    assert v.verdict == "unique" and "SO(3)" in v.reason


def test_wedge_weights():
    b3 = build_root_system("B3")
    assert wedge_highest_weight(b3, (1, 0, 0), 1) == (1, 0, 0)
    assert wedge_highest_weight(b3, (1, 0, 0), 2) == (0, 1, 0)
    assert wedge_highest_weight(b3, (1, 0, 0), 3) == (0, 0, 2)
    d4 = build_root_system("D4")
    assert wedge_highest_weight(d4, (1, 0, 0, 0), 2) == (0, 1, 0, 0)
    assert so_wedge(2, 5).coefficients == (0, 0, 2)
    with pytest.raises(ReductionError, match="reducible"):
        so_wedge(2, 4)


def test_split_and_trivial_k_verdict():
    r = reduce(parse("A2 w=[1,1]"))
    assert r.k_trivial and r.w_dim_real == 1
    assert unique_closed_orbit(r).reason == "K trivial"


@pytest.mark.parametrize("text,reason", [
    ("B3 black=[1,2,3] w=[1,0,0]", "SO(7)"),
    ("A3 black=[1,2,3] w=[0,0,1]", "SU(4)"),
    ("C3 black=[1,2,3] w=[1,0,0]", "Sp(3)"),
    ("B3 black=[1,2,3] w=[0,0,1]", "Spin(7)"),
    ("B4 black=[1,2,3,4] w=[0,0,0,1]", "Spin(9)"),
    ("D4 black=[1,2,3,4] w=[0,0,0,1]", "Spin(8)"),
    ("D5 black=[1,2,3,4,5] w=[1,0,0,0,0]", "SO(10)"),
    ("A1 black=[1] w=[2]", "SO(3)"),
    ("A1 black=[1] w=[1]", "SU(2)"),
    ("A3 black=[1,2,3] w=[0,1,0]", "SO(6)"),
    ("C2 black=[1,2] w=[0,1]", "SO(5)"),
    ("C3 black=[1,2,3] w=[1,0,0] + A1 black=[1] w=[1]", "Sp(3)Sp(1)"),
])
def test_sphere_transitive_catalog(text, reason):
    v = unique_closed_orbit(reduce(parse(text)))
    assert v.verdict == "unique" and reason in v.reason


@pytest.mark.parametrize("text", ["A2 black=[1,2] w=[1,1]", "G2 black=[1,2] w=[1,0]", "A1 black=[1] w=[3]",
                                  "B3 black=[1,2,3] w=[0,1,0]"])
def test_not_in_catalog(text):
    assert unique_closed_orbit(reduce(parse(text))).verdict == "unknown"


def test_errors():
    with pytest.raises(ReductionError, match="trivial decoration"):
        reduce(parse("A2 w=[0,0]"))
    with pytest.raises(DiagramError, match="unequal coefficients"):
        reduce(DecoratedSatakeDiagram(catalog.real_form_diagram("su(1,2)"), (1, 0)))
    r = reduce(DecoratedSatakeDiagram(catalog.real_form_diagram("su(1,2)"), (1, 0)), allow_complex_type=True)
    assert r.crossed == {1}


def test_compact_identity_with_notice():
    dd = parse("B2 black=[1,2] w=[1,0]")
    r = reduce(dd)
    assert r.notice and not r.crossed
    assert r.k_summary == [("B2", (1, 0))]


def test_family_examples():
    fr = family_reduce("sp1-slH-torsion", range(2, 6))
    assert fr.stable and len(fr.results) == 4
    fr = family_reduce("so-p-p+3-wedge", [1, 2, 3])
    assert fr.stable
    for _, r in fr.results:
        assert r.k_summary == [("A1", (2,))]
        assert unique_closed_orbit(r).verdict == "unique"
    fr = family_reduce("slR-adjoint", [2, 3, 4])
    assert all(r.k_trivial for _, r in fr.results)
    with pytest.raises(ReductionError):
        family_reduce("nope", [1])
    with pytest.raises(ReductionError):
        family_reduce("sp1-slH-torsion", [1])


def test_slR_adjoint_weight():
    assert slR_adjoint(2).coefficients == (2,)
    assert slR_adjoint(4).coefficients == (1, 0, 1)


# -- properties ----------------------------------------------------------------------


@settings(max_examples=1000)
@given(decorated())
def test_kept_components_fully_black(dd):
    r = reduce(dd)
    black = dd.diagram.black
    for f in r.kept:
        assert all(i - 1 in black for i in f.nodes)
        assert any(dd.coefficients[i - 1] for i in f.nodes)
    covered = sorted(list(r.crossed) + [i for f in r.kept for i in f.nodes] + [i for p in r.discarded for i in p.nodes])
    assert covered == list(range(1, dd.diagram.n_nodes + 1))


@settings(max_examples=300)
@given(decorated(), st.data())
def test_monotone_in_white_coefficients(dd, data):
    d = dd.diagram
    if not d.white:
        return
    i = data.draw(st.sampled_from(d.white))
    w = list(dd.coefficients)
    bump = data.draw(st.integers(1, 3))
    w[i] += bump
    j = d.partner(i)
    if j is not None:
        w[j] += bump
    bigger = reduce(DecoratedSatakeDiagram(d, tuple(w)))
    assert reduce(dd).crossed <= bigger.crossed


@settings(max_examples=300)
@given(decorated())
def test_idempotent_on_kept(dd):
    r = reduce(dd)
    if r.k_trivial:
        return
    again = reduce(kept_diagram(r))
    assert again.notice is not None
    assert again.k_summary == r.k_summary


@settings(max_examples=300)
@given(decorated(pool=SPLIT_POOL))
def test_split_gives_trivial_k(dd):
    assert is_split(dd.diagram)
    r = reduce(dd)
    assert r.k_trivial and r.w_dim_real == 1


@settings(max_examples=300)
@given(decorated(), st.data())
def test_crossing_is_local(dd, data):
    d = dd.diagram
    if not d.white:
        return
    i = data.draw(st.sampled_from(d.white))
    # black nodes in maximal black blocks adjacent to i
    near = {i}
    stack = [j for j in d.neighbors(i) if j in d.black]
    while stack:
        j = stack.pop()
        if j in near:
            continue
        near.add(j)
        stack.extend(k for k in d.neighbors(j) if k in d.black)
    far = [k for k in range(d.n_nodes) if k not in near]
    w = list(dd.coefficients)
    shuffled = data.draw(st.permutations([w[k] for k in far]))
    for k, x in zip(far, shuffled):
        w[k] = x
    for a, b in d.arrows:  # keep arrow pairs equal; arrow ends are white, so never in near unless == i
        if a in near or b in near:
            w[a] = w[b] = w[i]
        else:
            w[b] = w[a]
    if not any(w):
        return
    before = (i + 1) in reduce(dd).crossed
    after = (i + 1) in reduce(DecoratedSatakeDiagram(d, tuple(w))).crossed
    assert before == after
