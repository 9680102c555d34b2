from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import CARTAN, kostant_multiplicities, root_strings
from projorbit.rootsystem import (
    RootSystemError,
    SimpleType,
    build_root_system,
    dual_weight,
    frobenius_schur,
    identify_type,
    longest_element_action,
    positive_root_count,
    weight_multiplicities,
    weyl_dim,
)

SMALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]
ALL_TYPES = SMALL_TYPES + ["D5", "E6", "E7", "E8"]


def test_a1_cartan_and_roots():
    rs = build_root_system("A1")
    assert rs.cartan == ((2,),)
    assert rs.positive_roots_root_coords == ((1,),)


@pytest.mark.parametrize("t,count", [("A2", 3), ("G2", 6), ("B3", 9), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120)])
def test_positive_root_counts(t, count):
    rs = build_root_system(t)
    assert len(rs.positive_roots) == count == positive_root_count(SimpleType.parse(t))


@pytest.mark.parametrize("t", list(CARTAN))
def test_roots_match_root_string_oracle(t):
    rs = build_root_system(t)
    assert [list(r) for r in rs.cartan] == CARTAN[t]
    assert sorted(rs.positive_roots_root_coords) == sorted(root_strings(CARTAN[t]))


@pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "X2"])
def test_invalid_rank_rejected(bad):
    with pytest.raises(RootSystemError):
        build_root_system(bad)


@pytest.mark.parametrize("t,highest", [("A3", (1, 1, 1)), ("B3", (1, 2, 2)), ("C3", (2, 2, 1)), ("G2", (3, 2)),
                                       ("F4", (2, 3, 4, 2)), ("E8", (2, 3, 4, 6, 5, 4, 3, 2))])
def test_highest_root(t, highest):
    rs = build_root_system(t)
    assert rs.positive_roots_root_coords[-1] == highest


def test_weyl_dim_examples():
    a1 = build_root_system("A1")
    assert weyl_dim(a1, (3,)) == 4
    assert weyl_dim(a1, (0,)) == 1
    assert weyl_dim(a1, (3,)) * weyl_dim(a1, (1,)) == 8
    assert weyl_dim(build_root_system("E8"), (0, 0, 0, 0, 0, 0, 0, 1)) == 248
    assert weyl_dim(build_root_system("E6"), (1, 0, 0, 0, 0, 0)) == 27
    assert weyl_dim(build_root_system("F4"), (0, 0, 0, 1)) == 26


@pytest.mark.parametrize("lam", [(-1,), (Fraction(1, 2),), (1.5,)])
def test_weyl_dim_rejects_bad_weights(lam):
    with pytest.raises(RootSystemError):
        weyl_dim(build_root_system("A1"), lam)


def test_weight_multiplicity_examples():
    a1 = build_root_system("A1")
    ws = weight_multiplicities(a1, (2,))
    assert {a1.to_root_coords(mu)[0] * 2: m for mu, m in ws.entries.items()} == {2: 1, 0: 1, -2: 1}
    assert weight_multiplicities(a1, (0,)).entries == {(0,): 1}
    ws = weight_multiplicities(build_root_system("A2"), (1, 1))
    assert ws.entries[(0, 0)] == 2 and ws.dim == 8


@pytest.mark.parametrize("t", list(CARTAN))
def test_multiplicities_match_kostant(t):
    rs = build_root_system(t)
    n = rs.rank
    for lam in [(1,) * n, (2,) + (0,) * (n - 1), (0,) * (n - 1) + (1,)]:
        assert weight_multiplicities(rs, lam).entries == kostant_multiplicities(CARTAN[t], lam), lam


def _weights(n, hi=2):
    return [w for w in product(range(hi + 1), repeat=n)]


@pytest.mark.parametrize("t", SMALL_TYPES)
def test_total_multiplicity_equals_weyl_dim(t):
    rs = build_root_system(t)
    for lam in _weights(rs.rank, 1 if t == "F4" else 2):
        assert weight_multiplicities(rs, lam).dim == weyl_dim(rs, lam)


@pytest.mark.parametrize("t", SMALL_TYPES)
def test_weight_system_reflection_invariant(t):
    rs = build_root_system(t)
    for lam in _weights(rs.rank, 1):
        ent = weight_multiplicities(rs, lam).entries
        for i in range(rs.rank):
            assert {rs.reflect(mu, i): m for mu, m in ent.items()} == ent


@pytest.mark.parametrize("t", ALL_TYPES)
def test_dual_weight_two_routes(t):
    rs = build_root_system(t)
    for i in range(rs.rank):
        lam = tuple(int(j == i) for j in range(rs.rank))
        assert dual_weight(rs, lam) == longest_element_action(rs, lam)


@pytest.mark.parametrize("t", SMALL_TYPES)
def test_weyl_dim_dual_invariant(t):
    rs = build_root_system(t)
    for lam in _weights(rs.rank, 2):
        assert weyl_dim(rs, lam) == weyl_dim(rs, dual_weight(rs, lam))


def test_dual_examples():
    assert dual_weight(build_root_system("A2"), (1, 0)) == (0, 1)
    assert dual_weight(build_root_system("D4"), (1, 0, 0, 0)) == (1, 0, 0, 0)
    assert dual_weight(build_root_system("D5"), (0, 0, 0, 1, 0)) == (0, 0, 0, 0, 1)
    assert dual_weight(build_root_system("E6"), (1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)
    a1 = build_root_system("A1")
    assert all(dual_weight(a1, (m,)) == (m,) for m in range(8))


def test_frobenius_schur_examples():
    a1 = build_root_system("A1")
    assert frobenius_schur(a1, (1,)) == "quaternionic"
    assert frobenius_schur(a1, (2,)) == "real"
    assert frobenius_schur(build_root_system("A2"), (1, 0)) == "complex"
    assert frobenius_schur(build_root_system("A2"), (1, 1)) == "real"
    assert frobenius_schur(build_root_system("B2"), (1, 0)) == "real"
    assert frobenius_schur(build_root_system("C2"), (1, 0)) == "quaternionic"


@pytest.mark.parametrize("m", range(11))
def test_frobenius_schur_a1_parity(m):
    expected = "quaternionic" if m % 2 else "real"
    assert frobenius_schur(build_root_system("A1"), (m,)) == expected


@pytest.mark.parametrize("t", ALL_TYPES)
def test_inverse_cartan_times_det_integral(t):
    rs = build_root_system(t)
    for row in rs.inverse_cartan:
        for x in row:
            assert isinstance(x, Fraction)
            assert (x * rs.det).denominator == 1


@pytest.mark.parametrize("t", ["A1", "A4", "B3", "C3", "D5", "E6", "F4", "G2"])
def test_identify_type_roundtrip(t):
    rs = build_root_system(t)
    found, order = identify_type(rs.cartan)
    assert found == SimpleType.parse(t)
    assert order == tuple(range(rs.rank))


def test_identify_low_rank_preferences():
    assert identify_type(build_root_system("C2").cartan)[0] == SimpleType("B", 2)
    assert identify_type(build_root_system("D3").cartan)[0] == SimpleType("A", 3)


@settings(max_examples=200)
@given(st.sampled_from(["A2", "A3", "B2", "B3", "C3", "G2", "D4"]), st.data())
def test_root_coordinates_linear(t, data):
    rs = build_root_system(t)
    w = st.lists(st.integers(-5, 5), min_size=rs.rank, max_size=rs.rank)
    mu, nu = data.draw(w), data.draw(w)
    s = tuple(a + b for a, b in zip(mu, nu))
    assert rs.to_root_coords(s) == tuple(a + b for a, b in zip(rs.to_root_coords(mu), rs.to_root_coords(nu)))
    assert rs.to_fundamental(rs.to_root_coords(mu)) == tuple(mu)
