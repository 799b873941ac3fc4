from fractions import Fraction

import pytest

from orbitx import (TorusPoint, UnsupportedType, Weight, center_representatives, format_group,
                    make_root_system, pairing, parse_group, reality_class)
from orbitx.rootdata import _det

from oracles import CARTAN, CENTER_ORDER, MARKS, OPPOSITE, WEYL_ORDER


@pytest.mark.parametrize("name", sorted(CARTAN))
def test_cartan_table(name):
    assert [list(r) for r in make_root_system(name).cartan] == CARTAN[name]


@pytest.mark.parametrize("name", sorted(MARKS))
def test_marks_weyl_center(name):
    rs = make_root_system(name)
    assert rs.marks == MARKS[name]
    assert rs.weyl_order == WEYL_ORDER[name]
    assert rs.center_order == CENTER_ORDER[name]


@pytest.mark.parametrize("name", sorted(MARKS))
def test_center_is_det_and_inverse_exact(name):
    rs = make_root_system(name)
    n = rs.rank
    assert rs.center_order == abs(_det(rs.cartan))
    for i in range(n):
        for j in range(n):
            v = sum(rs.cartan[i][k] * rs.cartan_inv[k][j] for k in range(n))
            assert v == (1 if i == j else 0)


def test_examples():
    a2 = make_root_system("A2")
    assert a2.cartan == ((2, -1), (-1, 2)) and a2.marks == (1, 1) and a2.center_order == 3
    c2 = make_root_system([("C", 2)])
    assert c2.marks == (2, 1) and c2.center_order == 2
    aa = make_root_system("A1xA1")
    assert aa.cartan == ((2, 0), (0, 2)) and aa.center_order == 4
    assert aa.factors == ((0, 1), (1, 2))


def test_pairing_examples():
    a1 = make_root_system("A1")
    w = Weight.fundamental(a1, 0)
    assert pairing(w, TorusPoint.simple_coroot(a1, 0)) == 1
    assert pairing(w, TorusPoint.fundamental(a1, 0)) == Fraction(1, 2)
    a2 = make_root_system("A2")
    assert pairing(Weight.fundamental(a2, 0), TorusPoint.fundamental(a2, 0)) == Fraction(2, 3)


@pytest.mark.parametrize("name", ["A2", "B3", "C3", "G2", "F4", "D4", "E6", "A1xA1"])
def test_dual_bases(name):
    rs = make_root_system(name)
    n = rs.rank
    for i in range(n):
        for j in range(n):
            d = int(i == j)
            assert pairing(Weight.simple_root(rs, i), TorusPoint.fundamental(rs, j)) == d
            assert pairing(Weight.fundamental(rs, i), TorusPoint.simple_coroot(rs, j)) == d


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "C2", "B3", "D4", "E6", "E7", "A1xA1"])
def test_center_pairs_integrally_with_roots(name):
    rs = make_root_system(name)
    zs = center_representatives(rs)
    assert len(zs) == rs.center_order
    assert zs[0].coords == (0,) * rs.rank
    for z in zs:
        assert z.in_fundamental_region()
        for j in range(rs.rank):
            assert pairing(Weight.simple_root(rs, j), z).denominator == 1


def test_center_examples():
    coords = lambda rs: [tuple(int(c) for c in z) for z in center_representatives(rs)]
    assert coords(make_root_system("A2")) == [(0, 0), (0, 1), (1, 0)]
    assert coords(make_root_system("C2")) == [(0, 0), (0, 1)]
    assert coords(make_root_system("A1xA1")) == [(0, 0), (0, 1), (1, 0), (1, 1)]


@pytest.mark.parametrize("name", sorted(OPPOSITE))
def test_opposite_involution(name):
    rs = make_root_system(name)
    assert (rs.opposite_is_minus_one, rs.opposite_parity) == OPPOSITE[name]


def test_reality_class():
    assert reality_class(make_root_system("G2")) == {
        "C_real": True, "S_real": True, "S_imaginary": False, "E_real": True}
    a1 = reality_class(make_root_system("A1"))
    assert a1["C_real"] and a1["S_imaginary"] and not a1["S_real"]
    a2 = reality_class(make_root_system("A2"))
    assert not any(a2.values())


def test_simplex_vertices_c2():
    rs = make_root_system("C2")
    assert [v.coords for v in rs.simplex_vertices()] == [
        (0, 0), (Fraction(1, 2), 0), (0, 1)]


@pytest.mark.parametrize("bad", ["", "Z9", "A0", "B1", "D3", "E5", "G3", "A1x", "xA2", "a2 b"])
def test_rejects_bad_groups(bad):
    with pytest.raises(UnsupportedType):
        make_root_system(bad)


def test_group_string_round_trip():
    for s in ["A1", "A1xA1", "G2xA3", "E8"]:
        assert format_group(parse_group(s)) == s


def test_torus_equality_and_integrality():
    rs = make_root_system("A2")
    x = TorusPoint(rs, (Fraction(1, 3), Fraction(1, 5)))
    assert x.torus_equal(x + TorusPoint.simple_coroot(rs, 1))
    assert not x.torus_equal(x + TorusPoint.fundamental(rs, 0))
    assert Weight(rs, (1, -2)).is_integral
    assert not Weight(rs, (Fraction(1, 2), 0)).is_integral
    assert Weight(rs, (0, 3)).is_dominant and not Weight(rs, (0, 3)).is_strictly_dominant
