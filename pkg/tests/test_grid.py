import itertools
import json
from fractions import Fraction

import pytest

from orbitx import (TorusPoint, Weight, build_grid, build_weight_set,
                    enumerate_gamma, is_separated, make_root_system, weight_set_from_weights)
from orbitx.grid import _lattice_key

from conftest import MATRIX_GROUPS


def test_a1_grids():
    a1 = make_root_system("A1")
    g = build_grid(a1, 2)
    assert [p.coords for p in g.points] == [(0,), (Fraction(1, 2),), (1,)]
    assert g.orbit_sizes == (1, 2, 1) and g.gamma_order == 4
    assert g.interior == (1,)
    q = build_grid(a1, 2, "qcheck")
    assert [p.coords for p in q.points] == [(0,), (1,)] and q.gamma_order == 2


def test_a2_m1_is_vertices():
    rs = make_root_system("A2")
    g = build_grid(rs, 1)
    assert {p.coords for p in g.points} == {v.coords for v in rs.simplex_vertices()}
    assert g.gamma_order == 3 and g.orbit_sizes == (1, 1, 1)


@pytest.mark.parametrize("name", MATRIX_GROUPS)
def test_qcheck_m1_is_origin(name):
    g = build_grid(make_root_system(name), 1, "qcheck")
    assert [p.coords for p in g.points] == [(0,) * g.rs.rank]


@pytest.mark.parametrize("name", MATRIX_GROUPS)
@pytest.mark.parametrize("gamma", ["pcheck", "qcheck"])
def test_partition_and_order(name, gamma):
    rs = make_root_system(name)
    for M in range(1, 7):
        g = build_grid(rs, M, gamma)
        expect = (rs.center_order if gamma == "pcheck" else 1) * M ** rs.rank
        assert g.gamma_order == expect == len(enumerate_gamma(rs, M, gamma))
        assert sum(g.orbit_sizes) == expect
        assert sum(g.even_orbit_sizes) == expect
        assert all(p.in_fundamental_region() for p in g.points)
        assert [p.is_interior() for p in g.points] == [j in g.interior for j in range(len(g.points))]


@pytest.mark.parametrize("name", ["A2", "C2", "G2", "B3"])
def test_kac_points_are_torus_distinct(name):
    rs = make_root_system(name)
    g = build_grid(rs, 4)
    for a, b in itertools.combinations(g.points, 2):
        assert not a.torus_equal(b)


@pytest.mark.parametrize("name", MATRIX_GROUPS)
def test_weight_lattice_quotients(name):
    rs = make_root_system(name)
    for M in (1, 2, 3):
        box = itertools.product(range(-2 * M * rs.center_order, 2 * M * rs.center_order), repeat=rs.rank)
        lams = list(box)
        assert len({_lattice_key(rs, l, M, "pcheck") for l in lams}) == rs.center_order * M ** rs.rank
        assert len({_lattice_key(rs, l, M, "qcheck") for l in lams}) == M ** rs.rank


def test_a1_weight_sets():
    a1 = make_root_system("A1")
    assert [w.coords for w in build_weight_set(a1, 2, "pcheck", "C").weights] == [(0,), (1,), (2,)]
    assert [w.coords for w in build_weight_set(a1, 2, "pcheck", "S").weights] == [(1,)]


@pytest.mark.parametrize("name", MATRIX_GROUPS)
@pytest.mark.parametrize("flavor", ["C", "S", "E"])
def test_weight_sets_fill_grid(name, flavor):
    rs = make_root_system(name)
    for M in range(1, 7):
        ws = build_weight_set(rs, M, "pcheck", flavor)
        g = build_grid(rs, M)
        assert len(ws) == len(g.flavor_points(flavor)) and ws.separated
        if flavor == "C":
            assert ws.weights[0].coords == (0,) * rs.rank
        if flavor == "S":
            assert all(w.is_strictly_dominant for w in ws.weights)


@pytest.mark.parametrize("name", MATRIX_GROUPS)
def test_qcheck_sets_report_completeness(name):
    rs = make_root_system(name)
    for M in range(1, 5):
        for flavor in "CSE":
            ws = build_weight_set(rs, M, "qcheck", flavor)
            assert ws.separated
            assert len(ws) <= ws.target
            assert ws.complete == (len(ws) == ws.target)


@pytest.mark.parametrize("name", MATRIX_GROUPS)
def test_aliasing_detected(name):
    rs = make_root_system(name)
    M = 3
    for flavor in "CSE":
        ws = build_weight_set(rs, M, "pcheck", flavor)
        for lam in ws.weights[:4]:
            for j in range(rs.rank):
                shifted = lam + M * Weight.simple_root(rs, j)
                others = list(ws.weights)
                others.append(shifted)
                assert not is_separated(rs, M, "pcheck", flavor, others)


def test_weight_set_from_weights_records_separation():
    rs = make_root_system("A2")
    assert is_separated(rs, 2, "pcheck", "C", [(0, 0), (1, 0)])
    ws = weight_set_from_weights(rs, 2, "pcheck", "C", [(1, 0), (5, -2)])
    assert not ws.separated


def test_grid_json():
    g = build_grid(make_root_system("A1"), 2)
    d = json.loads(g.dumps())
    assert d["points"] == [["0"], ["1/2"], ["1"]]
    assert d["orbit_sizes"] == [1, 2, 1] and d["gamma_order"] == 4 and d["group"] == "A1"


def test_index_of():
    g = build_grid(make_root_system("A2"), 3)
    for j, p in enumerate(g.points):
        assert g.index_of(p) == j
    with pytest.raises(KeyError):
        g.index_of(TorusPoint(g.rs, (Fraction(1, 7), 0)))


def test_bad_m():
    with pytest.raises(ValueError):
        build_grid(make_root_system("A1"), 0)
