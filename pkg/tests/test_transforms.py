import json
import random

import numpy as np
import pytest

from orbitx import (DimensionMismatch, SpectralVector, TorusPoint, Weight, WeightSetError,
                    build_grid, build_weight_set, continuous_orthogonality, eval_on_grid,
                    forward, gram_discrete, gram_full_group, interpolate, inverse,
                    make_root_system, orbit, weight_set_from_weights)
from orbitx.functions import function_matrix

from conftest import MATRIX_GROUPS
from oracles import CARTAN, brute_gram, gamma_elements

A1 = make_root_system("A1")


def setup(name, M, flavor, gamma="pcheck"):
    rs = make_root_system(name)
    return rs, build_grid(rs, M, gamma), build_weight_set(rs, M, gamma, flavor)


def test_a1_forward_examples():
    rs, g, ws = setup("A1", 2, "C")
    f = eval_on_grid("C", Weight(rs, (1,)), g)
    assert np.allclose(forward("C", g, ws, f).coeffs, [0, 1, 0], atol=1e-12)
    assert np.allclose(forward("C", g, ws, np.zeros(3)).coeffs, 0)
    # cross term against 2*omega: 1*(2*2) + 2*(0*(-2)) + 1*((-2)*2)
    w = np.array(g.orbit_sizes)
    c2 = eval_on_grid("C", Weight(rs, (2,)), g)
    assert np.sum(w * f * np.conj(c2)) == pytest.approx(0, abs=1e-12)


def test_a1_inverse_examples():
    rs, g, ws = setup("A1", 2, "C")
    assert np.allclose(inverse(SpectralVector("C", ws, [1, 0, 0]), g), 1)
    spec = SpectralVector("C", ws, [0, 1, 0])
    assert np.allclose(inverse(spec, g), [2, 0, -2])
    x = TorusPoint(rs, (0.25,))
    assert interpolate(spec, x) == pytest.approx(2 ** 0.5, abs=1e-12)


def test_a1_gram_values():
    rs, g, ws = setup("A1", 2, "C")
    G = gram_discrete("C", g, ws)
    assert np.allclose(G, np.diag([4, 8, 16]), atol=1e-12)
    assert ws.self_separated == (True, True, False)
    rs, g, ws = setup("A1", 2, "S")
    assert np.allclose(gram_discrete("S", g, ws), [[4]], atol=1e-12)


def test_empty_weight_set():
    rs, g, ws = setup("A2", 2, "S")
    assert len(ws) == 0
    assert gram_discrete("S", g, ws).shape == (0, 0)


@pytest.mark.parametrize("name", MATRIX_GROUPS)
@pytest.mark.parametrize("flavor", ["C", "S", "E"])
def test_gram_diagonal(name, flavor):
    for M in range(1, 7):
        rs, g, ws = setup(name, M, flavor)
        G = gram_discrete(flavor, g, ws)
        if not len(ws):
            continue
        off = np.abs(G - np.diag(np.diag(G))).max()
        assert off <= 1e-9 * g.gamma_order
        assert np.allclose(np.diag(G), [float(v) for v in ws.norms], rtol=0, atol=1e-9 * g.gamma_order)
        for k, lam in enumerate(ws.weights):
            if ws.self_separated[k]:
                size = len(orbit(lam, "even" if flavor == "E" else "full"))
                expect = g.gamma_order * (1 if flavor == "S" else size)
                assert ws.norms[k] == expect


@pytest.mark.parametrize("name", MATRIX_GROUPS)
@pytest.mark.parametrize("flavor", ["C", "S", "E"])
def test_fundamental_domain_vs_brute_force(name, flavor):
    rs = make_root_system(name)
    for M in range(1, 5):
        g = build_grid(rs, M)
        ws = build_weight_set(rs, M, "pcheck", flavor)
        if not len(ws) or g.gamma_order > 4096:
            continue
        B = brute_gram(CARTAN[name], flavor, [w.as_ints() for w in ws.weights], M)
        G = gram_discrete(flavor, g, ws) * (rs.weyl_order if flavor == "S" else 1)
        assert np.abs(B - G).max() <= 1e-10 * np.abs(B).max()
        H = gram_full_group(flavor, g, ws)
        assert np.abs(H - B).max() <= 1e-10 * np.abs(B).max()


@pytest.mark.parametrize("name", MATRIX_GROUPS)
@pytest.mark.parametrize("flavor", ["C", "S", "E"])
@pytest.mark.parametrize("gamma", ["pcheck", "qcheck"])
def test_round_trips(name, flavor, gamma):
    rng = np.random.default_rng(0)
    for M in range(1, 6):
        rs, g, ws = setup(name, M, flavor, gamma)
        if not ws.complete:
            continue
        n = len(g.flavor_points(flavor))
        for _ in range(5):
            f = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            assert np.abs(inverse(forward(flavor, g, ws, f), g) - f).max(initial=0) <= 1e-10
            a = rng.standard_normal(len(ws)) + 1j * rng.standard_normal(len(ws))
            back = forward(flavor, g, ws, inverse(SpectralVector(flavor, ws, a), g)).coeffs
            assert np.abs(back - a).max(initial=0) <= 1e-10


def test_s_accepts_full_grid_samples():
    rs, g, ws = setup("A2", 5, "S")
    full = function_matrix("S", rs, [ws.weights[0]], g.points)[0]
    a = forward("S", g, ws, full).coeffs
    assert np.allclose(a, np.eye(len(ws))[0], atol=1e-12)


def test_interpolation_hits_samples():
    rs, g, ws = setup("C2", 4, "C")
    rng = np.random.default_rng(1)
    f = rng.standard_normal(len(g.points))
    spec = forward("C", g, ws, f)
    assert np.allclose(interpolate(spec, g.points), f, atol=1e-10)
    ones = forward("C", g, ws, np.ones(len(g.points)))
    assert interpolate(ones, TorusPoint(rs, (0.1, 0.3))) == pytest.approx(1, abs=1e-12)


def test_errors():
    rs, g, ws = setup("A2", 3, "C")
    with pytest.raises(DimensionMismatch):
        forward("C", g, ws, np.zeros(len(g.points) + 1))
    with pytest.raises(DimensionMismatch):
        SpectralVector("C", ws, np.zeros(len(ws) - 1))
    bad = weight_set_from_weights(rs, 3, "pcheck", "C", [(0, 0), (1, 1), (7, -2)])
    assert not bad.separated
    with pytest.raises(WeightSetError):
        forward("C", g, bad, np.zeros(len(g.points)))


def test_spectral_json():
    rs, g, ws = setup("A1", 2, "C")
    d = json.loads(SpectralVector("C", ws, [0, 1, 0]).dumps())
    assert d["weights"] == [[0], [1], [2]] and d["coeffs"][1] == [1.0, 0.0]
    assert d["flavor"] == "C" and d["group"] == "A1"


def test_continuous_examples():
    a2 = make_root_system("A2")
    assert continuous_orthogonality("C", Weight(a2, (1, 0)), Weight(a2, (1, 0))) == 3
    assert continuous_orthogonality("S", Weight(a2, (1, 1)), Weight(a2, (1, 1))) == 6
    assert continuous_orthogonality("C", Weight(a2, (1, 0)), Weight(a2, (0, 1))) == 0
    assert continuous_orthogonality("C", Weight(a2, (1, 0)), Weight(a2, (-1, 1))) == 3


@pytest.mark.parametrize("name", ["A1", "A2", "C2", "G2"])
def test_continuous_matches_large_grid_average(name):
    # on (1/M)Q/Q with M beyond every weight difference the grid average is the integral
    rs = make_root_system(name)
    M = 11
    pts = gamma_elements(CARTAN[name], M, "qcheck")
    rng = random.Random(5)
    for flavor in "CSE":
        lo = 1 if flavor == "S" else 0
        for _ in range(6):
            lam = Weight(rs, tuple(rng.randint(lo, 2) for _ in range(rs.rank)))
            mu = Weight(rs, tuple(rng.randint(lo, 2) for _ in range(rs.rank)))
            F = function_matrix(flavor, rs, [lam, mu], pts)
            avg = np.vdot(F[1], F[0]) / len(pts)
            assert avg == pytest.approx(continuous_orthogonality(flavor, lam, mu), abs=1e-9)
