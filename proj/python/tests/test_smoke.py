import json

import pytest

import peanocube as pc


def test_generators_and_basic_shape():
    q3 = pc.hypercube(3)
    assert q3.n == 8 and q3.m == 12
    assert q3.is_regular()
    c6 = pc.even_cycle(6)
    assert c6.n == 6
    assert pc.prism(c6).n == 12
    assert pc.path(4).m == 4


def test_recognition_flags():
    assert pc.is_partial_cube(pc.hypercube(3))
    assert not pc.is_partial_cube(pc.fixture("K23"))
    assert pc.is_median(pc.hypercube(3))
    assert not pc.is_median(pc.even_cycle(6))
    assert pc.is_peano(pc.prism(pc.even_cycle(6)))
    assert not pc.is_peano(pc.fixture("M41"))
    assert pc.is_antipodal(pc.fixture("B1"))
    assert pc.quasi_hypertorus(pc.fixture("B1")) is None


def test_known_invariant_values():
    assert pc.prehull_number(pc.fixture("Q3minus")) == 2
    assert pc.prehull_number(pc.fixture("M41")) == 1
    assert pc.prehull_number(pc.tree(9, seed=4)) == 0
    assert pc.helly_number(pc.hypercube(3)) == 2
    assert pc.helly_number(pc.even_cycle(6)) == 3
    assert pc.depth(pc.path(2)) == 2
    assert pc.euler_characteristic(pc.prism(pc.even_cycle(6))) == 1
    assert pc.idim_by_formula(pc.even_cycle(6)) == 3
    assert pc.ksh_defect(pc.even_cycle(6)) == 2


def test_torus_descriptor():
    t = pc.quasi_hypertorus(pc.prism(pc.even_cycle(6)))
    assert t is not None
    assert t.k2_factors == 1
    assert t.cycle_factors == [6]
    assert t.dimension == 3
    assert t.gamma == 1


def test_convexity_machinery():
    c6 = pc.even_cycle(6)
    assert pc.w_set(c6, 0, 1) == [0, 4, 5]
    assert pc.u_set(c6, 0, 1) == [0, 4]
    hull, iterations = pc.convex_hull(c6, [0, 3])
    assert hull == [0, 1, 2, 3, 4, 5]
    assert iterations == 1
    assert pc.is_convex(c6, [0, 1, 2])
    assert not pc.is_convex(c6, [0, 1, 2, 3])
    assert pc.gate(pc.hypercube(3), [0, 1, 2, 3], 7) == 3
    assert pc.gate(c6, [0, 1, 2], 4) is None


def test_median_and_decomposition():
    res = pc.median_or_hyper_median(pc.hypercube(3), 1, 2, 4)
    assert res["kind"] == "median" and res["median"] == 0
    hm = pc.median_or_hyper_median(pc.even_cycle(6), 0, 2, 4)
    assert hm["kind"] == "hyper-median"
    g = pc.gated_amalgam(pc.even_cycle(6), pc.even_cycle(4), [0, 1], [0, 1])
    assert pc.decomposition_leaves(g) == ["C6", "Q2"]
    assert pc.decomposition_leaves(pc.hypercube(3)) == ["Q3"]


def test_transforms_round_trip():
    c6 = pc.even_cycle(6)
    c4 = pc.contract(c6, 0)
    assert c4.n == 4 and c4.m == 4
    expanded = pc.expand(pc.hypercube(1), [0, 1], [0, 1])
    assert expanded.n == 4 and expanded.m == 4  # C4


def test_analyze_and_json():
    rep = pc.analyze(pc.fixture("noMCP"))
    assert rep["netlike"] and not rep["hyperMedian"]
    assert rep["eulerSum"] == 1
    text = pc.to_json(pc.even_cycle(6))
    parsed = json.loads(text)
    assert parsed["vertices"] == 6
    back = pc.from_json(text)
    assert back.n == 6 and back.m == 6


def test_errors_are_typed():
    with pytest.raises(pc.PeanocubeError):
        pc.isometric_dimension(pc.fixture("K23"))
    with pytest.raises(pc.PeanocubeError):
        pc.even_cycle(5)
