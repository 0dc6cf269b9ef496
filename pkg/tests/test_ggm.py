from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cospec.core import build_graph, underlying_graph
from cospec.errors import NotAdmissible, NotAPartition, SizeMismatch
from cospec.ggm import (
    GGMPartition,
    GGMVertexCase,
    build_u,
    classify_rest_vertex,
    difference_sums,
    ggm_switch,
    n_blocks,
    rest_column_image,
    validate_ggm,
    verify_conjugation_ggm,
)
from cospec.search import generate_ggm_instance
from cospec.spectrum import cospectral, graph_char_poly
from oracles import expand
from reference_matrices import (
    SIGNED_GGM_14_POLY,
    SIGNED_GGM_14_SWITCHED_UNDERLYING_POLY,
    SIGNED_GGM_14_UNDERLYING_POLY,
    UNSIGNED_GGM_8_FACTORS,
)

Case = GGMVertexCase


def test_unsigned_fixture(ggm8, ggm8_partition):
    assert ggm8.is_all_positive()
    rep = validate_ggm(ggm8, ggm8_partition)
    assert rep.admissible and rep.ell == -1
    assert rep.cases == {6: Case.FULL_POS_1, 7: Case.EQUAL}
    h = ggm_switch(ggm8, ggm8_partition, rep)
    assert graph_char_poly(ggm8).coeffs == graph_char_poly(h).coeffs == expand(*UNSIGNED_GGM_8_FACTORS)
    assert h.degree(0) == 1 and 1 not in ggm8.degrees()
    assert sorted(h.neighbors(6)) == [3, 4, 5]
    assert sorted(ggm8.neighbors(6)) == [0, 1, 2]
    assert verify_conjugation_ggm(ggm8, ggm8_partition)
    assert difference_sums(ggm8, ggm8_partition) == ([-1] * 3, [-1] * 3)


def test_signed_fixture(ggm14, ggm14_partition):
    rep = validate_ggm(ggm14, ggm14_partition)
    assert rep.admissible and rep.ell == -1 and ggm14_partition.m == 5
    assert rep.cases[10] is Case.FULL_POS_1
    assert rep.cases[13] is Case.FULL_MIXED_21
    h = ggm_switch(ggm14, ggm14_partition, rep)
    assert graph_char_poly(h).coeffs == tuple(reversed(SIGNED_GGM_14_POLY))
    assert verify_conjugation_ggm(ggm14, ggm14_partition)
    assert [h.sign(10, w) for w in range(10)] == [0] * 5 + [1] * 5
    assert [h.sign(13, w) for w in range(10)] == [-ggm14.sign(13, w) for w in range(10)]
    pu = graph_char_poly(underlying_graph(ggm14))
    pu_h = graph_char_poly(underlying_graph(h))
    assert pu.coeffs == tuple(reversed(SIGNED_GGM_14_UNDERLYING_POLY))
    assert pu_h.coeffs == tuple(reversed(SIGNED_GGM_14_SWITCHED_UNDERLYING_POLY))
    assert pu != pu_h


def test_empty_graph_every_partition():
    g = build_graph(5, [])
    p = GGMPartition((0, 1), (2, 3), (4,))
    rep = validate_ggm(g, p)
    assert rep.admissible and rep.ell == 0
    assert rep.cases == {4: Case.EQUAL}
    assert rep.is_trivial() and ggm_switch(g, p) == g
    assert verify_conjugation_ggm(g, p)


def test_partition_errors():
    g = build_graph(5, [])
    with pytest.raises(SizeMismatch):
        validate_ggm(g, GGMPartition((0, 1), (2,), (3, 4)))
    with pytest.raises(SizeMismatch):
        validate_ggm(g, GGMPartition((), (), (0, 1, 2, 3, 4)))
    with pytest.raises(NotAPartition):
        validate_ggm(g, GGMPartition((0, 1), (1, 2), (3, 4)))
    with pytest.raises(NotAPartition):
        validate_ggm(g, GGMPartition((0,), (1,), (2,)))


def test_inadmissible_ell_and_rest():
    # 0 sees V_2 once, 1 sees nothing: side differences -1 and 0
    g = build_graph(5, [(0, 2, 1)])
    rep = validate_ggm(g, GGMPartition((0, 1), (2, 3), (4,)))
    assert not rep.admissible and rep.offenders == (0, 1) and rep.ell is None
    # a single edge from the rest into V_1 matches no pattern
    g = build_graph(5, [(4, 0, 1)])
    rep = validate_ggm(g, GGMPartition((0, 1), (2, 3), (4,)))
    assert not rep.admissible and rep.offenders == (4,)
    with pytest.raises(NotAdmissible):
        ggm_switch(g, GGMPartition((0, 1), (2, 3), (4,)))


def test_u_matrices():
    assert build_u(1).tolist() == [[0, 1], [1, 0]]
    u2 = build_u(2)
    assert u2.sum(axis=1).tolist() == [1, 1, 1, 1]
    assert u2[0, 0] == Fraction(1, 2) and u2[0, 2] == Fraction(1, 2) and u2[0, 1] == Fraction(-1, 2)
    for m in range(1, 6):
        u = build_u(m)
        assert (u == u.T).all()
        assert (u.dot(u) == np.eye(2 * m, dtype=int)).all()
    with pytest.raises(ValueError):
        build_u(0)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_u_action_on_rest_columns(m):
    scaled = build_u(m) * m  # integral, so the check stays exact and fast
    scaled = np.array(scaled.tolist(), dtype=np.int64)
    seen = set()
    for col in product((-1, 0, 1), repeat=2 * m):
        c1, c2 = list(col[:m]), list(col[m:])
        case = classify_rest_vertex(c1, c2)
        if case is None:
            continue
        seen.add(case)
        n1, n2 = rest_column_image(c1, c2, case)
        assert (scaled @ np.array(col)).tolist() == [m * x for x in n1 + n2]
    assert seen == set(Case)


def test_rest_case_examples():
    assert classify_rest_vertex([1, 1], [0, 0]) is Case.FULL_POS_1
    assert classify_rest_vertex([0, 0], [-1, -1]) is Case.FULL_NEG_2
    assert classify_rest_vertex([1, 1], [-1, -1]) is Case.FULL_MIXED_12
    assert classify_rest_vertex([1, 1], [1, 1]) is Case.EQUAL
    assert classify_rest_vertex([1, 0], [0, 0]) is None
    assert rest_column_image([1, 1], [-1, -1], Case.FULL_MIXED_12) == ([-1, -1], [1, 1])


@pytest.mark.parametrize(
    "c1, c2",
    [
        ([0, 0, 0], [0, 0, 0]),
        ([1, -1, 0], [0, 0, 0]),
        ([1, 1, 0], [1, 0, 1]),
        ([-1, 0, -1], [0, -1, -1]),
    ],
)
def test_equal_subcases_are_fixed(c1, c2):
    assert classify_rest_vertex(c1, c2) is Case.EQUAL
    assert rest_column_image(c1, c2, Case.EQUAL) == (c1, c2)


def test_canonical_and_infer():
    p = GGMPartition.infer(6, [4, 3], [0, 1])
    assert p.rest == (2, 5) and p.v1 == (3, 4)
    assert p.canonical() == GGMPartition((0, 1), (3, 4), (2, 5))


@given(st.integers(0, 10_000), st.integers(1, 4), st.integers(0, 4))
@settings(max_examples=40, deadline=None)
def test_generated_instance_properties(seed, m, d):
    g, p = generate_ggm_instance(seed, m=m, d_size=d)
    rep = validate_ggm(g, p)
    assert rep.admissible
    h = ggm_switch(g, p, rep)
    assert cospectral(g, h)
    assert verify_conjugation_ggm(g, p)
    assert ggm_switch(h, p) == g
    assert all(not blk.any() for blk in n_blocks(g, p))
    r1, r2 = difference_sums(g, p)
    assert set(r1) == set(r2) == {rep.ell}


@given(st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_unsigned_reduction(seed):
    g, p = generate_ggm_instance(seed, m=3, d_size=3, sign_bias=1.0)
    assert g.is_all_positive()
    rep = validate_ggm(g, p)
    assert not {Case.FULL_NEG_1, Case.FULL_NEG_2, Case.FULL_MIXED_12, Case.FULL_MIXED_21} & set(rep.cases.values())
    assert ggm_switch(g, p, rep).is_all_positive()
