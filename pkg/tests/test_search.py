import random

import pytest
from hypothesis import given, settings, strategies as st

from cospec.core import build_graph
from cospec.errors import BudgetExceeded, InfeasibleParameters, TooLarge
from cospec.ggm import GGMPartition, validate_ggm
from cospec.gm import GMPartition, gm_switch, validate_gm
from cospec.search import (
    SearchLimits,
    find_ggm_partitions,
    find_gm_partitions,
    generate_ggm_instance,
    generate_gm_instance,
)
from conftest import signed_graphs
from oracles import naive_ggm_pairs, naive_gm_partitions, random_signed_graph


def oracle_gm(g, t_max):
    out = set()
    for pi in naive_gm_partitions(g, t_max):
        rep = validate_gm(g, pi)
        if rep.admissible and not rep.is_trivial(g):
            out.add(pi)
    return out


def oracle_ggm(g):
    out = set()
    for p in naive_ggm_pairs(g.n):
        rep = validate_ggm(g, p)
        if rep.admissible and not rep.is_trivial():
            out.add(p)
    return out


def test_fixture_gm_partition_found(gm8, gm8_partition):
    found = find_gm_partitions(gm8, SearchLimits(t_max=2))
    assert gm8_partition in found
    assert found == sorted(found, key=lambda p: (p.parts, p.d))
    for pi in found:
        assert validate_gm(gm8, pi).admissible
        assert gm_switch(gm8, pi) != gm8


def test_fixture_ggm_partitions_found(ggm8, ggm8_partition, ggm14, ggm14_partition):
    found = find_ggm_partitions(ggm8)
    assert ggm8_partition in found
    assert next(p for p in found if p == ggm8_partition).ell == -1
    assert find_ggm_partitions(ggm14, sizes=[5]) == [ggm14_partition]


def test_tiny_graphs_have_nothing():
    k2 = build_graph(2, [(0, 1, 1)])
    assert find_gm_partitions(k2) == []
    assert find_ggm_partitions(k2) == []
    assert find_gm_partitions(build_graph(4, [])) == []
    assert find_ggm_partitions(build_graph(4, [])) == []
    assert find_gm_partitions(build_graph(0, [])) == []


def test_trivial_partitions_kept_on_request():
    k2 = build_graph(2, [(0, 1, 1)])
    everything = find_gm_partitions(k2, nontrivial=False)
    # {0},{1} as C parts with empty D, {0 | D=1}, {1 | D=0}, {01}
    assert len(everything) == 4
    assert len(find_ggm_partitions(k2, nontrivial=False)) == 1


def test_limits_validated():
    with pytest.raises(ValueError):
        SearchLimits(t_max=0)
    with pytest.raises(ValueError):
        SearchLimits(time_budget=-1)
    with pytest.raises(TooLarge):
        find_gm_partitions(build_graph(5, []), SearchLimits(n_max=4))
    with pytest.raises(TooLarge):
        find_ggm_partitions(build_graph(5, []), SearchLimits(n_max=4))


def test_budget_returns_partial_results(gm8):
    with pytest.raises(BudgetExceeded) as info:
        find_gm_partitions(gm8, SearchLimits(t_max=2, candidate_cap=3))
    assert info.value.truncated
    assert len(info.value.partial) == 3
    with pytest.raises(BudgetExceeded):
        find_ggm_partitions(build_graph(14, []), SearchLimits(time_budget=1e-9), nontrivial=False)


def test_finders_match_naive_oracle_on_random_graphs():
    rng = random.Random(2024)
    for _ in range(15):
        n = rng.randint(1, 6)
        g = random_signed_graph(rng, n, rng.choice((0.3, 0.5, 0.8)), rng.random())
        assert set(find_gm_partitions(g, SearchLimits(t_max=3))) == oracle_gm(g, 3)
        assert set(find_ggm_partitions(g)) == oracle_ggm(g)


@given(signed_graphs(max_n=5))
@settings(max_examples=25, deadline=None)
def test_finders_match_naive_oracle(g):
    assert set(find_gm_partitions(g, SearchLimits(t_max=2))) == oracle_gm(g, 2)
    assert set(find_ggm_partitions(g)) == oracle_ggm(g)


def test_finder_results_are_canonical_and_unique(ggm8):
    found = find_ggm_partitions(ggm8)
    assert len(found) == len(set(found))
    assert all(p.v1[0] < p.v2[0] for p in found)
    assert found == sorted(found, key=lambda p: (p.m, p.v1, p.v2))


def test_gm_generator_determinism_and_validity():
    assert generate_gm_instance(7, part_sizes=(4, 4), d_size=2) == generate_gm_instance(
        7, part_sizes=(4, 4), d_size=2
    )
    g, pi = generate_gm_instance(7, part_sizes=(4, 4), d_size=2)
    assert g.n == 10 and pi.sizes == (4, 4) and len(pi.d) == 2
    assert validate_gm(g, pi).admissible
    g, pi = generate_gm_instance(1, part_sizes=(2,), d_size=1)
    assert g.n == 3 and validate_gm(g, pi).admissible


def test_gm_generator_half_cases():
    for seed in range(20):
        g, pi = generate_gm_instance(seed, part_sizes=(2, 4), d_size=1, require_half=True)
        rep = validate_gm(g, pi)
        assert rep.admissible
        assert any(c.value.startswith("Half") for c in rep.cases.values())
        assert gm_switch(g, pi) != g


@pytest.mark.parametrize(
    "kw",
    [
        dict(part_sizes=(3,), require_half=True),
        dict(part_sizes=(2,), d_size=0, require_half=True),
        dict(part_sizes=(), d_size=1),
        dict(part_sizes=(2, 0)),
        dict(n_parts=2, part_sizes=(2,)),
        dict(edge_density=1.5),
        dict(sign_bias=-0.1),
        dict(d_size=-1),
    ],
)
def test_gm_generator_infeasible(kw):
    with pytest.raises(InfeasibleParameters):
        generate_gm_instance(0, **kw)


def test_ggm_generator_examples():
    g, p = generate_ggm_instance(1, m=1, d_size=1)
    assert g.n == 3 and validate_ggm(g, p).admissible
    g, p = generate_ggm_instance(3, m=3, d_size=2)
    assert p.ell is not None and validate_ggm(g, p).admissible
    assert generate_ggm_instance(9, m=4, d_size=3) == generate_ggm_instance(9, m=4, d_size=3)
    for bad in (dict(m=0), dict(d_size=-2), dict(edge_density=2.0)):
        with pytest.raises(InfeasibleParameters):
            generate_ggm_instance(0, **bad)


@given(st.integers(0, 2**32))
@settings(max_examples=30, deadline=None)
def test_generated_gm_partition_is_found(seed):
    g, pi = generate_gm_instance(seed, part_sizes=(2, 2), d_size=1, require_half=True)
    assert pi.canonical() in find_gm_partitions(g, SearchLimits(t_max=2))


@given(st.integers(0, 2**32))
@settings(max_examples=30, deadline=None)
def test_generated_ggm_partition_is_found(seed):
    g, p = generate_ggm_instance(seed, m=2, d_size=2)
    if not validate_ggm(g, p).is_trivial():
        assert p.canonical() in find_ggm_partitions(g, sizes=[2])


def test_ggm_partition_canonical_equality():
    a = GGMPartition((3, 4), (0, 1), (2,))
    assert a.canonical() == GGMPartition((0, 1), (3, 4), (2,))
    assert GMPartition(((1, 0),), (2,)) == GMPartition(((0, 1),), (2,))
