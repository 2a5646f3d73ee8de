import random
from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matcrit.constructions import (
    catalog,
    direct_sum,
    fano,
    graphic,
    p_chain,
    parallel_connection,
    mk4,
    uniform,
)
from matcrit.covering import (
    Cover,
    ViolatingSet,
    covering_number,
    covering_number_oracle,
    flats,
    is_coverable,
    max_subset_density,
    rank_table,
)
from matcrit.matroid import SizeLimitError
from oracles import all_flats, brute_rank, random_graph
from strategies import graphs

RANDOM_SEEDS = range(200)


def test_u36_two_coverable():
    res = is_coverable(uniform(3, 6), 2)
    assert isinstance(res, Cover) and res.is_valid_for(uniform(3, 6))
    assert str(res) == "Cover {0,1,2} {3,4,5}"


def test_u25_violating_set_is_ground():
    res = is_coverable(uniform(2, 5), 2)
    assert isinstance(res, ViolatingSet)
    assert res.subset == 0b11111
    assert str(res) == "ViolatingSet {0,1,2,3,4}"


@pytest.mark.parametrize("k", range(1, 6))
def test_u1k_obstruction(k):
    M = uniform(1, k + 1)
    assert isinstance(is_coverable(M, k), ViolatingSet)
    for e in range(M.n):
        assert isinstance(is_coverable(M.delete({e}), k), Cover)


def test_loop_gives_singleton_violation():
    M = graphic(2, [(0, 1), (1, 1)])
    res = is_coverable(M, 3)
    assert isinstance(res, ViolatingSet) and res.subset == 0b10
    with pytest.raises(ValueError):
        covering_number(M)
    with pytest.raises(ValueError):
        covering_number_oracle(M)


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        is_coverable(uniform(1, 1), 0)


def test_covering_number_examples():
    assert covering_number(uniform(2, 5)) == 3
    assert covering_number(fano()) == 3
    assert covering_number(p_chain(4)) == 2
    assert covering_number(uniform(0, 0)) == 0
    assert covering_number(uniform(0, 0)) == covering_number_oracle(uniform(0, 0))


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.name)
def test_oracles_agree_on_catalog(entry):
    M = entry.matroid
    k = covering_number(M)
    assert k == covering_number_oracle(M) == covering_number_oracle(M, flats_only=True)
    assert k == ceil(max_subset_density(M))
    assert isinstance(is_coverable(M, k), Cover)
    if k > 1:
        bad = is_coverable(M, k - 1)
        assert isinstance(bad, ViolatingSet) and bad.is_valid_for(M)


def test_m18_oracle():
    from matcrit.constructions import m18
    assert covering_number_oracle(m18()) == 3


@pytest.mark.parametrize("seed", RANDOM_SEEDS)
def test_random_graphic(seed):
    vertices, edges = random_graph(random.Random(seed), max_edges=14)
    M = graphic(vertices, edges)
    k = covering_number(M)
    assert k == covering_number_oracle(M)
    assert is_coverable(M, k).is_valid_for(M)
    if k > 1:
        assert is_coverable(M, k - 1).is_valid_for(M)


def test_rank_table_matches_brute_force():
    for M in (mk4(), uniform(2, 4), graphic(3, [(0, 1), (1, 1), (1, 2), (0, 2)])):
        table = rank_table(M)
        assert [int(table[A]) for A in range(1 << M.n)] == [brute_rank(M, A) for A in range(1 << M.n)]


def test_rank_table_size_cap():
    with pytest.raises(SizeLimitError):
        rank_table(uniform(1, 21))


def test_flats_enumeration():
    for M in (mk4(), fano(), p_chain(3), graphic(3, [(0, 1), (0, 1), (2, 2)])):
        assert flats(M) == all_flats(M)


def test_max_subset_density_examples():
    assert max_subset_density(uniform(2, 5)) == Fraction(5, 2)
    assert max_subset_density(parallel_connection(uniform(2, 4), 0, mk4(), 0)) == Fraction(9, 4)
    M = direct_sum(uniform(1, 1), uniform(2, 4))
    assert M.density() == Fraction(5, 3)
    assert max_subset_density(M) == 2


def test_contraction_can_raise_covering_number():
    M = uniform(3, 6)
    assert covering_number(M) == 2
    assert covering_number(M.contract({0})) == 3


@settings(max_examples=150, deadline=None)
@given(graphs(max_edges=10, loops=False), st.data())
def test_deletion_never_raises_covering_number(graph, data):
    vertices, edges = graph
    M = graphic(vertices, edges)
    if M.n == 0:
        return
    e = data.draw(st.integers(0, M.n - 1))
    assert covering_number(M.delete({e})) <= covering_number(M)


@settings(max_examples=150, deadline=None)
@given(graphs(max_edges=10, loops=True), st.integers(1, 4))
def test_certificates_always_validate(graph, k):
    M = graphic(*graph)
    assert is_coverable(M, k).is_valid_for(M)


@settings(max_examples=100, deadline=None)
@given(graphs(max_edges=10, loops=False))
def test_covering_number_is_ceiling_of_subset_density(graph):
    M = graphic(*graph)
    if M.r == 0:
        return
    assert covering_number(M) == ceil(max_subset_density(M))
