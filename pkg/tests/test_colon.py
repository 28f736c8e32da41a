import random

import pytest

from edgedepth.colon import (EdgeProduct, all_factor_sequences, banerjee_colon_graph,
                             banerjee_colon_ideal, banerjee_colon_squares, colon_factorization_check,
                             consecutive_factors, cycle_colon_graph, edge_product_from_indices,
                             even_connected, monomial_colon, neighborhood_odd_cycle_free,
                             path_colon_graph)
from edgedepth.errors import InvalidArgument, PreconditionFailed
from edgedepth.graph import make_cycle, make_path, make_starlike, random_graph
from edgedepth.monomial import equals

P5, C6 = make_path(5), make_cycle(6)


def test_even_connected_examples():
    ep = EdgeProduct(P5, ((2, 3),))
    assert even_connected(ep, 1, 4)
    assert not even_connected(ep, 1, 3)
    empty = EdgeProduct(C6)
    assert even_connected(empty, 1, 2)
    assert not even_connected(empty, 1, 3)


def test_factor_must_be_an_edge():
    with pytest.raises(InvalidArgument):
        EdgeProduct(P5, ((1, 3),))


def test_banerjee_graph_examples():
    assert banerjee_colon_graph(EdgeProduct(P5, ((2, 3),))) == P5.add_edges([(1, 4)])
    assert banerjee_colon_graph(EdgeProduct(C6, ((2, 3),))) == C6.add_edges([(1, 4)])
    assert banerjee_colon_graph(EdgeProduct(C6)) == C6


def test_odd_cycle_gives_squares():
    # on a triangle the walk 3-1-2-3 through the factor x1x2 makes x3^2 a generator
    ep = EdgeProduct(make_cycle(3), ((1, 2),))
    assert banerjee_colon_squares(ep) == frozenset({3})
    assert equals(banerjee_colon_ideal(ep), monomial_colon(ep))


def test_path_colon_graph_examples():
    assert path_colon_graph(5, 2) == P5.add_edges([(1, 4)])
    K = path_colon_graph(6, 4)
    odds, evens = {1, 3, 5}, {2, 4, 6}
    assert set(K.edge_list()) == {tuple(sorted((a, b))) for a in odds for b in evens}
    assert path_colon_graph(7, 3) == make_path(7).add_edges([(1, 4), (2, 5)])
    with pytest.raises(InvalidArgument):
        path_colon_graph(5, 4)
    with pytest.raises(InvalidArgument):
        path_colon_graph(5, 1)


def test_cycle_colon_graph_examples():
    assert cycle_colon_graph(6, 2) == C6.add_edges([(1, 4)])
    for n in (6, 8):
        K = cycle_colon_graph(n, n - 2)
        assert K.n_edges == (n // 2) ** 2
        assert all((u + v) % 2 for u, v in K.edge_list())
    assert cycle_colon_graph(7, 3) == make_cycle(7).add_edges([(1, 4), (2, 5)])


@pytest.mark.parametrize("n", range(4, 10))
def test_rule_graphs_match_banerjee(n):
    for t in range(2, n - 1):
        assert path_colon_graph(n, t) == banerjee_colon_graph(consecutive_factors(make_path(n), 2, t))
        assert cycle_colon_graph(n, t) == banerjee_colon_graph(consecutive_factors(make_cycle(n), 2, t))


@pytest.mark.parametrize("G", [make_path(5), make_cycle(5), make_starlike((1, 2, 2))],
                         ids=["P5", "C5", "T122"])
def test_banerjee_soundness_up_to_t4(G):
    for length in range(0, 4):
        for ep in all_factor_sequences(G, length):
            assert equals(banerjee_colon_ideal(ep), monomial_colon(ep)), ep.factors


def test_banerjee_soundness_random_graphs():
    rng = random.Random(5)
    for _ in range(25):
        G = random_graph(rng.randint(3, 6), 0.5, rng)
        if not G.edges:
            continue
        for ep in all_factor_sequences(G, rng.randint(1, 2)):
            banerjee_colon_graph(ep, check=True)
            assert equals(banerjee_colon_ideal(ep), monomial_colon(ep))


def test_neighborhood_odd_cycle_free_examples():
    P8 = make_path(8)
    assert neighborhood_odd_cycle_free(EdgeProduct(P8, ((3, 4), (5, 6))))
    assert neighborhood_odd_cycle_free(EdgeProduct(make_cycle(8), ((1, 2),)))
    # N[{1,2}] in C5 is {5,1,2,3}: an induced path, so the check passes
    assert neighborhood_odd_cycle_free(EdgeProduct(make_cycle(5), ((1, 2),)))
    assert not neighborhood_odd_cycle_free(EdgeProduct(make_cycle(5), ((1, 2), (3, 4))))
    assert not neighborhood_odd_cycle_free(EdgeProduct(make_cycle(3), ((1, 2),)))


def test_factorization_examples():
    assert colon_factorization_check(EdgeProduct(make_path(6), ((2, 3),)), (4, 5))
    assert colon_factorization_check(EdgeProduct(make_cycle(8), ((2, 3),)), (4, 5))
    assert colon_factorization_check(EdgeProduct(make_path(4)), (2, 3))


def test_factorization_preconditions():
    with pytest.raises(PreconditionFailed):
        colon_factorization_check(EdgeProduct(make_path(6), ((2, 3),)), (2, 3))
    with pytest.raises(PreconditionFailed):
        colon_factorization_check(EdgeProduct(make_cycle(5), ((1, 2),)), (3, 4))


def test_edge_indices():
    ep = edge_product_from_indices(make_cycle(6), [2, 6], True)
    assert ep.factors == ((2, 3), (1, 6))
    T = make_starlike((1, 1, 1))
    ep = edge_product_from_indices(T, [1], False)
    assert ep.factors == (T.edge_list()[0],)
    with pytest.raises(InvalidArgument):
        edge_product_from_indices(T, [4], False)


def test_edge_product_accessors():
    ep = EdgeProduct(P5, ((2, 3), (3, 4), (2, 3)))
    assert ep.t == 4
    assert ep.support == frozenset({2, 3, 4})
    assert ep.exponents()[1:] == (0, 2, 3, 1, 0)
    assert str(ep.monomial()) == "x2^2*x3^3*x4"
