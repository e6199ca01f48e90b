import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorswap import (
    Coloring,
    Graph,
    Instance,
    InvalidInputError,
    PreconditionError,
    ReconfSequence,
    STAR,
    SwapMove,
    WrongSolverError,
    apply_swap,
    is_proper,
    is_proper_extended,
    is_valid,
    legal_swaps,
    replay,
    route_bijective,
    solve_k_le_2,
)
from colorswap.generators import gen_random_graph, random_proper_coloring

from conftest import brute_swap_legal, path_graph


def test_graph_rejects_self_loops_and_bad_ids():
    with pytest.raises(InvalidInputError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(InvalidInputError):
        Graph.from_edges(2, [(0, 5)])
    with pytest.raises(InvalidInputError):
        Graph(2, (frozenset({1}), frozenset()))  # asymmetric


def test_graph_edges_sorted_and_deduplicated():
    g = Graph.from_edges(3, [(2, 0), (0, 2), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))


def test_is_proper(fig1_graph):
    assert is_proper(fig1_graph, Coloring((1, 2, 3, 3, 1, 2), 3))
    assert is_proper(Graph.from_edges(3, []), Coloring((1, 1, 1), 1))
    assert not is_proper(Graph.from_edges(2, [(0, 1)]), Coloring((2, 2), 2))


def test_is_proper_rejects_star_and_bad_length(fig1_graph):
    with pytest.raises(InvalidInputError):
        is_proper(Graph.from_edges(2, [(0, 1)]), Coloring((STAR, 1), 2))
    with pytest.raises(InvalidInputError):
        is_proper(fig1_graph, Coloring((1, 2), 3))


def test_is_proper_extended():
    edge = Graph.from_edges(2, [(0, 1)])
    assert is_proper_extended(edge, Coloring((STAR, STAR), 1))
    assert not is_proper_extended(edge, Coloring((1, 1), 1))
    triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert is_proper_extended(triangle, Coloring((STAR, STAR, STAR), 1))


def test_coloring_rejects_out_of_range():
    with pytest.raises(InvalidInputError):
        Coloring((4,), 3)
    with pytest.raises(InvalidInputError):
        Coloring((1,), 0)


def test_is_valid(fig1_instance):
    assert is_valid(fig1_instance)
    edge = Graph.from_edges(2, [(0, 1)])
    assert not is_valid(Instance.of(edge, 3, (1, 2), (1, 3)))
    assert is_valid(Instance.of(edge, 1, (STAR, 1), (1, STAR)))


def test_legal_swaps_fig1(fig1_graph, fig1_instance):
    moves = legal_swaps(fig1_graph, fig1_instance.f_s)
    assert SwapMove(4, 5) in moves
    assert moves == sorted(moves)


def test_legal_swaps_edgeless():
    assert legal_swaps(Graph.from_edges(3, []), Coloring((1, 1, 1), 1)) == []


def test_legal_swaps_two_color_path_frozen():
    # Both end swaps and both interior swaps of P4 colored 1212 create a
    # monochromatic edge; check each edge against the raw definition too.
    g = path_graph(4)
    f = Coloring((1, 2, 1, 2), 2)
    assert legal_swaps(g, f) == []
    for u, v in g.edges:
        assert not brute_swap_legal(g, f.colors, u, v)


def test_legal_swaps_requires_proper():
    g = path_graph(2)
    with pytest.raises(PreconditionError):
        legal_swaps(g, Coloring((1, 1), 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 7), st.integers(2, 4), st.booleans())
def test_legal_swaps_matches_definition(seed, n, k, star):
    rng = random.Random(seed)
    g = gen_random_graph(n, 0.5, rng)
    colors = random_proper_coloring(g, k, rng, allow_star=star)
    if colors is None:
        return
    f = Coloring(colors, k)
    expected = [
        SwapMove(u, v) for u, v in g.edges if brute_swap_legal(g, colors, u, v)
    ]
    assert legal_swaps(g, f) == expected


def test_apply_swap_fig1(fig1_graph, fig1_instance):
    f2 = apply_swap(fig1_graph, fig1_instance.f_s, SwapMove(4, 5))
    assert f2.colors == (1, 2, 3, 3, 2, 1)
    assert apply_swap(fig1_graph, f2, SwapMove(4, 5)) == fig1_instance.f_s


def test_apply_swap_extended_edge():
    g = path_graph(2)
    f = apply_swap(g, Coloring((STAR, 1), 1), SwapMove(0, 1))
    assert f.colors == (1, STAR)


def test_apply_swap_rejects_illegal(fig1_graph, fig1_instance):
    with pytest.raises(PreconditionError):
        apply_swap(fig1_graph, fig1_instance.f_s, SwapMove(0, 4))  # non-edge
    g = path_graph(4)
    with pytest.raises(PreconditionError):
        apply_swap(g, Coloring((1, 2, 1, 2), 2), SwapMove(1, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 7), st.integers(2, 4))
def test_swap_involution_and_conservation(seed, n, k):
    rng = random.Random(seed)
    g = gen_random_graph(n, 0.5, rng)
    colors = random_proper_coloring(g, k, rng, allow_star=rng.random() < 0.3)
    if colors is None:
        return
    f = Coloring(colors, k)
    for move in legal_swaps(g, f):
        g2 = apply_swap(g, f, move)
        assert Counter(g2.colors) == Counter(f.colors)
        assert apply_swap(g, g2, move) == f


def test_solve_k_le_2():
    edgeless = Graph.from_edges(3, [])
    assert solve_k_le_2(Instance.of(edgeless, 1, (1, 1, 1), (1, 1, 1)))
    edge = Graph.from_edges(2, [(0, 1)])
    assert solve_k_le_2(Instance.of(edge, 2, (1, 2), (2, 1)))
    # P3 admits no swap with two colors; the only other proper coloring has
    # mismatched counts.
    p3 = path_graph(3)
    assert not solve_k_le_2(Instance.of(p3, 2, (1, 2, 1), (2, 1, 2)))
    assert solve_k_le_2(Instance.of(p3, 2, (1, 2, 1), (1, 2, 1)))
    # Two isolated vertices: globally valid but frozen per component.
    iso = Graph.from_edges(2, [])
    assert not solve_k_le_2(Instance.of(iso, 2, (1, 2), (2, 1)))
    with pytest.raises(WrongSolverError):
        solve_k_le_2(Instance.of(edge, 3, (1, 2), (1, 2)))


def test_route_bijective_trivial_and_edge():
    one = Graph.from_edges(1, [])
    seq = route_bijective(one, Coloring((1,), 1), Coloring((1,), 1))
    assert seq.moves == ()
    edge = Graph.from_edges(2, [(0, 1)])
    seq = route_bijective(edge, Coloring((1, 2), 2), Coloring((2, 1), 2))
    assert len(seq.moves) == 1
    assert replay(edge, seq).colors == (2, 1)


def test_route_bijective_random_n10():
    rng = random.Random(0)
    for _ in range(20):
        n = 10
        while True:
            g = gen_random_graph(n, 0.3, rng)
            if g.is_connected():
                break
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        start = Coloring(tuple(perm), n)
        rng.shuffle(perm)
        target = Coloring(tuple(perm), n)
        seq = route_bijective(g, start, target)
        assert len(seq.moves) <= 200
        assert replay(g, seq) == target


def test_route_bijective_preconditions():
    with pytest.raises(PreconditionError):
        route_bijective(
            Graph.from_edges(2, []), Coloring((1, 2), 2), Coloring((2, 1), 2)
        )
    edge = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(PreconditionError):
        route_bijective(edge, Coloring((1, 2), 3), Coloring((1, 3), 3))
    with pytest.raises(PreconditionError):
        route_bijective(edge, Coloring((1, 1), 2), Coloring((1, 1), 2))


def test_replay_rejects_bad_sequence(fig1_graph, fig1_instance):
    seq = ReconfSequence(fig1_instance.f_s, (SwapMove(0, 1), SwapMove(0, 1), SwapMove(2, 4)))
    with pytest.raises(PreconditionError):
        replay(fig1_graph, seq)


def test_instance_requires_proper_colorings():
    edge = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(InvalidInputError):
        Instance.of(edge, 2, (1, 1), (1, 2))
