import random
from collections import Counter

import pytest

from colorswap import (
    BudgetExceededError,
    Coloring,
    Graph,
    Instance,
    InvalidInputError,
    PreconditionError,
    STAR,
    SearchBudget,
    SVRInstance,
    TokenSlidingInstance,
    crcs_components,
    crcs_reachable,
    ecrcs_reachable,
    enumerate_proper_colorings,
    legal_swaps,
    ncl_reachable,
    replay,
    solve_crcs_cograph,
    svr_reachable,
    ts_reachable,
)
from colorswap.generators import gen_random_graph, random_instance

from conftest import path_graph


def test_fig1_yes_with_three_move_witness(fig1_graph, fig1_instance):
    d = crcs_reachable(fig1_instance)
    assert d.is_yes
    # f_s and f_t differ on five vertices and one swap changes two, so three
    # moves is optimal; BFS returns a shortest witness.
    assert len(d.witness.moves) == 3
    assert replay(fig1_graph, d.witness) == fig1_instance.f_t


def test_identity_is_yes_with_empty_witness(fig1_graph, fig1_instance):
    inst = Instance(fig1_graph, 3, fig1_instance.f_s, fig1_instance.f_s)
    d = crcs_reachable(inst)
    assert d.is_yes and d.witness.moves == ()


def test_rigid_alternating_path_is_no():
    g = path_graph(6)
    d = crcs_reachable(Instance.of(g, 3, (1, 2, 1, 2, 1, 2), (2, 1, 2, 1, 2, 1)))
    assert d.is_no
    # both endpoints are rigid: component size 1 each
    assert d.states_explored == 1


def test_invalid_instance_short_circuits():
    g = path_graph(2)
    d = crcs_reachable(Instance.of(g, 3, (1, 2), (1, 3)))
    assert d.is_no and d.states_explored == 0


def test_crcs_rejects_star_instances():
    g = path_graph(2)
    inst = Instance.of(g, 2, (STAR, 1), (1, STAR))
    with pytest.raises(InvalidInputError):
        crcs_reachable(inst)
    assert ecrcs_reachable(inst).is_yes


def test_outcome_symmetry_and_witness_determinism():
    rng = random.Random(123)
    for _ in range(40):
        g = gen_random_graph(rng.randint(2, 6), 0.5, rng)
        inst = random_instance(g, rng.randint(2, 4), rng)
        if inst is None:
            continue
        fwd = crcs_reachable(inst)
        rev = crcs_reachable(Instance(g, inst.k, inst.f_t, inst.f_s))
        assert fwd.outcome == rev.outcome
        assert crcs_reachable(inst) == fwd


def test_every_witness_state_conserves_counts():
    rng = random.Random(5)
    for _ in range(30):
        g = gen_random_graph(rng.randint(2, 6), 0.5, rng)
        inst = random_instance(g, 3, rng)
        if inst is None:
            continue
        d = crcs_reachable(inst)
        if not d.is_yes:
            continue
        f = d.witness.start
        for move in d.witness.moves:
            assert move in legal_swaps(g, f)
            nxt = list(f.colors)
            nxt[move.u], nxt[move.v] = nxt[move.v], nxt[move.u]
            f = Coloring(tuple(nxt), inst.k)
            assert Counter(f.colors) == Counter(inst.f_s.colors)
        assert f == inst.f_t


def test_ecrcs_star_examples():
    edge = path_graph(2)
    d = ecrcs_reachable(Instance.of(edge, 1, (STAR, 1), (1, STAR)))
    assert d.is_yes and len(d.witness.moves) == 1
    d = ecrcs_reachable(Instance.of(edge, 1, (STAR, STAR), (STAR, STAR)))
    assert d.is_yes and d.witness.moves == ()


def test_ecrcs_matches_cograph_solver_on_star():
    # K{1,2}: join of the center with two leaves.
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    rng = random.Random(77)
    palette = [1, 2, 3, STAR]
    cases = 0
    while cases < 200:
        fs = tuple(rng.choice(palette) for _ in range(3))
        ft = tuple(rng.choice(palette) for _ in range(3))
        try:
            inst = Instance.of(g, 3, fs, ft)
        except InvalidInputError:
            continue
        assert ecrcs_reachable(inst).is_yes == solve_crcs_cograph(inst)
        cases += 1


def test_ts_examples():
    p3 = path_graph(3)
    assert ts_reachable(TokenSlidingInstance(p3, frozenset({0}), frozenset({0}))).is_yes
    d = ts_reachable(TokenSlidingInstance(p3, frozenset({0}), frozenset({2})))
    assert d.is_yes and d.witness == ((0, 1), (1, 2))
    k2 = path_graph(2)
    d = ts_reachable(TokenSlidingInstance(k2, frozenset({0}), frozenset({1})))
    assert d.is_yes and len(d.witness) == 1


def test_ts_rejects_dependent_sets():
    with pytest.raises(PreconditionError):
        TokenSlidingInstance(path_graph(2), frozenset({0, 1}), frozenset({0, 1}))


def test_svr_examples():
    g1 = Graph.from_edges(1, [])
    same = SVRInstance(g1, 2, Coloring((1,), 2), Coloring((1,), 2))
    assert svr_reachable(same).is_yes
    d = svr_reachable(SVRInstance(g1, 2, Coloring((1,), 2), Coloring((2,), 2)))
    assert d.is_yes and d.witness == ((0, 2),)
    k3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    d = svr_reachable(SVRInstance(k3, 3, Coloring((1, 2, 3), 3), Coloring((2, 1, 3), 3)))
    assert d.is_no and d.states_explored == 1


def test_ncl_identity_and_flip(example_machine, example_configuration):
    d = ncl_reachable(example_machine, example_configuration, example_configuration)
    assert d.is_yes and d.witness == ()
    flipped = list(example_configuration)
    flipped[1] = 2  # edge 1 currently heads into 0; vertex 0 keeps in-weight 2
    d = ncl_reachable(example_machine, example_configuration, tuple(flipped))
    assert d.is_yes and d.witness == (1,)


def test_ncl_rejects_invalid_inputs(example_machine, example_configuration):
    with pytest.raises(InvalidInputError):
        # a single or-vertex cannot have degree 3
        from colorswap import NCLMachine

        NCLMachine(("or",), ())
    bad = list(example_configuration)
    bad[0] = 0  # vertex 1 drops to in-weight 0
    with pytest.raises(PreconditionError):
        ncl_reachable(example_machine, tuple(bad), example_configuration)


def test_components_examples():
    comps = crcs_components(path_graph(2), 2)
    assert comps == [((1, 2), (2, 1))]
    comps = crcs_components(path_graph(3), 2)
    assert comps == [((1, 2, 1),), ((2, 1, 2),)]


def test_components_state_count_matches_closed_form():
    for n in range(1, 8):
        comps = crcs_components(path_graph(n), 3)
        assert sum(len(c) for c in comps) == 3 * 2 ** (n - 1)


def test_components_budget_overflow():
    with pytest.raises(BudgetExceededError):
        crcs_components(path_graph(8), 3, SearchBudget(max_states=10))


def test_enumeration_is_lexicographic():
    cols = enumerate_proper_colorings(path_graph(2), 2)
    assert cols == [(1, 2), (2, 1)]


def test_overflow_never_reported_as_no(fig1_instance):
    d = crcs_reachable(fig1_instance, SearchBudget(max_states=2))
    assert d.is_overflow and d.states_explored == 2
