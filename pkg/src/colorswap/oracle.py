"""Exhaustive ground-truth reachability over the reconfiguration spaces.

Breadth-first searches with set-based deduplication, used to verify the
polynomial solvers and the instance constructions.  Witnesses are shortest
and deterministic (neighbors are generated in a fixed order).
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Callable, Iterable

from .core import (
    Coloring,
    Graph,
    Instance,
    ReconfSequence,
    SwapMove,
    is_valid,
    swap_is_proper,
)
from .errors import BudgetExceededError, InvalidInputError, PreconditionError
from .reductions import NCLMachine, SVRInstance, TokenSlidingInstance

YES = "YES"
NO = "NO"
OVERFLOW = "OVERFLOW"


@dataclass(frozen=True)
class SearchBudget:
    max_states: int = 10_000_000
    max_moves: int = 10_000_000

    def __post_init__(self):
        if self.max_states < 1 or self.max_moves < 1:
            raise InvalidInputError("budget bounds must be positive")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class Decision:
    """Outcome of a reachability search.

    ``witness`` is a ReconfSequence for the coloring searches and a tuple of
    problem-specific moves for the token-sliding / recoloring / constraint-
    logic searches; it is None unless the outcome is YES.  OVERFLOW means the
    budget was exhausted before the component was, and is never conflated
    with NO.
    """

    outcome: str
    witness: object | None = None
    states_explored: int = 0

    @property
    def is_yes(self) -> bool:
        return self.outcome == YES

    @property
    def is_no(self) -> bool:
        return self.outcome == NO

    @property
    def is_overflow(self) -> bool:
        return self.outcome == OVERFLOW


def _bfs(
    start,
    target,
    key: Callable,
    neighbors: Callable,
    budget: SearchBudget,
) -> tuple[str, tuple | None, int]:
    """Shortest-path BFS from start to target over neighbors(state).

    neighbors yields (move, next_state) pairs in a deterministic order.
    Returns (outcome, moves, states_explored).
    """
    start_key, target_key = key(start), key(target)
    if start_key == target_key:
        return YES, (), 1
    parents: dict = {start_key: None}
    queue = deque([(start, start_key, 0)])
    truncated = False
    while queue:
        state, state_key, depth = queue.popleft()
        if depth >= budget.max_moves:
            truncated = True
            continue
        for move, nxt in neighbors(state):
            nxt_key = key(nxt)
            if nxt_key in parents:
                continue
            if len(parents) >= budget.max_states:
                return OVERFLOW, None, len(parents)
            parents[nxt_key] = (state_key, move)
            if nxt_key == target_key:
                moves = []
                k = nxt_key
                while parents[k] is not None:
                    k, move = parents[k]
                    moves.append(move)
                moves.reverse()
                return YES, tuple(moves), len(parents)
            queue.append((nxt, nxt_key, depth + 1))
    if truncated:
        return OVERFLOW, None, len(parents)
    return NO, None, len(parents)


def _coloring_key(colors: tuple[int, ...], k: int):
    # Colors fit in a byte up to k = 255; bytes keys keep the visited set lean.
    return bytes(colors) if k <= 255 else colors


def _swap_neighbors(graph: Graph) -> Callable:
    edges = graph.edges

    def neighbors(colors: tuple[int, ...]):
        for u, v in edges:
            if swap_is_proper(graph, colors, u, v):
                nxt = list(colors)
                nxt[u], nxt[v] = nxt[v], nxt[u]
                yield SwapMove(u, v), tuple(nxt)

    return neighbors


def _coloring_reachable(instance: Instance, budget: SearchBudget) -> Decision:
    if not is_valid(instance):
        return Decision(NO, None, 0)
    k = instance.k
    outcome, moves, explored = _bfs(
        instance.f_s.colors,
        instance.f_t.colors,
        lambda c: _coloring_key(c, k),
        _swap_neighbors(instance.graph),
        budget,
    )
    witness = ReconfSequence(instance.f_s, moves) if outcome == YES else None
    return Decision(outcome, witness, explored)


def crcs_reachable(instance: Instance, budget: SearchBudget = DEFAULT_BUDGET) -> Decision:
    """BFS reachability for plain instances; invalid instances are NO outright."""
    if instance.extended:
        raise InvalidInputError("instance uses *; use ecrcs_reachable")
    return _coloring_reachable(instance, budget)


def ecrcs_reachable(instance: Instance, budget: SearchBudget = DEFAULT_BUDGET) -> Decision:
    """BFS reachability with the extended edge rule (shared ``*`` allowed)."""
    return _coloring_reachable(instance, budget)


def ts_reachable(ts: TokenSlidingInstance, budget: SearchBudget = DEFAULT_BUDGET) -> Decision:
    """Token sliding: move one token along an edge, keeping the set independent.

    Witness moves are (from_vertex, to_vertex) slides.
    """
    graph = ts.graph

    def neighbors(tokens: frozenset[int]):
        for v in sorted(tokens):
            for w in sorted(graph.adj[v]):
                if w in tokens:
                    continue
                if any(x != v and x in tokens for x in graph.adj[w]):
                    continue
                yield (v, w), tokens - {v} | {w}

    outcome, moves, explored = _bfs(
        ts.i_s, ts.i_t, lambda s: tuple(sorted(s)), neighbors, budget
    )
    return Decision(outcome, moves, explored)


def svr_reachable(svr: SVRInstance, budget: SearchBudget = DEFAULT_BUDGET) -> Decision:
    """Single-vertex recoloring reachability; witness moves are (vertex, color)."""
    graph, k = svr.graph, svr.k

    def neighbors(colors: tuple[int, ...]):
        for v in range(graph.n):
            taken = {colors[w] for w in graph.adj[v]}
            for c in range(1, k + 1):
                if c != colors[v] and c not in taken:
                    nxt = list(colors)
                    nxt[v] = c
                    yield (v, c), tuple(nxt)

    outcome, moves, explored = _bfs(
        svr.g_s.colors,
        svr.g_t.colors,
        lambda c: _coloring_key(c, k),
        neighbors,
        budget,
    )
    return Decision(outcome, moves, explored)


def ncl_reachable(
    machine: NCLMachine,
    c_s: tuple[int, ...],
    c_t: tuple[int, ...],
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Decision:
    """Constraint-logic reachability over single-edge flips; witness moves are edge ids."""
    machine.validate_configuration(c_s)
    machine.validate_configuration(c_t)
    weights = [w for _, _, w in machine.edges]
    ends = [(u, v) for u, v, _ in machine.edges]

    def neighbors(heads: tuple[int, ...]):
        inw = machine.in_weights(heads)
        for e, (u, v) in enumerate(ends):
            old = heads[e]
            new = u if old == v else v
            # Flipping e only lowers the in-weight at the old head.
            if inw[old] - weights[e] >= 2:
                nxt = list(heads)
                nxt[e] = new
                yield e, tuple(nxt)

    outcome, moves, explored = _bfs(c_s, c_t, lambda h: h, neighbors, budget)
    return Decision(outcome, moves, explored)


def enumerate_proper_colorings(
    graph: Graph, k: int, limit: int | None = None
) -> list[tuple[int, ...]]:
    """All proper k-colorings by backtracking, in lexicographic order."""
    n = graph.n
    out: list[tuple[int, ...]] = []
    colors = [0] * n

    def extend(v: int):
        if v == n:
            out.append(tuple(colors))
            if limit is not None and len(out) > limit:
                raise BudgetExceededError(
                    f"more than {limit} proper colorings"
                )
            return
        taken = {colors[w] for w in graph.adj[v] if w < v}
        for c in range(1, k + 1):
            if c not in taken:
                colors[v] = c
                extend(v + 1)
        colors[v] = 0

    if k >= 1:
        extend(0)
    return out


def crcs_components(
    graph: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET
) -> list[tuple[tuple[int, ...], ...]]:
    """Partition of all proper k-colorings into swap-reachability components.

    Each component is a sorted tuple of color tuples; components are ordered
    by their smallest member.  Raises BudgetExceededError if the number of
    proper colorings exceeds the budget.
    """
    all_colorings = enumerate_proper_colorings(graph, k, limit=budget.max_states)
    index = {c: i for i, c in enumerate(all_colorings)}
    parent = list(range(len(all_colorings)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    neighbors = _swap_neighbors(graph)
    for c, i in index.items():
        for _, nxt in neighbors(c):
            ri, rj = find(i), find(index[nxt])
            if ri != rj:
                parent[ri] = rj

    groups: dict[int, list[tuple[int, ...]]] = {}
    for c, i in index.items():
        groups.setdefault(find(i), []).append(c)
    return sorted(tuple(sorted(g)) for g in groups.values())
