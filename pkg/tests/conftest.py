"""Shared fixtures and independent brute-force helpers for the test suite."""

from __future__ import annotations

import itertools
from collections import deque

import pytest

from colorswap import Coloring, Graph, Instance, NCLMachine, STAR


@pytest.fixture
def fig1_graph() -> Graph:
    # 6-cycle 0-1-3-5-4-2-0 plus chords 0-3 and 2-5.
    return Graph.from_edges(6, [(0, 1), (1, 3), (3, 5), (5, 4), (4, 2), (2, 0), (0, 3), (2, 5)])


@pytest.fixture
def fig1_instance(fig1_graph) -> Instance:
    return Instance.of(fig1_graph, 3, (1, 2, 3, 3, 1, 2), (1, 3, 2, 2, 3, 1))


@pytest.fixture
def example_machine() -> NCLMachine:
    # Three or-vertices (0,1,2) and three and-vertices (3,4,5); the weight-2
    # edges triangle the or side, the weight-1 edges triangle the and side.
    return NCLMachine(
        ("or", "or", "or", "and", "and", "and"),
        (
            (0, 1, 2),
            (2, 0, 2),
            (3, 0, 2),
            (1, 2, 2),
            (1, 4, 2),
            (2, 5, 2),
            (4, 3, 1),
            (5, 3, 1),
            (5, 4, 1),
        ),
    )


@pytest.fixture
def example_configuration() -> tuple[int, ...]:
    return (1, 0, 0, 2, 4, 5, 3, 3, 4)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def all_graphs(n: int):
    """Every labeled simple graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(2 ** len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def brute_swap_legal(graph: Graph, colors: tuple[int, ...], u: int, v: int) -> bool:
    """Swap legality straight from the definition: exchange, then re-check
    every edge of the whole graph under the extended rule."""
    if colors[u] == colors[v]:
        return False
    swapped = list(colors)
    swapped[u], swapped[v] = swapped[v], swapped[u]
    return all(
        swapped[a] != swapped[b] or swapped[a] == STAR for a, b in graph.edges
    )


def swap_closure(graph: Graph, starts: list[tuple[int, ...]], k: int) -> set[tuple[int, ...]]:
    """All colorings reachable from the given ones by legal swaps."""
    from colorswap import legal_swaps

    seen = set(starts)
    queue = deque(starts)
    while queue:
        c = queue.popleft()
        for mv in legal_swaps(graph, Coloring(c, k)):
            nxt = list(c)
            nxt[mv.u], nxt[mv.v] = nxt[mv.v], nxt[mv.u]
            t = tuple(nxt)
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def is_chordal(graph: Graph) -> bool:
    """Simplicial elimination: repeatedly delete a vertex whose neighborhood
    is a clique; succeeds on exactly the chordal graphs."""
    alive = set(range(graph.n))
    adj = {v: set(graph.adj[v]) for v in range(graph.n)}
    while alive:
        for v in sorted(alive):
            nbrs = list(adj[v])
            if all(b in adj[a] for i, a in enumerate(nbrs) for b in nbrs[i + 1 :]):
                alive.remove(v)
                for w in nbrs:
                    adj[w].discard(v)
                break
        else:
            return False
    return True


def string_swap_closure(s: str) -> set[str]:
    """All coloring strings reachable from s via single adjacent swaps."""
    from colorswap import is_swappable
    from colorswap.paths import swap_chars

    seen = {s}
    queue = deque([s])
    while queue:
        cur = queue.popleft()
        for i in range(len(cur) - 1):
            if is_swappable(cur, i):
                nxt = swap_chars(cur, i)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return seen


def all_coloring_strings(n: int) -> list[str]:
    """Every proper 3-coloring of the n-path, as strings."""
    if n == 0:
        return [""]
    out = [str(c) for c in (1, 2, 3)]
    for _ in range(n - 1):
        out = [s + str(c) for s in out for c in (1, 2, 3) if s[-1] != str(c)]
    return out
