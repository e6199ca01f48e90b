"""Seeded instance generators for the CLI and the test harness."""

from __future__ import annotations

import random
from collections import Counter

from .cographs import JOIN, UNION, Cotree, CotreeLeaf, CotreeNode, cotree_to_graph
from .core import STAR, Coloring, Graph, Instance
from .errors import InvalidInputError
from .reductions import TokenSlidingInstance

VALID_PAIR_TRIES = 500


def gen_path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_cotree(n: int, rng: random.Random, base: int = 0) -> Cotree:
    """A random binary cotree over leaves base..base+n-1."""
    if n < 1:
        raise InvalidInputError("need at least one leaf")
    if n == 1:
        return CotreeLeaf(base)
    left = rng.randint(1, n - 1)
    return CotreeNode(
        rng.choice((UNION, JOIN)),
        random_cotree(left, rng, base),
        random_cotree(n - left, rng, base + left),
    )


def gen_cograph(n: int, rng: random.Random) -> tuple[Graph, Cotree]:
    tree = random_cotree(n, rng)
    return cotree_to_graph(tree, n), tree


def gen_split_graph(n: int, rng: random.Random, max_clique: int | None = None) -> Graph:
    """Clique on a random prefix, independent rest, random cross edges."""
    if n == 0:
        return Graph.from_edges(0, [])
    c = rng.randint(1, min(n, max_clique) if max_clique else n)
    edges = [(u, v) for u in range(c) for v in range(u + 1, c)]
    for v in range(c, n):
        edges += [(u, v) for u in range(c) if rng.random() < 0.5]
    return Graph.from_edges(n, edges)


def random_proper_coloring(
    graph: Graph, k: int, rng: random.Random, allow_star: bool = False
) -> tuple[int, ...] | None:
    """Randomized-order backtracking; None when no proper k-coloring exists."""
    n = graph.n
    order = list(range(n))
    rng.shuffle(order)
    pos = {v: i for i, v in enumerate(order)}
    colors: dict[int, int] = {}
    palette = list(range(1, k + 1)) + ([STAR] if allow_star else [])

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        options = palette[:]
        rng.shuffle(options)
        for c in options:
            ok = all(
                colors[w] != c or (c == STAR)
                for w in graph.adj[v]
                if pos[w] < i
            )
            if ok:
                colors[v] = c
                if extend(i + 1):
                    return True
                del colors[v]
        return False

    if not extend(0):
        return None
    return tuple(colors[v] for v in range(n))


def random_instance(
    graph: Graph,
    k: int,
    rng: random.Random,
    force_valid: bool = True,
    allow_star: bool = False,
) -> Instance | None:
    """A random instance on graph; None when k admits no proper coloring.

    With force_valid, rejection-samples the target until the per-color counts
    match the start's, falling back to an identical pair.
    """
    fs = random_proper_coloring(graph, k, rng, allow_star)
    if fs is None:
        return None
    ft = None
    for _ in range(VALID_PAIR_TRIES if force_valid else 1):
        cand = random_proper_coloring(graph, k, rng, allow_star)
        if cand is None:
            break
        if not force_valid or Counter(cand) == Counter(fs):
            ft = cand
            break
    if ft is None:
        ft = fs
    return Instance.of(graph, k, fs, ft)


def random_independent_set(
    graph: Graph, size: int, rng: random.Random, tries: int = 200
) -> frozenset[int] | None:
    for _ in range(tries):
        picked: set[int] = set()
        order = list(range(graph.n))
        rng.shuffle(order)
        for v in order:
            if len(picked) == size:
                break
            if not any(w in picked for w in graph.adj[v]):
                picked.add(v)
        if len(picked) == size:
            return frozenset(picked)
    return None


def random_ts_instance(
    graph: Graph, tokens: int, rng: random.Random, sides: tuple[int, ...] | None = None
) -> TokenSlidingInstance | None:
    i_s = random_independent_set(graph, tokens, rng)
    i_t = random_independent_set(graph, tokens, rng)
    if i_s is None or i_t is None:
        return None
    return TokenSlidingInstance(graph, i_s, i_t, sides)


def greedy_color_count(graph: Graph) -> int:
    """Colors used by first-fit on ascending vertex ids (an upper bound for k)."""
    colors: dict[int, int] = {}
    used = 0
    for v in range(graph.n):
        taken = {colors[w] for w in graph.adj[v] if w in colors}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
        used = max(used, c)
    return max(used, 1)
