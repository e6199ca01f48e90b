"""Graphs, colorings, swap moves, and the basic decision helpers.

Colors are the integers 1..k.  The flexible color ``*`` (allowed to repeat
across an edge) is represented by the sentinel ``STAR = 0`` and serialized
as the character ``*``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import InvalidInputError, PreconditionError, WrongSolverError

STAR = 0


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1 with frozen adjacency sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InvalidInputError("adjacency length must equal vertex count")
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise InvalidInputError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise InvalidInputError(f"self-loop at {u}")
                if u not in self.adj[v]:
                    raise InvalidInputError(f"asymmetric adjacency at {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidInputError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted."""
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def complement(self) -> "Graph":
        return Graph(
            self.n,
            tuple(
                frozenset(v for v in range(self.n) if v != u and v not in self.adj[u])
                for u in range(self.n)
            ),
        )

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; vertex i of the result is sorted(vertices)[i]."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            tuple(frozenset(index[w] for w in self.adj[v] if w in index) for v in keep),
        )

    def is_independent_set(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(not self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])

    def bipartition(self) -> tuple[int, ...] | None:
        """A 0/1 side per vertex with every edge crossing, or None.

        Deterministic: the smallest vertex of each component gets side 0.
        """
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] != -1:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if side[w] == -1:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return None
        return tuple(side)


@dataclass(frozen=True)
class Coloring:
    """A map vertex -> color, stored as a tuple; entry STAR is the flexible color."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidInputError("k must be positive")
        for c in self.colors:
            if c != STAR and not 1 <= c <= self.k:
                raise InvalidInputError(f"color {c} out of range [1..{self.k}]")

    @classmethod
    def of(cls, colors: Iterable[int], k: int) -> "Coloring":
        return cls(tuple(colors), k)

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def extended(self) -> bool:
        return STAR in self.colors

    def counts(self) -> Counter:
        return Counter(self.colors)


class SwapMove(NamedTuple):
    """Exchange the colors of the endpoints of one edge."""

    u: int
    v: int


@dataclass(frozen=True)
class ReconfSequence:
    """A start coloring plus an ordered list of swaps to replay from it."""

    start: Coloring
    moves: tuple[SwapMove, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)


def _compatible(a: int, b: int) -> bool:
    # Extended edge rule: endpoints differ, or both carry the flexible color.
    return a != b or a == STAR


def _check_length(graph: Graph, f: Coloring) -> None:
    if len(f.colors) != graph.n:
        raise InvalidInputError(
            f"coloring length {len(f.colors)} != vertex count {graph.n}"
        )


def is_proper(graph: Graph, f: Coloring) -> bool:
    """True iff every edge has differently colored endpoints (no ``*`` allowed)."""
    _check_length(graph, f)
    if f.extended:
        raise InvalidInputError("plain properness is undefined for colorings with *")
    return all(f.colors[u] != f.colors[v] for u, v in graph.edges)


def is_proper_extended(graph: Graph, f: Coloring) -> bool:
    """True iff every edge has distinct endpoint colors or both endpoints are ``*``."""
    _check_length(graph, f)
    return all(_compatible(f.colors[u], f.colors[v]) for u, v in graph.edges)


@dataclass(frozen=True)
class Instance:
    """A reconfiguration question: transform f_s into f_t on graph with k colors.

    Construction validates both colorings; ``extended`` tags instances whose
    colorings use the flexible color.
    """

    graph: Graph
    k: int
    f_s: Coloring
    f_t: Coloring

    def __post_init__(self):
        if self.f_s.k != self.k or self.f_t.k != self.k:
            raise InvalidInputError("coloring k does not match instance k")
        if not is_proper_extended(self.graph, self.f_s):
            raise InvalidInputError("f_s is not a proper coloring")
        if not is_proper_extended(self.graph, self.f_t):
            raise InvalidInputError("f_t is not a proper coloring")

    @property
    def extended(self) -> bool:
        return self.f_s.extended or self.f_t.extended

    @classmethod
    def of(cls, graph: Graph, k: int, f_s: Iterable[int], f_t: Iterable[int]) -> "Instance":
        return cls(graph, k, Coloring.of(f_s, k), Coloring.of(f_t, k))


def is_valid(instance: Instance) -> bool:
    """True iff every color (including ``*``) is used equally often by f_s and f_t.

    Swaps conserve all per-color counts, so validity is necessary for a yes
    answer; invalid instances are immediate no-instances.
    """
    return instance.f_s.counts() == instance.f_t.counts()


def swap_is_proper(graph: Graph, colors: tuple[int, ...], u: int, v: int) -> bool:
    """Would exchanging colors[u] and colors[v] leave the coloring proper?

    Works on a raw color tuple so search loops can avoid wrapping states.
    Assumes uv is an edge and the current coloring is proper; the swap must
    also change the coloring (equal colors, i.e. *-*, do not count as a move).
    """
    cu, cv = colors[u], colors[v]
    if cu == cv:
        return False
    for w in graph.adj[u]:
        if w != v and not _compatible(cv, colors[w]):
            return False
    for w in graph.adj[v]:
        if w != u and not _compatible(cu, colors[w]):
            return False
    return True


def legal_swaps(graph: Graph, f: Coloring) -> list[SwapMove]:
    """All edges whose endpoint colors can be exchanged keeping properness.

    Sorted by (min endpoint, max endpoint).  Raises if f is not (extended-)
    proper to begin with.
    """
    if not is_proper_extended(graph, f):
        raise PreconditionError("legal_swaps requires a proper coloring")
    return [
        SwapMove(u, v) for u, v in graph.edges if swap_is_proper(graph, f.colors, u, v)
    ]


def apply_swap(graph: Graph, f: Coloring, move: SwapMove) -> Coloring:
    """Exchange the endpoint colors of one legal move."""
    u, v = move
    if not graph.has_edge(u, v):
        raise PreconditionError(f"({u},{v}) is not an edge")
    if not swap_is_proper(graph, f.colors, u, v):
        raise PreconditionError(f"swap ({u},{v}) is not legal here")
    colors = list(f.colors)
    colors[u], colors[v] = colors[v], colors[u]
    return Coloring(tuple(colors), f.k)


def replay(graph: Graph, seq: ReconfSequence) -> Coloring:
    """Apply all moves in order, verifying each one; returns the final coloring."""
    f = seq.start
    if not is_proper_extended(graph, f):
        raise PreconditionError("replay start coloring is not proper")
    for move in seq.moves:
        f = apply_swap(graph, f, move)
    return f


def solve_k_le_2(instance: Instance) -> bool:
    """Decide instances with at most two colors.

    With k = 1 every proper coloring is the all-1 coloring.  With k = 2 a
    connected component on >= 3 vertices admits no swap at all, so the two
    colorings must agree there; a K2 component always reaches the other valid
    coloring with one swap; singleton components can never change.  Color
    counts are compared per component (swaps never cross components).
    """
    if instance.k > 2:
        raise WrongSolverError(f"k = {instance.k} > 2")
    if instance.extended:
        raise WrongSolverError("extended instances are not plain k<=2 instances")
    fs, ft = instance.f_s.colors, instance.f_t.colors
    for comp in instance.graph.components():
        if Counter(fs[v] for v in comp) != Counter(ft[v] for v in comp):
            return False
        if len(comp) >= 3 and any(fs[v] != ft[v] for v in comp):
            return False
    return True


def route_bijective(graph: Graph, start: Coloring, target: Coloring) -> ReconfSequence:
    """Transform one bijective coloring into another on a connected graph.

    Both colorings must assign n pairwise distinct colors drawn from the same
    set.  Every swap between distinctly colored vertices is legal, so routing
    reduces to token routing: fix a spanning tree, repeatedly bring the target
    color of some leaf to that leaf along the tree path, then retire the leaf.
    At most n(n-1)/2 < 2n^2 moves.
    """
    _check_length(graph, start)
    _check_length(graph, target)
    n = graph.n
    if len(set(start.colors)) != n or len(set(target.colors)) != n:
        raise PreconditionError("colorings must use pairwise distinct colors")
    if set(start.colors) != set(target.colors):
        raise PreconditionError("colorings must use the same color set")
    if not graph.is_connected():
        raise PreconditionError("graph must be connected")
    if n <= 1:
        return ReconfSequence(start)

    # BFS spanning tree from vertex 0.
    tree: list[set[int]] = [set() for _ in range(n)]
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in sorted(graph.adj[u]):
            if not seen[w]:
                seen[w] = True
                tree[u].add(w)
                tree[w].add(u)
                queue.append(w)

    colors = list(start.colors)
    where = {c: v for v, c in enumerate(colors)}
    alive = set(range(n))
    moves: list[SwapMove] = []
    while len(alive) > 1:
        leaf = min(v for v in alive if len(tree[v]) <= 1)
        u = where[target.colors[leaf]]
        if u != leaf:
            # Unique tree path u -> leaf by DFS on the remaining tree.
            parent = {u: -1}
            stack = [u]
            while stack and leaf not in parent:
                x = stack.pop()
                for w in sorted(tree[x]):
                    if w not in parent:
                        parent[w] = x
                        stack.append(w)
            path = [leaf]
            while path[-1] != u:
                path.append(parent[path[-1]])
            path.reverse()
            for a, b in zip(path, path[1:]):
                colors[a], colors[b] = colors[b], colors[a]
                where[colors[a]] = a
                where[colors[b]] = b
                moves.append(SwapMove(min(a, b), max(a, b)))
        alive.remove(leaf)
        for w in tree[leaf]:
            tree[w].discard(leaf)
        tree[leaf].clear()
    return ReconfSequence(start, tuple(moves))
