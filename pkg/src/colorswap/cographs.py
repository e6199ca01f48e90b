"""Polynomial decision on cographs via cotree recursion with extended colorings.

Across a join, only colors used exactly once (plus the flexible color) can
ever cross sides.  Replacing those colors by ``*`` on each side decouples
the two halves, so the decision recurses down the cotree: leaves compare
colors, unions decide each part, joins either split plainly (when one side
has no swappable color) or split after the ``*`` projection.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Union

from .core import STAR, Coloring, Graph, Instance
from .errors import InvalidInputError, NotACographError

UNION = "union"
JOIN = "join"


@dataclass(frozen=True)
class CotreeLeaf:
    vertex: int


@dataclass(frozen=True)
class CotreeNode:
    kind: str  # UNION or JOIN
    left: "Cotree"
    right: "Cotree"

    def __post_init__(self):
        if self.kind not in (UNION, JOIN):
            raise InvalidInputError(f"unknown cotree node kind {self.kind!r}")


Cotree = Union[CotreeLeaf, CotreeNode]


def cotree_leaves(tree: Cotree) -> list[int]:
    if isinstance(tree, CotreeLeaf):
        return [tree.vertex]
    return cotree_leaves(tree.left) + cotree_leaves(tree.right)


def cotree_to_graph(tree: Cotree, n: int | None = None) -> Graph:
    """Evaluate a cotree back into the graph it denotes.

    Leaves must carry each of 0..n-1 exactly once.
    """

    def edges_of(t: Cotree) -> tuple[list[int], list[tuple[int, int]]]:
        if isinstance(t, CotreeLeaf):
            return [t.vertex], []
        lv, le = edges_of(t.left)
        rv, re = edges_of(t.right)
        edges = le + re
        if t.kind == JOIN:
            edges += [(a, b) for a in lv for b in rv]
        return lv + rv, edges

    vertices, edges = edges_of(tree)
    if n is None:
        n = len(vertices)
    if sorted(vertices) != list(range(n)):
        raise InvalidInputError("cotree leaves must carry 0..n-1 exactly once")
    return Graph.from_edges(n, edges)


def build_cotree(graph: Graph) -> Cotree:
    """Decompose by connectivity: a disconnected graph is a union of its
    components, a co-disconnected one a join of its co-components; a stall
    on >= 2 vertices means an induced P4 exists.

    Multiway splits become left-deep binary nodes, parts ordered by their
    smallest vertex.
    """
    if graph.n == 0:
        raise InvalidInputError("empty graph has no cotree")

    def left_deep(kind: str, parts: list[Cotree]) -> Cotree:
        tree = parts[0]
        for p in parts[1:]:
            tree = CotreeNode(kind, tree, p)
        return tree

    def rec(vertices: list[int]) -> Cotree:
        if len(vertices) == 1:
            return CotreeLeaf(vertices[0])
        sub = graph.induced(vertices)
        comps = sub.components()
        if len(comps) > 1:
            kind = UNION
        else:
            comps = sub.complement().components()
            if len(comps) > 1:
                kind = JOIN
            else:
                raise NotACographError(
                    "graph and complement both connected on >= 2 vertices"
                )
        parts = [rec([vertices[i] for i in comp]) for comp in comps]
        return left_deep(kind, parts)

    return rec(list(range(graph.n)))


def swappable_colors(f: Coloring) -> frozenset[int]:
    """Colors used exactly once, plus ``*`` whenever it is used at all."""
    return _swappable(f.colors)


def _swappable(values: Iterable[int]) -> frozenset[int]:
    counts = Counter(values)
    out = {c for c, cnt in counts.items() if cnt == 1 and c != STAR}
    if counts[STAR]:
        out.add(STAR)
    return frozenset(out)


def star_project(f: Coloring, part: Iterable[int], swappable: frozenset[int]) -> Coloring:
    """Restrict f to ``part`` (ascending), rewriting swappable colors to ``*``."""
    return Coloring(
        tuple(
            STAR if f.colors[v] in swappable else f.colors[v] for v in sorted(part)
        ),
        f.k,
    )


def solve_ecrcs_cograph(
    tree: Cotree, k: int, f_s: Coloring, f_t: Coloring
) -> bool:
    """Decide extended reachability over a cotree.

    Every recursive call first rejects sub-instances whose per-color counts
    differ (swaps conserve them); joins additionally reject when one side has
    swappable colors under the start coloring but not under the target.
    """
    leaves = cotree_leaves(tree)
    n = len(leaves)
    if sorted(leaves) != list(range(n)):
        raise InvalidInputError("cotree leaves must carry 0..n-1 exactly once")
    if len(f_s.colors) != n or len(f_t.colors) != n:
        raise InvalidInputError("coloring length != cotree leaf count")
    if f_s.k != k or f_t.k != k:
        raise InvalidInputError("coloring k mismatch")

    def rec(t: Cotree, fs: dict[int, int], ft: dict[int, int]) -> bool:
        if Counter(fs.values()) != Counter(ft.values()):
            return False
        if isinstance(t, CotreeLeaf):
            return fs[t.vertex] == ft[t.vertex]
        lvs, rvs = cotree_leaves(t.left), cotree_leaves(t.right)
        if t.kind == UNION:
            return rec(
                t.left, {v: fs[v] for v in lvs}, {v: ft[v] for v in lvs}
            ) and rec(t.right, {v: fs[v] for v in rvs}, {v: ft[v] for v in rvs})
        s_sets = [_swappable(fs[v] for v in side) for side in (lvs, rvs)]
        t_sets = [_swappable(ft[v] for v in side) for side in (lvs, rvs)]
        for s_side, t_side in zip(s_sets, t_sets):
            if bool(s_side) != bool(t_side):
                return False
        if not s_sets[0] or not s_sets[1]:
            return rec(
                t.left, {v: fs[v] for v in lvs}, {v: ft[v] for v in lvs}
            ) and rec(t.right, {v: fs[v] for v in rvs}, {v: ft[v] for v in rvs})
        s_all, t_all = _swappable(fs.values()), _swappable(ft.values())
        fs_star = {v: STAR if fs[v] in s_all else fs[v] for v in fs}
        ft_star = {v: STAR if ft[v] in t_all else ft[v] for v in ft}
        return rec(
            t.left, {v: fs_star[v] for v in lvs}, {v: ft_star[v] for v in lvs}
        ) and rec(t.right, {v: fs_star[v] for v in rvs}, {v: ft_star[v] for v in rvs})

    return rec(
        tree,
        dict(enumerate(f_s.colors)),
        dict(enumerate(f_t.colors)),
    )


def solve_crcs_cograph(instance: Instance, cotree: Cotree | None = None) -> bool:
    """Decide a (plain or extended) instance on a cograph.

    A supplied cotree bypasses recognition but is verified to reproduce the
    graph exactly.
    """
    if instance.graph.n == 0:
        return True
    if cotree is None:
        cotree = build_cotree(instance.graph)
    elif cotree_to_graph(cotree, instance.graph.n) != instance.graph:
        raise InvalidInputError("supplied cotree does not evaluate to the graph")
    return solve_ecrcs_cograph(cotree, instance.k, instance.f_s, instance.f_t)
