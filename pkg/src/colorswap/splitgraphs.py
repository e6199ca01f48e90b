"""Kernelization and the fixed-k solver on split graphs.

Two reduction rules shrink the independent side: same-neighborhood vertices
sharing their start color can never move (they are frozen), so a frozen
vertex whose target color differs forces NO, and a third same-class vertex
is redundant.  The kernel has at most k + 2k*2^k vertices and is handed to
the search oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .core import Coloring, Graph, Instance
from .errors import BudgetExceededError, NotSplitError

NO = "NO"
KERNEL = "KERNEL"


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]


def split_partition(graph: Graph) -> SplitPartition:
    """Partition the vertices into a clique and an independent set.

    Vertices sorted by (degree desc, id asc); with m the largest index such
    that the m-th vertex has degree >= m-1, the graph is split iff the first
    m vertices form a clique and the rest an independent set (the degree
    counting identity makes this tie-break independent).  A clique vertex
    with a neighborhood twin on the independent side is then moved over
    (it cannot touch the independent side, and the reduction rules scan for
    twins there); two clique vertices can never be twins, so one pass does.
    """
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    m = 0
    for i, v in enumerate(order):
        if graph.degree(v) >= i:
            m = i + 1
    clique, independent = set(order[:m]), set(order[m:])
    if not graph.is_clique(clique) or not graph.is_independent_set(independent):
        raise NotSplitError("vertices admit no clique/independent-set partition")
    hoods = {graph.adj[u] for u in independent}
    for v in sorted(clique):
        if graph.adj[v] in hoods:
            clique.discard(v)
            independent.add(v)
    return SplitPartition(frozenset(clique), frozenset(independent))


def _classes(instance: Instance, part: SplitPartition) -> dict:
    """Group the independent side by (neighborhood, start color)."""
    groups: dict[tuple, list[int]] = {}
    for v in sorted(part.independent):
        key = (tuple(sorted(instance.graph.adj[v])), instance.f_s.colors[v])
        groups.setdefault(key, []).append(v)
    return groups


def apply_rule1(instance: Instance, part: SplitPartition) -> tuple[int, int] | None:
    """A frozen pair whose colors must change: two independent vertices with
    equal neighborhoods and equal start colors, where either end's target
    color differs.  Returns such a pair (answer NO) or None.
    """
    fs, ft = instance.f_s.colors, instance.f_t.colors
    for group in _classes(instance, part).values():
        if len(group) < 2:
            continue
        for i, u in enumerate(group):
            for v in group[i + 1 :]:
                if fs[u] != ft[u] or fs[v] != ft[v]:
                    return (u, v)
    return None


def apply_rule2(instance: Instance, part: SplitPartition) -> tuple[Instance, int] | None:
    """Drop the third vertex of a same-(neighborhood, start color) triple.

    Returns (reduced instance, removed vertex id) or None.  The reduced
    graph renumbers vertices above the removed one down by one.
    """
    for group in _classes(instance, part).values():
        if len(group) >= 3:
            w = group[2]
            keep = [v for v in range(instance.graph.n) if v != w]
            return (
                Instance(
                    instance.graph.induced(keep),
                    instance.k,
                    Coloring(tuple(instance.f_s.colors[v] for v in keep), instance.k),
                    Coloring(tuple(instance.f_t.colors[v] for v in keep), instance.k),
                ),
                w,
            )
    return None


@dataclass(frozen=True)
class KernelResult:
    outcome: str  # NO or KERNEL
    instance: Instance | None = None
    removed: tuple[int, ...] = ()


def kernelize(instance: Instance) -> KernelResult:
    """Apply rule 1, then rule 2 exhaustively (re-checking rule 1 after each
    removal).  ``removed`` lists deleted vertices by their original ids, in
    removal order.
    """
    current = instance
    original_id = list(range(instance.graph.n))
    removed: list[int] = []
    while True:
        part = split_partition(current.graph)
        if apply_rule1(current, part) is not None:
            return KernelResult(NO)
        hit = apply_rule2(current, part)
        if hit is None:
            return KernelResult(KERNEL, current, tuple(removed))
        current, w = hit
        removed.append(original_id.pop(w))


def kernel_size_bound(k: int) -> int:
    return k + 2 * k * 2**k


def solve_split(instance: Instance, max_states: int = 10_000_000) -> bool:
    """Kernelize, then decide the kernel exhaustively.

    The search never needs more states than there are colorings with the
    start coloring's color counts; exceeding max_states anyway raises.
    """
    from .oracle import SearchBudget, crcs_reachable

    result = kernelize(instance)
    if result.outcome == NO:
        return False
    kernel = result.instance
    counts = kernel.f_s.counts()
    bound = factorial(kernel.graph.n)
    for c in counts.values():
        bound //= factorial(c)
    budget = SearchBudget(max_states=max(1, min(bound, max_states)))
    decision = crcs_reachable(kernel, budget)
    if decision.is_overflow:
        raise BudgetExceededError(
            f"kernel search exceeded {budget.max_states} states"
        )
    return decision.is_yes
