"""Linear-time decision for 3-color instances on paths.

A proper 3-coloring of a path is a string over {1,2,3} with distinct
adjacent characters.  Deleting three pairwise-distinct characters under the
positional rules below preserves reachability, and iterating the deletions
to a fixed point yields a canonical invariant: two colorings of the same
path are swap-reachable iff they use each color equally often and have
equal invariants.
"""

from __future__ import annotations

from .core import Coloring, Graph, Instance, is_valid
from .errors import InvalidInputError, WrongSolverError

NIL = ""


def path_order(graph: Graph) -> list[int]:
    """Vertices in path order starting from the lower-id endpoint.

    Raises WrongSolverError unless the graph is a path.
    """
    n = graph.n
    if n <= 1:
        return list(range(n))
    degs = [graph.degree(v) for v in range(n)]
    ends = [v for v in range(n) if degs[v] == 1]
    if len(ends) != 2 or any(d != 2 for v, d in enumerate(degs) if v not in ends):
        raise WrongSolverError("graph is not a path")
    order = [min(ends)]
    prev = -1
    while len(order) < n:
        nxt = [w for w in graph.adj[order[-1]] if w != prev]
        if len(nxt) != 1:
            raise WrongSolverError("graph is not a path")
        prev = order[-1]
        order.append(nxt[0])
    return order


def string_of(graph: Graph, f: Coloring) -> str:
    """Encode a proper 3-coloring of a path as its coloring string."""
    if f.k != 3:
        raise WrongSolverError(f"path strings need k = 3, got k = {f.k}")
    if len(f.colors) != graph.n:
        raise InvalidInputError("coloring length != vertex count")
    if f.extended:
        raise WrongSolverError("path solver handles plain colorings only")
    s = "".join(str(f.colors[v]) for v in path_order(graph))
    for a, b in zip(s, s[1:]):
        if a == b:
            raise InvalidInputError("coloring is not proper on the path")
    return s


def is_swappable(s: str, i: int) -> bool:
    """Can characters i and i+1 (0-based) be exchanged into another coloring string?

    At the left end the first three characters must be pairwise distinct; at
    the right end the last three; in the interior the characters flanking the
    pair must be equal.  On a two-character string the single swap is always
    legal.
    """
    n = len(s)
    if not 0 <= i <= n - 2:
        raise InvalidInputError(f"position {i} out of range for length {n}")
    if n == 2:
        return True
    if i == 0:
        return len({s[0], s[1], s[2]}) == 3
    if i == n - 2:
        return len({s[n - 3], s[n - 2], s[n - 1]}) == 3
    return s[i - 1] == s[i + 2]


def swap_chars(s: str, i: int) -> str:
    return s[:i] + s[i + 1] + s[i] + s[i + 2 :]


def contractions(s: str) -> set[str]:
    """All strings reachable by deleting one pairwise-distinct triple.

    Interior rule: delete s[a..a+2] when s[a] == s[a+3]; end rules: delete a
    pairwise-distinct prefix or suffix triple.
    """
    out: set[str] = set()
    n = len(s)
    if n < 3:
        return out
    if len({s[0], s[1], s[2]}) == 3:
        out.add(s[3:])
    if len({s[n - 3], s[n - 2], s[n - 1]}) == 3:
        out.add(s[: n - 3])
    for a in range(n - 3):
        if s[a] == s[a + 3]:
            out.add(s[:a] + s[a + 3 :])
    return out


def invariant(s: str) -> str:
    """Fixed point of iterated contraction, computed in one stack pass.

    Returns NIL (the empty string) when two or fewer characters remain,
    otherwise the rigid remainder.
    """
    stack: list[str] = []
    for ch in s:
        stack.append(ch)
        if len(stack) == 3 and len(set(stack)) == 3:
            del stack[-3:]
        elif len(stack) >= 4 and stack[-4] == ch:
            del stack[-3:]
    while len(stack) >= 3 and len(set(stack[-3:])) == 3:
        del stack[-3:]
    return NIL if len(stack) <= 2 else "".join(stack)


def solve_path(instance: Instance) -> bool:
    """Decide a 3-color instance on a path via the contraction invariant."""
    if instance.k != 3:
        raise WrongSolverError(f"path solver needs k = 3, got k = {instance.k}")
    s_s = string_of(instance.graph, instance.f_s)
    s_t = string_of(instance.graph, instance.f_t)
    return is_valid(instance) and invariant(s_s) == invariant(s_t)
