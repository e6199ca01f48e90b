"""Executable instance constructions from token sliding, single-vertex
recoloring, and nondeterministic constraint logic.

Each builder emits a swap-reconfiguration instance that is equivalent to its
source instance; the builders double as generators of structured hard
instances and as cross-validation targets for the search oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .core import Coloring, Graph, Instance, is_proper
from .errors import InvalidInputError, PreconditionError

if TYPE_CHECKING:
    from .oracle import Decision


@dataclass(frozen=True)
class TokenSlidingInstance:
    """Two same-size independent sets; tokens slide along edges one at a time.

    ``sides`` optionally fixes a bipartition (0/1 per vertex) for builders
    that need one.
    """

    graph: Graph
    i_s: frozenset[int]
    i_t: frozenset[int]
    sides: tuple[int, ...] | None = None

    def __post_init__(self):
        for name, s in (("i_s", self.i_s), ("i_t", self.i_t)):
            if any(not 0 <= v < self.graph.n for v in s):
                raise InvalidInputError(f"{name} contains out-of-range vertices")
            if not self.graph.is_independent_set(s):
                raise PreconditionError(f"{name} is not independent")
        if len(self.i_s) != len(self.i_t):
            raise InvalidInputError("token sets must have equal size")
        if self.sides is not None:
            if len(self.sides) != self.graph.n or any(s not in (0, 1) for s in self.sides):
                raise InvalidInputError("sides must give 0 or 1 per vertex")
            for u, v in self.graph.edges:
                if self.sides[u] == self.sides[v]:
                    raise InvalidInputError(f"edge ({u},{v}) does not cross the bipartition")


@dataclass(frozen=True)
class SVRInstance:
    """Two proper k-colorings; a move recolors a single vertex."""

    graph: Graph
    k: int
    g_s: Coloring
    g_t: Coloring

    def __post_init__(self):
        if self.g_s.k != self.k or self.g_t.k != self.k:
            raise InvalidInputError("coloring k does not match instance k")
        if not is_proper(self.graph, self.g_s) or not is_proper(self.graph, self.g_t):
            raise InvalidInputError("colorings must be proper")


@dataclass(frozen=True)
class NCLMachine:
    """An and/or constraint graph: every vertex has degree 3; an ``and``
    vertex meets weights 1,1,2 and an ``or`` vertex three weight-2 edges.

    Parallel edges are allowed; edges are identified by their index.
    """

    vertex_types: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        nv = len(self.vertex_types)
        if any(t not in ("and", "or") for t in self.vertex_types):
            raise InvalidInputError("vertex types must be 'and' or 'or'")
        weights: list[list[int]] = [[] for _ in range(nv)]
        for u, v, w in self.edges:
            if not (0 <= u < nv and 0 <= v < nv) or u == v:
                raise InvalidInputError(f"bad edge endpoints ({u},{v})")
            if w not in (1, 2):
                raise InvalidInputError(f"edge weight {w} not in {{1,2}}")
            weights[u].append(w)
            weights[v].append(w)
        for m, ws in enumerate(weights):
            if len(ws) != 3:
                raise InvalidInputError(f"vertex {m} has degree {len(ws)}, need 3")
            want = [1, 1, 2] if self.vertex_types[m] == "and" else [2, 2, 2]
            if sorted(ws) != want:
                raise InvalidInputError(
                    f"{self.vertex_types[m]} vertex {m} has incident weights {sorted(ws)}"
                )

    @property
    def n(self) -> int:
        return len(self.vertex_types)

    def incident(self, m: int) -> list[int]:
        return [e for e, (u, v, _) in enumerate(self.edges) if m in (u, v)]

    def in_weights(self, heads: tuple[int, ...]) -> list[int]:
        inw = [0] * self.n
        for e, (_, _, w) in enumerate(self.edges):
            inw[heads[e]] += w
        return inw

    def validate_configuration(self, heads: tuple[int, ...]) -> None:
        if len(heads) != len(self.edges):
            raise InvalidInputError("orientation length != edge count")
        for e, (u, v, _) in enumerate(self.edges):
            if heads[e] not in (u, v):
                raise InvalidInputError(f"head of edge {e} must be {u} or {v}")
        for m, w in enumerate(self.in_weights(heads)):
            if w < 2:
                raise PreconditionError(f"in-weight {w} < 2 at vertex {m}")


NCLOrientation = tuple

@dataclass(frozen=True)
class NCLInstance:
    """A machine plus start and target configurations (file-level bundle)."""

    machine: NCLMachine
    c_s: tuple[int, ...]
    c_t: tuple[int, ...]

    def __post_init__(self):
        self.machine.validate_configuration(self.c_s)
        self.machine.validate_configuration(self.c_t)


@dataclass
class GadgetLayout:
    """Role name -> output vertex id, plus the port edge per source edge."""

    roles: dict[str, int] = field(default_factory=dict)
    port_edges: dict[int, tuple[int, int]] = field(default_factory=dict)


class GraphBuilder:
    """Mutable accumulator for gadget constructions."""

    def __init__(self):
        self.n = 0
        self.edge_list: list[tuple[int, int]] = []
        self.colors_s: dict[int, int] = {}
        self.colors_t: dict[int, int] = {}

    def new_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int) -> None:
        self.edge_list.append((u, v))

    def set_both(self, v: int, c: int) -> None:
        self.colors_s[v] = c
        self.colors_t[v] = c

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edge_list)


def _distinct_color_fill(n: int, k: int, ones: frozenset[int]) -> tuple[int, ...]:
    """Color 1 on ``ones``; colors 2,3,... on the rest by ascending vertex id."""
    colors = [0] * n
    nxt = 2
    for v in range(n):
        if v in ones:
            colors[v] = 1
        else:
            colors[v] = nxt
            nxt += 1
    if nxt - 1 != k:
        raise InvalidInputError(f"needed {nxt - 1} colors, instance says k={k}")
    return tuple(colors)


def ts_split_to_crcs(ts: TokenSlidingInstance) -> Instance:
    """Token sliding on a split graph, as a swap instance.

    Adds one universal vertex; tokens become the occurrences of color 1, and
    all other vertices receive pairwise distinct colors, so k = n' - |I_s| + 1.
    """
    from .splitgraphs import split_partition  # deferred: splitgraphs uses the oracle

    if len(ts.i_s) < 2:
        raise PreconditionError("need at least 2 tokens")
    split_partition(ts.graph)  # raises NotSplitError on bad input
    n = ts.graph.n
    edges = list(ts.graph.edges) + [(v, n) for v in range(n)]
    out = Graph.from_edges(n + 1, edges)
    k = (n + 1) - len(ts.i_s) + 1
    f_s = _distinct_color_fill(n + 1, k, ts.i_s)
    f_t = _distinct_color_fill(n + 1, k, ts.i_t)
    return Instance.of(out, k, f_s, f_t)


def ts_bipartite_to_crcs(ts: TokenSlidingInstance) -> Instance:
    """Token sliding on a bipartite graph, as a swap instance.

    Adds x1,x2,x3 on one side and y1,y2,y3 on the other; x2,x3,y2,y3 join the
    color-1 class and are frozen by their shared neighbors, pinning color 1
    to independent sets of the original graph.  k = n' - |I_s| - 3.
    """
    sides = ts.sides if ts.sides is not None else ts.graph.bipartition()
    if sides is None:
        raise PreconditionError("graph is not bipartite")
    n = ts.graph.n
    x1, x2, x3, y1, y2, y3 = n, n + 1, n + 2, n + 3, n + 4, n + 5
    s_side = [v for v in range(n) if sides[v] == 0]
    t_side = [v for v in range(n) if sides[v] == 1]
    edges = list(ts.graph.edges)
    edges += [(x1, t) for t in t_side] + [(x1, y1), (x1, y2), (x1, y3)]
    edges += [(y1, s) for s in s_side] + [(y1, x2), (y1, x3)]
    out = Graph.from_edges(n + 6, edges)
    k = (n + 6) - len(ts.i_s) - 3
    ones_s = ts.i_s | {x2, x3, y2, y3}
    ones_t = ts.i_t | {x2, x3, y2, y3}
    f_s = _distinct_color_fill(n + 6, k, frozenset(ones_s))
    f_t = _distinct_color_fill(n + 6, k, frozenset(ones_t))
    return Instance.of(out, k, f_s, f_t)


def svr_to_kcrcs(svr: SVRInstance) -> Instance:
    """Single-vertex recoloring as a swap instance with the same k.

    Attaches a private k-clique to every vertex; recoloring v to c becomes a
    swap between v and the clique member holding c, followed by clique-local
    cleanup swaps.
    """
    n, k = svr.graph.n, svr.k
    edges = list(svr.graph.edges)
    f_s = list(svr.g_s.colors)
    f_t = list(svr.g_t.colors)
    for v in range(n):
        members = [v] + [n + v * (k - 1) + i for i in range(k - 1)]
        edges += [(a, b) for i, a in enumerate(members) for b in members[i + 1 :]]
        f_s += [c for c in range(1, k + 1) if c != svr.g_s.colors[v]]
        f_t += [c for c in range(1, k + 1) if c != svr.g_t.colors[v]]
    out = Graph.from_edges(n * k, edges)
    return Instance.of(out, k, f_s, f_t)


PENDANT_CYCLE_COLORS = {1: (1, 2, 1, 3), 3: (3, 1, 3, 2)}


def attach_forbidden_pendant(builder: GraphBuilder, x: int, c: int) -> dict[str, int]:
    """Attach a rigid 4-cycle via a fresh neighbor y colored c, so x can never
    take color c.  Returns the role -> id fragment for the 4 new vertices.
    """
    if c not in PENDANT_CYCLE_COLORS:
        raise InvalidInputError("pendant color must be 1 or 3")
    y, a, z, b = (builder.new_vertex() for _ in range(4))
    builder.add_edge(x, y)
    for u, v in ((y, a), (a, z), (z, b), (b, y)):
        builder.add_edge(u, v)
    for v, col in zip((y, a, z, b), PENDANT_CYCLE_COLORS[c]):
        builder.set_both(v, col)
    return {"y": y, "a": a, "z": z, "b": b}


def _and_gadget(builder: GraphBuilder, layout: GadgetLayout, m: int, ports: list[int]):
    """Five-vertex and-gadget; ports[0] is the weight-2 edge's port."""
    u1_1, u2_1, u0, u1_2, u1_3 = (builder.new_vertex() for _ in range(5))
    for u, v in ((u1_1, u2_1), (u2_1, u0), (u0, u1_2), (u0, u1_3)):
        builder.add_edge(u, v)
    names = {"u1_1": u1_1, "u2_1": u2_1, "u0": u0, "u1_2": u1_2, "u1_3": u1_3}
    for role, vid in names.items():
        layout.roles[f"v{m}.{role}"] = vid
    for role, vid in (("u1_1", u1_1), ("u1_2", u1_2), ("u1_3", u1_3)):
        frag = attach_forbidden_pendant(builder, vid, 3)
        for part, pid in frag.items():
            layout.roles[f"v{m}.{role}.pend.{part}"] = pid
    return {ports[0]: u1_1, ports[1]: u1_2, ports[2]: u1_3}, names


def _or_gadget(builder: GraphBuilder, layout: GadgetLayout, m: int, ports: list[int]):
    """Twelve-vertex or-gadget; branch i serves incident edge ports[i-1]."""
    vs: dict[tuple[int, int], int] = {}
    for i in (1, 2, 3):
        for j in (1, 2, 3, 4):
            vs[j, i] = builder.new_vertex()
            layout.roles[f"v{m}.v{j}_{i}"] = vs[j, i]
        for j in (1, 2, 3):
            builder.add_edge(vs[j, i], vs[j + 1, i])
    builder.add_edge(vs[1, 1], vs[1, 2])
    builder.add_edge(vs[1, 1], vs[1, 3])
    builder.add_edge(vs[1, 2], vs[1, 3])
    for i in (1, 2, 3):
        for j, c in ((4, 3), (2, 1), (3, 1)):
            frag = attach_forbidden_pendant(builder, vs[j, i], c)
            for part, pid in frag.items():
                layout.roles[f"v{m}.v{j}_{i}.pend.{part}"] = pid
    return {ports[i - 1]: vs[4, i] for i in (1, 2, 3)}, vs


def _and_internal_colors(port1_color: int, port23_colors: tuple[int, int]) -> tuple[int, int]:
    """(u2_1, u0): prefer (2,3); fall back to (3,2), which needs both
    weight-1 ports colored 1."""
    if port1_color != 2:
        return 2, 3
    if port23_colors != (1, 1):
        raise PreconditionError("weight-2 edge out but a weight-1 edge not in")
    return 3, 2


def _or_internal_colors(port_colors: tuple[int, int, int]) -> dict[tuple[int, int], int]:
    """Lexicographically first proper completion of the 9 or-gadget internals.

    Variables in branch order v1_i, v2_i, v3_i; v2/v3 cannot take color 1
    (their pendants), v3_i must differ from the fixed port v4_i, and the
    v1_i form a triangle.
    """
    slots = [(j, i) for i in (1, 2, 3) for j in (1, 2, 3)]
    domain = {1: (1, 2, 3), 2: (2, 3), 3: (2, 3)}
    chosen: dict[tuple[int, int], int] = {}

    def ok(j: int, i: int, c: int) -> bool:
        if j == 1 and any(chosen.get((1, o)) == c for o in (1, 2, 3) if o != i):
            return False
        if j > 1 and chosen[j - 1, i] == c:
            return False
        if j == 3 and port_colors[i - 1] == c:
            return False
        return True

    def extend(pos: int) -> bool:
        if pos == len(slots):
            return True
        j, i = slots[pos]
        for c in domain[j]:
            if ok(j, i, c):
                chosen[j, i] = c
                if extend(pos + 1):
                    return True
                del chosen[j, i]
        return False

    if not extend(0):
        raise PreconditionError(f"or-gadget ports {port_colors} admit no proper coloring")
    return chosen


def ncl_to_3crcs(
    machine: NCLMachine, c_s: tuple[int, ...], c_t: tuple[int, ...]
) -> tuple[Instance, GadgetLayout]:
    """Constraint-logic reachability as a 3-color swap instance.

    One gadget per machine vertex, one port edge per machine edge; a port is
    colored 1 exactly when its edge points at the gadget's vertex.  The output
    graph has maximum degree 3.
    """
    machine.validate_configuration(c_s)
    machine.validate_configuration(c_t)
    builder = GraphBuilder()
    layout = GadgetLayout()
    port_of: dict[tuple[int, int], int] = {}
    gadget_names: list[dict] = []
    for m in range(machine.n):
        inc = machine.incident(m)
        if machine.vertex_types[m] == "and":
            heavy = [e for e in inc if machine.edges[e][2] == 2]
            light = [e for e in inc if machine.edges[e][2] == 1]
            ordered = [heavy[0]] + sorted(light)
            port_map, names = _and_gadget(builder, layout, m, ordered)
        else:
            port_map, names = _or_gadget(builder, layout, m, sorted(inc))
        gadget_names.append(names)
        for e, vid in port_map.items():
            port_of[m, e] = vid
    for e, (a, b, _) in enumerate(machine.edges):
        pa, pb = port_of[a, e], port_of[b, e]
        builder.add_edge(pa, pb)
        layout.port_edges[e] = (pa, pb)

    for heads, colors in ((c_s, builder.colors_s), (c_t, builder.colors_t)):
        for (m, e), vid in port_of.items():
            colors[vid] = 1 if heads[e] == m else 2
        for m in range(machine.n):
            names = gadget_names[m]
            if machine.vertex_types[m] == "and":
                c21, c0 = _and_internal_colors(
                    colors[names["u1_1"]],
                    (colors[names["u1_2"]], colors[names["u1_3"]]),
                )
                colors[names["u2_1"]] = c21
                colors[names["u0"]] = c0
            else:
                pc = tuple(colors[names[4, i]] for i in (1, 2, 3))
                for (j, i), c in _or_internal_colors(pc).items():
                    colors[names[j, i]] = c

    graph = builder.graph()
    assert max(graph.degree(v) for v in range(graph.n)) <= 3
    f_s = tuple(builder.colors_s[v] for v in range(graph.n))
    f_t = tuple(builder.colors_t[v] for v in range(graph.n))
    return Instance.of(graph, 3, f_s, f_t), layout


@dataclass(frozen=True)
class StandaloneGadget:
    """One vertex gadget in isolation, for exhaustive behavior checks.

    ``ports`` lists the three port vertices in branch order, ``core`` the
    remaining gadget vertices, and ``fixed`` the pendant vertices with their
    construction colors.  With stubs, each port gets one extra outside
    neighbor across its port edge.
    """

    graph: Graph
    ports: tuple[int, ...]
    core: dict
    fixed: dict[int, int]
    stubs: tuple[int, ...]

    def construction_coloring(self, pattern: tuple[int, int, int], kind: str) -> tuple[int, ...]:
        """The builder's deterministic coloring for one port pattern; stubs
        (when present) get the complementary port-edge color."""
        colors = dict(self.fixed)
        for p, c in zip(self.ports, pattern):
            colors[p] = c
        for s, c in zip(self.stubs, pattern):
            colors[s] = 3 - c
        if kind == "and":
            c21, c0 = _and_internal_colors(pattern[0], (pattern[1], pattern[2]))
            colors[self.core["u2_1"]] = c21
            colors[self.core["u0"]] = c0
        else:
            for (j, i), c in _or_internal_colors(pattern).items():
                colors[self.core[j, i]] = c
        return tuple(colors[v] for v in range(self.graph.n))


def standalone_gadget(kind: str, with_stubs: bool = False) -> StandaloneGadget:
    """Build one and- or or-gadget outside any machine context."""
    builder = GraphBuilder()
    layout = GadgetLayout()
    if kind == "and":
        port_map, core = _and_gadget(builder, layout, 0, [0, 1, 2])
    elif kind == "or":
        port_map, core = _or_gadget(builder, layout, 0, [0, 1, 2])
    else:
        raise InvalidInputError("gadget kind must be 'and' or 'or'")
    ports = tuple(port_map[i] for i in (0, 1, 2))
    stubs = []
    if with_stubs:
        for p in ports:
            s = builder.new_vertex()
            builder.add_edge(p, s)
            stubs.append(s)
    return StandaloneGadget(
        builder.graph(), ports, core, dict(builder.colors_s), tuple(stubs)
    )


def verify_reduction(source: "Decision", reduced: "Decision") -> bool | None:
    """True/False when both searches concluded; None when either overflowed."""
    if source.is_overflow or reduced.is_overflow:
        return None
    return source.outcome == reduced.outcome
