"""Text formats for instances and cotrees.

One item per line, whitespace separated, ``#`` starts a comment, vertex ids
are 0-based.  The header line names the kind: ``crcs 1``, ``ts 1``,
``svr 1`` or ``ncl 1``.  Serialization is canonical, so
parse -> serialize -> parse is the identity.
"""

from __future__ import annotations

from .core import STAR, Coloring, Graph, Instance
from .cographs import JOIN, UNION, Cotree, CotreeLeaf, CotreeNode
from .errors import ParseError
from .reductions import NCLInstance, NCLMachine, SVRInstance, TokenSlidingInstance

ParsedInstance = Instance | TokenSlidingInstance | SVRInstance | NCLInstance


def _items(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line.split()))
    return out


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {tok!r}") from None


def _color(tok: str, lineno: int, allow_star: bool) -> int:
    if tok == "*":
        if not allow_star:
            raise ParseError(lineno, "color * is not allowed here")
        return STAR
    return _int(tok, lineno)


def _color_str(c: int) -> str:
    return "*" if c == STAR else str(c)


class _Fields:
    """Collects one-per-file fields and repeated lines, with duplicate checks."""

    def __init__(self):
        self.single: dict[str, tuple[int, list[str]]] = {}
        self.edges: list[tuple[int, list[str]]] = []

    def put(self, key: str, lineno: int, toks: list[str]):
        if key in self.single:
            raise ParseError(lineno, f"duplicate {key!r} line")
        self.single[key] = (lineno, toks)

    def get(self, key: str, last_line: int) -> tuple[int, list[str]]:
        if key not in self.single:
            raise ParseError(last_line, f"missing {key!r} line")
        return self.single[key]


def _parse_coloring_body(
    items: list[tuple[int, list[str]]], allow_star: bool
) -> tuple[int, int, list[tuple[int, int]], tuple[int, ...], tuple[int, ...]]:
    fields = _Fields()
    last = items[-1][0] if items else 1
    for lineno, toks in items:
        key, args = toks[0], toks[1:]
        if key in ("k", "n"):
            if len(args) != 1:
                raise ParseError(lineno, f"{key} takes one integer")
            fields.put(key, lineno, args)
        elif key == "edge":
            if len(args) != 2:
                raise ParseError(lineno, "edge takes two vertex ids")
            fields.edges.append((lineno, args))
        elif key in ("fs", "ft"):
            fields.put(key, lineno, args)
        else:
            raise ParseError(lineno, f"unknown item {key!r}")
    ln, (n_tok,) = fields.get("n", last)
    n = _int(n_tok, ln)
    ln, (k_tok,) = fields.get("k", last)
    k = _int(k_tok, ln)
    edges = []
    for lineno, (u, v) in fields.edges:
        edges.append((_int(u, lineno), _int(v, lineno)))
    colorings = []
    for key in ("fs", "ft"):
        ln, toks = fields.get(key, last)
        if len(toks) != n:
            raise ParseError(ln, f"{key} lists {len(toks)} colors, n = {n}")
        colorings.append(tuple(_color(t, ln, allow_star) for t in toks))
    return n, k, edges, colorings[0], colorings[1]


def _parse_crcs(items) -> Instance:
    n, k, edges, fs, ft = _parse_coloring_body(items, allow_star=True)
    return Instance.of(Graph.from_edges(n, edges), k, fs, ft)


def _parse_svr(items) -> SVRInstance:
    n, k, edges, fs, ft = _parse_coloring_body(items, allow_star=False)
    graph = Graph.from_edges(n, edges)
    return SVRInstance(graph, k, Coloring(fs, k), Coloring(ft, k))


def _parse_ts(items) -> TokenSlidingInstance:
    fields = _Fields()
    last = items[-1][0] if items else 1
    for lineno, toks in items:
        key, args = toks[0], toks[1:]
        if key == "n":
            if len(args) != 1:
                raise ParseError(lineno, "n takes one integer")
            fields.put(key, lineno, args)
        elif key == "edge":
            if len(args) != 2:
                raise ParseError(lineno, "edge takes two vertex ids")
            fields.edges.append((lineno, args))
        elif key in ("is", "it", "side"):
            fields.put(key, lineno, args)
        else:
            raise ParseError(lineno, f"unknown item {key!r}")
    ln, (n_tok,) = fields.get("n", last)
    n = _int(n_tok, ln)
    edges = [( _int(u, lineno), _int(v, lineno)) for lineno, (u, v) in fields.edges]
    sets = []
    for key in ("is", "it"):
        ln, toks = fields.get(key, last)
        sets.append(frozenset(_int(t, ln) for t in toks))
    sides = None
    if "side" in fields.single:
        ln, toks = fields.single["side"]
        if len(toks) != n:
            raise ParseError(ln, f"side lists {len(toks)} values, n = {n}")
        sides = tuple(_int(t, ln) for t in toks)
    return TokenSlidingInstance(Graph.from_edges(n, edges), sets[0], sets[1], sides)


def _parse_ncl(items) -> NCLInstance:
    vertices: dict[int, str] = {}
    edges: dict[int, tuple[int, int, int]] = {}
    orientations: dict[str, dict[int, int]] = {"cs": {}, "ct": {}}
    last = items[-1][0] if items else 1
    for lineno, toks in items:
        key, args = toks[0], toks[1:]
        if key == "vertex":
            if len(args) != 2 or args[1] not in ("and", "or"):
                raise ParseError(lineno, "vertex takes <id> <and|or>")
            vid = _int(args[0], lineno)
            if vid in vertices:
                raise ParseError(lineno, f"duplicate vertex {vid}")
            vertices[vid] = args[1]
        elif key == "edge":
            if len(args) != 4:
                raise ParseError(lineno, "edge takes <id> <u> <v> <w>")
            eid, u, v, w = (_int(a, lineno) for a in args)
            if eid in edges:
                raise ParseError(lineno, f"duplicate edge {eid}")
            edges[eid] = (u, v, w)
        elif key in ("cs", "ct"):
            if len(args) != 2:
                raise ParseError(lineno, f"{key} takes <edge-id> <toward-vertex>")
            eid, head = _int(args[0], lineno), _int(args[1], lineno)
            if eid in orientations[key]:
                raise ParseError(lineno, f"duplicate {key} for edge {eid}")
            orientations[key][eid] = head
        else:
            raise ParseError(lineno, f"unknown item {key!r}")
    if sorted(vertices) != list(range(len(vertices))) or not vertices:
        raise ParseError(last, "vertex ids must be 0..nv-1")
    if sorted(edges) != list(range(len(edges))):
        raise ParseError(last, "edge ids must be 0..ne-1")
    machine = NCLMachine(
        tuple(vertices[i] for i in range(len(vertices))),
        tuple(edges[i] for i in range(len(edges))),
    )
    heads = []
    for key in ("cs", "ct"):
        if sorted(orientations[key]) != list(range(len(edges))):
            raise ParseError(last, f"{key} must orient every edge exactly once")
        heads.append(tuple(orientations[key][i] for i in range(len(edges))))
    return NCLInstance(machine, heads[0], heads[1])


_PARSERS = {"crcs": _parse_crcs, "ts": _parse_ts, "svr": _parse_svr, "ncl": _parse_ncl}


def parse_instance(text: str) -> ParsedInstance:
    items = _items(text)
    if not items:
        raise ParseError(1, "empty input")
    lineno, header = items[0]
    if len(header) != 2 or header[0] not in _PARSERS or header[1] != "1":
        raise ParseError(lineno, f"unknown header {' '.join(header)!r}")
    return _PARSERS[header[0]](items[1:])


def serialize_instance(obj: ParsedInstance) -> str:
    lines: list[str]
    if isinstance(obj, Instance):
        lines = ["crcs 1", f"k {obj.k}", f"n {obj.graph.n}"]
        lines += [f"edge {u} {v}" for u, v in obj.graph.edges]
        lines.append("fs " + " ".join(_color_str(c) for c in obj.f_s.colors))
        lines.append("ft " + " ".join(_color_str(c) for c in obj.f_t.colors))
    elif isinstance(obj, SVRInstance):
        lines = ["svr 1", f"k {obj.k}", f"n {obj.graph.n}"]
        lines += [f"edge {u} {v}" for u, v in obj.graph.edges]
        lines.append("fs " + " ".join(str(c) for c in obj.g_s.colors))
        lines.append("ft " + " ".join(str(c) for c in obj.g_t.colors))
    elif isinstance(obj, TokenSlidingInstance):
        lines = ["ts 1", f"n {obj.graph.n}"]
        lines += [f"edge {u} {v}" for u, v in obj.graph.edges]
        lines.append("is " + " ".join(str(v) for v in sorted(obj.i_s)))
        lines.append("it " + " ".join(str(v) for v in sorted(obj.i_t)))
        if obj.sides is not None:
            lines.append("side " + " ".join(str(s) for s in obj.sides))
    elif isinstance(obj, NCLInstance):
        m = obj.machine
        lines = ["ncl 1"]
        lines += [f"vertex {i} {t}" for i, t in enumerate(m.vertex_types)]
        lines += [f"edge {i} {u} {v} {w}" for i, (u, v, w) in enumerate(m.edges)]
        lines += [f"cs {i} {h}" for i, h in enumerate(obj.c_s)]
        lines += [f"ct {i} {h}" for i, h in enumerate(obj.c_t)]
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return "\n".join(lines) + "\n"


def parse_cotree(text: str) -> Cotree:
    """One s-expression: a leaf is a vertex id, a node is (union A B) or (join A B)."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def expect(tok: str):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            raise ParseError(1, f"expected {tok!r} at token {pos}")
        pos += 1

    def parse() -> Cotree:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(1, "unexpected end of cotree expression")
        if tokens[pos] == "(":
            pos += 1
            if pos >= len(tokens) or tokens[pos] not in (UNION, JOIN):
                raise ParseError(1, f"expected union or join at token {pos}")
            kind = tokens[pos]
            pos += 1
            left = parse()
            right = parse()
            expect(")")
            return CotreeNode(kind, left, right)
        tok = tokens[pos]
        pos += 1
        return CotreeLeaf(_int(tok, 1))

    tree = parse()
    if pos != len(tokens):
        raise ParseError(1, "trailing tokens after cotree expression")
    return tree


def serialize_cotree(tree: Cotree) -> str:
    if isinstance(tree, CotreeLeaf):
        return str(tree.vertex)
    return f"({tree.kind} {serialize_cotree(tree.left)} {serialize_cotree(tree.right)})"
