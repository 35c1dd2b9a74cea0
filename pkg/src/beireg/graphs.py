"""Simple undirected graphs on vertex set 1..n with deterministic edge order.

Everything downstream (decompositions, ideals, Betti tables) assumes this
one immutable Graph type.  Parsers for a plain edge-list format and for
graph6 (n <= 62) live here too.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    """Parse error; message carries the 1-based line or byte position."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @functools.cached_property
    def adj(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in nbrs.items()}

    @functools.cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    def num_edges(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def graph(n: int, edges) -> Graph:
    """Build a Graph, normalizing and validating the edge list."""
    if n < 0:
        raise GraphError(f"vertex count must be >= 0, got {n}")
    norm = []
    seen = set()
    for e in edges:
        u, v = e
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if not (1 <= u and v <= n):
            raise GraphError(f"edge ({u},{v}) out of range 1..{n}")
        if (u, v) in seen:
            raise GraphError(f"parallel edge ({u},{v})")
        seen.add((u, v))
        norm.append((u, v))
    return Graph(n, tuple(sorted(norm)))


def path_graph(n: int) -> Graph:
    return graph(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def star_graph(k: int) -> Graph:
    """Star K_{1,k}: center 1, leaves 2..k+1."""
    return graph(k + 1, [(1, j) for j in range(2, k + 2)])


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = set()
    comps = []
    for s in g.vertices():
        if s in seen:
            continue
        stack = [s]
        comp = []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.num_edges() == g.n - 1


def induced_subgraph(g: Graph, vs) -> Graph:
    """Induced subgraph relabeled 1..k in increasing order of original labels."""
    order = sorted(set(vs))
    index = {v: i + 1 for i, v in enumerate(order)}
    es = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return graph(len(order), es)


def relabel(g: Graph, mapping: dict[int, int]) -> Graph:
    return graph(g.n, [(mapping[u], mapping[v]) for u, v in g.edges])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    es = list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return graph(g1.n + g2.n, es)


def add_pendant(g: Graph, v: int) -> Graph:
    """Attach a new pendant vertex (labeled n+1) to v."""
    if not 1 <= v <= g.n:
        raise GraphError(f"vertex {v} not in 1..{g.n}")
    return graph(g.n + 1, list(g.edges) + [(v, g.n + 1)])


def glue(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Identify v1 of g1 with v2 of g2.

    Relabeling: g1 keeps its labels 1..n1; the vertices of g2 other than v2
    get labels n1+1, n1+2, ... in increasing order of their g2 labels, and
    v2 maps to v1.  Result has n1+n2-1 vertices.
    """
    if not 1 <= v1 <= g1.n:
        raise GraphError(f"vertex {v1} not in 1..{g1.n}")
    if not 1 <= v2 <= g2.n:
        raise GraphError(f"vertex {v2} not in 1..{g2.n}")
    mapping = {}
    nxt = g1.n + 1
    for v in range(1, g2.n + 1):
        if v == v2:
            mapping[v] = v1
        else:
            mapping[v] = nxt
            nxt += 1
    es = list(g1.edges) + [tuple(sorted((mapping[u], mapping[v]))) for u, v in g2.edges]
    return graph(g1.n + g2.n - 1, es)


def split(g: Graph, v: int) -> list[Graph]:
    """Split at a cut vertex: induced pieces on (component of g-v) + {v}.

    Pieces are relabeled 1..k by increasing original label and ordered by
    least original vertex.  Gluing the pieces back at v is isomorphic to g.
    """
    if not 1 <= v <= g.n:
        raise GraphError(f"vertex {v} not in 1..{g.n}")
    rest = [w for w in g.vertices() if w != v]
    sub_edges = [(a, b) for a, b in g.edges if a != v and b != v]
    sub = graph(g.n, sub_edges)  # g - v, with v isolated; skip v below
    seen = {v}
    comps = []
    for s in rest:
        if s in seen:
            continue
        stack = [s]
        comp = []
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in sub.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    if len(comps) < 2:
        raise GraphError(f"vertex {v} is not a cut vertex")
    return [induced_subgraph(g, comp + [v]) for comp in comps]


# ---------------------------------------------------------------------------
# edge-list format: first non-comment line "n", then lines "u v" (1 <= u < v)


def parse_edge_list(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"edge-list is not valid UTF-8: {exc}") from None
    n = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphFormatError(f"line {lineno}: expected vertex count, got {line!r}") from None
            if n < 0:
                raise GraphFormatError(f"line {lineno}: vertex count must be >= 0")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integers, got {line!r}") from None
        if not (1 <= u < v <= n):
            raise GraphFormatError(f"line {lineno}: edge ({u},{v}) violates 1 <= u < v <= {n}")
        if (u, v) in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge ({u},{v}), first at line {seen[(u, v)]}")
        seen[(u, v)] = lineno
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("empty input: no vertex count line")
    return graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6 (McKay), short form only: n <= 62, one size byte


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"graph6 is not ASCII: {exc}") from None
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 input")
    first = ord(s[0]) - 63
    if first == 63:  # chr(126), long-size marker
        raise GraphFormatError("graph6 long form (n > 62) not supported")
    if not 0 <= first <= 62:
        raise GraphFormatError(f"byte 1: invalid graph6 size character {s[0]!r}")
    n = first
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise GraphFormatError(f"graph6 for n={n} needs {nbytes} data characters, got {len(body)}")
    bits = []
    for pos, ch in enumerate(body, start=2):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise GraphFormatError(f"byte {pos}: invalid graph6 character {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("graph6 padding bits are not zero")
    edges = []
    idx = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return graph(n, edges)


def serialize_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError("graph6 short form supports n <= 62 only")
    bits = []
    for j in range(2, g.n + 1):
        for i in range(1, j):
            bits.append(1 if (i, j) in g.edge_set else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_graph(text: str | bytes, format: str = "edge-list") -> Graph:
    if format == "edge-list":
        return parse_edge_list(text)
    if format == "graph6":
        return parse_graph6(text)
    raise GraphFormatError(f"unknown format {format!r} (expected 'edge-list' or 'graph6')")


def serialize_graph(g: Graph, format: str = "edge-list") -> str:
    if format == "edge-list":
        return serialize_edge_list(g)
    if format == "graph6":
        return serialize_graph6(g)
    raise GraphFormatError(f"unknown format {format!r} (expected 'edge-list' or 'graph6')")
