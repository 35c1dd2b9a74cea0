"""Canonical forms, unlabeled tree enumeration, and subtree embedding.

Canonical codes are complete isomorphism invariants: trees get the classic
rooted code centered at the tree center, connected block graphs get the
code of their block-cut tree labeled by block sizes, everything else goes
through a refinement + individualization search over adjacency strings.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, components, graph, induced_subgraph, is_tree
from .structure import blocks_and_cut_vertices, is_block_graph


def tree_centers(g: Graph) -> list[int]:
    """The 1 or 2 middle vertices of a tree, by repeated leaf peeling."""
    if not is_tree(g):
        raise GraphError("tree_centers requires a tree")
    if g.n == 1:
        return [1]
    deg = {v: g.degree(v) for v in g.vertices()}
    layer = sorted(v for v in g.vertices() if deg[v] == 1)
    remaining = g.n
    while remaining > 2:
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in g.adj[v]:
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        remaining -= len(layer)
        layer = sorted(nxt)
    return sorted(layer)


def _rooted_code(g: Graph, root: int) -> str:
    """Canonical code of the tree rooted at root: '(' sorted child codes ')'."""
    # iterative post-order to dodge recursion limits
    code: dict[int, str] = {}
    stack: list[tuple[int, int, bool]] = [(root, 0, False)]
    while stack:
        v, parent, done = stack.pop()
        if done:
            kids = sorted(code[w] for w in g.adj[v] if w != parent)
            code[v] = "(" + "".join(kids) + ")"
        else:
            stack.append((v, parent, True))
            for w in g.adj[v]:
                if w != parent:
                    stack.append((w, v, False))
    return code[root]


def tree_code(g: Graph) -> str:
    """Canonical code of an unlabeled tree (min over center rootings)."""
    cs = tree_centers(g)
    return min(_rooted_code(g, c) for c in cs)


def tree_from_code(code: str) -> Graph:
    """Rebuild the canonically labeled tree from its code (preorder labels,
    children ordered by code so the result depends only on the code)."""
    # parse: at each '(' start a child of the current node
    n = code.count("(")
    edges = []
    label = 0
    stack: list[int] = []
    for ch in code:
        if ch == "(":
            label += 1
            if stack:
                edges.append((stack[-1], label))
            stack.append(label)
        else:
            stack.pop()
    return graph(n, edges)


def canonical_tree(g: Graph) -> Graph:
    """Canonically labeled representative of a tree's isomorphism class."""
    return tree_from_code(tree_code(g))


# ---------------------------------------------------------------------------
# canonical codes for general graphs


def _block_graph_code(g: Graph) -> str:
    """Code of a connected block graph: its block-cut tree with block-size
    labels, canonically rooted.  Complete invariant because blocks are
    cliques, so block sizes plus tree shape determine the graph."""
    dec = blocks_and_cut_vertices(g)
    cuts = set(dec.cut_vertices)
    # nodes: block index -> ('B', size); cut vertex v -> ('C',)
    adj: dict[object, list[object]] = {}
    labels: dict[object, str] = {}
    for bi, block in enumerate(dec.blocks):
        bnode = ("B", bi)
        adj.setdefault(bnode, [])
        labels[bnode] = f"b{len(block)}"
        for v in block:
            if v in cuts:
                cnode = ("C", v)
                adj.setdefault(cnode, [])
                labels[cnode] = "c"
                adj[bnode].append(cnode)
                adj[cnode].append(bnode)
    # center of the block-cut tree by leaf peeling
    nodes = list(adj)
    if len(nodes) == 1:
        centers = nodes
    else:
        deg = {x: len(adj[x]) for x in nodes}
        layer = [x for x in nodes if deg[x] == 1]
        remaining = len(nodes)
        while remaining > 2:
            nxt = []
            for x in layer:
                deg[x] = 0
                for y in adj[x]:
                    if deg[y] > 0:
                        deg[y] -= 1
                        if deg[y] == 1:
                            nxt.append(y)
            remaining -= len(layer)
            layer = nxt
        centers = layer

    def code_from(root, parent):
        kids = sorted(code_from(w, root) for w in adj[root] if w != parent)
        return "(" + labels[root] + "".join(kids) + ")"

    return min(code_from(c, None) for c in centers)


def _refine(n: int, adjsets: list[set[int]], colors: list[int]) -> list[int]:
    """1-dimensional Weisfeiler-Leman color refinement to a stable partition."""
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adjsets[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _search_min_adjacency(g: Graph) -> str:
    """Minimum adjacency bitstring over refinement-respecting labelings."""
    n = g.n
    adjsets = [set(w - 1 for w in g.adj[v + 1]) for v in range(n)]
    best: list[str] = []

    def adjacency_string(order: list[int]) -> str:
        pos = {v: i for i, v in enumerate(order)}
        bits = []
        for j in range(1, n):
            for i in range(j):
                bits.append("1" if order[i] in adjsets[order[j]] else "0")
        return "".join(bits)

    def rec(colors: list[int]) -> None:
        colors = _refine(n, adjsets, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        cell_list = [cells[c] for c in sorted(cells)]
        target = next((cell for cell in cell_list if len(cell) > 1), None)
        if target is None:
            order = [cell[0] for cell in cell_list]
            s = adjacency_string(order)
            if not best or s < best[0]:
                best.clear()
                best.append(s)
            return
        fresh = max(colors) + 1
        for v in target:
            child = list(colors)
            child[v] = fresh
            rec(child)

    rec([0] * n)
    return best[0]


def canonical_code(g: Graph) -> str:
    """Complete isomorphism-invariant code for any graph at desk scale."""
    comps = components(g)
    if len(comps) != 1:
        parts = sorted(canonical_code(induced_subgraph(g, comp)) for comp in comps)
        return "D[" + ",".join(parts) + "]"
    if g.n == 0:
        return "D[]"
    if is_tree(g):
        return "T" + tree_code(g)
    if is_block_graph(g):
        return "B" + _block_graph_code(g)
    return f"G{g.n}:" + _search_min_adjacency(g)


def canonical_graph(g: Graph) -> Graph:
    """A canonically labeled representative of g's isomorphism class
    (isomorphic to g; equal for isomorphic inputs)."""
    comps = components(g)
    if len(comps) != 1:
        subs = [induced_subgraph(g, comp) for comp in comps]
        subs = [canonical_graph(s) for s in subs]
        subs.sort(key=canonical_code)
        total = sum(s.n for s in subs)
        edges = []
        off = 0
        for s in subs:
            edges += [(u + off, v + off) for u, v in s.edges]
            off += s.n
        return graph(total, edges)
    if g.n == 0:
        return g
    if is_tree(g):
        return canonical_tree(g)
    if is_block_graph(g):
        return _block_graph_from_code(_block_graph_code(g))
    # general: rebuild from the minimum adjacency string
    s = _search_min_adjacency(g)
    edges = []
    idx = 0
    for j in range(2, g.n + 1):
        for i in range(1, j):
            if s[idx] == "1":
                edges.append((i, j))
            idx += 1
    return graph(g.n, edges)


def _parse_labeled_code(code: str) -> tuple[str, list]:
    """Parse '(label child child ...)' into (label, [children])."""
    assert code[0] == "(" and code[-1] == ")"
    inner = code[1:-1]
    cut = inner.find("(")
    if cut == -1:
        return inner, []
    label = inner[:cut]
    kids = []
    depth = 0
    start = cut
    for i in range(cut, len(inner)):
        if inner[i] == "(":
            if depth == 0:
                start = i
            depth += 1
        elif inner[i] == ")":
            depth -= 1
            if depth == 0:
                kids.append(_parse_labeled_code(inner[start:i + 1]))
    return label, kids


def _block_graph_from_code(code: str) -> Graph:
    """Deterministically rebuild a block graph from its block-cut-tree code."""
    label, kids = _parse_labeled_code(code)
    edges: list[tuple[int, int]] = []
    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0]

    def build_block(label: str, kids: list, shared: int | None) -> None:
        size = int(label[1:])
        verts = [shared] if shared is not None else []
        for klabel, kkids in kids:
            v = fresh()
            verts.append(v)
            build_cut(kkids, v)
        while len(verts) < size:
            verts.append(fresh())
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                edges.append((verts[i], verts[j]))

    def build_cut(kids: list, vertex: int) -> None:
        for klabel, kkids in kids:
            build_block(klabel, kkids, vertex)

    if label == "c":
        v = fresh()
        build_cut(kids, v)
    else:
        build_block(label, kids, None)
    return graph(counter[0], edges)


# ---------------------------------------------------------------------------
# unlabeled tree enumeration (one representative per isomorphism class)


@dataclass(frozen=True)
class TreeCatalogEntry:
    graph: Graph
    canonical_code: str
    n: int


_TREE_LEVELS: dict[int, tuple[tuple[str, Graph], ...]] = {}

ENUMERATE_TREES_CAP = 16


def _tree_level(n: int) -> tuple[tuple[str, Graph], ...]:
    """All trees on n vertices as (code, canonical graph), sorted by code.

    Generation is by canonical parent: a tree T on n vertices is kept under
    the parent S on n-1 vertices iff deleting the code-minimizing leaf of T
    yields S.  Each class therefore appears exactly once.
    """
    if n in _TREE_LEVELS:
        return _TREE_LEVELS[n]
    if n == 1:
        level: tuple[tuple[str, Graph], ...] = (("()", graph(1, [])),)
        _TREE_LEVELS[1] = level
        return level
    out: list[tuple[str, Graph]] = []
    for parent_code, parent in _tree_level(n - 1):
        seen_children: set[str] = set()
        for v in parent.vertices():
            child = graph(n, list(parent.edges) + [(v, n)])
            ccode = tree_code(child)
            if ccode in seen_children:
                continue
            seen_children.add(ccode)
            leaves = [u for u in child.vertices() if child.degree(u) == 1]
            parent_of_child = min(
                tree_code(induced_subgraph(child, [w for w in child.vertices() if w != u]))
                for u in leaves)
            if parent_of_child == parent_code:
                out.append((ccode, tree_from_code(ccode)))
    out.sort(key=lambda t: t[0])
    level = tuple(out)
    _TREE_LEVELS[n] = level
    return level


def enumerate_trees(n: int):
    """Yield one TreeCatalogEntry per isomorphism class of trees on n
    vertices, in deterministic (code-sorted) order."""
    if not 1 <= n <= ENUMERATE_TREES_CAP:
        raise GraphError(f"enumerate_trees supports 1 <= n <= {ENUMERATE_TREES_CAP}, got {n}")
    for code, g in _tree_level(n):
        yield TreeCatalogEntry(graph=g, canonical_code="T" + code, n=n)


def tree_catalog(max_n: int) -> list[TreeCatalogEntry]:
    """All trees with 1 <= n <= max_n, smaller sizes first."""
    out = []
    for n in range(1, max_n + 1):
        out.extend(enumerate_trees(n))
    return out


# ---------------------------------------------------------------------------
# subtree embedding


def contains_subtree(host: Graph, pattern: Graph) -> bool:
    """True iff pattern embeds as a subgraph of host (both trees).

    Backtracking over injective maps that send edges to edges; for trees a
    subgraph embedding of a tree is automatically induced on its image.
    """
    if not is_tree(host) or not is_tree(pattern):
        raise GraphError("contains_subtree requires two trees")
    if pattern.n > host.n:
        return False
    # order pattern vertices so each (after the first) touches an earlier one
    order = [1]
    seen = {1}
    parent: dict[int, int] = {}
    i = 0
    while len(order) < pattern.n:
        v = order[i]
        for w in pattern.adj[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                order.append(w)
        i += 1

    pdeg = {v: pattern.degree(v) for v in pattern.vertices()}
    hdeg = {v: host.degree(v) for v in host.vertices()}
    image: dict[int, int] = {}
    used: set[int] = set()

    def place(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        candidates = host.vertices() if k == 0 else host.adj[image[parent[v]]]
        for h in candidates:
            if h in used or hdeg[h] < pdeg[v]:
                continue
            image[v] = h
            used.add(h)
            if place(k + 1):
                return True
            used.remove(h)
            del image[v]
        return False

    return place(0)
