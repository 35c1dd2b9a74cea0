"""Structural decompositions: blocks, cliques, free vertices, longest paths."""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, components, induced_subgraph, is_connected

LONGEST_PATH_CAP = 25


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]


def blocks_and_cut_vertices(g: Graph) -> BlockDecomposition:
    """Blocks (2-connected components / bridges) and cut vertices of a
    connected graph, by the usual lowpoint DFS, made iterative.

    Blocks are sorted vertex tuples, ordered by (least vertex, size, tuple).
    """
    if not is_connected(g):
        comps = components(g)
        raise GraphError(f"graph is disconnected; components: {comps}")
    if g.n == 0:
        return BlockDecomposition((), ())
    if g.n == 1:
        return BlockDecomposition(((1,),), ())

    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    edge_stack: list[tuple[int, int]] = []
    blocks: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    counter = 0

    root = 1
    # stack entries: (v, parent, iterator over adj)
    stack = [(root, 0, iter(g.adj[root]))]
    disc[root] = low[root] = counter
    counter += 1
    root_children = 0

    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                # skip one occurrence of the tree edge back to the parent
                parent = 0
                stack[-1] = (v, parent, it)
                continue
            if w not in disc:
                edge_stack.append((v, w))
                disc[w] = low[w] = counter
                counter += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            elif disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if stack:
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                # u closes a block containing the edge (u, v)
                verts = set()
                while edge_stack:
                    a, b = edge_stack[-1]
                    if disc[a] >= disc[v] or (a, b) == (u, v):
                        edge_stack.pop()
                        verts.add(a)
                        verts.add(b)
                        if (a, b) == (u, v):
                            break
                    else:
                        break
                blocks.append(tuple(sorted(verts)))
                if u != root:
                    cuts.add(u)
    if root_children >= 2:
        cuts.add(root)
    blocks.sort(key=lambda b: (b[0], len(b), b))
    return BlockDecomposition(tuple(blocks), tuple(sorted(cuts)))


def cut_vertices(g: Graph) -> tuple[int, ...]:
    return blocks_and_cut_vertices(g).cut_vertices


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques via Bron-Kerbosch with pivoting, sorted output."""
    if g.n == 0:
        return []
    adj = {v: set(g.adj[v]) for v in g.vertices()}
    out: list[tuple[int, ...]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(sorted(p | x), key=lambda u: len(p & adj[u]))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand(set(), set(g.vertices()), set())
    return sorted(out)


def clique_count(g: Graph) -> int:
    return len(maximal_cliques(g))


def is_block_graph(g: Graph) -> bool:
    """True iff every block induces a clique (checked per component)."""
    if g.n == 0:
        return True
    for comp in components(g):
        sub = induced_subgraph(g, comp)
        for block in blocks_and_cut_vertices(sub).blocks:
            for i, u in enumerate(block):
                for v in block[i + 1:]:
                    if not sub.has_edge(u, v):
                        return False
    return True


def free_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices whose neighborhood induces a clique (simplicial vertices)."""
    out = []
    for v in g.vertices():
        nbrs = g.adj[v]
        ok = all(g.has_edge(nbrs[i], nbrs[j])
                 for i in range(len(nbrs)) for j in range(i + 1, len(nbrs)))
        if ok:
            out.append(v)
    return tuple(out)


def longest_paths(g: Graph, induced: bool = False) -> list[tuple[int, ...]]:
    """All maximum-length simple paths (induced paths when the flag is set),
    deduplicated up to reversal, exhaustive backtracking.

    Refuses graphs with more than LONGEST_PATH_CAP vertices.
    """
    if g.n > LONGEST_PATH_CAP:
        raise GraphError(
            f"longest_paths is exhaustive and capped at {LONGEST_PATH_CAP} vertices; got n={g.n}")
    if g.n == 0:
        return []
    best_len = 0
    best: set[tuple[int, ...]] = {(v,) for v in g.vertices()}
    path: list[int] = []
    on_path: set[int] = set()

    def note(seq: tuple[int, ...]) -> None:
        nonlocal best_len, best
        length = len(seq) - 1
        if length > best_len:
            best_len = length
            best = set()
        if length == best_len:
            best.add(min(seq, seq[::-1]))

    def extend() -> None:
        v = path[-1]
        for w in g.adj[v]:
            if w in on_path:
                continue
            if induced and any(g.has_edge(w, u) for u in path[:-1]):
                continue
            path.append(w)
            on_path.add(w)
            note(tuple(path))
            extend()
            on_path.remove(w)
            path.pop()

    for s in g.vertices():
        path = [s]
        on_path = {s}
        extend()
    return sorted(best)


def longest_path_length(g: Graph, induced: bool = False) -> int:
    paths = longest_paths(g, induced=induced)
    return 0 if not paths else len(paths[0]) - 1
