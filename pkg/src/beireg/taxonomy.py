"""Tree and block-graph taxonomy: caterpillars, lobsters, spines, whiskers,
limbs, and the path-with-cliques-and-limbs shape.

Conventions.  L(T) is the set of degree-1 vertices.  A tree is a caterpillar
if deleting L(T) leaves nothing or a simple path, and a lobster if deleting
L(T) leaves a caterpillar.  A spine is a longest path P of a lobster; pendant
edges meeting P are whiskers; each remaining non-leaf vertex u off P is the
center of a star (its closed neighborhood) called a limb.  A limb is pure if
it is a K_{1,2}, i.e. has exactly one leaf off the spine.  A pure lobster has
a spine with no whiskers and only pure limbs.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import (
    Graph,
    GraphError,
    components,
    graph,
    induced_subgraph,
    is_connected,
    is_tree,
)
from .structure import blocks_and_cut_vertices, is_block_graph, maximal_cliques
from .trees import contains_subtree

PATHCLIQUE_VERTEX_CAP = 60


# ---------------------------------------------------------------------------
# profiles


@dataclass(frozen=True)
class TreeProfile:
    is_tree: bool
    leaves: tuple[int, ...]
    internal_count: int
    is_caterpillar: bool
    is_lobster: bool
    is_pure_lobster: bool
    contains_jewel: bool


@dataclass(frozen=True)
class Limb:
    """A star hanging off a path: center off the path, one attachment on it,
    every other member a leaf of the whole graph."""
    attachment: int
    center: int
    leaves: tuple[int, ...]

    @property
    def pure(self) -> bool:
        return len(self.leaves) == 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((self.attachment, self.center) + self.leaves))


@dataclass(frozen=True)
class SpineDecomposition:
    spine: tuple[int, ...]
    whiskers: tuple[tuple[int, int], ...]  # (spine vertex, pendant leaf)
    limbs: tuple[Limb, ...]

    @property
    def ell(self) -> int:
        return len(self.spine) - 1

    @property
    def r(self) -> int:
        return len(self.whiskers)

    @property
    def t(self) -> int:
        return len(self.limbs)

    @property
    def pure_flags(self) -> tuple[bool, ...]:
        return tuple(limb.pure for limb in self.limbs)


@dataclass(frozen=True)
class PathCliqueDecomposition:
    """A path, size->=3 cliques each meeting it once, and pendant-star limbs,
    jointly covering every edge; carries the three validity conditions."""
    path: tuple[int, ...]
    cliques: tuple[tuple[int, ...], ...]
    limbs: tuple[Limb, ...]
    clique_sizes_ok: bool = True       # every clique has >= 3 vertices
    intersections_ok: bool = True      # parts pairwise share <= 1 vertex, on the path
    path_meets_ok: bool = True         # every part meets the path exactly once

    @property
    def ell(self) -> int:
        return len(self.path) - 1

    @property
    def r(self) -> int:
        return len(self.cliques)

    @property
    def t(self) -> int:
        return len(self.limbs)

    @property
    def bound(self) -> int:
        return self.ell + self.r + self.t

    @property
    def valid(self) -> bool:
        return self.clique_sizes_ok and self.intersections_ok and self.path_meets_ok


# ---------------------------------------------------------------------------
# tree classification


def tree_leaves(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in g.vertices() if g.degree(v) == 1)


def internal_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in g.vertices() if g.degree(v) >= 2)


def _is_path_shaped(g: Graph) -> bool:
    """Empty, or a single simple path."""
    if g.n == 0:
        return True
    return is_tree(g) and all(g.degree(v) <= 2 for v in g.vertices())


def is_caterpillar(g: Graph) -> bool:
    if not is_tree(g):
        raise GraphError("is_caterpillar requires a tree")
    core = internal_vertices(g)
    return _is_path_shaped(induced_subgraph(g, core))


def is_lobster(g: Graph) -> bool:
    if not is_tree(g):
        raise GraphError("is_lobster requires a tree")
    core = internal_vertices(g)
    if not core:
        return True
    return is_caterpillar(induced_subgraph(g, core))


def build_jewel() -> Graph:
    """The 10-vertex tree: a center joined to three vertices, each of which
    carries two pendant leaves."""
    edges = [(1, 2), (1, 3), (1, 4)]
    leaf = 5
    for b in (2, 3, 4):
        edges += [(b, leaf), (b, leaf + 1)]
        leaf += 2
    return graph(10, edges)


def classify_tree(g: Graph) -> TreeProfile:
    if not is_tree(g):
        raise GraphError("classify_tree requires a tree")
    leaves = tree_leaves(g)
    cat = is_caterpillar(g)
    lob = cat or is_lobster(g)
    # Pure lobster: some spine carries no whiskers and only K_{1,2} limbs.
    # Bare paths qualify vacuously (r = t = 0), matching the convention that
    # the exact value ell + t degenerates to the caterpillar value ell.
    pure = lob and any(
        d.r == 0 and all(d.pure_flags) for d in spine_decompositions(g)
    )
    return TreeProfile(
        is_tree=True,
        leaves=leaves,
        internal_count=g.n - len(leaves) if g.n >= 2 else 0,
        is_caterpillar=cat,
        is_lobster=lob,
        is_pure_lobster=pure,
        contains_jewel=contains_subtree(g, build_jewel()),
    )


# ---------------------------------------------------------------------------
# spines


def tree_longest_paths(g: Graph) -> list[tuple[int, ...]]:
    """All maximum-length paths of a tree, deduplicated up to reversal,
    via breadth-first distances (no backtracking, so no size cap)."""
    if not is_tree(g):
        raise GraphError("tree_longest_paths requires a tree")
    if g.n == 1:
        return [(1,)]
    dist: dict[int, dict[int, int]] = {}
    par: dict[int, dict[int, int]] = {}
    for s in g.vertices():
        d = {s: 0}
        p = {s: 0}
        q = [s]
        for v in q:
            for w in g.adj[v]:
                if w not in d:
                    d[w] = d[v] + 1
                    p[w] = v
                    q.append(w)
        dist[s] = d
        par[s] = p
    diameter = max(max(d.values()) for d in dist.values())
    out = []
    for u in g.vertices():
        for v in g.vertices():
            if u < v and dist[u][v] == diameter:
                path = [v]
                while path[-1] != u:
                    path.append(par[u][path[-1]])
                seq = tuple(reversed(path))
                out.append(min(seq, seq[::-1]))
    return sorted(set(out))


def _decompose_spine(g: Graph, spine: tuple[int, ...]) -> SpineDecomposition:
    on_spine = set(spine)
    internal = on_spine - {spine[0], spine[-1]}
    whiskers = []
    limbs = []
    rest = [v for v in g.vertices() if v not in on_spine]
    sub_edges = [(a, b) for a, b in g.edges if a not in on_spine and b not in on_spine]
    off = graph(g.n, sub_edges)
    seen: set[int] = set(on_spine)
    for s in rest:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in off.adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comp = sorted(comp)
        attach_edges = [(v, w) for v in comp for w in g.adj[v] if w in on_spine]
        if len(attach_edges) != 1:
            raise GraphError(f"off-spine component {comp} attaches {len(attach_edges)} times")
        center, attachment = attach_edges[0]
        if attachment not in internal:
            raise GraphError(
                f"component {comp} attaches at spine endpoint {attachment}, "
                "contradicting spine maximality")
        if len(comp) == 1:
            if g.degree(center) != 1:
                raise GraphError(f"single off-spine vertex {center} is not pendant")
            whiskers.append((attachment, center))
        else:
            crown = [v for v in comp if v != center]
            bad = [v for v in crown if g.adj[v] != (center,)]
            if bad:
                raise GraphError(
                    f"off-spine component {comp} is not a star on {center}: "
                    f"vertices {bad} reach outside it; not a lobster spine shape")
            limbs.append(Limb(attachment=attachment, center=center, leaves=tuple(crown)))
    return SpineDecomposition(
        spine=spine,
        whiskers=tuple(sorted(whiskers)),
        limbs=tuple(sorted(limbs, key=lambda l: (l.attachment, l.center))),
    )


def spine_decompositions(g: Graph) -> list[SpineDecomposition]:
    """One decomposition per longest path (up to reversal), sorted by spine."""
    if not is_lobster(g):
        raise GraphError("spine_decompositions requires a lobster")
    return [_decompose_spine(g, spine) for spine in tree_longest_paths(g)]


def extend_whiskers_to_limbs(g: Graph, spine: SpineDecomposition) -> Graph:
    """Append one pendant vertex at each whisker's leaf, turning the whisker
    into a pure limb.  Adds one vertex per whisker; the input graph is the
    induced subgraph of the output on its original labels."""
    edges = list(g.edges)
    nxt = g.n
    for _, leaf in spine.whiskers:
        nxt += 1
        edges.append((leaf, nxt))
    return graph(nxt, edges)


# ---------------------------------------------------------------------------
# path-with-cliques-and-limbs decomposition


def _bridge_forest(g: Graph) -> Graph:
    dec = blocks_and_cut_vertices(g)
    bridges = [b for b in dec.blocks if len(b) == 2]
    return graph(g.n, bridges)


def _candidate_paths(g: Graph) -> list[tuple[int, ...]]:
    """Single vertices plus every path of the bridge forest (paths in a
    forest are unique per endpoint pair)."""
    cands: list[tuple[int, ...]] = [(v,) for v in g.vertices()]
    forest = _bridge_forest(g)
    for comp in components(forest):
        if len(comp) == 1:
            continue
        sub = comp  # original labels
        for s in sub:
            # BFS trees rooted at s give the unique forest paths from s
            par = {s: 0}
            order = [s]
            for v in order:
                for w in forest.adj[v]:
                    if w not in par:
                        par[w] = v
                        order.append(w)
            for tvert in order:
                if tvert <= s:
                    continue
                path = [tvert]
                while path[-1] != s:
                    path.append(par[path[-1]])
                seq = tuple(reversed(path))
                cands.append(min(seq, seq[::-1]))
    return sorted(set(cands))


def _try_path_decomposition(g: Graph, path: tuple[int, ...],
                            big_cliques: list[tuple[int, ...]]) -> PathCliqueDecomposition | None:
    on_path = set(path)
    # every size->=3 maximal clique must meet the path in exactly one vertex
    for c in big_cliques:
        if len(set(c) & on_path) != 1:
            return None
    # Shape restriction for soundness of the ell + r + t bound.  Two regimes
    # are certified:
    #   * t = 0: the bound equals the number of maximal cliques (each path
    #     edge is one, plus the big cliques), a valid upper bound for any
    #     block graph.
    #   * r = 0 with every limb a K_{1,2} attached at an interior path
    #     vertex: splitting at the limb centers (degree 2) leaves a
    #     caterpillar plus single edges, so the bound ell + t is exact.
    # Mixed or larger shapes admit counterexamples and are rejected: gluing
    # a K_4 and a two-edge path at one vertex admits a single-vertex path
    # with one clique and one limb claiming 2, but the true value is 3; a
    # three-star tree (three K_{1,3} centers joined to one path vertex, each
    # with two extra leaves) admits a two-edge path with three limbs
    # claiming 5, but it contains the 10-vertex jewel tree, forcing >= 6.
    # a vertex in two big cliques must lie on the path
    membership: dict[int, int] = {}
    for c in big_cliques:
        for v in c:
            membership[v] = membership.get(v, 0) + 1
            if membership[v] > 1 and v not in on_path:
                return None
    clique_vertices = set(membership)
    limbs = []
    for x in g.vertices():
        if x in on_path:
            continue
        if x in clique_vertices:
            # interior clique vertex: all of its edges must stay in its clique
            home = next(set(c) for c in big_cliques if x in c)
            if not set(g.adj[x]) <= home:
                return None
        elif g.degree(x) >= 2:
            # limb center: one neighbor on the path, the rest pendant leaves
            path_nbrs = [w for w in g.adj[x] if w in on_path]
            crown = [w for w in g.adj[x] if w not in on_path]
            if len(path_nbrs) != 1 or any(g.degree(w) != 1 for w in crown):
                return None
            if big_cliques or len(crown) != 1 or path_nbrs[0] in (path[0], path[-1]):
                return None  # outside the certified shape space (see above)
            limbs.append(Limb(attachment=path_nbrs[0], center=x, leaves=tuple(sorted(crown))))
        else:
            # pendant vertex: must be the leaf of a limb, i.e. hang off a
            # vertex that is itself off the path (its center)
            if g.degree(x) == 0 or g.adj[x][0] in on_path:
                return None
    # coverage: path edges + clique edges + limb edges account for every edge
    covered = set()
    for a, b in zip(path, path[1:]):
        covered.add((min(a, b), max(a, b)))
    for c in big_cliques:
        for i, a in enumerate(c):
            for b in c[i + 1:]:
                covered.add((a, b))
    for limb in limbs:
        covered.add((min(limb.attachment, limb.center), max(limb.attachment, limb.center)))
        for w in limb.leaves:
            covered.add((min(limb.center, w), max(limb.center, w)))
    if covered != set(g.edges):
        return None
    return PathCliqueDecomposition(
        path=path,
        cliques=tuple(sorted(tuple(c) for c in big_cliques)),
        limbs=tuple(sorted(limbs, key=lambda l: (l.attachment, l.center))),
    )


def pathclique_decompose(g: Graph) -> PathCliqueDecomposition | None:
    """Best decomposition of g as path + cliques + pendant-star limbs, or
    None when the shape does not fit.  "Best" minimizes ell + r + t; ties
    break toward shorter paths, then lexicographically.

    Only the two certified regimes are searched: clique-only (t = 0, any
    number of size->=3 cliques) and pure-limb-only (r = 0, every limb a
    K_{1,2} attached at an interior path vertex); see the notes inside
    _try_path_decomposition for why mixed shapes are rejected.
    """
    if g.n > PATHCLIQUE_VERTEX_CAP:
        raise GraphError(
            f"pathclique_decompose searches candidate paths and is capped at "
            f"{PATHCLIQUE_VERTEX_CAP} vertices; got n={g.n}")
    if g.n == 0 or not is_connected(g) or not is_block_graph(g):
        return None
    big_cliques = [c for c in maximal_cliques(g) if len(c) >= 3]
    best: PathCliqueDecomposition | None = None
    for path in _candidate_paths(g):
        dec = _try_path_decomposition(g, path, big_cliques)
        if dec is None:
            continue
        key = (dec.bound, dec.ell, dec.path)
        if best is None or key < (best.bound, best.ell, best.path):
            best = dec
    return best
