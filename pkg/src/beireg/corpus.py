"""Reference graph collections: the tree catalog, seeded random block
graphs, seeded glue pairs, and the named reconstruction graphs used by the
reports.

Every collection here is deterministic: the tree catalog enumerates
canonical forms in code order, and the random collections draw from a
fixed-seed generator, so repeated runs produce identical graphs in
identical order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import Graph, glue, graph, is_tree
from .structure import free_vertices, is_block_graph
from .trees import canonical_code, tree_catalog

BLOCK_CORPUS_SEED = 20260822
GLUE_CORPUS_SEED = 20260823


@dataclass(frozen=True)
class CorpusEntry:
    graph: Graph
    canonical_code: str
    n: int


def tree_corpus(max_n: int) -> list[CorpusEntry]:
    """All unlabeled trees with 1 <= n <= max_n, smaller sizes first,
    code-sorted within each size."""
    return [CorpusEntry(graph=e.graph, canonical_code=e.canonical_code, n=e.n)
            for e in tree_catalog(max_n)]


def _random_block_graph(rng: random.Random, max_n: int) -> Graph:
    """A connected block graph grown by repeatedly attaching a random
    clique (size 2-4) at a random existing vertex."""
    target = rng.randint(2, max_n)
    n = 1
    edges: list[tuple[int, int]] = []
    while n < target:
        size = rng.randint(2, 4)
        size = min(size, target - n + 1)
        if size < 2:
            break
        anchor = rng.randint(1, n)
        fresh = list(range(n + 1, n + size))
        members = [anchor] + fresh
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                edges.append((u, v))
        n += size - 1
    return graph(n, edges)


def block_graph_corpus(count: int = 50, max_n: int = 8,
                       seed: int = BLOCK_CORPUS_SEED) -> list[CorpusEntry]:
    """`count` distinct connected block graphs with n <= max_n, drawn from
    a fixed-seed generator; distinctness is by canonical code."""
    rng = random.Random(seed)
    out: list[CorpusEntry] = []
    seen: set[str] = set()
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 400 * count:
            raise ValueError(
                f"could not draw {count} distinct block graphs with "
                f"n <= {max_n}; the class is too small")
        g = _random_block_graph(rng, max_n)
        if g.n < 2 or not is_block_graph(g):
            continue
        code = canonical_code(g)
        if code in seen:
            continue
        seen.add(code)
        out.append(CorpusEntry(graph=g, canonical_code=code, n=g.n))
    return out


@dataclass(frozen=True)
class GluePair:
    g1: Graph
    v1: int
    g2: Graph
    v2: int
    glued: Graph
    canonical_code: str


def glue_pair_corpus(count: int = 30, max_total: int = 9,
                     seed: int = GLUE_CORPUS_SEED) -> list[GluePair]:
    """`count` pairs of small graphs glued at a vertex that is free
    (clique neighborhood) on both sides, with the glued graph on at most
    `max_total` vertices.  Pieces are drawn from the small-tree catalog
    and the seeded block-graph collection."""
    rng = random.Random(seed)
    pool: list[Graph] = [e.graph for e in tree_corpus(5) if e.n >= 2]
    pool += [e.graph for e in block_graph_corpus(8, 5, seed=seed + 1)]
    out: list[GluePair] = []
    seen: set[str] = set()
    while len(out) < count:
        g1 = rng.choice(pool)
        g2 = rng.choice(pool)
        if g1.n + g2.n - 1 > max_total:
            continue
        free1 = free_vertices(g1)
        free2 = free_vertices(g2)
        if not free1 or not free2:
            continue
        v1 = rng.choice(sorted(free1))
        v2 = rng.choice(sorted(free2))
        glued = glue(g1, v1, g2, v2)
        code = canonical_code(glued)
        if code in seen:
            continue
        seen.add(code)
        out.append(GluePair(g1=g1, v1=v1, g2=g2, v2=v2,
                            glued=glued, canonical_code=code))
    return out


def _clique_chain(sizes: list[int]) -> Graph:
    """Cliques of the given sizes in a chain, consecutive cliques sharing
    exactly one vertex; every vertex lies in at most two cliques."""
    n = 1
    cur = 1
    edges: list[tuple[int, int]] = []
    for size in sizes:
        fresh = list(range(n + 1, n + size))
        members = [cur] + fresh
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                edges.append((u, v))
        n += size - 1
        cur = n
    return graph(n, edges)


def build_figure_graphs() -> dict[str, Graph]:
    """Named reconstruction graphs, rebuilt from their published invariant
    counts (clique count, internal-vertex count, spine statistics) rather
    than from any picture's exact vertex placement.

    - "fig2": a block graph with 22 maximal cliques (twenty triangles and
      two edges in a chain), every vertex in at most two cliques; its
      clique count determines the regularity exactly.
    - "fig3": a tree with 25 internal vertices that is neither a
      caterpillar nor a lobster; splitting at degree-2 vertices breaks it
      into caterpillars and one pure lobster, so the internal count
      determines the regularity exactly.
    - "fig-double-jewel": the 19-vertex tree formed by two copies of the
      jewel sharing their center, a lobster whose best spine has length 4
      with four pure limbs and two whiskers.
    """
    fig2 = _clique_chain([3] * 20 + [2] * 2)

    # a three-armed tree: two whiskered caterpillar arms and one arm
    # carrying a pure limb; 33 vertices, 25 of them internal
    edges = [(1, 2)] + [(i, i + 1) for i in range(2, 10)]       # arm 1: 2..10
    edges += [(1, 11)] + [(i, i + 1) for i in range(11, 19)]    # arm 2: 11..19
    edges += [(1, 20)] + [(i, i + 1) for i in range(20, 27)]    # arm 3: 20..27
    edges += [(4, 30), (6, 31)]        # whiskers on arm 1
    edges += [(13, 32), (15, 33)]      # whiskers on arm 2
    edges += [(22, 28), (28, 29)]      # pure limb on arm 3
    fig3 = graph(33, edges)

    branches = range(2, 8)
    dj_edges = [(1, b) for b in branches]
    dj_edges += [(b, 2 * b + 4) for b in branches]
    dj_edges += [(b, 2 * b + 5) for b in branches]
    fig_double_jewel = graph(19, dj_edges)

    assert is_tree(fig3) and is_tree(fig_double_jewel)
    return {
        "fig2": fig2,
        "fig3": fig3,
        "fig-double-jewel": fig_double_jewel,
    }
