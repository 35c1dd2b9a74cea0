"""Tests for canonical codes, tree enumeration, and subtree embedding.

Enumeration is cross-validated against an independent construction: decoding
every labeled tree on n vertices from its attachment sequence and counting
distinct canonical codes.  Unlabeled counts are the published values
(OEIS A000055 for trees, A000088 for graphs).
"""
import itertools
import random

import pytest

from beireg.graphs import (
    Graph,
    GraphError,
    complete_graph,
    disjoint_union,
    glue,
    graph,
    induced_subgraph,
    path_graph,
    relabel,
    star_graph,
)
from beireg.trees import (
    canonical_code,
    canonical_graph,
    canonical_tree,
    contains_subtree,
    enumerate_trees,
    tree_catalog,
    tree_centers,
    tree_code,
    tree_from_code,
)

# number of unlabeled trees on n >= 1 vertices (OEIS A000055)
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
# number of unlabeled simple graphs on n >= 0 vertices (OEIS A000088)
GRAPH_COUNTS = [1, 1, 2, 4, 11, 34]


def random_labeled_tree(rng: random.Random, n: int) -> Graph:
    if n == 1:
        return graph(1, [])
    return graph(n, [(rng.randrange(1, k), k) for k in range(2, n + 1)])


def shuffled(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(1, g.n + 1))
    rng.shuffle(perm)
    return relabel(g, {v: perm[v - 1] for v in g.vertices()})


def prufer_tree(seq: tuple[int, ...], n: int) -> Graph:
    """Standard decode of a length n-2 sequence over 1..n into a labeled tree."""
    degs = [1] * (n + 1)
    for x in seq:
        degs[x] += 1
    verts = set(range(1, n + 1))
    edges = []
    for x in seq:
        leaf = min(v for v in verts if degs[v] == 1)
        edges.append((leaf, x))
        verts.remove(leaf)
        degs[x] -= 1
    edges.append(tuple(sorted(verts)))
    return graph(n, edges)


# ---------------------------------------------------------------------------
# centers


def test_tree_centers():
    assert tree_centers(path_graph(5)) == [3]
    assert tree_centers(path_graph(6)) == [3, 4]
    assert tree_centers(star_graph(4)) == [1]
    assert tree_centers(graph(1, [])) == [1]
    assert tree_centers(path_graph(2)) == [1, 2]
    with pytest.raises(GraphError):
        tree_centers(complete_graph(3))


def test_tree_centers_minimize_eccentricity():
    rng = random.Random(3)
    for _ in range(40):
        t = random_labeled_tree(rng, rng.randrange(1, 12))

        def ecc(s):
            dist = {s: 0}
            q = [s]
            for v in q:
                for w in t.adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        q.append(w)
            return max(dist.values())

        eccs = {v: ecc(v) for v in t.vertices()}
        m = min(eccs.values())
        assert tree_centers(t) == sorted(v for v in t.vertices() if eccs[v] == m)


# ---------------------------------------------------------------------------
# tree codes


def test_tree_code_invariant_under_relabeling():
    rng = random.Random(5)
    for _ in range(60):
        t = random_labeled_tree(rng, rng.randrange(1, 13))
        assert tree_code(shuffled(rng, t)) == tree_code(t)


def test_tree_code_separates_small_classes():
    # the two trees on 4 vertices
    assert tree_code(path_graph(4)) != tree_code(star_graph(3))


def test_tree_from_code_roundtrip():
    rng = random.Random(7)
    for _ in range(40):
        t = random_labeled_tree(rng, rng.randrange(1, 13))
        code = tree_code(t)
        rebuilt = tree_from_code(code)
        assert rebuilt.n == t.n
        assert tree_code(rebuilt) == code


def test_canonical_tree_idempotent_and_invariant():
    rng = random.Random(9)
    for _ in range(40):
        t = random_labeled_tree(rng, rng.randrange(1, 11))
        c = canonical_tree(t)
        assert canonical_tree(c) == c
        assert canonical_tree(shuffled(rng, t)) == c


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_counts_match_published_values():
    for n, want in enumerate(TREE_COUNTS, start=1):
        got = list(enumerate_trees(n))
        assert len(got) == want, f"n={n}"
        codes = {e.canonical_code for e in got}
        assert len(codes) == want  # pairwise distinct classes
        for e in got:
            assert e.n == n and e.graph.n == n
            assert canonical_code(e.graph) == e.canonical_code


def test_enumerate_is_deterministic_and_sorted():
    a = [e.canonical_code for e in enumerate_trees(7)]
    b = [e.canonical_code for e in enumerate_trees(7)]
    assert a == b == sorted(a)


def test_enumerate_against_exhaustive_labeled_trees():
    # decode all n^(n-2) attachment sequences; the set of canonical codes
    # must equal the enumerated set exactly
    for n in range(2, 8):
        expected = {e.canonical_code.removeprefix("T") for e in enumerate_trees(n)}
        seen = set()
        if n == 2:
            seen = {tree_code(path_graph(2))}
        else:
            for seq in itertools.product(range(1, n + 1), repeat=n - 2):
                seen.add(tree_code(prufer_tree(seq, n)))
        assert seen == expected, f"n={n}"


def test_tree_catalog_and_bounds():
    cat = tree_catalog(6)
    assert len(cat) == sum(TREE_COUNTS[:6])
    assert [e.n for e in cat] == sorted(e.n for e in cat)
    with pytest.raises(GraphError):
        list(enumerate_trees(0))
    with pytest.raises(GraphError):
        list(enumerate_trees(17))


# ---------------------------------------------------------------------------
# general canonical codes


def test_canonical_code_counts_all_graphs():
    # distinct codes over every labeled graph on n vertices must match the
    # published number of isomorphism classes
    for n in range(0, 5):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        codes = set()
        for mask in range(1 << len(pairs)):
            edges = [e for k, e in enumerate(pairs) if mask >> k & 1]
            codes.add(canonical_code(graph(n, edges)))
        assert len(codes) == GRAPH_COUNTS[n], f"n={n}"


def test_canonical_code_counts_n5():
    pairs = list(itertools.combinations(range(1, 6), 2))
    codes = set()
    for mask in range(1 << 10):
        edges = [e for k, e in enumerate(pairs) if mask >> k & 1]
        codes.add(canonical_code(graph(5, edges)))
    assert len(codes) == GRAPH_COUNTS[5]


def test_canonical_code_invariance_random():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randrange(1, 8)
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 if rng.random() < 0.4]
        g = graph(n, edges)
        assert canonical_code(shuffled(rng, g)) == canonical_code(g)


def test_canonical_code_block_graph_branch():
    rng = random.Random(29)
    for _ in range(30):
        # random block graph: glue random cliques onto random vertices
        g = complete_graph(rng.randrange(2, 5))
        for _ in range(rng.randrange(1, 5)):
            v = rng.randrange(1, g.n + 1)
            g = glue(g, v, complete_graph(rng.randrange(2, 5)), 1)
        code = canonical_code(g)
        assert code.startswith("B") or code.startswith("T")
        assert canonical_code(shuffled(rng, g)) == code


def test_canonical_code_distinguishes_block_graphs():
    # same block sizes, different attachment: K_3 with two pendants at one
    # vertex vs. at two different vertices
    a = glue(glue(complete_graph(3), 1, path_graph(2), 1), 1, path_graph(2), 1)
    b = glue(glue(complete_graph(3), 1, path_graph(2), 1), 2, path_graph(2), 1)
    assert canonical_code(a) != canonical_code(b)


def test_canonical_code_disconnected():
    rng = random.Random(31)
    g = disjoint_union(complete_graph(3), path_graph(4))
    h = disjoint_union(path_graph(4), complete_graph(3))
    assert canonical_code(g) == canonical_code(h)
    assert canonical_code(g).startswith("D[")
    assert canonical_code(shuffled(rng, g)) == canonical_code(g)
    assert canonical_code(graph(0, [])) == "D[]"
    assert canonical_code(graph(2, [])) != canonical_code(path_graph(2))


def test_canonical_graph_is_canonical():
    rng = random.Random(37)
    for _ in range(30):
        n = rng.randrange(1, 8)
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                 if rng.random() < 0.4]
        g = graph(n, edges)
        c = canonical_graph(g)
        assert c.n == g.n and c.num_edges() == g.num_edges()
        assert canonical_code(c) == canonical_code(g)
        assert canonical_graph(shuffled(rng, g)) == c
        assert canonical_graph(c) == c


def test_canonical_graph_block_graph():
    rng = random.Random(41)
    g = complete_graph(4)
    for v in [1, 2, 2]:
        g = glue(g, v, complete_graph(3), 1)
    c = canonical_graph(g)
    assert c.n == g.n and c.num_edges() == g.num_edges()
    assert canonical_code(c) == canonical_code(g)
    assert canonical_graph(shuffled(rng, g)) == c


# ---------------------------------------------------------------------------
# subtree embedding


def oracle_contains(host: Graph, pattern: Graph) -> bool:
    for image in itertools.permutations(host.vertices(), pattern.n):
        phi = {v: image[v - 1] for v in pattern.vertices()}
        if all(host.has_edge(phi[u], phi[v]) for u, v in pattern.edges):
            return True
    return False


def test_contains_subtree_hand_values():
    assert contains_subtree(path_graph(6), path_graph(4))
    assert not contains_subtree(path_graph(6), star_graph(3))
    assert contains_subtree(star_graph(5), star_graph(3))
    assert not contains_subtree(star_graph(5), path_graph(4))
    assert contains_subtree(path_graph(4), path_graph(4))
    assert not contains_subtree(path_graph(3), path_graph(4))
    assert contains_subtree(path_graph(3), graph(1, []))
    with pytest.raises(GraphError):
        contains_subtree(complete_graph(3), path_graph(2))


def test_contains_subtree_against_oracle():
    rng = random.Random(43)
    for _ in range(120):
        host = random_labeled_tree(rng, rng.randrange(1, 8))
        pattern = random_labeled_tree(rng, rng.randrange(1, 8))
        assert contains_subtree(host, pattern) == oracle_contains(host, pattern)


def test_contains_subtree_spider():
    # spider with three legs of length 2 embeds in trees with a degree-3
    # vertex whose branches are long enough
    spider = graph(7, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])
    host = graph(9, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7), (3, 8), (8, 9)])
    assert contains_subtree(host, spider)
    # degree-4 hub but only two branches of length 2: no embedding
    host2 = graph(7, [(1, 2), (1, 3), (1, 4), (4, 5), (1, 6), (6, 7)])
    assert not contains_subtree(host2, spider)
