"""Certified regularity rules for binomial edge ideals of trees and block
graphs.

Each rule converts one combinatorial hypothesis about a graph G into a lower
bound, an upper bound, or an exact value for reg(S/J_G), packaged as a
RuleApplication.  apply_all_rules intersects every contribution that fired
into a RegularityInterval carrying the full provenance; a certified rule is
never allowed to be wrong, only to abstain, so an empty intersection is a
hard error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, components, induced_subgraph, is_tree
from .structure import (
    LONGEST_PATH_CAP,
    clique_count,
    cut_vertices,
    is_block_graph,
    longest_path_length,
    maximal_cliques,
)
from .taxonomy import (
    build_jewel,
    is_caterpillar,
    is_lobster,
    pathclique_decompose,
    spine_decompositions,
    tree_longest_paths,
)
from .trees import canonical_code, contains_subtree

INFINITE = math.inf

# Evaluation budget for the recursive decomposition engine (number of distinct
# subgraphs evaluated per apply_all_rules invocation) and the state cap for
# the degree-two split search.
DECOMPOSE_BUDGET = 4000
CATLOB_STATE_CAP = 1 << 16

# Closed registry: every RuleApplication carries one of these identifiers and
# the matching one-sentence statement of the inequality or equality it applies.
RULE_ANCHORS: dict[str, str] = {
    "general-bounds": (
        "the length of a longest induced path bounds reg(S/J_G) from below"
        " and n-1 bounds it from above; a block graph also satisfies"
        " reg(S/J_G) <= c(G), its number of maximal cliques; a graph with no"
        " edges has reg(S/J_G) = 0"
    ),
    "tree-internal-lower": (
        "a tree with at least one edge and m internal vertices satisfies"
        " reg(S/J_G) >= m+1"
    ),
    "jewel-lower": (
        "a tree that contains the jewel (three branches at one center, each"
        " branch a vertex with two pendant leaves) as a subtree satisfies"
        " reg(S/J_G) >= m+2"
    ),
    "lobster-family": (
        "a lobster with spine length l, t limbs and r whiskers satisfies"
        " reg(S/J_G) >= l+t for every spine; when every limb is pure,"
        " reg(S/J_G) <= l+t if r = 0 and reg(S/J_G) <= l+t+r+2 otherwise; a"
        " pure lobster attains reg(S/J_G) = l+t"
    ),
    "path-clique-upper": (
        "a connected block graph assembled from a path of length l, r cliques"
        " of size >= 3 each meeting the path in one vertex, and t pure limbs"
        " satisfies reg(S/J_G) <= l+r+t; applied in the certified regimes"
        " t = 0 or r = 0"
    ),
    "caterpillar-exact": (
        "a caterpillar with spine length l satisfies reg(S/J_G) = l"
    ),
    "clique-count-exact": (
        "a connected block graph in which every vertex lies in at most two"
        " maximal cliques satisfies reg(S/J_G) = c(G)"
    ),
    "caterpillar-lobster-split-exact": (
        "a tree that splits at degree-two cut vertices into caterpillars and"
        " pure lobsters satisfies reg(S/J_G) = m+1"
    ),
    "clique-with-paths": (
        "attaching vertex-disjoint paths of lengths r_1..r_s to distinct"
        " vertices of the complete graph K_s (s >= 3) gives"
        " reg(S/J_G) = 1 + sum(r_i)"
    ),
    "star-with-paths": (
        "attaching vertex-disjoint paths, one to each leaf of the star"
        " K_{1,k} (k >= 3), gives reg(S/J_G) = 2 + sum(r_i) where r_i is the"
        " attached length beyond the star's own edge"
    ),
    "free-split-additivity": (
        "if a cut vertex splits the graph into exactly two pieces and is a"
        " free vertex of both, reg(S/J_G) is the sum of the two pieces'"
        " values; regularity also adds over disjoint components"
    ),
    "pendant-extension": (
        "attaching a pendant edge at a free vertex raises reg(S/J_G) by"
        " exactly one"
    ),
}
RULE_IDS = frozenset(RULE_ANCHORS)

# Rules whose statements the source material takes from the prior literature.
_CITED = frozenset({"general-bounds", "caterpillar-exact"})

_KINDS = ("lower", "upper", "exact")


class RuleInconsistencyError(RuntimeError):
    """A certified lower bound exceeded a certified upper bound.

    The rules cannot contradict each other on any input they accept, so this
    always signals an implementation bug; the conflicting applications ride
    along for diagnosis.
    """

    def __init__(self, message: str, provenance: tuple["RuleApplication", ...]):
        super().__init__(message)
        self.provenance = tuple(provenance)


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


@dataclass(frozen=True)
class RuleApplication:
    """One firing of one rule: its identifier, the statement it applied, the
    invariant values consumed, and a single lower/upper/exact contribution."""

    rule_id: str
    anchor: str
    inputs: dict
    kind: str
    value: int
    cited: bool = False

    def __post_init__(self):
        if self.rule_id not in RULE_IDS:
            raise ValueError(f"unknown rule id {self.rule_id!r}")
        if self.anchor != RULE_ANCHORS[self.rule_id]:
            raise ValueError(f"anchor does not match registry for {self.rule_id!r}")
        if self.kind not in _KINDS:
            raise ValueError(f"contribution kind must be one of {_KINDS}, got {self.kind!r}")
        if not isinstance(self.value, int) or isinstance(self.value, bool) or self.value < 0:
            raise ValueError(f"contribution value must be a nonnegative integer, got {self.value!r}")

    @property
    def contribution(self) -> dict:
        return {self.kind: self.value}

    def to_json(self) -> dict:
        out = {
            "rule_id": self.rule_id,
            "anchor": self.anchor,
            "inputs": {k: _jsonable(v) for k, v in sorted(self.inputs.items())},
            "contribution": {self.kind: self.value},
        }
        if self.cited:
            out["cited-in-paper"] = True
        return out


def _app(rule_id: str, kind: str, value: int, **inputs) -> RuleApplication:
    return RuleApplication(
        rule_id=rule_id,
        anchor=RULE_ANCHORS[rule_id],
        inputs=inputs,
        kind=kind,
        value=value,
        cited=rule_id in _CITED,
    )


@dataclass(frozen=True)
class RegularityInterval:
    """Certified bounds lo <= reg(S/J_G) <= hi with the applications that
    produced them; hi is math.inf when no upper bound fired."""

    lo: int
    hi: int | float
    provenance: tuple[RuleApplication, ...] = ()

    def __post_init__(self):
        if not isinstance(self.lo, int) or isinstance(self.lo, bool) or self.lo < 0:
            raise ValueError(f"lo must be a nonnegative integer, got {self.lo!r}")
        if self.hi != INFINITE and (not isinstance(self.hi, int) or isinstance(self.hi, bool)):
            raise ValueError(f"hi must be an integer or math.inf, got {self.hi!r}")
        if self.hi < self.lo:
            raise ValueError(f"empty interval: lo {self.lo} > hi {self.hi}")
        if not isinstance(self.provenance, tuple):
            raise ValueError("provenance must be a tuple of RuleApplication")
        for app in self.provenance:
            if not isinstance(app, RuleApplication):
                raise ValueError("provenance must contain RuleApplication entries")
        if (self.lo > 0 or self.hi != INFINITE) and not self.provenance:
            raise ValueError("nontrivial bounds require nonempty provenance")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: int) -> bool:
        return self.lo <= value <= self.hi

    def describe(self) -> str:
        if self.exact:
            return f"exact {self.lo}"
        if self.hi == INFINITE:
            return f"[{self.lo}, inf)"
        return f"[{self.lo}, {self.hi}]"

    def to_json(self) -> dict:
        return {
            "lo": self.lo,
            "hi": None if self.hi == INFINITE else self.hi,
            "exact": self.exact,
            "provenance": [app.to_json() for app in self.provenance],
        }


def _combine(apps: list[RuleApplication]) -> RegularityInterval:
    lo = 0
    hi: int | float = INFINITE
    for app in apps:
        if app.kind in ("lower", "exact"):
            lo = max(lo, app.value)
        if app.kind in ("upper", "exact"):
            hi = min(hi, app.value)
    if hi < lo:
        raise RuleInconsistencyError(
            f"rule contributions are contradictory: lower {lo} exceeds upper {hi}",
            tuple(apps),
        )
    return RegularityInterval(lo, hi, tuple(apps))


# ---------------------------------------------------------------------------
# general bounds


def _bfs_eccentricity(g: Graph, start: int) -> int:
    dist = {start: 0}
    frontier = [start]
    far = 0
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    far = max(far, dist[w])
                    nxt.append(w)
        frontier = nxt
    return far


def longest_induced_path_length(g: Graph) -> int | None:
    """Length of a longest induced path of a connected graph, or None when it
    cannot be certified at this size.

    In a block graph an induced path meets each block in at most one edge
    along the unique block route between its endpoints, so induced paths are
    exactly the geodesics and the longest one realizes the diameter; that
    makes the computation a BFS sweep with no size cap.  Other graphs fall
    back to exhaustive search under the backtracking cap.
    """
    if g.n == 0:
        return None
    if is_block_graph(g):
        return max(_bfs_eccentricity(g, v) for v in g.vertices())
    if g.n <= LONGEST_PATH_CAP:
        return longest_path_length(g, induced=True)
    return None


def rule_general(g: Graph) -> list[RuleApplication]:
    """Longest-induced-path lower bound, n-1 upper bound, and the c(G) upper
    bound on block graphs, for a connected graph with at least one edge."""
    apps = []
    lip = longest_induced_path_length(g)
    if lip is not None and lip >= 1:
        apps.append(_app("general-bounds", "lower", lip, induced_path_length=lip))
    apps.append(_app("general-bounds", "upper", g.n - 1, n=g.n))
    if is_block_graph(g):
        c = clique_count(g)
        apps.append(_app("general-bounds", "upper", c, clique_count=c))
    return apps


# ---------------------------------------------------------------------------
# tree lower bounds


def _internal_count(g: Graph) -> int:
    return sum(1 for v in g.vertices() if g.degree(v) >= 2)


def rule_tree_lower(g: Graph) -> RuleApplication | None:
    """reg >= m+1 for a tree with at least one edge and m internal vertices."""
    if not is_tree(g) or g.num_edges() == 0:
        return None
    m = _internal_count(g)
    return _app("tree-internal-lower", "lower", m + 1, m=m)


def rule_jewel_lower(g: Graph) -> RuleApplication | None:
    """reg >= m+2 for a tree containing the jewel as a subtree."""
    if not is_tree(g) or not contains_subtree(g, build_jewel()):
        return None
    m = _internal_count(g)
    return _app("jewel-lower", "lower", m + 2, m=m)


# ---------------------------------------------------------------------------
# lobster spines


def rule_lobster(g: Graph) -> list[RuleApplication]:
    """Spine bounds for lobsters: the lower bound maximizes l+t over all
    spines; upper bounds fire only on spines whose limbs are all pure (the
    certified regime: l+t when there are no whiskers, via extending every
    whisker into a pure limb otherwise l+t+r+2); a spine witnessing a pure
    lobster yields the exact value l+t."""
    if not is_tree(g) or not is_lobster(g):
        return []
    decs = spine_decompositions(g)
    if not decs:
        return []
    apps = []
    lower_dec = max(decs, key=lambda d: d.ell + d.t)
    apps.append(
        _app("lobster-family", "lower", lower_dec.ell + lower_dec.t,
             ell=lower_dec.ell, t=lower_dec.t, r=lower_dec.r)
    )
    pure_decs = [d for d in decs if all(d.pure_flags)]
    uppers = [
        (d.ell + d.t if d.r == 0 else d.ell + d.t + d.r + 2, d)
        for d in pure_decs
    ]
    if uppers:
        bound, d = min(uppers, key=lambda pair: pair[0])
        apps.append(
            _app("lobster-family", "upper", bound, ell=d.ell, t=d.t, r=d.r)
        )
    exact_decs = [d for d in pure_decs if d.r == 0]
    if exact_decs:
        d = exact_decs[0]
        apps.append(
            _app("lobster-family", "exact", d.ell + d.t, ell=d.ell, t=d.t, r=0)
        )
    return apps


def lobster_spine_report(g: Graph) -> list[dict]:
    """Per-spine diagnostics for a lobster: the counts (l, t, r), the formula
    values l+t and (l+t if r=0 else l+t+r+2), and whether this engine
    certifies the upper formula (it does only when every limb is pure).

    Uncertified formula values are reported for comparison with published
    numbers; they never enter a RegularityInterval.
    """
    if not is_tree(g) or not is_lobster(g):
        return []
    report = []
    for d in spine_decompositions(g):
        pure = all(d.pure_flags)
        report.append({
            "ell": d.ell,
            "t": d.t,
            "r": d.r,
            "pure_limbs": pure,
            "lower_formula": d.ell + d.t,
            "upper_formula": d.ell + d.t if d.r == 0 else d.ell + d.t + d.r + 2,
            "upper_certified": pure,
        })
    return report


# ---------------------------------------------------------------------------
# path-with-cliques upper bound


def rule_pathclique(g: Graph) -> RuleApplication | None:
    """reg <= l+r+t from a valid path-with-cliques-and-limbs decomposition,
    in the certified regimes t = 0 (pure block bound) or r = 0 (all-limb
    case); mixed decompositions abstain."""
    dec = pathclique_decompose(g)
    if dec is None or not dec.valid:
        return None
    if dec.t != 0 and dec.r != 0:
        return None
    return _app(
        "path-clique-upper", "upper", dec.bound,
        ell=dec.ell, r=dec.r, t=dec.t,
    )


# ---------------------------------------------------------------------------
# exact classes


def _clique_membership_ok(g: Graph) -> int | None:
    """c(G) when every vertex lies in at most two maximal cliques, else None."""
    cliques = maximal_cliques(g)
    count = {v: 0 for v in g.vertices()}
    for clique in cliques:
        for v in clique:
            count[v] += 1
    if all(c <= 2 for c in count.values()):
        return len(cliques)
    return None


class _StateCapExceeded(Exception):
    pass


def _catlob_split_value(g: Graph) -> int | None:
    """m+1 when the tree splits at degree-two cut vertices into caterpillars
    and pure lobsters (zero splits allowed), found by backtracking with
    memoization on canonical codes; None when no split works or the state
    cap is exceeded."""
    states = [CATLOB_STATE_CAP]
    memo: dict[str, bool] = {}

    def base(t: Graph) -> bool:
        if is_caterpillar(t):
            return True
        if not is_lobster(t):
            return False
        return any(d.r == 0 and all(d.pure_flags) for d in spine_decompositions(t))

    def ok(t: Graph) -> bool:
        key = canonical_code(t)
        if key in memo:
            return memo[key]
        states[0] -= 1
        if states[0] < 0:
            raise _StateCapExceeded
        if base(t):
            memo[key] = True
            return True
        result = False
        for v in t.vertices():
            if t.degree(v) != 2:
                continue
            comp_sets = _components_without(t, v)
            pieces = [
                induced_subgraph(t, sorted(comp | {v})) for comp in comp_sets
            ]
            if all(ok(piece) for piece in pieces):
                result = True
                break
        memo[key] = result
        return result

    try:
        if not ok(g):
            return None
    except _StateCapExceeded:
        return None
    return _internal_count(g) + 1


def _clique_with_paths_value(g: Graph) -> tuple[int, dict] | None:
    """1 + sum(r_i) for paths attached to distinct vertices of a K_s, s>=3."""
    big = [c for c in maximal_cliques(g) if len(c) >= 3]
    if len(big) != 1:
        return None
    clique = set(big[0])
    used = set()
    lengths = []
    for comp in _components_without_set(g, clique):
        sub = induced_subgraph(g, sorted(comp))
        if not _is_path_graph(sub):
            return None
        hooks = [(w, [u for u in g.adj[w] if u in clique]) for w in comp]
        attached = [(w, us) for w, us in hooks if us]
        if len(attached) != 1:
            return None
        w, us = attached[0]
        if len(us) != 1 or us[0] in used:
            return None
        if len(comp) > 1 and sum(1 for u in g.adj[w] if u in comp) != 1:
            return None
        used.add(us[0])
        lengths.append(len(comp))
    value = 1 + sum(lengths)
    inputs = {"s": len(clique), "path_lengths": tuple(sorted(lengths))}
    return value, inputs


def _star_with_paths_value(g: Graph) -> tuple[int, dict] | None:
    """2 + sum(r_i) for paths attached at the leaves of a K_{1,k}, k>=3: the
    spider trees whose every leg leaves the center through a path."""
    centers = [v for v in g.vertices() if g.degree(v) >= 3]
    if len(centers) != 1:
        return None
    c = centers[0]
    lengths = []
    for comp in _components_without(g, c):
        sub = induced_subgraph(g, sorted(comp))
        if not _is_path_graph(sub):
            return None
        hooks = [w for w in comp if c in g.adj[w]]
        if len(hooks) != 1:
            return None
        w = hooks[0]
        if len(comp) > 1 and sum(1 for u in g.adj[w] if u in comp) != 1:
            return None
        lengths.append(len(comp) - 1)
    value = 2 + sum(lengths)
    inputs = {"k": g.degree(c), "path_lengths": tuple(sorted(lengths))}
    return value, inputs


def _is_path_graph(g: Graph) -> bool:
    return (
        g.n >= 1
        and is_tree(g)
        and all(g.degree(v) <= 2 for v in g.vertices())
    )


def rule_exact_classes(g: Graph) -> list[RuleApplication]:
    """All exact formulas that recognize g: caterpillar l, block-graph c(G)
    under the two-cliques-per-vertex condition, the degree-two split into
    caterpillars/pure lobsters (m+1), paths on a complete graph (1 + sum r_i),
    and paths on a star (2 + sum r_i)."""
    apps = []
    tree = is_tree(g)
    if tree and is_caterpillar(g):
        ell = len(tree_longest_paths(g)[0]) - 1
        apps.append(_app("caterpillar-exact", "exact", ell, ell=ell))
    if is_block_graph(g):
        c = _clique_membership_ok(g)
        if c is not None:
            apps.append(_app("clique-count-exact", "exact", c, clique_count=c))
        if not tree:
            found = _clique_with_paths_value(g)
            if found is not None:
                value, inputs = found
                apps.append(_app("clique-with-paths", "exact", value, **inputs))
    if tree:
        value = _catlob_split_value(g)
        if value is not None:
            apps.append(
                _app("caterpillar-lobster-split-exact", "exact", value,
                     m=value - 1)
            )
        found = _star_with_paths_value(g)
        if found is not None:
            value, inputs = found
            apps.append(_app("star-with-paths", "exact", value, **inputs))
    return apps


# ---------------------------------------------------------------------------
# recursive decomposition


def _components_without(g: Graph, v: int) -> list[set[int]]:
    return _components_without_set(g, {v})


def _components_without_set(g: Graph, removed: set[int]) -> list[set[int]]:
    seen = set(removed)
    comps = []
    for s in g.vertices():
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        comp = {s}
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _is_clique(g: Graph, vertices: list[int]) -> bool:
    return all(
        g.has_edge(a, b)
        for i, a in enumerate(vertices)
        for b in vertices[i + 1:]
    )


class _BudgetExhausted(Exception):
    pass


class _RuleEngine:
    """Per-invocation evaluator: memoizes the full rule interval of every
    connected subgraph on its canonical code, under an evaluation budget."""

    def __init__(self, budget: int = DECOMPOSE_BUDGET):
        self._memo: dict[str, RegularityInterval] = {}
        self._budget = budget

    def interval(self, g: Graph) -> RegularityInterval:
        key = canonical_code(g)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if self._budget <= 0:
            raise _BudgetExhausted
        self._budget -= 1
        result = _evaluate_connected(g, self)
        self._memo[key] = result
        return result


def _trivial_interval(n: int) -> RegularityInterval:
    app = _app("general-bounds", "exact", 0, n=n, edges=0)
    return RegularityInterval(0, 0, (app,))


def _sum_contributions(
    rule_id: str, ivals: list[RegularityInterval], **inputs
) -> list[RuleApplication]:
    lo = sum(iv.lo for iv in ivals)
    hi = sum(iv.hi for iv in ivals)
    pieces = tuple(iv.describe() for iv in ivals)
    if all(iv.exact for iv in ivals):
        return [_app(rule_id, "exact", lo, piece_intervals=pieces, **inputs)]
    apps = []
    if lo > 0:
        apps.append(_app(rule_id, "lower", lo, piece_intervals=pieces, **inputs))
    if hi != INFINITE:
        apps.append(_app(rule_id, "upper", int(hi), piece_intervals=pieces, **inputs))
    return apps


def rule_decompose(g: Graph, engine: "_RuleEngine | None" = None) -> list[RuleApplication]:
    """Recursive decompositions: (a) a cut vertex with exactly two split
    pieces, free in both, makes regularity add over the pieces; (b) a pendant
    edge attached at a free vertex of the rest adds exactly one; (c)
    regularity adds over disjoint components.  Every valid decomposition
    contributes and the combiner intersects them; when the evaluation budget
    runs out the remaining options abstain silently."""
    engine = engine or _RuleEngine()
    comps = components(g)
    if len(comps) > 1:
        try:
            ivals = [engine.interval(induced_subgraph(g, comp)) for comp in comps]
        except _BudgetExhausted:
            return []
        return _sum_contributions(
            "free-split-additivity", ivals, component_count=len(comps)
        )
    apps = []
    for v in cut_vertices(g):
        comp_sets = _components_without(g, v)
        if len(comp_sets) != 2:
            continue
        if not all(
            _is_clique(g, [w for w in g.adj[v] if w in comp]) for comp in comp_sets
        ):
            continue
        try:
            ivals = [
                engine.interval(induced_subgraph(g, sorted(comp | {v})))
                for comp in comp_sets
            ]
        except _BudgetExhausted:
            break
        apps.extend(
            _sum_contributions(
                "free-split-additivity", ivals, cut_vertex=v,
                piece_sizes=tuple(len(comp) + 1 for comp in comp_sets),
            )
        )
    for w in g.vertices():
        if g.degree(w) != 1:
            continue
        (u,) = g.adj[w]
        rest_neighbors = [x for x in g.adj[u] if x != w]
        if not _is_clique(g, rest_neighbors):
            continue
        base = induced_subgraph(g, [x for x in g.vertices() if x != w])
        try:
            ival = engine.interval(base)
        except _BudgetExhausted:
            break
        if ival.exact:
            apps.append(
                _app("pendant-extension", "exact", ival.lo + 1,
                     pendant=w, base_interval=ival.describe())
            )
        else:
            if ival.lo + 1 > 0:
                apps.append(
                    _app("pendant-extension", "lower", ival.lo + 1,
                         pendant=w, base_interval=ival.describe())
                )
            if ival.hi != INFINITE:
                apps.append(
                    _app("pendant-extension", "upper", int(ival.hi) + 1,
                         pendant=w, base_interval=ival.describe())
                )
    return apps


def _evaluate_connected(g: Graph, engine: _RuleEngine) -> RegularityInterval:
    if g.num_edges() == 0:
        return _trivial_interval(g.n)
    apps = []
    apps.extend(rule_general(g))
    for maybe in (rule_tree_lower(g), rule_jewel_lower(g)):
        if maybe is not None:
            apps.append(maybe)
    apps.extend(rule_lobster(g))
    maybe = rule_pathclique(g)
    if maybe is not None:
        apps.append(maybe)
    apps.extend(rule_exact_classes(g))
    apps.extend(rule_decompose(g, engine))
    return _combine(apps)


def apply_all_rules(g: Graph) -> RegularityInterval:
    """Intersection of every rule that fires on g, with full provenance.

    Isolated vertices are stripped first (they contribute 0); regularity is
    summed over the remaining connected components.  Vertex labels in
    provenance inputs refer to the stripped graph.  Deterministic; raises
    RuleInconsistencyError if certified bounds ever contradict.
    """
    active = [v for v in g.vertices() if g.degree(v) > 0]
    if not active:
        return _trivial_interval(g.n)
    h = g if len(active) == g.n else induced_subgraph(g, active)
    engine = _RuleEngine()
    comps = components(h)
    if len(comps) == 1:
        return engine.interval(h)
    ivals = [engine.interval(induced_subgraph(h, comp)) for comp in comps]
    lo = sum(iv.lo for iv in ivals)
    hi = sum(iv.hi for iv in ivals)
    provenance = []
    for iv in ivals:
        provenance.extend(iv.provenance)
    provenance.extend(
        _sum_contributions(
            "free-split-additivity", ivals, component_count=len(comps)
        )
    )
    return RegularityInterval(
        lo, int(hi) if hi != INFINITE else INFINITE, tuple(provenance)
    )
