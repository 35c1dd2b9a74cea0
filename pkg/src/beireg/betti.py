"""Graded Betti tables and Castelnuovo-Mumford regularity of binomial edge
ideals over a small prime field.

Two independent computation tiers certify each other on their shared range:

* tor tier (`betti_koszul`): the exact Betti table of S/J_G, read off from
  the homology of multigraded strands of the Koszul complex on all 2n
  variables.  J_G is homogeneous for the Z^n grading with deg x_i =
  deg y_i = e_i, and upper semicontinuity against the squarefree initial
  ideal confines every nonzero strand to multidegrees in {0,1,2}^n that
  come from unions of initial-generator supports.  Hard cap: n <= 7.

* simplicial tier (`betti_hochster`): the Betti table of S/in(J_G) via
  Hochster's formula -- beta_{i,j} is a sum of reduced homology dimensions
  of vertex-restrictions of the Stanley-Reisner complex of the initial
  ideal.  Restrictions are taken only at unions of generator supports
  (every other restriction is a cone or outside the support lattice and
  contributes nothing), and each restriction factors as a join across the
  connected components of its active nonfaces, so homology is computed
  once per connected piece and combined additively.  Hard cap: 2n <= 24.

Since reg(S/J) <= reg(S/in J) always, and equality holds on the graph
families targeted here, the simplicial tier reports the initial-ideal
regularity as the regularity; the tier-agreement verification suite checks
it against the exact tor tier on the overlap.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, components, induced_subgraph
from .groebner import (
    AlgebraError,
    Monomial,
    PolyRing,
    _is_prime,
    graph_groebner_basis,
    initial_ideal,
)
from .homology import reduced_homology, sparse_rank_mod_p

DEFAULT_PRIME = 32003
KOSZUL_VERTEX_CAP = 7
HOCHSTER_VERTEX_CAP = 12
FACE_BUDGET = 2_000_000
LATTICE_BUDGET = 200_000

_TIERS = ("tor", "hochster")


# ---------------------------------------------------------------------------
# Betti tables


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j} of a quotient S/I, stored sparsely.

    The table always contains the single entry beta_{0,0} = 1 in
    homological degree zero; every other entry has i >= 1 and j - i >= 1.
    A table produced by a regularity-only scan is partial: it contains
    beta_{0,0} plus entries witnessing the regularity, so its `pd` reflects
    only those entries.
    """

    p: int
    entries: dict[tuple[int, int], int]
    tier: str

    def __post_init__(self):
        if not _is_prime(self.p):
            raise AlgebraError(f"characteristic {self.p} is not prime")
        if self.tier not in _TIERS:
            raise AlgebraError(f"unknown tier {self.tier!r}")
        if self.entries.get((0, 0)) != 1:
            raise AlgebraError("Betti table must contain beta_{0,0} = 1")
        for (i, j), b in self.entries.items():
            if not (isinstance(b, int) and b >= 1):
                raise AlgebraError(f"beta_{{{i},{j}}} = {b!r} is not a positive integer")
            if (i, j) == (0, 0):
                continue
            if i < 1 or j - i < 1:
                raise AlgebraError(f"entry ({i}, {j}) violates the table shape")

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def to_json(self) -> str:
        payload = {
            "p": self.p,
            "entries": [[i, j, self.entries[i, j]] for i, j in sorted(self.entries)],
            "reg": self.reg,
            "pd": self.pd,
            "tier": self.tier,
        }
        return json.dumps(payload, separators=(", ", ": "))

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        data = json.loads(text)
        entries = {(int(i), int(j)): int(b) for i, j, b in data["entries"]}
        table = cls(p=int(data["p"]), entries=entries, tier=data["tier"])
        if table.reg != data["reg"] or table.pd != data["pd"]:
            raise AlgebraError("serialized reg/pd disagree with the entries")
        return table


# ---------------------------------------------------------------------------
# Stanley-Reisner complexes of squarefree monomial ideals


@dataclass(frozen=True)
class StanleyReisnerComplex:
    """Simplicial complex on vertices 0..num_vertices-1 given by its minimal
    nonfaces (as bitmasks): the faces are exactly the subsets containing no
    nonface.  For an initial ideal of a binomial edge ideal the vertices
    are the 2n polynomial variables and the nonfaces are the supports of
    the monomial generators."""

    num_vertices: int
    minimal_nonfaces: tuple[int, ...]

    def __post_init__(self):
        if self.num_vertices < 0:
            raise AlgebraError("negative vertex count")
        full = (1 << self.num_vertices) - 1
        seen = set()
        for nf in self.minimal_nonfaces:
            if nf == 0 or nf & ~full:
                raise AlgebraError(f"nonface mask {nf:#x} out of range")
            if nf in seen:
                raise AlgebraError("duplicate minimal nonface")
            seen.add(nf)
        ordered = tuple(sorted(self.minimal_nonfaces))
        if ordered != self.minimal_nonfaces:
            raise AlgebraError("minimal nonfaces must be sorted")
        for a in ordered:
            for b in ordered:
                if a != b and a & b == a:
                    raise AlgebraError("nonface contained in another: not minimal")

    @property
    def support(self) -> int:
        mask = 0
        for nf in self.minimal_nonfaces:
            mask |= nf
        return mask

    def is_face(self, mask: int) -> bool:
        return all(nf & mask != nf for nf in self.minimal_nonfaces)

    def facets(self, budget: int = FACE_BUDGET) -> list[int]:
        """Maximal faces; intended for small complexes."""
        support = self.support
        free = ((1 << self.num_vertices) - 1) & ~support
        faces = set(_enumerate_faces(self.minimal_nonfaces, support, budget).tolist())
        out = []
        for f in faces:
            if any((f | (1 << v)) in faces for v in _bits(support & ~f)):
                continue
            out.append(f | free)
        return sorted(out)


def _bits(mask: int) -> list[int]:
    out = []
    v = mask
    while v:
        bit = v & -v
        out.append(bit.bit_length() - 1)
        v ^= bit
    return out


def stanley_reisner_complex(gens: list[Monomial], num_vertices: int) -> StanleyReisnerComplex:
    """Complex whose minimal nonfaces are the supports of the given
    squarefree monomials."""
    masks = []
    for m in gens:
        if not m.squarefree:
            raise AlgebraError(f"generator {m!r} is not squarefree")
        mask = 0
        for k in m.support():
            mask |= 1 << k
        masks.append(mask)
    return StanleyReisnerComplex(num_vertices=num_vertices,
                                 minimal_nonfaces=tuple(sorted(masks)))


def initial_complex(g: Graph, p: int) -> StanleyReisnerComplex:
    """Stanley-Reisner complex of the initial ideal of the binomial edge
    ideal of g (lex order), on the 2n variables."""
    gb = graph_groebner_basis(g, p)
    gens = initial_ideal(gb) if gb.basis else []
    return stanley_reisner_complex(gens, 2 * g.n)


def _enumerate_faces(nonfaces, universe: int, budget: int) -> np.ndarray:
    """All faces contained in `universe`, as a sorted uint32 array (the
    empty face included).  Vertices outside every nonface are cones and
    should be excluded from `universe` by the caller when counting."""
    vs = _bits(universe)
    by_max: dict[int, list[int]] = {v: [] for v in vs}
    for nf in nonfaces:
        if nf & ~universe:
            continue
        top = max(_bits(nf))
        by_max[top].append(nf & ~(1 << top))
    out = [0]
    stack = [(0, 0)]
    while stack:
        cur, idx = stack.pop()
        for t in range(idx, len(vs)):
            v = vs[t]
            if any(rest & ~cur == 0 for rest in by_max[v]):
                continue
            nxt = cur | (1 << v)
            out.append(nxt)
            if len(out) > budget:
                raise AlgebraError(
                    f"face enumeration exceeded the budget of {budget} cells")
            stack.append((nxt, t + 1))
    return np.array(sorted(out), dtype=np.uint32)


def _union_closure(masks: list[int], budget: int) -> list[int]:
    """All nonempty unions of the given masks, by breadth-first closure."""
    base = sorted(set(masks))
    seen = set(base)
    queue = list(base)
    while queue:
        w = queue.pop()
        for s in base:
            u = w | s
            if u not in seen:
                seen.add(u)
                if len(seen) > budget:
                    raise AlgebraError(
                        f"support lattice exceeded the budget of {budget} elements")
                queue.append(u)
    return sorted(seen)


# ---------------------------------------------------------------------------
# simplicial tier: Hochster's formula on the support lattice


class _HochsterEngine:
    def __init__(self, cx: StanleyReisnerComplex, p: int,
                 face_budget: int = FACE_BUDGET,
                 lattice_budget: int = LATTICE_BUDGET):
        if not _is_prime(p):
            raise AlgebraError(f"characteristic {p} is not prime")
        self.cx = cx
        self.p = p
        self.nonfaces = list(cx.minimal_nonfaces)
        self.support = cx.support
        self.lattice = (_union_closure(self.nonfaces, lattice_budget)
                        if self.nonfaces else [])
        self.faces = _enumerate_faces(self.nonfaces, self.support, face_budget)
        self._piece_memo: dict[int, dict[int, int] | None] = {}

    def _pieces(self, w: int) -> list[int]:
        """Vertex sets of the connected components of the nonfaces active
        inside w.  Every lattice element is covered by its active nonfaces,
        so the pieces partition w."""
        pieces: list[int] = []
        for nf in self.nonfaces:
            if nf & ~w:
                continue
            merged = nf
            rest = []
            for piece in pieces:
                if piece & merged:
                    merged |= piece
                else:
                    rest.append(piece)
            rest.append(merged)
            pieces = rest
        total = 0
        for piece in pieces:
            total |= piece
        if total != w:
            raise AlgebraError("restriction has a cone vertex; not a lattice element")
        return sorted(pieces)

    def _piece_homology(self, piece: int) -> dict[int, int] | None:
        """Reduced homology of the restriction to one connected piece;
        None when acyclic."""
        memo = self._piece_memo
        if piece in memo:
            return memo[piece]
        sel = self.faces[(self.faces & ~np.uint32(piece)) == 0]
        cells = set(int(f) for f in sel)
        hom = reduced_homology(cells, self.p)
        memo[piece] = hom if hom else None
        return memo[piece]

    def _element_homology(self, w: int) -> dict[int, int] | None:
        """Reduced homology of the restriction to a lattice element,
        assembled from its pieces by the join rule (Kunneth): degrees add
        with a shift of one per extra factor, dimensions multiply."""
        combined: dict[int, int] = {-1: 1}
        for piece in self._pieces(w):
            hom = self._piece_homology(piece)
            if hom is None:
                return None
            nxt: dict[int, int] = {}
            for d0, h0 in combined.items():
                for d1, h1 in hom.items():
                    d = d0 + d1 + 1
                    nxt[d] = nxt.get(d, 0) + h0 * h1
            combined = nxt
        return combined

    def full_table(self) -> dict[tuple[int, int], int]:
        entries: dict[tuple[int, int], int] = {(0, 0): 1}
        for w in self.lattice:
            hom = self._element_homology(w)
            if hom is None:
                continue
            j = w.bit_count()
            for d, h in hom.items():
                i = j - d - 1
                if i < 1:
                    raise AlgebraError(
                        f"restriction {w:#x} contributed to homological degree {i}")
                key = (i, j)
                entries[key] = entries.get(key, 0) + h
        return entries

    def regularity_scan(self) -> dict[tuple[int, int], int]:
        """Entries witnessing max(j - i): beta_{0,0} plus one extremal
        entry (when any restriction has homology).  Every lattice element
        is visited; elements sharing a connected piece reuse its homology."""
        best = 0
        witness: tuple[int, int, int] | None = None
        for w in sorted(self.lattice, key=lambda m: m.bit_count()):
            vals = []
            dims = []
            acyclic = False
            for piece in self._pieces(w):
                hom = self._piece_homology(piece)
                if hom is None:
                    acyclic = True
                    break
                top = max(hom)
                vals.append(top + 1)
                dims.append(hom[top])
            if acyclic:
                continue
            val = sum(vals)
            if val > best:
                best = val
                prod = 1
                for d in dims:
                    prod *= d
                j = w.bit_count()
                witness = (j - val, j, prod)
        entries = {(0, 0): 1}
        if witness is not None:
            i, j, b = witness
            entries[(i, j)] = b
        return entries


def betti_hochster(cx: StanleyReisnerComplex, p: int = DEFAULT_PRIME,
                   reg_only: bool = False) -> BettiTable:
    """Betti table of S/I for the squarefree monomial ideal I whose
    Stanley-Reisner complex is cx, over F_p.  With reg_only the returned
    table is partial: beta_{0,0} plus an entry witnessing the regularity.

    Hard cap: 24 vertices (the 2n variables of a graph on n <= 12)."""
    if cx.num_vertices > 2 * HOCHSTER_VERTEX_CAP:
        raise AlgebraError(
            f"complex on {cx.num_vertices} vertices exceeds the simplicial-tier "
            f"cap of {2 * HOCHSTER_VERTEX_CAP}")
    engine = _HochsterEngine(cx, p)
    entries = engine.regularity_scan() if reg_only else engine.full_table()
    return BettiTable(p=p, entries=entries, tier="hochster")


# ---------------------------------------------------------------------------
# tor tier: Koszul strand homology


def _coarse_degree(exponents: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Z^n degree of a monomial in 2n variables (x_i and y_i both have
    degree e_i)."""
    return tuple(exponents[i] + exponents[n + i] for i in range(n))


def _standard_monomials_by_degree(ring: PolyRing, lead_monomials: list[Monomial],
                                  amax: tuple[int, ...]) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Standard monomials (not divisible by any leading monomial) with
    coarse degree bounded by amax, grouped by coarse degree."""
    n = ring.n
    lead_items = [[(k, e) for k, e in enumerate(m.exponents) if e] for m in lead_monomials]
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    exps = [0] * (2 * n)

    def rec(i: int):
        if i == n:
            tup = tuple(exps)
            for items in lead_items:
                if all(tup[k] >= e for k, e in items):
                    return
            groups.setdefault(_coarse_degree(tup, n), []).append(tup)
            return
        for bx in range(amax[i] + 1):
            for by in range(amax[i] + 1 - bx):
                exps[i] = bx
                exps[n + i] = by
                rec(i + 1)
        exps[i] = 0
        exps[n + i] = 0

    rec(0)
    for lst in groups.values():
        lst.sort()
    return groups


def _strand_multidegrees(init_gens: list[Monomial], n: int) -> list[tuple[int, ...]]:
    """Candidate Z^n multidegrees of nonzero Tor strands: coarsenings of
    unions of initial-generator supports (sound by upper semicontinuity
    against the squarefree initial ideal)."""
    masks = []
    for m in init_gens:
        mask = 0
        for k in m.support():
            mask |= 1 << k
        masks.append(mask)
    if not masks:
        return []
    coarse = set()
    for w in _union_closure(masks, LATTICE_BUDGET):
        coarse.add(tuple((1 if w >> i & 1 else 0) + (1 if w >> (n + i) & 1 else 0)
                         for i in range(n)))
    return sorted(coarse)


def betti_koszul(g: Graph, p: int = DEFAULT_PRIME) -> BettiTable:
    """Exact Betti table of S/J_G over F_p via Koszul strand homology.

    Hard cap: n <= 7; beyond it the simplicial tier is the only oracle."""
    if g.n > KOSZUL_VERTEX_CAP:
        raise AlgebraError(
            f"graph on {g.n} vertices exceeds the tor-tier cap of "
            f"{KOSZUL_VERTEX_CAP}; use the simplicial tier")
    n = g.n
    ring = PolyRing(n, p)
    gb = graph_groebner_basis(g, p)
    init_gens = initial_ideal(gb) if gb.basis else []
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    if not init_gens:
        return BettiTable(p=p, entries=entries, tier="tor")
    strands = _strand_multidegrees(init_gens, n)
    amax = tuple(max(a[i] for a in strands) for i in range(n))
    standard = _standard_monomials_by_degree(ring, init_gens, amax)
    lead_items = [[(k, e) for k, e in enumerate(m.exponents) if e]
                  for m in init_gens]
    nf_cache: dict[tuple[int, tuple[int, ...]], list[tuple[tuple[int, ...], int]]] = {}

    def normal_terms(k: int, exps: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
        key = (k, exps)
        hit = nf_cache.get(key)
        if hit is not None:
            return hit
        bumped = list(exps)
        bumped[k] += 1
        tup = tuple(bumped)
        if not any(all(tup[kk] >= e for kk, e in items) for items in lead_items):
            result = [(tup, 1)]
        else:
            poly = ring.from_terms({Monomial(tup): 1})
            result = [(m.exponents, c) for m, c in gb.normal_form(poly).terms]
        nf_cache[key] = result
        return result

    for a in strands:
        j = sum(a)
        # cells of a strand: (Koszul subset S, standard monomial m) with
        # coarse(S) + coarse(m) = a, graded by |S|
        cells: dict[int, list[tuple[int, tuple[int, ...]]]] = {}

        def build(i: int, smask: int, residual: list[int]):
            if i == n:
                for m in standard.get(tuple(residual), []):
                    cells.setdefault(smask.bit_count(), []).append((smask, m))
                return
            ai = a[i]
            for sx in (0, 1):
                for sy in (0, 1):
                    if sx + sy > ai:
                        continue
                    add = (sx << i) | (sy << (n + i))
                    residual[i] = ai - sx - sy
                    build(i + 1, smask | add, residual)
            residual[i] = 0

        build(0, 0, [0] * n)
        if not cells:
            continue
        index: dict[int, dict[tuple[int, tuple[int, ...]], int]] = {}
        for dim, layer in cells.items():
            layer.sort()
            index[dim] = {cell: t for t, cell in enumerate(layer)}
        ranks: dict[int, int] = {}
        for dim in sorted(cells):
            lower = index.get(dim - 1)
            if lower is None:
                ranks[dim] = 0
                continue
            columns = []
            for smask, m in cells[dim]:
                col: dict[int, int] = {}
                sign = 1
                for k in _bits(smask):
                    sub = smask ^ (1 << k)
                    for exps, coeff in normal_terms(k, m):
                        row = lower[(sub, exps)]
                        v = (col.get(row, 0) + sign * coeff) % p
                        if v:
                            col[row] = v
                        elif row in col:
                            del col[row]
                    sign = -sign
                columns.append(col)
            ranks[dim] = sparse_rank_mod_p(columns, p)
        for dim, layer in cells.items():
            h = len(layer) - ranks.get(dim, 0) - ranks.get(dim + 1, 0)
            if h < 0:
                raise AlgebraError("negative strand homology: rank bookkeeping broke")
            if h:
                if dim == 0:
                    raise AlgebraError(
                        f"strand {a} has homology in degree 0; "
                        "the multigrading bookkeeping broke")
                entries[(dim, j)] = entries.get((dim, j), 0) + h
    return BettiTable(p=p, entries=entries, tier="tor")


# ---------------------------------------------------------------------------
# regularity dispatch


@dataclass(frozen=True)
class RegularityResult:
    value: int
    tier: str
    p: int


def _rules_hint(g: Graph) -> str:
    try:
        from .rules import apply_all_rules
    except ImportError:
        return "no combinatorial certificate is available"
    try:
        interval = apply_all_rules(g)
    except Exception:
        return "no combinatorial certificate is available"
    return f"the combinatorial rules alone certify {interval.describe()}"


def _component_regularity(comp: Graph, p: int, tier: str) -> tuple[int, str]:
    if tier == "auto":
        if comp.n <= 6:
            tier = "tor"
        elif comp.n <= HOCHSTER_VERTEX_CAP:
            tier = "hochster"
        else:
            raise AlgebraError(
                f"component with {comp.n} vertices exceeds every oracle cap "
                f"(tor <= {KOSZUL_VERTEX_CAP}, simplicial <= {HOCHSTER_VERTEX_CAP}); "
                + _rules_hint(comp))
    if tier == "tor":
        return betti_koszul(comp, p).reg, "tor"
    if tier == "hochster":
        if comp.n > HOCHSTER_VERTEX_CAP:
            raise AlgebraError(
                f"component with {comp.n} vertices exceeds the simplicial-tier "
                f"cap of {HOCHSTER_VERTEX_CAP}; " + _rules_hint(comp))
        cx = initial_complex(comp, p)
        return betti_hochster(cx, p, reg_only=True).reg, "hochster"
    raise AlgebraError(f"unknown tier {tier!r}; expected auto, tor, or hochster")


def regularity(g: Graph, p: int = DEFAULT_PRIME, tier: str = "auto") -> RegularityResult:
    """Castelnuovo-Mumford regularity of S/J_G over F_p, summed over
    connected components (the ideal splits into disjoint variable sets).

    tier "auto" picks the exact tor tier for components with at most 6
    vertices and the simplicial tier up to 12; "tor" and "hochster" force
    one tier, raising a refusal beyond its cap."""
    if tier not in ("auto",) + _TIERS:
        raise AlgebraError(f"unknown tier {tier!r}; expected auto, tor, or hochster")
    total = 0
    used: set[str] = set()
    for vs in components(g):
        comp = induced_subgraph(g, vs)
        value, t = _component_regularity(comp, p, tier)
        total += value
        used.add(t)
    if not used:
        used = {"tor"}
    tier_used = used.pop() if len(used) == 1 else "mixed"
    return RegularityResult(value=total, tier=tier_used, p=p)


# ---------------------------------------------------------------------------
# Hilbert series consistency


@dataclass(frozen=True)
class HilbertResult:
    numerator: tuple[int, ...]
    match: bool


def _faces_size_counts(cx: StanleyReisnerComplex, budget: int = FACE_BUDGET) -> list[int]:
    """f-vector by face size over all num_vertices vertices: vertices in no
    nonface multiply the support-restricted counts binomially."""
    from math import comb

    support = cx.support
    free = cx.num_vertices - support.bit_count()
    faces = _enumerate_faces(cx.minimal_nonfaces, support, budget)
    base: dict[int, int] = {}
    for f in faces.tolist():
        k = int(f).bit_count()
        base[k] = base.get(k, 0) + 1
    top = max(base) + free
    out = [0] * (top + 1)
    for k0, cnt in base.items():
        for extra in range(free + 1):
            out[k0 + extra] += cnt * comb(free, extra)
    return out


def hilbert_numerator(g: Graph, p: int = DEFAULT_PRIME,
                      degree_cap: int = 3) -> HilbertResult:
    """Numerator of the Hilbert series of S/J_G over F_p, computed two
    independent ways and cross-checked:

    (a) from the f-vector of the initial complex: the standard monomials
        are a basis of S/J_G, and counting them by support face gives
        numerator(t) = sum_k f_k t^k (1-t)^(2n-k) exactly;
    (b) as the alternating Betti sum sum_i (-1)^i beta_{i,j} in each j.

    Degrees up to degree_cap are additionally checked against a brute
    count of standard monomials.  Any mismatch raises; hard cap n <= 7."""
    from math import comb

    if g.n > KOSZUL_VERTEX_CAP:
        raise AlgebraError(
            f"graph on {g.n} vertices exceeds the Hilbert-check cap of "
            f"{KOSZUL_VERTEX_CAP}")
    n2 = 2 * g.n
    ring = PolyRing(g.n, p)
    gb = graph_groebner_basis(g, p)
    init_gens = initial_ideal(gb) if gb.basis else []
    cx = stanley_reisner_complex(init_gens, n2)
    fvec = _faces_size_counts(cx)

    numer_a = [0] * (n2 + len(fvec))
    for k, cnt in enumerate(fvec):
        if cnt == 0:
            continue
        # cnt * t^k * (1-t)^(n2-k)
        for e in range(n2 - k + 1):
            numer_a[k + e] += cnt * ((-1) ** e) * comb(n2 - k, e)
    while numer_a and numer_a[-1] == 0:
        numer_a.pop()

    table = betti_koszul(g, p)
    numer_b = [0] * (max(j for _, j in table.entries) + 1)
    for (i, j), b in table.entries.items():
        numer_b[j] += ((-1) ** i) * b
    while numer_b and numer_b[-1] == 0:
        numer_b.pop()

    if numer_a != numer_b:
        raise AlgebraError(
            "Hilbert numerator mismatch between the standard-monomial count "
            f"{numer_a} and the alternating Betti sum {numer_b}")

    lead_items = [[(k, e) for k, e in enumerate(m.exponents) if e]
                  for m in init_gens]
    for d in range(min(degree_cap, 6) + 1):
        expected = sum(cnt * comb(d - 1, k - 1) for k, cnt in enumerate(fvec) if k >= 1) \
            if d >= 1 else 1
        brute = _count_standard_monomials(n2, d, lead_items)
        if brute != expected:
            raise AlgebraError(
                f"standard monomial count in degree {d} is {brute}, "
                f"but the f-vector predicts {expected}")

    return HilbertResult(numerator=tuple(numer_a), match=True)


def _count_standard_monomials(num_vars: int, degree: int,
                              lead_items: list[list[tuple[int, int]]]) -> int:
    from itertools import combinations_with_replacement

    count = 0
    for combo in combinations_with_replacement(range(num_vars), degree):
        exps = [0] * num_vars
        for k in combo:
            exps[k] += 1
        if not any(all(exps[k] >= e for k, e in items) for items in lead_items):
            count += 1
    return count
