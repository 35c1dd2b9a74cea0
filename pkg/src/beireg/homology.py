"""Simplicial homology over a prime field, on complexes stored as vertex
bitmasks.

A complex is a subset-closed collection of faces, always including the empty
face (mask 0) as a cell of dimension -1, so every homology computed here is
reduced homology of the augmented chain complex.  Complexes are shrunk by
elementary collapses (removing free face/coface pairs, which preserves the
homotopy type) before any boundary matrix is assembled; ranks are taken by
exact Gaussian elimination mod p on int64 matrices (entries stay below p, so
products fit comfortably in 63 bits).
"""
from __future__ import annotations

import heapq

import numpy as np


class HomologyError(ValueError):
    """Invalid chain-complex input."""


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p by vectorized elimination."""
    if a.ndim != 2:
        raise HomologyError(f"rank_mod_p needs a 2-d array, got shape {a.shape}")
    m, n = a.shape
    if m == 0 or n == 0:
        return 0
    a = np.mod(a.astype(np.int64, copy=True), p)
    rank = 0
    for col in range(n):
        pivots = np.nonzero(a[rank:, col])[0]
        if pivots.size == 0:
            continue
        piv = rank + int(pivots[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        rest = a[rank + 1:, col] != 0
        if rest.any():
            a[rank + 1:][rest] = (a[rank + 1:][rest]
                                  - np.outer(a[rank + 1:, col][rest], a[rank])) % p
        rank += 1
        if rank == m:
            break
    return rank


def sparse_rank_mod_p(columns: list[dict[int, int]], p: int) -> int:
    """Rank over F_p of a sparse matrix given column-wise as {row: coeff}
    dicts.  Gaussian elimination with pivots chosen greedily to limit
    fill-in: shortest row first, and within it the entry whose column is
    shortest, preferring units.  Suited to boundary matrices whose columns
    hold a handful of mostly +-1 entries."""
    rows: dict[int, dict[int, int]] = {}
    for c, col in enumerate(columns):
        for r, v in col.items():
            v %= p
            if v:
                rows.setdefault(r, {})[c] = v
    cols: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    heap = [(len(row), r) for r, row in rows.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        length, r = heapq.heappop(heap)
        row = rows.get(r)
        if row is None:
            continue
        if len(row) != length:
            heapq.heappush(heap, (len(row), r))
            continue
        best = None
        for c, v in row.items():
            unit = v == 1 or v == p - 1
            key = (not unit, len(cols[c]))
            if best is None or key < best[0]:
                best = (key, c)
        c = best[1]
        inv = pow(row[c], -1, p)
        if inv != 1:
            for cc in row:
                row[cc] = row[cc] * inv % p
        for rr in list(cols[c]):
            if rr == r:
                continue
            other = rows[rr]
            f = other[c]
            for cc, vv in row.items():
                nv = (other.get(cc, 0) - f * vv) % p
                if nv:
                    if cc not in other:
                        cols.setdefault(cc, set()).add(rr)
                    other[cc] = nv
                elif cc in other:
                    del other[cc]
                    cols[cc].discard(rr)
            if other:
                heapq.heappush(heap, (len(other), rr))
            else:
                del rows[rr]
        for cc in row:
            cols[cc].discard(r)
            if not cols[cc]:
                del cols[cc]
        del rows[r]
        rank += 1
    return rank


def is_simplicial(cells: set[int]) -> bool:
    """True when the cell set is closed under taking subsets (and contains
    the empty face whenever it is nonempty)."""
    if not cells:
        return True
    if 0 not in cells:
        return False
    for f in cells:
        v = f
        while v:
            bit = v & -v
            if (f ^ bit) not in cells:
                return False
            v ^= bit
    return True


def complex_from_facets(facets) -> set[int]:
    """All faces spanned by the given facet bitmasks, plus the empty face."""
    cells: set[int] = set()
    stack = [int(f) for f in facets]
    cells.add(0)
    for top in stack:
        frontier = [top]
        while frontier:
            f = frontier.pop()
            if f in cells:
                continue
            cells.add(f)
            v = f
            while v:
                bit = v & -v
                frontier.append(f ^ bit)
                v ^= bit
    return cells


def collapse(cells: set[int]) -> set[int]:
    """Repeatedly remove free pairs (a face with exactly one proper coface,
    together with that coface).  Homotopy-equivalent output; often empty for
    acyclic input.  The input set is not modified.

    In a subset-closed complex a face with exactly one immediate coface has
    exactly one proper coface (which is then maximal), so immediate-coface
    counts identify the free faces; the counts are kept exact under removal,
    which makes each elementary collapse O(vertices)."""
    cur = set(cells)
    if not cur:
        return cur
    universe = 0
    for f in cur:
        universe |= f
    bits = []
    v = universe
    while v:
        bit = v & -v
        bits.append(bit)
        v ^= bit
    count: dict[int, int] = {f: 0 for f in cur}
    for g in cur:
        v = g
        while v:
            bit = v & -v
            count[g ^ bit] += 1
            v ^= bit
    stack = [f for f, c in count.items() if c == 1]
    while stack:
        f = stack.pop()
        if f not in cur or count[f] != 1:
            continue
        g = -1
        for b in bits:
            if not (f & b) and (f | b) in cur:
                g = f | b
                break
        if g < 0:
            raise HomologyError("coface counts out of sync with the complex")
        cur.discard(f)
        cur.discard(g)
        for h in (f, g):
            v = h
            while v:
                bit = v & -v
                e = h ^ bit
                if e in cur:
                    count[e] -= 1
                    if count[e] == 1:
                        stack.append(e)
                v ^= bit
    return cur


_DENSE_RANK_CELLS = 4_000_000


def _boundary_rank(lower: list[int], upper: list[int], p: int) -> int:
    """Rank of the boundary map from the span of `upper` (dimension d) to
    the span of `lower` (dimension d-1).  Large layers go through the
    sparse elimination; boundary columns have at most d+1 entries."""
    if not lower or not upper:
        return 0
    row = {f: i for i, f in enumerate(lower)}
    if len(lower) * len(upper) > _DENSE_RANK_CELLS:
        columns = []
        for f in upper:
            col: dict[int, int] = {}
            sign = 1
            v = f
            while v:
                bit = v & -v
                i = row.get(f ^ bit)
                if i is not None:
                    col[i] = sign % p
                sign = -sign
                v ^= bit
            columns.append(col)
        return sparse_rank_mod_p(columns, p)
    mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for j, f in enumerate(upper):
        sign = 1
        v = f
        while v:
            bit = v & -v
            sub = f ^ bit
            i = row.get(sub)
            if i is not None:
                mat[i, j] = sign % p
            sign = -sign
            v ^= bit
    return rank_mod_p(mat, p)


def reduced_homology(cells: set[int], p: int, use_collapse: bool = True) -> dict[int, int]:
    """Reduced homology dimensions {d: dim H~_d} over F_p, zero entries
    omitted.  `cells` must be subset-closed and contain the empty face; an
    empty set (the void complex) has no homology at all."""
    if not cells:
        return {}
    if 0 not in cells:
        raise HomologyError("complex must contain the empty face (mask 0)")
    core = collapse(cells) if use_collapse else set(cells)
    if not core:
        return {}
    by_dim: dict[int, list[int]] = {}
    for f in core:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort()
    ranks: dict[int, int] = {}
    for d, upper in by_dim.items():
        ranks[d] = _boundary_rank(by_dim.get(d - 1, []), upper, p)
    out: dict[int, int] = {}
    for d, layer in by_dim.items():
        h = len(layer) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def max_nonzero_dim(cells: set[int], p: int) -> int:
    """Largest d with H~_d nonzero, or -3 when all reduced homology
    vanishes."""
    hom = reduced_homology(cells, p)
    return max(hom) if hom else -3
