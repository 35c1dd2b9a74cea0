"""Exact multivariate polynomial arithmetic over a prime field, the 2x2-minor
binomials attached to graph edges, and Buchberger's algorithm under the
lexicographic order.

The ring for a graph on n vertices is F_p[x_1..x_n, y_1..y_n] with the lex
order x_1 > ... > x_n > y_1 > ... > y_n.  Under this order the reduced
Groebner basis of the edge-binomial ideal is known to consist of binomials
whose leading monomials are squarefree; `initial_ideal` asserts that on every
instance, so an order misconfiguration or arithmetic bug fails loudly instead
of corrupting downstream homology.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


class AlgebraError(ValueError):
    """Invalid algebraic input or a violated internal algebra invariant."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# monomials


class Monomial:
    """Exponent vector over the ring's 2n variables, ordered lexicographically
    (variable 0 most significant)."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents):
        self.exponents = tuple(exponents)
        self.degree = sum(self.exponents)

    @property
    def squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def is_one(self) -> bool:
        return self.degree == 0

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other; requires other | self."""
        out = [a - b for a, b in zip(self.exponents, other.exponents)]
        if any(e < 0 for e in out):
            raise AlgebraError(f"monomial {self.exponents} not divisible by {other.exponents}")
        return Monomial(out)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def coprime(self, other: "Monomial") -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.exponents, other.exponents))

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, e in enumerate(self.exponents) if e > 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    # tuple comparison is exactly lex with variable 0 most significant
    def __lt__(self, other: "Monomial") -> bool:
        return self.exponents < other.exponents

    def __le__(self, other: "Monomial") -> bool:
        return self.exponents <= other.exponents

    def __gt__(self, other: "Monomial") -> bool:
        return self.exponents > other.exponents

    def __ge__(self, other: "Monomial") -> bool:
        return self.exponents >= other.exponents

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"


# ---------------------------------------------------------------------------
# ring and polynomials


class PolyRing:
    """F_p[x_1..x_n, y_1..y_n]; variable k is x_{k+1} for k < n, else
    y_{k-n+1}."""

    __slots__ = ("n", "p", "num_vars")

    def __init__(self, n: int, p: int):
        if n < 0:
            raise AlgebraError(f"vertex count must be non-negative, got {n}")
        if not _is_prime(p):
            raise AlgebraError(f"characteristic must be prime, got {p}")
        self.n = n
        self.p = p
        self.num_vars = 2 * n

    def x_index(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise AlgebraError(f"x index {i} out of range 1..{self.n}")
        return i - 1

    def y_index(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise AlgebraError(f"y index {i} out of range 1..{self.n}")
        return self.n + i - 1

    def var_name(self, k: int) -> str:
        if not 0 <= k < self.num_vars:
            raise AlgebraError(f"variable index {k} out of range")
        return f"x{k + 1}" if k < self.n else f"y{k - self.n + 1}"

    def one_monomial(self) -> Monomial:
        return Monomial((0,) * self.num_vars)

    def monomial(self, exponents_by_var: dict[int, int]) -> Monomial:
        exps = [0] * self.num_vars
        for k, e in exponents_by_var.items():
            if not 0 <= k < self.num_vars:
                raise AlgebraError(f"variable index {k} out of range")
            if e < 0:
                raise AlgebraError(f"negative exponent {e}")
            exps[k] = e
        return Monomial(exps)

    def xy_monomial(self, x_of: int, y_of: int) -> Monomial:
        """The degree-2 monomial x_i y_j."""
        exps = [0] * self.num_vars
        exps[self.x_index(x_of)] += 1
        exps[self.y_index(y_of)] += 1
        return Monomial(exps)

    def from_terms(self, terms: dict[Monomial, int]) -> "Polynomial":
        return Polynomial(self, terms)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def edge_binomial(self, i: int, j: int) -> "Polynomial":
        """x_i y_j - x_j y_i for i < j, monic on its leading term x_i y_j."""
        if i >= j:
            raise AlgebraError(f"edge binomial needs i < j, got ({i}, {j})")
        return Polynomial(self, {
            self.xy_monomial(i, j): 1,
            self.xy_monomial(j, i): self.p - 1,
        })

    def format_monomial(self, m: Monomial) -> str:
        if m.is_one():
            return "1"
        parts = []
        for k, e in enumerate(m.exponents):
            if e == 1:
                parts.append(self.var_name(k))
            elif e > 1:
                parts.append(f"{self.var_name(k)}^{e}")
        return "*".join(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and (self.n, self.p) == (other.n, other.p)

    def __hash__(self) -> int:
        return hash((self.n, self.p))

    def __repr__(self) -> str:
        return f"PolyRing(n={self.n}, p={self.p})"


class Polynomial:
    """Terms sorted strictly decreasing in the monomial order; coefficients
    reduced to 1..p-1 (zero coefficients dropped)."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict[Monomial, int]):
        p = ring.p
        clean = {}
        for m, c in terms.items():
            if len(m.exponents) != ring.num_vars:
                raise AlgebraError(
                    f"monomial on {len(m.exponents)} variables in ring with {ring.num_vars}")
            c %= p
            if c:
                clean[m] = c
        self.ring = ring
        self.terms = tuple(sorted(clean.items(), key=lambda t: t[0], reverse=True))

    def is_zero(self) -> bool:
        return not self.terms

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def leading_coefficient(self) -> int:
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        return max((m.degree for m, _ in self.terms), default=None)

    def is_homogeneous(self) -> bool:
        return len({m.degree for m, _ in self.terms}) <= 1

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        inv = pow(self.terms[0][1], -1, self.ring.p)
        return Polynomial(self.ring, {m: c * inv for m, c in self.terms})

    def term_mul(self, mono: Monomial, coeff: int = 1) -> "Polynomial":
        return Polynomial(self.ring, {m.mul(mono): c * coeff for m, c in self.terms})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.ring != other.ring:
            raise AlgebraError("polynomials from different rings")
        out = {m: c for m, c in self.terms}
        for m, c in other.terms:
            out[m] = out.get(m, 0) + c
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        p = self.ring.p
        parts = []
        for m, c in self.terms:
            signed = c - p if c > p // 2 else c  # balanced display
            sign = "-" if signed < 0 else "+"
            mag = abs(signed)
            body = self.ring.format_monomial(m)
            if body == "1":
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# ideal generators


def edge_ideal_generators(g: Graph, ring: PolyRing) -> list[Polynomial]:
    """One binomial x_i y_j - x_j y_i per edge (i < j), monic on x_i y_j."""
    if ring.n != g.n:
        raise AlgebraError(f"ring has n={ring.n} but graph has n={g.n}")
    return [ring.edge_binomial(i, j) for i, j in g.edges]


# ---------------------------------------------------------------------------
# division and Buchberger


def normal_form(f: Polynomial, basis: list[Polynomial]) -> Polynomial:
    """Full remainder of f on division by the basis: no term of the result is
    divisible by any basis leading monomial.  Deterministic: the largest
    reducible term is reduced by the first (leftmost) basis element whose
    leading monomial divides it."""
    ring = f.ring
    p = ring.p
    leads = [(b.leading_monomial(), b) for b in basis if not b.is_zero()]
    for lm, b in leads:
        if b.leading_coefficient() != 1:
            raise AlgebraError("normal_form requires monic basis elements")
    work: dict[Monomial, int] = {m: c for m, c in f.terms}
    remainder: dict[Monomial, int] = {}
    while work:
        m = max(work)
        c = work[m]
        reducer = None
        for lm, b in leads:
            if lm.divides(m):
                reducer = (lm, b)
                break
        if reducer is None:
            remainder[m] = c
            del work[m]
            continue
        lm, b = reducer
        q = m.quotient(lm)
        for mb, cb in b.terms:
            key = mb.mul(q)
            v = (work.get(key, 0) - c * cb) % p
            if v:
                work[key] = v
            elif key in work:
                del work[key]
    return Polynomial(ring, remainder)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f, g) for monic f, g: cancel the leading terms against their lcm."""
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = lf.lcm(lg)
    return f.term_mul(l.quotient(lf)) - g.term_mul(l.quotient(lg))


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    basis: tuple[Polynomial, ...]

    def leading_monomials(self) -> list[Monomial]:
        return [b.leading_monomial() for b in self.basis]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, list(self.basis))

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def is_groebner_certificate(self) -> bool:
        """Independent re-check: every S-polynomial reduces to zero."""
        bs = list(self.basis)
        for i in range(len(bs)):
            for j in range(i + 1, len(bs)):
                if not normal_form(s_polynomial(bs[i], bs[j]), bs).is_zero():
                    return False
        return True

    def dump(self) -> str:
        return "\n".join(str(b) for b in self.basis)


def _sort_key(f: Polynomial):
    lm = f.leading_monomial()
    return (lm.degree, lm.exponents)


def _interreduce(basis: list[Polynomial]) -> list[Polynomial]:
    """Minimalize leading monomials, then tail-reduce each element against
    the others; the outcome is the unique reduced basis."""
    lms = [b.leading_monomial() for b in basis]
    keep = []
    for idx, b in enumerate(basis):
        redundant = any(
            k != idx and lms[k].divides(lms[idx]) and (lms[k] != lms[idx] or k < idx)
            for k in range(len(basis)))
        if not redundant:
            keep.append(b)
    out = []
    for idx, b in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        out.append(normal_form(b, others).monic())
    out.sort(key=_sort_key)
    return out


def buchberger(gens: list[Polynomial], ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm with normal pair
    selection (smallest lcm first) and the coprime and chain pruning
    criteria.  Deterministic for a given generator multiset."""
    if ring is None:
        if not gens:
            raise AlgebraError("buchberger needs generators or an explicit ring")
        ring = gens[0].ring
    basis = [g.monic() for g in gens if not g.is_zero()]
    if any(g.ring != ring for g in basis):
        raise AlgebraError("generators from different rings")
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def lcm_of(i: int, j: int) -> Monomial:
        return basis[i].leading_monomial().lcm(basis[j].leading_monomial())

    while pairs:
        i, j = min(pairs, key=lambda ij: (lcm_of(*ij).degree, lcm_of(*ij).exponents, ij))
        pairs.remove((i, j))
        li = basis[i].leading_monomial()
        lj = basis[j].leading_monomial()
        if li.coprime(lj):
            continue
        big = li.lcm(lj)
        chain = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if basis[k].leading_monomial().divides(big):
                ik = (min(i, k), max(i, k))
                jk = (min(j, k), max(j, k))
                if ik not in pairs and jk not in pairs:
                    chain = True
                    break
        if chain:
            continue
        h = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if h.is_zero():
            continue
        basis.append(h.monic())
        t = len(basis) - 1
        pairs.update((k, t) for k in range(t))
    return GroebnerBasis(ring=ring, basis=tuple(_interreduce(basis)))


def graph_groebner_basis(g: Graph, p: int) -> GroebnerBasis:
    """Reduced basis of the edge-binomial ideal of g over F_p."""
    ring = PolyRing(g.n, p)
    return buchberger(edge_ideal_generators(g, ring), ring)


def initial_ideal(gb: GroebnerBasis) -> list[Monomial]:
    """Minimal generators of the leading-term ideal, each verified squarefree
    (hard error otherwise: the order or the arithmetic is wrong)."""
    lms = gb.leading_monomials()
    for lm, b in zip(lms, gb.basis):
        if not lm.squarefree:
            raise AlgebraError(
                f"non-squarefree leading monomial {gb.ring.format_monomial(lm)} "
                f"in basis element {b}")
    for a in lms:
        for b in lms:
            if a != b and a.divides(b):
                raise AlgebraError("leading terms of a reduced basis must be minimal")
    return sorted(lms, key=lambda m: (m.degree, m.exponents))
