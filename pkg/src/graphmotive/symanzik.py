"""Multilinear polynomials keyed by edge-subset bitmasks, and the graph
polynomial built three independent ways.

The constructions (forest enumeration, reduced-Laplacian determinant,
deletion-contraction recursion) must agree term-for-term; each acts as an
oracle for the others.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .graphs import (
    EdgeKind,
    Multigraph,
    _UnionFind,
    classify_edge,
    contract_edge,
    delete_edge,
    spanning_forests,
)
from .primes import require_prime

MAX_VARS = 63  # masks must stay cheap machine ints


class NonMultilinearError(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class MultilinearPoly:
    """Integer polynomial, every variable of degree <= 1 per term.

    terms maps a bitmask over variable indices to a non-zero coefficient.
    var_count fixes the ambient variable set t_0..t_{var_count-1}; it may
    exceed the support (evaluation then expects that many coordinates).
    """

    __slots__ = ("var_count", "terms")

    def __init__(self, var_count: int, terms: dict[int, int]):
        if not 0 <= var_count <= MAX_VARS:
            raise NonMultilinearError(f"var_count {var_count} outside 0..{MAX_VARS}")
        clean = {}
        for mask, coeff in terms.items():
            if coeff == 0:
                continue
            if not 0 <= mask < (1 << var_count):
                raise NonMultilinearError(
                    f"mask {mask:#x} uses variables beyond var_count={var_count}"
                )
            clean[mask] = coeff
        self.var_count = var_count
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, var_count: int = 0) -> "MultilinearPoly":
        return cls(var_count, {})

    @classmethod
    def constant(cls, c: int, var_count: int = 0) -> "MultilinearPoly":
        return cls(var_count, {0: c} if c else {})

    @classmethod
    def variable(cls, i: int, var_count: int | None = None) -> "MultilinearPoly":
        if var_count is None:
            var_count = i + 1
        return cls(var_count, {1 << i: 1})

    def with_var_count(self, var_count: int) -> "MultilinearPoly":
        return MultilinearPoly(var_count, dict(self.terms))

    # -- ring structure ---------------------------------------------------

    def __add__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        terms = dict(self.terms)
        for mask, coeff in other.terms.items():
            terms[mask] = terms.get(mask, 0) + coeff
        return MultilinearPoly(max(self.var_count, other.var_count), terms)

    def __neg__(self) -> "MultilinearPoly":
        return MultilinearPoly(self.var_count, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        return self + (-other)

    def __mul__(self, other: "MultilinearPoly") -> "MultilinearPoly":
        terms: dict[int, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1 & m2:
                    raise NonMultilinearError(
                        f"product would square variables {sorted(_bits(m1 & m2))}"
                    )
                mask = m1 | m2
                terms[mask] = terms.get(mask, 0) + c1 * c2
        return MultilinearPoly(max(self.var_count, other.var_count), terms)

    def times_var(self, i: int) -> "MultilinearPoly":
        bit = 1 << i
        if any(mask & bit for mask in self.terms):
            raise NonMultilinearError(f"t{i} already present in some term")
        return MultilinearPoly(
            max(self.var_count, i + 1), {mask | bit: c for mask, c in self.terms.items()}
        )

    # -- structure queries -------------------------------------------------

    def degree(self) -> int:
        """Max term degree; 0 for the zero polynomial."""
        return max((mask.bit_count() for mask in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {mask.bit_count() for mask in self.terms}
        return len(degs) <= 1

    def is_zero(self) -> bool:
        return not self.terms

    def term_count(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return self.var_count == other.var_count and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.var_count, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultilinearPoly({self.var_count}, {self.to_text()!r})"

    # -- rendering ----------------------------------------------------------

    def to_text(self) -> str:
        """Terms by ascending mask: "t0*t1 + t0*t2 + t1*t2"."""
        if not self.terms:
            return "0"
        pieces = []
        for mask in sorted(self.terms):
            coeff = self.terms[mask]
            head = "*".join(f"t{i}" for i in _bits(mask))
            if mask == 0:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = head
            else:
                body = f"{abs(coeff)}*{head}"
            pieces.append((coeff < 0, body))
        neg, body = pieces[0]
        out = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json_obj(self) -> dict:
        return {
            "var_count": self.var_count,
            "terms": [[mask, self.terms[mask]] for mask in sorted(self.terms)],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MultilinearPoly":
        return cls(int(obj["var_count"]), {int(m): int(c) for m, c in obj["terms"]})


def evaluate(p: MultilinearPoly, x: Sequence[int], q: int) -> int:
    """Exact evaluation mod a prime q."""
    require_prime(q)
    if len(x) != p.var_count:
        raise ValueError(f"point has {len(x)} coordinates, poly expects {p.var_count}")
    xs = [v % q for v in x]
    total = 0
    for mask, coeff in p.terms.items():
        prod = coeff % q
        for i in _bits(mask):
            prod = prod * xs[i] % q
        total += prod
    return total % q


def evaluate_int(p: MultilinearPoly, x: Sequence[int]) -> int:
    """Exact evaluation over Z (no modulus)."""
    if len(x) != p.var_count:
        raise ValueError(f"point has {len(x)} coordinates, poly expects {p.var_count}")
    total = 0
    for mask, coeff in p.terms.items():
        prod = coeff
        for i in _bits(mask):
            prod *= x[i]
        total += prod
    return total


def split_last_var(
    p: MultilinearPoly, e: int
) -> tuple[MultilinearPoly, MultilinearPoly]:
    """Decompose p = t_e * A + B with A, B free of t_e.

    The ambient width drops by one only when e is the top variable;
    splitting off an interior variable keeps the indexing of the others.
    """
    if e >= p.var_count:
        return MultilinearPoly.zero(p.var_count), p
    width = p.var_count - 1 if e == p.var_count - 1 else p.var_count
    bit = 1 << e
    a_terms, b_terms = {}, {}
    for mask, coeff in p.terms.items():
        if mask & bit:
            a_terms[mask ^ bit] = coeff
        else:
            b_terms[mask] = coeff
    return MultilinearPoly(width, a_terms), MultilinearPoly(width, b_terms)


# -- the graph polynomial, three ways ---------------------------------------


def _ambient_width(g: Multigraph) -> int:
    return max((e.label for e in g.edges), default=-1) + 1


def _full_mask(g: Multigraph) -> int:
    mask = 0
    for e in g.edges:
        mask |= 1 << e.label
    return mask


def psi_by_trees(g: Multigraph) -> MultilinearPoly:
    """Sum over maximal spanning forests F of the product of t_e, e not in F.

    The defining formula. Homogeneous of degree betti_1(g), every
    coefficient 1, and psi(1,..,1) counts the forests. Edgeless graphs
    (and forests generally, whose only maximal forest is everything)
    give the constant 1.
    """
    if _ambient_width(g) > MAX_VARS:
        raise NonMultilinearError(f"edge labels exceed {MAX_VARS - 1}")
    full = _full_mask(g)
    terms = {}
    for forest in spanning_forests(g):
        mask = 0
        for label in forest:
            mask |= 1 << label
        terms[full ^ mask] = 1
    return MultilinearPoly(_ambient_width(g), terms)


def psi_by_matrix_tree(g: Multigraph) -> MultilinearPoly:
    """Kirchhoff route: reduced weighted-Laplacian determinant per component.

    The determinant yields the forest generating sum (products over edges IN
    the forest); the subset-complement transform against the full edge set
    then matches psi_by_trees exactly. Loops never enter the Laplacian but
    reappear via the complement. Exact symbolic arithmetic throughout; this
    is an oracle, not a fast path.
    """
    import sympy

    width = _ambient_width(g)
    if width > MAX_VARS:
        raise NonMultilinearError(f"edge labels exceed {MAX_VARS - 1}")

    uf = _UnionFind(g.vertex_count)
    for e in g.edges:
        uf.union(e.u, e.v)
    members: dict[int, list[int]] = {}
    for v in range(g.vertex_count):
        members.setdefault(uf.find(v), []).append(v)

    syms = {e.label: sympy.Symbol(f"t{e.label}") for e in g.edges}
    det_product = sympy.Integer(1)
    for verts in members.values():
        if len(verts) < 2:
            continue
        index = {v: i for i, v in enumerate(verts)}
        lap = sympy.zeros(len(verts), len(verts))
        for e in g.edges:
            if e.is_loop or e.u not in index:
                continue
            i, j, t = index[e.u], index[e.v], syms[e.label]
            lap[i, i] += t
            lap[j, j] += t
            lap[i, j] -= t
            lap[j, i] -= t
        reduced = lap[:-1, :-1]
        det_product *= reduced.det(method="bareiss")

    expr = sympy.expand(det_product)
    gens = [syms[label] for label in sorted(syms)]
    forest_terms: dict[int, int] = {}
    if not gens or expr.is_number:
        forest_terms[0] = int(expr)
    else:
        poly = sympy.Poly(expr, *gens)
        labels = sorted(syms)
        for exponents, coeff in poly.terms():
            mask = 0
            for label, power in zip(labels, exponents):
                if power not in (0, 1):
                    raise NonMultilinearError("determinant produced a square")
                if power:
                    mask |= 1 << label
            forest_terms[mask] = int(coeff)

    full = _full_mask(g)
    return MultilinearPoly(width, {full ^ m: c for m, c in forest_terms.items()})


def psi_by_deletion_contraction(g: Multigraph) -> MultilinearPoly:
    """Recursive route over the bridge/loop/regular trichotomy.

    Regular e: t_e * psi(g minus e) + psi(g contract e); bridge: contract
    only; loop: t_e times the deletion. Stable edge labels make the
    recursion land in literally the same variables as the other builders.
    """
    width = _ambient_width(g)
    if width > MAX_VARS:
        raise NonMultilinearError(f"edge labels exceed {MAX_VARS - 1}")

    def rec(h: Multigraph) -> MultilinearPoly:
        if not h.edges:
            return MultilinearPoly.constant(1, width)
        label = max(e.label for e in h.edges)
        kind = classify_edge(h, label)
        if kind is EdgeKind.LOOP:
            return rec(delete_edge(h, label)).times_var(label)
        if kind is EdgeKind.BRIDGE:
            return rec(contract_edge(h, label))
        return rec(delete_edge(h, label)).times_var(label) + rec(
            contract_edge(h, label)
        )

    return rec(g)
