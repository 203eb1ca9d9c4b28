"""Class candidates in Z[L] and executable congruence verdicts.

Counting points specializes the Lefschetz class L to q, so polynomial
identities in L become integer identities checkable per prime. Everything
here either produces an exact verdict or an interpolated class candidate
that survived held-out primes; nothing is ever fitted silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .counting import DEFAULT_BUDGET, DEFAULT_CHUNK, count_Z, count_graph
from .graphs import (
    EdgeKind,
    Multigraph,
    classify_edge,
    delete_edge,
    graph_id,
    has_non_loop_edge,
    is_forest,
)
from .primes import first_primes, require_prime


class InsufficientPrimesError(ValueError):
    pass


@dataclass(frozen=True)
class ClassPoly:
    """Polynomial in L with integer coefficients, ascending powers."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls) -> "ClassPoly":
        return cls(())

    @classmethod
    def one(cls) -> "ClassPoly":
        return cls((1,))

    @classmethod
    def lefschetz(cls) -> "ClassPoly":
        return cls((0, 1))

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def constant_term(self) -> int:
        return self.coefficients[0] if self.coefficients else 0

    def evaluate(self, q: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * q + c
        return total

    def __add__(self, other: "ClassPoly") -> "ClassPoly":
        width = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (width - len(self.coefficients))
        b = other.coefficients + (0,) * (width - len(other.coefficients))
        return ClassPoly(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: "ClassPoly") -> "ClassPoly":
        if not self.coefficients or not other.coefficients:
            return ClassPoly(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return ClassPoly(tuple(out))

    def __pow__(self, k: int) -> "ClassPoly":
        out = ClassPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def to_text(self) -> str:
        """Descending powers: "L^3 - L^2", "L - 1", "1", "0"."""
        if not self.coefficients:
            return "0"
        pieces = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            if power == 0:
                body = str(abs(c))
            else:
                head = "L" if power == 1 else f"L^{power}"
                body = head if abs(c) == 1 else f"{abs(c)}*{head}"
            pieces.append((c < 0, body))
        neg, body = pieces[0]
        out = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json_obj(self) -> dict:
        return {"coefficients": list(self.coefficients), "text": self.to_text()}


@dataclass(frozen=True)
class NotPolynomiallyConsistent:
    """Interpolation refused: the counts are not consistent with a single
    integer polynomial in q across the supplied primes. A reportable
    outcome, not an error."""

    graph: str
    reason: str
    data: tuple = ()

    def to_json_obj(self) -> dict:
        return {
            "graph": self.graph,
            "not_polynomially_consistent": True,
            "reason": self.reason,
            "data": [list(row) for row in self.data],
        }


@dataclass(frozen=True)
class CongruenceVerdict:
    """One executable identity at a batch of primes.

    observed holds (q, observed_value, expected_value) triples; the verdict
    passes when every pair agrees. Vacuous verdicts (hypotheses not met)
    carry applicable=False and pass trivially.
    """

    graph: str
    tag: str  # modL | Lrat | dc-bridge | dc-loop | dc-regular
    expected: str
    observed: tuple[tuple[int, int, int], ...]
    passed: bool
    applicable: bool = True
    edge: int | None = None

    def to_json_obj(self) -> dict:
        obj = {
            "graph": self.graph,
            "tag": self.tag,
            "expected": self.expected,
            "observed": [list(row) for row in self.observed],
            "pass": self.passed,
            "applicable": self.applicable,
        }
        if self.edge is not None:
            obj["edge"] = self.edge
        return obj


def _validated_primes(primes: Sequence[int]) -> tuple[int, ...]:
    out = tuple(sorted(primes))
    if len(set(out)) != len(out):
        raise ValueError("primes must be distinct")
    for q in out:
        require_prime(q)
    return out


def predicted_sb_constant(g: Multigraph) -> int:
    """Constant the complement count must hit mod q: 0 once any non-looping
    edge exists, else (-1)^n for a pure bouquet of n loops (n=0 gives 1)."""
    if has_non_loop_edge(g):
        return 0
    return -1 if g.edge_count % 2 else 1


def check_modL_congruence(
    g: Multigraph,
    primes: Sequence[int],
    *,
    graph_name: str | None = None,
    method: str = "fibered",
    budget: int = DEFAULT_BUDGET,
    chunk_points: int = DEFAULT_CHUNK,
    workers: int = 1,
) -> CongruenceVerdict:
    """|Y_G(F_q)| mod q against the predicted constant, at every prime."""
    name = graph_name if graph_name is not None else graph_id(g)
    constant = predicted_sb_constant(g)
    observed = []
    for q in _validated_primes(primes):
        rec = count_graph(
            g, q, method, budget=budget, chunk_points=chunk_points, workers=workers
        )
        observed.append((q, rec.complement_count % q, constant % q))
    passed = all(obs == exp for _, obs, exp in observed)
    return CongruenceVerdict(
        graph=name,
        tag="modL",
        expected=f"{constant} mod q",
        observed=tuple(observed),
        passed=passed,
    )


def check_projective_congruence(
    g: Multigraph,
    primes: Sequence[int],
    *,
    graph_name: str | None = None,
    method: str = "fibered",
    budget: int = DEFAULT_BUDGET,
    chunk_points: int = DEFAULT_CHUNK,
    workers: int = 1,
) -> CongruenceVerdict:
    """|X_G(F_q)| = 1 mod q for non-forests with a non-looping edge.

    Outside those hypotheses the verdict is inapplicable (vacuously true):
    forests have no projective hypersurface, and pure loop bouquets
    genuinely violate the congruence.
    """
    name = graph_name if graph_name is not None else graph_id(g)
    if is_forest(g) or not has_non_loop_edge(g):
        return CongruenceVerdict(
            graph=name,
            tag="Lrat",
            expected="1 mod q",
            observed=(),
            passed=True,
            applicable=False,
        )
    observed = []
    for q in _validated_primes(primes):
        rec = count_graph(
            g, q, method, budget=budget, chunk_points=chunk_points, workers=workers
        )
        observed.append((q, rec.projective_count % q, 1))
    passed = all(obs == exp for _, obs, exp in observed)
    return CongruenceVerdict(
        graph=name,
        tag="Lrat",
        expected="1 mod q",
        observed=tuple(observed),
        passed=passed,
    )


_DC_EXPECTED = {
    EdgeKind.BRIDGE: "|Y| = q*|Y_del|",
    EdgeKind.LOOP: "|Y| = (q-1)*|Y_del|",
    EdgeKind.REGULAR: "|Y| = q*(q^(n-1) - |Z|) - |Y_del|",
}

_DC_TAG = {
    EdgeKind.BRIDGE: "dc-bridge",
    EdgeKind.LOOP: "dc-loop",
    EdgeKind.REGULAR: "dc-regular",
}


def dc_identity_check(
    g: Multigraph,
    edge_label: int,
    q: int,
    *,
    graph_name: str | None = None,
    method: str = "fibered",
    budget: int = DEFAULT_BUDGET,
    chunk_points: int = DEFAULT_CHUNK,
    workers: int = 1,
    y_full: int | None = None,
) -> CongruenceVerdict:
    """Exact integer deletion-contraction identity for one edge, one prime.

    Bridge: |Y_G| = q*|Y_del|. Loop: (q-1)*|Y_del|. Regular:
    q*(q^(n-1) - |Z|) - |Y_del|, with Z the common zero locus of the two
    minor polynomials. y_full optionally carries an already computed
    |Y_G(F_q)| so per-edge sweeps don't recount the whole graph.
    """
    name = graph_name if graph_name is not None else graph_id(g)
    kind = classify_edge(g, edge_label)
    kw = dict(budget=budget, chunk_points=chunk_points, workers=workers)
    n = g.edge_count
    lhs = count_graph(g, q, method, **kw).complement_count if y_full is None else y_full
    y_del = count_graph(delete_edge(g, edge_label), q, method, **kw).complement_count
    if kind is EdgeKind.BRIDGE:
        rhs = q * y_del
    elif kind is EdgeKind.LOOP:
        rhs = (q - 1) * y_del
    else:
        z = count_Z(g, edge_label, q, **kw)
        rhs = q * (q ** (n - 1) - z) - y_del
    return CongruenceVerdict(
        graph=name,
        tag=_DC_TAG[kind],
        expected=_DC_EXPECTED[kind],
        observed=((q, lhs, rhs),),
        passed=lhs == rhs,
        edge=edge_label,
    )


def dc_identity_matrix(
    g: Multigraph,
    primes: Sequence[int],
    *,
    graph_name: str | None = None,
    method: str = "fibered",
    budget: int = DEFAULT_BUDGET,
    chunk_points: int = DEFAULT_CHUNK,
    workers: int = 1,
) -> list[CongruenceVerdict]:
    """One merged verdict per edge, observations across all primes."""
    name = graph_name if graph_name is not None else graph_id(g)
    qs = _validated_primes(primes)
    kw = dict(budget=budget, chunk_points=chunk_points, workers=workers)
    full_counts = {q: count_graph(g, q, method, **kw).complement_count for q in qs}
    out = []
    for e in g.labels:
        rows = [
            dc_identity_check(
                g, e, q, graph_name=name, method=method, y_full=full_counts[q], **kw
            )
            for q in qs
        ]
        out.append(
            CongruenceVerdict(
                graph=name,
                tag=rows[0].tag,
                expected=rows[0].expected,
                observed=tuple(row.observed[0] for row in rows),
                passed=all(row.passed for row in rows),
                edge=e,
            )
        )
    return out


def _lagrange_coefficients(points: list[tuple[int, int]]) -> list[Fraction]:
    """Coefficients (ascending) of the unique degree < len(points) polynomial
    through the given (x, y) pairs, over exact rationals."""
    k = len(points)
    coeffs = [Fraction(0)] * k
    for i, (xi, yi) in enumerate(points):
        num = [Fraction(1)]
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            longer = [Fraction(0)] * (len(num) + 1)
            for d, c in enumerate(num):
                longer[d + 1] += c
                longer[d] -= c * xj
            num = longer
            denom *= xi - xj
        weight = Fraction(yi, denom)
        for d, c in enumerate(num):
            coeffs[d] += c * weight
    return coeffs


def interpolate_class(
    g: Multigraph,
    primes: Sequence[int] | None = None,
    *,
    graph_name: str | None = None,
    method: str = "fibered",
    budget: int = DEFAULT_BUDGET,
    chunk_points: int = DEFAULT_CHUNK,
    workers: int = 1,
) -> ClassPoly | NotPolynomiallyConsistent:
    """Candidate class in Z[L] from complement counts at several primes.

    Interpolates a degree <= n polynomial through the first n+1 counts over
    exact rationals, then demands integer coefficients and agreement at at
    least two held-out primes. Any miss returns NotPolynomiallyConsistent
    with the evidence; a returned polynomial is a candidate, not a proof.

    With primes=None the first n+3 primes >= 3 are used.
    """
    name = graph_name if graph_name is not None else graph_id(g)
    n = g.edge_count
    if primes is None:
        primes = first_primes(n + 3)
    qs = _validated_primes(primes)
    if len(qs) < n + 3:
        raise InsufficientPrimesError(
            f"need at least {n + 3} primes for {n} edges, got {len(qs)}"
        )
    counts = []
    for q in qs:
        rec = count_graph(
            g, q, method, budget=budget, chunk_points=chunk_points, workers=workers
        )
        counts.append((q, rec.complement_count))
    fitted = _lagrange_coefficients(counts[: n + 1])
    if any(c.denominator != 1 for c in fitted):
        return NotPolynomiallyConsistent(
            graph=name,
            reason="interpolant has non-integer coefficients",
            data=tuple(counts),
        )
    candidate = ClassPoly(tuple(int(c) for c in fitted))
    for q, y in counts[n + 1 :]:
        predicted = candidate.evaluate(q)
        if predicted != y:
            return NotPolynomiallyConsistent(
                graph=name,
                reason=f"held-out prime {q}: predicted {predicted}, counted {y}",
                data=tuple(counts),
            )
    return candidate


def hodge_form(c: ClassPoly) -> tuple[int, ClassPoly]:
    """Split c = constant + L*tail.

    The constant is the candidate image in the quotient by (L); for graph
    classes it must land in {0, +1, -1} and match predicted_sb_constant.
    """
    return c.constant_term(), ClassPoly(c.coefficients[1:])
