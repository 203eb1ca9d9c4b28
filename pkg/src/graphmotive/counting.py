"""Exact point counts over prime fields for graph hypersurfaces.

Counts |zeros of psi| in F_q^n, the complement, the projective count, and
the two-polynomial Z-locus. The workhorse is a chunked vectorized sweep that
tallies zero-patterns of several polynomials over the same grid; integer
accumulation makes results independent of chunking and thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .graphs import (
    EdgeKind,
    GraphError,
    Multigraph,
    classify_edge,
    contract_edge,
    delete_edge,
    relabel_dense,
)
from .primes import require_prime
from .symanzik import MultilinearPoly, psi_by_deletion_contraction, split_last_var

DEFAULT_BUDGET = 10**9  # single-polynomial point evaluations per count
DEFAULT_CHUNK = 1 << 19
_MAX_Q = 1 << 31  # keep products of two residues inside int64
_SAFE_LIMIT = 1 << 62


class BudgetExceededError(RuntimeError):
    pass


class ConsistencyError(RuntimeError):
    """An internal exact identity failed; indicates a bug, never data."""


class NotRegularEdgeError(GraphError):
    pass


class NoProjectiveHypersurfaceError(ValueError):
    """Constant polynomial: forests define no projective hypersurface."""


@dataclass(frozen=True)
class CountRecord:
    """Exact counts for one (polynomial, prime) pair.

    projective_count is None when the polynomial is constant (forests have
    no projective hypersurface).
    """

    q: int
    n: int
    affine_zero_count: int
    complement_count: int
    projective_count: int | None = None

    def __post_init__(self):
        if self.affine_zero_count + self.complement_count != self.q**self.n:
            raise ConsistencyError(
                f"counts {self.affine_zero_count}+{self.complement_count} != {self.q}^{self.n}"
            )
        if self.projective_count is not None:
            diff = self.affine_zero_count - 1
            if diff < 0 or diff % (self.q - 1) != 0:
                raise ConsistencyError(
                    f"affine zero count {self.affine_zero_count} not 1 mod (q-1)"
                )
            if self.projective_count != diff // (self.q - 1):
                raise ConsistencyError("projective count inconsistent with cone fibration")

    def to_json_obj(self) -> dict:
        obj = {
            "q": self.q,
            "n": self.n,
            "affine_zero_count": self.affine_zero_count,
            "complement_count": self.complement_count,
        }
        if self.projective_count is not None:
            obj["projective_count"] = self.projective_count
        return obj


# -- vectorized sweep core ---------------------------------------------------


def _prepared_terms(p: MultilinearPoly, q: int) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    for mask in sorted(p.terms):
        coeff = p.terms[mask] % q
        if coeff:
            out.append((coeff, tuple(i for i in range(p.var_count) if mask >> i & 1)))
    return out


def _chunk_patterns(
    polys_terms: list[list[tuple[int, tuple[int, ...]]]],
    width: int,
    q: int,
    start: int,
    stop: int,
) -> np.ndarray:
    """Zero-pattern histogram for grid points start..stop-1 (mixed-radix)."""
    idx = np.arange(start, stop, dtype=np.int64)
    coords = []
    scale = 1
    for _ in range(width):
        coords.append(idx // scale % q)
        scale *= q
    pattern = np.zeros(stop - start, dtype=np.int64)
    mul_limit = _SAFE_LIMIT // q
    for bit_index, terms in enumerate(polys_terms):
        total = np.zeros(stop - start, dtype=np.int64)
        total_bound = 0
        for coeff, variables in terms:
            acc = None
            bound = coeff
            for j in variables:
                if acc is None:
                    acc = coords[j] if coeff == 1 else coeff * coords[j]
                else:
                    if bound > mul_limit:
                        acc = acc % q
                        bound = q - 1
                    acc = acc * coords[j]
                bound *= q - 1
            if acc is None:
                acc = np.full(stop - start, coeff, dtype=np.int64)
                bound = coeff
            if total_bound + bound >= _SAFE_LIMIT:
                total = total % q
                total_bound = q - 1
            total = total + acc
            total_bound += bound
        pattern |= (total % q == 0).astype(np.int64) << bit_index
    return np.bincount(pattern, minlength=1 << len(polys_terms))


def sweep_zero_patterns(
    polys: list[MultilinearPoly],
    q: int,
    *,
    chunk_points: int = DEFAULT_CHUNK,
    workers: int = 1,
) -> list[int]:
    """Count grid points of F_q^width by which polynomials vanish there.

    Returns 2^len(polys) integers; index bit i is set when polys[i]
    vanishes. All polynomials must share var_count (the sweep width).
    Results are bit-identical across chunk sizes and worker counts.
    """
    require_prime(q)
    if q >= _MAX_Q:
        raise ValueError(f"modulus {q} too large for 64-bit sweep arithmetic")
    width = polys[0].var_count
    if any(p.var_count != width for p in polys):
        raise ValueError("sweep polynomials must share var_count")
    total_points = q**width
    prepared = [_prepared_terms(p, q) for p in polys]
    starts = range(0, total_points, chunk_points)
    counts = [0] * (1 << len(polys))

    def fold(hist: np.ndarray) -> None:
        for i, c in enumerate(hist):
            counts[i] += int(c)

    if workers <= 1 or len(starts) <= 1:
        for s in starts:
            fold(_chunk_patterns(prepared, width, q, s, min(s + chunk_points, total_points)))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(
                    _chunk_patterns, prepared, width, q, s, min(s + chunk_points, total_points)
                )
                for s in starts
            ]
            for fut in futures:
                fold(fut.result())
    return counts


# -- public counters ---------------------------------------------------------


def _check_budget(cost: int, budget: int, what: str) -> None:
    if cost > budget:
        raise BudgetExceededError(
            f"{what} needs {cost} point evaluations, budget is {budget}"
        )


def _maybe_projective(p: MultilinearPoly, q: int, zeros: int) -> int | None:
    """Projective count for non-constant homogeneous p, else None.

    The affine zero set of a positive-degree homogeneous polynomial is a
    cone: scaling acts freely off the origin, so q-1 divides zeros-1.
    """
    if p.degree() == 0 or not p.is_homogeneous():
        return None
    diff = zeros - 1
    if diff < 0 or diff % (q - 1) != 0:
        raise ConsistencyError(f"cone fibration violated: {zeros} zeros at q={q}")
    return diff // (q - 1)


def count_brute(
    p: MultilinearPoly,
    q: int,
    *,
    budget: int = DEFAULT_BUDGET,
    chunk_points: int = DEFAULT_CHUNK,
    workers: int = 1,
) -> CountRecord:
    """Full enumeration of F_q^n; the oracle every faster counter must match."""
    require_prime(q)
    n = p.var_count
    _check_budget(q**n, budget, f"brute count over F_{q}^{n}")
    zeros = sweep_zero_patterns([p], q, chunk_points=chunk_points, workers=workers)[1]
    return CountRecord(
        q=q,
        n=n,
        affine_zero_count=zeros,
        complement_count=q**n - zeros,
        projective_count=_maybe_projective(p, q, zeros),
    )


def count_projective(rec: CountRecord) -> int:
    """Projective point count from an affine record.

    The affine zero cone minus the origin fibers over the projective
    hypersurface with fibers of size q-1; the record already carries the
    quotient, validated at construction.
    """
    if rec.projective_count is None:
        raise NoProjectiveHypersurfaceError(
            "constant polynomial has no projective hypersurface"
        )
    return rec.projective_count


def _drop_var(p: MultilinearPoly, e: int) -> MultilinearPoly:
    """Remove an unused variable slot, shifting higher indices down."""
    bit = 1 << e
    low = bit - 1
    terms = {}
    for mask, coeff in p.terms.items():
        if mask & bit:
            raise ValueError(f"t{e} occurs in a term")
        terms[(mask & low) | (mask >> 1 & ~low)] = coeff
    return MultilinearPoly(p.var_count - 1, terms)


def count_fibered(
    p: MultilinearPoly,
    e: int,
    q: int,
    *,
    budget: int = DEFAULT_BUDGET,
    chunk_points: int = DEFAULT_CHUNK,
    workers: int = 1,
) -> CountRecord:
    """Count by sweeping the base F_q^{n-1} of the t_e-coordinate fibration.

    Writing p = t_e*A + B, a base point contributes q-1 complement points
    when A is non-zero there (one bad fiber value), q when only B is
    non-zero, and 0 when both vanish. One q-th of the brute-force work.
    """
    require_prime(q)
    n = p.var_count
    if n == 0:
        value = p.terms.get(0, 0) % q
        complement = 1 if value else 0
        return CountRecord(
            q=q, n=0, affine_zero_count=1 - complement, complement_count=complement
        )
    if not 0 <= e < n:
        raise ValueError(f"split variable {e} outside 0..{n - 1}")
    _check_budget(2 * q ** (n - 1), budget, f"fibered count over F_{q}^{n - 1}")
    a, b = split_last_var(p, e)
    if a.var_count == n:
        a, b = _drop_var(a, e), _drop_var(b, e)
    c = sweep_zero_patterns([a, b], q, chunk_points=chunk_points, workers=workers)
    complement = (q - 1) * (c[0] + c[2]) + q * c[1]
    zeros = q**n - complement
    return CountRecord(
        q=q,
        n=n,
        affine_zero_count=zeros,
        complement_count=complement,
        projective_count=_maybe_projective(p, q, zeros),
    )


def count_Z(
    g: Multigraph,
    label: int,
    q: int,
    *,
    budget: int = DEFAULT_BUDGET,
    chunk_points: int = DEFAULT_CHUNK,
    workers: int = 1,
) -> int:
    """Common zeros of the deletion and contraction polynomials in F_q^{n-1}.

    Both minors keep the surviving edge labels, so one dense relabeling
    (shared, since the label sets coincide) pins the n-1 coordinates and
    the two polynomials are swept together.
    """
    require_prime(q)
    if classify_edge(g, label) is not EdgeKind.REGULAR:
        raise NotRegularEdgeError(f"edge {label} is not regular")
    n = g.edge_count
    _check_budget(2 * q ** (n - 1), budget, f"Z-locus sweep over F_{q}^{n - 1}")
    p_del = psi_by_deletion_contraction(relabel_dense(delete_edge(g, label)))
    p_con = psi_by_deletion_contraction(relabel_dense(contract_edge(g, label)))
    c = sweep_zero_patterns([p_del, p_con], q, chunk_points=chunk_points, workers=workers)
    return c[3]


def count_graph(
    g: Multigraph,
    q: int,
    method: str = "fibered",
    *,
    budget: int = DEFAULT_BUDGET,
    chunk_points: int = DEFAULT_CHUNK,
    workers: int = 1,
) -> CountRecord:
    """Counts for a graph's polynomial, over A^n with n = edge count.

    method: "brute", "fibered" (split at the last edge variable), or
    "both" (run both, insist on exact agreement).
    """
    if method not in ("brute", "fibered", "both"):
        raise ValueError(f"unknown method {method!r}")
    p = psi_by_deletion_contraction(relabel_dense(g))
    kw = dict(budget=budget, chunk_points=chunk_points, workers=workers)
    if method == "brute":
        return count_brute(p, q, **kw)
    if method == "fibered":
        return count_fibered(p, max(p.var_count - 1, 0), q, **kw)
    rec_b = count_brute(p, q, **kw)
    rec_f = count_fibered(p, max(p.var_count - 1, 0), q, **kw)
    if rec_b != rec_f:
        raise ConsistencyError(f"brute {rec_b} != fibered {rec_f}")
    return rec_b
