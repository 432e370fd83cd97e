"""Normalized torus-link series, their stable limits, and checks on them.

``Psi_n = q^(2m(n^2+3n)/3 - n) J_(n,0)(T(2,2m))`` is a polynomial in ``q`` with
constant term 1 whose low coefficients freeze as ``n`` grows.  Two closed
expressions for the limit are provided: a single sum (:func:`tail_psi`)
and a chain sum multiplied by ``(q)_infinity`` (:func:`tail_g`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection, Iterator

from .jones import FramedInvariant, g_chain_term, psi_closed_form, _check_nm
from .qexact import (
    TruncatedSeries,
    pentagonal_euler,
    poly_divmod_exact,
    poly_mul,
    to_series,
)

METHODS = ("psi-limit", "g-limit", "psi-finite", "g-finite")


@dataclass(frozen=True)
class TailSeries:
    m: int
    order: int
    series: TruncatedSeries
    method: str
    n: int | None = None

    @property
    def tag(self) -> str:
        return self.method if self.n is None else f"{self.method}({self.n})"


@dataclass(frozen=True)
class Mismatch:
    degree: int
    left: int
    right: int

    def __str__(self):
        return f"first mismatch at q^{self.degree}: {self.left} != {self.right}"


@dataclass(frozen=True)
class IdentityReport:
    m: int
    order: int
    holds: bool
    mismatch: Mismatch | None = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class PatternReport:
    """Run structure of a tail.

    ``runs`` are the maximal (nonzero-run length, following zero-run length)
    pairs of the observed coefficients; the last pair may be cut by the
    truncation.  ``expected`` lists the conjectured block lengths
    ``(4k, (2k+1)(m-2))`` covering the same window.
    """

    m: int
    order: int
    runs: list[tuple[int, int]]
    expected: list[tuple[int, int]]
    verdict: bool
    first_violation: int | None = None
    notes: list[str] = field(default_factory=list)


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")


def normalize(J: FramedInvariant, n: int, m: int, order: int | None = None) -> TruncatedSeries:
    """Multiply ``J`` by ``q^(2m(n^2+3n)/3 - n)`` and read it as a power series.

    ``order`` defaults to the degree of the resulting polynomial, so nothing
    is dropped.  Raises ``ValueError`` if a fractional or negative power of
    ``q`` survives the shift.
    """
    _check_nm(n, m)
    value = J.value.shift(4 * m * (n * n + 3 * n) - 6 * n)
    if value.is_zero():
        raise ValueError("normalized invariant vanished")
    bad = [e for e, _ in value.items() if e < 0 or e % 6]
    if bad:
        raise ValueError(
            f"normalized invariant keeps exponent q^({min(bad)}/6); lowest degree claim fails for n={n}, m={m}"
        )
    if order is None:
        order = value.max_exp // 6
    return to_series(value, order)


def psi_finite(n: int, m: int, order: int | None = None) -> TailSeries:
    series = normalize(psi_closed_form(n, m), n, m, order)
    return TailSeries(m, series.order, series, "psi-finite", n)


def _psi_term_poly(i: int) -> list[int]:
    # (1 - q^(i+1))^3 (1 + q^(i+1)) / (1 - q), exactly
    x = [0] * (i + 2)
    x[0], x[i + 1] = 1, -1
    num = poly_mul(poly_mul(x, x), x)
    y = [0] * (i + 2)
    y[0], y[i + 1] = 1, 1
    return poly_divmod_exact(poly_mul(num, y), [1, -1])


def tail_psi(m: int, order: int) -> TailSeries:
    """``sum_i q^(m(i^2+2i) - 2i) (1-q^(i+1))^3 (1+q^(i+1)) / (1-q)`` mod ``q^(order+1)``."""
    _check_m(m)
    _check_order(order)
    out = [0] * (order + 1)
    i = 0
    while True:
        e = m * (i * i + 2 * i) - 2 * i
        if e > order:
            # e grows with i for m >= 1, so every later term is invisible too
            break
        for d, c in enumerate(_psi_term_poly(i)):
            if e + d > order:
                break
            out[e + d] += c
        i += 1
    return TailSeries(m, order, TruncatedSeries(out, order), "psi-limit")


def _inverse_poch_table(top: int, order: int) -> list[TruncatedSeries]:
    """``1/(q)_k`` mod ``q^(order+1)`` for ``k = 0..top``."""
    table = [TruncatedSeries.one(order)]
    for k in range(1, top + 1):
        table.append(table[-1].div_one_minus(k))
    return table


def _chain_leaves(m: int, order: int, exclude: Collection[tuple[int, ...]]) -> Iterator[tuple]:
    """Depth-first walk over chains ``k_1 >= ... >= k_m >= 0`` with exact pruning.

    A partial chain is dropped once ``sum_(t<=j) (k_t^2+2k_t) - 2k_j`` exceeds
    ``order``; later entries can only raise the final exponent.
    """
    def rec(prefix: list[int], used: int):
        j = len(prefix)
        top = prefix[-1] if prefix else None
        k = 0
        while top is None or k <= top:
            bound = used + k * k
            if bound > order:
                break
            prefix.append(k)
            if j + 1 == m:
                chain = tuple(prefix)
                if chain not in exclude:
                    yield chain, bound
            else:
                yield from rec(prefix, used + k * k + 2 * k)
            prefix.pop()
            k += 1

    yield from rec([], 0)


def tail_g(m: int, order: int, *, exclude: Collection[tuple[int, ...]] = ()) -> TailSeries:
    """``(q)_inf sum_chains q^(sum(k^2+2k) - 2k_m) / ((q)_{k_m}^2 prod (q)_{k_j - k_(j+1)})``.

    ``exclude`` drops the listed chains; it exists for negative controls.
    """
    _check_m(m)
    _check_order(order)
    top = 0
    while (top + 1) ** 2 <= order:
        top += 1
    inv = _inverse_poch_table(top, order)
    total = [0] * (order + 1)
    for chain, expo in _chain_leaves(m, order, frozenset(exclude)):
        budget = order - expo
        term = inv[chain[-1]].truncate(budget)
        term = term * term
        for t in range(m - 1):
            diff = chain[t] - chain[t + 1]
            if diff:
                term = term * inv[diff].truncate(budget)
        for d, c in enumerate(term.coeffs):
            total[expo + d] += c
    series = pentagonal_euler(order) * TruncatedSeries(total, order)
    return TailSeries(m, order, series, "g-limit")


def _first_mismatch(a: TruncatedSeries, b: TruncatedSeries) -> Mismatch | None:
    for d, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return Mismatch(d, x, y)
    return None


def verify_identity(m: int, order: int, *, exclude: Collection[tuple[int, ...]] = ()) -> IdentityReport:
    """Compare :func:`tail_psi` and :func:`tail_g` coefficient by coefficient."""
    left = tail_psi(m, order).series
    right = tail_g(m, order, exclude=exclude).series
    miss = _first_mismatch(left, right)
    return IdentityReport(m, order, miss is None, miss)


def g_finite(n: int, m: int, order: int) -> TailSeries:
    """``G_n`` (the normalized chain-sum form) mod ``q^(order+1)``.

    Chains whose leading exponent already exceeds ``order`` are skipped, so
    this is cheap even when the full polynomial is huge.
    """
    _check_nm(n, m)
    _check_order(order)
    out = [0] * (order + 1)
    for chain, expo in _chain_leaves(m, order, ()):
        if chain[0] > n:
            continue
        _, body = g_chain_term(n, chain)
        for d, c in enumerate(body):
            if expo + d > order:
                break
            out[expo + d] += c
    return TailSeries(m, order, TruncatedSeries(out, order), "g-finite", n)


def stabilization_check(m: int, n_max: int, *, which: str = "psi") -> bool:
    """``Psi_n = Psi_(n+1) = Psi^(m)`` mod ``q^(n+1)`` for every ``n < n_max``.

    ``which="g"`` runs the same check on the chain-sum normalization.
    """
    _check_m(m)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if which not in ("psi", "g"):
        raise ValueError(f"unknown series {which!r}")
    limit_fn = tail_psi if which == "psi" else tail_g
    limit = limit_fn(m, n_max).series

    def finite(n: int, order: int) -> TruncatedSeries:
        if which == "psi":
            return psi_finite(n, m, order).series
        return g_finite(n, m, order).series

    for n in range(n_max):
        a = finite(n, n)
        b = finite(n + 1, n)
        if a != b or a != limit.truncate(n):
            return False
    return True


def _sign_stream() -> Iterator[int]:
    block, sign = 1, 1
    while True:
        for _ in range(block):
            yield sign
        block += 1
        sign = -sign


def _runs(coeffs) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    i, n = 0, len(coeffs)
    while i < n:
        j = i
        while j < n and coeffs[j]:
            j += 1
        k = j
        while k < n and not coeffs[k]:
            k += 1
        runs.append((j - i, k - j))
        i = k
    return runs


def pattern_analysis(m: int, order: int) -> PatternReport:
    """Compare the tail's support and signs with the conjectured block pattern.

    Block ``k >= 1`` is ``4k`` nonzero coefficients followed by
    ``(2k+1)(m-2)`` zeros; the nonzero ones read ``+1, -1, -1, +1, +1, +1,
    ...`` (blocks of growing length, alternating sign) across all blocks.
    Only the coefficients inside the window are checked, so a block cut by
    the truncation counts for what is visible.
    """
    _check_m(m)
    _check_order(order)
    coeffs = tail_psi(m, order).series.coeffs
    notes: list[str] = []
    expected: list[tuple[int, int]] = []
    verdict = True
    violation = None
    if m < 2:
        notes.append("zero-block length (2k+1)(m-2) is negative for m = 1; pattern not applicable")
        verdict = False
    else:
        pos, k = 0, 1
        signs = _sign_stream()
        while pos <= order and verdict:
            nz, zr = 4 * k, (2 * k + 1) * (m - 2)
            expected.append((nz, zr))
            for p in range(pos, min(pos + nz, order + 1)):
                if coeffs[p] != next(signs):
                    verdict, violation = False, p
                    break
            else:
                for p in range(pos + nz, min(pos + nz + zr, order + 1)):
                    if coeffs[p]:
                        verdict, violation = False, p
                        break
            pos += nz + zr
            k += 1
    return PatternReport(m, order, _runs(coeffs), expected, verdict, violation, notes)


def false_theta(s: int, t: int, order: int) -> TruncatedSeries:
    """``sum_i q^(s i(i+1)/2 + t i(i-1)/2) - sum_i q^(s i(i-1)/2 + t i(i+1)/2)``."""
    if s < 1 or t < 1:
        raise ValueError(f"need s, t >= 1, got s={s}, t={t}")
    _check_order(order)
    out = [0] * (order + 1)
    i = 0
    while True:
        e1 = s * i * (i + 1) // 2 + t * i * (i - 1) // 2
        e2 = s * i * (i - 1) // 2 + t * i * (i + 1) // 2
        if min(e1, e2) > order:
            break
        if e1 <= order:
            out[e1] += 1
        if e2 <= order:
            out[e2] -= 1
        i += 1
    return TruncatedSeries(out, order)
