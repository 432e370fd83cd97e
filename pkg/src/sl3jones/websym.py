"""Closed-form values of colored A2 graphs.

Loop values ``delta``, theta graphs, tetrahedra and the recoupling
coefficients built from them, plus the coefficient families of the
two-cable clasp expansion, the bubble expansion and the full-twist
expansion.  Colors are ``(n, 0)`` throughout; internal edges carry the
symmetric color ``(i, i)``.
"""
from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from functools import lru_cache

from .qexact import (
    RationalQ,
    SixthPowerLaurent,
    laurent_exact_div,
    poly_divmod_exact,
    poly_mul,
    q_multinom_coeffs,
    quantum_binom,
    quantum_int,
    _poch,
)

#: cross-check every theta value against its alternating-sum form
DEBUG = os.environ.get("SL3JONES_DEBUG", "") not in ("", "0")


def _check_colors(n: int, *internal: int) -> None:
    if n < 0:
        raise ValueError(f"color must be nonnegative, got {n}")
    for i in internal:
        if not 0 <= i <= n:
            raise ValueError(f"internal color {i} outside [0, {n}]")


@lru_cache(maxsize=None)
def delta(i: int, j: int) -> SixthPowerLaurent:
    """Value of the unknot colored ``(i, j)``: ``[i+1][j+1][i+j+2] / [2]``."""
    if i < 0 or j < 0:
        raise ValueError(f"delta needs nonnegative colors, got ({i}, {j})")
    num = quantum_int(i + 1) * quantum_int(j + 1) * quantum_int(i + j + 2)
    return laurent_exact_div(num, quantum_int(2))


@lru_cache(maxsize=None)
def theta(n: int, i: int) -> RationalQ:
    """``theta(n, n, (i, i)) = [n+i+2, 2i+2] / [n, i]^2 * delta(i, i)``.

    Only a Laurent polynomial for small colors; ``theta(3, 1)`` already
    keeps a ``[3]`` in the denominator.
    """
    _check_colors(n, i)
    value = RationalQ(quantum_binom(n + i + 2, 2 * i + 2) * delta(i, i),
                      quantum_binom(n, i) ** 2)
    if DEBUG and theta_alternating(n, i) != value:
        raise AssertionError(f"theta({n}, {i}) closed form disagrees with alternating sum")
    return value


def theta_alternating(n: int, i: int) -> RationalQ:
    """Theta value from the alternating sum over the two-cable clasp expansion."""
    _check_colors(n, i)
    dn = delta(n, 0)
    total = RationalQ(0)
    for k in range(i + 1):
        term = RationalQ(quantum_binom(i, k) ** 2 * dn * dn,
                         quantum_binom(2 * i + 1, k) * delta(n - i + k, 0))
        total = total - term if k % 2 else total + term
    return total


@lru_cache(maxsize=None)
def tet_ratio(n: int, i: int, j: int) -> RationalQ:
    """``Tet[n n (j,j); n n (i,i)] / theta(n, n, (j, j))``."""
    _check_colors(n, i, j)
    total = RationalQ(0)
    for k in range(i + 1):
        num = (quantum_binom(i, k) ** 2 * quantum_binom(n - j, i - k)
               * quantum_binom(n + j + 2, i - k))
        if num.is_zero():
            continue
        den = quantum_binom(2 * i + 1, k) * quantum_binom(n, i - k) ** 2
        term = RationalQ(num, den)
        total = total - term if k % 2 else total + term
    return total


@lru_cache(maxsize=None)
def tet(n: int, i: int, j: int) -> RationalQ:
    """Tetrahedron with four ``n`` edges and internal edges ``(i, i)``, ``(j, j)``.

    Clasps carry rational coefficients, so this is a ``RationalQ`` in general
    (``tet(1, 1, 1) = -theta(1, 1) / [3]``).
    """
    return tet_ratio(n, i, j) * theta(n, j)


@dataclass
class SixJTable:
    """All recoupling coefficients ``{n n (j,j); n n (i,i)}`` for one color ``n``."""

    n: int
    entries: dict[tuple[int, int], RationalQ] = field(default_factory=dict)

    def __getitem__(self, ij: tuple[int, int]) -> RationalQ:
        return self.entries[ij]

    def matrix(self) -> list[list[RationalQ]]:
        return [[self.entries[i, j] for j in range(self.n + 1)] for i in range(self.n + 1)]

    def is_complete(self) -> bool:
        return all((i, j) in self.entries for i in range(self.n + 1) for j in range(self.n + 1))


_sixj_tables: dict[int, SixJTable] = {}
_sixj_lock = threading.Lock()


def _sixj_value(n: int, i: int, j: int) -> RationalQ:
    # Tet * delta / theta^2 == tet_ratio * delta / theta
    return tet_ratio(n, i, j) * delta(j, j) / theta(n, j)


def sixj(n: int, i: int, j: int) -> RationalQ:
    """Recoupling coefficient ``Tet * delta(j, j) / theta(n, n, (j, j))^2``."""
    _check_colors(n, i, j)
    table = _sixj_tables.get(n)
    if table is not None and (i, j) in table.entries:
        return table.entries[i, j]
    value = _sixj_value(n, i, j)
    with _sixj_lock:
        table = _sixj_tables.setdefault(n, SixJTable(n))
        table.entries.setdefault((i, j), value)
    return value


def sixj_table(n: int) -> SixJTable:
    """The complete (memoized) table for color ``n``."""
    _check_colors(n)
    for i in range(n + 1):
        for j in range(n + 1):
            sixj(n, i, j)
    return _sixj_tables[n]


def install_sixj_table(table: SixJTable) -> None:
    """Seed the memo table (used when loading a cache file)."""
    with _sixj_lock:
        current = _sixj_tables.setdefault(table.n, SixJTable(table.n))
        for key, value in table.entries.items():
            current.entries.setdefault(key, value)


def clear_sixj_cache() -> None:
    with _sixj_lock:
        _sixj_tables.clear()


def twist_eigenvalue(n: int, i: int) -> SixthPowerLaurent:
    """Full-twist eigenvalue ``q^(-2/3 (n^2+3n) + i^2 + 2i)`` on the ``(i, i)`` channel."""
    _check_colors(n, i)
    return SixthPowerLaurent.monomial(-4 * (n * n + 3 * n) + 6 * (i * i + 2 * i))


def clasp_expansion_coeff(n: int, m: int, k: int) -> RationalQ:
    """Coefficient ``(-1)^k [n,k][m,k] / [n+m+1,k]`` of the ``k``-turnback web."""
    if n < 0 or m < 0 or not 0 <= k <= min(n, m):
        raise ValueError(f"k={k} outside [0, min({n}, {m})]")
    value = RationalQ(quantum_binom(n, k) * quantum_binom(m, k), quantum_binom(n + m + 1, k))
    return -value if k % 2 else value


def bubble_coeff(n: int, m: int, k: int, l: int, t: int) -> RationalQ:
    """Coefficient of the ``t`` term when a bubble with turnbacks ``k``, ``l`` is expanded."""
    if min(n, m, k, l) < 0 or max(k, l) > min(n, m):
        raise ValueError(f"bubble parameters out of range: n={n} m={m} k={k} l={l}")
    if not max(k, l) <= t <= min(k + l, n, m):
        raise ValueError(f"t={t} outside [{max(k, l)}, {min(k + l, n, m)}]")
    b = quantum_binom
    num = b(n, t) * b(m, t) * b(t, k) * b(t, l) * b(n + m - t + 2, n + m - k - l + 2)
    den = b(n, k) * b(m, k) * b(n, l) * b(m, l)
    return RationalQ(num, den)


def iter_chains(n: int, m: int):
    """All chains ``n >= k_1 >= ... >= k_m >= 0`` in reverse lexicographic order."""

    def rec(prefix: list[int], top: int):
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for k in range(top, -1, -1):
            prefix.append(k)
            yield from rec(prefix, k)
            prefix.pop()

    yield from rec([], n)


@dataclass(frozen=True)
class FullTwistExpansion:
    """``m`` full twists on two antiparallel ``n``-cables in the turnback basis.

    ``coeffs[k]`` multiplies the basis web with ``k`` through-strands per cable
    (and ``n - k`` turnbacks); the whole sum is scaled by ``prefactor``.
    """

    n: int
    m: int
    prefactor: SixthPowerLaurent
    coeffs: dict[int, SixthPowerLaurent]


def full_twist_coeffs(n: int, m: int) -> FullTwistExpansion:
    if n < 0 or m < 1:
        raise ValueError(f"full twists need n >= 0 and m >= 1, got n={n}, m={m}")
    poch_n = _poch(n)
    acc: dict[int, list[int]] = {}
    for chain in iter_chains(n, m):
        km = chain[-1]
        expo = n - km + sum(k * k + 2 * k for k in chain)
        parts = [n - chain[0]] + [chain[t] - chain[t + 1] for t in range(m - 1)] + [km]
        poly = poly_mul(poly_divmod_exact(poch_n, _poch(km)), q_multinom_coeffs(n, parts))
        slot = acc.setdefault(km, [])
        need = expo + len(poly)
        if len(slot) < need:
            slot.extend([0] * (need - len(slot)))
        for d, c in enumerate(poly):
            slot[expo + d] += c
    coeffs = {k: SixthPowerLaurent.from_q_coeffs(v) for k, v in sorted(acc.items())}
    prefactor = SixthPowerLaurent.monomial(-4 * m * (n * n + 3 * n))
    return FullTwistExpansion(n, m, prefactor, coeffs)


def turnback_closure_ratio(n: int, k: int) -> RationalQ:
    """Closure of the ``k``-through-strand basis web, divided by ``delta(n, 0)``.

    Closing the two cables separately gives
    ``[n+1][n+2] / ([n-k+1][n-k+2])``: one loop when ``k = 0`` and two
    loops when ``k = n``.
    """
    _check_colors(n, k)
    return RationalQ(quantum_int(n + 1) * quantum_int(n + 2),
                     quantum_int(n - k + 1) * quantum_int(n - k + 2))
