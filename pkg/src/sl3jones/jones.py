"""sl3 colored Jones polynomial ``J_(n,0)`` of 2-bridge links ``[2a_1, ..., 2a_l]``.

Three routes for the torus link ``T(2, 2m) = [2m]``:

* :func:`jones_two_bridge` -- recoupling sum over internal colors, general ``l``;
* :func:`psi_closed_form` -- single sum over ``i`` divided by ``delta(n, 0)``;
* :func:`g_full_twist_form` -- sum over chains from the full-twist expansion.

All three return the framed (blackboard) invariant with no framing correction.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .qexact import (
    NotDivisibleError,
    RationalQ,
    SixthPowerLaurent,
    laurent_exact_div,
    poly_divmod_exact,
    poly_mul,
    q_multinom_coeffs,
    _poch,
)
from .websym import delta, iter_chains, sixj, theta, twist_eigenvalue


@dataclass(frozen=True)
class TwoBridgeWord:
    """The 2-bridge link ``[2a_1, 2a_2, ..., 2a_l]``."""

    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if not a:
            raise ValueError("a 2-bridge word needs at least one entry")
        if any(x == 0 for x in a):
            raise ValueError(f"2-bridge word entries must be nonzero, got {list(a)}")
        object.__setattr__(self, "a", a)

    @classmethod
    def parse(cls, text: str) -> "TwoBridgeWord":
        body = text.replace(" ", "")
        if not body:
            raise ValueError("empty 2-bridge word")
        try:
            return cls(tuple(int(tok) for tok in body.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad 2-bridge word {text!r}: {exc}") from None

    def __len__(self):
        return len(self.a)

    def __str__(self):
        return "[" + ",".join(str(2 * x) for x in self.a) + "]"


@dataclass(frozen=True)
class FramedInvariant:
    value: SixthPowerLaurent
    color: int
    word: TwoBridgeWord

    @property
    def lowest_exponent(self) -> int:
        return self.value.min_exp


def _as_word(word) -> TwoBridgeWord:
    if isinstance(word, TwoBridgeWord):
        return word
    if isinstance(word, int):
        return TwoBridgeWord((word,))
    return TwoBridgeWord(tuple(word))


def _twist(n: int, i: int, a: int) -> SixthPowerLaurent:
    return twist_eigenvalue(n, i) ** a


def _finish(total: RationalQ, n: int, what: str) -> SixthPowerLaurent:
    value = total / delta(n, 0)
    if not value.is_laurent():
        raise NotDivisibleError(f"{what} did not reduce to a Laurent polynomial")
    return value.numerator


def jones_two_bridge(word: TwoBridgeWord | Sequence[int] | int, n: int,
                     *, reverse: bool = False) -> FramedInvariant:
    """``J_(n,0)`` of ``[2a_1, ..., 2a_l]`` by recoupling.

    The ``(n+1)^l`` sum is folded one twist region at a time against the 6j
    table; ``reverse=True`` folds from the last region instead (same value).
    """
    word = _as_word(word)
    if n < 0:
        raise ValueError(f"color must be nonnegative, got {n}")
    a = word.a
    colors = range(n + 1)
    if not reverse:
        vec = [RationalQ(delta(i, i)) * _twist(n, i, a[0]) / theta(n, i) for i in colors]
        for ak in a[1:]:
            vec = [
                sum((vec[i] * sixj(n, i, j) for i in colors), RationalQ(0)) * _twist(n, j, ak)
                for j in colors
            ]
        total = sum((vec[i] * theta(n, i) for i in colors), RationalQ(0))
    else:
        vec = [theta(n, j) * _twist(n, j, a[-1]) for j in colors]
        for ak in reversed(a[:-1]):
            vec = [
                sum((sixj(n, i, j) * vec[j] for j in colors), RationalQ(0)) * _twist(n, i, ak)
                for i in colors
            ]
        total = sum((RationalQ(delta(i, i)) / theta(n, i) * vec[i] for i in colors), RationalQ(0))
    return FramedInvariant(_finish(total, n, f"J_({n},0){word}"), n, word)


def jones_two_bridge_bruteforce(word, n: int) -> FramedInvariant:
    """Literal ``(n+1)^l`` enumeration; only for cross-checks at small sizes."""
    word = _as_word(word)
    a = word.a
    total = RationalQ(0)
    for idx in product(range(n + 1), repeat=len(a)):
        term = RationalQ(delta(idx[0], idx[0])) * theta(n, idx[-1]) / theta(n, idx[0])
        for ik, ak in zip(idx, a):
            term = term * _twist(n, ik, ak)
        for k in range(len(a) - 1):
            term = term * sixj(n, idx[k], idx[k + 1])
        total = total + term
    return FramedInvariant(_finish(total, n, f"J_({n},0){word}"), n, word)


def _check_nm(n: int, m: int) -> None:
    if n < 0 or m < 1:
        raise ValueError(f"need n >= 0 and m >= 1, got n={n}, m={m}")


def psi_closed_form(n: int, m: int) -> FramedInvariant:
    """``J_(n,0)(T(2,2m))`` as ``q^(-2m(n^2+3n)/3) sum_i delta(i,i) q^(m(i^2+2i)) / delta(n,0)``."""
    _check_nm(n, m)
    num = SixthPowerLaurent()
    for i in range(n + 1):
        num = num + delta(i, i).shift(6 * m * (i * i + 2 * i))
    try:
        body = laurent_exact_div(num, delta(n, 0))
    except NotDivisibleError:
        raise NotDivisibleError(f"psi numerator for n={n}, m={m} not divisible by delta({n}, 0)") from None
    return FramedInvariant(body.shift(-4 * m * (n * n + 3 * n)), n, TwoBridgeWord((m,)))


def g_chain_term(n: int, chain: Sequence[int]) -> tuple[int, list[int]]:
    """``(q-exponent, dense coefficients)`` of one chain's contribution, unnormalized.

    The term is ``q^(sum(k^2+2k) - 2k_m)`` times the q-multinomial
    ``(q)_n^2 / ((q)_{k_m}^2 (q)_{n-k_1} prod (q)_{k_j-k_(j+1)})`` times the
    boundary ratio ``(1-q^(n+1))(1-q^(n+2)) / ((1-q^(n-k_m+1))(1-q^(n-k_m+2)))``.
    """
    m = len(chain)
    km = chain[-1]
    parts = [n - chain[0]] + [chain[t] - chain[t + 1] for t in range(m - 1)] + [km]
    body = poly_mul(q_multinom_coeffs(n, parts), poly_divmod_exact(_poch(n), _poch(km)))
    body = poly_mul(body, _one_minus(n + 1))
    body = poly_mul(body, _one_minus(n + 2))
    try:
        body = poly_divmod_exact(body, poly_mul(_one_minus(n - km + 1), _one_minus(n - km + 2)))
    except NotDivisibleError:
        raise NotDivisibleError(f"boundary factor does not divide for n={n}, chain={chain}") from None
    expo = sum(k * k + 2 * k for k in chain) - 2 * km
    return expo, body


def _one_minus(l: int) -> list[int]:
    out = [0] * (l + 1)
    out[0] = 1
    out[l] -= 1
    return out


def g_full_twist_form(n: int, m: int) -> FramedInvariant:
    """``J_(n,0)(T(2,2m))`` as the chain sum coming from the ``m`` full twists formula."""
    _check_nm(n, m)
    acc: list[int] = []
    for chain in iter_chains(n, m):
        expo, body = g_chain_term(n, chain)
        need = expo + len(body)
        if len(acc) < need:
            acc.extend([0] * (need - len(acc)))
        for d, c in enumerate(body):
            acc[expo + d] += c
    value = SixthPowerLaurent.from_q_coeffs(acc).shift(-4 * m * (n * n + 3 * n) + 6 * n)
    return FramedInvariant(value, n, TwoBridgeWord((m,)))


def min_degree(n: int, m: int) -> int:
    """Lowest exponent of ``J_(n,0)(T(2,2m))`` in sixths: ``-4m(n^2+3n) + 6n``."""
    _check_nm(n, m)
    return -4 * m * (n * n + 3 * n) + 6 * n


def torus_jones(n: int, m: int, method: str = "closed") -> FramedInvariant:
    if method == "closed":
        return psi_closed_form(n, m)
    if method == "fulltwist":
        return g_full_twist_form(n, m)
    if method == "recoupling":
        return jones_two_bridge(TwoBridgeWord((m,)), n)
    raise ValueError(f"unknown method {method!r}")
