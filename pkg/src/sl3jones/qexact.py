"""Exact arithmetic over Q(q^(1/6)).

Three value types live here:

* :class:`SixthPowerLaurent` -- Laurent polynomials in ``u = q^(1/6)`` with
  integer coefficients.  Exponents are stored as integers counting sixths of a
  power of ``q``, so ``q`` itself is the exponent 6.
* :class:`RationalQ` -- normalized quotients of two such polynomials.
* :class:`TruncatedSeries` -- integer power series in ``q`` modulo ``q^(N+1)``.

Everything is immutable.  Quantum integers, quantum binomials and the
q-Pochhammer family are provided as module-level functions and memoized.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence

__all__ = [
    "NotDivisibleError",
    "SixthPowerLaurent",
    "RationalQ",
    "TruncatedSeries",
    "Q",
    "ONE",
    "ZERO",
    "laurent_mul",
    "laurent_exact_div",
    "quantum_int",
    "quantum_factorial",
    "quantum_binom",
    "q_pochhammer",
    "q_binom",
    "q_multinom",
    "to_series",
    "pentagonal_euler",
]


class NotDivisibleError(ArithmeticError):
    """An exact division left a nonzero remainder."""


# ---------------------------------------------------------------------------
# dense integer polynomial kernels (ascending coefficient lists)


def _bits(coeffs: Sequence[int]) -> int:
    return max((abs(c).bit_length() for c in coeffs), default=0)


def _pack(coeffs: Sequence[int], width: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = (v << width) + c
    return v


def _unpack(v: int, width: int, count: int) -> list[int]:
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    full = 1 << width
    out = []
    for _ in range(count):
        d = v & mask
        if d >= half:
            d -= full
        out.append(d)
        v = (v - d) >> width
    return out


def poly_mul(a: Sequence[int], b: Sequence[int], limit: int | None = None) -> list[int]:
    """Product of dense polynomials, optionally keeping only degrees < ``limit``."""
    if not a or not b:
        return []
    if limit is not None:
        a = a[:limit]
        b = b[:limit]
    n = len(a) + len(b) - 1
    if limit is not None:
        n = min(n, limit)
    if len(a) < 12 or len(b) < 12:
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j in range(min(len(b), n - i)):
                    out[i + j] += x * b[j]
        return out
    # Kronecker substitution; big-int multiplication does the convolution.
    width = _bits(a) + _bits(b) + min(len(a), len(b)).bit_length() + 2
    prod = _pack(a, width) * _pack(b, width)
    return _unpack(prod, width, n)


def poly_divmod_exact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Quotient ``a / b`` of dense polynomials; raises unless the remainder is zero."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return []
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        raise NotDivisibleError("dividend has lower degree than divisor")
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        if c:
            qk, r = divmod(c, lead)
            if r:
                raise NotDivisibleError("non-integral quotient coefficient")
            quot[k] = qk
            for j in range(db + 1):
                a[k + j] -= qk * b[j]
    if any(a[:db]):
        raise NotDivisibleError("nonzero remainder")
    return quot


# ---------------------------------------------------------------------------
# SixthPowerLaurent


class SixthPowerLaurent:
    """Laurent polynomial in ``u = q^(1/6)`` with integer coefficients.

    ``terms`` maps an exponent in sixths (``6`` means ``q``) to a nonzero
    coefficient.  Instances are canonical: equality is equality of the
    term mappings.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "SixthPowerLaurent":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "SixthPowerLaurent":
        """``coeff * u^exponent`` (exponent in sixths of a power of q)."""
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def q_power(cls, exponent: Fraction | int, coeff: int = 1) -> "SixthPowerLaurent":
        six = Fraction(exponent) * 6
        if six.denominator != 1:
            raise ValueError(f"q^{exponent} is not an integral power of q^(1/6)")
        return cls.monomial(int(six), coeff)

    @classmethod
    def from_q_coeffs(cls, coeffs: Sequence[int], shift: int = 0) -> "SixthPowerLaurent":
        """Polynomial ``sum coeffs[k] q^(k + shift)`` with integer powers of q."""
        return cls._raw({6 * (k + shift): c for k, c in enumerate(coeffs) if c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def at_one(self) -> int:
        """Value at ``q = 1``."""
        return sum(self._terms.values())

    def q_coeffs(self) -> tuple[int, list[int]]:
        """``(shift, coeffs)`` with ``self = q^shift * sum coeffs[k] q^k``.

        Only valid when every exponent is an integral power of ``q``.
        """
        if not self._terms:
            return 0, []
        if any(e % 6 for e in self._terms):
            raise ValueError("polynomial has fractional powers of q")
        lo = self.min_exp // 6
        out = [0] * (self.max_exp // 6 - lo + 1)
        for e, c in self._terms.items():
            out[e // 6 - lo] = c
        return lo, out

    def bar(self) -> "SixthPowerLaurent":
        """Image under ``q -> q^-1``."""
        return SixthPowerLaurent._raw({-e: c for e, c in self._terms.items()})

    def shift(self, exponent: int) -> "SixthPowerLaurent":
        """Multiply by ``u^exponent``."""
        return SixthPowerLaurent._raw({e + exponent: c for e, c in self._terms.items()})

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "SixthPowerLaurent":
        if isinstance(other, SixthPowerLaurent):
            return other
        if isinstance(other, int):
            return SixthPowerLaurent._raw({0: other} if other else {})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SixthPowerLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SixthPowerLaurent._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (ea, ca), = a.items()
            return SixthPowerLaurent._raw({ea + e: ca * c for e, c in b.items()})
        if len(a) * len(b) > 4000:
            return _dense_mul(self, other)
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return SixthPowerLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if self.is_monomial():
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return SixthPowerLaurent.monomial(e * k, c ** (-k))
            raise ValueError("negative power of a non-unit")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"SixthPowerLaurent({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        """Human-readable form, e.g. ``q^(-8/3) + 2*q - 1``."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = _q_text(e)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _q_text(e: int) -> str:
    if e == 0:
        return "1"
    f = Fraction(e, 6)
    if f == 1:
        return "q"
    if f.denominator == 1:
        return f"q^{f.numerator}" if f > 0 else f"q^({f.numerator})"
    return f"q^({f.numerator}/{f.denominator})"


def _dense_mul(a: SixthPowerLaurent, b: SixthPowerLaurent) -> SixthPowerLaurent:
    sa, da, stride = _dense_form(a, b)
    sb, db, _ = _dense_form(b, a)
    prod = poly_mul(da, db)
    base = sa + sb
    return SixthPowerLaurent._raw({base + stride * k: c for k, c in enumerate(prod) if c})


def _stride(*polys: SixthPowerLaurent) -> int:
    g = 0
    for p in polys:
        if not p._terms:
            continue
        lo = min(p._terms)
        for e in p._terms:
            g = gcd(g, e - lo)
            if g == 1:
                return 1
    return g or 1


def _dense_form(p: SixthPowerLaurent, *others: SixthPowerLaurent, stride: int | None = None):
    """``(lowest exponent, dense coefficients in u^stride, stride)``."""
    if stride is None:
        stride = _stride(p, *others)
    lo = min(p._terms)
    out = [0] * ((max(p._terms) - lo) // stride + 1)
    for e, c in p._terms.items():
        out[(e - lo) // stride] = c
    return lo, out, stride


ZERO = SixthPowerLaurent._raw({})
ONE = SixthPowerLaurent._raw({0: 1})
#: the polynomial ``q``
Q = SixthPowerLaurent._raw({6: 1})


def laurent_mul(a: SixthPowerLaurent, b: SixthPowerLaurent) -> SixthPowerLaurent:
    return a * b


def laurent_exact_div(a: SixthPowerLaurent, b: SixthPowerLaurent) -> SixthPowerLaurent:
    """Return ``c`` with ``a == b * c``; raise :class:`NotDivisibleError` otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    if b.is_monomial():
        (eb, cb), = b._terms.items()
        out = {}
        for e, c in a._terms.items():
            qc, r = divmod(c, cb)
            if r:
                raise NotDivisibleError(f"{a} is not divisible by {b}")
            out[e - eb] = qc
        return SixthPowerLaurent._raw(out)
    stride = _stride(a, b)
    la, da, _ = _dense_form(a, stride=stride)
    lb, db, _ = _dense_form(b, stride=stride)
    try:
        quot = poly_divmod_exact(da, db)
    except NotDivisibleError:
        raise NotDivisibleError(f"{a} is not divisible by {b}") from None
    base = la - lb
    return SixthPowerLaurent._raw({base + stride * k: c for k, c in enumerate(quot) if c})


# ---------------------------------------------------------------------------
# RationalQ


def _dup_gcd(a: list[int], b: list[int]) -> list[int]:
    """gcd in Z[x] of dense ascending lists, content included, positive lead."""
    from sympy import ZZ
    from sympy.polys.euclidtools import dup_gcd

    g = dup_gcd([ZZ(c) for c in reversed(a)], [ZZ(c) for c in reversed(b)], ZZ)
    return [int(c) for c in reversed(g)]


class RationalQ:
    """Normalized quotient ``numerator / denominator`` of Laurent polynomials.

    Normal form: the pair shares no common factor in ``Z[u]`` (integer
    content included), the denominator has lowest exponent ``0`` and a
    positive lowest coefficient.  Zero is ``0 / 1``.
    """

    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(self, numerator, denominator=None, *, _normalized: bool = False):
        num = SixthPowerLaurent._coerce(numerator)
        den = ONE if denominator is None else SixthPowerLaurent._coerce(denominator)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RationalQ parts must be SixthPowerLaurent or int")
        if den.is_zero():
            raise ZeroDivisionError("RationalQ with zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.numerator = num
        self.denominator = den
        self._hash = None

    @classmethod
    def coerce(cls, x) -> "RationalQ":
        if isinstance(x, RationalQ):
            return x
        return cls(x)

    def is_laurent(self) -> bool:
        return self.denominator == ONE

    def to_laurent(self) -> SixthPowerLaurent:
        """The value as a Laurent polynomial; raises if it is not one."""
        if self.denominator != ONE:
            raise NotDivisibleError(f"{self} is not a Laurent polynomial")
        return self.numerator

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def bar(self) -> "RationalQ":
        return RationalQ(self.numerator.bar(), self.denominator.bar())

    def __add__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if self.denominator == other.denominator:
            return RationalQ(self.numerator + other.numerator, self.denominator)
        return RationalQ(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalQ(-self.numerator, self.denominator, _normalized=True)

    def __sub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalQ(ZERO)
        return RationalQ(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero RationalQ")
        return RationalQ(self.numerator * other.denominator, self.denominator * other.numerator)

    def __rtruediv__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    def __repr__(self):
        return f"RationalQ({self})"

    def __str__(self):
        if self.denominator == ONE:
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"


def _as_rational(x):
    if isinstance(x, RationalQ):
        return x
    if isinstance(x, (SixthPowerLaurent, int)):
        return RationalQ(x)
    return NotImplemented


def _normalize(num: SixthPowerLaurent, den: SixthPowerLaurent):
    if num.is_zero():
        return ZERO, ONE
    if den.is_monomial():
        (e, c), = den._terms.items()
        g = 0
        for v in num._terms.values():
            g = gcd(g, v)
        g = gcd(g, c)
        if c < 0:
            g = -g
        return (
            SixthPowerLaurent._raw({k - e: v // g for k, v in num._terms.items()}),
            SixthPowerLaurent._raw({0: c // g}),
        )
    stride = _stride(num, den)
    ln, dn, _ = _dense_form(num, stride=stride)
    ld, dd, _ = _dense_form(den, stride=stride)
    g = _dup_gcd(dn, dd)
    if len(g) > 1 or g[0] != 1:
        dn = poly_divmod_exact(dn, g)
        dd = poly_divmod_exact(dd, g)
    if dd[0] < 0:
        dn = [-c for c in dn]
        dd = [-c for c in dd]
    shift = ln - ld
    num = SixthPowerLaurent._raw({shift + stride * k: c for k, c in enumerate(dn) if c})
    den = SixthPowerLaurent._raw({stride * k: c for k, c in enumerate(dd) if c})
    return num, den


# ---------------------------------------------------------------------------
# quantum integers and binomials


@lru_cache(maxsize=None)
def quantum_int(n: int) -> SixthPowerLaurent:
    """``[n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2))``."""
    if n < 0:
        raise ValueError(f"quantum integer needs n >= 0, got {n}")
    return SixthPowerLaurent._raw({3 * (n - 1) - 6 * j: 1 for j in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> SixthPowerLaurent:
    if n < 0:
        raise ValueError(f"quantum factorial needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return quantum_factorial(n - 1) * quantum_int(n)


@lru_cache(maxsize=None)
def quantum_binom(a: int, b: int) -> SixthPowerLaurent:
    """Symmetric quantum binomial ``[a]! / ([b]! [a-b]!)``; zero when ``b > a``."""
    if a < 0 or b < 0:
        raise ValueError(f"quantum binomial needs nonnegative arguments, got ({a}, {b})")
    if b > a:
        return ZERO
    b = min(b, a - b)
    if b == 0:
        return ONE
    # q-Pascal: [a b] = q^(b/2)[a-1 b] + q^(-(a-b)/2)[a-1 b-1]
    return quantum_binom(a - 1, b).shift(3 * b) + quantum_binom(a - 1, b - 1).shift(-3 * (a - b))


# ---------------------------------------------------------------------------
# q-Pochhammer family (integer powers of q)


@lru_cache(maxsize=None)
def _poch(k: int) -> tuple[int, ...]:
    if k == 0:
        return (1,)
    prev = _poch(k - 1)
    out = list(prev) + [0] * k
    for i, c in enumerate(prev):
        out[i + k] -= c
    return tuple(out)


def q_pochhammer(k: int) -> SixthPowerLaurent:
    """``(q;q)_k = prod_{l=1..k} (1 - q^l)``."""
    if k < 0:
        raise ValueError(f"q-Pochhammer symbol needs k >= 0, got {k}")
    return SixthPowerLaurent.from_q_coeffs(_poch(k))


@lru_cache(maxsize=None)
def _q_binom(n: int, k: int) -> tuple[int, ...]:
    if k < 0 or k > n:
        return ()
    k = min(k, n - k)
    if k == 0:
        return (1,)
    # (n k)_q = (n-1 k-1)_q + q^k (n-1 k)_q
    a = list(_q_binom(n - 1, k - 1))
    b = _q_binom(n - 1, k)
    out = a + [0] * max(0, len(b) + k - len(a))
    for i, c in enumerate(b):
        out[i + k] += c
    return tuple(out)


def q_binom(n: int, k: int) -> SixthPowerLaurent:
    """Gaussian binomial ``(q)_n / ((q)_k (q)_(n-k))``; zero when ``k > n``."""
    if n < 0 or k < 0:
        raise ValueError(f"q-binomial needs nonnegative arguments, got ({n}, {k})")
    return SixthPowerLaurent.from_q_coeffs(_q_binom(n, k))


def q_multinom_coeffs(n: int, parts: Sequence[int]) -> list[int]:
    if any(p < 0 for p in parts):
        raise ValueError(f"q-multinomial parts must be nonnegative, got {list(parts)}")
    if sum(parts) != n:
        raise ValueError(f"q-multinomial parts {list(parts)} do not sum to {n}")
    out = [1]
    rest = n
    for p in parts:
        out = poly_mul(out, _q_binom(rest, p))
        rest -= p
    return out


def q_multinom(n: int, parts: Sequence[int]) -> SixthPowerLaurent:
    """``(q)_n / prod (q)_{n_i}`` as a product of Gaussian binomials."""
    return SixthPowerLaurent.from_q_coeffs(q_multinom_coeffs(n, parts))


# ---------------------------------------------------------------------------
# truncated power series


class TruncatedSeries:
    """Power series ``sum_{k<=order} c_k q^k`` with integer coefficients, exact mod q^(order+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        else:
            coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("negative power of q in a power series")
        if exponent > order:
            return cls.zero(order)
        return cls([0] * exponent + [coeff], order)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the precision of a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def _check(self, other: "TruncatedSeries") -> int:
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __sub__(self, other):
        n = self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        n = self._check(other)
        return TruncatedSeries(poly_mul(self.coeffs, other.coeffs, n + 1), n)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``q^k`` (``k >= 0``)."""
        if k < 0:
            raise ValueError("negative shift of a power series")
        return TruncatedSeries([0] * k + list(self.coeffs), self.order)

    def div_one_minus(self, l: int) -> "TruncatedSeries":
        """Divide by ``1 - q^l`` (``l >= 1``)."""
        out = list(self.coeffs)
        for i in range(l, len(out)):
            out[i] += out[i - l]
        return TruncatedSeries(out, self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"

    def to_text(self, big_o: bool = False) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            out = "0"
        else:
            out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            for sign, body in terms[1:]:
                out += f" {sign} {body}"
        if big_o:
            out += f" + O(q^{self.order + 1})"
        return out

    __str__ = to_text

    def to_laurent(self) -> SixthPowerLaurent:
        return SixthPowerLaurent.from_q_coeffs(self.coeffs)


def to_series(p: SixthPowerLaurent, order: int) -> TruncatedSeries:
    """Copy coefficients of ``q^0 .. q^order``; exponents must be natural powers of q."""
    if order < 0:
        raise ValueError("series order must be nonnegative")
    out = [0] * (order + 1)
    for e, c in p.items():
        if e < 0 or e % 6:
            raise ValueError(f"term with exponent q^({Fraction(e, 6)}) cannot enter Z[[q]]")
        k = e // 6
        if k <= order:
            out[k] = c
    return TruncatedSeries(out, order)


def pentagonal_euler(order: int) -> TruncatedSeries:
    """``(q;q)_infinity`` mod ``q^(order+1)`` from Euler's pentagonal number theorem."""
    out = [0] * (order + 1)
    k = 0
    while True:
        e1 = k * (3 * k - 1) // 2
        if e1 > order:
            break
        sign = -1 if k % 2 else 1
        out[e1] += sign
        if k:
            e2 = k * (3 * k + 1) // 2
            if e2 <= order:
                out[e2] += sign
        k += 1
    return TruncatedSeries(out, order)
