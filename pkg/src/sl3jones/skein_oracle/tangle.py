"""Layered construction of clasped diagrams.

A :class:`Tangle` is a stack of elementary layers read bottom to top on a
row of strand positions.  Each position carries an orientation, ``"+"``
(flowing upward) or ``"-"`` (downward).  Layers:

``("X", p, over)``
    crossing of positions ``p`` and ``p+1``; the strand entering at the
    bottom-left leaves at the top-right.  ``over`` is ``"left"`` when that
    strand is on top, ``"right"`` otherwise.
``("H", p)``
    the H-shaped web on two parallel strands: they merge into a vertex and
    split again, joined by a short rung.
``("cup", p, orient)``
    a new turnback at ``p, p+1``; ``orient`` is the orientation of its left end.
``("cap", p)``
    closes the antiparallel strands at ``p, p+1``.
``("clasp", ClaspSpec)`` and ``("clasp2", p, n, m)``
    single-cable and two-cable clasps, removed by :func:`clasp_insert`.

The trace closure joins top position ``i`` to bottom position ``i`` around
the right-hand side.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from typing import Iterable, Sequence

from ..qexact import RationalQ, SixthPowerLaurent, quantum_int
from ..websym import clasp_expansion_coeff
from .diagram import NEGATIVE, POSITIVE, SINK, SOURCE, WebDiagram, WebSum
from .reduce import evaluate_diagram, rewire

#: largest clasp size expanded by default
ORACLE_LIMIT = 3

_PASS = "pass"


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class ClaspSpec:
    """A clasp of size ``n`` on consecutive positions ``placement``."""

    n: int
    placement: tuple[int, ...]

    def __post_init__(self):
        pl = tuple(self.placement)
        object.__setattr__(self, "placement", pl)
        if self.n < 1 or len(pl) != self.n:
            raise ValueError(f"clasp of size {self.n} needs {self.n} positions, got {pl}")
        if any(b - a != 1 for a, b in zip(pl, pl[1:])):
            raise ValueError(f"clasp positions must be consecutive, got {pl}")

    @classmethod
    def at(cls, p: int, n: int) -> "ClaspSpec":
        return cls(n, tuple(range(p, p + n)))


@dataclass(frozen=True)
class Tangle:
    bottom: tuple[str, ...]
    ops: tuple[tuple, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "bottom", tuple(self.bottom))
        object.__setattr__(self, "ops", tuple(self.ops))
        if any(o not in "+-" for o in self.bottom):
            raise ValueError(f"orientations must be '+' or '-', got {self.bottom}")
        self.top  # validates the layers

    def then(self, *ops) -> "Tangle":
        return Tangle(self.bottom, self.ops + tuple(ops))

    @property
    def top(self) -> tuple[str, ...]:
        row = list(self.bottom)
        for op in self.ops:
            _apply_orient(row, op)
        return tuple(row)

    @property
    def crossing_count(self) -> int:
        return sum(1 for op in self.ops if op[0] == "X")

    @property
    def clasp_count(self) -> int:
        return sum(1 for op in self.ops if op[0] in ("clasp", "clasp2"))

    def mirror(self) -> "Tangle":
        flip = {"left": "right", "right": "left"}
        return Tangle(self.bottom, tuple(("X", op[1], flip[op[2]]) if op[0] == "X" else op
                                         for op in self.ops))


def _apply_orient(row: list[str], op: tuple) -> None:
    tag = op[0]
    w = len(row)

    def need(p, k):
        if not 0 <= p <= w - k:
            raise ValueError(f"layer {op} out of range for width {w}")

    if tag == "X":
        need(op[1], 2)
        if op[2] not in ("left", "right"):
            raise ValueError(f"crossing over-strand must be 'left' or 'right', got {op[2]!r}")
        p = op[1]
        row[p], row[p + 1] = row[p + 1], row[p]
    elif tag == "H":
        need(op[1], 2)
        if row[op[1]] != row[op[1] + 1]:
            raise ValueError(f"H layer at {op[1]} needs parallel strands")
    elif tag == "cup":
        if not 0 <= op[1] <= w:
            raise ValueError(f"cup position {op[1]} out of range for width {w}")
        o = op[2]
        row[op[1]:op[1]] = [o, "-" if o == "+" else "+"]
    elif tag == "cap":
        need(op[1], 2)
        if row[op[1]] == row[op[1] + 1]:
            raise ValueError(f"cap at {op[1]} needs antiparallel strands")
        del row[op[1]:op[1] + 2]
    elif tag == "clasp":
        spec: ClaspSpec = op[1]
        need(spec.placement[0], spec.n)
        if len({row[p] for p in spec.placement}) != 1:
            raise ValueError(f"clasp on {spec.placement} needs parallel strands")
    elif tag == "clasp2":
        _, p, n, m = op
        need(p, n + m)
        if len(set(row[p:p + n])) != 1 or len(set(row[p + n:p + n + m])) != 1 or row[p] == row[p + n]:
            raise ValueError(f"two-cable clasp at {p} needs {n} parallel then {m} reversed strands")
    else:
        raise ValueError(f"unknown layer {op!r}")


# -- clasp expansion --------------------------------------------------------

@lru_cache(maxsize=None)
def _clasp_words(n: int) -> tuple[tuple[RationalQ, tuple[tuple, ...]], ...]:
    """The clasp on positions ``0..n-1`` as a sum of H-words (relative positions)."""
    if n == 1:
        return ((RationalQ(1), ()),)
    prev = _clasp_words(n - 1)
    ratio = RationalQ(quantum_int(n - 1), quantum_int(n))
    acc: dict[tuple, RationalQ] = {}
    for c, w in prev:
        acc[w] = acc.get(w, RationalQ(0)) + c
    for c1, w1 in prev:
        for c2, w2 in prev:
            w = w1 + (("H", n - 2),) + w2
            acc[w] = acc.get(w, RationalQ(0)) - ratio * c1 * c2
    return tuple((c, w) for w, c in acc.items() if not c.is_zero())


def clasp_terms(n: int, limit: int | None = None) -> list[tuple[RationalQ, tuple[tuple, ...]]]:
    """Flattened expansion of the size-``n`` clasp into H-words."""
    limit = ORACLE_LIMIT if limit is None else limit
    if n > limit:
        raise OracleLimitError(f"clasp size {n} exceeds the oracle limit {limit}")
    return list(_clasp_words(n))


def _shift(word, p):
    return tuple((op[0], op[1] + p) + op[2:] for op in word)


def _expand_layer(op, row: list[str], limit: int):
    tag = op[0]
    if tag == "clasp":
        spec: ClaspSpec = op[1]
        return [(c, _shift(w, spec.placement[0])) for c, w in clasp_terms(spec.n, limit)]
    if tag == "clasp2":
        _, p, n, m = op
        if max(n, m) > limit:
            raise OracleLimitError(f"clasp size {max(n, m)} exceeds the oracle limit {limit}")
        orient = row[p]
        terms = []
        for k in range(min(n, m) + 1):
            body = [("clasp", ClaspSpec.at(p, n)), ("clasp", ClaspSpec.at(p + n, m))]
            body += [("cap", p + n - 1 - j) for j in range(k)]
            body += [("cup", p + n - k + j, orient) for j in range(k)]
            body += [("clasp", ClaspSpec.at(p, n)), ("clasp", ClaspSpec.at(p + n, m))]
            terms.append((clasp_expansion_coeff(n, m, k), tuple(body)))
        return terms
    return None


def clasp_insert(fragment: Tangle | Iterable[tuple[RationalQ, Tangle]],
                 limit: int | None = None) -> list[tuple[RationalQ, Tangle]]:
    """Expand every clasp into a linear combination of clasp-free tangles."""
    limit = ORACLE_LIMIT if limit is None else limit
    pending = [(RationalQ(1), fragment)] if isinstance(fragment, Tangle) else list(fragment)
    done: list[tuple[RationalQ, Tangle]] = []
    while pending:
        c, t = pending.pop()
        row = list(t.bottom)
        for idx, op in enumerate(t.ops):
            terms = _expand_layer(op, row, limit)
            if terms is not None:
                for c2, word in terms:
                    pending.append((c * c2, Tangle(t.bottom, t.ops[:idx] + tuple(word) + t.ops[idx + 1:])))
                break
            _apply_orient(row, op)
        else:
            done.append((c, t))
    merged: dict[Tangle, RationalQ] = {}
    for c, t in done:
        merged[t] = merged.get(t, RationalQ(0)) + c
    return [(c, t) for t, c in merged.items() if not c.is_zero()]


# -- building the map -------------------------------------------------------

class _Builder:
    def __init__(self, bottom: Sequence[str]):
        self.darts = count()
        self.verts = count()
        self.cycles: dict[int, tuple[int, ...]] = {}
        self.kinds: dict[int, str] = {}
        self.pairing: dict[int, int] = {}
        self.out: set[int] = set()
        self.row = list(bottom)
        self.ends: list = [("bottom", i) for i in range(len(bottom))]
        self.first: dict[int, int] = {}

    def _attach(self, end, dart: int) -> None:
        if isinstance(end, tuple):
            self.first[end[1]] = dart
        else:
            self.pairing[end], self.pairing[dart] = dart, end

    def _vertex(self, kind: str, cyc: tuple[int, ...]) -> int:
        v = next(self.verts)
        self.cycles[v] = cyc
        self.kinds[v] = kind
        return v

    def _below(self, p: int, dart: int) -> None:
        """Glue ``dart`` (a new vertex's lower dart) to the strand at ``p``."""
        if self.row[p] == "-":
            self.out.add(dart)
        self._attach(self.ends[p], dart)

    def _above(self, orient: str, dart: int) -> None:
        if orient == "+":
            self.out.add(dart)

    def apply(self, op: tuple) -> None:
        tag = op[0]
        new = self.darts
        if tag == "X":
            p, over = op[1], op[2]
            bl, br, tr, tl = next(new), next(new), next(new), next(new)
            left, right = self.row[p], self.row[p + 1]
            self._below(p, bl)
            self._below(p + 1, br)
            self._above(left, tr)
            self._above(right, tl)
            geo = (tr, tl, bl, br)
            outs = [x in self.out for x in geo]
            i = next(i for i in range(4) if not outs[i] and not outs[(i + 1) % 4])
            sw, se, ne, nw = (geo[(i + j) % 4] for j in range(4))
            over_strand = {bl, tr} if over == "left" else {br, tl}
            kind = POSITIVE if sw in over_strand else NEGATIVE
            self._vertex(kind, (ne, nw, sw, se))
            self.ends[p], self.ends[p + 1] = tl, tr
            self.row[p], self.row[p + 1] = right, left
        elif tag == "H":
            p = op[1]
            o = self.row[p]
            bl, br, mb, mt, tr, tl = (next(new) for _ in range(6))
            self._below(p, bl)
            self._below(p + 1, br)
            self.pairing[mb], self.pairing[mt] = mt, mb
            if o == "+":
                self.out.update((mt, tr, tl))
                lower, upper = SINK, SOURCE
            else:
                self.out.add(mb)
                lower, upper = SOURCE, SINK
            self._vertex(lower, (mb, bl, br))
            self._vertex(upper, (tr, tl, mt))
            self.ends[p], self.ends[p + 1] = tl, tr
        elif tag == "cup":
            p, o = op[1], op[2]
            a, b = next(new), next(new)
            # the left end flows in the direction ``o``
            self.out.add(a if o == "+" else b)
            self._vertex(_PASS, (a, b))
            self.ends[p:p] = [a, b]
            self.row[p:p] = [o, "-" if o == "+" else "+"]
        elif tag == "cap":
            p = op[1]
            a, b = next(new), next(new)
            self._below(p, a)
            self._below(p + 1, b)
            self._vertex(_PASS, (a, b))
            del self.ends[p:p + 2]
            del self.row[p:p + 2]
        else:
            raise ValueError(f"layer {op!r} must be expanded before building")

    def close(self, bottom: Sequence[str]) -> WebDiagram:
        if tuple(self.row) != tuple(bottom):
            raise ValueError(f"trace closure needs matching ends: bottom {tuple(bottom)}, top {tuple(self.row)}")
        loops = 0
        for i, end in enumerate(self.ends):
            if isinstance(end, tuple):
                loops += 1  # an untouched vertical strand
                continue
            b = self.first[i]
            self.pairing[end], self.pairing[b] = b, end
        d = WebDiagram(self.pairing, self.cycles, self.kinds, frozenset(self.out), loops)
        passes = {v for v, k in self.kinds.items() if k == _PASS}
        if passes:
            mate = {}
            for v in passes:
                a, b = self.cycles[v]
                mate[a], mate[b] = b, a
            d = rewire(d, passes, mate)
        return d.check()


def build(t: Tangle) -> WebDiagram:
    """Trace closure of a clasp-free tangle as a closed diagram."""
    b = _Builder(t.bottom)
    for op in t.ops:
        b.apply(op)
    return b.close(t.bottom)


def expand(t: Tangle, limit: int | None = None) -> WebSum:
    """Clasps expanded, trace closure taken: a sum of closed diagrams."""
    out = WebSum()
    for c, t2 in clasp_insert(t, limit):
        out.add(c, build(t2))
    return out


def evaluate_closed(x, strategy: str = "memo", limit: int | None = None):
    """Evaluate a closed diagram, a sum of them, or the trace closure of a tangle.

    Returns a ``SixthPowerLaurent`` when the total is a Laurent polynomial and
    a ``RationalQ`` otherwise.
    """
    if isinstance(x, Tangle):
        x = expand(x, limit)
    if isinstance(x, WebDiagram):
        return evaluate_diagram(x, strategy)
    total = RationalQ(0)
    for c, d in x:
        total = total + c * evaluate_diagram(d, strategy)
    return total.to_laurent() if total.is_laurent() else total


# -- templates --------------------------------------------------------------

def cable_cross(p: int, a: int, b: int, over: str = "left") -> list[tuple]:
    """Crossings moving the ``a``-strand block at ``p`` across the ``b``-strand block to its right."""
    ops = []
    for i in reversed(range(a)):
        for j in range(b):
            ops.append(("X", p + i + j, over))
    return ops


def torus_link_diagram(m: int, n: int, limit: int | None = None) -> Tangle:
    """``T(2, 2m)`` with both components ``n``-cabled and clasped.

    Cable ``A`` runs up on positions ``0..n-1`` and cable ``B`` runs down
    beside it; ``2m`` cable crossings, each with the bottom-left cable on top.
    """
    limit = ORACLE_LIMIT if limit is None else limit
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if not 1 <= n <= limit:
        raise OracleLimitError(f"color {n} outside the oracle range 1..{limit}")
    ops: list[tuple] = [("clasp", ClaspSpec.at(0, n)), ("clasp", ClaspSpec.at(n, n))] if n > 1 else []
    for _ in range(2 * m):
        ops += cable_cross(0, n, n, "left")
    return Tangle(("+",) * n + ("-",) * n, tuple(ops))


def unknot_diagram(n: int) -> Tangle:
    ops = [("clasp", ClaspSpec.at(0, n))] if n > 1 else []
    return Tangle(("+",) * n, tuple(ops))


def two_cable_clasp_closure(n: int, m: int) -> Tangle:
    """Trace closure of the two-cable clasp of type ``(n, m)``; evaluates to ``delta(n, m)``."""
    return Tangle(("+",) * n + ("-",) * m, (("clasp2", 0, n, m),))


def theta_diagram(n: int, i: int) -> Tangle:
    """Two clasped ``n``-cables joined by ``n-i`` turnbacks and an ``(i, i)`` two-cable clasp."""
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got n={n}, i={i}")
    ops: list[tuple] = [("clasp", ClaspSpec.at(0, n)), ("clasp", ClaspSpec.at(n, n))]
    ops += [("cap", n - 1 - j) for j in range(n - i)]
    if i:
        ops.append(("clasp2", 0, i, i))
    ops += [("cup", i + j, "+") for j in range(n - i)]
    ops += [("clasp", ClaspSpec.at(0, n)), ("clasp", ClaspSpec.at(n, n))]
    return Tangle(("+",) * n + ("-",) * n, tuple(ops))


def two_bridge_diagram(word: Sequence[int], n: int, limit: int | None = None) -> Tangle:
    """Four-plat diagram of ``[2a_1, ..., 2a_l]`` with ``n``-cabled rows.

    Four cable blocks (orientations ``+ - + -``) start as two clasped
    turnbacks; box ``k`` twists blocks ``1, 2`` (``k`` odd) or ``2, 3``
    (``k`` even) by ``2|a_k|`` cable crossings; the top closes blocks
    ``0-1, 2-3`` for odd ``l`` and ``1-2, 0-3`` for even ``l``.
    """
    limit = ORACLE_LIMIT if limit is None else limit
    word = tuple(word)
    if not word or any(a == 0 for a in word):
        raise ValueError(f"2-bridge word entries must be nonzero, got {list(word)}")
    if not 1 <= n <= limit:
        raise OracleLimitError(f"color {n} outside the oracle range 1..{limit}")
    ops: list[tuple] = [("cup", j, "+") for j in range(n)]
    ops += [("cup", 2 * n + j, "+") for j in range(n)]
    if n > 1:
        ops += [("clasp", ClaspSpec.at(0, n)), ("clasp", ClaspSpec.at(2 * n, n))]
    for k, a in enumerate(word):
        start = n if k % 2 == 0 else 2 * n
        for _ in range(2 * abs(a)):
            ops += cable_cross(start, n, n, "left" if a > 0 else "right")
    if len(word) % 2:
        ops += [("cap", 3 * n - 1 - j) for j in range(n)]
    else:
        ops += [("cap", 2 * n - 1 - j) for j in range(n)]
    ops += [("cap", n - 1 - j) for j in range(n)]
    return Tangle((), tuple(ops))
