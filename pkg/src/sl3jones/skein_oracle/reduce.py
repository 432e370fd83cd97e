"""Skein rewriting on combinatorial maps.

Crossings are resolved with

    positive:  q^(1/3)  * smoothing - q^(-1/6) * H-web
    negative:  q^(-1/3) * smoothing - q^(1/6)  * H-web

and crossingless closed webs are reduced with the circle (``[3]``),
bigon (``[2]``) and square (sum of two reconnections) relations.
"""
from __future__ import annotations

import threading
from itertools import count
from typing import Mapping

from ..qexact import SixthPowerLaurent, quantum_int
from .diagram import (
    CROSSINGS,
    NEGATIVE,
    POSITIVE,
    SINK,
    SOURCE,
    TRIVALENT,
    MalformedDiagram,
    WebDiagram,
    WebSum,
)

_SMOOTH = {POSITIVE: SixthPowerLaurent.monomial(2), NEGATIVE: SixthPowerLaurent.monomial(-2)}
_WEB = {POSITIVE: SixthPowerLaurent.monomial(-1, -1), NEGATIVE: SixthPowerLaurent.monomial(1, -1)}


def rewire(d: WebDiagram, remove: set[int], mate: Mapping[int, int],
           add_cycles: Mapping[int, tuple[int, ...]] | None = None,
           add_kinds: Mapping[int, str] | None = None,
           add_out: set[int] | None = None,
           add_pairs: Mapping[int, int] | None = None) -> WebDiagram:
    """Delete the vertices in ``remove`` and reconnect the strands through them.

    ``mate`` pairs up removed darts that are joined by a strand inside the
    deleted region; surviving darts are glued by following
    ``pairing -> mate -> pairing -> ...``.  Removed darts without a mate end
    nowhere (their edges vanish).  Closed chains of mated darts become loops.
    New vertices, with fresh darts, can be added in the same step.
    """
    removed = {x for v in remove for x in d.cycles[v]}
    cycles = {v: c for v, c in d.cycles.items() if v not in remove}
    kinds = {v: k for v, k in d.kinds.items() if v not in remove}
    out = {x for x in d.out if x not in removed}
    pairing = {x: y for x, y in d.pairing.items() if x not in removed and y not in removed}
    if add_cycles:
        cycles.update(add_cycles)
        kinds.update(add_kinds)
        out |= add_out or set()
        pairing.update(add_pairs or {})
    loops = d.loops
    visited: set[int] = set()
    for s, x in d.pairing.items():
        if s in removed or x not in removed or s in pairing:
            continue
        while True:
            visited.add(x)
            y = mate.get(x)
            if y is None:
                raise MalformedDiagram(f"strand through dart {x} has no continuation")
            visited.add(y)
            z = (add_pairs or {}).get(y, d.pairing.get(y))
            if z not in removed:
                if (s in out) == (z in out):
                    raise MalformedDiagram(f"reconnection {s}<->{z} breaks edge directions")
                pairing[s], pairing[z] = z, s
                break
            x = z
    for x in mate:
        if x in visited:
            continue
        chain, y = [], x
        while y not in visited and y in mate:
            visited.add(y)
            chain.append(y)
            visited.add(mate[y])
            y = d.pairing[mate[y]]
        if y == x:
            loops += 1
        elif chain:
            raise MalformedDiagram(f"open strand through removed darts at {x}")
    return WebDiagram(pairing, cycles, kinds, frozenset(out), loops)


def _fresh(d: WebDiagram):
    start = max(d.pairing, default=-1) + 1
    vstart = max(d.cycles, default=-1) + 1
    return count(start), count(vstart)


def resolve_one(d: WebDiagram, v: int) -> list[tuple[SixthPowerLaurent, WebDiagram]]:
    """Expand crossing ``v`` into its smoothing and its H-web."""
    kind = d.kinds[v]
    if kind not in CROSSINGS:
        raise ValueError(f"vertex {v} is not a crossing")
    ne, nw, sw, se = d.cycles[v]
    smooth = rewire(d, {v}, {sw: nw, nw: sw, se: ne, ne: se})
    darts, verts = _fresh(d)
    mb, mt = next(darts), next(darts)
    bottom, top = next(verts), next(verts)
    cycles = {v2: c for v2, c in d.cycles.items() if v2 != v}
    cycles[bottom] = (mb, sw, se)
    cycles[top] = (ne, nw, mt)
    kinds = {v2: k for v2, k in d.kinds.items() if v2 != v}
    kinds[bottom], kinds[top] = SINK, SOURCE
    pairing = dict(d.pairing)
    pairing[mb], pairing[mt] = mt, mb
    web = WebDiagram(pairing, cycles, kinds, d.out | {mt}, d.loops)
    return [(_SMOOTH[kind], smooth), (_WEB[kind], web)]


def resolve_crossings(d: WebDiagram) -> WebSum:
    """All ``2^c`` crossingless resolutions of ``d`` with their monomial weights."""
    layer = [(SixthPowerLaurent.monomial(0), d)]
    for v in d.crossings():
        layer = [(c * c2, d2) for c, d1 in layer for c2, d2 in resolve_one(d1, v)]
    out = WebSum()
    for c, d1 in layer:
        out.add(c, d1)
    return out


# -- face relations -------------------------------------------------------

def _third(d: WebDiagram, v: int, a: int, b: int) -> int:
    (x,) = [y for y in d.cycles[v] if y != a and y != b]
    return x


def reducible_face(d: WebDiagram, faces=None):
    """The first bigon, else the first square, among faces whose vertices are all trivalent.

    Returns ``(kind, face)`` or ``None``; faces are scanned in order of their
    smallest dart, so the choice is deterministic.
    """
    faces = d.faces() if faces is None else faces
    square = None
    for f in faces:
        if len(f) not in (2, 4):
            continue
        verts = [d.vertex_of(x) for x in f]
        if len(set(verts)) != len(f):
            continue
        if any(d.kinds[v] not in TRIVALENT for v in verts):
            continue
        if len(f) == 2:
            return "bigon", f
        if square is None:
            square = f
    return ("square", square) if square is not None else None


def reduce_bigon(d: WebDiagram, face: tuple[int, ...]) -> WebDiagram:
    """Collapse a bigon to a single edge (the caller multiplies by ``[2]``)."""
    a, b = face
    v, w = d.vertex_of(a), d.vertex_of(b)
    ta = _third(d, v, a, d.pairing[b])
    tb = _third(d, w, b, d.pairing[a])
    return rewire(d, {v, w}, {ta: tb, tb: ta})


def reduce_square(d: WebDiagram, face: tuple[int, ...]) -> tuple[WebDiagram, WebDiagram]:
    """The two reconnections of a square face."""
    verts = [d.vertex_of(x) for x in face]
    ext = []
    for i, x in enumerate(face):
        arriving = d.pairing[face[i - 1]]
        ext.append(_third(d, verts[i], x, arriving))
    first = rewire(d, set(verts), {ext[0]: ext[1], ext[1]: ext[0], ext[2]: ext[3], ext[3]: ext[2]})
    second = rewire(d, set(verts), {ext[1]: ext[2], ext[2]: ext[1], ext[3]: ext[0], ext[0]: ext[3]})
    return first, second


def _has_bridge_face(d: WebDiagram, faces) -> bool:
    for f in faces:
        darts = set(f)
        if any(d.pairing[x] in darts for x in f):
            return True
    return False


_Q3 = quantum_int(3)
_Q2 = quantum_int(2)


def reduce_closed(d: WebDiagram) -> SixthPowerLaurent:
    """Value of a crossingless closed web by circle, bigon and square removal.

    Deterministic: loops first, then the bigon (else square) with the
    smallest dart.  A web with a bridge evaluates to 0.
    """
    if not d.is_crossingless():
        raise ValueError("reduce_closed needs a crossingless diagram")
    total = SixthPowerLaurent()
    stack = [(SixthPowerLaurent.monomial(0), d)]
    while stack:
        c, g = stack.pop()
        if g.loops:
            c = c * _Q3 ** g.loops
            g = g.with_loops(0)
        if g.is_empty():
            total = total + c
            continue
        faces = g.faces()
        found = reducible_face(g, faces)
        if found is None:
            if _has_bridge_face(g, faces):
                continue
            raise MalformedDiagram("no reducible face in a nonempty crossingless web:\n" + g.dump())
        kind, face = found
        if kind == "bigon":
            stack.append((c * _Q2, reduce_bigon(g, face)))
        else:
            for g2 in reduce_square(g, face):
                stack.append((c, g2))
    return total


# -- canonical form and memoized evaluation -------------------------------

_KIND_CODE = {SOURCE: 0, SINK: 1, POSITIVE: 2, NEGATIVE: 3}


def _normalize_crossing_cycle(cyc: tuple[int, ...], out) -> tuple[int, ...]:
    for i in range(4):
        r = cyc[i:] + cyc[:i]
        if r[0] in out and r[1] in out:
            return r
    raise MalformedDiagram(f"crossing darts {cyc} are not two outs followed by two ins")


def canonical_form(d: WebDiagram) -> tuple[tuple, WebDiagram]:
    """Relabel a connected diagram canonically.

    Every rooted breadth-first labelling (respecting the rotation at each
    vertex) yields a code; the smallest code wins, and the diagram is
    relabelled accordingly.  Two connected diagrams get equal codes iff they
    are isomorphic as oriented maps with the same vertex kinds.
    """
    counts: dict[str, int] = {}
    for k in d.kinds.values():
        counts[k] = counts.get(k, 0) + 1
    rare = min(counts, key=lambda k: (counts[k], _KIND_CODE[k]))
    roots = [x for v, k in d.kinds.items() if k == rare for x in d.cycles[v]]
    cycles, kinds, pairing, out = d.cycles, d.kinds, d.pairing, d.out
    vof = d._vertex_of

    best = None
    best_label = None
    for root in roots:
        label: dict[int, int] = {}
        start: list[int] = [root]
        vlabel = {vof[root]: 0}
        code: list[int] = []
        state = 0 if best is not None else -1  # 0 tied so far, -1 already smaller
        abort = False
        qi = 0
        while qi < len(start):
            x0 = start[qi]
            v = vof[x0]
            cyc = cycles[v]
            i0 = cyc.index(x0)
            n = len(cyc)
            toks = [_KIND_CODE[kinds[v]]]
            for j in range(n):
                x = cyc[(i0 + j) % n]
                label[x] = 4 * qi + j
            for j in range(n):
                x = cyc[(i0 + j) % n]
                y = pairing[x]
                w = vof[y]
                if w not in vlabel:
                    vlabel[w] = len(start)
                    start.append(y)
                wcyc = cycles[w]
                wi = (wcyc.index(y) - wcyc.index(start[vlabel[w]])) % len(wcyc)
                toks.append(2 * (4 * vlabel[w] + wi) + (x in out))
            for t in toks:
                if state == 0:
                    b = best[len(code)]
                    if t > b:
                        abort = True
                        break
                    if t < b:
                        state = -1
                code.append(t)
            if abort:
                break
            qi += 1
        if abort:
            continue
        if best is None or state == -1:
            best = code
            best_label = (label, start)
    label, start = best_label
    new_cycles, new_kinds, new_pairing, new_out = {}, {}, {}, set()
    for vi, x0 in enumerate(start):
        v = vof[x0]
        cyc = tuple(label[x] for x in _rotate(cycles[v], x0))
        new_kinds[vi] = kinds[v]
        for x in cycles[v]:
            new_pairing[label[x]] = label[pairing[x]]
            if x in out:
                new_out.add(label[x])
        new_cycles[vi] = cyc
    for vi, k in new_kinds.items():
        if k in (POSITIVE, NEGATIVE):
            new_cycles[vi] = _normalize_crossing_cycle(new_cycles[vi], new_out)
    return tuple(best), WebDiagram(new_pairing, new_cycles, new_kinds, frozenset(new_out), 0)


def _rotate(cyc, x0):
    i = cyc.index(x0)
    return cyc[i:] + cyc[:i]


class Evaluator:
    """Memoized evaluation of closed diagrams, crossings resolved lazily.

    Each connected component is brought to canonical form and cached.  Face
    reductions whose vertices are all trivalent are applied before any
    crossing is resolved; the bracket is well defined, so the order of
    rewriting does not change the value, only the amount of work.
    """

    def __init__(self):
        self.memo: dict[tuple, SixthPowerLaurent] = {}
        self._lock = threading.Lock()

    def __call__(self, d: WebDiagram) -> SixthPowerLaurent:
        value = _Q3 ** d.loops if d.loops else SixthPowerLaurent.monomial(0)
        for comp in d.components():
            value = value * self._connected(comp)
            if value.is_zero():
                break
        return value

    def _connected(self, d: WebDiagram) -> SixthPowerLaurent:
        code, g = canonical_form(d)
        hit = self.memo.get(code)
        if hit is not None:
            return hit
        value = self._expand(g)
        with self._lock:
            self.memo[code] = value
        return value

    def _expand(self, g: WebDiagram) -> SixthPowerLaurent:
        faces = g.faces()
        found = reducible_face(g, faces)
        if found is not None:
            kind, face = found
            if kind == "bigon":
                return _Q2 * self(reduce_bigon(g, face))
            first, second = reduce_square(g, face)
            return self(first) + self(second)
        crossings = g.crossings()
        if crossings:
            v = self._pick_crossing(g, crossings)
            total = SixthPowerLaurent()
            for c, g2 in resolve_one(g, v):
                total = total + c * self(g2)
            return total
        if _has_bridge_face(g, faces):
            return SixthPowerLaurent()
        raise MalformedDiagram("no reducible face in a nonempty crossingless web:\n" + g.dump())

    @staticmethod
    def _pick_crossing(g: WebDiagram, crossings: list[int]) -> int:
        # prefer a crossing next to a trivalent vertex: resolving it tends to
        # create a bigon or square right away
        for v in crossings:
            for x in g.cycles[v]:
                if g.kinds[g.vertex_of(g.pairing[x])] in TRIVALENT:
                    return v
        return crossings[0]


_default = Evaluator()


def evaluate_diagram(d: WebDiagram, strategy: str = "memo") -> SixthPowerLaurent:
    """Value of one closed diagram.

    ``strategy="eager"`` resolves every crossing first and reduces each of
    the ``2^c`` webs separately; ``"memo"`` (default) interleaves and caches.
    """
    if strategy == "eager":
        total = SixthPowerLaurent()
        for c, g in resolve_crossings(d):
            total = total + c * reduce_closed(g)
        return total
    if strategy == "memo":
        return _default(d)
    raise ValueError(f"unknown strategy {strategy!r}")


def clear_memo() -> None:
    _default.memo.clear()
