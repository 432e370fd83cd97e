"""Combinatorial-map encoding of closed tangled trivalent diagrams.

A diagram is a set of darts (half-edges) with

* ``pairing``: a fixed-point-free involution gluing darts into edges,
* ``cycles``: the counter-clockwise dart order around each vertex,
* ``out``: the darts whose edge points away from their vertex.

Trivalent vertices are ``source`` (all darts out) or ``sink`` (all in).
A crossing is a 4-valent vertex whose cycle is stored as
``(NE, NW, SW, SE)`` in the frame where both strands run upward
(``SW -> NE`` and ``SE -> NW``).  Its kind records which strand is on top:
``crossing-over-NE`` (the ``SW -> NE`` strand, a positive crossing) or
``crossing-over-NW`` (negative).  Free loops without vertices are counted
in ``loops``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from ..qexact import RationalQ, SixthPowerLaurent

SOURCE = "source"
SINK = "sink"
POSITIVE = "crossing-over-NE"
NEGATIVE = "crossing-over-NW"
TRIVALENT = (SOURCE, SINK)
CROSSINGS = (POSITIVE, NEGATIVE)
KINDS = TRIVALENT + CROSSINGS


class MalformedDiagram(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class WebDiagram:
    pairing: Mapping[int, int]
    cycles: Mapping[int, tuple[int, ...]]
    kinds: Mapping[int, str]
    out: frozenset[int]
    loops: int = 0
    _vertex_of: dict[int, int] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        vof = {}
        for v, cyc in self.cycles.items():
            for d in cyc:
                vof[d] = v
        object.__setattr__(self, "_vertex_of", vof)

    # -- structure ---------------------------------------------------------
    @property
    def darts(self) -> frozenset[int]:
        return frozenset(self._vertex_of)

    def vertex_of(self, d: int) -> int:
        return self._vertex_of[d]

    def sigma(self, d: int) -> int:
        """Next dart counter-clockwise around the vertex of ``d``."""
        cyc = self.cycles[self._vertex_of[d]]
        return cyc[(cyc.index(d) + 1) % len(cyc)]

    def face_next(self, d: int) -> int:
        return self.sigma(self.pairing[d])

    def faces(self) -> list[tuple[int, ...]]:
        """Face boundaries as dart orbits of ``face_next``, each starting at its smallest dart."""
        seen: set[int] = set()
        faces = []
        for d in sorted(self._vertex_of):
            if d in seen:
                continue
            orbit = []
            x = d
            while x not in seen:
                seen.add(x)
                orbit.append(x)
                x = self.face_next(x)
            faces.append(tuple(orbit))
        return faces

    def crossings(self) -> list[int]:
        return sorted(v for v, k in self.kinds.items() if k in CROSSINGS)

    def crossing_count(self) -> int:
        return sum(1 for k in self.kinds.values() if k in CROSSINGS)

    def trivalent_count(self) -> int:
        return sum(1 for k in self.kinds.values() if k in TRIVALENT)

    def is_crossingless(self) -> bool:
        return self.crossing_count() == 0

    def is_empty(self) -> bool:
        return not self.cycles

    def components(self) -> list["WebDiagram"]:
        """Connected pieces (vertex-bearing); free loops are dropped."""
        seen: set[int] = set()
        parts = []
        for v0 in sorted(self.cycles):
            if v0 in seen:
                continue
            stack = [v0]
            seen.add(v0)
            verts = []
            while stack:
                v = stack.pop()
                verts.append(v)
                for d in self.cycles[v]:
                    w = self._vertex_of[self.pairing[d]]
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            parts.append(self.restrict(verts))
        return parts

    def restrict(self, verts) -> "WebDiagram":
        verts = set(verts)
        cycles = {v: self.cycles[v] for v in verts}
        darts = {d for v in verts for d in self.cycles[v]}
        return WebDiagram(
            {d: self.pairing[d] for d in darts},
            cycles,
            {v: self.kinds[v] for v in verts},
            frozenset(d for d in self.out if d in darts),
            0,
        )

    def with_loops(self, loops: int) -> "WebDiagram":
        return WebDiagram(self.pairing, self.cycles, self.kinds, self.out, loops)

    def mirror(self) -> "WebDiagram":
        """Switch every crossing (the value becomes its bar-conjugate)."""
        kinds = {v: (NEGATIVE if k == POSITIVE else POSITIVE if k == NEGATIVE else k)
                 for v, k in self.kinds.items()}
        return WebDiagram(self.pairing, self.cycles, kinds, self.out, self.loops)

    # -- checks ------------------------------------------------------------
    def check(self) -> "WebDiagram":
        pairing, vof = self.pairing, self._vertex_of
        if set(pairing) != set(vof):
            raise MalformedDiagram("pairing domain differs from the darts at vertices")
        for d, e in pairing.items():
            if d == e:
                raise MalformedDiagram(f"dart {d} paired with itself")
            if pairing.get(e) != d:
                raise MalformedDiagram(f"pairing is not an involution at {d}")
            if (d in self.out) == (e in self.out):
                raise MalformedDiagram(f"edge {d}<->{e} is not consistently directed")
        for v, cyc in self.cycles.items():
            kind = self.kinds.get(v)
            outs = [d in self.out for d in cyc]
            if kind == SOURCE:
                ok = len(cyc) == 3 and all(outs)
            elif kind == SINK:
                ok = len(cyc) == 3 and not any(outs)
            elif kind in CROSSINGS:
                ok = len(cyc) == 4 and outs == [True, True, False, False]
            else:
                raise MalformedDiagram(f"vertex {v} has unknown kind {kind!r}")
            if not ok:
                raise MalformedDiagram(f"vertex {v} ({kind}) has inconsistent darts {cyc}")
        if self.loops < 0:
            raise MalformedDiagram("negative loop count")
        return self

    # -- debug -------------------------------------------------------------
    def dump(self) -> str:
        """Text form for reproducing failures: vertices, then edges, then loops."""
        lines = []
        for v in sorted(self.cycles):
            lines.append(f"v{v} {self.kinds[v]} cycle=[{','.join(map(str, self.cycles[v]))}]")
        for d in sorted(self.pairing):
            e = self.pairing[d]
            if d < e:
                a, b = (d, e) if d in self.out else (e, d)
                lines.append(f"e {d}<->{e} dir={a}->{b}")
        if self.loops:
            lines.append(f"loops {self.loops}")
        return "\n".join(lines)

    @classmethod
    def parse_dump(cls, text: str) -> "WebDiagram":
        cycles, kinds, pairing, out, loops = {}, {}, {}, set(), 0
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("v"):
                head, kind, cyc = line.split(" ", 2)
                v = int(head[1:])
                body = cyc[len("cycle=["):-1]
                cycles[v] = tuple(int(x) for x in body.split(",")) if body else ()
                kinds[v] = kind
            elif line.startswith("e "):
                _, ends, direction = line.split(" ")
                a, b = (int(x) for x in ends.split("<->"))
                pairing[a], pairing[b] = b, a
                out.add(int(direction[len("dir="):].split("->")[0]))
            elif line.startswith("loops "):
                loops = int(line.split()[1])
            else:
                raise MalformedDiagram(f"cannot parse dump line {line!r}")
        return cls(pairing, cycles, kinds, frozenset(out), loops).check()

    def __repr__(self):
        return (f"WebDiagram(vertices={len(self.cycles)}, crossings={self.crossing_count()}, "
                f"loops={self.loops})")


Coefficient = SixthPowerLaurent | RationalQ


@dataclass
class WebSum:
    """Formal linear combination of diagrams."""

    terms: list[tuple[Coefficient, WebDiagram]] = field(default_factory=list)

    def add(self, coeff: Coefficient, diagram: WebDiagram) -> None:
        if not coeff.is_zero():
            self.terms.append((coeff, diagram))

    def __iter__(self) -> Iterator[tuple[Coefficient, WebDiagram]]:
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def all_crossingless(self) -> bool:
        return all(d.is_crossingless() for _, d in self.terms)
