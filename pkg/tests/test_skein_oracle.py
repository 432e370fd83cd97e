import pytest

from sl3jones.jones import jones_two_bridge, psi_closed_form
from sl3jones.qexact import RationalQ, SixthPowerLaurent as L, quantum_int
from sl3jones.skein_oracle import (
    ClaspSpec,
    MalformedDiagram,
    OracleLimitError,
    Tangle,
    WebDiagram,
    build,
    canonical_form,
    clasp_terms,
    evaluate_closed,
    evaluate_diagram,
    expand,
    resolve_crossings,
    resolve_one,
    theta_diagram,
    torus_link_diagram,
    two_bridge_diagram,
    two_cable_clasp_closure,
    unknot_diagram,
)
from sl3jones.skein_oracle.diagram import NEGATIVE, POSITIVE
from sl3jones.websym import delta, theta

one = L.monomial(0)
HOPF = L.monomial(-16) * L.from_q_coeffs([0, 1, 0, 1, 1])

CIRCLE = WebDiagram({}, {}, {}, frozenset(), 1)
EMPTY = WebDiagram({}, {}, {}, frozenset(), 0)
THETA = WebDiagram({0: 3, 3: 0, 1: 4, 4: 1, 2: 5, 5: 2}, {0: (0, 1, 2), 1: (3, 5, 4)},
                   {0: "source", 1: "sink"}, frozenset({0, 1, 2}))


def normalized(tangle, n):
    return RationalQ(evaluate_closed(tangle)) / RationalQ(delta(n, 0))


class TestCrossings:
    def test_crossingless(self):
        terms = resolve_crossings(THETA)
        assert len(terms) == 1
        (c, d), = terms
        assert c == one

    def test_positive(self):
        d = build(Tangle(("+", "+"), (("X", 0, "left"),)))
        v, = d.crossings()
        assert d.kinds[v] == POSITIVE
        coeffs = [c for c, _ in resolve_one(d, v)]
        assert coeffs == [L.monomial(2), -L.monomial(-1)]

    def test_negative(self):
        d = build(Tangle(("+", "+"), (("X", 0, "right"),)))
        v, = d.crossings()
        assert d.kinds[v] == NEGATIVE
        assert [c for c, _ in resolve_one(d, v)] == [L.monomial(-2), -L.monomial(1)]

    def test_resolution_count(self):
        d = build(torus_link_diagram(2, 1))
        assert len(resolve_crossings(d)) <= 2 ** 4


class TestClosedEvaluation:
    @pytest.mark.parametrize("strategy", ["memo", "eager"])
    def test_basic_webs(self, strategy):
        assert evaluate_diagram(CIRCLE, strategy) == quantum_int(3)
        assert evaluate_diagram(EMPTY, strategy) == one
        assert evaluate_diagram(THETA, strategy) == quantum_int(2) * quantum_int(3)

    def test_disjoint_union_multiplies(self):
        assert evaluate_diagram(THETA.with_loops(2)) == quantum_int(2) * quantum_int(3) ** 3

    def test_malformed(self):
        bad = WebDiagram({0: 1, 1: 0}, {0: (0, 1)}, {0: "source"}, frozenset({0}))
        with pytest.raises(MalformedDiagram):
            bad.check()

    def test_dump_round_trip(self):
        d = build(torus_link_diagram(1, 1))
        again = WebDiagram.parse_dump(d.dump())
        assert canonical_form(again)[0] == canonical_form(d)[0]
        assert evaluate_diagram(again) == evaluate_diagram(d)

    def test_mirror_is_bar(self):
        d = build(torus_link_diagram(1, 1))
        assert evaluate_diagram(d.mirror()) == evaluate_diagram(d).bar()


class TestClasps:
    def test_base_cases(self):
        assert clasp_terms(1) == [(RationalQ(1), ())]
        two = clasp_terms(2)
        assert len(two) == 2
        assert two[0][0] == RationalQ(1)
        assert two[1][0] == -RationalQ(quantum_int(1), quantum_int(2))

    def test_three_flattened(self):
        assert len(clasp_terms(3)) == 6

    def test_closures(self):
        for n in (1, 2, 3):
            assert evaluate_closed(unknot_diagram(n)) == delta(n, 0)
        assert evaluate_closed(two_cable_clasp_closure(1, 1)) == delta(1, 1)
        assert evaluate_closed(two_cable_clasp_closure(2, 1)) == delta(2, 1)

    @pytest.mark.parametrize("n", [2, 3])
    def test_idempotent(self, n):
        twist = [("X", p, "left") for p in range(n - 1)]
        once = Tangle(("+",) * n, (("clasp", ClaspSpec.at(0, n)), *twist))
        twice = Tangle(("+",) * n, (("clasp", ClaspSpec.at(0, n)), ("clasp", ClaspSpec.at(0, n)), *twist))
        assert evaluate_closed(twice) == evaluate_closed(once)

    @pytest.mark.parametrize("n", [2, 3])
    def test_annihilates_vertices(self, n):
        for p in range(n - 1):
            ops = (("clasp", ClaspSpec.at(0, n)), ("H", p), ("X", 0, "left"))
            terms = expand(Tangle(("+",) * n, ops))
            assert RationalQ(evaluate_closed(terms)) == RationalQ(0)
            bare = Tangle(("+",) * n, ops[1:])
            assert not RationalQ(evaluate_closed(bare)).is_zero()

    def test_theta_graphs(self):
        for n in (1, 2):
            for i in range(n + 1):
                assert RationalQ(evaluate_closed(theta_diagram(n, i))) == theta(n, i)


class TestLinks:
    def test_construction_sizes(self):
        assert torus_link_diagram(1, 1).crossing_count == 2
        assert build(torus_link_diagram(1, 1)).trivalent_count() == 0
        assert torus_link_diagram(2, 1).crossing_count == 4
        t = torus_link_diagram(1, 2)
        assert (t.crossing_count, t.clasp_count) == (8, 2)

    def test_unknot(self):
        assert evaluate_closed(unknot_diagram(1)) == quantum_int(3)

    def test_hopf(self):
        assert normalized(torus_link_diagram(1, 1), 1) == RationalQ(HOPF)

    @pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1), (2, 2)])
    def test_torus_matches_formula(self, n, m):
        assert normalized(torus_link_diagram(m, n), n) == RationalQ(psi_closed_form(n, m).value)

    def test_strategies_agree(self):
        d = build(torus_link_diagram(1, 1))
        assert evaluate_diagram(d, "eager") == evaluate_diagram(d, "memo")

    @pytest.mark.parametrize("word", [(1,), (2,), (-1,), (1, 1), (1, -1), (2, 1), (1, 1, 1), (1, 2, -1)])
    def test_two_bridge_color_one(self, word):
        expected = jones_two_bridge(word, 1).value
        assert normalized(two_bridge_diagram(word, 1), 1) == RationalQ(expected)

    @pytest.mark.parametrize("word", [(1, 1), (1, -1)])
    def test_two_bridge_color_two(self, word):
        expected = jones_two_bridge(word, 2).value
        assert normalized(two_bridge_diagram(word, 2), 2) == RationalQ(expected)

    def test_limit(self):
        with pytest.raises(OracleLimitError):
            torus_link_diagram(1, 4)
        with pytest.raises(OracleLimitError):
            clasp_terms(5, limit=3)
