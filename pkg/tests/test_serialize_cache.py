import json
import random

import pytest
from hypothesis import given, strategies as st

from sl3jones.cache import CacheError, load_tables, save_tables
from sl3jones.qexact import RationalQ, SixthPowerLaurent as L, TruncatedSeries, quantum_int
from sl3jones.serialize import dumps, loads, serialize, series_to_tex
from sl3jones.tails import tail_psi
from sl3jones.websym import sixj

laurents = st.dictionaries(st.integers(-40, 40), st.integers(-10**30, 10**30), max_size=8).map(L)


class TestFormats:
    def test_json_one(self):
        assert json.loads(dumps(L.monomial(0))) == {
            "variable": "q", "exponent_denominator": 6, "terms": [[0, "1"]]}

    def test_json_fractional(self):
        assert json.loads(dumps(L.monomial(-16)))["terms"] == [[-16, "1"]]

    def test_json_ascending(self):
        terms = json.loads(dumps(L({5: 1, -3: 2, 0: -7})))["terms"]
        assert terms == [[-3, "2"], [0, "-7"], [5, "1"]]

    def test_text_fraction_reduced(self):
        assert serialize(L.monomial(-16), "text") == "q^(-8/3)"
        assert serialize(L.monomial(3), "text") == "q^(1/2)"

    def test_csv_series_has_zero_rows(self):
        assert serialize(tail_psi(1, 3).series, "csv") == "degree,coefficient\n0,1\n1,0\n2,0\n3,0\n"

    def test_csv_laurent(self):
        assert serialize(L({-16: 1, 6: 2}), "csv") == "exponent,coefficient\n-8/3,1\n1,2\n"

    def test_tex(self):
        assert series_to_tex(tail_psi(1, 150).series) == "1+O(q^{151})"
        assert series_to_tex(TruncatedSeries([0, 2, 0, -1] + [0] * 8 + [1], 12)) == "2q-q^3+q^{12}+O(q^{13})"

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            serialize(L.monomial(0), "xml")

    @given(laurents)
    def test_laurent_round_trip(self, p):
        assert loads(dumps(p)) == p
        assert dumps(loads(dumps(p))) == dumps(p)

    def test_rational_and_series_round_trip(self):
        r = RationalQ(quantum_int(2), quantum_int(5))
        assert loads(dumps(r)) == r
        s = tail_psi(3, 80).series
        assert loads(dumps(s)) == s

    def test_big_coefficients_are_strings(self):
        p = L({0: 10**40})
        assert json.loads(dumps(p))["terms"] == [[0, str(10**40)]]


class TestCache:
    def test_round_trip(self, tmp_path):
        path = save_tables(tmp_path / "c.json", 4)
        tables = load_tables(path, install=False)
        assert sorted(tables) == [0, 1, 2, 3, 4]
        for n, t in tables.items():
            for i in range(n + 1):
                for j in range(n + 1):
                    assert t[i, j] == sixj(n, i, j)

    def test_corrupt_entry_rejected(self, tmp_path):
        path = save_tables(tmp_path / "c.json", 2)
        raw = json.loads(path.read_text())
        bogus = {"numerator": json.loads(dumps(L.monomial(0, 7))), "denominator": json.loads(dumps(L.monomial(0)))}
        raw["2"] = [[bogus] * 3 for _ in range(3)]
        path.write_text(json.dumps(raw))
        with pytest.raises(CacheError):
            load_tables(path, rng=random.Random(0), install=False)

    def test_shape_rejected(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"2": [[]]}))
        with pytest.raises(CacheError):
            load_tables(path)

    def test_unreadable(self, tmp_path):
        (tmp_path / "c.json").write_text("{not json")
        with pytest.raises(CacheError):
            load_tables(tmp_path / "c.json")
        with pytest.raises(CacheError):
            load_tables(tmp_path / "missing.json")
