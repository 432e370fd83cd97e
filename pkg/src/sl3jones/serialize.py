"""Text, JSON and CSV forms of polynomials, rational functions and series."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .qexact import RationalQ, SixthPowerLaurent, TruncatedSeries


def laurent_to_obj(p: SixthPowerLaurent) -> dict:
    return {
        "variable": "q",
        "exponent_denominator": 6,
        "terms": [[e, str(c)] for e, c in sorted(p.items())],
    }


def laurent_from_obj(obj: dict) -> SixthPowerLaurent:
    if obj.get("variable") != "q" or obj.get("exponent_denominator") != 6:
        raise ValueError("expected a q-polynomial with exponents in sixths")
    terms = {}
    for e, c in obj["terms"]:
        if not isinstance(e, int):
            raise ValueError(f"exponent {e!r} is not an integer")
        terms[e] = terms.get(e, 0) + int(c)
    return SixthPowerLaurent(terms)


def rational_to_obj(r: RationalQ) -> dict:
    return {"numerator": laurent_to_obj(r.numerator), "denominator": laurent_to_obj(r.denominator)}


def rational_from_obj(obj: dict) -> RationalQ:
    return RationalQ(laurent_from_obj(obj["numerator"]), laurent_from_obj(obj["denominator"]))


def series_to_obj(s: TruncatedSeries) -> dict:
    return {"variable": "q", "order": s.order, "coefficients": [str(c) for c in s.coeffs]}


def series_from_obj(obj: dict) -> TruncatedSeries:
    if obj.get("variable") != "q":
        raise ValueError("expected a series in q")
    return TruncatedSeries([int(c) for c in obj["coefficients"]], int(obj["order"]))


def to_obj(value):
    if isinstance(value, SixthPowerLaurent):
        return laurent_to_obj(value)
    if isinstance(value, RationalQ):
        return rational_to_obj(value)
    if isinstance(value, TruncatedSeries):
        return series_to_obj(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def from_obj(obj: dict):
    if "numerator" in obj:
        return rational_from_obj(obj)
    if "coefficients" in obj:
        return series_from_obj(obj)
    return laurent_from_obj(obj)


def dumps(value) -> str:
    return json.dumps(to_obj(value), separators=(",", ":"))


def loads(text: str):
    return from_obj(json.loads(text))


def series_to_tex(s: TruncatedSeries) -> str:
    """``1-q-q^2+q^{10}+O(q^{151})`` style, as printed in coefficient tables."""
    out = ""
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "q" if k == 1 else (f"q^{k}" if k < 10 else f"q^{{{k}}}")
            body = mono if mag == 1 else f"{mag}{mono}"
        out += body if not out and sign == "+" else sign + body
    out += ("+" if out else "") + f"O(q^{{{s.order + 1}}})"
    return out


def to_csv(value) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(value, TruncatedSeries):
        w.writerow(["degree", "coefficient"])
        for k, c in enumerate(value.coeffs):
            w.writerow([k, c])
    elif isinstance(value, SixthPowerLaurent):
        w.writerow(["exponent", "coefficient"])
        for e, c in sorted(value.items()):
            w.writerow([_frac(e), c])
    else:
        raise TypeError(f"no CSV form for {type(value).__name__}")
    return buf.getvalue()


def _frac(e: int) -> str:
    f = Fraction(e, 6)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def to_text(value) -> str:
    if isinstance(value, (SixthPowerLaurent, TruncatedSeries)):
        return value.to_text()
    return str(value)


def serialize(value, fmt: str) -> str:
    if fmt == "text":
        return to_text(value)
    if fmt == "json":
        return dumps(value)
    if fmt == "csv":
        return to_csv(value)
    if fmt == "tex":
        if not isinstance(value, TruncatedSeries):
            raise TypeError("tex output is only defined for series")
        return series_to_tex(value)
    raise ValueError(f"unknown format {fmt!r}")
