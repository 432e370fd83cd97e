"""Command-line interface.

Exit status: 0 success or a true verdict, 1 a false verdict, 2 a usage
error, 3 an internal failure (a division that should be exact was not, a
malformed diagram, a corrupt cache).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .cache import CacheError, default_path, load_tables, save_tables
from .jones import TwoBridgeWord, jones_two_bridge, psi_closed_form, torus_jones
from .qexact import NotDivisibleError, RationalQ
from .serialize import serialize, to_obj
from .skein_oracle import MalformedDiagram, OracleLimitError
from .tails import pattern_analysis, stabilization_check, tail_g, tail_psi, verify_identity

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_ORDER = 150
ORDER_CAP = int(os.environ.get("SL3JONES_ORDER_CAP", "2000"))


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    parameters: dict
    payload: dict
    text: str
    status: int = EXIT_OK
    elapsed: float = 0.0
    csv: str | None = None
    tex: str | None = None
    extra: dict = field(default_factory=dict)

    def as_json(self) -> str:
        meta = {
            "command": self.command,
            "parameters": self.parameters,
            "version": __version__,
            "elapsed_seconds": round(self.elapsed, 6),
        }
        return json.dumps({"metadata": meta, "payload": self.payload}, separators=(",", ":"))


def _positive(name):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}") from None
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be positive, got {v}")
        return v
    return conv


def _nonneg(name):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}") from None
        if v < 0:
            raise argparse.ArgumentTypeError(f"{name} must be nonnegative, got {v}")
        return v
    return conv


def _word(text):
    try:
        return TwoBridgeWord.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _chain(text):
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"chain must be comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sl3jones", description="sl3 colored Jones polynomials of 2-bridge links and torus-link tails.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("text", "json", "csv")):
        sp.add_argument("--format", choices=choices, default="text")

    def cache_opt(sp):
        sp.add_argument("--cache-path", help="load recoupling tables from this cache file first")

    sp = sub.add_parser("jones", help="J_(n,0) of the 2-bridge link [2a_1,...,2a_l]")
    sp.add_argument("--word", type=_word, required=True, help="a_1,...,a_l (nonzero integers)")
    sp.add_argument("--color", type=_nonneg("color"), required=True)
    fmt(sp)
    cache_opt(sp)

    sp = sub.add_parser("torus", help="J_(n,0) of T(2,2m)")
    sp.add_argument("--m", type=_positive("m"), required=True)
    sp.add_argument("--n", type=_nonneg("n"), required=True)
    sp.add_argument("--method", choices=("closed", "fulltwist", "recoupling"), default="closed")
    fmt(sp)
    cache_opt(sp)

    sp = sub.add_parser("tail", help="the limit series of the normalized torus-link invariants")
    sp.add_argument("--m", type=_positive("m"), required=True)
    sp.add_argument("--order", type=_nonneg("order"), default=DEFAULT_ORDER)
    sp.add_argument("--method", choices=("psi", "g"), default="psi")
    fmt(sp, ("text", "json", "csv", "tex"))

    sp = sub.add_parser("verify", help="compare the single-sum and chain-sum forms of the tail")
    sp.add_argument("--m", type=_positive("m"), required=True)
    sp.add_argument("--order", type=_nonneg("order"), default=DEFAULT_ORDER)
    sp.add_argument("--drop-chain", type=_chain, action="append", default=[],
                    help="omit this chain k_1,...,k_m from the chain sum (negative control)")
    fmt(sp, ("text", "json"))

    sp = sub.add_parser("stability", help="check that low coefficients freeze as the color grows")
    sp.add_argument("--m", type=_positive("m"), required=True)
    sp.add_argument("--nmax", type=_positive("nmax"), required=True)
    sp.add_argument("--series", choices=("psi", "g", "both"), default="both")
    fmt(sp, ("text", "json"))

    sp = sub.add_parser("pattern", help="run structure of the tail coefficients")
    sp.add_argument("--m", type=_positive("m"), required=True)
    sp.add_argument("--order", type=_nonneg("order"), default=DEFAULT_ORDER)
    fmt(sp, ("text", "json"))

    sp = sub.add_parser("oracle", help="evaluate a link diagram directly from the skein relations")
    sp.add_argument("--link", choices=("torus", "two-bridge", "unknot"), default="torus")
    sp.add_argument("--m", type=_positive("m"), default=1)
    sp.add_argument("--word", type=_word)
    sp.add_argument("--color", type=_positive("color"), required=True)
    sp.add_argument("--oracle-limit", type=_positive("oracle-limit"), default=None)
    sp.add_argument("--strategy", choices=("memo", "eager"), default="memo")
    sp.add_argument("--dump", action="store_true", help="write the expanded diagrams to standard error")
    fmt(sp, ("text", "json"))

    sp = sub.add_parser("cache", help="build or check the recoupling-table cache")
    sp.add_argument("--path", help=f"cache file (default: ${'SL3JONES_CACHE'} or {default_path().name})")
    sp.add_argument("--rebuild", action="store_true")
    sp.add_argument("--nmax", type=_nonneg("nmax"), default=6)
    fmt(sp, ("text", "json"))
    return p


def _check_order(order: int) -> None:
    if order > ORDER_CAP:
        raise UsageError(f"order {order} exceeds the hard cap {ORDER_CAP}")


def _load_cache(path) -> None:
    if path:
        load_tables(path)


def _value_record(cmd, params, value) -> OutputRecord:
    return OutputRecord(cmd, params, {"value": to_obj(value)}, serialize(value, "text"),
                        csv=serialize(value, "csv"))


def cmd_jones(a) -> OutputRecord:
    _load_cache(a.cache_path)
    inv = jones_two_bridge(a.word, a.color)
    return _value_record("jones", {"word": list(a.word.a), "color": a.color}, inv.value)


def cmd_torus(a) -> OutputRecord:
    _load_cache(a.cache_path)
    inv = torus_jones(a.n, a.m, a.method)
    return _value_record("torus", {"m": a.m, "n": a.n, "method": a.method}, inv.value)


def cmd_tail(a) -> OutputRecord:
    _check_order(a.order)
    fn = tail_psi if a.method == "psi" else tail_g
    s = fn(a.m, a.order).series
    rec = _value_record("tail", {"m": a.m, "order": a.order, "method": a.method}, s)
    rec.tex = serialize(s, "tex")
    return rec


def cmd_verify(a) -> OutputRecord:
    _check_order(a.order)
    for chain in a.drop_chain:
        if len(chain) != a.m:
            raise UsageError(f"dropped chain {chain} must have length m={a.m}")
    rep = verify_identity(a.m, a.order, exclude=a.drop_chain)
    payload = {"verdict": rep.holds}
    text = "true" if rep.holds else f"false: {rep.mismatch}"
    if rep.mismatch:
        payload["mismatch"] = {"degree": rep.mismatch.degree, "psi": str(rep.mismatch.left),
                               "g": str(rep.mismatch.right)}
    params = {"m": a.m, "order": a.order, "drop_chain": [list(c) for c in a.drop_chain]}
    return OutputRecord("verify", params, payload, text, EXIT_OK if rep.holds else EXIT_FALSE)


def cmd_stability(a) -> OutputRecord:
    which = ("psi", "g") if a.series == "both" else (a.series,)
    results = {w: stabilization_check(a.m, a.nmax, which=w) for w in which}
    ok = all(results.values())
    text = "\n".join(f"{w}: {'true' if v else 'false'}" for w, v in results.items())
    return OutputRecord("stability", {"m": a.m, "nmax": a.nmax, "series": a.series},
                        {"verdict": ok, "series": results}, text, EXIT_OK if ok else EXIT_FALSE)


def cmd_pattern(a) -> OutputRecord:
    _check_order(a.order)
    rep = pattern_analysis(a.m, a.order)
    lines = [
        "runs (nonzero, zero): " + " ".join(f"({x},{y})" for x, y in rep.runs),
        "conjectured blocks:   " + " ".join(f"({x},{y})" for x, y in rep.expected),
        f"verdict: {'consistent' if rep.verdict else 'inconsistent'} with the conjectured pattern",
    ]
    if rep.first_violation is not None:
        lines.append(f"first deviation at q^{rep.first_violation}")
    lines += rep.notes
    payload = {"verdict": rep.verdict, "runs": rep.runs, "expected": rep.expected,
               "first_violation": rep.first_violation, "notes": rep.notes}
    return OutputRecord("pattern", {"m": a.m, "order": a.order}, payload, "\n".join(lines),
                        EXIT_OK if rep.verdict else EXIT_FALSE)


def cmd_oracle(a) -> OutputRecord:
    from .skein_oracle import evaluate_closed, expand, torus_link_diagram, two_bridge_diagram, unknot_diagram
    from .websym import delta

    n = a.color
    if a.link == "torus":
        tangle = torus_link_diagram(a.m, n, a.oracle_limit)
        reference = psi_closed_form(n, a.m).value
        params = {"link": "torus", "m": a.m, "color": n}
    elif a.link == "two-bridge":
        if a.word is None:
            raise UsageError("--link two-bridge needs --word")
        tangle = two_bridge_diagram(a.word.a, n, a.oracle_limit)
        reference = jones_two_bridge(a.word, n).value
        params = {"link": "two-bridge", "word": list(a.word.a), "color": n}
    else:
        tangle = unknot_diagram(n)
        reference = None
        params = {"link": "unknot", "color": n}
    params["strategy"] = a.strategy
    terms = expand(tangle, a.oracle_limit)
    if a.dump:
        for k, (c, d) in enumerate(terms):
            print(f"# term {k} coefficient {c}", file=sys.stderr)
            print(d.dump(), file=sys.stderr)
    closed = RationalQ(evaluate_closed(terms, a.strategy))
    if reference is None:
        value = closed
    else:
        value = closed / delta(n, 0)
    value = value.to_laurent() if value.is_laurent() else value
    payload = {"value": to_obj(value)}
    lines = [serialize(value, "text")]
    status = EXIT_OK
    if reference is not None:
        agree = RationalQ(reference) == RationalQ(value)
        payload["agrees_with_formula"] = agree
        lines.append(f"agrees with formula: {'true' if agree else 'false'}")
        status = EXIT_OK if agree else EXIT_FALSE
    return OutputRecord("oracle", params, payload, "\n".join(lines), status)


def cmd_cache(a) -> OutputRecord:
    path = a.path or str(default_path())
    if a.rebuild or not os.path.exists(path):
        save_tables(path, a.nmax)
        action = "written"
    else:
        action = "validated"
    tables = load_tables(path)
    colors = sorted(tables)
    text = f"{action} {path}: colors {colors[0]}..{colors[-1]}" if colors else f"{action} {path}: empty"
    return OutputRecord("cache", {"path": path, "rebuild": a.rebuild, "nmax": a.nmax},
                        {"path": path, "action": action, "colors": colors}, text)


COMMANDS = {
    "jones": cmd_jones, "torus": cmd_torus, "tail": cmd_tail, "verify": cmd_verify,
    "stability": cmd_stability, "pattern": cmd_pattern, "oracle": cmd_oracle, "cache": cmd_cache,
}


def render(rec: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return rec.as_json()
    if fmt == "csv":
        if rec.csv is None:
            raise UsageError(f"{rec.command} has no CSV form")
        return rec.csv.rstrip("\n")
    if fmt == "tex":
        return rec.tex
    return rec.text


def dispatch(args: argparse.Namespace) -> tuple[OutputRecord, str]:
    t0 = time.perf_counter()
    rec = COMMANDS[args.command](args)
    rec.elapsed = time.perf_counter() - t0
    return rec, render(rec, getattr(args, "format", "text"))


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        rec, out = dispatch(args)
    except (UsageError, OracleLimitError) as exc:
        print(f"sl3jones: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotDivisibleError, MalformedDiagram, CacheError, AssertionError) as exc:
        print(f"sl3jones: internal failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"sl3jones: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out)
    return rec.status


if __name__ == "__main__":
    sys.exit(main())
