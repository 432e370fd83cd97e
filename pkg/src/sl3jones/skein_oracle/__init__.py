"""Brute-force evaluation of closed A2 web diagrams from the skein relations."""
from .diagram import MalformedDiagram, WebDiagram, WebSum
from .reduce import (
    Evaluator,
    canonical_form,
    clear_memo,
    evaluate_diagram,
    reduce_closed,
    resolve_crossings,
    resolve_one,
)
from .tangle import (
    ORACLE_LIMIT,
    ClaspSpec,
    OracleLimitError,
    Tangle,
    build,
    cable_cross,
    clasp_insert,
    clasp_terms,
    evaluate_closed,
    expand,
    theta_diagram,
    torus_link_diagram,
    two_bridge_diagram,
    two_cable_clasp_closure,
    unknot_diagram,
)

__all__ = [
    "ClaspSpec", "Evaluator", "MalformedDiagram", "ORACLE_LIMIT", "OracleLimitError", "Tangle",
    "WebDiagram", "WebSum", "build", "cable_cross", "canonical_form", "clasp_insert", "clasp_terms",
    "clear_memo", "evaluate_closed", "evaluate_diagram", "expand", "reduce_closed",
    "resolve_crossings", "resolve_one", "theta_diagram", "torus_link_diagram", "two_bridge_diagram",
    "two_cable_clasp_closure", "unknot_diagram",
]
