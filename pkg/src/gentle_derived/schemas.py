"""JSON schemas (draft 2020-12) for the command-line ``--json`` outputs."""

from __future__ import annotations

_INT = {"type": "integer"}
_BOOL = {"type": "boolean"}
_STR = {"type": "string"}


def _obj(props: dict, required=None, extra: bool = False) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
        "additionalProperties": extra,
    }


GENTLE_REPORT = _obj(
    {
        "is_gentle": _BOOL,
        "violations": {
            "type": "array",
            "items": _obj(
                {
                    "condition": {"type": "integer", "minimum": 1, "maximum": 4},
                    "witness": _obj({"kind": {"enum": ["vertex", "arrow"]}, "id": _INT}),
                }
            ),
        },
        "connected": _BOOL,
        "cycle_count": _INT,
    }
)

CLOCK = _obj(
    {
        "cw_relations": _INT,
        "ccw_relations": _INT,
        "cw_degree_sum": _INT,
        "ccw_degree_sum": _INT,
        "d_plus": _INT,
        "d_minus": _INT,
        "clock": _BOOL,
        "graded_clock": _BOOL,
    }
)

ANALYZE = _obj(
    {
        "gentle": GENTLE_REPORT,
        "clock": {"oneOf": [CLOCK, {"type": "null"}]},
        "signed_cycle_degree": {"type": ["integer", "null"]},
        "finite_global_dimension": {"type": ["boolean", "null"]},
    }
)

NORMAL_FORM = _obj(
    {
        "normal_form": {"type": ["string", "null"], "pattern": r"^Gamma(Prime)?\(-?\d+(,-?\d+){1,2}\)$"},
        "supported": _BOOL,
        "report": {"type": ["object", "null"]},
    }
)

EQUIV = _obj({"left": _STR, "right": _STR, "derived_equivalent": _BOOL})

_COMPONENT = _obj(
    {"family": _STR, "shape": _STR, "count": {"type": ["integer", "null"], "minimum": 1}, "index_range": _STR}
)
_TAU_REL = _obj({"family": _STR, "tau_power": _INT, "sigma_power": _INT})

SUMMARY = _obj(
    {
        "category": _STR,
        "params": {"type": "object", "additionalProperties": _INT},
        "via": {"type": ["string", "null"]},
        "component_count": {"type": ["integer", "null"]},
        "components": {"type": "array", "items": _COMPONENT},
        "suspension": _obj({"description": _STR, "order": {"type": ["integer", "null"]}, "cyclic": _BOOL}),
        "tau_relations": {"type": "array", "items": _TAU_REL},
        "notes": {"type": "array", "items": _STR},
    }
)

_PQR = _obj({"p": _INT, "q": _INT, "r": _INT})

HOM = _obj(
    {
        "params": _PQR,
        "x": _STR,
        "y": _STR,
        "rows": {"type": "array", "items": _obj({"n": _INT, "dim": {"type": "integer", "minimum": 0}})},
    }
)

AR_WINDOW = _obj(
    {
        "nodes": {
            "type": "array",
            "items": _obj({"id": _STR, "label": _STR, "family": _STR, "copy": {"type": "integer", "minimum": 0}}),
        },
        "edges": {"type": "array", "items": _obj({"src": _STR, "dst": _STR, "kind": {"enum": ["mesh", "tau"]}})},
        "meshes": {
            "type": "array",
            "items": _obj(
                {
                    "end": _STR,
                    "tau": _STR,
                    "middle": {"type": "array", "items": _obj({"id": _STR, "multiplicity": _INT})},
                }
            ),
        },
        "meta": _obj({"params": _PQR, "theorem_refs": {"type": "array", "items": _STR}}, extra=True),
    },
    required=["nodes", "edges", "meta"],
)

VERIFY = _obj(
    {
        "params": _PQR,
        "samples": _INT,
        "seed": _INT,
        "tau_sigma": {"type": "array", "items": {"type": "object"}},
        "suspension": {"type": "array", "items": {"type": "object"}},
        "oracle": _obj({"pairs": _INT, "hom_agree": _INT, "ext_agree": _INT, "orbit_agree": _INT}),
        "ok": _BOOL,
    }
)

CONJECTURE = _obj(
    {
        "graded_clock": _BOOL,
        "d_plus": _INT,
        "d_minus": _INT,
        "normal_form": _STR,
        "normal_form_has_zero_r": _BOOL,
        "verdict": {"enum": ["agree", "disagree"]},
    }
)

SCHEMAS = {
    "analyze": ANALYZE,
    "normal-form": NORMAL_FORM,
    "equiv": EQUIV,
    "summary": SUMMARY,
    "hom": HOM,
    "ar-window": AR_WINDOW,
    "verify": VERIFY,
    "check-conjecture": CONJECTURE,
}
