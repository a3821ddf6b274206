"""JSON Schemas (draft 2020-12) for the ``--json`` output of each subcommand."""

_str_list = {"type": "array", "items": {"type": "string"}}
_int_list = {"type": "array", "items": {"type": "integer"}}
_sign = {"enum": ["+", "-"]}


def _obj(props: dict, required=None) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
        "additionalProperties": False,
    }


_block = _obj({"vertices": _int_list, "edges": _int_list, "balanced": {"type": "boolean"}})
_balance = {
    "balanced": {"type": "boolean"},
    "marking": {"anyOf": [{"type": "null"}, {"type": "array", "items": _sign}]},
    "witness_circle": {"type": ["string", "null"]},
}
_circle = _obj({"cycle": {"type": "string"}, "edges": _int_list, "length": {"type": "integer", "minimum": 3}, "sign": _sign})
_profile = _obj(
    {
        "subject": {"type": "string"},
        "kind": {"enum": ["edge", "vertex"]},
        "flags": _obj({k: {"type": "boolean"} for k in (
            "in_negative", "in_positive", "unique_negative", "unique_positive", "only_negative", "only_positive")}),
        "structural_in_negative": {"type": "boolean"},
        "witnesses": _obj({"negative": _str_list, "positive": _str_list}),
    }
)
_report = _obj(
    {
        "conjecture": {"type": "string"},
        "instance": {"type": "string"},
        "applicable": {"type": "boolean"},
        "oracle_set": _str_list,
        "predicted_set": _str_list,
        "agrees": {"type": "boolean"},
        "counterexample": {"type": ["string", "null"]},
        "metadata": {"type": "object"},
    }
)
_frustration = {
    "index": {"type": "integer", "minimum": 0},
    "number": {"type": "integer", "minimum": 0},
    "edge_witness": _str_list,
    "vertex_witness": _int_list,
    "switching": _int_list,
}
_bounds = _obj(
    {
        "vertex_packing_negative": {"type": "integer"},
        "frustration_number": {"type": "integer"},
        "vertex_equality": {"type": "boolean"},
        "edge_packing_negative": {"type": "integer"},
        "frustration_index": {"type": "integer"},
        "edge_equality": {"type": "boolean"},
        "vertex_packing_positive": {"type": "integer"},
        "edge_packing_positive": {"type": "integer"},
        "cover_minima": {"type": "object", "additionalProperties": {"type": ["integer", "null"]}},
    }
)
_survey = {
    "hamiltonian": {"type": "boolean"},
    "negative_count": {"type": "integer", "minimum": 0},
    "positive_count": {"type": "integer", "minimum": 0},
    "classification": {"enum": ["none", "negative-only", "positive-only", "both"]},
    "unbalanced": {"type": "boolean"},
    "exception": {"type": "boolean"},
}
_classes = {"enum": ["disconnected", "separable", "2-separable", "3-connected-or-more"]}
_class_map = _obj({k: {"type": ["string", "null"]} for k in _classes["enum"]})
_bridge = _obj({"attachments": _int_list, "internal": _int_list, "edges": _int_list})

SCHEMAS = {
    "balance": _obj({**_balance, "balancing_edges": _str_list, "balancing_vertices": _int_list}),
    "blocks": _obj({**_balance, "blocks": {"type": "array", "items": _block}, "cut_vertices": _int_list, "isthmi": _int_list}),
    "circles": _obj({"count": {"type": "integer"}, "circles": {"type": "array", "items": _circle}}),
    "vector": _obj({"lengths": _int_list, "vector": _int_list}),
    "realize": _obj(
        {
            "feasible": {"type": "boolean"},
            "signature": {"type": ["string", "null"]},
            "theta": _obj({"holds": {"type": "boolean"}, "violating_theta": {"anyOf": [{"type": "null"}, _str_list]}}),
        }
    ),
    "profile": {
        "oneOf": [
            _obj({"profiles": {"type": "array", "items": _profile}}),
            _obj({"pair": _str_list, "want": _sign, "circle": {"type": ["string", "null"]}}),
        ]
    },
    "frustration": _obj({**_frustration, "bounds": _bounds}, required=list(_frustration)),
    "pack": _obj({"disjoint": {"enum": ["vertex", "edge"]}, "sign": _sign, "size": {"type": "integer"}, "circles": _str_list}),
    "cover": _obj(
        {
            "target": {"enum": ["vertices", "edges"]},
            "sign": _sign,
            "feasible": {"type": "boolean"},
            "size": {"type": ["integer", "null"]},
            "circles": _str_list,
            "infeasible_subjects": {"type": "array", "items": {"type": ["integer", "string"]}},
        }
    ),
    "decompose": _obj(
        {
            "sign": _sign,
            "feasible": {"type": "boolean"},
            "status": {"enum": ["feasible", "infeasible", "undecided"]},
            "parts": _str_list,
            "obstruction": {"enum": [None, "odd-degree vertex", "no-circle-partition", "search-exhausted"]},
            "detail": {"type": "object"},
        }
    ),
    "census": _obj(
        {
            "graph": {"type": "string"},
            "class_count": {"type": "integer", "minimum": 1},
            "spectra": {"type": "object", "additionalProperties": _int_list},
            "spectrum_witnesses": {"type": "object", "additionalProperties": {"type": "object", "additionalProperties": {"type": "string"}}},
            "vector_set": {"type": "array", "items": _int_list},
            "vector_witnesses": {"type": "array", "items": _obj({"vector": _int_list, "class": {"type": "string"}})},
            "affine_dimension": {"type": "integer", "minimum": 0},
        }
    ),
    "survey": _obj(_survey),
    "bridges": _obj({"circle": {"type": "string"}, "chords": _str_list, "bridges": {"type": "array", "items": _bridge}}),
    "removal": {
        "oneOf": [
            _obj(
                {
                    "circle": {"type": "string"},
                    "sign": _sign,
                    "edge_removal": _classes,
                    "vertex_removal": _classes,
                    "edge_residue_connectivity": {"type": "integer"},
                    "vertex_residue_connectivity": {"type": "integer"},
                    "metadata": {"type": "object"},
                }
            ),
            _obj({"sign": {"enum": ["+", "-", None]}, "edge_removal": _class_map, "vertex_removal": _class_map, "metadata": {"type": "object"}}),
        ]
    },
    "conjectures": _obj({"reports": {"type": "array", "items": _report}}),
    "sweep": _obj(
        {
            "instances": {"type": "integer"},
            "disagreements": {"type": "object", "additionalProperties": {"type": "integer"}},
            "first_counterexamples": {"type": "object"},
            "s1_exceptions": {"type": "integer"},
        }
    ),
    "error": _obj({"error": {"type": "string"}}),
}

for _s in SCHEMAS.values():
    _s.setdefault("$schema", "https://json-schema.org/draft/2020-12/schema")
