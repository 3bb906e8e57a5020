"""Built-in corpus: the singularity zoo and the curve-model collection.

All entries are plain document dictionaries in the input schema, so the
corpus doubles as schema round-trip material.  Sign conventions on some
equations are chosen to make branch parametrizations rational; Milnor
and Tjurina numbers do not depend on these signs.
"""

from __future__ import annotations

from typing import Dict, List

# ---------------------------------------------------------------------------
# Singularity zoo (quick-analysis rows; no branch data needed)
# ---------------------------------------------------------------------------


def _plane(label: str, f: str, **extra) -> Dict:
    doc = {"kind": "plane", "label": label, "f": f, "variables": ["u", "v"]}
    doc.update(extra)
    return doc


def zoo() -> List[Dict]:
    entries = []
    for n in range(1, 11):
        entries.append(_plane(f"A{n}", f"u^2+v^{n + 1}"))
    for n in range(4, 11):
        entries.append(_plane(f"D{n}", f"u^2*v+v^{n - 1}"))
    entries.append(_plane("E6", "u^3+v^4"))
    entries.append(_plane("E7", "u^3+u*v^3"))
    entries.append(_plane("E8", "u^3+v^5"))
    entries.append(_plane("nonQH-quintic", "u^5+v^5+u^3*v^3"))
    return entries


# A non-planar germ that is not a complete intersection: its local ring
# needs three equations in three variables, one more than a curve germ
# complete intersection allows.  Kept as classification metadata only.
NON_LCI_EXAMPLE = {
    "label": "t345-monomial-curve",
    "parametrization": ["t^3", "t^4", "t^5"],
    "plane": False,
    "lci": False,
    "note": "embedding dimension 3 but not a complete intersection",
}


# ---------------------------------------------------------------------------
# Curve models
# ---------------------------------------------------------------------------

NODE = _plane(
    "node",
    "u*v",
    weights=["1/2", "1/2"],
    branches=[
        {"images": ["t", "0"], "equation": "v"},
        {"images": ["0", "t"], "equation": "u"},
    ],
)

CUSP = _plane(
    "cusp",
    "u^2-v^3",
    branches=[{"images": ["t^3", "t^2"]}],
)

TACNODE = _plane(
    "tacnode",
    "u^2-v^4",
    branches=[
        {"images": ["t^2", "t"], "equation": "u-v^2"},
        {"images": ["-1*t^2", "t"], "equation": "u+v^2"},
    ],
)

A4_GERM = _plane(
    "a4-germ",
    "u^2-v^5",
    branches=[{"images": ["t^5", "t^2"]}],
)

E8_GERM = _plane(
    "e8-germ",
    "u^3-v^5",
    branches=[{"images": ["t^5", "t^3"]}],
)

NONQH_GERM = _plane(
    "nonqh-quintic",
    "u^5+v^5+u^3*v^3",
    asserted={
        "delta": 10,
        "r": 5,
        "note": (
            "five smooth branches with distinct tangent directions (the "
            "degree-five leading form splits into distinct linear factors); "
            "four branches are irrational, so delta and r are supplied, "
            "not computed"
        ),
    },
)

T469_GERM = {
    "kind": "lci",
    "label": "t469-germ",
    "variables": ["x", "y", "z"],
    "equations": ["y^2-x^3", "z^2-y^3"],
    "parametrization": ["t^4", "t^6", "t^9"],
}

FOURSPACE_GERM = {
    "kind": "lci",
    "label": "fourspace-germ",
    "variables": ["x", "y", "z", "w"],
    "equations": ["y^2-x^3", "z^2-y^3", "w^2-z^3"],
    "parametrization": ["t^8", "t^12", "t^18", "t^27"],
}


def curve_models() -> List[Dict]:
    return [
        {
            "label": "nodal-rational",
            "genus": 0,
            "singularities": [NODE],
            "notes": "rational curve with one node",
        },
        {
            "label": "cuspidal-cubic",
            "genus": 0,
            "singularities": [CUSP],
            "notes": "rational curve with one cusp",
        },
        {
            "label": "tacnodal-rational",
            "genus": 0,
            "singularities": [TACNODE],
            "notes": "rational curve with one tacnode",
        },
        {
            "label": "a4-rational",
            "genus": 0,
            "singularities": [A4_GERM],
            "notes": "rational curve with one higher cusp",
        },
        {
            "label": "e8-rational",
            "genus": 0,
            "singularities": [E8_GERM],
            "notes": "rational curve with one exceptional unimodal-free cusp",
        },
        {
            "label": "smooth-genus-2",
            "genus": 2,
            "singularities": [],
            "notes": "smooth model; classical Hodge square",
        },
        {
            "label": "elliptic-smooth",
            "genus": 1,
            "singularities": [],
            "notes": "smooth genus-one model",
        },
        {
            "label": "two-sing-genus-1",
            "genus": 1,
            "singularities": [NODE, CUSP],
            "notes": "genus-one normalization with a node and a cusp",
        },
        {
            "label": "nonqh-quintic-model",
            "genus": 0,
            "singularities": [NONQH_GERM],
            "notes": "one plane singularity with tau < mu",
        },
        {
            "label": "nonplanar-t469",
            "genus": 0,
            "singularities": [T469_GERM],
            "notes": "one non-planar complete-intersection germ",
        },
        {
            "label": "fourspace-ci",
            "genus": 0,
            "singularities": [FOURSPACE_GERM],
            "notes": "embedding dimension four complete-intersection germ",
        },
        {
            "label": "mixed-node-t469",
            "genus": 0,
            "singularities": [NODE, T469_GERM],
            "notes": "planar and non-planar singularities on one model",
        },
    ]
