"""Curve-document validation and construction.

A curve document is a JSON object with a genus, a label, and a list of
singularity documents of kind "plane" or "lci".  Validation is manual and
reports the path of the offending field; expression strings are parsed
under the declared variables so parse errors surface with positions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from .errors import ParseError, SchemaError
from .lci import LciPresentation
from .plane import Branch, PlaneSingularity
from .poly import BRANCH_PARAM_VAR, parse_branch, parse_poly

Sing = Union[PlaneSingularity, LciPresentation]


@dataclass(frozen=True)
class CurveDocument:
    genus: int
    label: str
    notes: str
    singularities: Tuple[Sing, ...]
    raw: str  # canonical JSON serialization of the validated source


def _require(cond: bool, message: str, path: str) -> None:
    if not cond:
        raise SchemaError(message, path)


def _get(doc: Dict[str, Any], key: str, kind, path: str, default=None, required=False):
    if key not in doc:
        _require(not required, f"missing required field {key!r}", path)
        return default
    value = doc[key]
    _require(isinstance(value, kind), f"field {key!r} has wrong type", f"{path}.{key}")
    return value


def _natural(doc: Dict[str, Any], key: str, path: str, required=True, default=None):
    value = _get(doc, key, int, path, required=required, default=default)
    if value is not None:
        _require(not isinstance(value, bool) and value >= 0,
                 f"field {key!r} must be a natural number", f"{path}.{key}")
    return value


def _parse_fraction(text: str, path: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {text!r}: {exc}", path)


def _parse_expr(source: Any, variables, path: str):
    _require(isinstance(source, str), "expression must be a string", path)
    try:
        return parse_poly(source, variables)
    except ParseError as exc:
        raise SchemaError(f"bad expression {source!r}: {exc}", path)


def _asserted(doc: Dict[str, Any], path: str) -> Tuple[Optional[int], Optional[int], str]:
    block = _get(doc, "asserted", dict, path)
    if block is None:
        return None, None, ""
    delta = _natural(block, "delta", f"{path}.asserted")
    r = _natural(block, "r", f"{path}.asserted")
    _require(r >= 1, "asserted r must be at least 1", f"{path}.asserted.r")
    note = _get(block, "note", str, f"{path}.asserted", default="")
    extra = set(block) - {"delta", "r", "note"}
    _require(not extra, f"unknown fields {sorted(extra)}", f"{path}.asserted")
    return delta, r, note


def _build_plane(doc: Dict[str, Any], path: str) -> PlaneSingularity:
    variables = _get(doc, "variables", list, path, required=True)
    _require(
        len(variables) == 2 and all(isinstance(v, str) for v in variables),
        "plane singularity needs exactly two variable names",
        f"{path}.variables",
    )
    f = _parse_expr(_get(doc, "f", str, path, required=True), variables, f"{path}.f")
    weights = None
    raw_weights = _get(doc, "weights", list, path)
    if raw_weights is not None:
        _require(len(raw_weights) == 2, "weights must be a pair", f"{path}.weights")
        weights = tuple(
            _parse_fraction(w, f"{path}.weights[{i}]") for i, w in enumerate(raw_weights)
        )
    branches: List[Branch] = []
    raw_branches = _get(doc, "branches", list, path, default=[])
    for i, bdoc in enumerate(raw_branches):
        bpath = f"{path}.branches[{i}]"
        _require(isinstance(bdoc, dict), "branch must be an object", bpath)
        images = _get(bdoc, "images", list, bpath, required=True)
        _require(len(images) == 2, "branch needs two images", f"{bpath}.images")
        for j, img in enumerate(images):
            _parse_expr(img, (BRANCH_PARAM_VAR,), f"{bpath}.images[{j}]")
        try:
            param = parse_branch(images)
        except ValueError as exc:
            raise SchemaError(str(exc), f"{bpath}.images")
        equation = None
        if "equation" in bdoc:
            equation = _parse_expr(bdoc["equation"], variables, f"{bpath}.equation")
        extra = set(bdoc) - {"images", "equation"}
        _require(not extra, f"unknown fields {sorted(extra)}", bpath)
        branches.append(Branch(param=param, equation=equation))
    delta, r, note = _asserted(doc, path)
    extra = set(doc) - {"kind", "f", "variables", "weights", "branches", "asserted", "label"}
    _require(not extra, f"unknown fields {sorted(extra)}", path)
    try:
        return PlaneSingularity(
            f=f,
            label=_get(doc, "label", str, path, default=""),
            weights=weights,
            branches=tuple(branches),
            asserted_delta=delta,
            asserted_r=r,
            asserted_note=note,
        )
    except ValueError as exc:
        raise SchemaError(str(exc), path)


def _build_lci(doc: Dict[str, Any], path: str) -> LciPresentation:
    variables = _get(doc, "variables", list, path, required=True)
    _require(
        len(variables) >= 2 and all(isinstance(v, str) for v in variables),
        "lci singularity needs at least two variable names",
        f"{path}.variables",
    )
    raw_equations = _get(doc, "equations", list, path, required=True)
    equations = tuple(
        _parse_expr(src, variables, f"{path}.equations[{i}]")
        for i, src in enumerate(raw_equations)
    )
    parametrization = None
    raw_param = _get(doc, "parametrization", list, path)
    if raw_param is not None:
        for j, img in enumerate(raw_param):
            _parse_expr(img, (BRANCH_PARAM_VAR,), f"{path}.parametrization[{j}]")
        _require(
            len(raw_param) == len(variables),
            "one image per variable required",
            f"{path}.parametrization",
        )
        try:
            parametrization = parse_branch(raw_param)
        except ValueError as exc:
            raise SchemaError(str(exc), f"{path}.parametrization")
    delta, r, note = _asserted(doc, path)
    extra = set(doc) - {
        "kind", "variables", "equations", "parametrization", "asserted", "label"
    }
    _require(not extra, f"unknown fields {sorted(extra)}", path)
    try:
        return LciPresentation(
            variables=tuple(variables),
            equations=equations,
            parametrization=parametrization,
            label=_get(doc, "label", str, path, default=""),
            asserted_delta=delta,
            asserted_r=r,
            asserted_note=note,
        )
    except ValueError as exc:
        raise SchemaError(str(exc), path)


def build_curve(doc: Any) -> CurveDocument:
    _require(isinstance(doc, dict), "curve document must be an object", "$")
    genus = _natural(doc, "genus", "$", required=True)
    label = _get(doc, "label", str, "$", default="")
    notes = _get(doc, "notes", str, "$", default="")
    raw_sings = _get(doc, "singularities", list, "$", default=[])
    extra = set(doc) - {"genus", "label", "notes", "singularities"}
    _require(not extra, f"unknown fields {sorted(extra)}", "$")
    sings: List[Sing] = []
    for i, sdoc in enumerate(raw_sings):
        path = f"$.singularities[{i}]"
        _require(isinstance(sdoc, dict), "singularity must be an object", path)
        kind = _get(sdoc, "kind", str, path, required=True)
        if kind == "plane":
            sings.append(_build_plane(sdoc, path))
        elif kind == "lci":
            sings.append(_build_lci(sdoc, path))
        else:
            raise SchemaError(f"unknown kind {kind!r}", f"{path}.kind")
    return CurveDocument(
        genus=genus,
        label=label,
        notes=notes,
        singularities=tuple(sings),
        raw=json.dumps(doc, sort_keys=True, indent=2),
    )


def load_curve(path: str) -> CurveDocument:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise SchemaError(f"cannot read file: {exc}", "$")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}", "$")
    return build_curve(doc)


def serialize_curve(doc: CurveDocument) -> str:
    """Canonical re-serialization of the validated source document."""
    return doc.raw
