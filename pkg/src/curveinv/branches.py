"""Delta invariants and branch counts from parametrizations.

A branch parametrization generates a subalgebra of the power-series ring
in t; the t-orders attained by that subalgebra form the value semigroup,
computed here by exact echelon reduction of truncated monomial products
of the image series (pivot = lowest t-order).  The gap count below the
conductor is the one-branch delta; multibranch delta adds pairwise
intersection multiplicities, which need a defining equation per branch.
Milnor's formula mu = 2*delta - r + 1 is asserted against the
independently computed mu as the end-to-end cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Dict, List, Optional, Set, Tuple

from .errors import (
    DegenerateBranch,
    MilnorMismatch,
    MissingBranchEquation,
    NoConductor,
    NotTransverseAtOrder,
    SchemaError,
)
from .plane import Branch, PlaneSingularity
from .poly import BRANCH_PARAM_VAR, BranchParam, Poly

WORKING_ORDER_CAP = 4096


def _series_orders(images: Tuple[Poly, ...], order: int) -> Set[int]:
    """t-orders attained by the subalgebra generated by the images."""
    live = [(i, img, img.order()) for i, img in enumerate(images) if not img.is_zero()]
    if not live or all(o > order for _, _, o in live):
        raise DegenerateBranch(
            f"all images vanish to working order {order}"
        )
    # Enumerate monomial products x1^a1 * ... with sum(ai * ord_i) <= order.
    exponent_ranges = [range(order // o + 1) for _, _, o in live]
    rows: Dict[int, Dict[int, Fraction]] = {}
    one = Poly.const((BRANCH_PARAM_VAR,), 1)
    for exponents in iter_product(*exponent_ranges):
        if sum(e * o for e, (_, _, o) in zip(exponents, live)) > order:
            continue
        prod = one
        for e, (_, img, _) in zip(exponents, live):
            if e:
                prod = (prod * img ** e).truncate(order)
        terms = {m[0]: c for m, c in prod.terms.items()}
        # echelon insertion with pivot = lowest order
        while terms:
            pivot = min(terms)
            existing = rows.get(pivot)
            if existing is None:
                inv = Fraction(1) / terms[pivot]
                rows[pivot] = {k: c * inv for k, c in terms.items()}
                break
            factor = terms[pivot]
            for k, c in existing.items():
                new = terms.get(k, Fraction(0)) - factor * c
                if new == 0:
                    terms.pop(k, None)
                else:
                    terms[k] = new
    return set(rows)


def branch_semigroup(b: BranchParam, order: int) -> Set[int]:
    """Value semigroup of the branch, intersected with [0, order]."""
    return _series_orders(b.images, order)


def _conductor(values: Set[int], order: int) -> int:
    """Smallest c with a full run [c, c + s_min) of values; else NoConductor."""
    nonzero = sorted(v for v in values if v > 0)
    if not nonzero:
        raise NoConductor(f"no nonzero semigroup value up to {order}")
    s_min = nonzero[0]
    for c in range(0, order - s_min + 2):
        if all(c + i in values for i in range(s_min)):
            return c
    raise NoConductor(f"no run of {s_min} consecutive values up to {order}")


def delta_one_branch(b: BranchParam, order: int) -> int:
    """Number of semigroup gaps below the conductor."""
    values = branch_semigroup(b, order)
    c = _conductor(values, order)
    return sum(1 for n in range(c) if n not in values)


def default_working_order(branches: Tuple[Branch, ...]) -> int:
    top = 1
    for br in branches:
        for img in br.param.images:
            top = max(top, img.degree() or 0)
    return 8 * top


def _with_retry(func, order: int):
    """Run func(order), doubling the order on NoConductor up to the cap."""
    while True:
        try:
            return func(order)
        except NoConductor:
            if order >= WORKING_ORDER_CAP:
                raise
            order = min(2 * order, WORKING_ORDER_CAP)


def intersection_multiplicity(f_other: Poly, b: BranchParam, order: int) -> int:
    """t-order of the other equation pulled back along the branch."""
    composed = f_other.substitute(b.as_map(f_other.vars), truncation=order)
    o = composed.order()
    if o is None:
        raise NotTransverseAtOrder(
            f"substitution vanishes to working order {order}"
        )
    return o


@dataclass(frozen=True)
class DeltaReport:
    delta: int
    r: int
    per_branch_delta: Tuple[int, ...]
    pairwise_intersections: Tuple[Tuple[int, ...], ...]
    working_order: int


def delta_report(
    s: PlaneSingularity,
    mu: int,
    working_order: Optional[int] = None,
) -> DeltaReport:
    """Assemble delta and r from branch data and check Milnor's formula."""
    if not s.branches:
        raise SchemaError("no branch data supplied", "branches")
    order = working_order if working_order is not None else default_working_order(s.branches)
    r = len(s.branches)
    for i, br in enumerate(s.branches):
        composed = s.f.substitute(br.param.as_map(s.f.vars), truncation=order)
        if not composed.is_zero():
            raise SchemaError(
                f"branch does not annihilate the equation (order "
                f"{composed.order()} term survives)",
                f"branches[{i}]",
            )
    per_branch: List[int] = []
    for br in s.branches:
        per_branch.append(_with_retry(lambda o, b=br: delta_one_branch(b.param, o), order))
    pairwise = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            eq = s.branches[i].equation
            if eq is None:
                raise MissingBranchEquation(
                    f"branch {i} has no equation; needed for pairwise "
                    "intersection numbers"
                )
            m = intersection_multiplicity(eq, s.branches[j].param, order)
            pairwise[i][j] = pairwise[j][i] = m
    delta = sum(per_branch) + sum(
        pairwise[i][j] for i in range(r) for j in range(i + 1, r)
    )
    if mu != 2 * delta - r + 1:
        raise MilnorMismatch(
            f"mu={mu} but 2*delta - r + 1 = {2 * delta - r + 1} "
            f"(delta={delta}, r={r})"
        )
    return DeltaReport(
        delta=delta,
        r=r,
        per_branch_delta=tuple(per_branch),
        pairwise_intersections=tuple(tuple(row) for row in pairwise),
        working_order=order,
    )
