"""Finite-dimensional jet-space models of local rings.

A :class:`JetAlgebra` is the quotient of the power-series ring by an
m-primary ideal, realized by exact sparse Gaussian elimination on the jet
space of polynomials of total degree at most a truncation order T.  Rows
span the degree-<=T slice of the ideal; the pivot of each row is its
smallest monomial in ascending graded-lex order, so normal forms are
unique and runs are reproducible.

The m-primality certificate: if every standard (non-pivot) monomial has
total degree < T, then all monomials of some degree N <= T are reducible,
so the ideal contains m^N up to terms the truncation cannot see -- and
since T + 1 > N those terms lie in m * m^N, which pins m^N inside the
ideal of the complete local ring.  The computed colength is then exact.

Each row remembers an expression of itself as a combination of the ideal
generators, so ideal-membership witnesses (cofactors) fall out of the
same reduction with no extra linear solve.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import NotInIdeal, NotMPrimary, TruncationCapExceeded
from .poly import Monomial, Poly, grlex_key

TRUNCATION_CAP = 64


def monomials_of_degree(nvars: int, degree: int) -> List[Monomial]:
    """All exponent tuples of the given total degree, ascending graded-lex."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        mono = [0] * nvars
        for i in combo:
            mono[i] += 1
        out.append(tuple(mono))
    return sorted(out, key=grlex_key)


def monomials_up_to(nvars: int, degree: int) -> List[Monomial]:
    out: List[Monomial] = []
    for d in range(degree + 1):
        out.extend(monomials_of_degree(nvars, d))
    return out


class _Row:
    """A sparse jet-space row plus its expression in the ideal generators."""

    __slots__ = ("terms", "cofactors")

    def __init__(self, terms: Dict[Monomial, Fraction], cofactors: List[Dict[Monomial, Fraction]]):
        self.terms = terms
        self.cofactors = cofactors

    def pivot(self) -> Monomial:
        return min(self.terms, key=grlex_key)

    def scale(self, factor: Fraction) -> None:
        self.terms = {m: c * factor for m, c in self.terms.items()}
        self.cofactors = [
            {m: c * factor for m, c in cof.items()} for cof in self.cofactors
        ]

    def subtract(self, factor: Fraction, other: "_Row") -> None:
        for m, c in other.terms.items():
            new = self.terms.get(m, Fraction(0)) - factor * c
            if new == 0:
                self.terms.pop(m, None)
            else:
                self.terms[m] = new
        for mine, theirs in zip(self.cofactors, other.cofactors):
            for m, c in theirs.items():
                new = mine.get(m, Fraction(0)) - factor * c
                if new == 0:
                    mine.pop(m, None)
                else:
                    mine[m] = new


@dataclass(frozen=True)
class MembershipWitness:
    """Cofactors expressing a target in the ideal up to high-order terms.

    The defect ``target - sum(cofactor_i * generator_i)`` has every term of
    total degree strictly greater than ``order_verified``.
    """

    cofactors: Tuple[Poly, ...]
    order_verified: int


class JetAlgebra:
    """Quotient of the power-series ring by an m-primary ideal at order T."""

    def __init__(
        self,
        generators: Sequence[Poly],
        truncation_order: int,
        row_seed: Optional[int] = None,
    ):
        if not generators:
            raise ValueError("empty generator list")
        if truncation_order < 1:
            raise ValueError("truncation order must be at least 1")
        ambient = generators[0].vars
        for g in generators:
            if g.vars != ambient:
                raise ValueError("generators live in different ambient rings")
        self.ambient = ambient
        self.generators = tuple(generators)
        self.truncation_order = truncation_order
        self._rows: Dict[Monomial, _Row] = {}
        self._build(row_seed)
        self._certify()

    # -- construction ------------------------------------------------------

    def _build(self, row_seed: Optional[int]) -> None:
        T = self.truncation_order
        nvars = len(self.ambient)
        seeds: List[_Row] = []
        ngens = len(self.generators)
        for j, g in enumerate(self.generators):
            g_order = g.order()
            if g_order is None:
                continue  # zero generator spans nothing
            for mult in monomials_up_to(nvars, T - g_order):
                terms: Dict[Monomial, Fraction] = {}
                for m, c in g.terms.items():
                    prod = tuple(a + b for a, b in zip(m, mult))
                    if sum(prod) <= T:
                        terms[prod] = terms.get(prod, Fraction(0)) + c
                terms = {m: c for m, c in terms.items() if c != 0}
                if not terms:
                    continue
                cofactors: List[Dict[Monomial, Fraction]] = [
                    {} for _ in range(ngens)
                ]
                cofactors[j][mult] = Fraction(1)
                seeds.append(_Row(terms, cofactors))
        if row_seed is not None:
            random.Random(row_seed).shuffle(seeds)
        for row in seeds:
            self._insert(row)

    def _insert(self, row: _Row) -> None:
        while row.terms:
            pivot = row.pivot()
            existing = self._rows.get(pivot)
            if existing is None:
                row.scale(Fraction(1) / row.terms[pivot])
                self._rows[pivot] = row
                return
            row.subtract(row.terms[pivot], existing)

    def _certify(self) -> None:
        T = self.truncation_order
        nvars = len(self.ambient)
        standard = [
            m for m in monomials_up_to(nvars, T) if m not in self._rows
        ]
        top = max((sum(m) for m in standard), default=-1)
        if top >= T:
            raise NotMPrimary(T)
        self.basis: Tuple[Monomial, ...] = tuple(standard)
        self.primality_bound: int = top + 1

    # -- queries -----------------------------------------------------------

    def colength(self) -> int:
        return len(self.basis)

    def _reduce(self, p: Poly, track: bool):
        """Normal form of p; optionally the accumulated generator cofactors."""
        T = self.truncation_order
        work = dict(p.truncate(T).terms)
        cofactors: List[Dict[Monomial, Fraction]] = [
            {} for _ in self.generators
        ]
        normal: Dict[Monomial, Fraction] = {}
        while work:
            mono = min(work, key=grlex_key)
            coeff = work.pop(mono)
            row = self._rows.get(mono)
            if row is None:
                normal[mono] = coeff
                continue
            for m, c in row.terms.items():
                if m == mono:
                    continue
                new = work.get(m, Fraction(0)) - coeff * c
                if new == 0:
                    work.pop(m, None)
                else:
                    work[m] = new
            if track:
                for mine, theirs in zip(cofactors, row.cofactors):
                    for m, c in theirs.items():
                        new = mine.get(m, Fraction(0)) + coeff * c
                        if new == 0:
                            mine.pop(m, None)
                        else:
                            mine[m] = new
        return normal, cofactors

    def normal_form(self, p: Poly) -> List[Fraction]:
        """Coordinates of p's class over the standard-monomial basis."""
        if p.vars != self.ambient:
            raise ValueError("ambient mismatch")
        normal, _ = self._reduce(p, track=False)
        return [normal.get(m, Fraction(0)) for m in self.basis]

    def reduces_to_zero(self, p: Poly) -> bool:
        return all(c == 0 for c in self.normal_form(p))

    def membership_with_witness(self, p: Poly, order: int) -> MembershipWitness:
        """Cofactors with defect of order > ``order``; exact defect check."""
        if p.vars != self.ambient:
            raise ValueError("ambient mismatch")
        max_gen_degree = max(g.degree() or 0 for g in self.generators)
        if order > self.truncation_order - max_gen_degree:
            raise ValueError(
                f"order {order} exceeds certified range "
                f"{self.truncation_order - max_gen_degree}"
            )
        normal, cofactors = self._reduce(p, track=True)
        if normal:
            raise NotInIdeal(
                f"nonzero normal form on {sorted(normal, key=grlex_key)}"
            )
        polys = tuple(Poly(self.ambient, cof) for cof in cofactors)
        defect = p
        for cof, g in zip(polys, self.generators):
            defect = defect - cof * g
        defect_order = defect.order()
        if defect_order is not None and defect_order <= order:
            raise NotInIdeal(
                f"witness defect has order {defect_order} <= {order}"
            )
        return MembershipWitness(cofactors=polys, order_verified=order)


def default_truncation(generators: Sequence[Poly]) -> int:
    max_degree = max((g.degree() or 0) for g in generators)
    return 4 + 2 * max_degree


def build_jet_algebra(
    generators: Sequence[Poly],
    truncation_order: Optional[int] = None,
    row_seed: Optional[int] = None,
    cap: int = TRUNCATION_CAP,
) -> JetAlgebra:
    """Build at the requested (or default) order, doubling on failure.

    Doubles the truncation order each time m-primality cannot be certified,
    up to the hard cap; past the cap the failure is reported as such so the
    caller can distinguish runaway input from a plain bad document.
    """
    T = truncation_order if truncation_order is not None else default_truncation(generators)
    T = max(1, T)
    while True:
        try:
            return JetAlgebra(generators, T, row_seed=row_seed)
        except NotMPrimary:
            if T >= cap:
                raise TruncationCapExceeded(
                    f"no m-primality certificate up to truncation order {T}"
                )
            T = min(2 * T, cap)


def staircase_colength(generators: Sequence[Poly]) -> int:
    """Lattice points under the staircase of a monomial ideal.

    Independent combinatorial oracle for :meth:`JetAlgebra.colength`; only
    valid when every generator is a single monomial.  Counts monomials not
    divisible by any generator, scanning the box bounded by the pure powers.
    """
    monos = []
    for g in generators:
        if len(g.terms) != 1:
            raise ValueError("staircase count needs monomial generators")
        monos.append(next(iter(g.terms)))
    nvars = len(generators[0].vars)
    bounds = []
    for i in range(nvars):
        pure = [m[i] for m in monos if all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            raise ValueError("no pure power in some variable: infinite colength")
        bounds.append(min(pure))

    def divides(d: Monomial, m: Monomial) -> bool:
        return all(a <= b for a, b in zip(d, m))

    count = 0
    def scan(prefix: List[int], i: int) -> None:
        nonlocal count
        if i == nvars:
            mono = tuple(prefix)
            if not any(divides(d, mono) for d in monos):
                count += 1
            return
        for e in range(bounds[i]):
            scan(prefix + [e], i + 1)

    scan([], 0)
    return count
