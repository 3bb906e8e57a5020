"""Exact sparse multivariate polynomials over the rationals.

A polynomial carries an ordered tuple of variable names and a map from
exponent tuples to nonzero Fraction coefficients.  The same object doubles
as a truncated power series: ``truncate`` chops every term above a total
degree, and ``order`` reports the minimal total degree of a term.

The module also houses the expression parser (recursive descent over the
fixed input grammar), canonical printing in descending graded-lex order,
branch parametrizations, and exact weight-system feasibility for two
variables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import ParseError, UndeclaredVariable

Monomial = tuple  # tuple[int, ...]; one exponent per ambient variable
Scalar = Union[int, Fraction]


def grlex_key(mono: Monomial):
    """Sort key realizing graded lexicographic order (ascending)."""
    return (sum(mono), mono)


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, Scalar]):
        object.__setattr__(self, "vars", tuple(variables))
        clean = {}
        n = len(self.vars)
        for mono, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            mono = tuple(int(e) for e in mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono} for variables {self.vars}")
            clean[mono] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Poly":
        return cls(variables, {})

    @classmethod
    def const(cls, variables: Sequence[str], value: Scalar) -> "Poly":
        return cls(variables, {(0,) * len(tuple(variables)): Fraction(value)})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "Poly":
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        mono = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {mono: 1})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def order(self) -> Optional[int]:
        """Minimal total degree of a term, or None for the zero polynomial."""
        if not self.terms:
            return None
        return min(sum(m) for m in self.terms)

    def degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def coeff(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * len(self.vars))

    def linear_part(self) -> "Poly":
        return Poly(self.vars, {m: c for m, c in self.terms.items() if sum(m) == 1})

    def support(self):
        return sorted(self.terms, key=grlex_key)

    def _check(self, other: "Poly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly(self.vars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(self.vars, out)

    def scale(self, value: Scalar) -> "Poly":
        value = Fraction(value)
        return Poly(self.vars, {m: c * value for m, c in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def truncate(self, max_degree: int) -> "Poly":
        return Poly(
            self.vars, {m: c for m, c in self.terms.items() if sum(m) <= max_degree}
        )

    def diff(self, var: str) -> "Poly":
        if var not in self.vars:
            raise ValueError(f"unknown variable {var!r}")
        i = self.vars.index(var)
        out: dict = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            dm = m[:i] + (m[i] - 1,) + m[i + 1 :]
            out[dm] = out.get(dm, Fraction(0)) + c * m[i]
        return Poly(self.vars, out)

    def substitute(
        self,
        images: Mapping[str, "Poly"],
        truncation: Optional[int] = None,
    ) -> "Poly":
        """Compose with one image polynomial per ambient variable."""
        missing = [v for v in self.vars if v not in images]
        if missing:
            raise ValueError(f"no image supplied for {missing}")
        target_vars = None
        for img in images.values():
            if target_vars is None:
                target_vars = img.vars
            elif img.vars != target_vars:
                raise ValueError("images live in different ambient rings")
        assert target_vars is not None
        result = Poly.zero(target_vars)
        for m, c in self.terms.items():
            piece = Poly.const(target_vars, c)
            for var, e in zip(self.vars, m):
                if e:
                    piece = piece * (images[var] ** e)
                    if truncation is not None:
                        piece = piece.truncate(truncation)
            result = result + piece
        if truncation is not None:
            result = result.truncate(truncation)
        return result

    # -- comparison / printing --------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _format_monomial(self, mono: Monomial) -> str:
        factors = []
        for var, e in zip(self.vars, mono):
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{e}")
        return "*".join(factors)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=grlex_key, reverse=True):
            coeff = self.terms[mono]
            mstr = self._format_monomial(mono)
            mag = abs(coeff)
            if not mstr:
                body = str(mag)
            elif mag == 1:
                body = mstr
            else:
                body = f"{mag}*{mstr}"
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self.vars!r}, {self!s})"


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^/()]))")


def _tokenize(source: str):
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if not m or m.end() == m.start():
            stripped = source[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(source) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", bad_at)
        if m.group(1) is not None:
            tokens.append(("INT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("NAME", m.group(2), m.start(2)))
        else:
            tokens.append(("OP", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("END", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, source: str, variables: Sequence[str]):
        self.source = source
        self.vars = tuple(variables)
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.next()
        if kind != "OP" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self) -> Poly:
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "END":
            raise ParseError(f"unexpected token {val!r}", pos)
        return result

    def expr(self) -> Poly:
        if self.peek()[:2] == ("OP", "-"):
            self.next()
            acc = -self.term()
        else:
            acc = self.term()
        while self.peek()[0] == "OP" and self.peek()[1] in "+-":
            _, op, _ = self.next()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.peek()[:2] == ("OP", "*"):
            self.next()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.base()
        if self.peek()[:2] == ("OP", "^"):
            self.next()
            kind, val, pos = self.next()
            if kind != "INT":
                raise ParseError("exponent is not a natural number", pos)
            return base ** int(val)
        return base

    def base(self) -> Poly:
        kind, val, pos = self.next()
        if kind == "INT":
            num = int(val)
            if self.peek()[:2] == ("OP", "/"):
                self.next()
                kind2, val2, pos2 = self.next()
                if kind2 != "INT" or int(val2) == 0:
                    raise ParseError("denominator must be a positive integer", pos2)
                return Poly.const(self.vars, Fraction(num, int(val2)))
            return Poly.const(self.vars, num)
        if kind == "NAME":
            if val not in self.vars:
                raise UndeclaredVariable(f"undeclared variable {val!r}", pos)
            return Poly.variable(self.vars, val)
        if kind == "OP" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {val!r}" if val else "unexpected end of input", pos)


def parse_poly(source: str, variables: Sequence[str]) -> Poly:
    """Parse an expression over the declared variables.

    Grammar: sums of products of rationals, variables, and parenthesized
    subexpressions with natural-number exponents; no implicit
    multiplication; a single unary minus is allowed at the head of a term.
    """
    return _Parser(source, variables).parse()


# ---------------------------------------------------------------------------
# Branch parametrizations
# ---------------------------------------------------------------------------

BRANCH_PARAM_VAR = "t"


@dataclass(frozen=True)
class BranchParam:
    """One univariate image polynomial (in t) per ambient variable."""

    images: tuple

    def __post_init__(self):
        if not self.images:
            raise ValueError("empty parametrization")
        for img in self.images:
            if img.vars != (BRANCH_PARAM_VAR,):
                raise ValueError("branch images must be univariate in t")
            if img.constant_term() != 0:
                raise ValueError("branch images must have zero constant term")
        if all(img.is_zero() for img in self.images):
            raise ValueError("all branch images are zero")

    def as_map(self, variables: Sequence[str]) -> dict:
        variables = tuple(variables)
        if len(variables) != len(self.images):
            raise ValueError(
                f"{len(self.images)} images for {len(variables)} variables"
            )
        return dict(zip(variables, self.images))


def parse_branch(images: Iterable[str]) -> BranchParam:
    return BranchParam(tuple(parse_poly(s, (BRANCH_PARAM_VAR,)) for s in images))


# ---------------------------------------------------------------------------
# Weight feasibility (two variables)
# ---------------------------------------------------------------------------


def weight_feasibility(f: Poly):
    """Positive rational weights (w1, w2) with a*w1 + b*w2 = 1 on the support.

    Returns None when the linear system is infeasible over the positive
    rationals.  When the support does not pin the weights down, the
    tie-break minimizes |w1 - w2| and then w1, which lands on the symmetric
    point of the feasible segment.
    """
    if len(f.vars) != 2:
        raise ValueError("weight feasibility is defined for two variables")
    if f.is_zero():
        raise ValueError("zero polynomial has no weight system")
    rows = sorted(set(f.terms), key=grlex_key)
    if len(rows) == 1:
        a, b = rows[0]
        if a + b == 0:
            return None  # constant term: 0 = 1 infeasible
        w = Fraction(1, a + b)
        return (w, w)
    # Two or more distinct support monomials: either some pair is linearly
    # independent (unique candidate) or two distinct rows are proportional,
    # which contradicts equal right-hand sides.
    first = rows[0]
    for other in rows[1:]:
        det = first[0] * other[1] - first[1] * other[0]
        if det != 0:
            a1, b1 = first
            a2, b2 = other
            w1 = Fraction(b2 - b1, det)
            w2 = Fraction(a1 - a2, det)
            if w1 <= 0 or w2 <= 0:
                return None
            if any(a * w1 + b * w2 != 1 for a, b in rows):
                return None
            _verify_euler(f, w1, w2)
            return (w1, w2)
    return None  # all rows proportional but distinct: inconsistent


def _verify_euler(f: Poly, w1: Fraction, w2: Fraction):
    u, v = f.vars
    lhs = (
        Poly.variable(f.vars, u) * f.diff(u)
    ).scale(w1) + (Poly.variable(f.vars, v) * f.diff(v)).scale(w2)
    if lhs != f:
        raise AssertionError("weight system fails the exact Euler relation")


def euler_relation_holds(f: Poly, w1: Scalar, w2: Scalar) -> bool:
    """Exact check of f = w1*u*f_u + w2*v*f_v."""
    u, v = f.vars
    lhs = (
        Poly.variable(f.vars, u) * f.diff(u)
    ).scale(Fraction(w1)) + (Poly.variable(f.vars, v) * f.diff(v)).scale(Fraction(w2))
    return lhs == f
