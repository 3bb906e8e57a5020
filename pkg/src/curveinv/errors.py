"""Shared exception types.

The CLI maps these onto exit codes: input problems (parse/schema) exit 2,
truncation-cap and non-isolated failures exit 3, failed invariant checks
exit 1.
"""


class CurveInvError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CurveInvError):
    """Expression text does not conform to the input grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UndeclaredVariable(ParseError):
    pass


class SchemaError(CurveInvError):
    """Curve document violates the input schema; carries the field path."""

    def __init__(self, message: str, path: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class NotMPrimary(CurveInvError):
    """No truncation degree at which every monomial slice is reducible."""

    def __init__(self, truncation: int):
        super().__init__(
            f"ideal not certified m-primary at truncation order {truncation}"
        )
        self.truncation = truncation


class TruncationCapExceeded(CurveInvError):
    """Doubling the jet truncation hit the hard cap without a certificate."""


class NonIsolated(CurveInvError):
    """Jacobian-type ideal failed m-primality at the truncation cap."""


class NotInIdeal(CurveInvError):
    """Membership witness requested for an element outside the ideal."""


class WitnessOrderInsufficient(CurveInvError):
    """Cofactor witness class changed under the order+2 stability re-check."""


class MissingWeights(CurveInvError):
    """Weighted-homogeneous code path invoked without a weight system."""


class DegenerateBranch(CurveInvError):
    """All parametrization images vanish to the working order."""


class NoConductor(CurveInvError):
    """Value-semigroup conductor not found below the working order."""


class NotTransverseAtOrder(CurveInvError):
    """Substituted equation vanishes identically to the working order."""


class MilnorMismatch(CurveInvError):
    """mu != 2*delta - r + 1: bad branch input or insufficient order."""


class MissingBranchEquation(CurveInvError):
    """Pairwise intersection numbers need per-branch equations."""


class NonMinimalPresentation(CurveInvError):
    """Some equation of an lci presentation has a nonzero linear part."""


class PlanarNoObstruction(CurveInvError):
    """Obstruction requested for a two-variable (planar) presentation."""


class MissingBranchData(CurveInvError):
    """Global delta/r sums need branch data that was not supplied."""


class UnanalyzedSingularity(CurveInvError):
    """Verdict requested before every singularity was analyzed."""
