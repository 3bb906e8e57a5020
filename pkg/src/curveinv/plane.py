"""Local analysis of isolated plane curve singularities.

For an equation f in two variables this module computes the Milnor and
Tjurina numbers as jet-space colengths, the kernel and cokernel of
multiplication by f on the Milnor algebra, and the tail differential in
two independent ways: a general cofactor-witness algorithm valid for any
isolated f, and a diagonal scalar formula valid under a verified weight
system.  The two must agree entry-by-entry whenever both apply, which is
the main internal cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .errors import (
    MissingWeights,
    NonIsolated,
    TruncationCapExceeded,
    WitnessOrderInsufficient,
)
from .jets import JetAlgebra, build_jet_algebra
from .poly import BranchParam, Poly, euler_relation_holds, weight_feasibility


@dataclass(frozen=True)
class Branch:
    """One branch parametrization, optionally with its own equation."""

    param: BranchParam
    equation: Optional[Poly] = None


@dataclass(frozen=True)
class PlaneSingularity:
    """Defining equation plus optional weight and branch data."""

    f: Poly
    label: str = ""
    weights: Optional[Tuple[Fraction, Fraction]] = None
    branches: Tuple[Branch, ...] = ()
    asserted_delta: Optional[int] = None
    asserted_r: Optional[int] = None
    asserted_note: str = ""

    def __post_init__(self):
        if len(self.f.vars) != 2:
            raise ValueError("plane singularity needs exactly two variables")
        if self.f.is_zero() or self.f.constant_term() != 0:
            raise ValueError("equation must be nonzero with zero constant term")
        if self.weights is not None:
            w1, w2 = self.weights
            if w1 <= 0 or w2 <= 0:
                raise ValueError("weights must be positive")
            if not euler_relation_holds(self.f, w1, w2):
                raise ValueError("declared weights fail the Euler relation")


@dataclass(frozen=True)
class LocalInvariants:
    mu: int
    tau: int
    qh_by_saito: bool
    wh_in_coords: bool
    delta: Optional[int] = None
    r: Optional[int] = None
    delta_provenance: Optional[str] = None  # "computed" | "asserted-input"


@dataclass(frozen=True)
class TailMap:
    """Matrix of the tail differential from ker(.f on M_f) to T_f."""

    source_basis: Tuple[Tuple[Fraction, ...], ...]  # vectors over the M_f basis
    target_basis: Tuple[tuple, ...]  # standard monomials of T_f
    matrix: Tuple[Tuple[Fraction, ...], ...]  # rows indexed by target basis
    rank: int


class PlaneAnalysis:
    """Caches the jet algebras of one singularity and derives its invariants."""

    def __init__(self, sing: PlaneSingularity, truncation: Optional[int] = None):
        self.sing = sing
        self.truncation = truncation
        f = sing.f
        u, v = f.vars
        self.f_u = f.diff(u)
        self.f_v = f.diff(v)
        if self.f_u.is_zero() and self.f_v.is_zero():
            raise NonIsolated("zero Jacobian ideal")
        try:
            self.milnor = build_jet_algebra(
                [self.f_u, self.f_v], truncation_order=truncation
            )
            self.tjurina = build_jet_algebra(
                [f, self.f_u, self.f_v], truncation_order=truncation
            )
        except TruncationCapExceeded as exc:
            raise NonIsolated(str(exc)) from exc
        if sing.weights is not None:
            self.effective_weights: Optional[Tuple[Fraction, Fraction]] = sing.weights
        else:
            self.effective_weights = weight_feasibility(f)
        self._mult_cache = None
        self._tail_cache: dict = {}

    # -- basic invariants --------------------------------------------------

    def milnor_tjurina(self) -> Tuple[int, int]:
        mu = self.milnor.colength()
        tau = self.tjurina.colength()
        if tau > mu:
            raise AssertionError(f"tau={tau} exceeds mu={mu}")
        return mu, tau

    def saito_test(self) -> bool:
        mu, tau = self.milnor_tjurina()
        return mu == tau

    def wh_in_coords(self) -> bool:
        return self.effective_weights is not None

    def local_invariants(
        self,
        delta: Optional[int] = None,
        r: Optional[int] = None,
        delta_provenance: Optional[str] = None,
    ) -> LocalInvariants:
        mu, tau = self.milnor_tjurina()
        return LocalInvariants(
            mu=mu,
            tau=tau,
            qh_by_saito=self.saito_test(),
            wh_in_coords=self.wh_in_coords(),
            delta=delta,
            r=r,
            delta_provenance=delta_provenance,
        )

    # -- multiplication by f on the Milnor algebra -------------------------

    def mult_by_f(self):
        """Kernel and cokernel data of .f on M_f; both have dimension tau."""
        if self._mult_cache is not None:
            return self._mult_cache
        basis = self.milnor.basis
        mu = len(basis)
        f = self.sing.f
        columns = [
            self.milnor.normal_form(f * Poly(f.vars, {mono: 1}))
            for mono in basis
        ]
        rows = [[columns[j][i] for j in range(mu)] for i in range(mu)]
        kernel = linalg.nullspace(rows)
        rk = linalg.rank(rows)
        kernel_dim = len(kernel)
        cokernel_dim = mu - rk
        tau = self.tjurina.colength()
        if kernel_dim != tau or cokernel_dim != tau:
            raise AssertionError(
                f"ker/coker of .f have dims {kernel_dim}/{cokernel_dim}, "
                f"expected tau={tau}"
            )
        result = (
            kernel_dim,
            cokernel_dim,
            tuple(tuple(vec) for vec in kernel),
            self.tjurina.basis,
        )
        self._mult_cache = result
        return result

    # -- tail differential -------------------------------------------------

    def _kernel_lift(self, vec: Sequence[Fraction]) -> Poly:
        terms = {
            mono: c for mono, c in zip(self.milnor.basis, vec) if c != 0
        }
        return Poly(self.sing.f.vars, terms)

    def _tail_image(
        self, lift: Poly, witness_algebra: JetAlgebra, order: int
    ) -> List[Fraction]:
        """Class in T_f of the divergence of a cofactor witness for f*lift."""
        f = self.sing.f
        u, v = f.vars
        witness = witness_algebra.membership_with_witness(f * lift, order)
        alpha, beta = witness.cofactors
        return self.tjurina.normal_form(alpha.diff(u) + beta.diff(v))

    def tail_map_general(self, row_seed: Optional[int] = None) -> TailMap:
        """Tail differential via cofactor witnesses, any isolated f.

        Each kernel class m of .f on M_f is lifted to a polynomial m~, a
        witness f*m~ = alpha*f_u + beta*f_v is extracted from the jet
        reduction, and the image is the class of d_u(alpha) + d_v(beta)
        in T_f.  Stability is enforced by recomputing every class with the
        truncation raised by 2; the class must not move.
        """
        if row_seed in self._tail_cache:
            return self._tail_cache[row_seed]
        _, _, kernel, target_basis = self.mult_by_f()
        f = self.sing.f
        lifts = [self._kernel_lift(vec) for vec in kernel]
        max_gen_degree = max(
            g.degree() or 0 for g in (self.f_u, self.f_v)
        )
        max_target_degree = max(
            ((f * lift).degree() or 0) for lift in lifts
        ) if lifts else 0
        order = self.tjurina.primality_bound + max_target_degree + 2
        T_w = order + 2 + max_gen_degree
        witness_algebra = JetAlgebra(
            [self.f_u, self.f_v], max(T_w, self.milnor.truncation_order),
            row_seed=row_seed,
        )
        recheck_algebra = JetAlgebra(
            [self.f_u, self.f_v],
            witness_algebra.truncation_order + 2,
            row_seed=row_seed,
        )
        columns = []
        for lift in lifts:
            image = self._tail_image(lift, witness_algebra, order)
            recheck = self._tail_image(lift, recheck_algebra, order + 2)
            if image != recheck:
                raise WitnessOrderInsufficient(
                    f"tail class moved under truncation raise at order {order}"
                )
            columns.append(image)
        tau = len(target_basis)
        matrix = tuple(
            tuple(columns[j][i] for j in range(len(columns)))
            for i in range(tau)
        )
        result = TailMap(
            source_basis=kernel,
            target_basis=target_basis,
            matrix=matrix,
            rank=linalg.rank([list(row) for row in matrix]) if matrix else 0,
        )
        self._tail_cache[row_seed] = result
        return result

    def tail_map_wh_scalar(self) -> TailMap:
        """Tail differential under a weight system: diagonal scalars.

        The Jacobian ideal is graded for the weights, so M_f splits into
        weighted-degree eigenspaces and the tail differential multiplies
        the weighted-degree-lambda piece by lambda + w1 + w2, which is
        positive; the map is an isomorphism of rank tau = mu.
        """
        if self.effective_weights is None:
            raise MissingWeights(
                "no weight system verified for this equation"
            )
        w1, w2 = self.effective_weights
        _, _, kernel, target_basis = self.mult_by_f()
        mu = self.milnor.colength()
        tau = len(target_basis)
        if tau != mu or self.milnor.basis != target_basis:
            raise AssertionError(
                "weighted case must share the M_f and T_f standard bases"
            )
        matrix = []
        for i, target_mono in enumerate(target_basis):
            row = []
            for vec in kernel:
                entry = Fraction(0)
                for mono, c in zip(self.milnor.basis, vec):
                    if c == 0:
                        continue
                    lam = mono[0] * w1 + mono[1] * w2
                    if mono == target_mono:
                        entry += c * (lam + w1 + w2)
                row.append(entry)
            matrix.append(tuple(row))
        return TailMap(
            source_basis=kernel,
            target_basis=target_basis,
            matrix=tuple(matrix),
            rank=linalg.rank([list(row) for row in matrix]) if matrix else 0,
        )

    def d10_local_rank(self) -> int:
        """Rank of the local piece of the first-page horizontal map.

        This is the same chain-level differential as the tail map, so the
        rank coincides by construction.
        """
        return self.tail_map_general().rank
