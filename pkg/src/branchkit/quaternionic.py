"""Branching of quaternionic discrete series to the distinguished su(2,1)
subalgebra: the embedding data, parameter decomposition, the closed-form
branching table, dominance verification, and the admissibility decision for
positive systems containing the compact one.

Conventions locked against the distributional oracle (see ``oracle``):

* The su(2,1) copy is spanned by the root spaces of {a, b} where b is the
  maximal root of the small positive system and a is a noncompact simple
  root with 2(b,a)/(a,a) = 1.  Its roots inside the ambient system are
  {+-a, +-b, +-(b-a)} and the induced positive system is {b-a, a, b} with
  fundamental weights L1 = (2b-a)/3 (vanishing on the coroot of a) and
  L2 = (a+b)/3, so L1 + L2 = b.
* Parameters mu of the branching table sit at
      mu = lam1 + q(nu) + ((d-1)/2 + p) L1 + ((d-1)/2 + q) L2
  for p, q >= 0 and nu a torus weight of the k2-representation attached to
  lam, with multiplicity M(lam2, nu) C(p+d-2, d-2) C(q+d-2, d-2) summed over
  all (nu, p, q) landing on mu.  The (d-1)/2 offset comes from the half-sum
  base of the Heaviside powers; the oracle comparison pins it down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError, InternalError
from .lattice import (
    InnerProductForm,
    Weight,
    coroot_pairing,
    inner,
    reflection_matrix,
    wadd,
    wneg,
    wscale,
    wsub,
)
from .repweights import (
    CompactFactor,
    HCParameter,
    cached_freudenthal,
    hc_to_highest_weight,
    validate_hc_parameter,
)
from .rootsystems import (
    PositiveSystem,
    RootDatum,
    quaternionic_root_datum,
    small_system,
)


@dataclass(frozen=True, eq=False)
class QuaternionicContext:
    """Embedding data for one quaternionic real form."""

    rd: RootDatum
    psi: PositiveSystem      # the small positive system
    beta: Weight             # maximal root, compact
    alpha: Weight            # noncompact simple root with <beta, alpha-check> = 1
    fw1: Weight              # fundamental weight L1, (L1, alpha) = 0
    fw2: Weight              # fundamental weight L2, L1 + L2 = beta
    d: int                   # half the number of noncompact positive roots
    w_line: Weight           # beta - 2 alpha, spanning the torus direction in k2
    k2_factor: CompactFactor
    kernel_positive: tuple[Weight, ...]   # positive compact roots killed by q_u
    s_beta: tuple            # reflection matrix in beta

    @property
    def form(self) -> InnerProductForm:
        return self.rd.form

    @property
    def noncompact_positive(self) -> tuple[Weight, ...]:
        return self.rd.noncompact_positive

    @property
    def h_roots(self) -> frozenset:
        pieces = (self.alpha, self.beta, wsub(self.beta, self.alpha))
        return frozenset(list(pieces) + [wneg(g) for g in pieces])

    def q_u(self, v: Weight) -> Weight:
        """Orthogonal projection onto the span of {alpha, beta}."""
        form = self.form
        pb = wscale(inner(form, v, self.beta) / inner(form, self.beta, self.beta), self.beta)
        pw = wscale(inner(form, v, self.w_line) / inner(form, self.w_line, self.w_line), self.w_line)
        return wadd(pb, pw)

    def q_u_k2(self, v: Weight) -> Weight:
        """Orthogonal projection onto the line spanned by beta - 2 alpha."""
        form = self.form
        return wscale(inner(form, v, self.w_line) / inner(form, self.w_line, self.w_line), self.w_line)


def quaternionic_context(label: str) -> QuaternionicContext:
    """Build and verify the full embedding context for a form label."""
    rd = quaternionic_root_datum(label)
    psi, beta, alpha = small_system(rd)
    form = rd.form
    if coroot_pairing(form, beta, alpha) != 1 or coroot_pairing(form, alpha, beta) != 1:
        raise InternalError("alpha and beta do not span an su(2,1) root system")
    b_minus_a = wsub(beta, alpha)
    if b_minus_a not in set(rd.roots):
        raise InternalError("beta - alpha is not a root")
    fw1 = wscale(Fraction(1, 3), wsub(wscale(2, beta), alpha))
    fw2 = wscale(Fraction(1, 3), wadd(alpha, beta))
    if coroot_pairing(form, fw1, alpha) != 0 or coroot_pairing(form, fw1, b_minus_a) != 1:
        raise InternalError("fundamental weight L1 fails its defining pairings")
    if coroot_pairing(form, fw2, alpha) != 1 or coroot_pairing(form, fw2, b_minus_a) != 0:
        raise InternalError("fundamental weight L2 fails its defining pairings")
    noncompact = rd.noncompact_positive
    if len(noncompact) % 2:
        raise InternalError("odd number of noncompact positive roots")
    d = len(noncompact) // 2
    w_line = wsub(beta, wscale(2, alpha))
    k2_positive = tuple(
        g for g in rd.compact_positive if g != beta and inner(form, g, beta) == 0
    )
    if len(k2_positive) + 1 != len(rd.compact_positive):
        raise InternalError("a compact positive root other than beta meets beta")
    k2_factor = CompactFactor.from_positive(form, k2_positive)
    kernel = tuple(
        g for g in k2_positive
        if inner(form, g, alpha) == 0 and inner(form, g, beta) == 0
    )
    ctx = QuaternionicContext(
        rd=rd,
        psi=psi,
        beta=beta,
        alpha=alpha,
        fw1=fw1,
        fw2=fw2,
        d=d,
        w_line=w_line,
        k2_factor=k2_factor,
        kernel_positive=kernel,
        s_beta=reflection_matrix(form, beta),
    )
    _verify_projections(ctx)
    return ctx


def _verify_projections(ctx: QuaternionicContext):
    """The involution g -> beta - g preserves the noncompact positive roots,
    and their projections fall on the two fundamental weights."""
    targets = {ctx.fw1, ctx.fw2}
    special = {ctx.alpha, wsub(ctx.beta, ctx.alpha)}
    for g in ctx.noncompact_positive:
        if wsub(ctx.beta, g) not in set(ctx.noncompact_positive):
            raise InternalError("beta - gamma is not a noncompact positive root")
        if g in special:
            continue
        if ctx.q_u(g) not in targets:
            raise InternalError("projection of a noncompact root misses L1, L2")


def decompose_parameter(ctx: QuaternionicContext, lam: Weight):
    """Split lam into its component along beta and the orthogonal rest."""
    form = ctx.form
    lam1 = wscale(inner(form, lam, ctx.beta) / inner(form, ctx.beta, ctx.beta), ctx.beta)
    lam2 = wsub(lam, lam1)
    return lam1, lam2


def validate_small_dominant(ctx: QuaternionicContext, lam: Weight) -> HCParameter:
    """Check lam is a discrete-series parameter dominant for the small system."""
    try:
        return validate_hc_parameter(lam, ctx.psi)
    except DomainError as exc:
        raise DomainError(
            "not a quaternionic discrete series parameter (parameter must be "
            "dominant for the small positive system; by the admissibility "
            f"criterion the restriction is otherwise not admissible): {exc}"
        ) from None


def lam2_weight_table(ctx: QuaternionicContext, lam: Weight):
    """Weight table of the k2-representation attached to lam (memoized)."""
    _, lam2 = decompose_parameter(ctx, lam)
    hw = hc_to_highest_weight(lam2, ctx.k2_factor)
    return cached_freudenthal(ctx.rd.label, hw, ctx.k2_factor)


@dataclass(frozen=True, eq=False)
class BranchingTable:
    """Multiplicities keyed by su(2,1)-side parameters, with a completeness bound.

    The table is complete for every mu with <mu, beta-check> <= pairing_bound;
    entries beyond the bound are not reported.  Tables extracted from a
    truncated series carry ``None`` here (their completeness is per weight,
    governed by the series contract).
    """

    entries: dict  # Weight -> positive int
    pairing_bound: Fraction | None
    label: str
    lam: Weight | None

    def sorted_entries(self):
        return sorted(self.entries.items())


def branching_table(ctx: QuaternionicContext, lam: Weight, cutoff: int) -> BranchingTable:
    """Closed-form branching table for the restriction to the su(2,1) subgroup.

    ``cutoff`` bounds p + q; the table is then complete for all parameters mu
    with <mu, beta-check> <= <lam, beta-check> + (d - 1) + cutoff.
    """
    if cutoff < 0:
        raise DomainError("cutoff must be nonnegative")
    validate_small_dominant(ctx, lam)
    lam1, _ = decompose_parameter(ctx, lam)
    table = lam2_weight_table(ctx, lam)
    d = ctx.d
    offset = Fraction(d - 1, 2)
    entries: dict = {}
    for nu, mult in table.mults.items():
        sigma = ctx.q_u_k2(nu)
        base = wadd(wadd(lam1, sigma), wadd(wscale(offset, ctx.fw1), wscale(offset, ctx.fw2)))
        for p in range(cutoff + 1):
            cp = comb(p + d - 2, d - 2)
            for q in range(cutoff + 1 - p):
                mu = wadd(base, wadd(wscale(p, ctx.fw1), wscale(q, ctx.fw2)))
                entries[mu] = entries.get(mu, 0) + mult * cp * comb(q + d - 2, d - 2)
    bound = coroot_pairing(ctx.form, lam, ctx.beta) + (d - 1) + cutoff
    return BranchingTable(entries, bound, ctx.rd.label, lam)


def check_table_dominance(ctx: QuaternionicContext, table: BranchingTable):
    """Every parameter must be strictly dominant for the su(2,1) positive
    system {b-a, a, b}; returns the (expected empty) list of violations."""
    form = ctx.form
    b_minus_a = wsub(ctx.beta, ctx.alpha)
    violations = []
    for mu in table.entries:
        pa = inner(form, mu, ctx.alpha)
        pba = inner(form, mu, b_minus_a)
        if pa <= 0 or pba <= 0:
            violations.append((mu, pa, pba))
        elif inner(form, mu, ctx.beta) <= 0:
            raise InternalError("beta pairing not implied by the simple pairings")
    return violations


def admissible_system(ctx: QuaternionicContext, sigma: PositiveSystem) -> bool:
    """Discrete series with parameters dominant for sigma restrict admissibly
    to the su(2,1) subgroup iff sigma is the small system itself."""
    compact = frozenset(g for g in ctx.rd.roots if ctx.rd.is_compact(g))
    delta = frozenset(ctx.rd.compact_positive)
    if sigma.chosen_set() & compact != delta:
        raise DomainError("positive system does not contain the compact positive system")
    return sigma.chosen_set() == ctx.psi.chosen_set()
