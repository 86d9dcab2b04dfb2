"""Restriction results outside the su(2,1) family: the constant answer for
SO(3,2n), the closed-form branching from sp(1,q) to its sp(1,1) subgroup with
its own distributional oracle, and the root-set criterion for admissibility
of discrete series of Hermitian forms over the semisimple factor of K.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ConfigurationError, DomainError, InternalError
from .formal import DeltaSeries, convolve, convolve_multiset, dirac, from_multiplicities
from .lattice import (
    InnerProductForm,
    Weight,
    apply_matrix,
    coroot_pairing,
    identity_form,
    inner,
    is_zero,
    mat_mul,
    reflection_matrix,
    wadd,
    weight,
    wneg,
    wscale,
    wsub,
    zero_weight,
)
from .repweights import (
    CompactFactor,
    cached_freudenthal,
    hc_to_highest_weight,
    su2_string_decompose,
    validate_hc_parameter,
)
from .rootsystems import (
    PositiveSystem,
    RootDatum,
    coset_reps,
    half_sum,
    positive_system,
    simple_elements,
    weyl_generate,
)

# ---------------------------------------------------------------------------
# SO(3, n)


def so3_admissible(n: int):
    """Restriction of discrete series of SO(3, n) to the SO(3) factor.

    For even n >= 2 the answer is always negative; odd n carries no discrete
    series at all and is rejected.
    """
    if n < 2:
        raise ConfigurationError("SO(3, n) requires n >= 2")
    if n % 2:
        raise DomainError("SO(3, %d) has an empty discrete series" % n)
    return (
        False,
        "no discrete series of SO(3, %d) restricts admissibly to the SO(3) factor "
        "(it already fails for the intermediate SO(3, 1), which has no discrete series)"
        % n,
    )


# ---------------------------------------------------------------------------
# sp(1, q) -> sp(1, 1)


@dataclass(frozen=True, eq=False)
class Sp1qContext:
    """Root data for sp(1, q) with the sp(1, 1) subalgebra on the first two
    coordinates (basis order: e0 = the sp(1) direction, then the q compact
    coordinates)."""

    q: int
    rd: RootDatum
    sigma: PositiveSystem
    beta: Weight                    # 2 e0
    h_roots: frozenset              # roots of the sp(1,1) subalgebra
    k2_factor: CompactFactor        # sp(q) on coordinates 1..q
    kernel_positive: tuple[Weight, ...]
    s_beta: tuple                   # reflection in beta = sign flip of e0
    su2_root: Weight                # 2 e1, the su(2) inside k2 used for strings

    @property
    def form(self) -> InnerProductForm:
        return self.rd.form

    @property
    def noncompact_positive(self):
        return self.rd.noncompact_positive

    def q_u(self, v: Weight) -> Weight:
        """Projection onto the sp(1,1) torus: keep coordinates 0 and 1."""
        return tuple(x if i < 2 else Fraction(0) for i, x in enumerate(v))

    def q_u_k2(self, v: Weight) -> Weight:
        """Projection onto the su(2) torus inside k2: keep coordinate 1."""
        return tuple(x if i == 1 else Fraction(0) for i, x in enumerate(v))


def _sp1q_roots(q: int):
    n = q + 1
    roots = []
    for i in range(n):
        v = [Fraction(0)] * n
        v[i] = Fraction(2)
        roots.append(tuple(v))
        roots.append(tuple(-x for x in v))
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    u = [Fraction(0)] * n
                    u[i], u[j] = Fraction(si), Fraction(sj)
                    roots.append(tuple(u))
    simples = []
    for i in range(n - 1):
        v = [Fraction(0)] * n
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        simples.append(tuple(v))
    v = [Fraction(0)] * n
    v[n - 1] = Fraction(2)
    simples.append(tuple(v))
    return roots, simples


@functools.lru_cache(maxsize=None)
def sp1q_context(q: int) -> Sp1qContext:
    """Build the sp(1, q) context; compactness is stored explicitly: the long
    root 2 e0 and everything inside the sp(q) block are compact, the mixed
    short roots e0 +- ej are noncompact."""
    if q < 2:
        raise ConfigurationError("sp(1, q) branching requires q >= 2")
    roots, simples = _sp1q_roots(q)
    n = q + 1
    form = identity_form(n)
    positive = []
    compactness = {}
    for g in roots:
        nonzero = [i for i, x in enumerate(g) if x]
        compact = 0 not in nonzero or nonzero == [0]
        compactness[g] = compact
        first = g[nonzero[0]]
        if first > 0:
            positive.append(g)
    rd = RootDatum("sp1_q:%d" % q, form, tuple(sorted(roots)), tuple(sorted(positive)),
                   tuple(simples), compactness)
    beta = tuple([Fraction(2)] + [Fraction(0)] * q)
    e0 = tuple([Fraction(1)] + [Fraction(0)] * q)
    e1 = tuple([Fraction(0), Fraction(1)] + [Fraction(0)] * (q - 1))
    h_pieces = [wscale(2, e0), wscale(2, e1), wadd(e0, e1), wsub(e0, e1)]
    h_roots = frozenset(h_pieces + [wneg(g) for g in h_pieces])
    k2_positive = tuple(
        g for g in rd.compact_positive if g != beta and g[0] == 0
    )
    k2_factor = CompactFactor.from_positive(form, k2_positive)
    kernel = tuple(g for g in k2_positive if g[0] == 0 and g[1] == 0)
    return Sp1qContext(
        q=q,
        rd=rd,
        sigma=positive_system(rd),
        beta=beta,
        h_roots=h_roots,
        k2_factor=k2_factor,
        kernel_positive=kernel,
        s_beta=reflection_matrix(form, beta),
        su2_root=wscale(2, e1),
    )


def sp1q_validate(ctx: Sp1qContext, lam: Weight):
    return validate_hc_parameter(lam, ctx.sigma)


def sp1q_decompose(ctx: Sp1qContext, lam: Weight):
    lam1 = tuple(x if i == 0 else Fraction(0) for i, x in enumerate(lam))
    return lam1, wsub(lam, lam1)


def sp1q_string_table(ctx: Sp1qContext, lam: Weight) -> dict:
    """su(2)-string content {k: N_k} of the sp(q)-representation attached to lam."""
    _, lam2 = sp1q_decompose(ctx, lam)
    hw = hc_to_highest_weight(lam2, ctx.k2_factor)
    table = cached_freudenthal(ctx.rd.label, hw, ctx.k2_factor)
    return su2_string_decompose(table, ctx.su2_root)


@dataclass(frozen=True, eq=False)
class Sp1qTable:
    """Branching table for sp(1, q) -> sp(1, 1); keys are (a, k) coordinates
    a e0 + k e1.  Complete for a <= pairing_bound."""

    entries: dict  # Weight -> positive int
    pairing_bound: Fraction | None
    q: int
    lam: Weight | None


def sp1q_branching_table(ctx: Sp1qContext, lam: Weight, cutoff: int) -> Sp1qTable:
    """Closed form: strings at k e1 contribute N_k C(p + 2q - 3, 2q - 3) at
    (a0 + q - 1 + p) e0 + k e1 for p >= 0, where a0 is the e0-component of lam.

    The q - 1 offset is the half-sum base of the 2(q-1)-fold Heaviside power;
    the distributional oracle pins it down.
    """
    if cutoff < 0:
        raise DomainError("cutoff must be nonnegative")
    sp1q_validate(ctx, lam)
    strings = sp1q_string_table(ctx, lam)
    a0 = lam[0]
    entries = {}
    for k, nk in strings.items():
        for p in range(cutoff + 1):
            mu = tuple(
                [a0 + (ctx.q - 1) + p, Fraction(k)] + [Fraction(0)] * (ctx.q - 1)
            )
            entries[mu] = entries.get(mu, 0) + nk * comb(p + 2 * ctx.q - 3, 2 * ctx.q - 3)
    for mu in entries:
        if not (mu[0] > mu[1] > 0):
            raise InternalError("emitted parameter is not dominant for the subgroup")
    return Sp1qTable(entries, a0 + (ctx.q - 1) + cutoff, ctx.q, lam)


def _sp1q_kernel_cosets(ctx: Sp1qContext, order_bound: int):
    elements = weyl_generate(ctx.form, ctx.k2_factor.simple, order_bound)
    return coset_reps(elements, ctx.kernel_positive, ctx.form)


def _sp1q_weyl_polynomial(ctx: Sp1qContext, sigma: Weight) -> Fraction:
    kernel = ctx.kernel_positive
    if not kernel:
        return Fraction(1)
    rho_z = half_sum(ctx.form.dim, kernel)
    num = Fraction(1)
    den = Fraction(1)
    for g in kernel:
        num *= inner(ctx.form, sigma, g)
        den *= inner(ctx.form, rho_z, g)
    return num / den


def sp1q_quotient_weights(ctx: Sp1qContext) -> dict:
    """Projections of the compact positive roots outside the kernel, with the
    sp(1,1) roots removed: 2(q-1) copies of e1."""
    out: dict = {}
    kernel = set(ctx.kernel_positive)
    for g in ctx.rd.compact_positive:
        if g in kernel:
            continue
        p = ctx.q_u(g)
        if is_zero(p):
            raise InternalError("kernel filter missed a vanishing projection")
        if p in ctx.h_roots:
            continue
        out[p] = out.get(p, 0) + 1
    return out


def sp1q_term_multiset(ctx: Sp1qContext, w, flip: bool) -> dict:
    ms = dict(sp1q_quotient_weights(ctx))
    for g in ctx.noncompact_positive:
        img = apply_matrix(w.matrix, g)
        if flip:
            img = apply_matrix(ctx.s_beta, img)
        p = ctx.q_u(img)
        if is_zero(p):
            raise InternalError("noncompact root projects to zero")
        if p in ctx.h_roots:
            continue
        ms[p] = ms.get(p, 0) + 1
    return ms


def sp1q_restriction_series(ctx: Sp1qContext, lam: Weight, step_bound: int,
                            order_bound: int = 10**5) -> DeltaSeries:
    """Signed coset sum encoding the sp(1,1) branching; its coefficients on
    the open quadrant (a > 0, k > 0) are the multiplicities."""
    sp1q_validate(ctx, lam)
    reps = _sp1q_kernel_cosets(ctx, order_bound)
    acc: dict = {}
    regions = []
    for s in reps:
        for flip in (False, True):
            matrix = mat_mul(ctx.s_beta, s.matrix) if flip else s.matrix
            sign = -s.sign if flip else s.sign
            wlam = apply_matrix(matrix, lam)
            varpi = _sp1q_weyl_polynomial(ctx, wlam)
            ms = sp1q_term_multiset(ctx, s, flip)
            prefactor = (-1) ** sum(ms.values())
            coeff = Fraction(sign * prefactor) * varpi
            term = convolve(dirac(ctx.q_u(wlam)), convolve_multiset(ms, step_bound))
            for wgt, c in term.coeffs.items():
                acc[wgt] = acc.get(wgt, Fraction(0)) + coeff * c
            regions.extend(term.regions)
    coeffs = {}
    for wgt, c in acc.items():
        if c == 0:
            continue
        if c.denominator != 1:
            raise InternalError("coset sum produced a non-integer coefficient")
        coeffs[wgt] = int(c)
    return DeltaSeries(coeffs, tuple(regions))


def sp1q_extract(ctx: Sp1qContext, series: DeltaSeries) -> Sp1qTable:
    """Table from the open-quadrant coefficients; verifies the four-fold
    antisymmetry pattern under the two sign flips within the certified set."""
    s_e1 = reflection_matrix(ctx.form, ctx.su2_root)
    entries = {}
    for wgt, c in series.coeffs.items():
        a, k = wgt[0], wgt[1]
        if a <= 0 or k <= 0:
            continue
        if not series.certain_at(wgt):
            continue
        if a == k:
            raise InternalError("nonzero coefficient on the singular wall a = k")
        if c < 0:
            raise InternalError(f"antisymmetrization failure at {wgt}")
        entries[wgt] = c
        for matrix, want in (
            (ctx.s_beta, -c),
            (s_e1, -c),
            (mat_mul(ctx.s_beta, s_e1), c),
        ):
            mirror = apply_matrix(matrix, wgt)
            got = series.coefficient(mirror)
            if got is not None and got != want:
                raise InternalError("four-fold antisymmetry fails at %s" % (wgt,))
    return Sp1qTable(entries, None, ctx.q, None)


@dataclass(frozen=True, eq=False)
class Sp1qReport:
    agree: bool
    compared: int
    mismatches: tuple


def sp1q_verify(ctx: Sp1qContext, lam: Weight, step_bound: int) -> Sp1qReport:
    """Closed form vs oracle extraction on the certified region."""
    series = sp1q_restriction_series(ctx, lam, step_bound)
    oracle = sp1q_extract(ctx, series)
    closed = sp1q_branching_table(ctx, lam, cutoff=step_bound)
    candidates = set(closed.entries) | set(oracle.entries)
    mismatches = []
    compared = 0
    for mu in sorted(candidates):
        if mu[0] <= 0 or mu[1] <= 0:
            continue
        if mu[0] > closed.pairing_bound:
            continue
        got = series.coefficient(mu)
        if got is None:
            continue
        compared += 1
        want = closed.entries.get(mu, 0)
        if got != want:
            mismatches.append((mu, want, got))
    return Sp1qReport(not mismatches, compared, tuple(mismatches))


def sp1q_su2_restriction_sides(ctx: Sp1qContext, lam: Weight, step_bound: int):
    """Both sides of the restriction identity from sp(q) to the su(2) on the
    first compact coordinate: antisymmetrized string parameters on the left,
    the signed coset sum with the Weyl polynomial on the right."""
    strings = sp1q_string_table(ctx, lam)
    lhs_coeffs: dict = {}
    for k, nk in strings.items():
        up = tuple([Fraction(0), Fraction(k)] + [Fraction(0)] * (ctx.q - 1))
        lhs_coeffs[up] = lhs_coeffs.get(up, 0) + nk
        down = wneg(up)
        lhs_coeffs[down] = lhs_coeffs.get(down, 0) - nk
    lhs = from_multiplicities(lhs_coeffs)

    _, lam2 = sp1q_decompose(ctx, lam)
    quotient = sp1q_quotient_weights(ctx)
    prefactor = (-1) ** sum(quotient.values())
    reps = _sp1q_kernel_cosets(ctx, 10**5)
    acc: dict = {}
    regions = []
    for s in reps:
        slam2 = apply_matrix(s.matrix, lam2)
        coeff = Fraction(prefactor * s.sign) * _sp1q_weyl_polynomial(ctx, slam2)
        term = convolve(dirac(ctx.q_u_k2(slam2)), convolve_multiset(quotient, step_bound))
        for wgt, c in term.coeffs.items():
            acc[wgt] = acc.get(wgt, Fraction(0)) + coeff * c
        regions.extend(term.regions)
    coeffs = {}
    for wgt, c in acc.items():
        if c == 0:
            continue
        if c.denominator != 1:
            raise InternalError("coset sum produced a non-integer coefficient")
        coeffs[wgt] = int(c)
    return lhs, DeltaSeries(coeffs, tuple(regions))


# ---------------------------------------------------------------------------
# Hermitian forms: admissibility over the semisimple factor of K


HERMITIAN_LABELS = ("sp_n_R", "so_star", "su_pq", "e6_m14", "e7_m25")


@dataclass(frozen=True, eq=False)
class HermitianData:
    """Realized Hermitian form with its holomorphic system and the two root
    sets whose chamber positions decide admissibility over the semisimple
    factor of K.

    ``tube`` records whether the symmetric space is a tube domain.  For tube
    forms, containment of a certificate set in the chamber system marks the
    central ray inside the asymptotic support, so it decides *against*
    admissibility; for non-tube forms containment certifies admissibility.
    This orientation is fixed by the holomorphic-chamber dichotomy (tube:
    never admissible, non-tube: admissible).
    """

    label: str
    rd: RootDatum
    psi_h: PositiveSystem
    certificate: tuple[Weight, ...]          # the set I
    certificate_conjugate: tuple[Weight, ...]  # the set I-tilde
    tube: bool


def _su_pq_data(p: int, q: int):
    if p < 1 or q < 1 or p > q:
        raise DomainError("su(p, q) certificates require 1 <= p <= q")
    n = p + q
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [Fraction(0)] * n
                v[i], v[j] = Fraction(1), Fraction(-1)
                roots.append(tuple(v))
    compact = lambda g: (
        all(x == 0 for x in g[p:]) or all(x == 0 for x in g[:p])
    )
    gammas = []
    bs = []
    for i in range(1, p + 1):
        gammas.append(i + (i - 1) * (q - p) // p + p)
        t_num, t_den = i * (q - p), p
        if t_num % t_den:
            bs.append(i + 1 + t_num // t_den + p)
        else:
            bs.append(i + t_num // t_den + p)
    cert = []
    conj = []
    for i in range(1, p + 1):
        v = [Fraction(0)] * n
        v[i - 1], v[gammas[i - 1] - 1] = Fraction(1), Fraction(-1)
        cert.append(tuple(v))
        u = [Fraction(0)] * n
        u[i - 1], u[bs[i - 1] - 1] = Fraction(-1), Fraction(1)
        conj.append(tuple(u))
    return roots, compact, cert, conj, p == q


def _sp_nr_data(n: int):
    if n < 1:
        raise DomainError("sp(n, R) requires n >= 1")
    roots = []
    for i in range(n):
        v = [Fraction(0)] * n
        v[i] = Fraction(2)
        roots.append(tuple(v))
        roots.append(tuple(-x for x in v))
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    u = [Fraction(0)] * n
                    u[i], u[j] = Fraction(si), Fraction(sj)
                    roots.append(tuple(u))
    compact = lambda g: sum(g) == 0
    l = n // 2
    cert = []
    if n % 2:
        v = [Fraction(0)] * n
        v[l] = Fraction(2)
        cert.append(tuple(v))
    for k in range(1, l + 1):
        v = [Fraction(0)] * n
        v[k - 1], v[n - k] = Fraction(1), Fraction(1)
        cert.append(tuple(v))
    conj = [wneg(g) for g in cert]
    return roots, compact, cert, conj, True


def _so_star_data(n: int):
    if n < 3:
        raise DomainError("so*(2n) requires n >= 3")
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    u = [Fraction(0)] * n
                    u[i], u[j] = Fraction(si), Fraction(sj)
                    roots.append(tuple(u))
    compact = lambda g: sum(g) == 0
    l = n // 2
    cert = []
    for k in range(1, l + 1):
        v = [Fraction(0)] * n
        v[k - 1], v[n - k] = Fraction(1), Fraction(1)
        cert.append(tuple(v))
    if n % 2 == 0:
        conj = [wneg(g) for g in cert]
        tube = True
    else:
        v = [Fraction(0)] * n
        v[l], v[l + 1] = Fraction(1), Fraction(1)
        cert.append(tuple(v))
        conj = []
        for k in range(1, l + 1):
            u = [Fraction(0)] * n
            u[k - 1], u[n - k] = Fraction(-1), Fraction(-1)
            conj.append(tuple(u))
        u = [Fraction(0)] * n
        u[l - 1], u[l] = Fraction(-1), Fraction(-1)
        conj.append(tuple(u))
        tube = False
    return roots, compact, cert, conj, tube


_E_HALF = Fraction(1, 2)


def _e_vector(signs):
    return tuple(Fraction(s, 2) for s in signs)


_EPS1 = _e_vector([-1, -1, -1, -1, 1, -1, -1, 1])
_EPS2 = _e_vector([-1, -1, 1, 1, 1, -1, -1, 1])
_ETA1 = _e_vector([-1, 1, -1, -1, 1, 1, -1, 1])
_ETA2 = _e_vector([-1, -1, 1, 1, -1, 1, -1, 1])


def _e6_m14_data():
    from .rootsystems import _type_e

    roots, _ = _type_e(6)
    z = weight([0, 0, 0, 0, 0, -1, -1, 1])  # central direction e8 - e7 - e6
    compact = lambda g: inner(identity_form(8), g, z) == 0
    e = lambda i: tuple(Fraction(1 if j == i - 1 else 0) for j in range(8))
    cert = [_EPS1, _EPS2, wadd(e(1), e(5)), wadd(e(2), e(5))]
    # conjugate set: negate the noncompact members only; negating the compact
    # members would make the set unusable against any chamber
    conj = [wneg(_EPS1), wneg(_EPS2), wadd(e(1), e(5)), wadd(e(2), e(5))]
    return roots, compact, cert, conj, False, z


def _e7_m25_data():
    from .rootsystems import _type_e

    roots, _ = _type_e(7)
    z = weight([0, 0, 0, 0, 0, 2, -1, 1])  # direction orthogonal to the e6 part
    compact = lambda g: inner(identity_form(8), g, z) == 0
    e = lambda i: tuple(Fraction(1 if j == i - 1 else 0) for j in range(8))
    cert = [_ETA1, _ETA2, wadd(e(1), e(6))]
    conj = [wneg(g) for g in cert]
    return roots, compact, cert, conj, True, z


def parse_hermitian_label(label: str):
    name, _, param = label.partition(":")
    if name == "su_pq":
        try:
            p, q = (int(x) for x in param.split(","))
        except ValueError:
            raise ConfigurationError(f"bad su_pq parameters {param!r}") from None
        return name, (p, q)
    if name in ("sp_n_R", "so_star"):
        try:
            return name, (int(param),)
        except ValueError:
            raise ConfigurationError(f"bad {name} parameter {param!r}") from None
    if name in ("e6_m14", "e7_m25"):
        if param:
            raise ConfigurationError(f"form {name} takes no parameter")
        return name, ()
    raise ConfigurationError(f"unsupported Hermitian form label {label!r}")


@functools.lru_cache(maxsize=None)
def hermitian_data(label: str) -> HermitianData:
    """Assemble the realized Hermitian form and its certificate sets."""
    name, params = parse_hermitian_label(label)
    z = None
    if name == "su_pq":
        p, q = params
        roots, compact, cert, conj, tube = _su_pq_data(p, q)
        z = weight([q] * p + [-p] * q)
    elif name == "sp_n_R":
        roots, compact, cert, conj, tube = _sp_nr_data(params[0])
        z = weight([1] * params[0])
    elif name == "so_star":
        roots, compact, cert, conj, tube = _so_star_data(params[0])
        z = weight([1] * params[0])
    elif name == "e6_m14":
        roots, compact, cert, conj, tube, z = _e6_m14_data()
    else:
        roots, compact, cert, conj, tube, z = _e7_m25_data()
    dim = len(roots[0])
    form = identity_form(dim)
    compactness = {g: compact(g) for g in roots}
    # holomorphic system: positive on the central direction for noncompact
    # roots, a fixed generic order on the compact ones
    v_reg = _compact_regular_vector(name, dim)
    positive = []
    for g in roots:
        zval = inner(form, g, z)
        if zval > 0 or (zval == 0 and inner(form, g, v_reg) > 0):
            positive.append(g)
    if 2 * len(positive) != len(roots):
        raise InternalError("holomorphic system does not split the roots")
    simples = simple_elements(tuple(sorted(positive)), form)
    rd = RootDatum(label, form, tuple(sorted(roots)), tuple(sorted(positive)),
                   simples, compactness)
    psi_h = positive_system(rd)
    root_set = set(roots)
    for g in list(cert) + list(conj):
        if g not in root_set:
            raise InternalError(f"certificate element {g} is not a root of {label}")
    return HermitianData(label, rd, psi_h, tuple(cert), tuple(conj), tube)


def _compact_regular_vector(name: str, dim: int) -> Weight:
    if name in ("e6_m14", "e7_m25"):
        # regular for the compact subsystem, huge last coordinates so the
        # half-integer compact roots of the e7 case never vanish against it
        return weight([5, 4, 3, 2, 1, 0, -64, 64][:dim] if dim == 8 else [])
    return weight(range(dim, 0, -1))


def holomorphic_chamber_parameter(hd: HermitianData) -> Weight:
    """The half-sum of the holomorphic system: a regular integral parameter
    in the holomorphic chamber."""
    return hd.psi_h.rho


def antiholomorphic_chamber_parameter(hd: HermitianData) -> Weight:
    chosen = _flip_noncompact(hd, hd.psi_h.chosen_set())
    total = zero_weight(hd.rd.form.dim)
    for g in chosen:
        total = wadd(total, g)
    return wscale(Fraction(1, 2), total)


def _flip_noncompact(hd: HermitianData, chosen: frozenset) -> frozenset:
    out = set()
    for g in chosen:
        out.add(g if hd.rd.is_compact(g) else wneg(g))
    return frozenset(out)


def chamber_system(hd: HermitianData, lam: Weight) -> frozenset:
    """Positive system {g : (lam, g-check) > 0} attached to a regular lam."""
    chosen = set()
    for g in hd.rd.positive:
        c = inner(hd.rd.form, lam, g)
        if c == 0:
            raise DomainError(f"parameter is singular against root {g}")
        chosen.add(g if c > 0 else wneg(g))
    return frozenset(chosen)


def validate_hermitian_parameter(hd: HermitianData, lam: Weight):
    """Regular, integral, dominant for the compact part of the holomorphic system."""
    rd = hd.rd
    for g in rd.roots:
        c = coroot_pairing(rd.form, lam, g)
        if c == 0:
            raise DomainError(f"parameter is singular against root {g}")
        if c.denominator != 1:
            raise DomainError(f"parameter is not integral against root {g}")
    for g in rd.compact_positive:
        if inner(rd.form, lam, g) <= 0:
            raise DomainError("parameter is not dominant for the compact positive system")


def kss_admissible_system(hd: HermitianData, chamber: frozenset) -> bool:
    """Admissibility over the semisimple factor of K decided from the chamber.

    Containment of a certificate set in the chamber system is an obstruction
    for tube forms and a certificate for non-tube forms; see HermitianData.
    """
    contained = (
        frozenset(hd.certificate) <= chamber
        or frozenset(hd.certificate_conjugate) <= chamber
    )
    return (not contained) if hd.tube else contained


def kss_admissible(hd: HermitianData, lam: Weight) -> bool:
    validate_hermitian_parameter(hd, lam)
    return kss_admissible_system(hd, chamber_system(hd, lam))


def kss_admissible_report(hd: HermitianData, lam: Weight):
    """(decision, reason) pair for user-facing output."""
    validate_hermitian_parameter(hd, lam)
    chamber = chamber_system(hd, lam)
    contained = (
        frozenset(hd.certificate) <= chamber
        or frozenset(hd.certificate_conjugate) <= chamber
    )
    admissible = (not contained) if hd.tube else contained
    if hd.tube:
        reason = (
            "tube domain: an obstruction set lies in the chamber system"
            if contained
            else "tube domain: no obstruction set lies in the chamber system"
        )
    else:
        reason = (
            "a certificate set lies in the chamber system"
            if contained
            else "no certificate set lies in the chamber system"
        )
    return admissible, reason
