"""Realized root systems with compact/noncompact labels, positive systems,
and Weyl-group machinery (generation, minimal coset representatives, chamber
enumeration).

All systems live in standard Bourbaki coordinates with the Euclidean inner
product.  Every quantity consumed downstream (coroot pairings, Weyl
polynomial ratios, sign tests, orthogonal projections) is invariant under
positive rescaling of the form, so the Euclidean normalization is safe even
where the Killing form would differ by a factor.

Compactness for the quaternionic families is derived uniformly from the
pairing with the coroot of the highest root b: pairing 0 or 2 means compact,
pairing 1 means noncompact (applied to positive roots, extended by negation).
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigurationError, DomainError, InternalError, ResourceError
from .lattice import (
    InnerProductForm,
    Matrix,
    Weight,
    apply_matrix,
    coroot_pairing,
    identity_form,
    identity_matrix,
    mat_mul,
    rational_solve,
    reflection_matrix,
    wadd,
    weight,
    wneg,
    wscale,
    wsub,
    zero_weight,
)

WEYL_ORDER_BOUND = 10**6


def weyl_order_bound() -> int:
    return int(os.environ.get("BRANCHKIT_GROUP_ORDER_BOUND", WEYL_ORDER_BOUND))


@dataclass(frozen=True, eq=False)
class RootDatum:
    """A realized root system with a fixed positive system and compactness labels."""

    label: str
    form: InnerProductForm
    roots: tuple[Weight, ...]
    positive: tuple[Weight, ...]
    simple: tuple[Weight, ...]
    compactness: dict  # Weight -> bool (True = compact), defined on all roots

    def is_compact(self, gamma: Weight) -> bool:
        return self.compactness[gamma]

    @property
    def compact_positive(self) -> tuple[Weight, ...]:
        return tuple(g for g in self.positive if self.compactness[g])

    @property
    def noncompact_positive(self) -> tuple[Weight, ...]:
        return tuple(g for g in self.positive if not self.compactness[g])


@dataclass(frozen=True, eq=False)
class PositiveSystem:
    """A positive system inside a RootDatum, with its half-sum."""

    parent: RootDatum
    chosen: tuple[Weight, ...]
    rho: Weight

    def chosen_set(self) -> frozenset:
        return frozenset(self.chosen)


def positive_system(rd: RootDatum, chosen=None) -> PositiveSystem:
    roots = tuple(sorted(chosen)) if chosen is not None else rd.positive
    rho = zero_weight(rd.form.dim)
    for g in roots:
        rho = wadd(rho, g)
    return PositiveSystem(rd, roots, wscale(Fraction(1, 2), rho))


def half_sum(form_dim: int, roots) -> Weight:
    total = zero_weight(form_dim)
    for g in roots:
        total = wadd(total, g)
    return wscale(Fraction(1, 2), total)


@dataclass(frozen=True)
class WeylElement:
    """Group element with a reduced word in the supplied generators."""

    word: tuple[int, ...]
    matrix: Matrix
    sign: int


# ---------------------------------------------------------------------------
# root collections per family, in Bourbaki coordinates


def _signed_pairs(n: int, both=True, singles=None, scale=1):
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [Fraction(0)] * n
                    v[i], v[j] = Fraction(si), Fraction(sj)
                    roots.append(tuple(v))
    if singles is not None:
        for i in range(n):
            for s in (1, -1):
                v = [Fraction(0)] * n
                v[i] = Fraction(s * singles)
                roots.append(tuple(v))
    return roots


def _type_a(rank: int):
    n = rank + 1
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [Fraction(0)] * n
                v[i], v[j] = Fraction(1), Fraction(-1)
                roots.append(tuple(v))
    simples = []
    for i in range(rank):
        v = [Fraction(0)] * n
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        simples.append(tuple(v))
    return roots, simples


def _type_b(rank: int):
    roots = _signed_pairs(rank, singles=1)
    simples = []
    for i in range(rank - 1):
        v = [Fraction(0)] * rank
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        simples.append(tuple(v))
    v = [Fraction(0)] * rank
    v[rank - 1] = Fraction(1)
    simples.append(tuple(v))
    return roots, simples


def _type_c(rank: int):
    roots = _signed_pairs(rank, singles=2)
    simples = []
    for i in range(rank - 1):
        v = [Fraction(0)] * rank
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        simples.append(tuple(v))
    v = [Fraction(0)] * rank
    v[rank - 1] = Fraction(2)
    simples.append(tuple(v))
    return roots, simples


def _type_d(rank: int):
    roots = _signed_pairs(rank)
    simples = []
    for i in range(rank - 1):
        v = [Fraction(0)] * rank
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        simples.append(tuple(v))
    v = [Fraction(0)] * rank
    v[rank - 2], v[rank - 1] = Fraction(1), Fraction(1)
    simples.append(tuple(v))
    return roots, simples


def _type_g2():
    a1 = weight([1, -1, 0])
    a2 = weight([-2, 1, 1])
    pos = [a1, a2, wadd(a1, a2), wadd(wscale(2, a1), a2), wadd(wscale(3, a1), a2),
           wadd(wscale(3, a1), wscale(2, a2))]
    roots = pos + [wneg(g) for g in pos]
    return roots, [a1, a2]


def _type_f4():
    roots = _signed_pairs(4, singles=1)
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                for s4 in (1, -1):
                    roots.append(
                        (Fraction(s1, 2), Fraction(s2, 2), Fraction(s3, 2), Fraction(s4, 2))
                    )
    simples = [
        weight([0, 1, -1, 0]),
        weight([0, 0, 1, -1]),
        weight([0, 0, 0, 1]),
        weight(["1/2", "-1/2", "-1/2", "-1/2"]),
    ]
    return roots, simples


def _half_vectors(signs_on, fixed, n=8, parity=0):
    """Half-integer E-series vectors: entries +-1/2 on signs_on with given sign
    parity (number of minus signs mod 2), fixed coordinates elsewhere."""
    out = []
    k = len(signs_on)
    for mask in range(1 << k):
        minus = bin(mask).count("1")
        if minus % 2 != parity:
            continue
        v = [Fraction(0)] * n
        for idx, coord in enumerate(signs_on):
            v[coord] = Fraction(-1, 2) if (mask >> idx) & 1 else Fraction(1, 2)
        for coord, val in fixed.items():
            v[coord] = val
        out.append(tuple(v))
    return out


def _type_e(rank: int):
    h = Fraction(1, 2)
    simples8 = [
        (h, -h, -h, -h, -h, -h, -h, h),
        weight([1, 1, 0, 0, 0, 0, 0, 0]),
        weight([-1, 1, 0, 0, 0, 0, 0, 0]),
        weight([0, -1, 1, 0, 0, 0, 0, 0]),
        weight([0, 0, -1, 1, 0, 0, 0, 0]),
        weight([0, 0, 0, -1, 1, 0, 0, 0]),
        weight([0, 0, 0, 0, -1, 1, 0, 0]),
        weight([0, 0, 0, 0, 0, -1, 1, 0]),
    ]
    roots: list[Weight] = []
    if rank == 8:
        roots = _signed_pairs(8)
        # half-integer roots: even number of minus signs
        for mask in range(1 << 8):
            if bin(mask).count("1") % 2 == 0:
                roots.append(
                    tuple(Fraction(-1, 2) if (mask >> i) & 1 else Fraction(1, 2) for i in range(8))
                )
        simples = simples8
    elif rank == 7:
        roots = [r for r in _signed_pairs(8) if all(r[i] == 0 for i in (6, 7))]
        roots += [weight([0, 0, 0, 0, 0, 0, -1, 1]), weight([0, 0, 0, 0, 0, 0, 1, -1])]
        # +-(e8 - e7 + sum over e1..e6 with an odd number of minus signs)/...
        for base in _half_vectors(list(range(6)), {6: Fraction(-1, 2), 7: Fraction(1, 2)}, parity=1):
            roots.append(base)
            roots.append(wneg(base))
        simples = simples8[:7]
    elif rank == 6:
        roots = [r for r in _signed_pairs(8) if all(r[i] == 0 for i in (5, 6, 7))]
        for base in _half_vectors(
            list(range(5)),
            {5: Fraction(-1, 2), 6: Fraction(-1, 2), 7: Fraction(1, 2)},
            parity=0,
        ):
            roots.append(base)
            roots.append(wneg(base))
        simples = simples8[:6]
    else:
        raise ConfigurationError(f"unsupported E-series rank {rank}")
    return roots, simples


# ---------------------------------------------------------------------------
# assembly


def _positive_from_simples(roots, simples):
    """Positive roots = nonnegative combinations of the simple roots."""
    positive = []
    for g in roots:
        sol = rational_solve(list(simples), g)
        if sol is None:
            raise InternalError("root outside the span of the simple roots")
        if all(c >= 0 for c in sol):
            positive.append(g)
    if 2 * len(positive) != len(roots):
        raise InternalError("positive system does not split the roots in half")
    return tuple(sorted(positive))


def simple_elements(positives, form: InnerProductForm):
    """Indecomposable elements of a positive subset (its simple roots)."""
    pos = set(positives)
    sums = set()
    for a in positives:
        for b in positives:
            s = wadd(a, b)
            if s in pos:
                sums.add(s)
    return tuple(sorted(g for g in positives if g not in sums))


def highest_root(rd: RootDatum) -> Weight:
    """The unique positive root of maximal height."""
    simples = list(rd.simple)

    def height(g):
        sol = rational_solve(simples, g)
        return sum(sol)

    best = max(rd.positive, key=height)
    top = [g for g in rd.positive if height(g) == height(best)]
    if len(top) != 1:
        raise InternalError("highest root is not unique; reducible system?")
    return top[0]


_BASE_BUILDERS = {
    "A": _type_a,
    "B": _type_b,
    "C": _type_c,
    "D": _type_d,
}


def _base_system(family: str, rank: int):
    if family in _BASE_BUILDERS:
        return _BASE_BUILDERS[family](rank)
    if family == "G":
        return _type_g2()
    if family == "F":
        return _type_f4()
    if family == "E":
        return _type_e(rank)
    raise ConfigurationError(f"unknown family {family}")


QUATERNIONIC_LABELS = ("su2_n", "so4_n", "e6_2", "e7_m5", "e8_m24", "f4_4", "g2_2")


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigurationError(f"bad {what} parameter {text!r}") from None


def parse_quaternionic_label(label: str):
    """Split a form label like ``su2_n:3`` into (family, parameter)."""
    name, _, param = label.partition(":")
    if name in ("g2_2", "f4_4", "e6_2", "e7_m5", "e8_m24"):
        if param:
            raise ConfigurationError(f"form {name} takes no parameter")
        return name, None
    if name == "su2_n":
        n = _parse_int(param, "su2_n")
        if n < 1:
            raise ConfigurationError("su2_n requires n >= 1")
        return name, n
    if name == "so4_n":
        n = _parse_int(param, "so4_n")
        if n < 3:
            raise ConfigurationError("so4_n requires n >= 3")
        return name, n
    raise ConfigurationError(f"unsupported quaternionic form label {label!r}")


@functools.lru_cache(maxsize=None)
def quaternionic_root_datum(label: str) -> RootDatum:
    """RootDatum for one of the quaternionic real forms.

    The label carries the family and parameter, e.g. ``g2_2``, ``su2_n:3``,
    ``so4_n:4``.  Compactness is assigned by the highest-root coroot pairing
    rule and is what realizes the stated real form.
    """
    name, param = parse_quaternionic_label(label)
    if name == "g2_2":
        roots, simples = _base_system("G", 2)
    elif name == "f4_4":
        roots, simples = _base_system("F", 4)
    elif name == "e6_2":
        roots, simples = _base_system("E", 6)
    elif name == "e7_m5":
        roots, simples = _base_system("E", 7)
    elif name == "e8_m24":
        roots, simples = _base_system("E", 8)
    elif name == "su2_n":
        roots, simples = _base_system("A", param + 1)
    else:  # so4_n
        m = (4 + param) // 2
        family = "D" if (4 + param) % 2 == 0 else "B"
        roots, simples = _base_system(family, m)
    dim = len(roots[0])
    form = identity_form(dim)
    positive = _positive_from_simples(roots, simples)
    rd = RootDatum(label, form, tuple(sorted(roots)), positive, tuple(simples), {})
    beta = highest_root(rd)
    compactness = {}
    for g in positive:
        p = coroot_pairing(form, g, beta)
        if p not in (0, 1, 2):
            raise InternalError(f"unexpected highest-root pairing {p} for {g}")
        compactness[g] = p != 1
        compactness[wneg(g)] = p != 1
    return RootDatum(label, form, rd.roots, positive, tuple(simples), compactness)


def small_system(rd: RootDatum):
    """The distinguished positive system with compact maximal root.

    Returns (PositiveSystem, beta, alpha) where beta is the maximal root and
    alpha a noncompact simple root with 2(beta, alpha)/(alpha, alpha) = 1.
    Verifies the quaternionic conditions: beta compact, the noncompact simple
    coefficients of beta sum to 2.
    """
    ps = positive_system(rd)
    beta = highest_root(rd)
    if not rd.is_compact(beta):
        raise InternalError("maximal root is not compact; wrong realization")
    noncompact_simple = [a for a in rd.simple if not rd.is_compact(a)]
    sol = rational_solve(list(rd.simple), beta)
    ncoeff = sum(c for c, a in zip(sol, rd.simple) if not rd.is_compact(a))
    if ncoeff != 2:
        raise InternalError("noncompact simple coefficients of the maximal root do not sum to 2")
    candidates = [a for a in noncompact_simple if coroot_pairing(rd.form, beta, a) == 1]
    if not candidates:
        raise InternalError("no noncompact simple root pairs to 1 with the maximal root")
    alpha = candidates[0]  # deterministic: first in simple-root order
    return ps, beta, alpha


def weyl_generate(form: InnerProductForm, generators, order_bound=None):
    """Enumerate the reflection group generated by the given roots.

    Breadth-first over reduced words; output sorted by (word length, word),
    each element carrying its matrix and sign.  Raises ResourceError when the
    group order would exceed the bound.
    """
    bound = order_bound if order_bound is not None else weyl_order_bound()
    gens = [reflection_matrix(form, g) for g in generators]
    ident = identity_matrix(form.dim)
    seen = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            w = seen[m]
            for i, g in enumerate(gens):
                m2 = mat_mul(g, m)
                if m2 not in seen:
                    seen[m2] = w + (i,)
                    nxt.append(m2)
                    if len(seen) > bound:
                        raise ResourceError(
                            f"Weyl group order exceeds the bound {bound}"
                        )
        frontier = nxt
    elements = [
        WeylElement(word=tuple(reversed(word)), matrix=m, sign=(-1) ** len(word))
        for m, word in seen.items()
    ]
    elements.sort(key=lambda e: (len(e.word), e.word))
    return tuple(elements)


def coset_reps(elements, subsystem_positive, form: InnerProductForm):
    """Minimal-length representatives of the right cosets W_sub \\ W.

    ``elements`` must be the full enumeration of W; ``subsystem_positive``
    the positive roots of a reflection-closed subsystem.  Each coset has a
    unique minimal-length element; ties raise InternalError.
    """
    for a in subsystem_positive:
        for b in subsystem_positive:
            r = wsub(b, wscale(coroot_pairing(form, b, a), a))
            if r not in subsystem_positive and wneg(r) not in subsystem_positive:
                raise DomainError("subsystem is not closed under its own reflections")
    sub_simple = simple_elements(subsystem_positive, form)
    sub = weyl_generate(form, sub_simple)
    by_matrix = {e.matrix: e for e in elements}
    assigned = set()
    reps = []
    for e in elements:  # sorted by length already
        if e.matrix in assigned:
            continue
        coset = []
        for z in sub:
            m = mat_mul(z.matrix, e.matrix)
            member = by_matrix.get(m)
            if member is None:
                raise DomainError("subsystem reflections do not normalize the group")
            coset.append(member)
        minimal = [c for c in coset if len(c.word) == min(len(c.word) for c in coset)]
        if len(minimal) != 1:
            raise InternalError("minimal coset representative is not unique")
        reps.append(minimal[0])
        assigned.update(c.matrix for c in coset)
    if len(reps) * len(sub) != len(elements):
        raise InternalError("coset partition does not cover the group")
    return tuple(reps)


def positive_systems_containing(rd: RootDatum, delta: PositiveSystem):
    """All positive systems of the full root system whose compact part is delta.

    Enumerates the Weyl chambers of the full group and filters; this is only
    feasible for desk-scale forms and respects the group order bound.
    """
    compact = frozenset(g for g in rd.roots if rd.is_compact(g))
    elements = weyl_generate(rd.form, rd.simple)
    base = rd.positive
    seen = set()
    out = []
    for e in elements:
        chosen = frozenset(apply_matrix(e.matrix, g) for g in base)
        if chosen in seen:
            continue
        seen.add(chosen)
        if chosen & compact == delta.chosen_set():
            out.append(positive_system(rd, chosen))
    out.sort(key=lambda ps: ps.chosen)
    return out
