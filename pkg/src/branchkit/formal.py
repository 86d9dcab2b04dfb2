"""Finitely truncated formal delta distributions on the weight lattice.

A ``DeltaSeries`` stores integer coefficients on finitely many weights plus a
truncation contract.  The contract is a conjunction of ``ValidityRegion``s;
the series is guaranteed to agree with the untruncated distribution at every
weight certified by all of them.  Queries outside the certified set return
``None`` ("unknown"), never 0, so truncated garbage can never be mistaken for
an exact value.

An empty region tuple certifies everything: it is used for finite series
(Dirac combinations) that are exact by construction.  A region with
directions certifies a point x when either

* x = base + sum c_g * g with c_g >= 0 integers and sum c_g <= step_bound
  (the point lies inside the truncated part of the cone), or
* x has no such decomposition at all (the untruncated series vanishes there,
  and the truncation knows it).

Soundness of the decomposition search relies on the direction multiset being
pointed (no nonzero nonnegative combination sums to zero).  This is certified
at construction by a strictly positive linear functional on the directions;
for linearly dependent directions the functional also bounds how many steps
any alternative decomposition of a certified point can use, and the Heaviside
factors are expanded far enough to cover all of them.

Series are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError, InternalError
from .lattice import (
    Weight,
    format_weight,
    is_zero,
    rational_solve,
    wadd,
    wscale,
    wsub,
    zero_weight,
)

WeightMultiset = dict[Weight, int]


def _independent_basis(dirs: list[Weight]) -> list[Weight]:
    basis: list[Weight] = []
    for d in dirs:
        if rational_solve(basis, d) is None:
            basis.append(d)
    return basis


def _positive_functional(dirs: list[Weight]) -> dict[Weight, Fraction]:
    """Values of a linear functional that is > 0 on every direction.

    Existence certifies that the multiset is pointed (strict in the sense
    needed for convolutions to be well defined).  Raises DomainError when no
    certificate exists.
    """
    if not dirs:
        return {}
    basis = _independent_basis(dirs)
    if len(basis) == len(dirs):
        # Independent directions: decompositions are unique; weight all by 1.
        return {d: Fraction(1) for d in dirs}
    coords = {d: rational_solve(basis, d) for d in dirs}
    if len(basis) == 1:
        values = {d: coords[d][0] for d in dirs}
        if any(v <= 0 for v in values.values()):
            if all(v < 0 for v in values.values()):
                return {d: -v for d, v in values.items()}
            raise DomainError("multiset is not strict: opposite collinear directions")
        return values
    if len(basis) == 2:
        return _planar_functional(dirs, coords)
    raise DomainError("cannot certify strictness of the direction multiset")


def _planar_functional(dirs, coords) -> dict[Weight, Fraction]:
    """Positive functional for dependent rank-2 direction sets.

    The 2D coordinate rays are sorted by angle exactly; the set is pointed iff
    it spans strictly less than half a turn, and then the covector
    rot90ccw(u) + rot90cw(v) built from the extreme rays u, v is strictly
    positive on the whole set.
    """

    def half(p):  # 0: upper half plane incl. positive x-axis; 1: the rest
        x, y = p
        return 0 if (y > 0 or (y == 0 and x > 0)) else 1

    def cross(p, q):
        return p[0] * q[1] - p[1] * q[0]

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return -1 if hp < hq else 1
        c = cross(p, q)
        return 0 if c == 0 else (-1 if c > 0 else 1)

    def ray(p):  # canonical representative: positive rescale
        scale = next(abs(x) for x in p if x)
        return (p[0] / scale, p[1] / scale)

    rays = sorted({ray(coords[d]) for d in dirs}, key=functools.cmp_to_key(cmp))
    m = len(rays)
    if m == 1:
        u = v = rays[0]
    else:
        # cyclically sorted: pointed iff exactly one cyclic gap exceeds half a
        # turn; the occupied arc then runs from the ray after that gap (u) to
        # the ray before it (v)
        wide = [i for i in range(m) if cross(rays[i], rays[(i + 1) % m]) < 0]
        if len(wide) != 1:
            raise DomainError("multiset is not strict: directions span a half plane")
        i = wide[0]
        u, v = rays[(i + 1) % m], rays[i]
    f = (-u[1] + v[1], u[0] - v[0])
    if f == (Fraction(0), Fraction(0)):
        f = u
    values = {}
    for d in dirs:
        val = f[0] * coords[d][0] + f[1] * coords[d][1]
        if val <= 0:
            raise DomainError("multiset is not strict: no positive functional")
        values[d] = val
    return values


@dataclass(frozen=True)
class ValidityRegion:
    """Truncated cone {base + sum c_g g : c_g in Z>=0, sum c_g <= step_bound}."""

    base: Weight
    directions: tuple[tuple[Weight, int], ...]  # sorted (direction, multiplicity)
    step_bound: int

    def min_total_steps(self, x: Weight):
        """Minimal total step count decomposing x, or None if x is outside the cone."""
        dirs = [d for d, _ in self.directions]
        v = wsub(x, self.base)
        if not dirs:
            return 0 if is_zero(v) else None
        return _min_steps(v, dirs)

    def contains(self, x: Weight) -> bool:
        mt = self.min_total_steps(x)
        return mt is not None and mt <= self.step_bound

    def certain_at(self, x: Weight) -> bool:
        """True when the truncated series is known exact at x (value or known 0)."""
        mt = self.min_total_steps(x)
        return mt is None or mt <= self.step_bound


@functools.lru_cache(maxsize=None)
def _cached_functional(dirs: tuple) -> dict:
    return _positive_functional(list(dirs))


@functools.lru_cache(maxsize=None)
def _cached_independent(dirs: tuple) -> bool:
    return len(_independent_basis(list(dirs))) == len(dirs)


@functools.lru_cache(maxsize=None)
def _dependent_data(dirs: tuple):
    """Basis, per-direction basis coordinates and an index order putting an
    independent pair last, for the dependent-decomposition search."""
    basis = _independent_basis(list(dirs))
    coords = {d: rational_solve(basis, d) for d in dirs}
    order = list(dirs)
    if len(basis) == 2:
        pair = None
        for i in range(len(order)):
            for j in range(i + 1, len(order)):
                a, b = coords[order[i]], coords[order[j]]
                if a[0] * b[1] - a[1] * b[0] != 0:
                    pair = (i, j)
        i, j = pair
        order = [d for k, d in enumerate(order) if k not in (i, j)] + [order[i], order[j]]
    return tuple(basis), coords, tuple(order)


def _min_steps(v: Weight, dirs: list[Weight]):
    """Minimal sum of a nonnegative integer decomposition of v over dirs."""
    key = tuple(dirs)
    if _cached_independent(key):
        sol = rational_solve(dirs, v)
        if sol is None:
            return None
        if any(c < 0 or c.denominator != 1 for c in sol):
            return None
        return int(sum(sol))
    phi = _cached_functional(key)
    basis, coords, order = _dependent_data(key)
    vc = rational_solve(list(basis), v)
    if vc is None:
        return None
    target = Fraction(0)
    sol0 = rational_solve(list(dirs), v)
    for c, d in zip(sol0, dirs):
        target += Fraction(c) * phi[d]
    if target < 0:
        return None
    best = None

    if len(basis) == 2:
        free, pa, pb = order[:-2], order[-2], order[-1]
        a, b = coords[pa], coords[pb]
        det = a[0] * b[1] - a[1] * b[0]

        def solve_pair(t0, t1):
            ca = (t0 * b[1] - t1 * b[0]) / det
            cb = (a[0] * t1 - a[1] * t0) / det
            if ca < 0 or cb < 0 or ca.denominator != 1 or cb.denominator != 1:
                return None
            return int(ca + cb)

        def rec(idx, t0, t1, rest_phi, total):
            nonlocal best
            if best is not None and total >= best:
                return
            if idx == len(free):
                got = solve_pair(t0, t1)
                if got is not None and (best is None or total + got < best):
                    best = total + got
                return
            d = free[idx]
            dc = coords[d]
            cmax = int(rest_phi / phi[d])
            for c in range(cmax + 1):
                rec(idx + 1, t0 - c * dc[0], t1 - c * dc[1], rest_phi - c * phi[d], total + c)

        rec(0, vc[0], vc[1], target, 0)
        return best

    # rank 1: tiny coin-style search over all but the last direction
    def rec1(idx, rest, rest_phi, total):
        nonlocal best
        if best is not None and total >= best:
            return
        if idx == len(dirs) - 1:
            c = _exact_multiple(rest, dirs[idx])
            if c is not None and (best is None or total + c < best):
                best = total + c
            return
        d = dirs[idx]
        cmax = int(rest_phi / phi[d])
        for c in range(cmax + 1):
            rec1(idx + 1, wsub(rest, wscale(c, d)), rest_phi - c * phi[d], total + c)

    rec1(0, v, target, 0)
    return best


def _exact_multiple(v: Weight, d: Weight):
    """c >= 0 integer with v = c*d, else None."""
    if is_zero(v):
        return 0
    ratio = None
    for x, y in zip(v, d):
        if y == 0:
            if x != 0:
                return None
        else:
            r = x / y
            if ratio is None:
                ratio = r
            elif r != ratio:
                return None
    if ratio is None or ratio < 0 or ratio.denominator != 1:
        return None
    return int(ratio)


EXACT: tuple[ValidityRegion, ...] = ()  # empty conjunction: exact everywhere


@dataclass(frozen=True)
class DeltaSeries:
    """Finitely supported integer-coefficient distribution with a validity contract."""

    coeffs: dict  # Weight -> int, no zero entries
    regions: tuple[ValidityRegion, ...] = EXACT

    def coefficient(self, x: Weight):
        """Exact coefficient at x, or None when x is outside the contract."""
        if not self.certain_at(x):
            return None
        return self.coeffs.get(x, 0)

    def certain_at(self, x: Weight) -> bool:
        return all(r.certain_at(x) for r in self.regions)

    def support(self):
        return sorted(self.coeffs.keys())


def _clean(coeffs: dict) -> dict:
    return {w: c for w, c in coeffs.items() if c != 0}


def dirac(gamma: Weight) -> DeltaSeries:
    """The distribution concentrated at one weight; exact everywhere."""
    return DeltaSeries({gamma: 1}, EXACT)


def from_multiplicities(mults: dict) -> DeltaSeries:
    """Finite exact series sum_w mults[w] * delta_w."""
    return DeltaSeries(_clean(dict(mults)), EXACT)


def heaviside(gamma: Weight, n_steps: int) -> DeltaSeries:
    """Truncation of delta_{g/2} + delta_{g/2+g} + delta_{g/2+2g} + ..."""
    return heaviside_power(gamma, 1, n_steps)


def heaviside_power(gamma: Weight, r: int, n_steps: int) -> DeltaSeries:
    """r-fold convolution power of the Heaviside series, built directly from
    the binomial formula: coefficient C(n+r-1, r-1) at (r/2 + n) * gamma."""
    if r < 0:
        raise DomainError("negative Heaviside power")
    if n_steps < 0:
        raise DomainError("negative truncation bound")
    if r == 0:
        return dirac(zero_weight(len(gamma)))
    if is_zero(gamma):
        raise DomainError("non-strict multiset: Heaviside direction is zero")
    base = wscale(Fraction(r, 2), gamma)
    coeffs = {wadd(base, wscale(n, gamma)): comb(n + r - 1, r - 1) for n in range(n_steps + 1)}
    region = ValidityRegion(base, ((gamma, r),), n_steps)
    return DeltaSeries(coeffs, (region,))


def convolve(a: DeltaSeries, b: DeltaSeries) -> DeltaSeries:
    """Full convolution of the stored coefficients with a merged contract.

    Contract merge: when one side is exact everywhere, each of its support
    points translates the other side's regions (conjunction over all of
    them).  When both sides carry a single cone region, bases add, direction
    multisets merge and the step bound is the minimum of the two.
    """
    coeffs: dict = {}
    for u, cu in a.coeffs.items():
        for v, cv in b.coeffs.items():
            w = wadd(u, v)
            coeffs[w] = coeffs.get(w, 0) + cu * cv
    coeffs = _clean(coeffs)

    if not a.regions and not b.regions:
        return DeltaSeries(coeffs, EXACT)
    if not a.regions or not b.regions:
        exact, cone = (a, b) if not a.regions else (b, a)
        if len(exact.coeffs) * len(cone.regions) > 64:
            raise InternalError("contract explosion convolving a large exact series")
        regions = tuple(
            ValidityRegion(wadd(r.base, u), r.directions, r.step_bound)
            for u in sorted(exact.coeffs)
            for r in cone.regions
        )
        return DeltaSeries(coeffs, regions)
    if len(a.regions) != 1 or len(b.regions) != 1:
        raise InternalError("convolution of multi-region truncated series is not supported")
    ra, rb = a.regions[0], b.regions[0]
    merged: dict = dict(ra.directions)
    for d, m in rb.directions:
        merged[d] = merged.get(d, 0) + m
    region = ValidityRegion(
        wadd(ra.base, rb.base),
        tuple(sorted(merged.items())),
        min(ra.step_bound, rb.step_bound),
    )
    return DeltaSeries(coeffs, (region,))


def convolve_multiset(ms: WeightMultiset, n_steps: int) -> DeltaSeries:
    """Convolution of Heaviside series over a strict multiset of directions.

    Equals the product of ``heaviside_power`` over the distinct directions.
    Exact on {half-sum + combinations with total steps <= n_steps}; with
    linearly dependent directions each factor is expanded beyond n_steps by
    the positive-functional bound so that every decomposition of a certified
    point is covered.
    """
    if not ms:
        raise DomainError("empty multiset")
    if any(is_zero(d) for d in ms):
        raise DomainError("non-strict multiset: contains the zero weight")
    dirs = sorted(ms.keys())
    phi = _positive_functional(dirs)  # also certifies strictness
    if len(_independent_basis(dirs)) == len(dirs):
        expand = {d: n_steps for d in dirs}
    else:
        max_phi = max(phi.values())
        expand = {d: int(Fraction(n_steps) * max_phi / phi[d]) for d in dirs}

    result = None
    for d in dirs:
        factor = heaviside_power(d, ms[d], expand[d])
        result = factor if result is None else convolve(result, factor)
    base = zero_weight(len(dirs[0]))
    for d in dirs:
        base = wadd(base, wscale(Fraction(ms[d], 2), d))
    region = ValidityRegion(base, tuple(sorted(ms.items())), n_steps)
    return DeltaSeries(result.coeffs, (region,))


def add(a: DeltaSeries, b: DeltaSeries) -> DeltaSeries:
    coeffs = dict(a.coeffs)
    for w, c in b.coeffs.items():
        coeffs[w] = coeffs.get(w, 0) + c
    regions = a.regions + tuple(r for r in b.regions if r not in a.regions)
    return DeltaSeries(_clean(coeffs), regions)


def subtract(a: DeltaSeries, b: DeltaSeries) -> DeltaSeries:
    return add(a, scale(-1, b))


def scale(c: int, a: DeltaSeries) -> DeltaSeries:
    if c == 0:
        return DeltaSeries({}, a.regions)
    return DeltaSeries({w: c * v for w, v in a.coeffs.items()}, a.regions)


def series_to_json(s: DeltaSeries) -> str:
    payload = {
        "entries": [
            {"weight": format_weight(w), "coeff": str(s.coeffs[w])} for w in s.support()
        ],
        "validity": [
            {
                "base": format_weight(r.base),
                "directions": [
                    {"direction": format_weight(d), "multiplicity": m}
                    for d, m in r.directions
                ],
                "stepBound": r.step_bound,
            }
            for r in s.regions
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True)
