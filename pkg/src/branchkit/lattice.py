"""Exact arithmetic on weights: rational coordinate vectors, inner products,
coroot pairings and reflections.

A weight is a plain tuple of ``Fraction``; ``Fraction`` keeps itself in lowest
terms with a positive denominator, so weights compare exactly and can be used
as dict keys directly.  All values are immutable and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError

Weight = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


def weight(coords: Iterable) -> Weight:
    """Build a weight from any iterable of ints / Fractions / strings."""
    return tuple(Fraction(c) for c in coords)


def zero_weight(dim: int) -> Weight:
    return (Fraction(0),) * dim


def wadd(a: Weight, b: Weight) -> Weight:
    if len(a) != len(b):
        raise DimensionError(f"weight lengths differ: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def wsub(a: Weight, b: Weight) -> Weight:
    if len(a) != len(b):
        raise DimensionError(f"weight lengths differ: {len(a)} vs {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def wneg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def wscale(c, a: Weight) -> Weight:
    c = Fraction(c)
    return tuple(c * x for x in a)


def is_zero(a: Weight) -> bool:
    return all(x == 0 for x in a)


def dot(a: Weight, b: Weight) -> Fraction:
    """Standard coordinate dot product (identity Gram matrix)."""
    if len(a) != len(b):
        raise DimensionError(f"weight lengths differ: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def parse_weight(text: str) -> Weight:
    """Parse the textual form, e.g. ``"3/2,-1/2,0,0"``."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise DomainError(f"cannot parse weight {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse weight {text!r}: {exc}") from None


def format_weight(w: Weight) -> str:
    return ",".join(str(c) for c in w)


@dataclass(frozen=True)
class InnerProductForm:
    """A symmetric positive-definite rational Gram matrix on the ambient space.

    Positive-definiteness is assumed from construction; only the root-system
    builders create these.
    """

    gram: Matrix
    dim: int

    def __post_init__(self):
        if len(self.gram) != self.dim or any(len(r) != self.dim for r in self.gram):
            raise DimensionError("gram matrix shape does not match dim")
        for i in range(self.dim):
            if self.gram[i][i] <= 0:
                raise DomainError("gram diagonal must be positive")
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise DomainError("gram matrix must be symmetric")


def identity_form(dim: int) -> InnerProductForm:
    rows = tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim)
    )
    return InnerProductForm(rows, dim)


def gram_form(rows: Sequence[Sequence]) -> InnerProductForm:
    gram = tuple(tuple(Fraction(x) for x in row) for row in rows)
    return InnerProductForm(gram, len(gram))


def inner(form: InnerProductForm, a: Weight, b: Weight) -> Fraction:
    """Exact bilinear form a^T . gram . b."""
    if len(a) != form.dim or len(b) != form.dim:
        raise DimensionError("weight length does not match form dimension")
    total = Fraction(0)
    for i, ai in enumerate(a):
        if ai:
            row = form.gram[i]
            total += ai * sum((row[j] * bj for j, bj in enumerate(b) if bj), Fraction(0))
    return total


def coroot_pairing(form: InnerProductForm, lam: Weight, gamma: Weight) -> Fraction:
    """<lam, gamma-check> = 2 (lam, gamma) / (gamma, gamma)."""
    if is_zero(gamma):
        raise DomainError("coroot pairing against the zero vector")
    return 2 * inner(form, lam, gamma) / inner(form, gamma, gamma)


def reflect(form: InnerProductForm, lam: Weight, gamma: Weight) -> Weight:
    """Reflection of lam in the hyperplane orthogonal to gamma; involutive."""
    if is_zero(gamma):
        raise DomainError("reflection in the zero vector")
    return wsub(lam, wscale(coroot_pairing(form, lam, gamma), gamma))


def identity_matrix(dim: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim)
    )


def reflection_matrix(form: InnerProductForm, gamma: Weight) -> Matrix:
    """Matrix of the reflection in gamma, acting on column vectors."""
    if is_zero(gamma):
        raise DomainError("reflection in the zero vector")
    n = form.dim
    gg = inner(form, gamma, gamma)
    # row i of G.gamma, used for <e_j, gamma-check>
    ggamma = tuple(
        sum((form.gram[j][k] * gamma[k] for k in range(n)), Fraction(0))
        for j in range(n)
    )
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = Fraction(1 if i == j else 0) - 2 * gamma[i] * ggamma[j] / gg
            row.append(v)
        rows.append(tuple(row))
    return tuple(rows)


def apply_matrix(m: Matrix, v: Weight) -> Weight:
    return tuple(
        sum((row[j] * v[j] for j in range(len(v)) if v[j]), Fraction(0)) for row in m
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum((a[i][k] * bt[j][k] for k in range(n)), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def rational_solve(columns: Sequence[Weight], target: Weight):
    """Solve sum_i x_i * columns[i] = target exactly.

    Returns the coefficient tuple, or None when the system is inconsistent.
    When the columns are linearly dependent a particular solution is returned
    (free variables are set to zero).
    """
    if not columns:
        return () if is_zero(target) else None
    m = len(target)
    k = len(columns)
    # augmented matrix, rows indexed by coordinates
    rows = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    pivots = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = rows[i][k]
    return tuple(sol)
