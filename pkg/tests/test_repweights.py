import functools
from fractions import Fraction

import pytest

from branchkit.errors import DomainError, ResourceError
from branchkit.lattice import (
    identity_form,
    inner,
    rational_solve,
    weight,
    wadd,
    wneg,
    wscale,
    wsub,
    zero_weight,
)
from branchkit.repweights import (
    CompactFactor,
    freudenthal,
    hc_to_highest_weight,
    restrict_weights,
    su2_string_decompose,
    validate_hc_parameter,
    weyl_dimension,
)
from branchkit.rootsystems import positive_system, quaternionic_root_datum


def a2_factor():
    pos = (weight([1, -1, 0]), weight([0, 1, -1]), weight([1, 0, -1]))
    return CompactFactor.from_positive(identity_form(3), pos)


def su2_factor():
    return CompactFactor.from_positive(identity_form(2), (weight([1, -1]),))


def b2_factor():
    pos = (weight([1, -1]), weight([0, 1]), weight([1, 1]), weight([1, 0]))
    return CompactFactor.from_positive(identity_form(2), pos)


def test_hc_to_highest_weight_rho_is_trivial():
    f = a2_factor()
    assert hc_to_highest_weight(f.rho, f) == zero_weight(3)


def test_hc_to_highest_weight_su2():
    f = su2_factor()
    lam2 = wscale(Fraction(3, 2), weight([1, -1]))  # coroot pairing 3
    hw = hc_to_highest_weight(lam2, f)
    assert inner(f.form, hw, weight([1, -1])) == 2
    assert weyl_dimension(hw, f) == 3


def test_hc_to_highest_weight_adjoint():
    f = a2_factor()
    hw = hc_to_highest_weight(wscale(2, f.rho), f)
    assert hw == f.rho
    assert weyl_dimension(hw, f) == 8


def test_hc_rejects_non_dominant():
    f = a2_factor()
    with pytest.raises(DomainError):
        hc_to_highest_weight(wneg(f.rho), f)
    with pytest.raises(DomainError):
        hc_to_highest_weight(wsub(f.rho, weight([1, -1, 0])), f)  # singular


def test_weyl_dimension_trivial():
    f = a2_factor()
    assert weyl_dimension(zero_weight(3), f) == 1


def test_weyl_dimension_su2_string():
    f = su2_factor()
    for n in range(6):
        hw = wscale(Fraction(n, 2), weight([1, -1]))
        assert weyl_dimension(hw, f) == n + 1


def test_freudenthal_trivial():
    f = a2_factor()
    t = freudenthal(zero_weight(3), f)
    assert t.mults == {zero_weight(3): 1}


def test_freudenthal_su2_adjoint():
    f = su2_factor()
    hw = weight([1, -1])
    t = freudenthal(hw, f)
    assert t.mults == {hw: 1, weight([0, 0]): 1, weight([-1, 1]): 1}


def test_freudenthal_a2_adjoint():
    f = a2_factor()
    t = freudenthal(f.rho, f)
    assert t.dimension() == 8
    assert t.mults[zero_weight(3)] == 2
    for g in f.positive:
        assert t.mults[g] == 1
        assert t.mults[wneg(g)] == 1


def test_freudenthal_resource_bound(monkeypatch):
    monkeypatch.setenv("BRANCHKIT_DIMENSION_BOUND", "5")
    f = a2_factor()
    with pytest.raises(ResourceError):
        freudenthal(f.rho, f)


def _kostant_multiplicity(hw, nu, factor):
    """Brute-force alternating sum of partition counts over the Weyl group."""
    from branchkit.rootsystems import weyl_generate
    from branchkit.lattice import apply_matrix

    positives = list(factor.positive)

    @functools.lru_cache(maxsize=None)
    def partitions(target, idx):
        if all(x == 0 for x in target):
            return 1
        if idx == len(positives):
            return 0
        total = 0
        g = positives[idx]
        t = target
        while True:
            total += partitions(t, idx + 1)
            t = wsub(t, g)
            sol = rational_solve(positives, t)
            if sol is None or any(c < 0 for c in sol):
                break
        return total

    elements = weyl_generate(factor.form, factor.simple)
    total = 0
    for e in elements:
        target = wsub(apply_matrix(e.matrix, wadd(hw, factor.rho)), wadd(nu, factor.rho))
        sol = rational_solve(positives, target)
        if sol is None or any(c < 0 for c in sol):
            continue
        total += e.sign * partitions(target, 0)
    return total


@pytest.mark.parametrize("factory,hw_coeffs", [
    ("a2", (1, 1)), ("a2", (2, 1)), ("b2", (1, 1)), ("b2", (0, 2)), ("su2", (4,)),
])
def test_freudenthal_matches_kostant(factory, hw_coeffs):
    factor = {"a2": a2_factor, "b2": b2_factor, "su2": su2_factor}[factory]()
    # build hw with the requested simple coroot pairings
    cols = [tuple(a[j] for a in factor.simple) for j in range(factor.form.dim)]
    target = tuple(
        Fraction(c) * inner(factor.form, a, a) / 2
        for c, a in zip(hw_coeffs, factor.simple)
    )
    hw = tuple(rational_solve(cols, target))
    table = freudenthal(hw, factor)
    for nu, m in table.mults.items():
        assert m == _kostant_multiplicity(hw, nu, factor)


def test_restrict_weights_identity_and_collapse():
    f = a2_factor()
    t = freudenthal(f.rho, f)
    assert restrict_weights(t, lambda v: v) == t.mults
    collapsed = restrict_weights(t, lambda v: zero_weight(3))
    assert collapsed == {zero_weight(3): 8}


def test_su2_string_decompose_vector_rep():
    f = b2_factor()
    hw = weight([1, 0])  # 5-dimensional vector representation of so(5)
    t = freudenthal(hw, f)
    assert t.dimension() == 5
    strings = su2_string_decompose(t, weight([0, 2]))
    # weights +-e1, +-e2, 0 split along 2 e2 into one doublet, three trivials
    assert strings == {1: 3, 2: 1}
    assert sum(k * n for k, n in strings.items()) == 5


def test_validate_hc_parameter_g2():
    rd = quaternionic_root_datum("g2_2")
    ps = positive_system(rd)
    validate_hc_parameter(ps.rho, ps)
    with pytest.raises(DomainError):
        validate_hc_parameter(weight([1, -1, 0]), ps)  # singular against itself
    with pytest.raises(DomainError):
        validate_hc_parameter(wscale(Fraction(1, 2), ps.rho), ps)  # not integral
