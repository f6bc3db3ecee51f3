"""Isotopic lifting layer: diamond products, isofields, iso exponential."""

import numpy as np
import pytest

from isoclifford.isotopy import (
    ConvergenceError,
    IsoComplex,
    IsoContext,
    clifford_exp,
    geno_commutator,
    iso_add,
    iso_commutator,
    iso_contraction,
    iso_exp,
    iso_exp_series,
    iso_metric,
    iso_mul,
    iso_product,
    iso_wedge,
    isotope_left_product,
    isotope_right_product,
    lift,
    random_invertible_context,
    x_product,
    zeta_apply,
)
from isoclifford.multivector import (
    AlgebraError,
    Signature,
    geometric_product,
    random_multivector,
    random_vector,
    wedge,
)

S30 = Signature(3, 0)
S13 = Signature(1, 3)
S07 = Signature(0, 7)


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def test_identity_isounit_recovers_plain_product(rng):
    ctx = IsoContext.identity(S30)
    a = random_multivector(S30, rng, 6)
    b = random_multivector(S30, rng, 6)
    assert (iso_product(ctx, a, b) - a * b).max_abs() < 1e-14


def test_isounit_is_two_sided_unit(rng):
    for _ in range(5):
        ctx = random_invertible_context(S13, rng)
        a = random_multivector(S13, rng, 6)
        assert (iso_product(ctx, a, ctx.zeta) - a).max_abs() < 1e-10
        assert (iso_product(ctx, ctx.zeta, a) - a).max_abs() < 1e-10


def test_blade_isounit_example():
    # zeta = e1 in Cl(3,0): e2 <> e3 = e2 e1 e3 = -e123
    ctx = IsoContext.create(S30.e(0))
    got = iso_product(ctx, S30.e(1), S30.e(2))
    assert (got + S30.e(0, 1, 2)).max_abs() < 1e-14


def test_context_validation():
    with pytest.raises(AlgebraError):
        IsoContext(S30.e(0), S30.e(1))


def test_lift_and_zeta_apply(rng):
    ctx = random_invertible_context(S13, rng)
    assert (lift(ctx, S13.scalar(1.0)) - ctx.zeta).max_abs() < 1e-14
    assert (zeta_apply(ctx, ctx.zeta) - 1).max_abs() < 1e-10
    a = random_multivector(S13, rng, 6)
    b = random_multivector(S13, rng, 6)
    lhs = iso_product(ctx, lift(ctx, a), lift(ctx, b))
    assert (lhs - lift(ctx, a * b)).max_abs() < 1e-9


def test_diamond_associativity(rng):
    for _ in range(5):
        ctx = random_invertible_context(S30, rng)
        a, b, c = (random_multivector(S30, rng, 6) for _ in range(3))
        lhs = iso_product(ctx, iso_product(ctx, a, b), c)
        rhs = iso_product(ctx, a, iso_product(ctx, b, c))
        assert (lhs - rhs).max_abs() < 1e-9


def test_isocommutator(rng):
    ctx = random_invertible_context(S13, rng)
    a = random_multivector(S13, rng, 6)
    assert iso_commutator(ctx, a, a).max_abs() < 1e-12
    ctx1 = IsoContext.identity(S30)
    got = iso_commutator(ctx1, S30.e(0), S30.e(1))
    assert (got - 2 * S30.e(0, 1)).max_abs() < 1e-14


def test_lifted_commutator_identity(rng):
    for sig in (S30, S13, S07):
        ctx = random_invertible_context(sig, rng)
        for _ in range(20):
            a = random_multivector(sig, rng, 6)
            b = random_multivector(sig, rng, 6)
            lhs = iso_commutator(ctx, lift(ctx, a), lift(ctx, b))
            rhs = lift(ctx, a * b - b * a)
            assert (lhs - rhs).max_abs() < 1e-9


def test_genocommutator_reduces_to_iso(rng):
    ctx = random_invertible_context(S13, rng)
    xi = random_invertible_context(S13, rng)
    a = random_multivector(S13, rng, 6)
    b = random_multivector(S13, rng, 6)
    assert (geno_commutator(ctx, ctx, a, b) - iso_commutator(ctx, a, b)).max_abs() < 1e-12
    general = geno_commutator(ctx, xi, a, b)
    direct = (geometric_product(geometric_product(a, ctx.zeta_inv), b)
              - geometric_product(geometric_product(b, xi.zeta_inv), a))
    assert (general - direct).max_abs() < 1e-12


def test_iso_wedge_identity_unit(rng):
    ctx = IsoContext.identity(S13)
    v = random_vector(S13, rng)
    psi = random_multivector(S13, rng, 8)
    assert (iso_wedge(ctx, v, psi) - wedge(v, psi)).max_abs() < 1e-12
    assert iso_wedge(ctx, v, v).max_abs() < 1e-12


def test_iso_wedge_lifted_pair(rng):
    for _ in range(5):
        ctx = random_invertible_context(S13, rng)
        u = random_vector(S13, rng)
        v = random_vector(S13, rng)
        got = iso_wedge(ctx, lift(ctx, u), lift(ctx, v))
        assert (got - lift(ctx, wedge(u, v))).max_abs() < 1e-9


def test_iso_contraction_halves_the_product(rng):
    ctx = random_invertible_context(S13, rng)
    v = lift(ctx, random_vector(S13, rng))
    psi = lift(ctx, random_multivector(S13, rng, 8))
    total = iso_wedge(ctx, v, psi) + iso_contraction(ctx, v, psi)
    assert (total - iso_product(ctx, v, psi)).max_abs() < 1e-10


def test_iso_metric_on_lifted_basis(rng):
    ctx = random_invertible_context(S13, rng)
    eta = (1.0, -1.0, -1.0, -1.0)
    for mu in range(4):
        for nu in range(4):
            got = iso_metric(ctx, lift(ctx, S13.e(mu)), lift(ctx, S13.e(nu)))
            want = ctx.zeta * (eta[mu] if mu == nu else 0.0)
            assert (got - want).max_abs() < 1e-10


def test_nonassociative_groupings_collapse_for_clifford(rng):
    # with the associative base product all three groupings agree
    ctx = random_invertible_context(S30, rng)
    a = random_multivector(S30, rng, 5)
    b = random_multivector(S30, rng, 5)
    plain = iso_product(ctx, a, b)
    assert (isotope_right_product(ctx, a, b) - plain).max_abs() < 1e-10
    assert (isotope_left_product(ctx, a, b) - plain).max_abs() < 1e-10
    x = x_product(ctx, a, b)
    direct = geometric_product(geometric_product(a, ctx.zeta),
                               geometric_product(ctx.zeta_inv, b))
    assert (x - direct).max_abs() < 1e-12


def test_isocomplex_field(rng):
    ctx = random_invertible_context(S13, rng)
    two = IsoComplex.from_scalar(ctx, 2.0)
    three = IsoComplex.from_scalar(ctx, 3.0)
    assert abs(iso_add(two, three).scalar - 5.0) < 1e-10
    assert abs(iso_mul(two, three).scalar - 6.0) < 1e-10
    # isoscalar acting through the diamond product rescales plain operators
    a = random_multivector(S13, rng, 6)
    acted = iso_product(ctx, two.value, a)
    assert (acted - 2.0 * a).max_abs() < 1e-9


def test_isocomplex_rejects_non_proportional(rng):
    ctx = random_invertible_context(S13, rng)
    with pytest.raises(AlgebraError):
        IsoComplex(ctx, ctx.zeta + S13.e(0) * 10.0)


def test_iso_exp_basics(rng):
    ctx = random_invertible_context(S13, rng)
    assert (iso_exp(ctx, S13.scalar(0.0)) - ctx.zeta).max_abs() < 1e-12
    ident = IsoContext.identity(S13)
    a = random_multivector(S13, rng, 5, scale=0.3)
    assert (iso_exp(ident, a) - clifford_exp(a)).max_abs() < 1e-12
    # isoscalar argument: diamond powers of t*zeta are t^k zeta, so the
    # series sums to e^t zeta
    t = 0.7
    got = iso_exp(ctx, lift(ctx, S13.scalar(t)))
    assert (got - np.exp(t) * ctx.zeta).max_abs() < 1e-10


def test_iso_exp_matches_series(rng):
    for _ in range(5):
        ctx = random_invertible_context(S13, rng)
        a = random_multivector(S13, rng, 5, scale=0.3)
        assert (iso_exp(ctx, a) - iso_exp_series(ctx, a)).max_abs() < 1e-9


def test_exp_divergence_raises():
    big = S30.scalar(1e6)
    with pytest.raises(ConvergenceError):
        clifford_exp(big, max_terms=10)


def test_rotor_exponential():
    theta = 0.4
    rotor = clifford_exp(theta * S30.e(0, 1))
    expect = S30.scalar(np.cos(theta)) + np.sin(theta) * S30.e(0, 1)
    assert (rotor - expect).max_abs() < 1e-12
