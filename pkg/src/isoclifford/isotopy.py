"""Isotopic liftings: ⋄ products steered by a fixed invertible isounit.

The associative isotope replaces the product ``AB`` by ``A ⋄ B = A ζ⁻¹ B``
for a fixed invertible element ζ, which becomes the new two-sided unit.
Lifted elements ``Aζ`` multiply like the originals (``Aζ ⋄ Bζ = ABζ``),
which is what transports algebra identities into isospace unchanged.

Non-associative base products (the octonions, in practice) get the two
one-sided isotopes and the X-product, where the grouping matters and the
base product is passed in explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .multivector import (
    AlgebraError,
    Multivector,
    Signature,
    geometric_product,
    grade_involution,
    inverse,
)

ProductFn = Callable[[Multivector, Multivector], Multivector]


class ConvergenceError(AlgebraError):
    """An exponential power series failed to converge under the term cap."""


@dataclass(frozen=True)
class IsoContext:
    """A fixed isounit ζ with its precomputed isotopic element ζ⁻¹."""

    zeta: Multivector
    zeta_inv: Multivector

    def __post_init__(self):
        if self.zeta.signature != self.zeta_inv.signature:
            raise AlgebraError("isounit and isotopic element must share a signature")
        residual = (geometric_product(self.zeta, self.zeta_inv) - 1).max_abs()
        if residual > 1e-10:
            raise AlgebraError(f"zeta * zeta_inv misses 1 by {residual:.3e}")

    @classmethod
    def create(cls, zeta: Multivector, zeta_inv: Multivector | None = None) -> "IsoContext":
        """Build a context, inverting ζ unless an inverse is supplied.

        An explicit ``zeta_inv`` covers units of non-associative algebras
        whose inverse is known in closed form (octonion conjugates, say);
        it still has to be a two-sided Clifford inverse.
        """
        if zeta_inv is None:
            zeta_inv = inverse(zeta)
        return cls(zeta, zeta_inv)

    @classmethod
    def identity(cls, sig: Signature) -> "IsoContext":
        one = sig.scalar(1.0)
        return cls(one, one)

    @property
    def signature(self) -> Signature:
        return self.zeta.signature

    def _check(self, a: Multivector) -> None:
        if a.signature != self.signature:
            raise AlgebraError("operand signature does not match the iso context")


# -- associative isotope ---------------------------------------------------------


def iso_product(ctx: IsoContext, a: Multivector, b: Multivector) -> Multivector:
    """``a ⋄ b = a ζ⁻¹ b``; ζ is the two-sided unit of this product."""
    ctx._check(a)
    ctx._check(b)
    return geometric_product(geometric_product(a, ctx.zeta_inv), b)


def lift(ctx: IsoContext, a: Multivector) -> Multivector:
    """Send ``a`` to its isospace avatar ``aζ``."""
    ctx._check(a)
    return geometric_product(a, ctx.zeta)


def zeta_apply(ctx: IsoContext, a: Multivector) -> Multivector:
    """Apply the isotopic element on the left: ``ζ⁻¹ a`` (undoes a right lift)."""
    ctx._check(a)
    return geometric_product(ctx.zeta_inv, a)


def iso_commutator(ctx: IsoContext, a: Multivector, b: Multivector) -> Multivector:
    """``[a, b]_ζ = a ⋄ b - b ⋄ a``."""
    return iso_product(ctx, a, b) - iso_product(ctx, b, a)


def geno_commutator(ctx_left: IsoContext, ctx_right: IsoContext,
                    a: Multivector, b: Multivector) -> Multivector:
    """Two-unit generalization ``a ζ⁻¹ b - b ξ⁻¹ a``; reduces to the
    isocommutator when both contexts share their unit."""
    ctx_left._check(a)
    ctx_right._check(b)
    left = geometric_product(geometric_product(a, ctx_left.zeta_inv), b)
    right = geometric_product(geometric_product(b, ctx_right.zeta_inv), a)
    return left - right


def iso_involution(ctx: IsoContext, a: Multivector) -> Multivector:
    """Grade involution transported to isospace: ``hat(a ζ⁻¹) ζ``.

    For a lifted element ``ψζ`` this is ``ψ̂ ζ``, i.e. the involution acts
    on the underlying element and leaves the unit alone.  Only with this
    reading does the iso exterior product of lifted vectors land on
    ``(u ∧ v) ζ`` for every invertible ζ; taking the plain involution of
    ``ψζ`` would drag a spurious ``ζ̂ ζ⁻¹`` factor in whenever ζ has odd
    grades.
    """
    return geometric_product(grade_involution(geometric_product(a, ctx.zeta_inv)), ctx.zeta)


def iso_wedge(ctx: IsoContext, v: Multivector, psi: Multivector) -> Multivector:
    """Iso exterior product ``½(v ⋄ ψ + ψ̂ ⋄ v)`` with the iso involution."""
    return 0.5 * (iso_product(ctx, v, psi) + iso_product(ctx, iso_involution(ctx, psi), v))


def iso_contraction(ctx: IsoContext, v: Multivector, psi: Multivector) -> Multivector:
    """Iso left contraction ``½(v ⋄ ψ - ψ̂ ⋄ v)``, twin of :func:`iso_wedge`."""
    return 0.5 * (iso_product(ctx, v, psi) - iso_product(ctx, iso_involution(ctx, psi), v))


def iso_metric(ctx: IsoContext, psi: Multivector, phi: Multivector) -> Multivector:
    """``½(ψ ⋄ φ + φ ⋄ ψ)``; for lifted vectors ``uζ, vζ`` this is ``g(u,v) ζ``."""
    return 0.5 * (iso_product(ctx, psi, phi) + iso_product(ctx, phi, psi))


# -- non-associative isotopes ---------------------------------------------------


def isotope_right_product(ctx: IsoContext, a: Multivector, b: Multivector,
                          product: ProductFn | None = None) -> Multivector:
    """``A ⋄_ζ B = A (ζ⁻¹ B)`` under the supplied base product; ζ is its
    right unit.  Grouping only matters for non-associative ``product``."""
    ctx._check(a)
    ctx._check(b)
    mul = product if product is not None else geometric_product
    return mul(a, mul(ctx.zeta_inv, b))


def isotope_left_product(ctx: IsoContext, a: Multivector, b: Multivector,
                         product: ProductFn | None = None) -> Multivector:
    """``A _ζ⋄ B = (A ζ⁻¹) B``; ζ is the left unit of this grouping."""
    ctx._check(a)
    ctx._check(b)
    mul = product if product is not None else geometric_product
    return mul(mul(a, ctx.zeta_inv), b)


def x_product(ctx: IsoContext, a: Multivector, b: Multivector,
              product: ProductFn | None = None) -> Multivector:
    """X-product ``A ∘_ζ B = (A ζ)(ζ⁻¹ B)`` under the supplied base product."""
    ctx._check(a)
    ctx._check(b)
    mul = product if product is not None else geometric_product
    return mul(mul(a, ctx.zeta), mul(ctx.zeta_inv, b))


# -- isocomplex numbers -----------------------------------------------------------


@dataclass(frozen=True)
class IsoComplex:
    """An isoscalar ``aζ``: the image of the complex number ``a`` in isospace."""

    context: IsoContext
    value: Multivector

    def __post_init__(self):
        a = self.scalar
        residual = (self.value - self.context.zeta * a).max_abs()
        bound = 1e-10 * max(1.0, abs(a) * self.context.zeta.max_abs())
        if residual > bound:
            raise AlgebraError("value is not proportional to the isounit")

    @classmethod
    def from_scalar(cls, ctx: IsoContext, a: complex) -> "IsoComplex":
        return cls(ctx, ctx.zeta * complex(a))

    @property
    def scalar(self) -> complex:
        """The complex number this isoscalar lifts."""
        mask = max(self.context.zeta.terms, key=lambda m: abs(self.context.zeta.coeff(m)))
        return self.value.coeff(mask) / self.context.zeta.coeff(mask)

    def _check(self, other: "IsoComplex") -> None:
        if self.context is not other.context and self.context != other.context:
            raise AlgebraError("isocomplex operands use different contexts")


def iso_add(x: IsoComplex, y: IsoComplex) -> IsoComplex:
    """``a₁ζ +^ζ a₂ζ = (a₁ + a₂)ζ``."""
    x._check(y)
    return IsoComplex(x.context, x.value + y.value)


def iso_mul(x: IsoComplex, y: IsoComplex) -> IsoComplex:
    """``a₁ζ ⋄ a₂ζ = (a₁ a₂)ζ``."""
    x._check(y)
    return IsoComplex(x.context, iso_product(x.context, x.value, y.value))


# -- exponentials -------------------------------------------------------------------


def clifford_exp(a: Multivector, max_terms: int = 200, rel_tol: float = 1e-12) -> Multivector:
    """Ordinary Clifford exponential by power series."""
    result = a.signature.scalar(1.0)
    term = a.signature.scalar(1.0)
    for k in range(1, max_terms + 1):
        term = geometric_product(term, a) * (1.0 / k)
        result = result + term
        if term.max_abs() <= rel_tol * max(result.max_abs(), 1e-300):
            return result
    raise ConvergenceError(f"exponential series did not settle in {max_terms} terms")


def iso_exp(ctx: IsoContext, a: Multivector, max_terms: int = 200,
            rel_tol: float = 1e-12) -> Multivector:
    """Iso exponential ``Σ a^{⋄k}/k!`` with ``a^{⋄0} = ζ``.

    Since ``a^{⋄k} = (a ζ⁻¹)^k ζ`` this is evaluated in closed form as
    ``exp(a ζ⁻¹) ζ`` with one ordinary series; :func:`iso_exp_series`
    keeps the literal ⋄-power sum around as a cross-check.
    """
    ctx._check(a)
    return geometric_product(clifford_exp(geometric_product(a, ctx.zeta_inv),
                                          max_terms, rel_tol), ctx.zeta)


def iso_exp_series(ctx: IsoContext, a: Multivector, max_terms: int = 200,
                   rel_tol: float = 1e-12) -> Multivector:
    """Literal ⋄-power series for the iso exponential (slow path, oracle)."""
    ctx._check(a)
    result = ctx.zeta
    term = ctx.zeta
    for k in range(1, max_terms + 1):
        term = iso_product(ctx, term, a) * (1.0 / k)
        result = result + term
        if term.max_abs() <= rel_tol * max(result.max_abs(), 1e-300):
            return result
    raise ConvergenceError(f"iso exponential series did not settle in {max_terms} terms")


def random_invertible_context(sig: Signature, rng, n_terms: int = 6,
                              attempts: int = 20) -> IsoContext:
    """Random isounit drawn until inversion succeeds (well-conditioned)."""
    from .multivector import NonInvertibleError, random_multivector

    for _ in range(attempts):
        zeta = sig.scalar(1.0 + 0.5 * rng.standard_normal()) + random_multivector(
            sig, rng, n_terms=n_terms, scale=0.3)
        try:
            return IsoContext.create(zeta)
        except NonInvertibleError:
            continue
    raise AlgebraError(f"no invertible isounit found in {attempts} attempts")
