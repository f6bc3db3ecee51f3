"""Matrix representations of Clifford algebras.

Two representations live here: the left-regular representation of an
arbitrary Cl(p,q) on its own 2^n-dimensional blade space (the workhorse
behind generic inversion), and the explicit 4x4 complex representation
of Cl(1,3) built from the quaternion units i = e3e2, j = e3e1, k = e1e2
under e_i -> sigma_i.  The latter gives Gamma_0 = diag(1,1,-1,-1) and
off-diagonal Gamma_k blocks, and carries the primitive idempotent
f = (1 + e0)/2 to diag(1,1,0,0).
"""

from __future__ import annotations

import numpy as np

from .isotopy import IsoContext
from .multivector import (
    AlgebraError,
    Multivector,
    Signature,
    geometric_product,
    reversion,
)

SIG13 = Signature(1, 3)


class NotInSpanError(AlgebraError):
    """A matrix does not lie in the span of the 16 blade images."""


def regular_representation(a: Multivector) -> np.ndarray:
    """Matrix of left multiplication by ``a`` in the blade basis.

    Column ``j`` holds the coefficients of ``a * e_blade(j)``, so
    ``reg(ab) = reg(a) @ reg(b)``.
    """
    sig = a.signature
    n = sig.blade_count
    mat = np.zeros((n, n), dtype=complex)
    for ma, ca in a.terms.items():
        for j in range(n):
            mask, sign = sig.blade_geometric(ma, j)
            mat[mask, j] += sign * ca
    return mat


_SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def _offdiag(block: np.ndarray) -> np.ndarray:
    out = np.zeros((4, 4), dtype=complex)
    out[:2, 2:] = block
    out[2:, :2] = block
    return out


class DiracRep:
    """The complexified 4x4 representation of Cl(1,3).

    ``gamma[mu]`` is the image of ``e_mu``; ``blade_images`` maps every
    blade mask to its matrix image (products of gammas, ascending index).
    """

    def __init__(self):
        # quaternion units mapped through e_i -> sigma_i:
        # i = e3e2 -> s3 s2, j = e3e1 -> s3 s1, k = e1e2 -> s1 s2
        qi = _SIGMA[2] @ _SIGMA[1]
        qj = _SIGMA[2] @ _SIGMA[0]
        qk = _SIGMA[0] @ _SIGMA[1]
        g0 = np.diag([1, 1, -1, -1]).astype(complex)
        self.gamma = (g0, _offdiag(qi), _offdiag(qj), _offdiag(qk))
        images = {0: np.eye(4, dtype=complex)}
        for mask in range(1, 16):
            m = np.eye(4, dtype=complex)
            for mu in range(4):
                if mask >> mu & 1:
                    m = m @ self.gamma[mu]
            images[mask] = m
        self.blade_images = images
        basis = np.column_stack([images[m].reshape(-1) for m in range(16)])
        self._basis = basis
        self._basis_inv = np.linalg.inv(basis)

    def rep(self, a: Multivector) -> np.ndarray:
        """Algebra homomorphism Cl(1,3;C) -> M(4,C)."""
        if a.signature != SIG13:
            raise AlgebraError("Dirac representation only covers Cl(1,3)")
        out = np.zeros((4, 4), dtype=complex)
        for mask, coeff in a.terms.items():
            out += coeff * self.blade_images[mask]
        return out

    def rep_inverse(self, m: np.ndarray, tol: float = 1e-8) -> Multivector:
        """Multivector whose image is ``m``; the 16 blade images span M(4,C)."""
        m = np.asarray(m, dtype=complex)
        if m.shape != (4, 4):
            raise AlgebraError("expected a 4x4 matrix")
        coeffs = self._basis_inv @ m.reshape(-1)
        residual = np.abs(self._basis @ coeffs - m.reshape(-1)).max()
        if residual > tol:
            raise NotInSpanError(f"matrix outside blade span, residual {residual:.3e}")
        return Multivector(SIG13, {mask: coeffs[mask] for mask in range(16)})


_DEFAULT_REP: DiracRep | None = None


def build_dirac_rep() -> DiracRep:
    """Shared Dirac representation (it is immutable, so one instance serves)."""
    global _DEFAULT_REP
    if _DEFAULT_REP is None:
        _DEFAULT_REP = DiracRep()
    return _DEFAULT_REP


def rep(d: DiracRep, a: Multivector) -> np.ndarray:
    return d.rep(a)


def rep_inverse(d: DiracRep, m: np.ndarray, tol: float = 1e-8) -> Multivector:
    return d.rep_inverse(m, tol)


def spin_plus_check(d: DiracRep, r: Multivector, tol: float = 1e-9) -> bool:
    """Membership test for the even elements with ``R R~ = 1``."""
    if any(k & 1 for k in r.grades()):
        return False
    m = d.rep(r) @ d.rep(reversion(r))
    return bool(np.abs(m - np.eye(4)).max() <= tol)


def iso_spin_plus_check(d: DiracRep, ctx: IsoContext, r: Multivector,
                        tol: float = 1e-9) -> bool:
    """Isotopic variant: even elements with ``R ⋄ R~ = ζ``."""
    if any(k & 1 for k in r.grades()):
        return False
    prod = geometric_product(geometric_product(r, ctx.zeta_inv), reversion(r))
    return (prod - ctx.zeta).max_abs() <= tol
