"""Sparse multivector arithmetic for real/complex Clifford algebras Cl(p,q).

Elements are stored as sparse mappings from a basis-blade bitmask to a
complex coefficient.  Bit ``i`` of a mask means the basis vector ``e_i``
is a factor of the blade, factors ordered by ascending index.  The first
``p`` basis vectors square to +1, the remaining ``q`` to -1.

The geometric product of two blades is computed with the canonical
reordering sign (counting transpositions by popcount) plus one metric
factor for every repeated index.  Wedge and the two contractions are
grade-selected special cases of the same kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

MAX_DIMENSION = 12
PRUNE_EPS = 1e-14


class AlgebraError(Exception):
    """Base class for algebra-level failures."""


class SignatureMismatchError(AlgebraError):
    """Raised when operands live in different algebras."""


class NonInvertibleError(AlgebraError):
    """Raised when an element has no (numerically resolvable) inverse."""


def _reordering_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation of blades ``a`` and ``b``.

    Counts, mod 2, the transpositions needed to move every generator of
    ``b`` past the higher-index generators of ``a``.
    """
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


@dataclass(frozen=True)
class Signature:
    """Quadratic-space signature: ``p`` pluses then ``q`` minuses."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("signature counts must be non-negative")
        if self.p + self.q > MAX_DIMENSION:
            raise ValueError(f"dimension {self.p + self.q} exceeds cap {MAX_DIMENSION}")

    @property
    def dim(self) -> int:
        return self.p + self.q

    @property
    def blade_count(self) -> int:
        return 1 << self.dim

    def metric(self, i: int) -> int:
        """Square of basis vector ``e_i`` (+1 or -1)."""
        if not 0 <= i < self.dim:
            raise ValueError(f"basis index {i} out of range for Cl({self.p},{self.q})")
        return 1 if i < self.p else -1

    def blade_geometric(self, a: int, b: int) -> tuple[int, int]:
        """Geometric product of two blade masks: ``(result_mask, sign)``."""
        sign = _reordering_sign(a, b)
        common = a & b
        while common:
            i = (common & -common).bit_length() - 1
            sign *= self.metric(i)
            common &= common - 1
        return a ^ b, sign

    # -- element constructors ------------------------------------------------

    def scalar(self, value: complex) -> "Multivector":
        return Multivector(self, {0: complex(value)})

    def e(self, *indices: int) -> "Multivector":
        """Basis blade ``e_{i1} e_{i2} ...`` (indices need not be sorted)."""
        out = self.scalar(1.0)
        for i in indices:
            out = out * Multivector(self, {1 << i: 1.0})
        return out

    def blade(self, mask: int, coeff: complex = 1.0) -> "Multivector":
        return Multivector(self, {mask: complex(coeff)})

    def basis_blades(self) -> Iterator[int]:
        return iter(range(self.blade_count))

    def pseudoscalar(self) -> "Multivector":
        return self.blade(self.blade_count - 1)


class Multivector:
    """Immutable sparse multivector over a fixed :class:`Signature`."""

    __slots__ = ("signature", "_terms")

    def __init__(self, signature: Signature, terms: Mapping[int, complex]):
        limit = signature.blade_count
        pruned: dict[int, complex] = {}
        for mask, coeff in terms.items():
            if not 0 <= mask < limit:
                raise ValueError(f"blade mask {mask} invalid for Cl({signature.p},{signature.q})")
            c = complex(coeff)
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise ValueError("multivector coefficients must be finite")
            if abs(c) > PRUNE_EPS:
                pruned[mask] = c
        object.__setattr__(self, "signature", signature)
        object.__setattr__(self, "_terms", MappingProxyType(pruned))

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- views ----------------------------------------------------------------

    @property
    def terms(self) -> Mapping[int, complex]:
        return self._terms

    def __iter__(self) -> Iterator[tuple[int, complex]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, mask: int) -> complex:
        return self._terms.get(mask, 0j)

    @property
    def scalar_part(self) -> complex:
        return self._terms.get(0, 0j)

    def grades(self) -> set[int]:
        return {mask.bit_count() for mask in self._terms}

    def max_abs(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector."""
        return math.sqrt(sum(abs(c) ** 2 for c in self._terms.values()))

    # -- linear structure -------------------------------------------------------

    def _check_signature(self, other: "Multivector") -> None:
        if self.signature != other.signature:
            raise SignatureMismatchError(
                f"Cl({self.signature.p},{self.signature.q}) vs "
                f"Cl({other.signature.p},{other.signature.q})"
            )

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = self.signature.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_signature(other)
        out = dict(self._terms)
        for mask, coeff in other._terms.items():
            out[mask] = out.get(mask, 0j) + coeff
        return Multivector(self.signature, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector(self.signature, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, float, complex)):
            other = self.signature.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Multivector(self.signature, {m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Multivector):
            return NotImplemented
        return geometric_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return self * (1.0 / other)
        return NotImplemented

    def __xor__(self, other):
        if isinstance(other, Multivector):
            return wedge(self, other)
        return NotImplemented

    # -- comparison --------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, float, complex)):
            other = self.signature.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.signature == other.signature and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        return hash((self.signature, frozenset(self._terms.items())))

    def isclose(self, other, tol: float = 1e-12) -> bool:
        if isinstance(other, (int, float, complex)):
            other = self.signature.scalar(other)
        self._check_signature(other)
        return (self - other).max_abs() <= tol

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for mask in sorted(self._terms, key=lambda m: (m.bit_count(), m)):
            coeff = self._terms[mask]
            if mask == 0:
                parts.append(f"{coeff:.6g}")
            else:
                idx = [str(i) for i in range(self.signature.dim) if mask >> i & 1]
                sep = "," if self.signature.dim > 10 else ""
                parts.append(f"{coeff:.6g}*e{sep.join(idx)}")
        return " + ".join(parts)


# -- products ---------------------------------------------------------------------


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Clifford product ``ab``; on vectors ``e_i e_j + e_j e_i = 2 g_ij``."""
    a._check_signature(b)
    sig = a.signature
    out: dict[int, complex] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            mask, sign = sig.blade_geometric(ma, mb)
            out[mask] = out.get(mask, 0j) + sign * ca * cb
    return Multivector(sig, out)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product: grade-raising, null on repeated factors."""
    a._check_signature(b)
    sig = a.signature
    out: dict[int, complex] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if ma & mb:
                continue
            sign = _reordering_sign(ma, mb)
            mask = ma | mb
            out[mask] = out.get(mask, 0j) + sign * ca * cb
    return Multivector(sig, out)


def left_contraction(a: Multivector, b: Multivector) -> Multivector:
    """Left contraction ``a ⌟ b``: grade of each term pair is lowered to s-r."""
    a._check_signature(b)
    sig = a.signature
    out: dict[int, complex] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if ma & ~mb:
                continue
            mask, sign = sig.blade_geometric(ma, mb)
            out[mask] = out.get(mask, 0j) + sign * ca * cb
    return Multivector(sig, out)


def right_contraction(a: Multivector, b: Multivector) -> Multivector:
    """Right contraction ``a ⌞ b``, the mirror twin of :func:`left_contraction`."""
    a._check_signature(b)
    sig = a.signature
    out: dict[int, complex] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if mb & ~ma:
                continue
            mask, sign = sig.blade_geometric(ma, mb)
            out[mask] = out.get(mask, 0j) + sign * ca * cb
    return Multivector(sig, out)


# -- involutions --------------------------------------------------------------------


def _grade_signed(a: Multivector, sign_of_grade) -> Multivector:
    return Multivector(
        a.signature,
        {m: sign_of_grade(m.bit_count()) * c for m, c in a.terms.items()},
    )


def reversion(a: Multivector) -> Multivector:
    """Reverse every blade: grade k picks up ``(-1)^(k(k-1)/2)``."""
    return _grade_signed(a, lambda k: -1 if (k // 2) & 1 else 1)


def grade_involution(a: Multivector) -> Multivector:
    """Main automorphism: grade k picks up ``(-1)^k``."""
    return _grade_signed(a, lambda k: -1 if k & 1 else 1)


def conjugation(a: Multivector) -> Multivector:
    """Reversion followed by the main automorphism."""
    return grade_involution(reversion(a))


def grade_project(a: Multivector, k: int) -> Multivector:
    """The grade-k part of ``a``."""
    if not 0 <= k <= a.signature.dim:
        raise ValueError(f"grade {k} out of range for Cl({a.signature.p},{a.signature.q})")
    return Multivector(a.signature, {m: c for m, c in a.terms.items() if m.bit_count() == k})


def grade_select(a: Multivector, grades: Iterable[int]) -> Multivector:
    wanted = set(grades)
    return Multivector(a.signature, {m: c for m, c in a.terms.items() if m.bit_count() in wanted})


# -- inversion ------------------------------------------------------------------------


def inverse(a: Multivector, tol: float = 1e-8) -> Multivector:
    """Multiplicative inverse of ``a``.

    A versor-style fast path (``a ã`` a nonzero scalar) handles blades,
    scalars and rotor-like elements exactly; everything else goes through
    the left-regular-representation linear solve.  The result is always
    validated: if ``a a^{-1}`` misses 1 by more than ``tol`` the element
    is declared singular.
    """
    if not a:
        raise NonInvertibleError("zero has no inverse")
    rev = reversion(a)
    gram = geometric_product(a, rev)
    s = gram.scalar_part
    if abs(s) > PRUNE_EPS and (gram - s).max_abs() <= 1e-12 * abs(s):
        candidate = rev * (1.0 / s)
    else:
        candidate = _regular_solve_inverse(a)
    residual = (geometric_product(a, candidate) - 1).max_abs()
    if residual > tol:
        raise NonInvertibleError(f"inverse residual {residual:.3e} exceeds {tol:.1e}")
    return candidate


def _regular_solve_inverse(a: Multivector) -> Multivector:
    import numpy as np

    from .dirac import regular_representation

    sig = a.signature
    mat = regular_representation(a)
    rhs = np.zeros(sig.blade_count, dtype=complex)
    rhs[0] = 1.0
    try:
        coeffs = np.linalg.solve(mat, rhs)
    except np.linalg.LinAlgError as exc:
        raise NonInvertibleError(f"regular representation is singular: {exc}") from exc
    return Multivector(sig, {m: coeffs[m] for m in range(sig.blade_count)})


# -- sampling -------------------------------------------------------------------------


def random_multivector(sig: Signature, rng, n_terms: int = 8, scale: float = 1.0,
                        grades: Iterable[int] | None = None) -> Multivector:
    """Random sparse multivector with ``n_terms`` complex Gaussian terms.

    ``rng`` is a ``numpy.random.Generator`` or ``RandomState``; restricting
    ``grades`` draws blades only from those grades.
    """
    if grades is None:
        pool = list(range(sig.blade_count))
    else:
        wanted = set(grades)
        pool = [m for m in range(sig.blade_count) if m.bit_count() in wanted]
    n = min(n_terms, len(pool))
    masks = rng.choice(len(pool), size=n, replace=False)
    terms = {}
    for k in masks:
        re, im = rng.standard_normal(2)
        terms[pool[int(k)]] = scale * complex(re, im)
    return Multivector(sig, terms)


def random_vector(sig: Signature, rng, scale: float = 1.0) -> Multivector:
    comps = rng.standard_normal(sig.dim) * scale
    return Multivector(sig, {1 << i: complex(comps[i]) for i in range(sig.dim)})
