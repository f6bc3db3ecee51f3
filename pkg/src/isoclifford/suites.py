"""Named verification suites behind ``isoclifford verify``.

Each suite re-runs the module invariants with a fixed random seed and
returns one record per check plus, where relevant, a comparison block
holding previously published values next to the computed ones (those
comparisons are reported, never asserted: several printed values are
not reproducible and the flags say so).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import dirac, flavor, lie_su, octonion
from .isotopy import (
    IsoComplex,
    IsoContext,
    clifford_exp,
    geno_commutator,
    iso_add,
    iso_commutator,
    iso_exp,
    iso_exp_series,
    iso_metric,
    iso_mul,
    iso_product,
    iso_wedge,
    lift,
    random_invertible_context,
)
from .multivector import (
    Multivector,
    Signature,
    geometric_product,
    grade_involution,
    inverse,
    left_contraction,
    random_multivector,
    random_vector,
    reversion,
    right_contraction,
    wedge,
)

DEFAULT_SEED = 0xC1F0

SUITE_NAMES = ("clifford", "isotopy", "octonion", "su3", "su6", "dirac", "flavor")


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    residual: float
    tolerance: float


class _Recorder:
    def __init__(self, tol_override: float | None = None):
        self.checks: list[Check] = []
        self.comparisons: dict = {}
        self._tol_override = tol_override

    def add(self, name: str, residual: float, tolerance: float) -> None:
        tol = self._tol_override if self._tol_override is not None else tolerance
        residual = float(abs(residual))
        self.checks.append(Check(name, residual <= tol, residual, tol))

    def add_flag(self, name: str, ok: bool, tolerance: float = 0.5) -> None:
        # boolean checks encoded as residual 0/1
        self.add(name, 0.0 if ok else 1.0, tolerance)


def _rng():
    return np.random.default_rng(DEFAULT_SEED)


TEST_SIGNATURES = (Signature(3, 0), Signature(1, 3), Signature(0, 7))


# -- clifford ------------------------------------------------------------------------


def suite_clifford(rec: _Recorder) -> None:
    rng = _rng()
    for sig in TEST_SIGNATURES:
        tag = f"cl{sig.p}{sig.q}"
        worst = 0.0
        for _ in range(200):
            a = random_multivector(sig, rng, 8)
            b = random_multivector(sig, rng, 8)
            c = random_multivector(sig, rng, 8)
            worst = max(worst, ((a * b) * c - a * (b * c)).max_abs())
        rec.add(f"{tag}.associativity", worst, 1e-10)

        worst = 0.0
        for i in range(sig.dim):
            for j in range(sig.dim):
                ei, ej = sig.e(i), sig.e(j)
                g = 2.0 * (sig.metric(i) if i == j else 0.0)
                worst = max(worst, (ei * ej + ej * ei - g).max_abs())
        rec.add(f"{tag}.clifford_relation", worst, 0.0)

        worst_f = worst_d = 0.0
        for _ in range(50):
            v = random_vector(sig, rng)
            psi = random_multivector(sig, rng, 8)
            worst_f = max(worst_f, (v * psi - (wedge(v, psi) + left_contraction(v, psi))).max_abs())
            worst_d = max(worst_d, (left_contraction(v, psi)
                                    + right_contraction(grade_involution(psi), v)).max_abs())
        rec.add(f"{tag}.fundamental_identity", worst_f, 1e-12)
        rec.add(f"{tag}.contraction_duality", worst_d, 1e-12)

        worst = 0.0
        for _ in range(50):
            a = random_multivector(sig, rng, 8)
            b = random_multivector(sig, rng, 8)
            worst = max(worst, (reversion(a * b) - reversion(b) * reversion(a)).max_abs())
        rec.add(f"{tag}.reversion_antiautomorphism", worst, 1e-10)

        worst = 0.0
        for _ in range(20):
            a = sig.scalar(2.0 + rng.random()) + random_multivector(sig, rng, 6, scale=0.4)
            worst = max(worst, (a * inverse(a) - 1).max_abs())
        rec.add(f"{tag}.inverse_roundtrip", worst, 1e-9)


# -- isotopy -------------------------------------------------------------------------


def suite_isotopy(rec: _Recorder) -> None:
    rng = _rng()
    sig = Signature(1, 3)

    worst_assoc = worst_unit = worst_lift = 0.0
    for _ in range(10):
        ctx = random_invertible_context(sig, rng)
        for _ in range(10):
            a = random_multivector(sig, rng, 6)
            b = random_multivector(sig, rng, 6)
            c = random_multivector(sig, rng, 6)
            lhs = iso_product(ctx, iso_product(ctx, a, b), c)
            rhs = iso_product(ctx, a, iso_product(ctx, b, c))
            worst_assoc = max(worst_assoc, (lhs - rhs).max_abs())
            worst_unit = max(worst_unit, (iso_product(ctx, a, ctx.zeta) - a).max_abs(),
                             (iso_product(ctx, ctx.zeta, a) - a).max_abs())
            worst_lift = max(worst_lift, (iso_product(ctx, lift(ctx, a), lift(ctx, b))
                                          - lift(ctx, a * b)).max_abs())
    rec.add("diamond.associativity", worst_assoc, 1e-9)
    rec.add("diamond.unit_law", worst_unit, 1e-10)
    rec.add("lift.homomorphism", worst_lift, 1e-9)

    worst = 0.0
    for s in TEST_SIGNATURES:
        ctx = random_invertible_context(s, rng)
        for _ in range(30):
            a = random_multivector(s, rng, 6)
            b = random_multivector(s, rng, 6)
            lhs = iso_commutator(ctx, lift(ctx, a), lift(ctx, b))
            rhs = lift(ctx, a * b - b * a)
            worst = max(worst, (lhs - rhs).max_abs())
    rec.add("isocommutator.lift_identity", worst, 1e-9)

    ctx = random_invertible_context(sig, rng)
    worst = 0.0
    for _ in range(30):
        a, b, c = (random_multivector(sig, rng, 6) for _ in range(3))
        jac = (iso_commutator(ctx, a, iso_commutator(ctx, b, c))
               + iso_commutator(ctx, b, iso_commutator(ctx, c, a))
               + iso_commutator(ctx, c, iso_commutator(ctx, a, b)))
        worst = max(worst, jac.max_abs())
    rec.add("isocommutator.jacobi", worst, 1e-9)

    a = random_multivector(sig, rng, 6)
    b = random_multivector(sig, rng, 6)
    rec.add("genocommutator.iso_degeneration",
            (geno_commutator(ctx, ctx, a, b) - iso_commutator(ctx, a, b)).max_abs(), 1e-12)

    worst = 0.0
    for _ in range(10):
        ctx2 = random_invertible_context(sig, rng)
        for _ in range(5):
            a = random_multivector(sig, rng, 5, scale=0.3)
            worst = max(worst, (iso_exp(ctx2, a) - iso_exp_series(ctx2, a)).max_abs())
    rec.add("iso_exp.closed_form_vs_series", worst, 1e-9)

    x = IsoComplex.from_scalar(ctx, 2.0 - 1.0j)
    y = IsoComplex.from_scalar(ctx, 0.5 + 3.0j)
    s = iso_add(x, y)
    p = iso_mul(x, y)
    rec.add("isofield.sum", abs(s.scalar - (x.scalar + y.scalar)), 1e-10)
    rec.add("isofield.product", abs(p.scalar - x.scalar * y.scalar), 1e-10)
    rec.add("isofield.closure",
            (p.value - ctx.zeta * (x.scalar * y.scalar)).max_abs(), 1e-9)

    worst = 0.0
    eta = {(0, 0): 1.0, (1, 1): -1.0, (2, 2): -1.0, (3, 3): -1.0}
    for mu in range(4):
        for nu in range(4):
            lu = lift(ctx, sig.e(mu))
            lv = lift(ctx, sig.e(nu))
            want = ctx.zeta * eta.get((mu, nu), 0.0)
            got = iso_product(ctx, lu, lv) + iso_product(ctx, lv, lu)
            worst = max(worst, (got - 2 * want).max_abs())
            worst = max(worst, (iso_metric(ctx, lu, lv) - want).max_abs())
    rec.add("iso_metric.lifted_anticommutation", worst, 1e-10)

    worst = 0.0
    for _ in range(20):
        u = random_vector(sig, rng)
        v = random_vector(sig, rng)
        worst = max(worst, (iso_wedge(ctx, lift(ctx, u), lift(ctx, v))
                            - lift(ctx, wedge(u, v))).max_abs())
    rec.add("iso_wedge.lifted_pair_identity", worst, 1e-9)


# -- octonion ------------------------------------------------------------------------


def suite_octonion(rec: _Recorder) -> None:
    rng = _rng()
    for a in range(1, 8):
        for b in range(1, 8):
            got = octonion.oct_product(octonion.oct_unit(a), octonion.oct_unit(b))
            want = octonion.table_product(a, b)
            rec.add(f"table.e{a}_e{b}", (got - want).max_abs(), 1e-12)

    one = octonion.oct_unit(0)
    worst = 0.0
    for a in range(8):
        u = octonion.oct_unit(a)
        worst = max(worst, (octonion.oct_product(one, u) - u).max_abs(),
                    (octonion.oct_product(u, one) - u).max_abs())
    rec.add("unit_element", worst, 1e-12)

    def rand_par():
        comps = rng.standard_normal(8)
        return Multivector(octonion.SIG07,
                           {0: complex(comps[0]),
                            **{1 << i: complex(comps[i + 1]) for i in range(7)}})

    worst = 0.0
    for _ in range(200):
        x, y = rand_par(), rand_par()
        worst = max(worst, abs(octonion.oct_norm(octonion.oct_product(x, y))
                               - octonion.oct_norm(x) * octonion.oct_norm(y)))
    rec.add("norm_composition", worst, 1e-9)

    worst = 0.0
    for _ in range(100):
        x, y = rand_par(), rand_par()
        xx = octonion.oct_product(x, x)
        worst = max(worst, (octonion.oct_product(x, octonion.oct_product(x, y))
                            - octonion.oct_product(xx, y)).max_abs())
        worst = max(worst, (octonion.oct_product(octonion.oct_product(y, x), x)
                            - octonion.oct_product(y, xx)).max_abs())
    rec.add("alternativity", worst, 1e-9)

    witness = 0.0
    for a in range(1, 8):
        for b in range(1, 8):
            for c in range(1, 8):
                ea, eb, ec = (octonion.oct_unit(k) for k in (a, b, c))
                lhs = octonion.oct_product(octonion.oct_product(ea, eb), ec)
                rhs = octonion.oct_product(ea, octonion.oct_product(eb, ec))
                witness = max(witness, (lhs - rhs).max_abs())
        if witness >= 1.0:
            break
    rec.add("non_associativity_witness", 0.0 if witness >= 1.0 else 1.0, 0.5)

    z = octonion.oct_unit(1)
    e2, e5 = octonion.oct_unit(2), octonion.oct_unit(5)
    rec.add("isotope_right.e2_e5",
            (octonion.oct_isotope_right(z, e2, e5) + octonion.oct_unit(7)).max_abs(), 1e-12)
    rec.add("isotope_left.e2_e5",
            (octonion.oct_isotope_left(z, e2, e5) - octonion.oct_unit(7)).max_abs(), 1e-12)


# -- lie algebra suites -----------------------------------------------------------------


def _case1_factor(ctx=None):
    gs = lie_su.su3_case1_generators(ctx)
    comm = gs.commutator(0, 1)
    lam3 = gs.generators[2]
    # least-squares scalar: comm ~ factor * lam3
    num = sum(comm.coeff(m) * np.conj(c) for m, c in lam3.terms.items())
    den = sum(abs(c) ** 2 for c in lam3.terms.values())
    factor = num / den
    resid = (comm - lam3 * factor).max_abs()
    return complex(factor), float(resid)


def suite_su3(rec: _Recorder) -> None:
    rng = _rng()
    for builder, label in ((lie_su.su3_case1_generators, "case1"),
                           (lie_su.su3_case2_generators, "case2")):
        gs = builder()
        rec.add(f"{label}.dimension", abs(lie_su.span_rank(gs) - 8), 0.0)
        sc = lie_su.structure_constants(gs)
        rec.add(f"{label}.closure", sc.max_residual, 1e-8)
        rec.add(f"{label}.unit_component", abs(sc.unit_component).max(), 1e-9)

    gs = lie_su.su3_case1_generators()
    factor, resid = _case1_factor()
    rec.add("case1.example_commutator_on_lam3", resid, 1e-9)
    rec.add("case1.example_factor_is_2i", abs(factor - 2j), 1e-9)
    rec.comparisons["example_commutator_factor"] = {
        "computed": [factor.real, factor.imag],
        "reference": [0.0, 1.0],
        "matches_reference": bool(abs(factor - 1j) < 1e-9),
        "note": "reference display drops its own normalization scalar; "
                "the measured factor is 2i",
    }

    sub = lie_su.GeneratorSet("su2xu1", gs.signature, gs.generators[:3])
    sc_sub = lie_su.structure_constants(sub)
    rec.add("case1.su2_subalgebra_closure", sc_sub.max_residual, 1e-9)
    worst = 0.0
    lam8 = gs.generators[7]
    for k in range(3):
        g = gs.generators[k]
        worst = max(worst, (lam8 * g - g * lam8).max_abs())
    rec.add("case1.lam8_commutes_with_su2", worst, 1e-9)

    sc = lie_su.structure_constants(gs)
    f = flavor.structure_constants_f(3)
    rec.add("case1.constants_match_2i_f", np.abs(sc.c - 2j * f).max(), 1e-6)

    ctx = random_invertible_context(Signature(1, 3), rng)
    gsi = lie_su.su3_case1_generators(ctx)
    worst = max((geometric_product(g, ctx.zeta) - gi).max_abs()
                for g, gi in zip(gs.generators, gsi.generators))
    rec.add("case1.iso_equals_rigid_times_zeta", worst, 1e-9)
    sci = lie_su.structure_constants(gsi)
    rec.add("case1.iso_constants_match_rigid", np.abs(sci.c - sc.c).max(), 1e-9)
    factor_i, resid_i = _case1_factor(ctx)
    rec.add("case1.iso_example_commutator", max(resid_i, abs(factor_i - 2j)), 1e-9)


def suite_su6(rec: _Recorder) -> None:
    rng = _rng()
    for n in (2, 3, 6):
        gs = lie_su.su_n_generators(n)
        rec.add(f"sun{n}.count", abs(len(gs) - (n * n - 1)), 0.0)
        rec.add(f"sun{n}.rank", abs(lie_su.span_rank(gs) - (n * n - 1)), 0.0)
        sc = lie_su.structure_constants(gs)
        rec.add(f"sun{n}.closure", sc.max_residual, 1e-8)

        # scalar + single bivector: invertible through the versor fast path,
        # which keeps Cl(12,0) clear of the 4096x4096 regular-rep solve
        sig = gs.signature
        zeta = sig.scalar(1.5 + 0.5 * rng.random()) + 0.4 * sig.e(0, 1)
        ctx = IsoContext.create(zeta)
        gsi = lie_su.su_n_generators(n, ctx)
        sci = lie_su.structure_constants(gsi)
        rec.add(f"sun{n}.iso_closure", sci.max_residual, 1e-8)
        rec.add(f"sun{n}.iso_constants_match_rigid", np.abs(sci.c - sc.c).max(), 1e-9)
        worst = max((geometric_product(g, zeta) - gi).max_abs()
                    for g, gi in zip(gs.generators, gsi.generators))
        rec.add(f"sun{n}.iso_equals_rigid_times_zeta", worst, 1e-9)

        worst = 0.0
        for a in range(len(gs)):
            for b in range(a + 1, len(gs)):
                lhs = gsi.commutator(a, b)
                rhs = geometric_product(gs.commutator(a, b), zeta)
                worst = max(worst, (lhs - rhs).max_abs())
        rec.add(f"sun{n}.iso_transport", worst, 1e-9)

    appendix = lie_su.su6_appendix_generators()
    rec.add("appendix.count", abs(len(appendix) - 35), 0.0)
    sc = lie_su.structure_constants(appendix)
    worst = 0.0
    for a in range(35):
        for b in range(35):
            for c in range(35):
                worst = max(worst, abs(sc.c[a, b, c] + sc.c[b, a, c]))
    rec.add("appendix.antisymmetry", worst, 1e-10)


# -- dirac ----------------------------------------------------------------------------


def suite_dirac(rec: _Recorder) -> None:
    rng = _rng()
    d = dirac.build_dirac_rep()
    sig = Signature(1, 3)
    eta = np.diag([1.0, -1.0, -1.0, -1.0])
    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            ac = d.gamma[mu] @ d.gamma[nu] + d.gamma[nu] @ d.gamma[mu]
            worst = max(worst, np.abs(ac - 2 * eta[mu, nu] * np.eye(4)).max())
    rec.add("gamma.anticommutation", worst, 0.0)

    g5 = d.rep(sig.e(0, 1, 2, 3))
    rec.add("gamma5.squares_to_minus_one", np.abs(g5 @ g5 + np.eye(4)).max(), 0.0)
    rec.add("gamma5.anticommutes",
            max(np.abs(d.gamma[mu] @ g5 + g5 @ d.gamma[mu]).max() for mu in range(4)), 0.0)

    worst_h = worst_r = 0.0
    for _ in range(200):
        a = random_multivector(sig, rng, 8)
        b = random_multivector(sig, rng, 8)
        worst_h = max(worst_h, np.abs(d.rep(a * b) - d.rep(a) @ d.rep(b)).max())
        worst_r = max(worst_r, (d.rep_inverse(d.rep(a)) - a).max_abs())
    rec.add("rep.homomorphism", worst_h, 1e-9)
    rec.add("rep.roundtrip", worst_r, 1e-9)

    f = 0.5 * (sig.scalar(1.0) + sig.e(0))
    rf = d.rep(f)
    rec.add("idempotent.squares", np.abs(rf @ rf - rf).max(), 0.0)
    rec.add("idempotent.rank_two", abs(np.linalg.matrix_rank(rf) - 2), 0.0)

    basis = np.column_stack([d.blade_images[m].reshape(-1) for m in range(16)])
    rec.add("blade_images.full_rank", abs(np.linalg.matrix_rank(basis) - 16), 0.0)

    e5 = sig.e(0, 1, 2, 3)
    worst = 0.0
    for mu in range(4):
        x = sig.e(mu)
        rhs = (f * x * f) - (f * x * e5 * f) * e5 - e5 * (f * e5 * x * f) \
            + e5 * (f * e5 * x * e5 * f) * e5
        worst = max(worst, (x - rhs).max_abs())
    for _ in range(10):
        x = random_multivector(sig, rng, 8)
        rhs = (f * x * f) - (f * x * e5 * f) * e5 - e5 * (f * e5 * x * f) \
            + e5 * (f * e5 * x * e5 * f) * e5
        worst = max(worst, (x - rhs).max_abs())
    rec.add("ideal.decomposition_identity", worst, 1e-12)

    sig11 = Signature(1, 1)
    worst = 0.0
    for _ in range(30):
        a = random_multivector(sig11, rng, 3)
        b = random_multivector(sig11, rng, 3)
        worst = max(worst, np.abs(dirac.regular_representation(a * b)
                                  - dirac.regular_representation(a)
                                  @ dirac.regular_representation(b)).max())
    rec.add("regular_rep.homomorphism", worst, 1e-10)

    rotor = clifford_exp(0.37 * sig.e(1, 2))
    rec.add_flag("spin.rotor_accepted", dirac.spin_plus_check(d, rotor))
    rec.add_flag("spin.vector_rejected", not dirac.spin_plus_check(d, sig.e(1)))
    ctx = IsoContext.create(sig.scalar(2.0))
    rec.add_flag("spin.iso_scaled_rotor_accepted",
                 dirac.iso_spin_plus_check(d, ctx, geometric_product(rotor, ctx.zeta)))
    zeta = sig.scalar(1.0) + 0.5 * sig.e(0, 1)
    ctx2 = IsoContext.create(zeta)
    rec.add_flag("spin.iso_nonscalar_unit_rejected",
                 not dirac.iso_spin_plus_check(d, ctx2, geometric_product(rotor, zeta)))

    rec.comparisons["matrix_entry_table"] = _entry_table_comparison(d, rng)


def _entry_table_comparison(d, rng) -> dict:
    """Entry-by-entry comparison of the constructed 4x4 image against the
    published entry formulas (real coefficients); structural row pairing
    is checked separately since it is basis independent."""
    sig = Signature(1, 3)
    coeffs = {m: complex(rng.standard_normal()) for m in range(16)}
    ups = Multivector(sig, coeffs)
    M = d.rep(ups)

    def c(*idx):
        mask = 0
        for i in idx:
            mask |= 1 << i
        return coeffs[mask].real

    c0 = coeffs[0].real
    formulas = {
        "a1": (M[0, 0], c0 + c(0) + 1j * (c(1, 2) + c(0, 1, 2))),
        "b1": (M[0, 1], -c(1, 3) - c(0, 1, 3) + 1j * (c(2, 3) + c(0, 2, 3))),
        "d1": (M[0, 2], -c(1, 2, 3) + c(0, 1, 2, 3) + 1j * (c(3) - c(0, 3))),
        "f1": (M[0, 3], c(2) - c(0, 2) + 1j * (c(1) - c(0, 1))),
        "a2": (M[2, 0], -c(1, 2, 3) - c(0, 1, 2, 3) + 1j * (c(3) + c(0, 3))),
        "b2": (M[2, 1], -c(1, 2, 3) - c(0, 1, 2, 3) - 1j * (c(3) + c(0, 3))),
        "d2": (M[2, 2], -c(2, 3) + c(0, 2, 3) + 1j * (-c(1, 3) + c(0, 1, 3))),
        "f2": (M[2, 3], c(2, 3) - c(0, 2, 3) + 1j * (-c(1, 3) + c(0, 1, 3))),
    }
    row_pairing = max(
        float(np.abs(M[1, 0] + np.conj(M[0, 1]))),
        float(np.abs(M[1, 1] - np.conj(M[0, 0]))),
        float(np.abs(M[1, 2] + np.conj(M[0, 3]))),
        float(np.abs(M[1, 3] - np.conj(M[0, 2]))),
        float(np.abs(M[3, 0] + np.conj(M[2, 1]))),
        float(np.abs(M[3, 1] - np.conj(M[2, 0]))),
        float(np.abs(M[3, 2] + np.conj(M[2, 3]))),
        float(np.abs(M[3, 3] - np.conj(M[2, 2]))),
    )
    return {
        "entry_formula_holds": {k: bool(abs(got - want) < 1e-9)
                                for k, (got, want) in formulas.items()},
        "row_conjugation_structure_residual": row_pairing,
        "note": "entries that fail reflect an ideal-basis ordering mismatch in "
                "the published table; the constructed representation is "
                "validated by anticommutation and the homomorphism checks",
    }


# -- flavor ---------------------------------------------------------------------------


def suite_flavor(rec: _Recorder) -> None:
    rng = _rng()
    for n in (3, 6):
        lams = flavor.gell_mann(n)
        gram = np.array([[np.trace(a @ b) for b in lams] for a in lams])
        rec.add(f"gellmann{n}.trace_orthonormal",
                np.abs(gram - 2 * np.eye(len(lams))).max(), 1e-12)
        rec.add(f"gellmann{n}.hermitian",
                max(np.abs(l - l.conj().T).max() for l in lams), 1e-12)
        rec.add(f"gellmann{n}.traceless",
                max(abs(np.trace(l)) for l in lams), 1e-12)

    f3 = flavor.structure_constants_f(3)
    worst = 0.0
    for delta in (1.0, 2.5):
        entries = np.exp(rng.standard_normal(2))
        diag = np.concatenate([entries, [1.0 / entries.prod()]])
        zeta = flavor.FlavorIsoUnit.from_diagonal(diag, delta=delta)
        lams = flavor.gell_mann(3)
        lifted = [flavor.iso_lift_operator(zeta, l) for l in lams]
        for a in range(8):
            for b in range(8):
                lhs = flavor.iso_matrix_commutator(zeta, lifted[a], lifted[b])
                rhs = sum(2j * f3[a, b, c] * delta ** -0.5 * lifted[c] for c in range(8))
                worst = max(worst, np.abs(lhs - rhs).max())
    rec.add("iso_gellmann.commutator_relation", worst, 1e-10)

    bounds = flavor.QuarkMassBounds.reference()
    m3 = bounds.centrals("su3")
    zeta3 = flavor.equal_mass_params(m3, "su3")
    rec.add("su3.det_zeta", zeta3.det_residual(), 1e-12)
    gm3 = flavor.common_iso_mass(m3, "su3")
    rec.add("su3.equal_mass_fixed_point",
            np.abs(flavor.iso_mass_operator(zeta3, m3) - gm3 * np.eye(3)).max() / gm3, 1e-12)
    rec.add("su3.alpha_value", abs(zeta3.params[0] - 0.22407), 1e-4)

    states = flavor.iso_states(zeta3)
    rec.add("su3.state_normalization", max(s.norm_residual() for s in states), 1e-12)
    mz = flavor.iso_mass_operator(zeta3, m3)
    rec.add("su3.mass_expectations",
            max(abs(flavor.iso_expectation(s, mz) - m) for s, m in zip(states, m3)), 1e-12)
    y = flavor.hypercharge_operator(zeta3)
    i3 = flavor.isospin_operator(zeta3)
    q = flavor.charge_operator(zeta3)
    rec.add("su3.hypercharge_expectations",
            max(abs(flavor.iso_expectation(s, y) - v)
                for s, v in zip(states, (1 / 6, 1 / 6, -1 / 3))), 1e-12)
    rec.add("su3.isospin_expectations",
            max(abs(flavor.iso_expectation(s, i3) - v)
                for s, v in zip(states, (0.5, -0.5, 0.0))), 1e-12)
    rec.add("su3.charge_expectations",
            max(abs(flavor.iso_expectation(s, q) - v)
                for s, v in zip(states, (2 / 3, -1 / 3, -1 / 3))), 1e-12)

    zinv = zeta3.inverse_matrix
    rec.add("su3.eigenvalue_isoequation",
            max(np.abs(zinv @ mz @ s.vector - m * s.vector).max()
                for s, m in zip(states, m3)), 1e-12)

    ident = flavor.FlavorIsoUnit.identity("su3")
    rec.add("su3.limit_recovery",
            np.abs(flavor.iso_mass_operator(ident, m3) - flavor.mass_operator(m3, "su3")).max(),
            1e-12)

    co = flavor.decompose_mass(m3, "su3")
    rec.add("su3.decomposition_matches_closed_form",
            np.abs(co - flavor.su3_closed_form_coefficients(m3)).max(), 1e-9)
    rec.add("su3.decomposition_reconstructs",
            np.abs(sum(c * b for c, b in zip(co, flavor.decomposition_basis("su3")))
                   - flavor.mass_operator(m3, "su3")).max(), 1e-9)

    m6 = bounds.centrals("su6")
    zeta6 = flavor.equal_mass_params(m6, "su6")
    rec.add("su6.det_zeta", zeta6.det_residual(), 1e-12)
    gm6 = flavor.common_iso_mass(m6, "su6")
    rec.add("su6.six_fold_equal_mass",
            np.abs(np.diag(flavor.iso_mass_operator(zeta6, m6)) - gm6).max() / gm6, 1e-12)
    co6 = flavor.decompose_mass(m6, "su6")
    rec.add("su6.decomposition_reconstructs",
            np.abs(sum(c * b for c, b in zip(co6, flavor.decomposition_basis("su6")))
                   - flavor.mass_operator(m6, "su6")).max(), 1e-9)
    rec.add("su6.decomposition_matches_trace_oracle",
            np.abs(co6 - flavor.su6_trace_form_coefficients(m6)).max() / max(m6), 1e-12)
    a, b, w, k, t = zeta6.params
    chain = np.array([m6[0] / a, m6[1] / b, m6[2] / w, m6[3] / k, m6[4] / t,
                      a * b * w * k * t * m6[5]])
    rec.add("su6.equal_mass_chain", (chain.max() - chain.min()) / gm6, 1e-9)

    iv3 = flavor.param_intervals(bounds, "su3")
    rec.add("su3.alpha_interval_low", abs(iv3["alpha"]["rigorous"][0] - 0.1430), 1e-3)
    rec.add("su3.alpha_interval_high", abs(iv3["alpha"]["rigorous"][1] - 0.3499), 1e-3)

    worst = 0.0
    iv6 = flavor.param_intervals(bounds, "su6")
    for _ in range(1000):
        sample = {fl: bounds.lo[fl] + (bounds.hi[fl] - bounds.lo[fl]) * rng.random()
                  for fl in flavor.FLAVORS}
        for group, iv in (("su3", iv3), ("su6", iv6)):
            masses = tuple(sample[fl] for fl in flavor.GROUP_FLAVORS[group])
            for which, name in enumerate(flavor.PARAM_NAMES[group]):
                val = flavor.param_value(group, which, masses)
                lo, hi = iv[name]["rigorous"]
                worst = max(worst, lo - val, val - hi)
    rec.add("intervals.sampled_containment", max(worst, 0.0), 0.0)

    ok = True
    base = np.array(bounds.centrals("su6"))
    for j in range(6):
        bumped = base.copy()
        bumped[j] *= 1.01
        diff = flavor.param_value("su6", 0, tuple(bumped)) - flavor.param_value("su6", 0, tuple(base))
        ok = ok and ((diff > 0) == (j == 0))
    rec.add_flag("alpha.monotonicity_signs", ok)

    d = dirac.build_dirac_rep()
    sig = Signature(1, 3)
    g0 = d.gamma[0]
    t0 = flavor.iso_tensor(np.eye(4, dtype=complex), np.eye(4, dtype=complex),
                           np.eye(4, dtype=complex))
    rec.add("iso_tensor.identity_reduction", np.abs(t0 - np.kron(np.eye(4), g0)).max(), 1e-12)
    a_mat = d.rep(random_multivector(sig, rng, 6))
    b_mat = d.rep(random_multivector(sig, rng, 6))
    z_mat = d.rep(sig.scalar(1.0) + 0.4 * sig.e(0, 1))
    rec.add("iso_tensor.bilinearity",
            np.abs(flavor.iso_tensor(z_mat, 2 * a_mat, b_mat)
                   - 2 * flavor.iso_tensor(z_mat, a_mat, b_mat)).max(), 1e-12)

    rec.comparisons["parameter_intervals"] = {
        "su3": _interval_block(iv3),
        "su6": _interval_block(iv6),
        "note": "reference intervals are echoed for comparison; no computed "
                "convention reproduces all of them and the flags record this",
    }
    quoted = flavor.su6_quoted_coefficients(m6)
    rec.comparisons["su6_decomposition"] = {
        "solved": [float(x.real) for x in co6],
        "quoted": [float(x.real) for x in quoted],
        "max_deviation": float(np.abs(co6 - quoted).max()),
        "note": "solved coefficients reconstruct diag(m); the quoted ones do not",
    }


def _interval_block(iv: dict) -> dict:
    out = {}
    for name, ent in iv.items():
        out[name] = {
            "rigorous": [float(ent["rigorous"][0]), float(ent["rigorous"][1])],
            "joint_endpoint": [float(ent["joint"][0]), float(ent["joint"][1])],
            "reference": [float(ent["reference"][0]), float(ent["reference"][1])],
            "matches_rigorous": bool(ent["matches_rigorous"]),
            "matches_joint": bool(ent["matches_joint"]),
        }
    return out


_SUITE_FUNCS = {
    "clifford": suite_clifford,
    "isotopy": suite_isotopy,
    "octonion": suite_octonion,
    "su3": suite_su3,
    "su6": suite_su6,
    "dirac": suite_dirac,
    "flavor": suite_flavor,
}


def run_suite(name: str, tol_override: float | None = None):
    """Run one named suite (or ``all``); returns (checks, comparisons).

    Check records are sorted by name so reports are deterministic even if
    a suite ever fans its checks out concurrently.
    """
    if name == "all":
        names = SUITE_NAMES
    elif name in _SUITE_FUNCS:
        names = (name,)
    else:
        raise KeyError(name)
    rec = _Recorder(tol_override)
    for n in names:
        inner = _Recorder(tol_override)
        _SUITE_FUNCS[n](inner)
        for chk in inner.checks:
            rec.checks.append(Check(f"{n}.{chk.name}", chk.passed, chk.residual, chk.tolerance))
        for key, val in inner.comparisons.items():
            rec.comparisons[f"{n}.{key}"] = val
    rec.checks.sort(key=lambda c: c.name)
    return rec.checks, rec.comparisons
