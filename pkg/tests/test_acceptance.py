"""Acceptance suite: one test per acceptance criterion.

Each criterion is a single test function, so a verbose pytest run emits
exactly one pass/fail line per criterion.  Stated runtime budgets are
asserted inside the tests that carry one.
"""

import time
from fractions import Fraction

import numpy as np

from zeeman2d import reference
from zeeman2d.coulomb import QuantumState, energy0
from zeeman2d.exactmath import format_factorized
from zeeman2d.greenfn import (
    GreenEvalConfig,
    green_reduced_eval,
    reduced_double_integral,
    reduced_orthogonality_defect,
)
from zeeman2d.laguerre import (
    Laguerre,
    brute_force_integral,
    cross_integral,
    moment3_band,
    moment3_diag,
)
from zeeman2d.oracle import (
    GalerkinConfig,
    build_matrices,
    fit_field_series,
    solve_generalized,
)
from zeeman2d.perturb import (
    assemble_energy,
    eps1,
    eps2_closed,
    eps2_integral,
    eps4_closed,
    eps4_sturmian,
)

GROUND_EXACT = Fraction(-159, 65536)
GROUND_LITERATURE = Fraction(-153, 65536)
HALF_GAP = Fraction(3, 65536)  # (1/2)|159 - 153|/65536 ~ 4.6e-5


def report(k: int, detail: str) -> None:
    print(f"CRITERION {k} PASS: {detail}")


def test_criterion_1_published_table_exact():
    """All 20 published rational values, plus factorized forms, zero tolerance."""
    t0 = time.perf_counter()
    for (n, l), expected in reference.TABLE_EPS2.items():
        value = eps2_closed(n, l)
        assert value == expected
        assert format_factorized(value) == reference.TABLE_EPS2_FACTORED[(n, l)]
    for (n, l), expected in reference.TABLE_EPS4.items():
        value = eps4_closed(n, l)
        assert value == expected
        assert format_factorized(value) == reference.TABLE_EPS4_FACTORED[(n, l)]
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    report(1, f"10+10 table entries exact incl. factorized forms in {elapsed:.3f}s")


def test_criterion_2_dual_route_exact_equality():
    """Closed forms vs independent integral/sum routes, 78 states, exact."""
    t0 = time.perf_counter()
    checked = 0
    for n in range(1, 13):
        for l in range(n):
            assert eps2_integral(n, l) == eps2_closed(n, l)
            assert eps4_sturmian(n, l) == eps4_closed(n, l)
            checked += 1
    elapsed = time.perf_counter() - t0
    assert checked == 78
    assert elapsed < 10.0
    report(2, f"78 states, both orders, exact equality in {elapsed:.3f}s")


def test_criterion_3_dispute_adjudication():
    """The numeric quartic estimate lands within half the candidate gap."""
    t0 = time.perf_counter()
    fit = fit_field_series(QuantumState(1, 0, 0))
    c4 = fit.coefficients[4]
    err_exact = abs(c4 - float(GROUND_EXACT))
    err_literature = abs(c4 - float(GROUND_LITERATURE))
    elapsed = time.perf_counter() - t0
    assert err_exact < float(HALF_GAP), (c4, err_exact)
    assert err_literature > float(HALF_GAP), (c4, err_literature)
    assert elapsed < 30.0
    report(
        3,
        f"c4 = {c4:.9g}; |err vs -159/65536| = {err_exact:.2e} < {float(HALF_GAP):.2e}"
        f" < |err vs -153/65536| = {err_literature:.2e}; {elapsed:.2f}s",
    )


def test_criterion_4_oracle_quadratic_accuracy():
    """Fitted quadratic coefficient within 1e-6 relative for all n <= 3.

    The fit window is widened per state to b_max ~ (2n-1)^-2 (the scale at
    which the quadratic signal is n-independent) so the tiny default
    quartic-resolving window does not drown the n = 3 fits in eigensolver
    rounding noise; the fits themselves are untouched.
    """
    worst = 0.0
    for n in range(1, 4):
        for l in range(n):
            fit = fit_field_series(QuantumState(n, l, l), grid_scale=(2 * n - 1) ** 2)
            exact = float(eps2_closed(n, l))
            rel = abs(fit.coefficients[2] - exact) / abs(exact)
            worst = max(worst, rel)
            assert rel <= 1e-6, (n, l, rel)
    report(4, f"6 states fitted; worst relative error {worst:.2e} <= 1e-6")


def test_criterion_5_zero_field_spectrum():
    """Galerkin eigenvalues reproduce the unperturbed levels to 1e-12."""
    worst = 0.0
    for Z in (Fraction(1), Fraction(2)):
        for n in range(1, 5):
            for l in range(n):
                cfg = GalerkinConfig(l=l, Z=Z, target_n_r=n - l - 1, basis_size=120)
                w = solve_generalized(*build_matrices(cfg))
                exact = float(energy0(QuantumState(n, l, l), Z))
                err = abs(float(w[n - l - 1]) - exact)
                worst = max(worst, err)
                assert err <= 1e-12, (n, l, Z, err)
    report(5, f"20 (n, l, Z) combinations; worst absolute error {worst:.2e} <= 1e-12")


def test_criterion_6_integral_lemma_sweep():
    """Every closed integral formula equals brute force over the full sweep."""
    t0 = time.perf_counter()
    pairs = 0
    for alpha in range(0, 9):
        specs = [Laguerre(k, alpha) for k in range(0, 11)]
        for k in range(0, 11):
            diag = moment3_diag(specs[k])
            assert diag == brute_force_integral(alpha + 3, specs[k], specs[k])
            for kp in range(0, 11):
                band = moment3_band(k, kp, alpha)
                assert band == brute_force_integral(alpha + 3, specs[k], specs[kp])
                if abs(k - kp) > 3:
                    assert band == 0  # selection-rule zero region
                for gamma in range(0, 13):
                    assert cross_integral(gamma, specs[k], specs[kp]) == brute_force_integral(
                        gamma, specs[k], specs[kp]
                    )
                    pairs += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    report(6, f"{pairs} cross-integral configs plus third-moment bands exact in {elapsed:.2f}s")


def test_criterion_7_green_function_suite():
    """Symmetry, orthogonality projection, and the quartic double integral."""
    point_pairs = [(0.3, 1.7), (0.9, 2.4), (2.2, 0.5)]
    worst_sym = worst_orth = worst_rel = 0.0
    for n in range(1, 4):
        for l in range(n):
            cfg = GreenEvalConfig.for_level(n, l)
            for r, rp in point_pairs:
                diff = abs(green_reduced_eval(cfg, r, rp) - green_reduced_eval(cfg, rp, r))
                worst_sym = max(worst_sym, diff)
                assert diff <= 1e-12
            for rp in (0.4, 1.1, 2.6):
                defect = abs(reduced_orthogonality_defect(cfg, rp))
                worst_orth = max(worst_orth, defect)
                assert defect <= 1e-8
            value = -reduced_double_integral(cfg) / 64
            exact = float(eps4_closed(n, l))
            rel = abs(value - exact) / abs(exact)
            worst_rel = max(worst_rel, rel)
            assert rel <= 1e-8, (n, l, rel)
    report(
        7,
        f"n <= 3: symmetry {worst_sym:.1e} <= 1e-12, orthogonality {worst_orth:.1e} <= 1e-8, "
        f"quartic double integral {worst_rel:.1e} <= 1e-8 relative",
    )


def test_criterion_8_structural_parity():
    """Vanishing odd fit powers; exact +-m_l degeneracy; exact spin shift."""
    fit = fit_field_series(QuantumState(1, 0, 0), odd_powers=True)
    c1, c3 = abs(fit.coefficients[1]), abs(fit.coefficients[3])
    assert c1 < 1e-10 and c3 < 1e-10, (c1, c3)

    b = Fraction(1, 50)
    for n, l in [(2, 1), (3, 2), (4, 3)]:
        up = assemble_energy(QuantumState(n, l, l), b=b)
        dn = assemble_energy(QuantumState(n, l, -l), b=b)
        assert up.terms[2] == dn.terms[2]
        assert up.terms[4] == dn.terms[4]

    for m_l in (-2, -1, 0, 1, 2):
        for m_s in (Fraction(-1, 2), Fraction(1, 2)):
            assert eps1(m_l, m_s) == Fraction(m_l + 2 * m_s, 2)
    report(8, f"|c1| = {c1:.1e}, |c3| = {c3:.1e} < 1e-10; degeneracy and spin shifts exact")
