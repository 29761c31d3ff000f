import json
import math
from fractions import Fraction

import pytest

from g2fmethod.liealg import alpha_weight, eps_weight
from g2fmethod.polynomials import parse_xi_polynomial
from g2fmethod.scalars import LAMBDA, LambdaPoly
from g2fmethod.solver import (
    I1,
    LAPLACE_DUAL,
    X3,
    hilbert_closed_form,
    hilbert_multiplicity,
    hilbert_series_check,
    invariants_of_degree,
    nonstandard_verdict,
    oracle_matches_certificate,
    pprime_annihilators,
    pprime_full_annihilators,
    solve_even,
    solve_odd,
    symbolic_g2_difference,
    symbolic_so7_difference,
    verify_so7_singular,
)
from g2fmethod.verma import parse_verma

F = Fraction


# -- invariants --------------------------------------------------------------


def test_invariants_dimensions(ctx):
    assert invariants_of_degree(ctx, 0).dimension == 1
    assert invariants_of_degree(ctx, 2).dimension == 2
    assert invariants_of_degree(ctx, 5).dimension == 3
    basis = invariants_of_degree(ctx, 2).basis
    assert basis[0] == X3 * X3
    assert basis[1] == I1


def test_laplace_dual_form():
    assert LAPLACE_DUAL == parse_xi_polynomial("4*x1*x4 + 4*x2*x5 + x3^2")


# -- Hilbert multiplicities ----------------------------------------------------


def test_hilbert_examples():
    assert hilbert_multiplicity(2, 0) == 2
    assert hilbert_multiplicity(2, 2) == 3
    assert hilbert_multiplicity(3, 1) == 4
    assert hilbert_multiplicity(0, 0) == 1


def test_hilbert_closed_forms_match_counts():
    for l in range(7):
        for t in range(l + 1):
            assert hilbert_closed_form(l, t) == hilbert_multiplicity(l, t), (l, t)


def test_hilbert_invariant_count():
    for l in range(9):
        assert hilbert_multiplicity(l, 0) == 1 + l // 2


def test_hilbert_series_check():
    report = hilbert_series_check(6)
    assert report.all_match
    table = {(l, t): b for (l, t, b) in report.entries}
    assert table[(2, 0)] == 2
    assert table[(5, 0)] == 3
    payload = report.to_json()
    assert payload["series_match"] is True


def test_hilbert_series_reconstruction():
    # each degree slice is sum_t b(l,t) (x^t - x^(-t-2))
    from g2fmethod.solver import _series_coefficients

    slices = _series_coefficients(5)
    for l, sl in enumerate(slices):
        recon = {}
        for t in range(l + 1):
            b = hilbert_multiplicity(l, t)
            if b:
                recon[t] = recon.get(t, 0) + b
                recon[-t - 2] = recon.get(-t - 2, 0) - b
        recon = {k: F(v) for k, v in recon.items() if v}
        assert recon == sl, l


# -- the main solver ------------------------------------------------------------


def test_solve_even_first_three(ctx):
    for N, lam in ((1, F(-3, 2)), (2, F(-1, 2)), (3, F(1, 2))):
        cert = solve_even(ctx, N)
        assert cert is not None
        assert cert.lam == lam
        assert cert.coefficients == [F(4 ** s * math.comb(N, s)) for s in range(N + 1)]
        assert cert.xi_polynomial == LAPLACE_DUAL ** N
        assert cert.checks["p_prime_singular"] is True
        assert cert.checks["so7_singular"] is True


def test_solve_even_certificate_json(ctx):
    cert = solve_even(ctx, 2)
    doc = cert.to_json()
    assert doc["N"] == 2
    assert doc["lambda"] == "-1/2"
    assert doc["coefficients"] == ["1", "8", "16"]
    assert parse_xi_polynomial(doc["xi_polynomial"]) == cert.xi_polynomial
    assert parse_verma(doc["verma_vector"]) == cert.verma_vector
    json.dumps(doc)   # serializable


def test_solve_even_rejects_bad_N(ctx):
    with pytest.raises(ValueError):
        solve_even(ctx, 0)


def test_solve_odd_empty(ctx):
    for N in range(0, 3):
        rep = solve_odd(ctx, N)
        assert rep.empty_for_all_lambda
        assert rep.rational_candidates == []
        assert rep.unresolved == []


def test_verify_so7_singular_accepts_and_rejects(ctx):
    cert = solve_even(ctx, 1)
    assert verify_so7_singular(ctx, cert) is True
    # corrupt one coefficient: no longer annihilated
    from g2fmethod.solver import SingularCertificate
    from g2fmethod.fourier import verma_from_xi

    bad_poly = I1 * 5 + X3 * X3   # 5 instead of 4
    bad = SingularCertificate(
        homogeneity_half=1,
        lam=cert.lam,
        coefficients=[F(1), F(5)],
        xi_polynomial=bad_poly,
        verma_vector=verma_from_xi(bad_poly),
        checks={},
    )
    assert verify_so7_singular(ctx, bad) is False


def test_oracle_equivalence(ctx):
    for N in (1, 2):
        cert = solve_even(ctx, N, verify=False)
        assert oracle_matches_certificate(ctx, cert)


def test_full_nilradical_annihilates(ctx):
    cert = solve_even(ctx, 2, verify=False)
    for ann in pprime_full_annihilators(ctx.emb):
        assert ctx.module.act(ann, cert.verma_vector).evaluate_lambda(cert.lam).is_zero()


def test_oracle_off_parameter_empty(ctx):
    anns = pprime_annihilators(ctx.emb)
    for lam in (F(0), F(1), F(-2), F(1, 3)):
        for d in (1, 2, 3, 4):
            assert ctx.module.singular_search(d, lam, anns) == []


def test_certificate_weight(ctx):
    for N in (1, 2):
        cert = solve_even(ctx, N, verify=False)
        w = ctx.module.weight_of(cert.verma_vector)
        assert w.coords[0](cert.lam) == -cert.lam - 5
        assert w.coords[1].is_zero() and w.coords[2].is_zero()


# -- reflections and the verdicts -----------------------------------------------


def test_symbolic_so7_difference():
    assert symbolic_so7_difference() == eps_weight(
        (2 * LAMBDA + 5, LambdaPoly(), LambdaPoly([-1]))
    )


def test_symbolic_g2_differences():
    levi = symbolic_g2_difference(2)
    assert levi == alpha_weight((4 * LAMBDA + 10, 2 * LAMBDA + 4))
    crossed = symbolic_g2_difference(1)
    assert crossed == alpha_weight((3 * LAMBDA + F(23, 2), 2 * LAMBDA + 5))


def test_verdict_in_regime(ctx):
    for k in range(5):
        lam = F(2 * k - 3, 2)
        v = nonstandard_verdict(lam)
        assert v.in_regime
        assert v.so7_difference.coords == (2 * lam + 5, 0, -1)
        assert v.so7_witness is not None
        assert v.g2_witness is not None
        assert v.nonstandard_so7 and v.nonstandard_g2


def test_verdict_out_of_regime():
    v = nonstandard_verdict(F(-3))
    assert not v.in_regime
    assert not v.nonstandard_so7
    v2 = nonstandard_verdict(F(1))
    assert not v2.in_regime


def test_verdict_records_printed_comparison():
    v = nonstandard_verdict(F(-1, 2))
    assert set(v.printed_g2_matches) == {"levi_reflection", "crossed_reflection"}
    doc = v.to_json()
    assert doc["lambda"] == "-1/2"
    assert "g2_difference" in doc


def test_solver_scan_pattern(ctx):
    # homogeneity d even: parameter d/2 - 5/2; odd: nothing
    for d in range(1, 9):
        if d % 2 == 0:
            cert = solve_even(ctx, d // 2, verify=False)
            assert cert is not None and cert.lam == F(d, 2) - F(5, 2)
        else:
            assert solve_odd(ctx, (d - 1) // 2).empty_for_all_lambda
