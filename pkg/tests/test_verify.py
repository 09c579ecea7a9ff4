import pytest

import sympow.dga as dga
from sympow.dga import (
    boundary,
    dga_mul,
    ext_gen,
    lambda_element,
    monomial_elem,
    surface_context,
)
from sympow.verify import (
    admissible_nonfg_choices,
    evaluate_F,
    verify_dga_suite,
    verify_lemma_cohomology,
    verify_lemma_q,
    verify_lemma_torus,
    verify_mattuck,
    verify_nonfg_all_choices,
    verify_nonfg_witness,
    verify_theorem_main,
)


def _check(report, name):
    return next(c for c in report.checks if c.name == name)


def test_dga_suite_passes():
    rep = verify_dga_suite(2, 3, seed=7)
    assert rep.passed, [c for c in rep.checks if not c.passed]
    rep = verify_dga_suite(1, 6, seed=7)
    assert rep.passed


def test_dga_suite_detects_sign_flip_mutant(monkeypatch):
    orig = dga._ext_boundary_coeff

    def flipped(ctx, i):
        if ctx.case == "surface" and i == ctx.size:  # the first f-generator
            return ctx.ring.gen(i) - ctx.ring.one()
        return orig(ctx, i)

    monkeypatch.setattr(dga, "_ext_boundary_coeff", flipped)
    rep = verify_dga_suite(2, 3, seed=7)
    assert not rep.passed
    failing = [c.name for c in rep.checks if not c.passed]
    assert "boundary-squared-monomials" in failing
    # a counterexample is printed in the detail
    assert _check(rep, "boundary-squared-monomials").detail


def test_dga_suite_detects_divided_power_mutant(monkeypatch):
    monkeypatch.setattr(dga, "_gamma_product_coeff", lambda a, b: 1)
    rep = verify_dga_suite(2, 3, seed=7)
    assert not rep.passed
    failing = [c.name for c in rep.checks if not c.passed]
    assert "divided-power-products" in failing or "graded-leibniz" in failing


def test_lemma_torus():
    rep = verify_lemma_torus(4, 2, trials=3, seed=1)
    assert rep.passed
    assert "dim K_2 = 3" in _check(rep, "top-kernel-dimension").detail
    assert verify_lemma_torus(4, 4, trials=3, seed=1).passed
    assert verify_lemma_torus(2, 2, trials=3, seed=1).passed
    with pytest.raises(ValueError):
        verify_lemma_torus(4, 1)
    with pytest.raises(ValueError):
        verify_lemma_torus(4, 5)


def test_lemma_q():
    assert verify_lemma_q(1, 2, trials=3, seed=1).passed
    assert verify_lemma_q(2, 3, trials=3, seed=1).passed
    assert verify_lemma_q(2, 4, trials=3, seed=1).passed


def test_lemma_cohomology_g2():
    rep = verify_lemma_cohomology(2, trials=3, seed=1)
    assert rep.passed, [c for c in rep.checks if not c.passed]
    assert "positions [3]" in _check(rep, "lambda-sigma-cocycles").detail
    assert "position 3" in _check(rep, "lambda-sigma-nonzero-finite-cover").detail


def test_lemma_cohomology_g3():
    rep = verify_lemma_cohomology(3, trials=2, seed=1)
    assert rep.passed
    assert "positions [3, 5]" in _check(rep, "lambda-sigma-cocycles").detail
    with pytest.raises(ValueError):
        verify_lemma_cohomology(1)


def test_theorem_main_g2k2():
    rep = verify_theorem_main(2, 2, trials=3, seed=1, N_list=(1, 2))
    assert rep.passed
    assert "rank H_2 = 22 > 7" in _check(rep, "finite-cover-rank-growth").detail


def test_theorem_main_all_z_cases():
    for g, k in ((1, 2), (2, 4), (2, 5)):
        rep = verify_theorem_main(g, k, trials=3, seed=1, N_list=(1,))
        assert rep.passed, (g, k, [c for c in rep.checks if not c.passed])
        dims_detail = _check(rep, "generic-dims-pattern").detail
        assert "expected [0" in dims_detail


@pytest.mark.parametrize("g,k,top_dim", [(2, 3, 0), (3, 3, 4), (3, 2, 6)])
def test_theorem_main_middle_range(g, k, top_dim):
    rep = verify_theorem_main(g, k, trials=3, seed=1, N_list=(1,))
    assert rep.passed
    assert f"dims [0, 0" in _check(rep, "generic-dims-pattern").detail
    if top_dim:
        assert f", {top_dim}," in _check(rep, "generic-dims-pattern").detail


def test_mattuck():
    assert verify_mattuck(2, 4, trials=2, seed=1).passed
    assert verify_mattuck(1, 2, trials=2, seed=1).passed
    with pytest.raises(ValueError):
        verify_mattuck(2, 3)


def test_evaluate_F_basics():
    ctx = surface_context(2)
    one = monomial_elem(ctx, 0, 0)
    assert evaluate_F(one) == one
    # positive x1 exponents die, others evaluate to 1
    elem = monomial_elem(ctx, 0, 0, ctx.ring.gen(0))  # x1
    assert not evaluate_F(elem)
    elem = monomial_elem(ctx, 0, 0, ctx.ring.gen(1) + ctx.ring.gen(3))  # x2 + y2
    assert evaluate_F(elem) == 2 * one
    with pytest.raises(ValueError):
        evaluate_F(monomial_elem(ctx, 0, 0, ctx.ring.monomial((-1, 0, 0, 0))))


def test_nonfg_witness_g2():
    rep = verify_nonfg_witness(2, 2, (2,), (2,))
    assert rep.passed
    ctx = surface_context(2)
    expected = -dga_mul(dga_mul(monomial_elem(ctx, 1 << 2), ext_gen(ctx, 1)), ext_gen(ctx, 3))
    witness = dga_mul(lambda_element(2), boundary(
        dga_mul(dga_mul(ext_gen(ctx, 0), ext_gen(ctx, 1)), ext_gen(ctx, 3))))
    assert evaluate_F(witness) == expected


def test_nonfg_witness_g3():
    ctx = surface_context(3)
    # a = e1 e2 e3 f2: m = 2 (indices 2,3), n = 1 (index 2)
    rep = verify_nonfg_witness(3, 3, (2, 3), (2,))
    assert rep.passed
    # F(lam * d(a)) = -f1 e2 e3 f2
    f1 = monomial_elem(ctx, 1 << 3)
    expected = -dga_mul(dga_mul(dga_mul(f1, ext_gen(ctx, 1)), ext_gen(ctx, 2)), ext_gen(ctx, 4))
    a = dga_mul(dga_mul(dga_mul(ext_gen(ctx, 0), ext_gen(ctx, 1)), ext_gen(ctx, 2)), ext_gen(ctx, 4))
    assert evaluate_F(dga_mul(lambda_element(3), boundary(a))) == expected


def test_nonfg_witness_validation():
    with pytest.raises(ValueError):
        verify_nonfg_witness(2, 2, (1,), (2,))  # index 1 not allowed
    with pytest.raises(ValueError):
        verify_nonfg_witness(2, 2, (2,), ())  # counts must sum to k
    with pytest.raises(ValueError):
        verify_nonfg_witness(2, 3, (2,), (2,))  # k > 2g-2


def test_nonfg_admissible_enumeration():
    assert admissible_nonfg_choices(2, 2) == [((2,), (2,))]
    assert len(admissible_nonfg_choices(3, 2)) == 6
    assert len(admissible_nonfg_choices(3, 3)) == 4
    assert admissible_nonfg_choices(3, 4) == [((2, 3), (2, 3))]


def test_nonfg_all_admissible_pass():
    for g, k in ((2, 2), (3, 2), (3, 3), (3, 4)):
        assert verify_nonfg_all_choices(g, k).passed, (g, k)


def test_report_json_contract():
    rep = verify_lemma_torus(4, 2, trials=2, seed=3)
    d = rep.to_json_dict()
    assert d["suite"] == "lemma-torus"
    assert d["pass"] is True
    assert all(set(c) == {"name", "pass", "detail"} for c in d["checks"])
