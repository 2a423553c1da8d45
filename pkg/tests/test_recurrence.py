"""Forward iteration, transform-domain solving, candidate verification."""
import random

import pytest

from biqz import (
    ONE,
    ZERO,
    Biquaternion,
    ForcingTerm,
    LinearRecurrence,
    OutsideROCError,
    Sequence,
    ZeroDivisorError,
    convolve,
    deconvolve_geometric,
    iterate,
    linear_right,
    roc_estimate,
    transform,
    transform_value,
    verify_closed_form,
)
from biqz.algebra import i, j, k

from helpers import (
    comp_dist,
    rand_biquat,
    rand_complex_shell,
    rel_err,
    worked_examples,
)

I = 1j


class TestConstruction:
    def test_zero_divisor_leading_coefficient(self):
        with pytest.raises(ZeroDivisorError):
            LinearRecurrence([ONE, ONE + I * k], [ONE])

    def test_initial_count_must_match_order(self):
        with pytest.raises(ValueError):
            LinearRecurrence([ONE, ONE, ONE], [ONE])

    def test_needs_order_at_least_one(self):
        with pytest.raises(ValueError):
            LinearRecurrence([ONE], [])

    def test_forcing_needs_coefficients(self):
        with pytest.raises(ValueError):
            ForcingTerm(Sequence.constant(1), [])


class TestIterate:
    def test_trivial_all_ones(self):
        rec = LinearRecurrence([-1, ONE], [ONE])
        seq = iterate(rec, 10)
        for n in range(10):
            assert seq.term(n) == ONE

    def test_worked_examples_match_closed_forms(self):
        for rec, closed, label in worked_examples():
            seq = iterate(rec, 41)
            for n in range(41):
                want = closed.term(n)
                scale = max(1.0, want.real_norm())
                assert (seq.term(n) - want).real_norm() <= 1e-9 * scale, (label, n)

    def test_rejects_nonpositive_count(self):
        rec = LinearRecurrence([-1, ONE], [ONE])
        with pytest.raises(ValueError):
            iterate(rec, 0)


class TestTransformValue:
    def test_first_example_closed_form(self):
        rec = worked_examples()[0][0]
        got = transform_value(rec, 3)
        want = (ONE - (i + j) * (1 / 3)).inverse()
        assert comp_dist(got, want) <= 1e-12

    def test_third_example_closed_form(self):
        rec = worked_examples()[2][0]
        got = transform_value(rec, 4)
        want = (ONE - (I * i + I) * 0.25).inverse()
        assert comp_dist(got, want) <= 1e-12

    def test_agrees_with_series_on_all_examples(self):
        rng = random.Random(61)
        for rec, _, label in worked_examples():
            seq = iterate(rec, 64)
            sigma = roc_estimate(seq)
            for _ in range(10):
                x = rand_complex_shell(rng, 2.0 * sigma, 3.5 * sigma)
                solved = transform_value(rec, x)
                series = transform(seq, x, eps=1e-13).value
                assert rel_err(solved, series) <= 1e-9, (label, x)

    def test_forcing_with_shifted_coefficients(self):
        # f(n+1) - f(n) = g(n+1) - g(n) with g = (0.5)^n and f(0) = 1
        # has the solution f(n) = 0.5^n; exercises forcing boundary terms
        g = Sequence.geometric(0.5)
        rec = LinearRecurrence([-1, ONE], [ONE], [ForcingTerm(g, [-1, ONE])])
        seq = iterate(rec, 20)
        for n in range(20):
            assert comp_dist(seq.term(n), 0.5**n) <= 1e-14
        got = transform_value(rec, 2.0)
        assert comp_dist(got, (ONE - Biquaternion(0.25)).inverse()) <= 1e-10

    def test_pole_rejected(self):
        # f(n+1) = f(n)(1+Ik): P(x) = x - (1+Ik) is a zero divisor at x = 2,
        # while the growth estimate of the solution sits just below 2
        rec = LinearRecurrence([-(ONE + I * k), ONE], [ONE])
        with pytest.raises(ZeroDivisorError):
            transform_value(rec, 2.0)

    def test_outside_roc_rejected(self):
        rec = worked_examples()[0][0]  # radius sqrt(2)
        with pytest.raises(OutsideROCError):
            transform_value(rec, 1.0)

    def test_requires_scalar_point(self):
        rec = worked_examples()[0][0]
        with pytest.raises(ValueError):
            transform_value(rec, i + j)


class TestVerifyClosedForm:
    def test_worked_examples_pass(self):
        for rec, closed, label in worked_examples():
            rep = verify_closed_form(rec, closed, 40, 1e-9)
            assert rep.passed, label
            assert rep.first_failure_index is None
            assert rep.max_rel_error <= 1e-9
            assert rep.n_checked == 41

    def test_perturbed_candidate_fails_early(self):
        rec, closed, _ = worked_examples()[0]
        wrong = Sequence(lambda n: closed.term(n) + ONE)
        rep = verify_closed_form(rec, wrong, 40, 1e-9)
        assert not rep.passed
        assert rep.first_failure_index in (0, 1)
        assert rep.max_rel_error > 1e-9

    def test_report_consistency(self):
        rec, closed, _ = worked_examples()[1]
        rep = verify_closed_form(rec, closed, 30, 1e-9)
        assert (rep.first_failure_index is None) == (rep.max_rel_error <= rep.tolerance)

    def test_needs_enough_terms(self):
        rec, closed, _ = worked_examples()[0]
        with pytest.raises(ValueError):
            verify_closed_form(rec, closed, 2, 1e-9)


class TestSuperposition:
    def test_right_scalar_combinations_solve_homogeneous_relations(self):
        rng = random.Random(62)
        for _ in range(30):
            coeffs = [rand_biquat(rng, 0.8), rand_biquat(rng, 0.8), ONE]
            rec_f = LinearRecurrence(coeffs, [rand_biquat(rng), rand_biquat(rng)])
            rec_g = LinearRecurrence(coeffs, [rand_biquat(rng), rand_biquat(rng)])
            f = iterate(rec_f, 18)
            g = iterate(rec_g, 18)
            c = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            d = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            combo = linear_right(f, c, g, d)
            check = LinearRecurrence(coeffs, [combo.term(0), combo.term(1)])
            for n in range(16):
                gap, scale = check.identity_gap(combo, n)
                assert gap <= 1e-11 * scale


class TestDeconvolve:
    def test_zero_kernel_returns_target(self):
        target = Sequence(lambda n: Biquaternion(n + 1))
        sol = deconvolve_geometric(target, ZERO, 10)
        for t in range(10):
            assert sol.term(t) == target.term(t)

    def test_geometric_kernel_closed_form(self):
        target = Sequence.geometric(2 * i)
        sol = deconvolve_geometric(target, 3 * j, 31)
        assert sol.term(0) == ONE
        for t in range(1, 31):
            want = (2 * i) ** t - (3 * j) * (2 * i) ** (t - 1)
            assert comp_dist(sol.term(t), want) == 0.0

    def test_round_trip(self):
        # contractive draws keep every intermediate bounded, so the identity
        # is checked at fixed absolute scale
        rng = random.Random(63)
        for _ in range(10):
            kern = rand_biquat(rng)
            kern = kern * (0.5 / kern.component_norm())
            ratio = rand_biquat(rng)
            target = Sequence.geometric(ratio * (0.5 / ratio.component_norm()))
            sol = deconvolve_geometric(target, kern, 31)
            recon = convolve(Sequence.geometric(kern), sol)
            for t in range(31):
                scale = max(1.0, target.term(t).component_norm())
                assert comp_dist(recon.term(t), target.term(t)) <= 1e-10 * scale
