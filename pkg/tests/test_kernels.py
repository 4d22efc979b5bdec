import math

import numpy as np
import pytest

import modhom as mh

SIGMA = 5.0
TAU0 = 3.0


def uncorrelated():
    return mh.SourceModel.pulsed(SIGMA, SIGMA)


def random_tuples(n, seed=20240613):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        sp, sm = rng.uniform(0.5, 8.0, 2)
        yield (mh.SourceModel.pulsed(sp, sm),
               mh.InterferometerConfig(rng.uniform(0.2, 4.0),
                                       rng.uniform(0.0, 2.0 * math.pi),
                                       rng.uniform(-4.0, 4.0)),
               rng)


class TestModifiedRaw:
    def test_equal_frequencies_cancel_exactly(self):
        model = uncorrelated()
        cfg = mh.InterferometerConfig(TAU0, 1.234, 0.7)
        w = np.linspace(-10, 10, 101)
        assert np.array_equal(mh.cpd_modified_raw(model, cfg, w, w), np.zeros_like(w))

    def test_factorized_point_value(self):
        # independently evaluated through the tau=0 product form:
        # 4*(1-cos(pi))*(1-cos(pi)) * exp(-(pi/3)^2/50) = 16*exp(-(pi/3)^2/50)
        model = uncorrelated()
        cfg = mh.InterferometerConfig(TAU0, math.pi, 0.0)
        om = math.pi / 3.0
        expected = 16.0 * math.exp(-(om**2) / 50.0)
        os_, oi = mh.signal_idler_from_sum_diff(0.0, om)
        assert mh.cpd_modified_raw(model, cfg, os_, oi) == pytest.approx(expected, rel=1e-12)
        assert mh.cpd_modified(model, cfg, 0.0, om) == pytest.approx(expected, rel=1e-12)

    def test_tau0_zero_reduces_to_standard_hom_shape(self):
        # 8 |f|^2 (1 - cos(Om tau)) at tau0 = 0, phi = 0
        model = uncorrelated()
        cfg = mh.InterferometerConfig(0.0, 0.0, 1.3)
        w = np.linspace(-12, 12, 41)
        os_, oi = np.meshgrid(w, w, indexing="ij")
        raw = mh.cpd_modified_raw(model, cfg, os_, oi)
        op, om = mh.sum_diff_from_signal_idler(os_, oi)
        expected = 8.0 * model.tpsa.intensity(op, om) * (1.0 - np.cos(om * 1.3))
        np.testing.assert_allclose(raw, expected, rtol=0, atol=1e-13 * 8.0)
        # and equals 8x the standard HOM kernel
        std = mh.cpd_standard_hom(model, 1.3, os_, oi)
        np.testing.assert_allclose(raw, 8.0 * std, rtol=0, atol=1e-13 * 8.0)

    def test_nonfinite_rejected(self):
        with pytest.raises(mh.InvalidInputError):
            mh.cpd_modified_raw(uncorrelated(), mh.InterferometerConfig(1.0), math.nan, 0.0)


class TestOracleEquivalence:
    """Trig-form kernel against the direct complex-arithmetic oracle.

    Near the kernel's zero lines both routes lose all significant digits
    to cancellation, so a pointwise relative bound there is meaningless
    for any implementation.  The envelope-normalized absolute bound below
    is the sharp statement (it implies 1e-10 relative wherever the kernel
    exceeds 1e-4 of its local envelope); the relative check is asserted
    on that cancellation-safe region.
    """

    def test_raw_vs_trig_20_random_tuples(self):
        for model, cfg, rng in random_tuples(20):
            smax = 3.0 * max(model.sigma_plus, model.sigma_minus)
            os_ = rng.uniform(-smax, smax, 64)[:, None]
            oi = rng.uniform(-smax, smax, 64)[None, :]
            raw = mh.cpd_modified_raw(model, cfg, os_, oi)
            op, om = mh.sum_diff_from_signal_idler(os_, oi)
            trig = mh.cpd_modified(model, cfg, op, om)
            envelope = 4.0 * model.tpsa.intensity(op, om)
            live = envelope > 1e-280  # below this both routes are subnormal noise
            if (~live).any():
                assert np.max(raw[~live]) < 1e-250 and np.max(trig[~live]) < 1e-250
            assert np.max(np.abs(raw - trig)[live] / envelope[live]) < 1e-12
            safe = live & (raw > 1e-12) & (raw > 1e-4 * envelope)
            assert safe.any()
            rel = np.abs(raw - trig)[safe] / raw[safe]
            assert np.max(rel) < 1e-10


class TestZeroDelayKernel:
    def test_sum_axis_zero_lines(self):
        model = uncorrelated()
        cfg = mh.InterferometerConfig(TAU0, 0.8, 0.0)
        om = np.linspace(-14.0, 14.0, 57)
        for k in (-2, -1, 0, 1, 2):
            op = (2.0 * math.pi * k - 0.8) / TAU0
            v = mh.cpd_modified_zero_delay(model, cfg, op, om)
            assert np.max(v) < 1e-28

    def test_difference_axis_zero_lines(self):
        model = uncorrelated()
        cfg = mh.InterferometerConfig(TAU0, 0.8, 0.0)
        op = np.linspace(-14.0, 14.0, 57)
        for k in (-2, -1, 0, 1, 2):
            om = 2.0 * math.pi * k / TAU0
            v = mh.cpd_modified_zero_delay(model, cfg, op, om)
            assert np.max(v) < 1e-28

    def test_cross_check_against_general_kernel(self):
        # derived through cpd_modified at tau = 0
        model = uncorrelated()
        cfg = mh.InterferometerConfig(TAU0, 0.0, 0.0)
        val = mh.cpd_modified_zero_delay(model, cfg, math.pi / 3.0, math.pi / 3.0)
        ref = mh.cpd_modified(model, cfg, math.pi / 3.0, math.pi / 3.0)
        assert val == pytest.approx(ref, rel=1e-13)
        expected = 16.0 * math.exp(-2.0 * (math.pi / 3.0) ** 2 / 50.0)
        assert val == pytest.approx(expected, rel=1e-12)

    def test_matches_general_kernel_at_zero_tau(self):
        for model, cfg, rng in random_tuples(5, seed=7):
            cfg0 = cfg.with_tau(0.0)
            op = rng.uniform(-10, 10, 200)
            om = rng.uniform(-10, 10, 200)
            a = mh.cpd_modified_zero_delay(model, cfg0, op, om)
            b = mh.cpd_modified(model, cfg0, op, om)
            scale = 4.0 * model.tpsa.intensity(op, om)
            np.testing.assert_allclose(a, b, rtol=0, atol=1e-13 * np.max(scale))

    def test_rank_one_separability(self):
        # r(i,j) r(k,l) == r(i,l) r(k,j) once the JSI envelope is divided out
        model = mh.SourceModel.pulsed(2.0, 6.0)
        cfg = mh.InterferometerConfig(2.0, 1.1, 0.0)
        rng = np.random.default_rng(3)
        op = rng.uniform(-6, 6, 30)
        om = rng.uniform(-18, 18, 30)
        r = (mh.cpd_modified_zero_delay(model, cfg, op[:, None], om[None, :])
             / model.tpsa.intensity(op[:, None], om[None, :]))
        lhs = r[:, None, :, None] * r[None, :, None, :]
        rhs = r[:, None, None, :] * r[None, :, :, None]
        mask = np.minimum(lhs, rhs) > 1e-10
        np.testing.assert_allclose(lhs[mask], rhs[mask], rtol=1e-9)

    def test_requires_zero_tau(self):
        with pytest.raises(mh.ContractViolationError):
            mh.cpd_modified_zero_delay(uncorrelated(),
                                       mh.InterferometerConfig(TAU0, 0.0, 0.5), 0.0, 0.0)


class TestCwKernel:
    def test_paper_simplification_at_phi_half_pi(self):
        # r_c(tau=0, w) = 4 F(w) (1 - cos(2 w tau0)) at phi = pi/2
        model = mh.SourceModel.cw(SIGMA)
        cfg = mh.InterferometerConfig(TAU0, math.pi / 2.0, 0.0)
        w = np.linspace(-8, 8, 321)
        expected = 4.0 * model.cw_intensity(w) * (1.0 - np.cos(2.0 * w * TAU0))
        np.testing.assert_allclose(mh.cpd_cw(model, cfg, w), expected,
                                   rtol=0, atol=1e-14)

    @pytest.mark.parametrize("phi", [0.0, 0.4, math.pi / 2.0, math.pi])
    def test_zero_detuning_is_null(self, phi):
        model = mh.SourceModel.cw(SIGMA)
        cfg = mh.InterferometerConfig(TAU0, phi, 0.0)
        assert mh.cpd_cw(model, cfg, 0.0) == 0.0

    def test_quarter_period_point_against_general_kernel(self):
        # tau = tau0, phi = 0, w = pi/(4 tau0): the general-kernel oracle
        # gives 4|f|^2 (the bracket reduces to 1 + 1/2 - 1/2).
        model = mh.SourceModel.cw(SIGMA)
        cfg = mh.InterferometerConfig(TAU0, 0.0, TAU0)
        w = math.pi / (4.0 * TAU0)
        oracle = mh.cpd_modified(model, cfg, 0.0, 2.0 * w)
        value = mh.cpd_cw(model, cfg, w)
        assert value == pytest.approx(oracle, rel=1e-14)
        assert value == pytest.approx(4.0 * model.cw_intensity(w), rel=1e-12)

    def test_cw_consistency_with_general_kernel(self):
        model = mh.SourceModel.cw(SIGMA)
        w = np.linspace(-8, 8, 161)
        for phi in (0.0, 0.9, math.pi):
            for tau in (0.0, 1.2, -2.5):
                cfg = mh.InterferometerConfig(TAU0, phi, tau)
                a = mh.cpd_cw(model, cfg, w)
                b = mh.cpd_modified(model, cfg, np.zeros_like(w), 2.0 * w)
                assert np.array_equal(a, b)

    def test_pulsed_model_rejected(self):
        with pytest.raises(mh.ContractViolationError):
            mh.cpd_cw(uncorrelated(), mh.InterferometerConfig(TAU0), 0.0)


class TestComparisonKernels:
    def test_standard_hom_null_at_zero_delay(self):
        model = uncorrelated()
        w = np.linspace(-15, 15, 64)
        os_, oi = np.meshgrid(w, w, indexing="ij")
        assert np.array_equal(mh.cpd_standard_hom(model, 0.0, os_, oi),
                              np.zeros((64, 64)))

    def test_standard_hom_antinode(self):
        model = uncorrelated()
        tau = 1.7
        om = math.pi / tau
        os_, oi = mh.signal_idler_from_sum_diff(0.4, om)
        expected = 2.0 * model.tpsa.intensity(0.4, om)
        assert mh.cpd_standard_hom(model, tau, os_, oi) == pytest.approx(expected, rel=1e-14)

    def test_standard_hom_constant_along_sum_axis(self):
        model = uncorrelated()
        op = np.linspace(-12, 12, 41)[:, None]
        om = np.linspace(-12, 12, 41)[None, :]
        os_, oi = mh.signal_idler_from_sum_diff(op, om)
        ratio = (mh.cpd_standard_hom(model, 2.0, os_, oi)
                 / model.tpsa.intensity(op, om))
        assert np.max(np.var(ratio, axis=0)) < 1e-20

    def test_noon_flat_cases(self):
        model = uncorrelated()
        w = np.linspace(-10, 10, 21)
        os_, oi = np.meshgrid(w, w, indexing="ij")
        v = mh.cpd_noon(model, 0.0, 0.0, os_, oi)
        op, om = mh.sum_diff_from_signal_idler(os_, oi)
        np.testing.assert_allclose(v, 2.0 * model.tpsa.intensity(op, om), rtol=1e-14)
        os0, oi0 = mh.signal_idler_from_sum_diff(0.0, 3.0)
        assert mh.cpd_noon(model, 1.0, math.pi, os0, oi0) == pytest.approx(0.0, abs=1e-16)

    def test_noon_constant_along_difference_axis(self):
        model = uncorrelated()
        op = np.linspace(-12, 12, 41)[:, None]
        om = np.linspace(-12, 12, 41)[None, :]
        os_, oi = mh.signal_idler_from_sum_diff(op, om)
        ratio = (mh.cpd_noon(model, 2.0, 0.7, os_, oi)
                 / model.tpsa.intensity(op, om))
        assert np.max(np.var(ratio, axis=1)) < 1e-20

    def test_pi_offset_between_noon_and_modified_zero_delay(self):
        # the sum-axis modulations are opposite in sign: at matched phases
        # maxima of one sit on minima of the other, half a period apart
        model = uncorrelated()
        phi = 0.6
        grid = mh.Grid1D.linspace(-15.0, 15.0, 1501, mh.AxisKind.SUM)
        op = grid.points()
        noon_profile = 1.0 + np.cos(phi + op * TAU0)
        cfg = mh.InterferometerConfig(TAU0, phi, 0.0)
        mod_profile = (mh.cpd_modified_zero_delay(model, cfg, op, 0.9)
                       / model.tpsa.intensity(op, 0.9))
        i_noon = 750 + np.argmax(noon_profile[750:950])
        i_mod = 750 + np.argmax(mod_profile[750:950])
        x_noon, _ = mh.refine_extremum(grid, noon_profile, int(i_noon))
        x_mod, _ = mh.refine_extremum(grid, mod_profile, int(i_mod))
        period = 2.0 * math.pi / TAU0
        offset = abs(x_noon - x_mod) % period
        assert min(offset, period - offset) == pytest.approx(period / 2.0, abs=grid.step)


class TestKernelProperties:
    def test_non_negativity_and_parity_randomized(self):
        for model, cfg, rng in random_tuples(20, seed=99):
            op = rng.uniform(-20, 20, 500)
            om = rng.uniform(-20, 20, 500)
            v = mh.cpd_modified(model, cfg, op, om)
            assert np.min(v) >= 0.0
            assert np.array_equal(v, mh.cpd_modified(model, cfg, op, -om))
            os_, oi = mh.signal_idler_from_sum_diff(op, om)
            raw = mh.cpd_modified_raw(model, cfg, os_, oi)
            swapped = mh.cpd_modified_raw(model, cfg, oi, os_)
            assert np.min(raw) >= 0.0
            np.testing.assert_allclose(raw, swapped, rtol=0,
                                       atol=1e-13 * max(np.max(raw), 1.0))
