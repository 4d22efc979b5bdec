import math
import warnings

import numpy as np
import pytest

import modhom as mh

SIGMA = 5.0
TAU0 = 3.0


def cw_model():
    return mh.SourceModel.cw(SIGMA)


class TestGFourier:
    def test_unit_at_zero(self):
        for sigma in (0.1, 1.0, 5.0, 50.0):
            assert mh.g_fourier(sigma, 0.0) == 1.0

    def test_analytic_value(self):
        assert mh.g_fourier(5.0, 0.2) == pytest.approx(math.exp(-0.5), rel=1e-15)

    def test_numeric_transform_matches_closed_form(self):
        taus = np.linspace(-2.0, 2.0, 81)
        numeric = mh.g_fourier_numeric(5.0, taus)
        closed = mh.g_fourier(5.0, taus)
        assert np.max(np.abs(numeric - closed)) <= 1e-8

    def test_invalid_sigma(self):
        with pytest.raises(mh.InvalidInputError):
            mh.g_fourier(0.0, 1.0)
        with pytest.raises(mh.InvalidInputError):
            mh.g_fourier_numeric(-2.0, 1.0)


class TestClosedForms:
    def test_side_dip_level_50_percent(self):
        model = mh.SourceModel.pulsed(SIGMA, SIGMA)
        for tau in (-TAU0, TAU0):
            r = mh.rate_modified_pulsed(model, TAU0, 0.0, tau)
            assert r == pytest.approx(0.5, abs=1e-6)

    def test_far_delay_baseline(self):
        model = mh.SourceModel.pulsed(SIGMA, SIGMA)
        for phi in (0.0, 1.0, math.pi):
            a, _ = mh.visibility_parameters(model, TAU0, phi)
            assert mh.rate_modified_pulsed(model, TAU0, phi, 50.0) == pytest.approx(
                1.0 + a, abs=1e-12)

    def test_narrowband_pump_deep_middle_dip(self):
        # derived against the quadrature oracle below; analytically
        # 1 + a - b with b = exp(-0.02)
        model = mh.SourceModel.pulsed(0.2, SIGMA)
        cfg = mh.InterferometerConfig(1.0, 0.0, 0.0)
        closed = mh.rate_modified_pulsed(model, 1.0, 0.0, 0.0)
        assert closed == pytest.approx(1.0 - math.exp(-0.02), abs=1e-4)
        quad = mh.rate_modified_quadrature(model, cfg, 0.0)
        assert closed == pytest.approx(quad, abs=1e-6)

    @pytest.mark.parametrize("phi,expected", [(0.0, 0.0), (math.pi / 2.0, 1.0),
                                              (math.pi, 2.0)])
    def test_cw_middle_feature(self, phi, expected):
        assert mh.rate_modified_cw(cw_model(), TAU0, phi, 0.0) == pytest.approx(
            expected, abs=1e-6)

    def test_cw_flat_at_quarter_phase(self):
        taus = np.linspace(-0.5, 0.5, 101)
        r = mh.rate_modified_cw(cw_model(), TAU0, math.pi / 2.0, taus)
        np.testing.assert_allclose(r, 1.0, atol=1e-6)

    def test_evenness_exact(self):
        model = mh.SourceModel.pulsed(2.0, 7.0)
        taus = np.linspace(0.0, 6.0, 200)
        assert np.array_equal(mh.rate_modified_pulsed(model, 2.0, 0.8, taus),
                              mh.rate_modified_pulsed(model, 2.0, 0.8, -taus))

    def test_pump_regime_contracts(self):
        with pytest.raises(mh.ContractViolationError):
            mh.rate_modified_pulsed(cw_model(), TAU0, 0.0, 0.0)
        with pytest.raises(mh.ContractViolationError):
            mh.rate_modified_cw(mh.SourceModel.pulsed(SIGMA, SIGMA), TAU0, 0.0, 0.0)

    def test_coherence_time_warning(self):
        model = mh.SourceModel.pulsed(SIGMA, 0.5)  # t_coh = 2 ps
        with pytest.warns(mh.CoherenceTimeWarning):
            mh.rate_modified_pulsed(model, 1.0, 0.0, 0.0)


class TestClosedFormProperties:
    def test_side_dip_universality(self):
        # minimum near +tau0 is 0.5 within 1e-4 once sigma_minus*tau0 >= 10
        rng = np.random.default_rng(11)
        for _ in range(10):
            sm = rng.uniform(2.0, 10.0)
            tau0 = 10.0 / sm + rng.uniform(0.5, 3.0)
            sp = rng.uniform(0.1, 20.0)
            phi = rng.uniform(0.0, 2.0 * math.pi)
            model = mh.SourceModel.pulsed(sp, sm)
            taus = np.linspace(tau0 - 0.5, tau0 + 0.5, 2001)
            r = mh.rate_modified_pulsed(model, tau0, phi, taus)
            assert np.min(r) == pytest.approx(0.5, abs=1e-4)

    def test_middle_dip_visibility_formula(self):
        rng = np.random.default_rng(12)
        for _ in range(10):
            sm = rng.uniform(3.0, 10.0)
            tau0 = 12.0 / sm
            sp = rng.uniform(0.05, 10.0)
            phi = rng.uniform(0.0, 2.0 * math.pi)
            model = mh.SourceModel.pulsed(sp, sm)
            a, b = mh.visibility_parameters(model, tau0, phi)
            r0 = mh.rate_modified_pulsed(model, tau0, phi, 0.0)
            baseline = 1.0 + a
            assert (baseline - r0) / baseline == pytest.approx(b / (1.0 + a), abs=1e-9)

    def test_zero_visibility_at_quarter_phase_any_pump(self):
        for sp in (0.05, 0.5, 5.0, 50.0):
            model = mh.SourceModel.pulsed(sp, SIGMA)
            _, b = mh.visibility_parameters(model, TAU0, math.pi / 2.0)
            assert abs(b) < 1e-15

    def test_b_range_and_monotonicity(self):
        # b = cos(phi) exp(-sp^2 tau0^2 / 2): in [-1, 1], |b| decreasing in sp
        sps = np.array([0.05, 0.1, 0.5, 1.0, 2.0])
        for phi in (0.0, 1.0, math.pi):
            bs = [mh.visibility_parameters(mh.SourceModel.pulsed(sp, SIGMA), 1.0, phi)[1]
                  for sp in sps]
            assert all(-1.0 <= b <= 1.0 for b in bs)
            mags = np.abs(bs)
            assert np.all(np.diff(mags) <= 0.0)

    def test_dip_width_scales_inversely_with_sigma_minus(self):
        def half_depth_width(sm):
            model = mh.SourceModel.cw(sm)
            taus = np.linspace(TAU0 - 2.0, TAU0 + 2.0, 8001)
            r = mh.rate_modified_cw(model, TAU0, math.pi / 2.0, taus)
            depth = 1.0 - np.min(r)
            below = taus[r < 1.0 - depth / 2.0]
            return below[-1] - below[0]

        w1, w2 = half_depth_width(4.0), half_depth_width(8.0)
        assert w1 / w2 == pytest.approx(2.0, rel=0.05)


class TestQuadratureRoute:
    def test_matches_closed_form_across_delays(self):
        model = mh.SourceModel.pulsed(SIGMA, SIGMA)
        taus = np.linspace(-5.0, 5.0, 21)
        for phi in (0.0, math.pi / 2.0, math.pi):
            cfg = mh.InterferometerConfig(TAU0, phi)
            closed = mh.rate_modified_pulsed(model, TAU0, phi, taus)
            quad = np.array([mh.rate_modified_quadrature(model, cfg, t) for t in taus])
            assert np.max(np.abs(closed - quad)) <= 1e-6

    def test_tau0_zero_limit_reproduces_standard_dip_shape(self):
        model = mh.SourceModel.pulsed(SIGMA, SIGMA)
        cfg = mh.InterferometerConfig(0.0, 0.0)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", mh.CoherenceTimeWarning)
            taus = np.linspace(-1.5, 1.5, 13)
            quad = np.array([mh.rate_modified_quadrature(model, cfg, t) for t in taus])
        shape = 1.0 - mh.g_fourier(SIGMA, taus)
        # proportional up to the merged-baseline normalization (factor 2)
        np.testing.assert_allclose(quad, 2.0 * shape, atol=1e-6)

    def test_symmetry_in_tau(self):
        model = mh.SourceModel.pulsed(2.0, 6.0)
        cfg = mh.InterferometerConfig(1.5, 0.7)
        for tau in (0.3, 1.1, 2.4):
            assert mh.rate_modified_quadrature(model, cfg, tau) == pytest.approx(
                mh.rate_modified_quadrature(model, cfg, -tau), abs=1e-9)

    def test_under_resolved_grid_raises(self):
        model = mh.SourceModel.pulsed(SIGMA, SIGMA)
        cfg = mh.InterferometerConfig(TAU0, 0.0)
        with pytest.raises(mh.ResolutionError):
            mh.rate_modified_quadrature(model, cfg, 0.0,
                                        mh.QuadratureSpec(step_plus=0.5, step_minus=0.5))

    def test_narrow_span_raises(self):
        model = mh.SourceModel.pulsed(SIGMA, SIGMA)
        cfg = mh.InterferometerConfig(TAU0, 0.0)
        with pytest.raises(mh.ResolutionError):
            mh.rate_modified_quadrature(
                model, cfg, 0.0, mh.QuadratureSpec(span_sigmas_minus=3.0))

    def test_cw_quadrature_matches_closed_form(self):
        model = cw_model()
        cfg = mh.InterferometerConfig(TAU0, math.pi)
        for tau in (-3.0, -1.0, 0.0, 0.4, 2.2):
            assert mh.rate_cw_quadrature(model, cfg, tau) == pytest.approx(
                mh.rate_modified_cw(model, TAU0, math.pi, tau), abs=1e-6)


class TestScan:
    def test_fig1b_preset_features(self):
        delays = mh.Grid1D.linspace(-5.0, 5.0, 1001)
        model = cw_model()
        curves = {}
        for phi in (0.0, math.pi / 2.0, math.pi):
            curves[phi] = mh.scan(model, mh.InterferometerConfig(TAU0, phi), delays)
        i0 = delays.index_of(0.0)
        assert curves[0.0].values[i0] == pytest.approx(0.0, abs=1e-6)
        assert curves[math.pi / 2.0].values[i0] == pytest.approx(1.0, abs=1e-6)
        assert curves[math.pi].values[i0] == pytest.approx(2.0, abs=1e-6)
        for phi, ig in curves.items():
            for tau_dip in (-TAU0, TAU0):
                i = delays.index_of(tau_dip)
                assert ig.values[i] == pytest.approx(0.5, abs=1e-3)
        assert curves[0.0].baseline == 1.0

    def test_scan_methods_agree(self):
        model = mh.SourceModel.pulsed(SIGMA, SIGMA)
        cfg = mh.InterferometerConfig(TAU0, math.pi)
        delays = mh.Grid1D.linspace(-4.0, 4.0, 17)
        closed = mh.scan(model, cfg, delays, mh.RateMethod.CLOSED_FORM)
        quad = mh.scan(model, cfg, delays, mh.RateMethod.QUADRATURE)
        assert np.max(np.abs(closed.values - quad.values)) <= 1e-6

    def test_invalid_grid_rejected(self):
        with pytest.raises(mh.InvalidInputError):
            mh.Grid1D.linspace(-5.0, 5.0, 0)

    def test_baseline_convergence_at_far_field(self):
        model = mh.SourceModel.pulsed(1.0, 4.0)
        cfg = mh.InterferometerConfig(2.0, 0.9)
        delays = mh.Grid1D.linspace(20.0, 25.0, 11)
        ig = mh.scan(model, cfg, delays)
        np.testing.assert_allclose(ig.values, ig.baseline, atol=1e-10)

    def test_interferogram_shape_validation(self):
        delays = mh.Grid1D.linspace(-1.0, 1.0, 5)
        with pytest.raises(mh.InvalidInputError):
            mh.Interferogram(delays, np.zeros(4), 1.0,
                             mh.SourceModel.pulsed(1.0, 1.0),
                             mh.InterferometerConfig(1.0))
