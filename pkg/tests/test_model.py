import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import modhom as mh

finite = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False)
sigmas = st.floats(min_value=0.05, max_value=50.0, allow_nan=False)


class TestGaussianTpsa:
    def test_peak_normalization(self):
        tpsa = mh.GaussianTpsa(5.0, 5.0)
        assert mh.tpsa_eval(tpsa, 0.0, 0.0) == 1.0

    def test_analytic_point(self):
        tpsa = mh.GaussianTpsa(5.0, 5.0)
        assert mh.tpsa_eval(tpsa, 0.0, 10.0) == pytest.approx(math.exp(-1.0), rel=1e-15)

    def test_anti_correlated_regime_point(self):
        tpsa = mh.GaussianTpsa(0.1, 5.0)
        assert mh.tpsa_eval(tpsa, 1.0, 0.0) == pytest.approx(math.exp(-25.0), rel=1e-12)

    @given(sigmas, sigmas, finite, finite)
    @settings(max_examples=100, deadline=None)
    def test_exchange_symmetry_and_range(self, sp, sm, op, om):
        tpsa = mh.GaussianTpsa(sp, sm)
        v = tpsa.amplitude(op, om)
        assert v == tpsa.amplitude(op, -om)
        assert 0.0 <= v <= 1.0

    @given(sigmas, sigmas, finite, st.floats(min_value=0.1, max_value=10.0))
    @settings(max_examples=100, deadline=None)
    def test_monotone_decay(self, sp, sm, om, bump):
        tpsa = mh.GaussianTpsa(sp, sm)
        # keep clear of underflow, where both sides round to 0
        assume(tpsa.amplitude(1.0 + bump, abs(om) + bump) > 1e-280)
        assert tpsa.amplitude(1.0 + bump, om) < tpsa.amplitude(1.0, om)
        assert tpsa.amplitude(1.0, abs(om) + bump) < tpsa.amplitude(1.0, abs(om))

    @pytest.mark.parametrize("sp,sm", [(0.0, 5.0), (-1.0, 5.0), (5.0, 0.0),
                                       (math.nan, 5.0), (5.0, math.inf)])
    def test_invalid_sigmas(self, sp, sm):
        with pytest.raises(mh.InvalidInputError):
            mh.GaussianTpsa(sp, sm)

    def test_nonfinite_detuning_rejected(self):
        tpsa = mh.GaussianTpsa(5.0, 5.0)
        with pytest.raises(mh.InvalidInputError):
            mh.tpsa_eval(tpsa, math.nan, 0.0)
        with pytest.raises(mh.InvalidInputError):
            mh.tpsa_eval(tpsa, 0.0, math.inf)


class TestSourceModel:
    @pytest.mark.parametrize("sm,expected", [(5.0, 0.2), (0.1, 10.0), (1.0, 1.0)])
    def test_coherence_time(self, sm, expected):
        model = mh.SourceModel.pulsed(5.0, sm)
        assert mh.coherence_time(model) == pytest.approx(expected, rel=1e-15)

    def test_correlation_tags(self):
        assert mh.SourceModel.pulsed(0.1, 5.0).correlation == "anti-correlated"
        assert mh.SourceModel.pulsed(5.0, 0.1).correlation == "correlated"
        assert mh.SourceModel.pulsed(5.0, 5.0).correlation == "uncorrelated"
        assert mh.SourceModel.cw(5.0).correlation == "anti-correlated"

    def test_cw_marginal_matches_tpsa_on_diff_axis(self):
        model = mh.SourceModel.cw(5.0)
        w = np.linspace(-10, 10, 101)
        assert np.array_equal(model.cw_intensity(w),
                              model.tpsa.intensity(0.0, 2.0 * w))


class TestCoordinates:
    @given(finite, finite)
    @settings(max_examples=100, deadline=None)
    def test_round_trip_identity(self, os_, oi):
        op, om = mh.sum_diff_from_signal_idler(os_, oi)
        back_s, back_i = mh.signal_idler_from_sum_diff(op, om)
        assert back_s == pytest.approx(os_, abs=1e-12)
        assert back_i == pytest.approx(oi, abs=1e-12)

    def test_grid_nodes_round_trip_exactly(self):
        # step 0.5 makes every node exactly representable, so the round
        # trip is bit-exact; a generic grid gets a 1-ulp-scale tolerance
        g = mh.Grid1D.linspace(-16.0, 16.0, 65)
        os_, oi = np.meshgrid(g.points(), g.points(), indexing="ij")
        op, om = mh.sum_diff_from_signal_idler(os_, oi)
        bs, bi = mh.signal_idler_from_sum_diff(op, om)
        assert np.array_equal(bs, os_)
        assert np.array_equal(bi, oi)

        g2 = mh.Grid1D.linspace(-15.0, 15.0, 64)
        os2, oi2 = np.meshgrid(g2.points(), g2.points(), indexing="ij")
        bs2, bi2 = mh.signal_idler_from_sum_diff(*mh.sum_diff_from_signal_idler(os2, oi2))
        np.testing.assert_allclose(bs2, os2, rtol=0, atol=1e-13)
        np.testing.assert_allclose(bi2, oi2, rtol=0, atol=1e-13)


class TestConfigAndGrids:
    def test_negative_tau0_rejected(self):
        with pytest.raises(mh.InvalidInputError):
            mh.InterferometerConfig(-1.0)

    def test_phi_reduced_keeps_raw(self):
        cfg = mh.InterferometerConfig(3.0, 5.0 * math.pi)
        assert cfg.phi == 5.0 * math.pi
        assert cfg.phi_reduced == pytest.approx(math.pi, rel=1e-12)

    def test_nonfinite_config_rejected(self):
        with pytest.raises(mh.InvalidInputError):
            mh.InterferometerConfig(math.nan)

    def test_grid_validation(self):
        with pytest.raises(mh.InvalidInputError):
            mh.Grid1D(0.0, -0.1, 10)
        with pytest.raises(mh.InvalidInputError):
            mh.Grid1D(0.0, 0.1, 1)
        with pytest.raises(mh.InvalidInputError):
            mh.Grid1D.linspace(1.0, -1.0, 10)

    def test_grid_points_uniform(self):
        g = mh.Grid1D.linspace(-5.0, 5.0, 1001)
        pts = g.points()
        assert len(pts) == 1001
        assert pts[0] == -5.0
        steps = np.diff(pts)
        assert np.max(np.abs(steps - g.step)) < 1e-14
        assert g.index_of(0.0) == 500
        assert g.index_of(99.0) == 1000

    def test_symmetric_grid_centers_zero(self):
        g = mh.Grid1D.symmetric(15.0, 257)
        assert g.points()[128] == pytest.approx(0.0, abs=1e-13)
