import math

import numpy as np
import pytest

from minklab.core import PreconditionError
from minklab.rigid import (accel_curl, accel_oneform, boost_killing_field,
                           boost_killing_flow, constant_field,
                           expected_accel_curl, expected_lie_accel, field_csv,
                           foliation_gap, foliation_time, herglotz_field,
                           hyperbolic_worldline, is_rigid, killing_test,
                           kinematic_decomposition, lie_derivative_metric,
                           lie_derivative_oneform, projected_curvature_check,
                           radial_expanding_field,
                           reparameterization_invariance_check,
                           rindler_from_event, rotation_killing_checks,
                           rotation_killing_field, spatial_metric,
                           straight_worldline, trajectory_csv,
                           wedge_chart_metric, wiggly_worldline)

STEP = 1e-3


class TestSpatialMetric:
    def test_rest_frame(self):
        h = spatial_metric(np.array([1.0, 0.0, 0.0, 0.0]), 1.0)
        assert np.allclose(h, np.diag([0.0, 1.0, 1.0, 1.0]), atol=1e-15)

    def test_boosted_eigenvalues(self, rng):
        from minklab.kinematics import boost_3d
        v = np.array([0.5, 0.2, -0.1])
        B = boost_3d(v, 1.0)
        u = B @ np.array([1.0, 0.0, 0.0, 0.0])
        # column convention: u = boost image of the rest velocity
        u = u / math.sqrt(abs(u[0] ** 2 - u[1:] @ u[1:]))
        h = spatial_metric(u, 1.0)
        eig = np.sort(np.linalg.eigvalsh(h))
        assert eig[0] == pytest.approx(0.0, abs=1e-12)
        assert np.all(eig[1:] > 0)

    def test_annihilates_velocity(self, rng):
        for _ in range(20):
            sp = rng.uniform(-0.5, 0.5, 3)
            u = np.concatenate([[1.0], sp])
            u = u / math.sqrt(abs(u[0] ** 2 - u[1:] @ u[1:]))
            h = spatial_metric(u, 1.0)
            assert np.abs(h @ u).max() < 1e-12

    def test_unnormalised_rejected(self):
        with pytest.raises(PreconditionError):
            spatial_metric(np.array([2.0, 0.0, 0.0, 0.0]), 1.0)


class TestDecomposition:
    def test_constant_field_trivial(self):
        f = constant_field()
        d = kinematic_decomposition(f, np.zeros(4), STEP)
        assert d.theta_norm < 1e-12 and d.omega_norm < 1e-12
        assert np.abs(d.accel).max() < 1e-12

    def test_boost_field(self):
        f = boost_killing_field()
        for x0 in (0.5, 1.0, 2.0):
            d = kinematic_decomposition(f, np.array([0.0, x0, 0.0, 0.0]), STEP)
            assert d.theta_norm < 1e-5
            assert d.omega_norm < 1e-5
            d_fine = kinematic_decomposition(f, np.array([0.0, x0, 0.0, 0.0]), 2e-4)
            assert d_fine.accel_norm_g == pytest.approx(1.0 / x0, abs=1e-6)

    def test_rotation_field(self):
        f = rotation_killing_field(1.0, 1.0)
        d = kinematic_decomposition(f, np.array([0.0, 0.3, 0.0, 0.0]), STEP)
        assert d.theta_norm < 1e-5
        assert d.omega_norm > 1e-2

    def test_reconstruction(self, rng):
        # the split re-sums to the gradient up to the step^2 error of the
        # numerically differentiated normalisation constraint
        from minklab.rigid.decomp import grad_lowered
        f = rotation_killing_field(0.8, 1.0)
        x = np.array([0.1, 0.4, -0.2, 0.3])
        d = kinematic_decomposition(f, x, STEP)
        grad = grad_lowered(f, x, STEP)
        assert d.reconstruction_residual(grad, 1.0) < 1e-5

    def test_horizontality(self):
        f = rotation_killing_field(0.8, 1.0)
        x = np.array([0.1, 0.4, -0.2, 0.3])
        d = kinematic_decomposition(f, x, STEP)
        assert np.abs(d.theta @ d.u).max() < 1e-9
        assert np.abs(d.omega @ d.u).max() < 1e-9

    def test_convergence_second_order(self):
        # halving the step divides the error by about four
        f = radial_expanding_field(0.1)
        x = np.array([0.0, 0.4, 0.2, 0.1])
        exact = _expanding_theta_exact(0.1, x)
        errs = []
        for s in (2e-3, 1e-3):
            d = kinematic_decomposition(f, x, s)
            errs.append(np.abs(d.theta - exact).max())
        ratio = errs[0] / errs[1]
        assert 3.0 <= ratio <= 5.0

    def test_step_validation(self):
        with pytest.raises(PreconditionError):
            kinematic_decomposition(constant_field(), np.zeros(4), -1e-3)

    def test_domain_boundary_guard(self):
        f = boost_killing_field()
        with pytest.raises(PreconditionError):
            kinematic_decomposition(f, np.array([0.0, 1e-4, 0.0, 0.0]), 1e-3)


def _expanding_theta_exact(eps, x):
    """Analytic expansion tensor of the normalised c e0 + eps x field.

    Central-difference oracle at a much finer step stands in for the closed
    form; at step 1e-5 its own error is far below the compared errors.
    """
    f = radial_expanding_field(eps)
    return kinematic_decomposition(f, x, 1e-5).theta


class TestRigidityVerdicts:
    def test_boost_rigid(self):
        f = boost_killing_field()
        got = is_rigid(f, [np.array([0.0, 1.0, 0.0, 0.0]),
                           np.array([0.3, 1.5, 0.2, -0.4])], STEP)
        assert got["rigid"]

    def test_rotation_rigid(self):
        f = rotation_killing_field(1.0, 1.0)
        got = is_rigid(f, [np.array([0.0, 0.3, 0.1, 0.0]),
                           np.array([0.5, 0.1, -0.4, 0.2])], STEP)
        assert got["rigid"]

    def test_expanding_not_rigid(self):
        f = radial_expanding_field(0.1)
        got = is_rigid(f, [np.array([0.0, 0.5, 0.2, 0.1])], STEP)
        assert not got["rigid"]
        assert got["max_theta"] > 1e-2

    def test_reparameterization_invariance(self):
        f = boost_killing_field()
        probes = [np.array([0.0, 1.0, 0.0, 0.0]), np.array([0.2, 1.4, 0.3, 0.0])]
        for scaling in (lambda x: 2.0, lambda x: 1.0 + 0.1 * math.sin(x[1])):
            got = reparameterization_invariance_check(f, scaling, probes, STEP)
            assert got["verdict_unchanged"]

    def test_non_rigid_stays_non_rigid_under_scaling(self):
        f = radial_expanding_field(0.1)
        probes = [np.array([0.0, 0.5, 0.2, 0.1])]
        got = reparameterization_invariance_check(
            f, lambda x: 1.0 + 0.2 * x[1], probes, STEP)
        assert got["verdict_unchanged"]
        assert got["scaled_max_theta"] > 1e-3


class TestLieIdentities:
    def test_lie_u_of_velocity_oneform_is_accel(self):
        # transport of the lowered velocity along itself gives the
        # lowered acceleration
        for f in (boost_killing_field(), rotation_killing_field(0.9, 1.0)):
            x = np.array([0.1, 0.6, 0.2, 0.0])
            lie = lie_derivative_oneform(f, lambda y: f.lower(y), x, STEP)
            a_fd = accel_oneform(f, x, STEP)
            assert np.abs(lie - a_fd).max() < 1e-5

    def test_generators_satisfy_killing_equation(self):
        from minklab.rigid import generator_killing_residual
        x = np.array([0.1, 0.6, 0.2, 0.0])
        boost_gen = lambda y: np.array([y[1], y[0], 0.0, 0.0])
        rot_gen = lambda y: np.array([1.0, -0.9 * y[2], 0.9 * y[1], 0.0])
        assert generator_killing_residual(boost_gen, x, STEP) < 1e-12
        assert generator_killing_residual(rot_gen, x, STEP) < 1e-12
        # the normalised velocity of the same flow is not itself a
        # generator of isometries: normalisation rescales pointwise
        f = boost_killing_field()
        assert np.abs(lie_derivative_metric(f, x, STEP)).max() > 1e-3

    def test_expanding_field_generator_is_not_killing(self):
        from minklab.rigid import generator_killing_residual
        gen = lambda y: np.concatenate([[1.0], 0.1 * y[1:]])
        assert generator_killing_residual(gen, np.array([0.0, 0.5, 0.2, 0.1]),
                                          STEP) > 1e-2


class TestWedgeChart:
    def test_flow_value(self):
        got = boost_killing_flow(1.0, 0.0)
        assert np.allclose(got, [0.0, 1.0], atol=1e-15)

    def test_hyperbola_invariant(self, rng):
        for _ in range(50):
            x0 = float(rng.uniform(0.3, 3.0))
            tau = float(rng.uniform(-2, 2))
            ct, x = boost_killing_flow(x0, tau)
            assert x * x - ct * ct == pytest.approx(x0 * x0, rel=1e-12)

    def test_round_trip(self, rng):
        for _ in range(100):
            ct = float(rng.uniform(-1.5, 1.5))
            x = float(rng.uniform(abs(ct) + 0.05, 4.0))
            lam, tau, x0 = rindler_from_event(ct, x)
            back = boost_killing_flow(x0, tau)
            assert np.abs(back - [ct, x]).max() < 1e-10

    def test_eigentime_to_speed(self):
        # reaching speed v takes proper time x0/c artanh(v/c)
        x0, v = 2.0, 0.5
        tau = x0 * math.atanh(v)
        ct, x = boost_killing_flow(x0, tau)
        lam, tau_back, x0_back = rindler_from_event(ct, x)
        assert ct / x == pytest.approx(v)  # coordinate velocity = tanh(lam)
        assert tau_back == pytest.approx(tau, rel=1e-12)

    def test_chart_metric_components(self, rng):
        for _ in range(20):
            x0 = float(rng.uniform(0.4, 3.0))
            lam = float(rng.uniform(-1.5, 1.5))
            g = wedge_chart_metric(x0, lam)
            assert np.abs(g - np.diag([x0 * x0, -1.0])).max() < 1e-8

    def test_wedge_guard(self):
        with pytest.raises(PreconditionError):
            rindler_from_event(2.0, 1.0)

    def test_acceleration_matches_orbit_label(self):
        f = boost_killing_field()
        for x0 in (0.5, 1.0, 2.0):
            d = kinematic_decomposition(f, np.array([0.0, x0, 0.0, 0.0]), 2e-4)
            assert d.accel_norm_g == pytest.approx(1.0 / x0, abs=1e-6)


class TestRotationChecks:
    def test_split_and_transport(self):
        probes = [np.array([0.0, 0.3, 0.0, 0.0]),
                  np.array([0.2, 0.2, 0.4, -0.1]),
                  np.array([-0.1, 0.0, 0.55, 0.3])]
        got = rotation_killing_checks(1.0, 1.0, probes, STEP)
        assert got["max_theta"] < 1e-5
        assert got["min_omega"] > 1e-3
        assert got["max_lie_omega"] < 1e-5
        assert got["max_h_split_residual"] < 1e-10

    def test_h_psi_psi_factor(self):
        rho = 0.5
        got = rotation_killing_checks(1.0, 1.0, [np.array([0.0, rho, 0.0, 0.0])])
        assert got["rows"][0]["h_psi_psi"] == pytest.approx(rho * rho / 0.75,
                                                            abs=1e-12)

    def test_small_radius_is_flat_cylindrical(self):
        rho = 1e-3
        got = rotation_killing_checks(1.0, 1.0, [np.array([0.0, rho, 0.0, 0.0])])
        assert got["rows"][0]["h_psi_psi"] == pytest.approx(rho * rho, rel=1e-5)

    def test_probe_outside_region_rejected(self):
        with pytest.raises(PreconditionError):
            rotation_killing_checks(1.0, 1.0, [np.array([0.0, 2.0, 0.0, 0.0])])


class TestProjectedCurvature:
    def test_identity_across_radii(self):
        probes = [np.array([0.0, rho * math.cos(s), rho * math.sin(s), 0.1 * s])
                  for rho, s in [(0.1, 0.0), (0.25, 0.7), (0.4, 1.9),
                                 (0.55, 3.0), (0.7, 4.2)]]
        got = projected_curvature_check(1.0, 1.0, probes, STEP)
        assert got["passes"]
        assert got["max_residual"] < 1e-4

    def test_total_antisymmetrisation_drops(self):
        probes = [np.array([0.0, 0.4, 0.0, 0.0])]
        got = projected_curvature_check(1.0, 1.0, probes, STEP)
        assert got["rows"][0]["alt_norm"] < 1e-20

    def test_irrotational_flat(self):
        # the boost flow has zero vorticity and a flat comoving geometry
        g = wedge_chart_metric(1.3, 0.4)
        from minklab.rigid import riemann_lowered_fd

        def chart_metric(q):
            lam, x0 = q
            return np.diag([x0 * x0, 1.0])  # spatial part only, 2-d chart

        R = riemann_lowered_fd(chart_metric, np.array([0.2, 1.3]))
        assert np.abs(R).max() < 1e-6


class TestWorldlineInduced:
    def test_straight_gives_rest_field(self):
        f = herglotz_field(straight_worldline())
        x = np.array([0.7, 0.3, -0.2, 0.5])
        assert np.allclose(f(x), [1.0, 0.0, 0.0, 0.0], atol=1e-12)
        assert foliation_time(straight_worldline(), x, (-1, 1)) == pytest.approx(0.7)

    def test_hyperbolic_matches_boost_field(self, rng):
        f = herglotz_field(hyperbolic_worldline(1.0), (-1.5, 1.5))
        bf = boost_killing_field()
        for _ in range(20):
            x = np.array([rng.uniform(-0.5, 0.5), rng.uniform(0.7, 2.0),
                          rng.uniform(-1, 1), rng.uniform(-1, 1)])
            assert np.abs(f(x) - bf(x)).max() < 1e-12

    def test_hyperbolic_is_killing(self):
        f = herglotz_field(hyperbolic_worldline(1.0), (-1.5, 1.5))
        got = killing_test(f, [np.array([0.1, 1.2, 0.3, -0.2])], STEP)
        assert got["is_killing"]
        assert got["closedness_residual"] < 1e-5

    def test_wiggly_rigid_but_not_killing(self):
        wl = wiggly_worldline(0.5)
        f = herglotz_field(wl, (-0.5, 1.5))
        p = wl.z(0.8) + np.array([0.0, 0.02, 0.1, -0.05])
        rigid = is_rigid(f, [p], STEP)
        assert rigid["rigid"]
        got = killing_test(f, [p], STEP)
        assert not got["is_killing"]
        assert got["closedness_residual"] > 1e-2

    def test_wiggly_curl_matches_closed_form(self):
        wl = wiggly_worldline(0.5)
        f = herglotz_field(wl, (-0.5, 1.5))
        p = wl.z(0.8) + np.array([0.0, 0.05, 0.1, -0.08])
        fd = accel_curl(f, p, STEP)
        assert np.abs(fd - expected_accel_curl(wl, p, (-0.5, 1.5))).max() < 1e-4

    def test_wiggly_lie_accel_on_and_off_worldline(self):
        wl = wiggly_worldline(0.5)
        f = herglotz_field(wl, (-0.5, 1.5))
        for offset in (np.zeros(4), np.array([0.0, 0.05, 0.1, -0.08])):
            p = wl.z(0.8) + offset
            fd = lie_derivative_oneform(
                f, lambda y: accel_oneform(f, y, STEP), p, STEP)
            assert np.abs(fd - expected_lie_accel(wl, p, (-0.5, 1.5))).max() < 1e-4

    def test_on_worldline_jerk_term_only(self):
        # at the curve itself the transported acceleration is the projected
        # jerk: the caustic factor is one and the relative-position term drops
        wl = wiggly_worldline(0.5)
        tau = 0.8
        p = wl.z(tau)
        assert foliation_gap(wl, tau, p) == pytest.approx(1.0, abs=1e-12)
        G = np.diag([1.0, -1.0, -1.0, -1.0])
        zd, zddd = wl.zdot(tau), wl.zdddot(tau)
        proj_jerk = zddd - zd * ((zd[0] * zddd[0] - zd[1:] @ zddd[1:]))
        expect = expected_lie_accel(wl, p, (-0.5, 1.5))
        assert np.allclose(expect, G @ proj_jerk, atol=1e-10)

    def test_foliation_planes_are_flat(self, rng):
        # straight segments orthogonal to the curve stay on one leaf
        wl = wiggly_worldline(0.5)
        tau = 0.6
        zd = wl.zdot(tau)
        for _ in range(10):
            w = rng.standard_normal(4)
            w = w - zd * ((zd[0] * w[0] - zd[1:] @ w[1:]))  # g-orthogonal part
            w = 0.2 * w / np.linalg.norm(w)
            for s in np.linspace(-1.0, 1.0, 7):
                x = wl.z(tau) + s * w
                assert foliation_time(wl, x, (-0.5, 1.5)) == pytest.approx(
                    tau, abs=1e-9)

    def test_caustic_guard(self):
        wl = hyperbolic_worldline(1.0)
        # the wedge vertex is the caustic of the orbit hyperplanes
        with pytest.raises(PreconditionError):
            foliation_time(wl, np.array([0.0, 1e-4, 0.0, 0.0]), (-1, 1))

    def test_validate(self):
        wiggly_worldline(0.3).validate(np.linspace(-1, 1, 9))
        hyperbolic_worldline(2.0).validate(np.linspace(-1, 1, 9))


class TestExport:
    def test_trajectory_header_and_rows(self):
        text = trajectory_csv([(0.0, np.array([0.0, 1.0])),
                               (0.5, np.array([0.2, 1.1]))])
        lines = text.splitlines()
        assert lines[0] == "tau,ct,x,y,z"
        assert len(lines) == 3
        assert lines[1].split(",")[1] == "0.0"

    def test_field_header(self):
        text = field_csv([(0.0, np.array([0.0, 1.0, 0.0, 0.0]), 1e-8, 0.5, 1.0)])
        assert text.splitlines()[0] == "tau,ct,x,y,z,theta_norm,omega_norm,accel_norm"


class TestRindlerChartType:
    def test_round_trip(self):
        from minklab.rigid import RindlerChart
        chart = RindlerChart.from_event(0.5, 2.0)
        assert np.abs(chart.event() - [0.5, 2.0]).max() < 1e-10
        assert chart.x0 ** 2 == pytest.approx(2.0 ** 2 - 0.5 ** 2)

    def test_inconsistent_pair_rejected(self):
        from minklab.rigid import RindlerChart
        with pytest.raises(PreconditionError):
            RindlerChart(x0=1.0, lam=0.5, tau=0.9)
