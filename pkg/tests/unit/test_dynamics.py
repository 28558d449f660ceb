"""Unit tests for the integrator, trajectories and Ehrenfest residuals."""
import numpy as np
import pytest

from maserengine.config.models import EngineParams
from maserengine.core.dynamics import (
    Trajectory,
    atom_field_observer,
    ehrenfest_residuals,
    ehrenfest_rhs,
    fock_populations,
    integrate,
    populations,
    scalar_observer,
    sigma_plus_a,
)
from maserengine.core.errors import (
    ConfigError,
    DimensionError,
    IntegrationError,
    TruncationError,
    UnphysicalStateError,
)
from maserengine.core.maser import thermal_occupation
from maserengine.core.operators import DensityAudit, kron
from maserengine.shared.types import Frame


def _ground_vacuum(p: EngineParams) -> np.ndarray:
    rho = np.zeros((p.dim, p.dim), dtype=complex)
    rho[0, 0] = 1.0
    return rho


def test_trajectory_rejects_non_increasing_times():
    """Test record times must increase strictly."""
    traj = Trajectory()
    audit = DensityAudit(0.0, 0.0, 0.0)
    traj.append(0.0, {"x": 1.0}, audit)
    with pytest.raises(ValueError):
        traj.append(0.0, {"x": 2.0}, audit)


def test_trajectory_unknown_column():
    """Test asking for an unrecorded observable raises KeyError."""
    traj = Trajectory.from_columns([0.0, 1.0], {"x": [1.0, 2.0]})
    assert traj.has("x")
    with pytest.raises(KeyError):
        traj.column("y")


def test_trajectory_add_column_length():
    """Test attached columns must match the record count."""
    traj = Trajectory.from_columns([0.0, 1.0, 2.0], {"x": [1.0, 2.0, 3.0]})
    traj.add_column("y", [0.0, 0.0, 0.0])
    np.testing.assert_array_equal(traj.column("y"), 0.0)
    with pytest.raises(ValueError):
        traj.add_column("z", [0.0])


def test_observers_on_product_state():
    """Test populations, Fock distribution and coherence of a product state."""
    p = EngineParams(n_field=4)
    rho = kron(np.diag([0.5, 0.3, 0.2]), np.diag([0.4, 0.3, 0.2, 0.1]))
    np.testing.assert_allclose(populations(rho, p), [0.5, 0.3, 0.2])
    np.testing.assert_allclose(fock_populations(rho, p), [0.4, 0.3, 0.2, 0.1])
    assert sigma_plus_a(rho, p) == 0.0


def test_integrate_record_times(small_params):
    """Test the record grid, observers and final state of a short run."""
    calls = []
    traj = integrate(
        _ground_vacuum(small_params), small_params, 1.0, 5e-3, 0.25,
        [atom_field_observer(small_params)],
        tail_tolerance=None,
        progress=lambda t, t_final: calls.append(t),
    )
    np.testing.assert_allclose(traj.t, [0.0, 0.25, 0.5, 0.75, 1.0])
    assert calls == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])
    P = np.column_stack([traj.column(name) for name in ("P1", "P2", "P3")])
    np.testing.assert_allclose(P.sum(axis=1), 1.0, atol=1e-12)
    assert traj.column("P3")[-1] > 0.0
    assert np.trace(traj.final_state).real == pytest.approx(1.0)
    assert np.nanmax(traj.audit_column("trace_error")) < 1e-8


def test_integrate_closed_system_is_static():
    """Test that without coupling or baths a diagonal state does not move."""
    p = EngineParams.model_construct(
        omega1=0.0, omega2=30.0, omega3=150.0, omega_f=30.0, g=0.0,
        gamma_c=0.0, gamma_h=0.0, T_c=20.0, T_h=100.0, n_field=4,
    )
    rho0 = kron(np.diag([0.2, 0.3, 0.5]), np.diag([0.4, 0.3, 0.2, 0.1]))
    for frame in (Frame.ROTATING, Frame.LAB):
        traj = integrate(
            rho0, p, 1.0, 1e-2, 0.5, [atom_field_observer(p)], frame=frame, tail_tolerance=None
        )
        np.testing.assert_allclose(traj.final_state, rho0, atol=1e-14)
        np.testing.assert_allclose(traj.column("n_mean"), 1.0, atol=1e-14)


def test_rotating_and_lab_frames_agree():
    """Test populations and photon number agree between frames."""
    p = EngineParams(n_field=5)
    rho0 = _ground_vacuum(p)
    runs = [
        integrate(rho0, p, 1.0, 1e-3, 0.1, [atom_field_observer(p)], frame=frame, tail_tolerance=None)
        for frame in (Frame.ROTATING, Frame.LAB)
    ]
    for name in ("P1", "P2", "P3", "n_mean"):
        np.testing.assert_allclose(runs[0].column(name), runs[1].column(name), atol=1e-6)


def test_step_halving_converges(small_params):
    """Test halving dt changes the observables by less than 1e-6 relative."""
    rho0 = _ground_vacuum(small_params)
    coarse, fine = (
        integrate(rho0, small_params, 1.0, dt, 0.1, [atom_field_observer(small_params)], tail_tolerance=None)
        for dt in (5e-3, 2.5e-3)
    )
    for name in ("P1", "P2", "P3", "n_mean"):
        np.testing.assert_allclose(coarse.column(name), fine.column(name), rtol=1e-6, atol=1e-10)


def test_integrate_rejects_bad_timing(small_params):
    """Test record_every must be a multiple of dt."""
    with pytest.raises(ConfigError) as exc_info:
        integrate(_ground_vacuum(small_params), small_params, 1.0, 0.3, 0.5)
    assert exc_info.value.criterion == "timing"


def test_integrate_rejects_wrong_dimension(small_params):
    """Test the initial state must match 3 x n_field."""
    rho = np.zeros((6, 6), dtype=complex)
    rho[0, 0] = 1.0
    with pytest.raises(DimensionError):
        integrate(rho, small_params, 1.0, 0.1, 0.5)


def test_integrate_rejects_unphysical_state(small_params):
    """Test an unnormalised initial state is refused."""
    with pytest.raises(UnphysicalStateError):
        integrate(2.0 * _ground_vacuum(small_params), small_params, 1.0, 0.1, 0.5)


def test_snapshots_are_stored(small_params):
    """Test full states are kept at the requested record times."""
    traj = integrate(
        _ground_vacuum(small_params), small_params, 1.0, 5e-3, 0.25,
        tail_tolerance=None, snapshot_times=[0.5],
    )
    assert list(traj.snapshots) == [0.5]
    assert traj.snapshots[0.5].shape == (small_params.dim, small_params.dim)


def test_snapshot_time_must_be_a_record_time(small_params):
    """Test a snapshot between records raises."""
    with pytest.raises(ValueError):
        integrate(
            _ground_vacuum(small_params), small_params, 1.0, 5e-3, 0.25,
            tail_tolerance=None, snapshot_times=[0.3],
        )


def test_truncation_monitor_stops_run(params):
    """Test photons reaching the top Fock levels abort with a partial trajectory."""
    n_mean = scalar_observer("n_mean", lambda rho: fock_populations(rho, params) @ np.arange(params.n_field))
    with pytest.raises(TruncationError) as exc_info:
        integrate(_ground_vacuum(params), params, 5.0, 5e-3, 0.25, [n_mean])
    exc = exc_info.value
    assert exc.criterion == "truncation"
    assert exc.trajectory is not None
    assert 1 <= len(exc.trajectory) < 21
    assert exc.trajectory.final_state is not None


def test_unstable_step_is_a_hard_failure(params):
    """Test a step far beyond RK4 stability aborts on positivity."""
    with pytest.raises(IntegrationError) as exc_info:
        integrate(_ground_vacuum(params), params, 5.0, 0.5, 0.5, tail_tolerance=None)
    assert exc_info.value.criterion in ("positivity", "trace")
    assert len(exc_info.value.trajectory) >= 1


def test_ehrenfest_rhs_values(small_params):
    """Test the photon gain equals the coherent loss of P2."""
    p = small_params
    n_c = thermal_occupation(p.omega_c, p.T_c)
    n_h = thermal_occupation(p.omega_h, p.T_h)
    dn, dP2, dP3 = ehrenfest_rhs(np.array([0.2]), np.array([0.0]), np.array([-0.1]), p)
    assert dn[0] == pytest.approx(2.0 * p.g * 0.1)
    assert dP2[0] == pytest.approx(-dn[0] - 2.0 * p.gamma_c * n_c * 0.2)
    assert dP3[0] == pytest.approx(-2.0 * (p.gamma_h * n_h - p.gamma_c * n_c) * 0.2 + 2.0 * p.gamma_h * n_h)


def test_ehrenfest_residuals_small(small_params):
    """Test recorded observables satisfy the Ehrenfest equations."""
    traj = integrate(
        _ground_vacuum(small_params), small_params, 1.0, 1e-3, 0.01,
        [atom_field_observer(small_params)], tail_tolerance=None,
    )
    worst = ehrenfest_residuals(traj).max()
    assert set(worst) == {"photon", "P2", "P3"}
    assert max(worst.values()) < 1e-3


def test_ehrenfest_residuals_within_window(small_params):
    """Test restricting the residuals keeps only the interior records of the interval."""
    traj = integrate(
        _ground_vacuum(small_params), small_params, 1.0, 1e-3, 0.01,
        [atom_field_observer(small_params)], tail_tolerance=None,
    )
    residuals = ehrenfest_residuals(traj)
    late = residuals.within(0.5, 1.0)
    assert late.times[0] == pytest.approx(0.5)
    assert late.times[-1] == pytest.approx(0.99)
    assert late.max()["P2"] <= residuals.max()["P2"]
    assert late.max()["photon"] < late.photon_tolerance(small_params.gamma_h)
    with pytest.raises(ValueError):
        residuals.within(2.0, 3.0)


def test_ehrenfest_residuals_need_observables(small_params):
    """Test missing observables raise KeyError."""
    traj = Trajectory.from_columns([0.0, 1.0, 2.0], {"n_mean": [0.0, 0.0, 0.0]}, params=small_params)
    with pytest.raises(KeyError):
        ehrenfest_residuals(traj)
