"""Unit tests for heat currents, efficiencies and thermodynamic audits."""
import numpy as np
import pytest

from maserengine.config.models import EngineParams
from maserengine.core.dynamics import Trajectory, integrate, scalar_observer
from maserengine.core.errors import NotAnEngineError, SteadyStateError
from maserengine.core.maser import master_rhs
from maserengine.core.operators import kron
from maserengine.core.thermo import (
    carnot_af_check,
    check_steady_state,
    efficiency_report,
    energy_af,
    entropy_and_rate,
    entropy_production_rate,
    first_law_residuals,
    heat_current,
    instantaneous_ratios,
    population_heat_current,
    refrigeration_diagnostic,
    rolling_efficiencies,
    second_law_audit,
    subadditivity_audit,
)
from maserengine.core.work import von_neumann_entropy
from maserengine.shared.types import Bath, RegimeTag

ABOVE = EngineParams(n_field=4)
J_H = 2.0


def engine_trajectory(p: EngineParams = ABOVE, **overrides) -> Trajectory:
    """Stationary engine with constant heat currents and linearly growing field ledger."""
    t = np.linspace(0.0, 10.0, 41)
    J_c = -0.8 * J_H
    columns = {
        "P1": np.full(t.size, 0.5),
        "P2": np.full(t.size, 0.3),
        "P3": np.full(t.size, 0.2),
        "J_h": np.full(t.size, J_H),
        "J_c": np.full(t.size, J_c),
        "E_f": 0.2 * J_H * t,
        "W_f": 0.15 * J_H * t,
        "Wbound_f": 0.02 * J_H * t,
        "F_h_f": 0.18 * J_H * t,
        "F_c_af": 10.0 + 0.5 * J_H * t,
        "E_af": 5.0 + (J_H + J_c) * t,
        "S_af": 1.0 + 0.05 * t,
        "S_f": 0.5 + 0.06 * t,
        "dS_af": np.full(t.size, 0.05),
    }
    columns.update(overrides)
    return Trajectory.from_columns(t, columns, params=p)


def test_heat_current_vanishes_at_detailed_balance():
    """Test no heat flows from the hot bath into its own Gibbs state."""
    p = EngineParams(g=0.0, n_field=3)
    x = np.exp(-p.omega_h / p.T_h)
    rho = kron(np.diag([1.0 / (1.0 + x), 0.0, x / (1.0 + x)]), np.diag([1.0, 0.0, 0.0]))
    assert heat_current(rho, p, Bath.HOT) == pytest.approx(0.0, abs=1e-12)


def test_heat_current_from_populations(rng):
    """Test Tr[H L_h rho] matches the population formula for diagonal states."""
    p = EngineParams(n_field=4)
    atom = rng.dirichlet(np.ones(3))
    field = rng.dirichlet(np.ones(4))
    rho = kron(np.diag(atom), np.diag(field))
    assert heat_current(rho, p, Bath.HOT) == pytest.approx(
        population_heat_current(atom[0], atom[2], p), rel=1e-10
    )


def test_energy_af_of_ground_vacuum():
    """Test the joint energy of |1>|0> is omega1."""
    p = EngineParams(omega1=1.0, omega2=31.0, n_field=4)
    rho = np.zeros((p.dim, p.dim), dtype=complex)
    rho[0, 0] = 1.0
    assert energy_af(rho, p) == pytest.approx(1.0)


def test_entropy_rate_matches_finite_difference(rng, random_density):
    """Test -Tr[rho_dot ln rho] against a symmetric difference of S."""
    p = EngineParams(n_field=4)
    rho = random_density(rng, p.dim)
    S, rate = entropy_and_rate(rho, p)
    h = 1e-6
    drho = master_rhs(rho, p)
    fd = (von_neumann_entropy(rho + h * drho) - von_neumann_entropy(rho - h * drho)) / (2 * h)
    assert S == pytest.approx(von_neumann_entropy(rho))
    assert rate == pytest.approx(fd, rel=1e-5, abs=1e-8)


def test_efficiency_report_of_stationary_engine():
    """Test efficiencies are the ledger rates over the mean hot current."""
    report = efficiency_report(engine_trajectory())
    assert report.window == pytest.approx((7.5, 10.0))
    assert report.J_h == pytest.approx(J_H)
    assert report.eta_E == pytest.approx(0.2)
    assert report.eta_W == pytest.approx(0.15)
    assert report.eta_Wtot == pytest.approx(0.17)
    assert report.eta_F == pytest.approx(0.18)
    assert report.eta_maser == pytest.approx(0.2)
    assert report.eta_carnot == pytest.approx(0.8)
    assert report.regime is RegimeTag.ABOVE
    assert report.fdot_c_passive is None


def test_efficiency_report_rejects_transient():
    """Test drifting populations are not a steady state."""
    t = np.linspace(0.0, 10.0, 41)
    traj = engine_trajectory(P1=0.4 + 0.01 * t, P2=0.4 - 0.01 * t)
    with pytest.raises(SteadyStateError) as exc_info:
        efficiency_report(traj)
    assert exc_info.value.criterion == "populations"


def test_steady_state_needs_records():
    """Test a window with fewer than 3 records is refused."""
    with pytest.raises(SteadyStateError) as exc_info:
        check_steady_state(engine_trajectory(), (9.9, 10.0))
    assert exc_info.value.criterion == "records"


def test_efficiency_report_rejects_refrigerator():
    """Test a negative hot current is not an engine."""
    with pytest.raises(NotAnEngineError):
        efficiency_report(engine_trajectory(J_h=np.full(41, -1.0)))


def test_rolling_efficiencies():
    """Test sub-window reports of a stationary engine agree."""
    reports = rolling_efficiencies(engine_trajectory())
    assert len(reports) == 4
    assert reports[0].window[0] == pytest.approx(7.5)
    assert reports[-1].window[1] == pytest.approx(10.0)
    for report in reports:
        assert report.eta_E == pytest.approx(0.2)
    with pytest.raises(ValueError):
        rolling_efficiencies(engine_trajectory(), segments=0)


def test_instantaneous_ratios():
    """Test pointwise ratios and NaN where the hot current vanishes."""
    J_h = np.full(41, J_H)
    J_h[5] = 0.0
    ratios = instantaneous_ratios(engine_trajectory(J_h=J_h))
    assert np.isnan(ratios["E"][5])
    np.testing.assert_allclose(np.delete(ratios["E"], 5), 0.2)
    np.testing.assert_allclose(np.delete(ratios["F"], 5), 0.18)


def test_carnot_af_margin():
    """Test the joint free-energy rate against Carnot."""
    assert carnot_af_check(engine_trajectory()) == pytest.approx(0.8 - 0.5)
    with pytest.raises(NotAnEngineError):
        carnot_af_check(engine_trajectory(J_h=np.zeros(41)))


def test_entropy_production_rate():
    """Test sigma = dS_af/dt - J_h/T_h - J_c/T_c with both entropy rates."""
    traj = engine_trajectory()
    expected = 0.05 - J_H / 100.0 + 0.8 * J_H / 20.0
    np.testing.assert_allclose(entropy_production_rate(traj), expected)
    np.testing.assert_allclose(entropy_production_rate(traj, finite_difference=True), expected)
    with pytest.raises(ValueError):
        entropy_production_rate(Trajectory.from_columns([0.0, 1.0], {}, params=ABOVE))


def test_second_law_audit():
    """Test passing and failing entropy production."""
    assert second_law_audit(engine_trajectory()).passed
    traj = engine_trajectory(dS_af=np.full(41, -1.0))
    audit = second_law_audit(traj)
    assert not audit.passed
    assert audit.sigma_min < 0


def test_subadditivity_audit():
    """Test the joint entropy may not grow faster than the field entropy."""
    audit = subadditivity_audit(engine_trajectory())
    assert audit.passed
    assert audit.margin == pytest.approx(0.01)
    t = np.linspace(0.0, 10.0, 41)
    assert not subadditivity_audit(engine_trajectory(S_af=0.1 * t)).passed


def test_subadditivity_requires_steady_state():
    """Test a transient window is skipped."""
    t = np.linspace(0.0, 10.0, 41)
    with pytest.raises(SteadyStateError):
        subadditivity_audit(engine_trajectory(P3=0.2 + 0.01 * t, P1=0.5 - 0.01 * t))


def test_first_law_residuals():
    """Test dE_af/dt = J_h + J_c."""
    np.testing.assert_allclose(first_law_residuals(engine_trajectory()), 0.0, atol=1e-10)


def test_first_law_residuals_in_window():
    """Test an early energy kink is excluded by a late window."""
    t = np.linspace(0.0, 10.0, 41)
    E_af = 5.0 + (J_H - 0.8 * J_H) * t
    E_af[1] += 1.0
    traj = engine_trajectory(E_af=E_af)
    assert np.max(first_law_residuals(traj)) > 1.0
    late = first_law_residuals(traj, (7.5, 10.0))
    assert late.size == 10
    np.testing.assert_allclose(late, 0.0, atol=1e-10)


def test_refrigeration_diagnostic():
    """Test growing hot free energy with heat inflow is reported."""
    diagnostic = refrigeration_diagnostic(engine_trajectory())
    assert diagnostic.refrigerating
    assert diagnostic.max_rate == pytest.approx(0.18 * J_H)
    t = np.linspace(0.0, 10.0, 41)
    assert not refrigeration_diagnostic(engine_trajectory(F_h_f=-t)).refrigerating


def test_entropy_production_positive_during_relaxation():
    """Test an inverted atom relaxing without coupling produces entropy."""
    p = EngineParams(g=0.0, n_field=2)
    rho0 = np.zeros((p.dim, p.dim), dtype=complex)
    rho0[2 * p.n_field, 2 * p.n_field] = 1.0
    observers = [
        lambda rho: dict(zip(("S_af", "dS_af"), entropy_and_rate(rho, p))),
        scalar_observer("J_h", lambda rho: heat_current(rho, p, Bath.HOT)),
        scalar_observer("J_c", lambda rho: heat_current(rho, p, Bath.COLD)),
    ]
    traj = integrate(rho0, p, 1.0, 1e-3, 0.1, observers, tail_tolerance=None)
    sigma = entropy_production_rate(traj, p)
    assert np.all(sigma > 0.0)
