"""Heat currents, efficiencies and thermodynamic audits."""

__all__ = [
    'heat_current',
    'population_heat_current',
    'energy_af',
    'entropy_and_rate',
    'EfficiencyReport',
    'Window',
    'resolve_window',
    'check_steady_state',
    'efficiency_report',
    'rolling_efficiencies',
    'instantaneous_ratios',
    'carnot_af_check',
    'entropy_production_rate',
    'SecondLawAudit',
    'second_law_audit',
    'SubadditivityAudit',
    'subadditivity_audit',
    'first_law_residuals',
    'RefrigerationDiagnostic',
    'refrigeration_diagnostic',
]

from .currents import energy_af, entropy_and_rate, heat_current, population_heat_current
from .efficiency import (
    EfficiencyReport,
    Window,
    carnot_af_check,
    check_steady_state,
    efficiency_report,
    instantaneous_ratios,
    resolve_window,
    rolling_efficiencies,
)
from .audits import (
    RefrigerationDiagnostic,
    SecondLawAudit,
    SubadditivityAudit,
    entropy_production_rate,
    first_law_residuals,
    refrigeration_diagnostic,
    second_law_audit,
    subadditivity_audit,
)
