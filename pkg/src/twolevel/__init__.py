"""Equilibrium thermodynamics, process ledgers and Carnot/Otto cycles of a
two-level system with a variable energy gap."""
from .errors import ConvergenceError, InfeasibleError, RangeError, TwoLevelError
from .equilibrium import (
    SI,
    X_MAX,
    Constants,
    EquilibriumState,
    PropertySet,
    entropy,
    entropy_from_energy,
    excited_population,
    field_from_gap,
    gap_from_entropy,
    gap_from_field,
    hotness,
    is_hotter,
    isoentropic_state,
    massieu,
    mean_energy,
    temperature_from_energy,
    temperature_from_entropy,
)
from .processes import (
    Bath,
    LegResult,
    energy_change,
    general_leg_work,
    heat_only_feasible,
    integrate_isotherm_numerical,
    isoentrope,
    isogap_between,
    isogap_with_bath,
    isotherm_between,
    isotherm_reversible,
    work_only_relaxation,
)
from .cycles import (
    BoundsReport,
    CarnotCycle,
    CarnotSpec,
    CycleReport,
    OttoCycle,
    OttoSpec,
    build_carnot,
    build_otto,
    carnot_bounds,
    evaluate_carnot,
    evaluate_otto,
    inscribe_otto,
    otto_bounds,
    otto_reverse_feasible,
    reverse_cycle,
    special_otto,
    three_gap_carnot,
)
from .diagrams import (
    CurveSeries,
    cycle_path,
    export,
    gap_vs_entropy,
    property_vs_entropy,
    property_vs_hotness,
)

__version__ = "0.1.0"
