"""Entanglement and geometry of stationary two-qubit quantum evolutions."""
from .entanglement import analyze_state, concurrence, geometric_measure, schmidt_decomposition
from .errors import (
    DimensionMismatch,
    Infeasible,
    NotHermitian,
    NotUnitary,
    OrthogonalEndpoints,
    QevoError,
    SameRay,
    StationaryState,
    TracelessPropagator,
    UnknownScenario,
    WrongDimension,
    ZeroOperator,
)
from .gates import (
    CVector,
    analyze_propagator,
    entangling_power_mc,
    operator_schmidt_number,
    weyl_cvector,
    yukalov_production,
    zanardi_power_canonical,
)
from .geometry import geometry_report
from .hamiltonians import (
    EvolutionSetup,
    build_four_level,
    build_four_level_orthogonal,
    build_optimal,
    build_suboptimal,
    optimal_time,
    solve_suboptimal_phase,
)
from .linalg import propagator
from .scenarios import SCENARIOS, average_concurrence, run_scenario, summary_table

__version__ = "0.1.0"
