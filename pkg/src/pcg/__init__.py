"""Exact-arithmetic engine for penalized network creation games.

Players buy links at price alpha and pay a per-player penalty beta for every
player they cannot reach (beta = inf recovers the classic connection game).
Everything downstream of the cost function is exact: equilibrium checks,
exhaustive enumeration, social optima, anarchy ratios, analytic region
classification and response dynamics all run on rationals.
"""

from .constructions import CanonicalKind, StructureLabel, canonical_state, structure_classify
from .dynamics import (
    BudgetExhausted,
    Converged,
    CycleDetected,
    DynamicsPolicy,
    MoveRule,
    PlayerOrder,
    TieRule,
    cycle_search,
    replay_cycle,
    run,
    step,
)
from .equilibria import (
    BestResponse,
    CoalitionDeviation,
    Deviation,
    EnumerationResult,
    EquilibriumReport,
    GuardExceeded,
    OptimumResult,
    PriceMetrics,
    best_response,
    enumerate_equilibria,
    is_nash,
    is_strong,
    price_metrics,
    social_optimum_bruteforce,
)
from .game import (
    INFINITE,
    CostBreakdown,
    GameParams,
    StrategyVector,
    components,
    cost_delta,
    individual_cost,
    induce_graph,
    is_infinite,
    social_cost,
)
from .stateio import StateParseError, format_value, parse_state, serialize_state
from .sweep import CSV_COLUMNS, SweepSpec, run_sweep, sweep_records
from .theory import (
    BoundEvaluation,
    CanonicalGraph,
    PoaBound,
    RegionReport,
    analytic_poa_bound,
    classify_region,
    compo_poa_decomposition,
    component_conditions,
    component_cost_lower_bound,
    disconnected_ne_region,
    nonempty_ne_bounds,
    social_optimum_class,
)

__all__ = [
    "BestResponse",
    "BoundEvaluation",
    "BudgetExhausted",
    "CSV_COLUMNS",
    "CanonicalGraph",
    "CanonicalKind",
    "CoalitionDeviation",
    "Converged",
    "CostBreakdown",
    "CycleDetected",
    "Deviation",
    "DynamicsPolicy",
    "EnumerationResult",
    "EquilibriumReport",
    "GameParams",
    "GuardExceeded",
    "INFINITE",
    "MoveRule",
    "OptimumResult",
    "PlayerOrder",
    "PoaBound",
    "PriceMetrics",
    "RegionReport",
    "StateParseError",
    "StrategyVector",
    "StructureLabel",
    "SweepSpec",
    "TieRule",
    "analytic_poa_bound",
    "best_response",
    "canonical_state",
    "classify_region",
    "compo_poa_decomposition",
    "component_conditions",
    "component_cost_lower_bound",
    "components",
    "cost_delta",
    "cycle_search",
    "disconnected_ne_region",
    "enumerate_equilibria",
    "format_value",
    "individual_cost",
    "induce_graph",
    "is_infinite",
    "is_nash",
    "is_strong",
    "nonempty_ne_bounds",
    "parse_state",
    "price_metrics",
    "replay_cycle",
    "run",
    "run_sweep",
    "serialize_state",
    "social_cost",
    "social_optimum_bruteforce",
    "social_optimum_class",
    "step",
    "structure_classify",
    "sweep_records",
]
