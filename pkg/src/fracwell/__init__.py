"""Ground and first excited states of the fractional Schrödinger equation in an infinite well."""

__version__ = "0.1.0"

from .grid_config import (  # noqa: E402
    Discretization,
    Grid,
    State,
    WellConfig,
    c1_alpha,
    make_discretization,
    make_grid,
)
from .operator import FractionalOperator, apply_to_samples, assemble, matvec_dense, matvec_fast  # noqa: E402
from .gradient_flow import (  # noqa: E402
    FlowCollapse,
    FlowReport,
    NonConvergence,
    SolverBreakdown,
    SolverPlan,
    StateVector,
    initial_state,
    make_plan,
    project,
    solve_flow,
    step,
)
from .observables import Observables, compute_observables  # noqa: E402
