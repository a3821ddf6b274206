"""Exact computations on negative and positive circles of small signed graphs."""
__version__ = "0.1.0"

from .balance import BalanceReport, BlockDecomposition, balancing_edges, balancing_vertices, blocks, is_balanced
from .census import circle_count_spectrum, enumerate_signatures, vector_set_and_dimension
from .circles import (
    Circle,
    circle_sign,
    enumerate_circles,
    negative_circle_vector,
    realize_circle_set,
    verify_theta_criterion,
)
from .errors import BudgetExceeded
from .graph import (
    MINUS,
    PLUS,
    GraphError,
    ParseError,
    SignedGraph,
    apply_switching,
    generate_graph,
    negate_all,
    parse_signed_graph,
    render_sgt,
)
from .incidence import conjecture_report, edge_profile, pair_common_circle, vertex_profile
from .kernels import BACKEND
from .optimization import bounds_report, cover_circles, decompose_into_circles, frustration, pack_circles
from .structure import circle_bridges, hamiltonian_sign_survey, removal_connectivity
