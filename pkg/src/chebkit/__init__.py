"""Chebyshev radii, center sets and restricted centers in sup-norm spaces.

Functions on a finite space of ``n`` points are vectors in ``R^n``; a family
is an array of shape ``(members, n)``.
"""
from .body import Box, ConvexBody, HPolytope, Singleton, ZeroSlice, body_from_json, whole_space
from .center import (
    CenterReport,
    OrderInterval,
    center_full_space,
    center_msummand,
    insertion,
    is_center,
    r_of,
)
from .counterexamples import interval_counterexample, two_point_counterexample
from .envelope import (
    EnvelopeSet,
    check_half_diam,
    diameter,
    envelopes_of_bounds,
    envelopes_of_family,
)
from .estimator import ChebyshevCenter, RestrictedChebyshevCenter
from .exceptions import *  # noqa: F401,F403
from .io import Instance, load_instance, parse_instance, serialize_instance
from .lp import LinearProgram, LPSolution, solve
from .metric import (
    hausdorff_boxes,
    hausdorff_families,
    tightness_pair,
    verify_center_lipschitz,
    verify_radius_lipschitz,
)
from .oracle import OracleConfig, brute_distance_to_box, brute_radius, grid_radius, smallest_ball_l2
from .restricted import (
    RestrictedReport,
    characterization_harness,
    delta_center_distance,
    distance_to_center_set,
    radius_propagation,
    restricted_radius,
    verify_radius_identity,
)
from .space import (
    FiniteSpace,
    boundary_points,
    interval_subset,
    is_clopen,
    make_discrete,
    make_interval_grid,
)

__version__ = "0.1.0"
