"""Embedded-sum models: local quadric geometry, smoothing families,
interpolation maps, torus curve resolution, and intersection bounds."""

from .bounds import (
    ArcGraph,
    ClassRep,
    arc_graph,
    component_gap_bound,
    divisibility,
    min_components,
    resolved_components,
    resolved_edges,
    weighted_crossing_bound,
)
from .config import RunConfig
from .constants import (
    JAC_FAMILY_MIN_SV,
    JAC_MODEL_MIN_SV,
    REAL_GRAD_MIN_NORM,
    TAPERED_REM_MIN,
)
from .curvefile import (
    curves_to_dict,
    dumps_report,
    load_curvefile,
    resolution_to_dict,
    save_curvefile,
)
from .family import (
    Ramp,
    family_jac,
    family_map,
    in_family_slice,
    in_interpolation_model,
    level_of,
    norm_sq_rescale,
    radial_rescale,
    real_family_grad,
    real_family_map,
    sample_real_zero_set,
    sample_zero_set,
    slice_points,
)
from .gluemap import (
    filled_taper,
    filled_taper_jac,
    filled_taper_profile,
    filled_taper_sym_min_eig,
    invert_taper_profile,
    pair_separation_integral,
    profile_cubic_coeffs,
    smooth_taper,
    taper_profile,
    to_model,
    to_model_filled,
    to_model_smooth,
)
from .localmodel import (
    B_FIRST,
    B_NONE,
    B_SECOND,
    boundary_part,
    coorientation_frame,
    cpair,
    filled_model_homeo,
    filled_model_homeo_inv,
    in_filled_model,
    model_jac,
    model_map,
    model_param,
    on_model,
    real_model_map,
    resolution_choice,
    rpair,
    u1_act,
)
from .oracle import (
    VerificationReport,
    class_via_crossings,
    collision_search,
    covering_report,
    disk_points,
    max_nn_gap,
    random_transversal_pair,
    sign_change_count,
    sphere4_points,
    trace_components,
    unit_sample,
)
from .svg import render_resolution_svg, render_svg
from .torus import (
    Crossing,
    GeometryError,
    NonTransversalError,
    Resolution,
    TorusCurve,
    count_components,
    find_crossings,
    geodesic_curve,
    orientation_consistent,
    parallel_copies,
    resolve_crossings,
    torus_dist,
    wavy_curve,
)
from .verify import (
    SUITES,
    all_pass,
    run_all,
    suite_fiber_family,
    suite_homeo,
    suite_local_model,
)

__version__ = "0.1.0"
