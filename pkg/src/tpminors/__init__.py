"""Exact-arithmetic toolkit for repeated minors of totally positive matrices,
point-line/hyperplane incidences, and unit-area rectangle counts."""

from .exact import (
    RatMatrix,
    Rational,
    TpVerdict,
    det,
    matrix_from_text,
    matrix_to_text,
    minor,
    rat,
    scale_to_unit,
    verify_tp,
    verify_tp_contiguous,
)
from .constructions import (
    CanonicalizationError,
    ConstraintReport,
    Hyperplane,
    IncidenceConfig,
    Line2,
    Point2,
    assemble_tp_2xn,
    canonicalize_config,
    check_constraints,
    config_from_json,
    config_to_json,
    dual_line,
    elekes_config,
    grid_matrix,
    hyperplane_family,
    mate_point,
    points_from_json,
    points_to_json,
    power_sum_det_closed_form,
    power_sum_matrix,
)
from .counting import (
    best_k,
    count_minors_equal,
    distinct_minor_count,
    divisor_count,
    grid_area_k_count,
    max_repeated_minor,
    merge_censuses,
    minor_census,
    mu,
    mu_nonzero,
    multiset_diff,
    multiset_mass,
    multiset_prod,
    point_hyperplane_incidences,
    point_line_incidences,
    unit_rectangles,
    verify_no_Kd2,
)
from .analysis import (
    RunConfig,
    ScanReport,
    ScanRow,
    fit_power_law,
    scan_exponent,
    st_bound_check,
)

__all__ = [n for n in dir() if not n.startswith("_")]
__version__ = "0.1.0"
