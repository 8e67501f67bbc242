from .constraints import (AlphaMetric, CheckReport, ConstraintSet, Preset,
                          PresetError, check, get_preset, metric_B,
                          metric_constant, ordered_bipartition, preset_names,
                          properness_violations)
from .duals import dual
from .extras import (TWIN_SHIFT_NOTE, check_4ice, covers_edges, grace_number,
                     is_critical, multiple_inner, search_flawed,
                     twin_odd_graceful)
from .search import (INCONCLUSIVE, SEARCH_CAP, chi_min, chi_min_witness,
                     default_max_m, search)
from .transforms import (TARGETS, inverse_transform, target_preset,
                         transform_equivalent)

__all__ = [
    "AlphaMetric", "CheckReport", "ConstraintSet", "Preset", "PresetError",
    "check", "get_preset", "metric_B", "metric_constant",
    "ordered_bipartition", "preset_names", "properness_violations",
    "dual", "TWIN_SHIFT_NOTE", "check_4ice", "covers_edges", "grace_number",
    "is_critical", "multiple_inner", "search_flawed", "twin_odd_graceful",
    "INCONCLUSIVE", "SEARCH_CAP", "chi_min", "chi_min_witness",
    "default_max_m", "search", "TARGETS", "inverse_transform",
    "target_preset", "transform_equivalent",
]
