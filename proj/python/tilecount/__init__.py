from ._tilecount import (
    WorkCapExceeded,
    brute_force_tilings,
    conjecture_probe,
    count,
    count_box,
    count_ie,
    enumerate_interval,
    family_2k,
    is_valid_tiling,
    max_count,
    subtile_bound_check,
    total_count,
    upper_bound_holds,
    upper_bound_log2,
)

__all__ = [
    "WorkCapExceeded",
    "brute_force_tilings",
    "conjecture_probe",
    "count",
    "count_box",
    "count_ie",
    "enumerate_interval",
    "family_2k",
    "is_valid_tiling",
    "max_count",
    "subtile_bound_check",
    "total_count",
    "upper_bound_holds",
    "upper_bound_log2",
]
