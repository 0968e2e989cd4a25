"""corepaths: exact enumeration of self-conjugate (s, t)-core partitions
through lattice paths in the floor(s/2) x floor(t/2) signed hook array,
with independent brute-force oracles and identity verification."""

from ._kernels import USING_NUMBA, backend
from .bijection import (
    CoreArray,
    CoreParams,
    LatticePath,
    build_array,
    core_from_path,
    core_size_from_path,
    largest_core,
    path_from_core,
    path_hook_set,
)
from .enumeration import (
    CoreStats,
    DEFAULT_PATH_BUDGET,
    PathBudgetError,
    average_size_formula,
    coprime_pairs,
    enumerated_stats,
    fold_path_sizes,
    iter_box_partitions,
    iter_paths,
    report_all_pass,
    report_csv_row,
    total_size_from_path_counts,
    verify_pair,
)
from .identities import (
    below_count_table,
    below_count_table_by_enumeration,
    column_pair_total,
    identity_report,
    row_weighted_recurrence_holds,
    sum_below,
    sum_below_closed,
    sum_below_times_col,
    sum_below_times_col_closed,
    sum_below_times_row,
    sum_below_times_row_closed,
    symmetry_holds,
)
from .oracles import (
    OracleBudgetError,
    PartitionSurvey,
    all_cores_size_stats,
    brute_force_all_cores_count,
    brute_force_sc_cores,
    cores_within,
    iter_partitions,
    iter_partitions_up_to,
    iter_subpartitions,
    survey_partitions,
)
from .partitions import (
    Partition,
    hook_set_is_t_core,
    is_t_core,
    is_t_core_scan,
    partition_from_diagonal_hooks,
    validate_hook_set,
)

__version__ = "0.1.0"

__all__ = [
    "USING_NUMBA",
    "backend",
    "CoreArray",
    "CoreParams",
    "LatticePath",
    "build_array",
    "core_from_path",
    "core_size_from_path",
    "largest_core",
    "path_from_core",
    "path_hook_set",
    "CoreStats",
    "DEFAULT_PATH_BUDGET",
    "PathBudgetError",
    "average_size_formula",
    "coprime_pairs",
    "enumerated_stats",
    "fold_path_sizes",
    "iter_box_partitions",
    "iter_paths",
    "report_all_pass",
    "report_csv_row",
    "total_size_from_path_counts",
    "verify_pair",
    "below_count_table",
    "below_count_table_by_enumeration",
    "column_pair_total",
    "identity_report",
    "row_weighted_recurrence_holds",
    "sum_below",
    "sum_below_closed",
    "sum_below_times_col",
    "sum_below_times_col_closed",
    "sum_below_times_row",
    "sum_below_times_row_closed",
    "symmetry_holds",
    "OracleBudgetError",
    "PartitionSurvey",
    "all_cores_size_stats",
    "brute_force_all_cores_count",
    "brute_force_sc_cores",
    "cores_within",
    "iter_partitions",
    "iter_partitions_up_to",
    "iter_subpartitions",
    "survey_partitions",
    "Partition",
    "hook_set_is_t_core",
    "is_t_core",
    "is_t_core_scan",
    "partition_from_diagonal_hooks",
    "validate_hook_set",
]
