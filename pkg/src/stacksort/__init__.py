"""Fertilities of permutations under the stack-sorting map.

The package computes the number of stack-sorting preimages of a word by
enumerating its valid hook configurations, checks that count against a
brute-force oracle, constructs witnesses for prescribed fertilities and
searches symmetric groups for attainable values.
"""
from .cache import CacheRecord, append_records, audit, cache_key, load, read_records
from .errors import (
    CorruptRecordError,
    DuplicateEntryError,
    HypothesisViolatedError,
    LastEntryNotMaxError,
    LengthMismatchError,
    NonPositiveEntryError,
    NotNormalizedError,
    NotStationaryError,
    PreconditionFailedError,
    ReductionNotFoundError,
    SizeLimitExceededError,
    StacksortError,
    SumMismatchError,
    UnsortedPermutationError,
)
from .families import (
    WitnessReport,
    even_witness,
    interleaved_fertility,
    interleaved_witness,
    one_mod4_witness,
    product_witness,
    witness,
)
from .hooks import (
    Composition,
    Hook,
    HookConfig,
    catalan,
    composition_weight,
    enumerate_vhc,
    factor_at_hook,
    fertility,
    induced_composition,
    interval_dominates,
    is_sorted,
    iter_vhc,
    point_colors,
    reduce_stationary,
    stationary_hooks,
    valid_compositions,
)
from .oracle import BRUTE_FORCE_LIMIT, fertility_brute, fertility_histogram, preimages
from .perms import (
    Perm,
    bracket,
    descents,
    direct_sum,
    drop_final_max,
    is_normalized,
    normalize,
    parse_permutation,
    perm_text,
    stack_sort,
    stack_sort_recursive,
)
from .search import (
    VERDICT_FERTILE,
    VERDICT_PROVEN_INFERTILE,
    VERDICT_UNKNOWN,
    ClassifyResult,
    DensityBound,
    SpectrumReport,
    classify,
    density_lower_bound,
    matrix_bound_holds,
    nd_fd,
    small_odd_status,
    spectrum,
)
from .svg import render_svg

__version__ = "0.1.0"
