"""Generalized Eulerian numbers A_{a,b,r}(p, i) and colored multipermutations.

``A_{a,b,r}(p, i)`` counts colored multipermutations of {1^r, ..., p^r} with
``a`` colors and ``i`` weak descents at terminal threshold ``b``.  The package
computes it by closed form, recounts it by exhaustive enumeration, builds the
segmented-word bijections behind the closed form, and checks the identities
it satisfies exactly.
"""

from .errors import (
    BinAssignmentError,
    BudgetExceededError,
    CombinatorialRangeError,
    GenEulerianError,
    WordSyntaxError,
    WordValidationError,
)
from .eulerian import (
    EulerianRow,
    GenEulerianRow,
    ascent_row,
    ascent_variant,
    eulerian_explicit,
    eulerian_recurrence,
    gen_eulerian_closed,
    gen_eulerian_row,
    nonterminal_count_closed,
    normalize_b,
)
from .exact_arith import binomial, total_words
from .segmentation import (
    BinAssignment,
    SegmentedWord,
    Variant,
    bins_to_scm,
    count_extraneous_free_scms,
    count_scms,
    is_extraneous,
    scm_to_word,
    wall_position,
    word_to_scm,
)
from .words import (
    ColoredEntry,
    ColoredWord,
    Params,
    augment,
    compare,
    descent_distribution,
    enumerate_words,
    format_word,
    nonterminal_weak_descents,
    parse_word,
    weak_descents,
)

__version__ = "0.1.0"
