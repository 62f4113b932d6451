"""Exact area of words in <a, b | a, b> and <a, b | a^k, b^k ; k in N>."""

from .oracle import oracle_area_powers, oracle_area_trivial, oracle_partition_min
from .power_area import (
    AreaTables, area_power_relators, area_tables, pow_area, solve_powers, theorem2_check,
)
from .spelling import IntervalTable, area_free_trivial, interval_table
from .subset_sum import validate_subset, zero_subset
from .witness import (
    Block, Matching, Move, NonCrossingPartition, NullSequence, execute_null_sequence,
    matching_to_null_sequence, partition_to_null_sequence, validate_matching,
    validate_partition,
)
from .word import (
    CanonicalForm, Letter, Syllable, SyllableWord, Word, WordSyntaxError,
    cyclic_canonicalize, format_word, free_reduce, invert, parse_word, syllables,
)

__all__ = [
    "AreaTables", "Block", "CanonicalForm", "IntervalTable", "Letter", "Matching", "Move",
    "NonCrossingPartition", "NullSequence", "Syllable", "SyllableWord", "Word",
    "WordSyntaxError", "area_free_trivial", "area_power_relators", "area_tables",
    "cyclic_canonicalize", "execute_null_sequence", "format_word", "free_reduce",
    "interval_table", "invert", "matching_to_null_sequence", "oracle_area_powers",
    "oracle_area_trivial", "oracle_partition_min", "parse_word", "partition_to_null_sequence",
    "pow_area", "solve_powers", "syllables", "theorem2_check", "validate_matching",
    "validate_partition", "validate_subset", "zero_subset",
]
