"""decindex: an exact bijection between finite-decimal numbers and naturals.

Decimal text is parsed into a canonical tuple (sign, n1, n2, n3), the
tuple is ranked to a 1-based index with closed-form formulas, and any
index unranks back to its tuple and text. "paper" mode is a bijection
onto composition tuples; "strict" mode is a bijection onto decimal
values. See the README for the difference.
"""

from .bijection import (
    MODES,
    EnumerationRecord,
    decode,
    decode_text,
    encode,
    encode_text,
    enumerate_range,
    strict_decode,
    strict_encode,
)
from .counting import (
    cumulative_before,
    cumulative_upto,
    level_count,
    level_of_index,
    strict_cumulative_before,
    strict_cumulative_upto,
    strict_level_count,
    strict_level_of_index,
)
from .decimal_core import (
    DEFAULT_MAX_RENDER_DIGITS,
    ZERO_TUPLE,
    CanonicalTuple,
    ExactDecimal,
    canonicalize,
    complexity,
    parse_decimal,
    reconstruct,
)
from .errors import (
    CanonicalityError,
    DecindexError,
    IndexRangeError,
    ParseError,
    RenderBudgetError,
)
from .oracle import OracleConfig
from .positioning import (
    position_within,
    strict_position_within,
    strict_tuple_at,
    tuple_at,
)

__version__ = "0.1.0"

__all__ = [
    "MODES",
    "EnumerationRecord",
    "decode",
    "decode_text",
    "encode",
    "encode_text",
    "enumerate_range",
    "strict_decode",
    "strict_encode",
    "cumulative_before",
    "cumulative_upto",
    "level_count",
    "level_of_index",
    "strict_cumulative_before",
    "strict_cumulative_upto",
    "strict_level_count",
    "strict_level_of_index",
    "DEFAULT_MAX_RENDER_DIGITS",
    "ZERO_TUPLE",
    "CanonicalTuple",
    "ExactDecimal",
    "canonicalize",
    "complexity",
    "parse_decimal",
    "reconstruct",
    "CanonicalityError",
    "DecindexError",
    "IndexRangeError",
    "ParseError",
    "RenderBudgetError",
    "OracleConfig",
    "position_within",
    "strict_position_within",
    "strict_tuple_at",
    "tuple_at",
    "__version__",
]
