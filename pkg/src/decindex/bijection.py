"""End-to-end maps between decimals, canonical tuples, and indices.

Indices are 1-based: index 1 is zero, and tuples are numbered level by
level, each level in positional order. Two modes exist:

* "paper" indexes every composition tuple. It is a bijection between
  indices and tuples, but from level 10 on, distinct tuples such as
  (+1, 0, 0, 10) and (+1, 0, 0, 1) render to equal values ("0.10" vs
  "0.1"), so at value level it double-counts.
* "strict" indexes only strict-canonical tuples and is a bijection
  between indices and decimal values.

The modes agree on every index up to the end of level 9.
"""

from dataclasses import dataclass
from typing import Iterator

from .counting import (
    cumulative_before,
    level_of_index,
    strict_cumulative_before,
    strict_level_of_index,
)
from .decimal_core import (
    DEFAULT_MAX_RENDER_DIGITS,
    ZERO_TUPLE,
    CanonicalTuple,
    canonicalize,
    complexity,
    parse_decimal,
    reconstruct,
    require_strict_canonical,
)
from .errors import IndexRangeError, RenderBudgetError
from .positioning import (
    position_within,
    strict_position_within,
    strict_tuple_at,
    tuple_at,
)

MODES = ("paper", "strict")


@dataclass(frozen=True)
class EnumerationRecord:
    """One enumerated entry: index, tuple, rendered text, strict flag.

    ``text`` is None when rendering would exceed the character budget.
    """

    index: int
    tuple: CanonicalTuple
    text: str | None
    strict_canonical: bool


def encode(t: CanonicalTuple) -> int:
    """Index of a canonical tuple: levels below it, plus rank, plus one."""
    level = complexity(t)
    if level == 0:
        return 1
    return cumulative_before(level) + position_within(level, t) + 1


def decode(index: int) -> CanonicalTuple:
    """Tuple at an index; exact inverse of encode."""
    if index < 1:
        raise IndexRangeError("index must be >= 1")
    if index == 1:
        return ZERO_TUPLE
    level = level_of_index(index)
    pos = index - 1 - cumulative_before(level)
    return tuple_at(level, pos)


def strict_encode(t: CanonicalTuple) -> int:
    """Index of a strict-canonical tuple under strict counting.

    Raises CanonicalityError for tuples whose n3 has a trailing zero;
    those have no strict index because their value belongs to a smaller
    tuple.
    """
    require_strict_canonical(t)
    level = complexity(t)
    if level == 0:
        return 1
    return strict_cumulative_before(level) + strict_position_within(level, t) + 1


def strict_decode(index: int) -> CanonicalTuple:
    """Strict-mode inverse; always returns a strict-canonical tuple."""
    if index < 1:
        raise IndexRangeError("index must be >= 1")
    if index == 1:
        return ZERO_TUPLE
    level = strict_level_of_index(index)
    pos = index - 1 - strict_cumulative_before(level)
    return strict_tuple_at(level, pos)


def encode_text(text: str, *, strict: bool = False) -> int:
    """Index of decimal text: parse, canonicalize, encode.

    Equivalent spellings get equal indices; "3.14" and "3.1400" agree.
    Canonicalization always yields a strict-canonical tuple, so the
    strict path never rejects parsed input.
    """
    t = canonicalize(parse_decimal(text))
    return strict_encode(t) if strict else encode(t)


def decode_text(
    index: int,
    *,
    strict: bool = False,
    max_render_digits: int = DEFAULT_MAX_RENDER_DIGITS,
) -> str:
    """Canonical decimal text at an index: decode, then render."""
    t = strict_decode(index) if strict else decode(index)
    return reconstruct(t, max_render_digits)


def enumerate_range(
    start: int,
    stop: int,
    mode: str = "paper",
    *,
    max_render_digits: int = DEFAULT_MAX_RENDER_DIGITS,
) -> Iterator[EnumerationRecord]:
    """Yield records for every index in [start, stop], ascending.

    Lazy: each record is produced independently, so memory use does not
    depend on the width of the range. Records whose text would blow the
    render budget carry text None instead of failing the stream.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if start < 1 or stop < start:
        raise IndexRangeError(f"need 1 <= start <= stop, got [{start}, {stop}]")
    unrank = strict_decode if mode == "strict" else decode
    for index in range(start, stop + 1):
        t = unrank(index)
        try:
            text = reconstruct(t, max_render_digits)
        except RenderBudgetError:
            text = None
        yield EnumerationRecord(index, t, text, t.is_strict_canonical())
