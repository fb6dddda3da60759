"""Rank and unrank tuples inside one complexity level.

Within a level the order is lexicographic on (n1, n2), with n3 forced
by the level, the pure integer (K, 0, 0) coming last, and each shape
appearing with positive sign immediately before negative sign. So a
tuple's position is 2 * base + sign_offset, where base counts the
shapes strictly before it:

    base(n1, n2) = n1*K - n1*(n1 - 1)/2 + n2        (fractional)
    base(K,  0 ) = K*(K + 1)/2                      (pure integer)

The fractional term is the size of the blocks for smaller first
coordinates (block of a given n1 holds K - n1 shapes, one per n2).
Strict variants use the same order restricted to strict-canonical
tuples, so block sizes shrink to the count of admissible n3 values.

Unranking inverts base: the first coordinate is recovered with an
integer square-root seed checked over a fixed window, never trusted
blindly, so results stay exact at any magnitude.
"""

from . import ops
from .counting import (
    admissible_frac_upto,
    admissible_values_upto,
    level_count,
    strict_level_count,
)
from .decimal_core import (
    ZERO_TUPLE,
    CanonicalTuple,
    complexity,
    require_strict_canonical,
)
from .errors import IndexRangeError

_BLOCK_WINDOW = 2


def position_within(level: int, t: CanonicalTuple) -> int:
    """Zero-based rank of a tuple inside its level."""
    _check_level(level, t)
    if level == 0:
        return 0
    if t.n3 == 0:
        base = ops.fdiv(ops.mul(level, level + 1), 2)
    else:
        base = ops.mul(t.n1, level) - ops.fdiv(ops.mul(t.n1, t.n1 - 1), 2) + t.n2
    return ops.mul(2, base) + (0 if t.sign > 0 else 1)


def tuple_at(level: int, pos: int) -> CanonicalTuple:
    """The tuple at a zero-based position inside a level; inverse of position_within."""
    if pos < 0 or pos >= level_count(level):
        raise IndexRangeError(f"position {pos} out of range for level {level}")
    if level == 0:
        return ZERO_TUPLE
    base, parity = ops.fdivmod(pos, 2)
    sign = 1 if parity == 0 else -1
    if base == ops.fdiv(ops.mul(level, level + 1), 2):
        return CanonicalTuple(sign, level, 0, 0)
    n1 = _first_coord_at(level, base)
    n2 = base - _block_start(level, n1)
    n3 = level - n1 - n2
    if n3 < 1:
        raise AssertionError("fractional unrank produced n3 < 1")
    return CanonicalTuple(sign, n1, n2, n3)


def strict_position_within(level: int, t: CanonicalTuple) -> int:
    """Rank inside a level counting only strict-canonical tuples."""
    _check_level(level, t)
    require_strict_canonical(t)
    if level == 0:
        return 0
    if t.n3 == 0:
        base = admissible_frac_upto(level)
    else:
        remaining = level - t.n1
        # block start, then rank of n2 within the block; n2 ascending is
        # n3 descending, so subtract the admissible values below n3
        block_start = admissible_frac_upto(level) - admissible_frac_upto(remaining)
        in_block = admissible_values_upto(remaining) - 1 - admissible_values_upto(t.n3 - 1)
        base = block_start + in_block
    return ops.mul(2, base) + (0 if t.sign > 0 else 1)


def strict_tuple_at(level: int, pos: int) -> CanonicalTuple:
    """Inverse of strict_position_within; always returns a strict-canonical tuple."""
    if pos < 0 or pos >= strict_level_count(level):
        raise IndexRangeError(f"position {pos} out of range for strict level {level}")
    if level == 0:
        return ZERO_TUPLE
    base, parity = ops.fdivmod(pos, 2)
    sign = 1 if parity == 0 else -1
    total_frac = admissible_frac_upto(level)
    if base == total_frac:
        return CanonicalTuple(sign, level, 0, 0)
    # invert the block start: smallest remaining-budget m with S(m) >= u
    remaining = _block_budget_at(total_frac - base)
    n1 = level - remaining
    in_block = admissible_frac_upto(remaining) - (total_frac - base)
    # the in_block-th shape has the (size - 1 - in_block)-th admissible
    # n3 in ascending order; ascending admissibles are 1..9, 11..19, ...
    ascending = admissible_values_upto(remaining) - 1 - in_block
    decade, unit = ops.fdivmod(ascending, 9)
    n3 = ops.mul(10, decade) + unit + 1
    n2 = remaining - n3
    if n2 < 0 or n3 % 10 == 0:
        raise AssertionError("strict unrank produced an inadmissible shape")
    return CanonicalTuple(sign, n1, n2, n3)


def _check_level(level: int, t: CanonicalTuple) -> None:
    if complexity(t) != level:
        raise ValueError(f"tuple has level {complexity(t)}, expected {level}")


def _block_start(level: int, n1: int) -> int:
    # shapes with a smaller first coordinate: sum of (level - a) for a < n1
    return ops.mul(n1, level) - ops.fdiv(ops.mul(n1, n1 - 1), 2)


def _first_coord_at(level: int, base: int) -> int:
    # Largest n1 with block_start(n1) <= base. The real root of the
    # quadratic lies within one of (A - sqrt(A^2 - 8*base))/2, A = 2K+1;
    # the window scan settles it exactly.
    a = ops.mul(2, level) + 1
    disc = ops.mul(a, a) - ops.mul(8, base)
    root = ops.isqrt(disc)
    seed = ops.fdiv(a - root, 2)
    best = None
    for cand in range(seed - _BLOCK_WINDOW, seed + _BLOCK_WINDOW + 1):
        if cand < 0:
            cand = 0
        elif cand > level - 1:
            cand = level - 1
        lo = _block_start(level, cand)
        hi = _block_start(level, cand + 1)
        if lo <= base and base < hi:
            best = cand
    if best is None:
        raise AssertionError("first-coordinate recovery missed its window")
    return best


def _block_budget_at(target: int) -> int:
    # Smallest m >= 1 with admissible_frac_upto(m) >= target, for
    # target >= 1. S(m) is about 9*m*m/20, so seed near sqrt(20t/9).
    seed = ops.isqrt(ops.fdiv(ops.mul(20, target), 9))
    best = None
    for cand in range(seed - _BLOCK_WINDOW, seed + _BLOCK_WINDOW + 1):
        if cand < 1:
            cand = 1
        here = admissible_frac_upto(cand)
        before = admissible_frac_upto(cand - 1)
        if here >= target and target > before:
            best = cand
    if best is None:
        raise AssertionError("block-budget recovery missed its window")
    return best
