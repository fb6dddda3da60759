"""Closed-form level cardinalities, cumulative counts, and their inverses.

Tuples are enumerated level by level, where the level of a tuple is
n1 + n2 + n3. Two counting regimes coexist:

* default counts cover every composition tuple (n3 >= 1, or the pure
  integer (K, 0, 0)), 2 per sign: level K > 0 holds K*(K+1) + 2 tuples;
* strict counts additionally exclude tuples whose n3 is a positive
  multiple of 10, because those render to values that already occur at
  a smaller level. The first exclusions appear at level 10, so the two
  regimes agree on levels 0 through 9.

Every function is a fixed-shape arithmetic expression (or a fixed-width
seed-and-verify search) over Python integers; nothing here loops over
levels, so indices with thousands of digits are fine.
"""

from . import ops
from .errors import IndexRangeError

# Inverse lookups verify a seeded window of this half-width against the
# defining inequality; the window is provably wide enough for operands
# the fixed-step cube root handles, and a bisection fallback covers the
# rest.
_LEVEL_WINDOW = 3


def level_count(level: int) -> int:
    """Number of tuples at a level: 1 at level 0, else K*(K+1) + 2."""
    if level < 0:
        raise IndexRangeError("level must be nonnegative")
    if level == 0:
        return 1
    return ops.mul(level, level + 1) + 2


def cumulative_before(level: int) -> int:
    """Number of tuples at levels strictly below this one.

    Closed form (K-1)*K*(K+1)/3 + 2*(K-1) + 1 for K >= 1 (it gives the
    correct 1 at K = 1), and 0 at K = 0.
    """
    if level < 0:
        raise IndexRangeError("level must be nonnegative")
    if level == 0:
        return 0
    cubic = ops.fdiv(ops.mul(ops.mul(level - 1, level), level + 1), 3)
    return cubic + ops.mul(2, level - 1) + 1


def cumulative_upto(level: int) -> int:
    """Number of tuples at levels up to and including this one.

    Closed form K*(K+1)*(K+2)/3 + 2*K + 1 for K >= 1, and 1 at K = 0.
    Always equals cumulative_before(level) + level_count(level).
    """
    if level < 0:
        raise IndexRangeError("level must be nonnegative")
    if level == 0:
        return 1
    cubic = ops.fdiv(ops.mul(ops.mul(level, level + 1), level + 2), 3)
    return cubic + ops.mul(2, level) + 1


def level_of_index(index: int) -> int:
    """The unique level K with cumulative_before(K) < index <= cumulative_upto(K).

    Seeds with the integer cube root of 3*(index - 1), which lands on K
    or K + 1, then verifies a fixed window of candidates against the
    defining inequality, so the answer is exact regardless of seed error.
    """
    if index < 1:
        raise IndexRangeError("index must be >= 1")
    if index == 1:
        return 0
    seed = ops.icbrt(ops.mul(3, index - 1))
    level = None
    for cand in range(seed - _LEVEL_WINDOW, seed + _LEVEL_WINDOW + 1):
        if cand < 1:
            cand = 1
        # evaluate both bounds unconditionally to keep the arithmetic
        # shape identical no matter where the seed lands
        below = cumulative_before(cand)
        upto = cumulative_upto(cand)
        if below < index and index <= upto:
            level = cand
    if level is None:
        level = _bisect_level(index, cumulative_upto)
    return level


def strict_level_count(level: int) -> int:
    """Number of strict-canonical tuples at a level.

    Per sign there are sum_{m=1..K} (m - floor(m/10)) fractional tuples
    plus the pure integer, so the count is 2*(1 + S(K)) with S below.
    Below level 10 the floor terms vanish and this equals level_count.
    """
    if level < 0:
        raise IndexRangeError("level must be nonnegative")
    if level == 0:
        return 1
    return ops.mul(2, 1 + admissible_frac_upto(level))


def strict_cumulative_before(level: int) -> int:
    """Number of strict-canonical tuples at levels strictly below this one."""
    if level < 0:
        raise IndexRangeError("level must be nonnegative")
    if level == 0:
        return 0
    j = level - 1
    # sum of S(j) over 1..level-1: tetrahedral sum of j(j+1)/2 minus the
    # double floor sum G
    tet = ops.fdiv(ops.mul(ops.mul(j, j + 1), j + 2), 6)
    return 1 + ops.mul(2, j) + ops.mul(2, tet - _floor10_double_sum(j))


def strict_cumulative_upto(level: int) -> int:
    """Number of strict-canonical tuples at levels up to and including this one."""
    return strict_cumulative_before(level) + strict_level_count(level)


def strict_level_of_index(index: int) -> int:
    """Strict-mode analogue of level_of_index.

    The strict cumulative count grows as 3*K**3/10, so the seed is the
    integer cube root of 10*index/3, again verified over a fixed window
    with an exact bisection fallback.
    """
    if index < 1:
        raise IndexRangeError("index must be >= 1")
    if index == 1:
        return 0
    seed = ops.icbrt(ops.fdiv(ops.mul(10, index), 3))
    level = None
    for cand in range(seed - _LEVEL_WINDOW, seed + _LEVEL_WINDOW + 1):
        if cand < 1:
            cand = 1
        below = strict_cumulative_before(cand)
        upto = strict_cumulative_upto(cand)
        if below < index and index <= upto:
            level = cand
    if level is None:
        level = _bisect_level(index, strict_cumulative_upto)
    return level


def admissible_frac_upto(x: int) -> int:
    """S(x) = count of (m, n3) pairs with 1 <= n3 <= m <= x and 10 not dividing n3.

    Equals sum_{m=1..x} (m - floor(m/10)) = x*(x+1)/2 - F(x). This is
    the per-sign count of fractional strict tuples at level x, and also
    drives block offsets in strict positioning.
    """
    return ops.fdiv(ops.mul(x, x + 1), 2) - _floor10_sum(x)


def admissible_values_upto(x: int) -> int:
    """Count of values in 1..x that are not multiples of 10."""
    return x - ops.fdiv(x, 10)


def _floor10_sum(x: int) -> int:
    # F(x) = sum_{m=1..x} floor(m/10) = a*(5a + b - 4) with x = 10a + b
    a, b = ops.fdivmod(x, 10)
    return ops.mul(a, ops.mul(5, a) + b - 4)


def _floor10_double_sum(j: int) -> int:
    # G(j) = sum_{i=1..j} F(i), in closed form by splitting i into full
    # decades (each contributing 50a^2 + 5a) plus the partial decade.
    a, b = ops.fdivmod(j, 10)
    if a >= 1:
        squares = ops.fdiv(ops.mul(ops.mul(a - 1, a), ops.mul(2, a) - 1), 6)
        triangle = ops.fdiv(ops.mul(a - 1, a), 2)
    else:
        squares = 0
        triangle = 0
    partial = ops.mul(ops.mul(b + 1, a), ops.mul(5, a) - 4) + ops.fdiv(
        ops.mul(a, ops.mul(b, b + 1)), 2
    )
    return ops.mul(50, squares) + ops.mul(5, triangle) + partial


def _bisect_level(index: int, cum_fn) -> int:
    # Exact fallback: smallest K with cum_fn(K) >= index. Only reachable
    # when the seed misses its window, i.e. for operands beyond the
    # fixed-step cube root's guarantee.
    hi = 1
    while cum_fn(hi) < index:
        hi *= 2
    lo = hi // 2
    while lo < hi:
        mid = (lo + hi) // 2
        if cum_fn(mid) >= index:
            hi = mid
        else:
            lo = mid + 1
    return lo
