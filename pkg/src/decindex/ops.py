"""Instrumented big-integer arithmetic.

The ranking and unranking paths route every multiplication, floor
division, and integer root extraction through this module, so the
number of arithmetic operations a single encode or decode performs can
be read off a counter. All loops on those paths have a fixed iteration
count, which makes the totals independent of operand magnitude; the
``bench`` CLI subcommand relies on that to substantiate the constant
operation-count claim.

The tally is process-global and purely diagnostic. Correctness never
depends on it, and resetting it from concurrent threads is the caller's
problem.
"""

import math

_FLOAT_SAFE_BITS = 900
_NEWTON_STEPS = 4


class OpTally:
    """Running operation totals, grouped by kind."""

    __slots__ = ("mul", "div", "sqrt", "cbrt")

    def __init__(self):
        self.reset()

    def reset(self) -> None:
        self.mul = 0
        self.div = 0
        self.sqrt = 0
        self.cbrt = 0

    def snapshot(self) -> dict:
        return {"mul": self.mul, "div": self.div, "sqrt": self.sqrt, "cbrt": self.cbrt}

    def total(self) -> int:
        return self.mul + self.div + self.sqrt + self.cbrt


tally = OpTally()


def mul(a: int, b: int) -> int:
    tally.mul += 1
    return a * b


def fdiv(a: int, b: int) -> int:
    tally.div += 1
    return a // b


def fdivmod(a: int, b: int) -> tuple:
    tally.div += 1
    return divmod(a, b)


def isqrt(a: int) -> int:
    """Exact floor square root, counted as one root extraction."""
    tally.sqrt += 1
    return math.isqrt(a)


def icbrt(x: int) -> int:
    """Integer cube root of x >= 1, correct to within one unit.

    A float seed is refined by a fixed number of integer Newton steps,
    so the arithmetic shape is the same for every operand size. The
    result can be off by one near perfect cubes; callers always verify
    it against their own defining inequality, which absorbs that. The
    fixed step count guarantees closeness for operands below roughly
    10**430; callers keep an exact fallback for anything bigger.
    """
    tally.cbrt += 1
    y = _cbrt_seed(x)
    for _ in range(_NEWTON_STEPS):
        y = (2 * y + x // (y * y)) // 3
        if y < 1:
            y = 1
    return y


def _cbrt_seed(x: int) -> int:
    # Shift oversized operands into float range; the shift is a multiple
    # of 3 so it commutes with the cube root.
    if x.bit_length() <= _FLOAT_SAFE_BITS:
        return max(1, int(float(x) ** (1.0 / 3.0)))
    shift = (x.bit_length() - _FLOAT_SAFE_BITS) // 3 + 1
    return max(1, int(float(x >> (3 * shift)) ** (1.0 / 3.0)) << shift)
