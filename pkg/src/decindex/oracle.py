"""Brute-force ground truth for the enumeration order.

This module spells the ordering out as literal nested loops: levels
ascending, first coordinate ascending, leading-zero count ascending,
pure integer last, positive sign before negative. No closed forms, no
seeds, no shared arithmetic with the counting or positioning modules;
agreement between the two routes is evidence, not tautology.

Deliberately naive. The default ceiling of level 25 keeps exhaustive
sweeps to a few thousand tuples.
"""

from dataclasses import dataclass
from typing import Iterator

from .decimal_core import ZERO_TUPLE, CanonicalTuple, complexity
from .errors import IndexRangeError

DEFAULT_MAX_LEVEL = 25


@dataclass(frozen=True)
class OracleConfig:
    max_level: int = DEFAULT_MAX_LEVEL
    mode: str = "paper"

    def __post_init__(self):
        if self.max_level < 0:
            raise ValueError("max_level must be nonnegative")
        if self.mode not in ("paper", "strict"):
            raise ValueError("mode must be 'paper' or 'strict'")


def stream(cfg: OracleConfig) -> Iterator[CanonicalTuple]:
    """Yield every tuple through cfg.max_level in enumeration order."""
    strict = cfg.mode == "strict"
    for level in range(cfg.max_level + 1):
        if level == 0:
            yield ZERO_TUPLE
            continue
        for n1 in range(level):
            for n2 in range(level - n1):
                n3 = level - n1 - n2
                if strict and n3 % 10 == 0:
                    continue
                yield CanonicalTuple(1, n1, n2, n3)
                yield CanonicalTuple(-1, n1, n2, n3)
        yield CanonicalTuple(1, level, 0, 0)
        yield CanonicalTuple(-1, level, 0, 0)


def index_of(t: CanonicalTuple, cfg: OracleConfig) -> int:
    """One-based position of a tuple in the stream, by linear scan."""
    if complexity(t) > cfg.max_level:
        raise IndexRangeError(
            f"tuple level {complexity(t)} exceeds oracle ceiling {cfg.max_level}"
        )
    for position, candidate in enumerate(stream(cfg), start=1):
        if candidate == t:
            return position
    raise IndexRangeError(f"tuple {t} not in oracle stream (not canonical for {cfg.mode})")
