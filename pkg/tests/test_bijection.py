"""End-to-end encode/decode maps and the lazy enumerator."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from decindex import bijection, counting, oracle, ops
from decindex.decimal_core import (
    CanonicalTuple,
    ZERO_TUPLE,
    canonicalize,
    complexity,
    parse_decimal,
    reconstruct,
)
from decindex.errors import CanonicalityError, IndexRangeError


@pytest.mark.parametrize(
    "text,index",
    [
        ("0", 1),
        ("0.1", 2),
        ("-1.1", 11),
        ("1.0002", 100),
        ("2.00008", 1000),
        ("0.00000000022", 10000),
        ("-47.0000000011", 100001),
    ],
)
def test_encode_text_known_indices(text, index):
    assert bijection.encode_text(text) == index


def test_encode_zero_tuple_and_spellings():
    assert bijection.encode(ZERO_TUPLE) == 1
    assert bijection.encode_text("0") == 1
    assert bijection.encode_text("-0.0") == 1


@pytest.mark.parametrize(
    "index,expected",
    [
        (13, CanonicalTuple(-1, 2, 0, 0)),
        (1000, CanonicalTuple(1, 2, 4, 8)),
        (10000, CanonicalTuple(1, 0, 9, 22)),
    ],
)
def test_decode_known_tuples(index, expected):
    assert bijection.decode(index) == expected


def test_decode_text_renders_integers_bare():
    assert bijection.decode_text(12) == "2"
    assert bijection.decode_text(1) == "0"
    assert bijection.decode_text(4) == "1"


def test_equivalent_spellings_share_an_index():
    assert bijection.encode_text("3.14") == bijection.encode_text("3.1400")
    assert bijection.encode_text("1e2") == bijection.encode_text("100")


def test_decode_rejects_nonpositive_indices():
    for bad in (0, -1, -10**9):
        with pytest.raises(IndexRangeError):
            bijection.decode(bad)
        with pytest.raises(IndexRangeError):
            bijection.strict_decode(bad)


def test_tuple_round_trip_first_200k():
    for index in range(1, 200_001):
        assert bijection.encode(bijection.decode(index)) == index


def test_tuple_round_trip_random_60_digit_indices():
    rng = random.Random(20260810)
    for _ in range(1000):
        index = rng.randrange(1, 10**60)
        assert bijection.encode(bijection.decode(index)) == index


@given(st.integers(min_value=1, max_value=10**40))
@settings(max_examples=300)
def test_tuple_round_trip_property(index):
    assert bijection.encode(bijection.decode(index)) == index


@given(st.integers(min_value=1, max_value=10**40))
@settings(max_examples=300)
def test_strict_round_trip_property(index):
    t = bijection.strict_decode(index)
    assert t.is_strict_canonical()
    assert bijection.strict_encode(t) == index


def test_modes_coincide_through_level_9():
    for index in range(1, counting.cumulative_upto(9) + 1):
        assert bijection.strict_decode(index) == bijection.decode(index)


def test_modes_diverge_at_first_index_of_level_10():
    first = counting.cumulative_before(10) + 1
    assert bijection.decode(first) == CanonicalTuple(1, 0, 0, 10)
    assert bijection.strict_decode(first) == CanonicalTuple(1, 0, 1, 9)


def test_strict_encode_rejects_trailing_zero_tuples():
    with pytest.raises(CanonicalityError):
        bijection.strict_encode(CanonicalTuple(1, 0, 0, 10))
    with pytest.raises(CanonicalityError):
        bijection.strict_encode(CanonicalTuple(-1, 3, 1, 700))


def test_strict_encode_zero():
    assert bijection.strict_encode(ZERO_TUPLE) == 1


def test_value_collision_in_default_mode_at_level_10():
    # the first value-level collision pair: "0.10" vs "0.1"
    dup_index = bijection.encode(CanonicalTuple(1, 0, 0, 10))
    value_dup = canonicalize(parse_decimal(reconstruct(bijection.decode(dup_index))))
    value_base = canonicalize(parse_decimal(reconstruct(bijection.decode(2))))
    assert dup_index == 350
    assert value_dup == value_base


def test_strict_mode_is_injective_on_values_prefix():
    seen = set()
    for index in range(1, counting.strict_cumulative_upto(25) + 1):
        text = reconstruct(bijection.strict_decode(index))
        assert text not in seen
        seen.add(text)


def test_monotone_in_complexity():
    rng = random.Random(7)
    tuples = [bijection.decode(rng.randrange(1, 10**12)) for _ in range(120)]
    for a in tuples:
        for b in tuples:
            if complexity(a) < complexity(b):
                assert bijection.encode(a) < bijection.encode(b)


@pytest.mark.parametrize("mode", ["paper", "strict"])
def test_decode_equals_oracle_emission_order(mode):
    cfg = oracle.OracleConfig(max_level=20, mode=mode)
    unrank = bijection.strict_decode if mode == "strict" else bijection.decode
    for index, t in enumerate(oracle.stream(cfg), start=1):
        assert unrank(index) == t


def test_enumerate_matches_decode_and_is_lazy():
    records = list(bijection.enumerate_range(1, 13))
    assert [r.index for r in records] == list(range(1, 14))
    assert [r.text for r in records] == [
        "0", "0.1", "-0.1", "1", "-1",
        "0.2", "-0.2", "0.01", "-0.01", "1.1", "-1.1", "2", "-2",
    ]
    assert all(complexity(r.tuple) == 2 for r in records[5:])
    # laziness: pulling three records from a astronomically wide range
    # must not materialize the range
    stream = bijection.enumerate_range(10**18, 10**18 + 10**6)
    first_three = list(itertools.islice(stream, 3))
    assert [r.index for r in first_three] == [10**18, 10**18 + 1, 10**18 + 2]


def test_enumerate_single_record():
    records = list(bijection.enumerate_range(1, 1))
    assert len(records) == 1
    assert records[0].text == "0"
    assert records[0].strict_canonical


def test_enumerate_flags_nonstrict_records():
    first_level_10 = counting.cumulative_before(10) + 1
    record = next(bijection.enumerate_range(first_level_10, first_level_10))
    assert not record.strict_canonical
    assert record.text == "0.10"


def test_enumerate_honors_render_budget_with_null_text():
    record = next(bijection.enumerate_range(10**18, 10**18, max_render_digits=50))
    assert record.text is None
    assert record.tuple.n2 > 50


def test_enumerate_rejects_bad_ranges_and_modes():
    with pytest.raises(IndexRangeError):
        next(bijection.enumerate_range(5, 4))
    with pytest.raises(IndexRangeError):
        next(bijection.enumerate_range(0, 4))
    with pytest.raises(ValueError):
        next(bijection.enumerate_range(1, 2, mode="loose"))


def test_operation_counts_do_not_depend_on_index_magnitude():
    shapes = set()
    for index in (10**3, 10**6, 10**9, 10**12, 10**18):
        ops.tally.reset()
        t = bijection.decode(index)
        decode_shape = tuple(sorted(ops.tally.snapshot().items()))
        ops.tally.reset()
        bijection.encode(t)
        encode_shape = tuple(sorted(ops.tally.snapshot().items()))
        shapes.add((decode_shape, encode_shape))
    assert len(shapes) == 1
