"""Exact decimal text handling and the canonical 4-tuple.

A finite-decimal value is held either as an :class:`ExactDecimal`
(sign plus raw digit strings, exactly as written) or as a
:class:`CanonicalTuple` ``(sign, n1, n2, n3)`` where ``n1`` is the
integer-part value, ``n2`` counts the zeros between the decimal point
and the first significant fractional digit, and ``n3`` is the
remaining fractional digits read as an integer. Every value has
exactly one canonical tuple; trailing fractional zeros are stripped,
pure integers carry ``n2 = n3 = 0``, and zero is ``(+1, 0, 0, 0)``.

Everything here is pure string/integer manipulation. No floats, no
rounding, anywhere.
"""

from dataclasses import dataclass

from .errors import CanonicalityError, ParseError, RenderBudgetError

#: Default ceiling on the total character count of a rendered decimal.
#: Unranking astronomically large indices can produce tuples whose n2
#: alone demands more zeros than memory holds; rendering refuses rather
#: than truncates.
DEFAULT_MAX_RENDER_DIGITS = 1_000_000

# str()/int() on very long numerals trip the interpreter's conversion
# limit; below this digit count the builtins are safe and fastest.
_DIRECT_CONVERSION_DIGITS = 4000


def _is_digit(c: str) -> bool:
    return "0" <= c <= "9"


@dataclass(frozen=True)
class ExactDecimal:
    """A decimal numeral split into sign and digit strings.

    ``integer_digits`` never has leading zeros (except the single "0");
    ``fraction_digits`` is kept verbatim, leading and trailing zeros
    included, because canonicalization needs to count them. A zero
    value is never negative.
    """

    negative: bool
    integer_digits: str
    fraction_digits: str

    def __post_init__(self):
        if not self.integer_digits or not all(_is_digit(c) for c in self.integer_digits):
            raise ValueError("integer_digits must be a nonempty digit string")
        if not all(_is_digit(c) for c in self.fraction_digits):
            raise ValueError("fraction_digits must be a digit string")
        if len(self.integer_digits) > 1 and self.integer_digits[0] == "0":
            raise ValueError("integer_digits must not have leading zeros")
        if self.negative and self.is_zero():
            raise ValueError("zero must not be negative")

    def is_zero(self) -> bool:
        return set(self.integer_digits) <= {"0"} and set(self.fraction_digits) <= {"0"}


@dataclass(frozen=True)
class CanonicalTuple:
    """Canonical decomposition ``(sign, n1, n2, n3)`` of a decimal value."""

    sign: int
    n1: int
    n2: int
    n3: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("sign must be -1 or +1")
        if self.n1 < 0 or self.n2 < 0 or self.n3 < 0:
            raise ValueError("tuple components must be nonnegative")
        if self.n3 == 0 and self.n2 != 0:
            raise ValueError("pure integers must have n2 = 0")
        if self.n1 == self.n2 == self.n3 == 0 and self.sign != 1:
            raise ValueError("zero is (+1, 0, 0, 0) by convention")

    def is_zero(self) -> bool:
        return self.n1 == 0 and self.n2 == 0 and self.n3 == 0

    def is_strict_canonical(self) -> bool:
        """True when n3 carries no trailing zero (n3 % 10 != 0, or n3 = 0).

        Tuples failing this render to texts like "0.10" whose value
        already belongs to a smaller tuple; strict mode excludes them.
        """
        return self.n3 == 0 or self.n3 % 10 != 0


ZERO_TUPLE = CanonicalTuple(1, 0, 0, 0)


def parse_decimal(text: str) -> ExactDecimal:
    """Parse decimal text into an ExactDecimal, exactly.

    Accepted grammar: optional sign, digits with an optional "." and
    fractional digits, or a bare ".digits" form, followed by an
    optional e/E exponent with optionally signed digits. Exponents are
    expanded by shifting the digit string, never by arithmetic, so
    "2.2E-10" becomes integer part "0" and fraction "00000000022".

    Raises ParseError naming the offending position on malformed input.
    """
    i = 0
    n = len(text)
    if n == 0:
        raise ParseError("empty input", 0)

    negative = False
    if text[i] in "+-":
        negative = text[i] == "-"
        i += 1

    int_start = i
    while i < n and _is_digit(text[i]):
        i += 1
    int_digits = text[int_start:i]

    frac_digits = ""
    if i < n and text[i] == ".":
        i += 1
        frac_start = i
        while i < n and _is_digit(text[i]):
            i += 1
        frac_digits = text[frac_start:i]
        if not frac_digits:
            raise ParseError("expected digit after decimal point", i)

    if not int_digits and not frac_digits:
        raise ParseError("expected digits", int_start)

    exponent = 0
    if i < n and text[i] in "eE":
        i += 1
        exp_negative = False
        if i < n and text[i] in "+-":
            exp_negative = text[i] == "-"
            i += 1
        exp_start = i
        while i < n and _is_digit(text[i]):
            i += 1
        exp_digits = text[exp_start:i]
        if not exp_digits:
            raise ParseError("expected digit in exponent", i)
        exponent = digits_to_int(exp_digits)
        if exp_negative:
            exponent = -exponent

    if i != n:
        raise ParseError(f"unexpected character {text[i]!r}", i)

    digits = int_digits + frac_digits
    point = len(int_digits) + exponent
    if point <= 0:
        int_part, frac_part = "0", "0" * (-point) + digits
    elif point >= len(digits):
        int_part, frac_part = digits + "0" * (point - len(digits)), ""
    else:
        int_part, frac_part = digits[:point], digits[point:]

    int_part = int_part.lstrip("0") or "0"
    if int_part == "0" and set(frac_part) <= {"0"}:
        negative = False
    return ExactDecimal(negative, int_part, frac_part)


def canonicalize(value: ExactDecimal) -> CanonicalTuple:
    """Reduce an ExactDecimal to its unique canonical tuple.

    Trailing fractional zeros are dropped, so equal values always give
    equal tuples: canonicalize(parse_decimal("3.14")) equals
    canonicalize(parse_decimal("3.1400")). The output always satisfies
    the strict-canonical property, since a stripped digit string cannot
    end in zero.
    """
    frac = value.fraction_digits.rstrip("0")
    n1 = digits_to_int(value.integer_digits)
    if frac:
        significant = frac.lstrip("0")
        n2 = len(frac) - len(significant)
        n3 = digits_to_int(significant)
    else:
        n2 = 0
        n3 = 0
    if n1 == 0 and n3 == 0:
        return ZERO_TUPLE
    return CanonicalTuple(-1 if value.negative else 1, n1, n2, n3)


def reconstruct(t: CanonicalTuple, max_render_digits: int = DEFAULT_MAX_RENDER_DIGITS) -> str:
    """Render a canonical tuple back to decimal text by concatenation.

    Zero renders as "0"; pure integers render without a decimal point
    ("1000", never "1000.0"); everything else is the sign, n1, ".",
    n2 zeros, then n3. The sizes are checked against
    ``max_render_digits`` before any string is built, and an oversize
    render raises RenderBudgetError rather than truncating.
    """
    if t.is_zero():
        return "0"
    required = (1 if t.sign < 0 else 0) + num_digits(t.n1)
    if t.n3 != 0:
        required += 1 + t.n2 + num_digits(t.n3)
    if required > max_render_digits:
        raise RenderBudgetError(
            f"rendering needs {required} characters, budget is {max_render_digits}",
            required=required,
            budget=max_render_digits,
        )
    sign = "-" if t.sign < 0 else ""
    if t.n3 == 0:
        return sign + int_to_digits(t.n1)
    return sign + int_to_digits(t.n1) + "." + "0" * t.n2 + int_to_digits(t.n3)


def complexity(t: CanonicalTuple) -> int:
    """Total information content n1 + n2 + n3; the enumeration level."""
    return t.n1 + t.n2 + t.n3


def require_strict_canonical(t: CanonicalTuple) -> None:
    if not t.is_strict_canonical():
        raise CanonicalityError(
            f"n3 = {t.n3} has a trailing zero; tuple is not strict-canonical"
        )


def num_digits(x: int) -> int:
    """Exact count of decimal digits of x >= 0, without materializing text."""
    if x < 0:
        raise ValueError("num_digits is defined for nonnegative integers")
    if x == 0:
        return 1
    # bit-length estimate floor(bits * log10(2)), then correct upward
    d = max(1, x.bit_length() * 30103 // 100000)
    while 10 ** d <= x:
        d += 1
    return d


def int_to_digits(x: int) -> str:
    """Decimal text of x >= 0; safe past the interpreter's str() digit limit."""
    if x < 0:
        raise ValueError("int_to_digits is defined for nonnegative integers")
    if x < 10 ** _DIRECT_CONVERSION_DIGITS:
        return str(x)
    half = num_digits(x) // 2
    hi, lo = divmod(x, 10 ** half)
    return int_to_digits(hi) + int_to_digits(lo).rjust(half, "0")


def digits_to_int(s: str) -> int:
    """Integer value of a digit string; safe past the int() digit limit."""
    if not s or not all(_is_digit(c) for c in s):
        raise ValueError("digits_to_int expects a nonempty digit string")
    if len(s) <= _DIRECT_CONVERSION_DIGITS:
        return int(s)
    half = len(s) // 2
    return digits_to_int(s[:-half]) * 10 ** half + digits_to_int(s[-half:])
