"""Column addition in base b with a full carry trace.

The trace records, per place, both addend digits, the incoming and
outgoing carry, and whether the carry stops there (carry in, no carry
out).  The digit-sum shortcut for the carry count and the binary
"special place" analysis live here too.
"""

from dataclasses import dataclass

from .digits import DigitVector, check_base, check_natural, digit_at, digit_sum, to_digits, MAX_NATURAL
from .errors import TheoremViolation


@dataclass(frozen=True)
class CarryTrace:
    base: int
    addend_i: DigitVector
    addend_j: DigitVector
    sum_n: DigitVector
    carry_in: tuple
    carry_out: tuple
    stopping: tuple
    carry_count: int

    def places(self) -> int:
        return len(self.carry_in)


def add_with_trace(i: int, j: int, b: int) -> CarryTrace:
    """Add i + j in base b, recording every column's carry behavior.

    The trace spans max(len(i), len(j)) + 1 places so a final carry
    always has somewhere to land; i = j = 0 yields an empty trace.
    """
    check_natural(i, "i")
    check_natural(j, "j")
    check_base(b)
    if i + j > MAX_NATURAL:
        raise OverflowError(f"{i} + {j} exceeds the 64-bit limit")
    di = to_digits(i, b)
    dj = to_digits(j, b)
    places = max(len(di), len(dj)) + 1 if (i or j) else 0
    carry_in = []
    carry_out = []
    carry = False
    for k in range(places):
        carry_in.append(carry)
        total = di.digit(k) + dj.digit(k) + carry
        carry = total >= b
        carry_out.append(carry)
    stopping = tuple(ci and not co for ci, co in zip(carry_in, carry_out))
    return CarryTrace(
        base=b,
        addend_i=di,
        addend_j=dj,
        sum_n=to_digits(i + j, b),
        carry_in=tuple(carry_in),
        carry_out=tuple(carry_out),
        stopping=stopping,
        carry_count=sum(carry_out),
    )


def carry_count(i: int, j: int, b: int) -> int:
    """Number of carries when adding i + j in base b (no trace built)."""
    check_natural(i, "i")
    check_natural(j, "j")
    check_base(b)
    if i + j > MAX_NATURAL:
        raise OverflowError(f"{i} + {j} exceeds the 64-bit limit")
    count = 0
    carry = 0
    while i or j or carry:
        carry = 1 if i % b + j % b + carry >= b else 0
        count += carry
        i //= b
        j //= b
    return count


def carry_count_digit_formula(i: int, j: int, b: int) -> int:
    """Carry count as (I + J - N) / (b - 1), from the digit sums of i, j, i+j.

    The difference must be non-negative and exactly divisible; anything
    else would falsify the digit-sum carry identity and raises
    TheoremViolation.
    """
    check_natural(i, "i")
    check_natural(j, "j")
    check_base(b)
    if i + j > MAX_NATURAL:
        raise OverflowError(f"{i} + {j} exceeds the 64-bit limit")
    diff = digit_sum(i, b) + digit_sum(j, b) - digit_sum(i + j, b)
    if diff < 0:
        raise TheoremViolation(f"digit-sum difference negative for {i}+{j} base {b}: {diff}")
    if diff % (b - 1):
        raise TheoremViolation(f"digit-sum difference {diff} not divisible by {b - 1} for {i}+{j} base {b}")
    return diff // (b - 1)


def stopping_places(t: CarryTrace) -> set:
    """Places where a carry arrives but does not propagate further.

    For base 2 the stopped column must read 0 + 0 (+ carried 1) = 1;
    that is checked here and a violation raises TheoremViolation.
    """
    places = {k for k, s in enumerate(t.stopping) if s}
    if t.base == 2:
        for k in places:
            if (t.addend_i.digit(k), t.addend_j.digit(k), t.sum_n.digit(k)) != (0, 0, 1):
                raise TheoremViolation(f"stopping place {k} of {t.addend_i.value()}+{t.addend_j.value()} is not 0+0=1")
    return places


def special_places(n: int, i: int) -> set:
    """Binary places where i and j = n - i have digit 0 but n has digit 1.

    Nonempty exactly when the binary addition i + j carries; that
    equivalence is enforced as a cross-check.
    """
    check_natural(n, "n")
    check_natural(i, "i")
    if i > n:
        raise ValueError(f"i = {i} exceeds n = {n}")
    j = n - i
    places = set()
    for k in range(n.bit_length() + 1):
        if digit_at(i, 2, k) == 0 and digit_at(j, 2, k) == 0 and digit_at(n, 2, k) == 1:
            places.add(k)
    if bool(places) != (carry_count(i, j, 2) > 0):
        raise TheoremViolation(f"special places of n={n}, i={i} disagree with carry existence")
    return places
