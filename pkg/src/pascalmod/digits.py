"""Canonical base-b digit representations of natural numbers.

Digits are stored little-endian: index k holds the coefficient of
base**k.  Zero is the empty digit vector.  All inputs are bounds-checked
against a 64-bit ceiling; nothing here needs big integers and silently
huge intermediates are rejected rather than accepted.
"""

from dataclasses import dataclass

MAX_NATURAL = 2**64 - 1
MAX_BASE = 2**63 - 1

_DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"


def check_natural(n: int, what: str = "value") -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"{what} must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"{what} must be non-negative, got {n}")
    if n > MAX_NATURAL:
        raise OverflowError(f"{what} {n} exceeds the 64-bit limit")
    return n


def check_base(b: int) -> int:
    if not isinstance(b, int) or isinstance(b, bool):
        raise ValueError(f"base must be an integer, got {b!r}")
    if b < 2:
        raise ValueError(f"base must be at least 2, got {b}")
    if b > MAX_BASE:
        raise OverflowError(f"base {b} exceeds the supported limit")
    return b


@dataclass(frozen=True)
class DigitVector:
    """Little-endian digits of a natural number in a fixed base."""

    base: int
    digits: tuple

    def __post_init__(self):
        check_base(self.base)
        object.__setattr__(self, "digits", tuple(self.digits))
        for d in self.digits:
            if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d < self.base:
                raise ValueError(f"digit {d!r} out of range for base {self.base}")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("highest-index digit must be nonzero (use the empty vector for 0)")

    def __len__(self):
        return len(self.digits)

    def digit(self, k: int) -> int:
        """Digit at place k, 0 beyond the canonical length."""
        return self.digits[k] if 0 <= k < len(self.digits) else 0

    def value(self) -> int:
        return from_digits(self)

    def display(self) -> str:
        """Big-endian digit string; alphanumeric for bases up to 36."""
        if not self.digits:
            return "0"
        if self.base <= 36:
            return "".join(_DIGIT_CHARS[d] for d in reversed(self.digits))
        return ":".join(str(d) for d in reversed(self.digits))


def to_digits(n: int, b: int) -> DigitVector:
    """Digits of n in base b by repeated division."""
    check_natural(n, "n")
    check_base(b)
    digits = []
    while n:
        n, r = divmod(n, b)
        digits.append(r)
    return DigitVector(b, tuple(digits))


def from_digits(d: DigitVector) -> int:
    """Reconstruct the value of a digit vector: sum of d_k * b**k."""
    n = 0
    for dk in reversed(d.digits):
        n = n * d.base + dk
        if n > MAX_NATURAL:
            raise OverflowError("digit vector value exceeds the 64-bit limit")
    return n


def digit_at(n: int, b: int, k: int) -> int:
    """The place-k digit of n in base b, via floor(n/b^k) - b*floor(n/b^(k+1))."""
    check_natural(n, "n")
    check_base(b)
    check_natural(k, "k")
    if k >= 64:
        return 0  # b**k > 2**64 > n, so the formula gives 0; skip the huge power
    bk = b**k
    return n // bk - b * (n // (bk * b))


def digit_sum(n: int, b: int) -> int:
    """Sum of the base-b digits of n."""
    check_natural(n, "n")
    check_base(b)
    total = 0
    while n:
        n, r = divmod(n, b)
        total += r
    return total
