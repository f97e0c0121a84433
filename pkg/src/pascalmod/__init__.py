"""Base-b digit arithmetic, carry counting, factorial/binomial valuations,
and the fractal divisibility structure of Pascal's triangle."""

from .carries import CarryTrace, add_with_trace, carry_count, carry_count_digit_formula, special_places, stopping_places
from .digits import DigitVector, digit_at, digit_sum, from_digits, to_digits
from .errors import TheoremViolation
from .triangle import (
    DivisibilityMask,
    TriangleRow,
    all_interior_divisible_rows,
    composite_mask,
    divisibility_mask,
    entry_mod_prime,
    generate_rows,
    iter_rows,
    next_row,
    row_nonzero_count,
)
from .valuation import (
    FactoredValuations,
    binomial_divisible_by,
    digit_sum_valuation,
    factorial_valuation_bruteforce,
    kummer_valuation,
    legendre_valuation,
    valuation_table,
)
from .render import RenderSpec, render_mask, render_residues, render_stripes, stripe_survivors
from .verify import VerifyReport, run_verify

__version__ = "0.1.0"
