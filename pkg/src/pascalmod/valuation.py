"""p-adic valuations of factorials and binomial coefficients.

Three independent routes to v_p(n!): brute-force factor counting over
1..n (the oracle, capped), the floor-sum formula, and the digit-sum
closed form (n - S_p(n)) / (p - 1).  Binomial valuations come from
carry counting in base p, and composite-modulus divisibility is decided
prime power by prime power.  No binomial coefficient is ever formed.
"""

import os
from dataclasses import dataclass

from .carries import carry_count
from .digits import check_natural, digit_sum
from .errors import TheoremViolation

DEFAULT_ORACLE_CAP = 10**5
ORACLE_CAP_ENV = "KUMMER_ORACLE_CAP"


def oracle_cap(cap=None) -> int:
    """Effective brute-force cap: explicit arg > env var > default."""
    if cap is not None:
        return cap
    env = os.environ.get(ORACLE_CAP_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_ORACLE_CAP


def is_prime(p: int) -> bool:
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p!r} is not prime")
    return p


def primes_upto(n: int) -> list:
    """Primes <= n by sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, n + 1) if sieve[p]]


def factorize(m: int) -> list:
    """Prime factorization of m as (prime, multiplicity) pairs, by trial division."""
    check_natural(m, "m")
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            a = 0
            while m % d == 0:
                m //= d
                a += 1
            factors.append((d, a))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return factors


def factorial_valuation_bruteforce(n: int, p: int, cap=None) -> int:
    """v_p(n!) by counting factors of p in each of 1..n.

    Deliberately naive; this is the independent oracle the formulas are
    checked against, so it stays capped and slow.
    """
    check_natural(n, "n")
    check_prime(p)
    limit = oracle_cap(cap)
    if n > limit:
        raise ValueError(f"n = {n} exceeds the brute-force cap {limit}")
    total = 0
    for k in range(1, n + 1):
        while k % p == 0:
            k //= p
            total += 1
    return total


def legendre_valuation(n: int, p: int) -> int:
    """v_p(n!) = floor(n/p) + floor(n/p^2) + ..."""
    check_natural(n, "n")
    check_prime(p)
    total = 0
    while n:
        n //= p
        total += n
    return total


def digit_sum_valuation(n: int, p: int) -> int:
    """v_p(n!) = (n - S_p(n)) / (p - 1) where S_p is the base-p digit sum."""
    check_natural(n, "n")
    check_prime(p)
    diff = n - digit_sum(n, p)
    if diff < 0 or diff % (p - 1):
        raise TheoremViolation(f"(n - digit sum) = {diff} not a multiple of {p - 1} for n = {n}, p = {p}")
    return diff // (p - 1)


def kummer_valuation(n: int, i: int, p: int) -> int:
    """v_p(C(n, i)) as the number of carries adding i + (n - i) in base p."""
    check_natural(n, "n")
    check_natural(i, "i")
    check_prime(p)
    if i > n:
        raise ValueError(f"i = {i} exceeds n = {n}")
    return carry_count(i, n - i, p)


@dataclass(frozen=True)
class FactoredValuations:
    """Per-prime valuations of n!, i!, j! and C(n, i) for all primes <= n."""

    n: int
    i: int
    j: int
    table: dict  # p -> (v_p(n!), v_p(i!), v_p(j!), v_p(C(n,i)))

    def binomial_valuation(self, p: int) -> int:
        return self.table[p][3]


def valuation_table(n: int, i: int, cap=None) -> FactoredValuations:
    """Valuations of the factorials in C(n, i) at every prime up to n."""
    check_natural(n, "n")
    check_natural(i, "i")
    if i > n:
        raise ValueError(f"i = {i} exceeds n = {n}")
    limit = oracle_cap(cap)
    if n > limit:
        raise ValueError(f"n = {n} exceeds the cap {limit}")
    j = n - i
    table = {}
    for p in primes_upto(n):
        vn = legendre_valuation(n, p)
        vi = legendre_valuation(i, p)
        vj = legendre_valuation(j, p)
        vc = vn - vi - vj
        if vc < 0:
            raise TheoremViolation(f"negative binomial valuation at p = {p} for n = {n}, i = {i}")
        table[p] = (vn, vi, vj, vc)
    return FactoredValuations(n=n, i=i, j=j, table=table)


def binomial_divisible_by(n: int, i: int, m: int) -> bool:
    """Whether m divides C(n, i): each prime power p^a || m needs a carries in base p."""
    check_natural(n, "n")
    check_natural(i, "i")
    if i > n:
        raise ValueError(f"i = {i} exceeds n = {n}")
    return all(kummer_valuation(n, i, p) >= a for p, a in factorize(m))
