"""Small exact-integer helpers: factorization, prime powers, divisor counts.

Everything here works on Python ints by trial division.  The numbers that
reach this module are tiny (torsion moduli, gcd classes, invariant factors
of small matrices), so no sieve or probabilistic machinery is warranted.
"""

from __future__ import annotations


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Write n as p**r for a prime p, or return None.

    prime_power(9) == (3, 2); prime_power(12) is None; prime_power(1) is None.
    """
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) != 1:
        return None
    [(p, r)] = fac.items()
    return (p, r)


def prime_power_parts(n: int) -> tuple[int, ...]:
    """Split n >= 1 into its prime-power components, ascending.

    prime_power_parts(12) == (3, 4): Z/12 = Z/4 + Z/3 up to iso, and the
    parts are listed sorted by value.  prime_power_parts(1) == ().
    """
    return tuple(sorted(p**e for p, e in factorize(n).items()))


def divisor_count(n: int) -> int:
    """Number of positive divisors of n >= 1."""
    count = 1
    for e in factorize(n).values():
        count *= e + 1
    return count
