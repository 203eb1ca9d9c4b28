"""Deterministic primality testing for the small moduli used throughout."""

from __future__ import annotations

# Miller-Rabin with this witness set is exact below 3.3 * 10^24.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotPrimeError(ValueError):
    pass


def require_prime(q: int) -> int:
    if not is_prime(q):
        raise NotPrimeError(f"modulus {q} is not prime")
    return q


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def first_primes(count: int, start: int = 3) -> tuple[int, ...]:
    """The first `count` primes >= start, ascending."""
    out = []
    n = max(start, 2)
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n += 1
    return tuple(out)
