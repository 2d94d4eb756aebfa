"""Small exact number-theory helpers: factorization, divisors, totient, Moebius.

Everything works on plain Python integers; trial division is plenty at the
group orders this package handles.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def factorint(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` as ``((p, e), ...)`` with primes ascending.

    >>> factorint(72)
    ((2, 3), (3, 2))
    >>> factorint(1)
    ()
    """
    if n < 1:
        raise ValueError(f"factorint requires n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> tuple[int, ...]:
    """The distinct primes dividing n, ascending."""
    return tuple(p for p, _ in factorint(n))


def is_prime(n: int) -> bool:
    return n >= 2 and factorint(n) == ((n, 1),)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending.

    >>> divisors(12)
    (1, 2, 3, 4, 6, 12)
    """
    out = [1]
    for p, e in factorint(n):
        out = [d * p**i for d in out for i in range(e + 1)]
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    """Euler's phi: the number of units mod n.

    >>> [totient(n) for n in (1, 2, 6, 8, 9)]
    [1, 1, 2, 4, 6]
    """
    t = 1
    for p, e in factorint(n):
        t *= (p - 1) * p ** (e - 1)
    return t


@lru_cache(maxsize=None)
def moebius(n: int) -> int:
    """The Moebius function: 0 unless n is squarefree, else (-1)^(number of primes).

    >>> [moebius(n) for n in (1, 2, 4, 6, 30)]
    [1, -1, 0, 1, -1]
    """
    fac = factorint(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1
