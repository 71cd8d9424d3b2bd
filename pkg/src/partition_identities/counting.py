"""Exact partition counts: p(n) by the pentagonal-number recurrence and the
restricted count p_m(n) by dynamic programming over allowed parts."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def _partition_count(N: int) -> tuple[int, ...]:
    p = [1] + [0] * N
    for n in range(1, N + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = g1 + k
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return tuple(p)


def partition_count(N: int) -> list[int]:
    """Return ``[p(0), p(1), ..., p(N)]``.

    Uses Euler's recurrence
    p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    return list(_partition_count(N))


def restricted_count(N: int, m: int) -> list[int]:
    """Return ``[p_m(0), ..., p_m(N)]`` where p_m(n) counts partitions of n with
    no part divisible by m and fewer than m ones (p_m(0) = 1)."""
    if m < 2:
        raise ValueError(f"modulus m must be at least 2, got {m}")
    if N < 0:
        raise ValueError("N must be nonnegative")
    # part 1 used 0..m-1 times
    table = [1 if n < m else 0 for n in range(N + 1)]
    for part in range(2, N + 1):
        if part % m == 0:
            continue
        for n in range(part, N + 1):
            table[n] += table[n - part]
    return table
