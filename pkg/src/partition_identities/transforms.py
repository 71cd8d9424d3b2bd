"""Glaisher-type merge/split maps and the Fu-Tang bijection sigma_m on P_n.

    sigma_m(M)    = phi_od(M^o) + psi_en(M^e)
    sigma_m^-1(M) = phi_do(M^d) + psi_ne(M^n)

where ``+`` is multiset union. phi_od/phi_do iterate to a fixpoint, psi_en and
psi_ne act once per part.
"""

from __future__ import annotations

import heapq
from collections import Counter
from typing import Iterable

from .partitions import (
    PartList,
    Partition,
    as_partlist,
    decompose_dn,
    decompose_oe,
    multiset_union,
    partlist_from_counts,
)


def _check_m(m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus m must be at least 2, got {m}")


def phi_od(parts: Iterable[int], m: int) -> PartList:
    """Merge groups of ``m`` equal parts into one part until every value
    appears fewer than ``m`` times. Input must have no part divisible by ``m``."""
    _check_m(m)
    counts = Counter(parts)
    bad = sorted(v for v in counts if v % m == 0)
    if bad:
        raise ValueError(f"phi_od needs parts not divisible by {m}, got {bad}")
    # merged values are always larger, so ascending order reaches a fixpoint
    heap = list(counts)
    heapq.heapify(heap)
    out: dict[int, int] = {}
    while heap:
        value = heapq.heappop(heap)
        q, r = divmod(counts.pop(value), m)
        if r:
            out[value] = r
        if q:
            bigger = value * m
            if bigger not in counts:
                heapq.heappush(heap, bigger)
            counts[bigger] += q
    return partlist_from_counts(out)


def phi_do(parts: Iterable[int], m: int) -> PartList:
    """Split every multiple of ``m`` into ``m`` equal parts, repeatedly, until
    no part is divisible by ``m``. Input must have all multiplicities < m."""
    _check_m(m)
    counts = Counter(parts)
    bad = sorted(v for v, t in counts.items() if t >= m)
    if bad:
        raise ValueError(f"phi_do needs multiplicities below {m}, violated by {bad}")
    out: Counter[int] = Counter()
    for value, t in counts.items():
        while value % m == 0:
            value //= m
            t *= m
        out[value] += t
    return partlist_from_counts(out)


def psi_en(parts: Iterable[int], m: int) -> PartList:
    """Replace each part ``k*m`` by ``m`` copies of ``k`` (one pass only)."""
    _check_m(m)
    parts = as_partlist(parts)
    if any(p % m for p in parts):
        raise ValueError(f"psi_en needs every part divisible by {m}")
    return as_partlist(p // m for p in parts for _ in range(m))


def psi_ne(parts: Iterable[int], m: int) -> PartList:
    """Replace each group of ``m`` equal parts ``k`` by one part ``k*m``."""
    _check_m(m)
    counts = Counter(parts)
    if any(t % m for t in counts.values()):
        raise ValueError(f"psi_ne needs every multiplicity divisible by {m}")
    return partlist_from_counts({v * m: t // m for v, t in counts.items()})


def sigma(lam: Partition, m: int) -> Partition:
    """The Fu-Tang bijection on partitions of ``lam.n``. ``m = 1`` is the identity."""
    if m < 1:
        raise ValueError(f"modulus m must be positive, got {m}")
    if m == 1:
        return lam
    o_part, e_part, _ = decompose_oe(lam.parts, m)
    return Partition.from_parts(multiset_union(phi_od(o_part, m), psi_en(e_part, m)))


def sigma_inv(lam: Partition, m: int) -> Partition:
    if m < 1:
        raise ValueError(f"modulus m must be positive, got {m}")
    if m == 1:
        return lam
    d_part, n_part, _ = decompose_dn(lam.parts, m)
    return Partition.from_parts(multiset_union(phi_do(d_part, m), psi_ne(n_part, m)))
