"""Integer partitions in multiplicity form, enumeration, and the two
multiset decompositions (o/e and d/n) relative to a modulus m.

A partition is stored as a sparse multiplicity vector: a tuple of
``(part, count)`` pairs in increasing part order with every count positive.
Part lists (nonincreasing tuples of ints) are derived on demand.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

PartList = tuple[int, ...]


def as_partlist(parts: Iterable[int]) -> PartList:
    """Return ``parts`` as a nonincreasing tuple of positive ints."""
    out = tuple(sorted(parts, reverse=True))
    if out and out[-1] < 1:
        raise ValueError(f"parts must be positive integers, got {out}")
    return out


def partlist_from_counts(counts: Counter | dict[int, int]) -> PartList:
    out: list[int] = []
    for value in sorted(counts, reverse=True):
        out.extend([value] * counts[value])
    return tuple(out)


@dataclass(frozen=True, order=False)
class Partition:
    """A partition of ``n`` given by its nonzero multiplicities.

    ``mult`` holds ``(i, t_i)`` pairs for every part size ``i`` with
    ``t_i > 0``, sorted by ``i``.
    """

    n: int
    mult: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        total = 0
        prev = 0
        for part, count in self.mult:
            if part <= prev:
                raise ValueError("mult must list distinct parts in increasing order")
            if count <= 0:
                raise ValueError("mult must not store zero multiplicities")
            total += part * count
            prev = part
        if total != self.n:
            raise ValueError(f"multiplicities sum to {total}, not {self.n}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        parts = as_partlist(parts)
        counts = Counter(parts)
        return cls(sum(parts), tuple(sorted(counts.items())))

    @classmethod
    def from_mult(cls, mult: dict[int, int] | Sequence[int]) -> "Partition":
        """Build from a mapping ``{i: t_i}`` or a dense sequence ``(t_1, ..., t_n)``."""
        if isinstance(mult, dict):
            items = mult.items()
        else:
            items = enumerate(mult, start=1)
        pairs = tuple(sorted((i, t) for i, t in items if t))
        return cls(sum(i * t for i, t in pairs), pairs)

    @property
    def parts(self) -> PartList:
        out: list[int] = []
        for part, count in reversed(self.mult):
            out.extend([part] * count)
        return tuple(out)

    def t(self, i: int) -> int:
        """Multiplicity of part ``i`` (zero if absent)."""
        for part, count in self.mult:
            if part == i:
                return count
            if part > i:
                break
        return 0

    def dense(self) -> tuple[int, ...]:
        """Dense multiplicities ``(t_1, ..., t_n)``."""
        t = [0] * self.n
        for part, count in self.mult:
            t[part - 1] = count
        return tuple(t)

    def counts(self) -> dict[int, int]:
        return dict(self.mult)

    def distinct_parts(self) -> tuple[int, ...]:
        return tuple(part for part, _ in self.mult)

    def __len__(self) -> int:
        return sum(count for _, count in self.mult)

    def __str__(self) -> str:
        return format_parts(self.parts)


def format_parts(parts: Iterable[int]) -> str:
    return ",".join(str(p) for p in parts)


def _descending(n: int, largest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield [first] + rest


def enumerate_partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in lexicographically decreasing
    order of part lists.

    With ``largest`` set, only partitions whose largest part equals
    ``largest`` are produced, so disjoint chunks can be handed to separate
    workers.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if largest is None:
        for parts in _descending(n, n):
            yield Partition.from_parts(parts)
        return
    if n == 0:
        if largest == 0:
            yield Partition(0)
        return
    if not 1 <= largest <= n:
        return
    for rest in _descending(n - largest, largest):
        yield Partition.from_parts([largest] + rest)


@lru_cache(maxsize=None)
def all_partitions(n: int) -> tuple[Partition, ...]:
    """Cached tuple of ``enumerate_partitions(n)``."""
    return tuple(enumerate_partitions(n))


class OESplit(NamedTuple):
    o_part: PartList
    e_part: PartList
    m: int


class DNSplit(NamedTuple):
    d_part: PartList
    n_part: PartList
    m: int


def _check_modulus(m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus m must be at least 2, got {m}")


def decompose_oe(parts: Iterable[int], m: int) -> OESplit:
    """Split a multiset into the parts not divisible by ``m`` and those that are."""
    _check_modulus(m)
    parts = as_partlist(parts)
    return OESplit(
        tuple(p for p in parts if p % m),
        tuple(p for p in parts if p % m == 0),
        m,
    )


def decompose_dn(parts: Iterable[int], m: int) -> DNSplit:
    """Split a multiset so every value keeps ``t mod m`` copies on the d side
    and ``m * (t // m)`` copies on the n side."""
    _check_modulus(m)
    counts = Counter(parts)
    d_counts, n_counts = {}, {}
    for value, t in counts.items():
        q, r = divmod(t, m)
        if r:
            d_counts[value] = r
        if q:
            n_counts[value] = q * m
    return DNSplit(partlist_from_counts(d_counts), partlist_from_counts(n_counts), m)


def multiset_union(*partlists: Iterable[int]) -> PartList:
    return as_partlist(p for parts in partlists for p in parts)
