"""Decorated partitions (at most one part value marked on its first
occurrence), the linear weights W and W~, and the refined identities built
on them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .counting import partition_count, restricted_count
from .identities import IdentityReport
from .partitions import Partition, all_partitions


class LinearForm:
    """Finitely supported integer combination of formal symbols x_1, x_2, ...

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for j, c in items:
            if j < 1:
                raise ValueError(f"symbol index must be positive, got {j}")
            acc[j] = acc.get(j, 0) + c
        self._coeffs = tuple(sorted((j, c) for j, c in acc.items() if c))

    @classmethod
    def symbol(cls, j: int, coeff: int = 1) -> "LinearForm":
        return cls({j: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def coefficient(self, j: int) -> int:
        return dict(self._coeffs).get(j, 0)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        if not isinstance(other, LinearForm):
            return NotImplemented
        return LinearForm(self._coeffs + other._coeffs)

    def __mul__(self, scalar: int) -> "LinearForm":
        if not isinstance(scalar, int):
            return NotImplemented
        return LinearForm((j, scalar * c) for j, c in self._coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, LinearForm):
            return self._coeffs == other._coeffs
        if other == 0:
            return not self._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"LinearForm({self.coeffs!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        out = ""
        for j, c in self._coeffs:
            mag = abs(c)
            term = f"x{j}" if mag == 1 else f"{mag}*x{j}"
            if not out:
                out = term if c > 0 else f"-{term}"
            else:
                out += f" + {term}" if c > 0 else f" - {term}"
        return out


def lsum(forms: Iterable[LinearForm]) -> LinearForm:
    acc: Counter[int] = Counter()
    for form in forms:
        for j, c in form._coeffs:
            acc[j] += c
    return LinearForm(acc)


@dataclass(frozen=True)
class DecoratedPartition:
    """A partition with an optional drawn part value; the mark sits on the
    first occurrence of that value."""

    base: Partition
    drawn: int | None = None

    def __post_init__(self):
        if self.drawn is not None and self.base.t(self.drawn) == 0:
            raise ValueError(f"drawn value {self.drawn} is not a part of {self.base}")

    @property
    def n(self) -> int:
        return self.base.n

    def non_drawn_parts(self) -> tuple[int, ...]:
        parts = list(self.base.parts)
        if self.drawn is not None:
            parts.remove(self.drawn)
        return tuple(parts)

    def __str__(self) -> str:
        out = []
        marked = False
        for p in self.base.parts:
            if p == self.drawn and not marked:
                out.append(f"{p}~")
                marked = True
            else:
                out.append(str(p))
        return ",".join(out)


def parse_decorated(text: str) -> DecoratedPartition:
    """Parse the wire form, e.g. ``"3~,1"``. Empty text is the empty partition."""
    text = text.strip()
    if not text:
        return DecoratedPartition(Partition(0))
    parts, drawn = [], []
    for token in text.split(","):
        token = token.strip()
        if token.endswith("~"):
            token = token[:-1]
            drawn.append(int(token))
        parts.append(int(token))
    if len(drawn) > 1:
        raise ValueError("at most one part may be drawn")
    return DecoratedPartition(Partition.from_parts(parts), drawn[0] if drawn else None)


def enumerate_decorated(n: int) -> Iterator[DecoratedPartition]:
    """Each partition of n undecorated, followed by one copy per distinct part
    value (largest first) with that value drawn."""
    for lam in all_partitions(n):
        yield DecoratedPartition(lam)
        for value in reversed(lam.distinct_parts()):
            yield DecoratedPartition(lam, value)


def weight_W(d: DecoratedPartition) -> LinearForm:
    """x_{p} summed over every non-drawn part occurrence p."""
    return LinearForm(Counter(d.non_drawn_parts()))


def weight_Wtilde(d: DecoratedPartition) -> LinearForm:
    """sum_j floor(drawn / j) x_j, or zero when nothing is drawn."""
    if d.drawn is None:
        return LinearForm()
    return LinearForm({j: d.drawn // j for j in range(1, d.drawn + 1)})


def check_e3(n: int) -> IdentityReport:
    """sum of W over decorated partitions of n equals sum of W~."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = lsum(weight_W(d) for d in enumerate_decorated(n))
    rhs = lsum(weight_Wtilde(d) for d in enumerate_decorated(n))
    return IdentityReport("e-new-3", n, None, lhs, rhs, lhs == rhs)


def coefficient_formula(n: int, j: int) -> int:
    """sum_{k=j}^{n} floor(k/j) p(n-k)."""
    if j < 1:
        raise ValueError("j must be positive")
    if j > n:
        return 0
    p = partition_count(n)
    return sum((k // j) * p[n - k] for k in range(j, n + 1))


def drawn_part_counts(n: int) -> Counter:
    """How many decorated partitions of n have drawn value k, for each k."""
    return Counter(d.drawn for d in enumerate_decorated(n) if d.drawn is not None)


# ---------------------------------------------------------------------------
# restricted solutions t_1 + m t_m + 2m t_2m + ... = l with m | t_1


@lru_cache(maxsize=None)
def restricted_solutions(l: int, m: int) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    """All ``(t_1, ((k, t_km), ...))`` with t_1 + sum_k k m t_km = l and m | t_1.

    Since m divides t_1, l - t_1 is a multiple of m and the t_km are the
    multiplicities of a partition of (l - t_1) / m.
    """
    if m < 2:
        raise ValueError(f"modulus m must be at least 2, got {m}")
    if l < 0:
        raise ValueError("l must be nonnegative")
    out = []
    for t1 in range(0, l + 1, m):
        rest = l - t1
        if rest % m:
            continue
        for mu in all_partitions(rest // m):
            out.append((t1, mu.mult))
    return tuple(out)


def _multiple_form(mult: tuple[tuple[int, int], ...]) -> LinearForm:
    # x_1 t_m + x_2 t_2m + ...
    return LinearForm(mult)


def _floor_form(t1: int, m: int) -> LinearForm:
    # x_1 floor(t_1/m) + x_2 floor(t_1/2m) + ...
    return LinearForm({k: t1 // (k * m) for k in range(1, t1 // m + 1)})


def restricted_sides(l: int, m: int) -> tuple[LinearForm, LinearForm]:
    sols = restricted_solutions(l, m)
    return (
        lsum(_multiple_form(mult) for _, mult in sols),
        lsum(_floor_form(t1, m) for t1, _ in sols),
    )


def check_e2(l: int, m: int) -> IdentityReport:
    lhs, rhs = restricted_sides(l, m)
    return IdentityReport("e-new-2", l, m, lhs, rhs, lhs == rhs)


def full_sides(n: int, m: int) -> tuple[LinearForm, LinearForm]:
    """sum over P_n of (x_1 t_m + x_2 t_2m + ...) and of
    (x_1 floor(t_1/m) + x_2 floor(t_1/2m) + ...)."""
    left, right = [], []
    for lam in all_partitions(n):
        left.append(LinearForm((i // m, t) for i, t in lam.mult if i % m == 0))
        right.append(_floor_form(lam.t(1), m))
    return lsum(left), lsum(right)


def check_e1(n: int, m: int) -> IdentityReport:
    if m < 2:
        raise ValueError(f"modulus m must be at least 2, got {m}")
    lhs, rhs = full_sides(n, m)
    return IdentityReport("e-new-1", n, m, lhs, rhs, lhs == rhs)


def check_convolution(n: int, m: int, variant: str = "e-new-4") -> IdentityReport:
    """Compare the P_n side of e-new-1 with sum_l p_m(n-l) * (restricted side at l).

    ``variant`` picks the t_km side (e-new-4) or the floor side (e-new-5).
    """
    if m < 2:
        raise ValueError(f"modulus m must be at least 2, got {m}")
    index = {"e-new-4": 0, "e-new-5": 1}[variant]
    pm = restricted_count(n, m)
    lhs = full_sides(n, m)[index]
    rhs = lsum(pm[n - l] * restricted_sides(l, m)[index] for l in range(n + 1))
    return IdentityReport(variant, n, m, lhs, rhs, lhs == rhs)
