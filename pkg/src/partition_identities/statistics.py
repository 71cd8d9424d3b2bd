"""Partition statistics read off the multiplicity vector.

For a partition with multiplicities t_i and modulus m:

    alpha_k       = t_{km}                   alpha'_k     = floor(t_k / m)
    alpha_m       = sum_k alpha_k            alpha'_m     = sum_k alpha'_k
    beta_m        = sum_k k alpha_k          beta'_m      = sum_k k alpha'_k
    gamma_m       = sum of parts not divisible by m
    gamma'_m      = sum_i i <t_i>_m
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition
from .transforms import sigma


def residue(x: int, m: int) -> int:
    """Least nonnegative r with x = r (mod m)."""
    if m < 1:
        raise ValueError(f"modulus m must be positive, got {m}")
    return x % m


@dataclass(frozen=True)
class StatVector:
    m: int
    alpha: tuple[int, ...]
    alpha_floor: tuple[int, ...]
    gamma_o: int
    gamma_d: int
    beta: int
    beta_floor: int
    alpha_sum: int
    alpha_floor_sum: int

    def unprimed_key(self) -> tuple:
        """(alpha_1..alpha_n, gamma) with alpha padded to length n."""
        return _pad(self.alpha, len(self.alpha_floor)), self.gamma_o

    def primed_key(self) -> tuple:
        return self.alpha_floor, self.gamma_d


def _pad(seq: tuple[int, ...], length: int) -> tuple[int, ...]:
    return seq + (0,) * (length - len(seq))


def stat_vector(lam: Partition, m: int) -> StatVector:
    if m < 1:
        raise ValueError(f"modulus m must be positive, got {m}")
    n = lam.n
    counts = lam.counts()
    alpha = tuple(counts.get(k * m, 0) for k in range(1, n // m + 1))
    alpha_floor = tuple(counts.get(k, 0) // m for k in range(1, n + 1))
    gamma_o = sum(i * t for i, t in lam.mult if i % m)
    gamma_d = sum(i * (t % m) for i, t in lam.mult)
    return StatVector(
        m=m,
        alpha=alpha,
        alpha_floor=alpha_floor,
        gamma_o=gamma_o,
        gamma_d=gamma_d,
        beta=sum(k * a for k, a in enumerate(alpha, start=1)),
        beta_floor=sum(k * a for k, a in enumerate(alpha_floor, start=1)),
        alpha_sum=sum(alpha),
        alpha_floor_sum=sum(alpha_floor),
    )


def transport_check(lam: Partition, m: int) -> bool:
    """True iff alpha_k(lam) = alpha'_k(sigma_m(lam)) for every k and
    gamma_m(lam) = gamma'_m(sigma_m(lam))."""
    src = stat_vector(lam, m)
    img = stat_vector(sigma(lam, m), m)
    return src.unprimed_key() == img.primed_key()
