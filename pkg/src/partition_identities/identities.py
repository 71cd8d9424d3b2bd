"""Brute-force checkers for the partition identities.

Every checker sums over the full set P_n and returns an ``IdentityReport``
carrying both side values. Exact checks compare Python ints or Fractions;
complex-z checks of the Merca family compare floats within a relative
tolerance.

Identity tags:

    bijection, transport            sigma_m is a permutation / transports stats
    c-new-2, c-new-3, c-new-4       per-k sums (plain, k->1 form, signed)
    m-1, m-2, m-3                   complex-z weighted families
    a-new-1, a-new-2                signed beta / gamma sums
    b-new-1, b-new-1-transport      multivariate generating polynomial
    d-new-1, d-new-2, d-new-3       trivariate polynomial and its derivatives
"""

from __future__ import annotations

import cmath
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Any, Sequence

import numpy as np

from .partitions import all_partitions
from .statistics import StatVector, stat_vector, transport_check
from .transforms import sigma, sigma_inv

MERCA_TOL = 1e-9
MERCA_VARIANTS = ("m-1", "m-2", "m-3")
AM_VARIANTS = ("a-new-1", "a-new-2")


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    n: int
    m: int | None
    lhs: Any
    rhs: Any
    passed: bool
    residual: float = 0.0
    k: int | None = None
    sign: int | None = None
    z: Any = None
    point: Any = None
    seed: int | None = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def sort_key(self) -> tuple:
        return (
            self.identity,
            self.n,
            -1 if self.m is None else self.m,
            -1 if self.k is None else self.k,
            0 if self.sign is None else self.sign,
            str(self.z),
            -1 if self.seed is None else self.seed,
            str(self.point),
        )


def _exact(identity: str, n: int, m: int, lhs, rhs, **params) -> IdentityReport:
    return IdentityReport(identity, n, m, lhs, rhs, lhs == rhs, 0.0, **params)


@lru_cache(maxsize=None)
def dense_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Multiplicity rows ``(0, t_1, ..., t_n)`` for every partition of n, so
    that ``row[i]`` is t_i."""
    return tuple((0,) + lam.dense() for lam in all_partitions(n))


@lru_cache(maxsize=None)
def stat_table(n: int, m: int) -> tuple[StatVector, ...]:
    return tuple(stat_vector(lam, m) for lam in all_partitions(n))


def _check_nm(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got n={n}, m={m}")


def _sgn(total: int) -> int:
    return -1 if total % 2 else 1


def _alpha_total(t: Sequence[int], m: int) -> int:
    return sum(t[m::m])


def _alpha_floor_total(t: Sequence[int], m: int) -> int:
    return sum(x // m for x in t)


# ---------------------------------------------------------------------------
# bijection and transport


def check_bijection(n: int, m: int) -> IdentityReport:
    """sigma_m permutes P_n, preserves weight, and sigma_m^-1 undoes it."""
    parts = all_partitions(n)
    images = [sigma(lam, m) for lam in parts]
    weight_ok = all(mu.n == n for mu in images)
    round_trip = all(sigma_inv(mu, m) == lam for lam, mu in zip(parts, images))
    other_way = all(sigma(sigma_inv(lam, m), m) == lam for lam in parts)
    distinct = len(set(images))
    passed = weight_ok and round_trip and other_way and set(images) == set(parts)
    return IdentityReport("bijection", n, m, distinct, len(parts), passed)


def check_transport(n: int, m: int) -> IdentityReport:
    parts = all_partitions(n)
    good = sum(transport_check(lam, m) for lam in parts)
    return _exact("transport", n, m, good, len(parts))


# ---------------------------------------------------------------------------
# per-k identities


def check_per_k(n: int, m: int, k: int) -> IdentityReport:
    """sum t_{km} = sum floor(t_k / m) over P_n."""
    _check_nm(n, m)
    rows = dense_table(n)
    km = k * m
    lhs = sum(t[km] for t in rows) if km <= n else 0
    rhs = sum(t[k] // m for t in rows) if k <= n else 0
    return _exact("c-new-2", n, m, lhs, rhs, k=k)


def check_per_k_first(n: int, m: int, k: int) -> IdentityReport:
    """sum t_{km} = sum floor(t_1 / km) over P_n."""
    _check_nm(n, m)
    rows = dense_table(n)
    km = k * m
    lhs = sum(t[km] for t in rows) if km <= n else 0
    rhs = sum(t[1] // km for t in rows)
    return _exact("c-new-3", n, m, lhs, rhs, k=k)


def check_per_k_signed(n: int, m: int, k: int) -> IdentityReport:
    """Signed per-k sums with signs (-1)^(t_m + t_2m + ...) and
    (-1)^(sum floor(t_i / m))."""
    _check_nm(n, m)
    rows = dense_table(n)
    km = k * m
    lhs = sum(_sgn(_alpha_total(t, m)) * t[km] for t in rows) if km <= n else 0
    rhs = sum(_sgn(_alpha_floor_total(t, m)) * (t[k] // m) for t in rows) if k <= n else 0
    return _exact("c-new-4", n, m, lhs, rhs, k=k)


# ---------------------------------------------------------------------------
# complex-z family


def _is_integral(z) -> bool:
    if isinstance(z, bool):
        return False
    if isinstance(z, Rational):
        return Fraction(z).denominator == 1
    return False


def power(k: int, z):
    """k^z: exact for integral z, otherwise exp(z log k) in complex floats."""
    if _is_integral(z):
        z = int(z)
        return k**z if z >= 0 else Fraction(1, k ** (-z))
    return cmath.exp(complex(z) * math.log(k))


def merca_weights(n: int, z, sign: int) -> list:
    """``w[k] = sign^(k+1) * k^z`` for k = 1..n (index 0 unused)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return [0] + [(sign ** (k + 1)) * power(k, z) for k in range(1, n + 1)]


def _merca_sides_per_partition(t: Sequence[int], n: int, m: int, w: Sequence, variant: str):
    left = sum(w[k] * t[k * m] for k in range(1, n // m + 1))
    if variant == "m-2":
        right = sum(w[k] * (t[1] // (k * m)) for k in range(1, t[1] // m + 1))
    else:
        right = sum(w[k] * (t[k] // m) for k in range(1, n + 1))
    if variant == "m-3":
        left *= _sgn(_alpha_total(t, m))
        right *= _sgn(_alpha_floor_total(t, m))
    return left, right


@lru_cache(maxsize=None)
def _merca_matrices(n: int, m: int, variant: str) -> tuple[np.ndarray, np.ndarray]:
    """Per-partition integer coefficient rows so that each side's per-partition
    value is ``row @ w[1:]``."""
    rows = dense_table(n)
    left = np.zeros((len(rows), n), dtype=np.int64)
    right = np.zeros((len(rows), n), dtype=np.int64)
    for r, t in enumerate(rows):
        for k in range(1, n // m + 1):
            left[r, k - 1] = t[k * m]
        for k in range(1, n + 1):
            right[r, k - 1] = t[1] // (k * m) if variant == "m-2" else t[k] // m
        if variant == "m-3":
            left[r] *= _sgn(_alpha_total(t, m))
            right[r] *= _sgn(_alpha_floor_total(t, m))
    return left, right


def _csum(values) -> complex:
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


def check_merca(n: int, m: int, z, sign: int, variant: str, tol: float = MERCA_TOL) -> IdentityReport:
    """Evaluate both sides of the Merca identity ``variant`` at exponent ``z``.

    Integral ``z`` is evaluated exactly (ints, or Fractions for z < 0);
    anything else uses complex floats and passes when
    ``|lhs - rhs| <= tol * (1 + |lhs|)``.
    """
    _check_nm(n, m)
    if variant not in MERCA_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    w = merca_weights(n, z, sign)
    if _is_integral(z):
        lhs = rhs = 0
        for t in dense_table(n):
            left, right = _merca_sides_per_partition(t, n, m, w, variant)
            lhs += left
            rhs += right
        return _exact(variant, n, m, lhs, rhs, sign=sign, z=int(z))
    left, right = _merca_matrices(n, m, variant)
    wv = np.array(w[1:], dtype=complex)
    lhs = _csum(left @ wv)
    rhs = _csum(right @ wv)
    residual = abs(lhs - rhs)
    passed = residual <= tol * (1 + abs(lhs))
    return IdentityReport(variant, n, m, lhs, rhs, passed, residual, sign=sign, z=complex(z))


def merca_by_linearity(n: int, m: int, z, sign: int, variant: str):
    """Both sides of a Merca identity as sum_k w_k * (exact per-k sum)."""
    per_k = {"m-1": check_per_k, "m-2": check_per_k_first, "m-3": check_per_k_signed}[variant]
    w = merca_weights(n, z, sign)
    lhs = rhs = 0
    for k in range(1, n + 1):
        report = per_k(n, m, k)
        lhs += w[k] * report.lhs
        rhs += w[k] * report.rhs
    return lhs, rhs


def random_complex_z(rng: random.Random, radius: float = 2.0) -> complex:
    """Uniform draw from the closed disk |z| <= radius."""
    r = radius * math.sqrt(rng.random())
    theta = rng.uniform(0.0, 2 * math.pi)
    return complex(r * math.cos(theta), r * math.sin(theta))


# ---------------------------------------------------------------------------
# signed beta / gamma sums


def _o_weight(t: Sequence[int], m: int) -> int:
    # sum_{i>=0} sum_{j=1}^{m-1} (im + j) t_{im+j}
    n = len(t) - 1
    total = 0
    for i in range(0, n // m + 1):
        for j in range(1, m):
            part = i * m + j
            if part <= n:
                total += part * t[part]
    return total


def check_am_general(n: int, m: int, sign: int, variant: str) -> IdentityReport:
    """Signed identities for beta (a-new-1) and gamma (a-new-2).

    For m = 2 and sign = -1 these are the two original Andrews-Merca
    identities, with the 2-residue of t playing the role of <t>_2.
    """
    _check_nm(n, m)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if variant not in AM_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    lhs = rhs = 0
    for t in dense_table(n):
        left_sign = sign ** _alpha_total(t, m)
        right_sign = sign ** _alpha_floor_total(t, m)
        if variant == "a-new-1":
            left = sum(k * t[k * m] for k in range(1, n // m + 1))
            right = sum(i * (t[i] // m) for i in range(1, n + 1))
        else:
            left = _o_weight(t, m)
            right = sum(i * (t[i] % m) for i in range(1, n + 1))
        lhs += left_sign * left
        rhs += right_sign * right
    return _exact(variant, n, m, lhs, rhs, sign=sign)


# ---------------------------------------------------------------------------
# generating polynomials


@lru_cache(maxsize=None)
def joint_distribution(n: int, m: int, primed: bool) -> Counter:
    """Counter of exponent tuples ``(alpha_1, ..., alpha_n, gamma)`` (or the
    primed statistics) over P_n: the monomials of the generating polynomial."""
    key = StatVector.primed_key if primed else StatVector.unprimed_key
    return Counter(
        tuple(alpha) + (gamma,) for alpha, gamma in map(key, stat_table(n, m))
    )


@lru_cache(maxsize=None)
def trivariate_distribution(n: int, m: int, primed: bool) -> Counter:
    """Counter of ``(alpha_m, beta_m, gamma_m)`` (or primed) over P_n."""
    if primed:
        return Counter((s.alpha_floor_sum, s.beta_floor, s.gamma_d) for s in stat_table(n, m))
    return Counter((s.alpha_sum, s.beta, s.gamma_o) for s in stat_table(n, m))


def evaluate_polynomial(monomials: Counter, values: Sequence) -> Fraction:
    """Exact value of sum_c count_c * prod_i values[i]^c[i] for rational values.

    Works over a common denominator so the inner loop is integer only.
    """
    values = [Fraction(v) for v in values]
    width = len(values)
    if not monomials:
        return Fraction(0)
    top = [max(e[i] for e in monomials) for i in range(width)]
    num_pow = [[v.numerator**e for e in range(top[i] + 1)] for i, v in enumerate(values)]
    den_pow = [[v.denominator**e for e in range(top[i] + 1)] for i, v in enumerate(values)]
    total = 0
    for exps, count in monomials.items():
        term = count
        for i, e in enumerate(exps):
            term *= num_pow[i][e] * den_pow[i][top[i] - e]
        total += term
    common = 1
    for i in range(width):
        common *= den_pow[i][top[i]]
    return Fraction(total, common)


def _evaluate_pair(left: Counter, right: Counter, values: Sequence) -> tuple[Fraction, Fraction]:
    return evaluate_polynomial(left, values), evaluate_polynomial(right, values)


def small_rational(rng: random.Random, span: int = 5) -> Fraction:
    """Nonzero rational with numerator and denominator drawn from [-span, span] minus 0."""
    choices = [v for v in range(-span, span + 1) if v]
    return Fraction(rng.choice(choices), rng.choice(choices))


def random_bnew1_point(n: int, seed: int) -> tuple[tuple[Fraction, ...], Fraction]:
    rng = random.Random(seed)
    xs = tuple(small_rational(rng) for _ in range(n))
    return xs, small_rational(rng)


def check_bnew1_eval(n: int, m: int, point=None, seed: int | None = None) -> IdentityReport:
    """Evaluate both generating polynomials in x_1..x_n, z at a rational point.

    ``point`` is ``(xs, z)``; when omitted it is drawn from ``seed``.
    """
    _check_nm(n, m)
    if point is None:
        if seed is None:
            raise ValueError("need either a point or a seed")
        point = random_bnew1_point(n, seed)
    xs, z = point
    xs = tuple(Fraction(x) for x in xs)
    if len(xs) != n:
        raise ValueError(f"need {n} x-values, got {len(xs)}")
    z = Fraction(z)
    lhs, rhs = _evaluate_pair(
        joint_distribution(n, m, False), joint_distribution(n, m, True), xs + (z,)
    )
    return _exact("b-new-1", n, m, lhs, rhs, point=(xs, z), seed=seed)


def check_bnew1_transport(n: int, m: int) -> IdentityReport:
    """Multiset equality of (alpha vector, gamma) and (alpha' vector, gamma')
    over P_n, i.e. equality of the generating polynomials coefficientwise."""
    _check_nm(n, m)
    left = joint_distribution(n, m, False)
    right = joint_distribution(n, m, True)
    return IdentityReport(
        "b-new-1-transport", n, m, sum(left.values()), sum(right.values()), left == right
    )


def random_dnew1_point(seed: int) -> tuple[Fraction, Fraction, Fraction]:
    rng = random.Random(seed)
    return small_rational(rng), small_rational(rng), small_rational(rng)


def check_dnew1_eval(n: int, m: int, x=None, y=None, z=None, seed: int | None = None) -> IdentityReport:
    """Evaluate sum x^alpha y^beta z^gamma against the primed version exactly."""
    _check_nm(n, m)
    if x is None or y is None or z is None:
        if seed is None:
            raise ValueError("need x, y, z or a seed")
        x, y, z = random_dnew1_point(seed)
    values = (Fraction(x), Fraction(y), Fraction(z))
    lhs, rhs = _evaluate_pair(
        trivariate_distribution(n, m, False), trivariate_distribution(n, m, True), values
    )
    return _exact("d-new-1", n, m, lhs, rhs, point=values, seed=seed)


def _derivative_at(monomials: Counter, index: int, x: int) -> int:
    # d/dy or d/dz of sum c x^a y^b z^g at y = z = 1
    return sum(count * exps[index] * x ** exps[0] for exps, count in monomials.items())


def check_dnew_derivative(n: int, m: int, sign: int, variable: str) -> IdentityReport:
    """Differentiate the trivariate polynomials in y (d-new-2) or z (d-new-3)
    at x = sign, y = z = 1.

    Passes only if the two derivatives agree with each other and with the
    directly summed sides of a-new-1 (for y) or a-new-2 (for z).
    """
    _check_nm(n, m)
    index, identity, direct_variant = {
        "y": (1, "d-new-2", "a-new-1"),
        "z": (2, "d-new-3", "a-new-2"),
    }[variable]
    lhs = _derivative_at(trivariate_distribution(n, m, False), index, sign)
    rhs = _derivative_at(trivariate_distribution(n, m, True), index, sign)
    direct = check_am_general(n, m, sign, direct_variant)
    matches = (lhs, rhs) == (direct.lhs, direct.rhs)
    return IdentityReport(
        identity, n, m, lhs, rhs, lhs == rhs and matches, sign=sign,
        extra={"direct_lhs": direct.lhs, "direct_rhs": direct.rhs},
    )
