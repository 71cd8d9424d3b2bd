"""Exit criteria. Each test records one pass/fail line, printed in the
terminal summary under "acceptance criteria"."""

import random
import time

from partition_identities import cli
from partition_identities import identities as ids
from partition_identities.counting import partition_count, restricted_count
from partition_identities.decorated import (
    LinearForm,
    check_convolution,
    check_e2,
    check_e3,
    coefficient_formula,
    drawn_part_counts,
    parse_decorated,
    weight_W,
    weight_Wtilde,
)
from partition_identities.partitions import Partition, all_partitions, enumerate_partitions
from partition_identities.statistics import stat_vector
from partition_identities.transforms import sigma, sigma_inv

from conftest import ACCEPTANCE_LINES

MODULI = range(2, 7)
MERCA_TOL = 1e-9
Z_SEED = 20240501


def record(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_01_bijection():
    start = time.perf_counter()
    bad = []
    for n in range(0, 26):
        parts = all_partitions(n)
        for m in MODULI:
            images = [sigma(lam, m) for lam in parts]
            ok = (
                all(mu.n == n for mu in images)
                and set(images) == set(parts)
                and len(set(images)) == len(parts)
                and all(sigma_inv(mu, m) == lam for lam, mu in zip(parts, images))
            )
            if not ok:
                bad.append((n, m))
    elapsed = time.perf_counter() - start
    record(1, "sigma_m permutes P_n, inverse round-trips, n<=25, m=2..6",
           not bad and elapsed < 30, f"{elapsed:.1f}s, failures={bad[:3]}")


def test_criterion_02_transport():
    bad = []
    for n in range(1, 26):
        for m in MODULI:
            for lam in all_partitions(n):
                src = stat_vector(lam, m)
                img = stat_vector(sigma(lam, m), m)
                alpha = src.alpha + (0,) * (n - len(src.alpha))
                if alpha != img.alpha_floor or src.gamma_o != img.gamma_d:
                    bad.append((n, m, lam.parts))
    record(2, "alpha_k(l)=alpha'_k(sigma(l)), gamma(l)=gamma'(sigma(l)), n<=25, m=2..6",
           not bad, f"failures={len(bad)}")


def test_criterion_03_per_k():
    checks = fails = 0
    for n in range(1, 26):
        for m in range(1, 7):
            for k in range(1, -(-n // m) + 1):
                for fn in (ids.check_per_k, ids.check_per_k_first, ids.check_per_k_signed):
                    checks += 1
                    fails += not fn(n, m, k).passed
    record(3, "per-k identities c-new-2/3/4 exact, n<=25, m=1..6", fails == 0,
           f"{checks} checks, {fails} failures")


def test_criterion_04_signed_beta_gamma():
    checks = fails = 0
    for n in range(1, 26):
        for m in range(1, 7):
            for sign in (1, -1):
                for variant in ids.AM_VARIANTS:
                    checks += 1
                    fails += not ids.check_am_general(n, m, sign, variant).passed
    # m = 2 instances against the original statements, term by term
    m2_ok = True
    for n in range(1, 26):
        rows = [(0,) + lam.dense() for lam in all_partitions(n)]
        for sign in (1, -1):
            l1 = sum(sign ** sum(t[2::2]) * sum(k * x for k, x in enumerate(t[2::2], 1)) for t in rows)
            r1 = sum(sign ** sum(x // 2 for x in t) * sum(i * (t[i] // 2) for i in range(1, n + 1)) for t in rows)
            l2 = sum(sign ** sum(t[2::2]) * sum(i * t[i] for i in range(1, n + 1, 2)) for t in rows)
            r2 = sum(sign ** sum(x // 2 for x in t) * sum(i * (t[i] % 2) for i in range(1, n + 1)) for t in rows)
            a1 = ids.check_am_general(n, 2, sign, "a-new-1")
            a2 = ids.check_am_general(n, 2, sign, "a-new-2")
            m2_ok &= (a1.lhs, a1.rhs, a2.lhs, a2.rhs) == (l1, r1, l2, r2) and l1 == r1 and l2 == r2
    record(4, "a-new-1/a-new-2 exact, n<=25, m=1..6, both signs; m=2 equals am-1/am-2",
           fails == 0 and m2_ok, f"{checks} checks, {fails} failures, m2 match={m2_ok}")


def test_criterion_05_merca_numeric():
    rng = random.Random(Z_SEED)
    zs = [ids.random_complex_z(rng) for _ in range(20)]
    assert all(abs(z) <= 2 for z in zs)
    checks = fails = 0
    worst = 0.0
    for n in range(1, 21):
        for m in MODULI:
            for sign in (1, -1):
                for variant in ids.MERCA_VARIANTS:
                    for z in zs:
                        r = ids.check_merca(n, m, z, sign, variant, tol=MERCA_TOL)
                        checks += 1
                        fails += not r.passed
                        worst = max(worst, r.residual / (1 + abs(r.lhs)))
                    for z in (0, 1, 2, 3):
                        r = ids.check_merca(n, m, z, sign, variant)
                        checks += 1
                        fails += not (r.passed and isinstance(r.lhs, int) and r.lhs == r.rhs)
    record(5, "m-1/m-2/m-3 at 20 seeded |z|<=2 (rel tol 1e-9) and exactly at z=0..3",
           fails == 0, f"{checks} checks, worst rel residual {worst:.1e}")


def test_criterion_06_polynomial_evaluation():
    checks = fails = 0
    for n in range(1, 16):
        for m in range(1, 7):
            for seed in range(100):
                checks += 2
                fails += not ids.check_bnew1_eval(n, m, seed=seed).passed
                fails += not ids.check_dnew1_eval(n, m, seed=seed).passed
    record(6, "b-new-1 and d-new-1 exact at 100 seeded rational points, n<=15, m<=6",
           fails == 0, f"{checks} checks, {fails} failures")


def test_criterion_07_decorated():
    bad = []
    for n in range(1, 26):
        p = partition_count(n)
        r = check_e3(n)
        if not r.passed:
            bad.append(("e3", n))
        expected = LinearForm({j: coefficient_formula(n, j) for j in range(1, n + 1)})
        if r.lhs != expected or r.rhs != expected:
            bad.append(("coeff", n))
        counts = drawn_part_counts(n)
        if any(counts[k] != p[n - k] for k in range(1, n + 1)):
            bad.append(("drawn", n))
    record(7, "e-new-3 LinearForm identity, coefficient formula, drawn counts, n<=25",
           not bad, f"failures={bad[:3]}")


def test_criterion_08_refinement():
    bad = [(l, m) for l in range(0, 31) for m in MODULI if not check_e2(l, m).passed]
    bad += [
        (n, m, v)
        for n in range(1, 26)
        for m in MODULI
        for v in ("e-new-4", "e-new-5")
        if not check_convolution(n, m, v).passed
    ]
    record(8, "e-new-2 for l<=30 and e-new-4/5 for n<=25, m=2..6", not bad, f"failures={bad[:3]}")


def test_criterion_09_counting_oracle():
    p = partition_count(30)
    enum_ok = all(p[n] == sum(1 for _ in enumerate_partitions(n)) for n in range(31))
    pm_ok = True
    for m in MODULI:
        table = restricted_count(25, m)
        for n in range(26):
            filtered = sum(
                1 for lam in all_partitions(n) if all(i % m for i, _ in lam.mult) and lam.t(1) < m
            )
            pm_ok &= table[n] == filtered
    record(9, "p(n) recurrence = enumeration n<=30; p_m(n) DP = filter n<=25, m=2..6",
           enum_ok and pm_ok, f"p(30)={p[30]}")


MAP_GOLDEN = """\
map: sigma
m: 3
source: 6,5,4,4,3,3,2,2,2,1,1,1
o-part: 5,4,4,2,2,2,1,1,1
e-part: 6,3,3
d-part: 6,5,4,4,3
n-part: 2,2,2,1,1,1,1,1,1
image: 6,5,4,4,3,2,2,2,1,1,1,1,1,1
"""
MAP_INV_GOLDEN = """\
map: sigma_inv
m: 3
source: 6,5,4,4,3,2,2,2,1,1,1,1,1,1
d-part: 6,5,4,4,3
n-part: 2,2,2,1,1,1,1,1,1
o-part: 5,4,4,2,2,2,1,1,1
e-part: 6,3,3
image: 6,5,4,4,3,3,2,2,2,1,1,1
"""


def test_criterion_10_golden_examples(capsys):
    checks = []

    def cli_out(*argv):
        code = cli.main(list(argv))
        out = capsys.readouterr().out
        return code, out

    code, out = cli_out("map", "--m", "3", "--parts", "6,5,4,4,3,3,2,2,2,1,1,1")
    checks.append(code == 0 and out == MAP_GOLDEN)
    code, out = cli_out("map", "--m", "3", "--inverse", "--parts", "6,5,4,4,3,2,2,2,1,1,1,1,1,1")
    checks.append(code == 0 and out == MAP_INV_GOLDEN)

    code, out = cli_out("enumerate", "--n", "4", "--decorated", "--weights")
    lines = out.splitlines()
    checks.append(code == 0 and "2,1~,1\tW=x1 + x2\tW~=x1" in lines)
    checks.append("4~\tW=0\tW~=4*x1 + 2*x2 + x3 + x4" in lines)
    checks.append("3~,1\tW=x1\tW~=3*x1 + x2 + x3" in lines)
    checks.append("3,1\tW=x1 + x3\tW~=0" in lines)
    # same four values through the library
    checks.append(str(weight_W(parse_decorated("2,1~,1"))) == "x1 + x2")
    checks.append(str(weight_W(parse_decorated("4~"))) == "0")
    checks.append(str(weight_Wtilde(parse_decorated("3~,1"))) == "3*x1 + x2 + x3")
    checks.append(str(weight_Wtilde(parse_decorated("3,1"))) == "0")
    record(10, "worked sigma_3 examples and W/W~ examples through CLI map/enumerate",
           all(checks), f"{sum(checks)}/{len(checks)} golden checks")
