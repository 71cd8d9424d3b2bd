from collections import Counter

import pytest
from hypothesis import given, strategies as st

from partition_identities.partitions import Partition, all_partitions, decompose_dn, decompose_oe
from partition_identities.statistics import transport_check
from partition_identities.transforms import phi_do, phi_od, psi_en, psi_ne, sigma, sigma_inv

from conftest import MODULI, part_lists

WORKED_SOURCE = (6, 5, 4, 4, 3, 3, 2, 2, 2, 1, 1, 1)
WORKED_IMAGE = (6, 5, 4, 4, 3, 2, 2, 2, 1, 1, 1, 1, 1, 1)


def merge_by_scanning(parts, m):
    """Literal Glaisher merge: repeatedly find any value with >= m copies."""
    parts = list(parts)
    while True:
        counts = Counter(parts)
        heavy = [v for v, t in counts.items() if t >= m]
        if not heavy:
            return tuple(sorted(parts, reverse=True))
        v = heavy[0]
        for _ in range(m):
            parts.remove(v)
        parts.append(v * m)


def test_phi_od_examples():
    assert phi_od((5, 4, 4, 2, 2, 2, 1, 1, 1), 3) == (6, 5, 4, 4, 3)
    assert phi_od((), 2) == ()
    assert phi_od((1, 1, 1, 1), 2) == (4,)


def test_phi_do_examples():
    assert phi_do((6, 5, 4, 4, 3), 3) == (5, 4, 4, 2, 2, 2, 1, 1, 1)
    assert phi_do((5,), 2) == (5,)
    assert phi_do((4,), 2) == (1, 1, 1, 1)


def test_psi_examples():
    assert psi_en((6, 3, 3), 3) == (2, 2, 2, 1, 1, 1, 1, 1, 1)
    assert psi_en((), 2) == ()
    assert psi_en((6,), 2) == (3, 3)
    assert psi_ne((2, 2, 2, 1, 1, 1, 1, 1, 1), 3) == (6, 3, 3)
    assert psi_ne((7, 7), 2) == (14,)
    assert psi_ne((), 3) == ()


def test_psi_en_is_single_pass():
    assert psi_en((9,), 3) == (3, 3, 3)


@pytest.mark.parametrize(
    "fn, parts, m",
    [
        (phi_od, (3, 1), 3),
        (phi_do, (2, 2), 2),
        (psi_en, (4, 3), 2),
        (psi_ne, (2, 2, 1), 2),
        (phi_od, (1,), 1),
    ],
)
def test_maps_reject_bad_input(fn, parts, m):
    with pytest.raises(ValueError):
        fn(parts, m)


@given(part_lists(), st.integers(2, 6))
def test_phi_od_matches_literal_merging(parts, m):
    o_part = tuple(p for p in parts if p % m)
    assert phi_od(o_part, m) == merge_by_scanning(o_part, m)


@given(part_lists(), st.integers(2, 6))
def test_phi_maps_are_mutually_inverse(parts, m):
    o_part = tuple(p for p in parts if p % m)
    image = phi_od(o_part, m)
    assert all(image.count(v) < m for v in image)
    assert sum(image) == sum(o_part)
    assert phi_do(image, m) == o_part
    d_part = decompose_dn(parts, m).d_part
    back = phi_do(d_part, m)
    assert all(p % m for p in back)
    assert phi_od(back, m) == d_part


@given(part_lists(), st.integers(2, 6))
def test_psi_maps_are_mutually_inverse(parts, m):
    e_part = tuple(p * m for p in parts)
    image = psi_en(e_part, m)
    assert all(image.count(v) % m == 0 for v in image)
    assert psi_ne(image, m) == e_part
    assert psi_en(psi_ne(image, m), m) == image


def test_sigma_worked_example():
    lam = Partition.from_parts(WORKED_SOURCE)
    assert sigma(lam, 3).parts == WORKED_IMAGE
    assert sigma_inv(Partition.from_parts(WORKED_IMAGE), 3).parts == WORKED_SOURCE


def test_sigma_empty_partition():
    for m in MODULI:
        assert sigma(Partition(0), m) == Partition(0)
        assert sigma_inv(Partition(0), m) == Partition(0)


def test_sigma_permutes_p6():
    parts = all_partitions(6)
    assert sorted(sigma(lam, 2).parts for lam in parts) == sorted(lam.parts for lam in parts)


def test_sigma_m1_is_identity():
    for lam in all_partitions(8):
        assert sigma(lam, 1) == lam == sigma_inv(lam, 1)
    with pytest.raises(ValueError):
        sigma(Partition(0), 0)


@pytest.mark.parametrize("m", MODULI)
def test_round_trip_and_bijectivity(m):
    for n in range(0, 21):
        parts = all_partitions(n)
        images = [sigma(lam, m) for lam in parts]
        assert all(mu.n == n for mu in images)
        assert set(images) == set(parts)
        for lam, mu in zip(parts, images):
            assert sigma_inv(mu, m) == lam
            assert sigma(sigma_inv(lam, m), m) == lam


@pytest.mark.parametrize("m", MODULI)
def test_image_structure(m):
    for n in range(1, 16):
        for lam in all_partitions(n):
            o_part, e_part, _ = decompose_oe(lam.parts, m)
            d_part, n_part, _ = decompose_dn(sigma(lam, m).parts, m)
            assert d_part == phi_od(o_part, m)
            assert n_part == psi_en(e_part, m)


@given(part_lists(max_part=40, max_len=25), st.integers(2, 9))
def test_sigma_round_trip_and_transport_on_random_partitions(parts, m):
    lam = Partition.from_parts(parts)
    mu = sigma(lam, m)
    assert mu.n == lam.n
    assert sigma_inv(mu, m) == lam
    assert sigma(sigma_inv(lam, m), m) == lam
    assert transport_check(lam, m)
