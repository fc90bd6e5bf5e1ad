import collections
import json

import pytest

from conftest import load_coeff_table, load_count_table
from quotbox.partitions import (
    GuardExceeded,
    MonomialIdeal,
    PlanePartition,
    box_partition_polynomial_dp,
    count_box_partitions,
    count_partition_pairs,
    enumerate_box_monomial_ideals,
    enumerate_plane_partitions,
    monomial_ideal_to_partition,
    partition_to_monomial_ideal,
)
from quotbox.series import box_product, macmahon


GOLDEN_COUNTS = load_count_table("plane_partition_counts.txt")
GOLDEN_BOXES = load_coeff_table("box_polynomials.txt")


def test_counts_match_golden():
    for n in range(11):
        assert len(enumerate_plane_partitions(n)) == GOLDEN_COUNTS[n]


def test_enumeration_guard():
    with pytest.raises(GuardExceeded):
        enumerate_plane_partitions(13)
    assert len(enumerate_plane_partitions(13, guard=13)) == 2485
    with pytest.raises(ValueError):
        enumerate_plane_partitions(-1)


def test_enumeration_is_sorted_and_unique():
    pps = enumerate_plane_partitions(5)
    assert pps == sorted(pps, key=lambda p: p.rows)
    assert len(set(pps)) == len(pps)
    assert all(p.size == 5 for p in pps)


def test_height_matrix_validation():
    with pytest.raises(ValueError):
        PlanePartition(((1, 2),))  # row increases
    with pytest.raises(ValueError):
        PlanePartition(((2,), (1, 1)))  # row longer than previous
    with pytest.raises(ValueError):
        PlanePartition(((1,), (2,)))  # column increases
    with pytest.raises(ValueError):
        PlanePartition(((1, 0),))  # zero height stored
    with pytest.raises(ValueError):
        PlanePartition(((),))  # empty row


def test_boxes_round_trip():
    for n in range(6):
        for p in enumerate_plane_partitions(n):
            assert PlanePartition.from_boxes(p.boxes()) == p
            assert len(p.boxes()) == p.size


def test_boxes_downward_closed():
    for p in enumerate_plane_partitions(5):
        bx = p.boxes()
        for (a, b, c) in bx:
            for d in range(3):
                pred = tuple(x - (i == d) for i, x in enumerate((a, b, c)))
                if min(pred) >= 0:
                    assert pred in bx


def test_from_boxes_rejects_gaps():
    with pytest.raises(ValueError):
        PlanePartition.from_boxes({(1, 0, 0)})
    with pytest.raises(ValueError):
        PlanePartition.from_boxes({(0, 0, 0), (0, 1, 1)})


def test_fits_in_box():
    p = PlanePartition(((2, 1), (1,)))
    assert p.fits_in_box((2, 2, 2))
    assert not p.fits_in_box((1, 2, 2))
    assert not p.fits_in_box((2, 2, 1))
    assert PlanePartition(()).fits_in_box((1, 1, 1))


def test_partition_serialization():
    p = PlanePartition(((2, 1),))
    triples = p.to_triples()
    assert triples == sorted(triples)
    assert PlanePartition.from_json(p.to_json()) == p
    assert json.loads(PlanePartition(()).to_json()) == []


def test_count_box_small():
    assert [count_box_partitions((1, 1, 1), n) for n in range(3)] == [1, 1, 0]
    assert count_box_partitions((2, 2, 2), 4) == 4
    with pytest.raises(ValueError):
        count_box_partitions((1, 1, 1), -1)
    with pytest.raises(ValueError):
        count_box_partitions((0, 1, 1), 0)


def test_count_box_matches_golden():
    for v, coeffs in GOLDEN_BOXES.items():
        for n, c in enumerate(coeffs):
            assert count_box_partitions(v, n) == c
        assert count_box_partitions(v, len(coeffs)) == 0


def test_dp_matches_golden():
    for v, coeffs in GOLDEN_BOXES.items():
        assert list(box_partition_polynomial_dp(v).coeffs) == coeffs


def test_dp_matches_product_beyond_golden():
    for v in [(3, 3, 2), (4, 2, 2), (1, 4, 3)]:
        assert box_partition_polynomial_dp(v) == box_product(v)


def test_dp_state_guard():
    with pytest.raises(GuardExceeded):
        box_partition_polynomial_dp((1, 15, 15))
    # explicit guard override refuses even small boxes
    with pytest.raises(GuardExceeded):
        box_partition_polynomial_dp((2, 2, 2), state_guard=3)


def test_monomial_ideal_validation():
    with pytest.raises(ValueError):
        MonomialIdeal(((1, 0, 0), (2, 0, 0)))  # comparable pair
    with pytest.raises(ValueError):
        MonomialIdeal(((-1, 0, 0),))
    with pytest.raises(ValueError):
        MonomialIdeal(((2, 0, 0),), box=(2, 2, 2))  # sits on the box wall
    # generators get sorted to a canonical order
    ideal = MonomialIdeal(((0, 1, 0), (1, 0, 0)))
    assert ideal.generators == ((0, 1, 0), (1, 0, 0))


def test_colength_small():
    assert MonomialIdeal(((0, 0, 0),)).colength() == 0
    assert MonomialIdeal((), box=(2, 2, 2)).colength() == 8
    staircase = MonomialIdeal(
        ((2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1))
    )
    assert staircase.colength() == 3
    with pytest.raises(ValueError):
        MonomialIdeal(((1, 0, 0),)).colength()  # infinite in two directions


def test_contains():
    ideal = MonomialIdeal(((1, 1, 0), (0, 0, 2)))
    assert ideal.contains((2, 1, 0))
    assert not ideal.contains((1, 0, 1))
    boxed = MonomialIdeal(((1, 1, 0),), box=(2, 2, 2))
    assert boxed.contains((0, 0, 5))  # zero monomial in the quotient


def test_bijection_round_trip_full_ring():
    for n in range(7):
        for p in enumerate_plane_partitions(n):
            ideal = partition_to_monomial_ideal(p)
            assert ideal.colength() == n
            assert monomial_ideal_to_partition(ideal) == p


def test_bijection_round_trip_boxed():
    v = (2, 2, 2)
    for n in range(5):
        for p in enumerate_plane_partitions(n):
            if not p.fits_in_box(v):
                continue
            ideal = partition_to_monomial_ideal(p, box=v)
            assert ideal.box == v
            assert ideal.colength() == n
            assert monomial_ideal_to_partition(ideal) == p


def test_bijection_rejects_oversized():
    tall = PlanePartition(((3,),))
    with pytest.raises(ValueError):
        partition_to_monomial_ideal(tall, box=(1, 1, 2))


def test_generators_are_minimal():
    p = PlanePartition(((2, 1), (1,)))
    ideal = partition_to_monomial_ideal(p)
    lam = p.boxes()
    for g in ideal.generators:
        assert g not in lam
        for d in range(3):
            pred = tuple(x - (i == d) for i, x in enumerate(g))
            if min(pred) >= 0:
                assert pred in lam


def test_ideal_serialization():
    ideal = MonomialIdeal(((1, 1, 0),), box=(2, 2, 2))
    again = MonomialIdeal.from_json(ideal.to_json())
    assert again == ideal
    bare = MonomialIdeal(((0, 0, 0),))
    assert MonomialIdeal.from_json(bare.to_json()) == bare


def test_enumerate_box_ideals():
    assert len(enumerate_box_monomial_ideals((1, 1, 1))) == 2
    ideals = enumerate_box_monomial_ideals((2, 2, 2))
    assert len(ideals) == 20
    by_len = collections.Counter(i.colength() for i in ideals)
    assert [by_len[n] for n in range(9)] == GOLDEN_BOXES[(2, 2, 2)]
    with pytest.raises(GuardExceeded):
        enumerate_box_monomial_ideals((3, 3, 3), guard=1 << 10)


def test_pair_counts():
    assert [count_partition_pairs(n) for n in range(6)] == [1, 2, 7, 18, 47, 110]
    m = macmahon(8)
    m2 = m * m
    for n in range(9):
        assert count_partition_pairs(n) == m2[n]
    with pytest.raises(GuardExceeded):
        count_partition_pairs(13)
