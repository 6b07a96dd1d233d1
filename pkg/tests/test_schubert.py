"""Tests for the partition-based pairing oracle."""

import random
from math import comb

import pytest

from abelianize.schubert import (
    normalize_partition,
    oracle_betti,
    oracle_chern_pairing,
    partitions_in_box,
    pieri_e_multiply,
)


class TestPartitions:
    def test_normalize(self):
        assert normalize_partition([2, 1, 0, 0]) == (2, 1)
        assert normalize_partition([]) == ()
        with pytest.raises(ValueError):
            normalize_partition([1, 2])
        with pytest.raises(ValueError):
            normalize_partition([2, -1])

    def test_box_enumeration(self):
        assert sorted(partitions_in_box(2, 2, 2)) == [(1, 1), (2,)]
        assert list(partitions_in_box(2, 2, 0)) == [()]
        assert list(partitions_in_box(2, 2, 5)) == []


class TestPieri:
    def test_single_box(self):
        assert pieri_e_multiply({(): 1}, 1, (2, 2)) == {(1,): 1}

    def test_vertical_pair(self):
        assert pieri_e_multiply({(): 1}, 2, (2, 2)) == {(1, 1): 1}

    def test_full_box_dies(self):
        assert pieri_e_multiply({(2, 2): 1}, 1, (2, 2)) == {}

    def test_branching(self):
        # adding one box to (1) inside a 2x2 box: (2) or (1,1)
        assert pieri_e_multiply({(1,): 1}, 1, (2, 2)) == {(2,): 1, (1, 1): 1}

    def test_index_range(self):
        with pytest.raises(ValueError):
            pieri_e_multiply({(): 1}, 3, (2, 2))
        with pytest.raises(ValueError):
            pieri_e_multiply({(): 1}, 0, (2, 2))

    def test_hand_chain_sigma1_fourth(self):
        # sigma1^4 on G(2,4), one Pieri step at a time
        box = (2, 2)
        c = {(): 1}
        c = pieri_e_multiply(c, 1, box)
        assert c == {(1,): 1}
        c = pieri_e_multiply(c, 1, box)
        assert c == {(2,): 1, (1, 1): 1}
        c = pieri_e_multiply(c, 1, box)
        assert c == {(2, 1): 2}
        c = pieri_e_multiply(c, 1, box)
        assert c == {(2, 2): 2}


class TestOraclePairing:
    def test_examples(self):
        assert oracle_chern_pairing(2, 4, (4, 0)) == 2
        assert oracle_chern_pairing(2, 4, (0, 2)) == 1
        assert oracle_chern_pairing(2, 4, (2, 1)) == 1
        assert oracle_chern_pairing(1, 5, (4,)) == 1

    def test_degree_mismatch_is_zero(self):
        assert oracle_chern_pairing(2, 4, (1, 1)) == 0
        assert oracle_chern_pairing(2, 4, (0, 0)) == 0

    def test_point_quotient(self):
        assert oracle_chern_pairing(3, 3, (0, 0, 0)) == 1

    def test_arity_checked(self):
        with pytest.raises(ValueError):
            oracle_chern_pairing(2, 4, (4,))
        with pytest.raises(ValueError):
            oracle_chern_pairing(2, 4, (-1, 0))

    def test_order_independence(self):
        # the Schubert ring is commutative: Pieri steps commute
        rng = random.Random(4242)
        box = (3, 3)
        steps = [1, 1, 2, 2, 3]  # total degree 9 = 3*(6-3)
        reference = None
        for _ in range(6):
            rng.shuffle(steps)
            c = {(): 1}
            for i in steps:
                c = pieri_e_multiply(c, i, box)
            value = c.get((3, 3, 3), 0)
            if reference is None:
                reference = value
            assert value == reference


class TestOracleBetti:
    def test_examples(self):
        assert oracle_betti(2, 4) == [1, 1, 2, 1, 1]
        assert oracle_betti(1, 5) == [1, 1, 1, 1, 1]
        assert oracle_betti(2, 5) == [1, 1, 2, 2, 2, 1, 1]

    def test_totals_and_palindromes(self):
        for k in range(1, 4):
            for n in range(k, 8):
                betti = oracle_betti(k, n)
                assert sum(betti) == comb(n, k)
                assert betti == betti[::-1]
