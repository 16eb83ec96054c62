"""Enumeration oracles vs. the closed-form pipeline, over full domains."""
import pytest

from statecount.combinatorics import pair_fill_count
from statecount.janggi import jg_home_count, jg_positions
from statecount.oracle import (
    OracleBoundError,
    enum_camp_xq,
    enum_home_jg,
    enum_pair_fill,
    enum_positions_small,
    enum_side_xq,
    enum_soldiers_xq,
)
from statecount.xiangqi import (
    camp_classes,
    side_reserve,
    soldier_own_side,
    xq_positions,
)

from frozen import ENUM_JG_SMALL, ENUM_XQ_SMALL


class TestCampOracle:
    def test_reference_anchors(self):
        assert enum_camp_xq(2, 2).total == 1410
        assert enum_camp_xq(0, 2).by_shared_elephants == (86, 88, 9)
        assert enum_camp_xq(0, 0).total == 9

    def test_full_domain_equality(self):
        for a in range(3):
            for e in range(3):
                assert enum_camp_xq(a, e) == camp_classes(a, e)


class TestSoldierOracle:
    def test_reference_anchors(self):
        assert enum_soldiers_xq(0, 2) == 40
        assert enum_soldiers_xq(2, 5) == 8
        assert enum_soldiers_xq(1, 0) == 1

    def test_full_domain_equality(self):
        for blocked in range(3):
            for soldiers in range(6):
                assert enum_soldiers_xq(blocked, soldiers) == soldier_own_side(
                    10 - blocked, soldiers
                )


class TestSideOracle:
    def test_reference_anchors(self):
        assert enum_side_xq(44, 0) == 9
        assert enum_side_xq(35, 0) == 32560
        assert enum_side_xq(35, 1) == 0

    def test_full_domain_equality(self):
        for blanks in range(35, 45):
            for reserve in range(6):
                assert enum_side_xq(blanks, reserve) == side_reserve(blanks, reserve)


class TestHomeOracle:
    def test_reference_anchors(self):
        assert enum_home_jg(3, 4) == 2052
        assert enum_home_jg(1, 5) == 9
        assert enum_home_jg(8, 1) == 0

    def test_full_domain_equality(self):
        for n in range(1, 9):
            for k in range(6):
                assert enum_home_jg(n, k) == jg_home_count(n, k)


class TestPairFillOracle:
    def test_reference_anchors(self):
        assert enum_pair_fill(3, 3) == 24
        assert enum_pair_fill(4, 8) == 2520
        assert enum_pair_fill(2, 5) == 0

    def test_small_domain_equality(self):
        for m in range(5):
            for n in range(9):
                assert enum_pair_fill(m, n) == pair_fill_count(m, n)

    def test_eight_pair_disputed_entries(self):
        assert enum_pair_fill(8, 4) == pair_fill_count(8, 4) == 3864
        assert enum_pair_fill(8, 6) == pair_fill_count(8, 6) == 201600

    def test_bound_error_states_the_bound(self):
        with pytest.raises(OracleBoundError, match="20000000"):
            enum_pair_fill(8, 12)


class TestPositionsOracle:
    def test_xiangqi_small(self):
        counts = enum_positions_small("xiangqi", 4)
        assert counts == ENUM_XQ_SMALL
        for pieces, count in counts.items():
            assert count == xq_positions(90 - pieces)

    def test_janggi_small(self):
        counts = enum_positions_small("janggi", 4)
        assert counts == ENUM_JG_SMALL
        for pieces, count in counts.items():
            assert count == jg_positions(pieces)

    def test_janggi_three_piece_bound(self):
        assert enum_positions_small("janggi", 3) == {2: 81, 3: 11340}

    def test_bound_error(self):
        with pytest.raises(OracleBoundError):
            enum_positions_small("xiangqi", 5)
        with pytest.raises(OracleBoundError):
            enum_positions_small("janggi", 1)

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            enum_positions_small("chess", 3)
