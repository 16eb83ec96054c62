"""Staged exact count of Xiangqi piece placements.

The pipeline, in order:

1. ``camp_classes``: one player's king/advisors/elephants inside the camp,
   classified by how many elephants stand on the two fifth-rank sites shared
   with soldiers (those sites shrink the soldier zone).
2. ``soldier_own_side``: one player's soldiers on their own half, at most
   one per file.
3. ``side_exact`` / ``side_reserve``: the half-board occupancy grid, keyed
   by blank sites and soldiers used (exact) or soldiers still available
   (cumulative reserve).
4. ``xq_positions``: the two-player convolution, adding river-crossed
   soldiers on the opponent's blanks; indexed by total blank sites.
5. ``xq_grand_total``: chariots/horses/cannons (six within-pair-identical
   pairs) filled onto the remaining blanks.

Everything is recomputed from the geometry sets in :mod:`statecount.geometry`;
no table values are hard-coded.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

from .combinatorics import binom, pair_fill_count
from .geometry import zone

PALACE = zone("xiangqi", "A", "palace")
ADVISOR_SITES = zone("xiangqi", "A", "advisor_sites")
ELEPHANT_SITES = zone("xiangqi", "A", "elephant_sites")
SOLDIER_SITES = zone("xiangqi", "A", "soldier_own_side_sites")
SHARED_SITES = ELEPHANT_SITES & SOLDIER_SITES

HALF_SITES = 45
MAX_SOLDIERS = 5
MAX_CAMP_PIECES = 5  # king + up to two advisors + up to two elephants
MIN_SIDE_BLANKS = HALF_SITES - MAX_CAMP_PIECES - MAX_SOLDIERS  # 35
MAX_SIDE_BLANKS = HALF_SITES - 1  # 44: the king always occupies a site
HEAVY_PAIRS = 6  # two chariots, horses, cannons per player
BLANKS_RANGE = range(2 * MIN_SIDE_BLANKS, 2 * MAX_SIDE_BLANKS + 1)  # 70..88


@dataclass(frozen=True)
class CampClassRow:
    """Camp arrangement counts split by elephants on the shared sites."""

    advisors_used: int
    elephants_used: int
    by_shared_elephants: tuple[int, int, int]  # index = shared-site elephants

    @property
    def total(self) -> int:
        return sum(self.by_shared_elephants)


@lru_cache(maxsize=None)
def _elephant_subset_classes(elephants: int) -> dict[tuple[int, int], int]:
    """Count elephant-site subsets by (shared-site count, in-palace count)."""
    classes: dict[tuple[int, int], int] = {}
    for subset in combinations(sorted(ELEPHANT_SITES), elephants):
        key = (len(set(subset) & SHARED_SITES), len(set(subset) & PALACE))
        classes[key] = classes.get(key, 0) + 1
    return classes


@lru_cache(maxsize=None)
def camp_classes(advisors: int, elephants: int) -> CampClassRow:
    """Placements of king + identical advisors + identical elephants.

    Advisors occupy advisor sites (all inside the palace), elephants occupy
    the seven-point orbit, and the king takes any palace site not already
    occupied, so each advisor and each in-palace elephant removes one king
    choice.
    """
    advisor_ways = binom(len(ADVISOR_SITES), advisors)
    by_shared = [0, 0, 0]
    for (shared, in_palace), ways in _elephant_subset_classes(elephants).items():
        king_choices = len(PALACE) - advisors - in_palace
        by_shared[shared] += advisor_ways * ways * king_choices
    return CampClassRow(advisors, elephants, tuple(by_shared))


@lru_cache(maxsize=None)
def camp_by_piece_count(pieces_used: int) -> CampClassRow:
    """Aggregate camp rows over advisors + elephants + king = pieces_used."""
    by_shared = [0, 0, 0]
    for advisors in range(3):
        for elephants in range(3):
            if advisors + elephants + 1 == pieces_used:
                row = camp_classes(advisors, elephants)
                for shared in range(3):
                    by_shared[shared] += row.by_shared_elephants[shared]
    return CampClassRow(-1, -1, tuple(by_shared))


def soldier_own_side(blank_soldier_sites: int, soldiers: int) -> int:
    """Own-half soldier placements, at most one soldier per file.

    Each of the five files offers two ranks, except files whose fifth-rank
    site is occupied by an own elephant (10 - blank_soldier_sites of them),
    which offer one.
    """
    blocked = len(SOLDIER_SITES) - blank_soldier_sites
    free_files = len({s.file for s in SOLDIER_SITES}) - blocked
    total = 0
    for in_free in range(max(0, soldiers - blocked), min(free_files, soldiers) + 1):
        total += binom(free_files, in_free) * 2 ** in_free * binom(blocked, soldiers - in_free)
    return total


@lru_cache(maxsize=None)
def side_exact(blanks: int, soldiers_used: int) -> int:
    """One side's arrangements with exactly these blanks and soldiers.

    Camp piece count follows from blanks: pieces = 45 - blanks - soldiers.
    Returns 0 for infeasible combinations.
    """
    pieces = HALF_SITES - blanks - soldiers_used
    if not (1 <= pieces <= MAX_CAMP_PIECES) or not (0 <= soldiers_used <= MAX_SOLDIERS):
        return 0
    row = camp_by_piece_count(pieces)
    return sum(
        row.by_shared_elephants[shared]
        * soldier_own_side(len(SOLDIER_SITES) - shared, soldiers_used)
        for shared in range(3)
    )


@lru_cache(maxsize=None)
def side_reserve(blanks: int, reserve: int) -> int:
    """Arrangements with the given blanks and at least ``reserve`` soldiers
    left unplaced on the own half (available to cross the river)."""
    if not (MIN_SIDE_BLANKS <= blanks <= MAX_SIDE_BLANKS) or not (0 <= reserve <= MAX_SOLDIERS):
        return 0
    return sum(side_exact(blanks, s) for s in range(MAX_SOLDIERS - reserve + 1))


def convolution_terms(x: int) -> Iterator[tuple[int, int, int, int, int]]:
    """Nonzero convolution terms (n1, k1, n2, k2, value) with blanks x.

    n1, n2 are blanks left by each player's own-half arrangement; k1, k2 are
    soldiers each player sends across the river onto the opponent's blanks.
    The feasibility bounds (n - k >= 35 etc.) hold automatically because
    ``side_reserve`` is 0 outside them.
    """
    for n1 in range(MIN_SIDE_BLANKS, MAX_SIDE_BLANKS + 1):
        for n2 in range(MIN_SIDE_BLANKS, MAX_SIDE_BLANKS + 1):
            for k1 in range(MAX_SOLDIERS + 1):
                k2 = n1 + n2 - k1 - x
                if not 0 <= k2 <= MAX_SOLDIERS:
                    continue
                value = (
                    side_reserve(n1, k1)
                    * side_reserve(n2, k2)
                    * binom(n1, k2)
                    * binom(n2, k1)
                )
                if value:
                    yield n1, k1, n2, k2, value


@lru_cache(maxsize=None)
def xq_positions(x: int) -> int:
    """Full-board king/advisor/elephant/soldier placements with x blanks."""
    return sum(value for *_, value in convolution_terms(x))


def grand_total_terms(
    positions: Callable[[int], int] | None = None,
) -> Iterator[tuple[int, int, int]]:
    """(x, y, term) triples of the heavy-piece stage.

    x = blanks after the light stage, y = heavy pieces placed on them.
    """
    pos = positions if positions is not None else xq_positions
    for x in BLANKS_RANGE:
        px = pos(x)
        for y in range(2 * HEAVY_PAIRS + 1):
            yield x, y, px * binom(x, y) * pair_fill_count(HEAVY_PAIRS, y)


def xq_grand_total(positions: Callable[[int], int] | None = None) -> int:
    """The state-space count: light-stage positions times heavy-piece fills.

    ``positions`` may be overridden (e.g. with a zero table) for testing.
    """
    return sum(term for _, _, term in grand_total_terms(positions))
