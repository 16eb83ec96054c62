"""Brute-force enumeration oracles.

Each oracle enumerates concrete placements over the geometry sets with no
shortcuts beyond zone membership, so its correctness is auditable by eye.
Oracles never call the closed-form counting paths; agreement between the
two is the package's core correctness argument.  The budget is seconds to
minutes, not milliseconds.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from .geometry import Site, mirror, zone
from .xiangqi import CampClassRow

_XQ_PALACE = sorted(zone("xiangqi", "A", "palace"))
_XQ_ADVISOR = sorted(zone("xiangqi", "A", "advisor_sites"))
_XQ_ELEPHANT = sorted(zone("xiangqi", "A", "elephant_sites"))
_XQ_SOLDIER = sorted(zone("xiangqi", "A", "soldier_own_side_sites"))
_XQ_SHARED = zone("xiangqi", "A", "elephant_sites") & zone(
    "xiangqi", "A", "soldier_own_side_sites"
)
_JG_PALACE = sorted(zone("janggi", "A", "palace"))
_JG_HOME = sorted(zone("janggi", "A", "home_zone"))

PAIR_FILL_MAX_SEQUENCES = 20_000_000
POSITIONS_MAX_LIGHT_PIECES = 4


class OracleBoundError(ValueError):
    """Arguments exceed an oracle's tractability bound (caller misuse)."""


def enum_camp_xq(advisors: int, elephants: int) -> CampClassRow:
    """Exhaust all king/advisor/elephant camp placements.

    Advisors and elephants are identical within their type, so subsets of
    sites (not sequences) are enumerated.  Domain <= C(5,2)*C(7,2)*9.
    """
    by_shared = [0, 0, 0]
    for adv in combinations(_XQ_ADVISOR, advisors):
        for ele in combinations(_XQ_ELEPHANT, elephants):
            occupied = set(adv) | set(ele)
            shared = len(set(ele) & _XQ_SHARED)
            for king in _XQ_PALACE:
                if king not in occupied:
                    by_shared[shared] += 1
    return CampClassRow(advisors, elephants, tuple(by_shared))


def enum_soldiers_xq(shared_sites_blocked: int, soldiers: int) -> int:
    """Exhaust own-half soldier subsets, at most one soldier per file.

    ``shared_sites_blocked`` of the two elephant/soldier shared sites are
    unavailable.  Domain <= 2^10.
    """
    blocked = sorted(_XQ_SHARED)[:shared_sites_blocked]
    available = [s for s in _XQ_SOLDIER if s not in blocked]
    count = 0
    for subset in combinations(available, soldiers):
        files = [s.file for s in subset]
        if len(set(files)) == len(files):
            count += 1
    return count


def _xq_side_placements(max_extra: int | None = None):
    """Yield (occupied frozenset, pieces, soldiers) for one player's own half.

    Joint enumeration of king, advisor subsets, elephant subsets, and
    soldier subsets (one per file, shared sites excluded when an elephant
    stands there).
    """
    for advisors in range(3):
        for adv in combinations(_XQ_ADVISOR, advisors):
            for elephants in range(3):
                if max_extra is not None and advisors + elephants > max_extra:
                    continue
                for ele in combinations(_XQ_ELEPHANT, elephants):
                    occ_ae = set(adv) | set(ele)
                    for king in _XQ_PALACE:
                        if king in occ_ae:
                            continue
                        occ = occ_ae | {king}
                        available = [s for s in _XQ_SOLDIER if s not in occ]
                        max_soldiers = 5
                        if max_extra is not None:
                            max_soldiers = min(5, max_extra - advisors - elephants)
                        for soldiers in range(max_soldiers + 1):
                            for subset in combinations(available, soldiers):
                                files = [s.file for s in subset]
                                if len(set(files)) != len(files):
                                    continue
                                yield occ | set(subset), 1 + advisors + elephants + soldiers, soldiers


@lru_cache(maxsize=1)
def _xq_side_grid() -> dict[tuple[int, int], int]:
    """(blanks, soldiers used) -> placement count over the 45-site half."""
    grid: dict[tuple[int, int], int] = {}
    for _, pieces, soldiers in _xq_side_placements():
        key = (45 - pieces, soldiers)
        grid[key] = grid.get(key, 0) + 1
    return grid


def enum_side_exact_xq(blanks: int, soldiers: int) -> int:
    """Half-board joint enumeration: placements with exactly these blanks
    and own-side soldiers."""
    return _xq_side_grid().get((blanks, soldiers), 0)


def enum_side_xq(blanks: int, reserve: int) -> int:
    """Half-board joint enumeration bucketed by blanks and soldier reserve.

    Counts placements with the given blank count whose soldier usage leaves
    at least ``reserve`` of the five soldiers unplaced.
    """
    grid = _xq_side_grid()
    return sum(grid.get((blanks, s), 0) for s in range(0, 6 - reserve))


@lru_cache(maxsize=1)
def _jg_home_grid() -> dict[tuple[int, int], int]:
    """(palace pieces, opposing soldiers) -> placement count in one home zone."""
    grid: dict[tuple[int, int], int] = {}
    for palace_pieces in (1, 2, 3):
        for sites in combinations(_JG_PALACE, palace_pieces):
            for _king in sites:  # which occupied palace site holds the king
                free = [s for s in _JG_HOME if s not in sites]
                for soldiers in range(6):
                    count = 0
                    for _subset in combinations(free, soldiers):
                        count += 1
                    key = (palace_pieces, soldiers)
                    grid[key] = grid.get(key, 0) + count
    return grid


def enum_home_jg(n: int, k: int) -> int:
    """Joint palace + opposing-soldier enumeration of one Janggi home zone.

    Counts placements of n pieces (own king/advisors plus opposing soldiers)
    leaving at least k of the five opposing soldiers unused.
    """
    grid = _jg_home_grid()
    return sum(
        count
        for (palace_pieces, soldiers), count in grid.items()
        if palace_pieces + soldiers == n and 5 - soldiers >= k
    )


def enum_pair_fill(m: int, n: int) -> int:
    """Count length-n site-label sequences over m symbols, none used thrice.

    Enumerates all m^n sequences, so the bound is m^n <= 20 million
    (covers m <= 4, n <= 8 and m = 8, n <= 8).
    """
    if n < 0 or m < 0:
        return 0
    if m ** max(n, 1) > PAIR_FILL_MAX_SEQUENCES:
        raise OracleBoundError(
            f"enum_pair_fill({m}, {n}) needs {m ** n} sequences; "
            f"bound is {PAIR_FILL_MAX_SEQUENCES}"
        )
    if n == 0:
        return 1
    count = 0
    for seq in product(range(m), repeat=n):
        if all(seq.count(symbol) <= 2 for symbol in set(seq)):
            count += 1
    return count


def _mirror_all(sites) -> list[Site]:
    return sorted(mirror(s) for s in sites)


def enum_positions_small(variant: str, max_light_pieces: int) -> dict[int, int]:
    """Directly enumerate full-board light-piece placements, by piece count.

    Both kings are always present; advisors/elephants/soldiers are added up
    to the total bound.  Every subset is enumerated over concrete sites,
    including river-crossed soldiers (Xiangqi) and middle-rank soldiers
    (Janggi), so this is the final arbiter for the small convolution values.
    """
    if max_light_pieces > POSITIONS_MAX_LIGHT_PIECES:
        raise OracleBoundError(
            f"enum_positions_small bound is {POSITIONS_MAX_LIGHT_PIECES} pieces, "
            f"got {max_light_pieces}"
        )
    if max_light_pieces < 2:
        raise OracleBoundError("both kings are always on the board; need >= 2")
    if variant == "xiangqi":
        return _enum_positions_xq(max_light_pieces)
    if variant == "janggi":
        return _enum_positions_jg(max_light_pieces)
    raise ValueError(f"unknown variant {variant!r}")


def _enum_positions_xq(max_total: int) -> dict[int, int]:
    a_half = frozenset(Site(f, r) for f in range(1, 10) for r in range(1, 6))
    b_half = frozenset(Site(f, r) for f in range(1, 10) for r in range(6, 11))
    a_sides = list(_xq_side_placements(max_extra=max_total - 2))
    b_sides = [
        (frozenset(mirror(s) for s in occ), pieces, soldiers)
        for occ, pieces, soldiers in a_sides
    ]
    counts: dict[int, int] = {}
    for occ_a, pieces_a, soldiers_a in a_sides:
        for occ_b, pieces_b, soldiers_b in b_sides:
            base = pieces_a + pieces_b
            if base > max_total:
                continue
            blanks_b = sorted(b_half - occ_b)
            blanks_a = sorted(a_half - occ_a)
            room = max_total - base
            for crossed_a in range(min(5 - soldiers_a, room) + 1):
                for sub_a in combinations(blanks_b, crossed_a):
                    for crossed_b in range(min(5 - soldiers_b, room - crossed_a) + 1):
                        for sub_b in combinations(blanks_a, crossed_b):
                            total = base + crossed_a + crossed_b
                            counts[total] = counts.get(total, 0) + 1
    return counts


def _enum_positions_jg(max_total: int) -> dict[int, int]:
    a_palace = _JG_PALACE
    b_palace = _mirror_all(_JG_PALACE)
    middle = [Site(f, r) for f in range(1, 10) for r in (4, 5, 6, 7)]
    a_soldier_zone = sorted(set(middle) | set(_mirror_all(_JG_HOME)))
    b_soldier_zone = sorted(set(middle) | set(_JG_HOME))
    counts: dict[int, int] = {}
    for king_a in a_palace:
        for king_b in b_palace:
            occ0 = {king_a, king_b}
            for adv_a_n in range(3):
                for adv_a in combinations([s for s in a_palace if s not in occ0], adv_a_n):
                    occ1 = occ0 | set(adv_a)
                    for adv_b_n in range(3):
                        if 2 + adv_a_n + adv_b_n > max_total:
                            continue
                        for adv_b in combinations(
                            [s for s in b_palace if s not in occ1], adv_b_n
                        ):
                            occ2 = occ1 | set(adv_b)
                            room = max_total - 2 - adv_a_n - adv_b_n
                            for sold_a_n in range(min(5, room) + 1):
                                for sold_a in combinations(
                                    [s for s in a_soldier_zone if s not in occ2], sold_a_n
                                ):
                                    occ3 = occ2 | set(sold_a)
                                    for sold_b_n in range(min(5, room - sold_a_n) + 1):
                                        for _sold_b in combinations(
                                            [s for s in b_soldier_zone if s not in occ3],
                                            sold_b_n,
                                        ):
                                            total = 2 + adv_a_n + adv_b_n + sold_a_n + sold_b_n
                                            counts[total] = counts.get(total, 0) + 1
    return counts
