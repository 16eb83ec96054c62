"""Published reference values audited by the verify command.

Each fixture pins one printed value from the source publication's tables
and value lists, with a trust level carried over from source criticism:

* ``verified-consistent`` — the printed value is legible and was judged
  internally consistent on inspection.
* ``typo-suspect`` — the printed value comes from a table or list with
  known printing defects (misaligned columns, garbled entries).

Trust is a prior recorded as data; the verify engine's verdicts are driven
by recomputation and the enumeration oracles, not by this field.
"""
from __future__ import annotations

from dataclasses import dataclass

VERIFIED = "verified-consistent"
SUSPECT = "typo-suspect"


@dataclass(frozen=True)
class ReferenceFixture:
    quantity_id: str
    paper_value: int
    trust: str
    locator: str


# --- Xiangqi camp arrangements (source table 1): (advisors, elephants) ->
#     (total, two shared-site elephants, one, none)
TABLE1 = {
    (2, 2): (1410, 70, 680, 660),
    (2, 1): (480, 0, 140, 340),
    (2, 0): (70, 0, 0, 70),
    (1, 2): (810, 40, 390, 380),
    (1, 1): (275, 0, 80, 195),
    (1, 0): (40, 0, 0, 40),
    (0, 2): (183, 9, 88, 86),
    (0, 1): (62, 0, 18, 44),
    (0, 0): (9, 0, 0, 9),
}

# --- Aggregated by pieces used (source table 2)
TABLE2 = {
    5: (1410, 70, 680, 660),
    4: (1290, 40, 530, 720),
    3: (528, 9, 168, 351),
    2: (102, 0, 18, 84),
    1: (9, 0, 0, 9),
}

# --- Own-side soldier placements (source table 3): (blank sites, soldiers)
TABLE3 = {
    (10, 0): 1, (9, 0): 1, (8, 0): 1,
    (10, 1): 10, (9, 1): 9, (8, 1): 8,
    (10, 2): 40, (9, 2): 32, (8, 2): 25,
    (10, 3): 80, (9, 3): 56, (8, 3): 38,
    (10, 4): 80, (9, 4): 48, (8, 4): 28,
    (10, 5): 32, (9, 5): 16, (8, 5): 8,
}

# --- Half-board exact grid (source table 4): (blanks, soldiers used).
# The printed table's column alignment is unreliable; cells are assigned by
# the cumulative structure of table 5 (row for s soldiers starts at 40 - s).
TABLE4 = {
    (40, 0): 1410, (41, 0): 1290, (42, 0): 528, (43, 0): 102, (44, 0): 9,
    (39, 1): 13280, (40, 1): 12290, (41, 1): 5094, (42, 1): 1002, (43, 1): 90,
    (38, 2): 49910, (39, 2): 46760, (40, 2): 19641, (41, 2): 3936, (42, 2): 360,
    (37, 3): 93540, (38, 3): 88800, (39, 3): 37830, (40, 3): 7728, (41, 3): 720,
    (36, 4): 87400, (37, 4): 84160, (38, 4): 36396, (39, 4): 7584, (40, 4): 720,
    (35, 5): 32560, (36, 5): 31840, (37, 5): 13992, (38, 5): 2976, (39, 5): 288,
}

# --- Half-board reserve grid (source table 5): (blanks, reserve)
TABLE5 = {
    (40, 5): 1410, (41, 5): 1290, (42, 5): 528, (43, 5): 102, (44, 5): 9,
    (39, 4): 13280, (40, 4): 13700, (41, 4): 6384, (42, 4): 1530, (43, 4): 192, (44, 4): 9,
    (38, 3): 49910, (39, 3): 60040, (40, 3): 33341, (41, 3): 10320, (42, 3): 1890,
    (43, 3): 192, (44, 3): 9,
    (37, 2): 93540, (38, 2): 138710, (39, 2): 97870, (40, 2): 41069, (41, 2): 11040,
    (42, 2): 1890, (43, 2): 192, (44, 2): 9,
    (36, 1): 87400, (37, 1): 177700, (38, 1): 175106, (39, 1): 105454, (40, 1): 41789,
    (41, 1): 11040, (42, 1): 1890, (43, 1): 192, (44, 1): 9,
    (35, 0): 32560, (36, 0): 119240, (37, 0): 191692, (38, 0): 178082, (39, 0): 105742,
    (40, 0): 41789, (41, 0): 11040, (42, 0): 1890, (43, 0): 192, (44, 0): 9,
}

# --- Xiangqi light-stage positions by blank sites (source list, n = 70..88)
XQ_KLIST = {
    70: 6072015837104228000,
    71: 13932273683634608000,
    72: 15302416298575447500,
    73: 10415675878701420000,
    74: 4850335101880323628,
    75: 1620169838558710348,
    76: 398556758971233856,
    77: 73409438301988732,
    78: 10306140239862692,
    79: 1131080570393880,
    80: 100447213926298,
    81: 7330142404440,
    82: 444595549080,
    83: 22199620332,
    84: 900695862,
    85: 28838016,
    86: 655542,
    87: 10584,
    88: 81,
}

# --- Six-pair fill counts for the Xiangqi heavy stage (source list, 0..12)
XQ_DLIST = [1, 6, 36, 210, 1170, 6120, 29520, 128520, 491400, 1587600,
            4082400, 7484400, 7484400]

XQ_TOTAL = 7587909515978090371015538252511721150667

# --- Janggi palace arrangements by advisor count (source prose values)
JG_PALACE = {0: 9, 1: 72, 2: 252}

# --- Janggi home-zone grid (source table 6): (pieces, reserve)
TABLE6 = {
    (1, 0): 9, (1, 1): 9, (1, 2): 9, (1, 3): 9, (1, 4): 9, (1, 5): 9,
    (2, 0): 306, (2, 1): 306, (2, 2): 306, (2, 3): 306, (2, 4): 306, (2, 5): 72,
    (3, 0): 4977, (3, 1): 4977, (3, 2): 4977, (3, 3): 4977, (3, 4): 2052, (3, 5): 252,
    (4, 0): 51048, (4, 1): 51048, (4, 2): 51048, (4, 3): 27648, (4, 4): 6048,
    (5, 0): 369702, (5, 1): 369702, (5, 2): 235152, (5, 3): 69552,
    (6, 0): 2012868, (6, 1): 1420848, (6, 2): 510048,
    (7, 0): 6503112, (7, 1): 2677752,
    (8, 0): 10711008,
}

# --- Janggi light-stage positions by pieces used (source list, n = 16..2)
JG_KLIST = {
    16: 1457601002568716544,
    15: 1185971655381537024,
    14: 470042212117883328,
    13: 111504273140075328,
    12: 17627589996960672,
    11: 1967816967471936,
    10: 171617399962470,
    9: 12043618055460,
    8: 686813883426,
    7: 31907861496,
    6: 1200808557,
    5: 35663652,
    4: 783918,
    3: 11340,
    2: 81,
}

# --- Eight-pair fill counts for the Janggi heavy stage (source list, 0..16).
# Several entries are garbled in print; the closed form and the enumeration
# oracle adjudicate.
JG_SLIST = [1, 8, 64, 504, 2028, 28560, 44520, 294000, 441840, 6773760,
            6827940, 209933640, 209766060, 5448713760, 5448660840,
            40864824000, 40864824000]

JG_TOTAL = 235103954659801304018684123148785542989018468


def _build() -> list[ReferenceFixture]:
    out: list[ReferenceFixture] = []
    cls = ("total", "two5", "one5", "no5")
    for (a, e), values in TABLE1.items():
        for name, value in zip(cls, values):
            out.append(ReferenceFixture(
                f"xq.table1.{a},{e}.{name}", value, VERIFIED,
                f"source table 1, row {a},{e}, column {name}"))
    for pieces, values in TABLE2.items():
        for name, value in zip(cls, values):
            out.append(ReferenceFixture(
                f"xq.table2.{pieces}.{name}", value, VERIFIED,
                f"source table 2, row {pieces}, column {name}"))
    for (blank, s), value in TABLE3.items():
        out.append(ReferenceFixture(
            f"xq.table3.{blank},{s}", value, VERIFIED,
            f"source table 3, {blank} blank sites, {s} soldiers"))
    for (n, s), value in TABLE4.items():
        out.append(ReferenceFixture(
            f"xq.table4.{n},{s}", value, SUSPECT,
            f"source table 4 (realigned), {n} blanks, {s} soldiers"))
    for (n, k), value in TABLE5.items():
        out.append(ReferenceFixture(
            f"xq.table5.{n},{k}", value, VERIFIED,
            f"source table 5, {n} blanks, reserve {k}"))
    for x, value in XQ_KLIST.items():
        out.append(ReferenceFixture(
            f"xq.klist.{x}", value, VERIFIED,
            f"source light-stage list, {x} blanks"))
    for y, value in enumerate(XQ_DLIST):
        out.append(ReferenceFixture(
            f"xq.dlist.{y}", value, VERIFIED,
            f"source six-pair fill list, entry {y}"))
    out.append(ReferenceFixture(
        "xq.total", XQ_TOTAL, VERIFIED, "source grand total (40 digits)"))
    for advisors, value in JG_PALACE.items():
        out.append(ReferenceFixture(
            f"jg.palace.{advisors}", value, VERIFIED,
            f"source palace arrangements, {advisors} advisors"))
    for (n, k), value in TABLE6.items():
        out.append(ReferenceFixture(
            f"jg.table6.{n},{k}", value, VERIFIED,
            f"source table 6, {n} pieces, reserve {k}"))
    for n, value in JG_KLIST.items():
        out.append(ReferenceFixture(
            f"jg.klist.{n}", value, VERIFIED,
            f"source light-stage list, {n} pieces"))
    for k, value in enumerate(JG_SLIST):
        out.append(ReferenceFixture(
            f"jg.slist.{k}", value, SUSPECT,
            f"source eight-pair fill list, entry {k}"))
    out.append(ReferenceFixture(
        "jg.total", JG_TOTAL, VERIFIED, "source grand total (45 digits)"))
    return out


ALL_FIXTURES: tuple[ReferenceFixture, ...] = tuple(_build())

_BY_ID = {f.quantity_id: f for f in ALL_FIXTURES}
assert len(_BY_ID) == len(ALL_FIXTURES), "fixture ids must be unique"


def fixture(quantity_id: str) -> ReferenceFixture:
    return _BY_ID[quantity_id]


def fixtures_for_scope(scope: str) -> list[ReferenceFixture]:
    """Fixture subsets for the verify scopes.

    Pair-fill lists belong to the combinatorics scope; the per-variant
    scopes own their tables, light-stage lists, and grand totals.
    """
    if scope == "all":
        return list(ALL_FIXTURES)
    if scope == "xiangqi":
        return [f for f in ALL_FIXTURES
                if f.quantity_id.startswith("xq.") and not f.quantity_id.startswith("xq.dlist")]
    if scope == "janggi":
        return [f for f in ALL_FIXTURES
                if f.quantity_id.startswith("jg.") and not f.quantity_id.startswith("jg.slist")]
    if scope == "combinatorics":
        return [f for f in ALL_FIXTURES
                if f.quantity_id.startswith(("xq.dlist", "jg.slist"))]
    raise ValueError(f"unknown scope {scope!r}")
