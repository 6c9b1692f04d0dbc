"""Frozen reference tables replayed by the verify harness.

Every constant here is a published desk-scale example: the small parking
word tables, the zeta relabelings for (4,3) and (5,3), the joint
statistic matrices, fixed-point tables for words of length 3 and 4 over
three letters, the (4,7) sweep, and the affine labelings.  Tests and
``ratpark verify`` treat them as ground truth.
"""

# The 16 (4,3)-parking words (also the (3,3)-parking words).
PARKING_WORDS_4_3 = (
    "000", "001", "010", "100", "002", "020", "200", "011",
    "101", "110", "012", "021", "102", "120", "201", "210",
)

# The 25 (5,3)-parking words.
PARKING_WORDS_5_3 = (
    "000", "001", "010", "100", "002", "020", "200", "003", "030", "300",
    "011", "101", "110", "012", "021", "201", "210", "120", "102",
    "013", "031", "301", "310", "130", "103",
)

# zeta on (4,3): area word -> rank word, all 16 rows.
ZETA_4_3 = {
    "012": "000", "021": "010", "102": "100", "120": "110",
    "201": "200", "210": "210", "001": "011", "010": "021",
    "100": "201", "020": "001", "002": "020", "200": "101",
    "011": "002", "101": "102", "110": "120", "000": "012",
}

# The five rows whose tuples are embedded Dyck filters.
ZETA_4_3_DYCK_ROWS = ("012", "001", "011", "020", "000")

# zeta on (5,3), all 25 rows.
ZETA_5_3 = {
    "031": "000", "013": "010", "103": "200", "130": "210",
    "301": "100", "310": "110", "012": "001", "021": "020",
    "102": "101", "120": "120", "201": "300", "210": "310",
    "001": "012", "010": "031", "100": "301", "020": "011",
    "002": "021", "200": "201", "030": "002", "003": "030",
    "300": "102", "011": "003", "101": "103", "110": "130",
    "000": "013",
}

ZETA_5_3_DYCK_ROWS = ("031", "012", "001", "020", "030", "011", "000")

# Removal sequences (window column) keyed by area word, (4,3) and (5,3).
REMOVALS_4_3 = {
    "012": (1, 2, 3), "021": (1, 3, 2), "102": (2, 1, 3), "120": (2, 3, 1),
    "201": (3, 1, 2), "210": (3, 2, 1), "001": (-1, 3, 4), "010": (-1, 4, 3),
    "100": (4, -1, 3), "020": (0, 2, 4), "002": (0, 4, 2), "200": (2, 0, 4),
    "011": (0, 1, 5), "101": (1, 0, 5), "110": (1, 5, 0), "000": (-2, 2, 6),
}

REMOVALS_5_3 = {
    "031": (1, 2, 3), "013": (1, 3, 2), "103": (3, 1, 2), "130": (3, 2, 1),
    "301": (2, 1, 3), "310": (2, 3, 1), "012": (0, 2, 4), "021": (0, 4, 2),
    "102": (2, 0, 4), "120": (2, 4, 0), "201": (4, 0, 2), "210": (4, 2, 0),
    "001": (-2, 3, 5), "010": (-2, 5, 3), "100": (5, -2, 3), "020": (-1, 3, 4),
    "002": (-1, 4, 3), "200": (3, -1, 4), "030": (0, 1, 5), "003": (0, 5, 1),
    "300": (1, 0, 5), "011": (-1, 1, 6), "101": (1, -1, 6), "110": (1, 6, -1),
    "000": (-3, 2, 7),
}

# Joint (area, dinv) matrices; rows indexed by area, columns by dinv.
QT_4_3_PARKING = (
    (1, 2, 2, 1),
    (2, 3, 1, 0),
    (2, 1, 0, 0),
    (1, 0, 0, 0),
)

QT_4_3_DYCK = (
    (0, 0, 0, 1),
    (0, 1, 1, 0),
    (0, 1, 0, 0),
    (1, 0, 0, 0),
)

QT_5_3_PARKING = (
    (0, 1, 2, 2, 1),
    (1, 4, 3, 1, 0),
    (2, 3, 1, 0, 0),
    (2, 1, 0, 0, 0),
    (1, 0, 0, 0, 0),
)

QT_5_3_DYCK = (
    (0, 0, 0, 0, 1),
    (0, 0, 1, 1, 0),
    (0, 1, 1, 0, 0),
    (0, 1, 0, 0, 0),
    (1, 0, 0, 0, 0),
)

# Orbit of 10011 on the sum-6 slice: five letter steps back to the start.
ORBIT_3_5 = {
    "word": "10011",
    "chain": (
        (-1, 3, 4),
        (-2, 3, 5),
        (0, 2, 4),
        (1, 2, 3),
        (0, 2, 4),
        (-1, 3, 4),
    ),
}

# Exact fixed points of all 27 (3,4)-parking words, sum normalized to 6.
FIXED_POINTS_3_4 = {
    (1, 2, 3): (
        "0000", "0010", "0100", "0110", "0200", "0210",
        "1000", "1010", "1100", "2000", "2010", "2100",
    ),
    (0, 2, 4): ("0001", "0020", "0101", "1001", "1020", "1200"),
    (-1, 3, 4): ("0011", "0021", "0201", "2001"),
    (0, 1, 5): ("0002", "0102", "0120", "1002"),
    (-2, 2, 6): ("0012",),
}

# (3,3)-parking words fixing the labeled point (regions overlap on walls).
FIXED_REGIONS_3_3 = {
    (1, 2, 3): ("000", "010", "100", "110", "200", "210"),
    (0, 2, 4): ("001", "020", "101", "110", "200", "210"),
    (-1, 3, 4): ("011", "021", "101", "110", "201", "210"),
    (0, 1, 5): ("002", "020", "102", "120", "200", "210"),
    (-2, 2, 6): ("012", "021", "102", "120", "201", "210"),
}

# A (6,9)-parking word with an exactly known fixed point and a triangle
# of further fixed points witnessing the two-dimensional fixed region.
GCD_EXAMPLE_6_9 = {
    "word": "020101151",
    "fixed_point": (-3, 1, 2, 4, 6, 11),
    "simplex": (
        (-3, 0, 3, 3, 6, 12),
        (-2, 1, 1, 4, 7, 10),
        (-4, 2, 2, 5, 5, 11),
    ),
}

# Touch-point decomposition of a (9,12)-parking word: blocks, their fixed
# points at sum 0, and the rescaled components of the assembled witness.
GCD_EXAMPLE_9_12 = {
    "word": (5, 3, 1, 0, 3, 0, 6, 7, 8, 6, 3, 1),
    "touch_points": (3, 6),
    "blocks": ("1001", "2000", "0120"),
    "block_fixed_points": ((-2, 0, 2), (-1, 0, 1), (-2, -1, 3)),
    "scaled_blocks": ((-6, 0, 6), (-3, 0, 3), (-6, -3, 9)),
}

# Filter snapshots: row minima with their column minima.
FILTER_MINIMA_PAIRS = (
    (3, 4, (-1, 1, 3), (-1, 1, 2, 4)),
    (3, 5, (2, 4, 6), (2, 4, 5, 6, 8)),
    (3, 5, (-1, 3, 4), (-1, 2, 3, 5, 6)),
)

# Dyck filters and their column-length words.
DYCK_WORD_PAIRS = (
    (3, 4, (0, 2, 4), "0011"),
    (3, 5, (0, 2, 4), "00012"),
)

# Balanced representatives, in enumeration order by Dyck word.
BALANCED_MINIMA_3_4 = (
    (-2, 2, 6), (-1, 3, 4), (0, 1, 5), (0, 2, 4), (1, 2, 3),
)

# Chain of removals on (3,5) balanced minima, not rebalanced.
REMOVE_CHAIN_3_5 = (
    ((-1, 3, 4), 3, (-1, 4, 6)),
    ((-1, 4, 6), -1, (2, 4, 6)),
)

# The (4,7) sweep: row minima before and after, with the step levels the
# preimage contributes to the swept path.
SWEEP_4_7 = {
    "before": (0, 6, 7, 9),
    "after": (0, 5, 7, 14),
    "vertical_levels": (7, 13, 14, 16),
    "horizontal_levels": (0, 4, 6, 8, 9, 10, 12),
}

# Staircase windows.
STAIRCASE_WINDOWS = {
    (4, 3): (-2, 2, 6),
    (5, 3): (-3, 2, 7),
    (3, 4): (-2, 1, 4, 7),
}

# Window-length swaps between the (3,5) and (5,3) dominant worlds.
SWAP_PAIRS = (
    ((-1, 2, 3, 5, 6), 3, (-1, 3, 4)),
    ((-1, 3, 4), 5, (-1, 2, 3, 5, 6)),
)

# Dominant Sommers windows per (m, n).
DOMINANT_WINDOWS = {
    (3, 4): ((1, 2, 3, 4), (0, 2, 3, 5), (-1, 2, 4, 5), (0, 1, 3, 6), (-2, 1, 4, 7)),
    (4, 3): ((1, 2, 3), (0, 2, 4), (-1, 3, 4), (0, 1, 5), (-2, 2, 6)),
    (3, 5): (
        (1, 2, 3, 4, 5), (0, 2, 3, 4, 6), (-1, 2, 3, 5, 6), (-2, 1, 4, 5, 7),
        (0, 1, 3, 4, 7), (-1, 1, 2, 5, 8), (-3, 0, 3, 6, 9),
    ),
    (5, 3): ((1, 2, 3), (0, 2, 4), (-1, 3, 4), (-2, 3, 5), (0, 1, 5), (-1, 1, 6), (-3, 2, 7)),
}

# Anderson and Pak-Stanley labelings of specific windows.
ANDERSON_EXAMPLES = (
    ((3, -1, 2, 5, 6), 3, "10001"),
    ((5, -2, 3), 5, "100"),
    ((1, 2, 3), 4, "012"),
)

PAK_STANLEY_EXAMPLES = (
    ((3, -1, 2, 5, 6), 3, "10011"),
    ((5, -2, 3), 5, "301"),
)

# The (3,5) tuple of the worked example: area and rank words with stats.
WORKED_TUPLE_3_5 = {
    "initial_balanced": (-1, 3, 4),
    "removals_balanced": (3, -1, 2, 5, 6),
    "initial_parking": (0, 4, 5),
    "removals_parking": (4, 0, 3, 6, 7),
    "area_word": "10001",
    "rank_word": "10011",
    "area": 2,
    "dinv": 1,
}

WORKED_TUPLE_5_3 = {
    "removals_parking": (0, 7, 5),
    "area_word": "010",
}
