import itertools

import pytest

from ratpark import (
    Cycle,
    DimensionMismatch,
    Diverged,
    Fixed,
    InsufficientGap,
    LetterOutOfRange,
    Point,
    Word,
    apply_letter,
    apply_word,
    construct_fixed_point_general,
    contraction_certificate,
    distance,
    find_fixed_point,
    fixed_point_oracle,
    norm,
    staircase_point,
)
from ratpark.reference import (
    FIXED_POINTS_3_4,
    FIXED_REGIONS_3_3,
    GCD_EXAMPLE_6_9,
    GCD_EXAMPLE_9_12,
    ORBIT_3_5,
)


def w(m, n, text):
    return Word(m, n, tuple(int(ch) for ch in text))


def brute_norm(coords):
    return sum(
        (b - a) ** 2 for a, b in itertools.combinations(coords, 2)
    )


def test_point_validation():
    with pytest.raises(DimensionMismatch):
        Point((2, 1))
    assert Point((1, 1, 2)).total == 4


def test_apply_letter_examples():
    assert apply_letter(Point((0, 2, 4)), 0).coords == (1, 2, 3)
    assert apply_letter(Point((-1, 3, 4)), 1).coords == (-2, 3, 5)
    assert apply_letter(Point((0, 0)), 1).coords == (-1, 1)
    with pytest.raises(LetterOutOfRange):
        apply_letter(Point((0, 0)), 2)


def test_apply_word_chain():
    word_ = w(3, 5, ORBIT_3_5["word"])
    cur = Point(ORBIT_3_5["chain"][0])
    for letter, expected in zip(word_.letters, ORBIT_3_5["chain"][1:]):
        cur = apply_letter(cur, letter)
        assert cur.coords == expected
    assert apply_word(Point(ORBIT_3_5["chain"][0]), word_).coords == ORBIT_3_5[
        "chain"
    ][0]


def test_apply_word_six_nine_fixture():
    word_ = w(6, 9, GCD_EXAMPLE_6_9["word"])
    fp = Point(GCD_EXAMPLE_6_9["fixed_point"])
    assert apply_word(fp, word_) == fp


def test_apply_word_identity_and_mismatch():
    from ratpark.action import _apply_raw

    p = Point((-1, 3, 4))
    assert apply_word(p, Word(3, 1, (0,))).coords == (1, 2, 3)
    assert _apply_raw(p.coords, (), 3, 0) == p.coords
    with pytest.raises(DimensionMismatch):
        apply_word(p, Word(4, 2, (0, 1)))


def test_apply_word_preserves_sum_and_order():
    for letters in itertools.product(range(4), repeat=3):
        word_ = Word(4, 3, letters)
        p = Point((-3, 0, 2, 7))
        q = apply_word(p, word_)
        assert q.total == p.total
        assert q.coords == tuple(sorted(q.coords))


def test_norm_examples_against_defining_sum():
    assert norm(Point((0, 0, 0))) == 0
    assert norm(Point((-1, 3, 4))) == 42 == brute_norm((-1, 3, 4))
    assert norm(Point((-2, 3, 5))) == 78 == brute_norm((-2, 3, 5))
    for coords in itertools.product(range(-4, 5), repeat=3):
        assert norm(Point(tuple(sorted(coords)))) == brute_norm(coords)


def test_distance_example():
    assert distance(Point((-1, 3, 4)), Point((0, 2, 4))) == 6


def test_staircase_point_is_balanced():
    for m, n in ((3, 4), (4, 3), (5, 3), (6, 9), (2, 2)):
        p = staircase_point(m, n)
        assert p.total == m * (m + 1) // 2


def test_find_fixed_point_published_values():
    for target, words in FIXED_POINTS_3_4.items():
        for text in words:
            report = find_fixed_point(w(3, 4, text))
            assert isinstance(report.outcome, Fixed)
            assert report.outcome.point.coords == target


def test_find_fixed_point_diverges_on_non_parking():
    report = find_fixed_point(w(4, 3, "022"))
    assert isinstance(report.outcome, Diverged)
    report = find_fixed_point(w(3, 5, "22222"))
    assert isinstance(report.outcome, Diverged)


def test_find_fixed_point_gcd_words_fix_or_cycle():
    # opportunistic iteration on words with gcd > 1 never errors out
    for text in ("000", "012", "210"):
        report = find_fixed_point(w(3, 3, text))
        assert isinstance(report.outcome, (Fixed, Cycle))


def test_fixed_point_oracle_examples():
    assert fixed_point_oracle(w(3, 5, "10011")).coords == (-1, 3, 4)
    assert fixed_point_oracle(w(3, 4, "0000")).coords == (1, 2, 3)
    assert fixed_point_oracle(w(3, 4, "0012")).coords == (-2, 2, 6)


def test_oracle_matches_solver():
    for m, n in ((3, 4), (4, 3)):
        from ratpark import enumerate_words

        for word_ in enumerate_words(m, n, "parking"):
            report = find_fixed_point(word_)
            assert fixed_point_oracle(word_) == report.outcome.point


def test_fixed_region_words():
    for target, words in FIXED_REGIONS_3_3.items():
        for text in words:
            assert apply_word(Point(target), w(3, 3, text)).coords == target


def test_contraction_certificate():
    word_ = w(3, 5, "10011")
    x, y = Point((-1, 3, 4)), Point((0, 2, 4))
    assert contraction_certificate(word_, x, y)
    assert contraction_certificate(word_, x, x)


def test_construct_fixed_point_general_nine_twelve():
    word_ = Word(9, 12, GCD_EXAMPLE_9_12["word"])
    witness = construct_fixed_point_general(word_)
    assert apply_word(witness, word_) == witness
    # blocks rescale the published component fixed points by n/n_j = 3;
    # the assembled coordinates reproduce them up to a uniform shift
    diffs = [
        tuple(c - block[0] for c in block)
        for block in GCD_EXAMPLE_9_12["scaled_blocks"]
    ]
    coords = witness.coords
    for j, diff in enumerate(diffs):
        chunk = coords[3 * j : 3 * j + 3]
        assert tuple(c - chunk[0] for c in chunk) == diff


def test_construct_fixed_point_general_coprime_degenerates():
    word_ = w(3, 5, "10011")
    assert construct_fixed_point_general(word_).coords == (-1, 3, 4)


def test_construct_fixed_point_general_exhaustive_small_gcd():
    from ratpark import enumerate_words

    # includes blocks that are themselves non-coprime, e.g. the (4,2)
    # block of the (6,3) word 004, where plain iteration orbits the
    # fixed region in a 2-cycle and the centroid restart must kick in
    for m, n in ((2, 2), (3, 3), (4, 4), (2, 4), (4, 2), (3, 6), (6, 3)):
        for word_ in enumerate_words(m, n, "parking"):
            witness = construct_fixed_point_general(word_)
            assert apply_word(witness, word_) == witness, word_


def test_construct_fixed_point_gap_validation():
    word_ = Word(9, 12, GCD_EXAMPLE_9_12["word"])
    with pytest.raises(InsufficientGap):
        construct_fixed_point_general(word_, gaps=[10, 500])
    with pytest.raises(InsufficientGap):
        construct_fixed_point_general(word_, gaps=[200])
    witness = construct_fixed_point_general(word_, gaps=[200, 400])
    assert apply_word(witness, word_) == witness


def test_divergence_of_all_non_parking_words_up_to_five():
    from ratpark import enumerate_words, is_parking_word

    for m in range(1, 6):
        for n in range(1, 6):
            for word_ in enumerate_words(m, n, "all"):
                if is_parking_word(word_):
                    continue
                cur = staircase_point(m, n)
                start = norm(cur)
                for _ in range(50):
                    cur = apply_word(cur, word_)
                assert norm(cur) > start, (m, n, word_)


def test_fixed_point_residue_structure():
    from ratpark import enumerate_words

    # gcd = 1: a complete residue system mod m
    for m, n in ((3, 4), (4, 3), (3, 5)):
        for word_ in enumerate_words(m, n, "parking"):
            point = find_fixed_point(word_).outcome.point
            assert sorted(c % m for c in point.coords) == list(range(m))
    # gcd > 1: the residue multiset is invariant under adding n mod m
    m = 6
    residues = sorted(c % m for c in GCD_EXAMPLE_6_9["fixed_point"])
    shifted = sorted((r + 9) % m for r in residues)
    assert residues == shifted


def test_six_nine_simplex_and_convexity():
    word_ = w(6, 9, GCD_EXAMPLE_6_9["word"])
    from ratpark.action import _apply_raw

    for vertex in GCD_EXAMPLE_6_9["simplex"]:
        assert apply_word(Point(vertex), word_).coords == vertex
    # pairwise sums are fixed by the doubled action: the midpoints of the
    # fixed simplex stay fixed, witnessing convexity without fractions
    for a in GCD_EXAMPLE_6_9["simplex"]:
        for b in GCD_EXAMPLE_6_9["simplex"]:
            summed = tuple(x + y for x, y in zip(a, b))
            assert _apply_raw(summed, word_.letters, 12, 18) == summed
