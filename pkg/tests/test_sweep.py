import pytest

from ratpark import (
    Filter,
    NotDyck,
    column_minima,
    dyck_embedding,
    dyck_word,
    enumerate_words,
    filter_from_dyck_word,
    sweep,
    sweep_column_word,
    sweep_inverse,
)
from ratpark.reference import SWEEP_4_7, ZETA_4_3, ZETA_4_3_DYCK_ROWS


def dyck_filters(m, n):
    return [filter_from_dyck_word(w) for w in enumerate_words(m, n, "dyck")]


def test_sweep_four_seven_fixture():
    before = Filter(4, 7, SWEEP_4_7["before"])
    after = sweep(before)
    assert after.row_minima == SWEEP_4_7["after"]
    assert column_minima(before) == SWEEP_4_7["horizontal_levels"]
    t = dyck_embedding(before)
    final = list(t.stages())[-1]
    assert final.row_minima == SWEEP_4_7["vertical_levels"]
    assert sweep_inverse(after) == before


def test_sweep_requires_dyck():
    with pytest.raises(NotDyck):
        sweep(Filter(4, 7, (1, 6, 7, 8)))
    with pytest.raises(NotDyck):
        sweep_inverse(Filter(4, 7, (1, 6, 7, 8)))


def test_sweep_singleton():
    only = Filter(2, 1, (0, 1))
    assert sweep(only) == only
    assert sweep_inverse(only) == only


def test_dyck_embedding():
    d = Filter(3, 4, (0, 2, 4))
    t = dyck_embedding(d)
    assert t.removals == (0, 2, 3, 5)
    assert t.initial == d
    with pytest.raises(NotDyck):
        dyck_embedding(Filter(3, 4, (1, 2, 3)))


def test_sweep_column_word_matches_swept_path():
    for m, n in ((4, 3), (5, 3), (3, 5), (4, 7)):
        for d in dyck_filters(m, n):
            word_ = sweep_column_word(d)
            assert word_.letters == tuple(sorted(word_.letters))
            assert word_ == dyck_word(sweep(d))


def test_sweep_column_words_published():
    got = {str(sweep_column_word(d)) for d in dyck_filters(4, 3)}
    assert got == {ZETA_4_3[row] for row in ZETA_4_3_DYCK_ROWS}


def test_sweep_bijective_and_invertible():
    pairs = [
        (m, n)
        for m in range(2, 8)
        for n in range(2, 8)
        if __import__("math").gcd(m, n) == 1
    ] + [(4, 7)]
    for m, n in pairs:
        filters = dyck_filters(m, n)
        images = set()
        for d in filters:
            swept = sweep(d)
            images.add(swept.row_minima)
            assert sweep_inverse(swept) == d
        assert len(images) == len(filters)


def test_sweep_preserves_step_multiset():
    from ratpark import dyck_filter_to_path

    for d in dyck_filters(4, 7):
        steps, _ = dyck_filter_to_path(d)
        swept_steps, _ = dyck_filter_to_path(sweep(d))
        assert sorted(steps) == sorted(swept_steps)
