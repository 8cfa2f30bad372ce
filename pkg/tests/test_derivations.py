import pytest
from hypothesis import given, settings, strategies as st

from lrbounds.derivations import (
    delete_rows,
    left_top_standardization,
    lower_derivation,
    lower_ladder,
    row_subsets,
    top_left_standardization,
    truncate_columns,
    upper_derivation,
)
from lrbounds.partitions import CellRegion, SkewShape, partitions_in_box, region_of, skew, transpose
from oracles import skew_shapes_in_box

EX = skew((5, 4, 4, 1), (2, 1))


def test_standardizations():
    assert left_top_standardization(region_of(EX)) == (4, 3, 3, 1)
    assert top_left_standardization(region_of(EX)) == (5, 4, 2)
    assert left_top_standardization(CellRegion()) == ()
    assert top_left_standardization(CellRegion()) == ()
    assert top_left_standardization(region_of(skew((3,)))) == (3,)
    assert left_top_standardization(region_of(skew((4, 2, 2)))) == (4, 2, 2)


def test_truncate_columns():
    assert sorted(truncate_columns(EX, 1).row_sizes().values(), reverse=True) == [3, 2, 1]
    assert truncate_columns(EX, 0) == region_of(EX)
    assert len(truncate_columns(EX, 3)) == 0
    with pytest.raises(ValueError):
        truncate_columns(EX, -1)


def test_delete_rows():
    r = delete_rows(EX, (3,))
    assert sorted(r.column_sizes().values(), reverse=True) == [2, 2, 1, 1, 1]
    assert top_left_standardization(r) == (5, 2)
    assert len(delete_rows(EX, (1, 2, 3, 4))) == 0
    assert delete_rows(EX, ()) == region_of(EX)
    with pytest.raises(IndexError):
        delete_rows(EX, (5,))
    with pytest.raises(ValueError):
        delete_rows(EX, (3, 1))


def test_lower_ladder():
    assert [lower_derivation(EX, i) for i in range(4)] == [(4, 3, 3, 1), (3, 2, 1), (2,), ()]
    assert lower_ladder(EX) == ((4, 3, 3, 1), (3, 2, 1), (2,), ())
    assert lower_derivation(skew((2, 2), (2, 2)), 3) == ()


@pytest.mark.parametrize("gamma", [(3, 2, 2, 1), (4, 4, 1), (5,), (2, 2, 2, 2)])
def test_lower_derivation_of_straight_shape(gamma):
    for i in range(len(gamma) + 1):
        assert lower_derivation(skew(gamma), i) == gamma[i:]


def test_upper_ladder():
    got = [upper_derivation(EX, rows) for rows in [(), (3,), (1, 3), (1, 2, 3), (1, 2, 3, 4)]]
    assert got == [(5, 4, 2), (5, 2), (4,), (1,), ()]
    assert upper_derivation(skew((1,))) == (1,)


def test_row_subsets_skip_empty_rows():
    s = skew((3, 2, 1), (3,))
    assert list(row_subsets(s)) == [(), (2,), (3,), (2, 3)]
    assert list(row_subsets(EX, max_size=1)) == [(), (1,), (2,), (3,), (4,)]


def test_transpose_identity_and_sizes():
    for s in skew_shapes_in_box(5):
        r = region_of(s)
        assert top_left_standardization(r) == transpose(left_top_standardization(r.transpose()))
        assert sum(upper_derivation(s)) == s.size
        depth = max(r.column_sizes().values(), default=0)
        for i in range(depth, depth + 2):
            assert lower_derivation(s, i) == ()


@st.composite
def nested_regions(draw):
    box = partitions_in_box(5, 5)
    gamma = draw(st.sampled_from(box))
    outer = sorted(region_of(SkewShape(gamma)).cells)
    keep = draw(st.lists(st.booleans(), min_size=len(outer), max_size=len(outer)))
    inner = [c for c, k in zip(outer, keep) if k]
    return CellRegion(frozenset(inner)), CellRegion(frozenset(outer))


@settings(max_examples=300)
@given(nested_regions())
def test_standardizations_are_monotone(pair):
    small, big = pair
    for std in (left_top_standardization, top_left_standardization):
        a, b = std(small), std(big)
        assert len(a) <= len(b) and all(x <= y for x, y in zip(a, b))
