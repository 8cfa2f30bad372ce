import pytest

from lrbounds.bumping import BumpError, TiledTableau, bump_cell, bump_row, iterated_bump
from lrbounds.oracle import enumerate_lr_tableaux, lr_expansion, minimal_content_tableau
from lrbounds.partitions import skew
from lrbounds.tableaux import content, parse_tableau
from oracles import skew_shapes_in_box


@pytest.fixture
def tiled_bump(bump_example):
    return TiledTableau.canonical(bump_example)


def test_bump_single_cell(tiled_bump):
    out = bump_cell(tiled_bump, (5, 3))
    assert content(out.tableau) == (6, 7, 5, 4, 1)
    assert out.is_valid()
    assert (5, 3) not in out.tableau.labels


def test_bump_row_six(tiled_bump):
    out = bump_row(tiled_bump, 6)
    assert content(out.tableau) == (5, 7, 5, 4, 1)
    assert out.tableau.shape == skew((11, 10, 7, 6, 6, 4), (6, 5, 4, 4, 2, 1))
    assert out.is_valid()


def test_small_cases():
    one = TiledTableau.canonical(parse_tableau("1"))
    assert bump_row(one, 1).tableau.labels == {}
    col = TiledTableau.canonical(parse_tableau("1\n2"))
    assert bump_cell(col, (1, 0)).tableau.labels == {(0, 0): 2}
    m = minimal_content_tableau(skew((2, 2)))
    out = bump_row(TiledTableau.canonical(m), 1)
    assert content(out.tableau) == (0, 2) and out.is_valid()


def test_errors(tiled_bump):
    with pytest.raises(BumpError):
        bump_cell(tiled_bump, (0, 0))
    with pytest.raises(IndexError):
        bump_row(tiled_bump, 8)
    with pytest.raises(ValueError):
        iterated_bump(tiled_bump, (3, 1))


def test_iterated_bump(tiled_bump):
    assert iterated_bump(tiled_bump, ()) == tiled_bump
    assert iterated_bump(tiled_bump, (6,)) == bump_row(tiled_bump, 6)
    both = iterated_bump(tiled_bump, (1, 3))
    assert both.tableau.shape == skew((10, 6, 6, 4, 4), (5, 4, 2, 2, 1))
    assert both.is_valid()
    assert iterated_bump(tiled_bump, range(1, 8)).tableau.labels == {}


def test_subindexed():
    tt = TiledTableau.canonical(parse_tableau("1 1\n2"))
    assert tt.subindexed() == "1_2 1_1\n2_1"


def test_every_row_bump_in_3x3_box():
    for s in skew_shapes_in_box(3):
        for mu in lr_expansion(s):
            for t in enumerate_lr_tableaux(s, mu):
                tt = TiledTableau.canonical(t)
                for r in s.nonempty_rows():
                    out = bump_row(tt, r + 1)
                    assert out.is_valid()
                    assert out.tableau.shape == s.without_rows([r])
                    assert sum(content(out.tableau)) == s.size - len(s.row_span(r))
