import pytest

from conftest import S1, S2, S3, S4, S_CONTENT
from lrbounds.partitions import skew
from lrbounds.tableaux import (
    SkewTableau,
    content,
    format_tableau,
    is_lattice,
    is_lr,
    is_semistandard,
    parse_tableau,
    reverse_reading_word,
)
from oracles import semistandard_fillings, skew_shapes_in_box


def word(s):
    return tuple(int(c) for c in s)


def test_content():
    assert content(parse_tableau(S_CONTENT)) == (1, 3, 0, 1)
    assert content(SkewTableau({})) == ()
    assert content(SkewTableau.from_rows(skew((4,)), [[1, 1, 1, 1]])) == (4,)


def test_reverse_reading_words():
    assert reverse_reading_word(parse_tableau(S1)) == word("123121")
    assert reverse_reading_word(parse_tableau(S2)) == word("112133")
    assert reverse_reading_word(parse_tableau(S3)) == word("112132")
    assert reverse_reading_word(parse_tableau(S4)) == word("112234")
    assert reverse_reading_word(SkewTableau({})) == ()


@pytest.mark.parametrize("w, expected", [("12132", True), ("1232", False), ("", True), ("2", False), ("1122", True)])
def test_is_lattice(w, expected):
    assert is_lattice(word(w)) is expected


def test_semistandard_and_lr():
    assert is_semistandard(parse_tableau(S3))
    assert not is_semistandard(parse_tableau(S4))
    assert is_semistandard(SkewTableau({(0, 0): 7}))
    assert is_lr(parse_tableau(S3))
    assert not is_lr(parse_tableau(S1))
    assert not is_lr(parse_tableau(S2))
    assert not is_lr(parse_tableau(S4))
    assert is_lr(SkewTableau({}))


def test_column_check_only_between_neighbours():
    # (0,1) and (2,1) share a column but are not adjacent
    t = SkewTableau({(0, 1): 3, (2, 1): 1, (2, 0): 1})
    assert is_semistandard(t)


def test_text_round_trip():
    for text in (S1, S_CONTENT, ". .\n1"):
        t = parse_tableau(text)
        assert parse_tableau(format_tableau(t)) == t
    with pytest.raises(ValueError):
        parse_tableau(". x\n1")


def test_lr_contents_are_partitions_and_word_length():
    for s in skew_shapes_in_box(4):
        for t in semistandard_fillings(s, 3):
            assert len(reverse_reading_word(t)) == s.size
            if is_lr(t):
                c = content(t)
                assert all(a >= b for a, b in zip(c, c[1:]))
