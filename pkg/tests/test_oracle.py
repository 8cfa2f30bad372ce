import pytest

from conftest import LR_PAIR
from lrbounds.derivations import lower_derivation, upper_derivation
from lrbounds.oracle import (
    count_lr_tableaux,
    enumerate_lr_tableaux,
    lr_coefficient,
    lr_expansion,
    maximal_content_tableau,
    minimal_content_tableau,
)
from lrbounds.partitions import gdom_le, partitions_in_box, skew, subpartitions
from lrbounds.tableaux import content, is_lr, parse_tableau
from oracles import naive_lr_count, skew_shapes_in_box


def test_running_example_has_two_tableaux():
    tabs = enumerate_lr_tableaux(skew((4, 3, 2), (2, 1)), (3, 2, 1))
    assert len(tabs) == 2
    assert set(tabs) == {parse_tableau(t) for t in LR_PAIR}
    assert lr_coefficient((4, 3, 2), (2, 1), (3, 2, 1)) == 2


def test_degenerate_inputs():
    assert len(enumerate_lr_tableaux(skew((2, 1), (2, 1)), ())) == 1
    assert enumerate_lr_tableaux(skew((3, 3, 2), (2, 1)), (5,)) == []
    assert enumerate_lr_tableaux(skew((3, 3, 2), (2, 1)), (4,)) == []  # wrong size
    assert lr_coefficient((3, 2), (3, 2), ()) == 1
    assert lr_coefficient((2,), (3,), ()) == 0
    assert lr_coefficient((3, 2), (1,), (2, 1)) == 0


def test_against_naive_value():
    # frozen from the generate-and-filter oracle
    assert naive_lr_count((4, 3, 2), (2, 1), (4, 2)) == 1
    assert lr_coefficient((4, 3, 2), (2, 1), (4, 2)) == 1


def test_agrees_with_naive_in_3x3_box():
    box = partitions_in_box(3, 3)
    for gamma in box:
        for lam in subpartitions(gamma):
            for mu in box:
                if mu.size == gamma.size - lam.size:
                    assert lr_coefficient(gamma, lam, mu) == naive_lr_count(gamma, lam, mu)


def test_enumerated_tableaux_are_lr_with_content():
    for s in skew_shapes_in_box(4):
        exp = lr_expansion(s)
        for mu, c in exp.items():
            tabs = enumerate_lr_tableaux(s, mu)
            assert len(tabs) == c == count_lr_tableaux(s, mu)
            assert all(is_lr(t) and content(t) == tuple(mu) for t in tabs)
            assert gdom_le(lower_derivation(s, 0), mu) and gdom_le(mu, upper_derivation(s))


def test_minimal_content_tableau():
    s = skew((4, 3, 2), (2, 1))
    t = minimal_content_tableau(s)
    assert content(t) == (2, 2, 2) == lower_derivation(s, 0)
    assert is_lr(t) and enumerate_lr_tableaux(s, (2, 2, 2)) == [t]
    assert set(minimal_content_tableau(skew((4,))).labels.values()) == {1}
    col = minimal_content_tableau(skew((1, 1, 1)))
    assert [col[(i, 0)] for i in range(3)] == [1, 2, 3]
    strip = minimal_content_tableau(skew((3, 2, 1), (2, 1)))
    assert [strip[c] for c in [(0, 2), (1, 1), (2, 0)]] == [1, 2, 3]
    with pytest.raises(ValueError):
        minimal_content_tableau(skew((2,), (2,)))


def test_maximal_content_tableau():
    s = skew((5, 4, 4, 1), (2, 1))
    t = maximal_content_tableau(s)
    assert content(t) == (5, 4, 2) and is_lr(t)
    assert enumerate_lr_tableaux(s, (5, 4, 2)) == [t]
    col = maximal_content_tableau(skew((1, 1, 1, 1)))
    assert [col[(i, 0)] for i in range(4)] == [1, 2, 3, 4]
    assert set(maximal_content_tableau(skew((3,))).labels.values()) == {1}
    with pytest.raises(ValueError):
        maximal_content_tableau(skew(()))


def test_expansion_sums_in_small_box():
    # sum over contents equals the number of LR tableaux found per content
    for s in skew_shapes_in_box(3):
        exp = lr_expansion(s)
        assert all(sum(mu) == s.size for mu in exp)
