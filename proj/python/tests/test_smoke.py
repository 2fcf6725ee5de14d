from fractions import Fraction

import pytest

import cosetgrowth as cg


def test_presentation_round_trip():
    p = cg.Presentation.parse("< a b | a b A B >")
    assert p.rank == 2
    assert p.generators == ["a", "b"]
    assert len(p.relators) == 1
    assert p.reduce("a b B A b") == "b"


def test_small_cancellation():
    comm = cg.Presentation.parse("< a b | a b A B >")
    assert cg.max_piece(comm) == 1
    assert cg.satisfies_metric_condition(comm, Fraction(1, 3))
    assert not cg.satisfies_metric_condition(comm, "1/4")
    g2 = cg.Presentation.parse("< a b c d | a b A B c d C D >")
    assert cg.dehn_reduce(g2, "a b A B c") == "d c D"


def test_uncertified_dehn_raises():
    with pytest.raises(cg.CosetGrowthError):
        cg.dehn_reduce(cg.Presentation.parse("< a b | a b A B >"), "a")


def test_stallings():
    assert cg.is_member(["a b", "b a"], "a b b a")
    assert not cg.is_member(["a b"], "b a")
    assert cg.is_finite_index(["a a", "b", "a b A"])
    assert cg.double_coset_canonical(["a"], ["b"], "a a b a b b") == "b a"


def test_growth():
    assert cg.growth(cg.Presentation.free_group(2), 3)["counts"] == [1, 5, 17, 53]
    assert cg.double_coset_growth(["a"], ["b"], 6)["counts"] == [1, 1, 5, 13, 41, 121, 365]


def test_rips_and_theorem1_check():
    h = cg.build_rips(cg.Presentation.parse("< x | >"))
    assert h.rank == 3
    assert len(h.relators) == 4
    assert cg.satisfies_metric_condition(h, Fraction(1, 6))
    rep = cg.theorem1_check(cg.Presentation.parse("< x | >"), 4)
    assert rep["gr"] == [1, 3, 5, 7, 9]
    assert rep["passed"]
