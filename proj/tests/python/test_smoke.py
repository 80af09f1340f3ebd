import pytest

import polsearch as ps


def test_parse_and_render():
    f = ps.parse_formula("down a- -> a-")
    assert str(f) == "down a- -> a-"
    assert f.negative and f.composite_negative
    assert f.weight == 5
    s = ps.parse_sequent("x: a- |- a-")
    assert s.rstable
    assert s.weight == 2


def test_space_and_decisions():
    s = ps.parse_sequent("x: a- |- a-")
    rep = ps.space(s)
    assert str(rep) == "gfp X0@(x: a- |- a-). coret x (nil)"
    assert rep.guarded and rep.well_bound and rep.closed
    assert ps.inhabited(s)
    assert ps.finite(s)
    assert ps.count(s) == 1


def test_members_match_oracle():
    s = ps.parse_sequent("x: a-, y: a- |- a-")
    ms = ps.members(s, 6)
    assert [str(t) for t in ms] == ["coret x (nil)", "coret y (nil)"]
    assert ms == ps.oracle_search(s, 6)
    assert ps.count(s) == 2


def test_infinite_family():
    s = ps.parse_sequent("x: down a- -> a-, y: a- |- a-")
    assert ps.inhabited(s) and not ps.finite(s)
    with pytest.raises(ps.PreconditionError):
        ps.count(s)
    sizes = [len(ps.members(s, k)) for k in (4, 8, 12, 16)]
    assert sizes == [1, 2, 3, 4]


def test_ljt_pipeline():
    peirce = ps.parse_ljt_sequent("=> ((a -> b) -> a) -> a")
    assert not ps.ljt_inhabited(peirce)
    assert ps.ljt_inhabited(ps.parse_ljt_sequent("=> a -> a"))
    assert ps.ljt_count(ps.parse_ljt_sequent("p: a /\\ a |- a")) == 2
    ms = ps.members_ljt(ps.parse_ljt_sequent("x: a => a \\/ b"), 12)
    assert [str(t) for t in ms] == ["inj1[b](x(nil))"]


def test_translation_round_trip():
    t = ps.parse_ljt_term("lam x@a. x(nil)")
    image = ps.star_term(t)
    assert str(image) == "lam(x@a-. coret x (nil))"
    assert ps.forget_term(image) == t
    assert str(ps.star_formula(ps.parse_iformula("a \\/ b"))) == "up (down a- \\/ down b-)"
    seq = ps.parse_ljt_sequent("x: a |- a")
    assert ps.check(ps.star_sequent(seq), image) is False  # wrong sort for a stable sequent
    assert ps.check_ljt(ps.parse_ljt_sequent("=> a -> a"), t)


def test_unfold():
    rep = ps.space(ps.parse_sequent("x: down a- -> a- |- a-"))
    once = rep.unfold()
    assert "gfp" in str(once)
    assert str(once).startswith("coret x")
