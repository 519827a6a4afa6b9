import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import float_turning_number
from tckit.bordism.cells import OneCell, TwoCell, apply_layer
from tckit.bordism.circles import (
    FramedImmersedCircle,
    circle_family,
    circle_invariant,
    figure_eight,
    looped_circle,
    parse_polygon,
    turning_number,
)
from tckit.bordism.framing import FramingClass, framing_compose, identity, loop, stabilize
from tckit.bordism.grammar import parse_word, parse_word_file
from tckit.bordism.rewrite import (
    Adjunction,
    ProofStep,
    RuleSet,
    default_rules,
    replay_validate,
    rewrite_check,
    verify_ambidexterity,
    verify_radford,
)
from tckit.bordism.words import (
    inverse_serre_word,
    radford_conjugated_word,
    radford_inverse_word,
    radford_word,
    serre_word,
    two_cell,
)
from tckit.errors import ParseError, TCKitError, TypecheckError

P = ("P+",)


# framing ------------------------------------------------------------------------------


def test_n2_composition_is_integer_addition():
    assert framing_compose(loop(2), loop(2)) == FramingClass(2, -2)
    assert loop(2).value == -1


def test_n3_loop_squared_is_identity():
    assert (loop(3) + loop(3)).is_identity()
    assert not loop(3).is_identity()


def test_stabilize_reduces_mod_two():
    assert stabilize(loop(2)) == FramingClass(3, 1)
    assert stabilize(loop(2) + loop(2)).is_identity()


def test_mismatched_dimensions_rejected():
    with pytest.raises(TCKitError):
        framing_compose(loop(2), loop(3))


@given(st.integers(2, 5), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_framing_group_laws(n, a, b, c):
    x, y, z = FramingClass(n, a), FramingClass(n, b), FramingClass(n, c)
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x + identity(n) == x
    assert (x + (-x)).is_identity()


# circles ------------------------------------------------------------------------------


def square(side="left"):
    return FramedImmersedCircle(((0, 0), (1, 0), (1, 1), (0, 1)), side)


def test_ccw_square_left_is_plus_one():
    assert circle_invariant(square()) == 1


def test_mirror_framing_negates():
    assert circle_invariant(square("right")) == -1


def test_figure_eight_zero():
    c = figure_eight()
    assert turning_number(c) == 0 == float_turning_number(c.vertices)
    assert circle_invariant(c) == 0


def test_family_is_bijective_onto_minus3_to_3():
    values = [circle_invariant(c) for c in circle_family()]
    assert sorted(values) == list(range(-3, 4))
    for c in circle_family():
        assert turning_number(c) == float_turning_number(c.vertices)


@pytest.mark.parametrize("loops", [0, 1, 2, 3])
def test_looped_circles(loops):
    c = looped_circle(loops)
    assert turning_number(c) == float_turning_number(c.vertices) == -(loops + 1)


def test_degenerate_polygons_rejected():
    with pytest.raises(TCKitError):
        FramedImmersedCircle(((0, 0), (0, 0), (1, 1)))
    with pytest.raises(TCKitError):
        FramedImmersedCircle(((0, 0), (2, 0), (1, 0)))
    with pytest.raises(TCKitError):
        FramedImmersedCircle(((0, 0), (1, 0)))


def test_parse_polygon():
    c = parse_polygon("# square\n0 0\n1, 0\n1 1\n0 1\n", "right")
    assert c.vertices[1] == (1, 0) and c.normal_side == "right"
    with pytest.raises(ParseError):
        parse_polygon("0 0\n1\n")
    with pytest.raises(ParseError):
        parse_polygon("0 0\n1 x\n2 2\n")


ROTATIONS = [(Fraction(3, 5), Fraction(4, 5)), (Fraction(5, 13), Fraction(12, 13)), (Fraction(0), Fraction(1))]


def rotate(c, cs):
    co, si = cs
    return FramedImmersedCircle(tuple((co * x - si * y, si * x + co * y) for x, y in c.vertices), c.normal_side)


def subdivide(c, i):
    v = list(c.vertices)
    a, b = v[i], v[(i + 1) % len(v)]
    v.insert(i + 1, ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2))
    return FramedImmersedCircle(tuple(v), c.normal_side)


def random_polygon(rng):
    while True:
        n = rng.randint(3, 12)
        pts = tuple((Fraction(rng.randint(-20, 20)), Fraction(rng.randint(-20, 20))) for _ in range(n))
        try:
            return FramedImmersedCircle(pts, rng.choice(["left", "right"]))
        except TCKitError:
            continue


def test_fifty_random_polygons_subdivision_and_rotation():
    rng = random.Random(77)
    for _ in range(50):
        c = random_polygon(rng)
        base = circle_invariant(c)
        assert turning_number(c) == float_turning_number(c.vertices)
        assert circle_invariant(subdivide(c, rng.randrange(len(c.vertices)))) == base
        for cs in ROTATIONS:
            assert circle_invariant(rotate(c, cs)) == base


@given(st.integers(0, 10**9))
def test_invariance_property(seed):
    rng = random.Random(seed)
    c = random_polygon(rng)
    assume(len(c.vertices) >= 3)
    assert circle_invariant(subdivide(c, 0)) == circle_invariant(c)
    assert circle_invariant(rotate(c, rng.choice(ROTATIONS))) == circle_invariant(c)
    assert turning_number(c) == float_turning_number(c.vertices)


# words ------------------------------------------------------------------------------


def test_serre_word_typechecks():
    c = serre_word().cell
    assert c.source == P and c.target == P


def test_inverse_serre_differs_only_in_evaluation():
    s, t = serre_word().cell.gens(), inverse_serre_word().cell.gens()
    diff = [(a, b) for a, b in zip(s, t) if a != b]
    assert len(s) == len(t) and diff == [("evR", "evL")]


def test_radford_boundaries():
    r = radford_word().cell
    assert r.source == OneCell.generator("evL") and r.target == OneCell.generator("evR")
    ri = radford_inverse_word().cell
    assert ri.source == OneCell.generator("evR") and ri.target == OneCell.generator("evL")
    loop_cell = r.then(ri)
    assert loop_cell.source == loop_cell.target == OneCell.generator("evL")


def test_radford_conjugated_word():
    c = radford_conjugated_word().cell
    assert c.source == inverse_serre_word().cell
    assert c.target == serre_word().cell


def test_ill_typed_words_rejected():
    with pytest.raises(TypecheckError):
        two_cell(parse_word("comp(v1, u1)"))
    with pytest.raises(TypecheckError):
        two_cell(parse_word("comp(R, R)"))
    with pytest.raises(TypecheckError):
        two_cell(parse_word("nonsense"))
    with pytest.raises(TypecheckError):
        apply_layer(OneCell.generator("ev"), (0, "v1", 0))


def test_aliases():
    assert two_cell(parse_word("ut")).source == two_cell(parse_word("u1")).source
    assert TwoCell.generator("ṽ").target == TwoCell.generator("v1").target


# grammar ------------------------------------------------------------------------------


def test_parse_matches_builtin_radford():
    e = parse_word("comp(side(id(evL), v2R), side(v1, id(evR)))")
    assert two_cell(e) == radford_word().cell
    assert two_cell(parse_word("R")) == radford_word().cell


@pytest.mark.parametrize("bad", ["", "comp(", "comp(a,,b)", "frob(x)", "comp(a) b", "a)", "comp(a b)"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_word(bad)


def test_word_file():
    wf = parse_word_file("# c\nlhs = comp(R, Rinv)\nrhs = id(evL)\nbudget = 50\n")
    assert wf.budget == 50 and str(wf.rhs) == "id(evL)"
    for bad in ("lhs = R\n", "lhs = R\nrhs = R\nrhs = R\n", "lhs = R\nrhs = R\nbudget = x\n", "foo\n"):
        with pytest.raises(ParseError):
            parse_word_file(bad)


# rewriting ------------------------------------------------------------------------------


def test_single_zigzag_is_one_step():
    # (id_G ⊙ ε) ∘ (η ⊙ id_G) on G = ev for evL ⊣ ev
    lhs = two_cell(parse_word("comp(side(u1, ev), side(ev, v1))"))
    tr = rewrite_check(lhs, TwoCell.identity(OneCell.generator("ev")))
    assert tr and len(tr.steps) == 1 and tr.steps[0].rule.startswith("zigzag")
    assert replay_validate(tr, default_rules())


def test_ambidexterity_traces():
    traces = verify_ambidexterity()
    assert len(traces) == 2
    for tr in traces:
        assert tr and replay_validate(tr, default_rules())
        assert tr.explored <= 10_000
        assert tr.steps[-1].after == ()


def test_radford_traces():
    for tr in verify_radford():
        assert tr and replay_validate(tr, default_rules())
        assert tr.explored <= 10_000


def test_every_step_preserves_boundaries():
    for tr in verify_radford() + verify_ambidexterity():
        for step in tr.steps:
            assert TwoCell(tr.source, step.before).target == tr.target
            assert TwoCell(tr.source, step.after).target == tr.target


def test_tampered_trace_rejected():
    tr = verify_radford()[0]
    s = tr.steps[0]
    tr.steps[0] = ProofStep("interchange", s.before, tr.steps[1].after)
    assert not replay_validate(tr, default_rules())


def test_closed_loop_not_derivable():
    lhs = two_cell(parse_word("comp(v2R, v2)"))
    res = rewrite_check(lhs, TwoCell.identity(OneCell.identity(())), budget=300)
    assert not res
    assert res.explored <= 300


def test_boundary_mismatch_raises():
    with pytest.raises(TypecheckError):
        rewrite_check(radford_word().cell, TwoCell.identity(OneCell.generator("evL")))


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("TCKIT_REWRITE_BUDGET", "1")
    lhs = two_cell(parse_word("comp(v2R, v2)"))
    res = rewrite_check(lhs, TwoCell.identity(OneCell.identity(())))
    assert not res and res.budget == 1


def test_without_evr_adjunction_radford_fails():
    rules = RuleSet(adjunctions=(Adjunction("evL", "ev", "u1", "v1"),))
    r, ri = radford_word().cell, radford_inverse_word().cell
    res = rewrite_check(r.then(ri), TwoCell.identity(r.source), rules, budget=500)
    assert not res


def test_inverse_cancellation():
    rules = default_rules().extend(invertible=("v2R",))
    lhs = two_cell(parse_word("comp(v2R, inv(v2R))"))
    tr = rewrite_check(lhs, TwoCell.identity(OneCell.identity(())), rules)
    assert tr and replay_validate(tr, rules) and tr.steps[0].rule == "cancel v2R"


def test_identical_sides_trivial_trace():
    r = radford_word().cell
    tr = rewrite_check(r, r)
    assert tr and tr.steps == []
