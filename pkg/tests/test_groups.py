import pytest

from jgarside import (BraidParams, G33, HomSpec, Presentation, apply_hom,
                      build_presentation, check_hom, concat_signed, g33_form,
                      group_context, invert_signed, parse_signed,
                      signed_of_word, signed_power, signed_text)
from jgarside.groups import G33_PRESENTATION

from independent_oracles import (oracle_fraction_of_z_inverse,
                                 oracle_g33_form)


@pytest.fixture(scope="module")
def gctx(certified):
    ctx, cert = certified(1, 1)
    assert cert.valid
    return group_context(ctx)


def test_signed_parsing_round_trip():
    p = Presentation(("a", "b"), (1, 1), ((bytes([0, 1]), bytes([1, 0])),))
    w = parse_signed(p, "a.b^-1.a^2.b^0")
    assert w == ((0, 1), (1, -1), (0, 1), (0, 1))
    assert signed_text(p, w) == "a.b^-1.a.a"
    assert parse_signed(p, "1") == ()
    assert signed_text(p, ()) == "1"
    assert parse_signed(p, signed_text(p, w)) == w


def test_signed_algebra():
    w = ((0, 1), (1, -1))
    assert invert_signed(w) == ((1, 1), (0, -1))
    assert invert_signed(invert_signed(w)) == w
    assert concat_signed(w, ()) == w
    assert signed_power(w, 2) == w + w
    assert signed_power(w, -1) == invert_signed(w)
    assert signed_power(w, 0) == ()
    assert signed_of_word(bytes([1, 0])) == ((1, 1), (0, 1))


def test_fraction_of_z_inverse(gctx):
    p = gctx.presentation
    k, tail = oracle_fraction_of_z_inverse()
    f = gctx.fraction_of(parse_signed(p, "z^-1"))
    assert f.k == k
    assert "".join(p.names[c] for c in f.p.canonical) == tail


def test_fraction_reduction(gctx):
    p = gctx.presentation
    # Delta * Delta^-1 collapses to the identity fraction
    w = parse_signed(p, "x.y.z.z^-1.y^-1.x^-1")
    f = gctx.fraction_of(w)
    assert f.k == 0 and f.p.canonical == b""
    assert gctx.equal(w, ())


def test_group_equal_on_relations(gctx):
    p = gctx.presentation
    assert gctx.equal(parse_signed(p, "x.y.z"), parse_signed(p, "z.x.y"))
    assert not gctx.equal(parse_signed(p, "x"), parse_signed(p, "y"))
    # conjugation: z.x.z^-1 = the same element as x conjugated
    lhs = parse_signed(p, "z.x.y.z^-1")
    rhs = parse_signed(p, "x.y")
    assert gctx.equal(lhs, rhs) == gctx.equal(
        concat_signed(parse_signed(p, "z"), parse_signed(p, "x.y")),
        concat_signed(parse_signed(p, "x.y"), parse_signed(p, "z")))


def test_group_requires_valid_certificate():
    from jgarside import MonoidContext
    from jgarside.groups import GroupContext
    ctx = MonoidContext(build_presentation(
        BraidParams(1, 1, variant="enlarged")))
    with pytest.raises(ValueError):
        GroupContext(ctx)


def test_g33_form_matches_oracle():
    want = oracle_g33_form()
    p = G33_PRESENTATION
    for text, expected in zip(("s.t.u", "t.u.s", "u.s.t"), want):
        form = g33_form(parse_signed(p, text))
        got = (tuple((p.names[c], e) for c, e in form.word), form.k)
        assert got == expected


def test_g33_model_decides_relations():
    p = G33_PRESENTATION
    stu = parse_signed(p, "s.t.u")
    tus = parse_signed(p, "t.u.s")
    ust = parse_signed(p, "u.s.t")
    assert G33.equal(stu, tus) and G33.equal(tus, ust)
    assert not G33.equal(parse_signed(p, "s"), parse_signed(p, "t"))
    # the central element commutes with everything
    s = parse_signed(p, "s")
    assert G33.equal(concat_signed(stu, s), concat_signed(s, stu))
    # free reduction
    assert G33.equal(parse_signed(p, "s.s^-1"), ())


def test_g33_center_powers_distinct():
    p = G33_PRESENTATION
    stu = parse_signed(p, "s.t.u")
    assert not G33.equal(stu, ())
    assert not G33.equal(signed_power(stu, 2), stu)


def test_apply_hom_and_check_hom():
    p = G33_PRESENTATION
    # the inner automorphism by s preserves the relations
    images = tuple(parse_signed(p, f"s.{name}.s^-1") for name in p.names)
    h = HomSpec(p, G33, images)
    image = apply_hom(h, parse_signed(p, "s.t^-1"))
    assert G33.equal(image, parse_signed(p, "s.s.t^-1.s^-1"))
    rep = check_hom(h)
    assert rep.passed
    assert all(c.ok for c in rep.checks)


def test_check_hom_detects_failure():
    p = G33_PRESENTATION
    # s -> s, t -> t, u -> s is not a homomorphism of this presentation
    images = (((0, 1),), ((1, 1),), ((0, 1),))
    rep = check_hom(HomSpec(p, G33, images))
    assert not rep.passed


def test_hom_into_group_context(gctx):
    src = gctx.presentation
    images = tuple(((i, 1),) for i in range(src.rank))
    rep = check_hom(HomSpec(src, gctx, images))
    assert rep.passed
