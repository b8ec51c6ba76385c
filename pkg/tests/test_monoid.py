import pytest

from jgarside import (BraidParams, BudgetExceeded, Budgets, MonoidContext,
                      Presentation, cancellative_oracle,
                      check_C2_presentation, build_presentation,
                      family_context, special_words, verify_garside)
import jgarside.monoid as monoid_mod

from independent_oracles import (TRIPLE_RELS, canon, cover_edges,
                                 left_divisor_classes,
                                 oracle_cancellativity_violation,
                                 oracle_divisor_counts,
                                 oracle_greedy_nf_xyzx)


def triple_ctx(budgets=None):
    # the enlarged variant of the same monoid: every letter pair carries a
    # complement, so both engines are available
    return MonoidContext(
        build_presentation(BraidParams(1, 1, variant="enlarged")), budgets)


def to_str(p, word):
    return "".join(p.names[c] for c in word)


def test_closure_matches_oracle():
    ctx = triple_ctx()
    p = ctx.presentation
    w = p.parse_word("x.y.z.x")
    ours = {to_str(p, v) for v in ctx.closure(w)}
    import independent_oracles as oracle
    theirs = oracle.closure(TRIPLE_RELS, "xyzx")
    assert ours == theirs


def test_canonical_is_least_and_stable():
    ctx = triple_ctx()
    p = ctx.presentation
    for text in ("x.y.z", "z.x.y", "y.z.x"):
        w = p.parse_word(text)
        assert to_str(p, ctx.canonical(w)) == canon(TRIPLE_RELS, "xyz")
    c = ctx.canonical(p.parse_word("z.x.y"))
    assert ctx.canonical(c) == c


def test_equal_brute_and_theta_agree():
    ctx = triple_ctx()
    p = ctx.presentation
    assert ctx.cube_ok
    cases = (("x.y.z", "z.x.y", True), ("x.y.z", "y.z.x", True),
             ("x.y", "y.x", False), ("x", "y", False),
             ("1", "1", True), ("x.y.z.x", "z.x.y.x", True))
    for a, b, want in cases:
        u, v = p.parse_word(a), p.parse_word(b)
        assert ctx.words_equal(u, v, mode="brute") is want
        assert ctx.words_equal(u, v, mode="theta") is want


def test_divides_left_returns_quotient():
    ctx = triple_ctx()
    p = ctx.presentation
    q = ctx.divides_left(p.parse_word("z"), p.parse_word("x.y.z"))
    assert q is not None and to_str(p, q.canonical) == "xy"
    assert ctx.divides_left(p.parse_word("z.z"), p.parse_word("x.y.z")) is None


def test_left_divisors_match_prefix_oracle():
    ctx = triple_ctx()
    p = ctx.presentation
    Delta = p.parse_word("x.y.z")
    for mode in ("theta-bfs", "prefix-oracle"):
        ds = ctx.left_divisors(Delta, mode=mode)
        ours = {to_str(p, e.canonical) for e in ds.members}
        ours = {w if w else "" for w in ours}
        assert ours == left_divisor_classes(TRIPLE_RELS, "xyz")
    assert len(ds.members) == oracle_divisor_counts()[0]


def test_cover_edges_match_oracle():
    ctx = triple_ctx()
    p = ctx.presentation
    ds = ctx.left_divisors(p.parse_word("x.y.z"))
    ours = {(to_str(p, a.canonical), to_str(p, b.canonical))
            for a, b in ds.hasse}
    assert ours == cover_edges(TRIPLE_RELS, "xyz")


def test_right_divisors_via_opposite():
    ctx = triple_ctx()
    p = ctx.presentation
    ds = ctx.right_divisors(p.parse_word("x.y.z"))
    # Delta-divisors are two-sided in this monoid
    left = ctx.left_divisors(p.parse_word("x.y.z"))
    assert ds.members == left.members


def test_verify_garside_triple():
    ctx = triple_ctx()
    cert = verify_garside(ctx, ctx.parse("x.y.z"))
    assert cert.valid
    assert len(cert.simples.members) == 8
    assert ctx.certificate is cert


def test_greedy_nf_matches_oracle():
    ctx = triple_ctx()
    cert = verify_garside(ctx, ctx.parse("x.y.z"))
    assert cert.valid
    factors = ctx.greedy_nf(ctx.parse("x.y.z.x"))
    assert [to_str(ctx.presentation, f.canonical) for f in factors] == \
        oracle_greedy_nf_xyzx()
    assert ctx.greedy_nf(b"") == []


def test_greedy_nf_gcd_path_agrees(monkeypatch):
    ctx = triple_ctx()
    verify_garside(ctx, ctx.parse("x.y.z"))
    words = ["x.y.z.x", "z.z.x", "x.x.y.y.z.z", "y", "z.x.y.z.x.y"]
    scan = [ctx.greedy_nf(ctx.parse(t)) for t in words]
    monkeypatch.setattr(monoid_mod, "NF_SCAN_MAX", 0)
    fresh = triple_ctx()
    verify_garside(fresh, fresh.parse("x.y.z"))
    gcd_path = [fresh.greedy_nf(fresh.parse(t)) for t in words]
    assert scan == gcd_path


def test_greedy_nf_requires_certificate():
    ctx = triple_ctx()
    with pytest.raises(ValueError):
        ctx.greedy_nf(ctx.parse("x"))


def test_nf_recomposes_and_heads_are_maximal():
    ctx = triple_ctx()
    verify_garside(ctx, ctx.parse("x.y.z"))
    Delta = ctx.parse("x.y.z")
    for text in ("x.y.z.x.y", "z.z.z", "x.y.x.y", "y.z.x.z"):
        w = ctx.parse(text)
        factors = ctx.greedy_nf(w)
        prod = b"".join(f.canonical for f in factors)
        assert ctx.words_equal(prod, w)
        for f in factors:
            assert ctx.divides_left(f.canonical, Delta) is not None


def test_cancellativity_violation_found():
    assert oracle_cancellativity_violation()
    p = Presentation(("a", "b"), (1, 1),
                     ((bytes([0, 1]), bytes([0, 0])),))
    ctx = MonoidContext(p)
    rep = cancellative_oracle(ctx, 3)
    assert not rep.passed
    assert rep.max_length == 2
    side, letter, b, c = rep.violation
    assert side == "left" and letter == "a"
    assert {bytes([0]), bytes([1])} == {b, c}


def test_cancellativity_passes_on_triple():
    rep = cancellative_oracle(triple_ctx(), 4)
    assert rep.passed and rep.violation is None


def test_garside_rejects_noncentral_delta():
    # a.(b.a) = b.b with weights (1, 2): homogeneous, theta-decidable, but
    # a.b is not central so it cannot be a Garside element
    p = Presentation(("a", "b"), (1, 2),
                     ((bytes([0, 1, 0]), bytes([1, 1])),))
    ctx = MonoidContext(p)
    assert ctx.cube_ok
    cert = verify_garside(ctx, p.parse_word("a.b"))
    assert not cert.valid
    assert "Delta-central" in cert.failing()


def test_budget_exceeded_raised():
    ctx = triple_ctx(Budgets(closure_words=2))
    with pytest.raises(BudgetExceeded):
        ctx.closure(ctx.parse("x.y.z.x.y.z"))
    ctx = triple_ctx(Budgets(bfs_nodes=3))
    with pytest.raises(BudgetExceeded):
        ctx.left_divisors(ctx.parse("x.y.z"))


def test_family_context_wires_opposites():
    ctx = family_context(BraidParams(2, 3))
    octx, letter_map = ctx.opposite()
    assert set(letter_map) == set(range(ctx.presentation.rank))
    w = ctx.parse("x1.x2.y")
    assert ctx.weight(w) == octx.presentation.weight_of(ctx.transport(w))


def test_family_context_dual_quotients():
    for flavor in ("star", "upper-star"):
        params = BraidParams(2, 3, flavor, "dual")
        ctx = family_context(params)
        sw = special_words(params)
        cert = verify_garside(ctx, sw.Delta)
        assert cert.valid, cert.failing()


def test_c2_wrapper_accepts_names_and_indices():
    p = build_presentation(BraidParams(1, 1, variant="enlarged"))
    by_name = check_C2_presentation(p, {"z"})
    by_index = check_C2_presentation(p, {p.letter("z")})
    assert by_name.passed and by_index.passed
