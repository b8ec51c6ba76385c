import pytest

from jgarside import Presentation, build_theta, check_C1, theta_extend
from jgarside.complement import (BUDGET_EXCEEDED, DEFINED, NOT_RIGHT_COMPLEMENTED,
                                 RIGHT_FULL, UNDEFINED, check_cube_sharp,
                                 sub_X_presentation)

from independent_oracles import (oracle_c1_free_abelian,
                                 oracle_theta_word_letter)


def aba_bb():
    # a.(b.a) = b.(b): one relation, complement defined on both pairs
    return Presentation(("a", "b"), (1, 1),
                        ((bytes([0, 1, 0]), bytes([1, 1])),))


def free_abelian():
    rels = []
    for i in range(3):
        for j in range(i + 1, 3):
            rels.append((bytes([i, j]), bytes([j, i])))
    return Presentation(("a", "b", "c"), (1, 1, 1), tuple(rels))


def test_letter_table_and_classification():
    table = build_theta(aba_bb())
    assert table.classification == RIGHT_FULL
    assert table.letter_pair(0, 1) == bytes([1, 0])
    assert table.letter_pair(1, 0) == bytes([1])


def test_theta_word_extension_matches_oracle():
    p = aba_bb()
    table = build_theta(p)
    r = theta_extend(table, p.parse_word("a.b"), p.parse_word("b"), 10_000)
    assert r.status == DEFINED
    assert p.word_text(r.word) == oracle_theta_word_letter()


def test_theta_self_is_empty():
    p = aba_bb()
    table = build_theta(p)
    w = p.parse_word("a.b.a.b")
    r = theta_extend(table, w, w, 10_000)
    assert r.status == DEFINED
    assert r.word == b""


def test_theta_budget_status():
    p = aba_bb()
    table = build_theta(p)
    w = p.parse_word(".".join("a.b" for _ in range(12)))
    r = theta_extend(table, w, w[::-1], 3)
    assert r.status == BUDGET_EXCEEDED


def test_not_right_complemented_detected():
    # two relations a.b = b.a and a.b.b = b.a.a give the pair (a,b) two
    # inconsistent complements
    p = Presentation(("a", "b"), (1, 1),
                     ((bytes([0, 1]), bytes([1, 0])),
                      (bytes([0, 1, 1]), bytes([1, 0, 0]))))
    assert build_theta(p).classification == NOT_RIGHT_COMPLEMENTED


def test_partial_table_undefined_pair():
    # single relation on (a,b) leaves every pair with c undefined
    p = Presentation(("a", "b", "c"), (1, 1, 1),
                     ((bytes([0, 1]), bytes([1, 0])),))
    table = build_theta(p)
    assert table.classification != RIGHT_FULL
    r = theta_extend(table, bytes([0]), bytes([2]), 1000)
    assert r.status == UNDEFINED


def test_c1_fails_on_free_abelian():
    # matches the standalone search: no labeling of any triple works
    assert oracle_c1_free_abelian() == []
    report = check_C1(free_abelian())
    assert not report.passed
    assert report.failures == [("a", "b", "c")]


def test_cube_sharp_is_literal():
    # commuting letters: every complement is a single letter, so the cube
    # words agree on the nose
    assert check_cube_sharp(free_abelian()).passed
    # the 3-strand braid triple satisfies the cube condition only up to
    # the congruence; the literal check must reject it
    rels = []
    for i, j in ((0, 1), (1, 2)):
        rels.append((bytes([i, j, i]), bytes([j, i, j])))
    rels.append((bytes([0, 2]), bytes([2, 0])))
    p = Presentation(("a", "b", "c"), (1, 1, 1), tuple(rels))
    table = build_theta(p)
    assert table.classification == RIGHT_FULL
    rep = check_cube_sharp(p, table)
    assert not rep.passed and rep.failures


def test_sub_presentation_strips_complements():
    rels = []
    for i in range(3):
        for j in range(i + 1, 3):
            rels.append((bytes([i, j]), bytes([j, i])))
    p = Presentation(("a", "b", "c"), (1, 1, 1), tuple(rels))
    q = sub_X_presentation(p, {"c"})
    assert q.names == ("a", "b")
    assert q.relations == ((bytes([0, 1]), bytes([1, 0])),)


def test_sub_presentation_requires_right_full():
    p = Presentation(("a", "b", "c"), (1, 1, 1),
                     ((bytes([0, 1]), bytes([1, 0])),))
    with pytest.raises(ValueError):
        sub_X_presentation(p, {"c"})
