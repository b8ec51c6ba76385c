import pytest

from jgarside import (SCENARIOS, verify_dihedral_iso, verify_dual_iso,
                      verify_g33_iso, verify_swap_automorphism,
                      verify_word_identities)


def _assert_clean(report):
    assert report.passed, [
        (c.name, c.ok, c.witness) for c in report.failing()]


def test_scenario_registry():
    assert set(SCENARIOS) == {"g33", "dihedral", "dual", "identities",
                              "swap"}


def test_param_validation():
    with pytest.raises(ValueError):
        verify_g33_iso(2, 4)
    with pytest.raises(ValueError):
        verify_g33_iso(3, 2)
    with pytest.raises(ValueError):
        verify_dihedral_iso(2, 2)
    with pytest.raises(ValueError):
        verify_dual_iso(2, 6)
    with pytest.raises(ValueError):
        verify_swap_automorphism(2, 4)


def test_g33_small():
    for n, m in ((1, 1), (1, 2), (2, 3)):
        rep = verify_g33_iso(n, m)
        _assert_clean(rep)
        assert rep.scenario == "g33" and rep.params == {"n": n, "m": m}
        names = {c.name for c in rep.checks}
        assert "phi-preserves-relations" in names
        assert "phi-garside-is-center" in names


def test_dihedral_small():
    for n, m in ((1, 2), (1, 3), (2, 3)):
        _assert_clean(verify_dihedral_iso(n, m))


def test_dual_small():
    for n, m in ((1, 1), (1, 2), (2, 3)):
        _assert_clean(verify_dual_iso(n, m))


def test_word_identities_small():
    for n, m in ((1, 1), (1, 2), (2, 3)):
        _assert_clean(verify_word_identities(n, m))


def test_swap_both_orientations():
    # the swap scenario accepts either parameter order
    for n, m in ((1, 2), (2, 1), (2, 3), (3, 2)):
        _assert_clean(verify_swap_automorphism(n, m))
