"""The inverse-limit family: levels, projections, distinguished points,
scrambled-family verification, and window preimages."""

import pytest

from substchaos import (
    PairClass,
    classify_pair,
    decide_infinite,
    is_primitive,
    iterate,
    preimage_candidates,
    rho,
    tower_point_x,
    tower_point_y,
    tower_substitution,
    verify_scrambled_S,
)
from substchaos.errors import PreconditionError
from substchaos.tower import element_component, rho_chr


def test_level_one_rules():
    s = tower_substitution(1).substitution
    assert s.rules() == {"0": "001", "1": "101"}


def test_level_two_rules():
    s = tower_substitution(2).substitution
    assert s.rules() == {"0": "001", "1": "102", "2": "202"}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_levels_primitive_and_infinite(n):
    s = tower_substitution(n).substitution
    assert s.constant_length == 3
    assert is_primitive(s)
    assert decide_infinite(s)


def test_rho_letterwise():
    assert rho(1, "2") == "1"
    assert rho(1, "102") == "101"
    assert rho(1, "001") == "001"


def test_rho_commutes_with_levels():
    for n in range(1, 7):
        lower = tower_substitution(n).substitution
        upper = tower_substitution(n + 1).substitution
        for tok in upper.alphabet:
            image_then_project = rho(n, upper.image(tok))
            project_then_image = lower.image(rho(n, tok))
            assert image_then_project == project_then_image, (n, tok)


def test_rho_rejects_foreign_letters():
    with pytest.raises(Exception):
        rho(1, "3")


def test_point_x_matches_direct_iteration():
    x = tower_point_x(1)
    s = tower_substitution(1).substitution
    # right side: letter, then the iterated images of the two-letter seed
    expected = "1"
    k = 0
    while len(expected) < 11:
        expected += iterate(s, "01", k)
        k += 1
    assert x.window(10)[10:] == expected[:11]
    # left side: iterated images of the top letter, suffix-aligned
    left = iterate(s, "1", 4)
    assert x.window(10)[:10] == left[-10:]


def test_point_y_window():
    y = tower_point_y(2, 1)
    w = y.window(6)
    assert w[6] == "0"
    assert w[7:9] == "01"


def test_rho_compatibility_on_windows():
    for n in (1, 2, 3):
        xn = tower_point_x(n)
        xn1 = tower_point_x(n + 1)
        ynn = tower_point_y(n + 1, n + 1)
        assert rho_chr(n, xn1.expand(200)) == xn.expand(200)
        assert rho_chr(n, ynn.expand(200)) == xn.expand(200)
        ym = tower_point_y(n + 1, n)
        yn = tower_point_y(n, n)
        assert rho_chr(n, ym.expand(200)) == yn.expand(200)


def test_point_y_preconditions():
    with pytest.raises(PreconditionError):
        tower_point_y(1, 2)


def test_element_components():
    assert element_component(3, 1) == tower_point_x(1)
    assert element_component(3, 2) == tower_point_x(2)
    assert element_component(3, 3) == tower_point_y(3, 3)
    assert element_component(3, 5) == tower_point_y(5, 3)


def test_scrambled_family_pattern_small():
    report = verify_scrambled_S(2, 3**6)
    assert not report.has_distal
    for entry in report.entries:
        if entry.level == entry.first:
            assert entry.verdict == PairClass.ASYMPTOTIC.value
            assert entry.separation_count <= entry.level + 2
        else:
            assert entry.verdict == PairClass.LI_YORKE.value


def test_scrambled_family_requires_depth():
    with pytest.raises(PreconditionError):
        verify_scrambled_S(1, 81)


def test_tower_report_serialization():
    report = verify_scrambled_S(2, 81)
    doc = report.to_json()
    assert doc["depth"] == 2
    assert doc["has_distal"] is False
    assert doc["entries"]
    assert "verdict" in doc["entries"][0]
    assert report.table().splitlines()


def test_preimage_candidates_bounded():
    for n in (1, 2, 3):
        x = tower_point_x(n)
        w = x.expand(729 + 10)
        for j in range(0, 10, 3):
            win = w[10 + j : 10 + j + 2 * 729 + 1]
            cands = preimage_candidates(n, win)
            assert 1 <= len(cands) <= 2, (n, j)
            for cand in cands:
                assert rho_chr(n, cand) == win


def test_preimage_candidates_exact_small():
    # short windows are checked against the enumerated language directly
    s1 = tower_substitution(1).substitution
    win = s1.encode("001")
    cands = preimage_candidates(1, win)
    assert cands
    for cand in cands:
        assert rho_chr(1, cand) == win
