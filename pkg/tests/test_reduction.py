"""One-to-one reduction, simplifiability, and the finiteness decision."""

import pytest

from substchaos import (
    ComplexityVerdict,
    decide_infinite,
    decide_infinite_trace,
    is_simplifiable,
    one_to_one_reduction,
    oracle_infinite_via_complexity,
    parse_substitution,
    stream_from_fixed_point,
)
from substchaos.errors import PreconditionError, SearchBudgetError
from substchaos.reduction import biprolongeable_letters
from substchaos.substitution import is_primitive, iterate_chr

from conftest import random_substitutions


def test_reduction_merges_equal_images():
    s = parse_substitution("0 -> 01\n1 -> 01")
    red = one_to_one_reduction(s)
    assert red.reduced.alphabet == ("0",)
    assert red.reduced.image("0") == "00"
    assert dict(red.letter_map) == {"0": "0", "1": "0"}


def test_reduction_identity_on_injective(fixtures):
    red = one_to_one_reduction(fixtures["morse"])
    assert red.reduced == fixtures["morse"]
    assert red.chain == ()


def test_reduction_period_two_keeps_two_letters():
    s = parse_substitution("0 -> 010\n1 -> 101")
    red = one_to_one_reduction(s)
    assert red.reduced.size == 2


def test_reduction_idempotent(fixtures):
    for s in fixtures.values():
        red = one_to_one_reduction(s)
        again = one_to_one_reduction(red.reduced)
        assert again.reduced == red.reduced
        assert again.chain == ()


def test_reduction_intertwines_images():
    s = parse_substitution("0 -> 012\n1 -> 012\n2 -> 100")
    red = one_to_one_reduction(s)
    mapping = dict(red.letter_map)
    for tok in s.alphabet:
        image_then_map = "".join(mapping[t] for t in s.image(tok))
        map_then_image = "".join(red.reduced.image(mapping[tok]))
        assert image_then_map == map_then_image


def test_simplifiable_powers_of_a_common_word():
    s = parse_substitution("0 -> 0101\n1 -> 01")
    simp = is_simplifiable(s)
    assert simp is not None
    assert len(simp.target_alphabet) == 1
    assert simp.g == (s.encode("01"),)
    assert simp.f == (("0", "0"), ("0",))


def test_simplifiable_negative_cases(fixtures):
    assert is_simplifiable(fixtures["morse"]) is None
    assert is_simplifiable(parse_substitution("a -> a")) is None


def test_simplifiability_budget():
    s = parse_substitution("a -> baacd\nb -> bbbcd\nc -> bcaba\nd -> bdabd")
    with pytest.raises(SearchBudgetError):
        is_simplifiable(s, budget=3)


@pytest.mark.parametrize(
    "source, expected",
    [
        ("0 -> 01\n1 -> 01", False),
        ("0 -> 010\n1 -> 101", False),
        ("0 -> 01\n1 -> 10", True),
        ("0 -> 01\n1 -> 00", True),
        ("0 -> 010\n1 -> 100", True),
        ("a -> aba\nb -> bca\nc -> cca", True),
        ("a -> baacd\nb -> bbbcd\nc -> bcaba\nd -> bdabd", True),
        ("0 -> 0123\n1 -> 1032\n2 -> 1023\n3 -> 0132", True),
    ],
)
def test_decide_infinite_fixtures(source, expected):
    assert decide_infinite(parse_substitution(source)) is expected


def test_decide_infinite_requires_primitive():
    with pytest.raises(PreconditionError):
        decide_infinite_trace(parse_substitution("0 -> 00\n1 -> 11"))


def test_morse_biprolongeable_letters(fixtures):
    assert biprolongeable_letters(fixtures["morse"]) == ["0", "1"]


def test_decision_trace_shows_simplification():
    s = parse_substitution("0 -> 01\n1 -> 01")
    infinite, trace = decide_infinite_trace(s)
    assert not infinite
    assert trace[0]["action"] == "simplified"
    assert trace[0]["dictionary"] == ["01"]
    assert trace[-1]["infinite"] is False


def test_oracle_examples(fixtures):
    reduced = one_to_one_reduction(parse_substitution("0 -> 01\n1 -> 01")).reduced
    assert oracle_infinite_via_complexity(reduced, 8) is ComplexityVerdict.FINITE
    assert (
        oracle_infinite_via_complexity(fixtures["morse"], 8)
        is ComplexityVerdict.INFINITE_EVIDENCE
    )
    assert (
        oracle_infinite_via_complexity(fixtures["morse"], 0)
        is ComplexityVerdict.INCONCLUSIVE
    )


def test_oracle_agreement_on_fixtures_and_random(fixtures, random_corpus_any):
    candidates = list(fixtures.values()) + [
        parse_substitution("0 -> 01\n1 -> 01"),
        parse_substitution("0 -> 010\n1 -> 101"),
    ]
    candidates += random_corpus_any
    for s in candidates:
        verdict = oracle_infinite_via_complexity(s, 64)
        if verdict is ComplexityVerdict.INCONCLUSIVE:
            continue
        expected = decide_infinite(s)
        assert (verdict is ComplexityVerdict.INFINITE_EVIDENCE) == expected, s.rules()


def test_conjugacy_evidence_on_windows():
    # an infinite subshift with a non-injective substitution: the reduction
    # must reproduce the same expanded windows under the letter map
    from conftest import fixed_points

    s = parse_substitution("0 -> 021\n1 -> 021\n2 -> 201")
    assert is_primitive(s)
    assert decide_infinite(s)
    red = one_to_one_reduction(s)
    assert red.reduced.size < s.size
    mapping = dict(red.letter_map)
    points = fixed_points(s)
    assert points
    compared = 0
    seen_windows = set()
    for x in points:
        lit = x.to_literal()
        window = x.window(1024)
        mapped = "".join(mapping[t] for t in window)
        left = mapping[lit["left_seed"]]
        right = mapping[x.window(0)]
        y = stream_from_fixed_point(red.reduced, left, right)
        assert mapped == y.window(1024)
        seen_windows.add(window)
        compared += 1
    assert compared >= 2
    # the letter map stays injective on distinct sampled windows
    mapped_windows = {"".join(mapping[t] for t in w) for w in seen_windows}
    assert len(mapped_windows) == len(seen_windows)
