"""Desubstitution streams: construction, expansion, the shift carry, and
fiber enumeration."""

import pytest

from substchaos import (
    OdometerDigits,
    enumerate_fiber,
    fiber_bound,
    parse_substitution,
    point_from_literal,
    stream_from_entries,
    stream_from_fixed_point,
)
from substchaos.errors import (
    InvariantError,
    PreconditionError,
    StreamChainError,
)
from substchaos.odometer import successor_of_digit_list
from substchaos.simulate import empirical_class


def test_fixed_point_morse(fixtures):
    x = stream_from_fixed_point(fixtures["morse"], "1", "0")
    assert x.window(4) == "100101101"
    assert x.pi_digits(8) == [0] * 8
    lit = x.to_literal()
    assert lit["period"] == [["", "0", "1"]]
    assert lit["left_seed"] == "1"


def test_fixed_point_other_morse_seed(fixtures):
    y = stream_from_fixed_point(fixtures["morse"], "0", "1")
    assert y.window(4)[4:] == "10010"


def test_fixed_point_seed_with_longer_cycle(fixtures):
    # last letter of one image only returns to itself at the second power
    x = stream_from_fixed_point(fixtures["morse"], "1", "1")
    assert x.window(4) == "100110010"


def test_fixed_point_rejections(fixtures):
    with pytest.raises(PreconditionError):
        stream_from_fixed_point(fixtures["ly_two"], "1", "1")  # "11" not a word
    # a letter with no fixing power: transient on the last-letter map
    s = parse_substitution("0 -> 001\n1 -> 120\n2 -> 221")
    with pytest.raises(PreconditionError) as err:
        stream_from_fixed_point(s, "2", "0")
    assert "fixes the last letter" in str(err.value)


def test_stream_entry_literal_roundtrip(fixtures):
    lit = {
        "kind": "stream",
        "preperiod": [],
        "period": [["", "0", "10"]],
        "left_seed": "0",
        "right_seed": None,
    }
    x = point_from_literal(fixtures["ly_two"], lit)
    assert x.to_literal() == lit
    fp = point_from_literal(fixtures["morse"], {"kind": "fixed_point", "left": "1", "right": "0"})
    assert fp.window(4) == "100101101"


def test_stream_chain_violation_reports_level(fixtures):
    with pytest.raises(StreamChainError) as err:
        stream_from_entries(fixtures["morse"], [], [["", "0", "0"]])
    assert err.value.level == 0


def test_seed_requirements(fixtures):
    with pytest.raises(InvariantError):
        stream_from_entries(fixtures["morse"], [], [["", "0", "1"]])  # missing seed
    with pytest.raises(InvariantError):
        stream_from_entries(
            fixtures["morse"], [], [["", "0", "1"]], left_seed="1", right_seed="0"
        )


def test_expand_consistency_nested(fixtures):
    x = stream_from_fixed_point(fixtures["morse"], "1", "0")
    big = x.expand(200)
    for radius in (0, 1, 5, 50, 199):
        assert x.expand(radius) == big[200 - radius : 200 + radius + 1]


def test_expand_center_only(fixtures):
    x = stream_from_fixed_point(fixtures["morse"], "1", "0")
    assert x.window(0) == "0"


def test_pi_digits_examples(fixtures):
    morse = fixtures["morse"]
    x = stream_from_fixed_point(morse, "1", "0")
    assert x.shift().pi_digits(6) == [1, 0, 0, 0, 0, 0]
    minus_one = enumerate_fiber(morse, OdometerDigits(2, (), (1,)))[0]
    assert minus_one.pi_digits(6) == [1] * 6


def test_shift_matches_window_slide(point_corpus):
    for name, points in point_corpus.items():
        for x in points:
            base = x.expand(400)
            pt = x
            for n in range(1, 60):
                pt = pt.shift()
                assert pt.expand(32) == base[400 - 32 + n : 400 + 33 + n], (name, n)


def test_shift_digit_successor_law(point_corpus):
    for points in point_corpus.values():
        for x in points:
            pt = x
            for _ in range(40):
                digits = pt.pi_digits(32)
                pt = pt.shift()
                assert pt.pi_digits(32) == successor_of_digit_list(digits, pt.subst.constant_length)


def test_shift_across_carry(fixtures):
    morse = fixtures["morse"]
    z = enumerate_fiber(morse, OdometerDigits(2, (), (1,)))[0]
    assert z.pi_digits(4) == [1, 1, 1, 1]
    succ = z.shift()
    assert succ.pi_digits(4) == [0, 0, 0, 0]
    assert succ.expand(64) == z.expand(65)[2:]


def test_fiber_bound_values(fixtures):
    assert fiber_bound(fixtures["morse"]) == 6
    assert fiber_bound(fixtures["toeplitz"]) == 5


def test_fiber_bound_preconditions():
    with pytest.raises(PreconditionError):
        fiber_bound(parse_substitution("0 -> 010\n1 -> 101"))


def test_fiber_zero_of_morse(fixtures):
    pts = enumerate_fiber(fixtures["morse"], OdometerDigits(2, (), (0,)))
    assert len(pts) == 4
    assert all(p.stream.left_seed is not None for p in pts)
    windows = {p.window(2) for p in pts}
    assert len(windows) == 4


def test_fiber_minus_one_has_right_seeds(fixtures):
    pts = enumerate_fiber(fixtures["morse"], OdometerDigits(2, (), (1,)))
    assert pts
    assert all(p.stream.right_seed is not None for p in pts)


def sample_digit_sequences(p, count=20):
    from itertools import product

    values = sorted({0, 1, p - 1})
    sequences = []
    for pre in [(), (0,), (1,), (p - 1,)]:
        for length in (1, 2, 3):
            for per in product(values, repeat=length):
                sequences.append(OdometerDigits(p, pre, per))
    return list(dict.fromkeys(sequences))[:count]


def test_fiber_within_bound_many_digit_sequences(fixtures):
    for s in fixtures.values():
        p = s.constant_length
        bound = fiber_bound(s)
        unique = sample_digit_sequences(p)
        assert len(unique) == 20
        for digits in unique:
            pts = enumerate_fiber(s, digits, radius=128)
            assert len(pts) <= bound, (s.rules(), digits)


def test_cross_fiber_pairs_stay_separated(fixtures):
    # digit sequences differing at a low index never develop deep
    # agreement: the agreement radius stays bounded at every sampled time
    from conftest import fixed_points

    for name in ("morse", "ly_two", "baacd"):
        x = fixed_points(fixtures[name])[0]
        y = x.shift()
        assert x.odometer_digits() != y.odometer_digits()
        report = empirical_class(x, y, 512, 64)
        assert report.proximality_count == 0, name


def test_fiber_separation_bound_error(fixtures):
    from substchaos.errors import SeparationBoundError

    # radius zero cannot tell the seed variants of the zero fiber apart
    with pytest.raises(SeparationBoundError) as err:
        enumerate_fiber(fixtures["morse"], OdometerDigits(2, (), (0,)), radius=0)
    assert err.value.lower_bound >= 1


def test_shift_by_budget(fixtures):
    from substchaos.errors import BudgetExceededError

    x = stream_from_fixed_point(fixtures["morse"], "1", "0")
    with pytest.raises(BudgetExceededError):
        x.shift_by(10, budget=5)


def test_point_literal_unknown_kind(fixtures):
    with pytest.raises(PreconditionError):
        point_from_literal(fixtures["morse"], {"kind": "mystery"})
