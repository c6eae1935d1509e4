"""Shared fixture substitutions, the point corpus, and the seeded random
corpus used by the oracle-agreement tests."""

import random

import pytest

from substchaos import (
    Substitution,
    construct_ly_pair,
    construct_recurrent_ly_pair,
    decide_infinite,
    enumerate_fiber,
    is_primitive,
    parse_substitution,
    stream_from_entries,
    stream_from_fixed_point,
)
from substchaos.odometer import OdometerDigits
from substchaos.substitution import cycle_length, first_letter_map, last_letter_map, language_chr

MORSE = "0 -> 01\n1 -> 10"
TOEPLITZ = "0 -> 01\n1 -> 00"
LY_TWO = "0 -> 010\n1 -> 100"
ABA = "a -> aba\nb -> bca\nc -> cca"
BAACD = "a -> baacd\nb -> bbbcd\nc -> bcaba\nd -> bdabd"
FOUR = "0 -> 0123\n1 -> 1032\n2 -> 1023\n3 -> 0132"
SAME = "0 -> 01\n1 -> 01"
PERIOD_TWO = "0 -> 010\n1 -> 101"

FIXTURE_SOURCES = {
    "morse": MORSE,
    "toeplitz": TOEPLITZ,
    "ly_two": LY_TWO,
    "aba": ABA,
    "baacd": BAACD,
    "four": FOUR,
}


@pytest.fixture(scope="session")
def fixtures():
    return {name: parse_substitution(src) for name, src in FIXTURE_SOURCES.items()}


def fixed_points(subst):
    """All admissible two-sided limit points of a substitution."""
    lam = last_letter_map(subst)
    first = first_letter_map(subst)
    lang2 = language_chr(subst, 2)
    points = []
    for li in range(subst.size):
        if cycle_length(lam, li) is None:
            continue
        for ri in range(subst.size):
            if cycle_length(first, ri) is None:
                continue
            if chr(li) + chr(ri) not in lang2:
                continue
            points.append(
                stream_from_fixed_point(
                    subst, subst.alphabet[li], subst.alphabet[ri]
                )
            )
    return points


@pytest.fixture(scope="session")
def point_corpus(fixtures):
    """Per-fixture list of representable points used by the factor-map and
    fiber acceptance checks."""
    corpus = {}
    for name, s in fixtures.items():
        pts = list(fixed_points(s))
        p = s.constant_length
        for digits in [
            OdometerDigits(p, (), (1,)),
            OdometerDigits(p, (), (p - 1,)),
            OdometerDigits(p, (1,), (0,)),
        ]:
            pts.extend(enumerate_fiber(s, digits, radius=96))
        corpus[name] = pts
    cp = construct_ly_pair(fixtures["ly_two"])
    corpus["ly_two"].extend([cp.x, cp.y])
    baacd = fixtures["baacd"]
    rp = construct_recurrent_ly_pair(baacd)
    corpus["baacd"].extend([rp.x, rp.y])
    corpus["baacd"].append(stream_from_entries(baacd, [], [["b", "c", "aba"]]))
    corpus["baacd"].append(stream_from_entries(baacd, [], [["b", "d", "abd"]]))
    return corpus


# ---------------------------------------------------------------------------
# seeded random substitution corpus

CORPUS_SEED = 20260811


def random_substitutions(
    count,
    seed=CORPUS_SEED,
    max_letters=4,
    max_length=4,
    one_to_one=True,
    require_infinite=True,
    constant=True,
):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_letters)
        p = rng.randint(2, max_length)
        alphabet = tuple("abcd"[:n])
        rules = {
            tok: "".join(rng.choice(alphabet) for _ in range(p)) for tok in alphabet
        }
        s = Substitution.from_rules(rules, alphabet)
        if constant and s.constant_length is None:
            continue
        if one_to_one and not s.is_injective():
            continue
        if not is_primitive(s):
            continue
        if require_infinite and not decide_infinite(s):
            continue
        out.append(s)
    return out


@pytest.fixture(scope="session")
def random_corpus():
    """200 one-to-one primitive constant-length substitutions with an
    infinite subshift, |A| <= 4, p <= 4 (deterministic seed)."""
    return random_substitutions(200)


@pytest.fixture(scope="session")
def random_corpus_any():
    """200 primitive substitutions without the one-to-one/infinite
    restrictions, for the finiteness-oracle agreement check."""
    return random_substitutions(
        200, seed=CORPUS_SEED + 1, one_to_one=False, require_infinite=False
    )


# ---------------------------------------------------------------------------
# independent brute-force oracle for the pair decisions


def brute_ly_decisions(subst, word_bound=10**6):
    """Direct scans of the iterated images for the two pair criteria, up
    to image length ``word_bound``; numpy-backed so the full bound stays
    desk-scale."""
    import numpy as np

    n = subst.size
    p = subst.constant_length
    words = list(subst.images)
    ly = False
    unc = False
    while True:
        arrays = [
            np.frombuffer(w.encode("latin-1"), dtype=np.uint8) for w in words
        ]
        for a in range(n):
            for b in range(a + 1, n):
                wa, wb = arrays[a], arrays[b]
                occ = np.nonzero((wa == a) & (wb == b))[0]
                if occ.size == 0:
                    continue
                eq = np.nonzero(wa == wb)[0]
                ne = np.nonzero(wa != wb)[0]
                last_eq = eq[-1] if eq.size else -1
                last_ne = ne[-1] if ne.size else -1
                j = int(occ[0])
                if last_eq > j and last_ne > j:
                    ly = True
                if occ.size >= 2 and last_eq > j:
                    unc = True
        if len(words[0]) * p > word_bound:
            return ly, unc
        words = [subst.apply(w) for w in words]
