"""Constructive representation of subshift points by their desubstitution
data.

A point is stored as an eventually periodic sequence of levels, one per
application of the substitution: level ``i`` holds the image block
``prefix_i + center_i + suffix_i`` of the level-``i+1`` center letter,
with the digit ``len(prefix_i)`` recording where the lower center sits
inside that block.  Consecutive levels must satisfy

    image(center_{i+1}) == prefix_i + center_i + suffix_i .

When every period prefix is empty the data only determines the point to
the right of a finite stretch; a ``left_seed`` letter ``c`` whose
iterated image eventually ends in ``c`` supplies the missing
left-infinite tail ``lim image^(t*r)(c)``, anchored at the level where
the period starts (the limit depends only on the letter, not on the
fixing power used).  The symmetric statement holds for ``right_seed``.
Both sides can never collapse at the same time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    InvariantError,
    PreconditionError,
    SeparationBoundError,
    StreamChainError,
)
from .odometer import OdometerDigits
from .reduction import decide_infinite
from .substitution import (
    DEFAULT_WORD_BUDGET,
    Substitution,
    cycle_length,
    first_letter_map,
    is_primitive,
    iterate_chr,
    iterate_prefix,
    iterate_suffix,
    language_chr,
    last_letter_map,
)

SHIFT_BUDGET = 10**6


@dataclass(frozen=True, order=True)
class StreamEntry:
    """One desubstitution level: the image block of the next level's
    center, split around this level's center (all chr-coded)."""

    prefix: str
    center: str
    suffix: str

    @property
    def digit(self):
        return len(self.prefix)

    @property
    def block(self):
        return self.prefix + self.center + self.suffix


@dataclass(frozen=True)
class DesubstitutionStream:
    subst: Substitution
    preperiod: tuple[StreamEntry, ...]
    period: tuple[StreamEntry, ...]
    left_seed: str | None
    right_seed: str | None

    def __post_init__(self):
        s = self.subst
        p = s.constant_length
        if p is None or p < 2:
            raise PreconditionError("streams require constant length >= 2")
        if not self.period:
            raise InvariantError("period must be nonempty")
        entries = list(self.preperiod) + list(self.period)
        for i, e in enumerate(entries):
            if len(e.center) != 1 or len(e.block) != p:
                raise StreamChainError("entry has wrong block size", i)
        k = len(self.preperiod)
        L = len(self.period)
        for i in range(k + L):
            nxt = entries[i + 1] if i + 1 < k + L else self.period[0]
            if s.images[ord(nxt.center)] != entries[i].block:
                raise StreamChainError(
                    "image of the upper center does not match the block", i
                )
        left_needed = all(e.prefix == "" for e in self.period)
        right_needed = all(e.suffix == "" for e in self.period)
        if left_needed and right_needed:
            raise InvariantError("period cannot have all-empty prefixes and suffixes")
        if left_needed != (self.left_seed is not None):
            raise InvariantError(
                "left_seed required exactly when all period prefixes are empty"
            )
        if right_needed != (self.right_seed is not None):
            raise InvariantError(
                "right_seed required exactly when all period suffixes are empty"
            )
        anchor = self.period[0].center
        if self.left_seed is not None:
            c = self.left_seed
            if cycle_length(last_letter_map(s), ord(c)) is None:
                raise InvariantError("left seed is not on a cycle of the last-letter map")
            if c + anchor not in language_chr(s, 2):
                raise InvariantError("left seed junction word is not in the language")
        if self.right_seed is not None:
            d = self.right_seed
            if cycle_length(first_letter_map(s), ord(d)) is None:
                raise InvariantError("right seed is not on a cycle of the first-letter map")
            if anchor + d not in language_chr(s, 2):
                raise InvariantError("right seed junction word is not in the language")

    def entry(self, i):
        k = len(self.preperiod)
        if i < k:
            return self.preperiod[i]
        return self.period[(i - k) % len(self.period)]

    def digit(self, i):
        return self.entry(i).digit

    def odometer_digits(self):
        return OdometerDigits(
            self.subst.constant_length,
            tuple(e.digit for e in self.preperiod),
            tuple(e.digit for e in self.period),
        )


def _entry_from_block(block, digit):
    return StreamEntry(block[:digit], block[digit], block[digit + 1 :])


def _normalize(stream):
    """Canonical stream form: primitive entry period, then absorption of
    trailing preperiod entries into the period.  Each absorbed entry moves
    the seed anchor one level down, so seed letters follow their letter
    maps forward to keep the represented tails unchanged."""
    s = stream.subst
    per = list(stream.period)
    pre = list(stream.preperiod)
    left, right = stream.left_seed, stream.right_seed
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and per == per[:d] * (n // d):
            per = per[:d]
            break
    while pre and pre[-1] == per[-1]:
        pre.pop()
        per = [per[-1]] + per[:-1]
        if left is not None:
            left = s.images[ord(left)][-1]
        if right is not None:
            right = s.images[ord(right)][0]
    return DesubstitutionStream(s, tuple(pre), tuple(per), left, right)


class RepresentedPoint:
    """A subshift point given by a validated stream.

    Immutable apart from an internal expansion memo; the memo fill is
    idempotent (same input, same window), so concurrent readers are safe.
    """

    __slots__ = ("stream", "_window", "_radius")

    def __init__(self, stream):
        self.stream = _normalize(stream)
        self._window = ""
        self._radius = -1

    @property
    def subst(self):
        return self.stream.subst

    # -- identity -------------------------------------------------------

    def canonical_key(self):
        st = self.stream
        return (st.subst, st.preperiod, st.period, st.left_seed, st.right_seed)

    def __eq__(self, other):
        return (
            isinstance(other, RepresentedPoint)
            and self.canonical_key() == other.canonical_key()
        )

    def __hash__(self):
        return hash(self.canonical_key())

    # -- digits -----------------------------------------------------------

    def odometer_digits(self):
        return self.stream.odometer_digits()

    def pi_digits(self, count):
        """The first ``count`` digits of the odometer image of the point."""
        if count < 0:
            raise PreconditionError("digit count must be >= 0")
        return [self.stream.digit(i) for i in range(count)]

    # -- expansion ----------------------------------------------------------

    def expand(self, radius, budget=DEFAULT_WORD_BUDGET):
        """The centered window ``x(-radius .. radius)`` as an internal
        chr-coded string of length ``2*radius + 1``."""
        if radius < 0:
            raise PreconditionError("radius must be >= 0")
        if radius <= self._radius:
            mid = self._radius
            return self._window[mid - radius : mid + radius + 1]
        if 2 * radius + 1 > budget:
            raise BudgetExceededError("expansion exceeds the word budget")
        window = _expand_left(self.stream, radius, budget) + _expand_right(
            self.stream, radius + 1, budget
        )
        self._window = window
        self._radius = radius
        return window

    def window(self, radius):
        """Public-form rendering of the centered window."""
        return self.subst.decode(self.expand(radius))

    # -- dynamics -----------------------------------------------------------

    def shift(self):
        """The image under the shift map (the odometer carry on digits)."""
        return RepresentedPoint(_shifted_stream(self.stream))

    def shift_by(self, count, budget=SHIFT_BUDGET):
        if count < 0:
            raise PreconditionError("shift count must be >= 0")
        if count > budget:
            raise BudgetExceededError(f"shift count {count} exceeds budget {budget}")
        point = self
        for _ in range(count):
            point = point.shift()
        return point

    # -- literals -------------------------------------------------------------

    def to_literal(self):
        s = self.subst

        def word(w):
            out = s.decode(w)
            return out if isinstance(out, str) else list(out)

        def triple(e):
            return [word(e.prefix), word(e.center), word(e.suffix)]

        st = self.stream
        return {
            "kind": "stream",
            "preperiod": [triple(e) for e in st.preperiod],
            "period": [triple(e) for e in st.period],
            "left_seed": None if st.left_seed is None else word(st.left_seed),
            "right_seed": None if st.right_seed is None else word(st.right_seed),
        }

    def __repr__(self):
        lit = self.to_literal()
        return (
            f"RepresentedPoint(pre={lit['preperiod']}, per={lit['period']}, "
            f"seeds=({lit['left_seed']}, {lit['right_seed']}))"
        )


# ---------------------------------------------------------------------------
# expansion internals


def _seed_exponent(subst, anchor, cycle, minimum):
    """Smallest exponent congruent to ``anchor`` mod ``cycle`` whose image
    length covers ``minimum`` (positive so at least one image is taken)."""
    p = subst.constant_length
    e = anchor if anchor > 0 else cycle
    while p**e < minimum:
        e += cycle
    return e


def _expand_right(stream, need, budget):
    s = stream.subst
    k = len(stream.preperiod)
    L = len(stream.period)
    out = [stream.entry(0).center]
    have = 1
    if stream.right_seed is None:
        i = 0
        cap = k + L * (need.bit_length() + 4)
        while have < need:
            suffix = stream.entry(i).suffix
            if suffix:
                piece = iterate_prefix(s, suffix, i, need - have)
                out.append(piece)
                have += len(piece)
            i += 1
            if i > cap:
                raise BudgetExceededError("right expansion is not growing")
    else:
        for i in range(k):
            suffix = stream.entry(i).suffix
            if suffix:
                total = len(suffix) * (s.constant_length**i)
                if total > budget:
                    raise BudgetExceededError("right expansion exceeds the word budget")
                out.append(iterate_chr(s, suffix, i, budget))
                have += total
        rest = need - have
        if rest > 0:
            d = stream.right_seed
            cyc = cycle_length(first_letter_map(s), ord(d))
            e = _seed_exponent(s, k, cyc, rest)
            out.append(iterate_prefix(s, d, e, rest))
    return "".join(out)[:need]


def _expand_left(stream, need, budget):
    if need == 0:
        return ""
    s = stream.subst
    k = len(stream.preperiod)
    L = len(stream.period)
    out = []
    have = 0
    if stream.left_seed is None:
        i = 0
        cap = k + L * (need.bit_length() + 4)
        while have < need:
            prefix = stream.entry(i).prefix
            if prefix:
                piece = iterate_suffix(s, prefix, i, need - have)
                out.append(piece)
                have += len(piece)
            i += 1
            if i > cap:
                raise BudgetExceededError("left expansion is not growing")
    else:
        for i in range(k):
            prefix = stream.entry(i).prefix
            if prefix:
                total = len(prefix) * (s.constant_length**i)
                if total > budget:
                    raise BudgetExceededError("left expansion exceeds the word budget")
                out.append(iterate_chr(s, prefix, i, budget))
                have += total
        rest = need - have
        if rest > 0:
            c = stream.left_seed
            cyc = cycle_length(last_letter_map(s), ord(c))
            e = _seed_exponent(s, k, cyc, rest)
            out.append(iterate_suffix(s, c, e, rest))
    return "".join(reversed(out))[-need:]


# ---------------------------------------------------------------------------
# the odometer carry on streams


def _shifted_stream(stream):
    s = stream.subst
    p = s.constant_length
    k = len(stream.preperiod)
    L = len(stream.period)
    entries = [stream.entry(i) for i in range(k + L)]
    istar = next((i for i in range(k + L) if entries[i].digit != p - 1), None)

    if istar is None:
        # Every digit is p-1, so the point is the immediate predecessor of
        # the all-zero fiber.  Its successor is rebuilt directly: the old
        # anchor center supplies the new left tail, the right seed the new
        # right tail, both pushed through the preperiod levels.
        d = stream.right_seed
        anchor_center = stream.period[0].center
        d_new = iterate_prefix(s, d, k, 1)
        c_new = iterate_suffix(s, anchor_center, k, 1)
        first = first_letter_map(s)
        cyc = cycle_length(first, ord(d_new))
        centers = [""] * (cyc + 1)
        centers[cyc] = d_new
        for i in range(cyc - 1, -1, -1):
            centers[i] = s.images[ord(centers[i + 1])][0]
        assert centers[0] == d_new
        period = tuple(
            _entry_from_block(s.images[ord(centers[i + 1])], 0) for i in range(cyc)
        )
        return DesubstitutionStream(s, (), period, c_new, None)

    new_entries = list(entries[: istar + 1])
    old = entries[istar]
    new_entries[istar] = StreamEntry(old.prefix + old.center, old.suffix[0], old.suffix[1:])
    for i in range(istar - 1, -1, -1):
        block = s.images[ord(new_entries[i + 1].center)]
        new_entries[i] = _entry_from_block(block, 0)

    if istar < k:
        preperiod = tuple(new_entries) + stream.preperiod[istar + 1 :]
        return DesubstitutionStream(
            s, preperiod, stream.period, stream.left_seed, stream.right_seed
        )

    # The carry reached position j of the first period pass: the modified
    # levels move into the preperiod and the period rotates accordingly.
    j = istar - k
    preperiod = tuple(new_entries)
    period = stream.period[j + 1 :] + stream.period[: j + 1]
    left = stream.left_seed
    if left is not None:
        # only reachable with j == 0 (an all-zero period makes the first
        # period digit the carry target); the anchor moved one level up,
        # so the seed letter steps backwards along its last-letter cycle
        assert j == 0
        cyc = cycle_length(last_letter_map(s), ord(left))
        left = iterate_suffix(s, left, cyc - 1, 1)
    assert stream.right_seed is None
    return DesubstitutionStream(s, preperiod, period, left, None)


# ---------------------------------------------------------------------------
# constructors


def _encode_letter(subst, token):
    if isinstance(token, str) and token in subst.alphabet:
        return chr(subst.index(token))
    raise PreconditionError(f"expected a single alphabet letter, got {token!r}")


def stream_from_entries(subst, preperiod, period, left_seed=None, right_seed=None):
    """Build a point from public triples ``[prefix, center, suffix]``."""
    pre = tuple(
        StreamEntry(subst.encode(a), subst.encode(b), subst.encode(c))
        for a, b, c in preperiod
    )
    per = tuple(
        StreamEntry(subst.encode(a), subst.encode(b), subst.encode(c))
        for a, b, c in period
    )
    ls = None if left_seed is None else _encode_letter(subst, left_seed)
    rs = None if right_seed is None else _encode_letter(subst, right_seed)
    return RepresentedPoint(DesubstitutionStream(subst, pre, per, ls, rs))


def stream_from_fixed_point(subst, left, right):
    """The two-sided limit point with all-zero digits: left tail the
    iterated-image limit of ``left``, right side the iterated-image limit
    of ``right``."""
    s = subst
    lc = _encode_letter(s, left)
    rc = _encode_letter(s, right)
    if lc + rc not in language_chr(s, 2):
        raise PreconditionError("seed pair is not a word of the language")
    if cycle_length(last_letter_map(s), ord(lc)) is None:
        raise PreconditionError(
            f"no power up to the alphabet size fixes the last letter for {left!r}"
        )
    r_right = cycle_length(first_letter_map(s), ord(rc))
    if r_right is None:
        raise PreconditionError(
            f"no power up to the alphabet size fixes the first letter for {right!r}"
        )
    first = first_letter_map(s)
    centers = [""] * (r_right + 1)
    centers[r_right] = rc
    for i in range(r_right - 1, -1, -1):
        centers[i] = chr(first[ord(centers[i + 1])])
    assert centers[0] == rc
    period = tuple(
        _entry_from_block(s.images[ord(centers[i + 1])], 0) for i in range(r_right)
    )
    return RepresentedPoint(DesubstitutionStream(s, (), period, lc, None))


def point_from_literal(subst, doc):
    """Point literal: ``{"kind": "fixed_point", "left": ..., "right": ...}``
    or ``{"kind": "stream", "preperiod": [...], "period": [...], ...}``
    with ``[prefix, center, suffix]`` triples."""
    kind = doc.get("kind")
    if kind == "fixed_point":
        return stream_from_fixed_point(subst, doc["left"], doc["right"])
    if kind == "stream":
        return stream_from_entries(
            subst,
            doc.get("preperiod", []),
            doc["period"],
            doc.get("left_seed"),
            doc.get("right_seed"),
        )
    raise PreconditionError(f"unknown point literal kind {kind!r}")


# ---------------------------------------------------------------------------
# fibers of the odometer factor map


def fiber_bound(subst):
    """Upper bound for fiber sizes of the odometer factor map: the number
    of length-3 words of the subshift."""
    if not is_primitive(subst):
        raise PreconditionError("fiber bound requires a primitive substitution")
    if subst.constant_length is None:
        raise PreconditionError("fiber bound requires constant length")
    if not decide_infinite(subst):
        raise PreconditionError("fiber bound requires an infinite subshift")
    return len(language_chr(subst, 3))


def _admissible_left_seeds(subst, anchor):
    lang2 = language_chr(subst, 2)
    lam = last_letter_map(subst)
    return [
        chr(c)
        for c in range(subst.size)
        if cycle_length(lam, c) is not None and chr(c) + anchor in lang2
    ]


def _admissible_right_seeds(subst, anchor):
    lang2 = language_chr(subst, 2)
    first = first_letter_map(subst)
    return [
        chr(c)
        for c in range(subst.size)
        if cycle_length(first, c) is not None and anchor + chr(c) in lang2
    ]


def _cycle_of(fn, start, bound):
    cur = start
    for i in range(1, bound + 1):
        cur = fn(cur)
        if cur == start:
            return i
    return None


def enumerate_fiber(subst, digits, radius=64):
    """All representable points whose odometer image equals ``digits``.

    The digit sequence forces the whole level chain once the letter at one
    level is chosen, so walking one digit period downwards is a map on
    letters and eventually periodic points correspond to its cycles (plus
    a choice of seed when one side of the data collapses).
    """
    s = subst
    p = s.constant_length
    if p is None:
        raise PreconditionError("fibers require constant length")
    if digits.base != p:
        raise PreconditionError("digit base does not match the substitution length")
    pre_digits = digits.preperiod
    per_digits = digits.period
    k, L = len(pre_digits), len(per_digits)

    def down_one_period(letter):
        """Letter at one digit period below, plus the letters passed on the
        way (levels high-1 down to low, in descending level order)."""
        cur = letter
        passed = []
        for d in reversed(per_digits):
            cur = s.images[ord(cur)][d]
            passed.append(cur)
        return cur, passed

    def g(letter):
        return down_one_period(letter)[0]

    points = []
    for ci in range(s.size):
        c = chr(ci)
        cyc = _cycle_of(g, c, s.size)
        if cyc is None:
            continue
        # center letters at levels k .. k + cyc*L, walked down from the
        # top copy of c; chain[j] is the letter at level k + j
        descending = [c]
        cur = c
        for _ in range(cyc):
            cur, passed = down_one_period(cur)
            descending.extend(passed)
        chain = descending[::-1]
        assert chain[0] == chain[-1] == c
        period_entries = tuple(
            _entry_from_block(s.images[ord(chain[j + 1])], per_digits[j % L])
            for j in range(cyc * L)
        )
        anchor = chain[0]
        pre_entries = []
        cur = anchor
        for i in range(k - 1, -1, -1):
            block = s.images[ord(cur)]
            d = pre_digits[i]
            pre_entries.append(_entry_from_block(block, d))
            cur = block[d]
        pre_entries.reverse()
        pre_entries = tuple(pre_entries)

        if all(d == 0 for d in per_digits):
            seeds = [(seed, None) for seed in _admissible_left_seeds(s, anchor)]
        elif all(d == p - 1 for d in per_digits):
            seeds = [(None, seed) for seed in _admissible_right_seeds(s, anchor)]
        else:
            seeds = [(None, None)]
        for ls, rs in seeds:
            points.append(
                RepresentedPoint(
                    DesubstitutionStream(s, pre_entries, period_entries, ls, rs)
                )
            )

    unique = {}
    for pt in points:
        unique.setdefault(pt.canonical_key(), pt)
    points = sorted(
        unique.values(),
        key=lambda pt: (
            pt.stream.preperiod,
            pt.stream.period,
            pt.stream.left_seed or "",
            pt.stream.right_seed or "",
        ),
    )
    windows = [pt.expand(radius) for pt in points]
    if len(set(windows)) != len(windows):
        raise SeparationBoundError(
            f"radius {radius} does not separate the fiber candidates",
            lower_bound=len(set(windows)),
        )
    return points
