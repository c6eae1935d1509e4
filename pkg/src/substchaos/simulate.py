"""Finite-horizon orbit oracle: expands represented points to long
windows, tracks the agreement radius along forward iteration of the
shift, and reports proximality/separation/recurrence evidence.

Everything here is evidence, never a decision: reports carry their
horizon and window so claims read "at horizon H".  The metric is
``2^(-agreement radius)`` with the radius capped at the report window.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import PreconditionError
from .substitution import DEFAULT_WORD_BUDGET, iterate_chr, zip_pair_word

EVENT_CAP = 512

DEFAULT_WINDOW = 16


def default_horizon(subst):
    """p^10 capped at one million iterations."""
    return min(subst.constant_length ** 10, 10**6)


@dataclass(frozen=True)
class EvidenceReport:
    horizon: int
    window: int
    proximality_events: tuple[int, ...]
    proximality_count: int
    separation_events: tuple[int, ...]
    separation_count: int
    last_separation: int | None
    max_last_difference: int | None
    min_distance: float
    max_distance: float

    def to_json(self):
        return {
            "horizon": self.horizon,
            "window": self.window,
            "proximality_events": list(self.proximality_events),
            "proximality_count": self.proximality_count,
            "separation_events": list(self.separation_events),
            "separation_count": self.separation_count,
            "last_separation": self.last_separation,
            "max_last_difference": self.max_last_difference,
            "min_distance": self.min_distance,
            "max_distance": self.max_distance,
        }


def agreement_radius(x_window, y_window, time, window_cap, center=None):
    """Smallest |i| <= cap with the windows differing at ``time + i``;
    the cap itself when they agree on the whole stretch.  Both windows
    must cover ``time - cap .. time + cap`` around their center index."""
    if len(x_window) != len(y_window):
        raise PreconditionError("windows must have equal length")
    mid = (len(x_window) - 1) // 2 if center is None else center
    lo = mid + time - window_cap
    hi = mid + time + window_cap
    if lo < 0 or hi >= len(x_window):
        raise PreconditionError("windows do not cover the requested time")
    if x_window[lo : hi + 1] == y_window[lo : hi + 1]:
        return window_cap
    if x_window[mid + time] != y_window[mid + time]:
        return 0
    for r in range(1, window_cap + 1):
        if (
            x_window[mid + time - r] != y_window[mid + time - r]
            or x_window[mid + time + r] != y_window[mid + time + r]
        ):
            return r
    return window_cap


def empirical_class(x, y, horizon, window=DEFAULT_WINDOW, budget=DEFAULT_WORD_BUDGET):
    """Scan forward times 0..horizon and report the observed metric
    behavior of the pair; makes no exact claim."""
    if horizon < 0 or window < 1:
        raise PreconditionError("horizon must be >= 0 and window >= 1")
    radius = horizon + window
    xw = x.expand(radius, budget)
    yw = y.expand(radius, budget)
    mid = radius
    diffs = [i - mid for i in range(len(xw)) if xw[i] != yw[i]]
    prox = []
    prox_count = 0
    seps = []
    sep_count = 0
    min_radius = window
    max_radius = 0
    for n in range(horizon + 1):
        pos = bisect_left(diffs, n)
        nearest = window
        if pos < len(diffs):
            nearest = min(nearest, abs(diffs[pos] - n))
        if pos > 0:
            nearest = min(nearest, abs(diffs[pos - 1] - n))
        r = nearest
        min_radius = min(min_radius, r)
        max_radius = max(max_radius, r)
        if r >= window:
            prox_count += 1
            if len(prox) < EVENT_CAP:
                prox.append(n)
        if r == 0:
            sep_count += 1
            if len(seps) < EVENT_CAP:
                seps.append(n)
    last_sep = None
    if sep_count:
        sep_positions = [d for d in diffs if 0 <= d <= horizon]
        last_sep = sep_positions[-1] if sep_positions else None
    return EvidenceReport(
        horizon=horizon,
        window=window,
        proximality_events=tuple(prox),
        proximality_count=prox_count,
        separation_events=tuple(seps),
        separation_count=sep_count,
        last_separation=last_sep,
        max_last_difference=diffs[-1] if diffs else None,
        min_distance=2.0 ** (-max_radius),
        max_distance=2.0 ** (-min_radius),
    )


def scan_until_events(x, y, base_horizon, window=DEFAULT_WINDOW, wanted=3,
                      budget=DEFAULT_WORD_BUDGET):
    """Double the horizon until at least ``wanted`` proximality and
    separation events are seen or the budget stops the expansion; returns
    the last report either way (budget exhaustion is reported, never
    treated as a refutation)."""
    horizon = base_horizon
    while True:
        report = empirical_class(x, y, horizon, window, budget)
        if report.proximality_count >= wanted and report.separation_count >= wanted:
            return report
        if 2 * (2 * horizon + window) + 1 > budget:
            return report
        horizon *= 2


def radius_samples(x, y, horizon, window=DEFAULT_WINDOW, budget=DEFAULT_WORD_BUDGET):
    """(time, agreement radius) samples for CSV export."""
    radius = horizon + window
    xw = x.expand(radius, budget)
    yw = y.expand(radius, budget)
    return [
        (n, agreement_radius(xw, yw, n, window))
        for n in range(horizon + 1)
    ]


def count_occurrences(haystack, needle):
    """Occurrences of ``needle`` in ``haystack`` (overlaps allowed)."""
    count = 0
    i = haystack.find(needle)
    while i >= 0:
        count += 1
        i = haystack.find(needle, i + 1)
    return count


def recurrence_check(x, y, letters, depth, budget=DEFAULT_WORD_BUDGET):
    """For every radius up to ``depth``, look for the centered pair window
    inside the aligned even-power images of the reference letters; true
    when every radius succeeds.

    One occurrence is always the window's own image (the iterated image of
    the central column reproduces it), so recurrence evidence demands a
    second, genuinely different occurrence.
    """
    if depth < 1:
        raise PreconditionError("depth must be >= 1")
    s = x.subst
    a, b = letters
    ac = chr(s.index(a))
    bc = chr(s.index(b))
    pair_images = []
    for m in range(1, depth + 1):
        wa = iterate_chr(s, ac, 2 * m, budget)
        wb = iterate_chr(s, bc, 2 * m, budget)
        pair_images.append(zip_pair_word(s, wa, wb))
    for n in range(1, depth + 1):
        needle = zip_pair_word(s, x.expand(n, budget), y.expand(n, budget))
        if not any(count_occurrences(w, needle) >= 2 for w in pair_images):
            return False
    return True
