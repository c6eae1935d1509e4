"""The inverse-limit family of three-letter-image substitutions: levels,
projection maps between consecutive levels, the distinguished points, and
desk-scale verification that the distinguished family is scrambled.

The inverse-limit space itself is never materialized; every claim is
checked levelwise on finite windows, which is sound for finite-horizon
evidence because the product topology is determined coordinatewise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError
from .pairs import PairClass, classify_pair
from .reduction import decide_infinite
from .simulate import empirical_class
from .streams import RepresentedPoint, DesubstitutionStream, StreamEntry
from .substitution import Substitution, is_primitive, language_chr


@dataclass(frozen=True)
class TowerLevel:
    index: int
    substitution: Substitution


@lru_cache(maxsize=None)
def tower_substitution(n):
    """Level ``n``: alphabet 0..n, each letter maps to itself, zero, then
    its successor (capped at the top letter)."""
    if n < 1:
        raise PreconditionError("tower levels start at 1")
    alphabet = tuple(str(a) for a in range(n + 1))
    rules = {}
    for a in range(n + 1):
        succ = a + 1 if a != n else n
        rules[str(a)] = [str(a), "0", str(succ)]
    s = Substitution.from_rules(rules, alphabet)
    if not is_primitive(s):
        raise PreconditionError(f"tower level {n} is not primitive")
    if not decide_infinite(s):
        raise PreconditionError(f"tower level {n} generates a finite subshift")
    return TowerLevel(n, s)


def rho(n, word):
    """Letterwise projection from level ``n+1`` words to level ``n``:
    identity except that the top letter drops by one."""
    upper = tower_substitution(n + 1).substitution
    lower = tower_substitution(n).substitution
    toks = list(word) if isinstance(word, str) else [t for t in word]
    out = []
    for t in toks:
        v = upper.index(t)
        out.append(str(min(v, n)))
    return lower.decode(lower.encode(out))


def rho_chr(n, chrword):
    top = n + 1
    return "".join(chr(min(ord(ch), n)) for ch in chrword)


def tower_point_x(n):
    """The level-``n`` point with the top letter at the origin followed by
    ``0 n`` forever (all-zero digits, top-letter left tail)."""
    s = tower_substitution(n).substitution
    entry = StreamEntry("", chr(n), chr(0) + chr(n))
    return RepresentedPoint(DesubstitutionStream(s, (), (entry,), chr(n), None))


def tower_point_y(m, n):
    """The level-``m`` companion point: letter ``n-1`` at the origin,
    the same ``0 n`` suffix data, and the top-letter left tail."""
    if not (m >= n >= 1):
        raise PreconditionError("companion points need m >= n >= 1")
    s = tower_substitution(m).substitution
    if chr(m) + chr(n - 1) not in language_chr(s, 2):
        raise PreconditionError("companion seed junction is not admissible")
    entry = StreamEntry("", chr(n - 1), chr(0) + chr(n))
    return RepresentedPoint(DesubstitutionStream(s, (), (entry,), chr(m), None))


def element_component(n, level):
    """Level component of the ``n``-th member of the distinguished family:
    the canonical point below ``n``, the companion from ``n`` upwards."""
    if level < n:
        return tower_point_x(level)
    return tower_point_y(level, n)


@dataclass(frozen=True)
class TowerMatrixEntry:
    first: int
    second: int
    level: int
    verdict: str
    rule: str
    proximality_count: int
    separation_count: int
    max_last_difference: int | None

    def to_json(self):
        return {
            "first": self.first,
            "second": self.second,
            "level": self.level,
            "verdict": self.verdict,
            "rule": self.rule,
            "proximality_count": self.proximality_count,
            "separation_count": self.separation_count,
            "max_last_difference": self.max_last_difference,
        }


@dataclass(frozen=True)
class TowerReport:
    depth: int
    horizon: int
    entries: tuple[TowerMatrixEntry, ...]

    @property
    def has_distal(self):
        return any(e.verdict == PairClass.DISTAL.value for e in self.entries)

    def to_json(self):
        return {
            "depth": self.depth,
            "horizon": self.horizon,
            "has_distal": self.has_distal,
            "entries": [e.to_json() for e in self.entries],
        }

    def table(self):
        header = f"{'pair':>10} {'level':>5} {'verdict':>12} {'prox':>6} {'sep':>6}"
        lines = [header]
        for e in self.entries:
            lines.append(
                f"({e.first},{e.second}) ".rjust(11)
                + f"{e.level:>4} {e.verdict:>12} {e.proximality_count:>6} {e.separation_count:>6}"
            )
        return "\n".join(lines)


def verify_scrambled_S(depth, horizon, window=16):
    """Levelwise verdicts for all pairs of the first ``depth`` members of
    the distinguished family, with simulator evidence at ``horizon``.

    Every level substitution has overall coincidences, so the exact
    classifier applies throughout; the expected pattern is asymptotic at
    the level where the two members branch and Li-Yorke at every other
    level where they differ.
    """
    if depth < 2:
        raise PreconditionError("depth must be >= 2")
    members = list(range(2, depth + 2))
    entries = []
    for ai in range(len(members)):
        for bi in range(ai + 1, len(members)):
            na, nb = members[ai], members[bi]
            for level in range(1, depth + 3):
                pa = element_component(na, level)
                pb = element_component(nb, level)
                if pa == pb:
                    continue
                verdict = classify_pair(pa, pb)
                ev = empirical_class(pa, pb, horizon, window)
                entries.append(
                    TowerMatrixEntry(
                        first=na,
                        second=nb,
                        level=level,
                        verdict=verdict.kind.value,
                        rule=verdict.rule,
                        proximality_count=ev.proximality_count,
                        separation_count=ev.separation_count,
                        max_last_difference=ev.max_last_difference,
                    )
                )
    return TowerReport(depth, horizon, tuple(entries))


# ---------------------------------------------------------------------------
# window preimages under the level projection


def _rho_preimage_windows(lower, upper, project, window):
    """Words over the alphabet of ``upper`` that project letterwise to the
    lower-level ``window`` and lie in the upper language.

    De-substitution search: a long language word is a slice of the image
    of a shorter one, and projection commutes with the substitutions, so
    each block alignment of the lower window determines (up to boundary
    letters) a lower parent window whose upper preimages expand and slice
    back to the candidates.  The parent shrinks threefold per round.
    """
    p = lower.constant_length
    base_len = 3 * p
    img_index = {img: i for i, img in enumerate(lower.images)}
    memo = {}

    def project_word(w):
        return "".join(project(ch) for ch in w)

    def solve(win):
        if win in memo:
            return memo[win]
        m = len(win)
        if m <= base_len:
            out = sorted(
                w for w in language_chr(upper, m) if project_word(w) == win
            )
            memo[win] = out
            return out
        found = set()
        for lead in range(p):
            full = (m - lead) // p
            trail = m - lead - full * p
            core = []
            ok = True
            for t in range(full):
                block = win[lead + t * p : lead + (t + 1) * p]
                letter = img_index.get(block)
                if letter is None:
                    ok = False
                    break
                core.append(chr(letter))
            if not ok:
                continue
            lefts = [""]
            if lead:
                lefts = [
                    chr(c)
                    for c in range(lower.size)
                    if lower.images[c].endswith(win[:lead])
                ]
            rights = [""]
            if trail:
                rights = [
                    chr(c)
                    for c in range(lower.size)
                    if lower.images[c].startswith(win[lead + full * p :])
                ]
            start = (p - lead) % p
            for lc in lefts:
                for rc in rights:
                    parent = lc + "".join(core) + rc
                    for up in solve(parent):
                        w = upper.apply(up)[start : start + m]
                        if len(w) == m:
                            found.add(w)
        out = sorted(found)
        memo[win] = out
        return out

    return solve(window)


def preimage_candidates(n, window_chr, core_radius=None):
    """Words over the level-``n+1`` alphabet that project to the given
    level-``n`` window and belong to the level-``n+1`` language, counted
    up to agreement on the central core.

    A finite window cannot constrain its own tails (a word that only looks
    like a left-infinite limit tail may legally occur elsewhere in the
    subshift), so candidates that differ only towards the window ends are
    the same evidence; the search pins the central core.  The default core
    keeps one ninth of the window radius.
    """
    lower = tower_substitution(n).substitution
    upper = tower_substitution(n + 1).substitution

    def project(ch):
        return chr(min(ord(ch), n))

    words = _rho_preimage_windows(lower, upper, project, window_chr)
    mid = (len(window_chr) - 1) // 2
    if core_radius is None:
        core_radius = max(1, mid // 9)
    if core_radius >= mid:
        return words
    seen = {}
    for w in words:
        seen.setdefault(w[mid - core_radius : mid + core_radius + 1], w)
    return [seen[key] for key in sorted(seen)]
