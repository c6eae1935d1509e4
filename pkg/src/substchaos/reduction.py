"""One-to-one reduction of substitutions and the decision procedure for
finiteness of the generated subshift.

The finiteness decision alternates two steps: if the substitution is
elementary, the subshift is infinite exactly when some letter has two
distinct one-letter right extensions in the language; otherwise it factors
through a strictly smaller alphabet as ``g . f`` and the question is
delegated to ``f . g`` on that alphabet.  The alphabet shrinks at every
round, so the loop terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import PreconditionError, SearchBudgetError
from .substitution import (
    Substitution,
    is_primitive,
    language_chr,
    complexity,
)

SIMPLIFIABILITY_BUDGET = 10**6


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of repeatedly merging letters with identical images."""

    reduced: Substitution
    letter_map: tuple[tuple[str, str], ...]  # (original token, reduced token)
    chain: tuple[tuple[Substitution, tuple[tuple[str, str], ...]], ...]

    def map_token(self, token):
        return dict(self.letter_map)[token]

    def map_word(self, subst, word):
        m = dict(self.letter_map)
        toks = list(word) if isinstance(word, str) else [t for t in word]
        out = [m[t] for t in toks]
        if all(len(t) == 1 for t in self.reduced.alphabet):
            return "".join(out)
        return tuple(out)


def one_to_one_reduction(subst):
    """Merge letters with identical images (representative: earliest in
    alphabet order) until all images are pairwise distinct."""
    current = subst
    chain = []
    total = {tok: tok for tok in subst.alphabet}
    while not current.is_injective():
        rep = {}
        for i, img in enumerate(current.images):
            rep.setdefault(img, i)
        keep = sorted(set(rep.values()))
        old_to_new = {}
        for i, img in enumerate(current.images):
            old_to_new[i] = keep.index(rep[img])
        alphabet = tuple(current.alphabet[i] for i in keep)
        images = tuple(
            "".join(chr(old_to_new[ord(ch)]) for ch in current.images[i]) for i in keep
        )
        step_map = tuple(
            (current.alphabet[i], current.alphabet[keep[old_to_new[i]]])
            for i in range(current.size)
        )
        nxt = Substitution(alphabet, images)
        chain.append((current, step_map))
        step = dict(step_map)
        total = {tok: step[total[tok]] for tok in total}
        current = nxt
    letter_map = tuple((tok, total[tok]) for tok in subst.alphabet)
    return ReductionResult(current, letter_map, tuple(chain))


# ---------------------------------------------------------------------------
# simplifiability


@dataclass(frozen=True)
class Simplification:
    """A factorization ``subst = g . f`` through a smaller alphabet."""

    target_alphabet: tuple[str, ...]
    f: tuple[tuple[str, ...], ...]  # per source letter, word over target_alphabet
    g: tuple[str, ...]  # per target letter, internal word over the source alphabet


class _Budget:
    __slots__ = ("left",)

    def __init__(self, left):
        self.left = left

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise SearchBudgetError(
                "simplifiability search exceeded its candidate budget"
            )


def is_simplifiable(subst, budget=SIMPLIFIABILITY_BUDGET):
    """Search for morphisms ``f: A -> B+`` and ``g: B -> A+`` with
    ``g(f(a))`` equal to every image and ``|B| < |A|``.

    Equivalently: a dictionary of at most ``|A| - 1`` words over ``A``
    such that every image is a concatenation of dictionary words.  The
    search walks factorizations depth-first, introducing dictionary words
    in order of first use, so the reported simplification is
    deterministic.  Returns None for an elementary substitution.
    """
    n = subst.size
    images = list(subst.images)
    counter = _Budget(budget)
    for size in range(1, n):
        found = _cover(images, size, counter)
        if found is not None:
            dictionary, segmentations = found
            target = tuple(str(i) for i in range(len(dictionary)))
            f = tuple(
                tuple(target[idx] for idx in seg) for seg in segmentations
            )
            g = tuple(dictionary)
            for a in range(n):
                rebuilt = "".join(dictionary[idx] for idx in segmentations[a])
                assert rebuilt == images[a]
            return Simplification(target, f, g)
    return None


def _cover(images, size, counter):
    """Depth-first search for a dictionary of exactly <= ``size`` words
    segmenting every image; returns (dictionary, segmentations)."""

    def walk(img_idx, pos, dictionary, segs, seg):
        counter.spend()
        if img_idx == len(images):
            return dictionary, segs
        image = images[img_idx]
        if pos == len(image):
            return walk(img_idx + 1, 0, dictionary, segs + [seg], [])
        rest = image[pos:]
        for widx, w in enumerate(dictionary):
            if rest.startswith(w):
                hit = walk(img_idx, pos + len(w), dictionary, segs, seg + [widx])
                if hit is not None:
                    return hit
        if len(dictionary) < size:
            for ln in range(1, len(rest) + 1):
                w = rest[:ln]
                if w in dictionary:
                    continue
                hit = walk(img_idx, pos + ln, dictionary + [w], segs, seg + [len(dictionary)])
                if hit is not None:
                    return hit
        return None

    return walk(0, 0, [], [], [])


# ---------------------------------------------------------------------------
# finiteness of the subshift


def biprolongeable_letters(subst):
    """Letters with at least two distinct one-letter right extensions in
    the language."""
    followers = {i: set() for i in range(subst.size)}
    for w in language_chr(subst, 2):
        followers[ord(w[0])].add(w[1])
    return [subst.alphabet[i] for i in sorted(followers) if len(followers[i]) >= 2]


def _composed(simp, subst):
    """The substitution ``f . g`` on the smaller alphabet."""
    f_chr = ["".join(chr(int(t)) for t in word) for word in simp.f]
    images = []
    for g_img in simp.g:
        images.append("".join(f_chr[ord(ch)] for ch in g_img))
    return Substitution(simp.target_alphabet, tuple(images))


def decide_infinite_trace(subst, budget=SIMPLIFIABILITY_BUDGET):
    """Exact finiteness decision with the step-by-step trace.

    Returns ``(infinite, trace)`` where the trace lists one record per
    round of the simplification loop.
    """
    if not is_primitive(subst):
        raise PreconditionError("finiteness decision requires a primitive substitution")
    trace = []
    current = subst
    while True:
        if current.size == 1:
            trace.append({"alphabet_size": 1, "action": "singleton", "infinite": False})
            return False, trace
        simp = is_simplifiable(current, budget)
        if simp is None:
            bip = biprolongeable_letters(current)
            trace.append(
                {
                    "alphabet_size": current.size,
                    "action": "elementary",
                    "biprolongeable": list(bip),
                    "infinite": bool(bip),
                }
            )
            return bool(bip), trace
        nxt = _composed(simp, current)
        if not is_primitive(nxt):
            raise PreconditionError(
                "simplification produced a non-primitive substitution"
            )
        trace.append(
            {
                "alphabet_size": current.size,
                "action": "simplified",
                "target_alphabet_size": len(simp.target_alphabet),
                "dictionary": [
                    current.decode(w) if isinstance(current.decode(w), str) else list(current.decode(w))
                    for w in simp.g
                ],
            }
        )
        current = nxt


@lru_cache(maxsize=None)
def decide_infinite(subst):
    """True exactly when the generated subshift is infinite."""
    return decide_infinite_trace(subst)[0]


class ComplexityVerdict(Enum):
    FINITE = "finite"
    INFINITE_EVIDENCE = "infinite_evidence"
    INCONCLUSIVE = "inconclusive"


def oracle_infinite_via_complexity(subst, max_length):
    """Cross-check for the finiteness decision based on factor counts:
    a stalled count proves a finite minimal subshift, strictly growing
    counts up to the bound are evidence of infiniteness."""
    if max_length < 1:
        return ComplexityVerdict.INCONCLUSIVE
    counts = complexity(subst, max_length + 1)
    for k in range(max_length):
        if counts[k + 1] == counts[k]:
            return ComplexityVerdict.FINITE
    if all(counts[k] >= k + 2 for k in range(max_length)):
        return ComplexityVerdict.INFINITE_EVIDENCE
    return ComplexityVerdict.INCONCLUSIVE
