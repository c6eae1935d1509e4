"""Substitutions on finite alphabets: parsing, iteration, primitivity,
language generation and the induced substitution on letter-pairs.

Words are handled internally as strings over ``chr(0) .. chr(k-1)`` where
``k`` is the alphabet size; the public surface speaks in alphabet tokens
(a plain string when every token is one character, a token tuple
otherwise).  All values are immutable after construction, so everything
here is safe to share between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParseError, InvariantError, PreconditionError, BudgetExceededError

DEFAULT_WORD_BUDGET = 1 << 24


@dataclass(frozen=True)
class Substitution:
    """A map from letters to nonempty words over the same alphabet.

    ``alphabet`` fixes the letter order used for every tie-break in the
    package; ``images`` holds the image of letter ``i`` as an internal
    chr-coded string.
    """

    alphabet: tuple[str, ...]
    images: tuple[str, ...]

    def __post_init__(self):
        if not self.alphabet:
            raise InvariantError("alphabet must contain at least one letter")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InvariantError("duplicate alphabet tokens")
        if len(self.images) != len(self.alphabet):
            raise InvariantError("one image per letter required")
        n = len(self.alphabet)
        for tok, img in zip(self.alphabet, self.images):
            if not img:
                raise InvariantError(f"empty image for letter {tok!r}")
            for ch in img:
                if ord(ch) >= n:
                    raise InvariantError(f"image of {tok!r} uses an unknown letter")

    # -- construction ------------------------------------------------

    @classmethod
    def from_rules(cls, rules, alphabet=None):
        """Build from ``{token: image}`` where an image is a string of
        one-character tokens or an iterable of tokens."""
        if alphabet is None:
            alphabet = tuple(rules.keys())
        alphabet = tuple(alphabet)
        index = {tok: i for i, tok in enumerate(alphabet)}
        if set(rules) != set(alphabet):
            missing = set(alphabet) - set(rules)
            extra = set(rules) - set(alphabet)
            raise InvariantError(f"rules/alphabet mismatch (missing {missing}, extra {extra})")
        images = []
        for tok in alphabet:
            img = rules[tok]
            if isinstance(img, str):
                toks = list(img)
            else:
                toks = list(img)
            try:
                images.append("".join(chr(index[t]) for t in toks))
            except KeyError as exc:
                raise InvariantError(f"image of {tok!r} uses unknown letter {exc.args[0]!r}")
        return cls(alphabet, tuple(images))

    # -- basic accessors ---------------------------------------------

    @property
    def size(self):
        return len(self.alphabet)

    @property
    def constant_length(self):
        """The common image length ``p`` or None for variable length."""
        lengths = {len(img) for img in self.images}
        if len(lengths) == 1:
            return lengths.pop()
        return None

    @property
    def is_constant(self):
        return self.constant_length is not None

    def is_injective(self):
        """True when distinct letters have distinct images."""
        return len(set(self.images)) == len(self.images)

    def index(self, token):
        try:
            return self.alphabet.index(token)
        except ValueError:
            raise InvariantError(f"unknown letter {token!r}")

    def image(self, token):
        """Image of a letter, in public word form."""
        return self.decode(self.images[self.index(token)])

    def rules(self):
        """Rules as ``{token: image}`` in public word form."""
        return {tok: self.decode(img) for tok, img in zip(self.alphabet, self.images)}

    # -- word encoding -----------------------------------------------

    def encode(self, word):
        """Public word form (string of tokens or token iterable) to the
        internal chr-coded string."""
        if isinstance(word, str):
            toks = list(word)
        else:
            toks = [self.alphabet[t] if isinstance(t, int) else t for t in word]
        index = {tok: i for i, tok in enumerate(self.alphabet)}
        try:
            return "".join(chr(index[t]) for t in toks)
        except KeyError as exc:
            raise InvariantError(f"unknown letter {exc.args[0]!r}")

    def decode(self, chrword):
        """Internal chr-coded word back to public form."""
        if all(len(tok) == 1 for tok in self.alphabet):
            return "".join(self.alphabet[ord(ch)] for ch in chrword)
        return tuple(self.alphabet[ord(ch)] for ch in chrword)

    # -- application -------------------------------------------------

    @property
    def _table(self):
        return _translate_table(self)

    def apply(self, chrword):
        """One application of the substitution to an internal word."""
        return chrword.translate(self._table)


@lru_cache(maxsize=None)
def _translate_table(subst):
    return {i: img for i, img in enumerate(subst.images)}


# ---------------------------------------------------------------------------
# parsing


def parse_substitution(text):
    """Parse the external substitution format.

    Accepts either one ``<letter> -> <image>`` rule per line (letters are
    single characters or backtick-quoted multi-character tokens, ``#``
    starts a comment, blank lines are ignored) or a JSON document
    ``{"alphabet": [...], "rules": {...}}``.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    alphabet = []
    rules = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens, arrow_col = _tokenize_rule_line(raw, lineno)
        if tokens is None:
            continue
        letter, image = tokens
        if letter in rules:
            raise ParseError(f"duplicate definition of letter {letter!r}", lineno, 1)
        if not image:
            raise ParseError(f"empty image for letter {letter!r}", lineno, arrow_col)
        alphabet.append(letter)
        rules[letter] = image
    if not alphabet:
        raise ParseError("no rules found", 1, 1)
    for letter, image in rules.items():
        for tok in image:
            if tok not in rules:
                lineno = alphabet.index(letter) + 1
                raise ParseError(f"image of {letter!r} uses unknown letter {tok!r}", lineno, 1)
    return Substitution.from_rules({a: rules[a] for a in alphabet}, alphabet)


def _tokenize_rule_line(raw, lineno):
    """Return ((letter, image_tokens), arrow_col) or (None, None) for
    blank/comment lines."""
    tokens = []
    arrow_positions = []
    i = 0
    while i < len(raw):
        ch = raw[i]
        if ch == "#":
            break
        if ch.isspace():
            i += 1
            continue
        if ch == "`":
            j = raw.find("`", i + 1)
            if j < 0:
                raise ParseError("unterminated backtick token", lineno, i + 1)
            if j == i + 1:
                raise ParseError("empty backtick token", lineno, i + 1)
            tokens.append(raw[i + 1 : j])
            i = j + 1
            continue
        if raw.startswith("->", i):
            arrow_positions.append((len(tokens), i + 1))
            i += 2
            continue
        tokens.append(ch)
        i += 1
    if not tokens and not arrow_positions:
        return None, None
    if len(arrow_positions) != 1:
        raise ParseError("expected exactly one '->'", lineno, 1)
    split, col = arrow_positions[0]
    if split != 1:
        raise ParseError("expected a single letter before '->'", lineno, 1)
    return (tokens[0], tokens[1:]), col


def _parse_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno)
    if not isinstance(doc, dict) or "rules" not in doc:
        raise ParseError("JSON document must contain a 'rules' object", 1, 1)
    rules = doc["rules"]
    alphabet = doc.get("alphabet") or list(rules.keys())
    try:
        return Substitution.from_rules(rules, tuple(alphabet))
    except InvariantError as exc:
        raise ParseError(str(exc), 1, 1)


# ---------------------------------------------------------------------------
# iteration


def iterate(subst, word, count, budget=DEFAULT_WORD_BUDGET):
    """The ``count``-fold image of ``word``; public word in, public word out."""
    return subst.decode(iterate_chr(subst, subst.encode(word), count, budget))


def iterate_chr(subst, chrword, count, budget=DEFAULT_WORD_BUDGET):
    if count < 0:
        raise PreconditionError("iteration count must be >= 0")
    w = chrword
    for _ in range(count):
        grown = len(w) * max(len(img) for img in subst.images)
        if grown > budget:
            raise BudgetExceededError(
                f"iteration would exceed the word budget ({grown} > {budget})"
            )
        w = subst.apply(w)
    return w


def iterate_prefix(subst, chrword, count, length):
    """Prefix of length <= ``length`` of the ``count``-fold image."""
    if length <= 0:
        return ""
    w = chrword[:length]
    for _ in range(count):
        w = subst.apply(w)[:length]
    return w


def iterate_suffix(subst, chrword, count, length):
    """Suffix of length <= ``length`` of the ``count``-fold image."""
    if length <= 0:
        return ""
    w = chrword[-length:]
    for _ in range(count):
        w = subst.apply(w)[-length:]
    return w


# ---------------------------------------------------------------------------
# incidence matrix and primitivity


def incidence_matrix(subst):
    """Row ``a``, column ``b``: occurrences of letter ``a`` in the image
    of ``b``.  Column sums equal image lengths."""
    n = subst.size
    return [[subst.images[b].count(chr(a)) for b in range(n)] for a in range(n)]


def wielandt_bound(n):
    return (n - 1) * (n - 1) + 1


@lru_cache(maxsize=None)
def is_primitive(subst):
    """True when some power maps every letter to a word containing every
    letter.  Powers are searched up to the Wielandt bound (n-1)^2 + 1."""
    n = subst.size
    base = [frozenset(ord(ch) for ch in img) for img in subst.images]
    full = frozenset(range(n))
    cur = base
    for _ in range(wielandt_bound(n)):
        if all(col == full for col in cur):
            return True
        cur = [frozenset().union(*(base[c] for c in col)) for col in cur]
    return False


# ---------------------------------------------------------------------------
# language of the generated subshift


@lru_cache(maxsize=None)
def language_chr(subst, length):
    """All internal length-``length`` subwords of the subshift, as a
    frozenset.  Requires a primitive substitution."""
    if length < 1:
        raise PreconditionError("word length must be >= 1")
    if not is_primitive(subst):
        raise PreconditionError("language generation requires a primitive substitution")
    n = subst.size
    if n == 1:
        return frozenset({chr(0) * length})
    # Grow letter images until every one is long enough to contain a
    # length-`length` factor, seed with those factors, then close under
    # one application of the substitution; the set is monotone and
    # bounded, so the loop terminates at the full factor set.
    words = [chr(i) for i in range(n)]
    while min(len(w) for w in words) < length:
        words = [subst.apply(w) for w in words]
    current = set()
    for w in words:
        current.update(w[i : i + length] for i in range(len(w) - length + 1))
    while True:
        fresh = set()
        for w in current:
            img = subst.apply(w)
            fresh.update(img[i : i + length] for i in range(len(img) - length + 1))
        if fresh <= current:
            return frozenset(current)
        current |= fresh


def language(subst, length):
    """The set of length-``length`` words of the subshift, public form."""
    return {subst.decode(w) for w in language_chr(subst, length)}


def sorted_language(subst, length):
    """Language sorted by alphabet order (deterministic listings)."""
    return [subst.decode(w) for w in sorted(language_chr(subst, length))]


def complexity(subst, max_length):
    """Factor counts ``p(1) .. p(max_length)``."""
    return [len(language_chr(subst, k)) for k in range(1, max_length + 1)]


@lru_cache(maxsize=None)
def _membership_base(subst):
    p = subst.constant_length
    limit = max(2 * p + 2, 4)
    return limit, {k: language_chr(subst, k) for k in range(1, limit + 1)}


@lru_cache(maxsize=None)
def _image_index(subst):
    return {img: i for i, img in enumerate(subst.images)}


def in_language(subst, chrword):
    """Exact membership of an internal word in the subshift language.

    Works by de-substituting the word block by block (every alignment is
    tried, boundary blocks may be partial) until it is short enough to
    compare against an enumerated factor set.  Requires a primitive
    injective constant-length substitution.
    """
    p = subst.constant_length
    if p is None or not subst.is_injective():
        raise PreconditionError("membership test needs an injective constant-length substitution")
    limit, base = _membership_base(subst)
    return _in_language_rec(subst, chrword, p, limit, base)


def _in_language_rec(subst, w, p, limit, base):
    if not w:
        return True
    if len(w) <= limit:
        return w in base[len(w)]
    img_index = _image_index(subst)
    n = subst.size
    for offset in range(p):
        head = w[:offset]
        body_end = offset + ((len(w) - offset) // p) * p
        body = w[offset:body_end]
        tail = w[body_end:]
        letters = []
        ok = True
        for i in range(0, len(body), p):
            block = body[i : i + p]
            letter = img_index.get(block)
            if letter is None:
                ok = False
                break
            letters.append(chr(letter))
        if not ok:
            continue
        core = "".join(letters)
        head_choices = [""] if not head else [
            chr(c) for c in range(n) if subst.images[c].endswith(head)
        ]
        tail_choices = [""] if not tail else [
            chr(c) for c in range(n) if subst.images[c].startswith(tail)
        ]
        for hc in head_choices:
            for tc in tail_choices:
                if _in_language_rec(subst, hc + core + tc, p, limit, base):
                    return True
    return False


# ---------------------------------------------------------------------------
# the substitution on letter-pairs


def pair_token(subst, i, j):
    return f"({subst.alphabet[i]},{subst.alphabet[j]})"


def pair_substitution(subst):
    """The induced substitution on the alphabet of letter-pairs: the image
    of ``(a, b)`` zips the images of ``a`` and ``b`` position by position.
    Diagonal letters map to diagonal words."""
    p = subst.constant_length
    if p is None:
        raise PreconditionError("the pair substitution needs constant length")
    n = subst.size
    alphabet = tuple(pair_token(subst, i, j) for i in range(n) for j in range(n))
    images = []
    for i in range(n):
        for j in range(n):
            left = subst.images[i]
            right = subst.images[j]
            images.append("".join(chr(ord(a) * n + ord(b)) for a, b in zip(left, right)))
    return Substitution(alphabet, tuple(images))


def zip_pair_word(subst, left, right):
    """Encode two equal-length internal words as one internal pair-word."""
    if len(left) != len(right):
        raise PreconditionError("pair words need equal projections")
    n = subst.size
    return "".join(chr(ord(a) * n + ord(b)) for a, b in zip(left, right))


def project_pair_word(subst, pairword, side):
    n = subst.size
    if side == 0:
        return "".join(chr(ord(ch) // n) for ch in pairword)
    return "".join(chr(ord(ch) % n) for ch in pairword)


# ---------------------------------------------------------------------------
# letter maps used by seed handling


@lru_cache(maxsize=None)
def first_letter_map(subst):
    """letter -> first letter of its image."""
    return tuple(ord(img[0]) for img in subst.images)


@lru_cache(maxsize=None)
def last_letter_map(subst):
    """letter -> last letter of its image."""
    return tuple(ord(img[-1]) for img in subst.images)


def cycle_length(mapping, letter):
    """Length of the cycle of ``letter`` under ``mapping`` or None when the
    letter is not on a cycle."""
    seen = [letter]
    cur = letter
    for _ in range(len(mapping)):
        cur = mapping[cur]
        if cur == letter:
            return len(seen)
        seen.append(cur)
    return None
