"""Full per-substitution analysis bundle and its JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .errors import PreconditionError
from .pairs import (
    Coincidence,
    STRONG_EQUIVALENCE_CHAIN,
    coincidence_class,
    enumerate_ly_orbits,
    has_ly_pairs,
    has_strong_ly,
    has_uncountable_ly,
    li_yorke_certificate,
)
from .reduction import decide_infinite_trace, is_simplifiable, one_to_one_reduction
from .streams import fiber_bound
from .substitution import is_primitive, zip_pair_word


REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": [
        "tool_version",
        "input",
        "primitive",
        "constant_length",
        "x_tau_infinite",
        "is_elementary",
        "one_to_one_reduction",
        "decision_trace",
    ],
    "properties": {
        "tool_version": {"type": "string"},
        "input": {
            "type": "object",
            "required": ["alphabet", "rules"],
            "properties": {
                "alphabet": {"type": "array", "items": {"type": "string"}},
                "rules": {"type": "object"},
            },
        },
        "primitive": {"type": "boolean"},
        "constant_length": {"type": "integer", "minimum": 2},
        "x_tau_infinite": {"type": "boolean"},
        "is_elementary": {"type": "boolean"},
        "one_to_one_reduction": {
            "type": "object",
            "required": ["alphabet", "rules", "letter_map", "steps"],
        },
        "decision_trace": {"type": "array"},
        "coincidence_class": {
            "enum": ["no_coincidence", "partial", "overall"],
        },
        "has_li_yorke": {"type": "boolean"},
        "li_yorke_certificate": {"type": ["object", "null"]},
        "uncountable_li_yorke": {"type": "boolean"},
        "strong_li_yorke": {"type": "boolean"},
        "strong_equivalence_chain": {"type": "array"},
        "fiber_bound": {"type": "integer", "minimum": 1},
        "orbit_representatives": {"type": "array"},
        "brute_check": {"enum": ["agree", None]},
    },
    "additionalProperties": False,
}


def _word_json(word):
    return word if isinstance(word, str) else list(word)


@dataclass
class AnalysisReport:
    data: dict = field(default_factory=dict)

    def to_json_dict(self):
        return self.data

    def dumps(self):
        return json.dumps(self.data, sort_keys=True, indent=2, ensure_ascii=False)

    def table(self):
        lines = []
        skip = {"decision_trace", "orbit_representatives", "input", "one_to_one_reduction"}
        for key in sorted(self.data):
            if key in skip:
                continue
            lines.append(f"{key:>24}: {json.dumps(self.data[key], sort_keys=True)}")
        red = self.data["one_to_one_reduction"]
        lines.append(f"{'reduction rules':>24}: {json.dumps(red['rules'], sort_keys=True)}")
        orbits = self.data.get("orbit_representatives")
        if orbits is not None:
            lines.append(f"{'orbit representatives':>24}: {len(orbits)}")
        return "\n".join(lines)


def _brute_scan(subst, word_bound):
    """Direct word scans of the two Li-Yorke criteria up to the length
    budget; used as an optional self-check of the fixpoint engines."""
    p = subst.constant_length
    n = subst.size
    words = [chr(i) for i in range(n)]
    ly = False
    unc = False
    m = 0
    while p ** (m + 1) <= word_bound:
        m += 1
        words = [subst.apply(w) for w in words]
        for a in range(n):
            for b in range(a + 1, n):
                zipped = zip_pair_word(subst, words[a], words[b])
                target = chr(a * n + b)
                hits = [t for t, ch in enumerate(zipped) if ch == target]
                if not hits:
                    continue
                diag = [
                    t for t, ch in enumerate(zipped) if ord(ch) // n == ord(ch) % n
                ]
                nondiag_after = [
                    t
                    for t, ch in enumerate(zipped)
                    if ord(ch) // n != ord(ch) % n
                ]
                for j in hits:
                    if any(t > j for t in diag) and any(t > j for t in nondiag_after):
                        ly = True
                    if any(t2 > j for t2 in hits) and any(t > j for t in diag):
                        unc = True
    return ly, unc


def analyze(subst, include_orbits=True, brute_bound=None):
    """Run the full pipeline and assemble the report.

    Fields appear exactly when their preconditions hold: pair analysis
    requires a primitive constant-length substitution with an infinite
    subshift, and the orbit list additionally requires countably many
    Li-Yorke pairs.
    """
    if not is_primitive(subst):
        raise PreconditionError("analysis requires a primitive substitution")
    if subst.constant_length is None:
        raise PreconditionError("analysis requires a constant-length substitution")
    data = {}
    data["tool_version"] = __version__
    data["input"] = {
        "alphabet": list(subst.alphabet),
        "rules": {tok: _word_json(subst.image(tok)) for tok in subst.alphabet},
    }
    data["primitive"] = True
    data["constant_length"] = subst.constant_length
    infinite, trace = decide_infinite_trace(subst)
    data["x_tau_infinite"] = infinite
    data["decision_trace"] = trace
    data["is_elementary"] = is_simplifiable(subst) is None
    red = one_to_one_reduction(subst)
    data["one_to_one_reduction"] = {
        "alphabet": list(red.reduced.alphabet),
        "rules": {tok: _word_json(red.reduced.image(tok)) for tok in red.reduced.alphabet},
        "letter_map": {a: b for a, b in red.letter_map},
        "steps": len(red.chain),
    }
    if not infinite:
        return AnalysisReport(data)
    reduced = red.reduced
    cls = coincidence_class(reduced)
    data["coincidence_class"] = cls.kind.value
    data["has_li_yorke"] = has_ly_pairs(reduced)
    cert = li_yorke_certificate(reduced) if data["has_li_yorke"] else None
    data["li_yorke_certificate"] = None if cert is None else cert.to_json()
    data["uncountable_li_yorke"] = has_uncountable_ly(reduced)
    data["strong_li_yorke"] = has_strong_ly(reduced)
    if data["strong_li_yorke"]:
        data["strong_equivalence_chain"] = list(STRONG_EQUIVALENCE_CHAIN)
    data["fiber_bound"] = fiber_bound(reduced)
    if include_orbits and data["has_li_yorke"] and not data["uncountable_li_yorke"]:
        orbits = enumerate_ly_orbits(reduced)
        data["orbit_representatives"] = [
            [x.to_literal(), y.to_literal()] for x, y in orbits
        ]
    if brute_bound:
        ly, unc = _brute_scan(reduced, brute_bound)
        engine_ly = data["has_li_yorke"]
        engine_unc = data["uncountable_li_yorke"]
        if (ly and not engine_ly) or (unc and not engine_unc):
            raise AssertionError("engine contradicts the brute-force scan")
        data["brute_check"] = "agree"
    return AnalysisReport(data)
