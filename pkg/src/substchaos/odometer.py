"""Eventually periodic base-p digit sequences: elements of the p-odometer
that this package can represent exactly.

Digits are least-significant first, so a sequence ``(d_0, d_1, ...)``
stands for ``sum d_i p^i``.  Values are kept in canonical form: the
period is primitive (no shorter root) and the preperiod is as short as
possible, which makes structural equality coincide with equality in the
odometer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, PreconditionError


def _primitive_root(seq):
    n = len(seq)
    for d in range(1, n + 1):
        if n % d == 0 and seq == seq[:d] * (n // d):
            return seq[:d]
    return seq


def _canonical(preperiod, period):
    period = _primitive_root(tuple(period))
    preperiod = list(preperiod)
    while preperiod and preperiod[-1] == period[-1]:
        preperiod.pop()
        period = (period[-1],) + period[:-1]
    return tuple(preperiod), _primitive_root(period)


@dataclass(frozen=True)
class OdometerDigits:
    base: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise InvariantError("odometer base must be >= 2")
        if not self.period:
            raise InvariantError("period must be nonempty")
        for d in self.preperiod + self.period:
            if not 0 <= d < self.base:
                raise InvariantError(f"digit {d} out of range for base {self.base}")
        pre, per = _canonical(self.preperiod, self.period)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def from_int(cls, value, base):
        """Digits of an integer (negative integers end in base-1 digits)."""
        if value >= 0:
            digits = []
            while value:
                digits.append(value % base)
                value //= base
            return cls(base, tuple(digits), (0,))
        # -q  <->  complement representation ending in (base-1)*
        q = -value - 1
        digits = []
        while q:
            digits.append(base - 1 - (q % base))
            q //= base
        return cls(base, tuple(digits), (base - 1,))

    def digit(self, i):
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def digits(self, count):
        return [self.digit(i) for i in range(count)]

    def is_constant(self, value):
        return not self.preperiod and self.period == (value,)

    def successor(self):
        """Addition of one, carrying to the right."""
        p = self.base
        k = len(self.preperiod)
        L = len(self.period)
        for i in range(k + L):
            if self.digit(i) != p - 1:
                if i < k:
                    pre = (0,) * i + (self.preperiod[i] + 1,) + self.preperiod[i + 1 :]
                    return OdometerDigits(p, pre, self.period)
                j = i - k
                pre = (0,) * i + (self.period[j] + 1,)
                per = self.period[j + 1 :] + self.period[: j + 1]
                return OdometerDigits(p, pre, per)
        # all digits are p-1: the successor of -1 is 0
        return OdometerDigits(p, (), (0,))

    def to_json(self):
        return {
            "base": self.base,
            "preperiod": list(self.preperiod),
            "period": list(self.period),
        }


def successor_of_digit_list(digits, base):
    """Plain +1 with carry on a finite digit list (used to cross-check the
    factor-map property on truncated expansions)."""
    out = list(digits)
    for i, d in enumerate(out):
        if d != base - 1:
            out[i] = d + 1
            return out
        out[i] = 0
    return out


def parse_digits(doc):
    """JSON form ``{"base": p, "preperiod": [...], "period": [...]}``."""
    try:
        return OdometerDigits(
            int(doc["base"]),
            tuple(int(d) for d in doc.get("preperiod", [])),
            tuple(int(d) for d in doc["period"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionError(f"invalid digit literal: {exc}")
