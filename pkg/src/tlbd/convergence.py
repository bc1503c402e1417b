"""q-adic distances between full-twist powers and the Jones-Wenzl projectors.

Powers are taken by repeated multiplication over truncated series, so every
reported valuation is backed by coefficients that are known exactly.  When
all known coefficients of a difference vanish the valuation is only bounded
below, reported as :class:`AtLeast`.

>>> valuation_of(twist_power("D", 2, 1, 32) - jw_type_d(2, SERIES, 32))
5
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .braids import full_twist
from .coefficients import SERIES, AtLeast, valuation_and_norm, valuation_at_least
from .errors import InvalidArgument
from .jones_wenzl import jw_type_a, jw_type_d
from .tl_algebra import TLElement, one


def twist_power(family: str, n: int, m: int, precision: int) -> TLElement:
    """``[full twist]^m`` with series coefficients known below ``q^precision``."""
    if precision <= 0:
        raise InvalidArgument("precision must be positive")
    if m < 0:
        raise InvalidArgument("the power must be nonnegative")
    family = family.upper()
    if family not in ("A", "D"):
        raise InvalidArgument("twist powers are defined for families A and D")
    base = full_twist(family, n).to_series(precision)
    result = one(n, SERIES).to_series(precision)
    for _ in range(m):
        result = result * base
    return TLElement._trusted(result.shape, {d: c.truncate(precision) for d, c in result.terms.items()}, SERIES)


def _min_valuation(values):
    exact = [v for v in values if not isinstance(v, AtLeast) and v is not math.inf]
    bounds = [v.bound for v in values if isinstance(v, AtLeast)]
    if not exact and not bounds:
        return math.inf
    if exact and (not bounds or min(exact) < min(bounds)):
        return min(exact)
    return AtLeast(min(bounds))


def valuation_of(x: TLElement):
    """Smallest coefficient valuation; ``inf`` for the exact zero."""
    if x.ring != SERIES:
        raise InvalidArgument("valuations need series coefficients")
    return _min_valuation([c.valuation for c in x.terms.values()])


@dataclass(frozen=True)
class Distance:
    valuation: object
    norm: Fraction

    def certifies(self, target: int) -> bool:
        return valuation_at_least(self.valuation, target)

    def to_json(self) -> dict:
        return {"valuation": valuation_json(self.valuation), "norm": str(self.norm)}


def valuation_json(v):
    if v is math.inf:
        return "inf"
    if isinstance(v, AtLeast):
        return f">={v.bound}"
    return v


def _norm(v) -> Fraction:
    if v is math.inf:
        return Fraction(0)
    bound = v.bound if isinstance(v, AtLeast) else v
    return Fraction(1, 2**bound) if bound >= 0 else Fraction(2 ** (-bound))


def qadic_distance(a: TLElement, b: TLElement) -> Distance:
    """``|a - b|`` in the uniform q-adic norm over the diagram basis.

    >>> x = twist_power("D", 2, 1, 8)
    >>> qadic_distance(x, x)
    Distance(valuation=inf, norm=Fraction(0, 1))
    """
    if a.shape != b.shape:
        raise InvalidArgument("distance between elements of different shapes")
    if a is b:
        # the same unknown tail on both sides cancels exactly
        return Distance(math.inf, Fraction(0))
    diff = a.to_ring(SERIES) - b.to_ring(SERIES)
    if diff.is_zero():
        prec = [p for p in (a.precision, b.precision) if p is not None]
        if prec:
            # nothing known to differ, but only below the precision
            v = AtLeast(min(prec))
            return Distance(v, _norm(v))
        return Distance(math.inf, Fraction(0))
    v = _min_valuation([valuation_and_norm(c)[0] for c in diff.terms.values()])
    return Distance(v, _norm(v))


@dataclass
class ConvergenceReport:
    n: int
    target: int
    precision: int
    entries: list = field(default_factory=list)
    achieved_at: int | None = None
    status: str = "not reached"

    def valuations(self) -> list:
        return [d.valuation for _, d in self.entries]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "target": self.target,
            "precision": self.precision,
            "status": self.status,
            "entries": [{"m": m, **d.to_json()} for m, d in self.entries],
            "achieved_at": self.achieved_at,
        }

    def to_text(self) -> str:
        lines = [f"n={self.n} target={self.target} precision={self.precision}"]
        for m, d in self.entries:
            lines.append(f"m={m} valuation={valuation_json(d.valuation)} norm={d.norm}")
        lines.append(f"{self.status}" + (f" at m={self.achieved_at}" if self.achieved_at else ""))
        return "\n".join(lines)


def default_precision(target: int) -> int:
    return 4 * target


def converge(n: int, target: int, max_power: int, precision: int | None = None) -> ConvergenceReport:
    """Find the first ``m`` with ``|[delta_n]^m - d_n| <= 2^-target``.

    The status is ``achieved``, ``not reached`` (every distance was certified
    and too large) or ``inconclusive`` (the precision ran out first).
    """
    if n < 2:
        raise InvalidArgument("convergence needs n >= 2")
    if max_power < 1:
        raise InvalidArgument("max_power must be at least 1")
    precision = precision or default_precision(target)
    report = ConvergenceReport(n, target, precision)
    limit = jw_type_d(n, SERIES, precision)
    base = full_twist("D", n).to_series(precision)
    power = one(n, SERIES).to_series(precision)
    for m in range(1, max_power + 1):
        power = power * base
        d = qadic_distance(power, limit)
        report.entries.append((m, d))
        if d.certifies(target):
            report.achieved_at = m
            report.status = "achieved"
            return report
        if isinstance(d.valuation, AtLeast):
            report.status = "inconclusive"
            return report
    return report


def type_a_sanity(n: int, max_power: int, precision: int) -> list:
    """Distances from ``[full twist]^m`` to the type A projector, with the
    identity coefficient of each power."""
    limit = jw_type_a(n, SERIES, precision)
    out = []
    for m in range(1, max_power + 1):
        p = twist_power("A", n, m, precision)
        ident = [c for d, c in p.terms.items() if d.is_identity()]
        out.append((m, qadic_distance(p, limit), ident[0] if ident else None))
    return out
