"""Dotted Temperley-Lieb diagrams and their stacking.

A diagram has ``bottom`` points ``b0..b{bottom-1}`` and ``top`` points
``t0..t{top-1}``, both numbered left to right, matched by non-crossing
strands.  A strand carries a dot parity bit; a dot is only allowed on a
strand that can be reached from the left wall without crossing anything.
Square diagrams (``bottom == top == n``) form the basis of TL(B_n); the
rectangular ones are needed for cups, caps and the higher projectors.

Internally endpoint ``e`` is ``b_e`` for ``e < bottom`` and ``t_{e-bottom}``
otherwise.

>>> u1 = generator_diagram("U", 2, 1)
>>> out = compose(u1, u1)
>>> out.undotted_loops, out.result == u1
(1, True)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from . import kernel
from .errors import InvalidArgument

FAMILIES = ("A", "B", "D")

_REASONS = {
    kernel.NOT_INVOLUTION: "matching is not a fixed-point-free involution",
    kernel.NOT_PLANAR: "strands cross",
    kernel.DOT_HIDDEN: "a dotted strand is not reachable from the left wall",
}


class DottedDiagram:
    """An immutable dotted (bottom, top)-diagram.

    Construct from arcs with :meth:`from_arcs`; the constructor takes the raw
    partner/dot arrays and validates them unless ``check=False``.
    """

    __slots__ = ("bottom", "top", "partner", "dots", "_key", "_hash")

    def __init__(self, bottom: int, top: int, partner: Sequence[int], dots: Sequence[int], check: bool = True):
        self.bottom = bottom
        self.top = top
        self.partner = tuple(partner)
        self.dots = tuple(1 if d else 0 for d in dots)
        if check:
            code = kernel.validate(self.partner, self.dots, bottom, top)
            if code != kernel.VALID:
                raise InvalidArgument(f"invalid diagram: {_REASONS[code]}")
        key = []
        for e, f in enumerate(self.partner):
            if e < f:
                key.append((e, f, self.dots[e]))
        self._key = (bottom, top, tuple(key))
        self._hash = hash(self._key)

    @classmethod
    def from_arcs(cls, shape, arcs: Iterable, dots: Iterable = ()) -> "DottedDiagram":
        """Build from endpoint-name pairs such as ``("b0", "t0")``.

        ``shape`` is ``n`` or a ``(bottom, top)`` pair.  ``dots`` lists the
        dotted arcs (either orientation).
        """
        bottom, top = (shape, shape) if isinstance(shape, int) else shape
        size = bottom + top
        partner = [-1] * size
        dot = [0] * size
        for a, b in arcs:
            e, f = _endpoint(a, bottom, top), _endpoint(b, bottom, top)
            if partner[e] != -1 or partner[f] != -1 or e == f:
                raise InvalidArgument("matching is not a fixed-point-free involution")
            partner[e], partner[f] = f, e
        if -1 in partner:
            raise InvalidArgument("matching is not a fixed-point-free involution")
        for a, b in dots:
            e, f = _endpoint(a, bottom, top), _endpoint(b, bottom, top)
            if partner[e] != f:
                raise InvalidArgument(f"dot on ({a},{b}) which is not a strand")
            dot[e] = dot[f] = 1
        return cls(bottom, top, partner, dot)

    # structure

    @property
    def n(self) -> int:
        if self.bottom != self.top:
            raise InvalidArgument(f"({self.bottom},{self.top})-diagram is not square")
        return self.bottom

    @property
    def shape(self) -> tuple[int, int]:
        return (self.bottom, self.top)

    @property
    def key(self):
        return self._key

    def arcs(self) -> list[tuple[int, int, int]]:
        """``(e, f, dot)`` triples with ``e < f``, sorted."""
        return list(self._key[2])

    def dot_count(self) -> int:
        return sum(d for _, _, d in self._key[2])

    def through_strands(self) -> int:
        return sum(1 for e, f, _ in self._key[2] if e < self.bottom <= f)

    def is_identity_shape(self) -> bool:
        """True for the identity and for the identity with a dot on ``b0-t0``."""
        if self.bottom != self.top:
            return False
        return all(self.partner[i] == self.bottom + i for i in range(self.bottom))

    def is_identity(self) -> bool:
        return self.is_identity_shape() and not any(self.dots)

    def mirror(self) -> "DottedDiagram":
        """Reflect top to bottom."""
        b, t = self.bottom, self.top

        def flip(e):
            return e + t if e < b else e - b

        partner = [0] * (b + t)
        dots = [0] * (b + t)
        for e in range(b + t):
            partner[flip(e)] = flip(self.partner[e])
            dots[flip(e)] = self.dots[e]
        return DottedDiagram(t, b, partner, dots, check=False)

    def tensor_right(self, strands: int = 1) -> "DottedDiagram":
        """Append undotted vertical strands on the right."""
        b, t = self.bottom, self.top
        nb, nt = b + strands, t + strands

        def move(e):
            return e if e < b else e - b + nb

        partner = [0] * (nb + nt)
        dots = [0] * (nb + nt)
        for e in range(b + t):
            partner[move(e)] = move(self.partner[e])
            dots[move(e)] = self.dots[e]
        for i in range(strands):
            partner[b + i] = nb + t + i
            partner[nb + t + i] = b + i
        return DottedDiagram(nb, nt, partner, dots, check=False)

    def __eq__(self, other):
        return isinstance(other, DottedDiagram) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return self._hash

    def endpoint_name(self, e: int) -> str:
        return f"b{e}" if e < self.bottom else f"t{e - self.bottom}"

    def to_text(self) -> str:
        parts = []
        for e, f, d in self.arcs():
            parts.append(f"({self.endpoint_name(e)}-{self.endpoint_name(f)})" + ("*" if d else ""))
        return " ".join(parts) if parts else "(empty)"

    def to_json(self) -> dict:
        out = {}
        if self.bottom == self.top:
            out["n"] = self.bottom
        else:
            out["bottom"] = self.bottom
            out["top"] = self.top
        out["arcs"] = [[self.endpoint_name(e), self.endpoint_name(f)] for e, f, _ in self.arcs()]
        out["dots"] = [[self.endpoint_name(e), self.endpoint_name(f)] for e, f, d in self.arcs() if d]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "DottedDiagram":
        shape = obj["n"] if "n" in obj else (obj["bottom"], obj["top"])
        return cls.from_arcs(shape, obj["arcs"], obj.get("dots", ()))

    def __repr__(self) -> str:
        return f"DottedDiagram<{self.bottom},{self.top}: {self.to_text()}>"


def _endpoint(name, bottom: int, top: int) -> int:
    if isinstance(name, int):
        return name
    side, idx = name[0], name[1:]
    if side not in "bt" or not idx.isdigit():
        raise InvalidArgument(f"bad endpoint name {name!r}")
    i = int(idx)
    if side == "b":
        if i >= bottom:
            raise InvalidArgument(f"endpoint {name} out of range")
        return i
    if i >= top:
        raise InvalidArgument(f"endpoint {name} out of range")
    return bottom + i


@dataclass(frozen=True)
class ValidationResult:
    valid: bool
    reason: str = ""

    def __bool__(self):
        return self.valid


def validate(bottom: int, top: int, partner: Sequence[int], dots: Sequence[int]) -> ValidationResult:
    """Check a candidate diagram given as partner/dot arrays.

    A non-involution raises :class:`InvalidArgument`; planarity and dot
    exposure failures are reported in the result.
    """
    code = kernel.validate(tuple(partner), tuple(1 if d else 0 for d in dots), bottom, top)
    if code == kernel.NOT_INVOLUTION:
        raise InvalidArgument(_REASONS[code])
    if code == kernel.VALID:
        return ValidationResult(True)
    return ValidationResult(False, _REASONS[code])


# unfolding to sign-symmetric matchings

def unfold(d: DottedDiagram) -> frozenset:
    """The symmetric matching on signed endpoints ``(side, +-(i+1))``.

    An undotted strand ``{x, y}`` becomes ``{x, y}`` and ``{-x, -y}``; a dotted
    one becomes ``{x, -y}`` and ``{-x, y}``.
    """
    chords = set()
    for e, f, dot in d.arcs():
        x, y = _signed(e, d.bottom), _signed(f, d.bottom)
        if dot:
            chords.add(frozenset((x, _neg(y))))
            chords.add(frozenset((_neg(x), y)))
        else:
            chords.add(frozenset((x, y)))
            chords.add(frozenset((_neg(x), _neg(y))))
    return frozenset(chords)


def fold(chords: Iterable, bottom: int, top: int) -> DottedDiagram:
    """Inverse of :func:`unfold`."""
    size = bottom + top
    partner = [-1] * size
    dots = [0] * size
    for chord in chords:
        (s1, i1), (s2, i2) = sorted(chord)
        if i1 < 0 and i2 < 0:
            continue
        if i1 > 0 and i2 > 0:
            e, f, dot = _unsigned(s1, i1, bottom), _unsigned(s2, i2, bottom), 0
        else:
            # a dotted strand shows up as two mixed-sign chords
            e, f, dot = _unsigned(s1, abs(i1), bottom), _unsigned(s2, abs(i2), bottom), 1
        if partner[e] == -1:
            partner[e], partner[f] = f, e
            dots[e] = dots[f] = dot
    return DottedDiagram(bottom, top, partner, dots)


def _signed(e: int, bottom: int):
    return ("b", e + 1) if e < bottom else ("t", e - bottom + 1)


def _neg(x):
    return (x[0], -x[1])


def _unsigned(side: str, i: int, bottom: int) -> int:
    return i - 1 if side == "b" else bottom + i - 1


# composition

@dataclass(frozen=True)
class CompositionOutcome:
    undotted_loops: int
    dotted_loop_seen: bool
    result: DottedDiagram


@lru_cache(maxsize=1 << 18)
def _compose_cached(top: DottedDiagram, bottom: DottedDiagram) -> CompositionOutcome:
    k, m, n = bottom.bottom, bottom.top, top.top
    partner, dots, loops, dotted = kernel.compose(top.partner, top.dots, bottom.partner, bottom.dots, k, m, n)
    # the constructor re-validates; a failure here would be a kernel bug
    return CompositionOutcome(loops, dotted, DottedDiagram(k, n, partner, dots))


def compose(top: DottedDiagram, bottom: DottedDiagram) -> CompositionOutcome:
    """Stack ``top`` above ``bottom`` and trace every component."""
    if top.bottom != bottom.top:
        raise InvalidArgument(
            f"cannot stack a ({top.bottom},{top.top})-diagram on a ({bottom.bottom},{bottom.top})-diagram"
        )
    return _compose_cached(top, bottom)


# standard diagrams

def identity_diagram(n: int) -> DottedDiagram:
    return DottedDiagram(n, n, [n + i for i in range(n)] + list(range(n)), [0] * (2 * n), check=False)


def generator_diagram(kind: str, n: int, i: int | None = None) -> DottedDiagram:
    """``identity``, ``U`` (with index ``i``), ``s0`` or ``U0`` on ``n`` strands."""
    kind = kind.lower()
    if n < 1:
        raise InvalidArgument("need at least one strand")
    if kind in ("identity", "1", "id"):
        return identity_diagram(n)
    if kind == "s0":
        partner = [n + j for j in range(n)] + list(range(n))
        dots = [0] * (2 * n)
        dots[0] = dots[n] = 1
        return DottedDiagram(n, n, partner, dots, check=False)
    if kind == "u" and i == 0:
        kind = "u0"
    if kind == "u":
        if i is None or not 1 <= i <= n - 1:
            raise InvalidArgument(f"U_{i} needs 1 <= i <= {n - 1}")
        return _cupcap(n, i, dotted=False)
    if kind == "u0":
        if n < 2:
            raise InvalidArgument("U0 needs at least two strands")
        return _cupcap(n, 1, dotted=True)
    raise InvalidArgument(f"unknown generator {kind!r}")


def _cupcap(n: int, i: int, dotted: bool) -> DottedDiagram:
    partner = [n + j for j in range(n)] + list(range(n))
    a, b = i - 1, i
    partner[a], partner[b] = b, a
    partner[n + a], partner[n + b] = n + b, n + a
    dots = [0] * (2 * n)
    if dotted:
        for e in (a, b, n + a, n + b):
            dots[e] = 1
    return DottedDiagram(n, n, partner, dots)


def cap_diagram(n: int, i: int, dotted: bool = False) -> DottedDiagram:
    """The (n, n-2)-diagram joining bottom points ``i-1`` and ``i``."""
    if not 1 <= i <= n - 1:
        raise InvalidArgument(f"cap_{i} needs 1 <= i <= {n - 1}")
    bottom, top = n, n - 2
    partner = [0] * (bottom + top)
    a, b = i - 1, i
    partner[a], partner[b] = b, a
    j = 0
    for e in range(n):
        if e in (a, b):
            continue
        partner[e] = bottom + j
        partner[bottom + j] = e
        j += 1
    dots = [0] * (bottom + top)
    if dotted:
        dots[a] = dots[b] = 1
    return DottedDiagram(bottom, top, partner, dots)


def cup_diagram(n: int, i: int, dotted: bool = False) -> DottedDiagram:
    """The (n-2, n)-diagram joining top points ``i-1`` and ``i``."""
    return cap_diagram(n, i, dotted).mirror()


# enumeration

def _noncrossing_matchings(points: int):
    """All non-crossing perfect matchings of ``0..points-1`` as pair lists."""
    if points == 0:
        yield []
        return
    for j in range(1, points, 2):
        for inner in _noncrossing_matchings(j - 1):
            for outer in _noncrossing_matchings(points - j - 1):
                yield [(0, j)] + [(a + 1, b + 1) for a, b in inner] + [(a + j + 1, b + j + 1) for a, b in outer]


@lru_cache(maxsize=None)
def enumerate_hom_basis(bottom: int, top: int, family: str = "B") -> tuple[DottedDiagram, ...]:
    """All valid (bottom, top)-diagrams of a family, sorted by encoding.

    Dots may be placed exactly on the outermost strands (those not nested
    inside another strand on the side facing the left wall); every subset is
    allowed.  Family ``A`` keeps the undotted ones and ``D`` the even ones.
    """
    family = family.upper()
    if family not in FAMILIES:
        raise InvalidArgument(f"unknown family {family!r}")
    size = bottom + top
    if size % 2:
        return ()
    # circle positions: bottom left to right, then top right to left
    to_end = list(range(bottom)) + [bottom + (top - 1 - j) for j in range(top)]
    out = []
    for matching in _noncrossing_matchings(size):
        outer = [(a, b) for a, b in matching if not any(c < a and b < d for c, d in matching)]
        partner = [0] * size
        for a, b in matching:
            partner[to_end[a]], partner[to_end[b]] = to_end[b], to_end[a]
        choices = [()] if family == "A" else [s for r in range(len(outer) + 1) for s in combinations(outer, r)]
        for chosen in choices:
            if family == "D" and len(chosen) % 2:
                continue
            dots = [0] * size
            for a, b in chosen:
                dots[to_end[a]] = dots[to_end[b]] = 1
            out.append(DottedDiagram(bottom, top, partner, dots, check=False))
    return tuple(sorted(out))


def enumerate_basis(n: int, family: str = "B") -> tuple[DottedDiagram, ...]:
    """The diagram basis of TL(A_{n-1}), TL(B_n) or TL(D_n).

    >>> [len(enumerate_basis(3, f)) for f in "ABD"]
    [5, 20, 10]
    """
    if n < 1:
        raise InvalidArgument("need at least one strand")
    if family.upper() == "D" and n < 2:
        raise InvalidArgument("family D needs n >= 2")
    return enumerate_hom_basis(n, n, family)


def basis_dimension(n: int, family: str = "B") -> int:
    """Closed-form dimension, for cross-checking enumeration."""
    family = family.upper()
    if family == "A":
        return comb(2 * n, n) // (n + 1)
    if family == "B":
        return comb(2 * n, n)
    if family == "D":
        return comb(2 * n, n) // 2
    raise InvalidArgument(f"unknown family {family!r}")
