"""The rational group algebra of W(B_n) and its Young symmetrizers.

>>> q = young_symmetrizer(bipartition((1, 1), (1,)))
>>> len(q), quasi_idempotent_scalar(q), left_ideal_dimension(q)
(16, Fraction(16, 1), 3)
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Sequence

from flint import fmpq, fmpq_mat

from .errors import InvalidArgument, NotQuasiIdempotent
from .weyl_group import (
    Bipartition,
    DottedPermutation,
    _make,
    group_elements,
    identity,
    multiply_dotted,
)

MAX_N = 4


def _check_size(n: int, allow_large: bool) -> None:
    if n < 0:
        raise InvalidArgument("n must be nonnegative")
    if n > MAX_N and not allow_large:
        raise InvalidArgument(f"group algebra computations are capped at n = {MAX_N}; pass allow_large to go further")


class GroupAlgebraElement:
    """A finite rational combination of dotted permutations on ``n`` strands."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for g, c in (terms or {}).items():
            if g.n != n:
                raise InvalidArgument(f"{g} does not live on {n} strands")
            c = Fraction(c)
            if c:
                clean[g] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def _trusted(cls, n, terms):
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = dict(sorted((g, c) for g, c in terms.items() if c))
        return obj

    @classmethod
    def of(cls, g: DottedPermutation, coeff=1) -> "GroupAlgebraElement":
        return cls(g.n, {g: coeff})

    def coefficient(self, g: DottedPermutation) -> Fraction:
        return self.terms.get(g, Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if other.n != self.n:
            raise InvalidArgument(f"sizes differ: {self.n} and {other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return GroupAlgebraElement._trusted(self.n, out)

    def __neg__(self):
        return GroupAlgebraElement._trusted(self.n, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            self._check(other)
            out: dict = {}
            for g, a in self.terms.items():
                for h, b in other.terms.items():
                    k = multiply_dotted(g, h)
                    out[k] = out.get(k, 0) + a * b
            return GroupAlgebraElement._trusted(self.n, out)
        if isinstance(other, DottedPermutation):
            return self * GroupAlgebraElement.of(other)
        c = Fraction(other)
        return GroupAlgebraElement._trusted(self.n, {g: v * c for g, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, DottedPermutation):
            return GroupAlgebraElement.of(other) * self
        return self * other

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))

    def scalar_multiple_of(self, other: "GroupAlgebraElement"):
        """``c`` with ``self == c * other``, or None."""
        if other.is_zero():
            return Fraction(0) if self.is_zero() else None
        if set(self.terms) - set(other.terms):
            return None
        g = next(iter(other.terms))
        c = self.coefficient(g) / other.terms[g]
        return c if self == other * c else None

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"element": g.to_json(), "coeff": str(c)} for g, c in self.terms.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "GroupAlgebraElement":
        return cls(obj["n"], {DottedPermutation.from_json(t["element"]): Fraction(t["coeff"]) for t in obj["terms"]})

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"[{c}] {g}" for g, c in self.terms.items())

    def __repr__(self):
        return f"GroupAlgebraElement(n={self.n}, terms={len(self.terms)})"


def unit(n: int) -> GroupAlgebraElement:
    return GroupAlgebraElement.of(identity(n))


# numberings

def standard_numbering(bp: Bipartition) -> tuple:
    """Rows of ``lambda`` then ``mu``, filled with ``1..n`` in reading order."""
    k = 0
    out = []
    for part in (bp.lam, bp.mu):
        rows = []
        for length in part:
            rows.append(tuple(range(k + 1, k + length + 1)))
            k += length
        out.append(tuple(rows))
    return tuple(out)


def validate_numbering(bp: Bipartition, numbering) -> tuple:
    try:
        lam_rows, mu_rows = numbering
        lam_rows = tuple(tuple(int(x) for x in r) for r in lam_rows)
        mu_rows = tuple(tuple(int(x) for x in r) for r in mu_rows)
    except (TypeError, ValueError):
        raise InvalidArgument("a numbering is a pair of row lists") from None
    if tuple(map(len, lam_rows)) != bp.lam or tuple(map(len, mu_rows)) != bp.mu:
        raise InvalidArgument(f"numbering does not have the shape {bp}")
    entries = sorted(abs(x) for r in lam_rows + mu_rows for x in r)
    if entries != list(range(1, bp.size + 1)):
        raise InvalidArgument("entries must use each of 1..n once, up to sign")
    return lam_rows, mu_rows


def _columns(rows):
    return [tuple(r[j] for r in rows if len(r) > j) for j in range(len(rows[0]))] if rows else []


def _blocks_group(n: int, blocks: Iterable[Sequence[int]]):
    """Permutations preserving every block (absolute values), with their signs."""
    blocks = [tuple(abs(x) for x in b) for b in blocks]
    choices = []
    for b in blocks:
        choices.append([(b, p, _perm_sign(p, b)) for p in permutations(b)])
    out = []
    for combo in product(*choices):
        sigma = list(range(1, n + 1))
        sign = 1
        for src, dst, s in combo:
            for a, b in zip(src, dst):
                sigma[a - 1] = b
            sign *= s
        out.append((tuple(sigma), sign))
    return out


def _perm_sign(p, b) -> int:
    idx = [b.index(x) for x in p]
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign


def _symmetrizer(n, blocks, mu_entries, with_sign):
    out = {}
    for sigma, sgn in _blocks_group(n, blocks):
        for eps in product((0, 1), repeat=n):
            c = -1 if sum(eps[i - 1] for i in mu_entries) % 2 else 1
            if with_sign:
                c *= sgn
            out[_make(sigma, eps)] = Fraction(c)
    return GroupAlgebraElement._trusted(n, out)


def row_symmetrizer(bp: Bipartition, numbering=None) -> GroupAlgebraElement:
    lam_rows, mu_rows = validate_numbering(bp, numbering or standard_numbering(bp))
    mu_entries = {abs(x) for r in mu_rows for x in r}
    return _symmetrizer(bp.size, lam_rows + mu_rows, mu_entries, False)


def column_symmetrizer(bp: Bipartition, numbering=None) -> GroupAlgebraElement:
    lam_rows, mu_rows = validate_numbering(bp, numbering or standard_numbering(bp))
    mu_entries = {abs(x) for r in mu_rows for x in r}
    cols = _columns(lam_rows) + _columns(mu_rows)
    return _symmetrizer(bp.size, cols, mu_entries, True)


def young_symmetrizer(bp: Bipartition, numbering=None, allow_large: bool = False) -> GroupAlgebraElement:
    """``2^-n r c`` for the given numbering (standard by default).

    >>> print(young_symmetrizer(bipartition((), (1,))).to_text())
    [1] (1; 0)
    [-1] (1; 1)
    """
    _check_size(bp.size, allow_large)
    r = row_symmetrizer(bp, numbering)
    c = column_symmetrizer(bp, numbering)
    return (r * c) / 2**bp.size


def quasi_idempotent_scalar(q: GroupAlgebraElement) -> Fraction:
    c = (q * q).scalar_multiple_of(q)
    if c is None or q.is_zero():
        raise NotQuasiIdempotent("q*q is not a multiple of q")
    return c


def idempotent(bp: Bipartition, numbering=None) -> GroupAlgebraElement:
    """``e = q / n`` for the Young symmetrizer ``q``.

    >>> print(idempotent(bipartition((), (1,))).to_text())
    [1/2] (1; 0)
    [-1/2] (1; 1)
    """
    q = young_symmetrizer(bp, numbering)
    return q / quasi_idempotent_scalar(q)


def left_ideal_dimension(q: GroupAlgebraElement, allow_large: bool = False) -> int:
    """Rank of the span of ``g q`` over all group elements ``g``."""
    _check_size(q.n, allow_large)
    elements = group_elements(q.n)
    index = {g: i for i, g in enumerate(elements)}
    m = fmpq_mat(len(elements), len(elements))
    for row, g in enumerate(elements):
        for h, c in q.terms.items():
            m[row, index[multiply_dotted(g, h)]] = fmpq(c.numerator, c.denominator)
    return m.rank()


def embed(x: GroupAlgebraElement, n: int) -> GroupAlgebraElement:
    """Add untouched strands on the right."""
    k = n - x.n
    if k < 0:
        raise InvalidArgument("cannot embed into fewer strands")
    terms = {
        _make(g.sigma + tuple(range(x.n + 1, n + 1)), g.eps + (0,) * k): c for g, c in x.terms.items()
    }
    return GroupAlgebraElement._trusted(n, terms)


def bipartition(lam=(), mu=()) -> Bipartition:
    return Bipartition(tuple(lam), tuple(mu))


__all__ = [
    "GroupAlgebraElement",
    "column_symmetrizer",
    "embed",
    "idempotent",
    "left_ideal_dimension",
    "quasi_idempotent_scalar",
    "row_symmetrizer",
    "standard_numbering",
    "unit",
    "young_symmetrizer",
]
