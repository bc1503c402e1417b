"""The tensor power ``V^n`` of the two-dimensional module, with the commuting
actions of TL(B_n) and the coideal elements ``B`` and ``C``.

Basis vectors are words in ``x < y`` in lexicographic order, factor 1
first.  Operators act on the left and store an integer Laurent numerator
matrix over one common denominator, so products stay in Laurent arithmetic.

>>> B = generator_operator("B", 1)
>>> B.apply(RepVector.basis(1, "x")).to_text()
'[1] y'
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Sequence

from flint import fmpq, fmpq_mat

from .coefficients import (
    ONE,
    RATFUNC,
    SERIES,
    LaurentPolynomial,
    RationalFunction,
    as_ratfunc,
    exact_quotient,
    polynomial_lcm,
    quantum_integer,
)
from .diagrams import DottedDiagram, compose, enumerate_basis, generator_diagram, identity_diagram
from .errors import InvalidArgument, UnsupportedRing
from .tl_algebra import TLElement

MAX_N = 6
ZERO = LaurentPolynomial()
Q = LaurentPolynomial.monomial(1)
QI = LaurentPolynomial.monomial(-1)


def _check_n(n: int, allow_large: bool = False) -> None:
    if n < 1:
        raise InvalidArgument("need n >= 1")
    if n > MAX_N and not allow_large:
        raise InvalidArgument(f"operators are capped at n = {MAX_N}; pass allow_large to go further")


def word_of(index: int, n: int) -> str:
    return "".join("y" if (index >> (n - 1 - k)) & 1 else "x" for k in range(n))


def index_of(word: str) -> int:
    out = 0
    for ch in word:
        if ch not in "xy":
            raise InvalidArgument(f"basis words use x and y, not {ch!r}")
        out = 2 * out + (ch == "y")
    return out


def _normalize_den(den: LaurentPolynomial) -> LaurentPolynomial:
    # an honest polynomial with positive leading coefficient
    if den.valuation != 0:
        raise InvalidArgument("operator denominators must be polynomials")
    return den


class RepVector:
    """A vector of ``V^n`` with rational-function coordinates."""

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords: Sequence):
        if len(coords) != 2**n:
            raise InvalidArgument(f"a vector of V^{n} has {2**n} coordinates")
        self.n = n
        self.coords = tuple(as_ratfunc(c) for c in coords)

    @classmethod
    def basis(cls, n: int, word: str) -> "RepVector":
        if len(word) != n:
            raise InvalidArgument(f"basis word {word!r} does not have length {n}")
        coords = [0] * 2**n
        coords[index_of(word)] = 1
        return cls(n, coords)

    def tensor(self, other: "RepVector") -> "RepVector":
        return RepVector(self.n + other.n, [a * b for a in self.coords for b in other.coords])

    def __add__(self, other):
        return RepVector(self.n, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return RepVector(self.n, [a - b for a, b in zip(self.coords, other.coords)])

    def scale(self, c) -> "RepVector":
        c = as_ratfunc(c)
        return RepVector(self.n, [a * c for a in self.coords])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, RepVector) and self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def specialize(self, q) -> list[Fraction]:
        return [c.evaluate(q) for c in self.coords]

    def to_text(self) -> str:
        parts = [f"[{c}] {word_of(i, self.n)}" for i, c in enumerate(self.coords) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"n": self.n, "coords": {word_of(i, self.n): str(c) for i, c in enumerate(self.coords) if c}}


class RepOperator:
    """A ``2^n x 2^n`` matrix ``num / den`` acting on column vectors."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num, den: LaurentPolynomial = ONE):
        size = 2**n
        if len(num) != size or any(len(r) != size for r in num):
            raise InvalidArgument(f"an operator on V^{n} is {size}x{size}")
        self.n = n
        self.num = tuple(tuple(e if isinstance(e, LaurentPolynomial) else LaurentPolynomial(e) for e in r) for r in num)
        self.den = _normalize_den(den)

    @classmethod
    def _raw(cls, n, num, den):
        obj = object.__new__(cls)
        obj.n, obj.num, obj.den = n, num, den
        return obj

    @classmethod
    def from_columns(cls, n: int, images) -> "RepOperator":
        """Build from ``images[j]``, a dict ``{row: Laurent}`` for basis vector ``j``."""
        size = 2**n
        rows = [[ZERO] * size for _ in range(size)]
        for j, col in enumerate(images):
            for i, c in col.items():
                rows[i][j] = rows[i][j] + c
        return cls._raw(n, tuple(map(tuple, rows)), ONE)

    @classmethod
    def identity(cls, n: int) -> "RepOperator":
        return cls.from_columns(n, [{j: ONE} for j in range(2**n)])

    @classmethod
    def zero(cls, n: int) -> "RepOperator":
        return cls.from_columns(n, [{} for _ in range(2**n)])

    @property
    def size(self) -> int:
        return 2**self.n

    def entry(self, i: int, j: int) -> RationalFunction:
        return RationalFunction(self.num[i][j], self.den)

    def _reduced(self) -> "RepOperator":
        if self.den.is_one():
            return self
        g = self.den._p
        for r in self.num:
            for e in r:
                if not e.is_zero():
                    g = g.gcd(e._p)
                    if g.degree() == 0:
                        break
            if g.degree() == 0:
                break
        if g.degree() == 0:
            return self
        gl = LaurentPolynomial._make(0, g)
        num = tuple(tuple(exact_quotient(e, gl) if not e.is_zero() else e for e in r) for r in self.num)
        return RepOperator._raw(self.n, num, exact_quotient(self.den, gl))

    def _check(self, other):
        if not isinstance(other, RepOperator) or other.n != self.n:
            raise InvalidArgument("operators on different tensor powers")

    def _over(self, den: LaurentPolynomial):
        if den == self.den:
            return self.num
        f = exact_quotient(den, self.den)
        return tuple(tuple(e * f for e in r) for r in self.num)

    def __add__(self, other):
        self._check(other)
        den = self.den if self.den == other.den else polynomial_lcm(self.den, other.den)
        a, b = self._over(den), other._over(den)
        num = tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
        return RepOperator._raw(self.n, num, den)._reduced()

    def __neg__(self):
        return RepOperator._raw(self.n, tuple(tuple(-e for e in r) for r in self.num), self.den)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "RepOperator":
        c = as_ratfunc(c)
        num = tuple(tuple(e * c.num for e in r) for r in self.num)
        return RepOperator._raw(self.n, num, self.den * c.den)._reduced()

    def __matmul__(self, other: "RepOperator") -> "RepOperator":
        self._check(other)
        size = self.size
        cols = [[(k, other.num[k][j]) for k in range(size) if not other.num[k][j].is_zero()] for j in range(size)]
        rows = []
        for r in self.num:
            nz = {k: e for k, e in enumerate(r) if not e.is_zero()}
            out = []
            for col in cols:
                acc = ZERO
                for k, b in col:
                    a = nz.get(k)
                    if a is not None:
                        acc = acc + a * b
                out.append(acc)
            rows.append(tuple(out))
        return RepOperator._raw(self.n, tuple(rows), self.den * other.den)._reduced()

    def __mul__(self, other):
        if isinstance(other, RepOperator):
            return self @ other
        return self.scale(other)

    __rmul__ = scale

    def __pow__(self, k: int) -> "RepOperator":
        out = RepOperator.identity(self.n)
        for _ in range(k):
            out = out @ self
        return out

    def apply(self, v: RepVector) -> RepVector:
        if v.n != self.n:
            raise InvalidArgument("vector and operator live on different tensor powers")
        d = RationalFunction(1, self.den)
        out = []
        for r in self.num:
            acc = RationalFunction()
            for e, c in zip(r, v.coords):
                if not e.is_zero() and not c.is_zero():
                    acc = acc + c * e
            out.append(acc * d)
        return RepVector(self.n, out)

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.num for e in r)

    def __eq__(self, other):
        if not isinstance(other, RepOperator) or other.n != self.n:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return all(a * other.den == b * self.den for ra, rb in zip(self.num, other.num) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash((self.n, self.num))

    def trace(self) -> RationalFunction:
        total = ZERO
        for i in range(self.size):
            total = total + self.num[i][i]
        return RationalFunction(total, self.den)

    def specialize(self, q) -> list[list[Fraction]]:
        d = self.den.evaluate(q)
        return [[e.evaluate(q) / d for e in r] for r in self.num]

    def rank_at(self, q=Fraction(2)) -> int:
        return _rank(self.specialize(q))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [[str(self.entry(i, j)) for j in range(self.size)] for i in range(self.size)]}


def _rank(rows: list[list[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    m = fmpq_mat(len(rows), len(rows[0]))
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            if v:
                m[i, j] = fmpq(v.numerator, v.denominator)
    return m.rank()


# generators

def _bits(index: int, n: int) -> list[int]:
    return [(index >> (n - 1 - k)) & 1 for k in range(n)]


def _index(bits: Sequence[int]) -> int:
    out = 0
    for b in bits:
        out = 2 * out + b
    return out


def _pair_operator(n: int, i: int, local) -> RepOperator:
    """Apply ``local(a, b) -> {(a', b'): coeff}`` on factors ``i, i+1`` (1-based)."""
    if not 1 <= i <= n - 1:
        raise InvalidArgument(f"factor index {i} out of range for n = {n}")
    images = []
    for j in range(2**n):
        bits = _bits(j, n)
        col = {}
        for (a, b), c in local(bits[i - 1], bits[i]).items():
            new = bits.copy()
            new[i - 1], new[i] = a, b
            k = _index(new)
            col[k] = col.get(k, ZERO) + c
        images.append(col)
    return RepOperator.from_columns(n, images)


def _local_u(a: int, b: int) -> dict:
    # x = 0, y = 1; the image of x (x) y - q y (x) x spans the image
    if a == b:
        return {}
    if (a, b) == (0, 1):
        return {(0, 1): QI, (1, 0): LaurentPolynomial(-1)}
    return {(0, 1): LaurentPolynomial(-1), (1, 0): Q}


def _local_hecke_right(a: int, b: int) -> dict:
    """The right action of ``H_i`` on ``x_j (x) x_j'``; ``x`` has the larger index."""
    ja, jb = (1 if a == 0 else -1), (1 if b == 0 else -1)
    if ja < jb:
        return {(b, a): ONE}
    if ja > jb:
        return {(b, a): ONE, (a, b): QI - Q}
    return {(b, a): QI}


def _local_hecke(a: int, b: int) -> dict:
    # the right action read on reversed factors gives the left operator
    return {(y, x): c for (x, y), c in _local_hecke_right(b, a).items()}


def _k_inverse(bit: int) -> LaurentPolynomial:
    return QI if bit == 0 else Q


@lru_cache(maxsize=None)
def generator_operator(kind: str, n: int, i: int | None = None) -> RepOperator:
    """``s0``, ``U`` or ``H`` (factor ``i``), ``B``, ``C`` or ``K`` on ``V^n``.

    >>> str(generator_operator("H", 2, 1).entry(0, 0))
    'q^-1'
    """
    _check_n(n, allow_large=True)
    kind = kind.upper() if kind.lower() != "s0" else "s0"
    if kind == "s0":
        images = []
        for j in range(2**n):
            bits = _bits(j, n)
            bits[0] ^= 1
            images.append({_index(bits): ONE})
        return RepOperator.from_columns(n, images)
    if kind == "U":
        return _pair_operator(n, _need_index(i), _local_u)
    if kind == "H":
        return _pair_operator(n, _need_index(i), _local_hecke)
    if kind == "B":
        images = []
        for j in range(2**n):
            bits = _bits(j, n)
            col = {}
            for slot in range(n):
                coeff = ONE
                for later in bits[slot + 1:]:
                    coeff = coeff * _k_inverse(later)
                new = bits.copy()
                new[slot] ^= 1
                col[_index(new)] = coeff
            images.append(col)
        return RepOperator.from_columns(n, images)
    if kind == "C":
        return RepOperator.from_columns(n, [{j: LaurentPolynomial.monomial(n)} for j in range(2**n)])
    if kind == "K":
        return RepOperator.from_columns(
            n, [{j: LaurentPolynomial.monomial(sum(1 if b == 0 else -1 for b in _bits(j, n)))} for j in range(2**n)]
        )
    raise InvalidArgument(f"unknown operator {kind!r}")


def _need_index(i):
    if i is None:
        raise InvalidArgument("this generator needs an index")
    return int(i)


# the TL(B_n) action

@lru_cache(maxsize=None)
def diagram_words(n: int) -> dict:
    """A generator word (``0`` for ``s0``, ``i`` for ``U_i``) for every basis
    diagram, found breadth first among products without closed loops."""
    gens = [(0, generator_diagram("s0", n))] + [(i, generator_diagram("U", n, i)) for i in range(1, n)]
    start = identity_diagram(n)
    words = {start: ()}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for label, g in gens:
            out = compose(d, g)
            if out.undotted_loops or out.dotted_loop_seen:
                continue
            if out.result not in words:
                words[out.result] = words[d] + (label,)
                queue.append(out.result)
    return words


@lru_cache(maxsize=None)
def diagram_operator(d: DottedDiagram) -> RepOperator:
    n = d.n
    words = diagram_words(n)
    if d not in words:
        raise InvalidArgument(f"{d.to_text()} is not reachable from the generators")
    op = RepOperator.identity(n)
    for label in words[d]:
        g = generator_operator("s0", n) if label == 0 else generator_operator("U", n, label)
        op = op @ g
    return op


def element_to_operator(a: TLElement, allow_large: bool = False) -> RepOperator:
    """``rho(a)``; series coefficients are refused since the action is exact.

    >>> from .tl_algebra import generator
    >>> u = element_to_operator(generator("U", 2, 1))
    >>> (u @ generator_operator("s0", 2) @ u).is_zero()
    True
    """
    if a.ring == SERIES:
        raise UnsupportedRing("operators need exact coefficients; convert the element first")
    if a.bottom != a.top:
        raise InvalidArgument("only square diagrams act on V^n")
    n = a.n
    _check_n(n, allow_large)
    total = RepOperator.zero(n)
    for d, c in a.terms.items():
        total = total + diagram_operator(d).scale(c)
    return total


# coideal decomposition

def v_vector(k: int) -> RepVector:
    """``x + q^k y``."""
    return RepVector(1, [1, LaurentPolynomial.monomial(k)])


def w_vector(k: int) -> RepVector:
    """``x - q^-k y``."""
    return RepVector(1, [1, LaurentPolynomial.monomial(-k, -1)])


def eigenvector(eps: Sequence[int]) -> tuple[RepVector, int]:
    """The tensor of ``v``/``w`` factors labelled by ``eps`` and its eigenvalue index ``m``."""
    eps = tuple(eps)
    if not eps or any(e not in (1, -1) for e in eps):
        raise InvalidArgument("eps must be a nonempty sequence of +1/-1")
    vec = None
    m = 0
    for e in eps:
        factor = v_vector(m) if e == 1 else w_vector(m)
        vec = factor if vec is None else vec.tensor(factor)
        m += e
    return vec, m


def factor_labels(eps: Sequence[int]) -> list[str]:
    m = 0
    out = []
    for e in eps:
        out.append(f"{'v' if e == 1 else 'w'}{m}")
        m += e
    return out


@dataclass
class EigenSpace:
    index: int
    multiplicity: int
    labels: list = field(default_factory=list)
    vectors: list = field(default_factory=list)

    @property
    def eigenvalue(self) -> LaurentPolynomial:
        return quantum_integer(self.index)

    def to_json(self) -> dict:
        return {
            "eigenvalue": f"[{self.index}]",
            "value": str(self.eigenvalue),
            "multiplicity": self.multiplicity,
            "labels": [list(e) for e in self.labels],
            "factors": [factor_labels(e) for e in self.labels],
        }


@dataclass
class EigenReport:
    n: int
    spaces: list
    verified: bool
    independent: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "verified": self.verified,
            "independent": self.independent,
            "spaces": [s.to_json() for s in self.spaces],
        }

    def to_text(self) -> str:
        lines = [f"[{s.index}] x{s.multiplicity}: " + ", ".join("(x)".join(factor_labels(e)) for e in s.labels) for s in self.spaces]
        lines.append(f"eigenvectors verified: {self.verified}; independent: {self.independent}")
        return "\n".join(lines)


def eigen_decomposition(n: int, allow_large: bool = False) -> EigenReport:
    """Eigenvectors of ``B`` on ``V^n`` with eigenvalues ``[n - 2k]``.

    Every vector is checked against ``B`` exactly; independence of all
    ``2^n`` vectors is certified by a nonzero specialization.
    """
    _check_n(n, allow_large)
    B = generator_operator("B", n)
    spaces = {}
    verified = True
    vectors = []
    for eps in product((1, -1), repeat=n):
        vec, m = eigenvector(eps)
        verified &= B.apply(vec) == vec.scale(quantum_integer(m))
        space = spaces.setdefault(m, EigenSpace(m, 0))
        space.multiplicity += 1
        space.labels.append(eps)
        space.vectors.append(vec)
        vectors.append(vec)
    independent = _rank([v.specialize(Fraction(2)) for v in vectors]) == 2**n
    ordered = [spaces[m] for m in sorted(spaces, reverse=True)]
    return EigenReport(n, ordered, verified, independent)


def expected_multiplicities(n: int) -> dict:
    return {n - 2 * k: comb(n, k) for k in range(n + 1)}


# projector images

@dataclass
class ImageCheck:
    kind: str
    n: int
    idempotent: bool
    rank: int | None
    expected_rank: int
    fixes_stated_vectors: bool
    labels: list

    @property
    def passed(self) -> bool:
        return self.idempotent and self.rank == self.expected_rank and self.fixes_stated_vectors

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "idempotent": self.idempotent,
            "rank": self.rank,
            "expected_rank": self.expected_rank,
            "image": [" (x) ".join(factor_labels(e)) for e in self.labels],
            "passed": self.passed,
        }


def projector_image_check(kind: str, n: int, eps: Sequence[int] | None = None) -> ImageCheck:
    """Check that ``rho(p)`` is an idempotent whose image is spanned by the
    stated tensors; the rank is the trace, which must be an integer."""
    from .jones_wenzl import higher_projector, jw_type_b, jw_type_d

    _check_n(n)
    kind = kind.lower()
    if kind == "b+":
        p, labels = jw_type_b(n, 1), [(1,) * n]
    elif kind == "b-":
        p, labels = jw_type_b(n, -1), [(-1,) * n]
    elif kind == "d":
        p, labels = jw_type_d(n), [(1,) * n, (-1,) * n]
    elif kind == "e":
        if eps is None or len(eps) != n:
            raise InvalidArgument(f"kind e needs an epsilon sequence of length {n}")
        p, labels = higher_projector(tuple(eps)), [tuple(eps)]
    else:
        raise InvalidArgument("kind must be b+, b-, d or e")
    op = element_to_operator(p)
    idem = (op @ op) == op
    rank = _integer_or_none(op.trace())
    fixes = all(op.apply(eigenvector(e)[0]) == eigenvector(e)[0] for e in labels)
    return ImageCheck(kind, n, idem, rank, len(labels), fixes, labels)


def _integer_or_none(r: RationalFunction):
    if r.is_zero():
        return 0
    if r.is_laurent() and r.num.valuation == 0 and r.num.degree == 0:
        return r.num.constant()
    return None


# Schur-Weyl checks

def schur_weyl_rank(n: int, points: Iterable = (Fraction(2), Fraction(3))) -> int:
    """Rank of ``{rho(d)}`` over the diagram basis.

    Specialization can only lower the rank, so the largest value found is a
    certified lower bound for the generic rank.
    """
    _check_n(n)
    ops = [diagram_operator(d) for d in enumerate_basis(n, "B")]
    best = 0
    for q in points:
        rows = [sum(op.specialize(q), []) for op in ops]
        best = max(best, _rank(rows))
        if best == len(ops):
            break
    return best


def commutant_dimension(n: int, q=Fraction(2)) -> int:
    """``dim {X : XB = BX}`` at the value ``q``; an upper bound for the generic dimension."""
    _check_n(n)
    b = generator_operator("B", n).specialize(q)
    size = 2**n
    m = fmpq_mat(size * size, size * size)
    # row (i, j) of BX - XB, unknown X[k, l] at column k * size + l
    for i in range(size):
        for j in range(size):
            r = i * size + j
            for k in range(size):
                if b[i][k]:
                    c = k * size + j
                    m[r, c] = m[r, c] + fmpq(b[i][k].numerator, b[i][k].denominator)
                if b[k][j]:
                    c = i * size + k
                    m[r, c] = m[r, c] - fmpq(b[k][j].numerator, b[k][j].denominator)
    return size * size - m.rank()


def commutes_with_b(n: int) -> dict:
    """``[rho(d), B] = 0`` for every basis diagram, keyed by the diagram text."""
    B = generator_operator("B", n)
    out = {}
    for d in enumerate_basis(n, "B"):
        op = diagram_operator(d)
        out[d.to_text()] = (op @ B) == (B @ op)
    return out


def relation_checks(n: int) -> dict:
    """The defining relations of TL(B_n) and of the Hecke algebra on ``V^n``."""
    _check_n(n)
    one = RepOperator.identity(n)
    s0 = generator_operator("s0", n)
    U = {i: generator_operator("U", n, i) for i in range(1, n)}
    H = {i: generator_operator("H", n, i) for i in range(1, n)}
    delta = quantum_integer(2)
    out = {"s0^2 = 1": s0 @ s0 == one, "C = q^n": generator_operator("C", n) == one.scale(LaurentPolynomial.monomial(n))}
    for i in range(1, n):
        out[f"U{i}^2 = [2]U{i}"] = U[i] @ U[i] == U[i].scale(delta)
        out[f"H{i} = q^-1 - U{i}"] = H[i] == one.scale(QI) - U[i]
        out[f"H{i}^2 = (q^-1 - q)H{i} + 1"] = H[i] @ H[i] == H[i].scale(QI - Q) + one
        if i >= 2:
            out[f"s0 U{i} = U{i} s0"] = s0 @ U[i] == U[i] @ s0
        for j in range(1, n):
            if abs(i - j) == 1:
                out[f"U{i}U{j}U{i} = U{i}"] = U[i] @ U[j] @ U[i] == U[i]
                if i < j:
                    out[f"H{i}H{j}H{i} = H{j}H{i}H{j}"] = H[i] @ H[j] @ H[i] == H[j] @ H[i] @ H[j]
            elif i < j:
                out[f"U{i}U{j} = U{j}U{i}"] = U[i] @ U[j] == U[j] @ U[i]
    if n >= 2:
        out["U1 s0 U1 = 0"] = (U[1] @ s0 @ U[1]).is_zero()
        out["H0H1H0H1 = H1H0H1H0"] = s0 @ H[1] @ s0 @ H[1] == H[1] @ s0 @ H[1] @ s0
        cup = RepVector.basis(2, "xy") - RepVector.basis(2, "yx").scale(Q)
        out["B kills x(x)y - q y(x)x"] = n != 2 or generator_operator("B", 2).apply(cup).is_zero()
    return out


__all__ = [
    "EigenReport",
    "ImageCheck",
    "RepOperator",
    "RepVector",
    "commutant_dimension",
    "commutes_with_b",
    "eigen_decomposition",
    "eigenvector",
    "element_to_operator",
    "generator_operator",
    "projector_image_check",
    "relation_checks",
    "schur_weyl_rank",
]
