"""Jones-Wenzl projectors of types A, B and D, and the higher projectors.

All recursions run over rational functions and are memoized; other rings
are reached by conversion at the end, which fails with
:class:`UnsupportedRing` when a coefficient does not fit.

>>> str(jw_type_d(2).coefficient(generator_diagram("U", 2, 1)))
'-q/(q^2 + 1)'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from flint import fmpq, fmpq_mat

from .coefficients import RATFUNC, SERIES, RationalFunction, as_ratfunc, q_power_sum, quantum_integer
from .diagrams import cup_diagram, enumerate_basis, generator_diagram
from .errors import InvalidArgument, NotQuasiIdempotent
from .tl_algebra import TLElement, from_diagram, generator, one, zero


def _ratio(a, b) -> RationalFunction:
    return RationalFunction(a, b)


def _finish(x: TLElement, ring: str, precision: int | None) -> TLElement:
    if ring == RATFUNC:
        return x
    if ring == SERIES:
        if precision is None:
            raise InvalidArgument("the series ring needs a precision")
        return x.to_series(precision)
    return x.to_ring(ring)


def pad(x: TLElement, n: int) -> TLElement:
    """Add strands on the right until ``x`` lives on ``n`` strands."""
    if x.n > n:
        raise InvalidArgument(f"cannot pad a {x.n}-strand element to {n} strands")
    return x.tensor_right(n - x.n) if n > x.n else x


def _step(x: TLElement, i: int, c) -> TLElement:
    """``x - c * x U_i x`` with ``x`` padded by one strand."""
    x = pad(x, x.n + 1)
    u = generator("U", x.n, i, RATFUNC)
    return x - x * u * x * c


def _b_coefficient(n: int) -> RationalFunction:
    # (q^(n-1) + q^-(n-1)) / (q^n + q^-n), which is 2/[2] at n = 1
    return _ratio(q_power_sum(n - 1), q_power_sum(n))


@lru_cache(maxsize=None)
def _type_a(n: int) -> TLElement:
    if n == 1:
        return one(1, RATFUNC)
    k = n - 1
    return _step(_type_a(n - 1), k, _ratio(quantum_integer(k), quantum_integer(k + 1)))


@lru_cache(maxsize=None)
def _type_b(n: int, sign: int) -> TLElement:
    if n == 1:
        return (one(1, RATFUNC) + generator("s0", 1, None, RATFUNC) * sign) * Fraction(1, 2)
    return _step(_type_b(n - 1, sign), n - 1, _b_coefficient(n - 1))


@lru_cache(maxsize=None)
def _type_d(n: int) -> TLElement:
    if n == 1:
        return one(1, RATFUNC)
    if n == 2:
        u = generator("U", 2, 1, RATFUNC) + generator("U0", 2, None, RATFUNC)
        return one(2, RATFUNC) - u * _ratio(1, quantum_integer(2))
    return _step(_type_d(n - 1), n - 1, _b_coefficient(n - 1))


def jw_type_a(n: int, ring: str = RATFUNC, precision: int | None = None) -> TLElement:
    """The projector killing ``U_1..U_{n-1}`` on ``n`` strands.

    >>> print(jw_type_a(2))
    [-q/(q^2 + 1)] (b0-b1) (t0-t1)
    [1] (b0-t0) (b1-t1)
    """
    if n < 1:
        raise InvalidArgument("need n >= 1")
    return _finish(_type_a(n), ring, precision)


def _sign(sign) -> int:
    if sign in (1, "+", "plus"):
        return 1
    if sign in (-1, "-", "minus"):
        return -1
    raise InvalidArgument(f"sign must be + or -, not {sign!r}")


def jw_type_b(n: int, sign=1, ring: str = RATFUNC, precision: int | None = None) -> TLElement:
    """``b_{n,+}`` or ``b_{n,-}``; the halves rule out integer series."""
    if n < 1:
        raise InvalidArgument("need n >= 1")
    return _finish(_type_b(n, _sign(sign)), ring, precision)


def jw_type_d(n: int, ring: str = RATFUNC, precision: int | None = None) -> TLElement:
    if n < 1:
        raise InvalidArgument("need n >= 1")
    return _finish(_type_d(n), ring, precision)


# higher projectors

def _check_eps(eps: Sequence[int]) -> tuple[int, ...]:
    eps = tuple(int(e) for e in eps)
    if not eps or any(e not in (1, -1) for e in eps):
        raise InvalidArgument("an epsilon sequence is a nonempty sequence of +1/-1")
    return eps


@lru_cache(maxsize=None)
def t_element(eps: tuple[int, ...]) -> TLElement:
    """The map from ``|sum eps|`` strands up to ``len(eps)`` strands.

    Each new entry either widens the current box (same sign as the running
    sum, or a zero sum) or bends the new strand back into the last one.
    """
    t = one(0, RATFUNC)
    s = 0
    for e in eps:
        k = abs(s)
        padded = t.tensor_right(1)
        if s == 0 or (s > 0) == (e > 0):
            s += e
            box = jw_type_b(k + 1, 1 if s > 0 else -1)
            t = padded * box
        else:
            s += e
            t = padded * from_diagram(cup_diagram(k + 1, k), 1, RATFUNC)
    return t


@lru_cache(maxsize=None)
def _quasi(eps: tuple[int, ...]):
    t = t_element(eps)
    qe = t * t.mirror()
    c = (qe * qe).scalar_multiple_of(qe)
    if c is None or not c:
        raise NotQuasiIdempotent(f"q_eps for {eps} is not quasi-idempotent")
    return qe, as_ratfunc(c)


def normalization_scalar(eps: Sequence[int]) -> RationalFunction:
    """``n_eps`` with ``q_eps^2 = n_eps q_eps``."""
    return _quasi(_check_eps(eps))[1]


def higher_projector(eps: Sequence[int], kind: str = "B", ring: str = RATFUNC, precision: int | None = None) -> TLElement:
    """``e_eps`` (kind B) or ``f_eps = e_eps + e_-eps`` (kind D).

    >>> e = higher_projector((1, -1))
    >>> len(e), e * e == e
    (4, True)
    """
    eps = _check_eps(eps)
    kind = kind.upper()
    if kind == "B":
        qe, c = _quasi(eps)
        return _finish(qe / c, ring, precision)
    if kind == "D":
        neg = tuple(-e for e in eps)
        return _finish(higher_projector(eps) + higher_projector(neg), ring, precision)
    raise InvalidArgument(f"kind must be B or D, not {kind!r}")


def epsilon_sequences(n: int) -> list[tuple[int, ...]]:
    return [tuple(p) for p in product((1, -1), repeat=n)]


# characterizations

KINDS = ("a", "b+", "b-", "d")


@dataclass
class CharacterizationReport:
    kind: str
    n: int
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.n, "passed": self.passed, "checks": dict(self.checks)}


def killed_generators(n: int, kind: str) -> list[TLElement]:
    gens = [generator("U", n, i, RATFUNC) for i in range(1, n)]
    if kind == "d" and n >= 2:
        gens.insert(0, generator("U0", n, None, RATFUNC))
    return gens


def verify_characterization(x: TLElement, kind: str) -> CharacterizationReport:
    """Check idempotency, generator killing and the ``s0`` eigenrelation."""
    kind = kind.lower()
    if kind not in KINDS:
        raise InvalidArgument(f"kind must be one of {', '.join(KINDS)}")
    n = x.n
    report = CharacterizationReport(kind, n)
    report.checks["idempotent"] = not x.is_zero() and x * x == x
    names = (["U0"] if kind == "d" and n >= 2 else []) + [f"U{i}" for i in range(1, n)]
    for name, u in zip(names, killed_generators(n, kind)):
        report.checks[f"{name} x = 0"] = (u * x).is_zero()
        report.checks[f"x {name} = 0"] = (x * u).is_zero()
    if kind in ("b+", "b-"):
        sign = 1 if kind == "b+" else -1
        s0 = generator("s0", n, None, RATFUNC)
        report.checks[f"s0 x = {'+' if sign > 0 else '-'}x"] = s0 * x == x * sign
        report.checks[f"x s0 = {'+' if sign > 0 else '-'}x"] = x * s0 == x * sign
    return report


def _specialize(c, q: Fraction) -> fmpq:
    v = as_ratfunc(c).evaluate(q)
    return fmpq(v.numerator, v.denominator)


def _killing_matrix(n: int, kind: str, q: Fraction):
    kind = kind.lower()
    family = {"a": "A", "d": "D"}.get(kind, "B")
    basis = enumerate_basis(n, family)
    gens = killed_generators(n, kind)
    if kind in ("b+", "b-"):
        sign = 1 if kind == "b+" else -1
        s0 = generator("s0", n, None, RATFUNC)
        gens = gens + [s0 - one(n, RATFUNC) * sign]
    full = enumerate_basis(n, "B")
    index = {d: i for i, d in enumerate(full)}
    m = fmpq_mat(2 * len(gens) * len(full), len(basis))
    for col, d in enumerate(basis):
        x = from_diagram(d, 1, RATFUNC)
        for g_idx, g in enumerate(gens):
            for side, prod_ in enumerate((g * x, x * g)):
                base = (2 * g_idx + side) * len(full)
                for dd, c in prod_.terms.items():
                    m[base + index[dd], col] = _specialize(c, q)
    return basis, m


def killing_space_dimension(n: int, kind: str = "d", q: Fraction = Fraction(2)) -> int:
    """Dimension, at the value ``q``, of the elements killing the generators.

    The ambient space is TL(D_n) for kind ``d``, TL(A_{n-1}) for ``a`` and
    the ``s0``-eigenspace of TL(B_n) for ``b+``/``b-``.  Specializing can only
    shrink the rank, so a value of 1 bounds the generic dimension by 1.
    """
    basis, m = _killing_matrix(n, kind, q)
    return len(basis) - m.rank()


def killing_space_basis(n: int, kind: str = "d", q: Fraction = Fraction(2)) -> list[dict]:
    """A basis of the killing space at ``q``, each vector as ``{diagram: Fraction}``."""
    basis, m = _killing_matrix(n, kind, q)
    rref, rank = m.rref()
    pivots = []
    for r in range(rank):
        for c in range(len(basis)):
            if rref[r, c] != 0:
                pivots.append(c)
                break
    out = []
    for free in (c for c in range(len(basis)) if c not in pivots):
        vec = {basis[free]: Fraction(1)}
        for r, pc in enumerate(pivots):
            v = rref[r, free]
            if v != 0:
                vec[basis[pc]] = -Fraction(int(v.p), int(v.q))
        out.append(vec)
    return out


def _evaluate(x: TLElement, q: Fraction) -> dict:
    return {d: as_ratfunc(c).evaluate(q) for d, c in x.terms.items() if as_ratfunc(c).evaluate(q)}


def unique_idempotent_at(n: int, kind: str = "d", q: Fraction = Fraction(2)):
    """The only idempotent in a one-dimensional killing space at ``q``.

    A spanning vector ``v`` satisfies ``v^2 = c v``; idempotents ``t v``
    need ``t^2 c = t``, so ``t = 1/c`` is the only nonzero choice.  Returns
    None when the space is not one-dimensional or ``c`` vanishes.
    """
    vecs = killing_space_basis(n, kind, q)
    if len(vecs) != 1:
        return None
    v = vecs[0]
    x = TLElement(n, list(v.items()), RATFUNC)
    square = _evaluate(x * x, q)
    d0 = next(iter(v))
    c = square.get(d0, Fraction(0)) / v[d0]
    if c == 0 or any(square.get(d, 0) != c * a for d, a in v.items()) or set(square) - set(v):
        return None
    return {d: a / c for d, a in v.items()}


def specialize_element(x: TLElement, q: Fraction) -> dict:
    return _evaluate(x, q)


def uniqueness_certificate(n: int, kind: str = "d", q: Fraction = Fraction(2)) -> bool:
    """True when the killing space is one-dimensional at ``q``.

    The projector lies in that space, so any idempotent there is ``c`` times
    it with ``c^2 = c``, hence equal to it.
    """
    return killing_space_dimension(n, kind, q) == 1


def projector(kind: str, n: int, ring: str = RATFUNC, precision: int | None = None) -> TLElement:
    kind = kind.lower()
    if kind == "a":
        return jw_type_a(n, ring, precision)
    if kind in ("b+", "b-"):
        return jw_type_b(n, 1 if kind == "b+" else -1, ring, precision)
    if kind == "d":
        return jw_type_d(n, ring, precision)
    raise InvalidArgument(f"kind must be one of {', '.join(KINDS)}")


def resolution_of_identity(n: int) -> TLElement:
    """``sum_eps e_eps``; equals the identity."""
    total = zero(n, RATFUNC)
    for eps in epsilon_sequences(n):
        total = total + higher_projector(eps)
    return total


__all__ = [
    "CharacterizationReport",
    "epsilon_sequences",
    "higher_projector",
    "jw_type_a",
    "jw_type_b",
    "jw_type_d",
    "killing_space_basis",
    "killing_space_dimension",
    "normalization_scalar",
    "pad",
    "projector",
    "resolution_of_identity",
    "specialize_element",
    "t_element",
    "unique_idempotent_at",
    "uniqueness_certificate",
    "verify_characterization",
]
