"""The hyperoctahedral group W(B_n) as dotted permutations.

A dotted permutation ``(sigma, eps)`` sends strand ``i`` (bottom) to
``sigma(i)`` (top) and carries ``eps[i]`` dots.  In ``x * y`` the element
``y`` is applied first, and dots on a strand add up mod 2.

>>> x = DottedPermutation((2, 3, 1), (0, 1, 1))
>>> y = DottedPermutation((3, 1, 2), (0, 1, 1))
>>> x * y
DottedPermutation(sigma=(1, 2, 3), eps=(1, 1, 0))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import InvalidArgument


@dataclass(frozen=True, order=True)
class DottedPermutation:
    sigma: tuple
    eps: tuple

    def __post_init__(self):
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(1, n + 1)):
            raise InvalidArgument(f"{self.sigma} is not a permutation of 1..{n}")
        if len(self.eps) != n or any(e not in (0, 1) for e in self.eps):
            raise InvalidArgument("dots must be a 0/1 vector of the same length")

    @property
    def n(self) -> int:
        return len(self.sigma)

    def __mul__(self, other):
        if not isinstance(other, DottedPermutation):
            return NotImplemented
        return multiply_dotted(self, other)

    def inverse(self) -> "DottedPermutation":
        n = self.n
        sigma = [0] * n
        eps = [0] * n
        for i, j in enumerate(self.sigma):
            sigma[j - 1] = i + 1
            eps[j - 1] = self.eps[i]
        return _make(tuple(sigma), tuple(eps))

    def __pow__(self, k: int) -> "DottedPermutation":
        base = self if k >= 0 else self.inverse()
        out = identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    def dot_count(self) -> int:
        return sum(self.eps)

    def is_identity(self) -> bool:
        return self.sigma == tuple(range(1, self.n + 1)) and not any(self.eps)

    def to_json(self) -> dict:
        return {"sigma": list(self.sigma), "dots": list(self.eps)}

    @classmethod
    def from_json(cls, obj: dict) -> "DottedPermutation":
        return cls(tuple(obj["sigma"]), tuple(obj["dots"]))

    def __str__(self) -> str:
        return f"({','.join(map(str, self.sigma))}; {''.join(map(str, self.eps))})"


def _make(sigma: tuple, eps: tuple) -> DottedPermutation:
    # skips validation for internally built values
    obj = object.__new__(DottedPermutation)
    object.__setattr__(obj, "sigma", sigma)
    object.__setattr__(obj, "eps", eps)
    return obj


def multiply_dotted(x: DottedPermutation, y: DottedPermutation) -> DottedPermutation:
    if x.n != y.n:
        raise InvalidArgument(f"sizes differ: {x.n} and {y.n}")
    xs, xe, ys, ye = x.sigma, x.eps, y.sigma, y.eps
    sigma = tuple(xs[j - 1] for j in ys)
    eps = tuple(ye[i] ^ xe[ys[i] - 1] for i in range(len(ys)))
    return _make(sigma, eps)


def identity(n: int) -> DottedPermutation:
    return _make(tuple(range(1, n + 1)), (0,) * n)


def simple_reflection(i: int, n: int) -> DottedPermutation:
    """``s0`` dots strand 1; ``s_i`` swaps strands ``i`` and ``i+1``."""
    if i == 0:
        if n < 1:
            raise InvalidArgument("s0 needs a strand")
        return _make(tuple(range(1, n + 1)), (1,) + (0,) * (n - 1))
    if not 1 <= i <= n - 1:
        raise InvalidArgument(f"s{i} needs 1 <= i <= {n - 1}")
    sigma = list(range(1, n + 1))
    sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
    return _make(tuple(sigma), (0,) * n)


def s0_prime(n: int) -> DottedPermutation:
    """``s0 s1 s0``: the type D generator."""
    s0, s1 = simple_reflection(0, n), simple_reflection(1, n)
    return s0 * s1 * s0


def from_word(word: Iterable[str], n: int) -> DottedPermutation:
    """Multiply out tokens ``s0``, ``s0'``, ``s<i>`` left to right."""
    out = identity(n)
    for tok in word:
        if tok == "s0'":
            g = s0_prime(n)
        elif tok.startswith("s") and tok[1:].isdigit():
            g = simple_reflection(int(tok[1:]), n)
        else:
            raise InvalidArgument(f"unknown generator {tok!r}")
        out = out * g
    return out


def jucys_murphy(i: int, n: int) -> DottedPermutation:
    """``J_1 = s0`` and ``J_i = s_{i-1} J_{i-1} s_{i-1}``; a dot on strand ``i``."""
    if not 1 <= i <= n:
        raise InvalidArgument(f"J_{i} needs 1 <= i <= {n}")
    x = simple_reflection(0, n)
    for k in range(2, i + 1):
        s = simple_reflection(k - 1, n)
        x = s * x * s
    return x


def jucys_murphy_word(i: int) -> list[str]:
    return [f"s{k}" for k in range(i - 1, 0, -1)] + ["s0"] + [f"s{k}" for k in range(1, i)]


def longest_element(family: str, n: int):
    """``(w0, reduced word)`` in type B or D.

    >>> w, word = longest_element("D", 3)
    >>> w.eps, len(word)
    ((0, 1, 1), 6)
    """
    family = family.upper()
    if family == "B":
        if n < 1:
            raise InvalidArgument("need n >= 1")
        word = [tok for i in range(1, n + 1) for tok in jucys_murphy_word(i)]
    elif family == "D":
        if n < 2:
            raise InvalidArgument("type D needs n >= 2")
        word = (["s0'"] + [f"s{i}" for i in range(1, n)]) * (n - 1)
    else:
        raise InvalidArgument(f"family must be B or D, not {family!r}")
    return from_word(word, n), word


def group_elements(n: int, family: str = "B") -> list[DottedPermutation]:
    """All of W(B_n) (or the even-dot subgroup W(D_n)), sorted."""
    out = []
    for sigma in permutations(range(1, n + 1)):
        for eps in product((0, 1), repeat=n):
            if family.upper() == "D" and sum(eps) % 2:
                continue
            out.append(_make(sigma, eps))
    return out


def group_order(n: int, family: str = "B") -> int:
    return 2**n * factorial(n) // (2 if family.upper() == "D" else 1)


# signed permutations

@dataclass(frozen=True)
class SignedPermutation:
    """Images of ``1..n``; ``-i`` maps to minus the image of ``i``."""

    images: tuple

    def __call__(self, k: int) -> int:
        return self.images[k - 1] if k > 0 else -self.images[-k - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return SignedPermutation(tuple(self(other(k)) for k in range(1, len(self.images) + 1)))

    def cycles(self) -> list[tuple]:
        """Nontrivial cycles on ``+-1..+-n``, each starting at its smallest positive entry."""
        n = len(self.images)
        seen = set()
        out = []
        for start in [k for i in range(1, n + 1) for k in (i, -i)]:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "id"


def to_signed_permutation(x: DottedPermutation) -> SignedPermutation:
    """``i -> (-1)^eps[i] sigma(i)``.

    >>> str(to_signed_permutation(simple_reflection(0, 1)))
    '(1,-1)'
    """
    return SignedPermutation(tuple(-s if e else s for s, e in zip(x.sigma, x.eps)))


# bipartitions

@dataclass(frozen=True)
class Bipartition:
    lam: tuple = ()
    mu: tuple = ()

    def __post_init__(self):
        for part in (self.lam, self.mu):
            if any(p <= 0 for p in part) or list(part) != sorted(part, reverse=True):
                raise InvalidArgument(f"{part} is not a partition")

    @property
    def size(self) -> int:
        return sum(self.lam) + sum(self.mu)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu)}

    @classmethod
    def from_json(cls, obj: dict) -> "Bipartition":
        return cls(tuple(obj["lambda"]), tuple(obj["mu"]))

    def __str__(self) -> str:
        def part(p):
            return "(" + ",".join(map(str, p)) + ")"

        return f"({part(self.lam)},{part(self.mu)})"


def bipartition(lam: Sequence[int] = (), mu: Sequence[int] = ()) -> Bipartition:
    return Bipartition(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def partitions(k: int) -> tuple:
    """Partitions of ``k`` in lexicographically decreasing order."""
    if k == 0:
        return ((),)
    out = []

    def rec(rest, cap, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(rest, cap), 0, -1):
            rec(rest - part, part, prefix + [part])

    rec(k, k, [])
    return tuple(out)


def bipartitions_of(n: int) -> list[Bipartition]:
    """Ordered by ``|lambda|`` descending, then ``lambda``, then ``mu``,
    each lexicographically decreasing.

    >>> len(bipartitions_of(3)), len(bipartitions_of(10))
    (10, 481)
    """
    if n < 0:
        raise InvalidArgument("n must be nonnegative")
    return [Bipartition(lam, mu) for k in range(n, -1, -1) for lam in partitions(k) for mu in partitions(n - k)]


def conjugacy_bipartition(x: DottedPermutation) -> Bipartition:
    """Class label: paired cycles give parts of ``lambda``, self-paired
    cycles of length ``2s`` give parts ``s`` of ``mu``."""
    w = to_signed_permutation(x)
    n = x.n
    seen = set()
    lam, mu = [], []
    for i in range(1, n + 1):
        if i in seen:
            continue
        cyc = [i]
        k = w(i)
        while k != i:
            cyc.append(k)
            k = w(k)
        seen.update(abs(c) for c in cyc)
        if -i in cyc:
            mu.append(len(cyc) // 2)
        else:
            lam.append(len(cyc))
    return Bipartition(tuple(sorted(lam, reverse=True)), tuple(sorted(mu, reverse=True)))


def conjugacy_classes(n: int) -> list[frozenset]:
    """Orbits of W(B_n) acting on itself by conjugation (small n only)."""
    elements = group_elements(n)
    gens = [simple_reflection(i, n) for i in range(n)]
    seen = set()
    classes = []
    for x in elements:
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in gens:
                z = g * y * g  # generators are involutions
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        seen |= orbit
        classes.append(frozenset(orbit))
    return classes


# dimensions

def hook_lengths(part: Sequence[int]) -> list[int]:
    conj = [sum(1 for p in part if p > j) for j in range(part[0])] if part else []
    return [part[i] - j + conj[j] - i - 1 for i in range(len(part)) for j in range(part[i])]


def specht_dimension_hook(bp: Bipartition) -> int:
    """``n! / prod(hook lengths over both diagrams)``.

    >>> specht_dimension_hook(bipartition((5, 4, 3)))
    2112
    """
    hooks = hook_lengths(bp.lam) + hook_lengths(bp.mu)
    return factorial(bp.size) // prod(hooks)


def branching_neighbors(bp: Bipartition, direction: str = "down") -> list[Bipartition]:
    """Bipartitions one box away; changes to ``lambda`` come first, by row.

    >>> [str(b) for b in branching_neighbors(bipartition((1,)), "up")]
    ['((2),())', '((1,1),())', '((1),(1))']
    """
    if direction not in ("up", "down"):
        raise InvalidArgument("direction must be up or down")
    out = []
    for side in (0, 1):
        part = list(bp.lam if side == 0 else bp.mu)
        variants = []
        if direction == "down":
            for r in range(len(part)):
                if r == len(part) - 1 or part[r] > part[r + 1]:
                    new = part.copy()
                    new[r] -= 1
                    variants.append(tuple(p for p in new if p))
        else:
            for r in range(len(part) + 1):
                if r == len(part):
                    variants.append(tuple(part + [1]))
                elif r == 0 or part[r - 1] > part[r]:
                    new = part.copy()
                    new[r] += 1
                    variants.append(tuple(new))
        for v in variants:
            out.append(Bipartition(v, bp.mu) if side == 0 else Bipartition(bp.lam, v))
    return out


@lru_cache(maxsize=None)
def specht_dimension_paths(bp: Bipartition) -> int:
    """Number of monotone paths from ``(empty, empty)`` in the branching graph."""
    if bp.size == 0:
        return 1
    return sum(specht_dimension_paths(b) for b in branching_neighbors(bp, "down"))


def specht_dimension(bp: Bipartition) -> int:
    """Hook-length dimension, cross-checked against the path count."""
    a, b = specht_dimension_hook(bp), specht_dimension_paths(bp)
    if a != b:
        raise ArithmeticError(f"hook length {a} and path count {b} disagree for {bp}")
    return a


def class_counts(n: int) -> dict:
    """Sizes of the conjugacy classes keyed by bipartition."""
    counts: dict = {}
    for x in group_elements(n):
        bp = conjugacy_bipartition(x)
        counts[bp] = counts.get(bp, 0) + 1
    return counts
