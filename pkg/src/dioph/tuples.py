"""Diophantine tuples with a shift.

A D(k) set is a set of distinct positive integers such that the product of
any two elements plus k is a perfect square.  This module verifies the
property, classifies triples as regular or not, reduces a pair condition to
a generalized Pell equation, and evaluates residue obstructions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_perfect_square, legendre

__all__ = [
    "DiophTuple",
    "PairCheck",
    "VerificationReport",
    "PairReduction",
    "ConditionWitness",
    "verify",
    "is_regular",
    "reduce_pair",
    "residue_obstruction",
    "mod4_quadruple_obstruction",
]


@dataclass(frozen=True)
class DiophTuple:
    """Distinct positive integers together with the shift k (k != 0).

    Elements are stored sorted ascending; at least two are required.
    """

    elements: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        elements = tuple(sorted(self.elements))
        if len(elements) < 2:
            raise ValueError("a tuple needs at least two elements")
        if elements[0] < 1:
            raise ValueError("elements must be positive")
        if len(set(elements)) != len(elements):
            raise ValueError("elements must be distinct")
        if self.k == 0:
            raise ValueError("the shift k must be nonzero")
        object.__setattr__(self, "elements", elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        inner = ", ".join(str(e) for e in self.elements)
        return f"{{{inner}}} with k={self.k}"


@dataclass(frozen=True)
class PairCheck:
    """One pairwise condition a*b + k, with its square root if it has one."""

    a: int
    b: int
    product: int
    shifted: int
    root: int | None

    @property
    def ok(self) -> bool:
        return self.root is not None


@dataclass(frozen=True)
class VerificationReport:
    tuple: DiophTuple
    pairs: tuple[PairCheck, ...]

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.pairs)

    def failing_pairs(self) -> list[PairCheck]:
        return [p for p in self.pairs if not p.ok]


def verify(t: DiophTuple) -> VerificationReport:
    """Check every pairwise condition of t exactly."""
    checks = []
    els = t.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            a, b = els[i], els[j]
            product = a * b
            shifted = product + t.k
            checks.append(PairCheck(a, b, product, shifted, is_perfect_square(shifted)))
    return VerificationReport(t, tuple(checks))


def is_regular(t: DiophTuple) -> bool:
    """Whether the triple satisfies (c - b - a)^2 = 4*(a*b + k).

    The condition is symmetric in the three elements (expanding gives
    a^2 + b^2 + c^2 - 2ab - 2bc - 2ca = 4k), so the sorted order used here
    loses nothing.  Raises ValueError for sizes other than 3.
    """
    if t.size != 3:
        raise ValueError(f"regularity is defined for triples, got size {t.size}")
    a, b, c = t.elements
    return (c - b - a) ** 2 == 4 * (a * b + t.k)


@dataclass(frozen=True)
class ConditionWitness:
    """element * m + k = root**2."""

    element: int
    m: int
    root: int


@dataclass(frozen=True)
class PairReduction:
    """The Pell form of the two conditions a*m + k = x^2, b*m + k = y^2.

    Eliminating m gives b*x^2 - a*y^2 = k*(b - a); multiplying by b and
    substituting X = b*x turns it into X^2 - D*Y^2 = N with D = a*b and
    N = k*b*(b - a).  X carries b times the square root of a*m + k and Y
    carries the square root of b*m + k.
    """

    a: int
    b: int
    k: int
    D: int
    N: int
    x_role: str = "b * sqrt(a*m + k)"
    y_role: str = "sqrt(b*m + k)"

    def witness_xy(self, root_a: int, root_b: int) -> tuple[int, int]:
        """Map the square roots of (a*m + k, b*m + k) to a solution (X, Y)."""
        return self.b * root_a, root_b

    def recover_m(self, X: int, Y: int) -> int | None:
        """The m behind a solution (X, Y), or None when the solution is spurious.

        Spurious means X is not divisible by b, or (x^2 - k) is not divisible
        by a, or the recovered m fails the b-condition; genuine solutions of
        the reduced equation produced by an integer m always pass.
        """
        if X % self.b:
            return None
        x = X // self.b
        num = x * x - self.k
        if num % self.a:
            return None
        m = num // self.a
        if self.b * m + self.k != Y * Y:
            return None
        return m


def reduce_pair(a: int, b: int, k: int) -> PairReduction:
    """Reduce the pair of conditions for elements a < b and shift k."""
    if not 0 < a < b:
        raise ValueError(f"need 0 < a < b, got a={a}, b={b}")
    if k == 0:
        raise ValueError("the shift k must be nonzero")
    return PairReduction(a, b, k, a * b, k * b * (b - a))


def residue_obstruction(k: int, p: int) -> bool:
    """Whether no element of any D(k) set can be divisible by the odd prime p.

    True exactly when (k/p) = -1: then t*m + k with p | t is a non-residue
    mod p, so it is never a perfect square.
    """
    return legendre(k, p) == -1


def mod4_quadruple_obstruction(k: int) -> bool:
    """Whether k = 2 (mod 4), which rules out any D(k) quadruple.

    Squares are 0 or 1 mod 4, so the four pairwise conditions cannot all be
    met; every D(k) triple with such k is non-extendable a priori.
    """
    return k % 4 == 2
