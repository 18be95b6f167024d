"""Pell equations x^2 - D*y^2 = N.

Continued-fraction expansion of sqrt(D), the fundamental solution of the unit
equation (N = 1), the recurrence-generated unit sequence, and the complete
set of solution classes of the generalized equation for arbitrary N != 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .arith import is_perfect_square, isqrt

__all__ = [
    "CFExpansion",
    "PellSolution",
    "PellProblem",
    "PellClass",
    "sqrt_cf",
    "fundamental_solution",
    "unit_sequence",
    "solve_general",
]


@dataclass(frozen=True)
class CFExpansion:
    """Continued fraction of sqrt(D): [a0; period repeated forever]."""

    a0: int
    period: tuple[int, ...]

    def terms(self, count: int) -> Iterator[int]:
        """The first `count` partial quotients a0, a1, a2, ..."""
        for i in range(count):
            if i == 0:
                yield self.a0
            else:
                yield self.period[(i - 1) % len(self.period)]


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int


@dataclass(frozen=True)
class PellProblem:
    """x^2 - D*y^2 = N with D >= 2 non-square and N nonzero."""

    D: int
    N: int = 1

    def __post_init__(self) -> None:
        _require_nonsquare(self.D)
        if self.N == 0:
            raise ValueError("N must be nonzero")


def _require_nonsquare(D: int) -> None:
    if D < 2 or is_perfect_square(D) is not None:
        raise ValueError(f"D must be a non-square integer >= 2, got {D}")


def sqrt_cf(D: int) -> CFExpansion:
    """Periodic continued fraction of sqrt(D).

    Uses the classical recurrence on (m, d, a); the period ends at the first
    partial quotient equal to 2*a0.
    """
    _require_nonsquare(D)
    a0 = isqrt(D)
    m, d = 0, 1
    a = a0
    period = []
    while True:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        period.append(a)
        if a == 2 * a0:
            return CFExpansion(a0, tuple(period))


def fundamental_solution(D: int) -> PellSolution:
    """Minimal solution of x^2 - D*y^2 = 1 with y >= 1, from the convergents."""
    cf = sqrt_cf(D)
    p2, p1 = 0, 1
    q2, q1 = 1, 0
    # the fundamental solution appears within the first two periods
    for a in cf.terms(2 * len(cf.period) + 2):
        p = a * p1 + p2
        q = a * q1 + q2
        if q > 0 and p * p - D * q * q == 1:
            return PellSolution(p, q)
        p2, p1 = p1, p
        q2, q1 = q1, q
    raise RuntimeError(f"no fundamental solution found for D={D}")


def unit_sequence(D: int, count: int) -> list[PellSolution]:
    """The first `count` solutions of x^2 - D*y^2 = 1, starting at (1, 0).

    Successive solutions obey x[n+1] = 2*x1*x[n] - x[n-1] (same for y) where
    (x1, y1) is the fundamental solution.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    sols = [PellSolution(1, 0)]
    if count == 1:
        return sols
    fund = fundamental_solution(D)
    sols.append(fund)
    c = 2 * fund.x
    while len(sols) < count:
        a, b = sols[-1], sols[-2]
        nxt = PellSolution(c * a.x - b.x, c * a.y - b.y)
        if nxt.x * nxt.x - D * nxt.y * nxt.y != 1:
            raise RuntimeError("unit recurrence left the solution set")
        sols.append(nxt)
    return sols


@dataclass(frozen=True)
class PellClass:
    """One class of solutions of x^2 - D*y^2 = N.

    The class consists of +/- rep * unit**n for n in Z, where rep is the
    stored representative: x_sign * base.x + base.y * sqrt(D).  base holds
    the magnitudes (base.x, base.y >= 0); x_sign records the sign the
    representative's x coordinate carries.
    """

    problem: PellProblem
    base: PellSolution
    x_sign: int
    unit: PellSolution

    def __post_init__(self) -> None:
        D, N = self.problem.D, self.problem.N
        if self.x_sign not in (-1, 1):
            raise ValueError("x_sign must be +1 or -1")
        if self.base.x < 0 or self.base.y < 0:
            raise ValueError("base stores magnitudes; coordinates must be >= 0")
        if self.base.x * self.base.x - D * self.base.y * self.base.y != N:
            raise ValueError("base does not satisfy the defining equation")
        if self.unit.x * self.unit.x - D * self.unit.y * self.unit.y != 1:
            raise ValueError("unit does not satisfy the unit equation")

    def members(self, steps: int) -> list[tuple[int, int]]:
        """Signed members rep * unit**n for n in [-steps, steps], in n order."""
        if steps < 0:
            raise ValueError("steps must be >= 0")
        D = self.problem.D
        x1, y1 = self.unit.x, self.unit.y
        u0, v0 = self.x_sign * self.base.x, self.base.y
        forward = []
        u, v = u0, v0
        for _ in range(steps):
            u, v = u * x1 + v * y1 * D, u * y1 + v * x1
            forward.append((u, v))
        backward = []
        u, v = u0, v0
        for _ in range(steps):
            u, v = u * x1 - v * y1 * D, v * x1 - u * y1
            backward.append((u, v))
        backward.reverse()
        return backward + [(u0, v0)] + forward

    def nonnegative(self, max_y: int) -> list[PellSolution]:
        """All solutions with x >= 0 and 0 <= y <= max_y lying in this class.

        A member (u, v) with both coordinates <= 0 contributes its mirror
        (-u, -v), which belongs to the same class.  The walk length is sized
        so that every member inside the requested window is reached: each
        step scales one real embedding of the representative by the unit
        (> 2), so bit lengths bound the escape time.
        """
        if max_y < 0:
            raise ValueError("max_y must be >= 0")
        D, N = self.problem.D, self.problem.N
        d1 = isqrt(D) + 1
        window = isqrt(abs(N) + D * max_y * max_y) + (max_y + 1) * d1
        reach = self.base.x + (self.base.y + 1) * d1
        steps = (window * reach // max(abs(N), 1)).bit_length() + 4
        found = set()
        for u, v in self.members(steps):
            if u >= 0 and 0 <= v <= max_y:
                found.add((u, v))
            if u <= 0 and 0 <= -v <= max_y:
                found.add((-u, -v))
        return [PellSolution(x, y) for x, y in sorted(found)]


def solve_general(problem: PellProblem, class_bound: int = 10**6) -> list[PellClass]:
    """All solution classes of x^2 - D*y^2 = N.

    Base representatives are found by scanning 0 <= y <= Y, where Y is the
    classical bound sqrt(|N|*(x1+1)/(2*D)) derived from the fundamental unit
    (x1, y1); every class has a representative in that range.  The scan is
    additionally capped at `class_bound` as a safety net against gigantic
    fundamental units; classes whose representatives lie beyond the cap only
    contain solutions with y > class_bound.
    """
    if class_bound < 1:
        raise ValueError("class_bound must be >= 1")
    D, N = problem.D, problem.N
    unit = fundamental_solution(D)
    y_cap = min(isqrt(abs(N) * (unit.x + 1) // (2 * D)), class_bound)
    reps: list[tuple[int, int]] = []
    value = N  # N + D*y^2, stepped incrementally
    for y in range(y_cap + 1):
        if value >= 0:
            x = is_perfect_square(value)
            if x is not None:
                reps.append((x, y))
                if x and y:
                    reps.append((-x, y))
        value += D * (2 * y + 1)
    # Scanning y upward with +x before -x makes the first representative of
    # each class the canonical one (minimal y, nonnegative x preferred).
    kept: list[tuple[int, int]] = []
    for x, y in reps:
        if not any(_same_class(D, N, x, y, cx, cy) for cx, cy in kept):
            kept.append((x, y))
    return [
        PellClass(problem, PellSolution(abs(x), y), -1 if x < 0 else 1, unit)
        for x, y in kept
    ]


def _same_class(D: int, N: int, a: int, b: int, c: int, d: int) -> bool:
    # (a+b*sqrt(D)) / (c+d*sqrt(D)) is a unit of norm one exactly when N
    # divides both a*c - D*b*d and a*d - b*c.
    n = abs(N)
    return (a * c - D * b * d) % n == 0 and (a * d - b * c) % n == 0
