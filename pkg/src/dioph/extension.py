"""Extension of a D(k) triple by a fourth element.

Two search strategies produce candidate fourth elements m:

* ``pell_extension_search`` reduces the two smallest elements to a
  generalized Pell equation and walks its solution classes, recovering m
  from each class member and testing the remaining condition.
* ``brute_force_search`` tests every m up to a bound directly; it is the
  oracle the Pell route is measured against.

When no complete candidate exists, ``find_certificate`` looks for a modulus
M at which the three allowed residue sets for m have empty intersection: a
finite, machine-checkable proof that no extension exists at all.
``verify_certificate`` re-derives a claimed certificate from scratch and
deliberately shares no residue-set code with the finder.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .arith import _SQUARES_MOD_256, is_perfect_square, isqrt
from .pell import PellProblem, solve_general
from .tuples import ConditionWitness, DiophTuple, reduce_pair, verify

__all__ = [
    "ExtensionCandidate",
    "ModularCertificate",
    "SearchReport",
    "pell_extension_search",
    "brute_force_search",
    "find_certificate",
    "verify_certificate",
    "search_and_certify",
]

VERDICT_EXTENDED = "extended"
VERDICT_BOUNDED = "no_extension_below_bound"
VERDICT_CERTIFIED = "certified_non_extendable"


@dataclass(frozen=True)
class ExtensionCandidate:
    """A positive m satisfying at least the two reduced conditions.

    witnesses holds one entry per satisfied condition, in element order;
    complete means all three conditions hold, i.e. m genuinely extends the
    triple.
    """

    m: int
    witnesses: tuple[ConditionWitness, ...]
    complete: bool


@dataclass(frozen=True)
class ModularCertificate:
    """Proof of non-extendability: mod `modulus` no residue class for m
    makes all three shifted products squares.

    allowed_residues maps each element t to {m mod M : t*m + k is a square
    mod M}; intersection_empty asserts the three sets share nothing.
    """

    modulus: int
    allowed_residues: dict[int, frozenset[int]]
    intersection_empty: bool


@dataclass(frozen=True)
class SearchReport:
    triple: DiophTuple
    strategy: str  # "pell_sequence" | "brute_force"
    bound: int
    candidates: tuple[ExtensionCandidate, ...]
    self_hits: tuple[int, ...] = ()
    certificate: ModularCertificate | None = None

    @property
    def verdict(self) -> str:
        if any(c.complete for c in self.candidates):
            return VERDICT_EXTENDED
        if self.certificate is not None and self.certificate.intersection_empty:
            return VERDICT_CERTIFIED
        return VERDICT_BOUNDED


def _require_verified_triple(t: DiophTuple) -> None:
    if t.size != 3:
        raise ValueError(f"extension search needs a triple, got size {t.size}")
    report = verify(t)
    if not report.ok:
        bad = report.failing_pairs()[0]
        raise ValueError(
            f"{t} is not a D({t.k}) triple: "
            f"{bad.a}*{bad.b}+{t.k} = {bad.shifted} is not a square"
        )


def pell_extension_search(
    t: DiophTuple, max_index: int, *, class_bound: int = 10**5
) -> SearchReport:
    """Candidate fourth elements for t via the Pell reduction.

    The two smallest elements a < b are reduced to X^2 - (a*b)*Y^2 =
    k*b*(b-a); every solution class is walked max_index unit-multiplications
    in both directions.  Each member yields m = (x^2 - k)/a when integral;
    m <= 0 is discarded, m equal to an existing element is reported as a
    self-hit, and every other m becomes a candidate whose third condition
    c*m + k is then tested.

    When a*b happens to be a perfect square the reduced equation factors and
    has finitely many solutions, which are enumerated outright.
    """
    if max_index < 0:
        raise ValueError("max_index must be >= 0")
    _require_verified_triple(t)
    a, b, c = t.elements
    red = reduce_pair(a, b, t.k)
    solutions: list[tuple[int, int]] = []
    if is_perfect_square(red.D) is not None:
        solutions = _square_discriminant_solutions(red.D, red.N)
    else:
        for cls in solve_general(PellProblem(red.D, red.N), class_bound=class_bound):
            for u, v in cls.members(max_index):
                solutions.append((abs(u), abs(v)))
    found: dict[int, ExtensionCandidate] = {}
    self_hits = set()
    for X, Y in solutions:
        m = red.recover_m(X, Y)
        if m is None or m <= 0:
            continue
        if m in t.elements:
            self_hits.add(m)
            continue
        if m in found:
            continue
        witnesses = [
            ConditionWitness(a, m, X // b),
            ConditionWitness(b, m, Y),
        ]
        root_c = is_perfect_square(c * m + t.k)
        if root_c is not None:
            witnesses.append(ConditionWitness(c, m, root_c))
        found[m] = ExtensionCandidate(m, tuple(witnesses), root_c is not None)
    candidates = tuple(found[m] for m in sorted(found))
    return SearchReport(t, "pell_sequence", max_index, candidates, tuple(sorted(self_hits)))


def _square_discriminant_solutions(D: int, N: int) -> list[tuple[int, int]]:
    # X^2 - d^2*Y^2 = N factors as (X - d*Y)(X + d*Y) = N: finitely many
    # divisor pairs, no unit to advance by.
    d = isqrt(D)
    out = set()
    for e in _divisors(abs(N)):
        for lo in (e, -e):
            hi = N // lo
            if (lo + hi) % 2 or (hi - lo) % (2 * d):
                continue
            out.add((abs(lo + hi) // 2, abs(hi - lo) // (2 * d)))
    return sorted(out)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            large.append(n // d)
        d += 1
    small.extend(reversed(large))
    return small


def brute_force_search(t: DiophTuple, max_m: int) -> SearchReport:
    """Oracle search: test every m in [1, max_m] outside t directly.

    Returns the complete candidates only; the three conditions are checked
    with exact integer square tests.
    """
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    _require_verified_triple(t)
    a, b, c = t.elements
    k = t.k
    sq = _SQUARES_MOD_256
    found = []
    hits = []
    va = a + k  # a*m + k, stepped incrementally
    for m in range(1, max_m + 1):
        if va >= 0 and sq[va & 255]:
            ra = isqrt(va)
            if ra * ra == va:
                rb = is_perfect_square(b * m + k)
                if rb is not None:
                    if m in t.elements:
                        # same diagnostic the pair-reduction strategy emits
                        hits.append(m)
                    else:
                        rc = is_perfect_square(c * m + k)
                        if rc is not None:
                            witnesses = (
                                ConditionWitness(a, m, ra),
                                ConditionWitness(b, m, rb),
                                ConditionWitness(c, m, rc),
                            )
                            found.append(ExtensionCandidate(m, witnesses, True))
        va += a
    return SearchReport(t, "brute_force", max_m, tuple(found), tuple(hits))


def find_certificate(t: DiophTuple, max_modulus: int) -> ModularCertificate | None:
    """Smallest modulus M <= max_modulus certifying t non-extendable, if any.

    For each element t_i the allowed residues are {m mod M : t_i*m + k is a
    square mod M}; an empty three-way intersection proves no integer m can
    extend the triple.  Only prime-power M are examined: squareness mod M
    decomposes over the prime powers of M, so a composite modulus certifies
    exactly when one of its prime-power parts does, and the smallest
    certifying M is always a prime power.
    """
    if max_modulus < 2:
        raise ValueError("max_modulus must be >= 2")
    _require_verified_triple(t)
    e1, e2, e3 = t.elements
    k = t.k
    for M in _prime_power_moduli(max_modulus):
        sq = bytearray(M)
        for r in range(M // 2 + 1):
            sq[(r * r) % M] = 1
        a1, a2, a3 = e1 % M, e2 % M, e3 % M
        km = k % M
        for m in range(M):
            if sq[(a1 * m + km) % M] and sq[(a2 * m + km) % M] and sq[(a3 * m + km) % M]:
                break  # common residue: this modulus proves nothing
        else:
            allowed = {
                e: frozenset(m for m in range(M) if sq[(e * m + k) % M])
                for e in t.elements
            }
            return ModularCertificate(M, allowed, True)
    return None


def _prime_power_moduli(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    moduli = []
    for p in range(2, limit + 1):
        if sieve[p]:
            for multiple in range(p * p, limit + 1, p):
                sieve[multiple] = 0
            q = p
            while q <= limit:
                moduli.append(q)
                q *= p
    moduli.sort()
    return moduli


def verify_certificate(cert: ModularCertificate, t: DiophTuple) -> bool:
    """Re-derive the certificate from scratch and check it against t.

    Recomputes each allowed-residue set by exhaustive enumeration mod the
    claimed modulus, requires them to match the certificate exactly, and
    requires their intersection to be empty.  Implemented independently of
    find_certificate on purpose.
    """
    M = cert.modulus
    if M < 2:
        return False
    if set(cert.allowed_residues) != set(t.elements):
        return False
    squares = {(r * r) % M for r in range(M)}
    recomputed = {
        e: frozenset(m for m in range(M) if (e * m + t.k) % M in squares)
        for e in t.elements
    }
    for e in t.elements:
        if recomputed[e] != frozenset(cert.allowed_residues[e]):
            return False
    common = set(range(M))
    for e in t.elements:
        common &= recomputed[e]
    if common:
        return False
    return cert.intersection_empty is True


def search_and_certify(
    t: DiophTuple,
    max_index: int = 30,
    max_modulus: int = 10**5,
    *,
    class_bound: int = 10**5,
) -> SearchReport:
    """Pell search first; when nothing extends, attempt a certificate."""
    report = pell_extension_search(t, max_index, class_bound=class_bound)
    if report.verdict == VERDICT_EXTENDED:
        return report
    cert = find_certificate(t, max_modulus)
    if cert is not None:
        report = replace(report, certificate=cert)
    return report
