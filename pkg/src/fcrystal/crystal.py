"""F-cyclic F-crystals and their level invariants.

An F-cyclic F-crystal is a triple (r, pi, E): Frobenius permutes a basis of
rank r by pi and scales basis vector i by p^{E[i]}.  Its level-m automorphism
group scheme has dimension gamma(m) and its level-m endomorphism algebra has
p^{b(m)} connected components; both reduce to component counts of level
digraphs, one per orbit of pi acting on basis pairs:

* gamma(m) sums the free linear counts of the orbit difference sequences,
* b(m) sums circular count times orbit length (each circular component of an
  orbit contributes one edge per orbit position).

The closed forms from circseq make both computable without building a single
digraph; verify_formula_vs_oracle rebuilds the digraphs anyway and compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .circseq import (
    AllZero,
    NormalizedSeq,
    SegmentCensus,
    circular_level,
    circular_count,
    linear_count,
    normalize,
    normalize_full,
    segment_census,
)
from .digraph import oracle_counts
from .permutation import Orbit, Permutation, cycle_decomposition, parse_permutation, product_orbits


class ResourceLimitError(RuntimeError):
    """An estimated workload exceeds the configured budget."""


DEFAULT_VERTEX_BUDGET = 10_000_000


@dataclass(frozen=True)
class FCyclicCrystal:
    """Rank, basis permutation, and nonnegative Hodge exponents, one per basis vector."""

    pi: Permutation
    slopes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.slopes) != self.pi.size:
            raise ValueError(f"need {self.pi.size} slopes, got {len(self.slopes)}")
        if any(e < 0 for e in self.slopes):
            raise ValueError("slopes must be nonnegative integers")

    @property
    def r(self) -> int:
        return self.pi.size

    @property
    def is_dieudonne(self) -> bool:
        """True when every slope is 0 or 1, i.e. the crystal is a Dieudonne module."""
        return all(e in (0, 1) for e in self.slopes)

    @property
    def is_circular(self) -> bool:
        return len(cycle_decomposition(self.pi)) == 1

    @property
    def codimension(self) -> int:
        return sum(1 for e in self.slopes if e == 0)

    @property
    def dimension(self) -> int:
        return sum(1 for e in self.slopes if e != 0)

    @classmethod
    def from_text(cls, r: int, perm_text: str, slopes: tuple[int, ...]) -> "FCyclicCrystal":
        return cls(parse_permutation(perm_text, r), tuple(slopes))


@dataclass(frozen=True)
class OrbitData:
    """One pair orbit with its slope-difference sequence and level-m combinatorics."""

    orbit: Orbit
    epsilon: tuple[int, ...]
    normalized: NormalizedSeq
    census: SegmentCensus
    level: Optional[int]


@dataclass(frozen=True)
class GammaReport:
    """gamma and b tables up to m_max with the stabilization level.

    gamma[n] is the automorphism dimension at level n (gamma[0] = 0); delta[n-1]
    is gamma(n) - gamma(n-1); b[n-1] is the component exponent at level n.
    stabilization is the least level past which gamma is constant; it equals the
    isomorphism number of the crystal when the Dieudonne flag is set, and is
    reported without that interpretation otherwise.
    """

    m_max: int
    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    b: tuple[int, ...]
    stabilization: int
    stabilization_is_isomorphism_number: bool
    ordinary: Optional[bool]
    per_orbit: tuple[OrbitData, ...]


@dataclass(frozen=True)
class VerifyCheck:
    orbit_index: int
    m: int
    formula_linear: int
    formula_circular: int
    oracle_linear: int
    oracle_circular: int

    @property
    def match(self) -> bool:
        return (
            self.formula_linear == self.oracle_linear
            and self.formula_circular == self.oracle_circular
        )


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[VerifyCheck, ...]

    @property
    def mismatches(self) -> tuple[VerifyCheck, ...]:
        return tuple(c for c in self.checks if not c.match)

    @property
    def ok(self) -> bool:
        return not self.mismatches


@dataclass(frozen=True)
class DeltaReport:
    """Monotonicity diagnostics for the gamma increments."""

    nonincreasing: bool
    strict_through_stabilization: bool
    first_violation: Optional[int]


def orbit_epsilon(crystal: FCyclicCrystal, orbit: Orbit) -> tuple[int, ...]:
    """Slope differences E[i] - E[j] along the orbit."""
    e = crystal.slopes
    return tuple(e[i - 1] - e[j - 1] for i, j in orbit.points)


def orbit_data(crystal: FCyclicCrystal, m: int) -> list[OrbitData]:
    """Per-orbit difference sequences with their level-m normal forms and censuses."""
    if m < 1:
        raise ValueError("level must be at least 1")
    out: list[OrbitData] = []
    for orbit in product_orbits(crystal.pi):
        eps = orbit_epsilon(crystal, orbit)
        norm = normalize(eps, m)
        if isinstance(norm, AllZero):
            census = SegmentCensus({}, m)
            level: Optional[int] = 0
        else:
            census = segment_census(norm, m)
            level = circular_level(norm)
        out.append(OrbitData(orbit, eps, norm, census, level))
    return out


def _full_orbit_invariants(crystal: FCyclicCrystal) -> list[tuple[Orbit, dict[int, int], Optional[int]]]:
    # Unclamped and uncapped, so the same data is exact at every level at once.
    out = []
    for orbit in product_orbits(crystal.pi):
        eps = orbit_epsilon(crystal, orbit)
        norm = normalize_full(eps)
        if isinstance(norm, AllZero):
            counts: dict[int, int] = {}
            level: Optional[int] = 0
        else:
            cap = len(norm.entries)  # a segment level never exceeds half the length
            counts = dict(segment_census(norm, cap).counts)
            level = circular_level(norm)
        out.append((orbit, counts, level))
    return out


def gamma(crystal: FCyclicCrystal, m: int) -> int:
    """Dimension of the level-m automorphism group scheme (gamma(0) = 0)."""
    if m < 0:
        raise ValueError("level must be nonnegative")
    if m == 0:
        return 0
    total = 0
    for _orbit, counts, _level in _full_orbit_invariants(crystal):
        total += sum(count for level, count in counts.items() if level <= m)
    return total


def endo_exponent(crystal: FCyclicCrystal, m: int) -> int:
    """Exponent b with p^b connected components in the level-m endomorphism algebra.

    Each orbit whose difference sequence balances at level lam contributes
    (m - lam) circular components when m > lam, and each of those carries one
    edge per orbit position, hence the factor len(orbit).  Exact integer, no
    overflow concerns at any size.
    """
    if m < 1:
        raise ValueError("level must be at least 1")
    total = 0
    for orbit, _counts, level in _full_orbit_invariants(crystal):
        if level is not None and level < m:
            total += (m - level) * len(orbit)
    return total


def gamma_table(crystal: FCyclicCrystal, m_max: int) -> GammaReport:
    """gamma(0..m_max), increments, b(1..m_max), and the stabilization level."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    invariants = _full_orbit_invariants(crystal)

    delta = [0] * (m_max + 1)
    stabilization = 0
    for _orbit, counts, _level in invariants:
        for level, count in counts.items():
            if level > stabilization:
                stabilization = level
            if level <= m_max:
                delta[level] += count

    gammas = [0] * (m_max + 1)
    for n in range(1, m_max + 1):
        gammas[n] = gammas[n - 1] + delta[n]

    b = []
    for n in range(1, m_max + 1):
        total = 0
        for orbit, _counts, level in invariants:
            if level is not None and level < n:
                total += (n - level) * len(orbit)
        b.append(total)

    ordinary = (gammas[min(1, m_max)] == 0) if crystal.is_dieudonne else None
    return GammaReport(
        m_max=m_max,
        gamma=tuple(gammas),
        delta=tuple(delta[1:]),
        b=tuple(b),
        stabilization=stabilization,
        stabilization_is_isomorphism_number=crystal.is_dieudonne,
        ordinary=ordinary,
        per_orbit=tuple(orbit_data(crystal, m_max)),
    )


def verify_formula_vs_oracle(
    crystal: FCyclicCrystal,
    m_max: int,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
) -> VerifyReport:
    """Rebuild every orbit digraph at every level up to m_max and compare counts.

    The closed-form counts and the literal component census must agree exactly;
    any disagreement is returned rather than raised so callers can report it.
    """
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    orbits = product_orbits(crystal.pi)
    estimated = sum(len(o) for o in orbits) * m_max * (m_max + 1) // 2
    if estimated > vertex_budget:
        raise ResourceLimitError(
            f"verification needs about {estimated} digraph vertices, budget is {vertex_budget}"
        )
    checks: list[VerifyCheck] = []
    for index, orbit in enumerate(orbits):
        eps = orbit_epsilon(crystal, orbit)
        for m in range(1, m_max + 1):
            stats = oracle_counts(eps, m)
            if stats.circular_edges != stats.circular * len(orbit):
                raise RuntimeError(
                    f"orbit {index}: circular components carry {stats.circular_edges} edges, "
                    f"expected {stats.circular * len(orbit)}"
                )
            checks.append(
                VerifyCheck(
                    orbit_index=index,
                    m=m,
                    formula_linear=linear_count(eps, m),
                    formula_circular=circular_count(eps, m),
                    oracle_linear=stats.free_linear,
                    oracle_circular=stats.circular,
                )
            )
    return VerifyReport(tuple(checks))


def delta_monotonicity_report(crystal: FCyclicCrystal, m_max: int) -> DeltaReport:
    """Check the gamma increments: never increasing, and strictly decreasing
    through the stabilization level.  m_max should be at least stabilization + 1
    for the strict check to cover the full range."""
    report = gamma_table(crystal, m_max)
    delta = report.delta
    first_violation: Optional[int] = None
    for n in range(1, m_max):
        if delta[n] > delta[n - 1]:
            first_violation = n
            break
    strict = all(
        delta[n] < delta[n - 1]
        for n in range(1, min(report.stabilization + 1, m_max))
    )
    return DeltaReport(
        nonincreasing=first_violation is None,
        strict_through_stabilization=strict,
        first_violation=first_violation,
    )


def newton_slopes(crystal: FCyclicCrystal) -> tuple[Fraction, ...]:
    """Newton slopes with multiplicity: each pi-cycle C contributes its average
    slope, repeated len(C) times.  Sorted ascending, exact rationals."""
    slopes: list[Fraction] = []
    for cycle in cycle_decomposition(crystal.pi):
        avg = Fraction(sum(crystal.slopes[i - 1] for i in cycle), len(cycle))
        slopes.extend([avg] * len(cycle))
    return tuple(sorted(slopes))


def is_minimal(crystal: FCyclicCrystal) -> bool:
    """Minimality test for Dieudonne modules, cycle by cycle.

    Within a cycle C of average slope lam, every length-q slope sum starting
    anywhere in C must land in {floor(q*lam), floor(q*lam) + 1}.  Checking q up
    to len(C) suffices: both the sums and the floors advance by sum(E over C)
    per full period.  Raises for non-Dieudonne input, where the criterion does
    not apply.
    """
    if not crystal.is_dieudonne:
        raise ValueError("minimality is defined here only for 0/1 slopes")
    e = crystal.slopes
    for cycle in cycle_decomposition(crystal.pi):
        length = len(cycle)
        total = sum(e[i - 1] for i in cycle)
        for start in range(length):
            acc = 0
            for q in range(1, length + 1):
                acc += e[cycle[(start + q - 1) % length] - 1]
                base = (q * total) // length
                if acc != base and acc != base + 1:
                    return False
    return True
