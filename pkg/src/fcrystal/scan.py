"""Family scans: enumerate crystals, compute invariants, check expected properties.

A scan walks a family of crystals in a canonical order (permutations by image
tuple, slope vectors lexicographically), computes the gamma and b tables for
each, and evaluates a set of expected properties.  Records come back in
enumeration order regardless of worker count, so scan output is reproducible
byte for byte.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, Optional, Sequence

from .crystal import (
    FCyclicCrystal,
    delta_monotonicity_report,
    gamma_table,
    is_minimal,
)
from .permutation import Permutation, cycle_string

FAMILIES = ("circular-dieudonne", "all-dieudonne", "circular-fcrystal", "all-fcrystal")

CHECKS = ("nonincreasing", "strict", "increasing-to-stab", "ratio", "minimal")


@dataclass(frozen=True)
class ScanRecord:
    """Invariants and property verdicts for one crystal.

    Verdict fields are True (holds), False (violated), or None (not applicable
    to this crystal or not requested).
    """

    r: int
    perm: str
    slopes: tuple[int, ...]
    m_max: int
    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    b: tuple[int, ...]
    stabilization: int
    dieudonne: bool
    ordinary: Optional[bool]
    minimal: Optional[bool]
    nonincreasing: Optional[bool]
    strict: Optional[bool]
    increasing_to_stab: Optional[bool]
    ratio: Optional[bool]
    minimal_matches_stab: Optional[bool]

    @property
    def violations(self) -> list[str]:
        out = []
        for name, value in (
            ("nonincreasing", self.nonincreasing),
            ("strict", self.strict),
            ("increasing-to-stab", self.increasing_to_stab),
            ("ratio", self.ratio),
            ("minimal", self.minimal_matches_stab),
        ):
            if value is False:
                out.append(name)
        return out


def cycles_of_length_r(r: int) -> Iterator[Permutation]:
    """All r-cycles on {1..r}, canonically: cycle (1, rest...) over permutations of 2..r."""
    for rest in itertools.permutations(range(2, r + 1)):
        images = [0] * r
        cycle = (1,) + rest
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b
        yield Permutation(tuple(images))


def all_permutations(r: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, r + 1)):
        yield Permutation(images)


def enumerate_family(family: str, r: int, slope_max: int = 1) -> Iterator[tuple[Permutation, tuple[int, ...]]]:
    """Yield (permutation, slopes) pairs of the family in canonical order."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family.endswith("dieudonne"):
        slope_max = 1
    perms = cycles_of_length_r(r) if family.startswith("circular") else all_permutations(r)
    for pi in perms:
        for slopes in itertools.product(range(slope_max + 1), repeat=r):
            yield pi, slopes


def _ratio_holds(gamma: Sequence[int]) -> bool:
    # gamma(i) * j < gamma(j) * i for all i > j >= 1 with gamma(j) > 0.
    m_max = len(gamma) - 1
    for j in range(1, m_max + 1):
        if gamma[j] == 0:
            continue
        for i in range(j + 1, m_max + 1):
            if gamma[i] * j >= gamma[j] * i:
                return False
    return True


def scan_record(
    pi: Permutation,
    slopes: tuple[int, ...],
    m_max: int,
    checks: Sequence[str] = CHECKS,
) -> ScanRecord:
    """Compute one crystal's tables and evaluate the requested property checks."""
    crystal = FCyclicCrystal(pi, slopes)
    table = gamma_table(crystal, m_max)
    stab = table.stabilization
    dieudonne = crystal.is_dieudonne
    circular = crystal.is_circular
    ordinary = table.ordinary
    minimal = is_minimal(crystal) if dieudonne else None

    nonincreasing: Optional[bool] = None
    strict: Optional[bool] = None
    increasing: Optional[bool] = None
    ratio: Optional[bool] = None
    minimal_matches: Optional[bool] = None

    if "nonincreasing" in checks or "strict" in checks:
        report = delta_monotonicity_report(crystal, m_max)
        if "nonincreasing" in checks:
            nonincreasing = report.nonincreasing
        # The strict decrease only holds for circular nonordinary Dieudonne
        # crystals; elsewhere it is reported as not applicable.
        if "strict" in checks and dieudonne and circular and ordinary is False:
            strict = report.strict_through_stabilization if m_max >= stab + 1 else None
    if "increasing-to-stab" in checks:
        bound = min(stab, m_max)
        increasing = all(table.gamma[n] > table.gamma[n - 1] for n in range(1, bound + 1)) and all(
            table.gamma[n] == table.gamma[bound] for n in range(bound, m_max + 1)
        )
    if "ratio" in checks and dieudonne and ordinary is False:
        ratio = _ratio_holds(table.gamma)
    if "minimal" in checks and dieudonne:
        minimal_matches = minimal == (stab <= 1)

    return ScanRecord(
        r=pi.size,
        perm=cycle_string(pi),
        slopes=slopes,
        m_max=m_max,
        gamma=table.gamma,
        delta=table.delta,
        b=table.b,
        stabilization=stab,
        dieudonne=dieudonne,
        ordinary=ordinary,
        minimal=minimal,
        nonincreasing=nonincreasing,
        strict=strict,
        increasing_to_stab=increasing,
        ratio=ratio,
        minimal_matches_stab=minimal_matches,
    )


def _job(args: tuple[tuple[int, ...], tuple[int, ...], int, tuple[str, ...]]) -> ScanRecord:
    images, slopes, m_max, checks = args
    return scan_record(Permutation(images), slopes, m_max, checks)


def run_scan(
    family: str,
    r: int,
    m_max: int,
    slope_max: int = 1,
    checks: Sequence[str] = CHECKS,
    workers: Optional[int] = None,
) -> list[ScanRecord]:
    """Scan a whole family.  Records come back in enumeration order for any worker count.

    workers=None (or 0) uses all available cores; small scans run serially
    either way because pool startup would dominate.
    """
    jobs = [
        (pi.images, slopes, m_max, tuple(checks))
        for pi, slopes in enumerate_family(family, r, slope_max)
    ]
    if workers is None or workers <= 0:
        workers = os.cpu_count() or 1
    if workers == 1 or len(jobs) < 64:
        return [_job(job) for job in jobs]
    with Pool(workers) as pool:
        return list(pool.imap(_job, jobs, chunksize=max(1, len(jobs) // (workers * 8))))


def summarize(records: Sequence[ScanRecord]) -> dict[str, int]:
    """Violation counts per property over a scan, plus the record total."""
    summary = {"records": len(records)}
    for name in ("nonincreasing", "strict", "increasing-to-stab", "ratio", "minimal"):
        summary[f"violations[{name}]"] = 0
    for record in records:
        for name in record.violations:
            summary[f"violations[{name}]"] += 1
    return summary
