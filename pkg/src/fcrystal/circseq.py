"""Circular integer sequences and their closed-form component counts.

A circular sequence of length s is a tuple read cyclically (position s wraps to
position 1).  The level-m digraph of such a sequence decomposes into free linear,
zero linear, and circular components; this module computes the free linear count
and the circular count combinatorially, without building the digraph:

* free linear components are counted by a census of balanced negative segments,
  one per segment of each level up to m;
* circular components exist only when the signed entries balance, and then number
  max(0, m - level) where the level is the spread of the running sums.

Both counts are invariant under merging adjacent entries of the same strict sign
and under dropping zero entries, which is what the two reduction helpers do.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Union

CircularSeq = tuple[int, ...]


@dataclass(frozen=True)
class AllZero:
    """Normal form of a circular sequence whose entries are all zero."""

    original_length: int


@dataclass(frozen=True)
class PlusMinus:
    """Normal form with every entry +1 or -1."""

    entries: tuple[int, ...]


NormalizedSeq = Union[AllZero, PlusMinus]


@dataclass(frozen=True)
class SegmentCensus:
    """Counts of balanced negative segments by level, for levels up to level_cap."""

    counts: Mapping[int, int]
    level_cap: int

    def up_to(self, m: int) -> int:
        return sum(count for level, count in self.counts.items() if level <= m)

    def max_level(self) -> int:
        return max(self.counts, default=0)


def _check_seq(seq: CircularSeq) -> None:
    if len(seq) == 0:
        raise ValueError("a circular sequence must have at least one entry")


def first_reduction_step(seq: CircularSeq, t: int) -> CircularSeq:
    """Merge the cyclically adjacent entries at positions t, t+1 (1-based) into their sum.

    Both entries must have the same strict sign; such a merge changes the
    sequence but not the component counts of any of its level digraphs.
    """
    _check_seq(seq)
    s = len(seq)
    if s < 2:
        raise ValueError("need at least two entries to merge")
    if not 1 <= t <= s:
        raise ValueError(f"position {t} is outside 1..{s}")
    a = seq[t - 1]
    b = seq[t % s]
    if a * b <= 0:
        raise ValueError(f"entries {a} and {b} at positions {t}, {t % s + 1} do not share a strict sign")
    if t < s:
        return seq[: t - 1] + (a + b,) + seq[t + 1 :]
    # Wrapping merge of the last and first entries.
    return (a + b,) + seq[1 : s - 1]


def second_reduction(seq: CircularSeq) -> CircularSeq:
    """Drop zero entries.  An all-zero sequence has no zero-free form and is rejected."""
    _check_seq(seq)
    if all(e == 0 for e in seq):
        raise ValueError("all-zero sequence cannot be reduced; it is its own normal form")
    return tuple(e for e in seq if e != 0)


def _expand_signs(values: CircularSeq) -> tuple[int, ...]:
    out: list[int] = []
    for e in values:
        if e > 0:
            out.extend([1] * e)
        elif e < 0:
            out.extend([-1] * (-e))
    return tuple(out)


def normalize(seq: CircularSeq, m: int) -> NormalizedSeq:
    """Sign normal form used by the level-m counts.

    Entries are clamped to magnitude m + 1, zeroes dropped, and every remaining
    entry e expanded into |e| copies of its sign.  The clamp is harmless at level
    m: a run of m + 1 equal signs already blocks every segment and forces every
    circular level past m, exactly as a longer run would.
    """
    _check_seq(seq)
    if m < 1:
        raise ValueError("level must be at least 1")
    if all(e == 0 for e in seq):
        return AllZero(len(seq))
    bound = m + 1
    return PlusMinus(_expand_signs(tuple(max(-bound, min(bound, e)) for e in seq)))


def normalize_full(seq: CircularSeq) -> NormalizedSeq:
    """Sign normal form without clamping; exact at every level at once."""
    _check_seq(seq)
    if all(e == 0 for e in seq):
        return AllZero(len(seq))
    return PlusMinus(_expand_signs(seq))


def segment_census(norm: NormalizedSeq, m: int) -> SegmentCensus:
    """Count balanced negative segments of each level up to m.

    A segment starts at a -1 entry, ends at a +1 entry (possibly wrapping past
    the seam), sums to zero, and keeps every proper partial sum strictly
    negative; its level is the depth reached, i.e. minus the smallest partial
    sum.  Each start entry opens at most one segment: the walk is cut at the
    first return to zero.  A walk that has not returned within s steps never
    returns, because +-1 steps cannot jump over zero and the sequence repeats
    with a strictly negative carry from then on.
    """
    if m < 1:
        raise ValueError("level must be at least 1")
    if not isinstance(norm, PlusMinus):
        raise ValueError("the census is defined for sign sequences, not the all-zero form")
    entries = norm.entries
    s = len(entries)
    counts: dict[int, int] = {}
    for start in range(s):
        if entries[start] != -1:
            continue
        total = 0
        low = 0
        for step in range(s):
            total += entries[(start + step) % s]
            if total < low:
                low = total
            if total == 0:
                if -low <= m:
                    counts[-low] = counts.get(-low, 0) + 1
                break
    return SegmentCensus(counts, m)


def circular_level(norm: NormalizedSeq) -> Optional[int]:
    """Spread of the running sums: max partial sum minus min partial sum.

    Defined only when the signed entries balance (None otherwise); the all-zero
    form has level 0.  Equivalently this is the largest absolute sum over any
    circular interval of the sequence.
    """
    if isinstance(norm, AllZero):
        return 0
    entries = norm.entries
    if sum(entries) != 0:
        return None
    total = 0
    high = 0
    low = 0
    for e in entries:
        total += e
        if total > high:
            high = total
        if total < low:
            low = total
    return high - low


def circular_count(seq: CircularSeq, m: int) -> int:
    """Number of circular components of the level-m digraph, in closed form."""
    norm = normalize(seq, m)
    if isinstance(norm, AllZero):
        return m
    level = circular_level(norm)
    if level is None:
        return 0
    return max(0, m - level)


def linear_count(seq: CircularSeq, m: int) -> int:
    """Number of free linear components of the level-m digraph, in closed form."""
    norm = normalize(seq, m)
    if isinstance(norm, AllZero):
        return 0
    return segment_census(norm, m).up_to(m)
