"""Citation profiles and the piecewise-linear citation curve.

A profile keeps one entry per work, zero-cited works included, sorted by
citation count from highest to lowest.  The citation curve is built from
the cited works only: rank 1 carries the most-cited work, the curve
closes at (r + 1, 0), values between integer ranks are interpolated
linearly, and on [0, 1) the curve is extended as the constant c_max so
that arbitrarily steep rays from the origin still cross it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, EmptyProfileError, ValidationError


@dataclass(frozen=True)
class CitationProfile:
    """Per-author citation counts plus the derived scalar parameters."""

    author_id: str
    counts: tuple[int, ...]  # sorted non-increasing, zeros kept
    career_years: int | None
    r0: int  # total works
    r: int  # works cited at least once
    c_sigma: int  # citations summed over cited works
    c_max: int  # citations of the top-ranked work
    c_s: float  # c_sigma / r, 0.0 when r == 0

    def citation_at(self, x: float) -> float:
        """Evaluate the citation curve at rank ``x``.

        Defined on [0, r + 1]: constant c_max on [0, 1), linear between
        integer ranks afterwards, 0 at r + 1.
        """
        if self.r == 0:
            raise EmptyProfileError(
                f"profile {self.author_id!r} has no cited works; the curve is undefined"
            )
        if x < 0 or x > self.r + 1:
            raise DomainError(f"rank {x!r} outside the curve domain [0, {self.r + 1}]")
        if x < 1:
            return float(self.c_max)
        k = math.floor(x)
        if k >= self.r + 1:  # x == r + 1 exactly
            return 0.0
        here = self.counts[k - 1]
        nxt = self.counts[k] if k < self.r else 0
        return here + (nxt - here) * (x - k)


@dataclass(frozen=True)
class CrossingPoint:
    """Intersection of a ray from the origin with a citation curve."""

    r_star: float
    c_star: float


def build_profile(
    author_id: str,
    counts: Iterable[int],
    career_years: int | None = None,
) -> CitationProfile:
    """Validate and sort raw per-work citation counts into a profile."""
    raw = list(counts)
    for i, value in enumerate(raw):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"counts[{i}] is not an integer: {value!r}")
        if value < 0:
            raise ValidationError(f"counts[{i}] is negative: {value}")
    if career_years is not None:
        if isinstance(career_years, bool) or not isinstance(career_years, int) or career_years < 1:
            raise ValidationError(f"career_years must be a positive integer, got {career_years!r}")
    ordered = tuple(sorted(raw, reverse=True))  # stable among equal counts
    r = sum(1 for value in ordered if value > 0)
    c_sigma = sum(ordered[:r])
    c_max = ordered[0] if r >= 1 else 0
    return CitationProfile(
        author_id=author_id,
        counts=ordered,
        career_years=career_years,
        r0=len(ordered),
        r=r,
        c_sigma=c_sigma,
        c_max=c_max,
        c_s=c_sigma / r if r >= 1 else 0.0,
    )
