"""Scalar citation indices computed from a profile.

The classic indices (h, g, m, i_k, c_k) read the sorted counts directly.
The kh family reads the citation curve instead: kh1 is the ordinate of
the curve's crossing with the mean-citation ray c = c_s * r, kh2 is
sqrt(c_sigma), kh3 is the ordinate of the crossing with the ray of slope
sqrt(c_sigma), and kh is the largest of the three.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, EmptyProfileError, MissingFieldError
from .profile import CitationProfile, CrossingPoint


@dataclass(frozen=True)
class IndexReport:
    """One table row: every index and parameter for a single profile."""

    author_id: str
    r0: int
    r: int
    c_sigma: int
    c10: int
    c_max: int
    c_s: float
    h: int
    g: int
    m: float | None
    i10: int
    kh1: float
    kh2: float
    kh3: float
    kh: float


def line_crossing(profile: CitationProfile, slope: float) -> CrossingPoint:
    """Intersect the ray c = slope * r with the citation curve.

    C(x) - slope * x is strictly decreasing on (0, r + 1], positive near
    zero (the constant extension holds C at c_max there) and negative at
    r + 1, so exactly one crossing exists.  A ray at least as steep as
    c_max meets the curve inside the constant extension, which caps the
    crossing ordinate at c_max.
    """
    if profile.r == 0:
        raise EmptyProfileError(f"profile {profile.author_id!r} has no cited works")
    if not slope > 0:
        raise DomainError(f"slope must be positive, got {slope!r}")
    if slope >= profile.c_max:
        return CrossingPoint(r_star=profile.c_max / slope, c_star=float(profile.c_max))
    counts = profile.counts
    for k in range(1, profile.r + 1):
        here = counts[k - 1]
        nxt = counts[k] if k < profile.r else 0
        if nxt - slope * (k + 1) <= 0.0:  # difference changes sign inside (k, k + 1]
            seg = nxt - here  # segment slope, <= 0
            x = (here - seg * k) / (slope - seg)
            return CrossingPoint(r_star=x, c_star=slope * x)
    raise AssertionError("unreachable: the curve closes at zero")


def h_index(profile: CitationProfile) -> int:
    """Largest rank whose work has at least that many citations."""
    h = 0
    for rank in range(1, profile.r + 1):
        if profile.counts[rank - 1] >= rank:
            h = rank
        else:
            break
    return h


def g_index_parabola(profile: CitationProfile) -> int:
    """Largest square s = k * k such that the rank-k work has at least s citations.

    This is the variant read off the crossing of the curve with the
    parabola c = r * r, so the result is always a perfect square.
    """
    best = 0
    for rank in range(1, profile.r + 1):
        if profile.counts[rank - 1] >= rank * rank:
            best = rank
        else:
            break
    return best * best


def g_index_egghe(profile: CitationProfile) -> int:
    """Largest g whose top-g works total at least g * g citations.

    Ranks past the last cited work count as zero, so g may exceed r but
    never r0.
    """
    best = 0
    total = 0
    for g in range(1, profile.r0 + 1):
        total += profile.counts[g - 1]
        if total >= g * g:
            best = g
    return best


def m_index(profile: CitationProfile) -> float:
    """h divided by career length in years."""
    if profile.career_years is None:
        raise MissingFieldError(f"profile {profile.author_id!r} has no career_years")
    return h_index(profile) / profile.career_years


def i_k(profile: CitationProfile, k: int) -> int:
    """Number of works with at least k citations."""
    if k < 1:
        raise DomainError(f"threshold must be at least 1, got {k!r}")
    return sum(1 for value in profile.counts if value >= k)


def c_k(profile: CitationProfile, k: int) -> int:
    """Citations collected by the k most-cited works."""
    if k < 1:
        raise DomainError(f"rank cutoff must be at least 1, got {k!r}")
    return sum(profile.counts[: min(k, profile.r)])


def kh1(profile: CitationProfile) -> float:
    """Crossing ordinate of the curve with the mean-citation ray c = c_s * r."""
    if profile.r == 0:
        return 0.0
    return line_crossing(profile, profile.c_s).c_star


def kh2(profile: CitationProfile) -> float:
    """Square root of the total citations over cited works."""
    return math.sqrt(profile.c_sigma)


def kh3(profile: CitationProfile) -> float:
    """Crossing ordinate of the curve with the ray of slope sqrt(c_sigma)."""
    if profile.r == 0:
        return 0.0
    return line_crossing(profile, math.sqrt(profile.c_sigma)).c_star


def kh_max(profile: CitationProfile) -> float:
    """Largest of kh1, kh2 and kh3."""
    return max(kh1(profile), kh2(profile), kh3(profile))


def compute_report(profile: CitationProfile) -> IndexReport:
    """All indices and parameters for one profile.

    Empty profiles report zero everywhere and leave m absent; otherwise
    m is present exactly when career_years is.
    """
    m: float | None = None
    if profile.r0 > 0 and profile.career_years is not None:
        m = m_index(profile)
    return IndexReport(
        author_id=profile.author_id,
        r0=profile.r0,
        r=profile.r,
        c_sigma=profile.c_sigma,
        c10=c_k(profile, 10),
        c_max=profile.c_max,
        c_s=profile.c_s,
        h=h_index(profile),
        g=g_index_parabola(profile),
        m=m,
        i10=i_k(profile, 10),
        kh1=kh1(profile),
        kh2=kh2(profile),
        kh3=kh3(profile),
        kh=kh_max(profile),
    )
