"""Construct count vectors with prescribed aggregate parameters.

Useful for building example corpora and for exercising the indices when
only the summary parameters (r0, r, c_sigma, c_max) of a profile are
known: any consistent counts vector shares those aggregates, and the
aggregate-driven indices (c_s, kh2, clamped crossings) along with it.
"""

from __future__ import annotations

from .errors import ValidationError


def synthesize_counts(r0: int, r: int, c_sigma: int, c_max: int) -> list[int]:
    """A non-increasing counts vector realizing the given aggregates.

    Greedy construction: the top work takes c_max, later works take as
    much as possible while leaving at least one citation for each work
    still to fill.  Infeasible parameter combinations are rejected.
    """
    if not 0 <= r <= r0:
        raise ValidationError(f"need 0 <= r <= r0, got r={r}, r0={r0}")
    if r == 0:
        if c_sigma != 0 or c_max != 0:
            raise ValidationError("r == 0 forces c_sigma == 0 and c_max == 0")
        return [0] * r0
    if c_max < 1 or c_sigma < c_max:
        raise ValidationError(f"need 1 <= c_max <= c_sigma, got c_max={c_max}, c_sigma={c_sigma}")
    if c_sigma < c_max + (r - 1):
        raise ValidationError("c_sigma too small: every cited work needs at least one citation")
    if c_sigma > r * c_max:
        raise ValidationError("c_sigma too large: no work may exceed c_max")
    counts = [c_max]
    rest = c_sigma - c_max
    slots = r - 1
    for i in range(slots):
        still_to_fill = slots - i - 1
        value = min(c_max, rest - still_to_fill)
        counts.append(value)
        rest -= value
    assert rest == 0
    return counts + [0] * (r0 - r)
