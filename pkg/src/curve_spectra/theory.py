"""Closed-form spectrum of distance-2 geodesic counts and the matching upper bounds."""

from __future__ import annotations

from .errors import SporadicSurface
from .ribbon import SurfaceType

# surfaces with 3g + n <= 6 that are not sporadic
EXCEPTIONAL_SPECTRA = {
    (0, 5): frozenset({1}),
    (0, 6): frozenset({1, 2}),
    (1, 2): frozenset({1}),
    (1, 3): frozenset({1, 2}),
    (2, 0): frozenset({1, 2}),
}


def require_nonsporadic(genus: int, punctures: int) -> SurfaceType:
    st = SurfaceType(genus, punctures)
    if genus < 0 or punctures < 0:
        raise ValueError("genus and punctures must be non-negative")
    if st.is_sporadic:
        raise SporadicSurface(
            f"surface {st} is sporadic: genus 0 with at most 4 punctures or genus 1 with "
            "at most 1 puncture has no two disjoint essential curves, so its curve "
            "complex has no distance-2 pairs"
        )
    return st


def spectrum_max(genus: int, punctures: int) -> int:
    require_nonsporadic(genus, punctures)
    key = (genus, punctures)
    if key in EXCEPTIONAL_SPECTRA:
        return max(EXCEPTIONAL_SPECTRA[key])
    return (3 * genus + punctures) // 2


def spectrum_table(genus: int, punctures: int) -> frozenset[int]:
    """Set of finite geodesic counts (equivalently tight counts) at distance 2."""
    return frozenset(range(1, spectrum_max(genus, punctures) + 1))


def tight_upper_bound(genus: int, punctures: int) -> int:
    """``min(3g - 4 + n, floor((3g + n) / 2))``: pants bound and the half bound."""
    return min(3 * genus - 4 + punctures, (3 * genus + punctures) // 2)
