"""Planar electric-quadrupole problem mapped onto the Mathieu spectrum.

The Schroedinger problem for a charge in the purely angular quadrupole
potential separates into an angular equation -- a Mathieu equation once
the angle is shifted by a quarter period, with q = 4*xi and
characteristic value a = 2*E -- and a radial equation whose attractive
inverse-square coefficient is alpha = 1/4 - 2*E.  A channel with
alpha <= 1/4 supports no negative energies, while alpha > 1/4 makes the
radial operator unbounded from below; alpha = 1/4 (E = 0) is the
critical boundary.  This module evaluates and classifies those channels;
it never solves the radial equation itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .mathieu import DEFAULT_TOL, SymmetryClass, char_value

#: Half-width of the E band treated as exactly critical.  Looser than the
#: solver tolerance, far tighter than any spacing between thresholds.
CLASSIFICATION_TOL = 1e-10


class Regime(Enum):
    NO_NEGATIVE_SPECTRUM = "no_negative_spectrum"
    CRITICAL = "critical"
    UNBOUNDED_BELOW = "unbounded_below"


@dataclass(frozen=True)
class AngularChannel:
    """One angular mode: its family, order and eigenvalue E = a/2."""

    symmetry: SymmetryClass
    order: int
    e_theta: float

    @property
    def label(self) -> str:
        return f"{self.symmetry.letter}{self.order}"


@dataclass(frozen=True)
class RadialRegime:
    """Inverse-square strength of a channel and its classification."""

    alpha: float
    regime: Regime


def to_mathieu(xi: float) -> float:
    """Mathieu strength q = 4*xi of the quadrupole strength xi >= 0.

    Negative xi is rejected rather than folded in: the potential at -xi
    is the reflection theta -> -theta of the one at +xi, so its spectrum
    is identical but the even/odd labels would silently swap.
    """
    if xi < 0:
        raise ValueError(
            "xi must be >= 0; a negative xi is equivalent to +xi under the "
            "reflection theta -> -theta (identical spectrum, relabeled families)"
        )
    return 4.0 * xi


def angular_energy(
    xi: float, symmetry: SymmetryClass, m: int, tol: float = DEFAULT_TOL
) -> AngularChannel:
    """Angular eigenvalue E = a_m(4 xi)/2 of one channel."""
    cv = char_value(symmetry, m, to_mathieu(xi), tol)
    return AngularChannel(symmetry, m, cv.value / 2.0)


def radial_alpha(channel: AngularChannel) -> RadialRegime:
    """Classify the radial problem induced by an angular channel.

    alpha = 1/4 - 2E; E within CLASSIFICATION_TOL of zero is critical
    (alpha = 1/4), E below is unbounded from below (alpha > 1/4), E above
    supports no negative spectrum.
    """
    e = channel.e_theta
    alpha = 0.25 - 2.0 * e
    if abs(e) <= CLASSIFICATION_TOL:
        regime = Regime.CRITICAL
    elif e < 0.0:
        regime = Regime.UNBOUNDED_BELOW
    else:
        regime = Regime.NO_NEGATIVE_SPECTRUM
    return RadialRegime(alpha, regime)


def iter_channel_modes(max_order: int) -> Iterator[tuple[SymmetryClass, int]]:
    """All (family, order) pairs with order <= max_order."""
    for symmetry in SymmetryClass:
        for m in range(symmetry.first_order, max_order + 1, 2):
            yield symmetry, m


def classify_channels(
    xi: float, max_order: int = 12, tol: float = DEFAULT_TOL
) -> list[tuple[AngularChannel, RadialRegime]]:
    """Evaluate and classify every channel up to max_order, sorted by E."""
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    channels = [
        angular_energy(xi, symmetry, m, tol)
        for symmetry, m in iter_channel_modes(max_order)
    ]
    channels.sort(key=lambda ch: ch.e_theta)
    return [(ch, radial_alpha(ch)) for ch in channels]


def count_open_channels(xi: float, max_order: int = 12, tol: float = DEFAULT_TOL) -> int:
    """Number of channels with an unbounded-below radial problem.

    For any xi > 0 this is at least 1: the lowest curve is negative for
    every positive strength, so there is no minimum quadrupole strength
    for capture.
    """
    return sum(
        1
        for _, radial in classify_channels(xi, max_order, tol)
        if radial.regime is Regime.UNBOUNDED_BELOW
    )
