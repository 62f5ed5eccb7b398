"""Lobachevsky function, orthoscheme volume, and ball volume.

The orthoscheme volume follows the classical closed form: with essential
angles (a01, a12, a23) and the auxiliary angle theta given by
tan(theta) = sqrt(cos^2 a12 - sin^2 a01 sin^2 a23) / (cos a01 cos a23),

Vol = 1/4 { L(a01+theta) - L(a01-theta) + L(pi/2 + a12 - theta)
            + L(pi/2 - a12 - theta) + L(a23+theta) - L(a23-theta)
            + 2 L(pi/2 - theta) }

where L is the Lobachevsky function L(x) = -integral_0^x log|2 sin t| dt.
"""
from __future__ import annotations

import math
from typing import NamedTuple

from .errors import NegativeRadius, ThetaUndefined
from .orthoscheme import OrthoParams

INF = math.inf

# zeta(2n) for n = 1..32, enough for double precision over |x| <= pi/2
_ZETA_EVEN = (
    1.6449340668482264365, 1.0823232337111381915, 1.0173430619844491397,
    1.0040773561979443394, 1.0009945751278180853, 1.0002460865533080483,
    1.0000612481350587048, 1.0000152822594086519, 1.0000038172932649998,
    1.0000009539620338728, 1.0000002384505027277, 1.0000000596081890513,
    1.0000000149015548284, 1.0000000037253340248, 1.0000000009313274324,
    1.0000000002328311834, 1.0000000000582077209, 1.0000000000145519219,
    1.0000000000036379795, 1.0000000000009094948, 1.0000000000002273737,
    1.0000000000000568434, 1.0000000000000142109, 1.0000000000000035527,
    1.0000000000000008882, 1.000000000000000222, 1.0000000000000000555,
    1.0000000000000000139, 1.0000000000000000035, 1.0000000000000000009,
    1.0000000000000000002, 1.0000000000000000001,
)


class Angles(NamedTuple):
    """Essential dihedral angles of the orthoscheme, radians in [0, pi/2]."""

    a01: float
    a12: float
    a23: float


def angles_for(params: OrthoParams) -> Angles:
    """Essential angles (pi/u, pi/v, pi/w) with pi/inf = 0."""

    def ang(n: float) -> float:
        return 0.0 if n == INF else math.pi / n

    return Angles(ang(params.u), ang(params.v), ang(params.w))


def lobachevsky(x: float) -> float:
    """Lobachevsky function L(x), odd and pi-periodic.

    Evaluated through the closed summation of its sine series
    L(x) = x - x log(2x) + sum_{n>=1} zeta(2n) x^{2n+1} / (n (2n+1) pi^{2n}),
    which converges geometrically for |x| <= pi/2 (ratio (x/pi)^2 <= 1/4);
    the identity L(pi - x) = -L(x) covers the rest of a period.
    """
    y = math.fmod(x, math.pi)
    if y > math.pi / 2:
        y -= math.pi
    elif y < -math.pi / 2:
        y += math.pi
    sign = 1.0
    if y < 0:
        sign, y = -1.0, -y
    if y == 0.0 or y == math.pi / 2:
        return 0.0
    q = (y / math.pi) ** 2
    total = 0.0
    comp = 0.0  # Kahan compensation
    power = y
    for n, z in enumerate(_ZETA_EVEN, start=1):
        power *= q
        term = z * power / (n * (2 * n + 1))
        t = total + (term - comp)
        comp = (t - total) - (term - comp)
        total = t
        if term < 1e-18 * max(1.0, abs(total)):
            break
    return sign * (y - y * math.log(2.0 * y) + total)


def theta(angles: Angles) -> float:
    """Auxiliary angle theta in [0, pi/2) of the volume formula."""
    rad = (math.cos(angles.a12) ** 2
           - math.sin(angles.a01) ** 2 * math.sin(angles.a23) ** 2)
    if rad < 0.0:
        if rad < -1e-12:
            raise ThetaUndefined(f"negative radicand {rad:.3e}")
        rad = 0.0
    return math.atan2(math.sqrt(rad),
                      math.cos(angles.a01) * math.cos(angles.a23))


def orthoscheme_volume(angles: Angles) -> float:
    """Volume of the orthoscheme with the given essential angles."""
    th = theta(angles)
    half = math.pi / 2
    L = lobachevsky
    return (L(angles.a01 + th) - L(angles.a01 - th)
            + L(half + angles.a12 - th) + L(half - angles.a12 - th)
            + L(angles.a23 + th) - L(angles.a23 - th)
            + 2.0 * L(half - th)) / 4.0


def volume_of(params: OrthoParams) -> float:
    """Orthoscheme volume straight from a parameter triple."""
    return orthoscheme_volume(angles_for(params))


def ball_volume(r: float) -> float:
    """Volume pi (sinh 2r - 2r) of a ball of radius r."""
    if r < 0:
        raise NegativeRadius(f"radius {r} is negative")
    return math.pi * (math.sinh(2.0 * r) - 2.0 * r)
