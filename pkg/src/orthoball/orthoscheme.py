"""Coxeter-Schlafli matrix of the (u,v,w) orthoscheme and derived data.

The face-form Gram matrix b is tridiagonal with unit diagonal and off-diagonal
entries -cos(pi/u), -cos(pi/v), -cos(pi/w).  Its inverse a carries the vertex
form values <a_i,a_j> = a_ij and is built from the closed form scaled by
1/B, B = sin^2(pi/u) sin^2(pi/w) - cos^2(pi/v) < 0 in the hyperbolic range.

Parameters are integers >= 3 or math.inf, with the exact limit values
sin(pi/inf) = 0 and cos(pi/inf) = 1 substituted before any matrix is built.
Boundary decisions use exact rational angle-sum comparisons, never the
floating sign of a matrix entry.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from fractions import Fraction

import numpy as np

from .errors import FactorizationFailed, NotHyperbolic
from .lorentz import PointClass, bilinear, invert4

INF = math.inf

# allowed configuration labels
_LABELS = {"1.i", "1.s.i", "1.ii", "2.i", "2.ii", "2.s.ii"}


def _check_param(name: str, value) -> float:
    if value == INF:
        return INF
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer >= 3 or inf, got {value!r}")
    if value < 3:
        raise ValueError(f"{name} must be >= 3, got {value}")
    return value


@dataclasses.dataclass(frozen=True)
class OrthoParams:
    """Parameter triple (u, v, w); each an integer >= 3 or math.inf."""

    u: float
    v: float
    w: float

    def __post_init__(self) -> None:
        for name in ("u", "v", "w"):
            _check_param(name, getattr(self, name))

    @property
    def symmetric(self) -> bool:
        return self.u == self.w

    def swapped(self) -> "OrthoParams":
        return OrthoParams(self.w, self.v, self.u)


def cos_pi_over(n: float) -> float:
    """cos(pi/n) with the exact limit cos(pi/inf) = 1."""
    return 1.0 if n == INF else math.cos(math.pi / n)


def sin2_pi_over(n: float) -> float:
    """sin^2(pi/n) with the exact limit sin(pi/inf) = 0."""
    return 0.0 if n == INF else math.sin(math.pi / n) ** 2


def _inv_frac(n: float) -> Fraction:
    return Fraction(0) if n == INF else Fraction(1, int(n))


def excesses(params: OrthoParams) -> tuple[Fraction, Fraction]:
    """Exact angle-sum excesses (1/u + 1/v - 1/2, 1/v + 1/w - 1/2).

    The sign of the first decides the class of vertex A3, the second of A0:
    positive means proper, zero boundary, negative outer.
    """
    half = Fraction(1, 2)
    return (_inv_frac(params.u) + _inv_frac(params.v) - half,
            _inv_frac(params.v) + _inv_frac(params.w) - half)


@dataclasses.dataclass
class GramPair:
    """Face-form matrix b, vertex matrix a = b^{-1}, and the scalar B."""

    params: OrthoParams
    b: np.ndarray
    a: np.ndarray
    B: float


@dataclasses.dataclass(frozen=True)
class Configuration:
    """Vertex classes and the configuration label of a parameter triple."""

    a0_class: PointClass
    a3_class: PointClass
    symmetric: bool
    label: str


def gram(params: OrthoParams) -> GramPair:
    """Build b and its closed-form inverse a, checking hyperbolicity.

    The closed form is cross-checked against the numeric inverse on every
    call; entrywise agreement to 1e-12 is part of the contract.
    """
    cu, cv, cw = (cos_pi_over(params.u), cos_pi_over(params.v),
                  cos_pi_over(params.w))
    su2, sw2 = sin2_pi_over(params.u), sin2_pi_over(params.w)
    B = su2 * sw2 - cv * cv
    # the guard band absorbs rounding in exactly-degenerate triples such as
    # (4,3,4), whose B is zero in exact arithmetic
    if B >= -1e-12:
        raise NotHyperbolic(
            f"sin(pi/u) sin(pi/w) >= cos(pi/v) for {params}")
    b = np.array([
        [1.0, -cu, 0.0, 0.0],
        [-cu, 1.0, -cv, 0.0],
        [0.0, -cv, 1.0, -cw],
        [0.0, 0.0, -cw, 1.0],
    ])
    a = np.array([
        [sw2 - cv * cv, cu * sw2, cu * cv, cu * cv * cw],
        [cu * sw2, sw2, cv, cw * cv],
        [cu * cv, cv, su2, cw * su2],
        [cu * cv * cw, cw * cv, cw * su2, su2 - cv * cv],
    ]) / B
    numeric = invert4(b)
    err = float(np.max(np.abs(a - numeric)))
    if err > 1e-12:
        raise FactorizationFailed(
            f"closed-form inverse deviates from numeric inverse by {err:.3e}")
    return GramPair(params=params, b=b, a=a, B=B)


@functools.lru_cache(maxsize=None)
def _realized(params: OrthoParams) -> tuple[np.ndarray, np.ndarray]:
    """Concrete vertex vectors (rows) and pole forms (rows) for params.

    The vertex matrix M solves M J M^T = a for J = diag(-1,1,1,1).  It is
    produced from the eigendecomposition of a with the time-like eigenvector
    first; any factorization with the right form values is acceptable since
    every exported quantity depends only on <.,.> values.
    """
    g = gram(params)
    vals, vecs = np.linalg.eigh(g.a)
    # ascending eigenvalues: exactly one negative (time-like) direction
    if not (vals[0] < 0 < vals[1]):
        raise FactorizationFailed(
            f"vertex matrix signature is not (1,3) for {params}: {vals}")
    m = vecs * np.sqrt(np.abs(vals))
    check = np.array([[bilinear(m[i], m[j]) for j in range(4)]
                      for i in range(4)])
    if float(np.max(np.abs(check - g.a))) > 1e-10:
        raise FactorizationFailed(
            f"factorization residual exceeds 1e-10 for {params}")
    poles_m = g.b @ m
    return m, poles_m


def vertices(g: GramPair) -> np.ndarray:
    """Vertex vectors a_0..a_3 as rows, with <a_i,a_j> = a_ij to 1e-10."""
    return _realized(g.params)[0]


def poles(g: GramPair) -> np.ndarray:
    """Pole forms b^0..b^3 as rows, with <b^i, a_j> = delta_ij to 1e-10."""
    return _realized(g.params)[1]


def configure(params: OrthoParams) -> Configuration:
    """Classify the principal vertices and name the configuration."""
    e1, e2 = excesses(params)

    def cls(e: Fraction) -> PointClass:
        if e > 0:
            return PointClass.PROPER
        if e == 0:
            return PointClass.BOUNDARY
        return PointClass.OUTER

    a3, a0 = cls(e1), cls(e2)
    label = "2" if a3 is PointClass.OUTER else "1"
    if params.symmetric:
        label += ".s"
    label += ".ii" if a0 is PointClass.OUTER else ".i"
    assert label in _LABELS, label
    return Configuration(a0_class=a0, a3_class=a3,
                         symmetric=params.symmetric, label=label)
