"""Shared fixtures: the standard parameter grid and quadrature oracles."""
import math

import pytest

from orthoball import NotHyperbolic, OrthoParams, gram

ORDERS = tuple(range(3, 10)) + (math.inf,)


def hyperbolic_triples():
    out = []
    for u in ORDERS:
        for v in ORDERS:
            for w in ORDERS:
                params = OrthoParams(u, v, w)
                try:
                    gram(params)
                except NotHyperbolic:
                    continue
                out.append(params)
    return out


@pytest.fixture(scope="session")
def sweep_triples():
    """Every hyperbolic triple with orders in 3..9 or inf."""
    return hyperbolic_triples()


@pytest.fixture(scope="session")
def lob_quad():
    """Adaptive-quadrature oracle for the Lobachevsky function.

    Splits off the endpoint log singularity analytically so the remaining
    integrand is smooth; accurate to about 1e-12.
    """
    from scipy.integrate import quad

    def oracle(x: float) -> float:
        y = math.fmod(x, math.pi)
        if y < 0.0:
            y += math.pi
        sign = 1.0
        if y > math.pi / 2.0:
            y = math.pi - y
            sign = -1.0
        if y == 0.0:
            return 0.0
        # log(2 sin t) = log(2t) + log(sin t / t); the second part is smooth
        smooth, _ = quad(
            lambda t: math.log(math.sin(t) / t) if t > 0.0 else 0.0,
            0.0, y, epsabs=1e-14, epsrel=1e-12, limit=200)
        return sign * -(y * math.log(2.0 * y) - y + smooth)

    return oracle
