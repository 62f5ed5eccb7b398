"""Ball packing and covering densities of complete hyperbolic orthoschemes.

The package models the three-parameter family of orthoschemes with branch
orders (u, v, w), truncates vertices that fall outside the unit ball model,
and measures the optimal ball packings and coverings whose centres sit at
the distinguished points of the fundamental domain.
"""
from .cases import (CASES, CaseResult, CentreCase, StabOrder, VerifyReport,
                    evaluate, radius, stabilizer, verify_radius)
from .errors import (CaseInapplicable, CoveringUndefined, DatasetMissing,
                     DegeneratePlane, EmptySweep, FactorizationFailed,
                     InfiniteStabilizer, NegativeRadius, NotHyperbolic,
                     NotProper, NotSymmetric, NotTruncated, OrthoBallError,
                     Singular, ThetaUndefined, ZeroVector)
from .lorentz import PointClass, bilinear, classify, dist_pp, dist_pplane
from .orthoscheme import (Configuration, GramPair, OrthoParams, configure,
                          excesses, gram, poles, vertices)
from .points import (EssentialPoint, foot_point, midpoint_K, midpoints,
                     truncation_points_a0, truncation_points_a3)
from .survey import (Extrema, RegenReport, find_extrema, load_reference,
                     parse_sweep, regen_tables, run_single, sweep_rows)
from .volume import (Angles, angles_for, ball_volume, lobachevsky,
                     orthoscheme_volume, theta, volume_of)

__version__ = "0.1.0"

__all__ = [
    "CASES", "Angles", "CaseInapplicable", "CaseResult", "CentreCase",
    "Configuration", "CoveringUndefined", "DatasetMissing",
    "DegeneratePlane", "EmptySweep", "EssentialPoint", "Extrema",
    "FactorizationFailed", "GramPair", "InfiniteStabilizer",
    "NegativeRadius", "NotHyperbolic", "NotProper", "NotSymmetric",
    "NotTruncated", "OrthoBallError", "OrthoParams", "PointClass",
    "RegenReport", "Singular", "StabOrder", "ThetaUndefined", "VerifyReport",
    "ZeroVector", "angles_for", "ball_volume", "bilinear", "classify",
    "configure", "dist_pp", "dist_pplane", "evaluate", "excesses",
    "find_extrema", "foot_point", "gram", "load_reference", "lobachevsky",
    "midpoint_K", "midpoints", "orthoscheme_volume", "parse_sweep", "poles",
    "radius", "regen_tables", "run_single", "stabilizer", "sweep_rows",
    "theta", "truncation_points_a0", "truncation_points_a3", "verify_radius",
    "vertices", "volume_of",
]
