"""Packing and covering density cases of the truncated orthoscheme.

Every case names a ball centre (a vertex, an edge midpoint, or a truncation
point), a list of candidate distances whose min (packing) or max (covering)
is the optimal radius, and a stabilizer order.  Candidate distances are the
published closed forms: each candidate point is a fixed linear combination of
the vertex vectors a_0..a_3 with coefficients drawn from the entries a_ij, so
cosh/sinh values reduce to entry arithmetic p^T a r without ever realizing
coordinates.  verify_radius recomputes every candidate through the generic
Lorentz distance oracles on actually realized vectors.

Applicability gating is strict and exact: each case carries the inequality
regime of its source table as comparisons of the rational angle-sum excesses
1/u + 1/v - 1/2 and 1/v + 1/w - 1/2 against zero.
"""
from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

import numpy as np

from . import points as points_mod
from .errors import (CaseInapplicable, CoveringUndefined, InfiniteStabilizer,
                     NotSymmetric)
from .lorentz import dist_pp, dist_pplane
from .orthoscheme import (GramPair, OrthoParams, excesses, gram, poles,
                          vertices)
from .volume import angles_for, ball_volume, orthoscheme_volume

INF = math.inf

MODES = ("packing", "covering")


# ------------------------------------------------------------------ types

@dataclasses.dataclass(frozen=True)
class CentreCase:
    """Static description of one density case."""

    case_id: str
    centre: str
    requires_symmetric: bool
    requires_a3_outer: bool
    requires_a0_outer: bool
    # gate operators for the two excesses, per mode: ">", ">=", or "<"
    packing_gate: tuple[str, str]
    covering_gate: tuple[str, str]
    # candidates: (witness, kind, payload); kind "pp"/"pphalf" with a point
    # name, "plane" with a face index, "pol3" for the polar plane of A3
    packing_candidates: tuple[tuple[str, str, object], ...]
    covering_candidates: tuple[tuple[str, str, object], ...]

    @property
    def stab_letter(self) -> str:
        return self.case_id.rsplit(".", 1)[1]

    @property
    def halved(self) -> bool:
        return ".s." in f".{self.case_id}."


@dataclasses.dataclass(frozen=True)
class StabOrder:
    """Stabilizer order of a ball centre, with the u = w halving flag."""

    value: Fraction
    halved: bool

    @property
    def effective(self) -> Fraction:
        return self.value / 2 if self.halved else self.value


@dataclasses.dataclass(frozen=True)
class CaseResult:
    """One evaluated (parameters, case, mode) row."""

    params: OrthoParams
    case_id: str
    mode: str
    radius: float
    vol_w: float
    vol_ball: float
    stab: StabOrder
    density: float
    radius_witness: str


@dataclasses.dataclass(frozen=True)
class VerifyEntry:
    witness: str
    closed_form: float
    oracle: float

    @property
    def deviation(self) -> float:
        return abs(self.closed_form - self.oracle)


@dataclasses.dataclass(frozen=True)
class VerifyReport:
    params: OrthoParams
    case_id: str
    mode: str
    entries: tuple[VerifyEntry, ...]

    @property
    def max_abs_deviation(self) -> float:
        return max(e.deviation for e in self.entries)


# ----------------------------------------------------------------- registry

def _case(case_id, centre, pgate, cgate, pcands, ccands) -> CentreCase:
    return CentreCase(
        case_id=case_id,
        centre=centre,
        requires_symmetric=".s." in f".{case_id}.",
        requires_a3_outer=pgate[0] == "<",
        requires_a0_outer=pgate[1] == "<",
        packing_gate=pgate,
        covering_gate=cgate,
        packing_candidates=tuple(pcands),
        covering_candidates=tuple(ccands),
    )


CASES: dict[str, CentreCase] = {c.case_id: c for c in (
    _case("1.i.a", "A3", (">", ">="), (">=", ">"),
          [("A3A2", "pp", "A2")],
          [("A3A0", "pp", "A0")]),
    _case("1.s.i.a", "A3", (">", ">="), (">=", ">"),
          [("A3A2", "pp", "A2"), ("A3F03", "pp", "F03")],
          [("A3F12", "pp", "F12")]),
    _case("1.i.b", "A2", (">=", ">="), (">=", ">"),
          [("A2b2", "plane", 2)],
          [("A2A3", "pp", "A3"), ("A2A0", "pp", "A0")]),
    _case("1.s.i.b", "A2", (">=", ">="), (">=", ">="),
          [("A2b2", "plane", 2), ("A2F12", "pp", "F12")],
          [("A2A3", "pp", "A3"), ("A2F03", "pp", "F03")]),
    # the covering regime of the c-case table is printed stricter than its
    # packing twin; the packing-side regime is used for both and boundary
    # rows surface as CoveringUndefined instead of being skipped
    _case("1.s.i.c", "F03", (">=", ">="), (">=", ">="),
          [("F03b0", "plane", 0)],
          [("F03A3", "pp", "A3"), ("F03A2", "pp", "A2")]),
    # no published table: gated like the other symmetric proper-vertex cases
    _case("1.s.i.d", "F12", (">=", ">="), (">=", ">="),
          [("F12b1", "plane", 1), ("F12b2", "plane", 2)],
          [("F12A3", "pp", "A3")]),
    _case("1.ii.a", "A3", (">", "<"), (">", "<"),
          [("A3A2", "pp", "A2"), ("A3H", "pp", "H")],
          [("A3C", "pp", "C")]),
    _case("1.ii.b", "A2", (">=", "<"), (">", "<"),
          [("A2b2", "plane", 2), ("A2L", "pp", "L")],
          [("A2C", "pp", "C"), ("A2A3", "pp", "A3"), ("A2H", "pp", "H")]),
    _case("2.i.b", "A2", ("<", ">="), ("<", ">"),
          [("A2b2", "plane", 2), ("A2a3", "pol3", None)],
          [("A2A0", "pp", "A0"), ("A2J", "pp", "J")]),
    _case("2.ii.b", "A2", ("<", "<"), ("<", "<"),
          [("A2b2", "plane", 2), ("A2Q", "pp", "Q"), ("A2L", "pp", "L")],
          [("A2C", "pp", "C"), ("A2H", "pp", "H"), ("A2J", "pp", "J")]),
    _case("2.s.ii.b", "A2", ("<", "<"), ("<", "<"),
          [("A2b2", "plane", 2), ("A2Q", "pp", "Q"), ("A2F12", "pp", "F12")],
          [("A2J", "pp", "J"), ("A2F03", "pp", "F03")]),
    _case("2.s.ii.c", "F03", ("<", "<"), ("<", "<"),
          [("F03b0", "plane", 0), ("F03J", "pp", "J")],
          [("F03A2", "pp", "A2"), ("F03Q", "pp", "Q")]),
    # no published table: gated like the other symmetric outer-vertex cases
    _case("2.s.ii.d", "F12", ("<", "<"), ("<", "<"),
          [("F12b1", "plane", 1), ("F12a3", "pol3", None)],
          [("F12J", "pp", "J"), ("F12Q", "pp", "Q")]),
    _case("2.s.ii.e", "Q", ("<", "<"), ("<", "<"),
          [("QA2", "pp", "A2"), ("QE", "pp", "E"), ("QC/2", "pphalf", "C")],
          [("QF03", "pp", "F03"), ("QF12", "pp", "F12")]),
)}


# ------------------------------------------------- entry-level closed forms

def _coef(name: str, a: np.ndarray) -> np.ndarray:
    """Coefficients of a named point in the vertex basis a_0..a_3."""
    if name == "A0":
        return np.array([1.0, 0.0, 0.0, 0.0])
    if name == "A1":
        return np.array([0.0, 1.0, 0.0, 0.0])
    if name == "A2":
        return np.array([0.0, 0.0, 1.0, 0.0])
    if name == "A3":
        return np.array([0.0, 0.0, 0.0, 1.0])
    if name == "F03":
        return np.array([1.0, 0.0, 0.0, 1.0])
    if name == "F12":
        return np.array([0.0, 1.0, 1.0, 0.0])
    if name == "C":
        return np.array([-a[0, 1] / a[0, 0], 1.0, 0.0, 0.0])
    if name == "L":
        return np.array([-a[0, 2] / a[0, 0], 0.0, 1.0, 0.0])
    if name == "H":
        return np.array([-a[0, 3] / a[0, 0], 0.0, 0.0, 1.0])
    if name == "J":
        return np.array([1.0, 0.0, 0.0, -a[0, 3] / a[3, 3]])
    if name == "E":
        return np.array([0.0, 1.0, 0.0, -a[1, 3] / a[3, 3]])
    if name == "Q":
        return np.array([0.0, 0.0, 1.0, -a[2, 3] / a[3, 3]])
    raise KeyError(name)


def _pair(a: np.ndarray, p: np.ndarray, r: np.ndarray) -> float:
    return float(p @ a @ r)


def _closed_pp(a: np.ndarray, p: np.ndarray, r: np.ndarray) -> float:
    c = abs(_pair(a, p, r)) / math.sqrt(_pair(a, p, p) * _pair(a, r, r))
    return math.acosh(max(1.0, c))


def _closed_plane(a: np.ndarray, p: np.ndarray, face: int) -> float:
    # <x, b^face> equals the face-th coefficient; the pole form has unit norm
    return math.asinh(abs(float(p[face])) / math.sqrt(-_pair(a, p, p)))


def _closed_pol3(a: np.ndarray, p: np.ndarray) -> float:
    # polar plane of A3 has form vector a_3 with norm a33 > 0
    num = abs(float((a @ p)[3]))
    return math.asinh(num / math.sqrt(-_pair(a, p, p) * a[3, 3]))


def _point_class(params: OrthoParams, name: str) -> str:
    """Exact class of a named point: 'proper', 'boundary', or 'outer'."""
    e1, e2 = excesses(params)
    if name == "A3":
        return "proper" if e1 > 0 else ("boundary" if e1 == 0 else "outer")
    if name == "A0":
        return "proper" if e2 > 0 else ("boundary" if e2 == 0 else "outer")
    if name in ("A2", "Q"):
        return "boundary" if params.u == INF else "proper"
    if name in ("A1", "C"):
        return "boundary" if params.w == INF else "proper"
    if name in ("J", "H", "F03"):
        return "boundary" if params.v == INF else "proper"
    if name in ("L", "E", "F12", "K"):
        return "proper"
    raise KeyError(name)


# --------------------------------------------------------------- stabilizer

def stabilizer(params: OrthoParams, case_id: str) -> StabOrder:
    """Stabilizer order of the case's centre.

    Accepts a full case id or a bare centre-case letter a..h; the halving
    flag is set exactly for the symmetric (".s.") case ids.
    """
    letter = case_id.rsplit(".", 1)[-1]
    halved = ".s." in f".{case_id}."
    u, v = params.u, params.v
    if letter == "a":
        if u == INF or v == INF:
            raise InfiniteStabilizer("vertex centre lies on the absolute")
        den = 4 - (int(u) - 2) * (int(v) - 2)
        if den <= 0:
            raise InfiniteStabilizer(
                "vertex stabilizer denominator is not positive")
        return StabOrder(Fraction(8 * int(u) * int(v), den), halved)
    if letter in ("b", "e"):
        if u == INF:
            raise InfiniteStabilizer("stabilizer order 4u diverges")
        return StabOrder(Fraction(4 * int(u)), halved)
    if letter in ("c", "f"):
        if v == INF:
            raise InfiniteStabilizer("stabilizer order 4v diverges")
        return StabOrder(Fraction(4 * int(v)), halved)
    if letter in ("d", "g"):
        return StabOrder(Fraction(8), halved)
    if letter == "h":
        if u == INF:
            raise InfiniteStabilizer("stabilizer order 2u diverges")
        return StabOrder(Fraction(2 * int(u)), halved)
    raise KeyError(f"unknown centre-case letter {letter!r}")


# --------------------------------------------------------------- evaluation

def _gate_ok(params: OrthoParams, gate: tuple[str, str]) -> bool:
    for e, op in zip(excesses(params), gate):
        if op == ">" and not e > 0:
            return False
        if op == ">=" and not e >= 0:
            return False
        if op == "<" and not e < 0:
            return False
    return True


def _checked(params: OrthoParams, case_id: str, mode: str
             ) -> tuple[CentreCase, GramPair, StabOrder]:
    """Run the shared applicability checks in their contractual order."""
    case = CASES[case_id]
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if case.requires_symmetric and not params.symmetric:
        raise NotSymmetric(f"case {case_id} requires u = w")
    g = gram(params)  # raises NotHyperbolic outside the hyperbolic range
    gate = case.packing_gate if mode == "packing" else case.covering_gate
    if not _gate_ok(params, gate):
        raise CaseInapplicable(
            f"{params} is outside the {mode} regime of case {case_id}")
    ccls = _point_class(params, case.centre)
    if mode == "covering":
        # a centre on the absolute pushes every covering radius to infinity;
        # report that before the stabilizer, which typically diverges too
        if ccls == "boundary":
            raise CoveringUndefined(
                f"centre {case.centre} is a boundary point")
        if ccls == "outer":
            raise CaseInapplicable(f"centre {case.centre} is an outer point")
    stab = stabilizer(params, case_id)
    if mode == "packing" and ccls != "proper":
        raise CaseInapplicable(f"centre {case.centre} is {ccls}")
    return case, g, stab


def _candidates(case: CentreCase, mode: str):
    return (case.packing_candidates if mode == "packing"
            else case.covering_candidates)


def _candidate_distances(params: OrthoParams, case: CentreCase, g: GramPair,
                         mode: str) -> list[tuple[str, float]]:
    a = g.a
    centre = _coef(case.centre, a)
    out = []
    for witness, kind, payload in _candidates(case, mode):
        if kind in ("pp", "pphalf"):
            pcls = _point_class(params, payload)
            if pcls != "proper":
                if mode == "covering":
                    raise CoveringUndefined(
                        f"candidate {witness} endpoint is a {pcls} point")
                raise CaseInapplicable(
                    f"candidate {witness} endpoint is a {pcls} point")
            d = _closed_pp(a, centre, _coef(payload, a))
            if kind == "pphalf":
                d *= 0.5
        elif kind == "plane":
            d = _closed_plane(a, centre, payload)
        else:  # "pol3"
            d = _closed_pol3(a, centre)
        out.append((witness, d))
    return out


def _pick(dists: list[tuple[str, float]], mode: str) -> tuple[str, float]:
    # strict comparisons keep the first witness in printed order on ties
    best_name, best = dists[0]
    for name, d in dists[1:]:
        if (mode == "packing" and d < best) or \
           (mode == "covering" and d > best):
            best_name, best = name, d
    return best_name, best


def radius(params: OrthoParams, case_id: str, mode: str
           ) -> tuple[float, str]:
    """Optimal ball radius of the case and the name of the distance
    realizing it (min over candidates for packing, max for covering)."""
    case, g, _ = _checked(params, case_id, mode)
    dists = _candidate_distances(params, case, g, mode)
    name, value = _pick(dists, mode)
    return value, name


def evaluate(params: OrthoParams, case_id: str, mode: str) -> CaseResult:
    """Full evaluation: radius, volumes, stabilizer, and density."""
    case, g, stab = _checked(params, case_id, mode)
    dists = _candidate_distances(params, case, g, mode)
    name, value = _pick(dists, mode)
    vol_w = orthoscheme_volume(angles_for(params))
    vol_b = ball_volume(value)
    density = vol_b / (float(stab.effective) * vol_w)
    return CaseResult(params=params, case_id=case_id, mode=mode,
                      radius=value, vol_w=vol_w, vol_ball=vol_b, stab=stab,
                      density=density, radius_witness=name)


# ------------------------------------------------------------- verification

def _realized_point(g: GramPair, name: str) -> np.ndarray:
    verts = vertices(g)
    if name in ("A0", "A1", "A2", "A3"):
        return verts[int(name[1])]
    if name in ("F03", "F12"):
        return points_mod.midpoints(g)[name].vec
    if name in ("C", "L", "H"):
        return points_mod.truncation_points_a0(g)[name].vec
    if name in ("J", "E", "Q"):
        return points_mod.truncation_points_a3(g)[name].vec
    raise KeyError(name)


def verify_radius(params: OrthoParams, case_id: str, mode: str
                  ) -> VerifyReport:
    """Recompute every candidate distance through the generic oracles.

    The closed forms run on Gram entries alone; the oracles run on realized
    coordinate vectors.  The report lists both values per candidate.
    """
    case, g, _ = _checked(params, case_id, mode)
    closed = dict(_candidate_distances(params, case, g, mode))
    centre_vec = _realized_point(g, case.centre)
    pole_rows = poles(g)
    entries = []
    for witness, kind, payload in _candidates(case, mode):
        if kind == "pp":
            oracle = dist_pp(centre_vec, _realized_point(g, payload))
        elif kind == "pphalf":
            oracle = 0.5 * dist_pp(centre_vec, _realized_point(g, payload))
        elif kind == "plane":
            oracle = dist_pplane(centre_vec, pole_rows[payload])
        else:  # "pol3": the polar plane's form vector is a_3 itself
            oracle = dist_pplane(centre_vec, vertices(g)[3])
        entries.append(VerifyEntry(witness=witness,
                                   closed_form=closed[witness],
                                   oracle=oracle))
    return VerifyReport(params=params, case_id=case_id, mode=mode,
                        entries=tuple(entries))
