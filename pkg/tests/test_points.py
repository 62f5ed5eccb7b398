"""Truncation points, edge midpoints, and foot points with their norms."""
import math

import numpy as np
import pytest

from orthoball import (DegeneratePlane, NotTruncated, OrthoParams,
                       PointClass, bilinear, classify, configure, dist_pp,
                       dist_pplane, foot_point, gram, midpoint_K, midpoints,
                       poles, truncation_points_a0, truncation_points_a3,
                       vertices)

INF = math.inf


def test_a3_truncation_requires_outer_vertex():
    with pytest.raises(NotTruncated):
        truncation_points_a3(gram(OrthoParams(5, 3, 5)))
    with pytest.raises(NotTruncated):
        truncation_points_a0(gram(OrthoParams(5, 3, 5)))


def test_a3_truncation_points():
    g = gram(OrthoParams(7, 3, 3))
    pts = truncation_points_a3(g)
    assert set(pts) == {"J", "E", "Q"}
    a3 = vertices(g)[3]
    for pt in pts.values():
        # closed-form norm against the realized vector
        assert bilinear(pt.vec, pt.vec) == pytest.approx(pt.norm, abs=1e-10)
        # each cut point is conjugate to A3, i.e. lies on pol(A3)
        assert abs(bilinear(pt.vec, a3)) <= 1e-10
    assert pts["Q"].norm == pytest.approx(g.a[2, 2] / g.a[3, 3], abs=1e-12)
    assert pts["Q"].norm < 0
    assert pts["E"].norm == pytest.approx(1.0 / (g.B * g.a[3, 3]), abs=1e-12)


def test_a0_truncation_points():
    g = gram(OrthoParams(3, 3, INF))
    pts = truncation_points_a0(g)
    assert set(pts) == {"C", "L", "H"}
    a0 = vertices(g)[0]
    for pt in pts.values():
        assert bilinear(pt.vec, pt.vec) == pytest.approx(pt.norm, abs=1e-10)
        assert abs(bilinear(pt.vec, a0)) <= 1e-10
    sv2 = math.sin(math.pi / 3) ** 2
    assert pts["H"].norm == pytest.approx(sv2 / (g.B * g.a[0, 0]), abs=1e-12)
    assert pts["H"].norm < 0


def test_truncation_norm_mirror(sweep_triples):
    """0,1 <-> 3,2 relabeling maps the A0 cut points to the A3 ones."""
    pairs = (("C", "Q"), ("L", "E"), ("H", "J"))
    for params in sweep_triples:
        if configure(params).a3_class is not PointClass.OUTER:
            continue
        there = truncation_points_a3(gram(params))
        back = truncation_points_a0(gram(params.swapped()))
        for a0_tag, a3_tag in pairs:
            assert back[a0_tag].norm == pytest.approx(there[a3_tag].norm,
                                                      abs=1e-10)


def test_midpoints():
    g = gram(OrthoParams(5, 3, 5))
    pts = midpoints(g)
    verts = vertices(g)
    f03, f12 = pts["F03"], pts["F12"]
    assert np.allclose(f03.vec, verts[0] + verts[3])
    assert f03.norm < 0 and f12.norm < 0
    assert bilinear(f03.vec, f03.vec) == pytest.approx(f03.norm, abs=1e-10)
    assert bilinear(f12.vec, f12.vec) == pytest.approx(f12.norm, abs=1e-10)
    d = dist_pp(verts[3], f03.vec)
    assert d == pytest.approx(0.95142, abs=1e-4)
    assert d == pytest.approx(0.5 * dist_pp(verts[0], verts[3]), abs=1e-12)
    assert 0.5 * 1.90285 == pytest.approx(d, abs=1e-4)


def test_midpoint_norms_on_symmetric_triples(sweep_triples):
    for params in sweep_triples:
        if not params.symmetric:
            continue
        g = gram(params)
        pts = midpoints(g)
        # F03 reaches the absolute exactly when v is infinite; F12 never does
        if params.v == INF:
            assert pts["F03"].norm == pytest.approx(0.0, abs=1e-12)
        else:
            assert pts["F03"].norm < 0
        assert pts["F12"].norm < 0
        for pt in pts.values():
            assert bilinear(pt.vec, pt.vec) == pytest.approx(pt.norm,
                                                             abs=1e-10)


def test_midpoint_k():
    g = gram(OrthoParams(7, 3, 3))
    verts = vertices(g)
    q = truncation_points_a3(g)["Q"]
    k = midpoint_K(g, verts, q.vec)
    want = -2.0 * (1.0 + math.sqrt(1.0 / g.a[3, 3]))
    assert k.norm == pytest.approx(want, abs=1e-12)
    assert bilinear(k.vec, k.vec) == pytest.approx(k.norm, abs=1e-10)
    assert classify(k.vec) is PointClass.PROPER
    assert dist_pp(verts[2], k.vec) == pytest.approx(
        dist_pp(k.vec, q.vec), abs=1e-10)


def test_midpoint_k_proper_whenever_defined(sweep_triples):
    seen = 0
    for params in sweep_triples:
        if configure(params).a3_class is not PointClass.OUTER:
            continue
        if params.u == INF:
            continue
        g = gram(params)
        verts = vertices(g)
        q = truncation_points_a3(g)["Q"]
        k = midpoint_K(g, verts, q.vec)
        assert classify(k.vec) is PointClass.PROPER
        seen += 1
    assert seen > 0


def test_midpoint_k_undefined():
    g = gram(OrthoParams(5, 3, 5))
    verts = vertices(g)
    with pytest.raises(NotTruncated):
        midpoint_K(g, verts, verts[2])
    # u = inf pushes A2 onto the absolute, so the segment has no midpoint
    g = gram(OrthoParams(INF, 3, 3))
    q = truncation_points_a3(g)["Q"]
    with pytest.raises(NotTruncated):
        midpoint_K(g, vertices(g), q.vec)


def test_foot_point_formula():
    for triple in ((5, 3, 5), (7, 3, 4)):
        params = OrthoParams(*triple)
        g = gram(params)
        verts = vertices(g)
        f12 = midpoints(g)["F12"].vec
        foot = foot_point(f12, poles(g)[2])
        want = (1.0 + math.cos(math.pi / params.v)) * verts[1] + \
            math.cos(math.pi / params.w) * verts[3]
        # projective comparison: normalize on the largest component
        i = int(np.argmax(np.abs(want)))
        assert np.allclose(foot / foot[i], want / want[i], atol=1e-9)
        assert abs(bilinear(foot, poles(g)[2])) <= 1e-10
        d = dist_pp(f12, foot)
        assert d == pytest.approx(dist_pplane(f12, poles(g)[2]), abs=1e-10)


def test_foot_point_idempotent_and_incidence():
    g = gram(OrthoParams(5, 3, 5))
    plane = poles(g)[2]
    x = vertices(g)[1]
    foot = foot_point(x, plane)
    again = foot_point(foot, plane)
    assert np.allclose(again, foot, atol=1e-12)
    on_plane = foot_point(x, plane)
    assert np.allclose(foot_point(on_plane, plane), on_plane, atol=1e-12)
    with pytest.raises(DegeneratePlane):
        foot_point(x, np.array([1.0, 1.0, 0.0, 0.0]))


def test_canonical_points_are_memoized():
    g1 = gram(OrthoParams(7, 3, 3))
    g2 = gram(OrthoParams(7, 3, 3))
    assert truncation_points_a3(g1) is truncation_points_a3(g2)
    assert midpoints(g1) is midpoints(g2)
