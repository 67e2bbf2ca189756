import numpy as np
import pytest

from embsum.bounds import arc_graph, resolved_components
from embsum.torus import (
    GeometryError,
    NonTransversalError,
    TorusCurve,
    count_components,
    find_crossings,
    geodesic_curve,
    orientation_consistent,
    parallel_copies,
    resolve_crossings,
    torus_dist,
    wavy_curve,
)


def test_torus_dist_wraps():
    np.testing.assert_allclose(torus_dist([0.05, 0.0], [0.95, 0.0]), 0.1,
                               atol=1e-12)
    np.testing.assert_allclose(torus_dist([0.5, 0.98], [0.5, 0.03]), 0.05,
                               atol=1e-12)
    assert torus_dist([0.3, 0.7], [0.3, 0.7]) == 0.0


def test_curve_displacement_and_class():
    c = geodesic_curve((2, 3), ident="g")
    np.testing.assert_array_equal(c.displacement, [2, 3])
    assert c.homology_class() == (2, 3)
    assert c.n_segments == 1
    r = c.reversed()
    assert r.homology_class() == (-2, -3)


def test_curve_point_at():
    c = geodesic_curve((1, 0), base=(0.0, 0.25))
    np.testing.assert_allclose(c.point_at(0, 0.5), [0.5, 0.25], atol=1e-12)


def test_curve_rejects_open_polyline():
    with pytest.raises(GeometryError):
        TorusCurve(np.array([[0.0, 0.0], [0.5, 0.3], [1.0, 0.1]]))


def test_curve_rejects_tiny_segment():
    verts = np.array([[0.0, 0.0], [0.5, 0.5], [0.5 + 1e-9, 0.5], [1.0, 1.0]])
    with pytest.raises(GeometryError):
        TorusCurve(verts)


def test_curve_rejects_self_intersection():
    verts = np.array([
        [0.0, 0.2], [0.7, 0.8], [0.2, 0.8], [0.7, 0.2], [1.0, 0.2]])
    with pytest.raises(GeometryError):
        TorusCurve(verts)


def test_geodesic_requires_primitive_class():
    with pytest.raises(GeometryError):
        geodesic_curve((2, 4))


def test_wavy_curve_is_embedded_with_class():
    w = wavy_curve((2, 1), amplitude=0.05, waves=3)
    assert w.homology_class() == (2, 1)


# ----------------------------------------------------------------------------
# Crossings
# ----------------------------------------------------------------------------

def test_single_crossing_of_transverse_geodesics():
    c1 = geodesic_curve((1, 0), base=(0.0, 0.25), ident="c1")
    c2 = geodesic_curve((0, 1), base=(0.25, 0.0), ident="c2")
    crossings = find_crossings(c1, c2)
    assert len(crossings) == 1
    cr = crossings[0]
    np.testing.assert_allclose(cr.point, [0.25, 0.25], atol=1e-12)
    assert cr.sign == 1
    assert cr.ident == "m0"
    np.testing.assert_allclose(cr.angle, np.pi / 2.0, atol=1e-12)


def test_crossing_count_and_signed_sum():
    # the signed crossing count of classes (p1,q1), (p2,q2) is p1*q2 - q1*p2
    cases = [((1, 2), (2, 1)), ((1, 0), (0, 1)), ((1, 4), (4, 1)),
             ((1, 1), (1, -1))]
    for pq1, pq2 in cases:
        c1 = geodesic_curve(pq1, base=(0.0, 0.0), ident="a")
        c2 = geodesic_curve(pq2, base=(0.31, 0.17), ident="b")
        crossings = find_crossings(c1, c2)
        det = pq1[0] * pq2[1] - pq1[1] * pq2[0]
        assert len(crossings) == abs(det)
        assert sum(c.sign for c in crossings) == det


def test_crossing_identifiers_sorted():
    c1 = geodesic_curve((1, 2), ident="a")
    c2 = geodesic_curve((2, 1), base=(0.31, 0.17), ident="b")
    crossings = find_crossings(c1, c2)
    assert [c.ident for c in crossings] == ["m0", "m1", "m2"]
    keys = [(c.seg1, c.t1) for c in crossings]
    assert keys == sorted(keys)


def test_crossing_shift_locates_partner_lift():
    c1 = geodesic_curve((1, 2), ident="a")
    c2 = geodesic_curve((2, 1), base=(0.31, 0.17), ident="b")
    for cr in find_crossings(c1, c2):
        p1 = c1.point_at(cr.seg1, cr.t1)
        p2 = c2.point_at(cr.seg2, cr.t2) + np.asarray(cr.shift, dtype=float)
        np.testing.assert_allclose(p1, p2, atol=1e-9)


def test_orientation_consistency_of_geodesics():
    c1 = geodesic_curve((1, 0), base=(0.0, 0.25))
    c2 = geodesic_curve((0, 1), base=(0.25, 0.0))
    ok, signs = orientation_consistent(c1, c2)
    assert ok and signs == [1]


def test_orientation_inconsistent_zigzag():
    zig = TorusCurve(np.array([
        [0.0, 0.2], [0.7, 0.25], [0.3, 0.35], [1.0, 0.2]]), ident="z")
    vert = geodesic_curve((0, 1), base=(0.5, 0.0), ident="v")
    ok, signs = orientation_consistent(zig, vert)
    assert not ok
    assert sorted(signs) == [-1, 1, 1]
    assert sum(signs) == 1  # class pairing (1,0) x (0,1)


def test_overlapping_curves_rejected():
    c1 = geodesic_curve((1, 0), ident="a")
    c2 = geodesic_curve((1, 0), base=(0.5, 0.0), ident="b")
    with pytest.raises(NonTransversalError):
        find_crossings(c1, c2)


def test_endpoint_touch_rejected():
    c1 = geodesic_curve((1, 0), base=(0.0, 0.5), ident="a")
    c2 = TorusCurve(np.array([[0.0, 0.3], [0.5, 0.5], [1.0, 0.3]]), ident="b")
    with pytest.raises(NonTransversalError):
        find_crossings(c1, c2)


def test_shallow_angle_rejected():
    c1 = geodesic_curve((1, 0), base=(0.0, 0.5), ident="a")
    c2 = TorusCurve(np.array([[0.0, 0.4995], [0.5, 0.5005], [1.0, 0.4995]]),
                    ident="b")
    with pytest.raises(NonTransversalError):
        find_crossings(c1, c2, angle_min=0.01)
    assert len(find_crossings(c1, c2, angle_min=1e-4)) == 2


# ----------------------------------------------------------------------------
# Resolution
# ----------------------------------------------------------------------------

def test_resolve_single_crossing():
    c1 = geodesic_curve((1, 0), base=(0.0, 0.25), ident="c1")
    c2 = geodesic_curve((0, 1), base=(0.25, 0.0), ident="c2")
    res = resolve_crossings(c1, c2)
    assert len(res.curves) == 1
    assert res.curves[0].homology_class() == (1, 1)
    assert res.curves[0].ident == "r0"
    assert res.chamfer > 0.0


def test_resolve_adds_classes():
    c1 = geodesic_curve((1, 2), ident="c1")
    c2 = geodesic_curve((2, 1), base=(0.31, 0.17), ident="c2")
    res = resolve_crossings(c1, c2)
    assert len(res.curves) == 3
    assert all(c.homology_class() == (1, 1) for c in res.curves)
    total = np.sum([c.homology_class() for c in res.curves], axis=0)
    np.testing.assert_array_equal(total, [3, 3])


def test_resolve_disjoint_passthrough():
    c1 = geodesic_curve((1, 0), base=(0.0, 0.2), ident="c1")
    c2 = geodesic_curve((1, 0), base=(0.0, 0.7), ident="c2")
    res = resolve_crossings(c1, c2)
    assert len(res.curves) == 2
    assert res.chamfer == 0.0
    assert [c.ident for c in res.curves] == ["r0", "r1"]


def test_resolve_wavy_pair():
    c1 = wavy_curve((1, 0), base=(0.0, 0.3), amplitude=0.03, ident="c1")
    c2 = wavy_curve((0, 1), base=(0.6, 0.0), amplitude=0.03, waves=1,
                    ident="c2")
    res = resolve_crossings(c1, c2)
    total = np.sum([c.homology_class() for c in res.curves], axis=0)
    np.testing.assert_array_equal(total, [1, 1])


def test_resolution_count_matches_divisibility():
    # resolving geodesics of classes (p1,q1), (p2,q2) yields gcd components
    import math
    for pq1, pq2 in [((1, 2), (2, 1)), ((1, 4), (4, 1)), ((1, 0), (0, 1)),
                     ((1, 3), (1, -1))]:
        c1 = geodesic_curve(pq1, base=(0.0, 0.0), ident="a")
        c2 = geodesic_curve(pq2, base=(0.31, 0.17), ident="b")
        res = resolve_crossings(c1, c2)
        s = (pq1[0] + pq2[0], pq1[1] + pq2[1])
        assert len(res.curves) == math.gcd(abs(s[0]), abs(s[1]))


def test_explicit_chamfer_validation():
    c1 = geodesic_curve((1, 0), base=(0.0, 0.25), ident="c1")
    c2 = geodesic_curve((0, 1), base=(0.25, 0.0), ident="c2")
    with pytest.raises(GeometryError):
        resolve_crossings(c1, c2, chamfer=0.4)
    with pytest.raises(GeometryError):
        resolve_crossings(c1, c2, chamfer=-0.01)
    res = resolve_crossings(c1, c2, chamfer=0.05)
    assert res.chamfer == 0.05


def test_graph_instance_matches_component_count():
    c1 = geodesic_curve((1, 2), ident="c1")
    c2 = geodesic_curve((2, 1), base=(0.31, 0.17), ident="c2")
    res = resolve_crossings(c1, c2)
    inst = res.graph_instance()
    assert inst["schema"] == 1
    assert inst["side1_arcs"] == ["a0", "a1", "a2"]
    assert inst["side2_arcs"] == ["b0", "b1", "b2"]
    graph = arc_graph(inst)
    n = resolved_components(graph, res.graph_choices())
    assert n == len(res.curves)


def test_count_components_of_resolution():
    c1 = geodesic_curve((1, 0), base=(0.0, 0.25), ident="c1")
    c2 = geodesic_curve((0, 1), base=(0.25, 0.0), ident="c2")
    res = resolve_crossings(c1, c2)
    assert count_components(res) == 1


# ----------------------------------------------------------------------------
# Parallel copies
# ----------------------------------------------------------------------------

def test_parallel_copies_counts_and_classes():
    c = geodesic_curve((1, 1), base=(0.0, 0.0), ident="g")
    assert parallel_copies(c, 0) == []
    copies = parallel_copies(c, 3, eps_schedule=(0.05,))
    assert len(copies) == 3
    total = np.sum([cc.homology_class() for cc in copies], axis=0)
    np.testing.assert_array_equal(total, [3, 3])
    neg = parallel_copies(c, -2, eps_schedule=(0.05,))
    assert len(neg) == 2
    total_neg = np.sum([cc.homology_class() for cc in neg], axis=0)
    np.testing.assert_array_equal(total_neg, [-2, -2])


def test_parallel_copies_validates_offsets():
    c = geodesic_curve((1, 1), ident="g")
    with pytest.raises(GeometryError):
        parallel_copies(c, 4, eps_schedule=(0.05,))
    with pytest.raises(GeometryError):
        parallel_copies(c, 4, eps_schedule=(0.05, 0.05))
    with pytest.raises(GeometryError):
        parallel_copies(c, 2, eps_schedule=(-0.1,))
