"""Acceptance suite: one test per acceptance criterion, one line each.

Run with ``pytest -v tests/test_acceptance.py`` to get a pass/fail line per
criterion.  Sample counts, tolerances, and wall-clock limits are part of the
criteria and are asserted, not configurable.
"""

import json
import subprocess
import sys
import time

import numpy as np
import pytest

from embsum.bounds import (
    ClassRep,
    arc_graph,
    component_gap_bound,
    min_components,
    resolved_components,
)
from embsum.constants import (
    JAC_FAMILY_MIN_SV,
    JAC_MODEL_MIN_SV,
    REAL_GRAD_MIN_NORM,
)
from embsum.config import RunConfig
from embsum.family import (
    family_jac,
    family_map,
    level_of,
    radial_rescale,
    real_family_grad,
    sample_real_zero_set,
    sample_zero_set,
)
from embsum.gluemap import (
    filled_taper_jac,
    filled_taper_sym_min_eig,
    invert_taper_profile,
    taper_profile,
)
from embsum.localmodel import model_jac, model_map, model_param, rpair
from embsum.oracle import random_transversal_pair, trace_components, unit_sample
from embsum.torus import find_crossings, geodesic_curve, resolve_crossings
from embsum.verify import suite_homeo

N = 10_000


def announce(num, name):
    print("criterion %02d (%s): PASS" % (num, name))


@pytest.fixture(scope="module")
def random_pairs():
    start = time.perf_counter()
    pairs = []
    for seed in range(100):
        c1, c2 = random_transversal_pair(seed)
        pairs.append((c1, c2, resolve_crossings(c1, c2)))
    return pairs, time.perf_counter() - start


@pytest.fixture(scope="module")
def homeo_reports():
    reports = suite_homeo(RunConfig(samples=N, collision_samples=100_000))
    return {r.name: r for r in reports}


def test_criterion_01_parametrization_regularity():
    start = time.perf_counter()
    u = unit_sample(N, 2, seed=101)
    pts = model_param(u[:, 0], 2.0 * np.pi * u[:, 1])
    residual = np.linalg.norm(model_map(pts), axis=-1).max()
    assert residual <= 1e-12
    sv = np.linalg.svd(model_jac(pts), compute_uv=False)[..., -1].min()
    assert sv >= 0.9 * JAC_MODEL_MIN_SV
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    announce(1, "parametrization regularity")


def test_criterion_02_critical_locus_value():
    u = unit_sample(N, 2, seed=102)
    x = np.sqrt(u[:, 0]) / np.sqrt(2.0) * np.exp(2j * np.pi * u[:, 1])
    vals = model_map(rpair(x, -np.conjugate(x)))
    assert np.abs(vals[:, 0] + 1.0).max() <= 1e-12
    assert np.abs(vals[:, 1]).max() <= 1e-12
    announce(2, "critical locus maps to one value")


def test_criterion_03_radial_rescaling_laws():
    u = unit_sample(N, 5, seed=103)
    q = u[:, :4] * 2.0 - 1.0
    q /= np.maximum(np.linalg.norm(q, axis=-1, keepdims=True), 1e-9)
    p = q * (0.95 * u[:, 4] ** 0.25)[:, None]
    theta = np.exp(0.7j)
    base_level = level_of(p, theta)
    for L in (0.1, 0.5, 2.0, 10.0):
        img = radial_rescale(p, L)
        back = radial_rescale(img, 1.0 / L)
        assert np.abs(back - p).max() <= 1e-12
        level = level_of(img, theta)
        assert np.abs(level - L * base_level).max() <= 1e-10
    announce(3, "radial rescaling round trip and level law")


def test_criterion_04_family_regularity():
    u = unit_sample(N, 4, seed=104)
    params = np.column_stack([
        0.05 + 0.95 * u[:, 0], 2.0 * np.pi * u[:, 1],
        0.05 + 0.90 * u[:, 2], 2.0 * np.pi * u[:, 3]])
    g, p = sample_zero_set(params)
    assert np.linalg.norm(family_map(g, p), axis=-1).max() <= 1e-12
    sv = np.linalg.svd(family_jac(g, p), compute_uv=False)[..., -1].min()
    assert sv > 0.0
    assert sv >= 0.9 * JAC_FAMILY_MIN_SV

    u2 = unit_sample(N, 3, seed=105)
    sign = np.where(u2[:, 2] > 0.5, 1.0, -1.0)
    gr, pr = sample_real_zero_set(np.column_stack(
        [sign * (0.05 + 0.90 * u2[:, 0]), 0.02 + 0.96 * u2[:, 1]]))
    norms = np.linalg.norm(real_family_grad(gr, pr), axis=-1)
    assert norms.min() > 0.0
    assert norms.min() >= 0.9 * REAL_GRAD_MIN_NORM
    announce(4, "family zero sets are regular")


def test_criterion_05_interpolation_map_checks(homeo_reports):
    seam = homeo_reports["seam-agreement"]
    assert seam.passed and seam.max_residual <= 1e-12
    fixing = homeo_reports["boundary-fixing"]
    assert fixing.passed and fixing.max_residual <= 1e-12
    codomain = homeo_reports["codomain-membership"]
    assert codomain.passed and codomain.max_residual <= 1e-9
    collisions = homeo_reports["collision-search"]
    assert collisions.passed and collisions.samples >= 100_000
    assert len(collisions.details) == 0
    covering = homeo_reports["covering"]
    assert covering.passed
    announce(5, "interpolation map seam, fixing, injectivity, covering")


def test_criterion_06_profile_inversion_grid():
    grid = (np.arange(100) + 0.5) / 100.0
    A, B = np.meshgrid(grid, grid)
    p0 = 1.0 - B
    p1 = A - 1.0
    assert (p0 > 0.0).all() and (p1 < 0.0).all()
    xs = np.linspace(0.0, 1.0, 257)[None, :]
    Af, Bf = A.ravel()[:, None], B.ravel()[:, None]
    vals = (2.0 * xs ** 3 + (Bf - Af - 3.0) * xs ** 2
            + (2.0 * Af - 1.0) * xs + (1.0 - Bf))
    signs = np.sign(vals)
    changes = (np.sum(signs[:, :-1] * signs[:, 1:] < 0, axis=1)
               + np.sum(signs[:, 1:-1] == 0, axis=1))
    assert (changes == 1).all()

    t, x = np.meshgrid(np.linspace(0.0, 1.0, 100), grid)
    A2, B2 = taper_profile(t.ravel(), x.ravel())
    t2, x2, valid = invert_taper_profile(A2, B2)
    assert valid.all()
    assert np.abs(t2 - t.ravel()).max() <= 1e-8
    assert np.abs(x2 - x.ravel()).max() <= 1e-8
    announce(6, "taper profile inverts through the cubic")


def test_criterion_07_filled_profile_definiteness():
    xs = np.linspace(0.0, 1.0, 201)
    x, y = np.meshgrid(xs, xs)
    keep = (x + y <= 1.0 + 1e-12) \
        & (np.hypot(x - 1.0, y) > 1e-3) & (np.hypot(x, y - 1.0) > 1e-3)
    assert filled_taper_sym_min_eig(x, y)[keep].min() > 0.0
    for cx, cy in ((1.0, 0.0), (0.0, 1.0)):
        det = np.linalg.det(filled_taper_jac(cx, cy))
        assert abs(det) <= 1e-9
    announce(7, "filled profile definite away from corners")


def test_criterion_08_random_resolutions_additive(random_pairs):
    pairs, build_seconds = random_pairs
    start = time.perf_counter()
    for c1, c2, res in pairs:
        pq1 = np.array(c1.homology_class())
        pq2 = np.array(c2.homology_class())
        total = np.sum([c.homology_class() for c in res.curves], axis=0)
        np.testing.assert_array_equal(total, pq1 + pq2)
        det = pq1[0] * pq2[1] - pq1[1] * pq2[0]
        assert sum(cr.sign for cr in res.crossings) == det
    elapsed = build_seconds + (time.perf_counter() - start)
    assert elapsed < 10.0
    announce(8, "100 random resolutions add classes")


def test_criterion_09_graph_model_matches_geometry(random_pairs):
    pairs, _ = random_pairs
    for _, _, res in pairs:
        graph = arc_graph(res.graph_instance())
        assert resolved_components(graph, res.graph_choices()) \
            == len(res.curves) == trace_components(res.strands)

    c1 = geodesic_curve((1, 2), ident="c1")
    c2 = geodesic_curve((2, 1), base=(0.31, 0.17), ident="c2")
    res = resolve_crossings(c1, c2)
    assert len(res.crossings) == 3
    assert min_components(ClassRep((1, 2)) + ClassRep((2, 1))) == 3
    assert component_gap_bound(ClassRep((1, 2)), ClassRep((2, 1))) == 2

    c3 = geodesic_curve((1, 4), ident="c3")
    c4 = geodesic_curve((4, 1), base=(0.31, 0.17), ident="c4")
    crossings = find_crossings(c3, c4)
    lb = component_gap_bound(ClassRep((1, 4)), ClassRep((4, 1)))
    assert len(crossings) == 15
    assert lb == 4
    assert len(crossings) >= lb
    announce(9, "abstract graph model matches resolved geometry")


def test_criterion_10_component_count_table():
    for k in range(7):
        assert min_components(ClassRep((k, 0))) == k
    assert min_components(
        ClassRep((5, 0), ambient_orientable=False)) == 2
    assert min_components(
        ClassRep((4, 0), sigma=True, ambient_orientable=False)) == 3
    announce(10, "minimal component count table")


def test_criterion_11_cli_verify_all():
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "embsum.cli", "verify", "all"],
        capture_output=True, text=True, timeout=120)
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stderr[-2000:]
    report = json.loads(proc.stdout)
    assert report["pass"] is True
    assert set(report["suites"]) == {"local-model", "fiber-family", "homeo"}
    assert elapsed < 60.0
    announce(11, "command line verify all")
