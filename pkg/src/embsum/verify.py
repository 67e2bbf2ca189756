"""Sampled verification suites behind the ``verify`` CLI command.

Three suites cover the three geometric layers: the local surface model, the
one-parameter family with its radial rescaling, and the gluing
homeomorphism onto the interpolation model.  Every check returns a
VerificationReport; a suite passes when all of its reports do.  Sample
counts and tolerances come from a RunConfig, so the same code drives both
the fast default run and heavier reruns.
"""

from __future__ import annotations

import numpy as np

from . import constants
from .config import RunConfig
from .family import (
    Ramp,
    family_jac,
    family_map,
    level_of,
    radial_rescale,
    real_family_grad,
    real_family_map,
    sample_real_zero_set,
    sample_zero_set,
    slice_points,
)
from .gluemap import (
    filled_taper,
    filled_taper_jac,
    filled_taper_sym_min_eig,
    invert_taper_profile,
    smooth_taper,
    taper_profile,
    to_model_filled,
    to_model_smooth,
)
from .localmodel import (
    cpair,
    filled_model_homeo,
    filled_model_homeo_inv,
    model_jac,
    model_map,
    model_param,
    rpair,
)
from .oracle import (
    VerificationReport,
    collision_search,
    covering_report,
    disk_points,
    sphere4_points,
    unit_sample,
)

__all__ = [
    "suite_local_model",
    "suite_fiber_family",
    "suite_homeo",
    "run_all",
    "all_pass",
    "SUITES",
]


def _tol_report(name, samples, worst, tol):
    """Report for a residual-style check: pass iff worst <= tol."""
    worst = float(worst)
    details = [] if worst <= tol else [{"worst": worst, "tol": tol}]
    return VerificationReport(name=name, samples=int(samples),
                              max_residual=worst,
                              min_margin=float(tol - worst),
                              passed=not details, details=details)


def _floor_report(name, samples, observed, floor):
    """Report for a floor-style check: pass iff observed >= floor."""
    observed = float(observed)
    details = [] if observed >= floor else [{"observed": observed,
                                             "floor": floor}]
    return VerificationReport(name=name, samples=int(samples),
                              max_residual=0.0,
                              min_margin=float(observed - floor),
                              passed=not details, details=details)


# ----------------------------------------------------------------------------
# Suite 1: the local surface model
# ----------------------------------------------------------------------------

def suite_local_model(config=RunConfig()):
    n = config.samples
    reports = []

    u = unit_sample(n, 2, seed=config.seed)
    r = 0.02 + 0.96 * u[:, 0]
    phi = 2.0 * np.pi * u[:, 1]
    pts = model_param(r, phi)

    res = np.linalg.norm(model_map(pts), axis=-1)
    reports.append(_tol_report("param-residual", n, res.max(),
                               config.tol_residual))

    sv = np.linalg.svd(model_jac(pts), compute_uv=False)
    reports.append(_floor_report("jac-sv-floor", n, sv.min(axis=-1).min(),
                                 0.9 * constants.JAC_MODEL_MIN_SV))

    x = disk_points(n, radius=1.0 / np.sqrt(2.0), seed=config.seed + 1)
    crit_pts = rpair(x, -np.conjugate(x))
    crit = model_map(crit_pts) - np.array([-1.0, 0.0])
    reports.append(_tol_report("critical-value", n,
                               np.linalg.norm(crit, axis=-1).max(),
                               config.tol_residual))

    q = sphere4_points(n, seed=config.seed + 2)
    t = 0.01 + 0.99 * unit_sample(n, 1, seed=config.seed + 3)[:, 0]
    p = filled_model_homeo(q, t)
    q2, t2 = filled_model_homeo_inv(p)
    p2 = filled_model_homeo(q2, t2)
    reports.append(_tol_report("cone-roundtrip", n,
                               np.abs(p2 - p).max(), config.tol_residual))

    xb, yb = cpair(filled_model_homeo(q, 1.0))
    reports.append(_tol_report("cone-boundary-trace", n,
                               np.abs(np.abs(xb) + np.abs(yb) - 1.0).max(),
                               config.tol_residual))
    return reports


# ----------------------------------------------------------------------------
# Suite 2: the interpolating family
# ----------------------------------------------------------------------------

def suite_fiber_family(config=RunConfig()):
    n = config.samples
    reports = []
    ramp = Ramp(*config.ramp_eps)

    u = unit_sample(n, 2, seed=config.seed + 10)
    radius = 0.95 * u[:, 0] ** 0.25
    p = sphere4_points(n, seed=config.seed + 11) * radius[:, None]
    theta = np.exp(2j * np.pi * u[:, 1])
    worst_rt = 0.0
    worst_level = 0.0
    for L in (0.1, 0.5, 2.0, 10.0):
        back = radial_rescale(radial_rescale(p, L), 1.0 / L)
        worst_rt = max(worst_rt, float(np.abs(back - p).max()))
        lv = level_of(radial_rescale(p, L), theta) - L * level_of(p, theta)
        worst_level = max(worst_level, float(np.abs(lv).max()))
    reports.append(_tol_report("rescale-roundtrip", 4 * n, worst_rt,
                               config.tol_residual))
    reports.append(_tol_report("level-scaling", 4 * n, worst_level,
                               config.tol_level))

    pu = unit_sample(n, 4, seed=config.seed + 12)
    params = np.column_stack([
        0.05 + 0.95 * pu[:, 0],
        2.0 * np.pi * pu[:, 1],
        0.05 + 0.90 * pu[:, 2],
        2.0 * np.pi * pu[:, 3],
    ])
    g, zp = sample_zero_set(params)
    res = np.linalg.norm(family_map(g, zp), axis=-1)
    reports.append(_tol_report("family-residual", n, res.max(),
                               config.tol_residual))
    sv = np.linalg.svd(family_jac(g, zp), compute_uv=False)
    reports.append(_floor_report("family-sv-floor", n, sv.min(axis=-1).min(),
                                 0.9 * constants.JAC_FAMILY_MIN_SV))

    ru = unit_sample(n, 2, seed=config.seed + 13)
    sign = np.where(ru[:, 0] < 0.5, -1.0, 1.0)
    greal = sign * (0.05 + 0.90 * np.abs(2.0 * ru[:, 0] - 1.0))
    uparam = 0.02 + 0.96 * ru[:, 1]
    gr, pr = sample_real_zero_set(np.column_stack([greal, uparam]))
    res_r = np.abs(real_family_map(gr, pr))
    reports.append(_tol_report("real-family-residual", n, res_r.max(),
                               config.tol_residual))
    grad = np.linalg.norm(real_family_grad(gr, pr), axis=-1)
    reports.append(_floor_report("real-grad-floor", n, grad.min(),
                                 0.9 * constants.REAL_GRAD_MIN_NORM))

    grid = np.linspace(0.0, 1.0, 2001)
    vals = ramp(grid)
    reports.append(_floor_report("ramp-monotone", grid.size,
                                 np.diff(vals).min(), 0.0))
    ends = max(abs(float(ramp(0.0))),
               abs(float(ramp(config.ramp_eps[0])) - config.ramp_eps[0]),
               abs(float(ramp(config.ramp_eps[1])) - 1.0),
               abs(float(ramp(1.0)) - 1.0))
    reports.append(_tol_report("ramp-endpoints", 4, ends, 1e-12))
    return reports


# ----------------------------------------------------------------------------
# Suite 3: the gluing homeomorphism
# ----------------------------------------------------------------------------

def _smooth_domain(n, seed, t_range=(0.0, 1.0)):
    """Sample the closed smooth-side domain: (g, p) with p on the unit-level
    slice of theta = g/|g| (all such p satisfy |x| + |y| = 1)."""
    u = unit_sample(n, 4, seed=seed)
    t = t_range[0] + (t_range[1] - t_range[0]) * u[:, 0]
    theta = np.exp(2j * np.pi * u[:, 1])
    r = 0.02 + 0.96 * u[:, 2]
    phi = 2.0 * np.pi * u[:, 3]
    p = slice_points(theta, r, phi)
    return t * theta, p


def _filled_domain(n, seed, closed=False):
    """Sample the filled fiber |x| + |y| <= 1 through the cone chart."""
    u = unit_sample(n, 1, seed=seed)[:, 0]
    hi = 1.0 if closed else 0.999
    t = 0.01 + (hi - 0.01) * u
    q = sphere4_points(n, seed=seed + 1)
    return filled_model_homeo(q, t)


def _embed6(g, p):
    g = np.asarray(g, dtype=complex)
    p = np.asarray(p, dtype=float)
    g_cols = np.stack(np.broadcast_arrays(g.real, g.imag), axis=-1)
    return np.concatenate([g_cols, p], axis=-1)


def _map_combined(points6):
    """Dispatch rows (g1, g2, p) through the two gluing branches."""
    g = points6[:, 0] + 1j * points6[:, 1]
    p = points6[:, 2:]
    out = np.empty_like(points6)
    smooth = np.abs(g) > 0.0
    if np.any(smooth):
        z, pp = to_model_smooth(g[smooth], p[smooth])
        out[smooth] = _embed6(z, pp)
    if np.any(~smooth):
        z, pp = to_model_filled(p[~smooth])
        out[~smooth] = _embed6(z, pp)
    return out


def _model_residual(out6):
    x, y = cpair(out6[:, 2:])
    z = out6[:, 0] + 1j * out6[:, 1]
    rem = 1.0 - np.sum(out6[:, 2:] ** 2, axis=-1)
    return np.abs(2.0 * x * y - np.conjugate(z) * rem)


def _model_targets(n, seed):
    """Sample the interpolation model directly: level-rho slices rotated to
    cancel the phase of z, plus the crossed fiber at z = 0."""
    u = unit_sample(n, 4, seed=seed)
    rho = 0.02 + 0.98 * u[:, 0]
    theta = np.exp(2j * np.pi * u[:, 1])
    base = model_param(0.02 + 0.96 * u[:, 2], 2.0 * np.pi * u[:, 3])
    scaled = radial_rescale(base, rho)
    x, y = cpair(scaled)
    p = rpair(np.conjugate(theta) * x, y)
    z = rho * theta

    m = n // 4
    v = unit_sample(m, 2, seed=seed + 1)
    disk = np.sqrt(v[:, 0]) * np.exp(2j * np.pi * v[:, 1])
    half = m // 2
    zeros = np.zeros(m, dtype=complex)
    p0 = rpair(np.where(np.arange(m) < half, disk, zeros),
               np.where(np.arange(m) < half, zeros, disk))
    return np.concatenate([_embed6(z, p), _embed6(zeros, p0)], axis=0)


def suite_homeo(config=RunConfig()):
    n = config.samples
    reports = []

    # Seam: the smooth branch at t = 0 and the filled branch are one map.
    g0, seam = _smooth_domain(n, config.seed + 20)
    za, pa = to_model_smooth(np.zeros(n, dtype=complex), seam)
    zc, pc = to_model_filled(seam)
    seam_diff = np.maximum(np.abs(za - zc), np.abs(pa - pc).max(axis=-1))
    reports.append(_tol_report("seam-agreement", n, seam_diff.max(),
                               config.tol_residual))

    # Boundary fixing: the t = 1 face and the boundary sphere stay put.
    g1, p1 = _smooth_domain(n, config.seed + 21, t_range=(1.0, 1.0))
    z1, pp1 = to_model_smooth(g1, p1)
    fix = np.maximum(np.abs(z1 - g1), np.abs(pp1 - p1).max(axis=-1))
    qs = sphere4_points(n // 10 + 2, seed=config.seed + 22)
    gq = 0.5 * np.exp(2j * np.pi *
                      unit_sample(qs.shape[0], 1, seed=config.seed + 23)[:, 0])
    zq, pq = to_model_smooth(gq, qs)
    fix_sphere = np.maximum(np.abs(zq - gq), np.abs(pq - qs).max(axis=-1))
    reports.append(_tol_report("boundary-fixing", n + qs.shape[0],
                               max(fix.max(), fix_sphere.max()),
                               config.tol_residual))

    # Codomain: mapped points satisfy the model equation and stay in the
    # ball pair; by convexity the straight homotopy to the input does too.
    gs, ps = _smooth_domain(n, config.seed + 24)
    pf = _filled_domain(n, config.seed + 25)
    dom6 = np.concatenate([_embed6(gs, ps), _embed6(np.zeros(n), pf)], axis=0)
    out6 = _map_combined(dom6)
    reports.append(_tol_report("codomain-membership", 2 * n,
                               _model_residual(out6).max(),
                               config.tol_codomain))
    z_norm = np.hypot(out6[:, 0], out6[:, 1])
    p_norm = np.linalg.norm(out6[:, 2:], axis=-1)
    over = max(float(z_norm.max()), float(p_norm.max())) - 1.0
    reports.append(_tol_report("homotopy-containment", 2 * n,
                               max(over, 0.0), 1e-12))

    # Injectivity, sampled: no output collision without input proximity.
    m = config.collision_samples
    gsc, psc = _smooth_domain(int(m * 0.6), config.seed + 26)
    pfc = _filled_domain(m - int(m * 0.6), config.seed + 27)
    dom = np.concatenate([_embed6(gsc, psc),
                          _embed6(np.zeros(len(pfc)), pfc)], axis=0)
    rep = collision_search(_map_combined, dom, out_tol=1e-8, in_tol=1e-6,
                           name="collision-search")
    reports.append(rep)

    # Surjectivity, sampled: model points lie near mapped points.
    targets = _model_targets(max(n, 2000), config.seed + 28)
    images = _map_combined(dom)
    reports.append(covering_report(targets, images, name="covering"))

    # Image separation: smooth images keep |a|+|b| = 1; the open filled
    # part stays strictly inside.
    a1, b1 = smooth_taper(1.0, *cpair(ps))
    seps = np.abs(np.abs(a1) + np.abs(b1) - 1.0).max()
    reports.append(_tol_report("smooth-image-norm", n, seps,
                               config.tol_residual))
    c, d = filled_taper(*cpair(pf))
    inner = (np.abs(c) + np.abs(d)).max()
    reports.append(_floor_report("filled-image-gap", n, 1.0 - inner, 0.0))

    # Profile inversion: the cubic has the right signs and one root, and
    # the (t, x) round trip holds on the closed grid.
    gsize = 100
    A, B = np.meshgrid((np.arange(gsize) + 0.5) / gsize,
                       (np.arange(gsize) + 0.5) / gsize)
    p0 = 1.0 - B
    p1v = A - 1.0
    reports.append(_floor_report("cubic-end-signs", A.size,
                                 min(p0.min(), -p1v.max()), 0.0))
    xs = np.linspace(0.0, 1.0, 257)[None, :]
    Af, Bf = A.ravel()[:, None], B.ravel()[:, None]
    vals = (2.0 * xs ** 3 + (Bf - Af - 3.0) * xs ** 2
            + (2.0 * Af - 1.0) * xs + (1.0 - Bf))
    signs = np.sign(vals)
    # A root exactly on a grid node shows as a zero sign, not a strict
    # sign change, so count interior zeros as roots as well.
    changes = (np.sum(signs[:, :-1] * signs[:, 1:] < 0, axis=1)
               + np.sum(signs[:, 1:-1] == 0, axis=1))
    reports.append(_tol_report("cubic-one-root", A.size,
                               np.abs(changes - 1).max(), 0.0))

    tt, xx = np.meshgrid(np.linspace(0.0, 1.0, gsize),
                         (np.arange(gsize) + 0.5) / gsize)
    Ag, Bg = taper_profile(tt.ravel(), xx.ravel())
    t2, x2, valid = invert_taper_profile(Ag, Bg)
    A2, B2 = taper_profile(t2, x2)
    rt = max(np.abs(A2 - Ag).max(), np.abs(B2 - Bg).max())
    reports.append(_tol_report("profile-roundtrip", tt.size,
                               rt if valid.all() else np.inf,
                               config.tol_roundtrip))

    # Positive definiteness of the symmetrized filled-profile Jacobian.
    gx = np.linspace(0.0, 1.0, 201)
    GX, GY = np.meshgrid(gx, gx)
    tri = GX + GY <= 1.0
    px, py = GX[tri], GY[tri]
    away = (np.hypot(px - 1.0, py) > 1e-3) & (np.hypot(px, py - 1.0) > 1e-3)
    eigs = filled_taper_sym_min_eig(px[away], py[away])
    reports.append(_floor_report("sym-jac-positivity", int(away.sum()),
                                 eigs.min(), 0.0))
    Jc = filled_taper_jac(np.array([1.0, 0.0]), np.array([0.0, 1.0]))
    dets = np.abs(np.linalg.det(0.5 * (Jc + np.swapaxes(Jc, -1, -2))))
    reports.append(_tol_report("corner-degeneracy", 2, dets.max(), 1e-9))
    return reports


SUITES = {
    "local-model": suite_local_model,
    "fiber-family": suite_fiber_family,
    "homeo": suite_homeo,
}


def run_all(config=RunConfig()):
    """Run every suite; returns {suite name: [VerificationReport, ...]}."""
    return {name: fn(config) for name, fn in SUITES.items()}


def all_pass(results):
    """True when every report in a run_all result (or report list) passed."""
    if isinstance(results, dict):
        return all(r.passed for reports in results.values() for r in reports)
    return all(r.passed for r in results)
