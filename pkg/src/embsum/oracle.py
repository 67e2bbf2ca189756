"""Independent brute-force verifiers for the geometric pipeline.

Everything here recomputes a quantity the library already produces, but by
a deliberately different route: homology classes by counting signed
crossings with axis loops instead of reading lift displacements, component
counts by clustering strand endpoints instead of stitching, injectivity by
nearest-neighbour collision search instead of certificates, and root counts
by sign scanning.  Tests compare the two routes; neither calls the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree
from scipy.stats import qmc

from .torus import NonTransversalError, find_crossings, wavy_curve

__all__ = [
    "VerificationReport",
    "unit_sample",
    "disk_points",
    "sphere4_points",
    "class_via_crossings",
    "trace_components",
    "collision_search",
    "sign_change_count",
    "max_nn_gap",
    "covering_report",
    "random_transversal_pair",
]


@dataclass
class VerificationReport:
    """Result of one sampled verification.

    passed is true exactly when details is empty; max_residual and
    min_margin carry the worst observed values for the check's residual
    (want small) and margin (want large).
    """

    name: str
    samples: int
    max_residual: float
    min_margin: float
    passed: bool
    details: list = field(default_factory=list)

    def __post_init__(self):
        self.passed = not self.details

    def as_dict(self):
        return {
            "name": self.name,
            "samples": int(self.samples),
            "max_residual": float(self.max_residual),
            "min_margin": float(self.min_margin),
            "pass": bool(self.passed),
            "details": list(self.details),
        }


# ----------------------------------------------------------------------------
# Deterministic samplers
# ----------------------------------------------------------------------------

def unit_sample(n, dim, seed=0):
    """n low-discrepancy points in [0, 1)^dim, reproducible by seed."""
    sampler = qmc.Halton(d=dim, scramble=True, seed=seed)
    return sampler.random(n)


def disk_points(n, radius=1.0, seed=0):
    """n complex points quasi-uniform in the closed disk of given radius."""
    u = unit_sample(n, 2, seed=seed)
    r = radius * np.sqrt(u[:, 0])
    phi = 2.0 * np.pi * u[:, 1]
    return r * np.exp(1j * phi)


def sphere4_points(n, seed=0):
    """n points on the unit sphere in R^4 (Gaussian direction method)."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, 4))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


# ----------------------------------------------------------------------------
# Homology class by signed axis crossings
# ----------------------------------------------------------------------------

def _signed_line_crossings(coord0, coord1, offset):
    """Net signed crossings of segments with the line family offset + Z.

    Returns None if an endpoint sits on a line (degenerate position)."""
    f0 = coord0 - offset
    f1 = coord1 - offset
    frac = np.minimum(np.abs(f0 - np.round(f0)), np.abs(f1 - np.round(f1)))
    if np.min(frac) < 1e-9:
        return None
    return int(np.sum(np.floor(f1) - np.floor(f0)))


def class_via_crossings(curve, offsets=(0.3183098, 0.1370777), retries=64):
    """Homology class from signed crossings with one vertical and one
    horizontal axis loop, placed at irrational-looking offsets and nudged
    when a curve vertex lands on them.  Independent of the lift
    displacement read-off."""
    V = curve.vertices
    out = []
    for axis in (0, 1):
        offset = offsets[axis]
        count = None
        for _ in range(retries):
            count = _signed_line_crossings(V[:-1, axis], V[1:, axis], offset)
            if count is not None:
                break
            offset = (offset + 0.0137977) % 1.0
        if count is None:
            raise ArithmeticError("no generic axis offset found")
        out.append(count)
    return int(out[0]), int(out[1])


# ----------------------------------------------------------------------------
# Component tracing from a strand soup
# ----------------------------------------------------------------------------

def _torus_embed(points):
    """Isometric-near-zero embedding of torus points into R^4."""
    ang = 2.0 * np.pi * np.asarray(points, dtype=float)
    return np.concatenate([np.cos(ang), np.sin(ang)], axis=1) / (2.0 * np.pi)


def trace_components(strands, tol=1e-8):
    """Closed-curve count of a strand soup, by endpoint matching.

    Each strand is an (n, 2) lift polyline; endpoints are matched on the
    torus.  Every endpoint must pair with exactly one other endpoint
    (otherwise the soup has an open chain or a branch point, an integrity
    error) and the cycles of the pairing-plus-strand graph are counted with
    union-find.
    """
    if not strands:
        return 0
    ends = []
    for s in strands:
        s = np.asarray(s, dtype=float)
        ends.append(np.mod(s[0], 1.0))
        ends.append(np.mod(s[-1], 1.0))
    ends = np.array(ends)
    n = len(ends)

    tree = cKDTree(_torus_embed(ends))
    pairs = tree.query_pairs(tol, output_type="ndarray")
    partner = [[] for _ in range(n)]
    for i, j in pairs:
        partner[i].append(j)
        partner[j].append(i)
    for i, p in enumerate(partner):
        if len(p) != 1:
            raise ArithmeticError(
                "strand endpoint %d has %d matches (open chain or branch)"
                % (i, len(p)))

    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for i, j in pairs:
        union(i, j)
    for k in range(0, n, 2):
        union(k, k + 1)
    return sum(1 for i in range(n) if find(i) == i)


# ----------------------------------------------------------------------------
# Collision search and root counting
# ----------------------------------------------------------------------------

def collision_search(fn, domain_points, out_tol=1e-8, in_tol=1e-6,
                     name="collision_search"):
    """Sampled injectivity check for a point map.

    Evaluates fn on the (n, d) domain sample and reports every pair of
    outputs closer than out_tol whose inputs are farther apart than in_tol.
    """
    domain_points = np.asarray(domain_points, dtype=float)
    n = domain_points.shape[0]
    if n < 2:
        raise ValueError("collision search needs at least 2 points")
    out = np.asarray(fn(domain_points), dtype=float)
    tree = cKDTree(out)
    pairs = tree.query_pairs(out_tol, output_type="ndarray")
    details = []
    for i, j in pairs:
        d_in = float(np.linalg.norm(domain_points[i] - domain_points[j]))
        if d_in > in_tol:
            d_out = float(np.linalg.norm(out[i] - out[j]))
            details.append({"i": int(i), "j": int(j),
                            "input_dist": d_in, "output_dist": d_out})
    return VerificationReport(
        name=name, samples=n,
        max_residual=0.0 if not details
        else max(d["output_dist"] for d in details),
        min_margin=float(out_tol), passed=not details, details=details)


def sign_change_count(coeffs, interval, grid=1001):
    """Strict sign changes of a polynomial on a sampled interval.

    coeffs are highest degree first.  Exact zeros at grid points are
    skipped; a change of sign across them counts once.
    """
    if grid < 2:
        raise ValueError("grid must have at least 2 points")
    xs = np.linspace(interval[0], interval[1], grid)
    vals = np.polyval(np.asarray(coeffs, dtype=float), xs)
    signs = np.sign(vals)
    signs = signs[signs != 0]
    if signs.size < 2:
        return 0
    return int(np.sum(signs[:-1] * signs[1:] < 0))


# ----------------------------------------------------------------------------
# Covering checks
# ----------------------------------------------------------------------------

def max_nn_gap(points):
    """Largest nearest-neighbour distance within a point set."""
    points = np.asarray(points, dtype=float)
    tree = cKDTree(points)
    dist, _ = tree.query(points, k=2)
    return float(dist[:, 1].max())


def covering_report(targets, images, delta=None, name="covering"):
    """Check that every target point lies within delta of some image point.

    With delta omitted it is calibrated to twice the image set's own
    nearest-neighbour spacing, the natural resolution of the sample.
    """
    targets = np.asarray(targets, dtype=float)
    images = np.asarray(images, dtype=float)
    if delta is None:
        delta = 2.0 * max_nn_gap(images)
    tree = cKDTree(images)
    dist, _ = tree.query(targets, k=1)
    worst = float(dist.max())
    details = []
    if worst > delta:
        for idx in np.nonzero(dist > delta)[0][:10]:
            details.append({"target": int(idx), "dist": float(dist[idx])})
    return VerificationReport(name=name, samples=targets.shape[0],
                              max_residual=worst, min_margin=float(delta),
                              passed=not details, details=details)


# ----------------------------------------------------------------------------
# Random transversal instances
# ----------------------------------------------------------------------------

def _random_primitive_class(rng):
    import math
    while True:
        p = int(rng.integers(-3, 4))
        q = int(rng.integers(-3, 4))
        if (p, q) != (0, 0) and math.gcd(abs(p), abs(q)) == 1:
            return p, q


def random_transversal_pair(seed, attempts=60):
    """Two embedded wavy curves with only transversal crossings, seeded."""
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        pq1 = _random_primitive_class(rng)
        pq2 = _random_primitive_class(rng)
        try:
            c1 = wavy_curve(pq1, base=rng.uniform(0, 1, 2),
                            amplitude=float(rng.uniform(0.02, 0.06)),
                            waves=int(rng.integers(1, 4)),
                            phase=float(rng.uniform(0, 2 * np.pi)),
                            n=40, ident="w1")
            c2 = wavy_curve(pq2, base=rng.uniform(0, 1, 2),
                            amplitude=float(rng.uniform(0.02, 0.06)),
                            waves=int(rng.integers(1, 4)),
                            phase=float(rng.uniform(0, 2 * np.pi)),
                            n=40, ident="w2")
            find_crossings(c1, c2, angle_min=5e-2)
        except (NonTransversalError, ValueError):
            continue
        return c1, c2
    raise RuntimeError("no transversal pair found for seed %r" % (seed,))
