"""One-parameter family interpolating between the crossed and smoothed fibers.

The family is driven by a complex gluing parameter g in the closed unit disk.
Writing g = t*theta with t = |g|, the slice over g is the rescaled surface

    2*x*theta*y = ramp(t) * (1 - |x|^2 - |y|^2)

which degenerates to the crossed pair of disks {x*y = 0} at t = 0 and equals
the rotated smoothed surface for t >= eps2 (where the ramp is 1).  Three
ingredients are implemented here:

* ``Ramp``: the monotone reparametrization of t (identity near 0, constant 1
  near 1, quintic Hermite blend between);
* ``radial_rescale``: the radial diffeomorphism of the ball that rescales the
  level of a point (``level_of``) by a factor L;
* ``family_map`` / ``real_family_map``: the defining maps whose zero sets are
  the family slices near t = 0, with analytic Jacobians.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .localmodel import cpair, model_param, rpair

__all__ = [
    "Ramp",
    "DEFAULT_EPS1",
    "DEFAULT_EPS2",
    "radial_rescale",
    "norm_sq_rescale",
    "level_of",
    "family_map",
    "family_jac",
    "real_family_map",
    "real_family_grad",
    "in_family_slice",
    "in_interpolation_model",
    "slice_points",
    "sample_zero_set",
    "sample_real_zero_set",
]

DEFAULT_EPS1 = 0.25
DEFAULT_EPS2 = 0.75


@dataclass(frozen=True)
class Ramp:
    """Monotone ramp: identity on [0, eps1], 1 on [eps2, 1].

    The blend on [eps1, eps2] is the quintic Hermite interpolant matching
    value and first derivative at both ends, with second derivative pinned to
    zero there (so the piecewise function is C^2: the outer pieces are linear
    and constant).  The constructor rejects parameter choices for which the
    blend fails to be strictly increasing.
    """

    eps1: float = DEFAULT_EPS1
    eps2: float = DEFAULT_EPS2
    _coeffs: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not (0.0 < self.eps1 < self.eps2 < 1.0):
            raise ValueError("need 0 < eps1 < eps2 < 1")
        # Quintic in s = (t - eps1) / (eps2 - eps1), s in [0, 1]:
        # value/deriv/2nd-deriv (eps1, width, 0) at s=0 and (1, 0, 0) at s=1,
        # where width = eps2 - eps1 converts d/dt = 1 into d/ds.
        width = self.eps2 - self.eps1
        rows = []
        rhs = []
        for s, vals in ((0.0, (self.eps1, width, 0.0)), (1.0, (1.0, 0.0, 0.0))):
            powers = np.array([s**k for k in range(6)])
            d1 = np.array([k * s ** max(k - 1, 0) for k in range(6)])
            d2 = np.array([k * (k - 1) * s ** max(k - 2, 0) for k in range(6)])
            rows.extend([powers, d1, d2])
            rhs.extend(vals)
        coeffs = np.linalg.solve(np.array(rows), np.array(rhs))
        object.__setattr__(self, "_coeffs", coeffs)
        grid = np.linspace(0.0, 1.0, 4001)
        vals = np.polynomial.polynomial.polyval(grid, coeffs)
        if not np.all(np.diff(vals) > 0.0):
            raise ValueError("ramp blend is not strictly increasing for "
                             f"eps1={self.eps1}, eps2={self.eps2}")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        s = np.clip((t - self.eps1) / (self.eps2 - self.eps1), 0.0, 1.0)
        blend = np.polynomial.polynomial.polyval(s, self._coeffs)
        out = np.where(t <= self.eps1, t, np.where(t >= self.eps2, 1.0, blend))
        return out if out.ndim else float(out)


# ----------------------------------------------------------------------------
# Radial rescaling of levels
# ----------------------------------------------------------------------------

def radial_rescale(p, L):
    """Radial diffeomorphism of the open ball scaling levels by L > 0.

    p -> sqrt(L / (1 - (1-L)*|p|^2)) * p.  Its inverse is the same map with
    1/L, and ``level_of`` transforms by level -> L * level.
    """
    if np.any(np.asarray(L) <= 0.0):
        raise ValueError("L must be positive")
    p = np.asarray(p, dtype=float)
    nsq = np.sum(p * p, axis=-1)
    scale = np.sqrt(L / (1.0 - (1.0 - L) * nsq))
    return p * scale[..., None]


def norm_sq_rescale(h, L):
    """Action of ``radial_rescale`` on squared norms: h -> L*h/((L-1)*h + 1)."""
    h = np.asarray(h, dtype=float)
    return L * h / ((L - 1.0) * h + 1.0)


def level_of(p, theta):
    """Level 2*x*theta*y / (1 - |p|^2) of an interior ball point.

    theta is a unit complex number (pass exp(1j*angle) for an angle).  The
    level is complex in general; points of the rotated smoothed surface have
    level 1, the crossed fiber has level 0.  Raises on boundary points where
    the denominator vanishes.
    """
    p = np.asarray(p, dtype=float)
    theta = np.asarray(theta, dtype=complex)
    if np.any(np.abs(np.abs(theta) - 1.0) > 1e-12):
        raise ValueError("theta must be a unit complex number")
    x, y = cpair(p)
    denom = 1.0 - np.sum(p * p, axis=-1)
    if np.any(denom <= 1e-15):
        raise ValueError("level undefined on or outside the unit sphere")
    return 2.0 * x * theta * y / denom


# ----------------------------------------------------------------------------
# Defining maps of the family
# ----------------------------------------------------------------------------

def family_map(g, p):
    """Real components of 2*x*y - conj(g)*(1 - |p|^2), shape (..., 2).

    Its zero set over g = t*theta is the level-t slice of the rotated
    surface: 2*x*theta*y = t*(1 - |p|^2).
    """
    p = np.asarray(p, dtype=float)
    g = np.asarray(g, dtype=complex)
    x1, x2, y1, y2 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    rem = 1.0 - (x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2)
    w1 = 2.0 * x1 * y1 - 2.0 * x2 * y2 - g.real * rem
    w2 = 2.0 * x1 * y2 + 2.0 * x2 * y1 + g.imag * rem
    return np.stack(np.broadcast_arrays(w1, w2), axis=-1)


def family_jac(g, p):
    """Analytic Jacobian of ``family_map`` in (g1, g2, x1, x2, y1, y2).

    Shape (..., 2, 6).  The first two columns are -+(1 - |p|^2) times the
    unit vectors; the remaining block is rank 2 on the zero set.
    """
    p = np.asarray(p, dtype=float)
    g = np.asarray(g, dtype=complex)
    x1, x2, y1, y2 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    g1, g2 = g.real, g.imag
    rem = 1.0 - (x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2)
    zero = np.zeros(np.broadcast_shapes(rem.shape, g1.shape))
    row1 = np.stack(np.broadcast_arrays(
        -rem, zero,
        2.0 * y1 + 2.0 * g1 * x1, -2.0 * y2 + 2.0 * g1 * x2,
        2.0 * x1 + 2.0 * g1 * y1, -2.0 * x2 + 2.0 * g1 * y2), axis=-1)
    row2 = np.stack(np.broadcast_arrays(
        zero, rem,
        2.0 * y2 - 2.0 * g2 * x1, 2.0 * y1 - 2.0 * g2 * x2,
        2.0 * x2 - 2.0 * g2 * y1, 2.0 * x1 - 2.0 * g2 * y2), axis=-1)
    return np.stack([row1, row2], axis=-2)


def real_family_map(g, p):
    """Disk variant 2*x*y - g*(1 - x^2 - y^2); g real, p shape (..., 2)."""
    p = np.asarray(p, dtype=float)
    g = np.asarray(g, dtype=float)
    x, y = p[..., 0], p[..., 1]
    return 2.0 * x * y - g * (1.0 - x * x - y * y)


def real_family_grad(g, p):
    """Gradient of ``real_family_map`` in (g, x, y), shape (..., 3).

    Equals (-(1 - x^2 - y^2), 2y + 2gx, 2x + 2gy); it never vanishes for
    |g| < 1, so the zero set is a smooth hypersurface of the chart.
    """
    p = np.asarray(p, dtype=float)
    g = np.asarray(g, dtype=float)
    x, y = p[..., 0], p[..., 1]
    return np.stack(np.broadcast_arrays(
        -(1.0 - x * x - y * y), 2.0 * y + 2.0 * g * x, 2.0 * x + 2.0 * g * y),
        axis=-1)


# ----------------------------------------------------------------------------
# Membership tests
# ----------------------------------------------------------------------------

def in_family_slice(g, p, ramp, tol=1e-9):
    """Membership of p in the family slice over g.

    For t = |g| > 0 the test is |2*x*theta*y - ramp(t)*(1 - |p|^2)| <= tol
    with theta = g/t; at t = 0 the slice is the crossed fiber, tested as
    |2*x*y| <= tol.  Membership does not depend on the ramp values on
    [eps2, 1], where the slice equals the rotated smoothed surface.
    """
    p = np.asarray(p, dtype=float)
    g = complex(g)
    t = abs(g)
    x, y = cpair(p)
    if t == 0.0:
        return np.abs(2.0 * x * y) <= tol
    theta = g / t
    rem = 1.0 - np.sum(p * p, axis=-1)
    return np.abs(2.0 * x * theta * y - ramp(t) * rem) <= tol


def in_interpolation_model(z, p, tol=1e-9):
    """Membership in the target model {2*x*y = conj(z)*(1 - |p|^2)}."""
    p = np.asarray(p, dtype=float)
    z = np.asarray(z, dtype=complex)
    x, y = cpair(p)
    rem = 1.0 - np.sum(p * p, axis=-1)
    return np.abs(2.0 * x * y - np.conjugate(z) * rem) <= tol


# ----------------------------------------------------------------------------
# Zero-set samplers (used to measure and re-check singular-value floors)
# ----------------------------------------------------------------------------

def slice_points(theta, r, phi):
    """Points of the unit-level slice for a unit rotation theta.

    Rotates the exact parametrization of the smoothed surface: the returned
    points satisfy 2*x*theta*y = 1 - |p|^2 and |x| + |y| = 1 exactly, for
    every theta on the unit circle.  Arrays broadcast elementwise.
    """
    theta = np.asarray(theta, dtype=complex)
    base = model_param(r, phi)
    x, y = cpair(base)
    return rpair(np.conjugate(theta) * x, y)


def sample_zero_set(params):
    """Points on the zero set of ``family_map`` from parameter rows.

    params has shape (n, 4) with columns (t, psi, r, phi): t in (0, 1] and
    theta = exp(1j*psi).  Construction: rotate the exact parametrization of
    the smoothed surface into the theta slice, then rescale its level from 1
    down to t.  Returns (g, p) with family_map(g, p) ~ 0 to rounding error.
    """
    params = np.asarray(params, dtype=float)
    t, psi, r, phi = params.T
    if np.any(t <= 0.0):
        raise ValueError("t must be positive; the t=0 fiber is sampled directly")
    theta = np.exp(1j * psi)
    base = model_param(r, phi)
    x, y = cpair(base)
    rotated = rpair(np.conjugate(theta) * x, y)
    return t * theta, radial_rescale(rotated, t)


def sample_real_zero_set(params):
    """Points on the zero set of ``real_family_map`` from (g, u) rows.

    g in [-1, 1] \\ {0}; u in (0, 1) parametrizes the line branch
    {x + sign(g)*y = +-1} before level rescaling.  Returns (g, p) with
    real_family_map(g, p) ~ 0.
    """
    params = np.asarray(params, dtype=float)
    g, u = params.T
    if np.any(g == 0.0):
        raise ValueError("g must be nonzero; the g=0 fiber is the axis pair")
    sign = np.where(g > 0.0, 1.0, -1.0)
    # Level-1 points of the branch 2*sign*x*y = 1 - x^2 - y^2.
    x = u
    y = sign * (1.0 - u)
    base = np.stack([x, y], axis=-1)
    return g, radial_rescale(base, np.abs(g))
