"""Gluing homeomorphism onto the interpolation model.

The smooth part of the family (slices over g != 0, together with the seam at
|x|+|y| = 1) and the filled crossed fiber over g = 0 are mapped into the
common model {(z, x, y) : 2*x*y = conj(z)*(1 - |p|^2)} inside D2 x D4 by two
piecewise maps:

* ``to_model_smooth`` tapers a family point (g, x, y) by radial coefficients
  that depend on t = |g| and |x|, |y|, then reads the model coordinate z off
  the tapered point;
* ``to_model_filled`` does the same for a point of the filled fiber with
  coefficients depending only on |x|, |y|.

Both fix the boundary circles pointwise and agree along the seam, so together
they define one continuous bijection-candidate onto the model.  The
injectivity evidence lives in the radial profiles: ``taper_profile`` is
inverted exactly through a cubic with a unique root in (0, 1)
(``invert_taper_profile``), and ``filled_taper_profile`` has a Jacobian whose
symmetric part is positive definite away from two corner points, giving a
line-integral injectivity certificate (``pair_separation_integral``).
"""

from __future__ import annotations

import numpy as np

from .localmodel import cpair, rpair

__all__ = [
    "smooth_taper",
    "to_model_smooth",
    "filled_taper",
    "to_model_filled",
    "to_model",
    "taper_profile",
    "profile_cubic_coeffs",
    "invert_taper_profile",
    "filled_taper_profile",
    "filled_taper_jac",
    "filled_taper_sym_min_eig",
    "pair_separation_integral",
]

# Interiority threshold on 1 - |p|^2 below which a point counts as boundary.
_REM_FLOOR = 1e-14


def smooth_taper(t, x, y):
    """Radial taper used on family slices; returns complex (a, b).

    a = ((1-t)(1-|x|)(|x|^2-1) + 1) * x and symmetrically in y.  At t = 1 it
    is the identity; at t = 0 it matches ``filled_taper`` on the seam
    |x| + |y| = 1.
    """
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    ax, ay = np.abs(x), np.abs(y)
    a = ((1.0 - t) * (1.0 - ax) * (ax * ax - 1.0) + 1.0) * x
    b = ((1.0 - t) * (1.0 - ay) * (ay * ay - 1.0) + 1.0) * y
    return a, b


def filled_taper(x, y):
    """Radial taper used on the filled fiber; returns complex (c, d).

    c = ((1+|y|^2-|x|^2)/2 * (|x|^2-1) + 1) * x and symmetrically in y.  On
    the seam |x| + |y| = 1 the first coefficient equals (1-|x|)(|x|^2-1)+1,
    so it agrees with ``smooth_taper`` at t = 0.
    """
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    ax2 = np.abs(x) ** 2
    ay2 = np.abs(y) ** 2
    c = (0.5 * (1.0 + ay2 - ax2) * (ax2 - 1.0) + 1.0) * x
    d = (0.5 * (1.0 + ax2 - ay2) * (ay2 - 1.0) + 1.0) * y
    return c, d


def to_model_smooth(g, p):
    """Map a closed-family point (g, p) into the model; returns (z, p').

    Interior points (|p| < 1) are tapered and assigned the model coordinate;
    points on the boundary sphere are fixed: (g, p) -> (g, p).  g may be an
    array broadcasting against p's leading shape.
    """
    p = np.asarray(p, dtype=float)
    g = np.asarray(g, dtype=complex)
    x, y = cpair(p)
    t = np.abs(g)
    a, b = smooth_taper(t, x, y)
    rem = 1.0 - np.sum(p * p, axis=-1)
    interior = rem > _REM_FLOOR
    a = np.where(interior, a, x)
    b = np.where(interior, b, y)
    rem_img = 1.0 - np.abs(a) ** 2 - np.abs(b) ** 2
    z = np.where(interior,
                 2.0 * np.conjugate(a * b) / np.where(interior, rem_img, 1.0),
                 g)
    return z, rpair(a, b)


def to_model_filled(p):
    """Map a filled-fiber point into the model; returns (z, p').

    Interior points go to (z(c, d), c, d); points on the boundary sphere
    (the two corner circles of the filled region) go to (0, x, y).
    """
    p = np.asarray(p, dtype=float)
    x, y = cpair(p)
    c, d = filled_taper(x, y)
    rem = 1.0 - np.sum(p * p, axis=-1)
    interior = rem > _REM_FLOOR
    c = np.where(interior, c, x)
    d = np.where(interior, d, y)
    rem_img = 1.0 - np.abs(c) ** 2 - np.abs(d) ** 2
    z = np.where(interior,
                 2.0 * np.conjugate(c * d) / np.where(interior, rem_img, 1.0),
                 0.0 + 0.0j)
    return z, rpair(c, d)


def to_model(g, p):
    """Dispatch: the filled branch at g = 0, the smooth branch otherwise.

    On the overlap (g = 0 with |x| + |y| = 1) the two branches agree
    exactly, so the dispatch choice is immaterial there.
    """
    g_arr = np.asarray(g, dtype=complex)
    if g_arr.shape == () and complex(g_arr) == 0.0:
        return to_model_filled(p)
    return to_model_smooth(g, p)


# ----------------------------------------------------------------------------
# Radial profiles and injectivity certificates
# ----------------------------------------------------------------------------

def taper_profile(t, x):
    """Profile of ``smooth_taper`` along |y| = 1 - |x|; returns (A, B).

    A = ((1-t)(1-x)(x^2-1) + 1) * x
    B = ((1-t) * x * ((1-x)^2 - 1) + 1) * (1-x)
    with t in [0, 1], x in [0, 1].
    """
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    A = ((1.0 - t) * (1.0 - x) * (x * x - 1.0) + 1.0) * x
    B = ((1.0 - t) * x * ((1.0 - x) ** 2 - 1.0) + 1.0) * (1.0 - x)
    return A, B


def profile_cubic_coeffs(A, B):
    """Coefficients (c3, c2, c1, c0) of the profile-inversion cubic.

    p(x) = 2x^3 + (B - A - 3)x^2 + (2A - 1)x + (1 - B).  For profile values
    with A < 1 and B < 1 it satisfies p(0) = 1 - B > 0 and p(1) = A - 1 < 0,
    so there is a root in (0, 1); the other two roots lie outside [0, 1].
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    shape = np.broadcast_shapes(A.shape, B.shape)
    two = np.broadcast_to(2.0, shape)
    return two, B - A - 3.0, 2.0 * A - 1.0, 1.0 - B


def _cubic_val(x, c3, c2, c1, c0):
    return ((c3 * x + c2) * x + c1) * x + c0


def invert_taper_profile(A, B, iters=80):
    """Invert ``taper_profile``: recover (t, x) from (A, B).

    The x component is the unique (0, 1) root of the inversion cubic, found
    by bisection to below 1e-12; t then follows from
    (1 - t) = (A - x) / ((1-x)(x^2-1)x).  Scalar inputs return a tuple
    (t, x), or None when the recovered t falls outside [0, 1] (the pair is
    not a profile value).  Array inputs return (t, x, valid).
    """
    A_arr = np.asarray(A, dtype=float)
    B_arr = np.asarray(B, dtype=float)
    scalar = A_arr.shape == () and B_arr.shape == ()
    A_arr, B_arr = np.broadcast_arrays(np.atleast_1d(A_arr), np.atleast_1d(B_arr))
    c3, c2, c1, c0 = profile_cubic_coeffs(A_arr, B_arr)

    lo = np.zeros_like(A_arr)
    hi = np.ones_like(A_arr)
    f_lo = _cubic_val(lo, c3, c2, c1, c0)
    f_hi = _cubic_val(hi, c3, c2, c1, c0)
    valid = (f_lo > 0.0) & (f_hi < 0.0)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        f_mid = _cubic_val(mid, c3, c2, c1, c0)
        take_hi = f_mid <= 0.0
        hi = np.where(take_hi, mid, hi)
        lo = np.where(take_hi, lo, mid)
    x = 0.5 * (lo + hi)

    denom = (1.0 - x) * (x * x - 1.0) * x
    safe = valid & (np.abs(denom) > 0.0)
    one_minus_t = np.where(safe, (A_arr - x) / np.where(safe, denom, 1.0), np.nan)
    t = 1.0 - one_minus_t
    valid = safe & (t >= -1e-9) & (t <= 1.0 + 1e-9)
    t = np.clip(t, 0.0, 1.0)

    if scalar:
        if not bool(valid[0]):
            return None
        return float(t[0]), float(x[0])
    return t, x, valid


def filled_taper_profile(x, y):
    """Real profile of ``filled_taper`` on the triangle x, y >= 0, x+y <= 1."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    C = (0.5 * (1.0 + y * y - x * x) * (x * x - 1.0) + 1.0) * x
    D = (0.5 * (1.0 + x * x - y * y) * (y * y - 1.0) + 1.0) * y
    return C, D


def filled_taper_jac(x, y):
    """Analytic Jacobian of ``filled_taper_profile``, shape (..., 2, 2).

    [[(1 + 6x^2 - 5x^4 + (3x^2 - 1)y^2)/2,  x(x^2-1)y],
     [ y(y^2-1)x,  (1 + 6y^2 - 5y^4 + (3y^2 - 1)x^2)/2]]
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    j11 = 0.5 * (1.0 + 6.0 * x * x - 5.0 * x ** 4 + (3.0 * x * x - 1.0) * y * y)
    j12 = x * (x * x - 1.0) * y
    j21 = y * (y * y - 1.0) * x
    j22 = 0.5 * (1.0 + 6.0 * y * y - 5.0 * y ** 4 + (3.0 * y * y - 1.0) * x * x)
    row1 = np.stack(np.broadcast_arrays(j11, j12), axis=-1)
    row2 = np.stack(np.broadcast_arrays(j21, j22), axis=-1)
    return np.stack([row1, row2], axis=-2)


def filled_taper_sym_min_eig(x, y):
    """Minimum eigenvalue of the symmetrized profile Jacobian.

    Positive on the triangle except at the corners (1, 0) and (0, 1), where
    it vanishes; this is the pointwise part of the injectivity certificate.
    """
    J = filled_taper_jac(x, y)
    alpha = J[..., 0, 0]
    beta = J[..., 1, 1]
    gamma = 0.5 * (J[..., 0, 1] + J[..., 1, 0])
    mean = 0.5 * (alpha + beta)
    return mean - np.sqrt((0.5 * (alpha - beta)) ** 2 + gamma * gamma)


def pair_separation_integral(p, q, nodes=64, check=True):
    """Line-integral injectivity certificate for ``filled_taper_profile``.

    Returns the Gauss-Legendre value of integral_0^1 <q-p, J(gamma(s))(q-p)> ds
    along the straight path gamma from p to q (both in the closed triangle,
    which is convex).  Strict positivity for p != q certifies that the
    profile separates the pair.  With check=True the value is recomputed at
    half the node count and the two must agree to 1e-9 relative.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    delta = q - p

    def quad(n):
        s, w = np.polynomial.legendre.leggauss(n)
        s = 0.5 * (s + 1.0)
        w = 0.5 * w
        pts = p[None, :] + s[:, None] * delta[None, :]
        J = filled_taper_jac(pts[:, 0], pts[:, 1])
        quad_form = np.einsum("i,nij,j->n", delta, J, delta)
        return float(np.dot(w, quad_form))

    value = quad(nodes)
    if check:
        coarse = quad(max(nodes // 2, 2))
        if abs(value - coarse) > 1e-9 * max(1.0, abs(value)):
            raise ArithmeticError(
                "quadrature did not converge for the separation integral")
    return value
