"""Local smoothing models for a transversal crossing of two submanifolds.

Everything here lives in the fiber of a tubular neighborhood around one
crossing component.  Two cases are covered:

* codimension 2 (complex coordinates): the fiber is the closed unit ball
  D4 in C^2 = R^4, the two sheets meeting at the origin are {y=0} and
  {x=0}, and the smoothed sheet is the surface

      2*x*y = 1 - |x|^2 - |y|^2

  cut out by ``model_map``.  It meets the boundary sphere in the two
  circles ``|x|=1, y=0`` and ``x=0, |y|=1`` and is parametrized without
  residual by ``model_param``.

* codimension 1 (real coordinates): the fiber is the unit disk D2 and the
  model splits into two straight-line branches

      2*s*x*y = 1 - x^2 - y^2      (s = +1 or -1),

  i.e. {x+y = +-1} for s=+1 and {x-y = +-1} for s=-1.  Exactly one branch
  is compatible with given orientations or co-orientations of the two
  sheets; ``resolution_choice`` encodes that selection.

A point of R^4 is stored as an array (..., 4) = (x1, x2, y1, y2) with
x = x1 + i*x2 and y = y1 + i*y2.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "cpair",
    "rpair",
    "model_map",
    "model_jac",
    "on_model",
    "model_param",
    "boundary_part",
    "B_NONE",
    "B_FIRST",
    "B_SECOND",
    "in_filled_model",
    "filled_model_homeo",
    "filled_model_homeo_inv",
    "coorientation_frame",
    "real_model_map",
    "resolution_choice",
    "u1_act",
]

# Boundary tags returned by boundary_part.
B_NONE = 0
B_FIRST = 1   # |x| = 1, y = 0
B_SECOND = 2  # x = 0, |y| = 1


def cpair(p):
    """Split real coordinates (..., 4) into the complex pair (x, y)."""
    p = np.asarray(p, dtype=float)
    x = p[..., 0] + 1j * p[..., 1]
    y = p[..., 2] + 1j * p[..., 3]
    return x, y


def rpair(x, y):
    """Pack complex x, y back into real coordinates (..., 4)."""
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    x, y = np.broadcast_arrays(x, y)
    return np.stack([x.real, x.imag, y.real, y.imag], axis=-1)


# ----------------------------------------------------------------------------
# Codimension-2 model
# ----------------------------------------------------------------------------

def model_map(p):
    """Defining map of the smoothed surface, as two real components.

    Returns (..., 2) holding the real and imaginary parts of
    2*x*y - (1 - |x|^2 - |y|^2).  The surface is the zero set inside D4.
    """
    p = np.asarray(p, dtype=float)
    x1, x2, y1, y2 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    nsq = x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2
    v1 = 2.0 * x1 * y1 - 2.0 * x2 * y2 - 1.0 + nsq
    v2 = 2.0 * x1 * y2 + 2.0 * x2 * y1
    return np.stack([v1, v2], axis=-1)


def model_jac(p):
    """Analytic Jacobian of ``model_map``, shape (..., 2, 4).

    Row 1: 2*(y1+x1, -y2+x2, x1+y1, -x2+y2)
    Row 2: 2*(y2, y1, x2, x1)
    """
    p = np.asarray(p, dtype=float)
    x1, x2, y1, y2 = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    row1 = np.stack([y1 + x1, -y2 + x2, x1 + y1, -x2 + y2], axis=-1)
    row2 = np.stack([y2, y1, x2, x1], axis=-1)
    return 2.0 * np.stack([row1, row2], axis=-2)


def on_model(p, tol=1e-9):
    """True where p lies in D4 and the defining map vanishes within tol."""
    p = np.asarray(p, dtype=float)
    res = np.linalg.norm(model_map(p), axis=-1)
    nsq = np.sum(p * p, axis=-1)
    return (res <= tol) & (nsq <= 1.0 + 2.0 * tol)


def model_param(r, phi):
    """Exact parametrization (r, phi) -> (r*e^{i phi}, (1-r)*e^{-i phi}).

    For r in [0, 1] the residual of ``model_map`` is zero in exact
    arithmetic: 2*x*y = 2*r*(1-r) = 1 - r^2 - (1-r)^2.
    """
    r = np.asarray(r, dtype=float)
    phi = np.asarray(phi, dtype=float)
    x = r * np.exp(1j * phi)
    y = (1.0 - r) * np.exp(-1j * phi)
    return rpair(x, y)


def boundary_part(p, tol=1e-9):
    """Classify boundary points of the model.

    Returns B_FIRST where |x|=1 and y=0 (within tol), B_SECOND where x=0 and
    |y|=1, B_NONE otherwise.  The model meets the unit sphere exactly in
    these two circles.
    """
    x, y = cpair(p)
    ax, ay = np.abs(x), np.abs(y)
    first = (np.abs(ax - 1.0) <= tol) & (ay <= tol)
    second = (ax <= tol) & (np.abs(ay - 1.0) <= tol)
    return np.where(first, B_FIRST, np.where(second, B_SECOND, B_NONE))


def in_filled_model(p, tol=0.0):
    """True where |x| + |y| <= 1 (+ tol).

    Equivalent to 2*|x*y| <= 1 - |x|^2 - |y|^2, the region bounded by the
    smoothed surface union the two axis disks.
    """
    x, y = cpair(p)
    return np.abs(x) + np.abs(y) <= 1.0 + tol


def filled_model_homeo(q, t):
    """Cone homeomorphism from S^3 x [0,1] onto the filled model.

    q must lie on the unit sphere of R^4.  The image point is
    t * (1 + 2|x*y|)^{-1/2} * q, which satisfies |x'| + |y'| = t.
    """
    q = np.asarray(q, dtype=float)
    x, y = cpair(q)
    scale = np.asarray(t, dtype=float) / np.sqrt(1.0 + 2.0 * np.abs(x * y))
    return q * scale[..., None]


def filled_model_homeo_inv(p):
    """Inverse of ``filled_model_homeo`` away from the cone point.

    Returns (q, t) with q on S^3 and t = sqrt(|p|^2 + 2|x*y|) in [0, 1].
    Undefined (division by zero) at p = 0.
    """
    p = np.asarray(p, dtype=float)
    x, y = cpair(p)
    nsq = np.sum(p * p, axis=-1)
    t = np.sqrt(nsq + 2.0 * np.abs(x * y))
    q = p / np.sqrt(nsq)[..., None]
    return q, t


def coorientation_frame(p):
    """Normal frame of the smoothed surface, shape (..., 2, 4).

    The two rows are (x + conj(y), y + conj(x)) and (i*conj(y), i*conj(x))
    written in real coordinates, i.e. half the Jacobian rows.  At a boundary
    point (x, 0) with |x|=1 the projection of the frame onto the last two
    coordinates has determinant x1^2 + x2^2 = 1 > 0, which fixes the
    co-orientation convention along the boundary.
    """
    return 0.5 * model_jac(p)


def u1_act(alpha, p):
    """Circle action alpha.(x, y) = (alpha*x, conj(alpha)*y), |alpha| = 1.

    The smoothed surface and the filled model are invariant under it.
    """
    x, y = cpair(p)
    alpha = np.asarray(alpha, dtype=complex)
    return rpair(alpha * x, np.conjugate(alpha) * y)


# ----------------------------------------------------------------------------
# Codimension-1 model
# ----------------------------------------------------------------------------

def real_model_map(p, branch=1):
    """Defining function 2*branch*x*y - (1 - x^2 - y^2) on the disk.

    branch=+1 gives the pair of lines {x+y = +-1}; branch=-1 gives
    {x-y = +-1}.  p has shape (..., 2).
    """
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    p = np.asarray(p, dtype=float)
    x, y = p[..., 0], p[..., 1]
    return 2.0 * branch * x * y - 1.0 + x * x + y * y


def resolution_choice(sign1, sign2, mode="oriented"):
    """Select the compatible straight-line branch at a disk crossing.

    sign1, sign2 are +-1: the orientation (mode="oriented") or co-orientation
    (mode="cooriented") signs of the two sheets relative to the reference
    identification of the fiber.  Returns +1 or -1, the ``branch`` argument
    of ``real_model_map``.

    Convention: (+1, +1) maps to branch +1 in both modes; flipping exactly
    one input sign flips the output, flipping both leaves it unchanged.  The
    oriented anchor is validated downstream by the resolved-class oracle on
    torus instances (the branch selected at every crossing is the one whose
    resolution adds homology classes).
    """
    if sign1 not in (1, -1) or sign2 not in (1, -1):
        raise ValueError("signs must be +-1")
    if mode not in ("oriented", "cooriented"):
        raise ValueError("mode must be 'oriented' or 'cooriented'")
    return sign1 * sign2
