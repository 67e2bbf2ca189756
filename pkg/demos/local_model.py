"""Tour of the local surface model: parametrization, regularity, critical disk."""

import numpy as np

from embsum.localmodel import (
    filled_model_homeo,
    filled_model_homeo_inv,
    model_jac,
    model_map,
    model_param,
    rpair,
)

rng = np.random.default_rng(7)

# The surface is the zero set of a single complex equation in the 4-ball.
# model_param hits it exactly: residuals at rounding error.
r = rng.uniform(0.01, 0.99, 20000)
phi = rng.uniform(0.0, 2.0 * np.pi, 20000)
pts = model_param(r, phi)
res = np.linalg.norm(model_map(pts), axis=-1)
print("parametrization residual: max %.3e" % res.max())

# The defining map is a submersion along the surface.  The smallest singular
# value bottoms out at sqrt(2), attained mid-parameter.
sv = np.linalg.svd(model_jac(pts), compute_uv=False)[:, -1]
print("min singular value %.12f (sqrt(2) = %.12f)" % (sv.min(), np.sqrt(2.0)))
print("attained near r = %.3f" % r[np.argmin(sv)])

# Where the map fails to be a submersion of the ball: the disk y = -conj(x).
# Everything there maps to the single value (-1, 0).
x = np.sqrt(rng.uniform(0, 1, 1000) / 2.0) * np.exp(2j * np.pi * rng.uniform(0, 1, 1000))
crit = model_map(rpair(x, -np.conjugate(x)))
print("critical disk image spread: %.3e around (-1, 0)"
      % np.abs(crit - np.array([-1.0, 0.0])).max())

# The cone on the surface fills the ball: push any direction out to
# parameter 1 and it lands on |x| + |y| = 1; pull a surface point back and
# the cone parameter is 1.
q = rng.standard_normal((5, 4))
q /= np.linalg.norm(q, axis=-1, keepdims=True)
img = filled_model_homeo(q, 1.0)
xs = np.hypot(img[:, 0], img[:, 1])
ys = np.hypot(img[:, 2], img[:, 3])
print("cone boundary |x|+|y|:", np.round(xs + ys, 12))
_, t_back = filled_model_homeo_inv(pts[:5])
print("cone parameter of surface points:", np.round(t_back, 12))
