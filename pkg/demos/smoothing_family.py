"""Walk through the one-parameter family that smooths the crossed fiber.

Each slice over g = t * theta is the zero set of 2*x*theta*y - ramp(t)(1 - |p|^2):
the crossed fiber at t = 0, the rotated smoothed surface once ramp(t) = 1.
"""

import numpy as np

from embsum.family import (
    Ramp,
    family_map,
    in_family_slice,
    level_of,
    radial_rescale,
    sample_zero_set,
    slice_points,
)

ramp = Ramp()
print("ramp(0) = %g, ramp(0.05) = %g, ramp(0.5) = %g, ramp(0.8) = %g"
      % (ramp(0.0), ramp(0.05), ramp(0.5), ramp(0.8)))

# Radial rescaling moves points between level sets.  level_of is multiplied
# by exactly the factor requested.
rng = np.random.default_rng(3)
p = rng.uniform(-0.4, 0.4, (6, 4))
theta = np.exp(0.9j)
before = level_of(p, theta)
after = level_of(radial_rescale(p, 0.25), theta)
print("level ratio after rescale by 0.25:", np.round(after / before, 12))

# Points of a mid-family slice, produced by rotating the exact unit-level
# parametrization and rescaling down.
n = 5000
params = np.column_stack([
    np.full(n, 0.35), np.full(n, 0.9),
    rng.uniform(0.05, 0.95, n), rng.uniform(0, 2 * np.pi, n)])
g, zp = sample_zero_set(params)
print("slice residual at t=0.35: %.3e"
      % np.linalg.norm(family_map(g, zp), axis=-1).max())

# The membership test folds the ramp in: the slice over parameter t sits at
# effective level ramp(t).
g_scalar = 0.35 * np.exp(0.9j)
slice_pts = radial_rescale(slice_points(np.exp(0.9j), params[:, 2], params[:, 3]),
                           float(ramp(0.35)))
print("membership of ramped slice:", bool(np.all(
    in_family_slice(g_scalar, slice_pts, ramp, tol=1e-9))))

# Above the flat end of the ramp the slices are all the same surface, rotated.
hi = slice_points(np.exp(1j * np.linspace(0, 2 * np.pi, 7)), 0.5, 1.0)
print("|x|+|y| on unit-level slices:",
      np.round(np.hypot(hi[:, 0], hi[:, 1]) + np.hypot(hi[:, 2], hi[:, 3]), 12))
