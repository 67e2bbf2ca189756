"""The interpolation homeomorphism and its injectivity certificate."""

import numpy as np

from embsum.gluemap import (
    filled_taper_sym_min_eig,
    invert_taper_profile,
    pair_separation_integral,
    taper_profile,
    to_model,
    to_model_filled,
    to_model_smooth,
)
from embsum.localmodel import in_filled_model

rng = np.random.default_rng(11)

# Smooth branch: (g, p) with p strictly inside the ball goes to a point of
# the filled model over the rescaled parameter.
g = 0.3 * np.exp(1j * rng.uniform(0, 2 * np.pi, 4))
p = rng.uniform(-0.3, 0.3, (4, 4))
z, q = to_model_smooth(g, p)
print("smooth branch lands in filled model:", bool(np.all(in_filled_model(q, tol=1e-9))))

# Filled branch at g = 0; to_model dispatches on the scalar parameter.
z0, q0 = to_model_filled(p)
zd, qd = to_model(0j, p)
print("dispatch agrees with filled branch: %.3e" % np.abs(q0 - qd).max())

# The radial profile of the taper is invertible: its inversion reduces to a
# cubic with a single root between 0 and 1.
t, x = 0.62, 0.27
A, B = taper_profile(t, x)
print("profile (t=%.2f, x=%.2f) -> (A=%.6f, B=%.6f)" % (t, x, A, B))
print("inverted back:", invert_taper_profile(float(A), float(B)))
print("off-image pair rejected:", invert_taper_profile(0.99, 0.99))

# Pointwise certificate: the symmetrized profile Jacobian is positive
# definite on the triangle except at the corners (1,0) and (0,1).
xx, yy = np.meshgrid(np.linspace(0, 1, 101), np.linspace(0, 1, 101))
tri = (xx + yy <= 1.0) & ~((xx == 1.0) | (yy == 1.0))
eig = filled_taper_sym_min_eig(xx, yy)
print("sym Jacobian min eig off the corners: %.3e" % eig[tri].min())
print("at the corners: %.3e, %.3e"
      % (filled_taper_sym_min_eig(1.0, 0.0), filled_taper_sym_min_eig(0.0, 1.0)))

# Integrated certificate: the separation integral between two mapped points
# is positive, so distinct inputs cannot collide.
a = np.array([0.5, 0.1])
b = np.array([0.2, 0.4])
print("separation integral: %.6f" % pair_separation_integral(a, b))
print("degenerate pair:     %.6f" % pair_separation_integral(a, a))
