"""Measured numeric floors frozen as constants.

Each value was measured once over the standard verification sample domains
(see the verify module) and is asserted in tests with a 10% margin, so a
regression that erodes a floor by more than that fails loudly while sampler
reseeding noise does not.
"""

# Smallest singular value of the codim-2 model-map Jacobian on the model
# surface.  Analytically sqrt(2), attained on the middle circle.
JAC_MODEL_MIN_SV = 1.4142135623730951

# Smallest singular value of the family-map Jacobian over the sampled zero
# set (t in [0.05, 1], r in [0.05, 0.95]); attained at the t = 0.05 edge.
JAC_FAMILY_MIN_SV = 1.0476

# Smallest gradient norm of the real family map over the sampled real zero
# set (|g| in [0.05, 0.95]); attained at the |g| = 0.05 edge.
REAL_GRAD_MIN_NORM = 0.4585

# Smallest (1 - |p|^2) over tapered interior images; keeps the model
# coordinate's denominator away from zero on the sampled domains.
TAPERED_REM_MIN = 1e-4
