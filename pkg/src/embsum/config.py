"""Run configuration for the verification suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by the verifiers and the command-line front end.

    Tolerances are absolute unless noted.  ramp_eps are the two blend knots
    of the interpolation ramp, 0 < eps1 < eps2 < 1.  chamfer None means the
    resolver picks its default from crossing separations.
    """

    seed: int = 0
    samples: int = 10000          #: points per sampled check
    collision_samples: int = 100000  #: points for the injectivity search
    tol_residual: float = 1e-12   #: membership / parametrization residual
    tol_level: float = 1e-10      #: level-scaling agreement
    tol_codomain: float = 1e-9    #: model-membership of mapped points
    tol_roundtrip: float = 1e-8   #: profile inversion round trip
    ramp_eps: tuple = (0.25, 0.75)
    chamfer: float = None
    angle_min: float = 1e-3

    def __post_init__(self):
        e1, e2 = self.ramp_eps
        if not 0.0 < e1 < e2 < 1.0:
            raise ValueError("ramp knots must satisfy 0 < eps1 < eps2 < 1")
        for name in ("tol_residual", "tol_level", "tol_codomain",
                     "tol_roundtrip", "angle_min"):
            if getattr(self, name) <= 0.0:
                raise ValueError("%s must be positive" % name)
        if self.samples < 1 or self.collision_samples < 2:
            raise ValueError("sample counts too small")
        if self.chamfer is not None and self.chamfer <= 0.0:
            raise ValueError("chamfer must be positive when given")

    def with_overrides(self, **kwargs):
        """Copy with the given fields replaced (None values ignored)."""
        updates = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **updates) if updates else self
