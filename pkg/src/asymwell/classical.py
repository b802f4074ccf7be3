"""Classical position statistics for a bouncing particle in the step well.

The particle's speed is v = 2 sqrt(E - V) in natural units (m = 1/2), so the
time-of-flight density on each side is constant and proportional to 1/v.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .potential import WellSpec

__all__ = ["ClassicalModel", "classical_model", "classical_density"]


@dataclass(frozen=True)
class ClassicalModel:
    """Piecewise-constant classical density and side probabilities at one energy."""

    energy: float
    spec: WellSpec
    density_left: float
    density_right: float
    p_left: float
    p_right: float
    t_left: float
    t_right: float


def classical_model(spec: WellSpec, energy: float) -> ClassicalModel:
    """Classical model at the given energy; E = v0 exactly is rejected.

    Below the step the particle is confined to the left pocket (density 1/a);
    above it the per-side densities weight each side by the traversal time
    2 * side / speed.  At E = v0 the right-side traversal time diverges and the
    left probability jumps from 1 to 0+, so no value is assigned there.
    """
    if spec.smoothing is not None:
        raise ValueError("classical comparison model is defined for the sharp step only")
    if not energy > 0:
        raise ValueError(f"energy must be positive, got {energy}")
    if energy == spec.v0:
        raise ValueError("classical model is singular exactly at E = v0")
    a, b = spec.a, spec.b
    if energy < spec.v0:
        v_left = 2.0 * math.sqrt(energy)
        return ClassicalModel(energy=energy, spec=spec,
                              density_left=1.0 / a, density_right=0.0,
                              p_left=1.0, p_right=0.0,
                              t_left=2.0 * a / v_left, t_right=0.0)
    v_left = 2.0 * math.sqrt(energy)
    v_right = 2.0 * math.sqrt(energy - spec.v0)
    t_left = 2.0 * a / v_left
    t_right = 2.0 * b / v_right
    period = t_left + t_right
    denom = a * math.sqrt(energy - spec.v0) + b * math.sqrt(energy)
    return ClassicalModel(energy=energy, spec=spec,
                          density_left=math.sqrt(energy - spec.v0) / denom,
                          density_right=math.sqrt(energy) / denom,
                          p_left=t_left / period, p_right=t_right / period,
                          t_left=t_left, t_right=t_right)


def classical_density(model: ClassicalModel, x):
    """Piecewise-constant density at position(s) x inside [-a, b].

    The jump point x = 0 reports the two-sided average, mirroring the
    midpoint convention of the step potential itself.
    """
    spec = model.spec
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)
    if np.any(xs < -spec.a) or np.any(xs > spec.b):
        raise ValueError("position outside the well")
    mid = 0.5 * (model.density_left + model.density_right)
    out = np.where(xs < 0, model.density_left,
                   np.where(xs > 0, model.density_right, mid))
    return float(out[0]) if scalar else out
