"""Weierstrass data, the minimal immersion integral, the induced metric
factor, and the two classical data transforms (reflection across a vertical
plane and quarter-turn about a horizontal axis).

A data set is a pair of evaluators on a punctured plane chart: the Gauss map
g and the coefficient h of the height differential (dh = h(z) dz).  The
immersion is

    X(z) = Re \int [ (g^{-1} - g) h / 2,  i (g^{-1} + g) h / 2,  h ] dz

along a path from the base point.  Zeros of g are never searched for; the
constructor must declare them (for the closed-form families they are known
exactly, and g and dh share them with equal multiplicity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import NonFiniteSample, PoleOnPath, ZeroGaussMap
from .numerics import ComplexPath, QuadratureConfig, integrate_path

__all__ = [
    "WeierstrassData",
    "Point3",
    "evaluate_immersion",
    "reflect_data",
    "rotate_data",
    "metric_factor",
]

_PUNCTURE_CLEARANCE = 1e-6


@dataclass(frozen=True)
class Point3:
    """A point of R^3."""
    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.x1, self.x2, self.x3)):
            raise ValueError("Point3 components must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3])


@dataclass(frozen=True)
class WeierstrassData:
    """Evaluators (g, h) with declared singular points and a base point.

    ``w1``/``w2``/``dphi_coeff`` are optional closed-form shortcuts for
    (g^{-1} - g) h / 2, i (g^{-1} + g) h / 2 and h/g; when absent they are
    composed from g and h pointwise.  ``forms`` may carry kernel form ids
    for the fast lane ({"w1": id, ...} plus "alpha").
    """

    g: Callable[[complex], complex]
    dh_coeff: Callable[[complex], complex]
    punctures: tuple = ()
    basepoint: complex = 0j
    g_zeros: tuple = ()
    g_poles: tuple = ()
    w1: Callable[[complex], complex] | None = None
    w2: Callable[[complex], complex] | None = None
    dphi_coeff: Callable[[complex], complex] | None = None
    forms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "punctures",
                           tuple(complex(p) for p in self.punctures))
        object.__setattr__(self, "g_zeros",
                           tuple(complex(p) for p in self.g_zeros))
        object.__setattr__(self, "g_poles",
                           tuple(complex(p) for p in self.g_poles))
        object.__setattr__(self, "basepoint", complex(self.basepoint))
        for p in self.punctures:
            if abs(self.basepoint - p) <= _PUNCTURE_CLEARANCE:
                raise ValueError("basepoint coincides with a puncture")

    def w1_fn(self) -> Callable:
        if self.w1 is not None:
            return self.w1
        g, h = self.g, self.dh_coeff
        return lambda z: 0.5 * (1.0 / g(z) - g(z)) * h(z)

    def w2_fn(self) -> Callable:
        if self.w2 is not None:
            return self.w2
        g, h = self.g, self.dh_coeff
        return lambda z: 0.5j * (1.0 / g(z) + g(z)) * h(z)

    def dphi_fn(self) -> Callable:
        if self.dphi_coeff is not None:
            return self.dphi_coeff
        g, h = self.g, self.dh_coeff
        return lambda z: h(z) / g(z)


def check_clearance(path: ComplexPath, punctures, n: int = 257,
                    clearance: float = _PUNCTURE_CLEARANCE) -> None:
    """Screen a path against declared punctures; raises PoleOnPath."""
    if not punctures:
        return
    t = np.linspace(0.0, 1.0, n)
    z = np.asarray(path.point(t))
    for p in punctures:
        d = np.abs(z - p).min()
        if d < clearance:
            raise PoleOnPath(
                f"path passes within {d:.2e} of puncture {p!r}")


def evaluate_immersion(data: WeierstrassData, path: ComplexPath,
                       cfg: QuadratureConfig | None = None) -> Point3:
    """Immersion X at the end of ``path`` (which must start at the base point).

    Returns Re of the three component integrals.  The third coordinate is
    the height Re \\int h dz.
    """
    if abs(path.start - data.basepoint) > 1e-9:
        raise ValueError(
            f"path starts at {path.start!r}, not at the base point "
            f"{data.basepoint!r}")
    check_clearance(path, data.punctures)
    try:
        v1 = integrate_path(data.w1_fn(), path, cfg)
        v2 = integrate_path(data.w2_fn(), path, cfg)
        v3 = integrate_path(data.dh_coeff, path, cfg)
    except NonFiniteSample as exc:
        raise PoleOnPath(str(exc)) from exc
    return Point3(v1.real, v2.real, v3.real)


def reflect_data(data: WeierstrassData) -> WeierstrassData:
    """Data of the surface reflected across the vertical plane x2 = 0.

    Replaces g by -1/g and keeps dh.  Declared zeros of g become poles of
    the new Gauss map and are added to the punctures.
    """
    g = data.g
    return WeierstrassData(
        g=lambda z: -1.0 / g(z),
        dh_coeff=data.dh_coeff,
        punctures=data.punctures + data.g_zeros,
        basepoint=data.basepoint,
        g_zeros=data.g_poles,
        g_poles=data.g_zeros,
    )


def rotate_data(data: WeierstrassData, g_one_points=()) -> WeierstrassData:
    """Data of the surface rotated by pi/2 about the x2-axis.

    New data: g' = (1+g)/(1-g),  dh' = (1/g - g) dh / 2.  The new Gauss map
    has a pole wherever g = 1; pass those points in ``g_one_points`` so they
    are declared as punctures.  The 1/g factor makes dh' singular at zeros
    of g that dh does not cancel, so declared g-zeros are flagged too.
    """
    g, h = data.g, data.dh_coeff
    return WeierstrassData(
        g=lambda z: (1.0 + g(z)) / (1.0 - g(z)),
        dh_coeff=lambda z: 0.5 * (1.0 / g(z) - g(z)) * h(z),
        punctures=data.punctures + data.g_zeros + tuple(g_one_points),
        basepoint=data.basepoint,
        g_zeros=(),
        g_poles=tuple(g_one_points),
    )


def metric_factor(data: WeierstrassData, z: complex) -> float:
    """Conformal factor of the induced metric, (|g| + 1/|g|) |h| / 2."""
    z = complex(z)
    for p in data.punctures:
        if abs(z - p) <= _PUNCTURE_CLEARANCE:
            raise PoleOnPath(f"{z!r} is a declared puncture")
    gv = complex(data.g(z))
    if gv == 0:
        raise ZeroGaussMap(f"g vanishes at {z!r}")
    return 0.5 * (abs(gv) + 1.0 / abs(gv)) * abs(complex(data.dh_coeff(z)))
