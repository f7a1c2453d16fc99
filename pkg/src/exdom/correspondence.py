"""The two directions of the domain <-> minimal-bigraph correspondence.

Domain side: from a positive harmonic u with unit boundary gradient, the
horizontal projection map has differential

    dpsi = ( dz̄ - 4 (u_z)^2 dz ) / 2,          u_z = (u_x - i u_y) / 2,

path-independent on the closure of the domain, acting on each boundary
component as conjugation plus a per-component translation, with
det(dpsi) = (|grad u|^4 - 1) / 4.

Surface side: phi = \int g^{-1} dh maps the upper conformal half onto the
associated exceptional domain, F = phi o psi^{-1} is expansive
(|F(z) - F(z')| >= |z - z'|), and the boundary gradient is recovered from
the Gauss map via 2 u_z(phi(z)) = g(z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import (
    NonFiniteSample,
    OutsideDomain,
    PathLeavesDomain,
    PoleOnPath,
)
from .numerics import ComplexPath, QuadratureConfig, integrate_path
from .weierstrass import WeierstrassData, check_clearance

__all__ = [
    "DomainModel",
    "CorrespondenceMaps",
    "psi_differential",
    "map_psi",
    "det_dpsi",
    "map_phi",
    "map_F",
    "loop_period",
    "grad_from_gauss",
]


@dataclass(frozen=True)
class DomainModel:
    """An exceptional domain: membership, u, grad u, boundary parametrization.

    ``n_components`` is None for periodic domains (infinitely many boundary
    components, one per period); ``period`` then holds the translation.
    ``second_derivs`` returns (u_xx, u_xy, u_yy); for the closed-form
    families it is analytic-quality.  ``route`` builds an in-domain path
    between two points of the closure (used by path-based integrators).
    """

    contains: Callable[[complex], bool]
    u: Callable[[complex], float]
    grad_u: Callable[[complex], tuple]
    boundary: Callable[[int, float], complex]
    n_components: int | None
    in_closure: Callable[[complex], bool] | None = None
    second_derivs: Callable[[complex], tuple] | None = None
    period: float | None = None
    bbox: tuple = (-4.0, 4.0, -4.0, 4.0)
    interior_point: complex = 0j
    route: Callable[[complex, complex], ComplexPath] | None = None
    grad_u_many: Callable[[np.ndarray], np.ndarray] | None = None
    u_many: Callable[[np.ndarray], np.ndarray] | None = None
    boundary_cloud: np.ndarray | None = None
    name: str = "domain"

    def closure_test(self, w: complex) -> bool:
        if self.in_closure is not None:
            return bool(self.in_closure(w))
        return bool(self.contains(w))

    def u_z(self, w: complex) -> complex:
        ux, uy = self.grad_u(w)
        return 0.5 * complex(ux, -uy)

    def u_z_many(self, w: np.ndarray) -> np.ndarray:
        if self.grad_u_many is not None:
            g = self.grad_u_many(np.asarray(w, dtype=complex))
            return 0.5 * np.conjugate(g)
        return np.array([self.u_z(complex(x)) for x in np.atleast_1d(w)],
                        dtype=complex)


@dataclass(frozen=True)
class CorrespondenceMaps:
    """The maps psi, phi and F = phi o psi^{-1} of one correspondence.

    ``basepoints = (z0, p0)``: p0 is the surface-chart base point and
    z0 = phi(p0) its image on the domain boundary; psi is normalized to
    vanish at p0, so the three maps commute exactly (no hidden constants).
    """

    psi: Callable[[complex], complex]
    psi_inverse: Callable[[complex], complex]
    phi: Callable[[complex], complex]
    F: Callable[[complex], complex]
    basepoints: tuple
    contains_hat: Callable[[complex], bool] | None = None
    period: float | None = None
    period_hat: float | None = None
    name: str = "maps"


# ---------------------------------------------------------------------------
# domain side
# ---------------------------------------------------------------------------

def psi_differential(model: DomainModel, w: complex) -> tuple:
    """Coefficients (c_dz, c_dzbar) of dpsi at w: (-2 u_z^2, 1/2)."""
    w = complex(w)
    if not model.closure_test(w):
        raise OutsideDomain(f"{w!r} is not in the domain closure")
    uz = model.u_z(w)
    return (-2.0 * uz * uz, 0.5)


def map_psi(model: DomainModel, path: ComplexPath,
            cfg: QuadratureConfig | None = None) -> complex:
    """Integral of dpsi along a path staying in the domain closure.

    The dz̄ half integrates exactly to conj(end - start)/2; the dz half is
    quadratured.  Raises :class:`PathLeavesDomain` when a sampled path point
    leaves the closure.
    """
    t = np.linspace(0.0, 1.0, 129)
    for z in np.asarray(path.point(t)):
        if not model.closure_test(complex(z)):
            raise PathLeavesDomain(f"path sample {z!r} outside domain closure")

    def c_dz(z):
        uz = model.u_z_many(z)
        return -2.0 * uz * uz

    val = integrate_path(c_dz, path, cfg, vectorized=True)
    return 0.5 * np.conjugate(path.end - path.start) + val


def det_dpsi(model: DomainModel, w: complex) -> float:
    """det(dpsi)(w) = (|grad u(w)|^4 - 1) / 4; negative in the interior."""
    w = complex(w)
    if not model.closure_test(w):
        raise OutsideDomain(f"{w!r} is not in the domain closure")
    ux, uy = model.grad_u(w)
    s = ux * ux + uy * uy
    return 0.25 * (s * s - 1.0)


# ---------------------------------------------------------------------------
# surface side
# ---------------------------------------------------------------------------

def map_phi(data: WeierstrassData, path: ComplexPath,
            cfg: QuadratureConfig | None = None) -> complex:
    """Integral of g^{-1} dh along a path from the data's base point."""
    if abs(path.start - data.basepoint) > 1e-9:
        raise ValueError(
            f"path starts at {path.start!r}, not at the base point "
            f"{data.basepoint!r}")
    check_clearance(path, data.punctures)
    try:
        return integrate_path(data.dphi_fn(), path, cfg)
    except NonFiniteSample as exc:
        raise PoleOnPath(str(exc)) from exc


def loop_period(data: WeierstrassData, loop: ComplexPath,
                cfg: QuadratureConfig | None = None) -> complex:
    """Period of g^{-1} dh around a closed loop avoiding the punctures."""
    if abs(loop.start - loop.end) > 1e-9:
        raise ValueError("loop is not closed")
    check_clearance(loop, data.punctures)
    try:
        return integrate_path(data.dphi_fn(), loop, cfg)
    except NonFiniteSample as exc:
        raise PoleOnPath(str(exc)) from exc


def map_F(maps: CorrespondenceMaps, z: complex) -> complex:
    """F(z) = phi(psi^{-1}(z)) for z in the projection domain."""
    z = complex(z)
    if maps.contains_hat is not None and not maps.contains_hat(z):
        raise OutsideDomain(f"{z!r} is not in the projection domain")
    return complex(maps.F(z))


def grad_from_gauss(data: WeierstrassData, z: complex) -> tuple:
    """grad u at phi(z), read off the Gauss map: (Re g, -Im g)."""
    gv = complex(data.g(complex(z)))
    return (gv.real, -gv.imag)
