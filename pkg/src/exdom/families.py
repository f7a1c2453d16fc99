"""Closed-form constructors for the three example families.

Each family yields a consistent triple (DomainModel, WeierstrassData,
CorrespondenceMaps):

* vertical catenoid   - domain |w| > 1, u = log|w| in closed form, surface
  data g = -1/z, dh = dz/z on |z| > 1, phi(z) = -z;
* horizontal catenoid - domain |y| < pi/2 + cosh x, surface data
  g = (1-z)/(1+z), dh = (z^2-1)/(2z^2) dz on Re z > 0,
  phi(z) = 1/(2z) - log z - z/2, u recovered by Newton inversion of phi;
* Scherk(alpha)       - periodic domain of period T = 2 pi (1 + cos alpha)
  bounded by the translates of a closed convex curve gamma; surface data
  g = (z-1)/(z+1), dh = 2 sin(2a)(1-z^2) dz / (z^4 - 2 cos(2a) z^2 + 1) on
  Re z > 0 punctured at e^{+-ia}; u recovered by inversion of the principal
  branch of phi (cut on the vertical segment joining the punctures).

Base points: the immersion base point p0 sits on the chart boundary
(vertical catenoid 1, horizontal catenoid i, Scherk 0) so the height
vanishes on the boundary; phi is normalized so z0 = phi(p0) is the matching
domain boundary point and psi(p0) = 0.  With these choices the maps commute
with no hidden constants, at the price of fixing one representative in each
translation class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .correspondence import CorrespondenceMaps, DomainModel
from .errors import BadComponent, InvalidParameter, InversionFailed
from .numerics import Polyline, polyline
from .weierstrass import WeierstrassData

__all__ = [
    "Family",
    "BoundaryCurve",
    "FamilyTriple",
    "make_family",
    "boundary_param",
    "scherk_implicit_residual",
    "scherk_period",
    "scaled_limit_boundary",
    "sample_boundary",
    "interior_samples",
    "chart_samples",
    "projection_pairs",
]

VERTICAL = "vertical-catenoid"
HORIZONTAL = "horizontal-catenoid"
SCHERK = "scherk"

_SCHERK_T_MAX = 12.0  # cosh growth makes wider boundary ranges useless


@dataclass(frozen=True)
class Family:
    """Tagged family selector; Scherk carries the angle alpha in (0, pi/2)."""

    kind: str
    alpha: float | None = None

    def __post_init__(self):
        if self.kind not in (VERTICAL, HORIZONTAL, SCHERK):
            raise InvalidParameter(f"unknown family kind {self.kind!r}")
        if self.kind == SCHERK:
            a = self.alpha
            if a is None or not (0.0 < a < math.pi / 2):
                raise InvalidParameter(
                    f"Scherk angle must lie strictly in (0, pi/2); got {a!r}")
        elif self.alpha is not None:
            raise InvalidParameter(f"{self.kind} takes no parameter")

    @staticmethod
    def vertical_catenoid() -> "Family":
        return Family(VERTICAL)

    @staticmethod
    def horizontal_catenoid() -> "Family":
        return Family(HORIZONTAL)

    @staticmethod
    def scherk(alpha: float) -> "Family":
        return Family(SCHERK, float(alpha))


@dataclass(frozen=True)
class BoundaryCurve:
    """An ordered boundary polyline sample (no repeated endpoint if closed)."""

    samples: tuple
    component_id: int
    closed: bool

    def __post_init__(self):
        pts = tuple(complex(p) for p in self.samples)
        if len(pts) < 2:
            raise ValueError("boundary curve needs at least 2 samples")
        for p, q in zip(pts, pts[1:]):
            if p == q:
                raise ValueError("consecutive boundary samples must differ")
        if self.closed and pts[0] == pts[-1]:
            raise ValueError("closed curves must not repeat their endpoint")
        object.__setattr__(self, "samples", pts)


class FamilyTriple(NamedTuple):
    domain: DomainModel
    weierstrass: WeierstrassData
    maps: CorrespondenceMaps


# ---------------------------------------------------------------------------
# seeded inversion helpers
# ---------------------------------------------------------------------------

def _nearest_seeds(seed_w: np.ndarray, targets: np.ndarray, rank: int = 0):
    """Index of the rank-th nearest seed (in image space) per target."""
    idx = np.empty(targets.size, dtype=np.int64)
    for lo in range(0, targets.size, 256):
        hi = min(lo + 256, targets.size)
        d = np.abs(targets[lo:hi, None] - seed_w[None, :])
        if rank == 0:
            idx[lo:hi] = np.argmin(d, axis=1)
        else:
            idx[lo:hi] = np.argpartition(d, rank, axis=1)[:, rank]
    return idx


class _PhiInverter:
    """Newton inversion of a family forward map, seeded from a grid."""

    def __init__(self, map_id: int, alpha: float, seed_z: np.ndarray,
                 period: float | None = None):
        self.map_id = map_id
        self.alpha = alpha
        self.seed_z = np.asarray(seed_z, dtype=complex)
        self.seed_w = np.asarray(
            kernels.phi_forward(map_id, alpha, self.seed_z), dtype=complex)
        self.period = period

    def _solve(self, w: np.ndarray, tol: float):
        z = np.empty_like(w)
        ok = np.zeros(w.shape, dtype=bool)
        pending = np.arange(w.size)
        for rank in range(8):
            if pending.size == 0:
                break
            seeds = self.seed_z[_nearest_seeds(self.seed_w, w[pending], rank)]
            zi, oki = kernels.phi_inverse(self.map_id, self.alpha,
                                          w[pending], seeds, tol)
            z[pending] = np.where(oki, zi, z[pending] if rank else zi)
            ok[pending] = oki
            pending = pending[~oki]
        return z, ok

    def invert(self, targets, tol: float = 5e-14) -> np.ndarray:
        """Preimages of ``targets``; raises InversionFailed on any failure.

        For periodic maps the target is reduced by the period and the
        remaining shifts {0, -T, +T} are tried, since the principal branch
        covers one period strip only up to the cut images.
        """
        w = np.atleast_1d(np.asarray(targets, dtype=complex))
        if self.period is None:
            z, ok = self._solve(w.copy(), tol)
        else:
            T = self.period
            k = np.round((w.real - 2.0 * self.alpha) / T)
            w0 = w - k * T
            z, ok = self._solve(w0, tol)
            for shift in (-T, T):
                if ok.all():
                    break
                pend = ~ok
                zi, oki = self._solve(w0[pend] + shift, tol)
                sel = np.nonzero(pend)[0][oki]
                z[sel] = zi[oki]
                ok[sel] = True
        if not ok.all():
            bad = w[~ok][:3]
            raise InversionFailed(
                f"phi inversion failed for {int((~ok).sum())} targets, "
                f"e.g. {bad!r}")
        return z if np.ndim(targets) else complex(z[0])


def _wirtinger_jacobian(a: np.ndarray, b: np.ndarray):
    """2x2 Jacobian entries (j11, j12, j21, j22) from f_z = a, f_zbar = b."""
    fx = a + b
    fy = 1j * (a - b)
    return fx.real, fy.real, fx.imag, fy.imag


class _PsiInverter:
    """2x2 Newton inversion of the projection map psi on the surface chart.

    ``psi_eval`` evaluates psi at chart points; ``dpsi`` returns the
    Wirtinger pair (psi_z, psi_zbar) = (-g h / 2, conj(h / g) / 2);
    ``step_ok(z, znew)`` is the region guard.  When ``incremental`` is set,
    psi is advanced along each Newton step by segment integration instead of
    re-evaluated (needed when psi has no closed form).
    """

    def __init__(self, psi_eval, dpsi, step_ok, seed_z, seed_psi,
                 incremental=None):
        self.psi_eval = psi_eval
        self.dpsi = dpsi
        self.step_ok = step_ok
        self.seed_z = np.asarray(seed_z, dtype=complex)
        self.seed_psi = np.asarray(seed_psi, dtype=complex)
        self.incremental = incremental

    def invert(self, targets, tol: float = 1e-12, max_iter: int = 60):
        w = np.atleast_1d(np.asarray(targets, dtype=complex))
        idx = _nearest_seeds(self.seed_psi, w)
        z = self.seed_z[idx].copy()
        val = self.seed_psi[idx].copy()
        ok = np.zeros(w.shape, dtype=bool)
        active = np.ones(w.shape, dtype=bool)
        for _ in range(max_iter):
            ia = np.nonzero(active)[0]
            if ia.size == 0:
                break
            r = val[ia] - w[ia]
            done = np.abs(r) <= tol
            ok[ia[done]] = True
            active[ia[done]] = False
            ia = ia[~done]
            if ia.size == 0:
                break
            zi = z[ia]
            a, b = self.dpsi(zi)
            j11, j12, j21, j22 = _wirtinger_jacobian(a, b)
            det = j11 * j22 - j12 * j21
            # dpsi degenerates on the fold |g| = 1; freeze those iterates
            # instead of letting NaN steps escape
            scale = (np.abs(a) + np.abs(b)) ** 2
            sing = np.abs(det) < 1e-13 * np.maximum(scale, 1e-30)
            safe_det = np.where(sing, 1.0, det)
            r = val[ia] - w[ia]
            dx = (-r.real * j22 + r.imag * j12) / safe_det
            dy = (r.real * j21 - r.imag * j11) / safe_det
            step = np.where(sing, 0.0, dx + 1j * dy)
            big = np.abs(step) > 1.0
            step = np.where(big, step / np.abs(np.where(big, step, 1.0)), step)
            znew = zi + step
            for _halve in range(60):
                bad = ~self.step_ok(zi, znew)
                if not bad.any():
                    break
                step = np.where(bad, 0.5 * step, step)
                znew = zi + step
            if self.incremental is not None:
                val[ia] = val[ia] + self.incremental(zi, znew)
            z[ia] = znew
            if self.incremental is None:
                val[ia] = self.psi_eval(znew)
        if not ok.all():
            raise InversionFailed(
                f"psi inversion failed for {int((~ok).sum())} targets")
        return z if np.ndim(targets) else complex(z[0])


def _integrate_chain(form: int, alpha: float, pts: np.ndarray) -> np.ndarray:
    """Cumulative integral of a form along a polyline chain of points."""
    vals, errs, status = kernels.integrate_segments(
        form, alpha, pts[:-1], pts[1:])
    if (status != 0).any():
        raise InversionFailed("seed chain integration failed")
    return np.concatenate([[0.0 + 0.0j], np.cumsum(vals)])


# ---------------------------------------------------------------------------
# vertical catenoid
# ---------------------------------------------------------------------------

def _build_vertical() -> FamilyTriple:
    def u(w):
        return math.log(abs(complex(w)))

    def grad(w):
        inv = 1.0 / complex(w)
        return (inv.real, -inv.imag)

    def grad_many(w):
        return np.conjugate(1.0 / np.asarray(w, dtype=complex))

    def second(w):
        uzz = -0.5 / complex(w) ** 2
        return (2.0 * uzz.real, -2.0 * uzz.imag, -2.0 * uzz.real)

    def route(w0, w1):
        # radial legs joined by short angular chords at a safe radius, so
        # the polyline never dips inside the unit disk
        w0, w1 = complex(w0), complex(w1)
        r_arc = max(abs(w0), abs(w1), 1.05)
        th0, th1 = np.angle(w0), np.angle(w1)
        dth = (th1 - th0 + math.pi) % (2 * math.pi) - math.pi
        n_ch = max(2, int(math.ceil(abs(dth) / 0.35)))
        pts = [w0, r_arc * np.exp(1j * th0)]
        for j in range(1, n_ch + 1):
            pts.append(r_arc * np.exp(1j * (th0 + dth * j / n_ch)))
        pts.append(w1)
        return polyline(_dedupe(pts))

    def boundary(c, t):
        _check_component(c, 1)
        return complex(np.exp(1j * float(t)))

    domain = DomainModel(
        contains=lambda w: abs(complex(w)) > 1.0,
        u=u,
        grad_u=grad,
        boundary=boundary,
        n_components=1,
        in_closure=lambda w: abs(complex(w)) >= 1.0 - 1e-9,
        second_derivs=second,
        bbox=(-4.0, 4.0, -4.0, 4.0),
        interior_point=2.0 + 0.0j,
        route=route,
        grad_u_many=grad_many,
        u_many=lambda w: np.log(np.abs(np.asarray(w, dtype=complex))),
        boundary_cloud=np.exp(1j * np.linspace(0, 2 * math.pi, 1024,
                                               endpoint=False)),
        name=VERTICAL,
    )

    data = WeierstrassData(
        g=lambda z: -1.0 / z,
        dh_coeff=lambda z: 1.0 / z,
        punctures=(0.0 + 0.0j,),
        basepoint=1.0 + 0.0j,
        g_poles=(0.0 + 0.0j,),
        w1=lambda z: 0.5 * (1.0 / (z * z) - 1.0),
        w2=lambda z: -0.5j * (1.0 + 1.0 / (z * z)),
        dphi_coeff=lambda z: -np.ones_like(np.asarray(z, dtype=complex))
        if np.ndim(z) else -1.0,
        forms={"alpha": 0.0, "dphi": kernels.VCAT_DPHI, "dh": kernels.VCAT_DH,
               "w1": kernels.VCAT_W1, "w2": kernels.VCAT_W2},
    )

    def psi_tilde(z):
        z = np.asarray(z, dtype=complex)
        return 1.0 - 0.5 * (np.conjugate(z) + 1.0 / z)

    def dpsi_tilde(z):
        # psi_z = -g h / 2 = 1/(2 z^2) ... psi_zbar = conj(h/g)/2 = -1/2
        z = np.asarray(z, dtype=complex)
        return 0.5 / (z * z), np.full(z.shape, -0.5, dtype=complex)

    def step_ok(z, znew):
        good = np.abs(znew) > 1e-6
        # psi_tilde(1/conj(z)) = psi_tilde(z): fold interior iterates back out
        return good

    rr, tt = np.meshgrid(np.geomspace(1.02, 8.0, 40),
                         np.linspace(-math.pi, math.pi, 49)[:-1])
    seeds = (rr * np.exp(1j * tt)).ravel()
    seeds = seeds[np.abs(np.abs(1.0 / seeds) - 1.0) > 0.015]
    inverter = _PsiInverter(psi_tilde, dpsi_tilde,
                            step_ok, seeds, psi_tilde(seeds))

    def psi_inv(zhat):
        z = inverter.invert(zhat)
        z = np.asarray(z)
        fold = np.abs(z) < 1.0
        zf = np.where(fold, 1.0 / np.conjugate(np.where(z == 0, 1, z)), z)
        return zf if np.ndim(zhat) else complex(zf)

    def F(zhat):
        return -np.asarray(psi_inv(zhat)) if np.ndim(zhat) \
            else -complex(psi_inv(zhat))

    maps = CorrespondenceMaps(
        psi=lambda w: _scalar_or_array(
            w, lambda ww: 1.0 + 0.5 * (np.conjugate(ww) + 1.0 / ww)),
        psi_inverse=F,
        phi=lambda z: _scalar_or_array(z, lambda zz: -zz),
        F=F,
        basepoints=(-1.0 + 0.0j, 1.0 + 0.0j),
        contains_hat=lambda z: abs(complex(z) - 1.0) > 1.0,
        name=VERTICAL,
    )
    return FamilyTriple(domain, data, maps)


# ---------------------------------------------------------------------------
# horizontal catenoid
# ---------------------------------------------------------------------------

def _hcat_x3(z):
    z = np.asarray(z, dtype=complex)
    return 0.5 * (z + 1.0 / z).real


def _hcat_g(z):
    z = np.asarray(z, dtype=complex)
    return (1.0 - z) / (1.0 + z)


def _hcat_psi_tilde(z):
    z = np.asarray(z, dtype=complex)
    return -np.log(np.abs(z)) + 1j * (0.5 * (z - 1.0 / z).imag - 1.0)


def _build_horizontal() -> FamilyTriple:
    rr = np.geomspace(0.02, 50.0, 80)
    tt = np.linspace(-math.pi / 2, math.pi / 2, 61)[1:-1]
    grid = (rr[:, None] * np.exp(1j * tt[None, :])).ravel()
    inv_phi = _PhiInverter(kernels.MAP_HCAT, 0.0, grid)

    def u_many(w):
        z = inv_phi.invert(np.asarray(w, dtype=complex))
        return _hcat_x3(z)

    def grad_many(w):
        z = inv_phi.invert(np.asarray(w, dtype=complex))
        return np.conjugate(_hcat_g(z))

    def second(w):
        z = inv_phi.invert(complex(w))
        uzz = 2.0 * z * z / (1.0 + z) ** 4
        return (2.0 * uzz.real, -2.0 * uzz.imag, -2.0 * uzz.real)

    def contains(w):
        w = complex(w)
        return abs(w.imag) < math.pi / 2 + math.cosh(w.real)

    def in_closure(w):
        w = complex(w)
        return abs(w.imag) <= math.pi / 2 + math.cosh(w.real) + 1e-9

    def boundary(c, t):
        _check_component(c, 2)
        eps = 1.0 if c == 0 else -1.0
        return complex(-t, -eps * (math.pi / 2 + math.cosh(t)))

    def route(w0, w1):
        # spine y = 0 is inside; vertical legs stay inside by monotonicity
        w0, w1 = complex(w0), complex(w1)
        pts = [w0, complex(w0.real, 0.0), complex(w1.real, 0.0), w1]
        return polyline(_dedupe(pts))

    tt_cloud = np.linspace(-4.0, 4.0, 1024)
    cloud = np.concatenate([
        -tt_cloud - 1j * (math.pi / 2 + np.cosh(tt_cloud)),
        -tt_cloud + 1j * (math.pi / 2 + np.cosh(tt_cloud)),
    ])
    domain = DomainModel(
        contains=contains,
        u=lambda w: float(u_many(np.array([complex(w)]))[0]),
        grad_u=lambda w: _c_to_pair(grad_many(np.array([complex(w)]))[0]),
        boundary=boundary,
        n_components=2,
        in_closure=in_closure,
        second_derivs=second,
        bbox=(-3.0, 3.0, -11.0, 11.0),
        interior_point=0.0 + 0.0j,
        route=route,
        grad_u_many=grad_many,
        u_many=u_many,
        boundary_cloud=cloud,
        name=HORIZONTAL,
    )

    data = WeierstrassData(
        g=lambda z: _hcat_g(z),
        dh_coeff=lambda z: (np.asarray(z, dtype=complex) ** 2 - 1.0)
        / (2.0 * np.asarray(z, dtype=complex) ** 2),
        punctures=(0.0 + 0.0j,),
        basepoint=1.0j,
        g_zeros=(1.0 + 0.0j,),
        g_poles=(-1.0 + 0.0j,),
        w1=lambda z: -1.0 / np.asarray(z, dtype=complex),
        w2=lambda z: -0.5j * (1.0 + np.asarray(z, dtype=complex) ** 2)
        / np.asarray(z, dtype=complex) ** 2,
        dphi_coeff=lambda z: -(1.0 + np.asarray(z, dtype=complex)) ** 2
        / (2.0 * np.asarray(z, dtype=complex) ** 2),
        forms={"alpha": 0.0, "dphi": kernels.HCAT_DPHI,
               "dh": kernels.HCAT_DH, "w1": kernels.HCAT_W1,
               "w2": kernels.HCAT_W2},
    )

    def dpsi_tilde(z):
        z = np.asarray(z, dtype=complex)
        gh = -(z - 1.0) ** 2 / (2.0 * z * z)          # g h
        hog = -(1.0 + z) ** 2 / (2.0 * z * z)          # h / g
        return -0.5 * gh, 0.5 * np.conjugate(hog)

    def step_ok(z, znew):
        return (znew.real > 1e-9) & (np.abs(znew) > 1e-9)

    seeds = grid[np.abs(np.abs(_hcat_g(grid)) - 1.0) > 0.015]
    psi_inverter = _PsiInverter(_hcat_psi_tilde, dpsi_tilde, step_ok,
                                seeds, _hcat_psi_tilde(seeds))

    def phi(z):
        return _scalar_or_array(
            z, lambda zz: kernels.phi_forward(kernels.MAP_HCAT, 0.0, zz))

    def psi(w):
        z = inv_phi.invert(np.atleast_1d(np.asarray(w, dtype=complex)))
        out = _hcat_psi_tilde(z)
        return out if np.ndim(w) else complex(out[0])

    def F(zhat):
        z = psi_inverter.invert(zhat)
        out = kernels.phi_forward(kernels.MAP_HCAT, 0.0, np.atleast_1d(z))
        return out if np.ndim(zhat) else complex(out[0])

    maps = CorrespondenceMaps(
        psi=psi,
        psi_inverse=F,
        phi=phi,
        F=F,
        basepoints=(complex(0.0, -(math.pi / 2 + 1.0)), 1.0j),
        contains_hat=lambda z: abs(complex(z).imag + 1.0)
        < math.cosh(complex(z).real),
        name=HORIZONTAL,
    )
    return FamilyTriple(domain, data, maps)


# ---------------------------------------------------------------------------
# Scherk family
# ---------------------------------------------------------------------------

def scherk_period(alpha: float) -> float:
    """Horizontal period of the Scherk exceptional domain."""
    return 2.0 * math.pi * (1.0 + math.cos(alpha))


def _scherk_gamma(alpha: float, t):
    """The paper's parametric boundary curve of the fundamental component.

    The arctan is taken as atan2(sin 2a, t^2 + cos 2a), the continuous
    determination in (0, pi); the curve runs from the origin (t -> -inf)
    through (4a, 0) (t = 0) back to the origin.
    """
    t = np.asarray(t, dtype=float)
    s2, c2 = math.sin(2 * alpha), math.cos(2 * alpha)
    sa, ca = math.sin(alpha), math.cos(alpha)
    x = 2.0 * np.arctan2(s2, t * t + c2)
    y = ca * np.log((t * t + 2.0 * sa * t + 1.0)
                    / (t * t - 2.0 * sa * t + 1.0))
    return x + 1j * y


def _scherk_hull_halfwidth(alpha: float, x):
    """Positive-y branch of the implicit boundary for x in (0, 4a)."""
    ca, sa = math.cos(alpha), math.sin(alpha)
    rhs = (sa * sa + np.cos(2.0 * alpha - np.asarray(x, dtype=float))) \
        / (ca * ca)
    return ca * np.arccosh(np.maximum(rhs, 1.0))


def _scherk_x3(alpha: float, z):
    z = np.asarray(z, dtype=complex)
    ca, sa = math.cos(alpha), math.sin(alpha)
    return sa * np.log(np.abs((z * z + 2.0 * ca * z + 1.0)
                              / (z * z - 2.0 * ca * z + 1.0)))


def _scherk_g(z):
    z = np.asarray(z, dtype=complex)
    return (z - 1.0) / (z + 1.0)


def _scherk_seed_grid(alpha: float):
    """Chart grid columns avoiding the cut x = cos(a), |y| <= sin(a)."""
    ca, sa = math.cos(alpha), math.sin(alpha)
    xs = sorted(set(np.geomspace(0.02, 30.0, 26))
                | {ca + d for d in (-0.3, -0.12, -0.05, 0.05, 0.12, 0.3)})
    xs = [x for x in xs if x > 1e-3 and abs(x - ca) > 0.02]
    ys = np.concatenate([
        -np.geomspace(13.0, 0.05, 18), [0.0], np.geomspace(0.05, 13.0, 18),
        [sa - 0.1, sa + 0.1, -sa - 0.1, -sa + 0.1],
    ])
    ys = np.array(sorted(set(np.round(ys, 12))))[::-1]  # descend from top
    return np.array(xs), ys


def _build_scherk(alpha: float) -> FamilyTriple:
    ca, sa = math.cos(alpha), math.sin(alpha)
    T = scherk_period(alpha)
    punctures = (complex(ca, sa), complex(ca, -sa))
    y_top = sa + 14.0

    xs, ys = _scherk_seed_grid(alpha)
    cols, rows = np.meshgrid(xs, ys, indexing="ij")
    grid = (cols + 1j * rows).ravel()
    keep = np.ones(grid.shape, dtype=bool)
    for p in punctures:
        keep &= np.abs(grid - p) > 0.03
    grid = grid[keep]

    inv_phi = _PhiInverter(kernels.MAP_SCHERK, alpha, grid, period=T)

    # --- domain geometry -----------------------------------------------
    def _reduce(x):
        k = np.round((np.asarray(x, dtype=float) - 2.0 * alpha) / T)
        return np.asarray(x, dtype=float) - k * T, k

    def _in_hull(w, slack):
        w = complex(w)
        xr, _ = _reduce(w.real)
        xr = float(xr)
        if not (0.0 < xr < 4.0 * alpha):
            return False
        return abs(w.imag) < float(_scherk_hull_halfwidth(alpha, xr)) + slack

    def contains(w):
        w = complex(w)
        xr, _ = _reduce(w.real)
        xr = float(xr)
        if abs(w.imag) < 1e-12 and (abs(xr) < 1e-12
                                    or abs(xr - 4 * alpha) < 1e-12):
            return False  # the two on-axis boundary corners
        return not _in_hull(w, 1e-12)

    def in_closure(w):
        return not _in_hull(w, -1e-9)

    def boundary(c, t):
        return complex(_scherk_gamma(alpha, t)) + int(c) * T

    def u_many(w):
        z = inv_phi.invert(np.asarray(w, dtype=complex))
        return _scherk_x3(alpha, z)

    def grad_many(w):
        z = inv_phi.invert(np.asarray(w, dtype=complex))
        return np.conjugate(_scherk_g(z))

    def second(w):
        z = inv_phi.invert(complex(w))
        d = z ** 4 - 2.0 * math.cos(2 * alpha) * z * z + 1.0
        uzz = -d / (2.0 * math.sin(2 * alpha) * (z + 1.0) ** 4)
        return (2.0 * uzz.real, -2.0 * uzz.imag, -2.0 * uzz.real)

    y_safe = float(_scherk_hull_halfwidth(alpha, 2.0 * alpha)) + 1.0

    def _side(w):
        # +-1 above/below the hull band at this abscissa, 0 in a gap
        xr, _ = _reduce(complex(w).real)
        if not (0.0 <= float(xr) <= 4.0 * alpha):
            return 0
        return 1 if complex(w).imag >= 0 else -1

    def route(w0, w1):
        # climb past the hulls on each point's own side; switch sides, if
        # needed, along a vertical line through a gap between hulls
        w0, w1 = complex(w0), complex(w1)
        s0, s1 = _side(w0), _side(w1)
        if s0 == 0:
            s0 = s1 if s1 != 0 else 1
        if s1 == 0:
            s1 = s0
        pts = [w0, complex(w0.real, s0 * y_safe)]
        if s0 != s1:
            mid = 0.5 * (w0.real + w1.real)
            k = round((mid - (2.0 * alpha + T / 2.0)) / T)
            gap = 2.0 * alpha + T / 2.0 + k * T  # midpoint of a gap
            pts += [complex(gap, s0 * y_safe), complex(gap, s1 * y_safe)]
        pts += [complex(w1.real, s1 * y_safe), w1]
        return polyline(_dedupe(pts))

    cell = (2.0 * alpha - T / 2.0, 2.0 * alpha + T / 2.0)
    t_cloud = np.linspace(-_SCHERK_T_MAX, _SCHERK_T_MAX, 400)
    cloud = np.concatenate([_scherk_gamma(alpha, t_cloud) + k * T
                            for k in (-1, 0, 1)])
    domain = DomainModel(
        contains=contains,
        u=lambda w: float(u_many(np.array([complex(w)]))[0]),
        grad_u=lambda w: _c_to_pair(grad_many(np.array([complex(w)]))[0]),
        boundary=boundary,
        n_components=None,
        in_closure=in_closure,
        second_derivs=second,
        period=T,
        bbox=(cell[0], cell[1], -6.0, 6.0),
        interior_point=complex(-0.25 * (T - 4 * alpha), 0.0),
        route=route,
        grad_u_many=grad_many,
        u_many=u_many,
        boundary_cloud=cloud,
        name=SCHERK,
    )

    # --- surface data ----------------------------------------------------
    s2, c2 = math.sin(2 * alpha), math.cos(2 * alpha)

    def _d(z):
        return z ** 4 - 2.0 * c2 * z * z + 1.0

    data = WeierstrassData(
        g=_scherk_g,
        dh_coeff=lambda z: 2.0 * s2
        * (1.0 - np.asarray(z, dtype=complex) ** 2)
        / _d(np.asarray(z, dtype=complex)),
        punctures=punctures,
        basepoint=0.0 + 0.0j,
        g_zeros=(1.0 + 0.0j,),
        g_poles=(-1.0 + 0.0j,),
        w1=lambda z: -4.0 * s2 * np.asarray(z, dtype=complex)
        / _d(np.asarray(z, dtype=complex)),
        w2=lambda z: -2.0j * s2 * (np.asarray(z, dtype=complex) ** 2 + 1.0)
        / _d(np.asarray(z, dtype=complex)),
        dphi_coeff=lambda z: -2.0 * s2
        * (np.asarray(z, dtype=complex) + 1.0) ** 2
        / _d(np.asarray(z, dtype=complex)),
        forms={"alpha": alpha, "dphi": kernels.SCHERK_DPHI,
               "dh": kernels.SCHERK_DH, "w1": kernels.SCHERK_W1,
               "w2": kernels.SCHERK_W2},
    )

    # --- psi-tilde on the chart (no closed form: chain-integrated) -------
    def _chain_points(x):
        pts = [0.0 + 0.0j, 1j * y_top, x + 1j * y_top]
        return np.array(pts, dtype=complex)

    seed_z_cols = []
    seed_psi_cols = []
    for x in xs:
        trunk = _chain_points(float(x))
        col = (float(x) + 1j * ys).astype(complex)
        chain = np.concatenate([trunk, col])
        w1c = _integrate_chain(kernels.SCHERK_W1, alpha, chain)
        w2c = _integrate_chain(kernels.SCHERK_W2, alpha, chain)
        psi_vals = w1c.real + 1j * w2c.real
        seed_z_cols.append(chain[len(trunk):])
        seed_psi_cols.append(psi_vals[len(trunk):])
    seed_z = np.concatenate(seed_z_cols)
    seed_psi = np.concatenate(seed_psi_cols)
    keep = np.abs(np.abs(_scherk_g(seed_z)) - 1.0) > 0.015
    for p in punctures:
        keep &= np.abs(seed_z - p) > 0.03
    seed_z, seed_psi = seed_z[keep], seed_psi[keep]

    def psi_tilde_many(z):
        """psi on the chart via the cut-avoiding standard routes."""
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        out = np.empty(z.shape, dtype=complex)
        for i, zz in enumerate(z):
            pts = _route_sigma(zz)
            w1c = _integrate_chain(kernels.SCHERK_W1, alpha, pts)
            w2c = _integrate_chain(kernels.SCHERK_W2, alpha, pts)
            out[i] = w1c[-1].real + 1j * w2c[-1].real
        return out

    def _route_sigma(z):
        z = complex(z)
        ysgn = y_top if z.imag >= 0 else -y_top
        pts = [0.0 + 0.0j, 1j * ysgn, complex(z.real, ysgn), z]
        return np.array(_dedupe(pts), dtype=complex)

    def dpsi_tilde(z):
        z = np.asarray(z, dtype=complex)
        gh = -2.0 * s2 * (z - 1.0) ** 2 / _d(z)          # g h
        hog = -2.0 * s2 * (z + 1.0) ** 2 / _d(z)         # h / g
        return -0.5 * gh, 0.5 * np.conjugate(hog)

    def step_ok(z, znew):
        good = znew.real > -0.1
        for p in punctures:
            good &= np.abs(znew - p) > 5e-3
            good &= _segment_clear(z, znew, p, 5e-3)
        crosses = (z.real - ca) * (znew.real - ca) < 0
        dx = znew.real - z.real
        with np.errstate(divide="ignore", invalid="ignore"):
            ycr = np.where(np.abs(dx) > 0,
                           z.imag + (ca - z.real)
                           * (znew.imag - z.imag) / np.where(dx == 0, 1, dx),
                           np.inf)
        good &= ~(crosses & (np.abs(ycr) <= sa + 5e-3))
        return good

    def incremental(z, znew):
        v1, e1, s1 = kernels.integrate_segments(kernels.SCHERK_W1, alpha,
                                                z, znew)
        v2, e2, s2_ = kernels.integrate_segments(kernels.SCHERK_W2, alpha,
                                                 z, znew)
        if (s1 != 0).any() or (s2_ != 0).any():
            raise InversionFailed("psi step integration hit a puncture")
        return v1.real + 1j * v2.real

    psi_inverter = _PsiInverter(None, dpsi_tilde, step_ok,
                                seed_z, seed_psi, incremental=incremental)

    def phi_many(z):
        return kernels.phi_forward(kernels.MAP_SCHERK, alpha,
                                   np.asarray(z, dtype=complex))

    def psi(w):
        z = inv_phi.invert(np.atleast_1d(np.asarray(w, dtype=complex)))
        out = psi_tilde_many(z)
        return out if np.ndim(w) else complex(out[0])

    def F(zhat):
        zh = np.atleast_1d(np.asarray(zhat, dtype=complex))
        k = np.round((zh.real - 2.0 * alpha) / (2.0 * math.pi))
        zred = zh - k * 2.0 * math.pi
        z = psi_inverter.invert(zred)
        out = phi_many(np.atleast_1d(z)) + k * T
        return out if np.ndim(zhat) else complex(out[0])

    def contains_hat(zhat):
        zhat = complex(zhat)
        k = round((zhat.real - 2.0 * alpha) / (2.0 * math.pi))
        xr = zhat.real - k * 2.0 * math.pi
        if not (0.0 < xr < 4.0 * alpha):
            return True
        return abs(zhat.imag) > float(_scherk_hull_halfwidth(alpha, xr))

    maps = CorrespondenceMaps(
        psi=psi,
        psi_inverse=F,
        phi=lambda z: _scalar_or_array(z, phi_many),
        F=F,
        basepoints=(0.0 + 0.0j, 0.0 + 0.0j),
        contains_hat=contains_hat,
        period=T,
        period_hat=2.0 * math.pi,
        name=SCHERK,
    )
    return FamilyTriple(domain, data, maps)


def _segment_clear(z, znew, p, r):
    """True where segment z -> znew stays at distance > r from point p."""
    z = np.asarray(z, dtype=complex)
    znew = np.asarray(znew, dtype=complex)
    d = znew - z
    L2 = np.abs(d) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.clip(np.where(L2 > 0, ((p - z) * np.conjugate(d)).real
                             / np.where(L2 == 0, 1, L2), 0.0), 0.0, 1.0)
    return np.abs(z + t * d - p) > r


# ---------------------------------------------------------------------------
# public constructors and samplers
# ---------------------------------------------------------------------------

_CACHE: dict = {}


def make_family(family: Family) -> FamilyTriple:
    """Build the (DomainModel, WeierstrassData, CorrespondenceMaps) triple."""
    key = (family.kind, family.alpha)
    if key not in _CACHE:
        if family.kind == VERTICAL:
            _CACHE[key] = _build_vertical()
        elif family.kind == HORIZONTAL:
            _CACHE[key] = _build_horizontal()
        else:
            _CACHE[key] = _build_scherk(family.alpha)
    return _CACHE[key]


def boundary_param(family: Family, component: int, t: float) -> complex:
    """Closed-form boundary point of one component at parameter t."""
    if family.kind == VERTICAL:
        _check_component(component, 1)
        return complex(np.exp(1j * float(t)))
    if family.kind == HORIZONTAL:
        _check_component(component, 2)
        eps = 1.0 if component == 0 else -1.0
        return complex(-t, -eps * (math.pi / 2 + math.cosh(t)))
    return complex(_scherk_gamma(family.alpha, float(t))) \
        + int(component) * scherk_period(family.alpha)


def scherk_implicit_residual(alpha: float, x, y):
    """Residual of the implicit boundary equation; zero on the curve."""
    Family.scherk(alpha)  # validates alpha
    ca, sa = math.cos(alpha), math.sin(alpha)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = ca * ca * np.cosh(y / ca) - sa * sa - np.cos(2.0 * alpha - x)
    return out if out.ndim else float(out)


def scaled_limit_boundary(alpha: float, mode: str, t) -> complex:
    """Scherk boundary rescaled toward its alpha -> 0 or pi/2 limit."""
    g = _scherk_gamma(alpha, t)
    if mode == "to_zero":
        out = g / (2.0 * alpha)
    elif mode == "to_half_pi":
        out = g / (math.pi - 2.0 * alpha)
    else:
        raise InvalidParameter(f"mode must be to_zero|to_half_pi, got {mode!r}")
    return out if np.ndim(t) else complex(out)


def sample_boundary(family: Family, component: int = 0, n: int = 512,
                    t_range: tuple | None = None) -> BoundaryCurve:
    """Sampled boundary polyline of one component."""
    if family.kind == VERTICAL:
        _check_component(component, 1)
        t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
        pts = np.exp(1j * t)
        return BoundaryCurve(tuple(pts), 0, True)
    if family.kind == HORIZONTAL:
        _check_component(component, 2)
        t0, t1 = t_range or (-3.0, 3.0)
        t = np.linspace(t0, t1, n)
        pts = [boundary_param(family, component, float(s)) for s in t]
        return BoundaryCurve(tuple(pts), component, False)
    t0, t1 = t_range or (-_SCHERK_T_MAX, _SCHERK_T_MAX)
    t = np.linspace(t0, t1, n - 1)
    shift = int(component) * scherk_period(family.alpha)
    pts = list(_scherk_gamma(family.alpha, t) + shift)
    pts.append(complex(shift))  # close through the origin of the component
    return BoundaryCurve(tuple(pts), component, True)


def interior_samples(domain: DomainModel, n: int, rng, margin: float = 0.15):
    """Well-interior random points: inside, with clearance from the boundary.

    Clearance is measured against the model's sampled boundary cloud, which
    is exact enough for test placement.
    """
    cloud = np.asarray(domain.boundary_cloud)
    x0, x1, y0, y1 = domain.bbox
    out = []
    attempts = 0
    while len(out) < n:
        attempts += 1
        if attempts > 400 * n:
            raise RuntimeError("interior sampling failed to fill quota")
        w = complex(rng.uniform(x0, x1), rng.uniform(y0, y1))
        if not domain.contains(w):
            continue
        if np.abs(cloud - w).min() < margin:
            continue
        out.append(w)
    return np.array(out, dtype=complex)


def chart_samples(family: Family, n: int, rng) -> np.ndarray:
    """Random points of the surface chart, clear of punctures and cuts."""
    if family.kind == VERTICAL:
        r = rng.uniform(1.15, 4.0, n)
        th = rng.uniform(-math.pi, math.pi, n)
        return r * np.exp(1j * th)
    if family.kind == HORIZONTAL:
        r = np.exp(rng.uniform(math.log(0.15), math.log(6.0), n))
        th = rng.uniform(-1.45, 1.45, n)
        return r * np.exp(1j * th)
    alpha = family.alpha
    ca, sa = math.cos(alpha), math.sin(alpha)
    out = []
    while len(out) < n:
        z = complex(rng.uniform(0.05, 3.0), rng.uniform(-3.0, 3.0))
        if abs(z - complex(ca, sa)) < 0.18 or abs(z - complex(ca, -sa)) < 0.18:
            continue
        if abs(z.real - ca) < 0.08 and abs(z.imag) < sa + 0.12:
            continue  # stay clear of the branch cut corridor
        out.append(z)
    return np.array(out, dtype=complex)


def projection_pairs(family: Family, n_pairs: int, rng):
    """Random point pairs in the projection domain, via the forward map."""
    triple = make_family(family)
    z = chart_samples(family, 2 * n_pairs, rng)
    if family.kind == VERTICAL:
        zh = 1.0 - 0.5 * (np.conjugate(z) + 1.0 / z)
    elif family.kind == HORIZONTAL:
        zh = _hcat_psi_tilde(z)
    else:
        # evaluate through the maps to stay on the principal branch
        zh = _scherk_psi_many(triple, z)
    return zh[:n_pairs], zh[n_pairs:], z[:n_pairs], z[n_pairs:]


def _scherk_psi_many(triple: FamilyTriple, z: np.ndarray) -> np.ndarray:
    alpha = triple.weierstrass.forms["alpha"]
    y_top = math.sin(alpha) + 14.0
    out = np.empty(z.shape, dtype=complex)
    for i, zz in enumerate(np.asarray(z)):
        zz = complex(zz)
        ysgn = y_top if zz.imag >= 0 else -y_top
        pts = np.array(_dedupe([0.0 + 0.0j, 1j * ysgn,
                                complex(zz.real, ysgn), zz]), dtype=complex)
        w1c = _integrate_chain(kernels.SCHERK_W1, alpha, pts)
        w2c = _integrate_chain(kernels.SCHERK_W2, alpha, pts)
        out[i] = w1c[-1].real + 1j * w2c[-1].real
    return out


# ---------------------------------------------------------------------------
# small utilities
# ---------------------------------------------------------------------------

def _check_component(c: int, n: int):
    if not (0 <= int(c) < n):
        raise BadComponent(f"component {c} invalid (family has {n})")


def _c_to_pair(g: complex) -> tuple:
    g = complex(g)
    return (g.real, g.imag)


def _scalar_or_array(x, fn):
    if np.ndim(x):
        return fn(np.asarray(x, dtype=complex))
    return complex(fn(np.asarray(complex(x))))


def _dedupe(pts):
    out = [complex(pts[0])]
    for p in pts[1:]:
        if abs(complex(p) - out[-1]) > 1e-14:
            out.append(complex(p))
    return out
