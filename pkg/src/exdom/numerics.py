"""Low-level numerics: complex paths, adaptive contour quadrature, Newton
inversion of planar maps, finite-difference stencils and 1-D root finding.

Everything here is a pure function of its inputs.  Integration is adaptive
Gauss-Kronrod (G7/K15) bisection on the path parameter; integrands are
assumed smooth away from declared punctures, which callers must route
around (clearance >= 1e-6).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    NoBracket,
    NoConvergence,
    NonFiniteSample,
    SingularJacobian,
    StencilOutsideDomain,
    ToleranceNotMet,
)

__all__ = [
    "ComplexPath",
    "Segment",
    "CircularArc",
    "Polyline",
    "segment",
    "circular_arc",
    "polyline",
    "QuadratureConfig",
    "integrate_path",
    "integrate_dzbar",
    "newton_invert",
    "laplacian_residual",
    "find_root_1d",
]


# ---------------------------------------------------------------------------
# paths
# ---------------------------------------------------------------------------

class ComplexPath:
    """A parametrized curve t in [0,1] -> C with finite position/velocity."""

    def point(self, t):
        raise NotImplementedError

    def velocity(self, t):
        raise NotImplementedError

    def reversed(self) -> "ComplexPath":
        raise NotImplementedError

    @property
    def start(self) -> complex:
        return complex(self.point(0.0))

    @property
    def end(self) -> complex:
        return complex(self.point(1.0))


@dataclass(frozen=True)
class Segment(ComplexPath):
    a: complex
    b: complex

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("segment endpoints must be distinct")
        if not (_finite(self.a) and _finite(self.b)):
            raise ValueError("segment endpoints must be finite")

    def point(self, t):
        return self.a + np.asarray(t) * (self.b - self.a)

    def velocity(self, t):
        return np.full_like(np.asarray(t, dtype=float), 1.0) * (self.b - self.a)

    def reversed(self):
        return Segment(self.b, self.a)


@dataclass(frozen=True)
class CircularArc(ComplexPath):
    center: complex
    radius: float
    theta0: float
    theta1: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("arc radius must be strictly positive")
        if self.theta0 == self.theta1:
            raise ValueError("arc must subtend a nonzero angle")

    def point(self, t):
        th = self.theta0 + np.asarray(t) * (self.theta1 - self.theta0)
        return self.center + self.radius * np.exp(1j * th)

    def velocity(self, t):
        th = self.theta0 + np.asarray(t) * (self.theta1 - self.theta0)
        return 1j * (self.theta1 - self.theta0) * self.radius * np.exp(1j * th)

    def reversed(self):
        return CircularArc(self.center, self.radius, self.theta1, self.theta0)


@dataclass(frozen=True)
class Polyline(ComplexPath):
    points: tuple

    def __post_init__(self):
        pts = tuple(complex(p) for p in self.points)
        if len(pts) < 2:
            raise ValueError("polyline needs at least 2 points")
        for p, q in zip(pts, pts[1:]):
            if p == q:
                raise ValueError("consecutive polyline points must be distinct")
            if not (_finite(p) and _finite(q)):
                raise ValueError("polyline points must be finite")
        object.__setattr__(self, "points", pts)

    @property
    def segments(self) -> tuple:
        return tuple(Segment(p, q) for p, q in zip(self.points, self.points[1:]))

    def point(self, t):
        t = np.asarray(t, dtype=float)
        n = len(self.points) - 1
        s = np.clip(t * n, 0.0, n)
        i = np.minimum(s.astype(int), n - 1)
        frac = s - i
        pts = np.asarray(self.points)
        return pts[i] + frac * (pts[i + 1] - pts[i])

    def velocity(self, t):
        t = np.asarray(t, dtype=float)
        n = len(self.points) - 1
        s = np.clip(t * n, 0.0, n - 1e-12)
        i = np.minimum(s.astype(int), n - 1)
        pts = np.asarray(self.points)
        return n * (pts[i + 1] - pts[i])

    def reversed(self):
        return Polyline(tuple(reversed(self.points)))


def _finite(z) -> bool:
    z = complex(z)
    return math.isfinite(z.real) and math.isfinite(z.imag)


def segment(a: complex, b: complex) -> Segment:
    return Segment(complex(a), complex(b))


def circular_arc(center: complex, radius: float, theta0: float,
                 theta1: float) -> CircularArc:
    return CircularArc(complex(center), float(radius), float(theta0), float(theta1))


def polyline(points: Sequence[complex]) -> Polyline:
    return Polyline(tuple(points))


def full_circle(center: complex, radius: float, ccw: bool = True) -> CircularArc:
    """Closed loop |z - center| = radius, counterclockwise by default."""
    return CircularArc(complex(center), float(radius),
                       0.0, 2 * math.pi if ccw else -2 * math.pi)


# ---------------------------------------------------------------------------
# adaptive Gauss-Kronrod quadrature
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 2 ** 16

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


# G7/K15 nodes and weights (positive half; QUADPACK qk15 constants).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# full 15-node tables on [-1, 1]
GK_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
GK_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
_wg_full = np.zeros(15)
_wg_full[1:14:2] = np.concatenate([_WG[:-1], _WG[::-1]])
G_WEIGHTS = _wg_full


def _panel(F, a: float, b: float):
    """One K15/G7 evaluation of F over [a, b]; returns (I15, err, values)."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    vals = np.asarray(F(mid + half * GK_NODES))
    if not np.all(np.isfinite(vals.view(float))):
        raise NonFiniteSample(
            f"integrand returned a non-finite value on [{a}, {b}]")
    i15 = half * np.sum(GK_WEIGHTS * vals)
    i7 = half * np.sum(G_WEIGHTS * vals)
    return i15, abs(i15 - i7)


def _adaptive_01(F, cfg: QuadratureConfig) -> complex:
    """Adaptive bisection of F over the parameter interval [0, 1]."""
    value, err = _panel(F, 0.0, 1.0)
    budget = max(cfg.abs_tol, cfg.rel_tol * abs(value))
    if err <= budget:
        return complex(value)

    stack = [(0.0, 1.0, value, err)]
    total = value
    accepted = 0.0 + 0.0j
    splits = 0
    while stack:
        a, b, v, e = stack.pop()
        budget = max(cfg.abs_tol, cfg.rel_tol * abs(total))
        if e <= budget * (b - a):
            accepted += v
            continue
        splits += 1
        if splits > cfg.max_subdivisions:
            raise ToleranceNotMet(
                "subdivision budget exhausted",
                value=complex(accepted + v + sum(p[2] for p in stack)),
                error=float(e + sum(p[3] for p in stack)),
            )
        m = 0.5 * (a + b)
        v1, e1 = _panel(F, a, m)
        v2, e2 = _panel(F, m, b)
        total += (v1 + v2) - v
        stack.append((a, m, v1, e1))
        stack.append((m, b, v2, e2))
    return complex(accepted)


def integrate_path(integrand: Callable, path: ComplexPath,
                   cfg: QuadratureConfig | None = None, *,
                   vectorized: bool = False) -> complex:
    """Integrate ``integrand(z) dz`` along ``path`` adaptively.

    ``integrand`` maps complex -> complex; pass ``vectorized=True`` when it
    accepts ndarray input (much faster).  Raises :class:`NonFiniteSample` if
    a sampled value is NaN/inf and :class:`ToleranceNotMet` on budget
    exhaustion.
    """
    cfg = cfg or QuadratureConfig()
    f = integrand if vectorized else _lift(integrand)
    if isinstance(path, Polyline):
        # additivity: integrate each leg so corners never sit inside a panel
        return complex(sum(integrate_path(f, leg, cfg, vectorized=True)
                           for leg in path.segments))

    def F(t):
        return f(path.point(t)) * path.velocity(t)

    return _adaptive_01(F, cfg)


def _lift(f: Callable) -> Callable:
    def fv(z):
        return np.array([f(complex(w)) for w in np.atleast_1d(z)],
                        dtype=complex)
    return fv


def integrate_dzbar(path: ComplexPath) -> complex:
    """Exact integral of the 1-form dz̄ along any path: conj(end - start)."""
    return complex(np.conjugate(path.end - path.start))


# ---------------------------------------------------------------------------
# Newton inversion of planar maps
# ---------------------------------------------------------------------------

def newton_invert(map_fn: Callable[[complex], complex],
                  jacobian: Callable[[complex], object],
                  target: complex, guess: complex,
                  tol: float = 1e-12, max_iter: int = 50,
                  guard: Callable[[complex], bool] | None = None) -> complex:
    """Solve ``map_fn(z) = target`` by damped 2x2 Newton iteration.

    ``jacobian(z)`` returns the real 2x2 matrix [[ux, uy], [vx, vy]] of the
    map (rows: d(Re)/d(x,y), d(Im)/d(x,y)).  ``guard`` restricts iterates to
    an admissible region; steps are halved until the guard accepts.
    """
    z = complex(target) if guess is None else complex(guess)
    for _ in range(max_iter):
        r = complex(map_fn(z)) - target
        if abs(r) <= tol:
            return z
        J = np.asarray(jacobian(z), dtype=float)
        det = J[0, 0] * J[1, 1] - J[0, 1] * J[1, 0]
        scale = max(abs(J).max(), 1e-300)
        if abs(det) < 1e-14 * scale * scale:
            raise SingularJacobian(f"jacobian singular near z={z!r}")
        dx = (-r.real * J[1, 1] + r.imag * J[0, 1]) / det
        dy = (r.real * J[1, 0] - r.imag * J[0, 0]) / det
        step = complex(dx, dy)
        if guard is not None:
            k = 0
            while not guard(z + step):
                step *= 0.5
                k += 1
                if k > 60:
                    raise NoConvergence(
                        f"guard rejected every damped step near z={z!r}")
        z = z + step
    if abs(complex(map_fn(z)) - target) <= tol:
        return z
    raise NoConvergence(
        f"no convergence to {target!r} after {max_iter} iterations")


def holomorphic_jacobian(fprime: Callable[[complex], complex]):
    """Jacobian factory for a holomorphic map with derivative ``fprime``."""
    def jac(z):
        d = complex(fprime(z))
        return ((d.real, -d.imag), (d.imag, d.real))
    return jac


# ---------------------------------------------------------------------------
# finite differences
# ---------------------------------------------------------------------------

def laplacian_residual(field: Callable[[complex], float], point: complex,
                       h: float) -> float:
    """5-point O(h^2) estimate of the Laplacian of ``field`` at ``point``.

    Raises :class:`StencilOutsideDomain` when any stencil point cannot be
    evaluated (the field raises, or returns a non-finite value).
    """
    p = complex(point)
    vals = []
    for q in (p, p + h, p - h, p + 1j * h, p - 1j * h):
        try:
            v = float(field(q))
        except Exception as exc:
            raise StencilOutsideDomain(
                f"stencil point {q!r} not evaluable") from exc
        if not math.isfinite(v):
            raise StencilOutsideDomain(f"field non-finite at {q!r}")
        vals.append(v)
    c, e, w, n, s = vals
    return (e + w + n + s - 4.0 * c) / (h * h)


# ---------------------------------------------------------------------------
# 1-D root finding
# ---------------------------------------------------------------------------

def find_root_1d(f: Callable[[float], float], bracket, tol: float = 1e-12,
                 max_iter: int = 200) -> float:
    """Root of f on a sign-changing bracket: bisection with secant steps.

    Returns r with |f(r)| <= tol.  The bisection backbone guarantees
    progress; a secant candidate is used whenever it falls safely inside the
    current bracket.
    """
    a, b = float(bracket[0]), float(bracket[1])
    fa, fb = float(f(a)), float(f(b))
    if abs(fa) <= tol:
        return a
    if abs(fb) <= tol:
        return b
    if fa * fb > 0:
        raise NoBracket(f"f({a}) = {fa} and f({b}) = {fb} have the same sign")
    for _ in range(max_iter):
        mid = 0.5 * (a + b)
        x = mid
        if fb != fa:
            s = b - fb * (b - a) / (fb - fa)
            lo, hi = (a, b) if a < b else (b, a)
            margin = 0.01 * (hi - lo)
            if lo + margin < s < hi - margin:
                x = s
        fx = float(f(x))
        if abs(fx) <= tol:
            return x
        if fa * fx <= 0:
            b, fb = x, fx
        else:
            a, fa = x, fx
    raise ToleranceNotMet(f"|f| stayed above {tol} after {max_iter} iterations",
                          value=0.5 * (a + b))
