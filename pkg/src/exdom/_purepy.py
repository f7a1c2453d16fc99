"""Pure-Python (NumPy) kernel lane.

Mirrors the compiled extension ``exdom._core``: vectorized evaluation of the
family 1-forms, batched adaptive G7/K15 integration over straight segments,
and batched Newton inversion of the family forward maps.  Semantics are kept
identical so either lane can back the rest of the library.
"""

from __future__ import annotations

import numpy as np

from . import _ids as K

BACKEND = "python"

# G7/K15 tables on [-1, 1] (QUADPACK qk15 constants).
_XGK_HALF = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK_HALF = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG_HALF = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
NODES = np.concatenate([-_XGK_HALF[:-1], _XGK_HALF[::-1]])
WK = np.concatenate([_WGK_HALF[:-1], _WGK_HALF[::-1]])
WG = np.zeros(15)
WG[1:14:2] = np.concatenate([_WG_HALF[:-1], _WG_HALF[::-1]])


# ---------------------------------------------------------------------------
# form evaluation
# ---------------------------------------------------------------------------

def form_values(form: int, alpha: float, z):
    """Vectorized integrand values for one of the catalogued 1-forms."""
    z = np.asarray(z, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        if form == K.VCAT_DPHI:
            return np.full_like(z, -1.0)
        if form == K.VCAT_DH:
            return 1.0 / z
        if form == K.VCAT_W1:
            return 0.5 * (1.0 / (z * z) - 1.0)
        if form == K.VCAT_W2:
            return -0.5j * (1.0 + 1.0 / (z * z))
        if form == K.HCAT_DPHI:
            return -(1.0 + z) ** 2 / (2.0 * z * z)
        if form == K.HCAT_DH:
            return (z * z - 1.0) / (2.0 * z * z)
        if form == K.HCAT_W1:
            return -1.0 / z
        if form == K.HCAT_W2:
            return -0.5j * (1.0 + z * z) / (z * z)
        s2, c2 = np.sin(2 * alpha), np.cos(2 * alpha)
        d = z ** 4 - 2.0 * c2 * z * z + 1.0
        if form == K.SCHERK_DPHI:
            return -2.0 * s2 * (z + 1.0) ** 2 / d
        if form == K.SCHERK_DH:
            return 2.0 * s2 * (1.0 - z * z) / d
        if form == K.SCHERK_W1:
            return -4.0 * s2 * z / d
        if form == K.SCHERK_W2:
            return -2.0j * s2 * (z * z + 1.0) / d
    raise ValueError(f"unknown form id {form}")


# ---------------------------------------------------------------------------
# batched adaptive segment integration
# ---------------------------------------------------------------------------

def integrate_segments(form: int, alpha: float, a, b,
                       rel_tol: float = 1e-10, abs_tol: float = 1e-13,
                       max_panels: int = 4096):
    """Adaptively integrate a catalogued form along straight segments a->b.

    Returns ``(values, errors, status)`` with one entry per segment; status
    0 = ok, 1 = tolerance not met (budget exhausted), 2 = non-finite sample.
    """
    a = np.atleast_1d(np.asarray(a, dtype=complex))
    b = np.atleast_1d(np.asarray(b, dtype=complex))
    n = a.size
    out = np.zeros(n, dtype=complex)
    errs = np.zeros(n)
    status = np.zeros(n, dtype=np.int64)
    panels_used = np.zeros(n, dtype=np.int64)

    def eval_panels(seg, t0, t1):
        half = 0.5 * (t1 - t0)
        mid = 0.5 * (t0 + t1)
        t = mid[:, None] + half[:, None] * NODES[None, :]
        z = a[seg, None] + t * (b[seg] - a[seg])[:, None]
        f = form_values(form, alpha, z) * (b[seg] - a[seg])[:, None]
        i15 = half * (f @ WK)
        i7 = half * (f @ WG)
        bad = ~np.isfinite(f).all(axis=1)
        return i15, np.abs(i15 - i7), bad

    seg = np.arange(n)
    t0 = np.zeros(n)
    t1 = np.ones(n)
    i15, perr, bad = eval_panels(seg, t0, t1)
    status[seg[bad]] = K.STATUS_NONFINITE
    dens = np.maximum(abs_tol, rel_tol * np.abs(i15))  # per-segment budget

    while seg.size:
        live = status[seg] == K.STATUS_OK
        accept = live & (perr <= dens[seg] * (t1 - t0))
        np.add.at(out, seg[accept], i15[accept])
        np.add.at(errs, seg[accept], perr[accept])
        split = live & ~accept
        seg, t0, t1 = seg[split], t0[split], t1[split]
        if not seg.size:
            break
        np.add.at(panels_used, seg, 1)
        over = panels_used[seg] > max_panels
        if over.any():
            # budget exhausted: flag and drop the pending panels
            status[seg[over]] = K.STATUS_TOL
            keep = ~over
            seg, t0, t1 = seg[keep], t0[keep], t1[keep]
            if not seg.size:
                break
        tm = 0.5 * (t0 + t1)
        seg = np.repeat(seg, 2)
        lo = np.empty(seg.size)
        hi = np.empty(seg.size)
        lo[0::2], hi[0::2] = t0, tm
        lo[1::2], hi[1::2] = tm, t1
        t0, t1 = lo, hi
        i15, perr, bad = eval_panels(seg, t0, t1)
        newly_bad = seg[bad]
        status[newly_bad] = K.STATUS_NONFINITE

    out[status == K.STATUS_NONFINITE] = np.nan
    return out, errs, status


# ---------------------------------------------------------------------------
# forward maps and Newton inversion
# ---------------------------------------------------------------------------

def phi_forward(map_id: int, alpha: float, z):
    z = np.asarray(z, dtype=complex)
    if map_id == K.MAP_HCAT:
        return 1.0 / (2.0 * z) - np.log(z) - 0.5 * z
    if map_id == K.MAP_SCHERK:
        ca = np.cos(alpha)
        eia = np.exp(1j * alpha)
        emia = np.conj(eia)
        return (1j * (1 + ca) * np.log((z - eia) / (z - emia))
                + 1j * (1 - ca) * np.log((z + eia) / (z + emia))
                + 4.0 * alpha)
    raise ValueError(f"unknown map id {map_id}")


def phi_prime(map_id: int, alpha: float, z):
    z = np.asarray(z, dtype=complex)
    if map_id == K.MAP_HCAT:
        return -(1.0 + z) ** 2 / (2.0 * z * z)
    if map_id == K.MAP_SCHERK:
        s2, c2 = np.sin(2 * alpha), np.cos(2 * alpha)
        return -2.0 * s2 * (z + 1.0) ** 2 / (z ** 4 - 2.0 * c2 * z * z + 1.0)
    raise ValueError(f"unknown map id {map_id}")


def _step_blocked(map_id, alpha, z, znew):
    """True where a Newton step leaves the admissible region.

    Both maps live on the closed right half-plane; the formulas continue
    analytically a little past the imaginary axis, so boundary preimages
    (Re z = 0) stay reachable.  The Scherk branch additionally must not
    cross the vertical cut joining the punctures e^{+-ia}.
    """
    blocked = znew.real <= -0.1
    if map_id == K.MAP_HCAT:
        return blocked | (np.abs(znew) < 1e-9)
    ca, sa = np.cos(alpha), np.sin(alpha)
    for p in (complex(ca, sa), complex(ca, -sa)):
        blocked |= np.abs(znew - p) < 1e-9
    dx = znew.real - z.real
    crosses = (z.real - ca) * (znew.real - ca) < 0
    with np.errstate(divide="ignore", invalid="ignore"):
        ycross = np.where(crosses & (dx != 0),
                          z.imag + (ca - z.real) * (znew.imag - z.imag)
                          / np.where(dx == 0, 1.0, dx),
                          np.inf)
    return blocked | (crosses & (np.abs(ycross) <= sa + 1e-9))


def phi_inverse(map_id: int, alpha: float, targets, seeds,
                tol: float = 1e-13, max_iter: int = 60):
    """Batched guarded Newton solve of ``phi(z) = target`` from given seeds.

    Returns ``(z, ok)``; non-converged entries keep their last iterate with
    ``ok = False``.
    """
    w = np.atleast_1d(np.asarray(targets, dtype=complex))
    z = np.array(np.broadcast_to(np.asarray(seeds, dtype=complex), w.shape),
                 dtype=complex)
    ok = np.zeros(w.shape, dtype=bool)
    active = np.ones(w.shape, dtype=bool)
    for _ in range(max_iter):
        idx = np.nonzero(active)[0]
        if idx.size == 0:
            break
        zi = z[idx]
        r = phi_forward(map_id, alpha, zi) - w[idx]
        done = np.abs(r) <= tol
        ok[idx[done]] = True
        active[idx[done]] = False
        idx = idx[~done]
        if idx.size == 0:
            break
        zi = z[idx]
        d = phi_prime(map_id, alpha, zi)
        step = -(r[~done]) / d
        znew = zi + step
        for _halve in range(60):
            blocked = _step_blocked(map_id, alpha, zi, znew)
            if not blocked.any():
                break
            step = np.where(blocked, 0.5 * step, step)
            znew = zi + step
        z[idx] = znew
    # final residual check for points that used all iterations
    idx = np.nonzero(active)[0]
    if idx.size:
        r = phi_forward(map_id, alpha, z[idx]) - w[idx]
        ok[idx] = np.abs(r) <= tol
    return z, ok
