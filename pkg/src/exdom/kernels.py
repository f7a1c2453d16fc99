"""Kernel backend selector.

The hot inner loops (adaptive segment quadrature of the family 1-forms and
Newton inversion of the family forward maps) exist in two interchangeable
lanes:

* ``exdom._core``   - Cython extension, built at install time when possible;
* ``exdom._purepy`` - vectorized NumPy fallback with identical semantics.

The compiled lane is used when it imported successfully.  Set the
environment variable ``EXDOM_BACKEND=python`` (or ``compiled``) to force a
lane; forcing ``compiled`` raises if the extension is missing.
"""

from __future__ import annotations

import os

from . import _ids
from ._ids import (  # noqa: F401  (re-exported ids)
    FORM_NAMES,
    HCAT_DH,
    HCAT_DPHI,
    HCAT_W1,
    HCAT_W2,
    MAP_HCAT,
    MAP_SCHERK,
    SCHERK_DH,
    SCHERK_DPHI,
    SCHERK_W1,
    SCHERK_W2,
    STATUS_NONFINITE,
    STATUS_OK,
    STATUS_TOL,
    VCAT_DH,
    VCAT_DPHI,
    VCAT_W1,
    VCAT_W2,
)


def _select():
    choice = os.environ.get("EXDOM_BACKEND", "auto").lower()
    if choice not in ("auto", "compiled", "python"):
        raise ValueError(f"EXDOM_BACKEND must be auto|compiled|python, got {choice!r}")
    if choice in ("auto", "compiled"):
        try:
            from . import _core
            return _core
        except ImportError:
            if choice == "compiled":
                raise
    from . import _purepy
    return _purepy


_impl = _select()

BACKEND: str = _impl.BACKEND
form_values = _impl.form_values
integrate_segments = _impl.integrate_segments
phi_forward = _impl.phi_forward
phi_prime = _impl.phi_prime
phi_inverse = _impl.phi_inverse

__all__ = [
    "BACKEND",
    "form_values",
    "integrate_segments",
    "phi_forward",
    "phi_prime",
    "phi_inverse",
] + [name for name in dir(_ids) if name.isupper()]
