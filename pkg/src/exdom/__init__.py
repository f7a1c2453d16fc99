"""exdom: planar exceptional domains and their minimal bigraphs.

A positive harmonic function with zero Dirichlet data and unit Neumann data
on an unbounded plane domain corresponds to a complete embedded minimal
surface that is a symmetric bigraph over a plane.  This package implements
the closed-form example families (vertical catenoid, horizontal catenoid,
the periodic Scherk family), the maps realizing the correspondence in both
directions, and a numerical harness verifying every identity the
construction rests on.
"""

from . import kernels
from .correspondence import (
    CorrespondenceMaps,
    DomainModel,
    det_dpsi,
    grad_from_gauss,
    loop_period,
    map_F,
    map_phi,
    map_psi,
    psi_differential,
)
from .errors import ExdomError
from .families import (
    BoundaryCurve,
    Family,
    FamilyTriple,
    boundary_param,
    make_family,
    sample_boundary,
    scaled_limit_boundary,
    scherk_implicit_residual,
    scherk_period,
)
from .numerics import (
    CircularArc,
    ComplexPath,
    Polyline,
    QuadratureConfig,
    Segment,
    circular_arc,
    find_root_1d,
    full_circle,
    integrate_path,
    laplacian_residual,
    newton_invert,
    polyline,
    segment,
)
from .weierstrass import (
    Point3,
    WeierstrassData,
    evaluate_immersion,
    metric_factor,
    reflect_data,
    rotate_data,
)

__version__ = "0.1.0"

__all__ = [
    "kernels",
    "CorrespondenceMaps",
    "DomainModel",
    "det_dpsi",
    "grad_from_gauss",
    "loop_period",
    "map_F",
    "map_phi",
    "map_psi",
    "psi_differential",
    "ExdomError",
    "BoundaryCurve",
    "Family",
    "FamilyTriple",
    "boundary_param",
    "make_family",
    "sample_boundary",
    "scaled_limit_boundary",
    "scherk_implicit_residual",
    "scherk_period",
    "CircularArc",
    "ComplexPath",
    "Polyline",
    "QuadratureConfig",
    "Segment",
    "circular_arc",
    "find_root_1d",
    "full_circle",
    "integrate_path",
    "laplacian_residual",
    "newton_invert",
    "polyline",
    "segment",
    "Point3",
    "WeierstrassData",
    "evaluate_immersion",
    "metric_factor",
    "reflect_data",
    "rotate_data",
    "__version__",
]
