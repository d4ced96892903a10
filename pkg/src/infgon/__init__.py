"""Arc combinatorics on the infinity-gon.

Admissible integer arcs model the indecomposable objects of an n-cluster
category of the infinity-gon; crossing of arcs detects extension spaces.
The package computes exact Hom/Ext dimensions, non-crossing closures,
fountain loci, verifies the four-condition characterization of n-cotorsion
pairs on integer windows, and realizes their mutation as rotation of arcs in
the cells cut out by a divider set.  Every nontrivial claim is backed by a
brute-force oracle in :mod:`infgon.oracles`.
"""

from .arcs import (
    Arc,
    ModelParams,
    component,
    cross,
    is_admissible,
    normalize,
    serre,
    shift,
    tau,
)
from .arcsets import (
    ArcSet,
    FinitenessReport,
    PtolemyReport,
    Window,
    admissible_arcs_in,
    contains,
    crosses_set,
    double_nc_extras,
    finiteness_check,
    fountain_loci,
    frame,
    in_nc_nc,
    is_ptolemy_window,
    members_in_window,
    nc_window,
)
from .cotorsion import Condition, PairReport, RigidityReport, check_pair, core, rigidity_check
from .documents import Document, parse_document, serialize_document
from .errors import InfgonError
from .families import Band, Family, HalfLeft, HalfRight, LeftFan, RightFan
from .homs import (
    ExtCase,
    ExtKind,
    ExtTriangle,
    ext1_case,
    ext_dim,
    ext_profile,
    ext_triangle,
    hom_dim,
)
from .mutation import (
    DividerSet,
    RotationResult,
    mutate_pair,
    mutation_via_triangle,
    predecessor,
    rotate_arc,
    rotate_arc_inverse,
    rotate_set,
    successor,
)
from .regions import IntRegion

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcSet",
    "Band",
    "Condition",
    "DividerSet",
    "Document",
    "ExtCase",
    "ExtKind",
    "ExtTriangle",
    "Family",
    "FinitenessReport",
    "HalfLeft",
    "HalfRight",
    "InfgonError",
    "IntRegion",
    "LeftFan",
    "ModelParams",
    "PairReport",
    "PtolemyReport",
    "RightFan",
    "RigidityReport",
    "RotationResult",
    "Window",
    "admissible_arcs_in",
    "check_pair",
    "component",
    "contains",
    "core",
    "cross",
    "crosses_set",
    "double_nc_extras",
    "ext1_case",
    "ext_dim",
    "ext_profile",
    "ext_triangle",
    "finiteness_check",
    "fountain_loci",
    "frame",
    "hom_dim",
    "in_nc_nc",
    "is_admissible",
    "is_ptolemy_window",
    "members_in_window",
    "mutate_pair",
    "mutation_via_triangle",
    "nc_window",
    "normalize",
    "parse_document",
    "predecessor",
    "rigidity_check",
    "rotate_arc",
    "rotate_arc_inverse",
    "rotate_set",
    "serialize_document",
    "serre",
    "shift",
    "successor",
    "tau",
]
