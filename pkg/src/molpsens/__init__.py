"""Geometric sensitivity analysis for multiobjective linear programs in the plane."""

from .angles import AngularInterval, PolarVector, decompose, interval_contains, rotate, to_polar
from .classify import ClassLabel, classify, enumerate_ns, realize
from .cone import GradientCone, ObjectiveBundle, contains_direction, extreme_rays
from .efficient_set import EfficientSet, efficient_chain, reduce_to_tolp
from .errors import (
    AngleOutOfTolerance,
    DegenerateCombination,
    DegenerateRegion,
    EdgeOptimal,
    EmptyRegion,
    GeometryError,
    InfeasiblePoint,
    NonAdjacentTie,
    ParseError,
    UnboundedRegion,
    WideCone,
    ZeroDirection,
    ZeroGradient,
    ZeroVector,
)
from .oracle import bruteforce_efficient, is_dominated
from .polytope import (
    Chain,
    HalfPlane,
    Polygon,
    boundary_curve,
    edge_angles,
    enumerate_vertices,
    point_on_chain,
    wrap_index,
)
from .problem import ProblemFile
from .sensitivity import (
    SensitivityClass,
    in_class,
    is_equivalent,
    molp_sensitivity,
    mono_tolerance,
    sample_member,
)
from .solver import Face, argmax_face, argmax_value

__version__ = "0.1.0"
