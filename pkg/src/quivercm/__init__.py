"""Exact computations with quiver representations and their orbit closures."""

from .degeneration import DegenerationPoset, corollary1_check, degeneration_poset, export_dot, hom_leq
from .errors import InputError, NotApplicableError, QuiverCMError, ScaleError, VerificationError
from .fields import GF, QQ, field_from_name
from .formats import parse_quiver, parse_representation, serialize_quiver, serialize_representation
from .homogeneity import is_homogeneous, is_isomorphic_generic, scaling_isomorphism
from .homology import (
    end_dim,
    ext1_dim,
    hom_dim,
    hom_space,
    invariant_report,
    is_orbit_closed,
    is_orbit_open,
    orbit_dim,
    pd_formula,
)
from .quiver import (
    Quiver,
    Representation,
    classify,
    direct_sum,
    dynkin_quiver,
    kronecker_quiver,
    linear_quiver,
    loop_quiver,
    rep_space_dim,
    scale_representation,
)
from .roots import OrbitLabel, decompose, enumerate_orbits, indecomposable, positive_roots, representation_of

__version__ = "0.1.0"
