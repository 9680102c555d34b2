"""Minimal projective orbits of real semisimple groups via Satake diagrams.

A decorated Satake diagram (real form plus highest weight) is reduced to a
compact pair (K, W); exact root-system arithmetic backs the symbolic side and
small matrix models in :mod:`projorbit.oracle` check it numerically.
"""

from .grading import (
    EigenDecomposition,
    GradingError,
    ZGrading,
    diagram_eigenspace_dims,
    eigenspace_dims,
    split_minimal_orbit_dim,
    top_level_check,
)
from .reduction import (
    ReductionError,
    ReductionResult,
    UniquenessVerdict,
    family_reduce,
    reduce,
    unique_closed_orbit,
)
from .rootsystem import (
    RootSystem,
    RootSystemError,
    SimpleType,
    build_root_system,
    dominant_weights,
    frobenius_schur,
    weight_multiplicities,
    weyl_dim,
)
from .satake import (
    DecoratedSatakeDiagram,
    DiagramError,
    DiagramSyntaxError,
    SatakeDiagram,
    parse,
    parse_diagram,
    render,
    serialize,
    validate,
)

__version__ = "0.1.0"
