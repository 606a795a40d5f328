"""Lattice polytopes from Dyck paths on type-B root posets, with exact
point enumeration and independent representation-theoretic oracles."""

__version__ = "0.1.0"

from .roots import (  # noqa: F401
    Root,
    RootSystem,
    Weight,
    build_root_system,
    hasse_covers,
    pairing,
    radical_roots,
    root_from_label,
    total_order_compare,
    truncated_radical,
)
from .dyck import DyckPath, type1_paths, type2_paths, validate_path  # noqa: F401
from .systems import (  # noqa: F401
    InequalitySystem,
    b3_omega1_system,
    b3_system,
    g2_system,
    instantiate,
    rectangular_system,
)
from .lattice import (  # noqa: F401
    LatticeSet,
    QCharacter,
    character,
    coordinate_bounds,
    count_points,
    enumerate_points,
    graded_q_character,
    weight_of,
)
from .minkowski import (  # noqa: F401
    MinkowskiReport,
    check_b3_minkowski,
    check_rectangular_decomposition,
    minkowski_gap_witnesses,
    minkowski_sum,
    normality_check,
)
from .weyl import (  # noqa: F401
    b3_weyl_polynomial,
    freudenthal_multiplicities,
    simplex_identity_check,
    weyl_dimension,
)
