"""Exact and certified counts of rooted spanning forests in bicirculant graphs."""

from .arithmetic import (
    SequenceRow,
    SquareStructure,
    parity_profile,
    select_constant,
    sequence_table,
    square_free_part,
    theorem4_constants,
    verify_square_structure,
)
from .ball import CertifiedComplex, CertifiedReal
from .exact import det_exact, forest_count_oracle
from .families import FAMILIES, family
from .graph import (
    BicirculantSpec,
    GammaClass,
    adjacency_matrix,
    classify,
    forest_matrix,
    parse_spec,
    spec_from_json,
    spec_to_json,
)
from .laurent import (
    IntLaurentPoly,
    build_ABC,
    build_P,
    cheb_transform,
    cyclotomic_product,
    forest_count_formula,
    resultant,
)
from .numeric import (
    asymptotic_constant,
    convergence_report,
    find_roots,
    forest_count_chebyshev,
    mahler_integral,
    mahler_roots,
)

__version__ = "0.1.0"
