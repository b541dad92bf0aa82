"""Weight distribution and covering radius of linear codes via reduced Walsh-Hadamard type transforms."""

from .analysis import (
    RadiusReport,
    WeightDistribution,
    code_weight_distribution,
    coset_leader_distribution_transform,
    covering_radius,
    covering_radius_transform,
    weight_distribution,
)
from .code import (
    CharacteristicVector,
    CosetLeaderProfile,
    LinearCode,
    char_function,
    characteristic_vector,
    oracle_coset_profile,
    oracle_weight_distribution,
    parity_from_generator,
    syndrome,
)
from .errors import BudgetError, IterationCapError
from .gf import Field, FieldElement, field_arith, field_new, gf
from .projective import ProjectiveTable, build_table, point_index, theta
from .spectral import (
    Composition,
    CyclotomicInteger,
    FullSpectrum,
    ReducedSpectrum,
    composition,
    pointwise_power,
    reduced_distribution,
    reduced_transform,
    trace_kernel,
    transform_full,
    vc_kernel,
)

__all__ = [
    "BudgetError",
    "CharacteristicVector",
    "Composition",
    "CosetLeaderProfile",
    "CyclotomicInteger",
    "Field",
    "FieldElement",
    "FullSpectrum",
    "IterationCapError",
    "LinearCode",
    "ProjectiveTable",
    "RadiusReport",
    "ReducedSpectrum",
    "WeightDistribution",
    "build_table",
    "char_function",
    "characteristic_vector",
    "code_weight_distribution",
    "composition",
    "coset_leader_distribution_transform",
    "covering_radius",
    "covering_radius_transform",
    "field_arith",
    "field_new",
    "gf",
    "oracle_coset_profile",
    "oracle_weight_distribution",
    "parity_from_generator",
    "point_index",
    "pointwise_power",
    "reduced_distribution",
    "reduced_transform",
    "syndrome",
    "theta",
    "trace_kernel",
    "transform_full",
    "vc_kernel",
    "weight_distribution",
]

__version__ = "0.1.0"
