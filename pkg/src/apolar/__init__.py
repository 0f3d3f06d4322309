"""Simultaneous Waring decompositions of binary forms via apolarity."""

from .apolarity import (
    DependentFormsError,
    GradedSubspace,
    KminResult,
    VspsResult,
    catalecticant_matrix,
    compute_kmin,
    find_squarefree_witness,
    inverse_system_component,
    kmin_formula,
    orthogonal_component,
    search_squarefree_witness,
    simultaneous_orthogonal_component,
    vsps,
    vssp_dim_formula,
)
from .curves import (
    CurveSpec,
    SecantReport,
    emptiness_bound_check,
    generic_secant_table,
    genericity_probe,
    make_curve,
    secant_space,
)
from .decompose import (
    Decomposition,
    RootSet,
    binary_form_roots,
    decompose,
    decompose_with_witness,
    solve_coefficients,
    verify_decomposition,
)
from .forms import (
    BinaryForm,
    DualForm,
    LinearForm,
    ProjectivePoint,
    apolar_apply,
    expand_power_sum,
    form_gcd,
    squarefree_test,
)
from .kernels import BACKEND
from .linalg import RationalMatrix, SubspaceBasis, intersect_subspaces, kernel, rank, solve_linear

__version__ = "0.1.0"

__all__ = [
    "apolar_apply",
    "BACKEND",
    "binary_form_roots",
    "BinaryForm",
    "catalecticant_matrix",
    "compute_kmin",
    "CurveSpec",
    "decompose",
    "decompose_with_witness",
    "Decomposition",
    "DependentFormsError",
    "DualForm",
    "emptiness_bound_check",
    "expand_power_sum",
    "find_squarefree_witness",
    "form_gcd",
    "generic_secant_table",
    "genericity_probe",
    "GradedSubspace",
    "intersect_subspaces",
    "inverse_system_component",
    "kernel",
    "kmin_formula",
    "KminResult",
    "LinearForm",
    "make_curve",
    "orthogonal_component",
    "ProjectivePoint",
    "rank",
    "RationalMatrix",
    "RootSet",
    "search_squarefree_witness",
    "secant_space",
    "SecantReport",
    "simultaneous_orthogonal_component",
    "solve_coefficients",
    "solve_linear",
    "squarefree_test",
    "SubspaceBasis",
    "verify_decomposition",
    "vsps",
    "VspsResult",
    "vssp_dim_formula",
]
