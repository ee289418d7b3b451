from .field import CyclotomicField, Scalar, ZeroDivision, cyclotomic_field, cyclotomic_polynomial
from .matrix import Matrix, Subspace, solve
from .pit import PIT_SEED, InvertibilityResult, invertible_in_subspace, symbolic_determinant

__all__ = [
    "CyclotomicField",
    "InvertibilityResult",
    "Matrix",
    "PIT_SEED",
    "Scalar",
    "Subspace",
    "ZeroDivision",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "invertible_in_subspace",
    "solve",
    "symbolic_determinant",
]
