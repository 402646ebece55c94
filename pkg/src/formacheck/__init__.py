"""formacheck: formality certificates for finite-dimensional graded
commutative algebras over Q."""

__version__ = "0.1.0"

from .linalg import (MatQ, RowSpace, Vec, extend_to_complement, kernel_basis,
                     rref, solve)
from .algebra import (AlgebraStructureError, GeneratorSet, Generator,
                      GradedAlgebra, ValidationReport, choose_generators,
                      decomposables, evaluate_phi, validate)
from .model import (EFamily, GoodObject, Model, Monomial, OddGenerator,
                    build_model, compute_E, differential_matrix,
                    format_monomial, good_objects, monomials_of_degree,
                    multiply, phi_tilde)
from .cohomology import (ChainComplexError, ChainComplexQ, DegreeReport,
                         DualityRow, QuasiIsoReport, cohomology_basis,
                         duality_check, induced_map, verify_quasi_iso)
from .formality import (FORMAL_BY_THEOREM, HYPOTHESIS_VIOLATED, INCONCLUSIVE,
                        DegreeSet, Verdict, check_condition_i,
                        check_condition_ii, corollary_integer_check,
                        corollary_nonnegative_check, render_verdict)
from .formats import (InputError, format_rational, parse_algebra,
                      parse_rational, serialize_algebra)

__all__ = [
    "__version__",
    "MatQ", "RowSpace", "Vec", "rref", "kernel_basis", "solve",
    "extend_to_complement",
    "GradedAlgebra", "GeneratorSet", "Generator", "ValidationReport",
    "AlgebraStructureError", "validate", "decomposables", "choose_generators",
    "evaluate_phi",
    "Monomial", "Model", "OddGenerator", "EFamily", "GoodObject",
    "monomials_of_degree", "multiply", "compute_E", "good_objects",
    "build_model", "differential_matrix", "phi_tilde", "format_monomial",
    "DegreeReport", "QuasiIsoReport", "cohomology_basis", "induced_map",
    "verify_quasi_iso", "ChainComplexQ", "ChainComplexError", "DualityRow",
    "duality_check",
    "DegreeSet", "Verdict", "check_condition_i", "check_condition_ii",
    "corollary_integer_check", "corollary_nonnegative_check", "render_verdict",
    "FORMAL_BY_THEOREM", "INCONCLUSIVE", "HYPOTHESIS_VIOLATED",
    "InputError", "parse_algebra", "serialize_algebra", "parse_rational",
    "format_rational",
]
