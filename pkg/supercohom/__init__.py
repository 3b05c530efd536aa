from importlib.metadata import version

from supercohom.catalog import lift, make, relative_coboundary_generators
from supercohom.cohomology import (
    CoboundaryResult,
    Cochain1,
    CocycleCheck,
    coboundary_solve,
    cochain_basis,
    delta0,
    delta1,
    h1_dimension,
    is_cocycle,
    is_relative_cochain,
    pi_twist,
)
from supercohom.contact import (
    Algebra,
    ContactField,
    Density,
    GeneratorId,
    basis_of,
    contact_bracket,
    field_apply,
    lie_derivative,
    structure_constants,
)
from supercohom.family import CatalogEntry, CatalogFamily
from supercohom.invariants import (
    BilinearOp,
    ClassificationResult,
    check_closed_form,
    classify,
    scan_constraint_variety,
)
from supercohom.linalg import InconsistencyCertificate, LinearSystem, Solution
from supercohom.operators import (
    SuperDiffOp,
    module_action,
    op_apply,
    op_compose,
    phi_split,
    psi_blocks,
    psi_transport,
    weight_of,
)
from supercohom.results import H1Report, VerificationReport
from supercohom.superfield import (
    Parity,
    SuperFunction,
    eta_bar,
    parity_of,
    partial_theta,
    partial_x,
    sf_mul,
)

__version__ = version(__package__ or __name__)

__all__ = [
    "__version__",
    "SuperFunction",
    "Parity",
    "sf_mul",
    "partial_x",
    "partial_theta",
    "eta_bar",
    "parity_of",
    "Algebra",
    "GeneratorId",
    "ContactField",
    "Density",
    "field_apply",
    "contact_bracket",
    "lie_derivative",
    "basis_of",
    "structure_constants",
    "SuperDiffOp",
    "op_apply",
    "op_compose",
    "module_action",
    "weight_of",
    "phi_split",
    "psi_transport",
    "psi_blocks",
    "LinearSystem",
    "Solution",
    "InconsistencyCertificate",
    "Cochain1",
    "CocycleCheck",
    "CoboundaryResult",
    "pi_twist",
    "delta0",
    "delta1",
    "is_cocycle",
    "is_relative_cochain",
    "coboundary_solve",
    "cochain_basis",
    "h1_dimension",
    "H1Report",
    "VerificationReport",
    "CatalogEntry",
    "CatalogFamily",
    "make",
    "lift",
    "relative_coboundary_generators",
    "BilinearOp",
    "ClassificationResult",
    "classify",
    "check_closed_form",
    "scan_constraint_variety",
]
