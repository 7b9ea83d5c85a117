"""Structure-constant tables: classical chains, Clifford machinery, the
five exceptional algebras, Jacobi verification, Killing forms, and the
text import/export format."""

from .tables import (
    StructureTable, BuildRecipe, BasisMismatch,
    so_table, su_table, sp_table,
    extend_orthogonal, extend_unitary, extend_symplectic,
)
from .cliffords import CliffordRep, Unsupported, clifford, spin_wedge_decomposition
from .jacobi import JacobiReport, JacobiFailure, verify_jacobi
from .killing import killing_form
from .exceptional import NormalizationUnsolvable, build_exceptional, assemble_exceptional
from .tableio import dump_table, load_table, FormatError

__all__ = [
    "StructureTable", "BuildRecipe", "BasisMismatch",
    "so_table", "su_table", "sp_table",
    "extend_orthogonal", "extend_unitary", "extend_symplectic",
    "CliffordRep", "Unsupported", "clifford", "spin_wedge_decomposition",
    "JacobiReport", "JacobiFailure", "verify_jacobi",
    "killing_form",
    "NormalizationUnsolvable", "build_exceptional", "assemble_exceptional",
    "dump_table", "load_table", "FormatError",
]
