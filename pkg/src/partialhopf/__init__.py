"""Exact verification of twisted partial Hopf actions and partial crossed products.

The Sweedler Hopf algebra acts on three 4-dimensional quaternion-type
algebras through tables whose entries are polynomials in free
parameters.  This package checks the action axioms over every basis
tuple with exact rational arithmetic and builds the resulting crossed
product algebras.
"""
from .algebra import AlgebraElement, StructureAlgebra, TensorElement, check_associative, check_unital
from .catalog import CATALOG_IDS, load
from .crossed_product import (
    BasisExtraction,
    SmashElement,
    check_table_associative,
    check_unit,
    express_in_basis,
    extract_basis,
    numeric_rank,
    product_table,
    smash_mul,
    smash_of,
    structure_constants,
)
from .definition import DefinitionDocument, load_definition, parse_definition, print_definition
from .errors import (
    DefinitionError,
    DuplicateBlock,
    MissingParameter,
    NotInSpan,
    PartialHopfError,
    UndeclaredLabel,
    UndeclaredParameter,
    UnknownCatalogId,
)
from .expression import evaluate_expression
from .hopf import HopfData, check_hopf, coproduct_n
from .partial_action import PartialActionData, act, cocycle, specialization_check, verify_all
from .report import Entry, VerificationReport
from .symbolic import Polynomial, parse_polynomial, var

__all__ = [
    "AlgebraElement", "StructureAlgebra", "TensorElement", "check_associative", "check_unital",
    "CATALOG_IDS", "load",
    "BasisExtraction", "SmashElement", "check_table_associative", "check_unit", "express_in_basis",
    "extract_basis", "numeric_rank", "product_table", "smash_mul", "smash_of", "structure_constants",
    "DefinitionDocument", "load_definition", "parse_definition", "print_definition",
    "DefinitionError", "DuplicateBlock", "MissingParameter", "NotInSpan", "PartialHopfError",
    "UndeclaredLabel", "UndeclaredParameter", "UnknownCatalogId",
    "evaluate_expression",
    "HopfData", "check_hopf", "coproduct_n",
    "PartialActionData", "act", "cocycle", "specialization_check", "verify_all",
    "Entry", "VerificationReport",
    "Polynomial", "parse_polynomial", "var",
]
