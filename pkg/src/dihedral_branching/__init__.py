"""Exact branching of symmetric and alternating group characters to dihedral and cyclic subgroups."""

__version__ = "0.1.0"

from .partitions import Partition, SkewShape, conjugate, parse_partition, partitions_of  # noqa: E402
from .dihedral import DihedralGroup, DihedralIrrep, Permutation, irreps  # noqa: E402
from .characters import CharacterQuery, SplitCharacterValue, chi, chi_an  # noqa: E402
from .branching import (  # noqa: E402
    BranchingTable,
    CyclicSpectrum,
    branch_alternating,
    branch_dihedral,
    cyclic_coeffs,
)

__all__ = [
    "BranchingTable",
    "CharacterQuery",
    "CyclicSpectrum",
    "DihedralGroup",
    "DihedralIrrep",
    "Partition",
    "Permutation",
    "SkewShape",
    "SplitCharacterValue",
    "branch_alternating",
    "branch_dihedral",
    "chi",
    "chi_an",
    "conjugate",
    "cyclic_coeffs",
    "irreps",
    "parse_partition",
    "partitions_of",
]
