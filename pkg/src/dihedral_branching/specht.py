"""Brute-force oracle: characters and D_n multiplicities from explicit Specht modules.

The Specht module of lambda is spanned by the standard polytabloids e_T. A
permutation g sends e_T to e_{gT}, which is re-expanded in the standard basis
by reading off coefficients on standard tabloids; the matrix of those
coefficients on the basis itself is unitriangular, hence invertible. Nothing
here uses character formulas, so it is an independent check of the main
path. It is exponential and refuses n > 8.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from typing import Sequence

import numpy as np

from .dihedral import DihedralGroup, DihedralIrrep, Permutation, irreps
from .partitions import Partition, conjugate
from .tableaux import standard_tableaux

SPECHT_LIMIT = 8


def _perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation i -> seq[i] of range(len(seq))."""
    seen = [False] * len(seq)
    sign = 1
    for start in range(len(seq)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = seq[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _columns(rows: Sequence[Sequence[int]], shape: Partition) -> list[list[int]]:
    return [[rows[r][c] for r in range(conj)] for c, conj in enumerate(conjugate(shape))]


def tabloid_coefficient(columns: Sequence[Sequence[int]], row_of: dict[int, int]) -> int:
    """Coefficient of the tabloid with row assignment ``row_of`` in the polytabloid
    whose columns are ``columns`` (entries listed top to bottom)."""
    sign = 1
    for col in columns:
        target = [row_of[x] for x in col]
        if sorted(target) != list(range(len(col))):
            return 0
        sign *= _perm_sign(target)
    return sign


@lru_cache(maxsize=None)
def _basis(shape: Partition):
    tableaux = list(standard_tableaux(shape))
    row_maps = [{x: r for r, row in enumerate(t.rows) for x in row} for t in tableaux]
    cols = [_columns(t.rows, shape) for t in tableaux]
    gram = np.array([[tabloid_coefficient(c, rm) for rm in row_maps] for c in cols], dtype=float)
    return tableaux, row_maps, cols, np.linalg.inv(gram)


def _check_size(n: int) -> None:
    if n > SPECHT_LIMIT:
        raise ValueError(f"the Specht oracle is limited to n <= {SPECHT_LIMIT}")


def specht_matrix(shape: Sequence[int], g: Permutation) -> np.ndarray:
    """Matrix of g on the standard polytabloid basis (column i = image of e_{T_i})."""
    shape = Partition(shape)
    _check_size(shape.size)
    tableaux, row_maps, cols, inv = _basis(shape)
    images = [[[g(x) for x in col] for col in c] for c in cols]
    coords = np.array([[tabloid_coefficient(c, rm) for rm in row_maps] for c in images], dtype=float)
    # coords = A^T gram  =>  A^T = coords gram^{-1}
    return (coords @ inv).T


def specht_character(shape: Sequence[int], g: Permutation) -> int:
    value = float(np.trace(specht_matrix(shape, g)))
    rounded = round(value)
    if abs(value - rounded) > 1e-6:
        raise ArithmeticError(f"non-integral trace {value}")
    return rounded


def _irrep_value(rep: DihedralIrrep, n: int, k: int, reflect: bool) -> complex:
    if rep.is_linear:
        r_sign, s_sign = rep.signs
        return (r_sign ** k) * (s_sign if reflect else 1)
    return 0 if reflect else 2 * cmath.cos(2 * cmath.pi * rep.j * k / n)


def specht_branching(shape: Sequence[int]) -> dict[DihedralIrrep, int]:
    """D_n multiplicities by averaging traces over all 2n elements."""
    shape = Partition(shape)
    n = shape.size
    _check_size(n)
    group = DihedralGroup(n)
    traces = {(k, f): specht_character(shape, group.element(k, f)) for k, f in group.coordinates()}
    out = {}
    for rep in irreps(n):
        total = sum(t * _irrep_value(rep, n, k, f).conjugate() for (k, f), t in traces.items())
        value = total / (2 * n)
        rounded = round(value.real)
        if abs(value - rounded) > 1e-6:
            raise ArithmeticError(f"non-integral multiplicity {value} for {rep.label}")
        out[rep] = rounded
    return out
