"""Standard Young tableaux, descents and the major index.

Enumerating tableaux is the slow, obviously-correct side of the cyclic
branching numbers: ``maj_counts`` is the reference that the character-sum
formula in :mod:`dihedral_branching.branching` is checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import Partition

MAJ_ENUMERATION_LIMIT = 14


@dataclass(frozen=True)
class StandardTableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = Partition(self.shape)
        object.__setattr__(self, "shape", shape)
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != tuple(shape):
            raise ValueError("row lengths do not match the shape")
        if sorted(x for r in rows for x in r) != list(range(1, shape.size + 1)):
            raise ValueError("entries must be exactly 1..n")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError("rows must increase")
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise ValueError("columns must increase")

    @property
    def size(self) -> int:
        return self.shape.size

    def row_of(self) -> dict[int, int]:
        return {x: i for i, r in enumerate(self.rows) for x in r}


def standard_tableaux(shape: Sequence[int]) -> Iterator[StandardTableau]:
    """Every SYT of ``shape``.

    Entries 1..n are placed one at a time into an addable corner of the cells
    filled so far; corners are tried top row first, so the row tableau (when
    it exists) comes out first.
    """
    shape = Partition(shape)
    n = shape.size
    rows: list[list[int]] = [[] for _ in shape]

    def rec(k: int):
        if k > n:
            yield StandardTableau(shape, tuple(tuple(r) for r in rows))
            return
        for i, row in enumerate(rows):
            if len(row) < shape[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(k)
                yield from rec(k + 1)
                row.pop()

    yield from rec(1)


def descent_set(t: StandardTableau) -> set[int]:
    where = t.row_of()
    return {i for i in range(1, t.size) if where[i + 1] > where[i]}


def maj(t: StandardTableau) -> int:
    return sum(descent_set(t))


def maj_counts(shape: Sequence[int], modulus: int) -> list[int]:
    """Histogram of maj over SYT(shape), reduced modulo ``modulus``.

    Counts are accumulated by a DFS that carries the running maj, so no
    tableau objects are built. Refused for shapes above 14 cells.
    """
    shape = Partition(shape)
    if modulus < 1:
        raise ValueError("modulus must be positive")
    n = shape.size
    if n > MAJ_ENUMERATION_LIMIT:
        raise ValueError(
            f"maj enumeration refused for n={n} > {MAJ_ENUMERATION_LIMIT}; "
            "use branching.cyclic_coeffs instead"
        )
    counts = _maj_polynomial(tuple(shape))
    out = [0] * modulus
    for m, c in enumerate(counts):
        out[m % modulus] += c
    return out


@lru_cache(maxsize=256)
def _maj_polynomial(shape: tuple) -> tuple[int, ...]:
    """Coefficient list of sum over SYT of q^maj, by direct enumeration."""
    n = sum(shape)
    top = n * (n - 1) // 2
    counts = [0] * (top + 1)
    filled = [0] * len(shape)

    def rec(k: int, last_row: int, acc: int):
        if k > n:
            counts[acc] += 1
            return
        for i in range(len(shape)):
            if filled[i] < shape[i] and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                # k-1 is a descent when k lands strictly below k-1
                rec(k + 1, i, acc + (k - 1 if k > 1 and i > last_row else 0))
                filled[i] -= 1

    rec(1, -1, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def maj_generating_function(shape: Sequence[int]) -> list[int]:
    """Coefficients of sum over SYT(shape) of q^maj (enumeration, n <= 14)."""
    shape = Partition(shape)
    if shape.size > MAJ_ENUMERATION_LIMIT:
        raise ValueError("maj enumeration refused above 14 cells")
    return list(_maj_polynomial(tuple(shape)))


def dimension(shape: Sequence[int]) -> int:
    """f^shape by the hook-length formula, exact."""
    shape = Partition(shape)
    return _dimension(tuple(shape))


@lru_cache(maxsize=None)
def _dimension(shape: tuple) -> int:
    p = Partition(shape)
    numerator = math.factorial(p.size)
    denominator = math.prod(p.hook_lengths())
    result, rest = divmod(numerator, denominator)
    if rest:
        raise ArithmeticError(f"hook-length division not exact for {shape}")
    return result
