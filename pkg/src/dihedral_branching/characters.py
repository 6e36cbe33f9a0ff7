"""Exact irreducible character values of S_n and of the split A_n constituents.

``chi`` evaluates the Murnaghan-Nakayama rule on beta-sets (first-column
hook lengths); removing a border strip of length k is moving one bead k
places down, and the strip's height is the number of beads jumped over.
Results are memoized in a process-wide table shared by every sweep.
"""

from __future__ import annotations

import math
import os
import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import factorint

from .partitions import Partition, conjugate, cycle_type, random_partition
from .tableaux import dimension

CACHE_ENV_VAR = "DIHEDRAL_BRANCHING_CACHE_MAX"
DEFAULT_CACHE_MAX = 2_000_000


@dataclass(frozen=True)
class CharacterQuery:
    shape: Partition
    class_type: Partition

    def __post_init__(self):
        object.__setattr__(self, "shape", Partition(self.shape))
        object.__setattr__(self, "class_type", Partition(self.class_type))
        if self.shape.size != self.class_type.size:
            raise ValueError(
                f"shape {self.shape} and class {self.class_type} have different sizes"
            )


class CharacterCache:
    """Memo table for chi, guarded by a lock so worker threads may share it.

    Values are computed outside the lock; two threads racing on the same key
    both compute the same integer, so the table stays consistent.
    """

    def __init__(self, max_entries: int | None = None):
        if max_entries is None:
            max_entries = int(os.environ.get(CACHE_ENV_VAR, DEFAULT_CACHE_MAX))
        self.max_entries = max_entries
        self._table: dict[tuple[tuple, tuple], int] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        with self._lock:
            value = self._table.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, key, value: int) -> None:
        with self._lock:
            if len(self._table) >= self.max_entries:
                self._table.clear()
            self._table[key] = value

    def evict_larger_than(self, n: int) -> int:
        """Drop entries for shapes of size above ``n``; returns how many went."""
        with self._lock:
            stale = [k for k in self._table if sum(k[0]) > n]
            for k in stale:
                del self._table[k]
            return len(stale)

    def clear(self) -> None:
        with self._lock:
            self._table.clear()
            self.hits = self.misses = 0

    def __len__(self) -> int:
        return len(self._table)


CACHE = CharacterCache()


def chi(q: CharacterQuery | Sequence[int], class_type: Sequence[int] | None = None) -> int:
    """chi_lambda(mu); accepts a CharacterQuery or ``(shape, class_type)``."""
    if class_type is None:
        if not isinstance(q, CharacterQuery):
            raise TypeError("pass a CharacterQuery or a (shape, class_type) pair")
        shape, mu = q.shape, q.class_type
    else:
        shape, mu = Partition(q), Partition(class_type)
        if shape.size != mu.size:
            raise ValueError(f"shape {shape} and class {mu} have different sizes")
    return _mn(tuple(shape), tuple(mu))


def _mn(shape: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    if mu[0] == 1:
        return dimension(shape)
    if len(shape) == 1:
        return 1
    key = (shape, mu)
    cached = CACHE.get(key)
    if cached is not None:
        return cached
    k, rest = mu[0], mu[1:]
    ell = len(shape)
    beta = [shape[i] + ell - 1 - i for i in range(ell)]
    present = set(beta)
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in present:
            continue
        height = sum(1 for c in beta if t < c < b)
        new = sorted([c for c in beta if c != b] + [t], reverse=True)
        parts = [new[i] - (ell - 1 - i) for i in range(ell)]
        while parts and parts[-1] == 0:
            parts.pop()
        value = _mn(tuple(parts), rest)
        total += -value if height % 2 else value
    CACHE.put(key, total)
    return total


# -- split characters of A_n ----------------------------------------------------------


def _squarefree_split(n: int) -> tuple[int, int]:
    """Write ``n = s^2 * f`` with ``f`` squarefree (sign carried by ``f``)."""
    if n == 0:
        return 0, 1
    sign = -1 if n < 0 else 1
    square, free = 1, sign
    for p, e in factorint(abs(n)).items():
        square *= p ** (e // 2)
        free *= p ** (e % 2)
    return square, free


class SplitCharacterValue:
    """Exact number ``rational_part + surd_coeff * sqrt(surd_radicand)``.

    The radicand is kept squarefree; a value whose surd vanishes (or whose
    radicand is 1) is stored with ``surd_coeff == 0`` and radicand 1.
    """

    __slots__ = ("rational_part", "surd_coeff", "surd_radicand")

    def __init__(self, rational_part=0, surd_coeff=0, surd_radicand: int = 1):
        rational_part = Fraction(rational_part)
        surd_coeff = Fraction(surd_coeff)
        surd_radicand = int(surd_radicand)
        if surd_coeff and surd_radicand != 1:
            square, free = _squarefree_split(surd_radicand)
            surd_coeff *= square
            surd_radicand = free
        if surd_radicand == 1:
            rational_part += surd_coeff
            surd_coeff = Fraction(0)
        if surd_coeff == 0 or surd_radicand == 0:
            surd_coeff, surd_radicand = Fraction(0), 1
        self.rational_part = rational_part
        self.surd_coeff = surd_coeff
        self.surd_radicand = surd_radicand

    @classmethod
    def rational(cls, value) -> SplitCharacterValue:
        return cls(value)

    def is_rational(self) -> bool:
        return self.surd_coeff == 0

    def _coerce(self, other) -> SplitCharacterValue:
        if isinstance(other, SplitCharacterValue):
            return other
        if isinstance(other, (int, Fraction)):
            return SplitCharacterValue(other)
        return NotImplemented

    def _radicand_with(self, other: SplitCharacterValue) -> int:
        if self.is_rational():
            return other.surd_radicand
        if other.is_rational() or other.surd_radicand == self.surd_radicand:
            return self.surd_radicand
        raise ValueError(
            f"cannot combine surds sqrt({self.surd_radicand}) and sqrt({other.surd_radicand})"
        )

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._radicand_with(other)
        return SplitCharacterValue(
            self.rational_part + other.rational_part, self.surd_coeff + other.surd_coeff, d
        )

    __radd__ = __add__

    def __neg__(self):
        return SplitCharacterValue(-self.rational_part, -self.surd_coeff, self.surd_radicand)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._radicand_with(other)
        a, b = self.rational_part, self.surd_coeff
        c, e = other.rational_part, other.surd_coeff
        return SplitCharacterValue(a * c + b * e * d, a * e + b * c, d)

    __rmul__ = __mul__

    def conjugate(self) -> SplitCharacterValue:
        """Complex conjugate: flips the surd only when the radicand is negative."""
        if self.surd_radicand < 0:
            return SplitCharacterValue(self.rational_part, -self.surd_coeff, self.surd_radicand)
        return self

    def galois_conjugate(self) -> SplitCharacterValue:
        return SplitCharacterValue(self.rational_part, -self.surd_coeff, self.surd_radicand)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (
            self.rational_part == other.rational_part
            and self.surd_coeff == other.surd_coeff
            and (self.is_rational() or self.surd_radicand == other.surd_radicand)
        )

    def __hash__(self):
        return hash((self.rational_part, self.surd_coeff, self.surd_radicand))

    def __complex__(self):
        root = complex(self.surd_radicand) ** 0.5
        return complex(float(self.rational_part)) + float(self.surd_coeff) * root

    def __repr__(self):
        if self.is_rational():
            return f"SplitCharacterValue({self.rational_part})"
        return (
            f"SplitCharacterValue({self.rational_part} + {self.surd_coeff}"
            f"*sqrt({self.surd_radicand}))"
        )


def _parity(images: Sequence[int]) -> int:
    """0 for even permutations, 1 for odd."""
    ct = cycle_type(images)
    return (len(images) - len(ct)) % 2


def an_class_branch(g) -> str:
    """Which A_n class (``"+"`` or ``"-"``) an element with distinct odd cycle lengths lies in.

    The reference element of the class is the product of cycles on consecutive
    letters, longest first: ``(1 2 .. mu_1)(mu_1+1 ..)...``. A conjugator
    sigma carrying the reference onto ``g`` cycle by cycle is built and its
    parity returned; other choices of sigma differ by odd-length cycles, which
    are even permutations, so the answer does not depend on the choice.
    """
    images = list(getattr(g, "images", g))
    n = len(images)
    cycles = _cycles(images)
    lengths = [len(c) for c in cycles]
    if len(set(lengths)) != len(lengths) or any(length % 2 == 0 for length in lengths):
        raise ValueError("cycle type must have distinct odd parts")
    cycles.sort(key=len, reverse=True)
    sigma = [0] * n
    letter = 1
    for cyc in cycles:
        for x in cyc:
            sigma[letter - 1] = x
            letter += 1
    return "+" if _parity(sigma) == 0 else "-"


def _cycles(images: Sequence[int]) -> list[list[int]]:
    n = len(images)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = images[x - 1]
        out.append(cyc)
    return out


def split_data(shape: Sequence[int]) -> tuple[Partition, int, int]:
    """(diagonal hook partition, epsilon, product of diagonal hooks) of a self-conjugate shape."""
    shape = Partition(shape)
    hooks = shape.diagonal_hooks()
    d = len(hooks)
    epsilon = -1 if ((shape.size - d) // 2) % 2 else 1
    return Partition(hooks), epsilon, math.prod(hooks)


def chi_an(shape: Sequence[int], g, sign_choice: str) -> SplitCharacterValue:
    """chi_lambda^{+/-}(g) for self-conjugate ``shape`` and even permutation ``g``.

    Off the split class this is half of chi_lambda. On it the value is
    ``(eps + s*sqrt(eps*q)) / 2`` with ``q`` the product of diagonal hooks and
    ``s = +1`` exactly when the sign choice agrees with ``an_class_branch(g)``.
    """
    shape = Partition(shape)
    if sign_choice not in ("+", "-"):
        raise ValueError("sign_choice must be '+' or '-'")
    if shape != conjugate(shape):
        raise ValueError(f"character does not split: {shape} is not self-conjugate")
    images = list(getattr(g, "images", g))
    if len(images) != shape.size:
        raise ValueError("permutation degree does not match the shape")
    if _parity(images):
        raise ValueError("chi_an is defined on even permutations only")
    ct = cycle_type(images)
    hooks, epsilon, q = split_data(shape)
    if ct != hooks:
        return SplitCharacterValue(Fraction(chi(shape, ct), 2))
    s = 1 if an_class_branch(images) == sign_choice else -1
    return SplitCharacterValue(Fraction(epsilon, 2), Fraction(s, 2), epsilon * q)


# -- inequalities used for the prime case -------------------------------------------


@dataclass(frozen=True)
class BoundCheck:
    shape: Partition
    character_value: int
    dimension: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def slack(self) -> int:
        return self.rhs - self.lhs


def fomin_lulov_data(eta: Sequence[int]) -> tuple[BoundCheck, bool]:
    """Inequality chi_eta((2^m))^2 <= 2m f^eta, plus whether the sharper
    form |chi| = m! 2^m sqrt(f) / sqrt((2m)!) holds with equality."""
    eta = Partition(eta)
    if eta.size % 2:
        raise ValueError("eta must have even size")
    m = eta.size // 2
    f = dimension(eta)
    value = chi(eta, [2] * m)
    check = BoundCheck(eta, value, f, value * value, 2 * m * f)
    equality = value * value * math.factorial(2 * m) == (math.factorial(m) * 2**m) ** 2 * f
    return check, equality


def fomin_lulov_check(eta: Sequence[int]) -> bool:
    return fomin_lulov_data(eta)[0].holds


def reflection_bound_data(shape: Sequence[int]) -> BoundCheck:
    shape = Partition(shape)
    n = shape.size
    if n % 2 == 0:
        raise ValueError("reflection bound is stated for odd n")
    value = chi(shape, [2] * ((n - 1) // 2) + [1])
    f = dimension(shape)
    return BoundCheck(shape, value, f, value * value, (n - 1) * (2 * n - 1) * f)


def reflection_bound_check(shape: Sequence[int]) -> bool:
    return reflection_bound_data(shape).holds


def dimension_bound_holds(shape: Sequence[int]) -> bool:
    """f^lambda >= n^5."""
    shape = Partition(shape)
    return dimension(shape) >= shape.size**5


def in_dimension_bound_hypothesis(shape: Sequence[int]) -> bool:
    shape = Partition(shape)
    n = shape.size
    return shape[0] < n - 7 and conjugate(shape)[0] < n - 7


def few_part_partitions(n: int, max_parts: int) -> Iterable[Partition]:
    """Partitions of ``n`` with at most ``max_parts`` parts."""

    def rec(remaining, parts_left, bound, acc):
        if remaining == 0:
            yield Partition(acc)
            return
        if parts_left == 0:
            return
        for v in range(min(bound, remaining), 0, -1):
            if v * parts_left < remaining:
                break
            yield from rec(remaining - v, parts_left - 1, v, acc + [v])

    yield from rec(n, max_parts, n, [])


@dataclass
class DimensionBoundReport:
    n: int
    seed: int
    few_part_checked: int
    sampled_drawn: int
    sampled_in_hypothesis: int
    failures: list[Partition]

    @property
    def holds(self) -> bool:
        return not self.failures


def check_dimension_bound(n: int = 82, samples: int = 10_000, seed: int = 0) -> DimensionBoundReport:
    """f^lambda >= n^5 on all hypothesis-satisfying shapes with at most three
    parts, and on ``samples`` uniformly random partitions of ``n`` (those
    outside the hypothesis are drawn but not judged)."""
    failures = []
    few = 0
    for lam in few_part_partitions(n, 3):
        if not in_dimension_bound_hypothesis(lam):
            continue
        few += 1
        if not dimension_bound_holds(lam):
            failures.append(lam)
    rng = random.Random(seed)
    judged = 0
    for _ in range(samples):
        lam = random_partition(n, rng)
        if not in_dimension_bound_hypothesis(lam):
            continue
        judged += 1
        if not dimension_bound_holds(lam):
            failures.append(lam)
    return DimensionBoundReport(n, seed, few, samples, judged, failures)
