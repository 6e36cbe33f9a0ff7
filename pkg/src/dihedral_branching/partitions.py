"""Integer partitions: construction, conjugation, dominance, 2-cores and enumeration.

Partitions are immutable tuples of weakly decreasing positive integers.
Indexing past the last part returns 0, which is the usual convention for
Young diagrams and keeps the containment/dominance code free of bounds checks.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A partition of ``size`` into weakly decreasing positive parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        self = super().__new__(cls, parts)
        self._size = sum(parts)
        return self

    def __getitem__(self, index):
        if isinstance(index, int) and index >= len(self):
            return 0
        return super().__getitem__(index)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})" if self else "Partition()"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def size(self) -> int:
        return self._size

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, row in enumerate(self):
            for c in range(row):
                yield r, c

    def hook_lengths(self) -> list[int]:
        conj = conjugate(self)
        return [self[r] - c + conj[c] - r - 1 for r, c in self.cells()]

    def is_self_conjugate(self) -> bool:
        return self == conjugate(self)

    def is_hook(self) -> bool:
        return len(self) <= 1 or self[1] <= 1

    def diagonal_hooks(self) -> tuple[int, ...]:
        """Hook lengths of the diagonal cells, largest first."""
        conj = conjugate(self)
        return tuple(self[i] + conj[i] - 2 * i - 1 for i in range(len(self)) if self[i] > i)


class SkewShape(tuple):
    """The skew diagram ``outer / inner``; requires ``inner`` contained in ``outer``."""

    def __new__(cls, outer, inner=()):
        outer, inner = Partition(outer), Partition(inner)
        if not contains(outer, inner):
            raise ValueError(f"{inner!r} is not contained in {outer!r}")
        return super().__new__(cls, (outer, inner))

    @property
    def outer(self) -> Partition:
        return tuple.__getitem__(self, 0)

    @property
    def inner(self) -> Partition:
        return tuple.__getitem__(self, 1)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, row in enumerate(self.outer):
            for c in range(self.inner[r], row):
                yield r, c

    def column_lengths(self) -> list[int]:
        """Number of skew cells in each column of ``outer``."""
        oc, ic = conjugate(self.outer), conjugate(self.inner)
        return [oc[c] - ic[c] for c in range(self.outer[0])]


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form; ``-`` (or empty) is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    if any(p <= 0 for p in parts):
        raise ValueError(f"malformed partition {text!r}: parts must be positive")
    return Partition(parts)


def format_partition(p: Sequence[int]) -> str:
    return ",".join(map(str, p)) if len(p) else "-"


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part > i) for i in range(p[0]))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` is below ``b`` in dominance order (partial sums of ``a`` never exceed ``b``'s)."""
    if sum(a) != sum(b):
        raise ValueError("dominance order compares partitions of the same size")
    # beyond the shorter sequence the other's partial sums are the shared total,
    # so comparing the common prefix is enough
    return all(x <= y for x, y in zip(accumulate(a), accumulate(b)))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(i <= o for o, i in zip(outer, inner))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Every partition of ``n`` once, in descending lexicographic order.

    ``max_part`` optionally bounds the first part.
    """
    if n < 0:
        return
    if n == 0:
        yield Partition()
        return
    top = n if max_part is None else min(n, max_part)
    # Classic ZS1-style successor on a list of parts.
    if top <= 0:
        return
    parts = [top] * (n // top)
    rem = n - top * (n // top)
    if rem:
        parts.append(rem)
    while True:
        yield Partition(parts)
        # find rightmost part > 1
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        k = parts.pop() - 1
        rest = ones + 1
        parts.append(k)
        while rest > k:
            parts.append(k)
            rest -= k
        if rest:
            parts.append(rest)


@lru_cache(maxsize=None)
def partition_number(n: int) -> int:
    """p(n) through Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_number(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_number(n - g2)
        k += 1
    return total


def subpartitions(outer: Sequence[int], size: int, inner: Sequence[int] = ()) -> Iterator[Partition]:
    """Partitions ``nu`` of ``size`` with ``inner`` <= ``nu`` <= ``outer``, descending lex order."""
    outer = tuple(outer)
    rows = len(outer)
    lower = [inner[i] if i < len(inner) else 0 for i in range(rows)]
    # suffix capacities for pruning
    cap = [0] * (rows + 1)
    low = [0] * (rows + 1)
    for i in range(rows - 1, -1, -1):
        cap[i] = cap[i + 1] + outer[i]
        low[i] = low[i + 1] + lower[i]
    cur: list[int] = []

    def rec(i: int, remaining: int, bound: int):
        if i == rows:
            if remaining == 0:
                yield Partition(cur)
            return
        hi = min(outer[i], bound, remaining)
        lo = lower[i]
        for v in range(hi, lo - 1, -1):
            rest = remaining - v
            if rest > min(cap[i + 1], v * (rows - i - 1)) or rest < low[i + 1]:
                continue
            cur.append(v)
            yield from rec(i + 1, rest, v)
            cur.pop()

    if size < sum(lower) or size > sum(outer):
        return
    yield from rec(0, size, outer[0] if outer else 0)


def removable_dominoes(p: Sequence[int]) -> list[Partition]:
    """All partitions reachable from ``p`` by removing one rim domino."""
    return [q for q, _ in _rim_hooks(tuple(p), 2)]


def _rim_hooks(lam: tuple, k: int) -> list[tuple[tuple, int]]:
    """Remove every rim hook of length ``k``; returns ``(remaining, leg_length)`` pairs."""
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    present = set(beta)
    out = []
    for b in beta:
        t = b - k
        if t < 0 or t in present:
            continue
        # beads strictly between t and b give the leg length of the hook
        height = sum(1 for c in beta if t < c < b)
        new = sorted([c for c in beta if c != b] + [t], reverse=True)
        parts = tuple(new[i] - (ell - 1 - i) for i in range(ell))
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        out.append((parts, height))
    return out


def two_core(p: Sequence[int]) -> Partition:
    """Strip rim dominoes until none remain."""
    lam = tuple(p)
    while True:
        nxt = _rim_hooks(lam, 2)
        if not nxt:
            return Partition(lam)
        lam = nxt[0][0]


def cycle_type(g) -> Partition:
    """Cycle type of a permutation given by its 1-based image sequence (or an object with ``images``)."""
    images = getattr(g, "images", g)
    n = len(images)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x - 1]
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def _count_max_part(n: int, k: int) -> int:
    """Partitions of ``n`` with all parts at most ``k``."""
    if n == 0:
        return 1
    if k == 0:
        return 0
    k = min(k, n)
    return _count_max_part(n, k - 1) + _count_max_part(n - k, k)


def random_partition(n: int, rng: random.Random) -> Partition:
    """Uniformly random partition of ``n``.

    The largest part ``j`` is drawn with weight ``#{partitions of n - j with parts <= j}``,
    then the remainder is drawn the same way with its parts capped at ``j``. Uses
    exact integer weights, so every partition has probability exactly ``1/p(n)``.
    """
    parts = []
    cap = n
    while n > 0:
        total = _count_max_part(n, cap)
        x = rng.randrange(total)
        for j in range(min(cap, n), 0, -1):
            w = _count_max_part(n - j, j)
            if x < w:
                break
            x -= w
        parts.append(j)
        n -= j
        cap = j
    return Partition(parts)


def hook_partition(n: int, legs: int) -> Partition:
    """``(n - legs, 1^legs)``."""
    return Partition([n - legs] + [1] * legs)


def rectangle(rows: int, cols: int) -> Partition:
    return Partition([cols] * rows)
