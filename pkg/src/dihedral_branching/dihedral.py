"""Permutation models of C_n and D_n, wreath embeddings, and the group-theoretic
embedding checks (mn-cycles, dihedral conjugates, Young subgroup avoidance)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from sympy import isprime

from .partitions import Partition, cycle_type


class Permutation:
    """Bijection of {1..N}; ``images[i]`` is the image of ``i + 1``.

    Products compose right to left: ``(p * q)(i) == p(q(i))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def order(self) -> int:
        from math import lcm

        return lcm(*cycle_type(self)) if self.degree else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest letter."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if (self.degree - len(cycle_type(self))) % 2 else 1

    def __repr__(self):
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation[{self.degree}]{body or '()'}"


def rotation(n: int) -> Permutation:
    """(1 2 ... n)."""
    return Permutation([i % n + 1 for i in range(1, n + 1)])


def reflection(n: int) -> Permutation:
    """(1 n)(2 n-1)..., i.e. i -> n + 1 - i."""
    return Permutation([n + 1 - i for i in range(1, n + 1)])


@dataclass(frozen=True)
class DihedralGroup:
    """D_n inside S_n, generated by ``rotation(n)`` and ``reflection(n)``.

    Elements are addressed as ``(k, flag)`` meaning ``s^flag * r^k``; explicit
    permutations are produced on demand.
    """

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def rotation(self) -> Permutation:
        return rotation(self.n)

    @property
    def reflection(self) -> Permutation:
        return reflection(self.n)

    @property
    def order(self) -> int:
        return 2 * self.n

    def element(self, k: int, reflect: bool) -> Permutation:
        n = self.n
        k %= n
        # r^k: i -> i + k; s r^k: i -> n + 1 - (i + k)
        if reflect:
            return Permutation([(n - ((i - 1 + k) % n)) for i in range(1, n + 1)])
        return Permutation([(i - 1 + k) % n + 1 for i in range(1, n + 1)])

    def coordinates(self) -> Iterator[tuple[int, bool]]:
        for flag in (False, True):
            for k in range(self.n):
                yield k, flag

    def elements(self) -> list[Permutation]:
        return [self.element(k, f) for k, f in self.coordinates()]

    def reflection_classes(self) -> dict[tuple[Partition, int], int]:
        """Counts of reflections ``s r^k`` grouped by (cycle type, parity of k)."""
        return _reflection_classes(self.n)

    def check_invariants(self) -> bool:
        r, s = self.rotation, self.reflection
        n = self.n
        ok = (r**n).is_identity() and all(not (r**k).is_identity() for k in range(1, n))
        ok = ok and (s * s).is_identity() and (n < 3 or not s.is_identity())
        ok = ok and s * r * s == r.inverse()
        ok = ok and len(set(self.elements())) == (2 * n if n >= 3 else len(set(self.elements())))
        # coordinates agree with products of the generators
        ok = ok and all(self.element(k, True) == s * r**k for k in range(n))
        return ok


@lru_cache(maxsize=None)
def _reflection_classes(n: int) -> dict[tuple[Partition, int], int]:
    group = DihedralGroup(n)
    out: dict[tuple[Partition, int], int] = {}
    for k in range(n):
        key = (cycle_type(group.element(k, True)), k % 2)
        out[key] = out.get(key, 0) + 1
    return out


# -- irreducible characters ------------------------------------------------------------

LINEAR_KINDS = ("TrivTriv", "TrivSign", "SignTriv", "SignSign")
# (sign on r, sign on s) for each linear kind
_LINEAR_SIGNS = {
    "TrivTriv": (1, 1),
    "TrivSign": (1, -1),
    "SignTriv": (-1, 1),
    "SignSign": (-1, -1),
}
_LABELS = {"TrivTriv": "1++", "TrivSign": "1+-", "SignTriv": "1-+", "SignSign": "1--"}


@dataclass(frozen=True, order=True)
class DihedralIrrep:
    """An irreducible character of D_n: four linear kinds or ``TwoDim`` with index ``j``."""

    kind: str
    j: int = 0

    def __post_init__(self):
        if self.kind == "TwoDim":
            if self.j < 1:
                raise ValueError("TwoDim needs j >= 1")
        elif self.kind in _LINEAR_SIGNS:
            if self.j != 0:
                raise ValueError("linear characters carry no index")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def degree(self) -> int:
        return 2 if self.kind == "TwoDim" else 1

    @property
    def is_linear(self) -> bool:
        return self.kind != "TwoDim"

    @property
    def signs(self) -> tuple[int, int]:
        return _LINEAR_SIGNS[self.kind]

    @property
    def label(self) -> str:
        return f"psi{self.j}" if self.kind == "TwoDim" else _LABELS[self.kind]

    def valid_for(self, n: int) -> bool:
        if self.kind == "TwoDim":
            return 1 <= self.j <= (n - 1) // 2
        return n % 2 == 0 or self.kind in ("TrivTriv", "TrivSign")

    def sort_key(self) -> tuple[int, int]:
        return (LINEAR_KINDS.index(self.kind), 0) if self.is_linear else (4, self.j)

    def __str__(self):
        return self.label


TRIV_TRIV = DihedralIrrep("TrivTriv")
TRIV_SIGN = DihedralIrrep("TrivSign")
SIGN_TRIV = DihedralIrrep("SignTriv")
SIGN_SIGN = DihedralIrrep("SignSign")


def two_dim(j: int) -> DihedralIrrep:
    return DihedralIrrep("TwoDim", j)


def parse_irrep(label: str) -> DihedralIrrep:
    for kind, text in _LABELS.items():
        if label == text:
            return DihedralIrrep(kind)
    if label.startswith("psi"):
        return two_dim(int(label[3:]))
    raise ValueError(f"unknown irrep label {label!r}")


def irreps(n: int) -> list[DihedralIrrep]:
    """All irreducible characters of D_n, linear ones first."""
    out = [TRIV_TRIV, TRIV_SIGN]
    if n % 2 == 0:
        out += [SIGN_TRIV, SIGN_SIGN]
    out += [two_dim(j) for j in range(1, (n - 1) // 2 + 1)]
    return out


def irrep_value_linear(rep: DihedralIrrep, n: int, k: int, reflect: bool) -> int:
    """Value of a linear character on ``s^reflect * r^k`` in D_n."""
    if not rep.is_linear:
        raise ValueError("irrep_value_linear takes a linear character")
    if not rep.valid_for(n):
        raise ValueError(f"{rep.label} exists only for even n")
    r_sign, s_sign = rep.signs
    value = r_sign ** (k % 2) if r_sign == -1 else 1
    return value * s_sign if reflect else value


# -- wreath products -------------------------------------------------------------------


def wreath_embed(f: Sequence[Permutation], pi: Permutation) -> Permutation:
    """Image of ``(f; pi)`` in S_{mn}: ``(j-1)m + i -> (pi(j)-1)m + f(pi(j))(i)``."""
    n = pi.degree
    if len(f) != n:
        raise ValueError(f"expected {n} base permutations, got {len(f)}")
    m = f[0].degree if f else 0
    if any(g.degree != m for g in f):
        raise ValueError("base permutations must share one degree")
    images = [0] * (m * n)
    for j in range(1, n + 1):
        pj = pi(j)
        base = f[pj - 1]
        for i in range(1, m + 1):
            images[(j - 1) * m + i - 1] = (pj - 1) * m + base(i)
    return Permutation(images)


def mn_cycle(m: int, n: int) -> Permutation:
    """Image of ``((1 2 .. m), e, .., e; (1 2 .. n))``."""
    f = [rotation(m)] + [Permutation.identity(m)] * (n - 1)
    return wreath_embed(f, rotation(n))


def dihedral_twist(m: int, n: int) -> Permutation:
    """Image of ``((s_m, .., s_m); s_n)``."""
    return wreath_embed([reflection(m)] * n, reflection(n))


def verify_mn_cycle(m: int, n: int) -> bool:
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return cycle_type(mn_cycle(m, n)) == Partition([m * n])


def verify_dihedral_conjugate(m: int, n: int) -> bool:
    if m < 2 or n < 2:
        raise ValueError("m and n must be at least 2")
    tau, t = mn_cycle(m, n), dihedral_twist(m, n)
    involution = (t * t).is_identity() and not t.is_identity()
    return involution and t * tau * t.inverse() == tau.inverse()


# -- Young subgroups meeting D_n trivially ---------------------------------------------


def young_blocks(mu: Sequence[int]) -> list[list[int]]:
    """Letters of each consecutive block of the standard Young subgroup."""
    blocks, start = [], 1
    for part in mu:
        blocks.append(list(range(start, start + part)))
        start += part
    return blocks


def conjugated_young_meets_dihedral_trivially(mu: Sequence[int], sigma: Permutation) -> bool:
    """Brute force: does sigma Y_mu sigma^-1 meet D_n only in the identity?

    ``d`` lies in the conjugate exactly when ``sigma^-1 d sigma`` preserves
    every block of ``mu``.
    """
    n = sigma.degree
    block_of = {}
    for b, letters in enumerate(young_blocks(mu)):
        for x in letters:
            block_of[x] = b
    inv = sigma.inverse()
    for d in DihedralGroup(n).elements():
        if d.is_identity():
            continue
        c = inv * d * sigma
        if all(block_of[c(x)] == block_of[x] for x in range(1, n + 1)):
            return False
    return True


def _recipe_assignment(mu: Partition, n: int) -> dict[int, int] | None:
    """Forced part of the conjugator: letter of the Young block -> target point.

    With a part equal to 1, the fixed letter goes to 1 and one letter from each
    of two other blocks goes to 2 and n. Without one, letters a, b, c of a block
    A with at least three letters go to 1, 3, 4; d, e of a second block go to
    n, 5; f, g of a third block F go to n-1, 2, and the rest of F goes to
    n-2, n-3, ... in turn. Returns ``None`` when the recipe does not apply.
    """
    blocks = young_blocks(mu)
    if len(blocks) < 3:
        return None
    if 1 in mu:
        single = blocks[len(mu) - 1]
        others = [b for b in blocks if b is not single]
        return {single[0]: 1, others[0][0]: 2, others[1][0]: n}
    big = next((b for b in blocks if len(b) >= 3), None)
    if big is None or n < 7:
        return None
    second, third = [b for b in blocks if b is not big][:2]
    assignment = {big[0]: 1, big[1]: 3, big[2]: 4, second[0]: n, second[1]: 5,
                  third[0]: n - 1, third[1]: 2}
    for offset, x in enumerate(third[2:]):
        assignment[x] = n - 2 - offset
    return assignment


def _complete(assignment: dict[int, int], n: int, rng: random.Random | None) -> Permutation:
    """Extend letter -> point to a bijection; free letters fill free points in order
    (or shuffled when ``rng`` is given). The conjugator maps point p to letter."""
    letters = [x for x in range(1, n + 1) if x not in assignment]
    points = [p for p in range(1, n + 1) if p not in assignment.values()]
    if rng is not None:
        rng.shuffle(points)
    full = dict(assignment)
    full.update(zip(letters, points))
    # sigma sends the block letter x to the point full[x]
    return Permutation([full[x] for x in range(1, n + 1)])


def young_avoider(mu: Sequence[int], n: int, seed: int = 0, attempts: int = 2000) -> Permutation:
    """A sigma with sigma Y_mu sigma^-1 meeting D_n trivially.

    The forced assignments of the construction are tried first with the
    remaining letters placed in order; if the result fails the brute-force
    check, the free letters are reshuffled with a seeded generator.
    """
    mu = Partition(mu)
    if mu.size != n:
        raise ValueError(f"mu must partition n={n}")
    if n % 2 == 0 or not isprime(n):
        raise ValueError("n must be an odd prime")
    if len(mu) < 3:
        raise ValueError("mu needs at least three parts")
    assignment = _recipe_assignment(mu, n) or {}
    sigma = _complete(assignment, n, None)
    if conjugated_young_meets_dihedral_trivially(mu, sigma):
        return sigma
    rng = random.Random(seed)
    for _ in range(attempts):
        sigma = _complete(assignment, n, rng)
        if conjugated_young_meets_dihedral_trivially(mu, sigma):
            return sigma
    # the recipe's forced points may be the obstacle; search freely
    for _ in range(attempts):
        sigma = _complete({}, n, rng)
        if conjugated_young_meets_dihedral_trivially(mu, sigma):
            return sigma
    raise RuntimeError(f"no avoiding conjugator found for mu={mu}, n={n}")
