"""Branching of S_n and A_n characters to D_n and C_n, and the verifiers for the
positivity statements built on them.

Cyclic multiplicities use the rotation classes: the rotations of order q all
have cycle type (q^{n/q}), and summing a power of a faithful character over
them gives the Ramanujan sum c_q(r). So

    a^r = (1/n) * sum_{d | n} chi(((n/d)^d)) * c_{n/d}(r)

in integer arithmetic. The linear characters of D_n add the reflections, whose
cycle types are read off the explicit permutations s r^k.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import sympy
from sympy import divisors, isprime, mobius, primefactors

from .characters import CACHE, SplitCharacterValue, an_class_branch, chi, chi_an, split_data
from .dihedral import (
    SIGN_SIGN,
    SIGN_TRIV,
    TRIV_SIGN,
    TRIV_TRIV,
    DihedralGroup,
    DihedralIrrep,
    irreps,
    two_dim,
)
from .lr import iterated_contains
from .partitions import Partition, conjugate, hook_partition, partition_number, partitions_of
from .reports import FAIL, INFO, NOT_APPLICABLE, PASS, Clause, Counterexample, TheoremReport
from .tableaux import dimension


class InternalConsistencyError(ArithmeticError):
    """An exact division or cancellation that must hold did not; signals a bug."""


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalConsistencyError(f"{what}: {num} is not divisible by {den}")
    return q


@lru_cache(maxsize=None)
def ramanujan_sum(q: int, r: int) -> int:
    """c_q(r) = sum over d | gcd(q, r) of mu(q/d) d."""
    g = math.gcd(q, r)
    return sum(int(mobius(q // d)) * d for d in divisors(g))


# -- cyclic branching --------------------------------------------------------------------


@dataclass(frozen=True)
class CyclicSpectrum:
    n: int
    coeffs: tuple[int, ...]

    def __getitem__(self, r: int) -> int:
        return self.coeffs[r % self.n]

    def __len__(self) -> int:
        return self.n


def _rotation_class(n: int, d: int) -> Partition:
    return Partition([n // d] * d)


def cyclic_coeffs(shape: Sequence[int]) -> CyclicSpectrum:
    """a^r_lambda for r = 0..n-1: multiplicities of the characters of C_n."""
    shape = Partition(shape)
    n = shape.size
    if n == 0:
        return CyclicSpectrum(1, (1,))
    values = {d: chi(shape, _rotation_class(n, d)) for d in divisors(n)}
    coeffs = []
    for r in range(n):
        total = sum(values[d] * ramanujan_sum(n // d, r) for d in values)
        coeffs.append(_exact_div(total, n, f"a^{r} of {shape}"))
    return CyclicSpectrum(n, tuple(coeffs))


# -- dihedral branching ------------------------------------------------------------------


@dataclass
class BranchingTable:
    n: int
    shape: Partition
    entries: dict[DihedralIrrep, int]

    def __getitem__(self, rep: DihedralIrrep) -> int:
        return self.entries[rep]

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: kv[0].sort_key())

    def as_labels(self) -> dict[str, int]:
        return {rep.label: v for rep, v in self.items()}

    def degree_sum(self) -> int:
        return sum(rep.degree * v for rep, v in self.entries.items())

    def __eq__(self, other):
        return (
            isinstance(other, BranchingTable)
            and self.n == other.n
            and self.shape == other.shape
            and self.entries == other.entries
        )


def reflection_sums(shape: Partition) -> tuple[int, int]:
    """(sum_k chi(s r^k), sum_k (-1)^k chi(s r^k)) from the materialized reflections."""
    n = shape.size
    plain = alternating = 0
    for (ct, parity), count in DihedralGroup(n).reflection_classes().items():
        value = chi(shape, ct) * count
        plain += value
        alternating += -value if parity else value
    return plain, alternating


def branch_dihedral(shape: Sequence[int]) -> BranchingTable:
    shape = Partition(shape)
    n = shape.size
    if n < 3:
        raise ValueError("D_n needs n >= 3")
    a = cyclic_coeffs(shape)
    plain, alternating = reflection_sums(shape)
    entries = {
        TRIV_TRIV: _exact_div(n * a[0] + plain, 2 * n, f"trivial multiplicity of {shape}"),
        TRIV_SIGN: _exact_div(n * a[0] - plain, 2 * n, f"1+- multiplicity of {shape}"),
    }
    if n % 2 == 0:
        half = a[n // 2]
        entries[SIGN_TRIV] = _exact_div(n * half + alternating, 2 * n, f"1-+ of {shape}")
        entries[SIGN_SIGN] = _exact_div(n * half - alternating, 2 * n, f"1-- of {shape}")
    for j in range(1, (n - 1) // 2 + 1):
        entries[two_dim(j)] = a[j]
    table = BranchingTable(n, shape, entries)
    if any(v < 0 for v in entries.values()):
        raise InternalConsistencyError(f"negative multiplicity for {shape}: {table.as_labels()}")
    return table


def _branch_task(shape: tuple) -> BranchingTable:
    return branch_dihedral(shape)


def branch_all(n: int, jobs: int = 1, pool: ProcessPoolExecutor | None = None) -> list[BranchingTable]:
    """Tables for every partition of n, in the standard enumeration order.

    With ``jobs > 1`` (or an existing ``pool``) the shapes are farmed out to
    worker processes; ``map`` keeps the order, so the result does not depend
    on the number of workers.
    """
    shapes = [tuple(p) for p in partitions_of(n)]
    if pool is None and jobs <= 1:
        return [branch_dihedral(s) for s in shapes]
    chunk = max(1, len(shapes) // (4 * max(jobs, 1)))
    if pool is not None:
        return list(pool.map(_branch_task, shapes, chunksize=chunk))
    with ProcessPoolExecutor(max_workers=jobs) as own:
        return list(own.map(_branch_task, shapes, chunksize=chunk))


def conjugation_relabeling(n: int) -> dict[DihedralIrrep, DihedralIrrep]:
    """rho -> rho (x) sign, where sign is the sign character of S_n restricted to D_n.

    Because chi_{lambda'} = chi_lambda (x) sign, the table of lambda' at rho is
    the table of lambda at the image of rho. The restriction of sign is read off
    the parities of the explicit generators.
    """
    group = DihedralGroup(n)
    r_sign, s_sign = group.rotation.sign(), group.reflection.sign()
    by_signs = {rep.signs: rep for rep in irreps(n) if rep.is_linear}
    out = {}
    for rep in irreps(n):
        if rep.is_linear:
            a, b = rep.signs
            out[rep] = by_signs[(a * r_sign, b * s_sign)]
        else:
            # psi_j (x) sign = Ind(delta^j (x) sign|C_n); sign(r) = -1 shifts j by n/2
            j = rep.j if r_sign == 1 else (rep.j + n // 2) % n
            out[rep] = two_dim(min(j, n - j))
    return out


def relabel(table: BranchingTable) -> BranchingTable:
    """The table of the conjugate shape, predicted from ``table``."""
    mapping = conjugation_relabeling(table.n)
    entries = {rep: table.entries[mapping[rep]] for rep in table.entries}
    return BranchingTable(table.n, conjugate(table.shape), entries)


# -- alternating groups ------------------------------------------------------------------


def dihedral_in_alternating(n: int) -> bool:
    """D_n <= A_n: n odd and the reflection, a product of (n-1)/2 transpositions, even."""
    return n % 2 == 1 and DihedralGroup(n).reflection.sign() == 1


@lru_cache(maxsize=None)
def _rotation_branches(n: int) -> tuple[int, ...]:
    """+1/-1 per k: the A_n class of r^k among n-cycles (0 when r^k is not an n-cycle)."""
    group = DihedralGroup(n)
    out = []
    for k in range(n):
        if math.gcd(k, n) != 1:
            out.append(0)
        else:
            out.append(1 if an_class_branch(group.element(k, False)) == "+" else -1)
    return tuple(out)


def _cyclotomic_constant(coeffs: Sequence[int], n: int) -> int:
    """Reduce sum coeffs[k] x^k modulo Phi_n and require a constant."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(list(coeffs))), x)
    rem = poly.rem(sympy.Poly(sympy.cyclotomic_poly(n, x), x))
    if rem.degree() > 0:
        raise InternalConsistencyError("expected a rational element of Q(zeta_n)")
    return int(rem.as_expr())


@lru_cache(maxsize=None)
def _split_corrections(n: int) -> tuple[Fraction, ...]:
    """T_j = sqrt(eps n) * sum_k b_k zeta^{-jk} for the self-conjugate hook of n.

    Each T_j is rational. It is found exactly as the square root of
    eps n S_j^2, with S_j^2 computed in Z[x]/(Phi_n); the sign of the root is
    read from a floating-point evaluation, which only has to distinguish
    +sqrt(R) from -sqrt(R).
    """
    b = _rotation_branches(n)
    _, epsilon, q = split_data(hook_partition(n, (n - 1) // 2))
    out = []
    for j in range(n):
        # S_j as an element of Z[x]/(x^n - 1) with x = zeta
        s = [0] * n
        for k in range(n):
            if b[k]:
                s[(-j * k) % n] += b[k]
        square = [0] * n
        for i, u in enumerate(s):
            if u:
                for k, v in enumerate(s):
                    if v:
                        square[(i + k) % n] += u * v
        c = _cyclotomic_constant(square, n)
        radicand = epsilon * q * c
        root = math.isqrt(radicand) if radicand >= 0 else -1
        if root < 0 or root * root != radicand:
            raise InternalConsistencyError(f"split correction for j={j} is irrational")
        zeta = cmath.exp(2j * cmath.pi / n)
        approx = cmath.sqrt(epsilon * q) * sum(b[k] * zeta ** (-j * k) for k in range(n) if b[k])
        if root and approx.real < 0:
            root = -root
        out.append(Fraction(root))
    return tuple(out)


def _check_sign_choice(shape: Partition, sign_choice: str) -> None:
    self_conjugate = shape == conjugate(shape)
    if self_conjugate and sign_choice not in ("+", "-"):
        raise ValueError(f"{shape} is self-conjugate: choose '+' or '-'")
    if not self_conjugate and sign_choice != "whole":
        raise ValueError(f"{shape} does not split in A_n: use sign_choice='whole'")


def cyclic_coeffs_alternating(shape: Sequence[int], sign_choice: str = "whole") -> CyclicSpectrum:
    """a^j for the A_n constituent(s) of chi_lambda restricted to C_n, n odd."""
    shape = Partition(shape)
    n = shape.size
    if n % 2 == 0:
        raise ValueError("C_n lies in A_n only for odd n")
    _check_sign_choice(shape, sign_choice)
    a = cyclic_coeffs(shape)
    if sign_choice == "whole":
        return a
    hooks, _, _ = split_data(shape)
    if hooks != Partition([n]):
        coeffs = [_exact_div(v, 2, f"half of a^j for {shape}") for v in a.coeffs]
        return CyclicSpectrum(n, tuple(coeffs))
    sigma = 1 if sign_choice == "+" else -1
    corr = _split_corrections(n)
    coeffs = []
    for j in range(n):
        value = Fraction(a[j], 2) + sigma * corr[j] / (2 * n)
        if value.denominator != 1 or value < 0:
            raise InternalConsistencyError(f"a^{j} of {shape}{sign_choice} is {value}")
        coeffs.append(int(value))
    return CyclicSpectrum(n, tuple(coeffs))


def branch_alternating(shape: Sequence[int], sign_choice: str = "whole") -> BranchingTable:
    """Multiplicities in the restriction of an irreducible A_n character to D_n.

    Requires D_n <= A_n, i.e. n = 1 mod 4. For a self-conjugate shape the
    linear entries are exact sums of chi^{+/-} over all 2n elements (the surd
    parts are checked to cancel) and the two-dimensional entries come from
    the cyclic multiplicities.
    """
    shape = Partition(shape)
    n = shape.size
    if n % 2 == 0:
        raise ValueError("branch_alternating needs odd n")
    if not dihedral_in_alternating(n):
        raise ValueError(
            f"D_{n} is not contained in A_{n}: its reflections are odd when n = 3 mod 4"
        )
    _check_sign_choice(shape, sign_choice)
    if sign_choice == "whole":
        return branch_dihedral(shape)
    group = DihedralGroup(n)
    entries = {}
    for rep in irreps(n):
        if not rep.is_linear:
            continue
        total = SplitCharacterValue(0)
        for k, flag in group.coordinates():
            value = chi_an(shape, group.element(k, flag), sign_choice)
            total = total + (-value if (flag and rep.signs[1] < 0) else value)
        total = total * Fraction(1, 2 * n)
        if not total.is_rational() or total.rational_part.denominator != 1:
            raise InternalConsistencyError(f"{rep.label} multiplicity of {shape}: {total!r}")
        entries[rep] = int(total.rational_part)
    spectrum = cyclic_coeffs_alternating(shape, sign_choice)
    for j in range(1, (n - 1) // 2 + 1):
        entries[two_dim(j)] = spectrum[j]
    return BranchingTable(n, shape, entries)


# -- theorem verifiers -------------------------------------------------------------------


def _shapes(n: int) -> dict[str, Partition]:
    """The named shapes of the zero/one sets; for tiny n some do not exist and are left out."""
    ones = lambda k: [1] * max(k, 0)  # noqa: E731
    raw = {
        "row": [n],
        "column": ones(n),
        "standard": [n - 1, 1],
        "hook2": [2] + ones(n - 2),
        "n-2,1,1": [n - 2, 1, 1],
        "n-2,2": [n - 2, 2],
        "hook3": [3] + ones(n - 3),
        "2,2,1": [2, 2] + ones(n - 4),
    }
    out = {}
    for name, parts in raw.items():
        if sum(parts) == n and all(a >= b for a, b in zip(parts, parts[1:])):
            out[name] = Partition(parts)
    return out


def parity_case(n: int) -> str:
    if n % 2:
        return "n odd, (n-1)/2 even" if ((n - 1) // 2) % 2 == 0 else "n odd, (n-1)/2 odd"
    return "n even, n/2 even" if (n // 2) % 2 == 0 else "n even, n/2 odd"


# zero sets, one sets and "> n/6" members per parity case, keyed by shape name
_SN_CASES = {
    "n odd, (n-1)/2 even": {
        "tt0": ["standard", "n-2,1,1", "hook3", "hook2"],
        "tt1": ["row", "column"],
        "ts0": ["row", "standard", "n-2,2", "2,2,1", "hook2", "column"],
        "ts1": [],
        "min": [("ts", "hook3"), ("tt", "n-2,2"), ("ts", "n-2,1,1")],
    },
    "n odd, (n-1)/2 odd": {
        "tt0": ["standard", "n-2,1,1", "2,2,1", "hook2", "column"],
        "tt1": ["row"],
        "ts0": ["row", "standard", "n-2,2", "hook3", "hook2"],
        "ts1": ["column"],
        "min": [("tt", "hook3"), ("ts", "2,2,1"), ("tt", "n-2,2"), ("ts", "n-2,1,1")],
    },
    "n even, n/2 even": {
        "tt0": ["standard", "n-2,1,1", "hook2", "column"],
        "tt1": ["row"],
        "ts0": ["row", "standard", "n-2,2", "column"],
        "ts1": ["hook2"],
        "min": [("tt", "n-2,2"), ("ts", "n-2,1,1")],
    },
    "n even, n/2 odd": {
        "tt0": ["standard", "n-2,1,1", "column"],
        "tt1": ["row", "hook2"],
        "ts0": ["row", "standard", "n-2,2", "hook2", "column"],
        "ts1": [],
        "min": [("tt", "n-2,2"), ("ts", "n-2,1,1")],
    },
}

_KIND = {"tt": TRIV_TRIV, "ts": TRIV_SIGN}


def _exceeds(value: int, num: int, den: int) -> bool:
    """value > num/den, exactly."""
    return value * den > num


def _value_clause(name, description, tables, pairs, expected: int) -> Clause:
    clause = Clause(name, description)
    for shape, rep in pairs:
        v = tables[shape][rep]
        if v != expected:
            clause.fail(Counterexample(shape, rep.label, v, str(expected), tables[shape].as_labels()))
    return clause


def _bound_clause(name, description, tables, pairs, num, den) -> Clause:
    clause = Clause(name, description)
    for shape, rep in pairs:
        v = tables[shape][rep]
        if not _exceeds(v, num, den):
            clause.fail(
                Counterexample(shape, rep.label, v, f"> {num}/{den}", tables[shape].as_labels())
            )
    return clause


def _tables_for(n: int, jobs: int, pool=None) -> dict[Partition, BranchingTable]:
    return {t.shape: t for t in branch_all(n, jobs, pool)}


def verify_theorem_sn(n: int, jobs: int = 1, tables: dict | None = None, pool=None) -> TheoremReport:
    """Exact zero/one sets and the n/6, n/12 bounds for S_n -> D_n."""
    if n < 3:
        raise ValueError("n must be at least 3")
    case = parity_case(n)
    report = TheoremReport("theorem-sn", n, case, asserted=n >= 11)
    if tables is None:
        tables = _tables_for(n, jobs, pool)
    sh = _shapes(n)
    named = {
        key: [x for x in names if (x[1] if isinstance(x, tuple) else x) in sh]
        for key, names in _SN_CASES[case].items()
    }
    psis = [rep for rep in irreps(n) if not rep.is_linear]

    report.add(_value_clause(
        "psi-zero", "d_psi^j = 0 for (n), (1^n), every j",
        tables, [(sh[s], p) for s in ("row", "column") if s in sh for p in psis], 0))
    report.add(_value_clause(
        "psi-one", "d_psi^j = 1 for (n-1,1), (2,1^(n-2)), every j",
        tables, [(sh[s], p) for s in ("standard", "hook2") if s in sh for p in psis], 1))
    for key, rep, value in (("tt0", TRIV_TRIV, 0), ("tt1", TRIV_TRIV, 1),
                            ("ts0", TRIV_SIGN, 0), ("ts1", TRIV_SIGN, 1)):
        if not named[key]:
            continue
        names = ", ".join(str(sh[s]) for s in named[key])
        report.add(_value_clause(
            f"{rep.label}-{'zero' if value == 0 else 'one'}",
            f"d_{rep.label} = {value} for {names}",
            tables, [(sh[s], rep) for s in named[key]], value))

    min_pairs = [(sh[s], _KIND[k]) for k, s in named["min"]]
    if case == "n odd, (n-1)/2 even":
        # the first term's superscript is garbled in the source; try both characters
        readings = {}
        for rep in (TRIV_TRIV, TRIV_SIGN):
            first = [(sh["2,2,1"], rep)] if "2,2,1" in sh else []
            c = _bound_clause("x", "", tables, first + min_pairs, n, 6)
            readings[rep.label] = c
        holding = [label for label, c in readings.items() if c.status == PASS]
        clause = Clause(
            "min-bound",
            "min of the listed multiplicities > n/6, first term read as d_1++ or d_1+- "
            "of (2^2,1^(n-4))",
        )
        if holding:
            clause.detail = f"holds when the first term is read as {' and '.join(holding)}"
        else:
            for c in readings.values():
                for ex in c.counterexamples:
                    clause.fail(ex)
        report.add(clause)
    else:
        report.add(_bound_clause(
            "min-bound", "min of the listed multiplicities > n/6", tables, min_pairs, n, 6))

    listed = set()
    for key, rep in (("tt0", TRIV_TRIV), ("tt1", TRIV_TRIV), ("ts0", TRIV_SIGN), ("ts1", TRIV_SIGN)):
        listed.update((sh[s], rep) for s in named[key])
    psi_listed = {sh[s] for s in ("row", "column", "standard", "hook2") if s in sh}
    linear_rest = [(lam, rep) for lam in tables for rep in (TRIV_TRIV, TRIV_SIGN)
                   if (lam, rep) not in listed]
    psi_rest = [(lam, p) for lam in tables if lam not in psi_listed for p in psis]
    report.add(_bound_clause(
        "linear-catch-all", "every other d_1++ and d_1+- exceeds n/12", tables, linear_rest, n, 12))
    report.add(_bound_clause(
        "psi-catch-all", "every other d_psi^j exceeds n/6", tables, psi_rest, n, 6))

    if n % 2 == 0:
        clause = Clause(
            "sign-twist",
            "d_1-+ and d_1-- of lambda equal the relabeled d_1++/d_1+- of lambda'",
        )
        for lam, table in tables.items():
            predicted = relabel(tables[conjugate(lam)])
            for rep in (SIGN_TRIV, SIGN_SIGN):
                if predicted[rep] != table[rep]:
                    clause.fail(Counterexample(lam, rep.label, table[rep], str(predicted[rep]),
                                               table.as_labels()))
        mapping = conjugation_relabeling(n)
        clause.detail = "twist: " + ", ".join(
            f"{r.label} to {mapping[r].label}" for r in (SIGN_TRIV, SIGN_SIGN))
        report.add(clause)

    if not report.asserted:
        _demote(report)
    return report


def _demote(report: TheoremReport) -> None:
    """Below the stated range: keep the findings but assert nothing."""
    for clause in report.clauses:
        if clause.status == FAIL:
            clause.detail = (clause.detail + "; " if clause.detail else "") + "would fail"
            clause.status = INFO
        elif clause.status == PASS:
            clause.status = INFO
    report.notes.append("n < 11: the statement is not claimed here; exceptions listed for reference")


def _spectrum_tables(n: int) -> dict[Partition, CyclicSpectrum]:
    return {lam: cyclic_coeffs(lam) for lam in partitions_of(n)}


def verify_corollary_cyclic(n: int, spectra: dict | None = None) -> TheoremReport:
    """Zero/one tables and the n/6 bound for S_n -> C_n."""
    if n < 3:
        raise ValueError("n must be at least 3")
    report = TheoremReport("corollary-cn", n, "n odd" if n % 2 else "n even", asserted=n >= 11)
    if spectra is None:
        spectra = _spectrum_tables(n)
    sh = _shapes(n)
    js = [j for j in range(1, n) if 2 * j != n]
    covered: set[tuple[Partition, int]] = set()

    def value_clause(name, description, shapes, indices, expected):
        clause = Clause(name, description)
        for s in shapes:
            if s not in sh:
                continue
            for j in indices:
                covered.add((sh[s], j))
                v = spectra[sh[s]][j]
                if v != expected:
                    clause.fail(Counterexample(sh[s], f"a^{j}", v, str(expected)))
        report.add(clause)

    value_clause("nonreal-zero", "a^j = 0 for (n), (1^n), j non-real", ["row", "column"], js, 0)
    value_clause("nonreal-one", "a^j = 1 for (n-1,1), (2,1^(n-2)), j non-real",
                 ["standard", "hook2"], js, 1)
    if n % 2:
        value_clause("a0-zero", "a^0 = 0 for (n-1,1), (2,1^(n-2))", ["standard", "hook2"], [0], 0)
        value_clause("a0-one", "a^0 = 1 for (n), (1^n)", ["row", "column"], [0], 1)
    else:
        h = n // 2
        value_clause("a0-zero", "a^0 = 0 for (n-1,1), (1^n)", ["standard", "column"], [0], 0)
        value_clause("a0-one", "a^0 = 1 for (n), (2,1^(n-2))", ["row", "hook2"], [0], 1)
        value_clause("half-zero", "a^(n/2) = 0 for (n), (2,1^(n-2))", ["row", "hook2"], [h], 0)
        value_clause("half-one", "a^(n/2) = 1 for (n-1,1), (1^n)", ["standard", "column"], [h], 1)
    clause = Clause("catch-all", "every other a^j exceeds n/6")
    for lam, coeffs in spectra.items():
        for j in range(n):
            if (lam, j) not in covered and not _exceeds(coeffs[j], n, 6):
                clause.fail(Counterexample(lam, f"a^{j}", coeffs[j], f"> {n}/6"))
    report.add(clause)
    if not report.asserted:
        _demote(report)
    return report


def alternating_irreps(n: int) -> list[tuple[Partition, str]]:
    """(representative shape, sign choice) per irreducible A_n character.

    A non-self-conjugate pair {lambda, lambda'} is represented by whichever
    comes first in the enumeration order; a self-conjugate shape gives two.
    """
    out = []
    for lam in partitions_of(n):
        lc = conjugate(lam)
        if lam == lc:
            out.extend([(lam, "+"), (lam, "-")])
        elif lam > lc:
            out.append((lam, "whole"))
    return out


def verify_theorem_an(n: int) -> TheoremReport:
    """The A_n -> D_n statement (when D_n <= A_n) and the A_n -> C_n statement."""
    if n % 2 == 0:
        raise ValueError("the alternating statements are for odd n")
    if n < 3:
        raise ValueError("n must be at least 3")
    contained = dihedral_in_alternating(n)
    report = TheoremReport(
        "theorem-an", n, "D_n in A_n" if contained else "D_n not in A_n (n = 3 mod 4)",
        asserted=n >= 11,
    )
    sh = _shapes(n)
    reps = alternating_irreps(n)

    def tag(lam, choice):
        return "" if choice == "whole" else choice

    # dihedral part
    dihedral_names = [
        ("psi-zero", "d_psi^j(V_(n)) = 0"),
        ("psi-one", "d_psi^j(V_(n-1,1)) = 1"),
        ("1++-zero", "d_1++ = 0 for V_(n-1,1), V_(n-2,1,1)"),
        ("1++-one", "d_1++(V_(n)) = 1"),
        ("1+--zero", "d_1+- = 0 for V_(n), V_(n-1,1), V_(n-2,2)"),
        ("min-bound", "min(d_1++(V_(n-2,2)), d_1+-(V_(n-2,1,1))) > n/6"),
        ("linear-catch-all", "every other d_1++ and d_1+- exceeds n/12"),
        ("psi-catch-all", "every other d_psi^j exceeds n/6"),
    ]
    if not contained:
        for name, description in dihedral_names:
            report.add(Clause(
                "dihedral-" + name, description, NOT_APPLICABLE,
                detail="the reflections of D_n are odd permutations, so D_n is not a subgroup of A_n",
            ))
    else:
        tables = {}
        consistency = Clause(
            "dihedral-restriction-consistency",
            "for lambda != lambda', Res to D_n of chi_lambda and chi_lambda' agree",
        )
        split_sum = Clause(
            "dihedral-split-sum", "tables of V+ and V- add up to the S_n table of lambda")
        for lam, choice in reps:
            tables[(lam, choice)] = branch_alternating(lam, choice)
            if choice == "whole":
                other = branch_dihedral(conjugate(lam))
                if other.entries != tables[(lam, choice)].entries:
                    consistency.fail(Counterexample(lam, "all", 0, "equal tables", other.as_labels()))
        for lam, choice in reps:
            if choice == "+":
                whole = branch_dihedral(lam)
                plus, minus = tables[(lam, "+")], tables[(lam, "-")]
                for rep in whole.entries:
                    if plus[rep] + minus[rep] != whole[rep]:
                        split_sum.fail(Counterexample(lam, rep.label, plus[rep] + minus[rep],
                                                      str(whole[rep])))
        report.add(consistency)
        report.add(split_sum)
        psis = [rep for rep in irreps(n) if not rep.is_linear]
        flat = dict(tables)

        def keys(name):
            """Table keys of the named shape: one entry, or V+ and V- when it is self-conjugate."""
            return [k for k in flat if name in sh and k[0] == sh[name]]

        def pairs(names, reps_):
            return [(k, rep) for name in names for k in keys(name) for rep in reps_]

        def value_clause(name, description, items, expected):
            clause = Clause("dihedral-" + name, description)
            for k, rep in items:
                v = flat[k][rep]
                if v != expected:
                    clause.fail(Counterexample(k[0], rep.label + tag(*k), v, str(expected),
                                               flat[k].as_labels()))
            report.add(clause)

        value_clause(*dihedral_names[0], pairs(["row"], psis), 0)
        value_clause(*dihedral_names[1], pairs(["standard"], psis), 1)
        value_clause(*dihedral_names[2], pairs(["standard", "n-2,1,1"], [TRIV_TRIV]), 0)
        value_clause(*dihedral_names[3], pairs(["row"], [TRIV_TRIV]), 1)
        value_clause(*dihedral_names[4], pairs(["row", "standard", "n-2,2"], [TRIV_SIGN]), 0)
        clause = Clause("dihedral-" + dihedral_names[5][0], dihedral_names[5][1])
        for k, rep in pairs(["n-2,2"], [TRIV_TRIV]) + pairs(["n-2,1,1"], [TRIV_SIGN]):
            v = flat[k][rep]
            if not _exceeds(v, n, 6):
                clause.fail(Counterexample(k[0], rep.label + tag(*k), v, f"> {n}/6",
                                           flat[k].as_labels()))
        report.add(clause)
        listed = set(pairs(["standard", "n-2,1,1", "row"], [TRIV_TRIV]))
        listed |= set(pairs(["row", "standard", "n-2,2"], [TRIV_SIGN]))
        psi_listed = set(keys("row") + keys("standard"))
        lin = Clause("dihedral-" + dihedral_names[6][0], dihedral_names[6][1])
        psi = Clause("dihedral-" + dihedral_names[7][0], dihedral_names[7][1])
        for k, table in flat.items():
            for rep in (TRIV_TRIV, TRIV_SIGN):
                if (k, rep) not in listed and not _exceeds(table[rep], n, 12):
                    lin.fail(Counterexample(k[0], rep.label + tag(*k), table[rep], f"> {n}/12",
                                            table.as_labels()))
            if k in psi_listed:
                continue
            for p in psis:
                if not _exceeds(table[p], n, 6):
                    psi.fail(Counterexample(k[0], p.label + tag(*k), table[p], f"> {n}/6",
                                            table.as_labels()))
        report.add(lin)
        report.add(psi)

    # cyclic part, valid for every odd n since C_n <= A_n
    spectra = {k: cyclic_coeffs_alternating(*k) for k in reps}
    covered = set()

    def cyc_clause(name, description, shape_names, indices, expected):
        clause = Clause("cyclic-" + name, description)
        for s in shape_names:
            for k in (k for k in spectra if s in sh and k[0] == sh[s]):
                for j in indices:
                    covered.add((k, j))
                    v = spectra[k][j]
                    if v != expected:
                        clause.fail(Counterexample(k[0], f"a^{j}{tag(*k)}", v, str(expected)))
        report.add(clause)

    cyc_clause("nonzero-zero", "a^j(V_(n)) = 0 for j = 1..n-1", ["row"], range(1, n), 0)
    cyc_clause("nonzero-one", "a^j(V_(n-1,1)) = 1 for j = 1..n-1", ["standard"], range(1, n), 1)
    cyc_clause("a0-zero", "a^0(V_(n-1,1)) = 0", ["standard"], [0], 0)
    cyc_clause("a0-one", "a^0(V_(n)) = 1", ["row"], [0], 1)
    clause = Clause("cyclic-catch-all", "every other a^j(V) exceeds n/6")
    for k, coeffs in spectra.items():
        for j in range(n):
            if (k, j) not in covered and not _exceeds(coeffs[j], n, 6):
                clause.fail(Counterexample(k[0], f"a^{j}{tag(*k)}", coeffs[j], f"> {n}/6"))
    report.add(clause)
    if not report.asserted:
        _demote(report)
    return report


# -- induction from a cyclic subgroup ----------------------------------------------------


@dataclass
class InductionCheck:
    n: int
    p: int
    shape: Partition
    factors: tuple[Partition, ...]
    induced: dict[DihedralIrrep, int]
    restricted: dict[DihedralIrrep, int]

    @property
    def holds(self) -> bool:
        return all(self.induced[rep] <= self.restricted[rep] for rep in self.induced)


def _product_spectrum(factors: Sequence[Partition], m: int) -> tuple[int, ...]:
    """Multiplicities of the characters of C_m in the restriction of the outer product,
    C_m acting by the same m-cycle on every block: b^r = (1/m) sum_g Theta_g c_{m/g}(r)."""
    theta = {g: math.prod(chi(mu, _rotation_class(m, g)) for mu in factors) for g in divisors(m)}
    return tuple(
        _exact_div(sum(theta[g] * ramanujan_sum(m // g, r) for g in theta), m, "induced spectrum")
        for r in range(m)
    )


def _product_spectrum_by_convolution(factors: Sequence[Partition], m: int) -> tuple[int, ...]:
    """Same multiplicities from the tensor product of the factors' cyclic spectra."""
    acc = [1] + [0] * (m - 1)
    for mu in factors:
        coeffs = cyclic_coeffs(mu).coeffs
        nxt = [0] * m
        for i, u in enumerate(acc):
            if u:
                for k, v in enumerate(coeffs):
                    nxt[(i + k) % m] += u * v
        acc = nxt
    return tuple(acc)


def induced_from_rotation_power(n: int, p: int, factors: Sequence[Partition]) -> dict[DihedralIrrep, int]:
    """Irr(D_n) multiplicities of Ind from <r^p> to D_n of the block-diagonal restriction."""
    m = n // p
    b = _product_spectrum(factors, m)
    if b != _product_spectrum_by_convolution(factors, m):
        raise InternalConsistencyError("the two routes to the induced character disagree")
    out = {}
    for rep in irreps(n):
        if rep.is_linear:
            r_sign = rep.signs[0]
            # restriction to <r^p> is the character r^p -> r_sign^p
            out[rep] = b[0] if r_sign == 1 or p % 2 == 0 else b[m // 2] if m % 2 == 0 else 0
        else:
            # psi_j restricted to <r^p> sends r^p to zeta_m^j + zeta_m^-j
            out[rep] = b[rep.j % m] + b[(-rep.j) % m]
    degree = sum(rep.degree * v for rep, v in out.items())
    expected = 2 * p * math.prod(dimension(mu) for mu in factors)
    if degree != expected:
        raise InternalConsistencyError(f"induced degree {degree} differs from {expected}")
    return out


def induction_check(n: int, p: int, lam: Sequence[int], mus: Sequence[Sequence[int]]) -> InductionCheck:
    """Both sides of the comparison: Ind_{<r^p>}^{D_n} of the restricted outer product,
    and Res chi_lam. Raises ValueError, with the reason, when the hypotheses fail."""
    lam = Partition(lam)
    mus = tuple(Partition(mu) for mu in mus)
    if n % 2 == 0 or isprime(n) or n < 9:
        raise ValueError(f"n={n} must be an odd composite number")
    if p != min(primefactors(n)):
        raise ValueError(f"p={p} is not the smallest prime factor of {n}")
    m = n // p
    if lam.size != n:
        raise ValueError(f"lambda must partition {n}")
    if len(mus) != p or any(mu.size != m for mu in mus):
        raise ValueError(f"need {p} partitions of {m}")
    if len(set(mus)) < 3:
        raise ValueError("hypothesis fails: fewer than three pairwise distinct factors")
    if iterated_contains(lam, mus) == 0:
        raise ValueError(
            f"hypothesis fails: the product of the factors does not contain s_{lam}"
        )
    induced = induced_from_rotation_power(n, p, mus)
    restricted = branch_dihedral(lam).entries
    return InductionCheck(n, p, lam, mus, induced, restricted)


def verify_induction_step(n: int, p: int, lam: Sequence[int], mus: Sequence[Sequence[int]]) -> bool:
    """True iff the induced character is coefficient-wise at most Res chi_lam."""
    return induction_check(n, p, lam, mus).holds


def verify_two_row(p: int = 41) -> tuple[bool, BranchingTable]:
    """Every multiplicity in Res chi_{(p,p)} to D_{2p} exceeds 2p."""
    table = branch_dihedral((p, p))
    return all(v > 2 * p for v in table.entries.values()), table


def induction_instances(n: int = 15, limit: int | None = None) -> list[tuple[Partition, tuple[Partition, ...]]]:
    """All (lambda, unordered distinct factors) meeting the hypotheses, in enumeration order."""
    from itertools import combinations

    p = min(primefactors(n))
    m = n // p
    small = list(partitions_of(m))
    out = []
    for lam in partitions_of(n):
        for combo in combinations(small, p):
            if len(set(combo)) < 3:
                continue
            if iterated_contains(lam, combo) > 0:
                out.append((lam, combo))
                if limit is not None and len(out) >= limit:
                    return out
    return out


# -- counts -------------------------------------------------------------------------------


@dataclass
class HeckeCount:
    n: int
    rep: DihedralIrrep
    partitions: int
    zeros: list[Partition]

    @property
    def count(self) -> int:
        return self.partitions - len(self.zeros)

    @property
    def k_at_most_five(self) -> bool:
        return len(self.zeros) <= 5


def hecke_irreducible_count(n: int, rep: DihedralIrrep, tables: Iterable[BranchingTable] | None = None) -> HeckeCount:
    """p(n) minus the number of lambda whose restriction misses ``rep``."""
    if not rep.valid_for(n):
        raise ValueError(f"{rep.label} is not a character of D_{n}")
    if tables is None:
        tables = branch_all(n)
    zeros = [t.shape for t in tables if t[rep] == 0]
    return HeckeCount(n, rep, partition_number(n), zeros)


def evict_cache(n: int) -> int:
    return CACHE.evict_larger_than(n)
