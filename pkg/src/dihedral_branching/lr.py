"""Littlewood-Richardson coefficients and the Schur-positivity lemmas built on them.

LR fillings of a skew shape are built one row at a time, top to bottom. Within
a row cells are filled right to left, which is the reverse reading order, so
the lattice condition can be checked as each entry is placed. Completions are
memoized on (row, entries directly above the row, content so far).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .partitions import (
    Partition,
    SkewShape,
    conjugate,
    contains,
    dominance_leq,
    hook_partition,
    partitions_of,
    random_partition,
    subpartitions,
)


@dataclass(frozen=True)
class LRFilling:
    shape: SkewShape
    content: Partition
    rows: tuple[tuple[int, ...], ...]


def is_lr_filling(shape: SkewShape, rows: Sequence[Sequence[int]]) -> bool:
    """Semistandard, with a lattice reverse reading word."""
    outer, inner = shape.outer, shape.inner
    if len(rows) != len(outer):
        return False
    grid = {}
    for r, row in enumerate(rows):
        if len(row) != outer[r] - inner[r]:
            return False
        for offset, v in enumerate(row):
            grid[(r, inner[r] + offset)] = v
    for (r, c), v in grid.items():
        if v < 1:
            return False
        if (r, c + 1) in grid and grid[(r, c + 1)] < v:
            return False
        if (r + 1, c) in grid and grid[(r + 1, c)] <= v:
            return False
    counts: Counter = Counter()
    for r, row in enumerate(rows):
        for v in reversed(row):
            counts[v] += 1
            if v > 1 and counts[v] > counts[v - 1]:
                return False
    return True


def _content_of(counts: tuple) -> Partition:
    return Partition(c for c in counts if c)


def _expand(outer: tuple, inner: tuple, target: tuple | None) -> dict[tuple, int]:
    """Map final content counts -> number of LR fillings of outer/inner.

    With ``target`` only fillings whose content is ``target`` are counted.
    """
    rows = len(outer)
    width = len(target) if target is not None else rows
    if width == 0:
        return {(): 1} if sum(outer) == sum(inner) else {}
    memo: dict = {}

    def row_fillings(r: int, above: tuple, counts: list) -> Iterator[tuple[tuple, tuple]]:
        lo, hi = inner[r] if r < len(inner) else 0, outer[r]
        cells = hi - lo
        vals = [0] * cells
        top_value = min(r + 1, width)

        def place(pos: int, right: int):
            # pos runs from the rightmost cell leftwards
            if pos < 0:
                yield tuple(vals), tuple(counts)
                return
            floor = above[pos] + 1
            for v in range(min(right, top_value), floor - 1, -1):
                i = v - 1
                if target is not None and counts[i] >= target[i]:
                    continue
                if i > 0 and counts[i] + 1 > counts[i - 1]:
                    continue
                counts[i] += 1
                vals[pos] = v
                yield from place(pos - 1, v)
                counts[i] -= 1

        yield from place(cells - 1, top_value)

    def solve(r: int, prev_row: tuple, counts: tuple) -> dict[tuple, int]:
        if r == rows:
            if target is not None and counts != target:
                return {}
            return {counts: 1}
        key = (r, prev_row, counts)
        if key in memo:
            return memo[key]
        lo = inner[r] if r < len(inner) else 0
        hi = outer[r]
        if r == 0:
            above = (0,) * (hi - lo)
        else:
            plo = inner[r - 1] if r - 1 < len(inner) else 0
            above = tuple(prev_row[c - plo] if c >= plo else 0 for c in range(lo, hi))
        out: dict[tuple, int] = {}
        work = list(counts)
        for row_vals, new_counts in row_fillings(r, above, work):
            for final, k in solve(r + 1, row_vals, new_counts).items():
                out[final] = out.get(final, 0) + k
        memo[key] = out
        return out

    return solve(0, (), (0,) * width)


@lru_cache(maxsize=200_000)
def _skew_expansion(outer: tuple, inner: tuple) -> tuple[tuple[Partition, int], ...]:
    raw = _expand(outer, inner, None)
    merged: dict[Partition, int] = {}
    for counts, k in raw.items():
        p = _content_of(counts)
        merged[p] = merged.get(p, 0) + k
    return tuple(sorted(merged.items(), reverse=True))


def skew_expansion(outer: Sequence[int], inner: Sequence[int]) -> dict[Partition, int]:
    """s_{outer/inner} as a map partition -> LR coefficient (nonzero entries only)."""
    outer, inner = Partition(outer), Partition(inner)
    if not contains(outer, inner):
        return {}
    return dict(_skew_expansion(tuple(outer), tuple(inner)))


def skew_support(outer: Sequence[int], inner: Sequence[int]) -> list[Partition]:
    return list(skew_expansion(outer, inner))


@lru_cache(maxsize=500_000)
def _lr(lam: tuple, alpha: tuple, beta: tuple) -> int:
    if not contains(lam, alpha) or not contains(lam, beta):
        return 0
    # count fillings of the skew by the smaller content when that is cheaper
    if len(beta) > len(alpha):
        alpha, beta = beta, alpha
    raw = _expand(lam, alpha, beta)
    return raw.get(beta, 0)


def lr_coefficient(lam: Sequence[int], alpha: Sequence[int], beta: Sequence[int]) -> int:
    lam, alpha, beta = Partition(lam), Partition(alpha), Partition(beta)
    if alpha.size + beta.size != lam.size:
        raise ValueError(
            f"|alpha| + |beta| = {alpha.size + beta.size} differs from |lambda| = {lam.size}"
        )
    return _lr(tuple(lam), tuple(alpha), tuple(beta))


def iterated_contains(lam: Sequence[int], factors: Sequence[Sequence[int]]) -> int:
    """Coefficient of s_lam in the product of s_mu over ``factors``.

    The product is expanded one factor at a time keeping only intermediate
    shapes contained in ``lam``; other terms cannot contribute.
    """
    lam = Partition(lam)
    factors = [Partition(f) for f in factors]
    if sum(f.size for f in factors) != lam.size:
        raise ValueError("factor sizes must add up to |lambda|")
    layer: dict[Partition, int] = {Partition(): 1}
    done = 0
    for f in factors:
        done += f.size
        nxt: dict[Partition, int] = {}
        for nu, mult in layer.items():
            targets = [lam] if done == lam.size else subpartitions(lam, done, nu)
            for kappa in targets:
                c = _lr(tuple(kappa), tuple(nu), tuple(f))
                if c:
                    nxt[kappa] = nxt.get(kappa, 0) + mult * c
        layer = nxt
        if not layer:
            return 0
    return layer.get(lam, 0)


# -- greedy column filling ---------------------------------------------------------------


def column_filling(lam: Sequence[int], alpha: Sequence[int], k: int | None = None):
    """Greedy filling of lam/alpha with k entries: value i goes into the i-th
    cell of as many columns as possible, columns taken top row first and left
    to right within a row. Returns (beta, eta, filled cells by value)."""
    lam, alpha = Partition(lam), Partition(alpha)
    if not contains(lam, alpha):
        raise ValueError(f"{alpha} is not contained in {lam}")
    total = lam.size - alpha.size
    if k is None:
        k = total
    if k < 0 or k > total:
        raise ValueError(f"k={k} must lie between 0 and |lam/alpha|={total}")
    lam_c, alpha_c = conjugate(lam), conjugate(alpha)
    cols = range(lam[0] if lam else 0)
    beta = []
    filled: dict[tuple[int, int], int] = {}
    remaining = k
    i = 1
    while remaining > 0:
        # the i-th skew cell of column c sits in row alpha'_c + i - 1
        candidates = [
            (alpha_c[c] + i - 1, c) for c in cols if lam_c[c] - alpha_c[c] >= i
        ]
        candidates.sort()
        take = candidates[:remaining]
        if not take:
            break
        for cell in take:
            filled[cell] = i
        beta.append(len(take))
        remaining -= len(take)
        i += 1
    eta_rows = list(alpha) + [0] * (len(lam) - len(alpha))
    for (r, _c) in filled:
        eta_rows[r] += 1
    return Partition(beta), Partition(eta_rows), filled


def dominant_partition(lam: Sequence[int], alpha: Sequence[int], k: int) -> Partition:
    """The dominance-largest beta of k with s_beta <= s_{eta/alpha} for some
    alpha <= eta <= lam, obtained by greedy column filling."""
    lam, alpha = Partition(lam), Partition(alpha)
    if not contains(lam, alpha):
        raise ValueError(f"{alpha} is not contained in {lam}")
    if k < 1 or alpha.size + k > lam.size:
        raise ValueError("need 1 <= k <= |lam| - |alpha|")
    return column_filling(lam, alpha, k)[0]


def column_content(lam: Sequence[int], alpha: Sequence[int]) -> Partition:
    """Content of the full column filling of lam/alpha (always LR-positive)."""
    return column_filling(lam, alpha)[0]


def row_content(lam: Sequence[int], alpha: Sequence[int]) -> Partition:
    """Sorted row lengths of lam/alpha (also always LR-positive)."""
    lam, alpha = Partition(lam), Partition(alpha)
    return Partition(sorted((lam[i] - alpha[i] for i in range(len(lam))), reverse=True))


def _quick_support(lam: Partition, alpha: Partition) -> list[Partition]:
    """Cheap members of supp(lam/alpha) before the full expansion."""
    a, b = column_content(lam, alpha), row_content(lam, alpha)
    return [a] if a == b else [a, b]


# -- the lemma verifiers -----------------------------------------------------------------


def one_row_and_column(m: int) -> frozenset[Partition]:
    return frozenset({Partition([m]), Partition([1] * m)})


def standard_and_conjugate(m: int) -> frozenset[Partition]:
    return frozenset({Partition([m - 1, 1]), hook_partition(m, m - 2)})


def base_lemma_stated_list(m: int) -> frozenset[Partition]:
    n = 2 * m
    return frozenset(
        Partition(p)
        for p in (
            [n],
            [n - 1, 1],
            [n - 2, 1, 1],
            [n - 2, 2],
            [m, m],
            [3] + [1] * (n - 3),
            [2, 2] + [1] * (n - 4),
            [2] + [1] * (n - 2),
            [1] * n,
        )
    )


def base_lemma_extended_list(m: int) -> frozenset[Partition]:
    """The list as it appears later, where (2^m) is also excluded."""
    return base_lemma_stated_list(m) | {Partition([2] * m)}


def find_pair(
    lam: Sequence[int], m: int, forbidden: Iterable[Partition], distinct: bool
) -> tuple[Partition, Partition] | None:
    """alpha, beta of m outside ``forbidden`` with c^lam_{alpha beta} > 0."""
    return _find_pair(Partition(lam), m, frozenset(forbidden), distinct)


@lru_cache(maxsize=100_000)
def _find_pair(lam: Partition, m: int, forbidden: frozenset, distinct: bool):
    alphas = [a for a in subpartitions(lam, m) if a not in forbidden]
    # cheap witnesses first, then the full expansion
    for alpha in alphas:
        for beta in _quick_support(lam, alpha):
            if beta not in forbidden and not (distinct and beta == alpha):
                return alpha, beta
    for alpha in alphas:
        for beta in skew_support(lam, alpha):
            if beta not in forbidden and not (distinct and beta == alpha):
                return alpha, beta
    return None


@dataclass
class LemmaReport:
    name: str
    m: int
    observation_mode: bool
    checked: int = 0
    skipped: int = 0
    failures: list[Partition] = field(default_factory=list)
    witnesses: dict[Partition, tuple] = field(default_factory=dict)
    exception_set: set[Partition] | None = None
    matches_stated_list: bool | None = None
    notes: list[str] = field(default_factory=list)
    seed: int | None = None
    sample_size: int | None = None

    @property
    def passed(self) -> bool | None:
        if self.observation_mode:
            return None
        if self.matches_stated_list is not None:
            return self.matches_stated_list
        return not self.failures


def verify_lemma_base(m: int) -> LemmaReport:
    """Which lambda of 2m are not reached by s_alpha s_beta with distinct
    alpha, beta avoiding (m) and (1^m)."""
    if m < 2:
        raise ValueError("m must be at least 2")
    report = LemmaReport("base", m, observation_mode=m < 11)
    bad = one_row_and_column(m)
    exceptions = set()
    for lam in partitions_of(2 * m):
        report.checked += 1
        pair = find_pair(lam, m, bad, distinct=True)
        if pair is None:
            exceptions.add(lam)
        else:
            report.witnesses[lam] = pair
    report.exception_set = exceptions
    stated = set(base_lemma_stated_list(m))
    extended = set(base_lemma_extended_list(m))
    if m >= 11:
        report.matches_stated_list = exceptions == stated
    for label, listed in (("displayed list", stated), ("list with (2^m)", extended)):
        missing = sorted(listed - exceptions, reverse=True)
        extra = sorted(exceptions - listed, reverse=True)
        if missing or extra:
            report.notes.append(
                f"against the {label}: computed but not listed "
                f"{[str(p) for p in extra]}, listed but not computed {[str(p) for p in missing]}"
            )
        else:
            report.notes.append(f"computed exceptions equal the {label}")
    report.failures = sorted(exceptions, reverse=True) if report.matches_stated_list is False else []
    return report


def verify_lemma_pp(m: int) -> LemmaReport:
    """Every lambda of 2m is reached by s_alpha s_beta avoiding (m-1,1), (2,1^{m-2})."""
    report = LemmaReport("pp", m, observation_mode=m < 11)
    bad = standard_and_conjugate(m)
    for lam in partitions_of(2 * m):
        report.checked += 1
        pair = find_pair(lam, m, bad, distinct=False)
        if pair is None:
            report.failures.append(lam)
        else:
            report.witnesses[lam] = pair
    return report


def _triple_ok(triple, bad, weak_bad, strong: bool) -> bool:
    a, b, g = triple
    if len({a, b, g}) < 3 or any(x in bad for x in triple):
        return False
    return not strong or sum(x not in weak_bad for x in triple) >= 2


def find_triple(lam: Sequence[int], m: int, strong: bool = False):
    """Pairwise distinct alpha, beta, gamma of m, none (m) or (1^m), with
    s_lam in s_alpha s_beta s_gamma (strong: two of them also avoid
    (m-1,1) and (2,1^{m-2}))."""
    lam = Partition(lam)
    bad = one_row_and_column(m)
    weak_bad = standard_and_conjugate(m)
    for quick in (True, False):
        for nu in subpartitions(lam, 2 * m):
            gammas = _quick_support(lam, nu) if quick else skew_support(lam, nu)
            gammas = [g for g in gammas if g not in bad]
            if not gammas:
                continue
            for alpha in subpartitions(nu, m):
                if alpha in bad:
                    continue
                betas = _quick_support(nu, alpha) if quick else skew_support(nu, alpha)
                for beta in betas:
                    for gamma in gammas:
                        if _triple_ok((alpha, beta, gamma), bad, weak_bad, strong):
                            return alpha, beta, gamma, nu
    return None


def verify_lemma_3m(m: int, strong: bool = False) -> LemmaReport:
    report = LemmaReport("3m-strong" if strong else "3m", m, observation_mode=m < 11)
    n = 3 * m
    for lam in partitions_of(n):
        if lam[0] > n - 6 or len(lam) > n - 6:
            report.skipped += 1
            continue
        report.checked += 1
        found = find_triple(lam, m, strong)
        if found is None:
            report.failures.append(lam)
        else:
            report.witnesses[lam] = found[:3]
    return report


def boundary_family(n: int) -> list[Partition]:
    """Every partition of n with first part exactly n-6, and their conjugates."""
    out = set()
    for rest in partitions_of(6, max_part=n - 6):
        lam = Partition([n - 6] + list(rest))
        out.add(lam)
        out.add(conjugate(lam))
    return sorted(out, reverse=True)


def _pick_alpha(lam: Partition, m: int) -> tuple[Partition, Partition] | None:
    """alpha of 3m inside lam with alpha_1, alpha_1' <= 3m-6, and nu = column content
    of lam/alpha (so c^lam_{alpha nu} > 0)."""
    cap = 3 * m - 6
    bounded = Partition([min(p, cap) for p in lam[:cap]])
    for alpha in subpartitions(bounded, 3 * m):
        if conjugate(alpha)[0] > cap:
            continue
        return alpha, column_content(lam, alpha)
    return None


def decompose_5m(lam: Sequence[int], m: int, t: int = 2):
    """Witness for s_lam <= s_alpha (s_beta)^t sums: alpha of 3m with small first
    row and column, and t factors of m avoiding (m-1,1), (2,1^{m-2}).

    The complement of alpha is peeled into blocks of 2m by greedy column
    fillings; each block is then split into a pair via ``find_pair``.
    """
    lam = Partition(lam)
    if t % 2 or t < 2:
        raise ValueError("t must be a positive even integer")
    picked = _pick_alpha(lam, m)
    if picked is None:
        return None
    alpha, rest = picked
    bad = standard_and_conjugate(m)
    factors = []
    current = rest
    for block in range(t // 2):
        if block < t // 2 - 1:
            # split current (size (t - 2 block) m) as a 2m piece times the remainder
            piece = subpartitions(current, 2 * m).__next__()
            remainder = column_content(current, piece)
        else:
            piece, remainder = current, None
        pair = find_pair(piece, m, bad, distinct=False)
        if pair is None:
            return None
        factors.extend(pair)
        if remainder is None:
            break
        current = remainder
    return alpha, rest, tuple(factors)


def verify_lemma_5m(m: int, sample_size: int = 200, seed: int = 1, t: int = 2) -> LemmaReport:
    """Sampled check of the 3m + tm decomposition on partitions of (3 + t)m.

    Uniform random partitions are drawn (rejecting those outside the
    hypothesis) and every member of the boundary family is added.
    """
    n = (3 + t) * m
    report = LemmaReport(f"5m(t={t})", m, observation_mode=m < 11, seed=seed, sample_size=sample_size)
    rng = random.Random(seed)
    sample: list[Partition] = []
    draws = 0
    while len(sample) < sample_size:
        lam = random_partition(n, rng)
        draws += 1
        if lam[0] <= n - 6 and len(lam) <= n - 6:
            sample.append(lam)
    family = boundary_family(n)
    report.notes.append(
        f"sampled {sample_size} uniform partitions of {n} (seed {seed}, {draws} draws) "
        f"plus {len(family)} boundary partitions; not an exhaustive check"
    )
    for lam in sample + family:
        report.checked += 1
        found = decompose_5m(lam, m, t)
        if found is None:
            report.failures.append(lam)
        else:
            report.witnesses[lam] = (found[0],) + found[2]
    return report


def hook_containment_factors(m: int, p: int) -> list[Partition]:
    """((m+1)/2, 1^{(m-1)/2}), then (m-2,2) and (3,1^{m-3}) alternating."""
    if m % 2 == 0 or p % 2 == 0:
        raise ValueError("m and p must be odd")
    factors = [hook_partition(m, (m - 1) // 2)]
    for i in range(2, p + 1):
        factors.append(Partition([m - 2, 2]) if i % 2 == 0 else hook_partition(m, m - 3))
    return factors


@dataclass
class HookContainmentReport:
    m: int
    p: int
    shape: Partition
    factors: list[Partition]
    coefficient: int
    not_contained: list[Partition]

    @property
    def passed(self) -> bool:
        return self.coefficient > 0


def verify_hook_containment(m: int, p: int) -> HookContainmentReport:
    """Is s_lambda, lambda the self-conjugate hook of mp, a constituent of the
    product of the factor Schur functions?"""
    n = m * p
    k = (n - 1) // 2
    lam = hook_partition(n, k)
    factors = hook_containment_factors(m, p)
    not_contained = [f for f in factors if not contains(lam, f)]
    coefficient = 0 if not_contained else iterated_contains(lam, factors)
    return HookContainmentReport(m, p, lam, factors, coefficient, not_contained)


def dominance_maximal(betas: Iterable[Partition]) -> list[Partition]:
    betas = list(betas)
    return [b for b in betas if not any(c != b and dominance_leq(b, c) for c in betas)]
