import math

import pytest

from dihedral_branching.branching import (
    BranchingTable,
    InternalConsistencyError,
    branch_all,
    branch_alternating,
    branch_dihedral,
    conjugation_relabeling,
    cyclic_coeffs,
    cyclic_coeffs_alternating,
    dihedral_in_alternating,
    hecke_irreducible_count,
    induced_from_rotation_power,
    induction_check,
    induction_instances,
    parity_case,
    ramanujan_sum,
    reflection_sums,
    relabel,
    verify_corollary_cyclic,
    verify_induction_step,
    verify_theorem_an,
    verify_theorem_sn,
    verify_two_row,
)
from dihedral_branching.characters import chi
from dihedral_branching.dihedral import (
    SIGN_SIGN,
    SIGN_TRIV,
    TRIV_SIGN,
    TRIV_TRIV,
    DihedralGroup,
    irrep_value_linear,
    irreps,
    two_dim,
)
from dihedral_branching.partitions import Partition, conjugate, cycle_type, partition_number, partitions_of
from dihedral_branching.reports import INFO, NOT_APPLICABLE, PASS
from dihedral_branching.specht import SPECHT_LIMIT, specht_branching
from dihedral_branching.tableaux import dimension, maj_counts


def test_ramanujan_sums():
    for q in range(1, 25):
        for r in range(q):
            direct = sum(
                math.cos(2 * math.pi * k * r / q) for k in range(1, q + 1) if math.gcd(k, q) == 1
            )
            assert ramanujan_sum(q, r) == round(direct)


def test_cyclic_examples():
    assert cyclic_coeffs((7,)).coeffs == (1, 0, 0, 0, 0, 0, 0)
    assert cyclic_coeffs((3, 2)).coeffs == (1, 1, 1, 1, 1)
    column = cyclic_coeffs((1,) * 12)
    assert column[6] == 1 and column[0] == 0
    assert cyclic_coeffs((14, 1))[3] == 1


def test_cyclic_coeffs_match_major_index():
    for n in range(3, 13):
        for lam in partitions_of(n):
            assert list(cyclic_coeffs(lam).coeffs) == maj_counts(lam, n)


def test_cyclic_invariants():
    for n in range(1, 31):
        for lam in partitions_of(n):
            a = cyclic_coeffs(lam)
            assert sum(a.coeffs) == dimension(lam)
            assert all(v >= 0 for v in a.coeffs)
            assert all(a[j] == a[n - j] for j in range(1, n))


def test_branch_examples():
    t = branch_dihedral((13,))
    assert t[TRIV_TRIV] == 1 and sum(t.entries.values()) == 1
    assert branch_dihedral((2,) + (1,) * 12)[TRIV_TRIV] == 1
    assert branch_dihedral((2,) + (1,) * 10)[TRIV_SIGN] == 1
    assert all(branch_dihedral((12, 1))[two_dim(j)] == 1 for j in range(1, 7))
    with pytest.raises(ValueError):
        branch_dihedral((2,))


def test_reflection_sums_count_reflections():
    # at the identity shape the character is 1, so the sum counts the reflections
    for n in range(3, 20):
        total, _ = reflection_sums(Partition([n]))
        assert total == n


def test_table_invariants_up_to_thirty():
    for n in range(3, 31):
        for table in branch_all(n):
            lam = table.shape
            a = cyclic_coeffs(lam)
            assert table.degree_sum() == dimension(lam)
            assert all(v >= 0 for v in table.entries.values())
            assert set(table.entries) == set(irreps(n))
            assert table[TRIV_TRIV] + table[TRIV_SIGN] == a[0]
            if n % 2 == 0:
                assert table[SIGN_TRIV] + table[SIGN_SIGN] == a[n // 2]
            for j in range(1, (n - 1) // 2 + 1):
                assert table[two_dim(j)] == a[j]


@pytest.mark.parametrize("n", range(3, SPECHT_LIMIT + 1))
def test_branch_matches_specht_module_oracle(n):
    for lam in partitions_of(n):
        assert branch_dihedral(lam).entries == specht_branching(lam)


def test_specht_oracle_refuses_large_n():
    with pytest.raises(ValueError):
        specht_branching((5, 4))


def _character_brute_force(lam, n):
    """Multiplicities by summing chi over all 2n elements with float psi values."""
    group = DihedralGroup(n)
    out = {}
    for rep in irreps(n):
        total = 0.0
        for k, flag in group.coordinates():
            value = chi(lam, cycle_type(group.element(k, flag)))
            if rep.is_linear:
                total += value * irrep_value_linear(rep, n, k, flag)
            elif not flag:
                total += value * 2 * math.cos(2 * math.pi * rep.j * k / n)
        out[rep] = round(total / (2 * n))
    return out


@pytest.mark.parametrize("n", [9, 10, 11, 12])
def test_branch_matches_direct_character_sum(n):
    for lam in partitions_of(n):
        assert branch_dihedral(lam).entries == _character_brute_force(lam, n)


def _labels(n):
    return {a.label: b.label for a, b in conjugation_relabeling(n).items() if a.is_linear}


def test_relabeling_rule():
    # [DERIVED] from the parities of the two generators, frozen per parity class
    assert _labels(13) == {"1++": "1++", "1+-": "1+-"}
    assert _labels(11) == {"1++": "1+-", "1+-": "1++"}
    assert _labels(12) == {"1++": "1-+", "1+-": "1--", "1-+": "1++", "1--": "1+-"}
    assert _labels(14) == {"1++": "1--", "1+-": "1-+", "1-+": "1+-", "1--": "1++"}
    # the rotation is odd for even n, so psi_j moves by n/2
    assert conjugation_relabeling(12)[two_dim(1)] == two_dim(5)
    assert conjugation_relabeling(13)[two_dim(4)] == two_dim(4)


def test_relabel_predicts_conjugate_tables():
    for n in range(3, 21):
        tables = {t.shape: t for t in branch_all(n)}
        for lam, table in tables.items():
            assert relabel(table) == tables[conjugate(lam)]


def test_parity_cases():
    assert parity_case(13) == "n odd, (n-1)/2 even"
    assert parity_case(11) == "n odd, (n-1)/2 odd"
    assert parity_case(12) == "n even, n/2 even"
    assert parity_case(14) == "n even, n/2 odd"


# -- alternating groups -------------------------------------------------------------------


def test_dihedral_in_alternating():
    assert [n for n in range(3, 30) if dihedral_in_alternating(n)] == list(range(5, 30, 4))


def test_branch_alternating_examples():
    t = branch_alternating((13,))
    assert t[TRIV_TRIV] == 1 and sum(t.entries.values()) == 1
    t = branch_alternating((12, 1))
    assert all(t[two_dim(j)] == 1 for j in range(1, 7))
    with pytest.raises(ValueError):
        branch_alternating((6, 6))
    with pytest.raises(ValueError):
        branch_alternating((6, 1, 1, 1, 1, 1))  # n = 11: reflections are odd
    with pytest.raises(ValueError):
        branch_alternating((12, 1), "+")


@pytest.mark.parametrize("n", [5, 9, 13, 17, 21])
def test_split_tables_sum_to_the_whole(n):
    for lam in partitions_of(n):
        if lam != conjugate(lam):
            continue
        plus, minus = branch_alternating(lam, "+"), branch_alternating(lam, "-")
        whole = branch_dihedral(lam)
        for rep in whole.entries:
            assert plus[rep] + minus[rep] == whole[rep]
        assert plus.degree_sum() == minus.degree_sum() == dimension(lam) // 2


@pytest.mark.parametrize("n", [7, 11, 15, 19, 21])
def test_split_cyclic_sums_to_the_whole(n):
    for lam in partitions_of(n):
        if lam != conjugate(lam):
            continue
        plus = cyclic_coeffs_alternating(lam, "+")
        minus = cyclic_coeffs_alternating(lam, "-")
        whole = cyclic_coeffs(lam)
        assert [a + b for a, b in zip(plus.coeffs, minus.coeffs)] == list(whole.coeffs)
    with pytest.raises(ValueError):
        cyclic_coeffs_alternating((4, 4))


# -- theorem verifiers --------------------------------------------------------------------


@pytest.mark.parametrize("n", [11, 12, 13, 14, 17, 20])
def test_theorem_sn_passes(n):
    report = verify_theorem_sn(n)
    assert report.asserted and report.passed, report.render()


def test_theorem_sn_minimum_clause_readings():
    # the misprinted term is tried both ways; only the 1++ reading survives
    clause = next(c for c in verify_theorem_sn(13).clauses if c.name == "min-bound")
    assert clause.status == PASS and "read as 1++" in clause.detail
    one_minus = branch_dihedral((2, 2) + (1,) * 9)
    assert one_minus[TRIV_SIGN] == 0 and one_minus[TRIV_TRIV] > 13 / 6


def test_theorem_sn_below_range_is_informational():
    report = verify_theorem_sn(10)
    assert not report.asserted and report.passed
    assert all(c.status in (INFO, NOT_APPLICABLE, PASS) for c in report.clauses)


@pytest.mark.parametrize("n", [11, 12, 15, 16])
def test_corollary_cyclic_passes(n):
    report = verify_corollary_cyclic(n)
    assert report.passed, report.render()


@pytest.mark.parametrize("n", [11, 13, 15, 17])
def test_theorem_an_passes(n):
    report = verify_theorem_an(n)
    assert report.passed, report.render()
    if not dihedral_in_alternating(n):
        assert any(c.status == NOT_APPLICABLE for c in report.clauses)


def test_theorem_an_rejects_even_n():
    with pytest.raises(ValueError):
        verify_theorem_an(12)


# -- counting and induction ----------------------------------------------------------------


def test_hecke_counts():
    assert hecke_irreducible_count(13, two_dim(3)).count == partition_number(13) - 2 == 99
    assert hecke_irreducible_count(12, TRIV_SIGN).count == partition_number(12) - 4
    assert hecke_irreducible_count(11, TRIV_TRIV).count == 51
    with pytest.raises(ValueError):
        hecke_irreducible_count(13, SIGN_TRIV)


def test_hecke_k_exceeds_five_for_ts_when_n_is_one_mod_four():
    # the zero set of the sign-on-reflections character has six members in this case
    count = hecke_irreducible_count(13, TRIV_SIGN)
    assert len(count.zeros) == 6 and not count.k_at_most_five


def _induced_brute_force(n, p, factors):
    """Ind from <r^p> by the coset formula, with float psi values."""
    group = DihedralGroup(n)
    m = n // p
    elements = [group.element(k, f) for k, f in group.coordinates()]
    coords = {g: c for g, c in zip(elements, group.coordinates())}
    sub = {group.element(p * k % n, False): k for k in range(m)}

    def theta(k):
        g = math.gcd(k, m)
        return math.prod(chi(mu, (m // g,) * g) for mu in factors)

    induced = {}
    for x in elements:
        total = 0
        for y in elements:
            h = y * x * y.inverse()
            if h in sub:
                total += theta(sub[h])
        induced[x] = total / m
    out = {}
    for rep in irreps(n):
        acc = 0.0
        for x, value in induced.items():
            k, flag = coords[x]
            if rep.is_linear:
                acc += value * irrep_value_linear(rep, n, k, flag)
            elif not flag:
                acc += value * 2 * math.cos(2 * math.pi * rep.j * k / n)
        out[rep] = round(acc / (2 * n))
    return out


@pytest.mark.parametrize(
    "n, p, factors",
    [
        (15, 3, ((3, 2), (4, 1), (2, 2, 1))),
        (9, 3, ((3,), (2, 1), (1, 1, 1))),
        (15, 3, ((5,), (3, 1, 1), (2, 1, 1, 1))),
        (25, 5, ((5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1))),
    ],
)
def test_induced_character_matches_coset_formula(n, p, factors):
    assert induced_from_rotation_power(n, p, factors) == _induced_brute_force(n, p, factors)


def test_induction_step_example():
    assert verify_induction_step(15, 3, (7, 5, 3), ((3, 2), (4, 1), (2, 2, 1)))
    check = induction_check(15, 3, (7, 5, 3), ((3, 2), (4, 1), (2, 2, 1)))
    assert check.holds and sum(check.induced.values()) > 0


def test_induction_step_errors():
    mus = ((3, 2), (4, 1), (2, 2, 1))
    with pytest.raises(ValueError, match="does not contain"):
        verify_induction_step(15, 3, (15,), mus)
    with pytest.raises(ValueError, match="distinct"):
        verify_induction_step(15, 3, (7, 5, 3), ((3, 2), (3, 2), (4, 1)))
    with pytest.raises(ValueError):
        verify_induction_step(15, 5, (7, 5, 3), mus)
    with pytest.raises(ValueError):
        verify_induction_step(13, 13, (13,), ((1,),) * 13)


def test_induction_instances_hold():
    instances = induction_instances(15, limit=25)
    assert len(instances) == 25
    for lam, mus in instances:
        assert verify_induction_step(15, 3, lam, mus)


def test_two_row_bound():
    ok, table = verify_two_row(41)
    assert ok and min(table.entries.values()) > 82
    assert table.degree_sum() == dimension((41, 41))


def test_internal_consistency_error_is_arithmetic():
    assert issubclass(InternalConsistencyError, ArithmeticError)
    assert isinstance(branch_dihedral((3, 2)), BranchingTable)
