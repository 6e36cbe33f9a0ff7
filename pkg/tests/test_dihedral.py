from itertools import permutations, product

import pytest

from dihedral_branching.dihedral import (
    SIGN_SIGN,
    SIGN_TRIV,
    TRIV_SIGN,
    TRIV_TRIV,
    DihedralGroup,
    DihedralIrrep,
    Permutation,
    conjugated_young_meets_dihedral_trivially,
    dihedral_twist,
    irrep_value_linear,
    irreps,
    mn_cycle,
    parse_irrep,
    two_dim,
    verify_dihedral_conjugate,
    verify_mn_cycle,
    wreath_embed,
    young_avoider,
    young_blocks,
)
from dihedral_branching.partitions import cycle_type, partitions_of


def test_permutation_basics():
    p = Permutation.from_cycles(4, [(1, 2, 3)])
    q = Permutation.from_cycles(4, [(3, 4)])
    # products act right to left
    assert (p * q)(3) == p(q(3)) == 4
    assert (q * p)(3) == q(p(3)) == 1
    assert p.order() == 3 and (p**3).is_identity()
    assert p.inverse() * p == Permutation.identity(4)
    assert p**-1 == p.inverse()
    assert p.sign() == 1 and q.sign() == -1
    assert p.cycles() == [(1, 2, 3)]
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


def test_group_elements_and_coordinates():
    for n in range(3, 61):
        group = DihedralGroup(n)
        assert group.check_invariants()
    group = DihedralGroup(6)
    assert len(set(group.elements())) == 12 == group.order
    r, s = group.rotation, group.reflection
    for k in range(6):
        assert group.element(k, False) == r**k
        assert group.element(k, True) == s * r**k


def test_reflection_classes():
    # odd n: every reflection fixes one point
    assert DihedralGroup(7).reflection_classes() == {
        ((2, 2, 2, 1), 0): 4,
        ((2, 2, 2, 1), 1): 3,
    }
    # even n: the two types alternate with the parity of k
    classes = DihedralGroup(8).reflection_classes()
    assert sum(classes.values()) == 8
    assert set(classes) == {((2, 2, 2, 1, 1), 1), ((2, 2, 2, 2), 0)} or set(classes) == {
        ((2, 2, 2, 1, 1), 0),
        ((2, 2, 2, 2), 1),
    }
    for n in range(3, 30):
        for (ct, _), count in DihedralGroup(n).reflection_classes().items():
            assert count in (n // 2, (n + 1) // 2, n)
            assert set(ct) <= {1, 2}


def test_irreps_squared_degrees():
    for n in range(3, 40):
        reps = irreps(n)
        assert sum(rep.degree**2 for rep in reps) == 2 * n
        assert len(reps) == (n + 6) // 2 if n % 2 == 0 else (n + 3) // 2
        assert all(rep.valid_for(n) for rep in reps)


def test_irrep_labels_round_trip():
    for rep in irreps(12):
        assert parse_irrep(rep.label) == rep
    assert [rep.label for rep in irreps(6)] == ["1++", "1+-", "1-+", "1--", "psi1", "psi2"]
    with pytest.raises(ValueError):
        parse_irrep("chi3")
    with pytest.raises(ValueError):
        DihedralIrrep("TwoDim", 0)
    with pytest.raises(ValueError):
        DihedralIrrep("TrivTriv", 2)


def test_linear_character_values():
    for k in range(8):
        for flag in (False, True):
            assert irrep_value_linear(TRIV_TRIV, 8, k, flag) == 1
    assert irrep_value_linear(TRIV_SIGN, 8, 3, True) == -1
    assert irrep_value_linear(SIGN_TRIV, 8, 3, False) == -1
    assert irrep_value_linear(SIGN_SIGN, 8, 2, True) == -1
    with pytest.raises(ValueError):
        irrep_value_linear(SIGN_TRIV, 7, 1, False)
    with pytest.raises(ValueError):
        irrep_value_linear(two_dim(1), 7, 1, False)


def test_linear_characters_are_homomorphisms():
    for n in (6, 7, 8):
        group = DihedralGroup(n)
        coords = {group.element(k, f): (k, f) for k, f in group.coordinates()}
        for rep in irreps(n):
            if not rep.is_linear:
                continue
            for a, b in product(coords, repeat=2):
                ka, fa = coords[a]
                kb, fb = coords[b]
                kc, fc = coords[a * b]
                assert irrep_value_linear(rep, n, ka, fa) * irrep_value_linear(rep, n, kb, fb) == (
                    irrep_value_linear(rep, n, kc, fc)
                )


def test_wreath_embedding_examples():
    e = Permutation.identity(3)
    assert wreath_embed([e, e], Permutation.identity(2)).is_identity()
    assert mn_cycle(2, 3) == Permutation.from_cycles(6, [(1, 3, 5, 2, 4, 6)])
    t = dihedral_twist(3, 3)
    tau = mn_cycle(3, 3)
    assert (t * t).is_identity() and t * tau * t.inverse() == tau.inverse()
    assert verify_mn_cycle(1, 5) and verify_mn_cycle(4, 6)
    assert verify_dihedral_conjugate(2, 5) and verify_dihedral_conjugate(5, 3)
    with pytest.raises(ValueError):
        wreath_embed([e], Permutation.identity(2))


def test_wreath_embedding_is_a_homomorphism():
    m, n = 2, 3
    base = [Permutation(p) for p in permutations(range(1, m + 1))]
    top = [Permutation(p) for p in permutations(range(1, n + 1))]
    elements = [(f, pi) for f in product(base, repeat=n) for pi in top]
    images = {wreath_embed(list(f), pi) for f, pi in elements}
    # injective, and the image is closed under products
    assert len(images) == len(elements) == 48
    for a in list(images)[:12]:
        for b in images:
            assert a * b in images


def test_embedding_lemmas_up_to_eight():
    for m in range(2, 9):
        for n in range(2, 9):
            assert verify_mn_cycle(m, n)
            assert verify_dihedral_conjugate(m, n)


def _conjugated_young(mu, sigma):
    blocks = young_blocks(mu)
    n = sigma.degree
    elements = set()
    for choice in product(*[list(permutations(b)) for b in blocks]):
        images = list(range(1, n + 1))
        for block, perm in zip(blocks, choice):
            for x, y in zip(block, perm):
                images[x - 1] = y
        y = Permutation(images)
        elements.add(sigma * y * sigma.inverse())
    return elements


def test_young_avoider_examples():
    for mu, n in (((3, 2, 2), 7), ((2, 2, 1), 5)):
        sigma = young_avoider(mu, n)
        dihedral = set(DihedralGroup(n).elements())
        assert _conjugated_young(mu, sigma) & dihedral == {Permutation.identity(n)}
    with pytest.raises(ValueError):
        young_avoider((5, 2), 7)
    with pytest.raises(ValueError):
        young_avoider((3, 2, 1), 6)


@pytest.mark.parametrize("n", [5, 7, 11, 13])
def test_young_avoider_postcondition(n):
    for mu in partitions_of(n):
        if len(mu) < 3:
            continue
        sigma = young_avoider(mu, n)
        assert conjugated_young_meets_dihedral_trivially(mu, sigma)


def test_membership_check_matches_enumeration():
    # the block-preservation shortcut agrees with listing sigma Y sigma^-1 outright
    n = 7
    dihedral = set(DihedralGroup(n).elements())
    for mu in ((3, 2, 2), (4, 2, 1), (2, 2, 2, 1), (3, 3, 1)):
        for images in list(permutations(range(1, n + 1)))[::97]:
            sigma = Permutation(images)
            brute = _conjugated_young(mu, sigma) & dihedral == {Permutation.identity(n)}
            assert conjugated_young_meets_dihedral_trivially(mu, sigma) == brute


def test_reflection_fixed_points():
    for n in range(3, 25):
        group = DihedralGroup(n)
        fixed = [cycle_type(group.element(k, True)).count(1) for k in range(n)]
        if n % 2:
            assert set(fixed) == {1}
        else:
            # the two kinds of reflection alternate with k
            assert set(fixed) == {0, 2}
            assert all(fixed[k] == fixed[k % 2] for k in range(n))
