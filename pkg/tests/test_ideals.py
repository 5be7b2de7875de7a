from __future__ import annotations

import pytest

import oracles as O
from conftest import transport
from feckly.ideals import (
    LEFT,
    RIGHT,
    TWO_SIDED,
    LatticeCapError,
    all_ideals,
    closure,
    ideal_product,
    ideal_sum,
    intersection,
    is_ideal,
    is_prime,
    j_spec_points,
    jacobson_radical,
    make_ideal,
    maximal_ideals,
    maximal_left_ideals,
    maximal_right_ideals,
    prime_ideals,
    principal,
    whole,
    zero_ideal,
)
from feckly.ring import RingMismatchError, direct_product, matrix_ring, upper_triangular, zn


def members(I):
    return set(I.members)


def member_lists(ideals):
    return sorted(sorted(I.members) for I in ideals)


def test_principal_examples():
    R = zn(6)
    assert members(principal(R, 0)) == {0}
    assert members(principal(R, 5)) == set(range(6))
    assert members(principal(R, 2)) == {0, 2, 4}


def test_sum_and_product_in_z12():
    R = zn(12)
    I4, I6 = principal(R, 4), principal(R, 6)
    assert ideal_sum(I4, I6) == principal(R, 2)
    assert members(ideal_product(I4, I6)) == {0}
    assert ideal_sum(I4, zero_ideal(R)) == I4


def test_sum_rejects_mismatch():
    R = matrix_ring(zn(2), 2)
    with pytest.raises(ValueError):
        ideal_sum(principal(R, 1, RIGHT), principal(R, 1, LEFT))
    with pytest.raises(RingMismatchError):
        ideal_sum(principal(zn(4), 2), principal(zn(4), 2))


@pytest.mark.parametrize("n", range(1, 25))
def test_zn_lattice_counts_divisors(n):
    divisors = sum(n % d == 0 for d in range(1, n + 1))
    assert len(all_ideals(zn(n))) == divisors


def test_trivial_ring_lattice():
    L = all_ideals(zn(1))
    assert [members(I) for I in L] == [{0}]


def test_product_lattice():
    assert len(all_ideals(direct_product([zn(2), zn(2)]))) == 4


@pytest.mark.parametrize("side", [TWO_SIDED, RIGHT, LEFT])
@pytest.mark.parametrize("case", ["Z2xZ2", "T2(Z2)", "Z8", "Z2xZ3"])
def test_lattice_matches_subset_bruteforce(case, side):
    R, M = {
        "Z2xZ2": (direct_product([zn(2), zn(2)]), O.product_model(O.zn_model(2), O.zn_model(2))),
        "T2(Z2)": (upper_triangular(zn(2), 2), O.matrix_model(2, 2, upper=True)),
        "Z8": (zn(8), O.zn_model(8)),
        "Z2xZ3": (direct_product([zn(2), zn(3)]), O.product_model(O.zn_model(2), O.zn_model(3))),
    }[case]
    got = {frozenset(I.members) for I in all_ideals(R, side)}
    want = {frozenset(transport(R, M, S)) for S in O.all_ideals_bruteforce(M, side)}
    assert got == want


def test_matrix_ring_lattices():
    R, M = matrix_ring(zn(2), 2), O.matrix_model(2, 2)
    assert [members(I) for I in maximal_ideals(R)] == [{R.zero}]
    right = maximal_right_ideals(R)
    assert len(right) == 3
    assert not any(is_ideal(R, I.members, TWO_SIDED) for I in right)
    for I in right:
        assert is_ideal(R, I.members, RIGHT)
    # each maximal right ideal agrees with the oracle's ideal test
    inv = {R.parse(x): x for x in M.elements}
    for I in right:
        assert O.is_ideal(M, {inv[i] for i in I.members}, "right")
    assert len(maximal_left_ideals(R)) == 3


def test_upper_triangular_right_ideals():
    R = upper_triangular(zn(4), 2)
    right = maximal_right_ideals(R)
    assert len(right) == 2
    assert all(len(I) == 32 and is_ideal(R, I.members, TWO_SIDED) for I in right)
    assert len(all_ideals(R, RIGHT)) == 26
    assert len(all_ideals(R, TWO_SIDED)) == 14


def test_lattice_cap():
    with pytest.raises(LatticeCapError):
        all_ideals(upper_triangular(zn(4), 2), RIGHT, cap=5)


def test_ordering_is_by_size_then_members():
    L = all_ideals(zn(12))
    keys = [(len(I), I.members) for I in L]
    assert keys == sorted(keys)


def test_maximal_examples():
    R = zn(6)
    assert member_lists(maximal_ideals(R)) == member_lists([principal(R, 2), principal(R, 3)])
    for p in (2, 3, 5, 7):
        assert [members(M) for M in maximal_ideals(zn(p))] == [{0}]
    for n in (6, 12, 18):
        R = zn(n)
        assert [I.mask for I in maximal_right_ideals(R)] == [I.mask for I in maximal_ideals(R)]


def test_trivial_ring_has_no_maximal_ideals():
    with pytest.warns(UserWarning):
        assert maximal_ideals(zn(1)) == []


def test_jacobson_examples():
    for p in (2, 3, 5, 7):
        assert members(jacobson_radical(zn(p))) == {0}
    assert members(jacobson_radical(zn(12))) == {0, 6}
    assert len(jacobson_radical(upper_triangular(zn(4), 2))) == 16


@pytest.mark.parametrize("case", ["zn", "T2(Z4)", "M2(Z2)", "Z4xZ3"])
def test_jacobson_matches_oracle(case):
    if case == "zn":
        for n in range(1, 25):
            R, M = zn(n), O.zn_model(n)
            assert members(jacobson_radical(R)) == transport(R, M, O.jacobson(M))
        return
    R, M = {
        "T2(Z4)": (upper_triangular(zn(4), 2), O.matrix_model(4, 2, upper=True)),
        "M2(Z2)": (matrix_ring(zn(2), 2), O.matrix_model(2, 2)),
        "Z4xZ3": (direct_product([zn(4), zn(3)]), O.product_model(O.zn_model(4), O.zn_model(3))),
    }[case]
    assert members(jacobson_radical(R)) == transport(R, M, O.jacobson(M))


def test_prime_examples():
    R = matrix_ring(zn(2), 2)
    assert is_prime(R, zero_ideal(R))
    Z12 = zn(12)
    assert is_prime(Z12, principal(Z12, 2))
    assert not is_prime(Z12, principal(Z12, 4))
    for p in (2, 3, 5, 7):
        F = zn(p)
        assert is_prime(F, zero_ideal(F))


def test_prime_rejects_whole_ring():
    with pytest.raises(ValueError):
        R = zn(6)
        is_prime(R, whole(R))


def test_prime_matches_oracle_on_z24():
    R, M = zn(24), O.zn_model(24)
    for I in all_ideals(R):
        if I.is_proper:
            assert is_prime(R, I) == O.is_prime(M, set(I.members))


def test_j_spec_points():
    Z12 = zn(12)
    assert member_lists(j_spec_points(Z12)) == member_lists([principal(Z12, 2), principal(Z12, 3)])
    assert [members(P) for P in j_spec_points(zn(7))] == [{0}]


def test_make_ideal_validates():
    R = zn(6)
    assert make_ideal(R, [0, 3]).members == (0, 3)
    with pytest.raises(ValueError):
        make_ideal(R, [0, 1])


def test_closure_is_minimal_on_small_rings():
    rings = [zn(12), direct_product([zn(2), zn(2)]), upper_triangular(zn(2), 2),
             matrix_ring(zn(2), 2)]
    for R in rings:
        for side in (TWO_SIDED, RIGHT, LEFT):
            lattice = all_ideals(R, side)
            for a in range(R.order):
                P = principal(R, a, side)
                for I in lattice:
                    if a in I:
                        assert P <= I


def test_sum_is_join():
    for R in (zn(24), upper_triangular(zn(3), 2)):
        L = list(all_ideals(R))
        for I in L:
            for J in L:
                S = ideal_sum(I, J)
                above = [K for K in L if I <= K and J <= K]
                assert S in above and all(S <= K for K in above)


# -- corpus-wide ----------------------------------------------------------------


def test_radical_cross_validation(corpus):
    for _, R in corpus:
        J = jacobson_radical(R)
        mx = maximal_ideals(R)
        assert J == intersection(R, mx), R.name
        assert J.mask == intersection(R, maximal_right_ideals(R), RIGHT).mask, R.name
        assert J.mask == intersection(R, maximal_left_ideals(R), LEFT).mask, R.name
        assert all(J <= M for M in mx), R.name


def test_primes_are_maximal_on_corpus(corpus):
    for _, R in corpus:
        mx = maximal_ideals(R)
        assert prime_ideals(R) == mx, R.name
        assert j_spec_points(R) == mx, R.name


def test_closure_of_generators_in_quotient_spec():
    R = zn(12)
    assert members(closure(R, [4, 6])) == members(principal(R, 2))
