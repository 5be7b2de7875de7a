from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
import feckly
from feckly.cleanness import is_feckly_clean_ring
from feckly.ideals import all_ideals, ideal_product, ideal_sum, principal
from feckly.ring import zn
from feckly.spectra import (
    ABSTRACT,
    SpaceError,
    abstract_space,
    clopen_sets,
    e_ideal,
    e_set,
    is_discrete,
    is_hausdorff,
    is_normal,
    is_strongly_zero_dimensional,
    j_spectrum,
    load_space,
    max_spectrum,
    v_ideal,
    v_set,
)

THREE_POINT = Path(feckly.__file__).with_name("data") / "abstract_three_point.json"


def three_point():
    return load_space(json.loads(THREE_POINT.read_text()))


def discrete(n):
    pts = [f"p{i}" for i in range(n)]
    closed = [list(c) for k in range(n + 1) for c in combinations(pts, k)]
    return abstract_space(pts, closed)


def test_zn6_max_spectrum():
    S = max_spectrum(zn(6))
    assert len(S.points) == 2 and len(S.closed_family) == 4 and is_discrete(S)


def test_field_spectrum_one_point():
    assert len(max_spectrum(zn(7)).points) == 1


def test_v_of_six_in_z12():
    S = max_spectrum(zn(12))
    assert v_set(S, 6) == S.everything
    assert e_set(S, 6) == frozenset()


def test_j_spectrum_examples():
    for q in (2, 4, 8, 9, 16):
        assert len(j_spectrum(zn(q)).points) == 1
    assert len(j_spectrum(zn(6)).points) == 2


def test_trivial_ring_rejected():
    with pytest.raises(SpaceError):
        max_spectrum(zn(1))
    with pytest.raises(SpaceError):
        j_spectrum(zn(1))


def test_v_sets_reject_abstract_spaces():
    with pytest.raises(SpaceError):
        v_set(three_point(), 0)


def test_clopen_examples():
    assert len(clopen_sets(discrete(2))) == 4
    assert len(clopen_sets(discrete(1))) == 2
    T = three_point()
    assert clopen_sets(T) == {frozenset(), T.everything}


def test_three_point_space_fails_everything():
    T = three_point()
    assert T.provenance == ABSTRACT
    assert not is_strongly_zero_dimensional(T)
    assert not is_hausdorff(T)
    assert not is_normal(T)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_discrete_spaces_pass_everything(n):
    D = discrete(n)
    assert is_strongly_zero_dimensional(D) and is_hausdorff(D) and is_normal(D)


def test_j_spectrum_z12_strongly_zero_dimensional():
    assert is_strongly_zero_dimensional(j_spectrum(zn(12)))


def test_space_invariants_enforced():
    with pytest.raises(SpaceError):
        abstract_space(["x", "y"], [[], ["x"], ["y"]])  # whole space missing
    with pytest.raises(SpaceError):
        abstract_space(["x", "y", "z"], [[], ["x"], ["y"], ["x", "y", "z"]])  # no union
    with pytest.raises(SpaceError):
        abstract_space(["x"], [[], ["x"], ["w"]])


def test_space_json_round_trip():
    T = three_point()
    assert load_space(T.to_json()).closed_family == T.closed_family


# -- corpus-wide ----------------------------------------------------------------


def test_corpus_spectra_discrete_and_separated(corpus):
    for _, R in corpus:
        for S in (max_spectrum(R), j_spectrum(R)):
            assert is_discrete(S), R.name
            assert is_hausdorff(S) and is_normal(S) and is_strongly_zero_dimensional(S), R.name
        assert max_spectrum(R).points == j_spectrum(R).points


def test_closed_sets_are_v_of_ideals(corpus):
    for _, R in corpus:
        S = max_spectrum(R)
        assert S.closed_family == {v_ideal(S, I) for I in all_ideals(R)}, R.name


def test_e_set_algebra(corpus):
    for _, R in corpus:
        if R.order > 24:
            continue
        S = max_spectrum(R)
        L = list(all_ideals(R))
        for I in L:
            for J in L:
                assert e_ideal(S, ideal_product(I, J)) == e_ideal(S, I) & e_ideal(S, J)
                assert e_ideal(S, ideal_sum(I, J)) == e_ideal(S, I) | e_ideal(S, J)
                assert v_ideal(S, ideal_product(I, J)) == v_ideal(S, I) | v_ideal(S, J)
                assert v_ideal(S, ideal_sum(I, J)) == v_ideal(S, I) & v_ideal(S, J)


def test_v_of_element_is_v_of_principal(corpus):
    for _, R in corpus:
        S = max_spectrum(R)
        for a in range(R.order):
            assert v_set(S, a) == v_ideal(S, principal(R, a))


def test_j_spectrum_szd_matches_feckly(corpus):
    for _, R in corpus:
        assert is_strongly_zero_dimensional(j_spectrum(R)) == is_feckly_clean_ring(R)


# -- random finite topologies -------------------------------------------------------


@st.composite
def finite_spaces(draw):
    n = draw(st.integers(1, 5))
    full = frozenset(range(n))
    seeds = draw(st.lists(st.frozensets(st.integers(0, n - 1)), max_size=6))
    family = {frozenset(), full, *seeds}
    changed = True
    while changed:
        changed = False
        for A in list(family):
            for B in list(family):
                for C in (A | B, A & B):
                    if C not in family:
                        family.add(C)
                        changed = True
    pts = [f"x{i}" for i in range(n)]
    return pts, family


@settings(max_examples=150, deadline=None)
@given(finite_spaces())
def test_separation_matches_oracle(space):
    pts, family = space
    S = abstract_space(pts, [[pts[i] for i in A] for A in family])
    want = O.separation_flags(list(range(len(pts))), set(family))
    assert is_strongly_zero_dimensional(S) == want["strongly_zero_dimensional"]
    assert is_normal(S) == want["normal"]
    assert is_hausdorff(S) == want["hausdorff"]
    if want["strongly_zero_dimensional"]:
        assert is_normal(S)
