from hypothesis import given, strategies as st

import oracles
from instances import N345, NON_NORMAL, PLANE, Q2, S39, SQUARE, THICK
from monomial_conductor.conductor import (conductor_element, conductor_generators, in_conductor,
                                          numerical_conductor)
from monomial_conductor.config import Limits
from monomial_conductor.normalization import normalize
from monomial_conductor.semigroup import (AffineSemigroup, NumericalSemigroup, as_affine, contains,
                                          minimal_generators)


def test_in_conductor_examples():
    sat = normalize(S39)
    assert in_conductor(S39, sat, (0, 1))
    assert not in_conductor(S39, sat, (1, 0))
    assert not in_conductor(Q2, normalize(Q2), (2, 0))


def test_conductor_element_examples():
    assert conductor_element(N345.to_affine()) == (3,)
    assert conductor_element(S39) == (0, 1)
    assert conductor_element(PLANE) == (0, 0)


def test_conductor_generators_examples():
    C = conductor_generators(S39)
    assert set(C.r_generators) == {(0, 1), (2, 0), (3, 0), (1, 1)} and C.equals_maximal
    C = conductor_generators(N345)
    assert C.r_generators == ((3,), (4,), (5,)) and C.equals_maximal
    C = conductor_generators(Q2)
    assert set(C.r_generators) == {(1, 1), (2, 1), (1, 2)} and not C.equals_maximal
    assert C.rbar_generators == ((1, 1),)


def test_normal_gives_unit_ideal():
    C = conductor_generators(PLANE)
    assert C.is_unit and C.r_generators == ((0, 0),) and not C.equals_maximal and C.certified


def test_numerical_conductor_examples():
    assert numerical_conductor(N345) == (3, [3, 4, 5])
    assert numerical_conductor(NumericalSemigroup([2, 3])) == (2, [2, 3])
    assert numerical_conductor(NumericalSemigroup([1])) == (0, [0])


def test_routes_agree_on_corpus():
    for name, S in NON_NORMAL.items():
        if name == "xn5":
            continue
        a = conductor_generators(S, method="cosets")
        b = conductor_generators(S, limits=Limits(conductor_degree_cap=16), method="search")
        assert set(a.r_generators) == set(b.r_generators), name
        assert a.certified


def test_search_certifies_non_simplicial():
    C = conductor_generators(THICK)
    assert C.method == "search" and C.certified
    # the ray generators (0,0,2), (2,0,2), (0,2,2), (2,2,2) lie in THICK, so
    # Caratheodory over three of them bounds module generators below 4+4+6
    assert sorted(C.r_generators) == oracles.conductor_generators(THICK.generators, 10, module_bound=14)


def test_search_reports_uncertified():
    C = conductor_generators(SQUARE)
    assert C.method == "search" and not C.certified
    # what was found is still correct as far as it goes
    assert sorted(g for g in C.r_generators if sum(g) <= 6) == oracles.conductor_generators(SQUARE.generators, 6)


def test_conductor_matches_oracle_on_corpus():
    for name, S in NON_NORMAL.items():
        A = as_affine(S)
        if A.dim > 4:
            continue
        C = conductor_generators(A)
        B = min(2 * sum(C.witness_element) + 6, 10)
        got = sorted(g for g in C.r_generators if sum(g) <= B)
        assert got == oracles.conductor_generators(A.generators, B), name


def test_principal_non_containment_on_corpus():
    for name, S in NON_NORMAL.items():
        A = as_affine(S)
        C = conductor_generators(A)
        from monomial_conductor.semigroup import elements_up_to, divides
        for v in elements_up_to(A, 6):
            if any(v):
                assert not all(divides(A, v, r) for r in C.r_generators), (name, v)


small = st.lists(st.integers(0, 5), min_size=2, max_size=2).map(tuple)
semigroups = st.lists(small.filter(any), min_size=2, max_size=4, unique=True).map(AffineSemigroup)


@given(semigroups)
def test_conductor_invariants(S):
    sat = normalize(S)
    C = conductor_generators(S, sat)
    assert C.certified
    mins = minimal_generators(S)
    for v in C.r_generators:
        assert all(contains(S, tuple(a + b for a, b in zip(v, g))) for g in sat.module_generators)
        for w in mins:
            assert in_conductor(S, sat, tuple(a + b for a, b in zip(v, w)))
        for h in sat.hilbert_basis:
            assert in_conductor(S, sat, tuple(a + b for a, b in zip(v, h)))
        for u in C.r_generators:
            if u != v:
                d = tuple(a - b for a, b in zip(v, u))
                assert not (all(x >= 0 for x in d) and contains(S, d))
    zero = (0,) * S.dim
    assert C.is_unit == in_conductor(S, sat, zero) == (sat.module_generators == (zero,))
    assert in_conductor(S, sat, C.witness_element)
