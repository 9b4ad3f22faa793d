import pytest
from hypothesis import given, strategies as st

import oracles
from monomial_conductor.errors import BoundExceeded, DimensionMismatch, NotPointed
from monomial_conductor.lattice import (cone_contains, cone_from_generators, hermite_normal_form,
                                        in_zonotope, lattice_contains, rank, zonotope_lattice_points)


def test_hnf_examples():
    L = hermite_normal_form([(2, 0), (3, 0), (1, 1), (0, 1)])
    assert L.rank == 2 and L.basis == ((1, 0), (0, 1))
    assert hermite_normal_form([(1, 0)]).basis == ((1, 0),)
    assert hermite_normal_form([(2, 0), (0, 2)]).basis == ((2, 0), (0, 2))


def test_hnf_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        hermite_normal_form([(1, 0), (1, 0, 0)])


def test_lattice_contains_examples():
    assert lattice_contains(hermite_normal_form([(1, 0), (0, 1)]), (1, 0))
    assert not lattice_contains(hermite_normal_form([(2, 0), (0, 2)]), (1, 1))
    assert lattice_contains(hermite_normal_form([(1, 1)]), (2, 2))
    with pytest.raises(DimensionMismatch):
        lattice_contains(hermite_normal_form([(1, 1)]), (2, 2, 2))


def test_cone_examples():
    assert cone_from_generators([(1, 0), (0, 1)]).facets == ((0, 1), (1, 0))
    assert cone_from_generators([(2, 0), (3, 0), (1, 1), (0, 1)]).facets == ((0, 1), (1, 0))
    quads = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 0, 1), (0, 1, 1)]
    C = cone_from_generators(quads)
    assert set(C.facets) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    orth = cone_from_generators([(1, 0), (0, 1)])
    assert cone_contains(orth, (5, 3)) and not cone_contains(orth, (-1, 2))
    assert cone_contains(cone_from_generators([(1, 0), (1, 2)]), (1, 1))


def test_cone_rays_and_lower_dimension():
    C = cone_from_generators([(2, 0, 0), (1, 1, 0), (0, 3, 0)])
    assert C.rays == ((0, 1, 0), (1, 0, 0))
    assert C.equations == ((0, 0, 1),)
    assert cone_contains(C, (1, 1, 0)) and not cone_contains(C, (1, 1, 1))


def test_non_pointed_rejected():
    with pytest.raises(NotPointed):
        cone_from_generators([(1, 0), (-1, 0)])


def test_zonotope_examples():
    assert zonotope_lattice_points([(1, 0), (0, 1)]) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert (1, 1) in zonotope_lattice_points([(2, 1), (1, 2)])
    assert zonotope_lattice_points([(1, 0)]) == [(0, 0), (1, 0)]
    with pytest.raises(BoundExceeded) as exc:
        zonotope_lattice_points([(50, 0), (0, 50)], box_cap=100)
    assert exc.value.guard == "box_cap"


def test_zonotope_dependent_rays():
    rays = [(1, 0, 1), (0, 1, 1), (1, 1, 1), (0, 0, 1)]
    assert sorted(zonotope_lattice_points(rays)) == oracles.zonotope_points(rays)


small_vec = st.lists(st.integers(0, 4), min_size=2, max_size=2).map(tuple)
gen_lists = st.lists(small_vec.filter(any), min_size=1, max_size=4, unique=True)


@given(gen_lists)
def test_generators_lie_in_cone(gens):
    C = cone_from_generators(gens)
    assert all(cone_contains(C, g) for g in gens)


@given(gen_lists, st.randoms(use_true_random=False))
def test_hnf_is_canonical(gens, rnd):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert hermite_normal_form(gens, 2) == hermite_normal_form(shuffled, 2)


@given(gen_lists)
def test_facets_vanish_on_enough_rays(gens):
    C = cone_from_generators(gens)
    for f in C.facets:
        tight = [r for r in C.rays if sum(a * b for a, b in zip(f, r)) == 0]
        assert rank(tight, 2) >= C.rank - 1


@given(st.lists(st.lists(st.integers(0, 3), min_size=2, max_size=2).map(tuple).filter(any),
                min_size=1, max_size=3, unique=True))
def test_zonotope_matches_oracle(gens):
    C = cone_from_generators(gens)
    rays = list(C.rays)
    assert sorted(zonotope_lattice_points(rays)) == oracles.zonotope_points(rays)


def test_zonotope_matches_oracle_3d():
    for rays in ([(1, 0, 0), (0, 1, 0), (1, 1, 2)], [(2, 1, 0), (0, 1, 2), (1, 0, 1)],
                 [(1, 0, 1), (0, 1, 1), (1, 1, 1), (0, 0, 1)]):
        assert sorted(zonotope_lattice_points(rays)) == oracles.zonotope_points(rays)
        for v in oracles.zonotope_points(rays):
            assert in_zonotope(rays, v)
