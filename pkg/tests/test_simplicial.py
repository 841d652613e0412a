from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import S1_EDGES, s1_cochain, s1_values
from dct import corpus
from dct.simplicial import (
    Chain,
    Cochain,
    DivisibleCohomology,
    Lattice,
    SimplicialComplex,
    betti,
    bockstein,
    boundary,
    coboundary,
    cohomology,
    format_rational,
    hom_to_lattice,
    homology,
    integral_class,
    integral_period_comparison,
    pair,
    parse_rational,
    periods_in_lattice,
    solve_lattice_coboundary,
    split_lattice_exact,
)
from dct.exactalg import NoSolution

# known groups of the bundled triangulations, listed by degree
HOMOLOGY = {
    "pt": ["Z"],
    "S1_3": ["Z", "Z"],
    "dDelta3": ["Z", "0", "Z"],
    "RP2_6": ["Z", "Z/2", "0"],
    "T2_7": ["Z", "Z^2", "Z"],
    "S1_3+S1_3": ["Z^2", "Z^2"],
}
COHOMOLOGY = {
    "pt": ["Z"],
    "S1_3": ["Z", "Z"],
    "dDelta3": ["Z", "0", "Z"],
    "RP2_6": ["Z", "0", "Z/2"],
    "T2_7": ["Z", "Z^2", "Z"],
    "S1_3+S1_3": ["Z^2", "Z^2"],
}


@pytest.mark.parametrize("text, value", [("1/3", Fraction(1, 3)), ("-2", Fraction(-2)), (3, Fraction(3)),
                                         (" 4/6 ", Fraction(2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["0.5", "1/0", "abc", 1.5])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(st.fractions())
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_lattice_reduce_and_contains():
    L = Lattice(Fraction(1, 3))
    assert L.contains(Fraction(2, 3)) and not L.contains(Fraction(1, 2))
    assert L.reduce(Fraction(5, 6)) == Fraction(1, 6)
    assert Lattice(0).reduce(Fraction(5, 6)) == Fraction(5, 6)
    assert Lattice(2).is_sublattice_of(Lattice(1))
    assert not Lattice(1).is_sublattice_of(Lattice(2))


def test_complex_rejects_repeated_vertex():
    with pytest.raises(ValueError):
        SimplicialComplex([[0, 0, 1]])


def test_faces_are_completed(circle):
    assert circle.simplices(0) == ((0,), (1,), (2,))
    assert set(circle.simplices(1)) == set(S1_EDGES)


def test_boundary_of_edge(circle):
    assert boundary(Chain.from_dict(circle, 1, {(0, 1): 1})).as_dict() == {(1,): 1, (0,): -1}


def test_fundamental_cycle_is_closed(circle):
    z = Chain.from_dict(circle, 1, {(0, 1): 1, (1, 2): 1, (0, 2): -1})
    assert boundary(z).is_zero()


def test_boundary_squared_on_triangle():
    K = SimplicialComplex([[0, 1, 2]])
    assert boundary(boundary(Chain.from_dict(K, 2, {(0, 1, 2): 1}))).is_zero()


def test_coboundary_of_vertex_indicator(circle):
    e0 = Cochain.indicator(circle, (0,))
    assert s1_values(coboundary(e0)) == (-1, 0, -1)
    assert coboundary(coboundary(e0)).is_zero()
    assert coboundary(Cochain.zero(circle, 0)).is_zero()


@pytest.mark.parametrize("name", sorted(corpus.COMPLEXES))
def test_homology_of_corpus(name):
    K = corpus.get_complex(name)
    assert [str(homology(K, k)) for k in range(K.dim + 1)] == HOMOLOGY[name]
    assert [str(cohomology(K, k, "L", Lattice(1))) for k in range(K.dim + 1)] == COHOMOLOGY[name]


@pytest.mark.parametrize("name", sorted(corpus.COMPLEXES))
def test_euler_characteristic(name):
    K = corpus.get_complex(name)
    chi = sum((-1) ** k * K.count(k) for k in range(K.dim + 1))
    assert chi == sum((-1) ** k * betti(K, k) for k in range(K.dim + 1))


@pytest.mark.parametrize("name", sorted(corpus.COMPLEXES))
def test_boundary_squared_matrices(name):
    K = corpus.get_complex(name)
    for k in range(2, K.dim + 1):
        assert not (K.boundary_matrix(k - 1) @ K.boundary_matrix(k)).entries


def test_sphere_generator_has_coordinate_one(sphere):
    c = Cochain.indicator(sphere, (0, 1, 2), coefficients="L")
    assert integral_class(c) == (1,)
    # every 2-simplex indicator is a generator up to sign
    assert {abs(integral_class(Cochain.indicator(sphere, s, coefficients="L"))[0])
            for s in sphere.simplices(2)} == {1}


def test_rp2_order_two_class(rp2):
    H2 = cohomology(rp2, 2, "L", Lattice(1))
    assert H2.torsion == (2,)
    c = Cochain.indicator(rp2, rp2.simplices(2)[0], coefficients="L")
    assert integral_class(c) == (1,)
    assert integral_class(2 * c) == (0,)


@pytest.mark.parametrize("name, k", [("S1_3", 0), ("S1_3", 1), ("T2_7", 1)])
def test_bockstein_vanishes_on_liftable_classes(name, k):
    K = corpus.get_complex(name)
    G = DivisibleCohomology(K, k, "V/L", Lattice(1))
    u = G.representative((), [Fraction(1, 3)] * G.free_rank)
    assert not any(bockstein(u))


def test_bockstein_zero_class(rp2):
    assert bockstein(Cochain.zero(rp2, 1, "V/L")) == (0,)


def test_bockstein_rp2_generator(rp2):
    G = DivisibleCohomology(rp2, 1, "V/L", Lattice(1))
    assert G.torsion == (2,) and G.free_rank == 0
    u = G.representative((1,), ())
    assert bockstein(u) == (1,)
    # independent lift: doubling u gives an integral cochain, so δu is twice a half-integral cochain
    assert all((2 * v).denominator == 1 for v in u.values)


def test_divisible_cohomology_groups(circle, rp2):
    assert DivisibleCohomology(circle, 0, "V/L", Lattice(1)).free_rank == 1
    assert DivisibleCohomology(circle, 1, "V", Lattice(1)).free_rank == 1
    assert DivisibleCohomology(rp2, 2, "V/L", Lattice(1)).free_rank == 0


def test_periods_in_lattice(circle):
    assert periods_in_lattice(Cochain.zero(circle, 1), Lattice(1))
    assert hom_to_lattice(circle, 1, Lattice(1)).free_rank == 1
    assert not periods_in_lattice(s1_cochain(circle, ["1/3", 0, 0]), Lattice(1))
    assert periods_in_lattice(s1_cochain(circle, ["1/3", 0, 0]), Lattice(Fraction(1, 3)))


def test_rp2_top_degree_hom_vanishes(rp2):
    assert str(hom_to_lattice(rp2, 2, Lattice(1))) == "0"
    H2 = cohomology(rp2, 2, "L", Lattice(1))
    hb = rp2.homology_basis(2)
    assert hb.periods(Cochain(rp2, 2, H2.generators[0])) == ()


@pytest.mark.parametrize("name", sorted(corpus.COMPLEXES))
def test_integral_period_comparison(name):
    K = corpus.get_complex(name)
    for k in range(K.dim + 1):
        r = integral_period_comparison(K, k)
        assert r["bijection"] and r["integral_image_is_everything"] and r["torsion_dies"]
        assert r["rank_rational"] == r["rank_hom"] == betti(K, k)
        assert r["integral_map_injective"] == (not cohomology(K, k, "L", Lattice(1)).torsion)


def test_solve_lattice_coboundary(circle):
    e = Cochain.indicator(circle, (0, 1), coefficients="L")
    with pytest.raises(NoSolution):
        solve_lattice_coboundary(e, Lattice(1))
    exact = coboundary(Cochain.indicator(circle, (1,), 2)).retag("L")
    b = solve_lattice_coboundary(exact, Lattice(1))
    assert coboundary(b) == exact


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3), st.lists(st.fractions(max_denominator=4), min_size=3,
                                                                       max_size=3))
def test_split_lattice_exact_round_trip(bvals, vvals):
    K = corpus.circle3()
    b0 = Cochain(K, 1, tuple(Fraction(v) for v in bvals))
    v0 = Cochain(K, 0, tuple(vvals))
    g = b0 + coboundary(v0)
    b, v = split_lattice_exact(g, Lattice(1))
    assert all(x.denominator == 1 for x in b.values)
    assert b.retag("V") + coboundary(v) == g


def test_pair_with_cycle(circle):
    z = Chain.from_dict(circle, 1, {(0, 1): 1, (1, 2): 1, (0, 2): -1})
    assert pair(s1_cochain(circle, ["1/3", 0, 0]), z) == Fraction(1, 3)
