import random
from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import s1_cochain
from dct import corpus, sampling
from dct.diffcochain import DiffCochain, differential, is_cocycle
from dct.products import (
    ProductComplex,
    cup,
    diff_product,
    fiber_integrate,
    fiber_integrate_trivialization,
    leibniz_residual,
    product_on_trivialization,
    unit,
)
from dct.simplicial import Chain, Cochain, Lattice, SimplicialComplex, boundary, coboundary, homology, pair
from dct.trivialization import Trivialization, trivialize

LATTICES = (Lattice(1), Lattice(2), Lattice(Fraction(1, 3)))


@lru_cache(maxsize=None)
def product(base: str, fiber: str) -> ProductComplex:
    return ProductComplex(corpus.get_complex(base), corpus.get_complex(fiber))


def flat_third(K):
    return DiffCochain(2, 2, Cochain.zero(K, 2, "L"), s1_cochain(K, ["1/3", 0, 0]), None, Lattice(1))


def unit_cocycle(K):
    one = unit(K)
    return DiffCochain(0, 0, one.retag("L"), Cochain.zero(K, -1), one, Lattice(1))


def test_cup_of_one_cochains_on_circle_vanishes(circle):
    a = s1_cochain(circle, [1, 1, 1])
    assert cup(a, a).degree == 2 and cup(a, a).values == ()


def test_cup_with_unit(torus):
    rng = random.Random(1)
    a = sampling.cochain(rng, torus, 1)
    assert cup(unit(torus), a) == a and cup(a, unit(torus)) == a


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**6), p=st.integers(0, 2), q=st.integers(0, 2))
def test_cup_coboundary_rule(seed, p, q):
    K = corpus.torus7()
    rng = random.Random(seed)
    a, b = sampling.cochain(rng, K, p), sampling.cochain(rng, K, q)
    lhs = coboundary(cup(a, b))
    rhs = cup(coboundary(a), b) + (-1) ** p * cup(a, coboundary(b))
    assert lhs == rhs


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_cup_associative(seed):
    K = corpus.torus7()
    rng = random.Random(seed)
    a, b, c = (sampling.cochain(rng, K, 0), sampling.cochain(rng, K, 1), sampling.cochain(rng, K, 1))
    assert cup(cup(a, b), c) == cup(a, cup(b, c))


def test_torus_cup_pairs_to_generator(torus):
    # the two degree-1 generators cup to ±1 times the top class
    from dct.simplicial import cohomology
    g = cohomology(torus, 1, "L", Lattice(1)).generators
    prod = cup(Cochain(torus, 1, g[0]), Cochain(torus, 1, g[1]))
    top = torus.homology_basis(2).periods(prod)
    assert abs(top[0]) == 1


@pytest.mark.parametrize("regime", [(2, 2, 1, 1), (2, 1, 1, 1), (0, 0, 2, 2), (3, 1, 1, 0), (1, 0, 2, 1)])
@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_leibniz(regime, seed):
    K = corpus.torus7()
    rng = random.Random(seed)
    n1, k1, n2, k2 = regime
    x1 = sampling.diffcochain(rng, K, n1, k1, rng.choice(LATTICES))
    x2 = sampling.diffcochain(rng, K, n2, k2, rng.choice(LATTICES))
    assert leibniz_residual(x1, x2).is_zero()


def test_product_of_cocycles_is_cocycle(torus):
    rng = random.Random(2)
    x1, x2 = sampling.cocycle(rng, torus, 1), sampling.cocycle(rng, torus, 1, Lattice(2))
    p = diff_product(x1, x2)
    assert is_cocycle(p) and p.lattice == Lattice(2)
    assert p.form() == cup(x1.form(), x2.form())


def test_product_lattice_must_contain_product(torus):
    x = DiffCochain.zero(torus, 1, 1)
    with pytest.raises(ValueError):
        diff_product(x, x, Lattice(2))


def test_product_with_unit_recovers_trivialization(circle):
    s = trivialize(flat_third(circle))
    t = product_on_trivialization(s, unit_cocycle(circle))
    assert (t.b, t.khat, t.eta, t.x) == (s.b, s.khat, s.eta, s.x)


def test_product_on_trivialization_curvature(torus):
    rng = random.Random(4)
    x1 = sampling.cocycle(rng, torus, 1, trivializable=True)
    s = trivialize(x1)
    x2 = sampling.cocycle(rng, torus, 1)
    t = product_on_trivialization(s, x2)
    assert t.eta == cup(s.eta, x2.form())
    assert t.x == diff_product(x1, x2)


def test_zero_trivialization_product(torus):
    s = trivialize(DiffCochain.zero(torus, 1, 1))
    t = product_on_trivialization(s, sampling.cocycle(random.Random(0), torus, 1))
    assert t.b.is_zero() and t.khat.is_zero() and t.eta.is_zero()


# ---------------------------------------------------------------------------
# Product complexes and fibre integration


@pytest.mark.parametrize("base, fiber, expected", [
    ("pt", "S1_3", ["Z", "Z"]),
    ("S1_3", "pt", ["Z", "Z"]),
    ("S1_3", "S1_3", ["Z", "Z^2", "Z"]),
])
def test_product_homology_matches_kunneth(base, fiber, expected):
    X = product(base, fiber).complex
    assert [str(homology(X, k)) for k in range(X.dim + 1)] == expected


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_cross_product_boundary(data):
    P = product("S1_3", "S1_3")
    B, Fb = P.base, P.fiber
    p, q = data.draw(st.integers(0, 1)), data.draw(st.integers(0, 1))
    sb = data.draw(st.sampled_from(B.simplices(p)))
    sf = data.draw(st.sampled_from(Fb.simplices(q)))
    a, b = Chain.from_dict(B, p, {sb: 1}), Chain.from_dict(Fb, q, {sf: 1})
    lhs = boundary(P.cross(sb, sf))
    rhs = Chain.zero(P.complex, p + q - 1)
    if p:
        rhs = rhs + P.cross_chain(boundary(a), b)
    if q:
        rhs = rhs + (-1) ** p * P.cross_chain(a, boundary(b))
    assert lhs == rhs


def test_fundamental_cycle_requires_closed_fiber():
    disk = SimplicialComplex([[0, 1, 2]])
    with pytest.raises(ValueError):
        ProductComplex(corpus.point(), disk).fundamental_cycle


def test_pushforward_over_point():
    P = product("pt", "S1_3")
    x = P.pullback(flat_third(P.fiber), "fiber")
    assert is_cocycle(x)
    ix = fiber_integrate(P, x)
    assert (ix.n, ix.k) == (1, 1)
    assert ix.h.values == (Fraction(1, 3),)
    assert is_cocycle(ix)


def test_integral_of_zero():
    P = product("S1_3", "S1_3")
    assert fiber_integrate(P, DiffCochain.zero(P.complex, 2, 2)).is_zero()


def test_integration_below_fibre_dimension():
    P = product("pt", "S1_3")
    with pytest.raises(ValueError):
        fiber_integrate(P, DiffCochain.zero(P.complex, 0, 0))


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10**6), p=st.integers(0, 1))
def test_integral_of_cross_product(seed, p):
    P = product("S1_3", "S1_3")
    rng = random.Random(seed)
    a, v = sampling.cochain(rng, P.base, p), sampling.cochain(rng, P.fiber, 1)
    u = cup(P.pullback_base(a), P.pullback_fiber(v))
    F = P.fundamental_cycle
    assert P.integrate_cochain(u) == pair(v, F) * a


@pytest.mark.parametrize("pair_name", [("pt", "S1_3"), ("S1_3", "S1_3")])
@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_stokes(pair_name, seed):
    P = product(*pair_name)
    rng = random.Random(seed)
    X = P.complex
    k = rng.randint(1, X.dim)
    n = rng.randint(0, k + 1)
    x = sampling.diffcochain(rng, X, n, k, rng.choice(LATTICES))
    assert differential(fiber_integrate(P, x)) == fiber_integrate(P, differential(x))


def test_integrate_trivialization():
    P = product("S1_3", "S1_3")
    rng = random.Random(8)
    x = sampling.cocycle(rng, P.complex, 2, trivializable=True)
    s = trivialize(x)
    t = fiber_integrate_trivialization(P, s)
    assert isinstance(t, Trivialization) and t.x == fiber_integrate(P, x)
