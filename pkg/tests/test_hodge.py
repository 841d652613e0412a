import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import s1_cochain, s1_values
from dct import corpus, sampling
from dct.diffcochain import DiffCochain
from dct.exactalg import RationalSolver
from dct.hodge import (
    codifferential,
    decompose,
    harmonic_representative,
    hodge_right_inverse,
    inner,
    is_harmonic,
    is_harmonic_trivialization,
    laplacian,
)
from dct.simplicial import Cochain, Lattice, betti, coboundary
from dct.trivialization import DeRhamTrivialization, Trivialization, project, trivialize

NAMES = ("pt", "S1_3", "dDelta3", "RP2_6", "T2_7", "S1_3+S1_3")


def flat_third(K):
    return DiffCochain(2, 2, Cochain.zero(K, 2, "L"), s1_cochain(K, ["1/3", 0, 0]), None, Lattice(1))


def test_laplacian_on_point():
    K = corpus.point()
    assert not laplacian(K, 0).entries


@pytest.mark.parametrize("name", NAMES)
def test_harmonic_dimension_is_betti(name):
    # the rational kernel of Δ is computed by elimination, betti by Smith form
    K = corpus.get_complex(name)
    for k in range(K.dim + 1):
        assert len(RationalSolver(laplacian(K, k)).kernel()) == betti(K, k)


def test_circle_harmonic_forms(circle):
    ker = RationalSolver(laplacian(circle, 1)).kernel()
    v = s1_values(Cochain(circle, 1, tuple(ker[0])))
    assert tuple(x / v[0] for x in v) == (1, 1, -1)


@pytest.mark.parametrize("values, harmonic", [
    ([1, 0, 0], ("1/3", "1/3", "-1/3")),
    ([1, 1, -1], ("1", "1", "-1")),
    ([0, 0, 0], ("0", "0", "0")),
])
def test_circle_decomposition(circle, values, harmonic):
    d = decompose(s1_cochain(circle, values))
    assert s1_values(d.harmonic) == tuple(Fraction(h) for h in harmonic)
    assert d.coexact.is_zero()


def test_decompose_harmonic_and_exact_inputs(torus):
    rng = random.Random(5)
    f = sampling.cochain(rng, torus, 0)
    d = decompose(coboundary(f))
    assert d.harmonic.is_zero() and d.coexact.is_zero() and d.exact == coboundary(f)
    h = decompose(sampling.cochain(rng, torus, 1)).harmonic
    d2 = decompose(h)
    assert d2.harmonic == h and d2.exact.is_zero() and d2.coexact.is_zero()


@pytest.mark.parametrize("name", NAMES)
@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_decompose_invariants(name, seed):
    K = corpus.get_complex(name)
    rng = random.Random(seed)
    k = rng.randint(0, K.dim)
    c = sampling.cochain(rng, K, k)
    d = decompose(c)
    assert d.total() == c
    assert is_harmonic(d.harmonic)
    assert inner(d.harmonic, d.exact) == inner(d.harmonic, d.coexact) == inner(d.exact, d.coexact) == 0
    # exact part lies in im δ, coexact part in im δ*
    if k > 0:
        RationalSolver(K.coboundary_matrix(k - 1)).solve(list(d.exact.values))
    else:
        assert d.exact.is_zero()
    assert coboundary(d.exact).is_zero() and codifferential(d.coexact).is_zero()


def test_harmonic_representative_requires_closed(circle):
    with pytest.raises(ValueError):
        harmonic_representative(Cochain.indicator(circle, (0,)))


def test_right_inverse_closed_form(circle):
    x = flat_third(circle)
    lift = project(trivialize(x))[2]
    eta = hodge_right_inverse(lift).eta
    assert s1_values(eta) == (Fraction(1, 9), Fraction(1, 9), Fraction(-1, 9))
    assert hodge_right_inverse(lift).to_de_rham() == lift


def test_right_inverse_of_zero_lift(circle):
    x = DiffCochain.zero(circle, 2, 2)
    assert hodge_right_inverse(project(trivialize(x))[2]).eta.is_zero()


def test_right_inverse_equivariance(circle):
    x = flat_third(circle)
    lift = project(trivialize(x))[2]
    shifted = DeRhamTrivialization(lift.rep + s1_cochain(circle, [1, 0, 0]), x)
    assert shifted.values() == (Fraction(4, 3),)
    diff = hodge_right_inverse(shifted).eta - hodge_right_inverse(lift).eta
    assert s1_values(diff) == (Fraction(1, 3), Fraction(1, 3), Fraction(-1, 3))


@pytest.mark.parametrize("name", ["S1_3", "T2_7", "RP2_6", "S1_3+S1_3"])
@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_right_inverse_law(name, seed):
    K = corpus.get_complex(name)
    rng = random.Random(seed)
    k = rng.randint(1, K.dim)
    lat = rng.choice((Lattice(1), Lattice(2), Lattice(Fraction(1, 3))))
    x = sampling.cocycle(rng, K, k, lat, trivializable=True)
    s = trivialize(x)
    lift = project(s)[2]
    curv = hodge_right_inverse(lift)
    assert curv.to_de_rham() == lift
    assert codifferential(curv.eta).is_zero()


@pytest.mark.parametrize("eta, expected", [
    (["1/9", "1/9", "-1/9"], True),
    (["1/3", 0, 0], False),
])
def test_harmonic_trivialization(circle, eta, expected):
    x = flat_third(circle)
    s = Trivialization(Cochain.zero(circle, 1, "L"), Cochain(circle, 0, (Fraction(0),) * 3),
                       s1_cochain(circle, ["1/3", 0, 0]), x)
    # h = η − b − δk̂, so reaching η = target needs δk̂ = target − η₀
    target = s1_cochain(circle, eta)
    khat = RationalSolver(circle.coboundary_matrix(0)).solve(list((target - s.eta).values))
    t = Trivialization(s.b, Cochain(circle, 0, tuple(khat)), target, x)
    assert is_harmonic_trivialization(t) is expected


def test_zero_trivialization_is_harmonic(circle):
    assert is_harmonic_trivialization(trivialize(DiffCochain.zero(circle, 2, 2)))
