import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import s1_cochain, s1_values
from dct import circle as cb
from dct import corpus, sampling
from dct.diffcochain import DiffCochain, is_cocycle
from dct.simplicial import Cochain, Lattice
from dct.trivialization import Obstruction, TopTrivialization, induced_torsor_map, project, trivialize


def degree_one(K, b, eta):
    return DiffCochain(1, 1, s1_cochain(K, b, "L"), Cochain.zero(K, 0), s1_cochain(K, eta), Lattice(1))


def test_named_examples():
    ex = cb.examples()
    assert set(ex) == {"flat-third", "sphere-generator", "zero", "torus-flux", "projective-flat"}
    for x in ex.values():
        assert is_cocycle(x) and (x.n, x.k) == (2, 2)
    ft = ex["flat-third"]
    assert ft.complex.name == "S1_3" and s1_values(ft.h) == (Fraction(1, 3), 0, 0)
    sg = ex["sphere-generator"]
    assert sg.complex.name == "dDelta3" and sg.c.retag("V") == sg.form() and sg.h.is_zero()
    assert ex["zero"].is_zero()


def test_unknown_example():
    with pytest.raises(KeyError):
        cb.example("klein")


def test_flat_third_view():
    view = cb.interpret(cb.example("flat-third"))
    assert view.holonomy == (Fraction(1, 3),)
    assert view.trivializable and view.curvature.is_zero()


def test_sphere_generator_view():
    view = cb.interpret(cb.example("sphere-generator"))
    assert view.class_coordinates == (1,) and not view.trivializable
    assert isinstance(trivialize(cb.example("sphere-generator")), Obstruction)


def test_zero_view():
    view = cb.interpret(cb.example("zero"))
    assert view.trivializable and not any(view.holonomy)


def test_projective_flat_is_torsion():
    view = cb.interpret(cb.example("projective-flat"))
    assert view.class_coordinates == (1,) and view.curvature.is_zero()


def test_interpret_requires_degree_two(circle):
    with pytest.raises(ValueError):
        cb.interpret(DiffCochain.zero(circle, 1, 1))


def test_section_report_flat_third():
    s = trivialize(cb.example("flat-third"))
    rep = cb.section_report(s)
    assert rep.section_class == (0,)
    assert rep.lift == (Fraction(1, 3),)
    assert s1_values(rep.connection) == (Fraction(1, 3), 0, 0)
    assert rep.consistent(s.x)


def test_gauge_example():
    x = cb.example("flat-third")
    s = trivialize(x)
    f = degree_one(x.complex, [1, 0, 0], [1, 0, 0])
    rep = cb.section_report(cb.gauge(f, s))
    assert rep.lift == (Fraction(4, 3),)
    # the shift is the H¹(Z) generator: the edge dual pairs to 1 with the cycle
    assert rep.section_class == (1,)
    assert cb.gauge_law_holds(s, f)


def test_zero_report():
    rep = cb.section_report(trivialize(cb.example("zero")))
    assert rep.section_class == (0,) and rep.lift == (0,) and rep.connection.is_zero()


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_gauge_law_on_orbit(seed):
    x = cb.example("flat-third")
    s = trivialize(x)
    f = sampling.cocycle(random.Random(seed), x.complex, 1)
    assert cb.gauge_law_holds(s, f)
    assert cb.section_report(cb.gauge(f, s)).consistent(x)


def test_phase_difference():
    x = cb.example("flat-third")
    s = trivialize(x)
    K = x.complex
    phase = DiffCochain(1, 1, Cochain.zero(K, 1, "L"), Cochain(K, 0, (Fraction(1, 5),) * 3), None, Lattice(1))
    t = cb.gauge(phase, s)
    assert cb.section_report(t) == cb.section_report(s)
    assert cb.phase_difference(t, s) == (Fraction(1, 5),)
    with pytest.raises(ValueError):
        cb.phase_difference(cb.gauge(degree_one(K, [0, 0, 0], ["1/2", "1/2", 0]), s), s)


@pytest.mark.parametrize("name, injective, factors, torsion", [
    ("S1_3", True, 1, []),
    ("RP2_6", True, 1, []),
    ("S1_3+S1_3", True, 2, []),
    ("T2_7", True, 1, []),
])
def test_torsion_free_check(name, injective, factors, torsion):
    r = cb.torsion_free_check(corpus.get_complex(name))
    assert r["injective"] is injective
    assert r["flat_kernel_factors"] == factors and r["torsion"] == torsion


def test_rp2_first_cohomology_vanishes():
    assert cb.torsion_free_check(corpus.rp2_6())["H1"] == "0"


def test_two_circles_h1_is_rank_two():
    assert cb.torsion_free_check(corpus.two_circles())["H1"] == "Z^2"


@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_bottom_row_agrees_with_lift(seed):
    x = cb.example("flat-third")
    K = x.complex
    rng = random.Random(seed)
    s = cb.gauge(sampling.cocycle(rng, K, 1), trivialize(x))
    samples = [DiffCochain(1, 1, Cochain.zero(K, 1, "L"), Cochain(K, 0, (sampling.rational(rng),) * 3), None,
                           Lattice(1)) for _ in range(3)]
    spec = cb.bottom_row_spec(x, samples)
    top = project(s)[0]
    assert induced_torsor_map(spec, top) == project(s)[2]
    assert induced_torsor_map(spec, TopTrivialization(s.b, x)).values() == cb.section_report(s).lift


def test_bottom_row_is_injective_on_classes():
    x = cb.example("flat-third")
    K = x.complex
    s = trivialize(x)
    spec = cb.bottom_row_spec(x)
    seen = {}
    for m in range(-2, 3):
        t = cb.gauge(degree_one(K, [m, 0, 0], [m, 0, 0]), s)
        lift = induced_torsor_map(spec, project(t)[0]).values()
        assert lift not in seen
        seen[lift] = m


def test_torus_flux_has_no_section():
    x = cb.example("torus-flux")
    ob = trivialize(x)
    assert isinstance(ob, Obstruction) and ob.coordinates == (1,)
    assert cb.interpret(x).class_coordinates == (1,)
