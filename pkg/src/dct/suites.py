"""Randomized verification suites with exact arithmetic.

Each suite runs seeded, independent trials and records every failed check
together with the inputs needed to re-run it.
"""

from __future__ import annotations

import contextlib
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Callable, Iterator

from . import circle, corpus, sampling
from .diffcochain import (
    DiffCochain,
    are_equivalent,
    automorphism_class,
    automorphism_group,
    change_coefficients,
    character_with_curvature,
    characteristic_class,
    characteristic_group,
    class_preimage,
    de_rham_class,
    differential,
    flat_character,
    flat_preimage,
    form_character,
    holonomy,
    is_cocycle,
    lattice_change_preimage,
    lift_to_zero_lattice,
    rational_flat,
    rational_image,
    topological_preimage,
)
from .exactalg import NoSolution, RationalSolver
from .hodge import (
    codifferential,
    decompose,
    hodge_right_inverse,
    inner,
)
from .io import cochain_to_json, diffcochain_to_json, trivialization_to_json
from .products import (
    ProductComplex,
    cup,
    diff_product,
    fiber_integrate,
    fiber_integrate_trivialization,
    leibniz_residual,
    product_on_trivialization,
)
from .simplicial import (
    Chain,
    Cochain,
    DivisibleCohomology,
    Lattice,
    SimplicialComplex,
    bockstein,
    boundary,
    coboundary,
    cohomology,
    integral_class,
    integral_period_comparison,
    pair,
    periods_in_lattice,
    solve_rational_coboundary,
)
from .trivialization import (
    TopTrivialization,
    Trivialization,
    induced_torsor_map,
    isomorphism,
    project,
    torsor_act,
    torsor_difference,
    transport,
    trivialize,
)

LATTICES = (Lattice(1), Lattice(2), Lattice(Fraction(1, 3)))


# ---------------------------------------------------------------------------
# Bookkeeping


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, DiffCochain):
        return diffcochain_to_json(obj)
    if isinstance(obj, Cochain):
        return cochain_to_json(obj)
    if isinstance(obj, Trivialization):
        return trivialization_to_json(obj)
    if isinstance(obj, Lattice):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return repr(obj)


@dataclass
class Trial:
    suite: str
    seed: int
    complex: str
    label: str
    index: int
    rng: random.Random
    inputs: dict = field(default_factory=dict)
    checks: int = 0
    failures: list = field(default_factory=list)

    def note(self, **objs):
        self.inputs.update(objs)

    def check(self, name: str, ok: bool, **extra):
        self.checks += 1
        if not ok:
            self.failures.append(self._payload(name, extra))

    def _payload(self, name: str, extra: dict) -> dict:
        data = {k: _jsonable(v) for k, v in {**self.inputs, **extra}.items()}
        return {
            "suite": self.suite, "check": name, "complex": self.complex, "label": self.label,
            "trial": self.index, "seed": self.seed, "inputs": data,
            "rerun": f"dct verify --suite {self.suite} --seed {self.seed} --trials {self.index + 1}",
        }


@dataclass
class SuiteResult:
    suite: str
    seed: int
    trials: int
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "trials": self.trials, "checks": self.checks,
                "passed": self.passed, "failures": self.failures[:20],
                "failure_count": len(self.failures)}


class Recorder:
    def __init__(self, suite: str, seed: int, trials: int):
        self.result = SuiteResult(suite, seed, trials)

    @contextlib.contextmanager
    def trial(self, cname: str, label: str, index: int) -> Iterator[Trial]:
        rng = sampling.trial_rng(self.result.seed, f"{self.result.suite}:{cname}:{label}", index)
        t = Trial(self.result.suite, self.result.seed, cname, label, index, rng)
        try:
            yield t
        except Exception as e:  # a crash is a failed check with its inputs attached
            t.failures.append(t._payload("exception", {"error": f"{type(e).__name__}: {e}"}))
            t.checks += 1
        self.result.checks += t.checks
        self.result.failures.extend(t.failures)


def _complexes(names) -> list[tuple[str, SimplicialComplex]]:
    return [(n, corpus.get_complex(n)) for n in (names or corpus.STANDARD)]


def _negate(group, coords) -> tuple:
    t = len(group.torsion)
    return tuple((-a) % d for a, d in zip(coords[:t], group.torsion)) + tuple(-a for a in coords[t:])


def _random_morphism(rng, K, k, lattice, n=None) -> DiffCochain:
    """A random element of ``Č(n)^{k-1}`` (default ``n = k``)."""
    n = k if n is None else n
    return sampling.diffcochain(rng, K, n, k - 1, lattice)


# ---------------------------------------------------------------------------
# Suites


def suite_d2(trials: int, seed: int, complexes=None) -> SuiteResult:
    """``d∘d = 0`` in the regimes ``k < n−1``, ``k = n−1`` and ``k ≥ n``."""
    rec = Recorder("d2", seed, trials)
    for cname, K in _complexes(complexes):
        for regime in ("below", "edge", "above"):
            for i in range(trials):
                with rec.trial(cname, regime, i) as t:
                    k = t.rng.randint(0, K.dim + 1)
                    if regime == "below":
                        n = k + 2 + t.rng.randint(0, 1)
                    elif regime == "edge":
                        n = k + 1
                    else:
                        n = t.rng.randint(0, k)
                    x = sampling.diffcochain(t.rng, K, n, k, t.rng.choice(LATTICES))
                    t.note(x=x)
                    t.check("d(dx) = 0", differential(differential(x)).is_zero())
    return rec.result


def suite_square(trials: int, seed: int, complexes=None) -> SuiteResult:
    """de Rham class = image of the characteristic class; character property."""
    rec = Recorder("square", seed, trials)
    for cname, K in _complexes(complexes):
        for i in range(trials):
            with rec.trial(cname, "cocycle", i) as t:
                k = t.rng.randint(0, K.dim)
                lat = t.rng.choice(LATTICES)
                x = sampling.cocycle(t.rng, K, k, lat)
                t.note(x=x)
                t.check("square commutes",
                        de_rham_class(x) == rational_image(K, k, lat, characteristic_class(x)))
                if k >= 1:
                    w = sampling.chain(t.rng, K, k)
                    t.note(w=list(w.coefficients))
                    t.check("character property",
                            holonomy(x, boundary(w)) == lat.reduce(pair(x.form(), w)))
    return rec.result


def suite_exactness(trials: int, seed: int, complexes=None) -> SuiteResult:
    """Constructive exactness of the flat, topological and lattice-change sequences."""
    rec = Recorder("exactness", seed, trials)
    for cname, K in _complexes(complexes):
        for i in range(trials):
            with rec.trial(cname, "flat", i) as t:
                _flat_sequence(t, K)
            with rec.trial(cname, "topological", i) as t:
                _topological_sequence(t, K)
            with rec.trial(cname, "lattice-change", i) as t:
                _lattice_change_sequence(t, K)
    return rec.result


def _flat_sequence(t: Trial, K: SimplicialComplex):
    """``0 → H^{k-1}(V/Λ) → Ȟᵏ → Ω^k_Λ → 0``."""
    rng = t.rng
    k = rng.randint(1, K.dim)
    lat = rng.choice(LATTICES)
    u = sampling.quotient_cocycle(rng, K, k - 1, lat)
    if rng.random() < 0.5:
        # a class that vanishes: Λ-cochain plus a rational coboundary
        u = sampling.cochain(rng, K, k - 1, "L", lat).retag("V")
        if k - 1 >= 1:
            u = u + coboundary(sampling.cochain(rng, K, k - 2))
    t.note(k=k, lattice=lat, u=u)
    xu = flat_character(u, lat)
    t.check("composite: curvature of a flat character is 0", xu.form().is_zero())
    zero = DiffCochain.zero(K, k, k, lat)
    H = DivisibleCohomology(K, k - 1, "V/L", lat)
    t.check("injective on H^{k-1}(V/Λ)", (are_equivalent(xu, zero) is not None) == H.is_zero(u))
    # kernel of the curvature map: flat cocycles moved by a random coboundary
    x = sampling.flat_cocycle(rng, K, k, lat) + differential(_random_morphism(rng, K, k, lat))
    t.note(x=x)
    t.check("kernel element is flat", x.form().is_zero())
    u2, y = flat_preimage(x)
    t.check("flat preimage maps back up to the witnessed morphism",
            differential(y) == x - flat_character(u2, lat))
    omega = sampling.rational_cocycle(rng, K, k, lattice_periods=lat)
    t.note(omega=omega)
    y = character_with_curvature(omega, lat)
    t.check("surjective onto Ω^k_Λ", is_cocycle(y) and y.form() == omega)


def _topological_sequence(t: Trial, K: SimplicialComplex):
    """``0 → Ω^{k-1}/Ω^{k-1}_Λ → Ȟᵏ → Hᵏ(Λ) → 0``."""
    rng = t.rng
    k = rng.randint(1, K.dim)
    lat = rng.choice(LATTICES)
    eta = sampling.cochain(rng, K, k - 1)
    t.note(k=k, lattice=lat, eta=eta)
    t.check("composite: class of a form character is 0",
            not any(characteristic_class(form_character(eta, lat))))
    x = sampling.cocycle(rng, K, k, lat, trivializable=True) + differential(_random_morphism(rng, K, k, lat))
    t.note(x=x)
    eta2, y = topological_preimage(x)
    t.check("form preimage maps back up to the witnessed morphism",
            differential(y) == x - form_character(eta2, lat))
    e = sampling.rational_cocycle(rng, K, k - 1, lattice_periods=lat)
    if rng.random() < 0.5:
        e = e + sampling.cochain(rng, K, k - 1)
    t.note(e=e)
    in_omega_lattice = coboundary(e).is_zero() and periods_in_lattice(e, lat)
    t.check("injective on Ω^{k-1}/Ω^{k-1}_Λ",
            (are_equivalent(form_character(e, lat), DiffCochain.zero(K, k, k, lat)) is not None)
            == in_omega_lattice)
    c = sampling.lattice_cocycle(rng, K, k, lat)
    t.note(c=c)
    xc = class_preimage(c, lat)
    t.check("surjective onto Hᵏ(Λ)", is_cocycle(xc) and characteristic_class(xc) == integral_class(c, lat))


def _lattice_change_sequence(t: Trial, K: SimplicialComplex):
    """``H^{k-1}(V)_Λ → Ȟᵏ(V; 0) → Ȟᵏ(V; Λ) → Hᵏ(Λ)``."""
    rng = t.rng
    k = rng.randint(1, K.dim)
    lat = rng.choice(LATTICES)
    zero_lat = Lattice(0)
    u = sampling.rational_cocycle(rng, K, k - 1, lattice_periods=lat)
    t.note(k=k, lattice=lat, u=u)
    t.check("composite H^{k-1}(V)_Λ → Ȟ(V;Λ) is 0",
            are_equivalent(change_coefficients(rational_flat(u, lat), lat), DiffCochain.zero(K, k, k, lat))
            is not None)
    x0 = sampling.cocycle(rng, K, k, zero_lat)
    t.note(x0=x0)
    t.check("composite Ȟ(V;0) → Hᵏ(Λ) is 0", not any(characteristic_class(change_coefficients(x0, lat))))
    x = sampling.cocycle(rng, K, k, lat, trivializable=True) + differential(_random_morphism(rng, K, k, lat))
    t.note(x=x)
    lift, y = lift_to_zero_lattice(x)
    t.check("kernel of the class map lifts to Ȟ(V;0)",
            is_cocycle(lift) and lift.lattice.is_zero
            and differential(y) == x - change_coefficients(lift, lat))
    xk = rational_flat(u, lat) + differential(_random_morphism(rng, K, k, zero_lat))
    t.note(xk=xk)
    u2 = lattice_change_preimage(xk, lat)
    t.check("kernel of the change of coefficients comes from H^{k-1}(V)_Λ", rational_flat(u2, lat) == xk)


def suite_bockstein(trials: int, seed: int, complexes=None) -> SuiteResult:
    """The flat-then-class composite is ``−β``; form characters have curvature ``δη``."""
    rec = Recorder("bockstein", seed, trials)
    with rec.trial("RP2_6", "order-two", 0) as t:
        K = corpus.rp2_6()
        u = DivisibleCohomology(K, 1, "V/L", Lattice(1)).representative((1,), ())
        t.note(u=u)
        beta = bockstein(u, Lattice(1))
        G = cohomology(K, 2, "L", Lattice(1))
        t.check("β of the order-2 class is the generator of Z/2", beta == (1,) and G.torsion == (2,))
        t.check("class of the flat character equals −β",
                characteristic_class(flat_character(u, Lattice(1))) == _negate(G, beta))
    for cname, K in _complexes(complexes):
        for i in range(trials):
            with rec.trial(cname, "random", i) as t:
                k = t.rng.randint(1, K.dim)
                lat = t.rng.choice(LATTICES)
                u = sampling.quotient_cocycle(t.rng, K, k - 1, lat)
                t.note(k=k, lattice=lat, u=u)
                G = cohomology(K, k, "L", lat)
                beta = bockstein(u, lat)
                t.check("class of the flat character equals −β",
                        characteristic_class(flat_character(u, lat)) == _negate(G, beta))
                u2 = u + sampling.cochain(t.rng, K, k - 1, "L", lat).retag("V")
                if k - 1 >= 1:
                    u2 = u2 + coboundary(sampling.cochain(t.rng, K, k - 2))
                t.check("β independent of the lift", bockstein(u2, lat) == beta)
                eta = sampling.cochain(t.rng, K, k - 1)
                t.note(eta=eta)
                t.check("curvature of a form character is δη", form_character(eta, lat).form() == coboundary(eta))
    return rec.result


def _random_trivialization(rng, K, k, lat) -> Trivialization:
    x = sampling.cocycle(rng, K, k, lat, trivializable=True)
    s = trivialize(x)
    return torsor_act(s, sampling.cocycle(rng, K, k - 1, lat))


def suite_torsor(trials: int, seed: int, complexes=None) -> SuiteResult:
    """Free transitive actions, equivariant projections and transport."""
    rec = Recorder("torsor", seed, trials)
    for cname, K in _complexes(complexes):
        for i in range(trials):
            with rec.trial(cname, "random", i) as t:
                _torsor_trial(t, K)
    with rec.trial("S1_3", "automorphisms", 0) as t:
        _automorphism_check(t)
    return rec.result


def _torsor_trial(t: Trial, K: SimplicialComplex):
    rng = t.rng
    k = rng.randint(1, K.dim)
    lat = rng.choice(LATTICES)
    s = _random_trivialization(rng, K, k, lat)
    x = s.x
    y1 = sampling.cocycle(rng, K, k - 1, lat)
    y2 = sampling.cocycle(rng, K, k - 1, lat)
    t.note(k=k, lattice=lat, s=s, y1=y1, y2=y2)
    zero = DiffCochain.zero(K, k - 1, k - 1, lat)
    t.check("act(act(s,y1),y2) = act(s,y1+y2)",
            torsor_act(torsor_act(s, y1), y2) == torsor_act(s, y1 + y2))
    t.check("act(s,0) = s", torsor_act(s, zero) == s)
    t.check("difference(act(s,y), s) = y", torsor_difference(torsor_act(s, y1), s) == y1)
    t.check("free: act(s,y) ≅ s iff y ~ 0",
            (isomorphism(s, torsor_act(s, y1)) is not None) == (are_equivalent(zero, y1) is not None))
    if k >= 2:
        w = sampling.diffcochain(rng, K, k - 1, k - 2, lat)
        t.check("coboundaries act trivially", isomorphism(s, torsor_act(s, differential(w))) is not None)
    s0 = trivialize(x)
    t.check("transitive", torsor_act(s0, torsor_difference(s, s0)) == s)
    top, curv, lift = project(s)
    s1 = torsor_act(s, y1)
    top1, curv1, lift1 = project(s1)
    hb = K.homology_basis(k - 1)
    t.check("T_top equivariant over H^{k-1}(Λ)", top1.offset(top) == integral_class(y1.c, lat))
    t.check("T_curv equivariant over Z^{k-1}(V)_Λ", curv1.eta - curv.eta == y1.form())
    t.check("T_dR equivariant over Hom(H_{k-1}, Λ)",
            lift1.offset(lift) == hb.periods(y1.c) == hb.periods(y1.form()))
    t.check("square: T_top → T_dR", top.to_de_rham() == lift)
    t.check("square: T_curv → T_dR", curv.to_de_rham() == lift)
    t.check("⟨η, z⟩ = ⟨h + b, z⟩ on homology generators",
            all(pair(s.eta, Chain(K, k - 1, z)) == pair(x.h + s.b.retag("V"), Chain(K, k - 1, z))
                for z in hb.generators))
    m = _random_morphism(rng, K, k, lat)
    t.note(morphism=m)
    s_new = transport(s, m)
    t.check("transport trivializes x + dy", s_new.x == x + differential(m))
    t.check("transport back along −y is the identity", transport(s_new, -m) == s)
    t.check("transport adds b′ and leaves η", s_new.eta == s.eta and s_new.b == s.b + m.c)


def _automorphism_check(t: Trial):
    """On S¹₃ in degree 2, ``Aut(x) ≅ ℚ/ℤ`` changes transport maps."""
    x = circle.example("flat-third")
    K = x.complex
    s = trivialize(x)
    G = automorphism_group(x)
    t.check("Aut(x) ≅ H⁰(S¹; Q/Z)", G.free_rank == 1 and G.torsion == ())
    e = Cochain.from_dict(K, 1, {(0, 1): 1})
    y = DiffCochain(2, 1, e.retag("L"), Cochain.zero(K, 0), None, Lattice(1))
    for tval, nontrivial in ((Fraction(1, 2), True), (Fraction(1, 3), True), (Fraction(1), False)):
        a = DiffCochain(2, 1, Cochain.zero(K, 1, "L"), Cochain(K, 0, (tval,) * 3), None, Lattice(1))
        t.note(automorphism=a)
        t.check("automorphism is a cocycle", is_cocycle(a) and automorphism_class(a) == (tval % 1,))
        t1, t2 = transport(s, y), transport(s, y + a)
        t.check(f"automorphism {tval} changes the transport iff t ∉ Z",
                (isomorphism(t1, t2) is None) == nontrivial and t1.x == t2.x)


def _obstruction_checks(t: Trial, x: DiffCochain):
    K, k, lat = x.complex, x.k, x.lattice
    coords = characteristic_class(x)
    s = trivialize(x)
    G = characteristic_group(x)
    t.check("trivialize succeeds iff the class coordinates vanish",
            isinstance(s, Trivialization) == (not any(coords)))
    if isinstance(s, Trivialization):
        return
    t.check("obstruction reports the class", s.coordinates == coords)
    ntor = len(G.torsion)
    periods = K.homology_basis(k).periods(x.c.retag("V"))
    # free part is detected by periods; torsion part is rationally exact and killed by its order
    t.check("free coordinates are the periods over α", tuple(p / lat.alpha for p in periods) == coords[ntor:])
    if not any(coords[ntor:]):
        try:
            solve_rational_coboundary(x.c.retag("V"))
            exact = True
        except NoSolution:
            exact = False
        order = lcm(*(d // gcd(a, d) for a, d in zip(coords, G.torsion)))
        multiple = DiffCochain(x.n, k, (order * x.c.retag("V")).retag("L", lat), order * x.h,
                               order * x.form(), lat)
        t.check("torsion obstruction is rationally exact and has finite order",
                exact and isinstance(trivialize(multiple), Trivialization))


def suite_obstruction(trials: int, seed: int, complexes=None) -> SuiteResult:
    """``x`` is trivializable exactly when its characteristic class is zero."""
    rec = Recorder("obstruction", seed, trials)
    for name, x in circle.examples().items():
        with rec.trial(x.complex.name, f"example-{name}", 0) as t:
            t.note(x=x)
            _obstruction_checks(t, x)
    names = complexes or tuple(corpus.COMPLEXES)
    for cname, K in _complexes(names):
        for k in range(1, K.dim + 1):
            G = cohomology(K, k, "L", Lattice(1))
            ranges = [range(d) for d in G.torsion] + [range(-1, 2)] * G.free_rank
            for j, coords in enumerate(itertools.product(*ranges)):
                with rec.trial(cname, f"box-{k}", j) as t:
                    lat = t.rng.choice(LATTICES)
                    gens = cohomology(K, k, "L", lat).generators
                    vals = [Fraction(0)] * K.count(k)
                    for a, g in zip(coords, gens):
                        vals = [v + a * Fraction(e) for v, e in zip(vals, g)]
                    if k >= 1:
                        vals = [v + e for v, e in zip(vals, coboundary(sampling.cochain(t.rng, K, k - 1, "L", lat))
                                                      .values)]
                    c = Cochain(K, k, tuple(vals), "L", lat)
                    h = sampling.cochain(t.rng, K, k - 1)
                    x = DiffCochain(k, k, c, h, c.retag("V") + coboundary(h), lat)
                    t.note(x=x, coords=list(coords))
                    t.check("class coordinates match the construction", characteristic_class(x) == coords)
                    _obstruction_checks(t, x)
    for cname, K in _complexes(complexes):
        for i in range(trials):
            with rec.trial(cname, "random", i) as t:
                k = t.rng.randint(1, K.dim)
                lat = t.rng.choice(LATTICES)
                x = sampling.cocycle(t.rng, K, k, lat, trivializable=t.rng.random() < 0.3)
                t.note(x=x)
                _obstruction_checks(t, x)
    return rec.result


def suite_leibniz(trials: int, seed: int, complexes=None) -> SuiteResult:
    """``d(x₁x₂) = dx₁·x₂ + (−1)^{k₁} x₁·dx₂`` and its consequences on the torus."""
    rec = Recorder("leibniz", seed, trials)
    for cname, K in _complexes(complexes or ("T2_7",)):
        for i in range(trials):
            with rec.trial(cname, "pair", i) as t:
                rng = t.rng
                k1, k2 = rng.randint(0, 2), rng.randint(0, 2)
                n1, n2 = rng.randint(0, 3), rng.randint(0, 3)
                l1, l2 = rng.choice(LATTICES), rng.choice(LATTICES)
                x1 = sampling.diffcochain(rng, K, n1, k1, l1)
                x2 = sampling.diffcochain(rng, K, n2, k2, l2)
                t.note(x1=x1, x2=x2)
                t.check("Leibniz residual is 0", leibniz_residual(x1, x2).is_zero())
                a, b = sampling.cochain(rng, K, k1), sampling.cochain(rng, K, k2)
                sign = -1 if k1 % 2 else 1
                t.check("δ(a∪b) = δa∪b + (−1)^p a∪δb",
                        coboundary(cup(a, b)) == cup(coboundary(a), b) + sign * cup(a, coboundary(b)))
                c1 = sampling.cocycle(rng, K, k1, l1)
                c2 = sampling.cocycle(rng, K, k2, l2)
                p = diff_product(c1, c2)
                t.check("product of cocycles is a cocycle", is_cocycle(p))
                if 1 <= k1:
                    s = _random_trivialization(rng, K, k1, l1)
                    t.note(s=s, x2=c2)
                    sp = product_on_trivialization(s, c2)
                    t.check("s·x₂ trivializes x₁·x₂ with class b∪c₂ and curvature η∪ω₂",
                            sp.x == diff_product(s.x, c2)
                            and sp.b.retag("V") == cup(s.b.retag("V"), c2.c.retag("V"))
                            and sp.eta == cup(s.eta, c2.form()))
    return rec.result


def product_complexes() -> dict[str, ProductComplex]:
    return {"S1_3xS1_3": ProductComplex(corpus.circle3(), corpus.circle3()),
            "ptxS1_3": ProductComplex(corpus.point(), corpus.circle3())}


def suite_stokes(trials: int, seed: int, complexes=None) -> SuiteResult:
    """``d∫ = ∫d`` and the cube of projections for products ``B × F``."""
    rec = Recorder("stokes", seed, trials)
    for pname, P in product_complexes().items():
        X, nf = P.complex, P.fiber_dim
        for i in range(trials):
            with rec.trial(pname, "random", i) as t:
                rng = t.rng
                k = rng.randint(nf, X.dim + 1)
                n = rng.randint(nf, k + 2)
                lat = rng.choice(LATTICES)
                x = sampling.diffcochain(rng, X, n, k, lat)
                t.note(x=x)
                t.check("d∫x = ∫dx", differential(fiber_integrate(P, x)) == fiber_integrate(P, differential(x)))
                t.check("curv(∫x) = ∫curv(x)",
                        fiber_integrate(P, x).form() == P.integrate_cochain(x.form()))
                kk = rng.randint(max(nf, 1), X.dim)
                s = _random_trivialization(rng, X, kk, lat)
                t.note(s=s)
                si = fiber_integrate_trivialization(P, s)
                top, curv, lift = project(s)
                itop, icurv, ilift = project(si)
                t.check("∫s trivializes ∫x", si.x == fiber_integrate(P, s.x))
                t.check("cube: T_top face", itop.b == P.integrate_cochain(top.b))
                t.check("cube: T_curv face", icurv.eta == P.integrate_cochain(curv.eta))
                t.check("cube: T_dR face", ilift.rep == P.integrate_cochain(lift.rep))
    return rec.result


def suite_hodge(trials: int, seed: int, complexes=None) -> SuiteResult:
    """Hodge decomposition invariants and the right inverse ``T_dR → T_curv``."""
    rec = Recorder("hodge", seed, trials)
    with rec.trial("S1_3", "closed-form", 0) as t:
        x = circle.example("flat-third")
        eta = hodge_right_inverse(project(trivialize(x))[2]).eta
        want = {(0, 1): Fraction(1, 9), (1, 2): Fraction(1, 9), (0, 2): Fraction(-1, 9)}
        t.check("lift 1/3 gives η = (1/9, 1/9, −1/9)", all(eta[s] == v for s, v in want.items()))
    for cname, K in _complexes(complexes):
        for i in range(trials):
            with rec.trial(cname, "decompose", i) as t:
                k = t.rng.randint(0, K.dim)
                c = sampling.cochain(t.rng, K, k)
                t.note(c=c)
                d = decompose(c)
                t.check("parts sum to the input", d.total() == c)
                t.check("parts are orthogonal", inner(d.harmonic, d.exact) == inner(d.harmonic, d.coexact)
                        == inner(d.exact, d.coexact) == 0)
                t.check("harmonic part is closed and coclosed",
                        coboundary(d.harmonic).is_zero() and codifferential(d.harmonic).is_zero())
                try:
                    solve_rational_coboundary(d.exact)
                    exact_ok = True
                except NoSolution:
                    exact_ok = False
                t.check("exact part lies in im δ", exact_ok)
                up = K.coboundary_matrix(k)
                try:
                    RationalSolver(up.T).solve(list(d.coexact.values))
                    coexact_ok = True
                except NoSolution:
                    coexact_ok = False
                t.check("coexact part lies in im δ*", coexact_ok)
                dd = decompose(d.harmonic)
                t.check("idempotent", dd.harmonic == d.harmonic and dd.exact.is_zero() and dd.coexact.is_zero()
                        and decompose(d.exact).exact == d.exact and decompose(d.coexact).coexact == d.coexact)
            if i < max(1, trials // 2):
                with rec.trial(cname, "right-inverse", i) as t:
                    k = t.rng.randint(1, K.dim)
                    lat = t.rng.choice(LATTICES)
                    s = _random_trivialization(t.rng, K, k, lat)
                    t.note(s=s)
                    lift = project(s)[2]
                    curv = hodge_right_inverse(lift)
                    t.check("project ∘ right inverse = id", curv.to_de_rham() == lift)
                    t.check("result is coclosed", codifferential(curv.eta).is_zero())
                    y = sampling.cocycle(t.rng, K, k - 1, lat)
                    lift2 = project(torsor_act(s, y))[2]
                    t.check("equivariant over the harmonic projection",
                            hodge_right_inverse(lift2).eta - curv.eta == decompose(y.form()).harmonic)
    return rec.result


def suite_degree2(trials: int, seed: int, complexes=None) -> SuiteResult:
    """Circle-bundle dictionary on flat-third and pushforward composites."""
    rec = Recorder("degree2", seed, trials)
    x = circle.example("flat-third")
    K = x.complex
    s = trivialize(x)
    with rec.trial("S1_3", "base", 0) as t:
        rep = circle.section_report(s)
        t.check("flat-third report: lift 1/3, class 0", rep.lift == (Fraction(1, 3),) and rep.section_class == (0,))
        v = circle.interpret(x)
        t.check("holonomy table {z ↦ 1/3}", v.holonomy == (Fraction(1, 3),) and v.trivializable)
    for i in range(trials):
        with rec.trial("S1_3", "orbit", i) as t:
            rng = t.rng
            f = sampling.cocycle(rng, K, 1, Lattice(1))
            g = sampling.cocycle(rng, K, 1, Lattice(1))
            t.note(f=f, g=g)
            sf = circle.gauge(f, s)
            rep = circle.section_report(sf)
            t.check("(p+f)*Θ = p*Θ + df", circle.gauge_law_holds(s, f))
            t.check("lift agrees with connection on cycles", rep.consistent(x))
            t.check("class bookkeeping", rep.section_class == integral_class(f.c, Lattice(1)))
            t.check("orbit is free: f·s ≅ g·s iff f ~ g",
                    (isomorphism(sf, circle.gauge(g, s)) is not None) == (are_equivalent(f, g) is not None))
            flat_forms = [DiffCochain(1, 1, Cochain.zero(K, 1, "L"), phi, coboundary(phi), Lattice(1))
                          for phi in (sampling.cochain(rng, K, 0) for _ in range(2))]
            spec = circle.bottom_row_spec(x, flat_forms)
            t.check("bottom row equals the induced torsor map",
                    induced_torsor_map(spec, TopTrivialization(sf.b, x)) == project(sf)[2])
            tval = sampling.rational(rng)
            phase = DiffCochain(1, 1, Cochain.zero(K, 1, "L"), Cochain(K, 0, (tval,) * 3), None, Lattice(1))
            s2 = torsor_act(sf, phase)
            t.check("equal connections differ by a constant phase",
                    circle.phase_difference(s2, sf) == (tval % 1,)
                    and (isomorphism(sf, s2) is None) == (tval.denominator != 1))
    with rec.trial("ptxS1_3", "pushforward", 0) as t:
        P = ProductComplex(corpus.point(), corpus.circle3())
        ix = fiber_integrate(P, P.pullback(x, "fiber"))
        t.check("pushforward over pt × S¹₃ has holonomy 1/3",
                holonomy(ix, Chain.from_dict(corpus.point(), 0, {(0,): 1})) == Fraction(1, 3))
    with rec.trial("S1_3xS1_3", "pushforward", 0) as t:
        P = ProductComplex(corpus.circle3(), corpus.circle3())
        F = P.fiber
        v = Cochain(F, 1, F.homology_basis(1).free_duals[0], "L")
        yv = DiffCochain(1, 1, v, Cochain.zero(F, 0), v.retag("V"), Lattice(1))
        big = diff_product(P.pullback(x, "base"), P.pullback(yv, "fiber"))
        t.note(x=big)
        ix = fiber_integrate(P, big)
        t.check("∫(x × v) = x", ix == x)
        sb = trivialize(big)
        si = fiber_integrate_trivialization(P, sb)
        rep, direct = circle.section_report(si), project(sb)
        t.check("section data of ∫x is ∫ of section data",
                rep.connection == P.integrate_cochain(direct[1].eta)
                and rep.lift == K.homology_basis(1).periods(P.integrate_cochain(direct[2].rep)))
    return rec.result


def suite_lemma28(trials: int, seed: int, complexes=None) -> SuiteResult:
    """``Hᵏ(K; ℚ)_ℤ ≅ Hom(H_k(K), ℤ)`` on every bundled complex and degree."""
    rec = Recorder("lemma28", seed, trials)
    names = complexes or tuple(corpus.COMPLEXES)
    for cname, K in _complexes(names):
        for k in range(K.dim + 1):
            with rec.trial(cname, f"degree-{k}", 0) as t:
                info = integral_period_comparison(K, k)
                t.note(info=str(info))
                # independent rank: dim Cᵏ − rank δ_k − rank δ_{k−1}
                rank = (K.count(k) - RationalSolver(K.coboundary_matrix(k)).rank
                        - RationalSolver(K.coboundary_matrix(k - 1)).rank)
                t.check("ranks agree with linear algebra", info["rank_rational"] == info["rank_hom"] == rank)
                t.check("coordinate bijection", info["bijection"])
                t.check("H^k(Z) maps onto Hom(H_k, Z)", info["integral_image_is_everything"])
                t.check("torsion dies rationally", info["torsion_dies"])
                t.check("injective iff torsion free", info["integral_map_injective"] == (not cohomology(K, k).torsion))
            for i in range(trials):
                with rec.trial(cname, f"degree-{k}-sample", i) as t:
                    c = sampling.rational_cocycle(t.rng, K, k, lattice_periods=Lattice(1))
                    t.note(c=c)
                    hb = K.homology_basis(k)
                    per = hb.periods(c)
                    rep = DivisibleCohomology(K, k, "V", Lattice(1)).representative((), per)
                    t.check("periods are integers", all(p.denominator == 1 for p in per))
                    try:
                        solve_rational_coboundary(c - rep)
                        ok = True
                    except NoSolution:
                        ok = False
                    t.check("class is recovered from its periods", ok)
    return rec.result


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "d2": suite_d2,
    "square": suite_square,
    "exactness": suite_exactness,
    "bockstein": suite_bockstein,
    "obstruction": suite_obstruction,
    "torsor": suite_torsor,
    "leibniz": suite_leibniz,
    "stokes": suite_stokes,
    "hodge": suite_hodge,
    "degree2": suite_degree2,
    "lemma28": suite_lemma28,
}


def run_suite(name: str, trials: int, seed: int, complexes=None) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return fn(trials, seed, complexes)
