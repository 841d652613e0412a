"""Degree-2 differential cocycles read as discrete circle bundles with connection.

For ``x ∈ Ž(2)^2`` with ``Λ = ℤ``: ``[c] ∈ H²(ℤ)`` is the bundle's class,
``ω`` its curvature and ``z ↦ ⟨h, z⟩ mod 1`` its holonomy.  A trivialization
``s = (b, k̂, η)`` is a global section up to homotopy (``b``), a connection
form (``η``) and a real lift of the holonomy (``h + b``).  Degree-1
differential cocycles, the discrete maps to ``ℝ/ℤ``, act by gauge
transformations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diffcochain import (
    DiffCochain,
    characteristic_class,
    flat_character,
    holonomy_table,
    is_cocycle,
)
from .simplicial import (
    Cochain,
    DivisibleCohomology,
    Lattice,
    SimplicialComplex,
    betti,
    cohomology,
)
from .trivialization import (
    Obstruction,
    TopTrivialization,
    TorsorMapSpec,
    Trivialization,
    project,
    torsor_act,
    torsor_difference,
    trivialize,
)
from . import corpus


@dataclass(frozen=True)
class CircleBundleView:
    cocycle: DiffCochain
    holonomy: tuple[Fraction, ...]
    class_coordinates: tuple[int, ...]
    curvature: Cochain

    @property
    def trivializable(self) -> bool:
        return not any(self.class_coordinates)


def _require_degree2(x: DiffCochain):
    if (x.n, x.k) != (2, 2) or x.lattice != Lattice(1):
        raise ValueError(f"expected a cocycle in Ž(2)^2 with Λ = Z, got Č({x.n})^{x.k}, Λ = {x.lattice}Z")
    if not is_cocycle(x):
        raise ValueError("not a differential cocycle")


def interpret(x: DiffCochain) -> CircleBundleView:
    """The bundle data of a degree-2 cocycle.

    Raises:
        ValueError: for the wrong degree or lattice.
    """
    _require_degree2(x)
    return CircleBundleView(x, holonomy_table(x), characteristic_class(x), x.form())


@dataclass(frozen=True)
class SectionReport:
    """A trivialization in bundle vocabulary.

    ``section_class`` is the offset in ``H¹(ℤ)`` from the solver's base
    trivialization, ``connection`` is ``η`` and ``lift`` lists the real
    holonomy lift on the free generators of ``H₁``.
    """

    section_class: tuple[int, ...]
    connection: Cochain
    lift: tuple[Fraction, ...]

    def consistent(self, x: DiffCochain) -> bool:
        """``⟨η, z⟩ = lift(z)`` on the free generators of ``H₁``."""
        hb = x.complex.homology_basis(1)
        return hb.periods(self.connection) == self.lift


def base_trivialization(x: DiffCochain) -> Trivialization:
    s = trivialize(x)
    if isinstance(s, Obstruction):
        raise ValueError(f"bundle has no section: {s}")
    return s


def section_report(s: Trivialization) -> SectionReport:
    _require_degree2(s.x)
    top, curv, lift = project(s)
    base = TopTrivialization(base_trivialization(s.x).b, s.x)
    return SectionReport(top.offset(base), curv.eta, lift.values())


def gauge(f: DiffCochain, s: Trivialization) -> Trivialization:
    """Act by a degree-1 cocycle ``f``: the discrete ``(p + f)*Θ = p*Θ + df``."""
    return torsor_act(s, f)


def gauge_law_holds(s: Trivialization, f: DiffCochain) -> bool:
    """The report of ``f·s`` is the report of ``s`` shifted by ``([f], df, periods(f))``."""
    before, after = section_report(s), section_report(gauge(f, s))
    K = s.x.complex
    hb = K.homology_basis(1)
    fclass = cohomology(K, 1, "L", s.x.lattice).coordinates(f.c)
    return (after.connection == before.connection + f.form()
            and after.section_class == tuple(a + b for a, b in zip(before.section_class, fclass))
            and after.lift == tuple(a + p for a, p in zip(before.lift, hb.periods(f.c.retag("V")))))


def phase_difference(s1: Trivialization, s2: Trivialization) -> tuple[Fraction, ...]:
    """For trivializations with the same connection, the ``H⁰(V/Λ)`` class separating them.

    Raises:
        ValueError: if the connection forms differ.
    """
    if s1.eta != s2.eta:
        raise ValueError("connection forms differ")
    y = torsor_difference(s1, s2)
    # y = (b′, k̂′, 0) is flat; its class is k̂′ mod Λ
    return DivisibleCohomology(y.complex, 0, "V/L", y.lattice).coordinates(y.h)


def torsion_free_check(K: SimplicialComplex) -> dict:
    """``H¹(K; ℤ) → H¹(K; ℚ)_ℤ`` is injective (``H¹`` is torsion free).

    Also records that the kernel of ``Ȟ¹ → Ω¹_ℤ`` is ``H⁰(K; ℚ/ℤ)``, one
    ``ℚ/ℤ`` per connected component.
    """
    H1 = cohomology(K, 1, "L", Lattice(1)) if K.dim >= 1 else None
    torsion = list(H1.torsion) if H1 else []
    rank = H1.free_rank if H1 else 0
    periods_rank = betti(K, 1) if K.dim >= 1 else 0
    return {
        "complex": K.name,
        "H1": str(H1) if H1 else "0",
        "torsion": torsion,
        "injective": not torsion and rank == periods_rank,
        "flat_kernel_factors": betti(K, 0),
    }


def bottom_row_spec(x: DiffCochain, kernel_samples=()) -> TorsorMapSpec:
    """The induced map ``T_top(x) → T_dR(x)`` obtained from ``T_geo → T_dR``.

    A topological trivialization ``b`` is lifted to ``(b, 0, h + b)``; the
    group ``G₀`` of flat gauge transformations ``(0, f, δf)`` does not move
    the lift.
    """

    def section(top: TopTrivialization) -> Trivialization:
        return Trivialization(top.b, Cochain.zero(x.complex, x.k - 2), x.h + top.b.retag("V"), x)

    return TorsorMapSpec(
        alpha=lambda s: project(s)[0],
        beta=lambda lift: lift,
        f1=lambda s: project(s)[2],
        section=section,
        act_a1=torsor_act,
        kernel_samples=tuple(kernel_samples),
    )


# ---------------------------------------------------------------------------
# Named examples


def _flat_third() -> DiffCochain:
    K = corpus.circle3()
    h = Cochain.from_dict(K, 1, {(0, 1): "1/3"})
    return DiffCochain(2, 2, Cochain.zero(K, 2, "L"), h, None, Lattice(1))


def _sphere_generator() -> DiffCochain:
    K = corpus.sphere_tetra()
    c = Cochain.indicator(K, (0, 1, 2), coefficients="L")
    return DiffCochain(2, 2, c, Cochain.zero(K, 1), c.retag("V"), Lattice(1))


def _zero() -> DiffCochain:
    return DiffCochain.zero(corpus.circle3(), 2, 2)


def _torus_flux() -> DiffCochain:
    K = corpus.torus7()
    gen = cohomology(K, 2, "L", Lattice(1)).generators[0]
    c = Cochain(K, 2, gen, "L")
    return DiffCochain(2, 2, c, Cochain.zero(K, 1), c.retag("V"), Lattice(1))


def _projective_flat() -> DiffCochain:
    K = corpus.rp2_6()
    u = DivisibleCohomology(K, 1, "V/L", Lattice(1)).representative((1,), ())
    return flat_character(u, Lattice(1))


EXAMPLES = {
    "flat-third": _flat_third,
    "sphere-generator": _sphere_generator,
    "zero": _zero,
    "torus-flux": _torus_flux,
    "projective-flat": _projective_flat,
}


def examples() -> dict[str, DiffCochain]:
    """Named degree-2 cocycles on the bundled complexes."""
    return {name: build() for name, build in EXAMPLES.items()}


def example(name: str) -> DiffCochain:
    try:
        return EXAMPLES[name]()
    except KeyError:
        raise KeyError(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}") from None
