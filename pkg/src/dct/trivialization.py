"""Trivializations of differential cocycles and their four torsors.

A geometric trivialization of ``x = (c, h, ω) ∈ Ž(k)^k`` is a triple
``s = (b, k̂, η) ∈ Č(k-1)^{k-1}`` with ``ds = x``, i.e.::

    δb = c,    η − b − δk̂ = h,    δη = ω.

It projects to a topological trivialization (``b`` up to ``δC^{k-2}(Λ)``),
a global connection form ``η`` and a V-valued lift ``z ↦ ⟨h + b, z⟩`` of the
holonomy.  Each set is a torsor, and the projections form a commutative
square of torsors over the square of groups ``Ȟ^{k-1} → Z^{k-1}(V)_Λ``,
``H^{k-1}(Λ) → Hom(H_{k-1}, Λ)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from .diffcochain import (
    DiffCochain,
    DiffMorphism,
    are_equivalent,
    characteristic_class,
    characteristic_group,
    differential,
    is_cocycle,
)
from .exactalg import AbelianGroupPresentation, NoSolution
from .simplicial import (
    Chain,
    Cochain,
    coboundary,
    integral_class,
    pair,
    solve_lattice_coboundary,
)


def _require_character(x: DiffCochain):
    if x.n != x.k:
        raise ValueError(f"trivializations are defined for Ž(k)^k, got Č({x.n})^{x.k}")
    if not is_cocycle(x):
        raise ValueError("not a differential cocycle")


@dataclass(frozen=True, eq=False)
class Trivialization:
    """``s = (b, k̂, η)`` with ``ds = x``.

    Raises:
        ValueError: if any of the three defining equations fails.
    """

    b: Cochain
    khat: Cochain
    eta: Cochain
    x: DiffCochain

    def __post_init__(self):
        x = self.x
        _require_character(x)
        k = x.k
        if (self.b.degree, self.khat.degree, self.eta.degree) != (k - 1, k - 2, k - 1):
            raise ValueError("trivialization components have the wrong degrees")
        lat = x.lattice
        if not all(lat.contains(v) for v in self.b.values):
            raise ValueError(f"b is not {lat}Z-valued")
        object.__setattr__(self, "b", self.b.retag("L", lat))
        object.__setattr__(self, "khat", self.khat.retag("V", lat))
        object.__setattr__(self, "eta", self.eta.retag("V", lat))
        if differential(self.as_diffcochain()).regrade(x.n) != x:
            raise ValueError("ds ≠ x: (b, k̂, η) does not trivialize the cocycle")

    @property
    def degree(self) -> int:
        return self.x.k

    def as_diffcochain(self) -> DiffCochain:
        """``s`` as an element of ``Č(k-1)^{k-1}``."""
        k = self.x.k
        return DiffCochain(k - 1, k - 1, self.b, self.khat, self.eta, self.x.lattice)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trivialization):
            return NotImplemented
        return (self.x == other.x and self.b == other.b and self.khat == other.khat
                and self.eta == other.eta)

    def __hash__(self):
        return hash((self.b, self.khat, self.eta))

    def __repr__(self) -> str:
        return (f"Trivialization(b={self.b.as_dict()}, khat={self.khat.as_dict()}, "
                f"eta={self.eta.as_dict()})")


@dataclass(frozen=True)
class Obstruction:
    """The nonzero characteristic class that prevents a trivialization."""

    group: AbelianGroupPresentation
    coordinates: tuple[int, ...]

    def __str__(self) -> str:
        return f"[c] = {list(self.coordinates)} in {self.group}"


def trivialize(x: DiffCochain) -> Trivialization | Obstruction:
    """Solve ``δb = c`` over Λ, set ``k̂ = 0`` and ``η = h + b``."""
    _require_character(x)
    try:
        b = solve_lattice_coboundary(x.c, x.lattice)
    except NoSolution:
        return Obstruction(characteristic_group(x), characteristic_class(x))
    K, k = x.complex, x.k
    return Trivialization(b, Cochain.zero(K, k - 2), x.h + b.retag("V"), x)


# ---------------------------------------------------------------------------
# The three projections


def _cycle_generators(x: DiffCochain) -> tuple[tuple[int, ...], ...]:
    if x.k - 1 < 0 or x.k - 1 > x.complex.dim:
        return ()
    return x.complex.homology_basis(x.k - 1).generators


@dataclass(frozen=True, eq=False)
class TopTrivialization:
    """``b`` with ``δb = c``, up to ``δC^{k-2}(Λ)``."""

    b: Cochain
    x: DiffCochain

    def __post_init__(self):
        if coboundary(self.b.retag("V")) != self.x.c.retag("V"):
            raise ValueError("δb ≠ c")

    def offset(self, other: "TopTrivialization") -> tuple[int, ...]:
        """Coordinates in ``H^{k-1}(Λ)`` of ``[b − b′]``, the group element taking ``other`` to ``self``."""
        d = (self.b.retag("V") - other.b.retag("V")).retag("L", self.x.lattice)
        return integral_class(d, self.x.lattice)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TopTrivialization):
            return NotImplemented
        return self.x == other.x and not any(self.offset(other))

    __hash__ = None

    def to_de_rham(self) -> "DeRhamTrivialization":
        return DeRhamTrivialization(self.x.h + self.b.retag("V"), self.x)


@dataclass(frozen=True, eq=False)
class CurvTrivialization:
    """A global connection form: ``δη = ω`` and ``⟨η, z⟩ ≡ hol(x, z)`` mod Λ."""

    eta: Cochain
    x: DiffCochain

    def __post_init__(self):
        if not in_curv(self.eta, self.x):
            raise ValueError("η is not a global connection form for x")

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurvTrivialization):
            return NotImplemented
        return self.x == other.x and self.eta == other.eta

    __hash__ = None

    def to_de_rham(self) -> "DeRhamTrivialization":
        return DeRhamTrivialization(self.eta, self.x)


@dataclass(frozen=True, eq=False)
class DeRhamTrivialization:
    """A V-valued lift ``z ↦ ⟨rep, z⟩`` of the holonomy; ``rep`` is defined up to ``δC^{k-2}(V)``."""

    rep: Cochain
    x: DiffCochain

    def __post_init__(self):
        if not in_de_rham(self.rep, self.x):
            raise ValueError("representative does not lift the holonomy of x")

    def __call__(self, z: Chain) -> Fraction:
        return pair(self.rep, z)

    def values(self) -> tuple[Fraction, ...]:
        """Values on the free generators of ``H_{k-1}``; they determine the lift."""
        if not _cycle_generators(self.x):
            return ()
        return self.x.complex.homology_basis(self.x.k - 1).periods(self.rep)

    def offset(self, other: "DeRhamTrivialization") -> tuple[Fraction, ...]:
        """The element of ``Hom(H_{k-1}, Λ)`` (as periods) taking ``other`` to ``self``."""
        return tuple(a - b for a, b in zip(self.values(), other.values()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DeRhamTrivialization):
            return NotImplemented
        return self.x == other.x and self.values() == other.values()

    __hash__ = None


def _lifts_holonomy(form: Cochain, x: DiffCochain) -> bool:
    if coboundary(form.retag("V")) != x.form():
        return False
    diff = form.retag("V") - x.h
    K = x.complex
    return all(x.lattice.contains(pair(diff, Chain(K, x.k - 1, z))) for z in _cycle_generators(x))


def in_curv(eta: Cochain, x: DiffCochain) -> bool:
    """Membership in ``T_curv(x)``: ``δη = ω`` and ``⟨η − h, z⟩ ∈ Λ`` on homology generators.

    Boundaries need no check: ``⟨η − h, ∂w⟩ = ⟨c, w⟩ ∈ Λ``.
    """
    return eta.degree == x.k - 1 and _lifts_holonomy(eta, x)


def in_de_rham(rep: Cochain, x: DiffCochain) -> bool:
    """Membership in ``T_dR(x)``, decided on a representative cochain."""
    return rep.degree == x.k - 1 and _lifts_holonomy(rep, x)


def membership(form: Cochain, x: DiffCochain, kind: str = "curv") -> bool:
    """``kind`` is ``"curv"`` or ``"dR"``."""
    if kind not in ("curv", "dR"):
        raise ValueError(f"unknown torsor {kind!r}")
    return in_curv(form, x) if kind == "curv" else in_de_rham(form, x)


def project(s: Trivialization) -> tuple[TopTrivialization, CurvTrivialization, DeRhamTrivialization]:
    """``s ↦ (b, η, ⟨h + b, ·⟩)``."""
    x = s.x
    return (TopTrivialization(s.b, x), CurvTrivialization(s.eta, x),
            DeRhamTrivialization(x.h + s.b.retag("V"), x))


# ---------------------------------------------------------------------------
# Torsor structure


def _require_group_element(s: Trivialization, y: DiffCochain):
    k = s.x.k
    if (y.n, y.k) != (k - 1, k - 1):
        raise ValueError(f"acting element must lie in Č({k - 1})^{k - 1}")
    if y.lattice != s.x.lattice or y.complex != s.x.complex:
        raise ValueError("lattice or complex mismatch")
    if not is_cocycle(y):
        raise ValueError("acting element is not a cocycle")


def torsor_act(s: Trivialization, y: DiffCochain) -> Trivialization:
    """``(b + b′, k̂ + k̂′, η + η′)`` for a cocycle ``y = (b′, k̂′, η′) ∈ Ž(k-1)^{k-1}``."""
    _require_group_element(s, y)
    return Trivialization(s.b + y.c, s.khat + y.h, s.eta + y.form(), s.x)


def torsor_difference(s1: Trivialization, s2: Trivialization) -> DiffCochain:
    """The cocycle ``s₁ − s₂``, so that ``torsor_act(s₂, s₁ − s₂) = s₁``."""
    if s1.x != s2.x:
        raise ValueError("trivializations of different cocycles")
    return s1.as_diffcochain() - s2.as_diffcochain()


def isomorphism(s1: Trivialization, s2: Trivialization) -> DiffMorphism | None:
    """A morphism ``t ∈ Č(k-1)^{k-2}`` with ``dt = s₂ − s₁``, or ``None``."""
    d = torsor_difference(s2, s1)
    return are_equivalent(DiffCochain.zero(d.complex, d.n, d.k, d.lattice), d)


def transport(s: Trivialization, y: DiffMorphism, x_new: DiffCochain | None = None) -> Trivialization:
    """Carry ``s ∈ T_geo(x)`` to ``T_geo(x + dy)`` along ``y = (b′, k̂′) ∈ Č(k)^{k-1}``.

    Raises:
        ValueError: if ``dy ≠ x′ − x``.
    """
    x = s.x
    if (y.n, y.k) != (x.k, x.k - 1):
        raise ValueError(f"morphism must lie in Č({x.k})^{x.k - 1}")
    target = x + differential(y)
    if x_new is not None and x_new != target:
        raise ValueError("dy ≠ x′ − x")
    return Trivialization(s.b + y.c, s.khat + y.h, s.eta, target)


def automorphism_as_action(a: DiffMorphism) -> DiffCochain:
    """An automorphism ``(b′, k̂′)`` of ``x`` viewed as the cocycle ``(b′, k̂′, 0) ∈ Ž(k-1)^{k-1}``."""
    return DiffCochain(a.k, a.k, a.c, a.h, None, a.lattice)


# ---------------------------------------------------------------------------
# Equivariant maps between torsors


@dataclass(frozen=True)
class TorsorMapSpec:
    """Data for inducing a map ``A₂ → B₂`` from ``f₁: A₁ → B₁``.

    ``alpha: A₁ → A₂`` and ``beta: B₁ → B₂`` are equivariant over
    ``G₁ → G₂``; ``section`` picks some ``a₁ ∈ α⁻¹(a₂)`` (raising
    ``LookupError`` when the fibre is empty); ``act_a1`` lets ``G₀ =
    ker(G₁ → G₂)`` act on ``A₁`` and ``kernel_samples`` lists elements of
    ``G₀`` used to check well-definedness.
    """

    alpha: Callable[[Any], Any]
    beta: Callable[[Any], Any]
    f1: Callable[[Any], Any]
    section: Callable[[Any], Any]
    act_a1: Callable[[Any, Any], Any] | None = None
    kernel_samples: Sequence[Any] = ()
    same_a2: Callable[[Any, Any], bool] = staticmethod(lambda a, b: a == b)
    same_b2: Callable[[Any, Any], bool] = staticmethod(lambda a, b: a == b)


def induced_torsor_map(spec: TorsorMapSpec, a2: Any) -> Any:
    """``f₂(a₂) := β(f₁(a₁))`` for any ``a₁ ∈ α⁻¹(a₂)``.

    Raises:
        LookupError: if ``a₂`` has no preimage.
        ValueError: if the section is wrong or a ``G₀``-translate of the
            preimage gives a different answer.
    """
    a1 = spec.section(a2)
    if not spec.same_a2(spec.alpha(a1), a2):
        raise ValueError("section does not map back under alpha")
    b2 = spec.beta(spec.f1(a1))
    if spec.act_a1 is not None:
        for g0 in spec.kernel_samples:
            other = spec.act_a1(a1, g0)
            if not spec.same_a2(spec.alpha(other), a2):
                raise ValueError("kernel sample moves the preimage out of the fibre")
            if not spec.same_b2(spec.beta(spec.f1(other)), b2):
                raise ValueError("induced map is not well defined on this fibre")
    return b2
