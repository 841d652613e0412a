"""The bigraded differential cochain complex ``Č(n)^k`` over a simplicial complex.

A differential cochain is a triple ``(c, h, ω)``: ``c`` a Λ-valued k-cochain,
``h`` a rational (k-1)-cochain and, when ``k ≥ n``, a rational k-cochain
``ω`` playing the role of a differential form.  Below the diagonal the form
slot is absent and is treated as zero everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactalg import NoSolution
from .simplicial import (
    Chain,
    Cochain,
    Lattice,
    SimplicialComplex,
    AbelianGroupPresentation,
    boundary,
    coboundary,
    cohomology,
    integral_class,
    integral_cocycle_with_periods,
    pair,
    solve_lattice_coboundary,
    solve_rational_coboundary,
    split_lattice_exact,
)


@dataclass(frozen=True, eq=False)
class DiffCochain:
    """An element ``(c, h, ω)`` of ``Č(n)^k``; ``omega`` is ``None`` when ``k < n``."""

    n: int
    k: int
    c: Cochain
    h: Cochain
    omega: Cochain | None
    lattice: Lattice

    def __post_init__(self):
        K = self.c.complex
        if self.c.degree != self.k or self.h.degree != self.k - 1:
            raise ValueError(f"degree bookkeeping violated for Č({self.n})^{self.k}")
        if self.h.complex != K:
            raise ValueError("components live on different complexes")
        if not all(self.lattice.contains(v) for v in self.c.values):
            raise ValueError(f"characteristic cochain is not {self.lattice}Z-valued")
        object.__setattr__(self, "c", self.c.retag("L", self.lattice))
        object.__setattr__(self, "h", self.h.retag("V", self.lattice))
        if self.k >= self.n:
            if self.omega is None:
                object.__setattr__(self, "omega", Cochain.zero(K, self.k, "V", self.lattice))
            elif self.omega.degree != self.k or self.omega.complex != K:
                raise ValueError("form component has the wrong degree or complex")
            else:
                object.__setattr__(self, "omega", self.omega.retag("V", self.lattice))
        elif self.omega is not None:
            if not self.omega.is_zero():
                raise ValueError(f"Č({self.n})^{self.k} has no form component")
            object.__setattr__(self, "omega", None)

    @classmethod
    def zero(cls, K: SimplicialComplex, n: int, k: int, lattice: Lattice = Lattice(1)) -> "DiffCochain":
        return cls(n, k, Cochain.zero(K, k, "L", lattice), Cochain.zero(K, k - 1),
                   Cochain.zero(K, k) if k >= n else None, lattice)

    @property
    def complex(self) -> SimplicialComplex:
        return self.c.complex

    @property
    def has_form(self) -> bool:
        return self.omega is not None

    def form(self) -> Cochain:
        """The form slot, zero when absent."""
        return self.omega if self.omega is not None else Cochain.zero(self.complex, self.k)

    def _check(self, other: "DiffCochain"):
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError(f"grade mismatch: Č({self.n})^{self.k} vs Č({other.n})^{other.k}")
        if self.lattice != other.lattice:
            raise ValueError(f"lattice mismatch: {self.lattice}Z vs {other.lattice}Z")
        if self.complex != other.complex:
            raise ValueError("differential cochains on different complexes")

    def __add__(self, other: "DiffCochain") -> "DiffCochain":
        self._check(other)
        om = None if self.omega is None else self.omega + other.omega
        return DiffCochain(self.n, self.k, self.c + other.c, self.h + other.h, om, self.lattice)

    def __neg__(self) -> "DiffCochain":
        om = None if self.omega is None else -self.omega
        return DiffCochain(self.n, self.k, -self.c, -self.h, om, self.lattice)

    def __sub__(self, other: "DiffCochain") -> "DiffCochain":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffCochain):
            return NotImplemented
        return ((self.n, self.k, self.lattice) == (other.n, other.k, other.lattice)
                and self.c == other.c and self.h == other.h and self.omega == other.omega)

    def __hash__(self):
        return hash((self.n, self.k, self.c, self.h))

    def __repr__(self) -> str:
        return (f"DiffCochain(n={self.n}, k={self.k}, L={self.lattice}, c={self.c.as_dict()}, "
                f"h={self.h.as_dict()}, omega={None if self.omega is None else self.omega.as_dict()})")

    def is_zero(self) -> bool:
        return self.c.is_zero() and self.h.is_zero() and (self.omega is None or self.omega.is_zero())

    def regrade(self, n: int) -> "DiffCochain":
        """The same triple viewed in ``Č(n)^k`` (the form must vanish if dropped)."""
        return DiffCochain(n, self.k, self.c, self.h, self.omega if self.k >= n else
                           (None if self.omega is None or self.omega.is_zero() else self.omega),
                           self.lattice)


# a morphism of differential cocycles is a cochain one degree down
DiffMorphism = DiffCochain


def differential(x: DiffCochain) -> DiffCochain:
    """``d(c, h, ω) = (δc, ω − c − δh, δω)``, with ω read as 0 below the diagonal."""
    omega = x.form()
    c = coboundary(x.c)
    h = omega - x.c.retag("V") - coboundary(x.h)
    om = coboundary(omega) if x.k + 1 >= x.n else None
    return DiffCochain(x.n, x.k + 1, c, h, om, x.lattice)


def is_cocycle(x: DiffCochain) -> bool:
    return differential(x).is_zero()


def cocycle(K: SimplicialComplex, c: Cochain, h: Cochain, lattice: Lattice = Lattice(1),
            n: int | None = None) -> DiffCochain:
    """Complete ``(c, h)`` to a cocycle in ``Č(n)^k`` by setting ``ω = c + δh``.

    Raises:
        ValueError: if ``c`` is not closed.
    """
    k = c.degree
    n = k if n is None else n
    if not coboundary(c).is_zero():
        raise ValueError("characteristic cochain is not closed")
    if k >= n:
        omega = c.retag("V") + coboundary(h)
        return DiffCochain(n, k, c, h, omega, lattice)
    x = DiffCochain(n, k, c, h, None, lattice)
    if not is_cocycle(x):
        raise ValueError("(c, h) is not a cocycle below the diagonal; need c = −δh")
    return x


# ---------------------------------------------------------------------------
# Invariants


_TRIVIAL = AbelianGroupPresentation(0, (), (), lambda c: (), name="0")


def _group(K: SimplicialComplex, k: int, coefficients: str, lattice: Lattice):
    """Like ``cohomology`` but the zero group outside ``[0, dim K]``."""
    if not 0 <= k <= K.dim:
        return _TRIVIAL
    return cohomology(K, k, coefficients, lattice)


def _require_cocycle(x: DiffCochain):
    if not is_cocycle(x):
        raise ValueError("not a differential cocycle")


def characteristic_class(x: DiffCochain) -> tuple[int, ...]:
    """Coordinates of ``[c]`` in ``Hᵏ(K; Λ)``."""
    return integral_class(x.c, x.lattice)


def characteristic_group(x: DiffCochain) -> AbelianGroupPresentation:
    return _group(x.complex, x.k, "L", x.lattice)


def curvature(x: DiffCochain) -> Cochain:
    return x.form()


def holonomy(x: DiffCochain, z: Chain) -> Fraction:
    """``⟨h, z⟩ mod Λ`` on a (k-1)-cycle ``z``.

    Raises:
        ValueError: if ``z`` is not a cycle.
    """
    if z.degree != x.k - 1:
        raise ValueError(f"holonomy is evaluated on ({x.k - 1})-cycles")
    if not boundary(z).is_zero():
        raise ValueError("chain is not a cycle")
    return x.lattice.reduce(pair(x.h, z))


def holonomy_table(x: DiffCochain) -> tuple[Fraction, ...]:
    """Holonomy on the generators of ``H_{k-1}`` (torsion first, then free)."""
    K = x.complex
    if x.k - 1 < 0:
        return ()
    hb = K.homology_basis(x.k - 1)
    return tuple(holonomy(x, Chain(K, x.k - 1, z)) for z in hb.generators)


def de_rham_class(x: DiffCochain) -> tuple[Fraction, ...]:
    """Periods of the curvature on the free generators of ``H_k``."""
    return x.complex.homology_basis(x.k).periods(x.form())


def rational_image(K: SimplicialComplex, k: int, lattice: Lattice, coords: Sequence[int]) -> tuple[Fraction, ...]:
    """Image of a class in ``Hᵏ(Λ)`` (given by coordinates) in ``Hᵏ(V)`` period coordinates."""
    group = _group(K, k, "L", lattice)
    if group is _TRIVIAL:
        return ()
    hb = K.homology_basis(k)
    out = [Fraction(0)] * hb.free_rank
    for a, gen in zip(coords, group.generators):
        if a:
            per = hb.periods(Cochain(K, k, gen))
            out = [o + a * p for o, p in zip(out, per)]
    return tuple(out)


@dataclass(frozen=True)
class CharacterView:
    """The differential character of a cocycle: ``z ↦ ⟨h, z⟩ mod Λ``."""

    cocycle: DiffCochain

    def __call__(self, z: Chain) -> Fraction:
        return holonomy(self.cocycle, z)

    @property
    def curvature(self) -> Cochain:
        return self.cocycle.form()

    def check_character_property(self, w: Chain) -> bool:
        """``χ(∂w) = ⟨ω, w⟩ mod Λ``."""
        x = self.cocycle
        return self(boundary(w)) == x.lattice.reduce(pair(self.curvature, w))

    def table(self) -> tuple[Fraction, ...]:
        return holonomy_table(self.cocycle)


# ---------------------------------------------------------------------------
# Equivalence


@dataclass(frozen=True)
class Inequivalence:
    """An invariant that separates two differential cocycles."""

    invariant: str  # "curvature" | "characteristic_class" | "holonomy"
    where: object
    first: object
    second: object


def _compare(x1: DiffCochain, x2: DiffCochain):
    x1._check(x2)
    if x1.n != x1.k:
        raise ValueError("equivalence is decided for differential characters (n = k)")
    _require_cocycle(x1)
    _require_cocycle(x2)
    K, k, lat = x1.complex, x1.k, x1.lattice
    if x1.form() != x2.form():
        i = next(i for i, (a, b) in enumerate(zip(x1.form().values, x2.form().values)) if a != b)
        return None, Inequivalence("curvature", K.simplices(k)[i], x1.form().values[i], x2.form().values[i])
    try:
        b0 = solve_lattice_coboundary((x2.c - x1.c).retag("L", lat), lat)
    except NoSolution:
        return None, Inequivalence("characteristic_class", k, characteristic_class(x1), characteristic_class(x2))
    g = x2.h - x1.h + b0.retag("V")
    hb = K.homology_basis(k - 1) if k >= 1 else None
    periods = hb.periods(g) if hb else ()
    for j, p in enumerate(periods):
        if not lat.contains(p):
            z = Chain(K, k - 1, hb.free_cycles[j])
            return None, Inequivalence("holonomy", hb.free_cycles[j], holonomy(x1, z), holonomy(x2, z))
    gamma = integral_cocycle_with_periods(K, k - 1, [-p for p in periods], lat) if hb else b0
    b = (b0.retag("V") + gamma.retag("V")).retag("L", lat) if hb else b0
    v = solve_rational_coboundary(x2.h - x1.h + b.retag("V"))
    y = DiffCochain(x1.n, k - 1, b, -v, None, lat)
    assert differential(y) == x2 - x1
    return y, None


def are_equivalent(x1: DiffCochain, x2: DiffCochain) -> DiffMorphism | None:
    """A morphism ``y`` with ``dy = x₂ − x₁``, or ``None`` if the characters differ.

    Raises:
        ValueError: on grade/lattice/complex mismatch or non-cocycle input.
    """
    return _compare(x1, x2)[0]


def inequivalence_certificate(x1: DiffCochain, x2: DiffCochain) -> Inequivalence | None:
    """The first invariant found that separates ``x₁`` and ``x₂``, if any."""
    return _compare(x1, x2)[1]


def automorphism_group(x: DiffCochain):
    """``Aut(x) ≅ H^{k-2}(K; V/Λ)``."""
    return _group(x.complex, x.k - 2, "V/L", x.lattice)


def automorphism_class(a: DiffMorphism) -> tuple[Fraction, ...]:
    """The class in ``H^{k-2}(V/Λ)`` of an automorphism ``a = (b′, k̂′)``: ``[k̂′ mod Λ]``."""
    if not is_cocycle(a):
        raise ValueError("an automorphism is a cocycle one degree down")
    return _group(a.complex, a.k - 1, "V/L", a.lattice).coordinates(a.h)


# ---------------------------------------------------------------------------
# Comparison with ordinary cohomology off the diagonal


@dataclass(frozen=True)
class CohomologyComparison:
    """Witnesses for ``Ȟ(n)^k ≅ Hᵏ(Λ)`` (k > n) or ``≅ H^{k-1}(V/Λ)`` (k < n).

    Above the diagonal a cocycle maps to ``[c]``; below it maps to
    ``[h mod Λ]``.
    """

    complex: SimplicialComplex
    n: int
    k: int
    lattice: Lattice

    @property
    def target(self):
        if self.k > self.n:
            return _group(self.complex, self.k, "L", self.lattice)
        return _group(self.complex, self.k - 1, "V/L", self.lattice)

    def image(self, x: DiffCochain) -> tuple:
        _require_cocycle(x)
        if self.k > self.n:
            return characteristic_class(x)
        return self.target.coordinates(x.h)

    def preimage(self, rep: Cochain) -> DiffCochain:
        """A cocycle whose image is the class of ``rep``.

        ``rep`` is a Λ-cocycle of degree k above the diagonal, a ``V/Λ``
        cocycle of degree k-1 below it.
        """
        K, lat = self.complex, self.lattice
        if self.k > self.n:
            return DiffCochain(self.n, self.k, rep.retag("L", lat), Cochain.zero(K, self.k - 1),
                               rep.retag("V"), lat)
        u = rep.retag("V")
        return DiffCochain(self.n, self.k, -coboundary(u), u, None, lat)

    def null_homotopy(self, x: DiffCochain) -> DiffCochain:
        """``y ∈ Č(n)^{k-1}`` with ``dy = x`` for ``x`` in the kernel.

        Raises:
            NoSolution: if the image of ``x`` is nonzero.
        """
        _require_cocycle(x)
        K, lat = self.complex, self.lattice
        if self.k > self.n:
            b = solve_lattice_coboundary(x.c, lat)
            y = DiffCochain(self.n, self.k - 1, b, Cochain.zero(K, self.k - 2),
                            x.h + b.retag("V"), lat)
        else:
            b, v = split_lattice_exact(-x.h, lat)
            y = DiffCochain(self.n, self.k - 1, b, v, None, lat)
        assert differential(y) == x
        return y


def cohomology_compare(K: SimplicialComplex, n: int, k: int, lattice: Lattice = Lattice(1)) -> CohomologyComparison:
    """Raises ``ValueError`` for ``k = n``: that group is not finitely generated."""
    if k == n:
        raise ValueError("k = n is the differential cohomology group itself; use characters")
    return CohomologyComparison(K, n, k, lattice)


# ---------------------------------------------------------------------------
# Change of coefficients and exact sequences


def change_coefficients(x: DiffCochain, target: Lattice) -> DiffCochain:
    """Re-tag ``c`` from ``Λ₁`` into ``Λ₂ ⊇ Λ₁``.

    Raises:
        ValueError: if the lattices are not nested.
    """
    if not x.lattice.is_sublattice_of(target):
        raise ValueError(f"{x.lattice}Z is not contained in {target}Z")
    return DiffCochain(x.n, x.k, x.c.retag("L", target), x.h, x.omega, target)


def flat_character(u: Cochain, lattice: Lattice, k: int | None = None) -> DiffCochain:
    """``H^{k-1}(V/Λ) → Ȟᵏ``: a ``V/Λ`` cocycle ``u`` goes to ``(−δu, u, 0)``."""
    k = u.degree + 1 if k is None else k
    ut = u.retag("V")
    c = -coboundary(ut)
    if not all(lattice.contains(v) for v in c.values):
        raise ValueError("input is not a V/Λ cocycle")
    return DiffCochain(k, k, c.retag("L", lattice), ut, None, lattice)


def flat_preimage(x: DiffCochain) -> tuple[Cochain, DiffMorphism]:
    """For a flat cocycle: ``u ∈ H^{k-1}(V/Λ)`` and ``y`` with ``dy = x − flat_character(u)``.

    ``u`` is ``h`` reduced into ``[0, α)``; the reduction ``ũ − h`` is
    Λ-valued and ``y = (ũ − h, 0)`` absorbs it.

    Raises:
        ValueError: if the curvature is nonzero.
    """
    _require_cocycle(x)
    if not x.form().is_zero():
        raise ValueError("curvature is nonzero; x is not in the image of H^{k-1}(V/Λ)")
    u = x.h.retag("V/L", x.lattice)
    shift = (u.retag("V") - x.h).retag("L", x.lattice)
    y = DiffCochain(x.n, x.k - 1, shift, Cochain.zero(x.complex, x.k - 2), None, x.lattice)
    assert differential(y) == x - flat_character(u, x.lattice, x.k)
    return u, y


def character_with_curvature(omega: Cochain, lattice: Lattice) -> DiffCochain:
    """A cocycle with curvature ``ω`` (closed, Λ-periods): ``(c, h, ω)`` with ``δh = ω − c``.

    Raises:
        ValueError: if ``ω`` is not closed or has a period outside Λ.
    """
    K, k = omega.complex, omega.degree
    if not coboundary(omega).is_zero():
        raise ValueError("form is not closed")
    periods = K.homology_basis(k).periods(omega)
    c = integral_cocycle_with_periods(K, k, periods, lattice)
    h = solve_rational_coboundary(omega - c.retag("V"))
    return DiffCochain(k, k, c, h, omega, lattice)


def form_character(eta: Cochain, lattice: Lattice) -> DiffCochain:
    """``Ω^{k-1}/Ω^{k-1}_Λ → Ȟᵏ``: ``η ↦ (0, η, δη)``."""
    K, k = eta.complex, eta.degree + 1
    return DiffCochain(k, k, Cochain.zero(K, k, "L", lattice), eta.retag("V"), coboundary(eta.retag("V")), lattice)


def topological_preimage(x: DiffCochain) -> tuple[Cochain, DiffMorphism]:
    """For ``[c] = 0``: a form ``η`` and a morphism ``y`` with ``dy = x − form_character(η)``.

    Raises:
        NoSolution: if the characteristic class is nonzero.
    """
    _require_cocycle(x)
    b = solve_lattice_coboundary(x.c, x.lattice)
    eta = x.h + b.retag("V")
    y = DiffCochain(x.n, x.k - 1, b, Cochain.zero(x.complex, x.k - 2), None, x.lattice)
    assert differential(y) == x - form_character(eta, x.lattice)
    return eta, y


def class_preimage(c: Cochain, lattice: Lattice) -> DiffCochain:
    """A cocycle with characteristic cocycle ``c``: ``(c, 0, c)``."""
    K, k = c.complex, c.degree
    return DiffCochain(k, k, c.retag("L", lattice), Cochain.zero(K, k - 1), c.retag("V"), lattice)


def rational_flat(u: Cochain, lattice: Lattice) -> DiffCochain:
    """``H^{k-1}(V)_Λ → Ȟᵏ(V; 0)``: a rational cocycle ``u`` with Λ-periods goes to ``(0, u, 0)``."""
    K, k = u.complex, u.degree + 1
    if not coboundary(u.retag("V")).is_zero():
        raise ValueError("input is not closed")
    if not all(lattice.contains(p) for p in K.homology_basis(u.degree).periods(u)):
        raise ValueError(f"input has a period outside {lattice}Z")
    zero = Lattice(0)
    return DiffCochain(k, k, Cochain.zero(K, k, "L", zero), u.retag("V"), Cochain.zero(K, k), zero)


def lift_to_zero_lattice(x: DiffCochain) -> tuple[DiffCochain, DiffMorphism]:
    """For ``[c] = 0``: ``x₀ ∈ Ȟᵏ(V; 0)`` and ``y`` with ``dy = x − ǐ(x₀)``.

    Raises:
        NoSolution: if the characteristic class is nonzero.
    """
    _require_cocycle(x)
    b = solve_lattice_coboundary(x.c, x.lattice)
    zero = Lattice(0)
    K = x.complex
    x0 = DiffCochain(x.n, x.k, Cochain.zero(K, x.k, "L", zero), x.h + b.retag("V"), x.omega, zero)
    y = DiffCochain(x.n, x.k - 1, b, Cochain.zero(K, x.k - 2), None, x.lattice)
    assert differential(y) == x - change_coefficients(x0, x.lattice)
    return x0, y


def lattice_change_preimage(x0: DiffCochain, lattice: Lattice) -> Cochain:
    """For ``x₀ ∈ Ȟᵏ(V; 0)`` with ``ǐ(x₀) ~ 0`` in Λ: the rational cocycle ``u`` with ``rational_flat(u) = x₀``.

    Raises:
        ValueError: if ``ǐ(x₀)`` is not trivial.
    """
    if not x0.lattice.is_zero:
        raise ValueError("expected a cocycle with zero lattice")
    image = change_coefficients(x0, lattice)
    if are_equivalent(image, DiffCochain.zero(x0.complex, x0.n, x0.k, lattice)) is None:
        raise ValueError("element is not in the kernel of the change of coefficients")
    return x0.h
