"""Finite ordered simplicial complexes, chains, cochains and their (co)homology.

Simplices are ascending vertex tuples and that order is their orientation.
The coboundary carries no sign: ``⟨δc, w⟩ = ⟨c, ∂w⟩``.

Cohomology with ``V = ℚ`` or ``V/Λ`` coefficients is presented through
evaluation on homology generators.  Both coefficient groups are divisible,
so ``Hᵏ(K; G) ≅ Hom(H_k(K), G)`` and a class is determined by its values on
the generators of ``H_k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .exactalg import (
    AbelianGroupPresentation,
    Matrix,
    NoSolution,
    RationalSolver,
    integer_kernel,
    quotient_presentation,
    smith_normal_form,
    solve_integer,
)

Simplex = tuple[int, ...]


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"n"`` or an int; decimals are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Lattices


@dataclass(frozen=True)
class Lattice:
    """The subgroup ``Λ = αℤ`` of ``V = ℚ``; ``α = 0`` encodes ``Λ = 0``."""

    alpha: Fraction = Fraction(1)

    def __post_init__(self):
        a = parse_rational(self.alpha)
        if a < 0:
            raise ValueError("lattice generator must be non-negative")
        object.__setattr__(self, "alpha", a)

    @classmethod
    def parse(cls, text) -> "Lattice":
        return cls(parse_rational(text))

    def __str__(self) -> str:
        return format_rational(self.alpha)

    @property
    def is_zero(self) -> bool:
        return self.alpha == 0

    def contains(self, v) -> bool:
        if self.alpha == 0:
            return v == 0
        return (Fraction(v) / self.alpha).denominator == 1

    def reduce(self, v) -> Fraction:
        """Canonical representative of ``v mod Λ`` in ``[0, α)``."""
        v = Fraction(v)
        if self.alpha == 0:
            return v
        return v - self.alpha * ((v / self.alpha).__floor__())

    def to_integer(self, v) -> int:
        """``v / α`` for ``v ∈ Λ``."""
        if not self.contains(v):
            raise ValueError(f"{v} is not in {self.alpha}Z")
        return 0 if self.alpha == 0 else int(Fraction(v) / self.alpha)

    def __mul__(self, other: "Lattice") -> "Lattice":
        return Lattice(self.alpha * other.alpha)

    def is_sublattice_of(self, other: "Lattice") -> bool:
        return other.contains(self.alpha)


# ---------------------------------------------------------------------------
# Complexes


class SimplicialComplex:
    """A finite simplicial complex with ordered vertices.

    Built from any collection of simplices; faces are completed
    automatically.  Simplices of each degree are stored in lexicographic
    order, which fixes the basis of every chain and cochain group.
    """

    def __init__(self, simplices: Iterable[Iterable[int]], name: str = ""):
        self.name = name
        faces: set[Simplex] = set()
        for s in simplices:
            s = tuple(s)
            if not s:
                continue
            if len(set(s)) != len(s):
                raise ValueError(f"simplex {list(s)} repeats a vertex")
            if any((not isinstance(v, int)) or v < 0 for v in s):
                raise ValueError(f"simplex {list(s)} has a non-integer or negative vertex")
            s = tuple(sorted(s))
            for r in range(1, len(s) + 1):
                faces.update(itertools.combinations(s, r))
        by_dim: dict[int, list[Simplex]] = {}
        for f in faces:
            by_dim.setdefault(len(f) - 1, []).append(f)
        self.dim = max(by_dim, default=-1)
        self._simplices = tuple(tuple(sorted(by_dim.get(k, ()))) for k in range(self.dim + 1))
        self._index = tuple({s: i for i, s in enumerate(ss)} for ss in self._simplices)
        self._key = self._simplices
        self._hash = hash(self._key)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and (
            self is other or self._key == other._key)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        counts = ", ".join(str(len(s)) for s in self._simplices)
        return f"SimplicialComplex({self.name or '?'}, f=({counts}))"

    def simplices(self, k: int) -> tuple[Simplex, ...]:
        if 0 <= k <= self.dim:
            return self._simplices[k]
        return ()

    def count(self, k: int) -> int:
        return len(self.simplices(k))

    def index(self, simplex: Sequence[int]) -> int:
        s = tuple(simplex)
        k = len(s) - 1
        try:
            return self._index[k][s]
        except (IndexError, KeyError):
            raise KeyError(f"{list(s)} is not a simplex of {self.name or 'the complex'}") from None

    def __contains__(self, simplex) -> bool:
        s = tuple(simplex)
        return 0 < len(s) <= self.dim + 1 and s in self._index[len(s) - 1]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.simplices(0))

    @property
    def size(self) -> int:
        return sum(len(s) for s in self._simplices)

    # -- operators -----------------------------------------------------------

    @cached_property
    def _boundaries(self) -> dict[int, Matrix]:
        return {}

    def boundary_matrix(self, k: int) -> Matrix:
        """``∂_k : C_k → C_{k-1}`` as an ``n_{k-1} × n_k`` matrix."""
        cache = self._boundaries
        if k not in cache:
            rows, cols = self.count(k - 1), self.count(k)
            entries = {}
            if k >= 1:
                for j, s in enumerate(self.simplices(k)):
                    for i in range(len(s)):
                        face = s[:i] + s[i + 1:]
                        entries[(self._index[k - 1][face], j)] = (-1) ** i
            cache[k] = Matrix(rows, cols, entries)
        return cache[k]

    def coboundary_matrix(self, k: int) -> Matrix:
        """``δ_k : C^k → C^{k+1}``, the transpose of ``∂_{k+1}``."""
        return self._cached(("cob", k), lambda: self.boundary_matrix(k + 1).T)

    # -- cached exact-algebra data ------------------------------------------

    @cached_property
    def _cache(self) -> dict:
        return {}

    def _cached(self, key, build):
        cache = self._cache
        if key not in cache:
            cache[key] = build()
        return cache[key]

    def coboundary_snf(self, k: int):
        return self._cached(("snf-cob", k), lambda: smith_normal_form(self.coboundary_matrix(k)))

    def coboundary_solver(self, k: int) -> RationalSolver:
        return self._cached(("rat-cob", k), lambda: RationalSolver(self.coboundary_matrix(k)))

    def homology_basis(self, k: int) -> "HomologyBasis":
        return self._cached(("hb", k), lambda: HomologyBasis(self, k))


# ---------------------------------------------------------------------------
# Chains and cochains


@dataclass(frozen=True, eq=False)
class Chain:
    """An integer combination of oriented k-simplices."""

    complex: SimplicialComplex
    degree: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.complex.count(self.degree):
            raise ValueError("coefficient vector does not match the simplex count")

    @classmethod
    def from_dict(cls, K: SimplicialComplex, degree: int, terms: Mapping[Sequence[int], int]) -> "Chain":
        coeffs = [0] * K.count(degree)
        for s, v in terms.items():
            if len(s) != degree + 1:
                raise ValueError(f"{list(s)} is not a {degree}-simplex")
            coeffs[K.index(s)] += int(v)
        return cls(K, degree, tuple(coeffs))

    @classmethod
    def zero(cls, K: SimplicialComplex, degree: int) -> "Chain":
        return cls(K, degree, (0,) * K.count(degree))

    def as_dict(self) -> dict[Simplex, int]:
        return {s: v for s, v in zip(self.complex.simplices(self.degree), self.coefficients) if v}

    def __eq__(self, other) -> bool:
        return (isinstance(other, Chain) and self.degree == other.degree
                and self.complex == other.complex and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash((self.degree, self.coefficients))

    def __add__(self, other: "Chain") -> "Chain":
        _check_same(self, other)
        return Chain(self.complex, self.degree, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "Chain":
        return Chain(self.complex, self.degree, tuple(-a for a in self.coefficients))

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __rmul__(self, n: int) -> "Chain":
        return Chain(self.complex, self.degree, tuple(n * a for a in self.coefficients))

    def is_zero(self) -> bool:
        return not any(self.coefficients)


COEFFICIENT_TAGS = ("V", "L", "V/L")


@dataclass(frozen=True, eq=False)
class Cochain:
    """A degree-k cochain with exact rational values, one per k-simplex.

    ``coefficients`` is ``"V"`` (ℚ), ``"L"`` (values in the lattice) or
    ``"V/L"`` (values stored as representatives in ``[0, α)``).
    Equality compares values only.
    """

    complex: SimplicialComplex
    degree: int
    values: tuple[Fraction, ...]
    coefficients: str = "V"
    lattice: Lattice = Lattice(1)

    def __post_init__(self):
        if self.coefficients not in COEFFICIENT_TAGS:
            raise ValueError(f"unknown coefficient tag {self.coefficients!r}")
        if len(self.values) != self.complex.count(self.degree):
            raise ValueError(
                f"{len(self.values)} values for {self.complex.count(self.degree)} "
                f"{self.degree}-simplices")
        vals = tuple(Fraction(v) for v in self.values)
        if self.coefficients == "L" and not all(self.lattice.contains(v) for v in vals):
            raise ValueError(f"cochain values are not in the lattice {self.lattice}Z")
        if self.coefficients == "V/L":
            vals = tuple(self.lattice.reduce(v) for v in vals)
        object.__setattr__(self, "values", vals)

    @classmethod
    def zero(cls, K: SimplicialComplex, degree: int, coefficients: str = "V",
             lattice: Lattice = Lattice(1)) -> "Cochain":
        return cls(K, degree, (Fraction(0),) * K.count(degree), coefficients, lattice)

    @classmethod
    def from_dict(cls, K: SimplicialComplex, degree: int, values: Mapping[Sequence[int], object],
                  coefficients: str = "V", lattice: Lattice = Lattice(1)) -> "Cochain":
        vals = [Fraction(0)] * K.count(degree)
        for s, v in values.items():
            if len(s) != degree + 1:
                raise ValueError(f"{list(s)} is not a {degree}-simplex")
            vals[K.index(s)] = parse_rational(v)
        return cls(K, degree, tuple(vals), coefficients, lattice)

    @classmethod
    def indicator(cls, K: SimplicialComplex, simplex: Sequence[int], value=1, **kw) -> "Cochain":
        return cls.from_dict(K, len(simplex) - 1, {tuple(simplex): value}, **kw)

    def as_dict(self) -> dict[Simplex, Fraction]:
        return {s: v for s, v in zip(self.complex.simplices(self.degree), self.values) if v}

    def __getitem__(self, simplex: Sequence[int]) -> Fraction:
        return self.values[self.complex.index(simplex)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cochain) and self.degree == other.degree
                and self.complex == other.complex and self.values == other.values)

    def __hash__(self):
        return hash((self.degree, self.values))

    def __repr__(self) -> str:
        body = ", ".join(f"{list(s)}: {format_rational(v)}" for s, v in self.as_dict().items())
        return f"Cochain(deg={self.degree}, {self.coefficients}, {{{body}}})"

    def retag(self, coefficients: str, lattice: Lattice | None = None) -> "Cochain":
        return Cochain(self.complex, self.degree, self.values, coefficients,
                       self.lattice if lattice is None else lattice)

    def _combine_tag(self, other: "Cochain") -> tuple[str, Lattice]:
        if self.coefficients == other.coefficients and self.lattice == other.lattice:
            return self.coefficients, self.lattice
        return "V", self.lattice

    def __add__(self, other: "Cochain") -> "Cochain":
        _check_same(self, other)
        tag, lat = self._combine_tag(other)
        return Cochain(self.complex, self.degree,
                       tuple(a + b for a, b in zip(self.values, other.values)), tag, lat)

    def __neg__(self) -> "Cochain":
        return Cochain(self.complex, self.degree, tuple(-a for a in self.values),
                       self.coefficients, self.lattice)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __rmul__(self, q) -> "Cochain":
        q = Fraction(q)
        tag = self.coefficients if (q.denominator == 1 and self.coefficients == "L") else "V"
        return Cochain(self.complex, self.degree, tuple(q * a for a in self.values), tag, self.lattice)

    def __call__(self, chain: Chain) -> Fraction:
        return pair(self, chain)

    def is_zero(self) -> bool:
        return not any(self.values)


def _check_same(a, b):
    if a.complex != b.complex:
        raise ValueError("operands live on different complexes")
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")


def pair(c: Cochain, z: Chain) -> Fraction:
    """The evaluation ``⟨c, z⟩``."""
    _check_same(c, z)
    return sum((v * n for v, n in zip(c.values, z.coefficients) if n), Fraction(0))


def boundary(z: Chain) -> Chain:
    coeffs = z.complex.boundary_matrix(z.degree).matvec(list(z.coefficients))
    return Chain(z.complex, z.degree - 1, tuple(coeffs))


def coboundary(c: Cochain) -> Cochain:
    """``δc`` with ``⟨δc, w⟩ = ⟨c, ∂w⟩``; Λ-cochains stay Λ-valued."""
    vals = c.complex.coboundary_matrix(c.degree).matvec(list(c.values))
    tag = "V" if c.coefficients == "V/L" else c.coefficients
    return Cochain(c.complex, c.degree + 1, tuple(Fraction(v) for v in vals), tag, c.lattice)


def is_cocycle(c: Cochain) -> bool:
    d = coboundary(c)
    if c.coefficients == "V/L":
        return all(c.lattice.contains(v) for v in d.values)
    return d.is_zero()


# ---------------------------------------------------------------------------
# Homology generators and the duality with cochains


class HomologyBasis:
    """Integral generators of ``H_k(K)`` and dual cochains.

    From the Smith form ``∂_{k+1} = U·D·W`` the columns ``uᵢ`` of ``U`` with
    ``dᵢ > 1`` are torsion cycles of order ``dᵢ``; free cycles ``z_j`` span
    the kernel of ``∂_k`` on the remaining columns.  Rows of ``U⁻¹`` give
    integer cochains ``φᵢ`` with ``⟨φᵢ, u_l⟩ = δᵢₗ``, and ``ψ_j`` are integer
    cocycles with ``⟨ψ_j, z_l⟩ = δ_jl``.
    """

    def __init__(self, K: SimplicialComplex, k: int):
        self.complex = K
        self.degree = k
        n = K.count(k)
        self.size = n
        snf = smith_normal_form(K.boundary_matrix(k + 1))
        self._snf = snf
        r = snf.rank
        self._r = r
        self.torsion_index = tuple(i for i in range(r) if snf.diagonal[i] > 1)
        self.torsion_orders = tuple(snf.diagonal[i] for i in self.torsion_index)
        self.torsion_cycles = tuple(tuple(snf.U.column(i)) for i in self.torsion_index)
        # ∂(Q eᵢ) = dᵢ uᵢ
        self.torsion_fillings = tuple(tuple(snf.Q.column(i)) for i in self.torsion_index)

        rest = [snf.U.column(j) for j in range(r, n)]
        M = K.boundary_matrix(k) @ Matrix.from_columns(rest, n) if rest else Matrix(K.count(k - 1), 0)
        snf_m = smith_normal_form(M)
        self._snf_m = snf_m
        kappa = integer_kernel(M, snf_m)
        cycles = [[sum(kj * col[t] for kj, col in zip(kv, rest)) for t in range(n)] for kv in kappa]
        # orient each free cycle so that its first nonzero coefficient is positive
        self._free_signs = tuple(1 if next(v for v in z if v) > 0 else -1 for z in cycles)
        self.free_cycles = tuple(tuple(e * v for v in z) for e, z in zip(self._free_signs, cycles))

    @property
    def free_rank(self) -> int:
        return len(self.free_cycles)

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        """Torsion generators first, then free ones."""
        return self.torsion_cycles + self.free_cycles

    def coordinates(self, z: Sequence[int]) -> tuple[int, ...]:
        z = list(z)
        if any(self.complex.boundary_matrix(self.degree).matvec(z)):
            raise ValueError("chain is not a cycle")
        a = self._snf.P.matvec(z)
        tors = tuple(a[i] % d for i, d in zip(self.torsion_index, self.torsion_orders))
        # the free basis is Q_M[:, rank:], so its coordinates are W_M·a
        b = self._snf_m.W.matvec(a[self._r:])
        free = tuple(e * v for e, v in zip(self._free_signs, b[self._snf_m.rank:]))
        return tors + free

    def torsion_dual(self, i: int) -> tuple[int, ...]:
        """``φ`` for the i-th torsion generator."""
        row = self.torsion_index[i]
        return tuple(self._snf.P[(row, j)] for j in range(self.size))

    @cached_property
    def free_duals(self) -> tuple[tuple[int, ...], ...]:
        K, k, n = self.complex, self.degree, self.size
        A = K.coboundary_matrix(k).stack(Matrix.from_dense(self.free_cycles, n)) \
            if self.free_cycles else K.coboundary_matrix(k)
        snf = smith_normal_form(A)
        rows_cob = K.count(k + 1)
        out = []
        for j in range(self.free_rank):
            rhs = [0] * rows_cob + [int(l == j) for l in range(self.free_rank)]
            out.append(tuple(solve_integer(A, rhs, snf)))
        return tuple(out)

    def periods(self, c: Cochain) -> tuple[Fraction, ...]:
        return tuple(sum((v * n for v, n in zip(c.values, z) if n), Fraction(0))
                     for z in self.free_cycles)

    def torsion_values(self, c: Cochain) -> tuple[Fraction, ...]:
        return tuple(sum((v * n for v, n in zip(c.values, z) if n), Fraction(0))
                     for z in self.torsion_cycles)


def homology(K: SimplicialComplex, k: int) -> AbelianGroupPresentation:
    """``H_k(K; ℤ)`` with cycle representatives."""
    hb = K.homology_basis(k)
    return AbelianGroupPresentation(
        free_rank=hb.free_rank, torsion=hb.torsion_orders, generators=hb.generators,
        coordinate_map=lambda z: hb.coordinates(z.coefficients if isinstance(z, Chain) else z),
        name=f"H_{k}({K.name})",
    )


def betti(K: SimplicialComplex, k: int) -> int:
    return K.homology_basis(k).free_rank


@dataclass(frozen=True, eq=False)
class DivisibleCohomology:
    """``Hᵏ(K; V)`` or ``Hᵏ(K; V/Λ)``, coordinatized by values on homology generators.

    For ``V/Λ`` the coordinates are the values on the torsion generators of
    ``H_k`` (each in ``(α/d)ℤ/αℤ``) followed by the values on the free ones,
    all reduced to ``[0, α)``.  For ``V`` only the free periods appear.
    """

    complex: SimplicialComplex
    degree: int
    coefficients: str
    lattice: Lattice

    @property
    def basis(self) -> HomologyBasis:
        return self.complex.homology_basis(self.degree)

    @property
    def free_rank(self) -> int:
        return self.basis.free_rank

    @property
    def torsion(self) -> tuple[int, ...]:
        if self.coefficients == "V" or self.lattice.is_zero:
            return ()
        return self.basis.torsion_orders

    def coordinates(self, c: Cochain) -> tuple[Fraction, ...]:
        if c.degree != self.degree:
            raise ValueError(f"expected a degree-{self.degree} cochain")
        if self.coefficients == "V":
            if not coboundary(c).is_zero():
                raise ValueError("cochain is not a cocycle")
            return self.basis.periods(c)
        if not all(self.lattice.contains(v) for v in coboundary(c).values):
            raise ValueError("cochain is not a V/Λ cocycle")
        vals = self.basis.torsion_values(c) + self.basis.periods(c)
        if self.lattice.is_zero:
            vals = self.basis.periods(c)
        return tuple(self.lattice.reduce(v) for v in vals)

    def is_zero(self, c: Cochain) -> bool:
        return not any(self.coordinates(c))

    def representative(self, torsion_multiples: Sequence[int] = (), free_values: Sequence = ()) -> Cochain:
        """A cocycle with prescribed coordinates.

        ``torsion_multiples[i] = m`` asks for value ``m·α/dᵢ`` on the i-th
        torsion generator; ``free_values[j]`` is the value on ``z_j``.
        """
        hb = self.basis
        n = hb.size
        vals = [Fraction(0)] * n
        if self.coefficients == "V/L" and not self.lattice.is_zero:
            for i, m in enumerate(torsion_multiples):
                if m:
                    phi = hb.torsion_dual(i)
                    f = Fraction(m) * self.lattice.alpha / hb.torsion_orders[i]
                    for t in range(n):
                        vals[t] += f * phi[t]
        for j, t in enumerate(free_values):
            t = Fraction(t)
            if t:
                psi = hb.free_duals[j]
                for s in range(n):
                    vals[s] += t * psi[s]
        return Cochain(self.complex, self.degree, tuple(vals), "V", self.lattice)

    def invariants(self) -> dict:
        return {"coefficients": self.coefficients, "lattice": str(self.lattice),
                "free_rank": self.free_rank, "torsion": list(self.torsion)}


def cohomology(K: SimplicialComplex, k: int, coefficients: str = "L",
               lattice: Lattice = Lattice(1)):
    """``Hᵏ(K; Λ)``, ``Hᵏ(K; V)`` or ``Hᵏ(K; V/Λ)``.

    Integral coefficients give an :class:`AbelianGroupPresentation` whose
    coordinate map accepts Λ-valued cocycles.

    Raises:
        ValueError: if ``k`` is outside ``[0, dim K]``.
    """
    if not 0 <= k <= max(K.dim, 0):
        raise ValueError(f"degree {k} outside [0, {K.dim}]")
    if coefficients in ("V", "V/L"):
        return DivisibleCohomology(K, k, coefficients, lattice)
    if coefficients != "L":
        raise ValueError(f"unknown coefficients {coefficients!r}")
    return _integral_cohomology(K, k, lattice)


def _integral_cohomology(K: SimplicialComplex, k: int, lattice: Lattice) -> AbelianGroupPresentation:
    def build():
        n = K.count(k)
        Z = integer_kernel(K.coboundary_matrix(k), K.coboundary_snf(k))
        B = [K.coboundary_matrix(k - 1).column(j) for j in range(K.count(k - 1))]
        return quotient_presentation(Z, B, ambient_dim=n, name=f"H^{k}({K.name};Z)")

    base = K._cached(("H^k(Z)", k), build)
    name = f"H^{k}({K.name};{lattice}Z)"
    if lattice.is_zero:
        return AbelianGroupPresentation(0, (), (), lambda c: (), name=name)

    hb = K.homology_basis(k)
    ntor = len(base.torsion)
    # free coordinates are the periods on the oriented free cycles; the
    # torsion coordinates are taken relative to the integral duals ψ_j
    dual_tors = [base.coordinates(list(psi))[:ntor] for psi in hb.free_duals]

    def coords(c):
        values = c.values if isinstance(c, Cochain) else c
        ints = [lattice.to_integer(v) for v in values]
        if any(K.coboundary_matrix(k).matvec(ints)):
            raise ValueError("cochain is not a cocycle")
        t = base.coordinates(ints)[:ntor]
        p = [sum(v * m for v, m in zip(ints, z)) for z in hb.free_cycles]
        t = tuple((ti - sum(pj * dt[i] for pj, dt in zip(p, dual_tors))) % d
                  for i, (ti, d) in enumerate(zip(t, base.torsion)))
        return t + tuple(p)

    basis = tuple(base.generators[:ntor]) + tuple(hb.free_duals)
    gens = tuple(tuple(lattice.alpha * g for g in gen) for gen in basis)
    return AbelianGroupPresentation(base.free_rank, base.torsion, gens, coords, name=name)


def integral_class(c: Cochain, lattice: Lattice | None = None) -> tuple[int, ...]:
    """Coordinates of a Λ-cocycle in ``Hᵏ(K; Λ)``."""
    lat = c.lattice if lattice is None else lattice
    if not 0 <= c.degree <= c.complex.dim:
        return ()
    return cohomology(c.complex, c.degree, "L", lat).coordinates(c)


def bockstein(u: Cochain, lattice: Lattice | None = None) -> tuple[int, ...]:
    """``β[u]``: lift ``u`` to ``V``, take ``δ``, return its class in ``H^{k+1}(Λ)``.

    Raises:
        ValueError: if ``u`` is not a ``V/Λ`` cocycle or Λ is zero.
    """
    lat = u.lattice if lattice is None else lattice
    if lat.is_zero:
        raise ValueError("the Bockstein needs a nonzero lattice")
    d = coboundary(u.retag("V"))
    if not all(lat.contains(v) for v in d.values):
        raise ValueError("input is not a V/Λ cocycle")
    K = u.complex
    if u.degree + 1 > K.dim:
        return ()
    return integral_class(d.retag("L", lat), lat)


def periods_in_lattice(omega: Cochain, lattice: Lattice) -> bool:
    """True iff the closed cochain ``ω`` has all its periods in Λ.

    Raises:
        ValueError: if ``ω`` is not closed.
    """
    if not coboundary(omega).is_zero():
        raise ValueError("cochain is not closed")
    hb = omega.complex.homology_basis(omega.degree)
    return all(lattice.contains(p) for p in hb.periods(omega))


def hom_to_lattice(K: SimplicialComplex, k: int, lattice: Lattice) -> AbelianGroupPresentation:
    """``Hom(H_k(K), Λ)``, realized inside ``Hᵏ(K; V)`` by period coordinates.

    Generators are the Λ-valued cocycles ``α·ψ_j``; the coordinate map sends
    a closed cochain with Λ-periods to its periods divided by ``α``.
    """
    hb = K.homology_basis(k)
    if lattice.is_zero:
        return AbelianGroupPresentation(0, (), (), lambda c: (), name=f"Hom(H_{k},0)")

    def coords(c: Cochain):
        return tuple(lattice.to_integer(p) for p in hb.periods(c))

    gens = tuple(tuple(lattice.alpha * v for v in psi) for psi in hb.free_duals)
    return AbelianGroupPresentation(hb.free_rank, (), gens, coords, name=f"Hom(H_{k}({K.name}),{lattice}Z)")


def integral_cocycle_with_periods(K: SimplicialComplex, k: int, periods: Sequence, lattice: Lattice) -> Cochain:
    """A Λ-valued cocycle with the given periods on the free generators of ``H_k``."""
    hb = K.homology_basis(k)
    vals = [Fraction(0)] * hb.size
    for p, psi in zip(periods, hb.free_duals):
        if not lattice.contains(p):
            raise ValueError(f"period {p} is not in {lattice}Z")
        if p:
            for s in range(hb.size):
                vals[s] += Fraction(p) * psi[s]
    return Cochain(K, k, tuple(vals), "L", lattice)


def solve_lattice_coboundary(c: Cochain, lattice: Lattice) -> Cochain:
    """A Λ-cochain ``b`` with ``δb = c``.

    Raises:
        NoSolution: if ``[c] ≠ 0`` in ``Hᵏ(Λ)`` (or ``c`` is not Λ-valued).
    """
    K, k = c.complex, c.degree
    if k - 1 < 0 or K.count(k - 1) == 0:
        if c.is_zero():
            return Cochain.zero(K, k - 1, "L", lattice)
        raise NoSolution(0, 0, 1)
    if lattice.is_zero:
        if c.is_zero():
            return Cochain.zero(K, k - 1, "L", lattice)
        raise NoSolution(0, 0, 1)
    if not all(lattice.contains(v) for v in c.values):
        raise NoSolution(0, 0, 1)
    ints = [lattice.to_integer(v) for v in c.values]
    x = solve_integer(K.coboundary_matrix(k - 1), ints, K.coboundary_snf(k - 1))
    return Cochain(K, k - 1, tuple(lattice.alpha * v for v in x), "L", lattice)


def solve_rational_coboundary(g: Cochain) -> Cochain:
    """A V-cochain ``v`` with ``δv = g``.

    Raises:
        NoSolution: if ``g`` is not exact over ℚ.
    """
    K, k = g.complex, g.degree
    if k - 1 < 0:
        if g.is_zero():
            return Cochain.zero(K, k - 1)
        raise NoSolution(0, 0, 1)
    x = K.coboundary_solver(k - 1).solve(list(g.values))
    return Cochain(K, k - 1, tuple(x))


def split_lattice_exact(g: Cochain, lattice: Lattice) -> tuple[Cochain, Cochain]:
    """Write ``g = b + δv`` with ``b`` Λ-valued and ``v`` rational.

    Possible exactly when ``g`` is a ``V/Λ`` cocycle whose class vanishes,
    i.e. ``δg`` is Λ-valued and every cycle value of ``g`` lies in Λ.

    Raises:
        NoSolution: when ``g`` has a nonzero ``V/Λ`` class.
    """
    K, k = g.complex, g.degree
    dg = coboundary(g.retag("V")).retag("V")
    if not all(lattice.contains(v) for v in dg.values):
        raise NoSolution(0, 0, 1)
    a = solve_lattice_coboundary(dg.retag("L", lattice) if not lattice.is_zero else dg, lattice)
    rest = g.retag("V") - a.retag("V")
    hb = K.homology_basis(k)
    periods = hb.periods(rest)
    if not all(lattice.contains(p) for p in periods):
        raise NoSolution(0, 0, 1)
    gamma = integral_cocycle_with_periods(K, k, periods, lattice)
    v = solve_rational_coboundary(rest - gamma.retag("V"))
    b = (a.retag("V") + gamma.retag("V")).retag("L", lattice)
    return b, v


def integral_period_comparison(K: SimplicialComplex, k: int) -> dict:
    """Compare ``Hᵏ(K; ℚ)_ℤ`` with ``Hom(H_k(K), ℤ)`` through period coordinates.

    The rational classes with integer periods are coordinatized by their
    periods; ``Hom(H_k, ℤ)`` is spanned by the duals ``ψ_j``.  The map is a
    bijection when each ``ψ_j`` has period vector ``e_j`` and both sides have
    the rank of ``H_k``.  The image of ``Hᵏ(K; ℤ)`` is recorded too: it is
    all of ``Hom(H_k, ℤ)``, and ``Hᵏ(ℤ) → Hom`` is injective exactly when
    ``Hᵏ(ℤ)`` is torsion free.
    """
    hb = K.homology_basis(k)
    Hq = DivisibleCohomology(K, k, "V", Lattice(1))
    hom = hom_to_lattice(K, k, Lattice(1))
    dual_ok = all(
        hb.periods(Cochain(K, k, psi)) == tuple(Fraction(int(i == j)) for i in range(hb.free_rank))
        and coboundary(Cochain(K, k, psi)).is_zero()
        for j, psi in enumerate(hb.free_duals))
    Hz = cohomology(K, k, "L", Lattice(1))
    image = [hb.periods(Cochain(K, k, g)) for g in Hz.generators]
    free_images = image[len(Hz.torsion):]
    torsion_images = image[:len(Hz.torsion)]
    surjective = all(p == tuple(Fraction(int(i == j)) for i in range(hb.free_rank))
                     for j, p in enumerate(free_images))
    return {
        "complex": K.name,
        "degree": k,
        "rank_rational": Hq.free_rank,
        "rank_hom": hom.free_rank,
        "duals_are_dual": dual_ok,
        "bijection": dual_ok and Hq.free_rank == hom.free_rank == hb.free_rank,
        "integral_image_is_everything": surjective,
        "torsion_dies": all(not any(p) for p in torsion_images),
        "integral_map_injective": not Hz.torsion,
    }
