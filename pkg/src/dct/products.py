"""Cup products, the product of differential cochains, and fibre integration.

Wedge products of discrete forms are taken to be cup products, so the chain
homotopy between them is zero and::

    x₁·x₂ = (c₁∪c₂, (−1)^{k₁} c₁∪h₂ + h₁∪ω₂, ω₁∪ω₂).

Fibre integration is restricted to products ``B × F`` with ``F`` closed and
oriented.  It is the slant product against the Eilenberg–Zilber cross chain
``β × [F]``, taken with sign +1 on every component, which makes it commute
with ``δ`` and with ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .diffcochain import DiffCochain, differential, is_cocycle
from .simplicial import Chain, Cochain, Lattice, SimplicialComplex
from .trivialization import Trivialization


def cup(a: Cochain, b: Cochain) -> Cochain:
    """Alexander–Whitney: ``(a∪b)[v₀…v_{p+q}] = a[v₀…v_p]·b[v_p…v_{p+q}]``.

    Raises:
        ValueError: if the cochains live on different complexes.
    """
    if a.complex != b.complex:
        raise ValueError("cup product of cochains on different complexes")
    K, p, q = a.complex, a.degree, b.degree
    if p < 0 or q < 0:
        return Cochain.zero(K, p + q)
    vals = []
    for s in K.simplices(p + q):
        x = a.values[K.index(s[:p + 1])]
        vals.append(x * b.values[K.index(s[p:])] if x else Fraction(0))
    return Cochain(K, p + q, tuple(vals))


def unit(K: SimplicialComplex) -> Cochain:
    """The constant 0-cochain 1."""
    return Cochain(K, 0, (Fraction(1),) * K.count(0))


def diff_product(x1: DiffCochain, x2: DiffCochain, lattice: Lattice | None = None) -> DiffCochain:
    """``x₁·x₂ ∈ Č(n₁+n₂)^{k₁+k₂}`` with lattice ``Λ₁Λ₂`` (or a declared coarser target).

    Raises:
        ValueError: on complex mismatch, or if ``Λ₁Λ₂`` is not inside ``lattice``.
    """
    if x1.complex != x2.complex:
        raise ValueError("product of differential cochains on different complexes")
    target = x1.lattice * x2.lattice
    if lattice is not None:
        if not target.is_sublattice_of(lattice):
            raise ValueError(f"{target}Z is not contained in {lattice}Z")
        target = lattice
    c = cup(x1.c.retag("V"), x2.c.retag("V"))
    sign = -1 if x1.k % 2 else 1
    h = sign * cup(x1.c.retag("V"), x2.h) + cup(x1.h, x2.form())
    n, k = x1.n + x2.n, x1.k + x2.k
    omega = cup(x1.form(), x2.form()) if k >= n else None
    return DiffCochain(n, k, c.retag("L", target), h, omega, target)


def leibniz_residual(x1: DiffCochain, x2: DiffCochain) -> DiffCochain:
    """``d(x₁x₂) − dx₁·x₂ − (−1)^{k₁} x₁·dx₂``; zero for all inputs."""
    lat = x1.lattice * x2.lattice
    lhs = differential(diff_product(x1, x2))
    a = diff_product(differential(x1), x2, lat)
    b = diff_product(x1, differential(x2), lat)
    return lhs - a - b if x1.k % 2 == 0 else lhs - a + b


def product_on_trivialization(s: Trivialization, x2: DiffCochain) -> Trivialization:
    """``s·x₂ ∈ T_geo(x₁·x₂)``: characteristic cocycle ``b∪c₂``, curvature ``η∪ω₂``.

    Raises:
        ValueError: if ``x₂`` is not a cocycle in ``Ž(k₂)^{k₂}``.
    """
    if x2.n != x2.k or not is_cocycle(x2):
        raise ValueError("second factor must be a differential cocycle in Ž(k)^k")
    prod = diff_product(s.as_diffcochain(), x2)
    x = diff_product(s.x, x2)
    return Trivialization(prod.c, prod.h, prod.form(), x)


# ---------------------------------------------------------------------------
# Product complexes


def _shuffle_paths(p: int, q: int):
    """``(sign, steps)`` for each (p, q)-shuffle; a step is ``"b"`` or ``"f"``."""
    for pos in combinations(range(p + q), p):
        steps = ["f"] * (p + q)
        for i in pos:
            steps[i] = "b"
        sign = (-1) ** sum(m - i for i, m in enumerate(pos))
        yield sign, steps


@dataclass(frozen=True, eq=False)
class ProductComplex:
    """``B × F`` triangulated by the staircase (shuffle) subdivision of prisms.

    The vertex ``(b, f)`` is encoded as ``b·m + f`` with ``m`` one more than
    the largest fibre vertex, so ascending order matches monotone paths.
    """

    base: SimplicialComplex
    fiber: SimplicialComplex
    complex: SimplicialComplex = field(init=False)

    def __post_init__(self):
        # every prism σ × τ contributes its staircase simplices, faces included
        top = []
        for kb in range(self.base.dim + 1):
            for sb in self.base.simplices(kb):
                for kf in range(self.fiber.dim + 1):
                    for sf in self.fiber.simplices(kf):
                        for _, steps in _shuffle_paths(kb, kf):
                            top.append(self._path(sb, sf, steps))
        name = f"{self.base.name}x{self.fiber.name}"
        object.__setattr__(self, "complex", SimplicialComplex(top, name=name))

    @property
    def modulus(self) -> int:
        return max(self.fiber.vertices) + 1

    def encode(self, b: int, f: int) -> int:
        return b * self.modulus + f

    def decode(self, v: int) -> tuple[int, int]:
        return divmod(v, self.modulus)

    def _path(self, sb, sf, steps) -> tuple[int, ...]:
        i = j = 0
        out = [self.encode(sb[0], sf[0])]
        for st in steps:
            if st == "b":
                i += 1
            else:
                j += 1
            out.append(self.encode(sb[i], sf[j]))
        return tuple(out)

    @property
    def fiber_dim(self) -> int:
        return self.fiber.dim

    def cross(self, sb, sf) -> Chain:
        """The Eilenberg–Zilber chain ``σ × τ``."""
        p, q = len(sb) - 1, len(sf) - 1
        terms: dict = {}
        for sign, steps in _shuffle_paths(p, q):
            s = self._path(tuple(sb), tuple(sf), steps)
            terms[s] = terms.get(s, 0) + sign
        return Chain.from_dict(self.complex, p + q, terms)

    def cross_chain(self, a: Chain, b: Chain) -> Chain:
        """Bilinear extension of :meth:`cross`."""
        X = self.complex
        out = Chain.zero(X, a.degree + b.degree)
        for sa, ca in zip(a.complex.simplices(a.degree), a.coefficients):
            if not ca:
                continue
            for sf, cf in zip(b.complex.simplices(b.degree), b.coefficients):
                if cf:
                    out = out + (ca * cf) * self.cross(sa, sf)
        return out

    @cached_property
    def fundamental_cycle(self) -> Chain:
        """``[F]``, oriented so that its first nonzero coefficient is +1.

        Raises:
            ValueError: if ``F`` is not closed and oriented.
        """
        F, n = self.fiber, self.fiber.dim
        hb = F.homology_basis(n)
        if hb.free_rank != 1 or hb.torsion_orders:
            raise ValueError(f"fibre has H_{n} ≇ Z; it is not a closed connected oriented pseudomanifold")
        z = hb.free_cycles[0]
        if any(abs(v) != 1 for v in z):
            raise ValueError("fibre fundamental cycle does not cover every top simplex once")
        return Chain(F, n, tuple(z))

    # -- pullbacks along the projections --------------------------------------

    def _pullback(self, c: Cochain, which: int) -> Cochain:
        X = self.complex
        src = self.base if which == 0 else self.fiber
        if c.complex != src:
            raise ValueError("cochain does not live on the expected factor")
        vals = []
        for s in X.simplices(c.degree):
            img = tuple(self.decode(v)[which] for v in s)
            if len(set(img)) < len(img):
                vals.append(Fraction(0))
            else:
                vals.append(c.values[src.index(img)])
        return Cochain(X, c.degree, tuple(vals), c.coefficients, c.lattice)

    def pullback_base(self, c: Cochain) -> Cochain:
        return self._pullback(c, 0)

    def pullback_fiber(self, c: Cochain) -> Cochain:
        return self._pullback(c, 1)

    def pullback(self, x: DiffCochain, factor: str = "base") -> DiffCochain:
        pb = self.pullback_base if factor == "base" else self.pullback_fiber
        return DiffCochain(x.n, x.k, pb(x.c), pb(x.h), None if x.omega is None else pb(x.omega), x.lattice)

    # -- fibre integration ----------------------------------------------------

    def _cross_fundamental(self, degree: int) -> list[dict]:
        """For each base simplex of ``degree``, ``β × [F]`` as ``{index: coeff}``."""
        def build():
            F = self.fundamental_cycle
            rows = []
            for sb in self.base.simplices(degree):
                ch = self.cross_chain(Chain.from_dict(self.base, degree, {sb: 1}), F)
                rows.append({i: v for i, v in enumerate(ch.coefficients) if v})
            return rows
        return self.complex._cached(("crossF", degree), build)

    def integrate_cochain(self, u: Cochain) -> Cochain:
        """``⟨∫u, β⟩ = ⟨u, β × [F]⟩``."""
        if u.complex != self.complex:
            raise ValueError("cochain is not on the product complex")
        d = u.degree - self.fiber_dim
        if d < 0 or d > self.base.dim:
            return Cochain.zero(self.base, d)
        vals = tuple(sum((u.values[i] * m for i, m in row.items()), Fraction(0))
                     for row in self._cross_fundamental(d))
        tag = u.coefficients if u.coefficients != "V/L" else "V"
        return Cochain(self.base, d, vals, tag, u.lattice)


def product_complex(B: SimplicialComplex, F: SimplicialComplex) -> ProductComplex:
    return ProductComplex(B, F)


def fiber_integrate(P: ProductComplex, x: DiffCochain) -> DiffCochain:
    """``∫_{X/B}: Č(N)^q(B×F) → Č(N−n)^{q−n}(B)``, componentwise slant against ``[F]``.

    Raises:
        ValueError: if ``F`` is not closed/oriented or the degree is too small.
    """
    n = P.fiber_dim
    if x.k < n:
        raise ValueError(f"degree {x.k} is below the fibre dimension {n}")
    ic = P.integrate_cochain
    omega = ic(x.omega) if x.omega is not None else None
    return DiffCochain(x.n - n, x.k - n, ic(x.c).retag("L", x.lattice), ic(x.h), omega, x.lattice)


def fiber_integrate_trivialization(P: ProductComplex, s: Trivialization) -> Trivialization:
    """``∫s ∈ T_geo(∫x)``."""
    ic = P.integrate_cochain
    return Trivialization(ic(s.b).retag("L", s.x.lattice), ic(s.khat), ic(s.eta), fiber_integrate(P, s.x))
