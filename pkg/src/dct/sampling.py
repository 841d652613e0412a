"""Seeded random generation of exact test data.

Values are uniform over ``{p/q : |p| ≤ 9, q ∈ {1, 2, 3}}``; lattice values
are ``α·m`` with ``|m| ≤ 3``.  Every trial draws from its own
:class:`random.Random` keyed by ``(seed, label, index)`` so trials are
independent and order-free.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .diffcochain import DiffCochain
from .simplicial import (
    Chain,
    Cochain,
    DivisibleCohomology,
    Lattice,
    SimplicialComplex,
    coboundary,
    cohomology,
)


def trial_rng(seed: int, label: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{label}:{index}")


def rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))


def lattice_value(rng: random.Random, lattice: Lattice) -> Fraction:
    return lattice.alpha * rng.randint(-3, 3)


def cochain(rng: random.Random, K: SimplicialComplex, k: int, coefficients: str = "V",
            lattice: Lattice = Lattice(1)) -> Cochain:
    n = K.count(k)
    if coefficients == "L":
        vals = [lattice_value(rng, lattice) for _ in range(n)]
    else:
        vals = [rational(rng) for _ in range(n)]
    return Cochain(K, k, tuple(vals), coefficients, lattice)


def chain(rng: random.Random, K: SimplicialComplex, k: int) -> Chain:
    return Chain(K, k, tuple(rng.randint(-3, 3) for _ in range(K.count(k))))


def diffcochain(rng: random.Random, K: SimplicialComplex, n: int, k: int,
                lattice: Lattice = Lattice(1)) -> DiffCochain:
    """An arbitrary (usually non-closed) element of ``Č(n)^k``."""
    return DiffCochain(n, k, cochain(rng, K, k, "L", lattice), cochain(rng, K, k - 1),
                       cochain(rng, K, k) if k >= n else None, lattice)


def lattice_cocycle(rng: random.Random, K: SimplicialComplex, k: int, lattice: Lattice = Lattice(1),
                    exact: bool = False) -> Cochain:
    """A random Λ-cocycle ``δa + Σ rᵢ gᵢ`` over the generators of ``Hᵏ(Λ)``."""
    if k < 0 or k > K.dim:
        return Cochain.zero(K, k, "L", lattice)
    vals = list(coboundary(cochain(rng, K, k - 1, "L", lattice)).values) if k > 0 else [Fraction(0)] * K.count(k)
    if not exact and not lattice.is_zero:
        for gen in cohomology(K, k, "L", lattice).generators:
            r = rng.randint(-3, 3)
            vals = [v + r * Fraction(g) for v, g in zip(vals, gen)]
    return Cochain(K, k, tuple(vals), "L", lattice)


def quotient_cocycle(rng: random.Random, K: SimplicialComplex, k: int, lattice: Lattice = Lattice(1)) -> Cochain:
    """A V-lift of a random ``V/Λ`` cocycle of degree k (not reduced)."""
    if k < 0 or k > K.dim:
        return Cochain.zero(K, k)
    H = DivisibleCohomology(K, k, "V/L", lattice)
    tors = [rng.randint(0, d - 1) for d in H.torsion]
    free = [rational(rng) for _ in range(H.free_rank)]
    rep = H.representative(tors, free)
    noise = coboundary(cochain(rng, K, k - 1)) if k > 0 else Cochain.zero(K, k)
    return rep + noise + lattice_cocycle(rng, K, k, lattice, exact=False).retag("V")


def rational_cocycle(rng: random.Random, K: SimplicialComplex, k: int, lattice_periods: Lattice | None = None) -> Cochain:
    """A random closed rational cochain; with ``lattice_periods`` its periods lie in Λ."""
    if k < 0 or k > K.dim:
        return Cochain.zero(K, k)
    H = DivisibleCohomology(K, k, "V", Lattice(1))
    if lattice_periods is None:
        free = [rational(rng) for _ in range(H.free_rank)]
    else:
        free = [lattice_value(rng, lattice_periods) for _ in range(H.free_rank)]
    rep = H.representative((), free)
    noise = coboundary(cochain(rng, K, k - 1)) if k > 0 else Cochain.zero(K, k)
    return rep + noise


def cocycle(rng: random.Random, K: SimplicialComplex, k: int, lattice: Lattice = Lattice(1),
            n: int | None = None, trivializable: bool = False) -> DiffCochain:
    """A random differential cocycle in ``Č(n)^k`` (default ``n = k``)."""
    n = k if n is None else n
    if k < n:
        u = quotient_cocycle(rng, K, k - 1, lattice)
        return DiffCochain(n, k, (-coboundary(u)).retag("L", lattice), u, None, lattice)
    c = lattice_cocycle(rng, K, k, lattice, exact=trivializable)
    h = cochain(rng, K, k - 1)
    return DiffCochain(n, k, c, h, c.retag("V") + coboundary(h), lattice)


def flat_cocycle(rng: random.Random, K: SimplicialComplex, k: int, lattice: Lattice = Lattice(1)) -> DiffCochain:
    """A random cocycle with zero curvature ``(−δu, u, 0)``."""
    u = quotient_cocycle(rng, K, k - 1, lattice)
    return DiffCochain(k, k, (-coboundary(u)).retag("L", lattice), u, None, lattice)
