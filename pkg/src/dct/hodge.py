"""Combinatorial Hodge theory over ℚ.

The inner product on ``Cᵏ(K; ℚ)`` makes the oriented simplices orthonormal,
so ``δ*`` is the matrix transpose of ``δ``.  Every projection is an exact
rational solve of the normal equations; nothing here is approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import Matrix, RationalSolver
from .simplicial import Cochain, SimplicialComplex, coboundary
from .trivialization import CurvTrivialization, DeRhamTrivialization, Trivialization


def inner(a: Cochain, b: Cochain) -> Fraction:
    if a.degree != b.degree or a.complex != b.complex:
        raise ValueError("inner product of cochains of different degree or complex")
    return sum((x * y for x, y in zip(a.values, b.values)), Fraction(0))


def codifferential(c: Cochain) -> Cochain:
    """``δ*c``, a cochain of degree ``k − 1``."""
    K, k = c.complex, c.degree
    vals = K.coboundary_matrix(k - 1).T.matvec(list(c.values))
    return Cochain(K, k - 1, tuple(Fraction(v) for v in vals))


def laplacian(K: SimplicialComplex, k: int) -> Matrix:
    """``Δ = δδ* + δ*δ`` on ``Cᵏ``.

    Raises:
        ValueError: if ``k`` is outside ``[0, dim K]``.
    """
    if not 0 <= k <= K.dim:
        raise ValueError(f"degree {k} outside [0, {K.dim}]")
    down = K.coboundary_matrix(k - 1)
    up = K.coboundary_matrix(k)
    a = down @ down.T
    b = up.T @ up
    entries = dict(a.entries)
    for key, v in b.entries.items():
        entries[key] = entries.get(key, 0) + v
    return Matrix(K.count(k), K.count(k), entries)


def _project(K: SimplicialComplex, key, A: Matrix, values) -> list[Fraction]:
    """Orthogonal projection of ``values`` onto the column space of ``A``."""
    if A.cols == 0:
        return [Fraction(0)] * A.rows
    solver = K._cached(("normal", key), lambda: RationalSolver(A.T @ A))
    x = solver.solve(A.T.matvec(list(values)))
    return [Fraction(v) for v in A.matvec(x)]


def exact_part(c: Cochain) -> Cochain:
    """Projection onto ``im δ_{k-1}``."""
    K, k = c.complex, c.degree
    return Cochain(K, k, tuple(_project(K, ("exact", k), K.coboundary_matrix(k - 1), c.values)))


def coexact_part(c: Cochain) -> Cochain:
    """Projection onto ``im δ*_k``."""
    K, k = c.complex, c.degree
    return Cochain(K, k, tuple(_project(K, ("coexact", k), K.coboundary_matrix(k).T, c.values)))


@dataclass(frozen=True)
class HodgeDecomposition:
    harmonic: Cochain
    exact: Cochain
    coexact: Cochain

    def total(self) -> Cochain:
        return self.harmonic + self.exact + self.coexact


def decompose(c: Cochain) -> HodgeDecomposition:
    """Split ``c = harmonic + exact + coexact`` orthogonally."""
    c = c.retag("V")
    ex = exact_part(c)
    co = coexact_part(c)
    return HodgeDecomposition(c - ex - co, ex, co)


def is_harmonic(c: Cochain) -> bool:
    return coboundary(c.retag("V")).is_zero() and codifferential(c).is_zero()


def harmonic_representative(c: Cochain) -> Cochain:
    """The harmonic cochain cohomologous to the closed cochain ``c``.

    Raises:
        ValueError: if ``c`` is not closed.
    """
    if not coboundary(c.retag("V")).is_zero():
        raise ValueError("cochain is not closed")
    return decompose(c).harmonic


def hodge_right_inverse(lift: DeRhamTrivialization) -> CurvTrivialization:
    """The representative of ``lift`` orthogonal to ``δC^{k-2}``.

    Subtracting the exact part keeps ``δη = ω`` and every cycle value, so the
    result projects back to ``lift``.
    """
    r = lift.rep.retag("V")
    return CurvTrivialization(r - exact_part(r), lift.x)


def is_harmonic_trivialization(s: Trivialization) -> bool:
    """``δ*η = 0``."""
    return codifferential(s.eta).is_zero()
