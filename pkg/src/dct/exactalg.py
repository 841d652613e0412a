"""Exact integer and rational linear algebra.

Everything here works over Python ints and :class:`fractions.Fraction`, so
there is no rounding anywhere.  Matrices are small (a few hundred rows at
most), so the Smith normal form runs on a dense copy; :class:`Matrix` keeps
the sparse ``(row, col) -> value`` map as its canonical storage.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

Rational = Fraction


class NoSolution(ValueError):
    """A linear system has no solution over the requested ring.

    ``index`` is the row of the transformed system ``P·A·Q = D`` that fails,
    ``modulus`` the diagonal entry there (0 for a vanishing row) and
    ``residue`` the transformed right-hand side entry it does not divide.
    """

    def __init__(self, index: int, modulus, residue):
        self.index = index
        self.modulus = modulus
        self.residue = residue
        super().__init__(
            f"no solution: row {index} requires {modulus} | {residue}"
        )

    def violated_by(self, transformed_rhs: Sequence) -> bool:
        r = transformed_rhs[self.index]
        if self.modulus == 0:
            return r != 0
        return r % self.modulus != 0


class Matrix:
    """Sparse matrix with exact entries; zeros are never stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], object] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            if v != 0:
                self.entries[(i, j)] = v

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if rows else 0
        return cls(rows, cols, {
            (i, j): v for i, row in enumerate(dense) for j, v in enumerate(row) if v != 0
        })

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        return cls(rows, len(columns), {
            (i, j): v for j, col in enumerate(columns) for i, v in enumerate(col) if v != 0
        })

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def to_dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __getitem__(self, key: tuple[int, int]):
        return self.entries.get(key, 0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, nnz={len(self.entries)})"

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def matvec(self, x: Sequence) -> list:
        if len(x) != self.cols:
            raise ValueError(f"vector of length {len(x)} for {self.rows}x{self.cols} matrix")
        out = [0] * self.rows
        for (i, j), v in self.entries.items():
            if x[j]:
                out[i] += v * x[j]
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, object]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc: dict[tuple[int, int], object] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return Matrix(self.rows, other.cols, acc)

    def column(self, j: int) -> list:
        return [self.entries.get((i, j), 0) for i in range(self.rows)]

    def stack(self, other: "Matrix") -> "Matrix":
        """Vertical concatenation."""
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        entries = dict(self.entries)
        entries.update({(i + self.rows, j): v for (i, j), v in other.entries.items()})
        return Matrix(self.rows + other.rows, self.cols, entries)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """``A = U·D·W`` with ``U``, ``W`` unimodular and ``D`` diagonal.

    The inverses are kept as well: ``P = U⁻¹`` and ``Q = W⁻¹`` so that
    ``P·A·Q = D``.  ``diagonal`` lists the nonzero invariant factors
    ``d₁ | d₂ | …`` (all positive); ``rank`` is their count.
    """

    U: Matrix
    D: Matrix
    W: Matrix
    P: Matrix
    Q: Matrix
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def _min_abs(B, rows: Iterable[int], cols: Sequence[int]):
    best = None
    for i in rows:
        row = B[i]
        for j in cols:
            v = row[j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
    return best


def smith_normal_form(A: Matrix) -> SmithDecomposition:
    """Smith normal form with deterministic pivoting.

    Pivots are the smallest nonzero absolute value in the active block,
    ties broken by ``(row, col)`` order, so repeated calls give identical
    transforms.
    """
    m, n = A.shape
    B = A.to_dense()
    P = [[int(i == j) for j in range(m)] for i in range(m)]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    Q = [[int(i == j) for j in range(n)] for i in range(n)]
    W = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        if i == j:
            return
        B[i], B[j] = B[j], B[i]
        P[i], P[j] = P[j], P[i]
        for row in U:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i == j:
            return
        for row in B:
            row[i], row[j] = row[j], row[i]
        for row in Q:
            row[i], row[j] = row[j], row[i]
        W[i], W[j] = W[j], W[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        bs, bd = B[src], B[dst]
        for j in range(n):
            if bs[j]:
                bd[j] += f * bs[j]
        ps, pd = P[src], P[dst]
        for j in range(m):
            if ps[j]:
                pd[j] += f * ps[j]
        for row in U:
            if row[dst]:
                row[src] -= f * row[dst]

    def add_col(dst, src, f):
        # col_dst += f * col_src
        for row in B:
            if row[src]:
                row[dst] += f * row[src]
        for row in Q:
            if row[src]:
                row[dst] += f * row[src]
        ws, wd = W[src], W[dst]
        for j in range(n):
            if wd[j]:
                ws[j] -= f * wd[j]

    def negate_row(i):
        B[i] = [-v for v in B[i]]
        P[i] = [-v for v in P[i]]
        for row in U:
            row[i] = -row[i]

    diagonal = []
    for t in range(min(m, n)):
        best = _min_abs(B, range(t, m), range(t, n))
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            clean = True
            piv = B[t][t]
            for i in range(t + 1, m):
                if B[i][t]:
                    add_row(i, t, -(B[i][t] // piv))
                    if B[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if B[t][j]:
                    add_col(j, t, -(B[t][j] // piv))
                    if B[t][j]:
                        clean = False
            if not clean:
                cand = [(abs(B[i][t]), i, t) for i in range(t, m) if B[i][t]]
                cand += [(abs(B[t][j]), t, j) for j in range(t + 1, n) if B[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if B[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if B[t][t] < 0:
            negate_row(t)
        diagonal.append(B[t][t])

    return SmithDecomposition(
        U=Matrix.from_dense(U, m), D=Matrix.from_dense(B, n), W=Matrix.from_dense(W, n),
        P=Matrix.from_dense(P, m), Q=Matrix.from_dense(Q, n), diagonal=tuple(diagonal),
    )


def integer_kernel(A: Matrix, snf: SmithDecomposition | None = None) -> list[list[int]]:
    """A ℤ-basis of ``{x ∈ ℤⁿ : A x = 0}`` (a saturated sublattice)."""
    snf = snf or smith_normal_form(A)
    return [snf.Q.column(j) for j in range(snf.rank, A.cols)]


def solve_integer(A: Matrix, b: Sequence[int], snf: SmithDecomposition | None = None) -> list[int]:
    """Solve ``A x = b`` over ℤ.

    Raises:
        NoSolution: with the invariant-factor congruence ``b`` violates.
        ValueError: on dimension mismatch.
    """
    if len(b) != A.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {A.rows}")
    snf = snf or smith_normal_form(A)
    c = snf.P.matvec(list(b))
    y = [0] * A.cols
    for i, v in enumerate(c):
        if i < snf.rank:
            d = snf.diagonal[i]
            if v % d:
                raise NoSolution(i, d, v)
            y[i] = v // d
        elif v:
            raise NoSolution(i, 0, v)
    return snf.Q.matvec(y)


# ---------------------------------------------------------------------------
# Rational elimination


class RationalSolver:
    """Row-reduced form of a rational matrix, reusable across right-hand sides.

    Stores ``E`` with ``E·A = R`` in reduced row echelon form.
    """

    def __init__(self, A: Matrix):
        m, n = A.shape
        self.shape = (m, n)
        R = [[Fraction(v) for v in row] for row in A.to_dense()]
        E = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        pivots = []
        r = 0
        for col in range(n):
            p = next((i for i in range(r, m) if R[i][col] != 0), None)
            if p is None:
                continue
            R[r], R[p] = R[p], R[r]
            E[r], E[p] = E[p], E[r]
            inv = 1 / R[r][col]
            R[r] = [v * inv for v in R[r]]
            E[r] = [v * inv for v in E[r]]
            for i in range(m):
                if i != r and R[i][col] != 0:
                    f = R[i][col]
                    R[i] = [a - f * b for a, b in zip(R[i], R[r])]
                    E[i] = [a - f * b for a, b in zip(E[i], E[r])]
            pivots.append(col)
            r += 1
            if r == m:
                break
        self.R = R
        self.E = E
        self.pivots = tuple(pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve(self, b: Sequence) -> list[Fraction]:
        m, n = self.shape
        if len(b) != m:
            raise ValueError(f"right-hand side has length {len(b)}, expected {m}")
        bb = [Fraction(v) for v in b]
        c = [sum((e * v for e, v in zip(row, bb) if v), Fraction(0)) for row in self.E]
        for i in range(self.rank, m):
            if c[i] != 0:
                raise NoSolution(i, 0, c[i])
        x = [Fraction(0)] * n
        for i, col in enumerate(self.pivots):
            x[col] = c[i]
        return x

    def kernel(self) -> list[list[Fraction]]:
        n = self.shape[1]
        free = [j for j in range(n) if j not in self.pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * n
            v[f] = Fraction(1)
            for i, col in enumerate(self.pivots):
                v[col] = -self.R[i][f]
            basis.append(v)
        return basis


def solve_rational(A: Matrix, b: Sequence) -> list[Fraction]:
    """Solve ``A x = b`` over ℚ (free variables set to zero).

    Raises:
        NoSolution: if the system is inconsistent.
    """
    return RationalSolver(A).solve(b)


def rational_kernel(A: Matrix) -> list[list[Fraction]]:
    return RationalSolver(A).kernel()


# ---------------------------------------------------------------------------
# Finitely generated abelian groups


@dataclass(frozen=True, eq=False)
class AbelianGroupPresentation:
    """``ℤ^free_rank ⊕ ⊕ ℤ/dᵢ`` with representatives and a coordinate map.

    ``generators`` lists one representative per summand, torsion summands
    first.  ``coordinates(v)`` returns torsion coordinates (reduced mod
    ``dᵢ``) followed by the free coordinates.
    """

    free_rank: int
    torsion: tuple[int, ...]
    generators: tuple[tuple, ...]
    coordinate_map: Callable[[Sequence], tuple] = field(repr=False)
    name: str = ""

    def coordinates(self, v: Sequence) -> tuple:
        return self.coordinate_map(v)

    def is_zero(self, v: Sequence) -> bool:
        return not any(self.coordinates(v))

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` if infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def invariants(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.insert(0, "Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"


def quotient_presentation(Z: Sequence[Sequence[int]], B: Sequence[Sequence[int]],
                          ambient_dim: int | None = None, name: str = "") -> AbelianGroupPresentation:
    """Present ``span_ℤ(Z) / span_ℤ(B)``.

    Raises:
        ValueError: if some relation is not in the span of ``Z``.
    """
    if ambient_dim is None:
        ambient_dim = len(Z[0]) if Z else (len(B[0]) if B else 0)
    G = Matrix.from_columns(Z, ambient_dim)
    snf_g = smith_normal_form(G)
    r = snf_g.rank
    dg = snf_g.diagonal
    basis = [[dg[i] * u for u in snf_g.U.column(i)] for i in range(r)]

    def lattice_coords(v):
        a = snf_g.P.matvec(list(v))
        out = []
        for i, x in enumerate(a):
            if i < r:
                if x % dg[i]:
                    raise ValueError("vector is not in the span of the generators")
                out.append(x // dg[i])
            elif x:
                raise ValueError("vector is not in the span of the generators")
        return out

    rel = Matrix.from_columns([lattice_coords(b) for b in B], r)
    snf_r = smith_normal_form(rel)
    e = snf_r.diagonal
    r2 = snf_r.rank
    keep = [i for i in range(r) if i >= r2 or e[i] > 1]
    torsion = tuple(e[i] for i in keep if i < r2)
    generators = []
    for i in keep:
        col = snf_r.U.column(i)
        gen = [0] * ambient_dim
        for j, f in enumerate(col):
            if f:
                for t, bv in enumerate(basis[j]):
                    gen[t] += f * bv
        generators.append(tuple(gen))

    def coordinates(v):
        y = snf_r.P.matvec(lattice_coords(v))
        return tuple(y[i] % e[i] if i < r2 else y[i] for i in keep)

    return AbelianGroupPresentation(
        free_rank=r - r2, torsion=torsion, generators=tuple(generators),
        coordinate_map=coordinates, name=name,
    )
