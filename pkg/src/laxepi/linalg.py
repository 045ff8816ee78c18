"""Exact dense linear algebra over the rationals.

Everything downstream (hom spaces, torsion tests, epimorphism verdicts) is a
yes/no rank or solvability question, so all arithmetic is exact: scalars are
`fractions.Fraction`, matrices are dense, and subspaces carry a canonical
reduced row-echelon basis so that equality of subspaces is plain equality of
entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

QQ = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def vec(entries: Iterable) -> tuple[Fraction, ...]:
    return tuple(frac(e) for e in entries)


def zero_vec(n: int) -> tuple[Fraction, ...]:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Fraction, a: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(c * x for x in a)


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes or ambient dimensions."""


class RationalMatrix:
    """Immutable dense matrix of Fractions; supports zero rows/columns."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence], rows: int | None = None, cols: int | None = None):
        rows_t = tuple(tuple(frac(e) for e in r) for r in data)
        if rows is None:
            rows = len(rows_t)
        if cols is None:
            cols = len(rows_t[0]) if rows_t else 0
        if len(rows_t) != rows or any(len(r) != cols for r in rows_t):
            raise DimensionMismatch("ragged or mis-sized matrix data")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", rows_t)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([zero_vec(cols)] * rows, rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([unit_vec(n, i) for i in range(n)], n, n)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        if not rows and cols is None:
            raise DimensionMismatch("column count needed for an empty row list")
        return cls(rows, len(rows), cols if cols is not None else len(rows[0]))

    @classmethod
    def column(cls, entries: Sequence) -> "RationalMatrix":
        return cls([[e] for e in entries], len(entries), 1)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.data[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols}, {[[str(e) for e in r] for r in self.data]})"

    def is_zero(self) -> bool:
        return all(not e for r in self.data for e in r)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix addition shape mismatch")
        return RationalMatrix(
            [vec_add(a, b) for a, b in zip(self.data, other.data)], self.rows, self.cols
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix subtraction shape mismatch")
        return RationalMatrix(
            [vec_sub(a, b) for a, b in zip(self.data, other.data)], self.rows, self.cols
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([vec_scale(-ONE, r) for r in self.data], self.rows, self.cols)

    def scale(self, c) -> "RationalMatrix":
        c = frac(c)
        return RationalMatrix([vec_scale(c, r) for r in self.data], self.rows, self.cols)

    def __mul__(self, other):
        """Matrix product, or scalar multiple when `other` is a scalar."""
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            bt = other.transpose().data
            out = []
            for r in self.data:
                out.append(tuple(sum((x * y for x, y in zip(r, c) if x), ZERO) for c in bt))
            return RationalMatrix(out, self.rows, other.cols)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Apply to a column vector."""
        if len(v) != self.cols:
            raise DimensionMismatch("vector length mismatch")
        return tuple(sum((x * y for x, y in zip(r, v) if x), ZERO) for r in self.data)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [tuple(r[j] for r in self.data) for j in range(self.cols)], self.cols, self.rows
        )

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return RationalMatrix(
            [a + b for a, b in zip(self.data, other.data)], self.rows, self.cols + other.cols
        )

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.cols:
            raise DimensionMismatch("vstack column mismatch")
        return RationalMatrix(self.data + other.data, self.rows + other.rows, self.cols)

    def kronecker(self, other: "RationalMatrix") -> "RationalMatrix":
        out = []
        for r1 in self.data:
            for r2 in other.data:
                out.append(tuple(a * b for a in r1 for b in r2))
        return RationalMatrix(out, self.rows * other.rows, self.cols * other.cols)


def block_diag(blocks: Sequence[RationalMatrix]) -> RationalMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[ZERO] * cols for _ in range(rows)]
    ro = co = 0
    for b in blocks:
        for i in range(b.rows):
            out[ro + i][co : co + b.cols] = list(b.data[i])
        ro += b.rows
        co += b.cols
    return RationalMatrix(out, rows, cols)


def _rref_rows(rows: list[list[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan; returns (nonzero reduced rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != ONE:
            inv = ONE / pv
            rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [a - f * b for a, b in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def rref(m: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...]]:
    """Reduced row-echelon form of m (same shape, zero rows kept) and pivot columns."""
    rows = [list(r) for r in m.data]
    reduced, pivots = _rref_rows(rows, m.cols)
    full = reduced + [[ZERO] * m.cols for _ in range(m.rows - len(reduced))]
    return RationalMatrix(full, m.rows, m.cols), tuple(pivots)


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def is_iso(m: RationalMatrix) -> bool:
    """Square and full rank."""
    return m.rows == m.cols and rank(m) == m.rows


def solve(a: RationalMatrix, b: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """One exact solution of a x = b (free variables zeroed), or None if inconsistent."""
    b = vec(b)
    if len(b) != a.rows:
        raise DimensionMismatch(f"rhs length {len(b)} != row count {a.rows}")
    aug = RationalMatrix([list(r) + [x] for r, x in zip(a.data, b)], a.rows, a.cols + 1)
    red, pivots = rref(aug)
    if a.cols in pivots:
        return None
    x = [ZERO] * a.cols
    for i, c in enumerate(pivots):
        x[c] = red[i, a.cols]
    return tuple(x)


def solve_matrix(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix | None:
    """Solve a X = b column by column; None if any column is inconsistent."""
    if b.rows != a.rows:
        raise DimensionMismatch("solve_matrix shape mismatch")
    cols = []
    for j in range(b.cols):
        s = solve(a, b.col(j))
        if s is None:
            return None
        cols.append(s)
    return RationalMatrix(cols, b.cols, a.cols).transpose()


class Subspace:
    """A subspace of QQ^n with canonical RREF row basis; equality is entry equality."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: RationalMatrix):
        if basis.cols != ambient_dim:
            raise DimensionMismatch("basis width differs from ambient dimension")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence], ambient_dim: int) -> "Subspace":
        rows = [list(vec(v)) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatch("vector length differs from ambient dimension")
        reduced, _ = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, RationalMatrix(reduced, len(reduced), ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RationalMatrix.zeros(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RationalMatrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self) -> list[tuple[Fraction, ...]]:
        return list(self.basis.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of QQ^{self.ambient_dim})"

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Residue of v after eliminating the pivot coordinates of the basis."""
        w = list(vec(v))
        pivots = _pivot_cols(self.basis)
        for i, p in enumerate(pivots):
            if w[p]:
                f = w[p]
                br = self.basis.data[i]
                w = [a - f * b for a, b in zip(w, br)]
        return tuple(w)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return not any(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return all(self.contains(r) for r in other.basis.data)

    def coordinates_of(self, v: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
        """Coefficients of v in the canonical basis rows, or None if v is outside."""
        return solve(self.basis.transpose(), v)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace.from_vectors(
            list(self.basis.data) + list(other.basis.data), self.ambient_dim
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        # x = B1^T u = B2^T w; kernel of [B1^T | -B2^T] yields the intersection.
        d1, d2 = self.dim, other.dim
        if d1 == 0 or d2 == 0:
            return Subspace.zero(self.ambient_dim)
        stacked = self.basis.transpose().hstack(other.basis.transpose().scale(-ONE))
        ker = kernel_basis(stacked)
        vecs = []
        for kv in ker.basis.data:
            u = kv[:d1]
            vecs.append(self.basis.transpose().apply(u))
        return Subspace.from_vectors(vecs, self.ambient_dim)

    def quotient_maps(self) -> tuple[RationalMatrix, RationalMatrix]:
        """(projection P, section S) for QQ^n / self; P S = identity.

        Quotient coordinates are the non-pivot coordinates of the reduced
        representative, so the construction is canonical.
        """
        n = self.ambient_dim
        pivots = set(_pivot_cols(self.basis))
        free = [j for j in range(n) if j not in pivots]
        proj_rows = []
        for i in range(n):
            red = self.reduce(unit_vec(n, i))
            proj_rows.append(tuple(red[j] for j in free))
        proj = RationalMatrix(proj_rows, n, len(free)).transpose()
        sec = RationalMatrix([unit_vec(n, j) for j in free], len(free), n).transpose()
        return proj, sec


def _pivot_cols(basis: RationalMatrix) -> list[int]:
    pivots = []
    for r in basis.data:
        for j, x in enumerate(r):
            if x:
                pivots.append(j)
                break
    return pivots


def kernel_basis(a: RationalMatrix) -> Subspace:
    """Null space {v : a v = 0} as a canonical Subspace of QQ^cols."""
    red, pivots = rref(a)
    free = [j for j in range(a.cols) if j not in pivots]
    vecs = []
    for j in free:
        v = [ZERO] * a.cols
        v[j] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i, j]
        vecs.append(v)
    return Subspace.from_vectors(vecs, a.cols)


def image_basis(a: RationalMatrix) -> Subspace:
    """Column space of a as a canonical Subspace of QQ^rows."""
    return Subspace.from_vectors([a.col(j) for j in range(a.cols)], a.rows)


def row_space(a: RationalMatrix) -> Subspace:
    return Subspace.from_vectors(list(a.data), a.cols)


class EchelonBasis:
    """Incremental reduced row-echelon basis for streaming span computations."""

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        w = list(v)
        for row, p in zip(self.rows, self.pivots):
            if w[p]:
                f = w[p]
                w = [a - f * b for a, b in zip(w, row)]
        return w

    def insert(self, v: Sequence[Fraction]) -> bool:
        """Add v to the span; returns True when the dimension grew."""
        w = self._reduce(v)
        p = next((j for j, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = ONE / w[p]
        w = [x * inv for x in w]
        for i in range(len(self.rows)):
            if self.rows[i][p]:
                f = self.rows[i][p]
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], w)]
        self.rows.append(w)
        self.pivots.append(p)
        return True

    def contains(self, v: Sequence[Fraction]) -> bool:
        return not any(self._reduce(v))

    def to_subspace(self) -> Subspace:
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        rows = [tuple(self.rows[i]) for i in order]
        return Subspace(self.width, RationalMatrix(rows, len(rows), self.width))
