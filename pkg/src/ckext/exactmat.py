"""Exact integer matrix algebra.

Dense arbitrary-precision integer matrices with the normal forms and lattice
predicates everything else is built on: Smith normal form with unimodular
transforms, a canonical column-style Hermite normal form, Bareiss
determinants, integer kernels, and column-lattice equality/membership.

All values are immutable; every function is pure.  Matrices are deliberately
dense and unoptimised: the intended scale is desk-size (N up to ~50), where
exactness matters and performance does not.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable, Sequence


class NotSquareError(ValueError):
    """Operation requires a square matrix."""


class DimensionMismatchError(ValueError):
    """Operand shapes are incompatible."""


class NotUnimodularError(ValueError):
    """Matrix is not invertible over the integers."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix, row-major.

    A matrix with zero columns represents the zero lattice; zero-row matrices
    only occur as empty transforms (e.g. the V of the Smith form of an N-by-0
    matrix) and never carry lattice meaning.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
            for x in row:
                if not isinstance(x, int):
                    raise TypeError(f"matrix entries must be int, got {type(x).__name__}")

    @staticmethod
    def from_rows(rows: Iterable[Sequence[int]]) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        return IntMatrix(len(data), ncols, data)

    @staticmethod
    def from_columns(columns: Iterable[Sequence[int]], rows: int | None = None) -> "IntMatrix":
        cols = [tuple(int(x) for x in c) for c in columns]
        if rows is None:
            if not cols:
                raise ValueError("row count required for a matrix with no columns")
            rows = len(cols[0])
        for c in cols:
            if len(c) != rows:
                raise DimensionMismatchError("column lengths differ")
        data = tuple(tuple(c[i] for c in cols) for i in range(rows))
        return IntMatrix(rows, len(cols), data)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if other.rows != self.rows:
            raise DimensionMismatchError("row counts differ")
        return IntMatrix(self.rows, self.cols + other.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if other.cols != self.cols:
            raise DimensionMismatchError("column counts differ")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("shapes differ")
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(a + b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(-a for a in row) for row in self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError("inner dimensions differ")
        ot = other.transpose().entries
        data = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
                     for row in self.entries)
        return IntMatrix(self.rows, other.cols, data)

    def mul_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise DimensionMismatchError("vector length differs from column count")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)


@dataclass(frozen=True)
class SmithDecomposition:
    """Triple (u, d, v) with u @ m @ v = d, u and v unimodular, d diagonal
    with nonnegative entries forming a divisibility chain (zeros trailing)."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def __post_init__(self):
        n, m = self.d.rows, self.d.cols
        if (self.u.rows, self.u.cols) != (n, n) or (self.v.rows, self.v.cols) != (m, m):
            raise DimensionMismatchError("transform shapes do not match diagonal")
        for i in range(n):
            for j in range(m):
                if i != j and self.d.entries[i][j] != 0:
                    raise ValueError("d is not diagonal")
        diag = self.diagonal()
        for i, x in enumerate(diag):
            if x < 0:
                raise ValueError("negative invariant factor")
            if i + 1 < len(diag):
                nxt = diag[i + 1]
                if x == 0:
                    if nxt != 0:
                        raise ValueError("zero invariant factor before nonzero one")
                elif nxt % x != 0:
                    raise ValueError("divisibility chain violated")
        if abs(determinant(self.u)) != 1 or abs(determinant(self.v)) != 1:
            raise NotUnimodularError("transforms are not unimodular")

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d.entries[i][i] for i in range(min(self.d.rows, self.d.cols)))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise NotSquareError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def snf(m: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transforms.

    Pivots are chosen with minimal absolute value to limit entry growth; the
    divisibility chain is enforced by folding any non-divisible remainder back
    into the pivot row before advancing.
    """
    nr, nc = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row[dst] += q * row[src]
        ad, asrc = a[dst], a[src]
        for j in range(nc):
            ad[j] += q * asrc[j]
        ud, usrc = u[dst], u[src]
        for j in range(nr):
            ud[j] += q * usrc[j]

    def add_col(src, dst, q):  # col[dst] += q * col[src]
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(nr, nc)):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            swap_rows(t, best[0])
        if best[1] != t:
            swap_cols(t, best[1])
        if a[t][t] < 0:
            negate_row(t)

        while True:
            # Clear column t below the pivot; remainders become new pivots.
            restart = False
            for i in range(t + 1, nr):
                if a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                if q:
                    add_row(t, i, -q)
                if a[i][t]:
                    swap_rows(t, i)  # remainder in (0, pivot): strictly smaller
                    restart = True
                    break
            if restart:
                continue
            for j in range(t + 1, nc):
                if a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                if q:
                    add_col(t, j, -q)
                if a[t][j]:
                    swap_cols(t, j)
                    restart = True
                    break
            if restart:
                continue
            # Row and column are clear; force the pivot to divide the rest.
            pivot = a[t][t]
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % pivot != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)

    um = IntMatrix.from_rows(u) if nr else IntMatrix(0, 0, ())
    vm = IntMatrix.from_rows(v) if nc else IntMatrix(0, 0, ())
    dm = IntMatrix.from_rows(a) if nr else IntMatrix(0, nc, ())
    assert (um @ m @ vm) == dm
    return SmithDecomposition(um, dm, vm)


def hnf_columns(m: IntMatrix) -> IntMatrix:
    """Unique column-style Hermite normal form basis of the column lattice.

    Zero columns are removed, pivots (the topmost nonzero entry of each
    column) are positive and strictly descend row-wise left to right, and the
    entries to the left of each pivot are reduced into [0, pivot).  Two
    matrices span the same column lattice iff their forms are equal.
    """
    nr = m.rows
    cols = [list(c) for c in m.columns()]
    c = 0
    for r in range(nr):
        if c == len(cols):
            break
        j0 = next((j for j in range(c, len(cols)) if cols[j][r]), None)
        if j0 is None:
            continue
        cols[c], cols[j0] = cols[j0], cols[c]
        for j in range(c + 1, len(cols)):
            if cols[j][r] == 0:
                continue
            aa, bb = cols[c][r], cols[j][r]
            g, x, y = _xgcd(aa, bb)
            ag, bg = aa // g, bb // g
            colc, colj = cols[c], cols[j]
            for i in range(r, nr):
                ci, cj = colc[i], colj[i]
                colc[i] = x * ci + y * cj
                colj[i] = ag * cj - bg * ci
        if cols[c][r] < 0:
            cols[c] = [-x for x in cols[c]]
        pivot = cols[c][r]
        for j in range(c):
            q = cols[j][r] // pivot
            if q:
                colj, colc = cols[j], cols[c]
                for i in range(r, nr):
                    colj[i] -= q * colc[i]
        c += 1
    return IntMatrix.from_columns(cols[:c], rows=nr)


def lattice_equal(m1: IntMatrix, m2: IntMatrix) -> bool:
    """Whether two generating sets span the same column lattice."""
    if m1.rows != m2.rows:
        raise DimensionMismatchError("lattices live in different ambient ranks")
    return hnf_columns(m1) == hnf_columns(m2)


def lattice_contains(m: IntMatrix, v: Sequence[int]) -> bool:
    """Whether v lies in the column lattice of m (exact integer solvability)."""
    if len(v) != m.rows:
        raise DimensionMismatchError("vector length differs from ambient rank")
    h = hnf_columns(m)
    resid = [int(x) for x in v]
    for j in range(h.cols):
        r = next(i for i in range(h.rows) if h.entries[i][j])
        q, rem = divmod(resid[r], h.entries[r][j])
        if rem:
            return False
        if q:
            for i in range(r, h.rows):
                resid[i] -= q * h.entries[i][j]
    return not any(resid)


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the integer nullspace {x : m @ x = 0}, as columns.

    Returns a matrix with cols(m) rows and one column per kernel generator
    (zero columns when the kernel is trivial).
    """
    dec = snf(m)
    diag = dec.diagonal()
    cols = []
    for j in range(m.cols):
        dj = diag[j] if j < len(diag) else 0
        if dj == 0:
            cols.append(dec.v.column(j))
    return IntMatrix.from_columns(cols, rows=m.cols)


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix.

    Uses the Smith form: if p @ m @ q = I then m^-1 = q @ p.
    """
    if m.rows != m.cols:
        raise NotSquareError("only square matrices can be unimodular")
    dec = snf(m)
    if dec.d != IntMatrix.identity(m.rows):
        raise NotUnimodularError("matrix has nontrivial invariant factors")
    inv = dec.v @ dec.u
    assert inv @ m == IntMatrix.identity(m.rows)
    return inv
