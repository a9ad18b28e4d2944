"""Exact arbitrary-precision integer matrix algebra.

Everything in here works on plain Python ints (no floats, no numpy), because
downstream facts — polarization types, group membership, unimodularity — are
exact statements.  Matrices are small (at most ~8x8 in practice), so the
classical fraction-free algorithms below are entirely adequate.

Conventions:
  * ``IntMatrix`` is immutable; entries are stored row-major as a tuple of
    tuples.
  * lattice vectors are plain tuples of ints; a matrix of column generators
    is converted with :func:`from_columns` / :meth:`IntMatrix.columns`.
  * ``smith_normal_form`` returns the diagonal together with *all four*
    transition matrices (S, T and their inverses), since quotient-group
    computations need the inverse of the row transform.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionMismatch, NotUnimodular


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def xgcd_list(values: Sequence[int]) -> tuple[int, list[int]]:
    """gcd of a sequence with Bezout coefficients: sum(c*v) = g >= 0."""
    g = 0
    coeffs: list[int] = []
    for v in values:
        g_new, s, t = xgcd(g, v)
        coeffs = [c * s for c in coeffs]
        coeffs.append(t)
        g = g_new
    return g, coeffs


class IntMatrix:
    """Immutable dense matrix of Python ints."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix dimensions must be positive")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows in matrix literal")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_e", rows)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("IntMatrix is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix([[0] * cols for _ in range(rows)])

    @staticmethod
    def from_columns(cols: Sequence[Sequence[int]]) -> "IntMatrix":
        if not cols:
            raise DimensionMismatch("need at least one column")
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise DimensionMismatch("columns of unequal length")
        return IntMatrix([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    # -- access ---------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._e[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._e)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def entries(self) -> tuple[tuple[int, ...], ...]:
        return self._e

    def tolists(self) -> list[list[int]]:
        return [list(r) for r in self._e]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix([[self._e[i][j] for j in col_idx] for i in row_idx])

    # -- algebra ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in r] for r in self._e])

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        return IntMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ot = other._e
        out = []
        for r in self._e:
            out.append(
                [sum(r[k] * ot[k][j] for k in range(self.cols)) for j in range(other.cols)]
            )
        return IntMatrix(out)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix([[k * x for x in r] for r in self._e])

    def transpose(self) -> "IntMatrix":
        return IntMatrix([self.column(j) for j in range(self.cols)])

    def trace(self) -> int:
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum(self._e[i][i] for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._e for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def power(self, k: int) -> "IntMatrix":
        if not self.is_square() or k < 0:
            raise DimensionMismatch("power needs a square matrix and k >= 0")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._e)
        return f"IntMatrix[{body}]"

    # -- determinant (Bareiss, fraction-free) ----------------------------

    def det(self) -> int:
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        if n == 1:
            return self._e[0][0]
        if n == 2:
            (a, b), (c, d) = self._e
            return a * d - b * c
        a = self.tolists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if pivot_row is None:
                    return 0
                a[k], a[pivot_row] = a[pivot_row], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def mat_vec(m: IntMatrix, v: Sequence[int]) -> tuple[int, ...]:
    if m.cols != len(v):
        raise DimensionMismatch("matrix-vector shape mismatch")
    return tuple(sum(r[j] * v[j] for j in range(m.cols)) for r in m.entries())


def combo(vectors: Sequence[Sequence[int]], coeffs: Sequence[int]) -> tuple[int, ...]:
    """Integer linear combination of equal-length vectors."""
    if len(vectors) != len(coeffs):
        raise DimensionMismatch("coefficient count mismatch")
    n = len(vectors[0])
    return tuple(sum(c * v[i] for v, c in zip(vectors, coeffs)) for i in range(n))


def vec_sub(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(x, y))


def pairing(gram: IntMatrix, x: Sequence[int], y: Sequence[int]) -> int:
    """Evaluate the bilinear form x^T * gram * y."""
    gy = mat_vec(gram, y)
    return sum(a * b for a, b in zip(x, gy))


def gram_in_basis(gram: IntMatrix, basis: IntMatrix) -> IntMatrix:
    """Gram matrix of the form restricted to the columns of ``basis``."""
    return basis.transpose() * gram * basis


class SmithForm(NamedTuple):
    """S * A * T = D with S, T unimodular; S_inv, T_inv their exact inverses."""

    d: IntMatrix
    s: IntMatrix
    t: IntMatrix
    s_inv: IntMatrix
    t_inv: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        n = min(self.d.rows, self.d.cols)
        return tuple(self.d[i, i] for i in range(n))


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Smith normal form with transition matrices.

    Diagonal entries are nonnegative and satisfy d_i | d_{i+1}.  The four
    transforms are maintained incrementally, one elementary operation at a
    time, so they are exact and unimodular by construction.
    """
    a = m.tolists()
    nr, nc = m.rows, m.cols
    s = IntMatrix.identity(nr).tolists()
    s_inv = IntMatrix.identity(nr).tolists()
    t = IntMatrix.identity(nc).tolists()
    t_inv = IntMatrix.identity(nc).tolists()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        s[i], s[j] = s[j], s[i]
        for r in s_inv:  # column swap on the inverse
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in t:
            r[i], r[j] = r[j], r[i]
        t_inv[i], t_inv[j] = t_inv[j], t_inv[i]

    def add_row(src, dst, c):
        # row dst += c * row src
        for j in range(nc):
            a[dst][j] += c * a[src][j]
        for j in range(nr):
            s[dst][j] += c * s[src][j]
        for i in range(nr):
            s_inv[i][src] -= c * s_inv[i][dst]

    def add_col(src, dst, c):
        for r in a:
            r[dst] += c * r[src]
        for r in t:
            r[dst] += c * r[src]
        for j in range(nc):
            t_inv[src][j] -= c * t_inv[dst][j]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        s[i] = [-x for x in s[i]]
        for r in s_inv:
            r[i] = -r[i]

    k = 0
    while k < min(nr, nc):
        # locate the minimal-magnitude nonzero entry in the trailing block
        pivot = None
        best = None
        for i in range(k, nr):
            for j in range(k, nc):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        swap_rows(k, pivot[0])
        if pivot[1] != k:
            swap_cols(k, pivot[1])

        while True:
            # clear column k below the pivot
            restart = False
            for i in range(k + 1, nr):
                if a[i][k]:
                    q, r = divmod(a[i][k], a[k][k])
                    add_row(k, i, -q)
                    if r:
                        swap_rows(k, i)  # strictly smaller pivot
                        restart = True
                        break
            if restart:
                continue
            # clear row k to the right of the pivot
            for j in range(k + 1, nc):
                if a[k][j]:
                    q, r = divmod(a[k][j], a[k][k])
                    add_col(k, j, -q)
                    if r:
                        swap_cols(k, j)
                        restart = True
                        break
            if restart:
                continue
            # enforce divisibility of the remaining block by the pivot
            culprit = None
            p = a[k][k]
            for i in range(k + 1, nr):
                for j in range(k + 1, nc):
                    if a[i][j] % p:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(culprit, k, 1)  # drags a non-multiple into row k
        if a[k][k] < 0:
            negate_row(k)
        k += 1

    return SmithForm(
        IntMatrix(a), IntMatrix(s), IntMatrix(t), IntMatrix(s_inv), IntMatrix(t_inv)
    )


def rank(m: IntMatrix) -> int:
    return sum(1 for x in smith_normal_form(m).diagonal() if x != 0)


def solve_integer(a: IntMatrix, b: IntMatrix) -> IntMatrix | None:
    """Solve a * x = b over the integers; None when no integral solution.

    ``b`` may have several columns (solved simultaneously).
    """
    if a.rows != b.rows:
        raise DimensionMismatch("solve: row counts differ")
    snf = smith_normal_form(a)
    rhs = snf.s * b
    diag = snf.diagonal()
    y = [[0] * b.cols for _ in range(a.cols)]
    for i in range(a.rows):
        d = diag[i] if i < len(diag) else 0
        for j in range(b.cols):
            v = rhs[i, j]
            if d == 0:
                if v != 0:
                    return None
            else:
                q, r = divmod(v, d)
                if r:
                    return None
                if i < a.cols:
                    y[i][j] = q
    return snf.t * IntMatrix(y) if y else None


def invert_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with determinant +-1."""
    d = m.det()
    if d not in (1, -1):
        raise NotUnimodular(f"determinant is {d}, not a unit")
    x = solve_integer(m, IntMatrix.identity(m.rows))
    assert x is not None
    return x


def column_lattice_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    """A basis (as columns) of the lattice spanned by the columns of ``m``.

    From S m T = D the column lattice is S^-1 D Z^c, so the nonzero columns
    of S^-1 D form a basis.
    """
    snf = smith_normal_form(m)
    prod = snf.s_inv * snf.d
    return [prod.column(j) for j in range(prod.cols) if any(prod.column(j))]


def char_poly(m: IntMatrix) -> tuple[int, ...]:
    """Characteristic polynomial det(xI - m), monic, coefficients returned
    from the x^n term down to the constant.

    Uses the Faddeev-LeVerrier recurrence; every division is exact over Z.
    """
    if not m.is_square():
        raise DimensionMismatch("characteristic polynomial of non-square matrix")
    n = m.rows
    coeffs = [1]
    mk = m
    for k in range(1, n + 1):
        ck_frac = Fraction(-mk.trace(), k)
        assert ck_frac.denominator == 1
        ck = int(ck_frac)
        coeffs.append(ck)
        if k < n:
            mk = m * (mk + IntMatrix.identity(n).scale(ck))
    return tuple(coeffs)
