"""Exact-arithmetic matrices: skew-symmetric matrices, blocks, determinant,
Pfaffian and rank.

Entries are Python ints (arbitrary precision) or :class:`fractions.Fraction`.
No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import (
    DimensionError,
    MatrixFormatError,
    ParityError,
    SkewSymmetryError,
)
from .subsets import VertexSubset, check_within, members

Number = Union[int, Fraction]

#: Pfaffians of order up to this use the matching expansion.
PFAFFIAN_EXPANSION_MAX = 8


def _normalize(x) -> Number:
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"matrix entries must be int or Fraction, got {type(x).__name__}")


class Matrix:
    """Immutable rectangular matrix with exact entries.

    Equality and hashing use the exact entry sequence, so matrices can key
    dictionaries and visited sets.
    """

    __slots__ = ("_rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Sequence[Number]], ncols: int | None = None):
        data = tuple(tuple(_normalize(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r, row in enumerate(data):
            if len(row) != ncols:
                raise DimensionError(f"row {r + 1} has {len(row)} entries, expected {ncols}")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols
        self._hash = None

    @property
    def rows(self) -> tuple[tuple[Number, ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Number:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ncols, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[list(r) for r in self._rows]})"

    def tolist(self) -> list[list[Number]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> Matrix:
        if not self.nrows:
            return Matrix([()] * self.ncols, ncols=0)
        return Matrix(zip(*self._rows), ncols=self.nrows)

    def __neg__(self) -> Matrix:
        return Matrix(((-x for x in r) for r in self._rows), ncols=self.ncols)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(
            (tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            ncols=self.ncols,
        )

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._rows)) if other.nrows else [() for _ in range(other.ncols)]
        return Matrix(
            ([sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows),
            ncols=other.ncols,
        )

    def shift(self, lam: Number) -> Matrix:
        """``M + lam * I`` for square ``M``."""
        if not self.is_square:
            raise DimensionError("shift needs a square matrix")
        return Matrix(
            ((x + lam if i == j else x for j, x in enumerate(r)) for i, r in enumerate(self._rows)),
            ncols=self.ncols,
        )

    def is_skew(self) -> bool:
        return _first_skew_violation(self._rows) is None


def _first_skew_violation(rows) -> tuple[int, int] | None:
    n = len(rows)
    for i in range(n):
        if len(rows[i]) != n:
            raise DimensionError("skew-symmetric matrices must be square")
        for j in range(i, n):
            if rows[i][j] != -rows[j][i]:
                return i, j
    return None


class SkewMatrix(Matrix):
    """Square matrix with ``A[i, j] == -A[j, i]`` (validated on construction)."""

    __slots__ = ()

    def __init__(self, rows: Iterable[Sequence[Number]]):
        super().__init__(rows)
        if self.nrows != self.ncols:
            raise DimensionError(f"skew-symmetric matrix must be square, got {self.shape}")
        bad = _first_skew_violation(self._rows)
        if bad is not None:
            raise SkewSymmetryError(bad[0] + 1, bad[1] + 1)

    @classmethod
    def _trusted(cls, rows: tuple[tuple[Number, ...], ...]) -> SkewMatrix:
        # Skips validation; callers build rows that are skew by construction.
        obj = object.__new__(cls)
        obj._rows = rows
        obj.nrows = obj.ncols = len(rows)
        obj._hash = None
        return obj

    @property
    def n(self) -> int:
        return self.nrows

    def __neg__(self) -> SkewMatrix:
        return SkewMatrix._trusted(tuple(tuple(-x for x in r) for r in self._rows))

    def transpose(self) -> SkewMatrix:
        return -self

    def upper(self) -> list[Number]:
        """Strict upper triangle in row-major order."""
        return [self._rows[i][j] for i in range(self.n) for j in range(i + 1, self.n)]

    def entry_key(self) -> tuple[Number, ...]:
        return tuple(self.upper())


def new_skew(n: int, upper: Sequence[Number]) -> SkewMatrix:
    """Build a skew-symmetric matrix from its strict upper triangle.

    >>> new_skew(2, [1]).tolist()
    [[0, 1], [-1, 0]]
    """
    if n < 1:
        raise DimensionError("dimension must be positive")
    if len(upper) != n * (n - 1) // 2:
        raise DimensionError(f"n={n} needs {n * (n - 1) // 2} upper entries, got {len(upper)}")
    rows = [[0] * n for _ in range(n)]
    it = iter(upper)
    for i in range(n):
        for j in range(i + 1, n):
            v = _normalize(next(it))
            rows[i][j] = v
            rows[j][i] = -v
    return SkewMatrix._trusted(tuple(tuple(r) for r in rows))


def as_skew(M: Matrix) -> SkewMatrix:
    return M if isinstance(M, SkewMatrix) else SkewMatrix(M.rows)


def submatrix(M: Matrix, rows: VertexSubset, cols: VertexSubset) -> Matrix:
    """Block ``M[rows, cols]`` with indices in ascending order."""
    check_within(rows, M.nrows)
    check_within(cols, M.ncols)
    ri, ci = members(rows), members(cols)
    data = M.rows
    return Matrix(([data[i][j] for j in ci] for i in ri), ncols=len(ci))


def principal_submatrix(M: Matrix, X: VertexSubset) -> Matrix:
    """``M[X]``; stays a :class:`SkewMatrix` when ``M`` is one."""
    check_within(X, M.nrows)
    idx = members(X)
    data = M.rows
    rows = tuple(tuple(data[i][j] for j in idx) for i in idx)
    if isinstance(M, SkewMatrix):
        return SkewMatrix._trusted(rows)
    return Matrix(rows, ncols=len(idx))


def _integer_rows(M: Matrix) -> tuple[list[list[int]], Number]:
    """Rows scaled to integers, and the factor ``det(M) = det(rows) / factor``."""
    out = []
    factor: Number = 1
    for r in M.rows:
        d = 1
        for x in r:
            if isinstance(x, Fraction):
                d = lcm(d, x.denominator)
        if d == 1:
            out.append(list(r))
        else:
            out.append([int(x * d) for x in r])
            factor *= d
    return out, factor


def _bareiss_det(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
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
        p = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * p - f * rk[j]) // prev
        prev = p
    return sign * a[n - 1][n - 1]


def determinant(M: Matrix) -> Number:
    """Exact determinant by fraction-free (Bareiss) elimination.

    The 0x0 determinant is 1.
    """
    if not M.is_square:
        raise DimensionError(f"determinant needs a square matrix, got {M.shape}")
    a, factor = _integer_rows(M)
    d = _bareiss_det(a)
    if factor == 1:
        return d
    return _normalize(Fraction(d, factor))


def rank(M: Matrix) -> int:
    """Exact rank over the rationals (fraction-free row echelon)."""
    a, _ = _integer_rows(M)
    m, ncols = M.nrows, M.ncols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        rr = a[r]
        for i in range(r + 1, m):
            ri = a[i]
            f = ri[c]
            for j in range(c + 1, ncols):
                ri[j] = (ri[j] * p - f * rr[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    return r


def _pf_expand(a, idx: list[int]) -> Number:
    # Expansion along the first index: sum over partners j with sign (-1)^(pos-1).
    if not idx:
        return 1
    i = idx[0]
    rest = idx[1:]
    total = 0
    for pos, j in enumerate(rest):
        v = a[i][j]
        if v == 0:
            continue
        term = v * _pf_expand(a, rest[:pos] + rest[pos + 1:])
        total += -term if pos & 1 else term
    return total


def pfaffian_expansion(A: SkewMatrix) -> Number:
    """Pfaffian as the signed sum over perfect matchings."""
    if A.n % 2:
        raise ParityError(f"Pfaffian needs even order, got n={A.n}")
    return _pf_expand(A.rows, list(range(A.n)))


def pfaffian_elimination(A: SkewMatrix) -> Number:
    """Pfaffian by fraction-free skew elimination.

    Each step pivots on the pair (0, 1) and replaces the trailing block by
    the 4x4 Pfaffian update divided by the previous pivot; all divisions are
    exact, so intermediate entries stay integral.
    """
    if A.n % 2:
        raise ParityError(f"Pfaffian needs even order, got n={A.n}")
    L = 1
    for r in A.rows:
        for x in r:
            if isinstance(x, Fraction):
                L = lcm(L, x.denominator)
    # pf(L * A) == L**(n/2) * pf(A)
    a = [[int(x * L) for x in r] for r in A.rows]
    sign = 1
    prev = 1
    while a:
        m = len(a)
        j = next((j for j in range(1, m) if a[0][j] != 0), None)
        if j is None:
            return 0
        if j != 1:
            # Simultaneous row/column swap negates the Pfaffian.
            a[1], a[j] = a[j], a[1]
            for row in a:
                row[1], row[j] = row[j], row[1]
            sign = -sign
        p = a[0][1]
        if m == 2:
            pf = sign * p
            break
        r0, r1 = a[0], a[1]
        a = [
            [(p * a[k][l] + r1[k] * r0[l] - r0[k] * r1[l]) // prev for l in range(2, m)]
            for k in range(2, m)
        ]
        prev = p
    else:
        pf = sign
    if L != 1:
        return _normalize(Fraction(pf, L ** (A.n // 2)))
    return pf


def pfaffian(A: SkewMatrix) -> Number:
    """Pfaffian of an even-order skew-symmetric matrix; ``pf(A)**2 == det(A)``."""
    if A.n % 2:
        raise ParityError(f"Pfaffian needs even order, got n={A.n}")
    if A.n <= PFAFFIAN_EXPANSION_MAX:
        return pfaffian_expansion(A)
    return pfaffian_elimination(A)


# -- text format -----------------------------------------------------------


def parse_matrix(text: str) -> SkewMatrix:
    """Parse ``n`` followed by ``n*n`` integers, row-major, whitespace-separated."""
    tokens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        col = 0
        for part in line.split():
            col = line.index(part, col) + 1
            tokens.append((part, lineno, col))
            col += len(part) - 1
    if not tokens:
        raise MatrixFormatError("empty matrix file")

    def as_int(tok):
        s, ln, c = tok
        try:
            return int(s)
        except ValueError:
            raise MatrixFormatError(f"expected an integer, got {s!r}", ln, c) from None

    n = as_int(tokens[0])
    if n < 1:
        raise MatrixFormatError(f"dimension must be positive, got {n}", tokens[0][1], tokens[0][2])
    body = tokens[1:]
    if len(body) != n * n:
        where = body[n * n] if len(body) > n * n else (tokens[-1] if len(body) < n * n else None)
        raise MatrixFormatError(
            f"expected {n * n} entries for n={n}, got {len(body)}",
            where[1] if where else None,
            where[2] if where else None,
        )
    vals = [as_int(t) for t in body]
    rows = [vals[i * n:(i + 1) * n] for i in range(n)]
    return SkewMatrix(rows)


def format_matrix(M: Matrix) -> str:
    """Inverse of :func:`parse_matrix` (columns right-aligned)."""
    width = max((len(str(x)) for r in M.rows for x in r), default=1)
    lines = [str(M.nrows)]
    for r in M.rows:
        lines.append(" ".join(str(x).rjust(width) for x in r))
    return "\n".join(lines) + "\n"


def load_matrix(path) -> SkewMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())
