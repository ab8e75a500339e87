"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; a :class:`Matrix` is an immutable
row-major table of them.  Everything here is exact, so ranks and nullspace
dimensions are certain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def height(q: Fraction) -> int:
    return max(abs(q.numerator), q.denominator)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    data: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("entries do not match the declared shape")

    # -- construction -------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "Matrix":
        data = tuple(tuple(to_rational(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        vals = [to_rational(x) for x in entries]
        return cls(n, n, tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    # -- access -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        """Row-major flat sequence of entries."""
        return tuple(x for r in self.data for x in r)

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.data]

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    # -- arithmetic ---------------------------------------------------
    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)))

    def __add__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix(self.rows, self.cols, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix(self.rows, self.cols, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.data))

    def scale(self, c) -> "Matrix":
        c = to_rational(c)
        return Matrix(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.data))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols_b = other.T.data
        out = []
        for r in self.data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * c[k] for k, a in nz), ZERO) for c in cols_b))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        nz = [(k, x) for k, x in enumerate(v) if x]
        return tuple(sum((r[k] * x for k, x in nz), ZERO) for r in self.data)

    def is_zero(self) -> bool:
        return not any(x for r in self.data for x in r)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(self.data[i][j] == self.data[j][i] for i in range(self.rows) for j in range(i))

    def trace(self) -> Fraction:
        return sum((self.data[i][i] for i in range(min(self.rows, self.cols))), ZERO)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(len(rows), len(cols), tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product, index (i, j) -> i * other.rows + j."""
        out = []
        for r in self.data:
            for s in other.data:
                out.append(tuple(a * b for a in r for b in s))
        return Matrix(self.rows * other.rows, self.cols * other.cols, tuple(out))

    def congruent(self, s: "Matrix") -> "Matrix":
        """``sᵀ · self · s``."""
        return s.T @ self @ s


def _same_shape(a: Matrix, b: Matrix):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def block(blocks: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix; every row of blocks must agree on heights."""
    rows = []
    for brow in blocks:
        h = brow[0].rows
        for i in range(h):
            rows.append(tuple(x for b in brow for x in b.data[i]))
    cols = sum(b.cols for b in blocks[0])
    return Matrix(len(rows), cols, tuple(rows))


def block_diag(*ms: Matrix) -> Matrix:
    n = sum(m.cols for m in ms)
    rows = []
    offset = 0
    for m in ms:
        for r in m.data:
            rows.append((ZERO,) * offset + tuple(r) + (ZERO,) * (n - offset - m.cols))
        offset += m.cols
    return Matrix(len(rows), n, tuple(rows))


# ---------------------------------------------------------------------------
# row reduction

def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    rows = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r]
        inv = 1 / piv[c]
        if inv != 1:
            piv = [x * inv for x in piv]
            rows[r] = piv
        nz = [(k, piv[k]) for k in range(c, ncols) if piv[k]]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for k, x in nz:
                        row[k] -= f * x
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form.

    Returns ``(reduced, rank, pivot_cols)``; ``reduced`` has the same shape as
    ``m`` with zero rows at the bottom.
    """
    red, pivots = _rref_rows([list(r) for r in m.data], m.cols)
    rank = len(pivots)
    data = [tuple(r) for r in red] + [(ZERO,) * m.cols] * (m.rows - rank)
    return Matrix(m.rows, m.cols, tuple(data)), rank, pivots


def row_basis(rows: Iterable[Sequence], ncols: int) -> Matrix:
    """Canonical basis (nonzero RREF rows) of the span of ``rows``."""
    red, _ = _rref_rows([[to_rational(x) for x in r] for r in rows], ncols)
    return Matrix(len(red), ncols, tuple(tuple(r) for r in red))


def rank(m: Matrix) -> int:
    return len(_rref_rows([list(r) for r in m.data], m.cols)[1])


def nullspace_rows(rows: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    red, pivots = _rref_rows([list(r) for r in rows], ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in zip(red, pivots):
            if r[f]:
                v[p] = -r[f]
        basis.append(tuple(v))
    return Matrix(len(basis), ncols, tuple(basis))


def nullspace(m: Matrix) -> Matrix:
    """Basis of ``{v : m vᵀ = 0}`` as rows.

    Each basis row sets one free column to 1 and the other free columns to 0.
    """
    return nullspace_rows(m.data, m.cols)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    n = m.rows
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m.data)]
    red, pivots = _rref_rows(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return Matrix(n, n, tuple(tuple(r[n:]) for r in red[:n]))


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """One solution of ``m x = b`` (free variables set to 0), or None."""
    aug = [list(r) + [to_rational(x)] for r, x in zip(m.data, b)]
    red, pivots = _rref_rows(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, p in zip(red, pivots):
        x[p] = r[m.cols]
    return tuple(x)


# ---------------------------------------------------------------------------
# symmetric forms

class NotSymmetricError(ValueError):
    pass


def congruence_diagonalize(b: Matrix) -> list[Fraction]:
    """Diagonal of an exact symmetric congruence reduction of ``b``.

    Pivots on the nonzero diagonal entry of largest height; when the active
    block has zero diagonal but a nonzero entry ``b[i][j]``, adds row/col j
    to row/col i first (char 0 makes ``2 b[i][j]`` a usable pivot).
    """
    if b.rows != b.cols:
        raise NotSymmetricError(f"form matrix must be square, got {b.shape}")
    if not b.is_symmetric():
        raise NotSymmetricError("form matrix is not symmetric")
    a = b.tolist()
    n = b.rows
    active = list(range(n))
    diag: list[Fraction] = []
    while active:
        cand = [i for i in active if a[i][i]]
        if not cand:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j]), None)
            if pair is None:
                diag.extend(ZERO for _ in active)
                break
            i, j = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            cand = [i]
        p = max(cand, key=lambda i: (height(a[i][i]), -i))
        d = a[p][p]
        active.remove(p)
        for i in active:
            f = a[i][p] / d
            if f:
                for k in active:
                    a[i][k] -= f * a[p][k]
        for i in active:
            a[i][p] = a[p][i] = ZERO
        diag.append(d)
    return diag


def signature(b: Matrix) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` counts of the form's inertia."""
    d = congruence_diagonalize(b)
    pos = sum(1 for x in d if x > 0)
    neg = sum(1 for x in d if x < 0)
    return pos, neg, len(d) - pos - neg
