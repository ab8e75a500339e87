"""Lie algebras given by structure constants, and coordinate subspaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .linalg import ZERO, ONE, Matrix, nullspace_rows, row_basis, to_rational, _rref_rows


Vector = tuple  # tuple of Fraction


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def add(u, v) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u) -> Vector:
    return tuple(c * a for a in u)


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


@dataclass
class ValidationReport:
    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


class InvalidAlgebraError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Structure constants ``c[i][j]`` = coordinates of ``[e_i, e_j]``."""

    dim: int
    names: tuple
    c: tuple

    def __post_init__(self):
        if len(self.names) != self.dim:
            raise ValueError("need one name per basis element")
        if len(self.c) != self.dim or any(len(row) != self.dim or any(len(v) != self.dim for v in row) for row in self.c):
            raise ValueError("structure-constant tensor has the wrong shape")

    @classmethod
    def from_brackets(cls, names: Sequence[str], brackets: dict) -> "LieAlgebra":
        """Build from a sparse table ``{(i, j): {k: coeff}}`` with i, j, k names or indices.

        Only one of ``(i, j)`` / ``(j, i)`` needs to be given.
        """
        names = tuple(names)
        n = len(names)
        index = {nm: k for k, nm in enumerate(names)}

        def ix(a):
            return a if isinstance(a, int) else index[a]

        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (a, b), out in brackets.items():
            i, j = ix(a), ix(b)
            for k, val in out.items():
                v = to_rational(val)
                c[i][j][ix(k)] += v
                c[j][i][ix(k)] -= v
        return cls(n, names, tuple(tuple(tuple(v) for v in row) for row in c))

    @classmethod
    def from_tensor(cls, names: Sequence[str], c) -> "LieAlgebra":
        return cls(len(names), tuple(names), tuple(tuple(tuple(to_rational(x) for x in v) for v in row) for row in c))

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self.c == other.c

    def __hash__(self):
        return hash((self.dim, self.c))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, basis={list(self.names)})"

    @cached_property
    def _nonzero(self) -> tuple:
        """Sparse ``(i, j, [(k, c_ijk)])`` for i < j with a nonzero bracket."""
        out = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                nz = [(k, x) for k, x in enumerate(self.c[i][j]) if x]
                if nz:
                    out.append((i, j, nz))
        return tuple(out)

    def is_abelian(self) -> bool:
        return not self._nonzero

    def bracket(self, u: Sequence, v: Sequence) -> Vector:
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        out = [ZERO] * self.dim
        for i, j, nz in self._nonzero:
            coef = u[i] * v[j] - u[j] * v[i]
            if coef:
                for k, x in nz:
                    out[k] += coef * x
        return tuple(out)

    @cached_property
    def ad(self) -> tuple:
        """``ad[i]`` is the matrix of ``ad e_i`` (column j = ``[e_i, e_j]``)."""
        n = self.dim
        return tuple(Matrix(n, n, tuple(tuple(self.c[i][j][k] for j in range(n)) for k in range(n))) for i in range(n))

    def ad_of(self, u: Sequence) -> Matrix:
        n = self.dim
        cols = [self.bracket(u, unit(n, j)) for j in range(n)]
        return Matrix(n, n, tuple(tuple(cols[j][k] for j in range(n)) for k in range(n)))

    def renamed(self, names: Sequence[str]) -> "LieAlgebra":
        return LieAlgebra(self.dim, tuple(names), self.c)


def abelian(n: int, prefix: str = "a") -> LieAlgebra:
    return LieAlgebra.from_brackets([f"{prefix}{i + 1}" for i in range(n)], {})


# ---------------------------------------------------------------------------
# validation

def validate(g: LieAlgebra) -> ValidationReport:
    """Check antisymmetry and the Jacobi identity exactly.

    Failures are ``("antisymmetry", i, j)`` or ``("jacobi", i, j, k)`` tuples.
    """
    n = g.dim
    failures = []
    for i in range(n):
        if any(g.c[i][i]):
            failures.append(("antisymmetry", i, i))
        for j in range(i + 1, n):
            if any(a != -b for a, b in zip(g.c[i][j], g.c[j][i])):
                failures.append(("antisymmetry", i, j))
    if failures:
        return ValidationReport(False, failures)
    e = [unit(n, i) for i in range(n)]
    for i, j, k in combinations(range(n), 3):
        s = add(add(g.bracket(g.c[i][j], e[k]), g.bracket(g.c[j][k], e[i])), g.bracket(g.c[k][i], e[j]))
        if any(s):
            failures.append(("jacobi", i, j, k))
    return ValidationReport(not failures, failures)


def require_valid(g: LieAlgebra) -> LieAlgebra:
    rep = validate(g)
    if not rep.ok:
        raise InvalidAlgebraError(f"not a Lie algebra; first failure {rep.failures[0]}")
    return g


# ---------------------------------------------------------------------------
# subspaces

@dataclass(frozen=True)
class Subspace:
    """Row space of ``basis``; the basis is kept in canonical RREF."""

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, row_basis(list(vectors), ambient_dim))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix(0, n, ()))

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n))

    @classmethod
    def coordinate(cls, n: int, indices) -> "Subspace":
        return cls.span([unit(n, i) for i in indices], n)

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> tuple:
        return self.basis.data

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient_dim})"

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.vectors + other.vectors, self.ambient_dim)

    def contains(self, v: Sequence) -> bool:
        if not any(v):
            return True
        return len(_rref_rows([list(r) for r in self.vectors] + [list(v)], self.ambient_dim)[1]) == self.dim

    def contains_space(self, other: "Subspace") -> bool:
        return (self + other).dim == self.dim

    def intersect(self, other: "Subspace") -> "Subspace":
        # solve a·A = b·B
        a, b = self.vectors, other.vectors
        if not a or not b:
            return Subspace.zero(self.ambient_dim)
        cols = [[a[i][k] for i in range(len(a))] + [-b[i][k] for i in range(len(b))] for k in range(self.ambient_dim)]
        ns = nullspace_rows(cols, len(a) + len(b))
        vecs = []
        for coeffs in ns.data:
            v = [ZERO] * self.ambient_dim
            for ci, row in zip(coeffs[: len(a)], a):
                if ci:
                    for k, x in enumerate(row):
                        v[k] += ci * x
            vecs.append(v)
        return Subspace.span(vecs, self.ambient_dim)

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the RREF basis (read off at pivot columns)."""
        pivots = [next(k for k, x in enumerate(r) if x) for r in self.vectors]
        coeffs = tuple(v[p] for p in pivots)
        recon = [ZERO] * self.ambient_dim
        for cf, r in zip(coeffs, self.vectors):
            if cf:
                for k, x in enumerate(r):
                    recon[k] += cf * x
        if tuple(recon) != tuple(v):
            raise ValueError("vector is not in the subspace")
        return coeffs

    def pivots(self) -> list[int]:
        return [next(k for k, x in enumerate(r) if x) for r in self.vectors]

    def complement_indices(self) -> list[int]:
        """Coordinate indices outside the pivot columns; their units span a complement."""
        piv = set(self.pivots())
        return [k for k in range(self.ambient_dim) if k not in piv]


def bracket_space(g: LieAlgebra, s: Subspace, t: Subspace) -> Subspace:
    return Subspace.span([g.bracket(u, v) for u in s.vectors for v in t.vectors], g.dim)


def center(g: LieAlgebra) -> Subspace:
    """Nullspace of the stacked ad-matrices."""
    rows = [r for a in g.ad for r in a.data]
    return Subspace(g.dim, nullspace_rows(rows, g.dim))


def centralizer(g: LieAlgebra, s: Subspace) -> Subspace:
    rows = [r for v in s.vectors for r in g.ad_of(v).data]
    return Subspace(g.dim, nullspace_rows(rows, g.dim))


def derived_series(g: LieAlgebra) -> list[Subspace]:
    series = [Subspace.whole(g.dim)]
    while True:
        nxt = bracket_space(g, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    whole = Subspace.whole(g.dim)
    series = [whole]
    while True:
        nxt = bracket_space(g, whole, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def upper_central_series(g: LieAlgebra) -> list[Subspace]:
    """``C⁰ = 0 ⊂ C¹ = C(g) ⊂ …`` until it stops growing."""
    n = g.dim
    series = [Subspace.zero(n)]
    while True:
        cur = series[-1]
        # x with [x, e_j] ∈ cur for all j: project brackets onto a complement of cur
        keep = cur.complement_indices()
        rows = []
        for j in range(n):
            col_images = [g.c[i][j] for i in range(n)]  # [e_i, e_j] as i varies
            # coefficient of x_i in [x, e_j], reduced modulo cur, coordinate k in keep
            reduced = [_reduce_vec(cur, img) for img in col_images]
            for k in keep:
                rows.append([reduced[i][k] for i in range(n)])
        nxt = Subspace(n, nullspace_rows(rows, n))
        if nxt == cur:
            return series
        series.append(nxt)


def _reduce_vec(s: Subspace, v: Sequence) -> list:
    """Reduce ``v`` modulo ``s`` so it vanishes at the pivot columns of ``s``."""
    v = list(v)
    for r in s.vectors:
        p = next(k for k, x in enumerate(r) if x)
        f = v[p]
        if f:
            for k, x in enumerate(r):
                if x:
                    v[k] -= f * x
    return v


def is_subalgebra(g: LieAlgebra, s: Subspace) -> bool:
    return s.contains_space(bracket_space(g, s, s))


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    return s.contains_space(bracket_space(g, Subspace.whole(g.dim), s))


def restrict(g: LieAlgebra, s: Subspace, names: Sequence[str] | None = None) -> LieAlgebra:
    """The subalgebra ``s`` as a Lie algebra in its RREF basis."""
    if not is_subalgebra(g, s):
        raise InvalidAlgebraError("subspace is not closed under the bracket")
    vecs = s.vectors
    m = len(vecs)
    c = [[s.coordinates(g.bracket(vecs[i], vecs[j])) for j in range(m)] for i in range(m)]
    if names is None:
        names = [_vec_name(g, v) for v in vecs]
    return LieAlgebra(m, tuple(names), tuple(tuple(row) for row in c))


def _vec_name(g: LieAlgebra, v) -> str:
    nz = [(k, x) for k, x in enumerate(v) if x]
    if len(nz) == 1 and nz[0][1] == 1:
        return g.names[nz[0][0]]
    return "+".join(f"{x}*{g.names[k]}" if x != 1 else g.names[k] for k, x in nz)


def quotient(g: LieAlgebra, i: Subspace) -> tuple[LieAlgebra, Matrix]:
    """``g / i`` on the basis ``{e_k : k not a pivot column of i}``.

    Returns the algebra and the projection matrix (quotient coords x g coords).
    """
    if not is_ideal(g, i):
        raise InvalidAlgebraError("can only quotient by an ideal")
    keep = i.complement_indices()
    m = len(keep)

    def project(v):
        red = _reduce_vec(i, v)
        return tuple(red[k] for k in keep)

    c = [[project(g.c[a][b]) for b in keep] for a in keep]
    proj_cols = [project(unit(g.dim, k)) for k in range(g.dim)]
    projection = Matrix(m, g.dim, tuple(tuple(proj_cols[k][r] for k in range(g.dim)) for r in range(m)))
    q = LieAlgebra(m, tuple(g.names[k] for k in keep), tuple(tuple(row) for row in c))
    return q, projection


def direct_sum(g1: LieAlgebra, g2: LieAlgebra, names: Sequence[str] | None = None) -> LieAlgebra:
    n1, n2 = g1.dim, g2.dim
    n = n1 + n2
    c = [[zero_vec(n) for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            c[i][j] = tuple(g1.c[i][j]) + zero_vec(n2)
    for i in range(n2):
        for j in range(n2):
            c[n1 + i][n1 + j] = zero_vec(n1) + tuple(g2.c[i][j])
    if names is None:
        names = _disjoint_names(g1.names, g2.names)
    return LieAlgebra(n, tuple(names), tuple(tuple(row) for row in c))


def _disjoint_names(a, b) -> list[str]:
    if set(a).isdisjoint(b):
        return list(a) + list(b)
    return [f"{x}_1" for x in a] + [f"{x}_2" for x in b]
