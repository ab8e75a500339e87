"""Symmetric bilinear forms on Lie algebras.

Solvers for cyclic forms, B([x,y],z) + B([y,z],x) + B([z,x],y) = 0, and for
ad-invariant forms, plus the isotropy/orthogonality tools used to test the
structural lemmas on concrete instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .lie import (
    InvalidAlgebraError,
    LieAlgebra,
    Subspace,
    dot,
    is_ideal,
    is_subalgebra,
    restrict,
    unit,
)
from .linalg import ZERO, Matrix, nullspace_rows, rank, signature


class DegenerateFormError(ValueError):
    def __init__(self, msg, radical: Subspace | None = None):
        super().__init__(msg)
        self.radical = radical


@dataclass(frozen=True)
class BilinearForm:
    algebra_dim: int
    m: Matrix

    def __post_init__(self):
        if self.m.shape != (self.algebra_dim, self.algebra_dim):
            raise ValueError(f"form matrix must be {self.algebra_dim}x{self.algebra_dim}")
        if not self.m.is_symmetric():
            raise ValueError("form matrix is not symmetric")

    @classmethod
    def from_rows(cls, rows) -> "BilinearForm":
        m = Matrix.from_rows(rows)
        return cls(m.rows, m)

    @classmethod
    def zero(cls, n: int) -> "BilinearForm":
        return cls(n, Matrix.zeros(n, n))

    def __call__(self, u: Sequence, v: Sequence) -> Fraction:
        return dot(u, self.m.apply(v))

    def restricted(self, s: Subspace) -> "BilinearForm":
        """Gram matrix on the RREF basis of ``s``."""
        b = s.basis
        return BilinearForm(s.dim, b @ self.m @ b.T)

    def is_nondegenerate(self) -> bool:
        return rank(self.m) == self.algebra_dim

    def __add__(self, other: "BilinearForm") -> "BilinearForm":
        return BilinearForm(self.algebra_dim, self.m + other.m)

    def scaled(self, c) -> "BilinearForm":
        return BilinearForm(self.algebra_dim, self.m.scale(c))


def _check_dims(g: LieAlgebra, b: BilinearForm):
    if b.algebra_dim != g.dim:
        raise ValueError(f"form is on a {b.algebra_dim}-dim space, algebra has dim {g.dim}")


def cyclic_residual(g: LieAlgebra, b: BilinearForm, x, y, z) -> Fraction:
    return b(g.bracket(x, y), z) + b(g.bracket(y, z), x) + b(g.bracket(z, x), y)


def cyclic_defect(g: LieAlgebra, b: BilinearForm) -> list[tuple[int, int, int, Fraction]]:
    """Nonzero cyclic sums over basis triples i < j < k, as ``(i, j, k, residual)``."""
    _check_dims(g, b)
    bm = b.m.data
    out = []
    for i, j, k in combinations(range(g.dim), 3):
        r = dot(g.c[i][j], bm[k]) + dot(g.c[j][k], bm[i]) + dot(g.c[k][i], bm[j])
        if r:
            out.append((i, j, k, r))
    return out


def is_cyclic(g: LieAlgebra, b: BilinearForm) -> bool:
    return not cyclic_defect(g, b)


# ---------------------------------------------------------------------------
# solution spaces

def sym_index(n: int):
    """Upper-triangle row-major unknown numbering for a symmetric n x n form."""
    idx = {}
    t = 0
    for a in range(n):
        for b in range(a, n):
            idx[(a, b)] = idx[(b, a)] = t
            t += 1
    return idx, t


def _form_from_vector(n: int, v) -> BilinearForm:
    idx, _ = sym_index(n)
    return BilinearForm(n, Matrix(n, n, tuple(tuple(v[idx[(a, b)]] for b in range(n)) for a in range(n))))


def _term(row, idx, vec, k):
    """Add the coefficients of B(vec, e_k) to ``row``."""
    for m, x in enumerate(vec):
        if x:
            row[idx[(m, k)]] += x


@dataclass
class SolutionSpace:
    """Basis of a linear family of forms plus the shape of the system that cut it out."""

    basis: list
    equations: int
    unknowns: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i):
        return self.basis[i]


def cyclic_system(g: LieAlgebra, ordered: bool = False) -> list[list[Fraction]]:
    """Rows of the linear system for cyclic forms.

    By default one equation per i < j < k; ``ordered=True`` uses every ordered
    triple (same rank, kept for cross-checking).
    """
    n = g.dim
    idx, t = sym_index(n)
    if ordered:
        triples = ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
    else:
        triples = combinations(range(n), 3)
    rows = []
    for i, j, k in triples:
        row = [ZERO] * t
        _term(row, idx, g.c[i][j], k)
        _term(row, idx, g.c[j][k], i)
        _term(row, idx, g.c[k][i], j)
        if any(row):
            rows.append(row)
    return rows


def cyclic_space(g: LieAlgebra) -> SolutionSpace:
    """All symmetric forms on ``g`` satisfying the cyclic identity."""
    n = g.dim
    _, t = sym_index(n)
    rows = cyclic_system(g)
    ns = nullspace_rows(rows, t)
    return SolutionSpace([_form_from_vector(n, v) for v in ns.data], len(rows), t)


def invariant_system(g: LieAlgebra) -> list[list[Fraction]]:
    n = g.dim
    idx, t = sym_index(n)
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(j, n):
                # B([e_i,e_j], e_k) + B(e_j, [e_i,e_k]) = 0
                row = [ZERO] * t
                _term(row, idx, g.c[i][j], k)
                _term(row, idx, g.c[i][k], j)
                if any(row):
                    rows.append(row)
    return rows


def invariant_space(g: LieAlgebra) -> SolutionSpace:
    n = g.dim
    _, t = sym_index(n)
    rows = invariant_system(g)
    ns = nullspace_rows(rows, t)
    return SolutionSpace([_form_from_vector(n, v) for v in ns.data], len(rows), t)


def is_invariant(g: LieAlgebra, b: BilinearForm) -> bool:
    e = [unit(g.dim, i) for i in range(g.dim)]
    return all(
        b(g.c[i][j], e[k]) + b(e[j], g.c[i][k]) == 0
        for i in range(g.dim) for j in range(g.dim) for k in range(g.dim)
    )


def killing_form(g: LieAlgebra) -> BilinearForm:
    ad = g.ad
    n = g.dim
    return BilinearForm(n, Matrix(n, n, tuple(tuple((ad[i] @ ad[j]).trace() for j in range(n)) for i in range(n))))


# ---------------------------------------------------------------------------
# orthogonality and isotropy

def form_radical(g: LieAlgebra, b: BilinearForm) -> Subspace:
    _check_dims(g, b)
    return Subspace(g.dim, nullspace_rows(b.m.data, g.dim))


def orthogonal_complement(g: LieAlgebra, b: BilinearForm, s: Subspace) -> Subspace:
    _check_dims(g, b)
    rows = [b.m.apply(v) for v in s.vectors]
    return Subspace(g.dim, nullspace_rows(rows, g.dim))


def index_of(b: BilinearForm) -> int:
    """Maximal dimension of an isotropic subspace, ``min(p, q) + null``."""
    p, q, r = signature(b.m)
    return min(p, q) + r


def is_isotropic(g: LieAlgebra, b: BilinearForm, s: Subspace) -> bool:
    _check_dims(g, b)
    vs = s.vectors
    return all(b(u, v) == 0 for a, u in enumerate(vs) for v in vs[a:])


def pairing_vanishes(b: BilinearForm, s: Subspace, t: Subspace) -> bool:
    return all(b(u, v) == 0 for u in s.vectors for v in t.vectors)


# ---------------------------------------------------------------------------
# decomposition criteria

@dataclass
class ABCReport:
    a_ok: bool
    b_ok: bool
    c_ok: bool
    witnesses: dict

    def __iter__(self):
        return iter((self.a_ok, self.b_ok, self.c_ok))

    @property
    def all_ok(self) -> bool:
        return self.a_ok and self.b_ok and self.c_ok


def check_abc(g: LieAlgebra, b: BilinearForm, h: Subspace, i: Subspace) -> ABCReport:
    """Evaluate the three conditions of the subalgebra ⊕ ideal cyclicity criterion.

    (a) b restricted to h and to i is cyclic; (b) cyclic sums with two
    arguments in i and one in h vanish; (c) the same with two in h, one in i.
    The conjunction is cross-checked against :func:`cyclic_defect`.
    """
    _check_dims(g, b)
    if not is_subalgebra(g, h):
        raise InvalidAlgebraError("h is not a subalgebra")
    if not is_ideal(g, i):
        raise InvalidAlgebraError("i is not an ideal")
    if h.dim + i.dim != g.dim or (h + i).dim != g.dim:
        raise InvalidAlgebraError("h and i do not split g as a direct sum")

    def triples_fail(xs, ys, zs, distinct_xy):
        bad = []
        for a, x in enumerate(xs):
            for bb, y in enumerate(ys):
                if distinct_xy and bb <= a:
                    continue
                for cc, z in enumerate(zs):
                    r = cyclic_residual(g, b, x, y, z)
                    if r:
                        bad.append((a, bb, cc, r))
        return bad

    hv, iv = h.vectors, i.vectors
    a_fail = [("h",) + w for w in cyclic_defect(restrict(g, h), b.restricted(h))]
    a_fail += [("i",) + w for w in cyclic_defect(restrict(g, i), b.restricted(i))]
    b_fail = triples_fail(iv, iv, hv, True)
    c_fail = triples_fail(hv, hv, iv, True)
    report = ABCReport(not a_fail, not b_fail, not c_fail, {"a": a_fail, "b": b_fail, "c": c_fail})
    if report.all_ok != is_cyclic(g, b):
        raise AssertionError("decomposition criterion disagrees with the direct cyclic check")
    return report


def split_along_ideal(g: LieAlgebra, b: BilinearForm, i: Subspace):
    """Split a cyclic metric algebra along an ideal on which the form is nondegenerate.

    Returns ``(g1, pi)``: ``g1`` is the orthogonal complement of ``i`` (a
    complementary subalgebra) and ``pi`` is the representation of ``g1`` (in
    its RREF basis) on ``i`` (in its RREF basis) given by the bracket.
    """
    from .reps import Representation

    _check_dims(g, b)
    if not is_cyclic(g, b):
        raise ValueError("form is not cyclic")
    if not is_ideal(g, i):
        raise InvalidAlgebraError("subspace is not an ideal")
    bi = b.restricted(i)
    if not bi.is_nondegenerate():
        rad = nullspace_rows(bi.m.data, i.dim)
        witness = Subspace.span([_combine(c, i.vectors, g.dim) for c in rad.data], g.dim)
        raise DegenerateFormError("form is degenerate on the ideal", witness)
    g1 = orthogonal_complement(g, b, i)
    if not is_subalgebra(g, g1):
        raise AssertionError("orthogonal complement of an ideal must be a subalgebra")
    if (g1 + i).dim != g.dim:
        raise AssertionError("complement does not span")
    alg1 = restrict(g, g1)
    ops = []
    for x in g1.vectors:
        cols = [i.coordinates(g.bracket(x, y)) for y in i.vectors]
        ops.append(Matrix(i.dim, i.dim, tuple(tuple(cols[c][r] for c in range(i.dim)) for r in range(i.dim))))
    return g1, Representation(alg1, i.dim, tuple(ops))


def _combine(coeffs, vectors, n):
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                out[k] += c * x
    return tuple(out)
