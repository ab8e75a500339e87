"""Representations as lists of operator matrices, and cyclic quadruples."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .lie import LieAlgebra, ValidationReport, direct_sum
from .forms import BilinearForm, SolutionSpace
from .linalg import ZERO, Matrix, nullspace_rows, to_rational


@dataclass(frozen=True)
class Representation:
    """``ops[i]`` is the action of basis element ``e_i`` on the module."""

    algebra: LieAlgebra
    module_dim: int
    ops: tuple

    def __post_init__(self):
        if len(self.ops) != self.algebra.dim:
            raise ValueError("need one operator per basis element")
        for op in self.ops:
            if op.shape != (self.module_dim, self.module_dim):
                raise ValueError(f"operators must be {self.module_dim}x{self.module_dim}")

    def act(self, x, v) -> tuple:
        """``π(x) v`` for algebra coordinates ``x``."""
        return self.operator(x).apply(v)

    def operator(self, x) -> Matrix:
        out = Matrix.zeros(self.module_dim, self.module_dim)
        for c, op in zip(x, self.ops):
            if c:
                out = out + op.scale(c)
        return out


def validate_rep(r: Representation) -> ValidationReport:
    """Homomorphism check ``[π(e_i), π(e_j)] = Σ c_ijk π(e_k)`` for i < j."""
    g = r.algebra
    failures = []
    for i, j in combinations(range(g.dim), 2):
        lhs = r.ops[i] @ r.ops[j] - r.ops[j] @ r.ops[i]
        if lhs != r.operator(g.c[i][j]):
            failures.append((i, j))
    return ValidationReport(not failures, failures)


def trivial_rep(g: LieAlgebra, d: int = 1) -> Representation:
    return Representation(g, d, tuple(Matrix.zeros(d, d) for _ in range(g.dim)))


def adjoint_rep(g: LieAlgebra) -> Representation:
    return Representation(g, g.dim, g.ad)


def dual_rep(r: Representation) -> Representation:
    return Representation(r.algebra, r.module_dim, tuple(-op.T for op in r.ops))


def conjugate_rep(r: Representation, p: Matrix) -> Representation:
    """``p⁻¹ π(x) p``: the same module in a new basis."""
    from .linalg import inverse

    pinv = inverse(p)
    return Representation(r.algebra, r.module_dim, tuple(pinv @ op @ p for op in r.ops))


def tensor_rep(r1: Representation, r2: Representation) -> Representation:
    """Representation of ``g1 ⊕ g2`` on ``V1 ⊗ V2`` (index ``i * d2 + j``)."""
    g = direct_sum(r1.algebra, r2.algebra)
    i1 = Matrix.identity(r1.module_dim)
    i2 = Matrix.identity(r2.module_dim)
    ops = tuple(op.kron(i2) for op in r1.ops) + tuple(i1.kron(op) for op in r2.ops)
    return Representation(g, r1.module_dim * r2.module_dim, ops)


def vk_module(k: int, g: LieAlgebra | None = None) -> Representation:
    """The (k+1)-dim irreducible sl(2)-module on basis v_0..v_k.

    ``H v_i = (k-2i) v_i``, ``Y v_i = (i+1) v_{i+1}``, ``X v_i = (k-i+1) v_{i-1}``;
    operators are ordered as the (H, X, Y) basis.
    """
    if k < 0:
        raise ValueError("highest weight must be non-negative")
    if g is None:
        from .catalog import sl2

        g = sl2()
    n = k + 1
    h = [[ZERO] * n for _ in range(n)]
    x = [[ZERO] * n for _ in range(n)]
    y = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        h[i][i] = Fraction(k - 2 * i)
        if i + 1 <= k:
            y[i + 1][i] = Fraction(i + 1)
        if i - 1 >= 0:
            x[i - 1][i] = Fraction(k - i + 1)
    return Representation(g, n, (Matrix.from_rows(h), Matrix.from_rows(x), Matrix.from_rows(y)))


def is_symmetric_action(r: Representation, k: BilinearForm) -> bool:
    """True when every ``π(e_i)`` is self-adjoint for ``k``: ``opᵀ K = K op``."""
    if k.algebra_dim != r.module_dim:
        raise ValueError("form and module dimensions differ")
    return all(op.T @ k.m == k.m @ op for op in r.ops)


def symmetric_action_forms(r: Representation) -> SolutionSpace:
    """Basis of the symmetric forms K on the module for which the action is symmetric."""
    from .forms import _form_from_vector, sym_index

    d = r.module_dim
    idx, t = sym_index(d)
    rows = []
    for op in r.ops:
        # (opᵀ K)[a][b] - (K op)[a][b] = Σ_m op[m][a] K[m][b] - K[a][m] op[m][b]
        for a in range(d):
            for b in range(a, d):
                row = [ZERO] * t
                for m in range(d):
                    if op[m, a]:
                        row[idx[(m, b)]] += op[m, a]
                    if op[m, b]:
                        row[idx[(a, m)]] -= op[m, b]
                if any(row):
                    rows.append(row)
    ns = nullspace_rows(rows, t)
    return SolutionSpace([_form_from_vector(d, v) for v in ns.data], len(rows), t)


# ---------------------------------------------------------------------------
# cyclic quadruples

@dataclass(frozen=True)
class Quadruple:
    """(g, π, V, ρ) with row r of ``rho`` the covector ρ(e_r) on V."""

    rep: Representation
    rho: Matrix

    def __post_init__(self):
        if self.rho.shape != (self.rep.algebra.dim, self.rep.module_dim):
            raise ValueError("rho must be algebra_dim x module_dim")


def quadruple_system(r: Representation) -> list[list[Fraction]]:
    """Linear equations on ρ (unknown ``r * d + a`` is ρ[r][a]).

    For each basis pair i < j and module index a:
    ``Σ_m c_ijm ρ[m][a] − Σ_b π_i[b][a] ρ[j][b] + Σ_b π_j[b][a] ρ[i][b] = 0``.
    """
    g = r.algebra
    d = r.module_dim
    rows = []
    for i, j in combinations(range(g.dim), 2):
        cij = g.c[i][j]
        pi, pj = r.ops[i], r.ops[j]
        for a in range(d):
            row = [ZERO] * (g.dim * d)
            for m, x in enumerate(cij):
                if x:
                    row[m * d + a] += x
            for b in range(d):
                if pi[b, a]:
                    row[j * d + b] -= pi[b, a]
                if pj[b, a]:
                    row[i * d + b] += pj[b, a]
            if any(row):
                rows.append(row)
    return rows


def quadruple_defect(q: Quadruple) -> list[tuple[int, int]]:
    """Basis pairs (i, j) where ρ([x,y]) + π*(x)ρ(y) − π*(y)ρ(x) ≠ 0."""
    r = q.rep
    g = r.algebra
    rho = q.rho
    bad = []
    for i, j in combinations(range(g.dim), 2):
        lhs = _rho_of(rho, g.c[i][j])
        t1 = r.ops[i].T.apply(rho.row(j))
        t2 = r.ops[j].T.apply(rho.row(i))
        if any(a - b + c for a, b, c in zip(lhs, t1, t2)):
            bad.append((i, j))
    return bad


def _rho_of(rho: Matrix, x) -> tuple:
    return rho.T.apply(x)


def quadruple_space(r: Representation) -> SolutionSpace:
    """Basis of all ρ making (g, π, V, ρ) a cyclic quadruple."""
    g = r.algebra
    d = r.module_dim
    rows = quadruple_system(r)
    ns = nullspace_rows(rows, g.dim * d)
    basis = [Matrix(g.dim, d, tuple(tuple(v[m * d + a] for a in range(d)) for m in range(g.dim))) for v in ns.data]
    return SolutionSpace(basis, len(rows), g.dim * d)


def in_span(m: Matrix, basis) -> bool:
    """Whether ``m`` lies in the span of the matrices in ``basis``."""
    from .linalg import rank

    vecs = [list(b.entries) for b in basis]
    if not vecs:
        return m.is_zero()
    base = rank(Matrix.from_rows(vecs))
    return rank(Matrix.from_rows(vecs + [list(m.entries)])) == base


def make_rep(g: LieAlgebra, ops) -> Representation:
    mats = tuple(op if isinstance(op, Matrix) else Matrix.from_rows(op) for op in ops)
    d = mats[0].rows if mats else 0
    return Representation(g, d, mats)


def natural_rep(g: LieAlgebra, matrices) -> Representation:
    """Representation whose operators are the given defining matrices."""
    return make_rep(g, [Matrix.from_rows([[to_rational(x) for x in row] for row in m]) for m in matrices])
