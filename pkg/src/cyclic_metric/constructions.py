"""Ways of building cyclic metric Lie algebras from smaller ones, and the
central reduction that undoes the one-dimensional double extension.

Every constructor validates its output (Jacobi + cyclic identity) before
returning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .forms import BilinearForm, cyclic_defect, form_radical, orthogonal_complement
from .lie import (
    LieAlgebra,
    Subspace,
    center,
    dot,
    unit,
    validate,
)
from .linalg import ZERO, ONE, Matrix, block, block_diag, inverse, solve
from .reps import Quadruple, Representation, adjoint_rep, quadruple_defect, validate_rep


class ConstructionError(ValueError):
    """A precondition failed; ``witness`` locates the offending basis elements."""

    def __init__(self, msg, witness=None):
        super().__init__(msg if witness is None else f"{msg} (witness {witness})")
        self.witness = witness


@dataclass(frozen=True)
class MetricAlgebra:
    algebra: LieAlgebra
    form: BilinearForm

    def __post_init__(self):
        if self.form.algebra_dim != self.algebra.dim:
            raise ValueError("form and algebra dimensions differ")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def is_cyclic(self) -> bool:
        return not cyclic_defect(self.algebra, self.form)

    def radical(self) -> Subspace:
        return form_radical(self.algebra, self.form)


def _certify(g: LieAlgebra, b: BilinearForm) -> MetricAlgebra:
    rep = validate(g)
    if not rep.ok:
        raise AssertionError(f"construction produced a non-Lie bracket: {rep.failures[0]}")
    bad = cyclic_defect(g, b)
    if bad:
        raise AssertionError(f"construction produced a non-cyclic form: {bad[0]}")
    return MetricAlgebra(g, b)


def _tensor(n):
    return [[[ZERO] * n for _ in range(n)] for _ in range(n)]


def _freeze(c):
    return tuple(tuple(tuple(v) for v in row) for row in c)


def _names(*groups) -> tuple:
    flat = [nm for grp in groups for nm in grp]
    if len(set(flat)) == len(flat):
        return tuple(flat)
    return tuple(f"{nm}_{g + 1}" for g, grp in enumerate(groups) for nm in grp)


def is_derivation(g: LieAlgebra, d: Matrix) -> bool:
    return derivation_defect(g, d) is None


def derivation_defect(g: LieAlgebra, d: Matrix):
    """First pair (i, j) with D[e_i,e_j] ≠ [De_i,e_j] + [e_i,De_j], or None."""
    n = g.dim
    cols = [d.col(j) for j in range(n)]
    for i, j in combinations(range(n), 2):
        lhs = d.apply(g.c[i][j])
        rhs = tuple(a + b for a, b in zip(g.bracket(cols[i], unit(n, j)), g.bracket(unit(n, i), cols[j])))
        if lhs != rhs:
            return (i, j)
    return None


# ---------------------------------------------------------------------------
# orthogonal semidirect product

def semidirect_bracket(g1: LieAlgebra, g2: LieAlgebra, pi: Representation) -> LieAlgebra:
    n1, n2 = g1.dim, g2.dim
    n = n1 + n2
    c = _tensor(n)
    for i in range(n1):
        for j in range(n1):
            c[i][j][:n1] = list(g1.c[i][j])
    for a in range(n2):
        for b in range(n2):
            c[n1 + a][n1 + b][n1:] = list(g2.c[a][b])
    for i in range(n1):
        op = pi.ops[i]
        for a in range(n2):
            for b in range(n2):
                x = op[b, a]
                if x:
                    c[i][n1 + a][n1 + b] += x
                    c[n1 + a][i][n1 + b] -= x
    return LieAlgebra(n, _names(g1.names, g2.names), _freeze(c))


def semidirect(g1: MetricAlgebra, g2: MetricAlgebra, pi: Representation) -> MetricAlgebra:
    """Orthogonal semidirect product (g1, B1) +_π (g2, B2) with form B1 + B2.

    Each π(x) must be a derivation of g2 that is symmetric for B2.
    """
    if pi.algebra.dim != g1.dim or pi.module_dim != g2.dim:
        raise ConstructionError("representation does not match the two algebras")
    rep = validate_rep(pi)
    if not rep.ok:
        raise ConstructionError("π is not a representation", rep.failures[0])
    for i, op in enumerate(pi.ops):
        bad = derivation_defect(g2.algebra, op)
        if bad is not None:
            raise ConstructionError(f"π({g1.algebra.names[i]}) is not a derivation", (i,) + bad)
        if op.T @ g2.form.m != g2.form.m @ op:
            raise ConstructionError(f"π({g1.algebra.names[i]}) is not symmetric for B2", i)
    alg = semidirect_bracket(g1.algebra, g2.algebra, pi)
    form = BilinearForm(alg.dim, block_diag(g1.form.m, g2.form.m))
    return _certify(alg, form)


# ---------------------------------------------------------------------------
# quadruples

def adjoint_quadruple(g: LieAlgebra, b: BilinearForm) -> Quadruple:
    """(g, ad, g, ρ) with ρ(x)(y) = B(x, y)."""
    if cyclic_defect(g, b):
        raise ConstructionError("form is not cyclic", cyclic_defect(g, b)[0][:3])
    q = Quadruple(adjoint_rep(g), b.m)
    if quadruple_defect(q):
        raise AssertionError("adjoint quadruple of a cyclic form failed the quadruple identity")
    return q


def quadruple_extension(q: Quadruple, b_g: BilinearForm) -> MetricAlgebra:
    """L = g +_π V (V abelian) with B_L((x,u),(y,v)) = B_g(x,y) + ρ(x)(v) + ρ(y)(u)."""
    r = q.rep
    g = r.algebra
    bad = quadruple_defect(q)
    if bad:
        raise ConstructionError("ρ violates the quadruple identity", bad[0])
    if b_g.algebra_dim != g.dim:
        raise ConstructionError("form is on the wrong algebra")
    bad = cyclic_defect(g, b_g)
    if bad:
        raise ConstructionError("B_g is not cyclic", bad[0][:3])
    d = r.module_dim
    v_names = [f"v{a}" for a in range(d)]
    alg = semidirect_bracket(g, LieAlgebra(d, tuple(v_names), _freeze(_tensor(d))), r)
    m = block([[b_g.m, q.rho], [q.rho.T, Matrix.zeros(d, d)]])
    return _certify(alg, BilinearForm(alg.dim, m))


# ---------------------------------------------------------------------------
# double extensions

@dataclass(frozen=True)
class Cocycle2:
    """θ(e_i, e_j) = ``theta[i][j]`` ∈ target, antisymmetric in (i, j)."""

    source_dim: int
    target_dim: int
    theta: tuple

    def __post_init__(self):
        n = self.source_dim
        if len(self.theta) != n or any(len(row) != n or any(len(v) != self.target_dim for v in row) for row in self.theta):
            raise ValueError("theta has the wrong shape")
        for i in range(n):
            if any(self.theta[i][i]):
                raise ValueError("theta must vanish on the diagonal")
            for j in range(i + 1, n):
                if any(a != -b for a, b in zip(self.theta[i][j], self.theta[j][i])):
                    raise ValueError("theta must be antisymmetric")

    @classmethod
    def zero(cls, n: int, t: int) -> "Cocycle2":
        return cls(n, t, tuple(tuple((ZERO,) * t for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_upper(cls, n: int, t: int, values: dict) -> "Cocycle2":
        """``values[(i, j)]`` for i < j gives θ(e_i, e_j) as a length-t sequence."""
        th = [[[ZERO] * t for _ in range(n)] for _ in range(n)]
        for (i, j), v in values.items():
            for k, x in enumerate(v):
                th[i][j][k] = Fraction(x)
                th[j][i][k] = -Fraction(x)
        return cls(n, t, _freeze(th))

    @classmethod
    def from_matrix(cls, m: Matrix) -> "Cocycle2":
        """Scalar-valued θ from an antisymmetric matrix."""
        n = m.rows
        return cls(n, 1, tuple(tuple((m[i, j],) for j in range(n)) for i in range(n)))

    def matrix(self, k: int = 0) -> Matrix:
        n = self.source_dim
        return Matrix(n, n, tuple(tuple(self.theta[i][j][k] for j in range(n)) for i in range(n)))

    def __call__(self, u, v) -> tuple:
        out = [ZERO] * self.target_dim
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        for k, x in enumerate(self.theta[i][j]):
                            if x:
                                out[k] += a * b * x
        return tuple(out)


def compatibility_rhs(h: MetricAlgebra, pi: Representation, x: int, a: int, b: int) -> Fraction:
    """B_h([x,h_b], h_a) − B_h([x,h_a], h_b) for basis x ∈ s, h_a, h_b ∈ h."""
    op = pi.ops[x]
    bm = h.form.m
    return dot(op.col(b), bm.row(a)) - dot(op.col(a), bm.row(b))


def derive_theta(h: MetricAlgebra, s: MetricAlgebra, pi: Representation) -> Cocycle2:
    """Read the compatibility identity B_s(x, θ(h1,h2)) = B_h([x,h2],h1) − B_h([x,h1],h2) as a definition of θ."""
    if not s.form.is_nondegenerate():
        raise ConstructionError("B_s must be nondegenerate to solve for θ")
    bs_inv = inverse(s.form.m)
    n, t = h.dim, s.dim
    values = {}
    for a, b in combinations(range(n), 2):
        rhs = [compatibility_rhs(h, pi, x, a, b) for x in range(t)]
        values[(a, b)] = bs_inv.apply(rhs)
    return Cocycle2.from_upper(n, t, values)


def _check_double_extension_inputs(h, s, pi, theta, b_tilde):
    if not h.form.is_nondegenerate():
        raise ConstructionError("B_h must be nondegenerate", form_radical(h.algebra, h.form).vectors[0])
    if not s.form.is_nondegenerate():
        raise ConstructionError("B_s must be nondegenerate", form_radical(s.algebra, s.form).vectors[0])
    for label, ma in (("h", h), ("s", s)):
        bad = cyclic_defect(ma.algebra, ma.form)
        if bad:
            raise ConstructionError(f"B_{label} is not cyclic", bad[0][:3])
    if theta.source_dim != h.dim or theta.target_dim != s.dim:
        raise ConstructionError("θ must map h ∧ h to s")
    if pi.algebra.dim != s.dim or pi.module_dim != h.dim:
        raise ConstructionError("π must be a representation of s on h")
    if b_tilde.algebra_dim != s.dim:
        raise ConstructionError("B̃ must be a form on s")
    bad = cyclic_defect(s.algebra, b_tilde)
    if bad:
        raise ConstructionError("B̃ is not cyclic", bad[0][:3])
    rep = validate_rep(pi)
    if not rep.ok:
        raise ConstructionError("π is not a representation of s", rep.failures[0])
    bs = s.form.m
    for x in range(s.dim):
        for a, b in combinations(range(h.dim), 2):
            lhs = dot(bs.row(x), theta.theta[a][b])
            if lhs != compatibility_rhs(h, pi, x, a, b):
                raise ConstructionError("θ violates the compatibility identity", (x, a, b))
    # π(x) must be a derivation of the central extension h +_θ s
    for x in range(s.dim):
        op = pi.ops[x]
        bad = derivation_defect(h.algebra, op)
        if bad is not None:
            raise ConstructionError(f"π({s.algebra.names[x]}) is not a derivation of h", (x,) + bad)
        for a, b in combinations(range(h.dim), 2):
            lhs = s.algebra.bracket(unit(s.dim, x), theta.theta[a][b])
            rhs = tuple(p + q for p, q in zip(theta(op.col(a), unit(h.dim, b)), theta(unit(h.dim, a), op.col(b))))
            if lhs != rhs:
                raise ConstructionError("π does not preserve θ", (x, a, b))


def double_extension_bracket(h: LieAlgebra, s: LieAlgebra, pi: Representation, theta: Cocycle2) -> LieAlgebra:
    """Bracket on s ⊕ h ⊕ s' (s' a second copy of s, central in h +_θ s').

    [x, x'] = [x, x']_s, [x, h] = π(x)h, [x, y'] = [x, y]_s in s',
    [h1, h2] = [h1, h2]_h + θ(h1, h2) in s'.
    """
    t, m = s.dim, h.dim
    n = 2 * t + m
    X, Hh, Y = 0, t, t + m
    c = _tensor(n)
    for i in range(t):
        for j in range(t):
            for k, v in enumerate(s.c[i][j]):
                c[X + i][X + j][X + k] = v
                c[X + i][Y + j][Y + k] = v
                c[Y + j][X + i][Y + k] = -v
        op = pi.ops[i]
        for a in range(m):
            for b in range(m):
                v = op[b, a]
                if v:
                    c[X + i][Hh + a][Hh + b] += v
                    c[Hh + a][X + i][Hh + b] -= v
    for a in range(m):
        for b in range(m):
            for k, v in enumerate(h.c[a][b]):
                c[Hh + a][Hh + b][Hh + k] = v
            for k, v in enumerate(theta.theta[a][b]):
                c[Hh + a][Hh + b][Y + k] = v
    names = _names([f"{nm}" for nm in s.names], h.names, [f"{nm}'" for nm in s.names])
    return LieAlgebra(n, names, _freeze(c))


def double_extension(h: MetricAlgebra, s: MetricAlgebra, pi: Representation, theta: Cocycle2,
                     b_tilde: BilinearForm | None = None) -> MetricAlgebra:
    """s +_π (h +_θ s) with B((x1,h1,y1),(x2,h2,y2)) = B̃(x1,x2) + B_h(h1,h2) + B_s(x1,y2) + B_s(y1,x2).

    Basis order: the acting copy of s, then h, then the central copy of s.
    """
    if b_tilde is None:
        b_tilde = BilinearForm.zero(s.dim)
    _check_double_extension_inputs(h, s, pi, theta, b_tilde)
    alg = double_extension_bracket(h.algebra, s.algebra, pi, theta)
    t, m = s.dim, h.dim
    form = block([
        [b_tilde.m, Matrix.zeros(t, m), s.form.m],
        [Matrix.zeros(m, t), h.form.m, Matrix.zeros(m, t)],
        [s.form.m, Matrix.zeros(t, m), Matrix.zeros(t, t)],
    ])
    rep = validate(alg)
    if not rep.ok:
        # θ fails the 2-cocycle condition on a non-abelian h
        raise ConstructionError("h +_θ s is not a Lie algebra", rep.failures[0])
    return _certify(alg, BilinearForm(alg.dim, form))


def line_algebra(beta=1) -> MetricAlgebra:
    """One-dimensional s with B_s = (beta)."""
    return MetricAlgebra(LieAlgebra(1, ("e",), (((ZERO,),),)), BilinearForm(1, Matrix.from_rows([[beta]])))


def central_pi(h: MetricAlgebra, theta: Cocycle2) -> Representation:
    """The B_h-skew operator D = ½ B_h⁻¹ Θ solving the compatibility identity for dim s = 1, B_s = (1)."""
    d = (inverse(h.form.m) @ theta.matrix()).scale(Fraction(1, 2))
    return Representation(line_algebra().algebra, h.dim, (d,))


def central_double_extension_1d(h: MetricAlgebra, theta: Cocycle2) -> MetricAlgebra:
    """Double extension by a 1-dim s with B_s = (1) and B̃ = 0.

    Result basis: ``e`` (acting), the basis of h, ``e'`` (central, isotropic).
    """
    if theta.target_dim != 1:
        raise ConstructionError("θ must be scalar valued")
    if not h.form.is_nondegenerate():
        raise ConstructionError("B_h must be nondegenerate", form_radical(h.algebra, h.form).vectors[0])
    return double_extension(h, line_algebra(), central_pi(h, theta), theta)


def admissible_central_thetas(h: MetricAlgebra) -> list[Cocycle2]:
    """Basis of the scalar θ for which :func:`central_double_extension_1d` is defined.

    θ must be a 2-cocycle on h and the induced operator ½ B_h⁻¹ Θ must be a
    derivation of h; both conditions are linear in θ.
    """
    from .linalg import nullspace_rows

    g = h.algebra
    n = g.dim
    pairs = list(combinations(range(n), 2))
    pidx = {p: k for k, p in enumerate(pairs)}
    binv = inverse(h.form.m)
    basis_mats = []
    for a, b in pairs:
        th = [[ZERO] * n for _ in range(n)]
        th[a][b], th[b][a] = ONE, -ONE
        basis_mats.append(Matrix.from_rows(th))
    rows = []
    # cocycle: θ([e_i,e_j],e_k) + cyclic = 0
    for i, j, k in combinations(range(n), 3):
        row = [ZERO] * len(pairs)
        for (p, q, r) in ((i, j, k), (j, k, i), (k, i, j)):
            for mm, x in enumerate(g.c[p][q]):
                if x and mm != r:
                    key = (min(mm, r), max(mm, r))
                    row[pidx[key]] += x if mm < r else -x
        if any(row):
            rows.append(row)
    # derivation: D[e_i,e_j] = [De_i,e_j] + [e_i,De_j], D = ½ B⁻¹ Θ
    ds = [(binv @ t).scale(Fraction(1, 2)) for t in basis_mats]
    for i, j in combinations(range(n), 2):
        for comp in range(n):
            row = []
            for d in ds:
                lhs = d.apply(g.c[i][j])[comp]
                rhs = g.bracket(d.col(i), unit(n, j))[comp] + g.bracket(unit(n, i), d.col(j))[comp]
                row.append(lhs - rhs)
            if any(row):
                rows.append(row)
    ns = nullspace_rows(rows, len(pairs))
    out = []
    for v in ns.data:
        out.append(Cocycle2.from_upper(n, 1, {p: (v[k],) for k, p in enumerate(pairs)}))
    return out


@dataclass
class CentralReduction:
    h: MetricAlgebra
    theta: Cocycle2
    x_choice: tuple
    h_subspace: Subspace
    derivation: Matrix  # ad x restricted to h, h-component
    z_part: tuple  # z-component of [x, h_a]


def reduce_central(g: MetricAlgebra, z: Sequence) -> CentralReduction:
    """Undo a one-dimensional central double extension at an isotropic central vector z.

    Picks x with B(x,z) = 1 and B(x,x) = 0, sets h = span(x, z)⊥ with the
    bracket taken modulo z, and records θ as the z-component of h-brackets.
    """
    alg, b = g.algebra, g.form
    n = alg.dim
    z = tuple(Fraction(v) for v in z)
    if not any(z):
        raise ConstructionError("z must be nonzero")
    if not b.is_nondegenerate():
        raise ConstructionError("form must be nondegenerate", form_radical(alg, b).vectors[0])
    if not center(alg).contains(z):
        raise ConstructionError("z is not central")
    if b(z, z) != 0:
        raise ConstructionError("z is not isotropic", b(z, z))
    bz = b.m.apply(z)
    x = solve(Matrix(1, n, (bz,)), [ONE])
    if x is None:
        raise AssertionError("nondegenerate form must pair z with something")
    half = b(x, x) / 2
    x = tuple(xi - half * zi for xi, zi in zip(x, z))
    assert b(x, z) == 1 and b(x, x) == 0
    hs = orthogonal_complement(alg, b, Subspace.span([x, z], n))
    hv = hs.vectors
    m = len(hv)

    def split(v):
        # v ∈ h ⊕ Fz (when B(v, z) = 0): h-coords and z-coefficient
        zc = b(v, x)
        rest = tuple(vi - zc * zi for vi, zi in zip(v, z))
        return hs.coordinates(rest), zc

    c = [[None] * m for _ in range(m)]
    th = [[None] * m for _ in range(m)]
    for a in range(m):
        for bb in range(m):
            v = alg.bracket(hv[a], hv[bb])
            if b(v, z) != 0:
                raise AssertionError("bracket of h left h ⊕ Fz")
            coords, zc = split(v)
            c[a][bb] = coords
            th[a][bb] = (zc,)
    cols, zparts = [], []
    for a in range(m):
        v = alg.bracket(x, hv[a])
        coords, zc = split(v)
        cols.append(coords)
        zparts.append(zc)
    derivation = Matrix(m, m, tuple(tuple(cols[a][r] for a in range(m)) for r in range(m)))
    names = []
    for v in hv:
        nz = [k for k, val in enumerate(v) if val]
        names.append(alg.names[nz[0]] if len(nz) == 1 and v[nz[0]] == 1 else f"h{len(names) + 1}")
    h_alg = LieAlgebra(m, tuple(names), _freeze(c))
    h = MetricAlgebra(h_alg, g.form.restricted(hs))
    if validate(h_alg).failures or cyclic_defect(h_alg, h.form):
        raise AssertionError("reduced algebra is not a cyclic metric Lie algebra")
    return CentralReduction(h, Cocycle2(m, 1, _freeze(th)), x, hs, derivation, tuple(zparts))


def levi_compatibility(g: LieAlgebra, levi: Subspace, nilradical: Subspace) -> bool:
    """Whether [s, C(nil g)] = 0 for the supplied Levi data."""
    from .lie import bracket_space, restrict

    nil = restrict(g, nilradical)
    cn = center(nil)
    cvecs = [tuple(sum((coef * v[k] for coef, v in zip(row, nilradical.vectors)), ZERO) for k in range(g.dim)) for row in cn.vectors]
    return bracket_space(g, levi, Subspace.span(cvecs, g.dim)).dim == 0
