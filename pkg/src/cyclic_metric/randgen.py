"""Seeded generators of random exact inputs for the constructors and property checks.

Every generator takes a ``random.Random`` and returns inputs that satisfy the
constructor's preconditions by design, so any failure downstream is a bug.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .catalog import make, natural_rep
from .constructions import Cocycle2, MetricAlgebra, admissible_central_thetas
from .forms import BilinearForm, cyclic_space
from .lie import LieAlgebra, Subspace, abelian, bracket_space, direct_sum
from .linalg import Matrix, inverse, nullspace, rank
from .reps import Quadruple, Representation, adjoint_rep, quadruple_space, tensor_rep, trivial_rep, vk_module

# catalog entries with a nonzero cyclic space (sl3 and sl3 ⋉ F³ carry only the zero form)
METRIC_CATALOG = (
    "sl2", "su2", "so4", "gl2", "heisenberg3", "heisenberg5", "abelian1", "abelian2", "abelian3",
    "r2", "remark_lorentz", "sl2_semidirect_F2", "gl2_semidirect_F2", "so3_semidirect_F3",
)
ALL_CATALOG = METRIC_CATALOG + ("sl3", "sl3_semidirect_F3", "so3", "gl3")


def rational(rng: random.Random, span: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice((1, 1, 1, 2, 3)))


def nonzero_rational(rng: random.Random, span: int = 4) -> Fraction:
    while True:
        x = rational(rng, span)
        if x:
            return x


def vector(rng, n, span=4) -> tuple:
    return tuple(rational(rng, span) for _ in range(n))


def matrix(rng, r, c, span=4) -> Matrix:
    return Matrix(r, c, tuple(vector(rng, c, span) for _ in range(r)))


def invertible(rng, n, span=3) -> Matrix:
    while True:
        m = matrix(rng, n, n, span)
        if rank(m) == n:
            return m


def symmetric(rng, n, span=4) -> Matrix:
    m = matrix(rng, n, n, span)
    return Matrix(n, n, tuple(tuple(m[min(i, j), max(i, j)] for j in range(n)) for i in range(n)))


def nondegenerate_symmetric(rng, n) -> Matrix:
    while True:
        m = symmetric(rng, n)
        if rank(m) == n:
            return m


def antisymmetric(rng, n) -> Matrix:
    m = matrix(rng, n, n)
    return m - m.T


@lru_cache(maxsize=None)
def catalog_cyclic_space(name: str):
    entry = make(name)
    return entry.algebra, tuple(cyclic_space(entry.algebra))


def combine(rng, mats, n) -> Matrix:
    out = Matrix.zeros(n, n)
    for m in mats:
        out = out + m.scale(rational(rng))
    return out


def random_cyclic_form(rng, g: LieAlgebra, basis, nondegenerate=False, tries=40) -> BilinearForm | None:
    """Random combination of the cyclic-space basis; None if no nondegenerate one turns up."""
    for _ in range(tries):
        m = combine(rng, [b.m for b in basis], g.dim)
        if not nondegenerate or rank(m) == g.dim:
            return BilinearForm(g.dim, m)
    return None


def catalog_metric_algebra(rng, name: str | None = None, nondegenerate=False) -> tuple[str, MetricAlgebra]:
    """A catalog algebra with a random form from its cyclic space."""
    while True:
        nm = name or rng.choice(METRIC_CATALOG)
        g, basis = catalog_cyclic_space(nm)
        b = random_cyclic_form(rng, g, basis, nondegenerate)
        if b is not None:
            return nm, MetricAlgebra(g, b)
        if name is not None:
            raise ValueError(f"{name} has no nondegenerate cyclic form")


# ---------------------------------------------------------------------------
# constructor inputs

def _commuting_symmetric_family(rng, k, m):
    """``k`` commuting operators on F^m, all symmetric for a common nondegenerate form K."""
    p = invertible(rng, m)
    pinv = inverse(p)
    lam = Matrix.diag([nonzero_rational(rng) for _ in range(m)])
    form = pinv.T @ lam @ pinv
    ops = tuple(p @ Matrix.diag(vector(rng, m)) @ pinv for _ in range(k))
    return form, ops


def semidirect_inputs(rng) -> tuple[MetricAlgebra, MetricAlgebra, Representation]:
    kind = rng.choice(("symmetric", "functional", "zero_form", "trivial"))
    if kind == "symmetric":
        # abelian g1 acting on abelian g2 by B2-symmetric commuting operators
        k, m = rng.randint(1, 3), rng.randint(1, 4)
        g1 = abelian(k, "a")
        b1 = BilinearForm(k, symmetric(rng, k))
        form, ops = _commuting_symmetric_family(rng, k, m)
        g2 = abelian(m, "u")
        return MetricAlgebra(g1, b1), MetricAlgebra(g2, BilinearForm(m, form)), Representation(g1, m, ops)
    if kind == "functional":
        # π(x) = f(x) D with f vanishing on [g1, g1], so π is a representation
        _, g1m = catalog_metric_algebra(rng, rng.choice(("r2", "heisenberg3", "gl2", "abelian2", "remark_lorentz")))
        g1 = g1m.algebra
        derived = bracket_space(g1, Subspace.whole(g1.dim), Subspace.whole(g1.dim))
        ann = nullspace(derived.basis) if derived.dim else Matrix.identity(g1.dim)
        coeffs = [rational(rng) for _ in ann.data]
        f = tuple(sum((c * row[i] for c, row in zip(coeffs, ann.data)), Fraction(0)) for i in range(g1.dim))
        m = rng.randint(1, 3)
        form, (d,) = _commuting_symmetric_family(rng, 1, m)
        ops = tuple(d.scale(fi) for fi in f)
        g2 = abelian(m, "u")
        return g1m, MetricAlgebra(g2, BilinearForm(m, form)), Representation(g1, m, ops)
    if kind == "zero_form":
        # B2 = 0 makes any derivation action symmetric
        choice = rng.choice(("so3", "sl2V"))
        if choice == "so3":
            _, g1m = catalog_metric_algebra(rng, "su2")
            r = natural_rep("so", 3, g1m.algebra)
        else:
            _, g1m = catalog_metric_algebra(rng, "sl2")
            r = vk_module(rng.randint(0, 3), g1m.algebra)
        m = r.module_dim
        return g1m, MetricAlgebra(abelian(m, "u"), BilinearForm.zero(m)), r
    # trivial action between two arbitrary catalog metric algebras
    _, g1m = catalog_metric_algebra(rng)
    _, g2m = catalog_metric_algebra(rng, rng.choice(("heisenberg3", "r2", "sl2", "abelian2", "gl2")))
    return g1m, g2m, trivial_rep(g1m.algebra, g2m.dim)


@lru_cache(maxsize=None)
def _quadruple_basis(key):
    r = _rep_for(key)
    return r, tuple(quadruple_space(r))


def _rep_for(key):
    if key[0] == "V":
        return vk_module(key[1])
    if key[0] == "VxV":
        return tensor_rep(vk_module(key[1]), vk_module(key[2]))
    if key[0] == "ad":
        return adjoint_rep(make(key[1]).algebra)
    if key[0] == "triv":
        return trivial_rep(make(key[1]).algebra, key[2])
    raise KeyError(key)


QUADRUPLE_REPS = (
    ("V", 0), ("V", 1), ("V", 2), ("V", 3), ("VxV", 0, 2), ("VxV", 1, 1),
    ("ad", "sl2"), ("ad", "heisenberg3"), ("ad", "r2"), ("ad", "gl2"), ("ad", "so3_semidirect_F3"),
    ("triv", "heisenberg3", 2), ("triv", "r2", 1), ("triv", "abelian2", 2),
)


def quadruple_inputs(rng) -> tuple[Quadruple, BilinearForm]:
    key = rng.choice(QUADRUPLE_REPS)
    r, basis = _quadruple_basis(key)
    g = r.algebra
    rho = Matrix.zeros(g.dim, r.module_dim)
    for b in basis:
        rho = rho + b.scale(rational(rng))
    b_g = random_cyclic_form(rng, g, _cyclic_basis_of(g)) or BilinearForm.zero(g.dim)
    return Quadruple(r, rho), b_g


_CS_CACHE: dict = {}


def _cyclic_basis_of(g: LieAlgebra):
    key = (g.dim, g.c)
    if key not in _CS_CACHE:
        _CS_CACHE[key] = tuple(cyclic_space(g))
    return _CS_CACHE[key]


def double_extension_inputs(rng) -> tuple[MetricAlgebra, MetricAlgebra, Representation, BilinearForm]:
    """(h, s, π, B̃) for which the θ derived from the compatibility identity is admissible."""
    kind = rng.choice(("sl2_adjoint", "abelian_symmetric", "abelian_skew", "trivial"))
    if kind == "sl2_adjoint":
        # s = sl(2) acting on h = F³ by ad, with B_h a nonzero multiple of B_s
        _, s = catalog_metric_algebra(rng, "sl2", nondegenerate=True)
        lam = nonzero_rational(rng)
        h = MetricAlgebra(abelian(3, "a"), s.form.scaled(lam))
        bt = random_cyclic_form(rng, s.algebra, catalog_cyclic_space("sl2")[1])
        return h, s, adjoint_rep(s.algebra), bt
    t, m = rng.randint(1, 3), rng.randint(1, 4)
    s_alg = abelian(t, "s")
    s = MetricAlgebra(s_alg, BilinearForm(t, nondegenerate_symmetric(rng, t)))
    bt = BilinearForm(t, symmetric(rng, t))
    if kind == "abelian_symmetric":
        form, ops = _commuting_symmetric_family(rng, t, m)
        return MetricAlgebra(abelian(m, "a"), BilinearForm(m, form)), s, Representation(s_alg, m, ops), bt
    if kind == "abelian_skew":
        bh = nondegenerate_symmetric(rng, m)
        k = inverse(bh) @ antisymmetric(rng, m)
        ops = tuple(k.scale(rational(rng)) for _ in range(t))
        return MetricAlgebra(abelian(m, "a"), BilinearForm(m, bh)), s, Representation(s_alg, m, ops), bt
    # π = 0: θ vanishes and h may be any nondegenerate cyclic metric algebra
    _, h = catalog_metric_algebra(rng, rng.choice(("heisenberg3", "sl2", "remark_lorentz", "abelian2", "gl2")),
                                  nondegenerate=True)
    return h, s, trivial_rep(s_alg, h.dim), bt


def combine_cocycles(rng, thetas, n) -> Cocycle2:
    vals = {}
    for i, j in combinations(range(n), 2):
        vals[(i, j)] = (Fraction(0),)
    for th in thetas:
        c = rational(rng)
        for i, j in combinations(range(n), 2):
            vals[(i, j)] = (vals[(i, j)][0] + c * th.theta[i][j][0],)
    return Cocycle2.from_upper(n, 1, vals)


def central_inputs(rng, kind: str | None = None) -> tuple[MetricAlgebra, Cocycle2]:
    """A nondegenerate abelian or Heisenberg h with a random admissible scalar θ."""
    kind = kind or rng.choice(("abelian", "heisenberg"))
    if kind == "abelian":
        n = rng.randint(1, 4)
        h = MetricAlgebra(abelian(n, "a"), BilinearForm(n, nondegenerate_symmetric(rng, n)))
    else:
        _, h = catalog_metric_algebra(rng, "heisenberg3", nondegenerate=True)
        extra = rng.randint(0, 2)
        if extra:
            g = direct_sum(h.algebra, abelian(extra, "a"))
            h = MetricAlgebra(g, random_cyclic_form(rng, g, _cyclic_basis_of(g), nondegenerate=True))
    thetas = admissible_central_thetas(h)
    return h, combine_cocycles(rng, thetas, h.dim)
