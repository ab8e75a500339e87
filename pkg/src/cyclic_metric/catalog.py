"""Named algebras, modules and metrics used throughout the tests and the CLI."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .lie import (
    LieAlgebra,
    Subspace,
    direct_sum,
    is_ideal,
    is_subalgebra,
    lower_central_series,
    require_valid,
)
from .linalg import ZERO, ONE, Matrix, solve
from .reps import Representation, make_rep


class UnknownCatalogEntry(KeyError):
    pass


@dataclass
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    annotations: dict = field(default_factory=dict)  # name -> Subspace
    forms: dict = field(default_factory=dict)
    representations: dict = field(default_factory=dict)

    def check(self) -> None:
        require_valid(self.algebra)
        g = self.algebra
        for key, s in self.annotations.items():
            if key in ("radical", "nilradical", "abelian_ideal") and not is_ideal(g, s):
                raise AssertionError(f"{self.name}: {key} is not an ideal")
            if key == "levi" and not is_subalgebra(g, s):
                raise AssertionError(f"{self.name}: levi factor is not a subalgebra")
            if key == "nilradical":
                from .lie import restrict

                if lower_central_series(restrict(g, s))[-1].dim != 0:
                    raise AssertionError(f"{self.name}: nilradical is not nilpotent")


# ---------------------------------------------------------------------------
# matrix algebras

def _elem(n, i, j) -> list[list[Fraction]]:
    m = [[ZERO] * n for _ in range(n)]
    m[i][j] = ONE
    return m


def _sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _mul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]


def from_matrix_basis(names, mats) -> LieAlgebra:
    """Structure constants of the span of ``mats`` under the commutator."""
    flat = [[x for r in m for x in r] for m in mats]
    cols = Matrix.from_rows(flat).T
    n = len(mats)
    c = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            comm = _sub(_mul(mats[i], mats[j]), _mul(mats[j], mats[i]))
            coords = solve(cols, [x for r in comm for x in r])
            if coords is None:
                raise ValueError("matrix span is not closed under the commutator")
            c[i][j] = coords
    return LieAlgebra(n, tuple(names), tuple(tuple(row) for row in c))


def sl_matrices(n: int):
    names, mats = [], []
    if n == 2:
        return ["H", "X", "Y"], [[[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]]
    for i in range(n):
        for j in range(n):
            if i == j:
                if i < n - 1:
                    names.append(f"H{i + 1}")
                    mats.append(_sub(_elem(n, i, i), _elem(n, i + 1, i + 1)))
            else:
                names.append(f"E{i + 1}{j + 1}")
                mats.append(_elem(n, i, j))
    return names, mats


def gl_matrices(n: int):
    names = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    mats = [_elem(n, i, j) for i in range(n) for j in range(n)]
    return names, mats


def so_matrices(n: int):
    if n == 3:
        return ["i", "j", "k"], [
            [[0, 0, 0], [0, 0, -1], [0, 1, 0]],
            [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
            [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
        ]
    names, mats = [], []
    for i in range(n):
        for j in range(i + 1, n):
            names.append(f"A{i + 1}{j + 1}")
            mats.append(_sub(_elem(n, i, j), _elem(n, j, i)))
    return names, mats


def _as_fraction_mats(mats):
    return [[[Fraction(x) for x in r] for r in m] for m in mats]


def sl(n: int) -> LieAlgebra:
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    names, mats = sl_matrices(n)
    return from_matrix_basis(names, _as_fraction_mats(mats))


def sl2() -> LieAlgebra:
    """[H,X] = 2X, [H,Y] = -2Y, [X,Y] = H."""
    return LieAlgebra.from_brackets(["H", "X", "Y"], {("H", "X"): {"X": 2}, ("H", "Y"): {"Y": -2}, ("X", "Y"): {"H": 1}})


def gl(n: int) -> LieAlgebra:
    names, mats = gl_matrices(n)
    return from_matrix_basis(names, _as_fraction_mats(mats))


def so(n: int) -> LieAlgebra:
    if n < 2:
        raise ValueError("so(n) needs n >= 2")
    names, mats = so_matrices(n)
    return from_matrix_basis(names, _as_fraction_mats(mats))


def so3() -> LieAlgebra:
    """[i,j] = k, [j,k] = i, [k,i] = j."""
    return LieAlgebra.from_brackets(["i", "j", "k"], {("i", "j"): {"k": 1}, ("j", "k"): {"i": 1}, ("k", "i"): {"j": 1}})


def heisenberg(dim: int) -> LieAlgebra:
    if dim < 3 or dim % 2 == 0:
        raise ValueError("heisenberg algebras have odd dimension >= 3")
    k = (dim - 1) // 2
    if k == 1:
        return LieAlgebra.from_brackets(["x", "y", "z"], {("x", "y"): {"z": 1}})
    xs = [f"x{i + 1}" for i in range(k)]
    ys = [f"y{i + 1}" for i in range(k)]
    return LieAlgebra.from_brackets(xs + ys + ["z"], {(xs[i], ys[i]): {"z": 1} for i in range(k)})


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra.from_brackets([f"a{i + 1}" for i in range(n)], {})


def r2() -> LieAlgebra:
    """The non-abelian 2-dim algebra, [x,y] = y."""
    return LieAlgebra.from_brackets(["x", "y"], {("x", "y"): {"y": 1}})


def natural_rep(kind: str, n: int, g: LieAlgebra | None = None) -> Representation:
    table = {"sl": sl_matrices, "gl": gl_matrices, "so": so_matrices}
    names, mats = table[kind](n)
    if g is None:
        g = {"sl": sl, "gl": gl, "so": so}[kind](n)
    return make_rep(g, [Matrix.from_rows(m) for m in mats])


def semidirect_with_module(r: Representation, module_names) -> LieAlgebra:
    """``g ⋉ V`` with V abelian: [x, v] = π(x) v."""
    g = r.algebra
    n, d = g.dim, r.module_dim
    total = n + d
    c = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c[i][j][k] = g.c[i][j][k]
        for a in range(d):
            for b in range(d):
                x = r.ops[i][b, a]
                if x:
                    c[i][n + a][n + b] = x
                    c[n + a][i][n + b] = -x
    return LieAlgebra(total, tuple(g.names) + tuple(module_names), tuple(tuple(tuple(v) for v in row) for row in c))


def _semidirect_entry(name, kind, n, module_names) -> CatalogEntry:
    g = sl2() if (kind, n) == ("sl", 2) else (so3() if (kind, n) == ("so", 3) else {"sl": sl, "gl": gl, "so": so}[kind](n))
    r = natural_rep(kind, n, g)
    alg = semidirect_with_module(r, module_names)
    total = alg.dim
    mod = Subspace.coordinate(total, range(g.dim, total))
    ann = {"abelian_ideal": mod, "nilradical": mod}
    if kind == "gl":
        # gl(n) = sl(n) + centre; the radical is centre + module
        pad = (ZERO,) * len(module_names)
        centre = tuple(ONE if nm[1] == nm[2] else ZERO for nm in g.names) + pad
        ann["radical"] = Subspace.span([centre, *mod.vectors], total)
        ann["levi"] = Subspace.span([tuple(v) + pad for v in _trace_free_basis(g.names, n)], total)
    else:
        ann["radical"] = mod
        ann["levi"] = Subspace.coordinate(total, range(g.dim))
    return CatalogEntry(name, alg, ann, representations={"module": r})


def _trace_free_basis(names, n):
    idx = {nm: k for k, nm in enumerate(names)}
    out = []
    for nm in names:
        v = [ZERO] * len(names)
        if nm[1] != nm[2]:
            v[idx[nm]] = ONE
            out.append(v)
    for i in range(n - 1):
        v = [ZERO] * len(names)
        v[idx[f"E{i + 1}{i + 1}"]] = ONE
        v[idx[f"E{i + 2}{i + 2}"]] = -ONE
        out.append(v)
    return out


def remark_lorentz_algebra() -> LieAlgebra:
    return LieAlgebra.from_brackets(["x1", "y1", "x2", "y2"], {("x1", "y1"): {"y1": 1}, ("x2", "y2"): {"y2": 1}})


def remark_lorentz_metric():
    """r2 ⊕ r2 with B(x1,x2) = 1, B(y1,y1) = B(y2,y2) = 1, all else 0."""
    from .constructions import MetricAlgebra
    from .forms import BilinearForm

    b = BilinearForm.from_rows([
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 1],
    ])
    return MetricAlgebra(remark_lorentz_algebra(), b)


# ---------------------------------------------------------------------------
# lookup

_PATTERNS = [
    (r"sl\(?(\d+)\)?", "sl"),
    (r"gl\(?(\d+)\)?", "gl"),
    (r"so\(?(\d+)\)?", "so"),
    (r"heisenberg\(?(\d+)\)?", "heisenberg"),
    (r"abelian\(?(\d+)\)?", "abelian"),
]

NAMES = (
    "sl(n)", "gl(n)", "so(n)", "su2", "heisenberg(2k+1)", "abelian(n)", "r2",
    "remark_lorentz", "sl2_semidirect_F2", "gl2_semidirect_F2", "so3_semidirect_F3", "sl3_semidirect_F3",
)


def make(name: str, *params: int) -> CatalogEntry:
    """Look up a catalog entry by name; ``make("sl", 2)`` and ``make("sl2")`` agree."""
    key = name.strip()
    if params:
        key = f"{key}{params[0]}"
    if key == "su2":
        entry = CatalogEntry("su2", so3(), {"levi": Subspace.whole(3)})
    elif key == "r2":
        entry = CatalogEntry("r2", r2(), {"radical": Subspace.whole(2), "nilradical": Subspace.coordinate(2, [1])})
    elif key == "remark_lorentz":
        ma = remark_lorentz_metric()
        entry = CatalogEntry("remark_lorentz", ma.algebra, {"radical": Subspace.whole(4)}, forms={"lorentz": ma.form})
    elif key == "sl2_semidirect_F2":
        entry = _semidirect_entry(key, "sl", 2, ["e1", "e2"])
    elif key == "gl2_semidirect_F2":
        entry = _semidirect_entry(key, "gl", 2, ["e1", "e2"])
    elif key == "so3_semidirect_F3":
        entry = _semidirect_entry(key, "so", 3, ["e1", "e2", "e3"])
    elif key == "sl3_semidirect_F3":
        entry = _semidirect_entry(key, "sl", 3, ["e1", "e2", "e3"])
    else:
        for pat, kind in _PATTERNS:
            m = re.fullmatch(pat, key)
            if m:
                n = int(m.group(1))
                entry = _simple_entry(key, kind, n)
                break
        else:
            raise UnknownCatalogEntry(f"unknown catalog entry {name!r}; known: {', '.join(NAMES)}")
    entry.check()
    return entry


def _simple_entry(key, kind, n) -> CatalogEntry:
    if kind == "sl":
        g = sl2() if n == 2 else sl(n)
        return CatalogEntry(key, g, {"levi": Subspace.whole(g.dim)})
    if kind == "so":
        g = so3() if n == 3 else so(n)
        return CatalogEntry(key, g, {"levi": Subspace.whole(g.dim)})
    if kind == "gl":
        g = gl(n)
        diag = tuple(ONE if nm[1] == nm[2] else ZERO for nm in g.names)
        levi = Subspace.span([tuple(v) for v in _trace_free_basis(g.names, n)], g.dim)
        return CatalogEntry(key, g, {"levi": levi, "radical": Subspace.span([diag], g.dim)})
    if kind == "heisenberg":
        g = heisenberg(n)
        whole = Subspace.whole(g.dim)
        return CatalogEntry(key, g, {"radical": whole, "nilradical": whole})
    if kind == "abelian":
        g = abelian(n)
        whole = Subspace.whole(g.dim)
        return CatalogEntry(key, g, {"radical": whole, "nilradical": whole})
    raise UnknownCatalogEntry(key)


def sl2_sum(m: int) -> LieAlgebra:
    g = sl2()
    out = g
    for _ in range(m - 1):
        out = direct_sum(out, g)
    return out
