"""JSON wire format for algebras, forms, representations, subspaces and cocycles.

Rationals are always strings (``"p/q"`` or ``"p"``).  An algebra is

    {"dim": 3, "basis": ["H", "X", "Y"],
     "brackets": [["H", "X", [["X", "2"]]], ...]}

listing each nonzero bracket [i, j] with i before j in the basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .lie import LieAlgebra, Subspace
from .forms import BilinearForm
from .linalg import Matrix, format_rational
from .reps import Quadruple, Representation
from .constructions import Cocycle2


class FormatError(ValueError):
    """Input does not follow the wire format; message cites the offending field."""


def q(s, where: str) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise FormatError(f"{where}: rationals must be strings like \"p/q\", got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"{where}: bad rational {s!r}") from exc


def fmt(x: Fraction) -> str:
    return format_rational(x)


def matrix_to_json(m: Matrix) -> list:
    return [[fmt(x) for x in r] for r in m.data]


def matrix_from_json(rows, where: str, shape=None) -> Matrix:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise FormatError(f"{where}: expected a nested list of rows")
    m = Matrix.from_rows([[q(x, f"{where}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(rows)],
                         cols=len(rows[0]) if rows else (shape[1] if shape else 0))
    if shape is not None and m.shape != tuple(shape):
        raise FormatError(f"{where}: expected shape {shape}, got {m.shape}")
    return m


# ---------------------------------------------------------------------------

def algebra_to_json(g: LieAlgebra) -> dict:
    brackets = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            terms = [[g.names[k], fmt(x)] for k, x in enumerate(g.c[i][j]) if x]
            if terms:
                brackets.append([g.names[i], g.names[j], terms])
    return {"dim": g.dim, "basis": list(g.names), "brackets": brackets}


def algebra_from_json(d: dict, where: str) -> LieAlgebra:
    if not isinstance(d, dict):
        raise FormatError(f"{where}: expected an object")
    try:
        basis = d["basis"]
    except KeyError:
        raise FormatError(f"{where}: missing field 'basis'") from None
    dim = d.get("dim", len(basis))
    if dim != len(basis):
        raise FormatError(f"{where}.dim: {dim} does not match {len(basis)} basis names")
    if len(set(basis)) != len(basis):
        raise FormatError(f"{where}.basis: names must be distinct")
    known = set(basis)
    table: dict = {}
    for n, entry in enumerate(d.get("brackets", [])):
        loc = f"{where}.brackets[{n}]"
        if not (isinstance(entry, list) and len(entry) == 3):
            raise FormatError(f"{loc}: expected [i_name, j_name, [[k_name, coeff], ...]]")
        a, b, terms = entry
        for nm in (a, b):
            if nm not in known:
                raise FormatError(f"{loc}: unknown basis element {nm!r}")
        if (a, b) in table or (b, a) in table:
            raise FormatError(f"{loc}: bracket [{a}, {b}] given twice")
        out = {}
        for t, term in enumerate(terms):
            if not (isinstance(term, list) and len(term) == 2) or term[0] not in known:
                raise FormatError(f"{loc}[{t}]: expected [basis_name, \"p/q\"]")
            out[term[0]] = out.get(term[0], Fraction(0)) + q(term[1], f"{loc}[{t}]")
        table[(a, b)] = out
    return LieAlgebra.from_brackets(basis, table)


def form_to_json(b: BilinearForm, on: str) -> dict:
    return {"on": on, "matrix": matrix_to_json(b.m)}


def subspace_to_json(s: Subspace, on: str) -> dict:
    return {"on": on, "basis": matrix_to_json(s.basis)}


def rep_to_json(r: Representation, on: str) -> dict:
    return {"on": on, "dim": r.module_dim, "ops": {nm: matrix_to_json(op) for nm, op in zip(r.algebra.names, r.ops)}}


def cocycle_to_json(t: Cocycle2, source_names, target_names) -> dict:
    values = []
    for i in range(t.source_dim):
        for j in range(i + 1, t.source_dim):
            terms = [[target_names[k], fmt(x)] for k, x in enumerate(t.theta[i][j]) if x]
            if terms:
                values.append([source_names[i], source_names[j], terms])
    return {"source_basis": list(source_names), "target_basis": list(target_names), "values": values}


def cocycle_from_json(d: dict, where: str) -> Cocycle2:
    try:
        src, tgt = d["source_basis"], d["target_basis"]
    except (KeyError, TypeError):
        raise FormatError(f"{where}: cocycles need 'source_basis' and 'target_basis'") from None
    si = {nm: k for k, nm in enumerate(src)}
    ti = {nm: k for k, nm in enumerate(tgt)}
    vals = {}
    for n, entry in enumerate(d.get("values", [])):
        loc = f"{where}.values[{n}]"
        if not (isinstance(entry, list) and len(entry) == 3) or entry[0] not in si or entry[1] not in si:
            raise FormatError(f"{loc}: expected [h_name, h_name, [[s_name, coeff], ...]]")
        a, b = si[entry[0]], si[entry[1]]
        if a == b:
            raise FormatError(f"{loc}: θ(x, x) must vanish")
        v = [Fraction(0)] * len(tgt)
        for t, term in enumerate(entry[2]):
            if not (isinstance(term, list) and len(term) == 2) or term[0] not in ti:
                raise FormatError(f"{loc}[{t}]: expected [target_name, \"p/q\"]")
            v[ti[term[0]]] += q(term[1], f"{loc}[{t}]")
        if a > b:
            a, b, v = b, a, [-x for x in v]
        vals[(a, b)] = v
    return Cocycle2.from_upper(len(src), len(tgt), vals)


def metric_algebra_document(ma, name: str = "result") -> dict:
    """An input-format document holding one algebra and its form."""
    return {"algebras": {name: algebra_to_json(ma.algebra)}, "forms": {name: form_to_json(ma.form, name)}}


# ---------------------------------------------------------------------------

@dataclass
class Workspace:
    algebras: dict = field(default_factory=dict)
    forms: dict = field(default_factory=dict)
    form_owner: dict = field(default_factory=dict)
    representations: dict = field(default_factory=dict)
    subspaces: dict = field(default_factory=dict)
    cocycles: dict = field(default_factory=dict)
    quadruples: dict = field(default_factory=dict)

    @classmethod
    def from_json(cls, doc: Any, source: str = "<input>") -> "Workspace":
        ws = cls()
        ws.merge(doc, source)
        return ws

    def merge(self, doc: Any, source: str = "<input>") -> None:
        from .lie import validate
        from .reps import validate_rep

        if not isinstance(doc, dict):
            raise FormatError(f"{source}: top level must be an object")
        for name, d in doc.get("algebras", {}).items():
            g = algebra_from_json(d, f"{source}:algebras.{name}")
            self.algebras[name] = g
        for name, d in doc.get("forms", {}).items():
            where = f"{source}:forms.{name}"
            g = self._algebra_ref(d, where)
            m = matrix_from_json(d.get("matrix"), f"{where}.matrix", (g.dim, g.dim))
            if not m.is_symmetric():
                raise FormatError(f"{where}.matrix: form matrix must be symmetric")
            self.forms[name] = BilinearForm(g.dim, m)
            self.form_owner[name] = d["on"]
        for name, d in doc.get("representations", {}).items():
            where = f"{source}:representations.{name}"
            g = self._algebra_ref(d, where)
            ops_d = d.get("ops", {})
            dim = d.get("dim")
            if not isinstance(dim, int):
                raise FormatError(f"{where}.dim: expected an integer module dimension")
            extra = [nm for nm in ops_d if nm not in g.names]
            if extra:
                raise FormatError(f"{where}.ops: unknown basis elements {extra}")
            ops = tuple(
                matrix_from_json(ops_d[nm], f"{where}.ops.{nm}", (dim, dim)) if nm in ops_d else Matrix.zeros(dim, dim)
                for nm in g.names
            )
            self.representations[name] = Representation(g, dim, ops)
        for name, d in doc.get("subspaces", {}).items():
            where = f"{source}:subspaces.{name}"
            g = self._algebra_ref(d, where)
            rows = d.get("basis", [])
            m = matrix_from_json(rows, f"{where}.basis", (len(rows), g.dim))
            self.subspaces[name] = Subspace.span(m.data, g.dim)
        for name, d in doc.get("cocycles", {}).items():
            self.cocycles[name] = cocycle_from_json(d, f"{source}:cocycles.{name}")
        for name, d in doc.get("quadruples", {}).items():
            where = f"{source}:quadruples.{name}"
            rname = d.get("rep")
            if rname not in self.representations:
                raise FormatError(f"{where}.rep: unknown representation {rname!r}")
            r = self.representations[rname]
            rho = matrix_from_json(d.get("rho"), f"{where}.rho", (r.algebra.dim, r.module_dim))
            self.quadruples[name] = Quadruple(r, rho)
        for name, g in self.algebras.items():
            rep = validate(g)
            if not rep.ok:
                raise WorkspaceValidationError(f"algebra {name!r} fails validation at {rep.failures[0]}", rep.failures[0])
        for name, r in self.representations.items():
            rep = validate_rep(r)
            if not rep.ok:
                raise WorkspaceValidationError(f"representation {name!r} fails at pair {rep.failures[0]}", rep.failures[0])

    def _algebra_ref(self, d, where) -> LieAlgebra:
        if not isinstance(d, dict) or "on" not in d:
            raise FormatError(f"{where}: missing field 'on'")
        name = d["on"]
        if name in self.algebras:
            return self.algebras[name]
        if isinstance(name, str) and name.startswith("catalog:"):
            from .catalog import make

            g = make(name[len("catalog:"):]).algebra
            self.algebras[name] = g
            return g
        raise FormatError(f"{where}.on: unknown algebra {name!r}")


class WorkspaceValidationError(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


def load_workspace(paths) -> Workspace:
    ws = Workspace()
    for p in paths:
        with open(p) as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise FormatError(f"{p}: line {exc.lineno}: {exc.msg}") from None
        ws.merge(doc, p)
    return ws
