"""Command-line front end.

    cyclic-metric cyclic-space catalog:sl2
    cyclic-metric index catalog:remark_lorentz --json
    cyclic-metric validate result -i cert.json

Object references are either names defined in ``-i`` input files or
``catalog:`` URIs.  Exit status: 0 success, 1 validation failure, 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .catalog import UnknownCatalogEntry, make
from .constructions import (
    ConstructionError,
    MetricAlgebra,
    adjoint_quadruple,
    central_double_extension_1d,
    derive_theta,
    double_extension,
    quadruple_extension,
    reduce_central,
    semidirect,
)
from .forms import (
    BilinearForm,
    DegenerateFormError,
    check_abc,
    cyclic_defect,
    cyclic_space,
    index_of,
    invariant_space,
    split_along_ideal,
)
from .lie import (
    InvalidAlgebraError,
    center,
    derived_series,
    lower_central_series,
    upper_central_series,
    validate,
)
from .linalg import NotSymmetricError, signature
from .reps import adjoint_rep, quadruple_space, tensor_rep, validate_rep, vk_module
from .serialize import (
    FormatError,
    WorkspaceValidationError,
    algebra_to_json,
    cocycle_to_json,
    fmt,
    form_to_json,
    load_workspace,
    matrix_to_json,
    metric_algebra_document,
    rep_to_json,
    subspace_to_json,
)


# ---------------------------------------------------------------------------
# reference resolution

class Resolver:
    def __init__(self, ws):
        self.ws = ws

    def algebra(self, ref: str):
        if ref in self.ws.algebras:
            return self.ws.algebras[ref]
        if ref.startswith("catalog:"):
            return self._entry(ref).algebra
        raise FormatError(f"unknown algebra {ref!r}")

    def form(self, ref: str) -> BilinearForm:
        if ref in self.ws.forms:
            return self.ws.forms[ref]
        if ref.startswith("catalog:"):
            entry = self._entry(ref)
            if not entry.forms:
                raise FormatError(f"catalog entry {entry.name!r} carries no distinguished form")
            return next(iter(entry.forms.values()))
        raise FormatError(f"unknown form {ref!r}")

    def rep(self, ref: str):
        if ref in self.ws.representations:
            return self.ws.representations[ref]
        if ref.startswith("catalog:"):
            body = ref[len("catalog:"):]
            m = re.fullmatch(r"V(\d+)((?:xV\d+)*)", body)
            if m:
                ks = [int(k) for k in re.findall(r"\d+", body)]
                r = vk_module(ks[0])
                for k in ks[1:]:
                    r = tensor_rep(r, vk_module(k))
                return r
            if body.startswith("ad:"):
                return adjoint_rep(self.algebra("catalog:" + body[3:]))
            if body.endswith(":module"):
                entry = self._entry("catalog:" + body[: -len(":module")])
                if "module" in entry.representations:
                    return entry.representations["module"]
        raise FormatError(f"unknown representation {ref!r}")

    def subspace(self, ref: str):
        if ref in self.ws.subspaces:
            return self.ws.subspaces[ref]
        if ref.startswith("catalog:") and ref.count(":") == 2:
            _, name, ann = ref.split(":")
            entry = self._entry("catalog:" + name)
            if ann in entry.annotations:
                return entry.annotations[ann]
        raise FormatError(f"unknown subspace {ref!r}")

    def cocycle(self, ref: str):
        if ref in self.ws.cocycles:
            return self.ws.cocycles[ref]
        raise FormatError(f"unknown cocycle {ref!r}")

    def quadruple(self, ref: str):
        if ref in self.ws.quadruples:
            return self.ws.quadruples[ref]
        raise FormatError(f"unknown quadruple {ref!r}")

    def _entry(self, ref: str):
        try:
            return make(ref[len("catalog:"):])
        except UnknownCatalogEntry as exc:
            raise FormatError(str(exc.args[0])) from None


def parse_vector(text: str, n: int):
    try:
        v = tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad vector {text!r}; expected comma-separated rationals") from None
    if len(v) != n:
        raise FormatError(f"vector {text!r} has length {len(v)}, expected {n}")
    return v


def series_dims(series):
    return [s.dim for s in series]


# ---------------------------------------------------------------------------
# commands; each returns (report dict, human lines, ok flag)

def cmd_validate(res: Resolver, args):
    g = res.algebra(args.algebra)
    rep = validate(g)
    out = {"algebra": args.algebra, "dim": g.dim, "lie_ok": rep.ok, "failures": [list(f) for f in rep.failures]}
    lines = [f"algebra: {args.algebra} (dim {g.dim})", f"lie algebra: {'ok' if rep.ok else 'FAILED'}"]
    for f in rep.failures:
        lines.append(f"  {f[0]} failure at {tuple(g.names[i] for i in f[1:])}")
    ok = rep.ok
    form_ref = args.form
    if form_ref is None and args.algebra in res.ws.forms and res.ws.form_owner.get(args.algebra) == args.algebra:
        form_ref = args.algebra
    if form_ref is not None:
        b = res.form(form_ref)
        bad = cyclic_defect(g, b)
        out["form"] = form_ref
        out["cyclic"] = not bad
        out["cyclic_witnesses"] = [[g.names[i], g.names[j], g.names[k], fmt(r)] for i, j, k, r in bad]
        lines.append(f"cyclic: {'yes' if not bad else 'no'}")
        for i, j, k, r in bad:
            lines.append(f"  residual {fmt(r)} at ({g.names[i]}, {g.names[j]}, {g.names[k]})")
        ok = ok and not bad
    if args.rep is not None:
        r = res.rep(args.rep)
        rr = validate_rep(r)
        out["representation_ok"] = rr.ok
        out["representation_failures"] = [list(f) for f in rr.failures]
        lines.append(f"representation: {'ok' if rr.ok else 'FAILED'}")
        ok = ok and rr.ok
    return out, lines, ok


def _space_report(kind, ref, g, space):
    out = {
        "algebra": ref,
        "dimension": space.dimension,
        "system": {"equations": space.equations, "unknowns": space.unknowns},
        "basis": [matrix_to_json(b.m) for b in space],
    }
    lines = [f"{kind} forms on {ref} (dim {g.dim})", f"dimension: {space.dimension}",
             f"system: {space.equations} equations in {space.unknowns} unknowns"]
    for n, b in enumerate(space):
        lines.append(f"basis[{n}]:")
        lines.extend("  " + " ".join(fmt(x) for x in row) for row in b.m.data)
    return out, lines, True


def cmd_cyclic_space(res, args):
    g = res.algebra(args.algebra)
    return _space_report("cyclic", args.algebra, g, cyclic_space(g))


def cmd_invariant_space(res, args):
    g = res.algebra(args.algebra)
    return _space_report("ad-invariant", args.algebra, g, invariant_space(g))


def cmd_quadruple_space(res, args):
    r = res.rep(args.rep)
    sp = quadruple_space(r)
    out = {"representation": args.rep, "algebra_dim": r.algebra.dim, "module_dim": r.module_dim,
           "dimension": sp.dimension, "system": {"equations": sp.equations, "unknowns": sp.unknowns},
           "basis": [matrix_to_json(m) for m in sp]}
    lines = [f"quadruples on {args.rep} (algebra dim {r.algebra.dim}, module dim {r.module_dim})",
             f"dimension: {sp.dimension}"]
    return out, lines, True


def cmd_signature(res, args):
    b = res.form(args.form)
    p, n, z = signature(b.m)
    return {"form": args.form, "signature": [p, n, z]}, [f"signature: ({p}, {n}, {z})"], True


def cmd_index(res, args):
    b = res.form(args.form)
    p, n, z = signature(b.m)
    ind = index_of(b)
    return {"form": args.form, "signature": [p, n, z], "index": ind}, [f"index: {ind}"], True


def cmd_series(res, args):
    g = res.algebra(args.algebra)
    d, lc, uc = derived_series(g), lower_central_series(g), upper_central_series(g)
    out = {"algebra": args.algebra, "derived": series_dims(d), "lower_central": series_dims(lc),
           "upper_central": series_dims(uc),
           "solvable": d[-1].dim == 0, "nilpotent": lc[-1].dim == 0}
    lines = [f"derived series dims: {series_dims(d)}", f"lower central series dims: {series_dims(lc)}",
             f"upper central series dims: {series_dims(uc)}",
             f"solvable: {out['solvable']}", f"nilpotent: {out['nilpotent']}"]
    return out, lines, True


def cmd_center(res, args):
    g = res.algebra(args.algebra)
    c = center(g)
    lines = [f"center dimension: {c.dim}"] + ["  " + " ".join(fmt(x) for x in v) for v in c.vectors]
    return {"algebra": args.algebra, "dimension": c.dim, "basis": matrix_to_json(c.basis)}, lines, True


def cmd_split(res, args):
    g = res.algebra(args.algebra)
    b = res.form(args.form)
    i = res.subspace(args.ideal)
    g1, pi = split_along_ideal(g, b, i)
    out = {"complement": subspace_to_json(g1, args.algebra), "complement_algebra": algebra_to_json(pi.algebra),
           "pi": rep_to_json(pi, "complement")}
    lines = [f"complement dimension: {g1.dim}"] + ["  " + " ".join(fmt(x) for x in v) for v in g1.vectors]
    lines.append(f"pi is zero: {all(op.is_zero() for op in pi.ops)}")
    return out, lines, True


def _construction_report(ma: MetricAlgebra, extra=None):
    rep = validate(ma.algebra)
    bad = cyclic_defect(ma.algebra, ma.form)
    p, n, z = signature(ma.form.m)
    doc = metric_algebra_document(ma)
    doc["certificate"] = {"dim": ma.dim, "lie_ok": rep.ok, "cyclic": not bad, "signature": [p, n, z],
                          "radical_dim": z}
    if extra:
        doc["certificate"].update(extra)
    lines = [f"dimension: {ma.dim}", f"basis: {' '.join(ma.algebra.names)}",
             f"lie algebra: {'ok' if rep.ok else 'FAILED'}", f"cyclic: {'yes' if not bad else 'no'}",
             f"signature: ({p}, {n}, {z})"]
    return doc, lines, rep.ok and not bad


def _metric(res, alg_ref, form_ref):
    return MetricAlgebra(res.algebra(alg_ref), res.form(form_ref))


def cmd_semidirect(res, args):
    ma = semidirect(_metric(res, args.g1, args.b1), _metric(res, args.g2, args.b2), res.rep(args.pi))
    return _construction_report(ma)


def cmd_quad_extend(res, args):
    if args.quadruple is not None:
        q = res.quadruple(args.quadruple)
    else:
        g = res.algebra(args.algebra)
        q = adjoint_quadruple(g, res.form(args.adjoint))
    bg = res.form(args.form) if args.form else BilinearForm.zero(q.rep.algebra.dim)
    return _construction_report(quadruple_extension(q, bg))


def cmd_double_extend(res, args):
    h = _metric(res, args.h, args.bh)
    s = _metric(res, args.s, args.bs)
    pi = res.rep(args.pi)
    theta = res.cocycle(args.theta) if args.theta else derive_theta(h, s, pi)
    bt = res.form(args.btilde) if args.btilde else None
    ma = double_extension(h, s, pi, theta, bt)
    return _construction_report(ma, {"theta": cocycle_to_json(theta, h.algebra.names, s.algebra.names)})


def cmd_central_extend_1d(res, args):
    h = _metric(res, args.h, args.bh)
    theta = res.cocycle(args.theta)
    return _construction_report(central_double_extension_1d(h, theta))


def cmd_reduce_central(res, args):
    g = _metric(res, args.algebra, args.form)
    z = parse_vector(args.z, g.dim)
    red = reduce_central(g, z)
    doc = metric_algebra_document(red.h, "h")
    doc["cocycles"] = {"theta": cocycle_to_json(red.theta, red.h.algebra.names, ["z"])}
    doc["certificate"] = {"x_choice": [fmt(x) for x in red.x_choice],
                          "h_subspace": matrix_to_json(red.h_subspace.basis),
                          "derivation": matrix_to_json(red.derivation),
                          "x_bracket_z_part": [fmt(x) for x in red.z_part]}
    lines = [f"h dimension: {red.h.dim}", f"x: {' '.join(fmt(x) for x in red.x_choice)}",
             "theta (z-component of h brackets):"]
    lines.extend("  " + " ".join(fmt(x) for x in row) for row in red.theta.matrix().data)
    return doc, lines, True


def cmd_check_abc(res, args):
    g = res.algebra(args.algebra)
    b = res.form(args.form)
    rep = check_abc(g, b, res.subspace(args.h), res.subspace(args.i))
    out = {"a": rep.a_ok, "b": rep.b_ok, "c": rep.c_ok, "cyclic": rep.all_ok}
    lines = [f"(a) restrictions cyclic: {rep.a_ok}", f"(b) ideal-ideal-subalgebra sums: {rep.b_ok}",
             f"(c) subalgebra-subalgebra-ideal sums: {rep.c_ok}"]
    return out, lines, rep.all_ok


def cmd_catalog(res, args):
    try:
        entry = make(args.name)
    except UnknownCatalogEntry as exc:
        raise FormatError(str(exc.args[0])) from None
    name = entry.name
    doc = {"algebras": {name: algebra_to_json(entry.algebra)},
           "subspaces": {f"{name}:{k}": subspace_to_json(s, name) for k, s in entry.annotations.items()}}
    if entry.forms:
        doc["forms"] = {name if k == next(iter(entry.forms)) else f"{name}:{k}": form_to_json(b, name)
                        for k, b in entry.forms.items()}
    if entry.representations:
        doc["representations"] = {f"{name}:{k}": rep_to_json(r, "catalog:" + name) for k, r in entry.representations.items()}
    lines = [json.dumps(doc, indent=2)]
    return doc, lines, True


COMMANDS = {
    "validate": cmd_validate,
    "cyclic-space": cmd_cyclic_space,
    "invariant-space": cmd_invariant_space,
    "quadruple-space": cmd_quadruple_space,
    "signature": cmd_signature,
    "index": cmd_index,
    "series": cmd_series,
    "center": cmd_center,
    "split": cmd_split,
    "semidirect": cmd_semidirect,
    "quad-extend": cmd_quad_extend,
    "double-extend": cmd_double_extend,
    "central-extend-1d": cmd_central_extend_1d,
    "reduce-central": cmd_reduce_central,
    "check-abc": cmd_check_abc,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", action="append", default=[], help="JSON input file (repeatable)")
    common.add_argument("--json", action="store_true", help="emit the machine-readable certificate")
    common.add_argument("--meta", action="store_true", help="write provenance to stderr")

    p = argparse.ArgumentParser(prog="cyclic-metric", description="Cyclic metric Lie algebra toolkit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    s = add("validate", "check Jacobi (and optionally cyclicity of a form)")
    s.add_argument("algebra")
    s.add_argument("--form")
    s.add_argument("--rep")
    for name, help_ in (("cyclic-space", "solve for cyclic forms"), ("invariant-space", "solve for ad-invariant forms"),
                        ("series", "derived / lower / upper central series"), ("center", "center of an algebra")):
        add(name, help_).add_argument("algebra")
    add("quadruple-space", "solve for cyclic quadruples").add_argument("rep")
    add("signature", "inertia of a form").add_argument("form")
    add("index", "maximal isotropic dimension").add_argument("form")
    s = add("split", "split a cyclic metric algebra along a nondegenerate ideal")
    s.add_argument("algebra")
    s.add_argument("form")
    s.add_argument("ideal")
    s = add("semidirect", "orthogonal semidirect product")
    for a in ("--g1", "--b1", "--g2", "--b2", "--pi"):
        s.add_argument(a, required=True)
    s = add("quad-extend", "cyclic metric algebra from a quadruple")
    s.add_argument("--quadruple")
    s.add_argument("--algebra", help="with --adjoint: build the adjoint quadruple")
    s.add_argument("--adjoint", help="cyclic form defining the adjoint quadruple")
    s.add_argument("--form", help="cyclic form on the algebra (default 0)")
    s = add("double-extend", "double extension of (h, B_h) by (s, B_s)")
    for a in ("--h", "--bh", "--s", "--bs", "--pi"):
        s.add_argument(a, required=True)
    s.add_argument("--theta", help="cocycle name (default: derived from the compatibility identity)")
    s.add_argument("--btilde")
    s = add("central-extend-1d", "one-dimensional central double extension")
    for a in ("--h", "--bh", "--theta"):
        s.add_argument(a, required=True)
    s = add("reduce-central", "undo a 1-dim central double extension at an isotropic central vector")
    s.add_argument("algebra")
    s.add_argument("form")
    s.add_argument("--z", required=True, help="comma-separated coordinates")
    s = add("check-abc", "evaluate the subalgebra + ideal cyclicity criterion")
    s.add_argument("algebra")
    s.add_argument("form")
    s.add_argument("--h", required=True)
    s.add_argument("--i", required=True)
    add("catalog", "print a catalog entry").add_argument("name")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.command == "quad-extend" and args.quadruple is None and (args.algebra is None or args.adjoint is None):
        print("error: quad-extend needs --quadruple, or --algebra with --adjoint", file=stderr)
        return 2
    try:
        ws = load_workspace(args.input)
        report, lines, ok = COMMANDS[args.command](Resolver(ws), args)
    except (FormatError, NotSymmetricError, OSError) as exc:
        print(f"parse error: {exc}", file=stderr)
        return 2
    except (WorkspaceValidationError, ConstructionError, InvalidAlgebraError, DegenerateFormError, ValueError) as exc:
        witness = getattr(exc, "witness", None) or getattr(exc, "radical", None)
        if args.json:
            print(json.dumps({"command": args.command, "ok": False, "error": str(exc),
                              "witness": _jsonable(witness)}, indent=2), file=stdout)
        else:
            print(f"validation failure: {exc}", file=stderr)
        return 1
    if args.json:
        body = {"command": args.command, "ok": ok}
        body.update(report)
        print(json.dumps(body, indent=2), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)
    if args.meta:
        import datetime
        import platform

        print(json.dumps({"tool": "cyclic-metric", "version": __version__, "argv": list(argv or sys.argv[1:]),
                          "python": platform.python_version(),
                          "time": datetime.datetime.now(datetime.timezone.utc).isoformat()}), file=stderr)
    return 0 if ok else 1


def _jsonable(w):
    if w is None:
        return None
    if isinstance(w, Fraction):
        return fmt(w)
    if isinstance(w, (tuple, list)):
        return [_jsonable(x) for x in w]
    if hasattr(w, "basis"):
        return matrix_to_json(w.basis)
    return w if isinstance(w, (int, str)) else str(w)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
