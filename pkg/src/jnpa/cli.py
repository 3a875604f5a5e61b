"""Command-line front end.

Exit codes: 0 when every check passes or a construction succeeds, 1 for a law
failure or a negative answer, 2 for usage and input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from . import __version__
from .affine import parse_grid, verify_affinization
from .algebra import RIGHT
from .catalog import emit, get_entry, list_entries, verify_catalog
from .constructions import (
    circ_q, commutator_jacobi, conformal_deform_jacobi, from_derivation, kantor_deform, right_kantor_deform,
    tensor_jacobi, tensor_jnp, twisted_jacobi, xi_shift,
)
from .errors import InputError, JnpaError, LawFailure, SingularMatrixError
from .field import QQ, Field
from .frobenius import (
    check_quadratic, check_right_quadratic, frobenius_pair, integral_space, invariant_form_space,
    nondegenerate_integral, pair_conditions,
)
from .io import FORMAT_VERSION, algebra_from_dict, algebra_to_dict, dumps
from .laws import LAW_CHECKERS, LawVerdict, check_simple_novikov
from .modules import ModuleStructure, adjoint_module, check_module, dual_module
from .search import DEFAULT_BUDGET, LAW_FILTERS, enumerate_jnp


@dataclass
class CommandResult:
    code: int
    payload: Any
    text: str
    json: bool = False
    output: str | None = None


# argument helpers

def parse_field(spec: str | None) -> Field | None:
    """``p=P`` for a prime field, ``QQ``/``Q`` for the rationals."""
    if spec is None:
        return None
    s = spec.strip()
    if s.upper() in ("QQ", "Q", "RATIONAL"):
        return QQ
    if s.startswith("p="):
        try:
            return Field(int(s[2:]))
        except ValueError:
            pass
    raise InputError(f"--field expects p=P or QQ, got {spec!r}")


def parse_sets(items: Sequence[str] | None) -> dict[str, str]:
    out = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        if not sep or not key.strip():
            raise InputError(f"--set expects KEY=VALUE, got {item!r}")
        out[key.strip()] = val.strip()
    return out


def parse_vector(field: Field, text: str, n: int) -> tuple:
    parts = [x for x in text.split(",")]
    if len(parts) != n:
        raise InputError(f"expected {n} comma-separated scalars, got {text!r}")
    return tuple(field.parse(x) for x in parts)


def _read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc.msg} at line {exc.lineno}") from None


def load(path: str, field: Field | None = None):
    """Load an algebra file; ``field`` reinterprets its scalars over another field."""
    d = _read_json(path)
    if field is not None and isinstance(d, dict):
        d = dict(d, field=field.to_json())
    return algebra_from_dict(d)


def _map(alg, name: str):
    m = alg.maps_dict
    if name not in m:
        raise InputError(f"algebra file has no map {name!r} (available: {sorted(m) or 'none'})")
    return m[name]


def _verdict_text(v: LawVerdict) -> str:
    line = f"{v.law}: {'PASS' if v.passed else 'FAIL'}"
    if not v.passed:
        line += f" - {v.describe()}"
    for note in v.notes:
        line += f"\n  note: {note}"
    return line


def _verdict_result(v: LawVerdict, field: Field) -> CommandResult:
    return CommandResult(0 if v.passed else 1, v.to_dict(field), _verdict_text(v))


def _algebra_result(alg) -> CommandResult:
    d = algebra_to_dict(alg)
    return CommandResult(0, d, dumps(d).rstrip("\n"))


# subcommands

def cmd_check(a) -> CommandResult:
    alg = load(a.file, parse_field(a.field))
    law = a.law
    if law in ("quadratic", "right-quadratic"):
        if alg.form is None:
            raise InputError("the algebra file has no 'form'")
        v = (check_quadratic if law == "quadratic" else check_right_quadratic)(alg, alg.form)
    elif law in LAW_CHECKERS:
        v = LAW_CHECKERS[law](alg)
    else:
        raise InputError(f"unknown law {law!r}")
    return _verdict_result(v, alg.field)


def cmd_integrals(a) -> CommandResult:
    alg = load(a.file, parse_field(a.field))
    F = alg.field
    basis = [[F.fmt(x) for x in v] for v in integral_space(alg)]
    text = f"integral space has dimension {len(basis)}" + "".join(f"\n  {b}" for b in basis)
    return CommandResult(0, {"dimension": len(basis), "basis": basis}, text)


def cmd_forms(a) -> CommandResult:
    alg = load(a.file, parse_field(a.field))
    basis = [G.to_strings() for G in invariant_form_space(alg)]
    text = f"invariant form space has dimension {len(basis)}" + "".join(f"\n  {b}" for b in basis)
    return CommandResult(0, {"dimension": len(basis), "basis": basis}, text)


def cmd_frobenius(a) -> CommandResult:
    alg = load(a.file, parse_field(a.field))
    F = alg.field
    if a.v is not None:
        v = parse_vector(F, a.v, alg.dim)
        try:
            pair = frobenius_pair(alg, v)
        except SingularMatrixError as exc:
            return CommandResult(1, {"frobenius": False, "reason": str(exc)}, f"no: {exc}")
    else:
        v = nondegenerate_integral(alg, a.budget)
        if v is None:
            msg = "no nondegenerate integral"
            return CommandResult(1, {"frobenius": False, "reason": msg}, msg)
        pair = frobenius_pair(alg, v)
    check = pair_conditions(alg, pair)
    d = {"frobenius": True, "pair": pair.to_dict(F), "conditions": check.to_dict(F)}
    text = (f"Frobenius: yes\n  v = {pair.to_dict(F)['v']}\n  E = {pair.E.to_strings()}\n"
            f"  omega = {pair.to_dict(F)['omega']}\n  {_verdict_text(check)}")
    return CommandResult(0 if check.passed else 1, d, text)


def cmd_construct(a) -> CommandResult:
    field = parse_field(a.field)
    kind = a.kind
    alg = load(a.file, field)
    F = alg.field
    if kind == "from-derivation":
        rep = from_derivation(alg, _map(alg, a.map))
    elif kind == "circ-q":
        if a.q is None:
            raise InputError("circ-q needs --q")
        rep = circ_q(alg, _map(alg, a.map), _map(alg, a.map2), F.parse(a.q))
    elif kind == "commutator":
        rep = commutator_jacobi(alg)
    elif kind == "twisted":
        rep = twisted_jacobi(alg, _map(alg, a.map))
    elif kind in ("tensor-jnp", "tensor-jacobi"):
        if a.other is None:
            raise InputError(f"{kind} needs a second algebra file")
        other = load(a.other, field)
        rep = (tensor_jnp if kind == "tensor-jnp" else tensor_jacobi)(alg, other)
    elif kind == "xi-shift":
        if a.xi is None:
            raise InputError("xi-shift needs --xi")
        rep = xi_shift(alg, parse_vector(F, a.xi, alg.dim))
    elif kind == "kantor":
        if a.u is None:
            raise InputError("kantor needs --u")
        u = parse_vector(F, a.u, alg.dim)
        rep = (right_kantor_deform if alg.orientation == RIGHT else kantor_deform)(alg, u)
    elif kind == "conformal":
        if a.u is None:
            raise InputError("conformal needs --u")
        rep = conformal_deform_jacobi(alg, parse_vector(F, a.u, alg.dim))
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown construction {kind!r}")
    return _algebra_result(rep.algebra)


def cmd_affinize(a) -> CommandResult:
    alg = load(a.file, parse_field(a.field))
    grid = parse_grid(a.grid)
    v = verify_affinization(alg, grid, allow_prime_field=a.allow_prime_field)
    d = dict(v.to_dict(alg.field), grid=[grid[0], grid[-1]], basis_triples=alg.dim ** 3)
    return CommandResult(0 if v.passed else 1, d, _verdict_text(v))


def _load_module(alg, path: str) -> ModuleStructure:
    d = _read_json(path)
    if not isinstance(d, dict):
        raise InputError("module description must be a JSON object")
    return ModuleStructure.from_dict(alg.field, d)


def cmd_module(a) -> CommandResult:
    alg = load(a.file, parse_field(a.field))
    if a.action == "check":
        if a.module is None:
            raise InputError("module check needs a module file")
        return _verdict_result(check_module(alg, _load_module(alg, a.module)), alg.field)
    if a.action == "adjoint":
        M = adjoint_module(alg)
    else:
        if a.module is None:
            raise InputError("module dual needs a module file")
        M = dual_module(alg, _load_module(alg, a.module))
    d = {"module": M.to_dict()}
    return CommandResult(0, d, dumps(d).rstrip("\n"))


def cmd_catalog(a) -> CommandResult:
    if a.action == "list":
        rows = [e.summary() for e in list_entries()]
        text = "\n".join(f"{r['name']:28s} {', '.join(r['params']) or '-':20s} {r['law']}" for r in rows)
        return CommandResult(0, rows, text)
    if a.action == "emit":
        if not a.name:
            raise InputError("catalog emit needs an entry name")
        field = parse_field(a.field) or QQ
        inst = emit(a.name, parse_sets(a.set), field)
        alg = inst.partner if a.partner else inst.algebra
        if alg is None:
            raise InputError(f"{a.name} has no partner algebra")
        if a.partner and inst.partner_form is not None:
            alg = alg.with_(form=inst.partner_form)
        else:
            if inst.form is not None and alg.form is None:
                alg = alg.with_(form=inst.form)
            if inst.maps:
                alg = alg.with_(maps=dict(alg.maps_dict, **inst.maps))
        return _algebra_result(alg)
    # verify
    plan = None
    if a.plan:
        raw = _read_json(a.plan)
        if not isinstance(raw, dict):
            raise InputError("plan must be an object mapping entry names to samples")
        plan = {}
        for name, spec in raw.items():
            get_entry(name)
            if not isinstance(spec, dict):
                raise InputError(f"plan for {name} must be an object")
            plan[name] = {"field": Field.from_json(spec["field"]) if "field" in spec else None,
                          "assignments": spec.get("assignments")}
    names = list(plan) if plan and a.only_plan else None
    rep = verify_catalog(plan, names)
    d = rep.to_dict()
    text = f"{len(rep.rows)} instances checked, {len(rep.failures)} failures"
    for f in d["failures"]:
        text += f"\n  {f['entry']} {f['assignment']}: {[v.get('counterexample') for v in f['verdicts']]}"
    return CommandResult(0 if rep.ok else 1, d, text)


def cmd_search(a) -> CommandResult:
    field = parse_field(a.field)
    if field is None or not field.is_finite:
        raise InputError("search needs --field p=P")
    base = load(a.base, field)
    res = enumerate_jnp(base, field.p, a.budget, a.law)
    d = res.to_dict()
    text = f"{res.count} solutions over {field} ({a.law}); {len(res.buckets)} invariant classes"
    for b in d["buckets"]:
        text += f"\n  size {b['size']:4d}  representative {b['representative']}"
    return CommandResult(0, d, text)


def cmd_simple(a) -> CommandResult:
    alg = load(a.file, parse_field(a.field))
    return _verdict_result(check_simple_novikov(alg, a.budget), alg.field)


# parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jnpa", description="Exact computations with Jacobi Novikov-Poisson algebras.")
    p.add_argument("--version", action="version", version=f"jnpa {__version__} (format {FORMAT_VERSION})")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON payload")
    common.add_argument("-o", "--output", help="write the payload to FILE instead of stdout")
    common.add_argument("--field", help="p=P to read scalars over GF(P), or QQ")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="check an identity family")
    s.add_argument("file")
    s.add_argument("--law", default="jnp",
                   choices=sorted(LAW_CHECKERS) + ["quadratic", "right-quadratic"])
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("integrals", parents=[common], help="basis of the integral space")
    s.add_argument("file")
    s.set_defaults(func=cmd_integrals)

    s = sub.add_parser("forms", parents=[common], help="basis of invariant symmetric forms")
    s.add_argument("file")
    s.set_defaults(func=cmd_forms)

    s = sub.add_parser("frobenius", parents=[common], help="find a Frobenius pair")
    s.add_argument("file")
    s.add_argument("--v", help="use this integral (comma-separated) instead of searching")
    s.add_argument("--budget", type=int, default=1_000_000)
    s.set_defaults(func=cmd_frobenius)

    s = sub.add_parser("construct", parents=[common], help="build a new algebra")
    s.add_argument("kind", choices=["from-derivation", "circ-q", "commutator", "twisted", "tensor-jnp",
                                    "tensor-jacobi", "xi-shift", "kantor", "conformal"])
    s.add_argument("file")
    s.add_argument("other", nargs="?", help="second factor for tensor products")
    s.add_argument("--map", default="P", help="name of the operator in the file's maps (default P)")
    s.add_argument("--map2", default="Q", help="second operator for circ-q (default Q)")
    s.add_argument("--q", help="scalar q for circ-q")
    s.add_argument("--xi", help="vector for xi-shift")
    s.add_argument("--u", help="vector for kantor / conformal")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("affinize", parents=[common], help="verify the Laurent extension on a grid")
    s.add_argument("file")
    s.add_argument("--grid", default="-2..2")
    s.add_argument("--allow-prime-field", action="store_true")
    s.set_defaults(func=cmd_affinize)

    s = sub.add_parser("module", parents=[common], help="module checks and constructions")
    s.add_argument("action", choices=["check", "adjoint", "dual"])
    s.add_argument("file")
    s.add_argument("module", nargs="?")
    s.set_defaults(func=cmd_module)

    s = sub.add_parser("catalog", parents=[common], help="classification tables and examples")
    s.add_argument("action", choices=["list", "emit", "verify"])
    s.add_argument("name", nargs="?")
    s.add_argument("--set", action="append", metavar="K=V")
    s.add_argument("--partner", action="store_true", help="emit the partner algebra, when the entry has one")
    s.add_argument("--plan", help="JSON sampling plan for verify")
    s.add_argument("--only-plan", action="store_true", help="verify only the entries named in the plan")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("search", parents=[common], help="enumerate second products over GF(p)")
    s.add_argument("--base", required=True)
    s.add_argument("--law", default="jnp", choices=sorted(LAW_FILTERS))
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("simple", parents=[common], help="decide simplicity of the second product over GF(p)")
    s.add_argument("file")
    s.add_argument("--budget", type=int, default=200_000)
    s.set_defaults(func=cmd_simple)
    return p


def run(argv: Sequence[str] | None = None) -> CommandResult:
    """Parse and dispatch; never writes to stdout (see :func:`main`)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    # "--grid -2..2" would otherwise be read as an unknown option
    for i in range(len(argv) - 1):
        if argv[i] == "--grid":
            argv[i:i + 2] = [f"--grid={argv[i + 1]}", ""]
    args = build_parser().parse_args([x for x in argv if x != ""])
    try:
        res = args.func(args)
    except LawFailure as exc:
        v = exc.verdict
        return CommandResult(1, v.to_dict(), _verdict_text(v))
    except (InputError, SingularMatrixError) as exc:
        return CommandResult(2, {"error": str(exc)}, str(exc))
    res.json, res.output = args.json, args.output
    return res


def main(argv: Sequence[str] | None = None) -> int:
    try:
        res = run(argv)
    except SystemExit as exc:  # argparse usage errors and --version
        return int(exc.code or 0)
    except JnpaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if res.code == 2:
        print(f"error: {res.text}", file=sys.stderr)
        return 2
    out = dumps(res.payload) if res.json else res.text + "\n"
    path = res.output
    if path:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            print(f"error: cannot write {path}: {exc.strerror}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(out)
    return res.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
