"""Command-line front end: parse JSON inputs, dispatch, report.

Exit codes: 0 all checks passed, 1 a mathematical check failed (the report
names witnesses), 2 input or usage error.  Output is deterministic: the
same inputs and flags produce byte-identical reports.  All rationals print
as p/q (or a bare integer); no floating point appears on any output path.
"""

import argparse
import hashlib
import json
import sys
from fractions import Fraction

from .errors import InputError, PreconditionError
from .linalg import rational_from_json, rational_str, rational_to_json
from .liealg import Endo, LieAlgebra, vector_str
from . import rmatrix
from .cochain import Cochain, cohomology
from .graded import GRADED_SIGN_CONVENTION, graded_bracket, kuranishi, \
    mc_deformation_check
from . import deform
from . import doubling
from .liealg import catalog as catalog_fn

CONVENTIONS = {
    "rationals": "exact p/q strings or bare integers; no floating point",
    "cochain_indexing": "arity k = cohomological degree k+1; C^0 = 0, C^1 = g, B^1 = 0",
    "cochain_basis_order": "pairs (sorted tuple, target index), tuples lexicographic",
    "sl_basis_order": "upper E_ij row-major, lower E_ij row-major, Cartan H_i",
    "graded_signs": GRADED_SIGN_CONVENTION,
}


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return rational_to_json(obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, Cochain):
        return _jsonable(obj.to_json_dict())
    if isinstance(obj, Endo):
        return _jsonable(obj.to_json_dict())
    if isinstance(obj, LieAlgebra):
        return _jsonable(obj.to_json_dict())
    return obj


class Report:
    def __init__(self, command):
        self.data = {
            "command": command,
            "inputs": {},
            "conventions": CONVENTIONS,
            "verdicts": {},
            "witnesses": {},
        }
        self.lines = []

    def add_input(self, label, path, raw):
        self.data["inputs"][label] = {
            "path": path,
            "sha256": hashlib.sha256(raw).hexdigest(),
        }

    def verdict(self, key, value, line=None):
        self.data["verdicts"][key] = _jsonable(value)
        if line is not None:
            self.lines.append(line)

    def witness(self, key, value):
        self.data["witnesses"][key] = _jsonable(value)

    def note(self, line):
        self.lines.append(line)

    def emit(self, as_json):
        if as_json:
            print(json.dumps(self.data, sort_keys=True, indent=2))
        else:
            print(f"== {self.data['command']}")
            for line in self.lines:
                print(line)


def _read_json(path, report, label):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"{label} file {path}: {exc}") from exc
    report.add_input(label, path, raw)
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{label} file {path} is not valid JSON: "
                         f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _load_algebra(args, report, check=True):
    data = _read_json(args.algebra, report, "algebra")
    return LieAlgebra.from_json_dict(data, check=check)


def _load_endo(path, algebra, report, label):
    data = _read_json(path, report, label)
    return Endo.from_json_dict(data, algebra)


def _load_cochain_or_endo(path, algebra, report, label):
    data = _read_json(path, report, label)
    if isinstance(data, dict) and "matrix" in data:
        return Cochain.from_endo(Endo.from_json_dict(data, algebra))
    return Cochain.from_json_dict(data, algebra)


def _parse_element(text, algebra):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"--element is not valid JSON: {exc.msg}") from exc
    if not isinstance(data, list):
        raise InputError("--element must be a JSON array of rationals")
    vec = tuple(rational_from_json(v) for v in data)
    if len(vec) != algebra.dim:
        raise InputError(f"--element length {len(vec)} != dim {algebra.dim}")
    return vec


def _parse_rational(text):
    return rational_from_json(text if "/" in text else int(text))


def _pair_names(algebra, pair):
    if pair is None:
        return None
    i, j = pair
    return [algebra.basis_names[i], algebra.basis_names[j]]


# -- subcommand handlers (each returns the exit code) -------------------------


def cmd_check_lie(args, report):
    algebra = _load_algebra(args, report, check=False)
    jac = algebra.verify_jacobi()
    report.verdict("jacobi_ok", jac.ok, f"jacobi: {'pass' if jac.ok else 'FAIL'}")
    if not jac.ok:
        i, j, k = jac.triple
        names = algebra.basis_names
        report.witness("jacobi_triple", [names[i], names[j], names[k]])
        report.witness("jacobiator", list(jac.value))
        report.note(f"counterexample triple: ({names[i]}, {names[j]}, {names[k]}) "
                    f"-> {vector_str(jac.value)}")
        return 1
    return 0


def cmd_check_mcybe(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    defect = rmatrix.mcybe_defect(R)
    report.verdict("mcybe_ok", defect.is_zero,
                   f"modified Yang-Baxter equation: {'pass' if defect.is_zero else 'FAIL'}")
    if not defect.is_zero:
        report.witness("failing_pair", _pair_names(algebra, defect.worst_pair))
        report.witness("defect", defect.defect_cochain)
        i, j = defect.worst_pair
        report.note(f"defect at ({algebra.basis_names[i]}, {algebra.basis_names[j]}): "
                    f"{vector_str(defect.defect_cochain.get(defect.worst_pair))}")
        return 1
    return 0


def cmd_check_rota_baxter(args, report):
    algebra = _load_algebra(args, report)
    B = _load_endo(args.map, algebra, report, "map")
    weight = _parse_rational(args.weight)
    res = rmatrix.is_rota_baxter(B, weight)
    report.verdict("rota_baxter_ok", res.ok,
                   f"Rota-Baxter (weight {rational_str(weight)}): "
                   f"{'pass' if res.ok else 'FAIL'}")
    if not res.ok:
        report.witness("failing_pair", _pair_names(algebra, res.failing_pair))
        report.witness("defect_value", list(res.value))
        return 1
    return 0


def cmd_cohomology(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    rep = cohomology(R, max_degree=args.max_degree, flavor=args.flavor,
                     witnesses=args.witnesses)
    degrees = {}
    for d, dr in sorted(rep.degrees.items()):
        degrees[d] = {
            "arity": dr.arity,
            "dim_cochains": dr.dim_cochains,
            "dim_cocycles": dr.dim_cocycles,
            "dim_coboundaries": dr.dim_coboundaries,
            "dim_cohomology": dr.dim_cohomology,
        }
        report.note(f"H^{d}: dim {dr.dim_cohomology}   "
                    f"(C={dr.dim_cochains} Z={dr.dim_cocycles} B={dr.dim_coboundaries}, "
                    f"arity {dr.arity})")
        if args.witnesses:
            report.witness(f"cocycle_basis_degree_{d}", dr.cocycle_witnesses)
    report.verdict("dimensions", degrees)
    return 0


def cmd_induced(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    induced = rmatrix.induced_bracket(R, force=args.force)
    jac = induced.verify_jacobi()
    report.verdict("jacobi_ok", jac.ok,
                   f"induced bracket jacobi: {'pass' if jac.ok else 'FAIL'}")
    report.verdict("algebra", induced)
    for (i, j), vec in sorted(induced.structure.items()):
        report.note(f"[{induced.basis_names[i]}, {induced.basis_names[j]}]_R = "
                    f"{vector_str(vec)}")
    return 0 if jac.ok else 1


def cmd_graded_bracket(args, report):
    algebra = _load_algebra(args, report)
    left = _load_cochain_or_endo(args.left, algebra, report, "left")
    right = _load_cochain_or_endo(args.right, algebra, report, "right")
    result = graded_bracket(left, right)
    report.verdict("arity", result.arity)
    report.verdict("result", result)
    report.note(f"[[left, right]] has arity {result.arity} with "
                f"{len(result.coeffs)} nonzero basis values")
    return 0


def cmd_mc_check(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    Rp = _load_endo(args.prime, algebra, report, "prime")
    ok = mc_deformation_check(R, Rp)
    report.verdict("maurer_cartan_ok", ok,
                   f"R' Maurer-Cartan for d_R (R + R' modified): "
                   f"{'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_kuranishi(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    f = _load_cochain_or_endo(args.cocycle, algebra, report, "cocycle")
    rep = kuranishi(R, f)
    report.verdict("ff_is_cocycle", rep.is_cocycle)
    report.verdict("vanishes_in_H3", rep.vanishes_in_H3,
                   f"Kuranishi obstruction vanishes in H^3: "
                   f"{'pass' if rep.vanishes_in_H3 else 'FAIL'}")
    report.witness("ff", rep.ff)
    if rep.witness is not None:
        report.witness("primitive", rep.witness)
        report.note("primitive g with d g = [[f, f]] attached")
    return 0 if rep.vanishes_in_H3 else 1


def cmd_deform_check(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    rhat = _load_endo(args.rhat, algebra, report, "rhat")
    dv = deform.check_linear_deformation(R, rhat)
    report.verdict("cocycle_ok", dv.cocycle_ok)
    report.verdict("weight0_ok", dv.weight0_ok)
    report.verdict("valid", dv.valid,
                   f"linear deformation valid: {'pass' if dv.valid else 'FAIL'} "
                   f"(cocycle {dv.cocycle_ok}, weight-0 {dv.weight0_ok})")
    if not dv.valid:
        report.witness("failing_pair", _pair_names(algebra, dv.failing_pair))
        return 1
    return 0


def cmd_deform_trivial(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    x = _parse_element(args.element, algebra)
    rhat, dv = deform.trivial_deformation(R, x)
    report.verdict("valid", dv.valid, "trivial deformation: pass")
    report.witness("rhat", rhat)
    report.note(f"Rhat = d x with {len([1 for c in rhat.matrix.rows_list() for v in c if v])} "
                f"nonzero entries")
    return 0


def cmd_deform_equivalence(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    rhat1 = _load_endo(args.rhat1, algebra, report, "rhat1")
    rhat2 = _load_endo(args.rhat2, algebra, report, "rhat2")
    x = _parse_element(args.element, algebra)
    eq = deform.check_equivalence(R, rhat1, rhat2, x)
    report.verdict("homomorphism_ok", eq.homomorphism_ok)
    report.verdict("intertwine_linear_ok", eq.intertwine_linear_ok)
    report.verdict("intertwine_quadratic_ok", eq.intertwine_quadratic_ok)
    report.verdict("equivalent", eq.ok,
                   f"equivalence via Id + t ad_x: {'pass' if eq.ok else 'FAIL'}")
    if not eq.ok and eq.failing_pair is not None:
        report.witness("failing_pair", _pair_names(algebra, eq.failing_pair))
    return 0 if eq.ok else 1


def cmd_nijenhuis_check(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    x = _parse_element(args.element, algebra)
    v = deform.nijenhuis_check(R, x)
    report.verdict("eq1_ok", v.eq1_ok)
    report.verdict("eq2_ok", v.eq2_ok)
    report.verdict("is_nijenhuis_element", v.is_nijenhuis_element,
                   f"Nijenhuis element: {'pass' if v.is_nijenhuis_element else 'FAIL'} "
                   f"(eq1 {v.eq1_ok}, eq2 {v.eq2_ok})")
    if v.eq1_witness is not None:
        report.witness("eq1_pair", _pair_names(algebra, v.eq1_witness))
    if v.eq2_witness is not None:
        report.witness("eq2_basis_vector", algebra.basis_names[v.eq2_witness])
    return 0 if v.is_nijenhuis_element else 1


def cmd_nijenhuis_scan(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    results = deform.nijenhuis_scan(R)
    found = []
    for x, v in results:
        if v.is_nijenhuis_element:
            found.append(list(x))
            report.note(f"nijenhuis element: {vector_str(x)}")
    report.verdict("candidates_checked", len(results))
    report.verdict("nijenhuis_elements", found,
                   f"{len(found)} of {len(results)} candidates are Nijenhuis elements")
    return 0


def cmd_double_graph(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    cert = doubling.graph_complement(R)
    report.verdict("is_subalgebra", cert.is_subalgebra,
                   f"graph of R is a subalgebra of g(+)g: "
                   f"{'pass' if cert.is_subalgebra else 'FAIL'}")
    report.witness("graph_basis", [list(v) for v in cert.basis])
    if not cert.is_subalgebra:
        report.witness("failing_pair", list(cert.failing_pair))
        return 1
    return 0


def cmd_double_complement(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    rep = doubling.complement_certificate(R)
    report.verdict("direct_sum_ok", rep.direct_sum_ok)
    report.verdict("diagonal_subalgebra_ok", rep.diagonal_subalgebra_ok)
    report.verdict("graph_subalgebra_ok", rep.graph_subalgebra_ok)
    report.verdict("ok", rep.ok,
                   f"g(+)g = diagonal (+) graph, both subalgebras: "
                   f"{'pass' if rep.ok else 'FAIL'} "
                   f"(rank {rep.rank_total} of {2 * algebra.dim}, "
                   f"intersection dim {rep.intersection_dim})")
    return 0 if rep.ok else 1


def cmd_involutive_analyze(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    rep = rmatrix.involutive_analyze(R)
    report.verdict("mcybe_ok", rep.mcybe_ok)
    report.verdict("nijenhuis_operator_ok", rep.nijenhuis_operator_ok)
    report.verdict("eigensplit_ok", rep.eigensplit_ok)
    report.verdict("product_structure_ok", rep.product_structure_ok)
    report.verdict("verdict", rep.verdict,
                   f"involutive equivalences (all four agree): "
                   f"{'pass' if rep.verdict else 'FAIL'}")
    report.witness("plus_eigenbasis", [list(v) for v in rep.plus_basis])
    report.witness("minus_eigenbasis", [list(v) for v in rep.minus_basis])
    return 0 if rep.verdict else 1


def cmd_catalog_sl(args, report):
    algebra, R = catalog_fn("sl-borel", args.n)
    report.verdict("dim", algebra.dim,
                   f"sl({args.n}) with Borel r-matrix: dim {algebra.dim}")
    payload = {"algebra": algebra.to_json_dict(), "r_matrix": R.to_json_dict()}
    if args.algebra_out:
        with open(args.algebra_out, "w") as fh:
            json.dump(payload["algebra"], fh, sort_keys=True, indent=2)
            fh.write("\n")
        report.note(f"algebra written to {args.algebra_out}")
    if args.map_out:
        with open(args.map_out, "w") as fh:
            json.dump(payload["r_matrix"], fh, sort_keys=True, indent=2)
            fh.write("\n")
        report.note(f"r-matrix written to {args.map_out}")
    if not args.algebra_out and not args.map_out:
        report.verdict("catalog", payload)
    return 0


def cmd_compatible(args, report):
    algebra = _load_algebra(args, report)
    R = _load_endo(args.map, algebra, report, "map")
    rhat = _load_endo(args.rhat, algebra, report, "rhat")
    t1 = _parse_rational(args.t1)
    t2 = _parse_rational(args.t2)
    rep = deform.compatible_bracket_check(R, rhat, t1, t2)
    report.verdict("jacobi_ok", rep.jacobi_ok)
    report.verdict("midpoint_ok", rep.midpoint_ok)
    report.verdict("compatible", rep.ok,
                   f"bracket sum at t1={rational_str(t1)}, t2={rational_str(t2)}: "
                   f"{'pass' if rep.ok else 'FAIL'}")
    return 0 if rep.ok else 1


# -- parser --------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="mcybe",
        description="Verification workbench for modified r-matrices on Lie algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(p, *opts):
        if "algebra" in opts:
            p.add_argument("--algebra", required=True, help="algebra JSON file")
        if "map" in opts:
            p.add_argument("--map", required=True, help="operator JSON file")
        p.add_argument("--json", action="store_true", help="emit the structured report")
        return p

    check = sub.add_parser("check", help="verify a single axiom").add_subparsers(
        dest="what", required=True)
    p = add(check.add_parser("lie"), "algebra")
    p.set_defaults(func=cmd_check_lie)
    p = add(check.add_parser("mcybe"), "algebra", "map")
    p.set_defaults(func=cmd_check_mcybe)
    p = add(check.add_parser("rota-baxter"), "algebra", "map")
    p.add_argument("--weight", required=True, help="rational weight, e.g. 1 or 1/2")
    p.set_defaults(func=cmd_check_rota_baxter)

    p = add(sub.add_parser("cohomology"), "algebra", "map")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--flavor", choices=("R", "B"), default="R")
    p.add_argument("--witnesses", action="store_true",
                   help="include witness bases in the report")
    p.set_defaults(func=cmd_cohomology)

    p = add(sub.add_parser("induced"), "algebra", "map")
    p.add_argument("--force", action="store_true",
                   help="emit the raw table even for non-r-matrices")
    p.set_defaults(func=cmd_induced)

    p = add(sub.add_parser("graded-bracket"), "algebra")
    p.add_argument("--left", required=True, help="cochain or operator JSON file")
    p.add_argument("--right", required=True, help="cochain or operator JSON file")
    p.set_defaults(func=cmd_graded_bracket)

    p = add(sub.add_parser("mc-check"), "algebra", "map")
    p.add_argument("--prime", required=True, help="candidate R' JSON file")
    p.set_defaults(func=cmd_mc_check)

    p = add(sub.add_parser("kuranishi"), "algebra", "map")
    p.add_argument("--cocycle", required=True, help="2-cocycle JSON file")
    p.set_defaults(func=cmd_kuranishi)

    dsub = sub.add_parser("deform", help="linear deformations").add_subparsers(
        dest="what", required=True)
    p = add(dsub.add_parser("check"), "algebra", "map")
    p.add_argument("--rhat", required=True)
    p.set_defaults(func=cmd_deform_check)
    p = add(dsub.add_parser("trivial"), "algebra", "map")
    p.add_argument("--element", required=True, help="JSON array, e.g. '[0, 1, \"1/2\"]'")
    p.set_defaults(func=cmd_deform_trivial)
    p = add(dsub.add_parser("equivalence"), "algebra", "map")
    p.add_argument("--rhat1", required=True)
    p.add_argument("--rhat2", required=True)
    p.add_argument("--element", required=True)
    p.set_defaults(func=cmd_deform_equivalence)

    nsub = sub.add_parser("nijenhuis", help="Nijenhuis elements").add_subparsers(
        dest="what", required=True)
    p = add(nsub.add_parser("check"), "algebra", "map")
    p.add_argument("--element", required=True)
    p.set_defaults(func=cmd_nijenhuis_check)
    p = add(nsub.add_parser("scan"), "algebra", "map")
    p.set_defaults(func=cmd_nijenhuis_scan)

    dbl = sub.add_parser("double", help="doubling constructions").add_subparsers(
        dest="what", required=True)
    p = add(dbl.add_parser("graph"), "algebra", "map")
    p.set_defaults(func=cmd_double_graph)
    p = add(dbl.add_parser("complement"), "algebra", "map")
    p.set_defaults(func=cmd_double_complement)

    inv = sub.add_parser("involutive").add_subparsers(dest="what", required=True)
    p = add(inv.add_parser("analyze"), "algebra", "map")
    p.set_defaults(func=cmd_involutive_analyze)

    cat = sub.add_parser("catalog").add_subparsers(dest="what", required=True)
    p = cat.add_parser("sl")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algebra-out", help="write the algebra JSON here")
    p.add_argument("--map-out", help="write the r-matrix JSON here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog_sl)

    p = add(sub.add_parser("compatible"), "algebra", "map")
    p.add_argument("--rhat", required=True)
    p.add_argument("--t1", required=True)
    p.add_argument("--t2", required=True)
    p.set_defaults(func=cmd_compatible)

    return parser


def run(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code else 0
    command = " ".join(
        s for s in (args.command, getattr(args, "what", None)) if s)
    report = Report(command)
    try:
        code = args.func(args, report)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    report.emit(args.json)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
