"""Command-line interface.

Exit codes: 0 when the checked property holds (or a build/search succeeds),
1 when it fails (defect witnesses are printed), 2 on input errors.
Reports go to stdout, errors to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import documents as docs
from . import fixtures
from .graded import GradingError, SpaceMismatch, symmetry_class
from .operators import SearchTooLarge, search_o_operators, verify_o_operator
from .representation import (NotCoherent, NotDualizable, Representation, UnverifiedRepresentation,
                             coregular_rep, parity_reversed_rep, regular_rep, verify_dualizable,
                             verify_representation)
from .superalgebra import (DefectReport, SuperAlgebra, family_1dim1, semidirect_product,
                           verify_associativity, verify_coherence, verify_leibniz, verify_lie)
from .yang_baxter import (PreconditionError, check_pybe, check_theorem_tr, corollary_pipeline,
                          build_solution, random_dual_symmetric)

OK, FAILED, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(INPUT_ERROR)


# -- input --------------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def _load(path: str) -> docs.Document:
    try:
        return docs.parse(_read(path))
    except docs.DocumentError as exc:
        raise InputError(f"{path}: {exc}") from None


def _algebra(path: str) -> SuperAlgebra:
    try:
        return docs.to_algebra(_load(path))
    except docs.DocumentError as exc:
        raise InputError(f"{path}: {exc}") from None


def _rep(path: str, algebra_path: str | None) -> Representation:
    algebra = _algebra(algebra_path) if algebra_path else None
    try:
        return docs.to_representation(_load(path), algebra)
    except docs.DocumentError as exc:
        raise InputError(f"{path}: {exc}") from None


def _map(path: str):
    try:
        return docs.to_linear_map(_load(path))
    except docs.DocumentError as exc:
        raise InputError(f"{path}: {exc}") from None


def _tensor(path: str, algebra: SuperAlgebra):
    try:
        return docs.to_tensor(_load(path), algebra.space)
    except docs.DocumentError as exc:
        raise InputError(f"{path}: {exc}") from None


def _scalar(text: str) -> Fraction:
    try:
        return docs.parse_scalar(text.strip(), "scalar")
    except docs.DocumentError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _grid(text: str) -> tuple[Fraction, ...]:
    values = tuple(_scalar(t) for t in text.split(",") if t.strip())
    if not values:
        raise argparse.ArgumentTypeError("grid must list at least one value")
    return tuple(dict.fromkeys(values))


# -- output -------------------------------------------------------------------

def _fmt(c: Fraction) -> str:
    return docs.format_scalar(c)


def _vec(v: Sequence[Fraction]) -> str:
    return "[" + ", ".join(_fmt(c) for c in v) + "]"


def _namer(*name_lists: Sequence[str]) -> Callable[[tuple], str]:
    def name(indices: tuple) -> str:
        return "(" + ", ".join(names[i] for names, i in zip(name_lists, indices)) + ")"
    return name


def report_lines(report: DefectReport, name: Callable[[tuple], str]) -> list[str]:
    lines = []
    for law in report.laws or (report.axiom,):
        ws = sorted((w for w in report.witnesses if w.law == law), key=lambda w: w.indices)
        lines.append(f"  {law}: {len(ws)} witness{'es' if len(ws) != 1 else ''}")
        lines += [f"    {name(w.indices)} defect {_vec(w.defect)}" for w in ws]
    return lines


def _emit(lines: Sequence[str]):
    sys.stdout.write("\n".join(lines) + "\n")


def _verdict(holds: bool) -> str:
    return "result: holds" if holds else "result: FAILS"


def _write_doc(doc: docs.Document, path: str | None = None):
    text = docs.serialize(doc)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror or exc}") from None


def _rep_report(rep: Representation) -> DefectReport:
    return verify_representation(rep)


def _rep_name(rep: Representation):
    return _namer(rep.algebra.space.names, rep.algebra.space.names, rep.module.names)


# -- commands -----------------------------------------------------------------

def cmd_verify_algebra(args) -> int:
    A = _algebra(args.file)
    names = A.space.names
    name = _namer(names, names, names)
    checks = [verify_associativity(A), verify_lie(A), verify_leibniz(A)]
    coherence = verify_coherence(A)
    lines = [f"algebra {A.name or args.file}: basis {A.space}"]
    for r in checks:
        lines.append(f"{r.axiom}:")
        lines += report_lines(r, name)
    lines.append("coherence:" if args.coherent else "coherence (informational):")
    lines += report_lines(coherence, name)
    holds = all(r.holds for r in checks) and (coherence.holds or not args.coherent)
    lines.append(_verdict(holds))
    _emit(lines)
    return OK if holds else FAILED


def cmd_verify_rep(args) -> int:
    rep = _rep(args.file, args.algebra)
    report = _rep_report(rep)
    dualizable = verify_dualizable(rep)
    lines = [f"representation {rep.name or args.file} on {rep.module}", "representation laws:"]
    lines += report_lines(report, _rep_name(rep))
    lines.append(f"dualizable (informational): {'yes' if dualizable.holds else 'no'}"
                 f" ({dualizable.count()} witnesses)")
    lines.append(_verdict(report.holds))
    _emit(lines)
    return OK if report.holds else FAILED


def cmd_verify_operator(args) -> int:
    rep = _rep(args.rep, args.algebra)
    T = _map(args.file)
    if T.domain != rep.module or T.codomain != rep.algebra.space:
        raise InputError(f"{args.file}: operator must map {rep.module} to {rep.algebra.space}")
    report = verify_o_operator(T, rep)
    names = rep.module.names
    lines = [f"{'even' if T.parity == 0 else 'odd'} operator {args.file} on representation "
             f"{rep.name or args.rep}", "o-operator identities:"]
    lines += report_lines(report, _namer(names, names))
    lines.append(_verdict(report.holds))
    _emit(lines)
    return OK if report.holds else FAILED


def _triple_lines(label: str, defect, names) -> list[str]:
    entries = defect.entries()
    lines = [f"  {label}: {len(entries)} nonzero coefficient{'s' if len(entries) != 1 else ''}"]
    lines += [f"    ({names[i]}, {names[j]}, {names[k]}) {_fmt(c)}" for (i, j, k), c in entries.items()]
    return lines


def cmd_check_pybe(args) -> int:
    A = _algebra(args.algebra)
    r = _tensor(args.file, A)
    report = check_pybe(A, r)
    names = A.space.names
    lines = [f"{'even' if r.parity == 0 else 'odd'} tensor {args.file}: {r}",
             f"symmetry: {symmetry_class(r)}", "poisson yang-baxter equation:"]
    lines += _triple_lines("associative yang-baxter defect", report.aybe_defect, names)
    lines += _triple_lines("classical yang-baxter defect", report.cybe_defect, names)
    lines.append(_verdict(report.is_solution))
    _emit(lines)
    return OK if report.is_solution else FAILED


def _coregular_or_report(A: SuperAlgebra):
    try:
        return coregular_rep(A), None
    except NotCoherent as exc:
        names = A.space.names
        return None, ["algebra is not coherent; the co-regular representation does not exist",
                      "coherence:"] + report_lines(exc.report, _namer(names, names, names))


def cmd_check_theorem_tr(args) -> int:
    A = _algebra(args.algebra)
    coreg, failure = _coregular_or_report(A)
    if failure:
        _emit(failure + [_verdict(False)])
        return FAILED
    if args.file:
        r = _tensor(args.file, A)
        try:
            d = check_theorem_tr(A, r, coreg)
        except PreconditionError as exc:
            raise InputError(f"{args.file}: {exc}") from None
        _emit([f"tensor {args.file}: {r}",
               f"  solves the poisson yang-baxter equation: {'yes' if d.pybe_solution else 'no'}",
               f"  T_r is an o-operator for the co-regular representation: "
               f"{'yes' if d.o_operator else 'no'}",
               _verdict(d.agree)])
        return OK if d.agree else FAILED
    rng = random.Random(args.seed)
    solutions = agree = 0
    disagreements = []
    for n in range(args.count):
        r = random_dual_symmetric(A.space, rng.randint(0, 1), rng, args.grid)
        d = check_theorem_tr(A, r, coreg)
        solutions += d.pybe_solution
        if d.agree:
            agree += 1
        else:
            disagreements.append(f"    sample {n}: {r}")
    lines = [f"random suite: seed={args.seed} count={args.count} grid={_vec(args.grid)}",
             f"  solutions found: {solutions}",
             f"  verdicts agree: {agree}/{args.count}"] + disagreements
    lines.append(_verdict(agree == args.count))
    _emit(lines)
    return OK if agree == args.count else FAILED


def cmd_build_semidirect(args) -> int:
    rep = _rep(args.rep, args.algebra)
    try:
        S = semidirect_product(rep.algebra, rep)
    except UnverifiedRepresentation as exc:
        _emit(["not a representation:"] + report_lines(exc.report, _rep_name(rep)) + [_verdict(False)])
        return FAILED
    _write_doc(docs.algebra_document(S))
    return OK


def cmd_build_regular(args) -> int:
    A = _algebra(args.algebra)
    _write_doc(docs.representation_document(regular_rep(A)))
    return OK


def cmd_build_coregular(args) -> int:
    A = _algebra(args.algebra)
    coreg, failure = _coregular_or_report(A)
    if failure:
        _emit(failure + [_verdict(False)])
        return FAILED
    _write_doc(docs.representation_document(coreg))
    return OK


def cmd_build_parity_reversed(args) -> int:
    rep = _rep(args.rep, args.algebra)
    _write_doc(docs.representation_document(parity_reversed_rep(rep)))
    return OK


def _solution_inputs(args):
    rep = _rep(args.rep, args.algebra)
    T = _map(args.file)
    if T.domain != rep.module or T.codomain != rep.algebra.space:
        raise InputError(f"{args.file}: operator must map {rep.module} to {rep.algebra.space}")
    return rep, T


def cmd_build_solution(args) -> int:
    rep, T = _solution_inputs(args)
    try:
        bundle = build_solution(rep.algebra, rep, T)
    except (NotCoherent, NotDualizable) as exc:
        _emit([f"cannot build the ambient algebra: {exc.report.axiom} fails", _verdict(False)])
        return FAILED
    if args.ambient_out:
        _write_doc(docs.algebra_document(bundle.ambient), args.ambient_out)
    if bundle.report.is_solution:
        _write_doc(docs.tensor_document(bundle.tensor), args.out)
        return OK
    names = bundle.ambient.space.names
    lines = [f"tensor {bundle.tensor} is not a solution",
             f"  operator is an o-operator: {'yes' if bundle.operator.verified else 'no'}"]
    lines += _triple_lines("associative yang-baxter defect", bundle.report.aybe_defect, names)
    lines += _triple_lines("classical yang-baxter defect", bundle.report.cybe_defect, names)
    lines.append(_verdict(False))
    _emit(lines)
    return FAILED


def cmd_pipeline_corollary(args) -> int:
    rep, T = _solution_inputs(args)
    try:
        v = corollary_pipeline(rep.algebra, rep, T)
    except (NotCoherent, NotDualizable) as exc:
        _emit([f"cannot run the pipeline: {exc.report.axiom} fails", _verdict(False)])
        return FAILED
    yn = {True: "yes", False: "no"}
    _emit([f"operator {args.file} on representation {rep.name or args.rep}",
           f"  T is an o-operator: {yn[v.operator]}",
           f"  T^s is an o-operator for the parity-reversed representation: {yn[v.suspended_operator]}",
           f"  r_T solves the poisson yang-baxter equation: {yn[v.solution]}",
           f"  r_(T^s) solves the poisson yang-baxter equation: {yn[v.suspended_solution]}",
           f"verdicts agree: {yn[v.agree]}",
           _verdict(v.agree)])
    return OK if v.agree else FAILED


def cmd_search_operators(args) -> int:
    rep = _rep(args.rep, args.algebra)
    try:
        found = search_o_operators(rep, args.parity, args.grid, args.max_dim)
    except SearchTooLarge as exc:
        raise InputError(str(exc)) from None
    lines = [f"{'even' if args.parity == 0 else 'odd'} o-operators for {rep.name or args.rep} "
             f"with entries in {_vec(args.grid)}: {len(found)}"]
    for T in found:
        lines.append("  " + "; ".join(
            f"{rep.module.names[j]} -> {_vec(T.column(j))}" for j in range(rep.module.dim)))
    _emit(lines)
    return OK


def cmd_fixtures_family(args) -> int:
    try:
        A = family_1dim1(args.n, args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _write_doc(docs.algebra_document(A))
    return OK


def cmd_fixtures_operator(args) -> int:
    _write_doc(docs.linear_map_document(fixtures.OPERATORS[args.which]()))
    return OK


def cmd_fixtures_tensor(args) -> int:
    _write_doc(docs.tensor_document(fixtures.TENSORS[args.which]()))
    return OK


def cmd_fixtures_coregular(args) -> int:
    _write_doc(docs.representation_document(fixtures.example_coregular()))
    return OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superpybe", description="Exact checks for Poisson superalgebras, "
                "O-operators and the Poisson Yang-Baxter equation.")
    groups = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, func, help_text):
        q = sub.add_parser(name, help=help_text)
        q.set_defaults(func=func)
        return q

    def rep_opts(q, required=True):
        q.add_argument("--rep", required=required, help="representation document")
        q.add_argument("--algebra", help="algebra document (when the representation does not embed one)")

    verify = groups.add_parser("verify", help="check axioms").add_subparsers(
        dest="what", required=True, parser_class=_Parser)
    q = leaf(verify, "algebra", cmd_verify_algebra, "Poisson superalgebra axioms")
    q.add_argument("file")
    q.add_argument("--coherent", action="store_true", help="also require coherence")
    q = leaf(verify, "rep", cmd_verify_rep, "representation laws")
    q.add_argument("file")
    q.add_argument("--algebra")
    q = leaf(verify, "operator", cmd_verify_operator, "O-operator identities")
    q.add_argument("file")
    rep_opts(q)

    check = groups.add_parser("check", help="Yang-Baxter checks").add_subparsers(
        dest="what", required=True, parser_class=_Parser)
    q = leaf(check, "pybe", cmd_check_pybe, "is a tensor a solution")
    q.add_argument("file")
    q.add_argument("--algebra", required=True)
    q = leaf(check, "theorem-tr", cmd_check_theorem_tr,
             "compare the solution verdict with the co-regular O-operator verdict of T_r")
    q.add_argument("file", nargs="?", help="tensor document; omit for a random suite")
    q.add_argument("--algebra", required=True)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--count", type=int, default=1000)
    q.add_argument("--grid", type=_grid, default=_grid("-2,-1,0,1,2"),
                   help="comma-separated entry values, e.g. --grid=-2,-1,0,1,2")

    build = groups.add_parser("build", help="constructions").add_subparsers(
        dest="what", required=True, parser_class=_Parser)
    q = leaf(build, "semidirect", cmd_build_semidirect, "semi-direct product algebra")
    rep_opts(q)
    q = leaf(build, "regular", cmd_build_regular, "regular representation")
    q.add_argument("--algebra", required=True)
    q = leaf(build, "coregular", cmd_build_coregular, "co-regular representation")
    q.add_argument("--algebra", required=True)
    q = leaf(build, "parity-reversed", cmd_build_parity_reversed, "parity-reversed representation")
    rep_opts(q)
    q = leaf(build, "solution", cmd_build_solution, "Yang-Baxter solution from an O-operator")
    q.add_argument("file", help="operator document")
    rep_opts(q)
    q.add_argument("--out", help="where to write the tensor (default stdout)")
    q.add_argument("--ambient-out", help="where to write the ambient semi-direct product")

    search = groups.add_parser("search", help="bounded searches").add_subparsers(
        dest="what", required=True, parser_class=_Parser)
    q = leaf(search, "operators", cmd_search_operators, "grid search for O-operators")
    rep_opts(q)
    q.add_argument("--parity", type=int, choices=(0, 1), required=True)
    q.add_argument("--grid", type=_grid, default=_grid("-1,0,1"))
    q.add_argument("--max-dim", type=int, default=4)

    fx = groups.add_parser("fixtures", help="built-in example objects").add_subparsers(
        dest="what", required=True, parser_class=_Parser)
    q = leaf(fx, "family", cmd_fixtures_family, "a 1|1-dimensional family")
    q.add_argument("n", type=int)
    q.add_argument("--k", type=_scalar, default=Fraction(1))
    q = leaf(fx, "operator", cmd_fixtures_operator, "T0 or T1 on the co-regular representation")
    q.add_argument("which", choices=sorted(fixtures.OPERATORS))
    q = leaf(fx, "tensor", cmd_fixtures_tensor, "r-t0 or r-t1")
    q.add_argument("which", choices=sorted(fixtures.TENSORS))
    leaf(fx, "coregular", cmd_fixtures_coregular, "co-regular representation of family 2, k=1")

    pipe = groups.add_parser("pipeline", help="composite checks").add_subparsers(
        dest="what", required=True, parser_class=_Parser)
    q = leaf(pipe, "corollary", cmd_pipeline_corollary,
             "operator, suspended operator and both Yang-Baxter solutions")
    q.add_argument("file", help="operator document")
    rep_opts(q)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "count", 1) < 0:
            raise InputError("--count must be non-negative")
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else INPUT_ERROR
    except (InputError, SpaceMismatch, GradingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
