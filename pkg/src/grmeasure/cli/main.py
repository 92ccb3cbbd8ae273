"""``grmeasure`` command line.

Exit codes:
    0  success
    1  a check failed
    2  usage error
    3  document does not parse / validate
    4  budget or enumeration cap exceeded
    5  invalid parameter
    6  registry length bound insufficient for certification
    7  randomized search undecided
    8  other precondition failure (invalid submodule, simple module, ...)
"""

from __future__ import annotations

import argparse
import json
import sys

from .. import _accel
from ..config import DEFAULT_BUDGET, DEFAULT_CAP, DEFAULT_SEED
from ..errors import (
    BudgetExceededError,
    CapExceededError,
    GRError,
    InsufficientBoundError,
    InvalidParameterError,
    ParseError,
    UndecidedError,
)
from ..families import TubeHandle, kronecker_quiver, pruefer_measure, subspace_quiver
from ..families.kronecker import KRONECKER2
from ..grcore import (
    all_gr_filtrations,
    format_measure,
    gr_filtration,
    gr_measure,
    gr_submodules,
    is_piling,
    register_indecomposables,
    takeoff_prefix,
)
from ..grcore.engine import class_measure
from ..grcore.measure import format_rational
from ..quiverrep import Quiver, is_brick, is_iso
from ..sublattice import Subrep, sub_as_rep
from . import docio
from .checks import CHECKS, kronecker_registry, run_checks

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4
EXIT_PARAMETER = 5
EXIT_BOUND = 6
EXIT_UNDECIDED = 7
EXIT_PRECONDITION = 8


def _exit_code(exc: GRError) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, (BudgetExceededError, CapExceededError)):
        return EXIT_BUDGET
    if isinstance(exc, InvalidParameterError):
        return EXIT_PARAMETER
    if isinstance(exc, InsufficientBoundError):
        return EXIT_BOUND
    if isinstance(exc, UndecidedError):
        return EXIT_UNDECIDED
    return EXIT_PRECONDITION


def _header(Q: Quiver, p: int) -> str:
    return f"# GF({p}); dimension vectors listed in vertex order {','.join(Q.report_order)}"


def _dims(dims: dict, Q: Quiver) -> str:
    return "(" + ",".join(str(dims[v]) for v in Q.report_order) + ")"


def _show_subrep(U: Subrep) -> str:
    Q = U.parent.quiver
    bases = "; ".join(f"{v}: {U.parts[v].basis.tolist()}" for v in Q.vertices)
    return f"dims {_dims(U.dims, Q)} length {U.length} | {bases}"


def _quiver_from_spec(spec: str) -> Quiver:
    s = spec.strip().lower()
    if s in ("kronecker", "kronecker2"):
        return KRONECKER2
    if s.startswith("kronecker:"):
        return kronecker_quiver(int(s.split(":", 1)[1]))
    if s.startswith("subspace:"):
        return subspace_quiver(int(s.split(":", 1)[1]))
    try:
        with open(spec, encoding="utf-8") as fh:
            doc = json.load(fh)
        q = doc["quiver"] if "quiver" in doc else doc
        return Quiver(tuple(q["vertices"]), tuple((a["name"], a["from"], a["to"]) for a in q["arrows"]))
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"quiver spec {spec!r}: use kronecker2, kronecker:N, subspace:N or a JSON file") from exc


def cmd_measure(args) -> int:
    M = docio.load(args.file)
    print(_header(M.quiver, M.p))
    print(format_measure(gr_measure(M, budget=args.budget, cap=args.cap)))
    return EXIT_OK


def cmd_submodules(args) -> int:
    M = docio.load(args.file)
    print(_header(M.quiver, M.p))
    subs = gr_submodules(M, budget=args.budget, cap=args.cap)
    print(f"{len(subs)} Gabriel-Roiter submodule(s); μ(M) = {format_measure(gr_measure(M, budget=args.budget, cap=args.cap))}")
    for U in subs:
        print("  " + _show_subrep(U))
    return EXIT_OK


def cmd_filtration(args) -> int:
    M = docio.load(args.file)
    print(_header(M.quiver, M.p))
    chains = list(all_gr_filtrations(M, budget=args.budget, cap=args.cap)) if args.all else [gr_filtration(M, budget=args.budget, cap=args.cap)]
    print(f"{len(chains)} filtration(s)")
    for n, F in enumerate(chains, start=1):
        print(f"filtration {n}: lengths {list(F.lengths)}")
        for U in F.chain:
            print("  " + _show_subrep(U))
    return EXIT_OK


def cmd_piling(args) -> int:
    M = docio.load(args.file)
    raw = args.sub
    try:
        try:
            with open(raw, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError:
            doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"submodule spec is not JSON: {exc}") from exc
    U = docio.subrep_from_dict(M, doc)
    mu_u = gr_measure(sub_as_rep(U)[0], budget=args.budget, cap=args.cap)
    mu_y = gr_measure(M, budget=args.budget, cap=args.cap)
    verdict = is_piling(U, budget=args.budget, cap=args.cap)
    print(_header(M.quiver, M.p))
    print(f"μ(U) = {format_measure(mu_u)}; μ(Y) = {format_measure(mu_y)}")
    print("piling" if verdict else "not piling")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    Q = _quiver_from_spec(args.quiver)
    if args.mode == "family" and Q == KRONECKER2:
        reg = kronecker_registry(args.p, args.max_length)
    else:
        reg = register_indecomposables(Q, args.p, args.max_length, mode=args.mode, budget=args.budget, cap=args.cap)
    rows = []
    for j, e in enumerate(reg):
        mu = class_measure(reg, j)
        rows.append((mu, e))
    rows.sort(key=lambda r: (r[0], r[1].length, r[1].label))
    print(_header(Q, args.p))
    print(f"{len(reg)} isomorphism classes of length <= {args.max_length}")
    print("label\tdims\tlength\tbrick\tmeasure")
    for mu, e in rows:
        brick = "yes" if is_brick(e.rep, cap=args.cap) else "no"
        print(f"{e.label}\t{_dims(e.rep.dims, Q)}\t{e.length}\t{brick}\t{format_measure(mu)}")
    return EXIT_OK


def cmd_takeoff(args) -> int:
    Q = _quiver_from_spec(args.quiver)
    if Q == KRONECKER2 and args.mode == "family":
        reg = kronecker_registry(args.p, args.length_bound)
    else:
        reg = register_indecomposables(Q, args.p, args.length_bound, mode=args.mode, budget=args.budget, cap=args.cap)
    terms = takeoff_prefix(reg, args.count, bound=args.bound)
    print(_header(Q, args.p))
    print(f"certified with registry complete to length {reg.complete_up_to} ({args.bound} successor bound)")
    for i, T in enumerate(terms, start=1):
        dims = ", ".join(f"{reg[j].label} {_dims(reg[j].rep.dims, Q)}" for j in T.classes)
        print(f"I_{i} = {format_measure(T.measure)}: {dims}")
    return EXIT_OK


def cmd_tube(args) -> int:
    h = TubeHandle.of(args.p, args.parameter)
    M = h.module(args.t)
    reg = kronecker_registry(args.p, max(M.length - 1, 1))
    print(_header(KRONECKER2, args.p))
    print(f"{h.label(args.t)}: dims {_dims(M.dims, KRONECKER2)}, boundary length {h.boundary_length}")
    print(docio.dumps(M), end="")
    print(f"μ = {format_measure(gr_measure(M, reg))}")
    if M.length > 1:
        subs = gr_submodules(M, reg)
        print(f"{len(subs)} Gabriel-Roiter submodule(s)")
        prev = h.module(args.t - 1) if args.t > 1 else None
        for U in subs:
            if prev is None:
                verdict = "M[0] = 0"
            else:
                verdict = f"≅ {h.label(args.t - 1)}" if is_iso(sub_as_rep(U)[0], prev) is not None else f"≇ {h.label(args.t - 1)}"
            print(f"  {_show_subrep(U)} | {verdict}")
    return EXIT_OK


def cmd_pruefer(args) -> int:
    h = TubeHandle.of(args.p, args.parameter)
    M1 = h.module(1)
    mu1 = gr_measure(M1, kronecker_registry(args.p, max(M1.length - 1, 1)))
    val = pruefer_measure(mu1, h.boundary_length)
    print(f"# {h.label(1)} over GF({args.p}): μ = {mu1}, boundary length {h.boundary_length}")
    print(format_rational(val))
    return EXIT_OK


def cmd_check(args) -> int:
    names = list(CHECKS) if args.suite == "all" else [args.suite]
    results = run_checks(names, seed=args.seed, budget=args.budget)
    if args.json:
        print(json.dumps({"seed": args.seed, "budget": args.budget, "results": [r.as_dict() for r in results]}, indent=2))
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grmeasure", description="Gabriel-Roiter measures of quiver representations over GF(p).")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration budget (env GRMEASURE_BUDGET)")
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP, help="exhaustive search cap (env GRMEASURE_CAP)")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("measure", help="print μ(M) as a set and as an exact rational")
    s.add_argument("file")
    s.set_defaults(func=cmd_measure)

    s = sub.add_parser("submodules", help="list the Gabriel-Roiter submodules")
    s.add_argument("file")
    s.set_defaults(func=cmd_submodules)

    s = sub.add_parser("filtration", help="print a Gabriel-Roiter filtration")
    s.add_argument("file")
    s.add_argument("--all", action="store_true", help="print every filtration")
    s.set_defaults(func=cmd_filtration)

    s = sub.add_parser("piling", help="prefix test for a submodule")
    s.add_argument("file")
    s.add_argument("sub", help='JSON object {"vertex": [[row], ...]} or a path to one')
    s.set_defaults(func=cmd_piling)

    s = sub.add_parser("enumerate", help="table of indecomposable classes")
    s.add_argument("quiver", help="kronecker2 | kronecker:N | subspace:N | JSON file")
    s.add_argument("p", type=int)
    s.add_argument("max_length", type=int)
    s.add_argument("--mode", choices=("exhaustive", "family"), default="exhaustive")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("takeoff", help="certified smallest measures")
    s.add_argument("quiver")
    s.add_argument("p", type=int)
    s.add_argument("count", type=int)
    s.add_argument("--length-bound", type=int, default=10, help="registry completeness length")
    s.add_argument("--bound", choices=("ar", "pq"), default="ar", help="successor bound used for certification")
    s.add_argument("--mode", choices=("exhaustive", "family"), default="family")
    s.set_defaults(func=cmd_takeoff)

    s = sub.add_parser("tube", help="M[t] in a homogeneous tube of the 2-Kronecker quiver")
    s.add_argument("p", type=int)
    s.add_argument("parameter", help='monic irreducible polynomial in x, e.g. "x^2+x+1", or inf')
    s.add_argument("t", type=int)
    s.set_defaults(func=cmd_tube)

    s = sub.add_parser("pruefer", help="exact measure of the Prüfer module of a tube")
    s.add_argument("p", type=int)
    s.add_argument("parameter")
    s.set_defaults(func=cmd_pruefer)

    s = sub.add_parser("check", help="run the verification battery")
    s.add_argument("suite", nargs="?", default="all", choices=["all", *CHECKS])
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="same as the global --budget")
    s.add_argument("--json", action="store_true", help="machine-readable report")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("backend", help="print the kernel backend in use")
    s.set_defaults(func=lambda args: print(_accel.backend()) or EXIT_OK)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except GRError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, InsufficientBoundError) and exc.required is not None:
            print(f"required length bound: {exc.required}", file=sys.stderr)
        return _exit_code(exc)
    except ValueError as exc:  # e.g. malformed quiver spec integers
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
