"""Command-line interface: ``crcodes <command> ...``.

Exit codes: 0 success, 1 usage error, 2 verification failure (including a
proof that no code exists), 3 budget exceeded.

Environment variables (flags win): CRCODES_BUDGET, CRCODES_SEED,
CRCODES_SAMPLES, CRCODES_HEAVY. ``--workers`` (reproduce) sets the size of
the process pool; everything else runs in one process.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time
from pathlib import Path

from . import constructions as cons
from .cr_engine import Code, IntersectionArray, QuotientMatrix, component_summary, induced_components, verify_cr
from .data import fixtures, load_matrix, resolve
from .enumeration import enumerate_graphs, projective_points
from .feasibility import enumerate_putative
from .gf_space import BudgetExceeded, CheckMatrix
from .graph_core import Graph, complement, hamming_graph, spectrum, srg_parameters, syndrome_graph, verify_covering
from .search import (
    BUDGET,
    DEFAULT_EXACT_BUDGET,
    DEFAULT_HEURISTIC_BUDGET,
    EXHAUSTED,
    SearchTarget,
    search_exact,
    search_heuristic,
    search_milp,
)

OK, USAGE, FAILED, OVER_BUDGET = 0, 1, 2, 3

#: Enumerations with more candidate subsets than this need --heavy.
HEAVY_SUBSETS = 10**8


class UsageError(Exception):
    pass


def _env_int(name: str, default: int | None) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(float(raw)) if "e" in raw.lower() else int(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not an integer") from None


def _heavy_env() -> bool:
    return os.environ.get("CRCODES_HEAVY", "").lower() in ("1", "true", "yes")


def _graph(args) -> Graph:
    if getattr(args, "hamming", None):
        n, q = args.hamming
        return hamming_graph(n, q)
    if not getattr(args, "matrix", None):
        raise UsageError("give --matrix FILE (or --hamming N Q)")
    g = syndrome_graph(_matrix(args.matrix))
    if getattr(args, "complement", False):
        g = complement(g)
    return g


def _matrix(name: str) -> CheckMatrix:
    try:
        return load_matrix(name)
    except FileNotFoundError as e:
        raise UsageError(str(e)) from None
    except ValueError as e:
        raise UsageError(f"{name}: {e}") from None


def _code(g: Graph, name: str) -> Code:
    try:
        text = resolve(name).read_text()
        return Code.from_text(g, text)
    except FileNotFoundError as e:
        raise UsageError(str(e)) from None
    except ValueError as e:
        raise UsageError(f"{name}: {e}") from None


def _target(g: Graph, args, **options) -> SearchTarget:
    if bool(args.array) == bool(args.quotient):
        raise UsageError("give exactly one of --array and --quotient")
    try:
        text = args.array or args.quotient
        target = IntersectionArray.parse(text) if args.array else QuotientMatrix.parse(text)
        return SearchTarget.for_graph(g, target, **options)
    except ValueError as e:
        raise UsageError(str(e)) from None


# --- commands ---------------------------------------------------------------------


def cmd_build(args) -> int:
    g = _graph(args)
    print(f"graph: {g.name}")
    print(f"vertices: {g.order}  degree: {g.degree}")
    if args.matrix and not args.complement:
        H = _matrix(args.matrix)
        print(f"check matrix: {H.k} x {H.n} over GF({H.q}), rank {H.rank}")
    print(f"connected: {'yes' if spectrum(g).multiplicity(g.degree) == 1 else 'no'}")
    srg = srg_parameters(g)
    if srg:
        print(f"strongly regular: {srg}")
    return OK


def cmd_spectrum(args) -> int:
    print(spectrum(_graph(args)))
    return OK


def cmd_srg(args) -> int:
    g = _graph(args)
    srg = srg_parameters(g)
    print(srg if srg else "not strongly regular")
    return OK if srg else FAILED


def cmd_covering(args) -> int:
    H = _matrix(args.matrix)
    samples = args.samples or _env_int("CRCODES_SAMPLES", 100_000)
    seed = args.seed if args.seed is not None else _env_int("CRCODES_SEED", 0)
    report = verify_covering(H, exhaustive=not args.sampled, samples=samples, seed=seed)
    print(report)
    return OK if report.ok else FAILED


def cmd_verify(args) -> int:
    g = _graph(args)
    code = _code(g, args.code)
    res = verify_cr(g, code)
    if res is None:
        print(f"not completely regular ({len(code)} words, covering radius {max(0, _rho(g, code))})")
        return FAILED
    print(res.array)
    print(res.quotient.pretty())
    print(f"sizes: {res.partition.sizes}")
    if args.components:
        print(f"induced components: {component_summary(induced_components(g, code))}")
    return OK


def _rho(g: Graph, code: Code) -> int:
    from .cr_engine import distance_partition

    return distance_partition(g, code).rho


def cmd_search(args) -> int:
    g = _graph(args)
    target = _target(g, args, require_independent=args.independent)
    seed = args.seed if args.seed is not None else _env_int("CRCODES_SEED", 0)
    if args.heuristic:
        budget = args.budget or _env_int("CRCODES_BUDGET", DEFAULT_HEURISTIC_BUDGET)
        out = search_heuristic(g, target, seed=seed, budget=budget)
    elif args.milp:
        out = search_milp(g, target, time_limit=args.time_limit, node_limit=args.budget or _env_int("CRCODES_BUDGET", None))
    else:
        budget = args.budget or _env_int("CRCODES_BUDGET", DEFAULT_EXACT_BUDGET)
        out = search_exact(g, target, budget=budget, time_limit=args.time_limit)
    print(f"# {out.status}: {out.nodes} {'moves' if args.heuristic else 'nodes'}", file=sys.stderr)
    if out.found:
        res = verify_cr(g, out.code)
        print(f"# {res.array if res and target.is_cr else out.partition.quotient}")
        sys.stdout.write(out.code.to_text())
        if args.out:
            Path(args.out).write_text(out.code.to_text())
        return OK
    if out.status == EXHAUSTED:
        print("no such code exists (search exhausted)")
        return FAILED
    print("budget exceeded")
    return OVER_BUDGET


def cmd_feasible(args) -> int:
    if args.matrix:
        g = _graph(args)
        sp = spectrum(g)
        degree, v, eigs = g.degree, g.order, sp.eigenvalues
        q = g.q
    else:
        if args.degree is None or args.vertices is None or not args.eigenvalues:
            raise UsageError("give --matrix, or all of --degree, --vertices and --eigenvalues")
        degree, v = args.degree, args.vertices
        eigs = [int(x) for x in args.eigenvalues.replace(" ", "").split(",")]
        q = args.q
    drg = IntersectionArray.parse(args.drg) if args.drg else None
    rows = enumerate_putative(
        eigs,
        degree,
        v,
        args.rho_max,
        strict_monotone=args.strict_monotone,
        q=q,
        eigenvalue=args.eigenvalue,
        drg=drg,
        nonnegative=args.nonnegative,
    )
    for r in rows:
        print(r if args.verbose else r.array)
    print(f"# {len(rows)} arrays", file=sys.stderr)
    return OK


def _base_partition(args) -> cons.RulePartition:
    if args.rule:
        try:
            return cons.parse_rule(resolve(args.rule).read_text())
        except (FileNotFoundError, ValueError) as e:
            raise UsageError(str(e)) from None
    if not args.code:
        raise UsageError("give --code (with --matrix for a syndrome graph) or --rule")
    if args.matrix:
        H = _matrix(args.matrix)
        return cons.lift(H, _code(syndrome_graph(H), args.code)).partition
    text = resolve(args.code).read_text()
    header = _header(text)
    if "q" not in header or "k" not in header:
        raise UsageError("a code of H(n,q) needs a '# q=.. k=..' header (k = n)")
    g = hamming_graph(header["k"], header["q"])
    code = _code(g, args.code)
    labels, quotient = cons.partition_of_code(g, code)
    return cons.Explicit(g.q, g.dim, labels, quotient)


def _header(text: str) -> dict[str, int]:
    out = {}
    for line in text.splitlines():
        if line.startswith("#"):
            for tok in line[1:].split():
                key, eq, val = tok.partition("=")
                if eq and val.isdigit():
                    out[key] = int(val)
    return out


def cmd_construct(args) -> int:
    try:
        base = _base_partition(args)
        if args.op == "lift":
            result = base
        elif args.op == "extend":
            result = cons.extend_t(base, args.t)
        elif args.op == "inflate":
            result = cons.inflate_s(base, args.s)
        else:
            result = cons.split(base, args.i)
    except ValueError as e:
        raise UsageError(str(e)) from None
    text = result.to_text()
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    if result.quotient.is_cr_shape():
        print(f"# intersection array of cell 0: {result.quotient.intersection_array()}; |cell 0| = {result.sizes[0]}")
    if args.verify:
        samples = args.samples or _env_int("CRCODES_SAMPLES", cons.DEFAULT_SAMPLES)
        seed = args.seed if args.seed is not None else _env_int("CRCODES_SEED", 0)
        report = cons.verify_rule(result, samples=samples, seed=seed)
        print(f"# {report}")
        return OK if report.ok else FAILED
    return OK


def cmd_classify(args) -> int:
    points = len(projective_points(args.q, args.k))
    if args.n > points:
        raise UsageError(f"PG({args.k - 1},{args.q}) has only {points} points")
    if math.comb(points, args.n) > HEAVY_SUBSETS and not (args.heavy or _heavy_env()):
        print(
            f"enumerating {args.n}-sets of {points} points is a long run; pass --heavy (or CRCODES_HEAVY=1)",
            file=sys.stderr,
        )
        return USAGE
    t0 = time.perf_counter()
    classes = enumerate_graphs(args.q, args.k, args.n, connected_only=args.connected)
    shown = 0
    target = IntersectionArray.parse(args.array) if args.array else None
    hits = 0
    for i, s in enumerate(classes):
        H = s.to_matrix()
        g = syndrome_graph(H)
        srg = srg_parameters(g)
        if args.srg and not srg:
            continue
        note = f" {srg}" if srg else ""
        if target is not None:
            out = search_exact(g, SearchTarget.for_graph(g, target))
            if out.status == BUDGET:
                note += f" {target}: budget exceeded"
            elif out.found:
                note += f" contains a {target}-CR code"
                hits += 1
            else:
                continue
        print(f"# class {i + 1}: spectrum {spectrum(g)}{note}")
        sys.stdout.write(H.to_text())
        shown += 1
    mode = "connected " if args.connected else ""
    print(f"# {len(classes)} {mode}classes of {args.n} points in PG({args.k - 1},{args.q})", file=sys.stderr)
    if args.srg:
        print(f"# {shown} strongly regular", file=sys.stderr)
    if target is not None:
        print(f"# {hits} contain a {target}-CR code", file=sys.stderr)
    print(f"# {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    return OK


def cmd_fixtures(args) -> int:
    for f in fixtures().values():
        print(f"{f.name:22s} {f.description}")
    return OK


def cmd_reproduce(args) -> int:
    from .reproduce import reproduce_table

    seed = args.seed if args.seed is not None else _env_int("CRCODES_SEED", 0)
    samples = args.samples or _env_int("CRCODES_SAMPLES", None)
    options = {"samples": samples} if samples else {}
    ok = reproduce_table(seed=seed, quick=args.quick, out=sys.stdout, workers=args.workers, **options)
    return OK if ok else FAILED


# --- parser --------------------------------------------------------------------------


def _graph_args(p, code=False):
    p.add_argument("--matrix", help="check matrix file or bundled fixture name")
    p.add_argument("--hamming", nargs=2, type=int, metavar=("N", "Q"), help="use H(N,Q) instead")
    p.add_argument("--complement", action="store_true", help="use the complement of G(H)")
    if code:
        p.add_argument("--code", required=True, help="code file: one word per line")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crcodes", description="Completely regular codes in Cayley graphs over GF(2) and GF(3).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="summary of G(H)")
    _graph_args(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("spectrum", help="eigenvalues with multiplicities")
    _graph_args(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("srg", help="strongly regular parameters")
    _graph_args(p)
    p.set_defaults(func=cmd_srg)

    p = sub.add_parser("covering", help="check that H(n,q) covers G(H)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--sampled", action="store_true", help="random words instead of all of them")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_covering)

    p = sub.add_parser("verify", help="intersection array of a code")
    _graph_args(p, code=True)
    p.add_argument("--components", action="store_true", help="also describe the induced subgraph")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="find a CR code / equitable partition")
    _graph_args(p)
    p.add_argument("--array", help='intersection array, e.g. "{10;8}"')
    p.add_argument("--quotient", help='quotient matrix, e.g. "((4,10),(8,6))"')
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--heuristic", action="store_true")
    mode.add_argument("--milp", action="store_true", help="integer program (HiGHS)")
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int, help="nodes (exact, milp) or moves (heuristic)")
    p.add_argument("--time-limit", type=float, help="seconds (exact, milp)")
    p.add_argument("--independent", action="store_true")
    p.add_argument("--out", help="also write the code to this file")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("feasible", help="putative intersection arrays")
    _graph_args(p)
    p.add_argument("--degree", type=int)
    p.add_argument("--vertices", type=int)
    p.add_argument("--eigenvalues", help="comma separated graph eigenvalues")
    p.add_argument("--q", type=int, help="field order, for the tau column")
    p.add_argument("--rho-max", type=int, default=1)
    p.add_argument("--eigenvalue", type=int, help="keep arrays whose quotient has this eigenvalue")
    p.add_argument("--drg", help="intersection array of a distance-regular ambient graph (extra filter)")
    p.add_argument("--nonnegative", action="store_true", help="with --drg, also require nonnegative entries")
    p.add_argument("--strict-monotone", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("construct", help="recursive constructions")
    p.add_argument("--op", required=True, choices=["extend", "inflate", "split", "lift"])
    p.add_argument("--matrix", help="with --code: lift the code of G(H) first")
    p.add_argument("--code", help="code file (of G(H), or of H(n,q) with a '# q= k=' header)")
    p.add_argument("--rule", help="rule file written by an earlier construct")
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("classify", help="nonisomorphic Cayley graphs G(H)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--srg", action="store_true", help="only strongly regular graphs")
    p.add_argument("--array", help="only graphs containing a CR code with this array")
    p.add_argument("--heavy", action="store_true", help="allow long enumerations")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fixtures", help="list bundled matrices and codes")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("reproduce", help="recompute the table of new CR-code parameters")
    p.add_argument("--seed", type=int)
    p.add_argument("--quick", action="store_true", help="skip the slow rows")
    p.add_argument("--samples", type=int, help="sampled words per construction check")
    p.add_argument("--workers", type=int, default=1, help="rows computed in parallel processes")
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"crcodes: error: {e}", file=sys.stderr)
        return USAGE
    except BudgetExceeded as e:
        print(f"crcodes: {e}", file=sys.stderr)
        return OVER_BUDGET
    except MemoryError as e:
        print(f"crcodes: {e}", file=sys.stderr)
        return OVER_BUDGET


if __name__ == "__main__":
    sys.exit(main())
