"""Command line: ``berge gen | cover | verify | oracle``.

Exit codes: 0 success, 1 verify found the cover invalid, 2 precondition or
unsupported input, 3 parse error, 4 an internal assumption failed.

BERGE_SEED is read by nothing; every command is deterministic.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import generators
from .berge import cover, cover_near_hamiltonian, cover_two_factor, parse_cover
from .berge import check_hypotheses
from .errors import (AssumptionViolated, BadParams, BergeError, NoHamiltonianCircuit, ParseError,
                     PreconditionViolated, Unsupported)
from .graphcore import emit_edgelist, parse_edgelist, parse_graph6
from .matching import enumerate_pms
from .oracle import (find_two_factor_two_circuits, hamiltonian_circuit, is_hypohamiltonian,
                     min_cover_order, verify_cover)

EXIT_OK, EXIT_INVALID, EXIT_PRECONDITION, EXIT_PARSE, EXIT_ASSUMPTION = 0, 1, 2, 3, 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_graph(path: str, graph6: bool = False):
    text = _read(path)
    if graph6:
        return parse_graph6(text)
    return parse_edgelist(text)


def _run_cover(path, graph6, route, vertex):
    g = load_graph(path, graph6)
    if route == "near-hamiltonian":
        check_hypotheses(g)
        cv = cover_near_hamiltonian(g, vertex)
    elif route == "two-factor":
        check_hypotheses(g)
        pair = find_two_factor_two_circuits(g)
        if pair is None:
            raise Unsupported("no 2-factor with two circuits")
        cv = cover_two_factor(g, *pair)
    else:
        cv = cover(g)
    return cv.to_text(), verify_cover(g, cv).valid


def _run_oracle(path, graph6, what, cap):
    g = load_graph(path, graph6)
    if what == "min-order":
        k = min_cover_order(g, cap)
        return f">{cap}\n" if k is None else f"{k}\n"
    if what == "pms":
        pms = sorted(sorted(m) for m in enumerate_pms(g))
        return "".join([f"{len(pms)}\n"] + [" ".join(map(str, m)) + "\n" for m in pms])
    if what == "hamiltonian":
        c = hamiltonian_circuit(g)
        if c is None:
            return "false\n"
        return "true\n" + " ".join(map(str, c.vertices)) + "\n"
    if what == "hypohamiltonian":
        return "true\n" if is_hypohamiltonian(g) else "false\n"
    pair = find_two_factor_two_circuits(g)
    if pair is None:
        return "none\n"
    return "".join(" ".join(map(str, c.vertices)) + "\n" for c in pair)


def _guard(fn, *args):
    """Run one job and turn library errors into (exit code, stdout, stderr)."""
    try:
        out = fn(*args)
    except ParseError as exc:
        return EXIT_PARSE, "", f"parse error: {exc}\n"
    except OSError as exc:
        return EXIT_PARSE, "", f"cannot read input: {exc}\n"
    except AssumptionViolated as exc:
        return EXIT_ASSUMPTION, "", f"internal assumption failed: {exc}\n"
    except (PreconditionViolated, Unsupported, NoHamiltonianCircuit, BergeError) as exc:
        return EXIT_PRECONDITION, "", f"error: {exc}\n"
    if isinstance(out, tuple):
        text, ok = out
        return (EXIT_OK if ok else EXIT_ASSUMPTION), text, ""
    return EXIT_OK, out, ""


def _batch(fn, jobs, workers):
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_guard, [fn] * len(jobs), *zip(*jobs)))
    else:
        results = [_guard(fn, *j) for j in jobs]
    code = EXIT_OK
    many = len(jobs) > 1
    for job, (rc, out, err) in zip(jobs, results):
        if many:
            sys.stdout.write(f"# {job[0]}\n")
        sys.stdout.write(out)
        sys.stderr.write(err)
        code = max(code, rc)
    return code


def cmd_gen(args) -> int:
    params = []
    for p in args.params:
        try:
            params.append(int(p))
        except ValueError:
            print(f"error: parameter {p!r} is not an integer", file=sys.stderr)
            return EXIT_PRECONDITION
    try:
        g = generators.gen(args.family, *params)
    except BadParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(emit_edgelist(g))
    return EXIT_OK


def cmd_cover(args) -> int:
    route = "auto"
    if args.near_hamiltonian is not None:
        route = "near-hamiltonian"
    elif args.two_factor:
        route = "two-factor"
    jobs = [(p, args.graph6, route, args.near_hamiltonian) for p in args.inputs]
    return _batch(_run_cover, jobs, args.jobs)


def cmd_verify(args) -> int:
    try:
        g = load_graph(args.graph, args.graph6)
        ms = parse_cover(_read(args.cover))
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = verify_cover(g, ms)
    sys.stdout.write(report.to_text())
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_oracle(args) -> int:
    jobs = [(p, args.graph6, args.what, args.cap) for p in args.inputs]
    return _batch(_run_oracle, jobs, args.jobs)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="berge", description="Perfect matching covers of cubic graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a named cubic graph as an edge list")
    p.add_argument("family", choices=sorted(generators.FAMILIES))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("cover", help="construct a cover of order at most 5")
    route = p.add_mutually_exclusive_group()
    route.add_argument("--auto", action="store_true", help="pick a route automatically (default)")
    route.add_argument("--near-hamiltonian", type=int, metavar="V",
                       help="use the circuit of G - V")
    route.add_argument("--two-factor", action="store_true",
                       help="use a 2-factor with exactly two circuits")
    p.add_argument("--graph6", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="check that a cover is made of perfect matchings covering E")
    p.add_argument("--graph6", action="store_true")
    p.add_argument("graph")
    p.add_argument("cover")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive checks for small graphs")
    p.add_argument("what", choices=["min-order", "pms", "hamiltonian", "hypohamiltonian", "two-factor"])
    p.add_argument("--cap", type=int, default=6, help="largest order tried by min-order")
    p.add_argument("--graph6", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
