"""Command-line front end.

Subcommands: gen (emit graph6 for a named family), compute (exact values
or oracle values as JSON), construct (materialize a family, self-validated
before printing), verify (bound report for one graph), sweep (randomized
plus exhaustive corpus of bound reports).

Exit codes: 0 success / all bounds hold, 1 verification violation, 2 usage
error, 3 guard refusal, 4 I/O or parse error, 70 internal error (a
construction failed its own validator).  Diagnostics go to stderr; stdout
carries only data and is byte-identical across identical invocations.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .bounds import (CSV_COLUMNS, check_graph, check_nordhaus_gaddum,
                     report_csv_rows, report_dict, solve_all, violations)
from .constructions import (ConstructionError, family_balanced_bipartite,
                            family_complete, family_from_balanced_subgraphs,
                            family_kdelta_sharpness, family_near_order,
                            family_nontrivial)
from .domatic import d_k_exact, d_rk_exact, d_rk_oracle, validate_family
from .graphs import (MAX_VERTICES, FamilySpec, Graph, GuardError, ParseError,
                     encode_graph6, generate, parse_edge_list, parse_graph6)
from .roman import (gamma_k_exact, gamma_kr_exact, gamma_kr_oracle,
                    labeling_to_string)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_IO = 4
EXIT_INTERNAL = 70

ENV_MAX_N = "RKDOM_MAX_N"

_SWEEP_PROBS = (0.2, 0.35, 0.5, 0.65, 0.8)


class _UsageError(ValueError):
    pass


def _fail(message: str, code: int) -> int:
    print(f"rkdom: error: {message}", file=sys.stderr)
    return code


def _max_n(args) -> int | None:
    """Effective MAX_N knob: flag beats environment; hard ceiling 64."""
    value = getattr(args, "max_n", None)
    if value is None:
        raw = os.environ.get(ENV_MAX_N)
        if raw is not None:
            try:
                value = int(raw)
            except ValueError:
                raise _UsageError(f"{ENV_MAX_N} must be an integer, got {raw!r}")
    if value is None:
        return None
    if value < 1:
        raise _UsageError("max-n must be >= 1")
    return min(value, MAX_VERTICES)


def _read_graph(args) -> Graph:
    source = args.graph
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, "r", encoding="ascii") as fh:
            text = fh.read()
    limit = _max_n(args) or MAX_VERTICES
    if args.format == "edgelist":
        return parse_edge_list(text, max_n=limit)
    return parse_graph6(text, max_n=limit)


def _spec_from_args(args) -> FamilySpec:
    kind = args.family
    try:
        if kind in ("complete", "cycle", "empty"):
            if args.n is None:
                raise _UsageError(f"--family {kind} needs --n")
            return FamilySpec(kind, n=args.n)
        if kind == "complete-bipartite":
            if args.p is None or args.q is None:
                raise _UsageError("--family complete-bipartite needs --p and --q")
            return FamilySpec(kind, p=args.p, q=args.q)
        if kind == "random-gnp":
            if args.n is None or args.prob is None or args.seed is None:
                raise _UsageError("--family random-gnp needs --n, --prob and --seed")
            return FamilySpec(kind, n=args.n, prob=args.prob, seed=args.seed)
        if args.k is None:
            raise _UsageError("--family kdelta-sharpness needs --k")
        return FamilySpec(kind, k=args.k)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_gen(args) -> int:
    spec = _spec_from_args(args)
    g = generate(spec, max_n=_max_n(args) or MAX_VERTICES)
    print(encode_graph6(g))
    return EXIT_OK


_QUANTITIES = ("gamma-k", "gamma-kr", "d-k", "d-rk")


def _compute_one(g: Graph, k: int, quantity: str, oracle: bool,
                 max_n: int | None) -> dict:
    kw = {} if max_n is None else {"max_n": max_n}
    if oracle:
        if quantity == "gamma-kr":
            value = gamma_kr_oracle(g, k, **kw)
        elif quantity == "d-rk":
            value = d_rk_oracle(g, k, **kw)
        else:
            raise _UsageError(f"no oracle for quantity {quantity}")
        return {"quantity": quantity.replace("-", "_"), "method": "oracle",
                "value": value, "witness": None, "nodes_explored": None}
    if quantity == "gamma-k":
        res = gamma_k_exact(g, k, **kw)
        witness = "".join(str(b) for b in res.witness)
    elif quantity == "gamma-kr":
        res = gamma_kr_exact(g, k, **kw)
        witness = labeling_to_string(res.witness)
    elif quantity == "d-k":
        res = d_k_exact(g, k, **kw)
        witness = [list(block) for block in res.witness]
    else:
        res = d_rk_exact(g, k, **kw)
        witness = [labeling_to_string(f) for f in res.witness]
    return {"quantity": res.quantity, "method": "exact", "value": res.value,
            "witness": witness, "nodes_explored": res.nodes_explored}


def _cmd_compute(args) -> int:
    g = _read_graph(args)
    max_n = _max_n(args)
    wanted = _QUANTITIES if args.quantity == "all" else (args.quantity,)
    results = [_compute_one(g, args.k, q, args.oracle, max_n) for q in wanted]
    payload = {"schema": "1", "graph": {"graph6": encode_graph6(g), "n": g.n},
               "k": args.k, "results": results}
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def _parse_subgraphs(text: str) -> list[tuple[list[int], list[int]]]:
    """Parse "0,1:2,3;2,3:0,1" into [(X, Y), ...] pairs."""
    pairs = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        sides = part.split(":")
        if len(sides) != 2:
            raise _UsageError(f"subgraph {part!r} must be 'X:Y'")
        try:
            x = [int(t) for t in sides[0].split(",") if t.strip() != ""]
            y = [int(t) for t in sides[1].split(",") if t.strip() != ""]
        except ValueError:
            raise _UsageError(f"subgraph {part!r} has non-integer vertices") \
                from None
        pairs.append((x, y))
    if not pairs:
        raise _UsageError("no subgraphs given")
    return pairs


def _cmd_construct(args) -> int:
    k = args.k
    name = args.name
    if name == "complete":
        if args.n is None:
            raise _UsageError("construct complete needs --n")
        fam = family_complete(args.n, k)
        g = generate(FamilySpec("complete", n=args.n))
    elif name == "balanced-bipartite":
        if args.t is None:
            raise _UsageError("construct balanced-bipartite needs --t")
        g, fam = family_balanced_bipartite(args.t, k)
    elif name == "kdelta-sharpness":
        g, fam = family_kdelta_sharpness(k)
    elif name == "near-order":
        g = _read_graph(args)
        fam = family_near_order(g, k)
    elif name == "nontrivial":
        g = _read_graph(args)
        fam = family_nontrivial(g, k)
    else:
        g = _read_graph(args)
        if args.subgraphs is None:
            raise _UsageError("construct from-subgraphs needs --subgraphs")
        fam = family_from_balanced_subgraphs(g, k, _parse_subgraphs(args.subgraphs))

    problems = validate_family(g, k, fam)
    if problems:
        for p in problems:
            print(f"rkdom: internal: {p.kind}: {p.detail}", file=sys.stderr)
        return EXIT_INTERNAL
    print(encode_graph6(g))
    for f in fam:
        print(labeling_to_string(f))
    print(f"valid {len(fam)} functions")
    return EXIT_OK


def _verify_records(g: Graph, k: int, max_n: int | None, nordhaus: bool):
    vals = solve_all(g, k, max_n=max_n)
    records = check_graph(g, k, vals)
    if nordhaus:
        records = records + check_nordhaus_gaddum(g, k, max_n=max_n)
    return vals, records


def _cmd_verify(args) -> int:
    g = _read_graph(args)
    vals, records = _verify_records(g, args.k, _max_n(args),
                                    args.nordhaus_gaddum)
    if args.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(report_csv_rows(g, args.k, vals, records))
        sys.stdout.write(buf.getvalue())
    else:
        print(json.dumps(report_dict(g, args.k, vals, records), indent=2))
    return EXIT_VIOLATION if violations(records) else EXIT_OK


def _sweep_instances(args):
    """Deterministic corpus: exhaustive small graphs then seeded G(n,p)."""
    for n in range(1, args.exhaustive_upto + 1):
        npairs = n * (n - 1) // 2
        for mask in range(1 << npairs):
            edges = []
            t = 0
            for v in range(1, n):
                for u in range(v):
                    if mask >> t & 1:
                        edges.append((u, v))
                    t += 1
            g = Graph(n, edges, label=f"exhaustive(n={n},mask={mask})")
            for k in range(1, args.k_max + 1):
                yield g, k
    ns = list(range(max(2, args.exhaustive_upto + 1), args.n_max + 1))
    for j in range(args.count if ns else 0):
        n = ns[j % len(ns)]
        prob = _SWEEP_PROBS[j % len(_SWEEP_PROBS)]
        spec = FamilySpec("random-gnp", n=n, prob=prob, seed=args.seed + j)
        g = generate(spec)
        yield g, (j % args.k_max) + 1


def _cmd_sweep(args) -> int:
    max_n = _max_n(args)
    instances = records_count = applicable = bad = 0
    for g, k in _sweep_instances(args):
        vals, records = _verify_records(g, k, max_n, args.nordhaus_gaddum)
        instances += 1
        records_count += len(records)
        applicable += sum(1 for r in records if r.applicable)
        bad += len(violations(records))
        print(json.dumps(report_dict(g, k, vals, records),
                         separators=(",", ":")))
    summary = {"schema": "1", "summary": {"instances": instances,
                                          "records": records_count,
                                          "applicable": applicable,
                                          "violations": bad}}
    print(json.dumps(summary, separators=(",", ":")))
    return EXIT_VIOLATION if bad else EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rkdom",
        description="Exact Roman k-domination and Roman (k,k)-domatic "
                    "computations on small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a named family member as graph6")
    p_gen.add_argument("--family", required=True,
                       choices=("complete", "cycle", "empty",
                                "complete-bipartite", "random-gnp",
                                "kdelta-sharpness"))
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--p", type=int)
    p_gen.add_argument("--q", type=int)
    p_gen.add_argument("--prob", type=float)
    p_gen.add_argument("--seed", type=int)
    p_gen.add_argument("--k", type=int)
    p_gen.add_argument("--max-n", type=int, dest="max_n")
    p_gen.set_defaults(func=_cmd_gen)

    p_compute = sub.add_parser("compute", help="compute exact or oracle values")
    p_compute.add_argument("--graph", required=True,
                           help="path to a graph file, or - for stdin")
    p_compute.add_argument("--format", choices=("graph6", "edgelist"),
                           default="graph6")
    p_compute.add_argument("--k", type=int, required=True)
    p_compute.add_argument("--quantity", required=True,
                           choices=_QUANTITIES + ("all",))
    p_compute.add_argument("--oracle", action="store_true",
                           help="use the brute-force oracle instead")
    p_compute.add_argument("--max-n", type=int, dest="max_n")
    p_compute.set_defaults(func=_cmd_compute)

    p_construct = sub.add_parser("construct",
                                 help="materialize an explicit family")
    p_construct.add_argument("--name", required=True,
                             choices=("complete", "balanced-bipartite",
                                      "near-order", "nontrivial",
                                      "kdelta-sharpness", "from-subgraphs"))
    p_construct.add_argument("--k", type=int, required=True)
    p_construct.add_argument("--n", type=int)
    p_construct.add_argument("--t", type=int)
    p_construct.add_argument("--graph", help="input graph for graph-based "
                                             "constructions (- for stdin)")
    p_construct.add_argument("--format", choices=("graph6", "edgelist"),
                             default="graph6")
    p_construct.add_argument("--subgraphs",
                             help="X:Y pairs, e.g. '0,1:2,3;2,3:0,1'")
    p_construct.add_argument("--max-n", type=int, dest="max_n")
    p_construct.set_defaults(func=_cmd_construct)

    p_verify = sub.add_parser("verify", help="bound report for one graph")
    p_verify.add_argument("--graph", required=True)
    p_verify.add_argument("--format", choices=("graph6", "edgelist"),
                          default="graph6")
    p_verify.add_argument("--k", type=int, required=True)
    p_verify.add_argument("--nordhaus-gaddum", action="store_true",
                          dest="nordhaus_gaddum",
                          help="also solve the complement and check "
                               "complement-sum bounds")
    p_verify.add_argument("--output", choices=("json", "csv"), default="json")
    p_verify.add_argument("--max-n", type=int, dest="max_n")
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser("sweep", help="streamed bound reports over a corpus")
    p_sweep.add_argument("--n-max", type=int, required=True, dest="n_max")
    p_sweep.add_argument("--k-max", type=int, required=True, dest="k_max")
    p_sweep.add_argument("--count", type=int, required=True,
                         help="number of random instances")
    p_sweep.add_argument("--seed", type=int, required=True)
    p_sweep.add_argument("--exhaustive-upto", type=int, default=4,
                         dest="exhaustive_upto",
                         help="also run every graph with at most this many "
                              "vertices (default 4)")
    p_sweep.add_argument("--nordhaus-gaddum", action="store_true",
                         dest="nordhaus_gaddum")
    p_sweep.add_argument("--max-n", type=int, dest="max_n")
    p_sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except GuardError as exc:
        return _fail(str(exc), EXIT_GUARD)
    except ConstructionError as exc:
        return _fail(str(exc), EXIT_GUARD)
    except ParseError as exc:
        return _fail(str(exc), EXIT_IO)
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
