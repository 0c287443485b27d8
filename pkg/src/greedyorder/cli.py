"""Command-line entry point.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a size budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path as FilePath

from greedyorder import experiments as ex
from greedyorder.algorithm1 import VARIANTS, run_algorithm1
from greedyorder.errors import BudgetError, SamplingError
from greedyorder.graphs import (
    Graph,
    gen_complete,
    gen_connected_erdos_renyi,
    gen_directed_cycle,
    gen_dn,
    gen_erdos_renyi,
    gen_line,
    gen_star,
)
from greedyorder.ordering import (
    Ordering,
    best_ordering_exact,
    best_ordering_spanning_walk,
    comm_time,
    dn_best_ordering,
    random_ordering,
    worst_directed_cycle_ordering,
    worst_line_ordering,
    worst_ordering_exact,
)
from greedyorder.submodular import JointAction, SubmodularProblem, brute_force_opt, evaluate_w, greedy_execute

EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3

GENERATORS = {
    "line": gen_line,
    "star": gen_star,
    "complete": gen_complete,
    "dcycle": gen_directed_cycle,
    "dn": gen_dn,
}
ORDER_METHODS = ("best", "worst", "walk", "alg1", "random", "line-worst", "dcycle-worst", "dn-best")


def _emit(text: str, out: str | None) -> None:
    if out:
        FilePath(out).write_text(text)
    else:
        sys.stdout.write(text)


def _info(msg: str, to_stderr: bool) -> None:
    print(msg, file=sys.stderr if to_stderr else sys.stdout)


def _load_graph(path: str) -> Graph:
    return Graph.from_edgelist(FilePath(path).read_text())


def _require_construction(g: Graph, expected: Graph, name: str) -> None:
    if g != expected:
        raise ValueError(f"method {name} only applies to the generated {name.split('-')[0]} graph on {g.n} vertices")


def cmd_gen(args) -> int:
    if args.kind == "er":
        if args.p is None:
            raise ValueError("er graphs need --p")
        if args.connected:
            g = gen_connected_erdos_renyi(args.n, args.p, args.rng)
        else:
            g = gen_erdos_renyi(args.n, args.p, args.rng)
    else:
        g = GENERATORS[args.kind](args.n)
    _emit(g.to_edgelist(), args.out)
    _info(f"n={g.n} edges={len(g.edges)}", to_stderr=not args.out)
    return 0


def _order(g: Graph, args):
    """Ordering for ``args.method`` plus the Algorithm 1 trace when relevant."""
    m = args.method
    if m == "best":
        return best_ordering_exact(g).ordering, None
    if m == "worst":
        return worst_ordering_exact(g).ordering, None
    if m == "walk":
        return best_ordering_spanning_walk(g).ordering, None
    if m == "random":
        return random_ordering(g.n, args.rng), None
    if m == "line-worst":
        _require_construction(g, gen_line(g.n), m)
        return worst_line_ordering(g.n), None
    if m == "dcycle-worst":
        _require_construction(g, gen_directed_cycle(g.n), m)
        return worst_directed_cycle_ordering(g.n), None
    if m == "dn-best":
        _require_construction(g, gen_dn(g.n), m)
        return dn_best_ordering(g.n), None
    trace = run_algorithm1(g, args.seed_vertex, variant=args.variant)
    return trace.ordering, trace


def cmd_order(args) -> int:
    g = _load_graph(args.graph)
    pi, trace = _order(g, args)
    tb = comm_time(g, pi)
    _emit(pi.to_line() + "\n", args.out)
    to_err = not args.out
    _info(f"total {tb.total}", to_err)
    _info(tb.to_csv_row(), to_err)
    if trace is not None:
        _info(f"t {trace.t}", to_err)
    return 0


def cmd_time(args) -> int:
    g = _load_graph(args.graph)
    pi = Ordering.from_line(FilePath(args.ordering).read_text())
    tb = comm_time(g, pi)
    print(f"total {tb.total}")
    print(tb.to_csv_row())
    return 0


def cmd_run_greedy(args) -> int:
    g = _load_graph(args.graph)
    problem = SubmodularProblem.from_json(FilePath(args.problem).read_text())
    if problem.n_agents != g.n:
        raise ValueError(f"problem has {problem.n_agents} agents but graph has {g.n} vertices")
    if args.ordering:
        pi = Ordering.from_line(FilePath(args.ordering).read_text())
        joint, value = greedy_execute(problem, pi)
    elif args.method == "alg1":
        trace = run_algorithm1(g, args.seed_vertex, problem=problem, variant=args.variant)
        pi = trace.ordering
        joint = JointAction(tuple(trace.greedy_actions[pi.labels[v] - 1] for v in range(g.n)))
        value = evaluate_w(problem, joint)
    else:
        pi, _ = _order(g, args)
        joint, value = greedy_execute(problem, pi)
    report = {"ordering": list(pi.labels), "greedy_value": value, "greedy_actions": [sorted(a) for a in joint.choices]}
    print(f"greedy {value:.12g}")
    try:
        _, opt = brute_force_opt(problem)
    except BudgetError:
        print("optimum skipped (beyond brute-force budget)")
    else:
        degenerate = opt <= 1e-12
        ratio = 1.0 if degenerate else value / opt
        report.update(optimum=opt, ratio=ratio, zero_optimum_warning=degenerate)
        print(f"optimum {opt:.12g}")
        print(f"ratio {ratio:.12g}" + (" (0/0 reported as 1.0)" if degenerate else ""))
    if args.out:
        FilePath(args.out).write_text(json.dumps(report, indent=2))
    return 0


def cmd_experiment(args) -> int:
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    cfg = ex.ExperimentConfig(
        n=args.n, p=args.p, samples=args.samples, methods=methods, rng_seed=args.rng, algorithm1_variant=args.variant
    )
    dist = ex.run_er_experiment(cfg)
    if args.out:
        FilePath(args.out + ".csv").write_text(dist.to_csv())
        FilePath(args.out + ".json").write_text(dist.summary_json())
        if args.hist:
            for m in methods:
                FilePath(f"{args.out}.{m}.hist").write_text(dist.histogram_text(m))
    else:
        sys.stdout.write(dist.to_csv())
    for m, s in dist.summary().items():
        _info(f"{m}: min={s['min']} max={s['max']} mean={s['mean']:.3f} median={s['median']}", not args.out)
    return 0


def cmd_verify(args) -> int:
    if args.what == "theorem1":
        rep = ex.verify_theorem1(args.n if args.n is not None else 5)
    elif args.what == "prop2":
        rep = ex.verify_prop2(args.n if args.n is not None else 4)
        for c in rep.constructions:
            print(f"n={c.n} cycle_worst={c.cycle_worst} dn_best={c.dn_best} {'OK' if c.ok else 'FAIL'}")
    else:
        rep = ex.verify_prop1(sample_count=args.samples, rng_seed=args.rng)
    print(rep.line())
    return 0 if rep.ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="greedyorder", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph in edge-list format")
    p.add_argument("kind", choices=[*GENERATORS, "er"])
    p.add_argument("n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--rng", "--seed", dest="rng", type=int, default=0)
    p.add_argument("--connected", action="store_true", help="resample until connected (er only)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    def ordering_flags(p, default_variant="standard"):
        p.add_argument("--rng", type=int, default=0)
        p.add_argument("--seed-vertex", type=int, default=0)
        p.add_argument("--variant", choices=VARIANTS, default=default_variant)

    p = sub.add_parser("order", help="compute an ordering and its communication time")
    p.add_argument("graph")
    p.add_argument("--method", choices=ORDER_METHODS, required=True)
    ordering_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("time", help="communication time of a given ordering")
    p.add_argument("graph")
    p.add_argument("ordering")
    p.set_defaults(func=cmd_time)

    p = sub.add_parser("run-greedy", help="run the ordered greedy on a coverage problem")
    p.add_argument("graph")
    p.add_argument("problem")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--ordering", help="ordering file; default runs the distributed ordering")
    src.add_argument("--method", choices=ORDER_METHODS, default="alg1")
    ordering_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_run_greedy)

    p = sub.add_parser("experiment", help="Erdos-Renyi communication-time experiment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--methods", default="random,best,alg1")
    p.add_argument("--rng", type=int, default=0)
    p.add_argument("--variant", choices=VARIANTS, default="order-n")
    p.add_argument("--out", help="output prefix; writes <out>.csv and <out>.json")
    p.add_argument("--hist", action="store_true", help="also write integer-binned histogram text per method")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("verify", help="exhaustive or sampled checks of the extremal bounds")
    p.add_argument("what", choices=["theorem1", "prop1", "prop2"])
    p.add_argument("--n", type=int)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--rng", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except BudgetError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except SamplingError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
