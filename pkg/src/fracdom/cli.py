"""Command-line interface.

Subcommands: gen {rotational,tournament,cycle,random,union}, alpha,
gamma, gamma-star, farkas, half-cover, greedy-dom,
frac-dom {recursive,lp}, verify, tightness, experiment.  Graph commands
read DGF from a file argument or stdin, so generators pipe into
solvers.  Exit codes: 0 success / all bounds hold, 1 a verified bound
violated (a defect signal, never expected), 2 input error, 3 family cap
or work budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions, exact, generators, harness, lp
from .dgf import emit_dgf, emit_weights, parse_dgf, parse_weights
from .digraph import vertices_of
from .errors import BudgetExceeded, FracdomError, ParseError, TooLarge
from .rational import RONE, format_rat, parse_rat


def _read_graph(path):
    if path is None or path == "-":
        return parse_dgf(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_dgf(fh.read())


def _emit(text):
    sys.stdout.write(text)


def _emit_json(payload):
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _set_list(members):
    return vertices_of(members)


def _cmd_gen(args):
    if args.kind == "rotational":
        g = generators.rotational_tournament(args.r)
    elif args.kind == "tournament":
        g = generators.random_tournament(args.n, args.seed)
    elif args.kind == "cycle":
        g = generators.directed_cycle(args.n)
    elif args.kind == "random":
        g = generators.random_digraph(args.n, parse_rat(args.p), args.seed)
    else:  # union
        parts = []
        for path in args.files:
            with open(path, "r", encoding="utf-8") as fh:
                parts.append(parse_dgf(fh.read()))
        g = generators.disjoint_union(parts)
    _emit(emit_dgf(g))
    return 0


def _cmd_alpha(args):
    g = _read_graph(args.file)
    alpha, witness = exact.independence_number(g)
    if args.json:
        _emit_json({"alpha": alpha, "witness": _set_list(witness)})
    else:
        _emit(f"{alpha}\n")
    return 0


def _cmd_gamma(args):
    g = _read_graph(args.file)
    gamma, witness = exact.domination_number(g)
    if args.json:
        _emit_json({"gamma": gamma, "witness": _set_list(witness)})
    else:
        _emit(f"{gamma}\n")
    return 0


def _cmd_gamma_star(args):
    g = _read_graph(args.file)
    value, weights = lp.gamma_star(g)
    if args.json:
        _emit_json(
            {
                "gamma_star": format_rat(value),
                "weights": [format_rat(w) for w in weights],
            }
        )
    else:
        _emit(format_rat(value) + "\n")
    return 0


def _cmd_farkas(args):
    g = _read_graph(args.file)
    p = lp.farkas_weights(g)
    if args.json:
        _emit_json({"weights": [format_rat(w) for w in p]})
    else:
        _emit(emit_weights(p))
    return 0


def _cmd_half_cover(args):
    g = _read_graph(args.file)
    if args.weights:
        with open(args.weights, "r", encoding="utf-8") as fh:
            p = parse_weights(fh.read(), g.n)
    else:
        p = (RONE,) * g.n
    cover = constructions.half_cover(g, p)
    if args.json:
        _emit_json({"stable_set": _set_list(cover)})
    else:
        _emit(" ".join(str(v) for v in _set_list(cover)) + "\n")
    return 0


def _cmd_greedy_dom(args):
    g = _read_graph(args.file)
    trace = constructions.greedy_dominating_set(g)
    if args.json:
        _emit_json(
            {
                "rounds": [
                    {"stable_set": _set_list(s), "covered": _set_list(c)}
                    for s, c in trace.rounds
                ],
                "dominating": _set_list(trace.dominating),
                "size": trace.size,
            }
        )
    else:
        for i, (s, c) in enumerate(trace.rounds):
            _emit(
                f"round {i}: stable {' '.join(map(str, _set_list(s)))}"
                f" covers {' '.join(map(str, _set_list(c)))}\n"
            )
        _emit("dominating: " + " ".join(map(str, _set_list(trace.dominating))) + "\n")
    return 0


def _cmd_frac_dom(args):
    g = _read_graph(args.file)
    if args.method == "recursive":
        witness = constructions.frac_dom_recursive(g)
    else:
        witness = constructions.frac_dom_from_lp(g)
    if args.json:
        _emit_json(
            {
                "weights": [format_rat(w) for w in witness.weights],
                "total": format_rat(witness.total()),
                "certified_bound": format_rat(witness.certified_bound),
            }
        )
    else:
        _emit(emit_weights(witness.weights))
        _emit(f"# total {format_rat(witness.total())}\n")
        _emit(f"# bound {format_rat(witness.certified_bound)}\n")
    return 0


def _cmd_verify(args):
    named = []
    if args.random:
        prob = parse_rat(args.p)
        for i in range(args.random):
            g = generators.random_digraph(args.n, prob, generators.derive_seed(args.seed, i))
            named.append((f"random(n={args.n},p={args.p},seed={args.seed},i={i})", g))
    for path in args.files:
        with open(path, "r", encoding="utf-8") as fh:
            named.append((path, parse_dgf(fh.read())))
    if not named:
        raise ParseError("verify needs DGF files or --random COUNT")
    report = harness.verify_digraphs(named)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(report.to_csv())
    if args.json:
        _emit(report.to_json())
    else:
        for rec in report.records:
            flags = harness.record_flags(rec)
            status = "ok" if all(flags.values()) else "VIOLATED"
            _emit(f"{rec.instance}: {status}\n")
    return 0 if report.all_pass else 1


def _cmd_tightness(args):
    report = harness.tightness_suite(args.k, parse_rat(args.eps))
    if args.json:
        _emit(report.to_json())
    else:
        rec = report.records[0]
        flags = harness.record_flags(rec)
        _emit(
            f"{rec.instance}: gamma* = {format_rat(rec.gamma_star)}"
            f" (expected {format_rat(rec.expected_gamma_star)},"
            f" target > {format_rat(rec.tightness_target)})\n"
        )
        _emit("ok\n" if all(flags.values()) else "VIOLATED\n")
    return 0 if report.all_pass else 1


def _cmd_experiment(args):
    stats = harness.random_tournament_experiment(
        args.n, args.trials, args.seed, k_max=args.k_max, gamma_query=args.gamma_query
    )
    if args.json:
        _emit(stats.to_json())
    else:
        _emit(
            f"n={stats.n} trials={stats.trials} mean gamma* = "
            f"{format_rat(stats.mean_gamma_star)} min = {format_rat(stats.min_gamma_star)}\n"
        )
        _emit(
            f"fraction with certified gamma >= {stats.gamma_query}: "
            f"{format_rat(stats.frac_gamma_at_least)}\n"
        )
        _emit(
            f"fraction with max out-degree within threshold: "
            f"{format_rat(stats.frac_degree_within)}\n"
        )
    return 0 if stats.all_outdegree_bounds_hold else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracdom",
        description="Exact domination and fractional domination of digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a digraph as DGF on stdout")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    p = gen_sub.add_parser("rotational")
    p.add_argument("--r", type=int, required=True)
    p = gen_sub.add_parser("tournament")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = gen_sub.add_parser("cycle")
    p.add_argument("--n", type=int, required=True)
    p = gen_sub.add_parser("random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", default="1/2", help="arc probability num/den")
    p.add_argument("--seed", type=int, default=0)
    p = gen_sub.add_parser("union")
    p.add_argument("files", nargs="+")
    gen.set_defaults(func=_cmd_gen)

    def graph_cmd(name, func, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("file", nargs="?", help="DGF file (default stdin)")
        cmd.add_argument("--json", action="store_true")
        cmd.set_defaults(func=func)
        return cmd

    graph_cmd("alpha", _cmd_alpha, "independence number")
    graph_cmd("gamma", _cmd_gamma, "domination number")
    graph_cmd("gamma-star", _cmd_gamma_star, "fractional domination number")
    graph_cmd("farkas", _cmd_farkas, "balanced probability weighting")
    hc = graph_cmd("half-cover", _cmd_half_cover, "stable set covering half the weight")
    hc.add_argument("--weights", help="weight file (default all ones)")
    graph_cmd("greedy-dom", _cmd_greedy_dom, "greedy logarithmic dominating set")
    fd = sub.add_parser("frac-dom", help="constructive fractional dominating function")
    fd.add_argument("method", choices=["recursive", "lp"])
    fd.add_argument("file", nargs="?")
    fd.add_argument("--json", action="store_true")
    fd.set_defaults(func=_cmd_frac_dom)

    ver = sub.add_parser("verify", help="check every bound on files or random batches")
    ver.add_argument("files", nargs="*")
    ver.add_argument("--random", type=int, default=0, metavar="COUNT")
    ver.add_argument("--n", type=int, default=8)
    ver.add_argument("--p", default="1/2")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--json", action="store_true")
    ver.add_argument("--csv", help="also write a CSV report to this path")
    ver.set_defaults(func=_cmd_verify)

    tight = sub.add_parser("tightness", help="sharpness family check")
    tight.add_argument("--k", type=int, required=True)
    tight.add_argument("--eps", required=True, help="rational num/den")
    tight.add_argument("--json", action="store_true")
    tight.set_defaults(func=_cmd_tightness)

    exp = sub.add_parser("experiment", help="random tournament statistics")
    exp.add_argument("--n", type=int, required=True)
    exp.add_argument("--trials", type=int, required=True)
    exp.add_argument("--seed", type=int, default=0)
    exp.add_argument("--k-max", type=int, default=3, dest="k_max")
    exp.add_argument("--gamma-query", type=int, default=None, dest="gamma_query")
    exp.add_argument("--json", action="store_true")
    exp.set_defaults(func=_cmd_experiment)

    return parser


def run_cli(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (TooLarge, BudgetExceeded) as exc:
        print(f"fracdom: {exc}", file=sys.stderr)
        return 3
    except (FracdomError, OSError, ValueError) as exc:
        print(f"fracdom: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
