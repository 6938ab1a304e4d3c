"""Command line interface.

Every command reads an instance file, prints a JSON result report on stdout
and exits with 0 (accepted / computed), 1 (rejected), 2 (usage or parse
error) or 3 (a witness failed re-verification).
"""

import argparse
import sys
import time
import warnings

from . import approx, bench, fixed, oracle, sweep
from .frechet import continuous_frechet_decide, continuous_frechet_value, discrete_frechet
from .io import InstanceError, ResultReport, load_instance
from .svg import render_svg

EXIT_OK, EXIT_REJECT, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3
INSTANCE_HELP = "instance file (JSON, or CSV with c/p rows)"


class VerificationError(RuntimeError):
    pass


def _verify(P, match, metric, eps):
    """Recheck a witness curve against the translated input curve."""
    if match is None:
        return
    Pt = P + (match.translation if match.translation is not None else 0.0)
    slack = 1e-9 * max(1.0, float(eps))
    if metric == "discrete":
        value, _ = discrete_frechet(Pt, match.curve)
        ok = value <= eps + slack
    else:
        ok = bool(continuous_frechet_decide(Pt, match.curve, eps + slack))
    if not ok:
        raise VerificationError(f"witness curve fails the {metric} Fréchet check at eps={eps}")


def _need_eps(args):
    if args.eps is None:
        raise InstanceError("--eps is required for this command")
    if args.eps < 0:
        raise InstanceError("--eps must be nonnegative")
    return args.eps


def _coords(inst, args):
    if getattr(args, "exact_rational", False):
        return inst.exact_curve, inst.exact_points
    return inst.curve, inst.points


def cmd_frechet(args, inst):
    if inst.curve2 is None:
        raise InstanceError("the frechet command needs a 'curve2' entry in the instance")
    P, Q = inst.curve, inst.curve2
    if args.kind == "discrete":
        value, coupling = discrete_frechet(P, Q)
        rep = ResultReport("frechet discrete", eps_optimal=value, witness={"type": "coupling", "steps": [list(s) for s in coupling]})
        if args.eps is not None:
            rep.accepted = value <= args.eps
            rep.eps_query = args.eps
        return rep
    if args.eps is not None:
        ok = bool(continuous_frechet_decide(P, Q, args.eps))
        return ResultReport("frechet continuous", accepted=ok, eps_query=args.eps)
    value = continuous_frechet_value(P, Q, args.tol or 1e-9)
    return ResultReport("frechet continuous", eps_optimal=value)


def cmd_cpsm(args, inst):
    P, S = inst.curve, inst.points
    variant, metric = args.variant, args.metric
    if args.action == "decide":
        eps = _need_eps(args)
        if metric == "discrete":
            fn = fixed.discrete_subset_decide if variant == "subset" else fixed.discrete_allpoints_decide
        else:
            fn = fixed.continuous_subset_decide if variant == "subset" else fixed.ns_compliant_decide
        match = fn(P, S, eps)
        _verify(P, match, metric, eps)
        return ResultReport.from_match(f"cpsm decide {metric}", variant, match, eps_query=eps)
    if metric == "discrete":
        eps, match = fixed.discrete_cpsm_optimize(P, S, variant)
    elif variant == "subset":
        eps, match = fixed.continuous_subset_optimize(P, S, args.tol)
    else:
        eps, match = fixed.allpoints_3approx(P, S, args.tol)
    _verify(P, match, metric, eps)
    return ResultReport.from_match(f"cpsm opt {metric}", variant, match, eps_optimal=eps)


def cmd_tcpsm(args, inst):
    P, S = inst.curve, inst.points
    Pc, Sc = _coords(inst, args)
    variant = args.variant
    if args.action == "sweep-decide":
        eps = _need_eps(args)
        match = sweep.tcpsm_sweep_decide(Pc, Sc, eps, variant, exact=args.exact_rational)
        _verify(P, match, "discrete", eps)
        return ResultReport.from_match("tcpsm sweep-decide", variant, match, eps_query=eps, exact=args.exact_rational)
    if args.action == "sweep-opt":
        eps, t, match, crit = sweep.sweep_optimize(Pc, Sc, variant, exact=args.exact_rational)
        _verify(P, match, "discrete", eps)
        return ResultReport.from_match(
            "tcpsm sweep-opt", variant, match, eps_optimal=eps, critical=crit.kind, critical_ids=list(crit.ids)
        )
    alpha = args.alpha if args.alpha is not None else 0.1
    if args.metric == "continuous" and variant == "allpoints":
        t, match, eps = approx.translate_approx_allpoints_cont(P, S, alpha, args.tol)
        name = "contallpoints"
    else:
        name = ("cont" if args.metric == "continuous" else "disc") + variant
        t, match, eps = approx.translate_approx(P, S, alpha, name, args.tol)
    _verify(P, match, args.metric, eps)
    return ResultReport.from_match("tcpsm approx", name, match, eps_optimal=eps, alpha=alpha)


def cmd_oracle(args, inst):
    P, S = inst.curve, inst.points
    eps = _need_eps(args)
    budget = oracle.OracleBudget(grid_step=args.grid_step)
    if args.action == "curve":
        name = ("disc" if args.metric == "discrete" else "cont") + ("subset" if args.variant == "subset" else "all")
        if args.ns:
            name = "contallns"
        Q = oracle.brute_curve_exists(P, S, eps, name, budget)
        rep = ResultReport("oracle curve", name, Q is not None, eps_query=eps)
        rep.curve = None if Q is None else Q.tolist()
        return rep
    name = "discsubset" if args.variant == "subset" else "discall"
    scan = oracle.grid_translation_scan(P, S, eps, name, budget, report=True)
    rep = ResultReport("oracle grid", name, scan.margin >= 0, eps_query=eps, eps_achieved=scan.best_value)
    rep.translation = scan.translation.tolist()
    rep.metadata = {"margin": scan.margin, "grid_points": scan.points}
    return rep


def cmd_render(args, inst):
    result = None
    if args.result:
        with open(args.result, encoding="utf-8") as fh:
            result = ResultReport.from_json(fh.read())
    doc = render_svg(inst, result, eps=args.eps, show_disks=args.disks)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(doc)
        return ResultReport("render", metadata={"svg": args.svg})
    sys.stdout.write(doc)
    return None


def cmd_bench(args):
    cfg = bench.BenchConfig()
    if args.sizes:
        cfg.sizes = tuple(args.sizes)
    if args.seed is not None:
        cfg.seeds = (args.seed,)
    rows = bench.run_benchmark(cfg)
    table = bench.format_table(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(table)
    sys.stdout.write(table)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=float)
    common.add_argument("--variant", choices=("subset", "allpoints"), default="subset")
    common.add_argument("--metric", choices=("discrete", "continuous"), default="discrete")
    common.add_argument("--alpha", type=float)
    common.add_argument("--tol", type=float)
    common.add_argument("--exact-rational", action="store_true", help="exact arithmetic in the sweep")
    common.add_argument("--svg", metavar="PATH", help="also write a picture of the result")
    common.add_argument("--seed", type=int)

    p = argparse.ArgumentParser(prog="cpsm", description="Match a polygonal curve to a point set under Fréchet distance.")
    sub = p.add_subparsers(dest="command", required=True)
    f = sub.add_parser("frechet", parents=[common], help="distance between 'curve' and 'curve2'")
    f.add_argument("kind", choices=("discrete", "continuous"))
    f.add_argument("instance", help=INSTANCE_HELP)
    c = sub.add_parser("cpsm", parents=[common], help="fixed curve")
    c.add_argument("action", choices=("decide", "opt"))
    c.add_argument("instance", help=INSTANCE_HELP)
    t = sub.add_parser("tcpsm", parents=[common], help="curve under translation")
    t.add_argument("action", choices=("sweep-decide", "sweep-opt", "approx"))
    t.add_argument("instance", help=INSTANCE_HELP)
    o = sub.add_parser("oracle", parents=[common], help="brute-force references")
    o.add_argument("action", choices=("curve", "grid"))
    o.add_argument("instance", help=INSTANCE_HELP)
    o.add_argument("--grid-step", type=float, default=0.01)
    o.add_argument("--ns", action="store_true", help="nearest-segment All-points variant")
    r = sub.add_parser("render", parents=[common], help="draw an instance as SVG")
    r.add_argument("instance", help=INSTANCE_HELP)
    r.add_argument("--result", help="result report JSON to overlay")
    r.add_argument("--disks", action="store_true")
    b = sub.add_parser("bench", help="timing table")
    b.add_argument("--sizes", type=int, nargs="+")
    b.add_argument("--seed", type=int)
    b.add_argument("--out", help="TSV output path")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "bench":
        return cmd_bench(args)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            inst = load_instance(args.instance)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        t0 = time.perf_counter()
        handler = {"frechet": cmd_frechet, "cpsm": cmd_cpsm, "tcpsm": cmd_tcpsm, "oracle": cmd_oracle, "render": cmd_render}
        rep = handler[args.command](args, inst)
    except (InstanceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (VerificationError, ArithmeticError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if rep is None:
        return EXIT_OK
    rep.wall_time = time.perf_counter() - t0
    if getattr(args, "svg", None) and args.command != "render" and inst.dimension == 2:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(inst, rep, eps=rep.eps_query or rep.eps_optimal))
    print(rep.to_json())
    return EXIT_REJECT if rep.accepted is False else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
