"""Timing harness: random instances, median wall times and log-log slopes."""

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .fixed import discrete_subset_decide
from .sweep import build_disks, num_colors, sweep_decide

__all__ = ["BenchConfig", "BenchRow", "random_instance", "run_benchmark", "fit_slope", "format_table"]


@dataclass
class BenchConfig:
    """What to time.

    ``sizes`` are used for both ``n`` (curve vertices) and ``k`` (points).
    ``eps`` is small enough that the random instances are infeasible, so the
    sweep always runs to the end.
    """

    sizes: tuple = (4, 8, 16, 32)
    seeds: tuple = (0, 1, 2)
    solvers: tuple = ("sweep_decide", "discrete_decide")
    eps: float = 0.3
    discrete_sizes: tuple = (128, 256, 512, 1024, 2048)
    repeats: int = 3


@dataclass
class BenchRow:
    solver: str
    n: int
    k: int
    median_time: float
    times: list = field(default_factory=list)


def random_instance(n, k, seed):
    """Random-walk curve of diameter 3 and ``k`` uniform points in the unit square."""
    rng = np.random.default_rng(seed)
    steps = rng.normal(size=(n, 2))
    P = np.cumsum(steps, axis=0)
    P -= P.mean(axis=0)
    ext = np.linalg.norm(P.max(axis=0) - P.min(axis=0))
    if ext > 0:
        P *= 3.0 / ext
    S = rng.uniform(0.0, 1.0, size=(k, 2))
    return P + 0.5, S


def _time(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _sweep(P, S, eps):
    return sweep_decide(build_disks(P, S, eps, "subset"), num_colors(P, S, "subset"))


def run_benchmark(config=None):
    """Time every solver on every size and seed.

    Returns one :class:`BenchRow` per (solver, size), in config order, with
    the median over seeds of the best-of-``repeats`` time.
    """
    config = config or BenchConfig()
    rows = []
    for solver in config.solvers:
        sizes = config.sizes if solver == "sweep_decide" else config.discrete_sizes
        for m in sizes:
            times = []
            for seed in config.seeds:
                P, S = random_instance(m, m, seed)
                if solver == "sweep_decide":
                    fn = lambda: _sweep(P, S, config.eps)
                elif solver == "discrete_decide":
                    fn = lambda: discrete_subset_decide(P, S, config.eps)
                else:
                    raise ValueError(f"unknown solver {solver!r}")
                times.append(_time(fn, config.repeats))
            rows.append(BenchRow(solver, m, m, float(np.median(times)), times))
    return rows


def fit_slope(rows, solver, against="n"):
    """Least-squares slope of ``log(time)`` against ``log(n)`` or ``log(n*k)``.

    Against ``n`` (with ``n = k``) the slope is the exponent per doubling of
    both inputs; against ``n*k`` it is half of that.
    """
    sel = [r for r in rows if r.solver == solver]
    x = np.log([r.n if against == "n" else r.n * r.k for r in sel])
    y = np.log([r.median_time for r in sel])
    return float(np.polyfit(x, y, 1)[0])


def format_table(rows):
    """Rows as TSV with a trailing slope line per solver."""
    lines = ["solver\tn\tk\tmedian_s"]
    for r in rows:
        lines.append(f"{r.solver}\t{r.n}\t{r.k}\t{r.median_time:.6g}")
    for solver in dict.fromkeys(r.solver for r in rows):
        lines.append(f"# slope\t{solver}\tper-doubling={fit_slope(rows, solver):.3f}\tvs-nk={fit_slope(rows, solver, 'nk'):.3f}")
    return "\n".join(lines) + "\n"
