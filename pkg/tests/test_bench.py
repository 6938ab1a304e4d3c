import pytest

from cpsm.bench import BenchConfig, fit_slope, format_table, random_instance, run_benchmark


def test_random_instance_shape():
    P, S = random_instance(8, 5, 0)
    assert P.shape == (8, 2) and S.shape == (5, 2)
    assert ((S >= 0) & (S <= 1)).all()


def test_row_count_and_table():
    cfg = BenchConfig(sizes=(4, 8), seeds=(0,), discrete_sizes=(4, 8), repeats=1)
    rows = run_benchmark(cfg)
    assert len(rows) == len(cfg.sizes) * len(cfg.solvers)
    table = format_table(rows)
    assert table.splitlines()[0] == "solver\tn\tk\tmedian_s"
    assert sum(line.startswith("# slope") for line in table.splitlines()) == len(cfg.solvers)


def test_fit_slope_exact_power():
    from cpsm.bench import BenchRow

    rows = [BenchRow("s", n, n, float(n) ** 4) for n in (4, 8, 16)]
    assert fit_slope(rows, "s") == pytest.approx(4.0)
    assert fit_slope(rows, "s", "nk") == pytest.approx(2.0)


def test_unknown_solver():
    with pytest.raises(ValueError):
        run_benchmark(BenchConfig(sizes=(4,), seeds=(0,), solvers=("nope",), discrete_sizes=(4,)))
