import json

from cistkit import oracle
from cistkit.harness import (
    GENERATOR,
    ExperimentRecord,
    eq3_check,
    eq3_predicted,
    grid_cells,
    instance_seed,
    parse_range,
    random_hypergraph,
    report_csv,
    run_conjecture_grid,
    summary_json,
    verify_counterexample,
    write_grid,
)
from cistkit.model import Coloring, Hypergraph


def test_generator_is_deterministic_and_normalized():
    for seed in range(50):
        h = random_hypergraph(6, 5, seed)
        assert h == random_hypergraph(6, 5, seed)
        assert h.m == 5 and not h.uncovered()


def test_instance_seed_stable():
    assert instance_seed(0, 4, 3, 0) == instance_seed(0, 4, 3, 0)
    assert instance_seed(0, 4, 3, 0) != instance_seed(0, 4, 3, 1)


def test_ranges_and_cells():
    assert parse_range("4..6") == [4, 5, 6]
    assert parse_range("-1..1") == [-1, 0, 1]
    assert parse_range("7") == [7]
    assert grid_cells([1, 2], [-1, 0]) == [(1, 1), (2, 1), (2, 2)]


def test_eq3_check_matches_oracle():
    for seed in range(40):
        h = random_hypergraph(5, 4, seed)
        rec = eq3_check(h, seed)
        assert (rec.chi_p, rec.alpha, rec.chi_p2) == oracle.brute_eq3(h)
        assert rec.eq3_holds == (rec.chi_p2 == eq3_predicted(rec.chi_p, rec.alpha))


def test_grid_outputs_deterministic(tmp_path):
    a = run_conjecture_grid([4, 5], [-1, 0, 1], 5, seed=11, out_dir=tmp_path / "a")
    b = run_conjecture_grid([4, 5], [-1, 0, 1], 5, seed=11, out_dir=tmp_path / "b", jobs=2)
    write_grid(a, tmp_path / "a")
    write_grid(b, tmp_path / "b")
    assert (tmp_path / "a" / "summary.json").read_bytes() == (tmp_path / "b" / "summary.json").read_bytes()

    def strip(path):
        return [line.rsplit(",", 1)[0] for line in path.read_text().splitlines()]

    assert strip(tmp_path / "a" / "report.csv") == strip(tmp_path / "b" / "report.csv")
    summary = json.loads(summary_json(a.summary))
    assert summary["instances"] == 30 and summary["generator"] == GENERATOR
    assert report_csv(a.records).splitlines()[0] == "seed,n,m,chi_p,alpha,chi_p2,eq3,millis"


def test_counterexample_check_rejects_false_claim():
    h = Hypergraph(4, [[0, 1, 2], [0, 1, 3]])
    rec = eq3_check(h)
    # pretend chi_p2 was computed as 1
    fake = ExperimentRecord(None, 4, 2, rec.chi_p, rec.alpha, 1, False,
                            dict(rec.witnesses, chi_p2=Coloring([0, 0, 0, 0], 1)), hypergraph=h)
    checked, confirmed = verify_counterexample(fake)
    assert checked and not confirmed
