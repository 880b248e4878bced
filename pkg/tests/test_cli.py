import json

import pytest

from cistkit.cli import main
from cistkit.model import (
    format_certificate,
    format_hypergraph,
    format_split,
    read_coloring,
    split_of_hypergraph,
    Hypergraph,
    CistCertificate,
)

H = Hypergraph(4, [[0, 1, 2], [0, 1, 3]])


@pytest.fixture
def files(tmp_path):
    hg = tmp_path / "h.hg"
    hg.write_text(format_hypergraph(H))
    sg = tmp_path / "g.sg"
    sg.write_text(format_split(split_of_hypergraph(H)))
    return tmp_path, hg, sg


def test_color_commands(files, capsys):
    out, hg, _ = files
    assert main(["color", "chi-p", str(hg), "--out", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "3"
    assert main(["color", "chi-p2", str(hg), "--out", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert read_coloring(out / "h.chi_p2.col").colors == (0, 0, 1, 1)
    assert main(["color", "alpha", str(hg), "--out", str(out), "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["alpha"] == 2


def test_cist_commands(files, capsys):
    out, _, sg = files
    assert main(["cist", "construct", str(sg), "--out", str(out)]) == 0
    report = json.loads((out / "g.report.json").read_text())
    assert (report["lower_bound"], report["upper_bound"], report["max_cist"]) == (2, 3, 2)
    capsys.readouterr()
    assert main(["cist", "verify", str(sg), str(out / "g.trees.json")]) == 0
    assert main(["cist", "exact", str(sg), "--out", str(out)]) == 0
    assert capsys.readouterr().out.strip().endswith("2")
    assert main(["cist", "verify", str(sg), str(out / "g.exact.trees.json")]) == 0


def test_invalid_certificate_exit_code(files):
    out, _, sg = files
    bad = out / "bad.json"
    bad.write_text(format_certificate(CistCertificate([[(0, 1)], [(0, 1)]])))
    assert main(["cist", "verify", str(sg), str(bad)]) == 2


def test_invalid_input_exit_code(tmp_path):
    bad = tmp_path / "bad.hg"
    bad.write_text("p hg 3 2\n0 1\n")
    assert main(["color", "chi-p", str(bad)]) == 2
    assert main(["color", "chi-p", str(tmp_path / "missing.hg")]) == 2


def test_verification_failure_exit_code(files, monkeypatch):
    from cistkit import harness
    from cistkit.errors import VerificationFailure

    def boom(*a, **k):
        raise VerificationFailure("forced")

    monkeypatch.setattr(harness, "eq3_check", boom)
    _, hg, _ = files
    assert main(["experiment", "eq3", str(hg)]) == 3


def test_reduce_and_map(files):
    out, hg, _ = files
    assert main(["reduce", "bicp", str(hg), "-o", str(out / "hp.hg")]) == 0
    assert main(["reduce", "cist", str(hg), "-o", str(out / "gp.sg")]) == 0
    col = out / "w.col"
    col.write_text("s col 2\n0 0\n1 1\n2 0\n3 1\n")
    assert main(["reduce", "map-witness", "cist", "fwd", str(hg), str(col), "-o", str(out / "t.json")]) == 0
    assert main(["cist", "verify", str(out / "gp.sg"), str(out / "t.json")]) == 0
    assert main(["reduce", "map-witness", "cist", "bwd", str(hg), str(out / "t.json"), "-o", str(out / "b.col")]) == 0
    assert main(["reduce", "map-witness", "bicp", "fwd", str(hg), str(col), "-o", str(out / "bf.col")]) == 0


def test_lp_and_experiment(files, capsys):
    out, hg, _ = files
    for model in ("pan", "bipan", "alpha"):
        assert main(["lp", "export", model, str(hg), "-o", str(out / f"{model}.lp")]) == 0
    assert main(["experiment", "conjecture", "--n", "4..5", "--m-offset", "-1..0",
                 "--samples", "3", "--seed", "5", "--out", str(out / "grid")]) == 0
    assert "violations=0" in capsys.readouterr().out
    assert (out / "grid" / "report.csv").exists() and (out / "grid" / "summary.json").exists()
