from pathlib import Path

import pytest

from cistkit.colorings import bipanchromatic_number, min_unique_colors, panchromatic_number
from cistkit.errors import FormatError, InvalidInput
from cistkit.lpexport import (
    LpModel,
    alpha_model,
    bipanchromatic_model,
    brute_force_optimum,
    export_alpha_lp,
    export_bipanchromatic_lp,
    export_panchromatic_lp,
    panchromatic_model,
    parse_lp,
)
from cistkit.model import Hypergraph

GOLDEN = Path(__file__).parent / "golden"
INSTANCES = {
    "pair": Hypergraph(2, [[0, 1]]),
    "triple": Hypergraph(3, [[0, 1, 2]]),
}


@pytest.mark.parametrize("name", sorted(INSTANCES))
def test_golden_files(name):
    h = INSTANCES[name]
    chi = panchromatic_number(h)[0]
    for kind, text in [
        ("pan", export_panchromatic_lp(h)),
        ("bipan", export_bipanchromatic_lp(h, chi)),
        ("alpha", export_alpha_lp(h, chi)),
    ]:
        assert text.encode() == (GOLDEN / f"{name}.{kind}.lp").read_bytes()


@pytest.mark.parametrize(
    "h",
    [
        Hypergraph(2, [[0, 1]]),
        Hypergraph(3, [[0, 1, 2]]),
        Hypergraph(3, [[0, 1], [1, 2]]),
        Hypergraph(4, [[0, 1], [2, 3]]),
    ],
)
def test_brute_force_reproduces_numbers(h):
    chi = panchromatic_number(h)[0]
    if h.n * h.n + h.n <= 16:
        assert brute_force_optimum(parse_lp(export_panchromatic_lp(h)))[0] == chi
    assert brute_force_optimum(parse_lp(export_bipanchromatic_lp(h, chi)))[0] == bipanchromatic_number(h)[0]
    assert brute_force_optimum(parse_lp(export_alpha_lp(h, chi)))[0] == min_unique_colors(h, chi)[0]


def test_alpha_fifteen_variables():
    h = Hypergraph(4, [[0, 1, 2], [0, 1, 3]])
    model = alpha_model(h, 3)
    assert len(model.binaries) == 15
    assert brute_force_optimum(model)[0] == 2


def test_parse_round_trip():
    h = Hypergraph(4, [[0, 1, 2, 3], [0, 1]])
    for model in (panchromatic_model(h), bipanchromatic_model(h, 2), alpha_model(h, 2)):
        text = model.to_text()
        body = [line for line in text.splitlines() if not line.startswith("\\")]
        assert parse_lp(text).to_text().splitlines() == body


def test_long_rows_wrap():
    h = Hypergraph(10, [list(range(10))])
    text = export_alpha_lp(h, 2)
    assert any(line.startswith("   + ") for line in text.splitlines())
    assert parse_lp(text).constraints == alpha_model(h, 2).constraints


def test_model_errors():
    model = LpModel("max", [(1, "y")], binaries=["x"])
    with pytest.raises(InvalidInput):
        model.to_text()
    with pytest.raises(FormatError):
        parse_lp("Subject To\n c: x >= 1\nEnd\n")
    with pytest.raises(InvalidInput):
        brute_force_optimum(panchromatic_model(Hypergraph(5, [[0, 1, 2, 3, 4]])))


def test_infeasible_model():
    model = parse_lp("Maximize\n obj: x\nSubject To\n c1: x >= 1\n c2: x <= 0\nBinary\n x\nEnd\n")
    assert brute_force_optimum(model) == (None, None)
