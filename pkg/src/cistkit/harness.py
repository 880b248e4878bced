"""Seeded random hypergraphs and the chi_p2 = chi_p - ceil(alpha/2) experiment."""
from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from . import oracle
from .colorings import (
    bipanchromatic_number,
    is_bipanchromatic,
    is_panchromatic,
    min_unique_colors,
    panchromatic_number,
)
from .errors import InvalidInput, VerificationFailure
from .model import Coloring, Hypergraph, format_coloring, format_hypergraph, write_text

GENERATOR = (
    "each hyperedge includes each vertex independently with probability 1/2, "
    "empty draws rejected; every uncovered vertex is then added to a uniformly "
    "chosen hyperedge; no deduplication or isomorphism filtering"
)
ORACLE_MAX_N = 11
REPORT_COLUMNS = ["seed", "n", "m", "chi_p", "alpha", "chi_p2", "eq3", "millis"]


def random_hypergraph(n: int, m: int, seed: int) -> Hypergraph:
    if n < 1 or m < 1:
        raise InvalidInput("need n >= 1 and m >= 1")
    rng = random.Random(seed)
    edges: list[set[int]] = []
    for _ in range(m):
        edge: set[int] = set()
        while not edge:
            edge = {v for v in range(n) if rng.random() < 0.5}
        edges.append(edge)
    covered = set().union(*edges)
    for v in range(n):
        if v not in covered:
            edges[rng.randrange(m)].add(v)
    return Hypergraph(n, edges)


def instance_seed(master: int, n: int, m: int, index: int) -> int:
    digest = hashlib.sha256(f"{master}:{n}:{m}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass
class ExperimentRecord:
    seed: int | None
    n: int
    m: int
    chi_p: int
    alpha: int
    chi_p2: int
    eq3_holds: bool
    witnesses: dict[str, Coloring] = field(default_factory=dict)
    millis: dict[str, float] = field(default_factory=dict)
    hypergraph: Hypergraph | None = None
    index: int | None = None

    @property
    def total_millis(self) -> int:
        return int(round(sum(self.millis.values())))

    def row(self) -> dict:
        return {
            "seed": self.seed,
            "n": self.n,
            "m": self.m,
            "chi_p": self.chi_p,
            "alpha": self.alpha,
            "chi_p2": self.chi_p2,
            "eq3": int(self.eq3_holds),
            "millis": self.total_millis,
        }


def eq3_predicted(chi_p: int, alpha: int) -> int:
    return chi_p - math.ceil(alpha / 2)


def eq3_check(h: Hypergraph, seed: int | None = None) -> ExperimentRecord:
    """Compute chi_p, alpha_{chi_p} and chi_p2 with witnesses.

    chi_p2 >= chi_p - ceil(alpha/2) always holds (grouping unique colors
    gives such a coloring) and is enforced; equality is recorded.
    """
    millis = {}
    t0 = time.perf_counter()
    chi_p, w_pan = panchromatic_number(h)
    t1 = time.perf_counter()
    alpha, w_alpha = min_unique_colors(h, chi_p)
    t2 = time.perf_counter()
    chi_p2, w_bi = bipanchromatic_number(h, chi_p)
    t3 = time.perf_counter()
    millis = {"chi_p": (t1 - t0) * 1e3, "alpha": (t2 - t1) * 1e3, "chi_p2": (t3 - t2) * 1e3}
    if not (is_panchromatic(h, w_pan) and is_panchromatic(h, w_alpha) and is_bipanchromatic(h, w_bi)):
        raise VerificationFailure(f"solver returned an invalid witness for {h}")
    if len(w_alpha.unique_colors()) != alpha:
        raise VerificationFailure(f"alpha witness disagrees with alpha for {h}")
    predicted = eq3_predicted(chi_p, alpha)
    if chi_p2 < predicted:
        raise VerificationFailure(f"chi_p2={chi_p2} below chi_p - ceil(alpha/2)={predicted} for {h}")
    return ExperimentRecord(
        seed=seed,
        n=h.n,
        m=h.m,
        chi_p=chi_p,
        alpha=alpha,
        chi_p2=chi_p2,
        eq3_holds=chi_p2 == predicted,
        witnesses={"chi_p": w_pan, "alpha": w_alpha, "chi_p2": w_bi},
        millis=millis,
        hypergraph=h,
    )


def parse_range(text: str) -> list[int]:
    """'4..13' -> [4, ..., 13]; '7' -> [7]."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def grid_cells(n_range: Iterable[int], m_offsets: Iterable[int]) -> list[tuple[int, int]]:
    offsets = list(m_offsets)
    return [(n, n + off) for n in n_range for off in offsets if n + off >= 1]


def _run_one(task: tuple[int, int, int, int]) -> ExperimentRecord:
    master, n, m, index = task
    seed = instance_seed(master, n, m, index)
    rec = eq3_check(random_hypergraph(n, m, seed), seed)
    rec.index = index
    return rec


@dataclass
class Counterexample:
    record: ExperimentRecord
    oracle_checked: bool
    confirmed: bool
    files: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        r = self.record
        return {
            "seed": r.seed,
            "n": r.n,
            "m": r.m,
            "index": r.index,
            "chi_p": r.chi_p,
            "alpha": r.alpha,
            "chi_p2": r.chi_p2,
            "edges": [list(e) for e in r.hypergraph.edges],
            "oracle_checked": self.oracle_checked,
            "confirmed": self.confirmed,
            "files": self.files,
        }


@dataclass
class GridResult:
    records: list[ExperimentRecord]
    summary: dict
    counterexamples: list[Counterexample]


def verify_counterexample(rec: ExperimentRecord) -> tuple[bool, bool]:
    """(oracle_checked, confirmed) for a reported chi_p2 != chi_p - ceil(alpha/2) record."""
    h = rec.hypergraph
    w = rec.witnesses
    witnesses_ok = (
        is_panchromatic(h, w["chi_p"]) and w["chi_p"].k == rec.chi_p
        and is_panchromatic(h, w["alpha"]) and len(w["alpha"].unique_colors()) == rec.alpha
        and is_bipanchromatic(h, w["chi_p2"]) and w["chi_p2"].k == rec.chi_p2
    )
    if h.n > ORACLE_MAX_N:
        return False, witnesses_ok
    chi_p, alpha, chi_p2 = oracle.brute_eq3(h)
    same = (chi_p, alpha, chi_p2) == (rec.chi_p, rec.alpha, rec.chi_p2)
    return True, witnesses_ok and same and chi_p2 != eq3_predicted(chi_p, alpha)


def write_counterexample(cx: Counterexample, out_dir: Path) -> None:
    r = cx.record
    stem = out_dir / "counterexamples" / f"n{r.n}_m{r.m}_i{r.index}"
    files = [write_text(f"{stem}.hg", format_hypergraph(r.hypergraph))]
    for name, col in r.witnesses.items():
        files.append(write_text(f"{stem}.{name}.col", format_coloring(col)))
    cx.files = [str(f) for f in files]
    write_text(f"{stem}.json", json.dumps(cx.to_json(), indent=2, sort_keys=True) + "\n")


def run_conjecture_grid(
    n_range: Sequence[int],
    m_offsets: Sequence[int],
    samples_per_cell: int,
    seed: int,
    out_dir: str | Path | None = None,
    jobs: int = 1,
) -> GridResult:
    cells = grid_cells(n_range, m_offsets)
    tasks = [(seed, n, m, idx) for n, m in cells for idx in range(samples_per_cell)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_one, tasks, chunksize=8))
    else:
        records = [_run_one(t) for t in tasks]
    counterexamples = []
    for rec in records:
        if rec.eq3_holds:
            continue
        checked, confirmed = verify_counterexample(rec)
        cx = Counterexample(rec, checked, confirmed)
        if out_dir is not None:
            write_counterexample(cx, Path(out_dir))
        counterexamples.append(cx)
    holds = sum(r.eq3_holds for r in records)
    summary = {
        "generator": GENERATOR,
        "master_seed": seed,
        "n_range": list(n_range),
        "m_offsets": list(m_offsets),
        "samples_per_cell": samples_per_cell,
        "cells": len(cells),
        "instances": len(records),
        "eq3_holds": holds,
        "eq3_violations": len(records) - holds,
        "confirmed_counterexamples": sum(cx.confirmed for cx in counterexamples),
        "counterexamples": [cx.to_json() for cx in counterexamples],
    }
    return GridResult(records, summary, counterexamples)


def report_csv(records: Sequence[ExperimentRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.row())
    return buf.getvalue()


def report_json(records: Sequence[ExperimentRecord]) -> str:
    return json.dumps([r.row() for r in records], indent=1) + "\n"


def summary_json(summary: dict) -> str:
    return json.dumps(summary, indent=2, sort_keys=True) + "\n"


def write_grid(result: GridResult, out_dir: str | Path, fmt: str = "csv") -> list[Path]:
    out_dir = Path(out_dir)
    if fmt == "json":
        report = write_text(out_dir / "report.json", report_json(result.records))
    else:
        report = write_text(out_dir / "report.csv", report_csv(result.records))
    return [report, write_text(out_dir / "summary.json", summary_json(result.summary))]
