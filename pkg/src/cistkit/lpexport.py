"""Integer programs for the coloring numbers, written in LP text format.

Variables (1-based indices):
  x_j_p  vertex j takes color p
  k_p    color p is used            (panchromatic / bipanchromatic models)
  v_p    color p is a unique color  (unique-color model)

Incidence coefficients are instance data and are folded into the
constraint rows.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .errors import FormatError, InvalidInput
from .model import Hypergraph

TERMS_PER_LINE = 8


@dataclass(frozen=True)
class Constraint:
    name: str
    terms: tuple[tuple[int, str], ...]
    rel: str
    rhs: int


@dataclass
class LpModel:
    sense: str
    objective: list[tuple[int, str]]
    constraints: list[Constraint] = field(default_factory=list)
    binaries: list[str] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)

    def add(self, name: str, terms, rel: str, rhs: int) -> None:
        self.constraints.append(Constraint(name, tuple(terms), rel, rhs))

    def variables(self) -> list[str]:
        return list(self.binaries)

    def validate(self) -> None:
        declared = set(self.binaries)
        if len(declared) != len(self.binaries):
            raise InvalidInput("duplicate variable declaration")
        names = [c.name for c in self.constraints]
        if len(set(names)) != len(names):
            raise InvalidInput("duplicate constraint name")
        for c in self.constraints:
            for _, var in c.terms:
                if var not in declared:
                    raise InvalidInput(f"{c.name} uses undeclared variable {var}")
        for _, var in self.objective:
            if var not in declared:
                raise InvalidInput(f"objective uses undeclared variable {var}")

    def to_text(self) -> str:
        self.validate()
        out = [f"\\ {line}" for line in self.comments]
        out.append("Maximize" if self.sense == "max" else "Minimize")
        out += _wrap("obj:", self.objective)
        out.append("Subject To")
        for c in self.constraints:
            lines = _wrap(f"{c.name}:", c.terms)
            lines[-1] += f" {c.rel} {c.rhs}"
            out += lines
        out.append("Binary")
        for start in range(0, len(self.binaries), TERMS_PER_LINE):
            out.append(" " + " ".join(self.binaries[start:start + TERMS_PER_LINE]))
        out.append("End")
        return "\n".join(out) + "\n"


def _term(coef: int, var: str, first: bool) -> str:
    sign = "-" if coef < 0 else "+"
    mag = abs(coef)
    body = var if mag == 1 else f"{mag} {var}"
    if first:
        return body if sign == "+" else f"- {body}"
    return f"{sign} {body}"


def _wrap(label: str, terms) -> list[str]:
    parts = [_term(c, v, i == 0) for i, (c, v) in enumerate(terms)]
    lines = []
    for start in range(0, len(parts), TERMS_PER_LINE):
        chunk = " ".join(parts[start:start + TERMS_PER_LINE])
        lines.append(f" {label} {chunk}" if start == 0 else f"   {chunk}")
    return lines


def _x(j: int, p: int) -> str:
    return f"x_{j}_{p}"


def _base(h: Hypergraph, colors: int, sense: str, title: str) -> LpModel:
    if h.m == 0:
        raise InvalidInput("hypergraph has no hyperedges")
    if colors < 1:
        raise InvalidInput("need at least one color")
    model = LpModel(sense, [])
    model.comments = [title, f"n={h.n} m={h.m} colors={colors}"]
    return model


def _assign_rows(model: LpModel, n: int, colors: int) -> None:
    for j in range(1, n + 1):
        model.add(f"assign_{j}", [(1, _x(j, p)) for p in range(1, colors + 1)], "=", 1)


def _x_vars(n: int, colors: int) -> list[str]:
    return [_x(j, p) for j in range(1, n + 1) for p in range(1, colors + 1)]


def _usage_model(h: Hypergraph, colors: int, title: str) -> LpModel:
    model = _base(h, colors, "max", title)
    ks = [f"k_{p}" for p in range(1, colors + 1)]
    model.objective = [(1, k) for k in ks]
    for j in range(1, h.n + 1):
        for p in range(1, colors + 1):
            model.add(f"use_{j}_{p}", [(1, _x(j, p)), (-1, f"k_{p}")], "<=", 0)
    _assign_rows(model, h.n, colors)
    for i, e in enumerate(h.edges, 1):
        for p in range(1, colors + 1):
            terms = [(1, _x(v + 1, p)) for v in e] + [(-1, f"k_{p}")]
            model.add(f"cover_{i}_{p}", terms, ">=", 0)
    model.binaries = _x_vars(h.n, colors) + ks
    return model


def panchromatic_model(h: Hypergraph) -> LpModel:
    return _usage_model(h, h.n, "panchromatic number")


def bipanchromatic_model(h: Hypergraph, chi_p: int) -> LpModel:
    model = _usage_model(h, chi_p, "bipanchromatic number")
    for p in range(1, chi_p + 1):
        terms = [(1, _x(j, p)) for j in range(1, h.n + 1)] + [(-2, f"k_{p}")]
        model.add(f"twice_{p}", terms, ">=", 0)
    return model


def alpha_model(h: Hypergraph, chi_p: int) -> LpModel:
    model = _base(h, chi_p, "min", "minimum number of unique colors")
    vs = [f"v_{p}" for p in range(1, chi_p + 1)]
    model.objective = [(1, v) for v in vs]
    for i, e in enumerate(h.edges, 1):
        for p in range(1, chi_p + 1):
            model.add(f"cover_{i}_{p}", [(1, _x(v + 1, p)) for v in e], ">=", 1)
    _assign_rows(model, h.n, chi_p)
    for p in range(1, chi_p + 1):
        terms = [(1, _x(j, p)) for j in range(1, h.n + 1)] + [(1, f"v_{p}")]
        model.add(f"unique_{p}", terms, ">=", 2)
    model.binaries = _x_vars(h.n, chi_p) + vs
    return model


def export_panchromatic_lp(h: Hypergraph) -> str:
    return panchromatic_model(h).to_text()


def export_bipanchromatic_lp(h: Hypergraph, chi_p: int) -> str:
    return bipanchromatic_model(h, chi_p).to_text()


def export_alpha_lp(h: Hypergraph, chi_p: int) -> str:
    return alpha_model(h, chi_p).to_text()


# --- reading back and brute-force evaluation ------------------------------

_TERM = re.compile(r"([+-])?\s*(\d+)?\s*([A-Za-z_][A-Za-z0-9_]*)")


def _parse_terms(text: str) -> list[tuple[int, str]]:
    terms = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TERM.match(text, pos)
        if not match:
            raise FormatError(f"cannot parse LP expression near {text[pos:]!r}")
        sign, mag, var = match.groups()
        coef = int(mag) if mag else 1
        terms.append((-coef if sign == "-" else coef, var))
        pos = match.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return terms


def parse_lp(text: str) -> LpModel:
    """Read the subset of LP format that this module writes."""
    section = None
    sense = None
    chunks: dict[str, list[str]] = {"obj": [], "cons": [], "bin": []}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("\\"):
            continue
        low = line.lower()
        if low in ("maximize", "minimize"):
            sense, section = low[:3], "obj"
            continue
        if low == "subject to":
            section = "cons"
            continue
        if low == "binary":
            section = "bin"
            continue
        if low == "end":
            break
        if section is None:
            raise FormatError(f"content before any section: {line!r}")
        chunks[section].append(line)
    if sense is None:
        raise FormatError("missing objective sense")
    obj = " ".join(chunks["obj"])
    model = LpModel(sense, _parse_terms(obj.split(":", 1)[1]))
    rows: list[str] = []
    for line in chunks["cons"]:
        if re.match(r"^[A-Za-z_][A-Za-z0-9_]*:", line):
            rows.append(line)
        elif rows:
            rows[-1] += " " + line
        else:
            raise FormatError(f"continuation without a constraint: {line!r}")
    for row in rows:
        name, body = row.split(":", 1)
        match = re.match(r"(.*?)(<=|>=|=)\s*(-?\d+)\s*$", body)
        if not match:
            raise FormatError(f"bad constraint row {row!r}")
        model.add(name.strip(), _parse_terms(match.group(1)), match.group(2), int(match.group(3)))
    model.binaries = " ".join(chunks["bin"]).split()
    model.validate()
    return model


def brute_force_optimum(model: LpModel, max_vars: int = 16) -> tuple[int | None, dict[str, int] | None]:
    """Optimum over all 0/1 assignments; (None, None) if infeasible."""
    names = model.binaries
    nv = len(names)
    if nv > max_vars:
        raise InvalidInput(f"{nv} variables exceeds the brute-force limit {max_vars}")
    index = {v: i for i, v in enumerate(names)}
    points = ((np.arange(1 << nv)[:, None] >> np.arange(nv)[None, :]) & 1).astype(np.int64)
    feasible = np.ones(len(points), dtype=bool)
    for c in model.constraints:
        row = np.zeros(nv, dtype=np.int64)
        for coef, var in c.terms:
            row[index[var]] += coef
        lhs = points @ row
        if c.rel == "<=":
            feasible &= lhs <= c.rhs
        elif c.rel == ">=":
            feasible &= lhs >= c.rhs
        else:
            feasible &= lhs == c.rhs
    if not feasible.any():
        return None, None
    obj = np.zeros(nv, dtype=np.int64)
    for coef, var in model.objective:
        obj[index[var]] += coef
    values = points @ obj
    values = np.where(feasible, values, np.iinfo(np.int64).min if model.sense == "max" else np.iinfo(np.int64).max)
    best = int(np.argmax(values) if model.sense == "max" else np.argmin(values))
    return int(values[best]), {v: int(points[best, i]) for i, v in enumerate(names)}
