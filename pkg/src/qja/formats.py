"""CSV, JSON and text renderings of expansion matrices and nullspaces.

All writers have matching readers; tests check ``read(write(x)) == x``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from qja.expansion import ExpansionMatrix
from qja.linalg import ExactMatrix, nullspace_canonical, rref


@dataclass(frozen=True)
class LabeledMatrix:
    """A matrix with row and column labels, as read back from a file."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    matrix: ExactMatrix


def _entry(x: Fraction) -> str:
    return str(Fraction(x))


def _int_or_str(x: Fraction):
    return x.numerator if x.denominator == 1 else str(x)


# -- matrices -------------------------------------------------------------------

def matrix_to_csv(rows: Sequence[str], cols: Sequence[str], m: ExactMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + list(cols))
    for label, row in zip(rows, m):
        w.writerow([label] + [_entry(x) for x in row])
    return buf.getvalue()


def matrix_from_csv(text: str) -> LabeledMatrix:
    reader = list(csv.reader(io.StringIO(text)))
    header, body = reader[0], reader[1:]
    cols = tuple(header[1:])
    rows = tuple(r[0] for r in body)
    return LabeledMatrix(rows, cols, ExactMatrix(([Fraction(x) for x in r[1:]] for r in body), len(cols)))


def expansion_to_json(e: ExpansionMatrix) -> str:
    data = {
        "degree": e.degree,
        "mode": e.mode.value,
        "rows": e.row_labels(),
        "cols": e.col_labels(),
        "entries": [[_int_or_str(x) for x in row] for row in e.matrix],
    }
    return json.dumps(data, indent=1) + "\n"


def matrix_from_json(text: str) -> LabeledMatrix:
    data = json.loads(text)
    cols = tuple(data["cols"])
    return LabeledMatrix(
        tuple(data["rows"]),
        cols,
        ExactMatrix(([Fraction(x) for x in r] for r in data["entries"]), len(cols)),
    )


def _is_sign_matrix(rows: Sequence[Sequence[Fraction]]) -> bool:
    return all(x in (-1, 0, 1) for r in rows for x in r)


def grid_lines(rows: Sequence[Sequence[Fraction]], compact: bool) -> list[str]:
    """``.`` for zero.  Compact grids use ``+``/``-`` for ±1 with no separators."""
    if compact and _is_sign_matrix(rows):
        sym = {1: "+", -1: "-", 0: "."}
        return ["".join(sym[int(x)] for x in r) for r in rows]
    return [" ".join("." if x == 0 else _entry(x) for x in r) for r in rows]


def parse_grid_lines(lines: Sequence[str], compact: bool) -> list[list[Fraction]]:
    sym = {"+": Fraction(1), "-": Fraction(-1), ".": Fraction(0)}
    out = []
    for ln in lines:
        ln = ln.strip()
        if not ln:
            continue
        if compact and " " not in ln:
            out.append([sym[ch] for ch in ln])
        else:
            out.append([Fraction(0) if t == "." else Fraction(t) for t in ln.split()])
    return out


def expansion_to_text(e: ExpansionMatrix) -> str:
    return "\n".join(grid_lines(list(e.matrix), compact=e.degree >= 4)) + "\n"


# -- row canonical form and nullspace --------------------------------------------------

@dataclass(frozen=True)
class NullspaceResult:
    degree: int
    mode: str
    cols: tuple[str, ...]
    rank: int
    pivots: tuple[int, ...]
    rcf: tuple[tuple[Fraction, ...], ...]
    vectors: tuple[tuple[Fraction, ...], ...]

    @property
    def nullity(self) -> int:
        return len(self.vectors)


def nullspace_result(e: ExpansionMatrix) -> NullspaceResult:
    r, pivots = rref(e.matrix)
    return NullspaceResult(
        e.degree,
        e.mode.value,
        tuple(e.col_labels()),
        len(pivots),
        tuple(pivots),
        tuple(r.row(i) for i in range(len(pivots))),
        tuple(tuple(v) for v in nullspace_canonical(e.matrix)),
    )


def nullspace_to_json(n: NullspaceResult) -> str:
    data = {
        "degree": n.degree,
        "mode": n.mode,
        "cols": list(n.cols),
        "rank": n.rank,
        "nullity": n.nullity,
        "pivots": list(n.pivots),
        "rcf": [[_entry(x) for x in r] for r in n.rcf],
        "nullspace": [[_entry(x) for x in v] for v in n.vectors],
    }
    return json.dumps(data, indent=1) + "\n"


def nullspace_from_json(text: str) -> NullspaceResult:
    d = json.loads(text)
    return NullspaceResult(
        d["degree"],
        d["mode"],
        tuple(d["cols"]),
        d["rank"],
        tuple(d["pivots"]),
        tuple(tuple(Fraction(x) for x in r) for r in d["rcf"]),
        tuple(tuple(Fraction(x) for x in v) for v in d["nullspace"]),
    )


def nullspace_to_csv(n: NullspaceResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + list(n.cols))
    for i, v in enumerate(n.vectors, 1):
        w.writerow([f"v{i}"] + [_entry(x) for x in v])
    return buf.getvalue()


def nullspace_to_text(n: NullspaceResult) -> str:
    """Row canonical form, a rule, then the nullspace basis."""
    compact = n.degree >= 4
    upper = grid_lines(n.rcf, compact)
    lower = grid_lines(n.vectors, compact)
    width = max((len(s) for s in upper + lower), default=0)
    return "\n".join(upper + ["-" * width] + lower) + "\n"
