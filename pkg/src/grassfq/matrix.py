"""Dense exact matrices over a finite field and row-reduced echelon forms."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch
from .field import FieldSpec, field_of_order


@dataclass(frozen=True)
class Mat:
    """Immutable ``rows x cols`` matrix; ``entries`` is row-major."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        q = self.field.q
        for x in self.entries:
            if not 0 <= x < q:
                raise ValueError(f"entry {x} is not an element code of {self.field!r}")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence[int]], cols: int | None = None) -> Mat:
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatch("column count is required for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch(f"row of length {len(r)} in a matrix with {cols} columns")
        return cls(field, len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Mat:
        return cls.from_rows(field, ([int(i == j) for j in range(n)] for i in range(n)), n)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> Mat:
        return cls(field, rows, cols, (0,) * (rows * cols))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def __str__(self):
        return format_matrix(self)


@dataclass(frozen=True)
class RrefResult:
    rref: Mat
    rank: int
    pivots: tuple[int, ...]  # 1-based leading columns, row order


def _axpy(f: FieldSpec, target: list[int], c: int, src: Sequence[int], start: int = 0) -> None:
    """target -= c * src, in place, from column ``start`` on."""
    for j in range(start, len(target)):
        if src[j]:
            target[j] = f.sub(target[j], f.mul(c, src[j]))


def rref(a: Mat) -> RrefResult:
    f = a.field
    m = [list(r) for r in a.to_rows()]
    pivots: list[int] = []
    r = 0
    for c in range(a.cols):
        if r == a.rows:
            break
        found = next((i for i in range(r, a.rows) if m[i][c]), None)
        if found is None:
            continue
        m[r], m[found] = m[found], m[r]
        lead = m[r][c]
        if lead != 1:
            s = f.inv(lead)
            m[r] = [f.mul(s, x) for x in m[r]]
        for i in range(r + 1, a.rows):
            if m[i][c]:
                _axpy(f, m[i], m[i][c], m[r], c)
        pivots.append(c + 1)
        r += 1
    # Backward pass: clear each pivot column above its pivot.
    for pr, pc in enumerate(pivots):
        c = pc - 1
        for i in range(pr):
            if m[i][c]:
                _axpy(f, m[i], m[i][c], m[pr], c)
    out = Mat(f, a.rows, a.cols, tuple(x for row in m for x in row))
    return RrefResult(out, len(pivots), tuple(pivots))


def leading_column(row: Sequence[int]) -> int | None:
    """1-based column of the first nonzero entry, or None for a zero row."""
    for j, x in enumerate(row):
        if x:
            return j + 1
    return None


def is_rref(a: Mat) -> bool:
    leads = [leading_column(r) for r in a.to_rows()]
    seen_zero = False
    prev = 0
    for i, lead in enumerate(leads):
        if lead is None:
            seen_zero = True
            continue
        if seen_zero or lead <= prev or a[i, lead - 1] != 1:
            return False
        prev = lead
        if any(a[h, lead - 1] for h in range(a.rows) if h != i):
            return False
    return True


def rank(a: Mat) -> int:
    return rref(a).rank


def coordinates(r: RrefResult, v: Sequence[int]) -> tuple[int, ...] | None:
    """Coordinates of ``v`` in the echelon basis, or None if ``v`` is outside the row space.

    Inside the row space the coordinates are just the entries of ``v`` at the
    pivot columns, so the only work is checking the reconstruction.
    """
    m = r.rref
    if len(v) != m.cols:
        raise DimensionMismatch(f"vector of length {len(v)} against {m.cols} columns")
    f = m.field
    coords = tuple(v[k - 1] for k in r.pivots)
    acc = [0] * m.cols
    for i, c in enumerate(coords):
        if c:
            row = m.row(i)
            for j in range(m.cols):
                if row[j]:
                    acc[j] = f.add(acc[j], f.mul(c, row[j]))
    if any(x != y for x, y in zip(acc, v)):
        return None
    return coords


def row_space_contains(r: RrefResult, v: Sequence[int]) -> bool:
    return coordinates(r, v) is not None


def matmul(a: Mat, b: Mat) -> Mat:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    f = a.field
    out = []
    for i in range(a.rows):
        for j in range(b.cols):
            acc = 0
            for t in range(a.cols):
                x = a[i, t]
                if x:
                    acc = f.add(acc, f.mul(x, b[t, j]))
            out.append(acc)
    return Mat(f, a.rows, b.cols, tuple(out))


# -- text / JSON formats --

def format_matrix(a: Mat) -> str:
    """One row per line, codes separated by single spaces. Empty matrices give ''."""
    return "\n".join(" ".join(str(x) for x in row) for row in a.to_rows())


def parse_matrix(text: str, field: FieldSpec) -> Mat:
    """Parse the line format; a blank line or end of input terminates the matrix."""
    rows = []
    for line in text.splitlines():
        if not line.strip():
            if rows:
                break
            continue
        rows.append([int(tok) for tok in line.split()])
    if not rows:
        return Mat(field, 0, 0, ())
    return Mat.from_rows(field, rows)


def matrix_to_json(a: Mat) -> dict:
    return {"q": a.field.q, "rows": a.rows, "cols": a.cols,
            "entries": [list(r) for r in a.to_rows()]}


def matrix_from_json(obj: dict | str, field: FieldSpec | None = None) -> Mat:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if field is None:
        field = field_of_order(int(obj["q"]))
    elif "q" in obj and int(obj["q"]) != field.q:
        raise FieldMismatch(f"matrix declares q={obj['q']} but field has q={field.q}")
    rows = obj["entries"]
    cols = obj.get("cols")
    m = Mat.from_rows(field, rows, cols)
    if "rows" in obj and obj["rows"] != m.rows:
        raise DimensionMismatch(f"declared {obj['rows']} rows, found {m.rows}")
    return m
