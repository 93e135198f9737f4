"""Subspaces of F^n as reduced echelon forms, stratified by pivot columns.

A d-dimensional subspace of F^n is stored as the d nonzero rows of its unique
row-reduced echelon form. The forms with a fixed pivot sequence s = (s_1 < ...
< s_d) make up one stratum, and that stratum has exactly q**exponent(s) members,
where exponent(s) = d(n-d) + d(d+1)/2 - sum(s) is the number of free entries.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DimensionMismatch, EnumerationTooLarge, FieldMismatch, InvalidDimension
from .field import FieldSpec, parse_order
from .matrix import Mat, RrefResult, is_rref, leading_column, row_space_contains, rref

DEFAULT_ENUM_CAP = 10**7
ENUM_CAP_ENV = "GRASSFQ_ENUM_CAP"


def resolve_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(ENUM_CAP_ENV)
    return int(env) if env else DEFAULT_ENUM_CAP


def check_dims(n: int, d: int) -> None:
    if n < 0 or not 0 <= d <= n:
        raise InvalidDimension(f"need 0 <= d <= n, got n={n} d={d}")


@dataclass(frozen=True, order=True)
class PivotSeq:
    n: int
    d: int
    s: tuple[int, ...]

    def __post_init__(self):
        check_dims(self.n, self.d)
        if len(self.s) != self.d:
            raise InvalidDimension(f"pivot sequence {self.s} does not have length {self.d}")
        prev = 0
        for i, si in enumerate(self.s, start=1):
            if not prev < si <= self.n - self.d + i:
                raise InvalidDimension(f"{self.s} is not a pivot sequence for n={self.n}")
            prev = si

    @property
    def exponent(self) -> int:
        """Number of free entries in a form with these pivots."""
        n, d = self.n, self.d
        return d * (n - d) + d * (d + 1) // 2 - sum(self.s)

    def free_positions(self) -> list[tuple[int, int]]:
        """0-based (row, col) of the free entries, row-major.

        Row i has a free entry in every column right of its pivot that is not
        itself a pivot column: n - d - (s_i - i) of them.
        """
        pivot_cols = set(self.s)
        return [(i, c - 1)
                for i, si in enumerate(self.s)
                for c in range(si + 1, self.n + 1)
                if c not in pivot_cols]


def pivot_sequences(n: int, d: int) -> Iterator[PivotSeq]:
    """All pivot sequences for rank d in F^n, lexicographically; binomial(n, d) of them."""
    check_dims(n, d)
    return (PivotSeq(n, d, s) for s in itertools.combinations(range(1, n + 1), d))


def stratum_size(s: PivotSeq, q: int) -> int:
    parse_order(q)
    return q ** s.exponent


@dataclass(frozen=True)
class EchelonForm:
    """A rank-d reduced echelon form kept as its d nonzero rows (a d x n matrix)."""

    field: FieldSpec
    n: int
    d: int
    rows: Mat
    pivots: PivotSeq

    @classmethod
    def from_matrix(cls, m: Mat) -> EchelonForm:
        """Wrap a matrix that must already be in reduced form with no zero rows."""
        if not is_rref(m):
            raise ValueError("matrix is not in row-reduced echelon form")
        leads = [leading_column(r) for r in m.to_rows()]
        if None in leads:
            raise ValueError("echelon form must not contain zero rows")
        return cls(m.field, m.cols, m.rows, m, PivotSeq(m.cols, m.rows, tuple(leads)))

    def padded(self) -> Mat:
        """The square n x n form: these rows followed by n - d zero rows."""
        return Mat(self.field, self.n, self.n,
                   self.rows.entries + (0,) * (self.n * (self.n - self.d)))

    def as_rref(self) -> RrefResult:
        return RrefResult(self.rows, self.d, self.pivots.s)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n; equal iff the canonical forms agree entry by entry."""

    canon: EchelonForm

    @property
    def field(self) -> FieldSpec:
        return self.canon.field

    @property
    def n(self) -> int:
        return self.canon.n

    @property
    def dim(self) -> int:
        return self.canon.d

    def __contains__(self, v: Sequence[int]) -> bool:
        return subspace_contains(self, v)


def _stratum_forms(f: FieldSpec, s: PivotSeq) -> Iterator[EchelonForm]:
    n, d, q = s.n, s.d, f.q
    template = [0] * (d * n)
    for i, si in enumerate(s.s):
        template[i * n + si - 1] = 1
    slots = [i * n + c for i, c in s.free_positions()]
    for values in itertools.product(range(q), repeat=len(slots)):
        entries = template[:]
        for idx, v in zip(slots, values):
            entries[idx] = v
        yield EchelonForm(f, n, d, Mat(f, d, n, tuple(entries)), s)


def _guard(size: int, cap: int | None, force: bool, what: str) -> None:
    limit = resolve_cap(cap)
    if not force and size > limit:
        raise EnumerationTooLarge(
            f"{what} has {size} members, above the enumeration cap {limit}; use force to override")


def enumerate_stratum(f: FieldSpec, s: PivotSeq, cap: int | None = None,
                      force: bool = False) -> Iterator[EchelonForm]:
    """Every echelon form with pivot columns exactly ``s``.

    Free entries are filled row-major, counting in base q with the last free
    entry varying fastest. The size check happens before anything is yielded.
    """
    _guard(stratum_size(s, f.q), cap, force, f"stratum {s.s}")
    return _stratum_forms(f, s)


def grassmannian_size(q: int, n: int, d: int) -> int:
    return sum(stratum_size(s, q) for s in pivot_sequences(n, d))


def enumerate_grassmannian(f: FieldSpec, n: int, d: int, cap: int | None = None,
                           force: bool = False) -> Iterator[Subspace]:
    """Each d-dimensional subspace of F^n once, stratum by stratum in pivot order."""
    check_dims(n, d)
    _guard(grassmannian_size(f.q, n, d), cap, force, f"Gr({d},{n}) over {f!r}")
    return (Subspace(ef) for s in pivot_sequences(n, d) for ef in _stratum_forms(f, s))


def _stratum_rows(args: tuple[FieldSpec, PivotSeq]) -> list[tuple[int, ...]]:
    f, s = args
    return [ef.rows.entries for ef in _stratum_forms(f, s)]


def enumerate_grassmannian_parallel(f: FieldSpec, n: int, d: int, workers: int,
                                    cap: int | None = None, force: bool = False) -> Iterator[Subspace]:
    """Like :func:`enumerate_grassmannian`, with strata built in worker processes.

    Strata are reassembled in pivot order, so the output order is unchanged;
    the cost is holding one whole stratum in memory at a time.
    """
    check_dims(n, d)
    _guard(grassmannian_size(f.q, n, d), cap, force, f"Gr({d},{n}) over {f!r}")

    def gen():
        seqs = list(pivot_sequences(n, d))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for s, block in zip(seqs, pool.map(_stratum_rows, [(f, s) for s in seqs])):
                for entries in block:
                    yield Subspace(EchelonForm(f, n, d, Mat(f, d, n, entries), s))

    return gen()


def canonicalize(f: FieldSpec, a: Mat) -> Subspace:
    """The subspace spanned by the rows of ``a``, in canonical form."""
    if a.field != f:
        raise FieldMismatch(f"matrix over {a.field!r}, expected {f!r}")
    res = rref(a)
    rows = Mat(f, res.rank, a.cols, res.rref.entries[:res.rank * a.cols])
    return Subspace(EchelonForm(f, a.cols, res.rank, rows, PivotSeq(a.cols, res.rank, res.pivots)))


def span(f: FieldSpec, rows: Sequence[Sequence[int]], n: int | None = None) -> Subspace:
    return canonicalize(f, Mat.from_rows(f, rows, n))


def subspace_contains(w: Subspace, v: Sequence[int]) -> bool:
    if len(v) != w.n:
        raise DimensionMismatch(f"vector of length {len(v)} in F^{w.n}")
    return row_space_contains(w.canon.as_rref(), v)


def subspace_equal(w1: Subspace, w2: Subspace) -> bool:
    if w1.field != w2.field:
        raise FieldMismatch(f"{w1.field!r} vs {w2.field!r}")
    if w1.n != w2.n:
        raise DimensionMismatch(f"ambient dimensions {w1.n} and {w2.n} differ")
    return w1.canon.rows == w2.canon.rows


def dim(w: Subspace) -> int:
    return w.dim
