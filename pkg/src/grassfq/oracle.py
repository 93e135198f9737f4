"""Brute-force ground truth for small Grassmannians.

Nothing here touches row reduction, pivot sequences or the counting formulas:
subspaces are built as explicit sets of vectors using field arithmetic only,
and a tuple of vectors counts as independent when its q^d linear combinations
are pairwise distinct.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .counting import coeff_poly, count_gaussian, count_pivot_sum, eval_poly
from .errors import BudgetExceeded, InvalidDimension
from .field import FieldSpec
from .grassmannian import canonicalize, enumerate_grassmannian
from .matrix import Mat

DEFAULT_BUDGET = 2**24
BUDGET_ENV = "GRASSFQ_ORACLE_BUDGET"

Vector = tuple[int, ...]
Signature = tuple[int, ...]


def resolve_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def encode_vector(v: Sequence[int], q: int) -> int:
    return sum(c * q**i for i, c in enumerate(v))


def decode_vector(code: int, q: int, n: int) -> Vector:
    out = []
    for _ in range(n):
        code, r = divmod(code, q)
        out.append(r)
    return tuple(out)


def _combine(f: FieldSpec, coeffs: Sequence[int], vectors: Sequence[Vector], n: int) -> Vector:
    acc = [0] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for j in range(n):
                acc[j] = f.add(acc[j], f.mul(c, v[j]))
    return tuple(acc)


def all_combinations(f: FieldSpec, vectors: Sequence[Vector], n: int) -> list[Vector]:
    """All q^len(vectors) linear combinations, with repeats."""
    return [_combine(f, cs, vectors, n)
            for cs in itertools.product(range(f.q), repeat=len(vectors))]


def signature(f: FieldSpec, vectors: Sequence[Vector], n: int) -> Signature:
    """Sorted codes of every vector in the span of ``vectors``."""
    return tuple(sorted({encode_vector(v, f.q) for v in all_combinations(f, vectors, n)}))


@dataclass
class SubspaceSet:
    field: FieldSpec
    n: int
    d: int
    members: set[Signature] = dc_field(default_factory=set)
    # One spanning d-tuple per member, kept for the bijection check.
    bases: dict[Signature, tuple[Vector, ...]] = dc_field(default_factory=dict)

    def __len__(self):
        return len(self.members)

    def add(self, sig: Signature, basis: tuple[Vector, ...]) -> None:
        if sig not in self.members:
            self.members.add(sig)
            self.bases[sig] = basis


def _check_budget(f: FieldSpec, n: int, d: int, budget: int | None) -> None:
    if n < 0 or not 0 <= d <= n:
        raise InvalidDimension(f"need 0 <= d <= n, got n={n} d={d}")
    limit = resolve_budget(budget)
    raw = f.q ** (d * n)
    if raw > limit:
        raise BudgetExceeded(f"oracle would scan q^(dn) = {raw} tuples, above the budget {limit}")


def brute_force_subspaces(f: FieldSpec, n: int, d: int, budget: int | None = None,
                          exhaustive: bool = False) -> SubspaceSet:
    """Every d-dimensional subspace of F^n as a set of vector codes.

    With ``exhaustive=True`` every one of the q^(dn) d-tuples is tested
    literally. The default grows tuples one vector at a time and drops a
    prefix as soon as it is dependent or spans an already-seen space; it
    produces the same set, only much faster.
    """
    _check_budget(f, n, d, budget)
    out = SubspaceSet(f, n, d)
    vectors = list(itertools.product(range(f.q), repeat=n))
    if exhaustive:
        full = f.q ** d
        for tup in itertools.product(vectors, repeat=d):
            combos = all_combinations(f, tup, n)
            if len(set(combos)) == full:
                out.add(tuple(sorted(encode_vector(v, f.q) for v in combos)), tup)
        return out

    # level: span (as a frozenset of vectors) -> a spanning tuple
    level: dict[frozenset, tuple[Vector, ...]] = {frozenset([(0,) * n]): ()}
    for _ in range(d):
        nxt: dict[frozenset, tuple[Vector, ...]] = {}
        for sp, basis in level.items():
            for v in vectors:
                if v in sp:
                    continue
                grown = frozenset(
                    tuple(f.add(u[j], f.mul(c, v[j])) for j in range(n))
                    for u in sp for c in range(f.q))
                if grown not in nxt:
                    nxt[grown] = basis + (v,)
        level = nxt
    for sp, basis in level.items():
        out.add(tuple(sorted(encode_vector(v, f.q) for v in sp)), basis)
    return out


@dataclass
class CrossCheckReport:
    q: int
    n: int
    d: int
    oracle: int
    gaussian: int
    pivot: int
    poly: int
    bijection: bool
    notes: list[str] = dc_field(default_factory=list)

    @property
    def counts_agree(self) -> bool:
        return self.oracle == self.gaussian == self.pivot == self.poly

    @property
    def passed(self) -> bool:
        return self.counts_agree and self.bijection

    def to_text(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = (f"{status} q={self.q} n={self.n} d={self.d}: "
                f"{self.oracle} = {self.gaussian} = {self.pivot} = {self.poly} "
                f"(oracle = gaussian = pivot = poly), "
                f"bijection {'ok' if self.bijection else 'fail'}")
        return "\n".join([line] + [f"  {note}" for note in self.notes])

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "d": self.d, "oracle": self.oracle,
                "gaussian": self.gaussian, "pivot": self.pivot, "poly": self.poly,
                "bijection": "ok" if self.bijection else "fail"}

    def to_json_text(self) -> str:
        return json.dumps(self.to_json())


def cross_check(f: FieldSpec, n: int, d: int, budget: int | None = None) -> CrossCheckReport:
    """Compare the oracle against all counting routes and the canonical-form bijection.

    Mismatches are reported, never raised.
    """
    oracle = brute_force_subspaces(f, n, d, budget=budget)
    q = f.q
    notes = []

    canon_of = {sig: canonicalize(f, Mat.from_rows(f, basis, n))
                for sig, basis in oracle.bases.items()}
    images = set(canon_of.values())
    if len(images) != len(canon_of):
        notes.append("canonicalize is not injective on oracle subspaces")
    for sig, w in canon_of.items():
        rows = [tuple(r) for r in w.canon.rows.to_rows()]
        if w.dim != d or signature(f, rows, n) != sig:
            notes.append(f"canonical form does not span oracle member {sig[:4]}...")
            break
    enumerated = list(enumerate_grassmannian(f, n, d, force=True))
    if len(set(enumerated)) != len(enumerated):
        notes.append("enumerate_grassmannian yields duplicates")
    if set(enumerated) != images:
        notes.append(f"canonical images ({len(images)}) differ from enumeration ({len(enumerated)})")

    return CrossCheckReport(
        q=q, n=n, d=d,
        oracle=len(oracle),
        gaussian=count_gaussian(q, n, d),
        pivot=count_pivot_sum(q, n, d),
        poly=eval_poly(coeff_poly(n, d), q),
        bijection=not notes,
        notes=notes,
    )
