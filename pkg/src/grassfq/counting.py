"""Exact |Gr(d,n)| over GF(q) by three independent routes."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .field import parse_order
from .grassmannian import check_dims, pivot_sequences

METHODS = ("gaussian", "pivot", "poly")

# coeff_poly streams pivot sequences up to this many, and uses the
# q-Pascal recurrence beyond it.
STREAM_LIMIT = 10**6


def _validate(q: int, n: int, d: int) -> None:
    parse_order(q)
    check_dims(n, d)


def count_gaussian(q: int, n: int, d: int) -> int:
    """prod(q^n - q^i) / prod(q^d - q^i) over i < d, with one exact division."""
    _validate(q, n, d)
    num = den = 1
    for i in range(d):
        num *= q**n - q**i
        den *= q**d - q**i
    quot, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"Gaussian quotient not integral for q={q} n={n} d={d}")
    return quot


def _pivot_chunk(args: tuple[int, int, int, int, int]) -> int:
    q, n, d, start, stop = args
    total = 0
    for idx, s in enumerate(pivot_sequences(n, d)):
        if idx >= stop:
            break
        if idx >= start:
            total += q ** s.exponent
    return total


def count_pivot_sum(q: int, n: int, d: int, workers: int | None = None) -> int:
    """Sum of q**exponent(s) over every pivot sequence s."""
    _validate(q, n, d)
    if not workers or workers < 2:
        return sum(q ** s.exponent for s in pivot_sequences(n, d))
    total = math.comb(n, d)
    step = -(-total // workers)
    chunks = [(q, n, d, lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_pivot_chunk, chunks))


@dataclass(frozen=True)
class QPoly:
    """|Gr(d,n)| = sum(coeffs[l] * q**(m - l)) with m = d(n-d); coeffs[0] leads."""

    n: int
    d: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q: int) -> int:
        return eval_poly(self, q)

    def to_text(self) -> str:
        return f"n={self.n} d={self.d} deg={self.degree}\n" + " ".join(map(str, self.coeffs))

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "coeffs": list(self.coeffs)}


def _coeffs_streamed(n: int, d: int) -> list[int]:
    m = d * (n - d)
    base = d * (d + 1) // 2
    c = [0] * (m + 1)
    for s in pivot_sequences(n, d):
        c[sum(s.s) - base] += 1
    return c


def _coeffs_recurrence(n: int, d: int) -> list[int]:
    # [n, d] = [n-1, d-1] + q^d [n-1, d], coefficients stored lowest power first.
    rows = {0: [1]}
    for nn in range(1, n + 1):
        new = {}
        for dd in range(max(0, d - (n - nn)), min(d, nn) + 1):
            a = rows.get(dd - 1) if dd >= 1 else None
            b = rows.get(dd) if dd <= nn - 1 else None
            out = [0] * (dd * (nn - dd) + 1)
            if a is not None:
                for i, x in enumerate(a):
                    out[i] += x
            if b is not None:
                for i, x in enumerate(b):
                    out[i + dd] += x
            new[dd] = out
        rows = new
    return rows[d][::-1]


def coeff_poly(n: int, d: int, method: str = "auto") -> QPoly:
    """Coefficients c_l = #{pivot sequences s with sum(s) = l + d(d+1)/2}.

    ``method`` is "stream" (bucket every pivot sequence by its sum),
    "recurrence" (q-Pascal rule), or "auto" (stream when affordable).
    """
    check_dims(n, d)
    if method == "auto":
        method = "stream" if math.comb(n, d) <= STREAM_LIMIT else "recurrence"
    if method == "stream":
        coeffs = _coeffs_streamed(n, d)
    elif method == "recurrence":
        coeffs = _coeffs_recurrence(n, d)
    else:
        raise ValueError(f"unknown coefficient method {method!r}")
    return QPoly(n, d, tuple(coeffs))


def eval_poly(p: QPoly, q: int) -> int:
    """Horner evaluation. q = 1 is allowed and gives binomial(n, d)."""
    if q < 1:
        raise ValueError(f"evaluation point must be >= 1, got {q}")
    acc = 0
    for c in p.coeffs:
        acc = acc * q + c
    return acc


def count(q: int, n: int, d: int, method: str = "pivot", workers: int | None = None) -> int:
    if method == "gaussian":
        return count_gaussian(q, n, d)
    if method == "pivot":
        return count_pivot_sum(q, n, d, workers=workers)
    if method == "poly":
        _validate(q, n, d)
        return eval_poly(coeff_poly(n, d), q)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
