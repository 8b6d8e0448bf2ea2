"""h-vector, Hilbert series and a-invariant from the Hilbert function."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ehrhart import binom, hilbert_closed_form
from .presentation import Presentation


def _recursive_difference(values: Sequence[int], k: int) -> list[int]:
    cur = list(values)
    for _ in range(k):
        cur = [cur[j] - (cur[j - 1] if j else 0) for j in range(len(cur))]
    return cur


def difference_transform(values: Sequence[int], k: int) -> list[int]:
    """k-th backward difference of ``values``, zero-extended to negative indices.

    Uses the closed form ``sum_s (-1)^s C(k, s) h(j - s)`` and checks it
    against ``k`` rounds of ``D(h)_j = h_j - h_{j-1}``.
    """
    if k < 0:
        raise ValueError(f"difference order k={k} must be nonnegative")
    out = [
        sum((-1) ** s * binom(k, s) * values[j - s] for s in range(min(k, j) + 1))
        for j in range(len(values))
    ]
    if out != _recursive_difference(values, k):
        raise AssertionError("closed-form and iterated differences disagree")
    return out


@dataclass(frozen=True)
class HilbertReport:
    h_values: tuple[int, ...]
    numerator: tuple[int, ...]
    denominator_exponent: int
    n: int | None = None
    i: int | None = None

    @property
    def h_vector(self) -> tuple[int, ...]:
        return self.numerator

    @property
    def a_invariant(self) -> int:
        return a_invariant(self)

    @property
    def palindromic(self) -> bool:
        return self.numerator == self.numerator[::-1]

    @property
    def multiplicity(self) -> int:
        return sum(self.numerator)

    def coefficient(self, j: int) -> int:
        """Coefficient of ``T^j`` in ``numerator / (1 - T)^d``."""
        d = self.denominator_exponent
        return sum(h * binom(j - s + d - 1, d - 1)
                   for s, h in enumerate(self.numerator) if s <= j)


def h_vector(p: Presentation) -> HilbertReport:
    n = p.n
    values = [hilbert_closed_form(n, p.i, t) for t in range(n)]
    h = difference_transform(values, n)
    if h[0] != 1:
        raise AssertionError(f"h_0 = {h[0]} for {p}")
    if min(h) < 0:
        raise AssertionError(f"negative h-vector entry for {p}: {h}")
    if h[-1] == 0:
        raise AssertionError(f"h_(n-1) vanishes for {p}")
    return HilbertReport(tuple(values), tuple(h), n, n, p.i)


def a_invariant(r: HilbertReport) -> int:
    """Degree of the Hilbert series as a rational function."""
    nonzero = [j for j, c in enumerate(r.numerator) if c]
    if not nonzero:
        raise AssertionError("zero Hilbert series numerator")
    return nonzero[-1] - r.denominator_exponent


@dataclass(frozen=True)
class SeriesCheck:
    ok: bool
    t_max: int
    failing_index: int | None = None
    expected: int | None = None
    got: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def series_eval_check(r: HilbertReport, t_max: int) -> SeriesCheck:
    """Expand the series to ``T^t_max`` and compare with the closed form."""
    if r.n is None or r.i is None:
        raise ValueError("report carries no (n, i) to compare against")
    if t_max < r.denominator_exponent:
        raise ValueError(f"t_max={t_max} must be at least n={r.denominator_exponent}")
    for j in range(t_max + 1):
        want = hilbert_closed_form(r.n, r.i, j)
        got = r.coefficient(j)
        if got != want:
            return SeriesCheck(False, t_max, j, want, got)
    return SeriesCheck(True, t_max)
