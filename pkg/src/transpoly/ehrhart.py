"""The lattice spanned by the base set and lattice-point counts of dilates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import ParameterError, PreconditionError, ResourceLimitError
from .monoid import monoid_strata
from .presentation import BaseSet, Presentation, Vector, compositions, enumerate_base

DEFAULT_COMPOSITION_LIMIT = 10**8


def binom(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ParameterError(f"binom({a}, {b}) needs nonnegative arguments")
    return math.comb(a, b)


def hermite_form(vectors: Iterable[Sequence[int]], dim: int) -> list[Vector]:
    """Row Hermite normal form of the integer span of ``vectors``.

    Pivots are positive and entries above a pivot are reduced into
    ``[0, pivot)``, so equal lattices give equal output.
    """
    rows = [list(v) for v in vectors if any(v)]
    out: list[list[int]] = []
    for col in range(dim):
        live = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        piv = live[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        for k, r in enumerate(out):
            q = r[col] // piv[col]
            if q:
                out[k] = [x - q * y for x, y in zip(r, piv)]
        out.append(piv)
        rows = rest
    return [tuple(r) for r in out]


def _pivots(basis: Sequence[Vector]) -> list[int]:
    return [next(c for c, x in enumerate(r) if x) for r in basis]


@dataclass(frozen=True)
class LatticeDescription:
    basis: tuple[Vector, ...]
    dim: int
    modulus: int | None = None  # m when the lattice is {x : m | sum(x)}

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, x: Sequence[int]) -> bool:
        if len(x) != self.dim:
            return False
        w = list(x)
        for row, c in zip(self.basis, _pivots(self.basis)):
            if w[c] % row[c]:
                return False
            q = w[c] // row[c]
            if q:
                w = [a - q * b for a, b in zip(w, row)]
        return not any(w)

    def contains_many(self, points: np.ndarray) -> np.ndarray:
        """Vectorised :meth:`contains` over the rows of an int64 array."""
        w = np.array(points, dtype=np.int64, copy=True)
        ok = np.ones(len(w), dtype=bool)
        for row, c in zip(self.basis, _pivots(self.basis)):
            r = np.array(row, dtype=np.int64)
            ok &= (w[:, c] % r[c]) == 0
            w -= np.outer(w[:, c] // r[c], r)
        return ok & ~w.any(axis=1)


def sum_divisibility_lattice(m: int, dim: int) -> tuple[Vector, ...]:
    """HNF basis of ``{x in Z^dim : m | sum(x)}``."""
    gens = [tuple(1 if c == k else (-1 if c == dim - 1 else 0) for c in range(dim))
            for k in range(dim - 1)]
    gens.append(tuple(m if c == dim - 1 else 0 for c in range(dim)))
    return tuple(hermite_form(gens, dim))


def lattice_of(a: BaseSet | Iterable[Sequence[int]]) -> LatticeDescription:
    """Integer span of the exponent vectors.

    For a :class:`BaseSet` coming from a presentation, the span is required
    to be ``{x : n | sum(x)}``.
    """
    elems = [tuple(v) for v in a]
    if not elems:
        raise PreconditionError("empty generator set")
    dim = len(elems[0])
    basis = tuple(hermite_form(elems, dim))
    degrees = {sum(v) for v in elems}
    modulus = None
    if len(degrees) == 1:
        m = degrees.pop()
        if m > 0 and basis == sum_divisibility_lattice(m, dim):
            modulus = m
    desc = LatticeDescription(basis, dim, modulus)
    if isinstance(a, BaseSet) and a.presentation is not None and modulus != a.presentation.n:
        raise AssertionError(f"lattice of {a.presentation} is not {{x : n | sum(x)}}")
    return desc


@lru_cache(maxsize=None)
def family_lattice(p: Presentation) -> LatticeDescription:
    return lattice_of(enumerate_base(p))


@dataclass(frozen=True)
class DilatedPolytope:
    """``t * conv(A)``: coordinates >= 0, block sum <= (i+1)t, total n*t."""

    p: Presentation
    t: int

    def contains(self, x: Sequence[int]) -> bool:
        p = self.p
        return (len(x) == p.n and min(x) >= 0 and sum(x) == p.n * self.t
                and sum(x[k - 1] for k in p.block) <= (p.i + 1) * self.t)


def _composition_count(total: int, parts: int) -> int:
    return math.comb(total + parts - 1, parts - 1)


def dilate_points(p: Presentation, t: int, limit: int = DEFAULT_COMPOSITION_LIMIT) -> list[Vector]:
    """Points of ``Z A`` in ``t * P``, lexicographically sorted."""
    if t < 0:
        raise ParameterError(f"dilation t={t} must be nonnegative")
    if _composition_count(p.n * t, p.n) > limit:
        raise ResourceLimitError(f"more than {limit} compositions of {p.n * t}")
    poly = DilatedPolytope(p, t)
    cand = [a for a in compositions(p.n * t, p.n) if poly.contains(a)]
    if not cand:
        return []
    lattice = family_lattice(p)
    keep = lattice.contains_many(np.array(cand, dtype=np.int64))
    return sorted(a for a, k in zip(cand, keep) if k)


def count_points_bruteforce(p: Presentation, t: int,
                            limit: int = DEFAULT_COMPOSITION_LIMIT) -> int:
    return len(dilate_points(p, t, limit))


def hilbert_closed_form(n: int, i: int, t: int) -> int:
    """``sum_{k=0}^{(i+1)t} C(k+i-1, k) * C(nt-k+n-i-1, nt-k)``."""
    if t < 0:
        raise ParameterError(f"t={t} must be nonnegative")
    nt = n * t
    return sum(binom(k + i - 1, k) * binom(nt - k + n - i - 1, nt - k)
               for k in range((i + 1) * t + 1))


@dataclass(frozen=True)
class NormalityCheck:
    """Per-degree comparison of the monoid stratum with ``Z A ∩ tP``."""

    bound: int
    monoid_counts: tuple[int, ...]
    lattice_counts: tuple[int, ...]
    first_mismatch: int | None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def normality_check(p: Presentation, bound: int) -> NormalityCheck:
    """Compare ``N A`` and ``Z A ∩ tP`` as point sets for ``t <= bound``."""
    strata = monoid_strata(enumerate_base(p).elements, bound)
    mcounts, lcounts = [], []
    mismatch = None
    for t in range(bound + 1):
        mono = sorted(map(tuple, strata.points(t).tolist()))
        latt = dilate_points(p, t)
        mcounts.append(len(mono))
        lcounts.append(len(latt))
        if mismatch is None and mono != latt:
            mismatch = t
    return NormalityCheck(bound, tuple(mcounts), tuple(lcounts), mismatch)
