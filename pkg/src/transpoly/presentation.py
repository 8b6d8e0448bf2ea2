"""Transversal presentations of the cyclic family and their base sets.

A presentation is fixed by ``(n, i, shift)``.  With ``shift = 0`` the member
sets are ``i`` copies of ``[n]``, then ``n - 1 - i`` copies of
``[n] \\ [i]``, then one more ``[n]``.  A nonzero shift relabels positions
and the removed block through the cycle ``m -> m + 1 (mod n)``.

Vectors are plain tuples of ints throughout; coordinates are 0-based in
storage while set elements and cycle indices are 1-based, as in the usual
``[n] = {1, ..., n}`` notation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError, ParameterError, PreconditionError

Vector = tuple[int, ...]


def cycle_apply(n: int, t: int, m: int) -> int:
    """Return ``sigma^t(m)`` for the n-cycle ``sigma = (1 2 ... n)``."""
    if not 1 <= m <= n:
        raise DomainError(f"index m={m} outside [1, {n}]")
    if t < 0:
        raise DomainError(f"shift t={t} must be nonnegative")
    return (m + t - 1) % n + 1


def shifted_block(n: int, size: int, t: int) -> frozenset[int]:
    """``sigma^t[size] = {sigma^t(1), ..., sigma^t(size)}``."""
    return frozenset(cycle_apply(n, t, m) for m in range(1, size + 1))


def permute_vector(v: Sequence[int], t: int) -> Vector:
    """Move coordinate ``m`` to position ``sigma^t(m)``."""
    n = len(v)
    out = [0] * n
    for m in range(1, n + 1):
        out[cycle_apply(n, t, m) - 1] = v[m - 1]
    return tuple(out)


@dataclass(frozen=True)
class Presentation:
    n: int
    i: int
    shift: int = 0

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ParameterError(f"n >= 3 violated (n={self.n})")
        if not 1 <= self.i <= self.n - 2:
            raise ParameterError(f"1 <= i <= n-2 violated (n={self.n}, i={self.i})")
        if not 0 <= self.shift <= self.n - 1:
            raise ParameterError(
                f"0 <= shift <= n-1 violated (n={self.n}, shift={self.shift})"
            )

    @property
    def block(self) -> frozenset[int]:
        """The coordinates whose total is capped at ``i + 1``."""
        return shifted_block(self.n, self.i, self.shift)

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.block

    def sets_by_label(self) -> dict[int, frozenset[int]]:
        """Member sets keyed by the label ``k`` of ``A_{sigma^t(k)}``."""
        full = frozenset(range(1, self.n + 1))
        rest = self.complement
        return {k: (rest if self.i + 1 <= k <= self.n - 1 else full)
                for k in range(1, self.n + 1)}

    def member_sets(self) -> tuple[frozenset[int], ...]:
        """Member sets in positional order ``1..n``."""
        out: list[frozenset[int]] = [frozenset()] * self.n
        for k, s in self.sets_by_label().items():
            out[cycle_apply(self.n, self.shift, k) - 1] = s
        return tuple(out)


def build_presentation(n: int, i: int, t: int = 0) -> Presentation:
    return Presentation(n, i, t)


@dataclass(frozen=True)
class BaseSet:
    """Sorted, deduplicated exponent vectors of the generating monomials."""

    elements: tuple[Vector, ...]
    presentation: Presentation | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.elements)

    def __contains__(self, v: object) -> bool:
        return v in set(self.elements)

    @property
    def degree(self) -> int:
        return sum(self.elements[0])


def transversal_base(sets: Sequence[Iterable[int]], n: int) -> tuple[Vector, ...]:
    """All distinct ``sum_k e_{j_k}`` with ``j_k`` drawn from ``sets[k]``."""
    seen: set[Vector] = set()
    for choice in itertools.product(*[sorted(s) for s in sets]):
        v = [0] * n
        for j in choice:
            v[j - 1] += 1
        seen.add(tuple(v))
    return tuple(sorted(seen))


def compositions(total: int, parts: int) -> Iterator[Vector]:
    """Nonnegative integer vectors of length ``parts`` summing to ``total``.

    Stars and bars; yields in lexicographic order of the bar positions.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def constrained_base(p: Presentation) -> tuple[Vector, ...]:
    """Base set described by inequalities: ``|a| = n`` and block sum ``<= i + 1``."""
    idx = [k - 1 for k in sorted(p.block)]
    return tuple(sorted(
        a for a in compositions(p.n, p.n) if sum(a[k] for k in idx) <= p.i + 1
    ))


@lru_cache(maxsize=256)
def enumerate_base(p: Presentation) -> BaseSet:
    """Enumerate the base set by the direct product over member sets.

    The result is checked against the inequality description before it is
    returned; a mismatch means the enumeration itself is broken.
    """
    elems = transversal_base(p.member_sets(), p.n)
    if elems != constrained_base(p):
        raise AssertionError(f"product and constraint enumerations differ for {p}")
    return BaseSet(elems, p)


@dataclass(frozen=True)
class ExchangeResult:
    ok: bool
    witness: tuple[Vector, Vector, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_polymatroid_base(b: BaseSet | Iterable[Sequence[int]]) -> ExchangeResult:
    """Check the symmetric exchange axiom of a discrete polymatroid base.

    For all ``u, v`` in the set and every ``i`` with ``u_i > v_i`` there must be
    ``j`` with ``u_j < v_j`` and ``u + e_j - e_i`` in the set.  The witness is
    ``(u, v, i)`` with ``i`` 1-based.
    """
    elems = [tuple(v) for v in (b.elements if isinstance(b, BaseSet) else b)]
    if not elems:
        raise PreconditionError("empty vector set")
    if len({sum(v) for v in elems}) != 1:
        raise PreconditionError("vectors have unequal coordinate sums")
    members = set(elems)
    n = len(elems[0])
    arr = np.array(elems, dtype=np.int64)
    for u in elems:
        ua = np.array(u, dtype=np.int64)
        for i in range(n):
            need = arr[:, i] < u[i]
            if not need.any():
                continue
            # targets j for which u - e_i + e_j is in the set
            js = [j for j in range(n) if j != i
                  and tuple(u[k] - (k == i) + (k == j) for k in range(n)) in members]
            if js:
                covered = (arr[:, js] > ua[js]).any(axis=1)
                bad = np.flatnonzero(need & ~covered)
            else:
                bad = np.flatnonzero(need)
            if bad.size:
                return ExchangeResult(False, (u, elems[bad[0]], i + 1))
    return ExchangeResult(True)
