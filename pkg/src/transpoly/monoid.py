"""Breadth-first closure of a homogeneous affine monoid, degree by degree.

Points are packed into int64 codes (base ``B`` digits, one per coordinate)
so that a degree stratum is a sorted 1-d array and Minkowski sums with the
generators are plain integer additions.  Digits never carry because every
coordinate at degree ``<= T`` is bounded by ``T * max generator entry``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import PreconditionError, ResourceLimitError

MAX_PAIRS = 5 * 10**7


@dataclass(frozen=True)
class Codec:
    dim: int
    base: int

    @classmethod
    def for_bound(cls, dim: int, max_entry: int) -> "Codec":
        base = max_entry + 2
        if base ** dim >= 2**62:
            raise ResourceLimitError(f"cannot pack {dim} coordinates below {base} into int64")
        return cls(dim, base)

    @property
    def weights(self) -> np.ndarray:
        return self.base ** np.arange(self.dim - 1, -1, -1, dtype=np.int64)

    def encode(self, points: np.ndarray) -> np.ndarray:
        return np.asarray(points, dtype=np.int64).reshape(-1, self.dim) @ self.weights

    def decode(self, codes: np.ndarray) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[:, None] // self.weights) % self.base


@dataclass
class Strata:
    """Monoid points split by degree; ``codes[t]`` is sorted and unique."""

    codec: Codec
    generators: np.ndarray
    codes: list[np.ndarray]

    @property
    def bound(self) -> int:
        return len(self.codes) - 1

    def points(self, t: int) -> np.ndarray:
        return self.codec.decode(self.codes[t])

    def contains(self, points: np.ndarray, t: int) -> np.ndarray:
        """Membership of nonnegative points of degree ``t`` (rows)."""
        pts = np.asarray(points, dtype=np.int64).reshape(-1, self.codec.dim)
        ok = (pts >= 0).all(axis=1) & (pts < self.codec.base).all(axis=1)
        out = np.zeros(len(pts), dtype=bool)
        if ok.any():
            out[ok] = np.isin(self.codec.encode(pts[ok]), self.codes[t], assume_unique=False)
        return out


def monoid_strata(generators: Sequence[Sequence[int]], bound: int) -> Strata:
    """All sums of exactly ``t`` generators for ``t = 0..bound``.

    Generators must be nonnegative and share one coordinate sum, so that the
    number of summands is the degree.
    """
    gens = np.array(sorted({tuple(g) for g in generators}), dtype=np.int64)
    if gens.size == 0:
        raise PreconditionError("no generators")
    if (gens < 0).any():
        raise PreconditionError("generators must be nonnegative")
    if len(set(gens.sum(axis=1).tolist())) != 1:
        raise PreconditionError("generators have unequal coordinate sums")
    if bound < 0:
        raise PreconditionError(f"degree bound {bound} must be nonnegative")
    dim = gens.shape[1]
    codec = Codec.for_bound(dim, max(1, int(gens.max())) * max(bound, 1) + 1)
    gcodes = codec.encode(gens)
    codes = [np.zeros(1, dtype=np.int64)]
    for _ in range(bound):
        prev = codes[-1]
        if prev.size * gcodes.size > MAX_PAIRS:
            raise ResourceLimitError(
                f"degree stratum expansion needs {prev.size * gcodes.size} sums")
        codes.append(np.unique((prev[:, None] + gcodes[None, :]).ravel()))
    return Strata(codec, gens, codes)
