"""Canonical module generators of the base ring, truncated at a degree bound.

For a normal monomial algebra the canonical module is spanned by the
monoid points in the interior of the cone.  Everything here works on an
explicit finite truncation: points of degree ``<= T`` where degree counts
generators (coordinate sum divided by the generator degree).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

import numpy as np

from .cone import predicted_facets
from .errors import ParameterError, PreconditionError
from .monoid import Strata, monoid_strata
from .presentation import Presentation, Vector, enumerate_base

DEFAULT_BOUND = 3


def _as_points(arr: np.ndarray) -> list[Vector]:
    return sorted(tuple(int(x) for x in row) for row in arr.tolist())


def _interior_mask(points: np.ndarray, normals: np.ndarray) -> np.ndarray:
    if points.size == 0:
        return np.zeros(len(points), dtype=bool)
    return (points @ normals.T > 0).all(axis=1)


def family_normals(p: Presentation) -> list[Vector]:
    """Primitive facet normals; the block normal is the sigma normal over ``gcd(n, i+1)``."""
    facets = predicted_facets(p)
    d = gcd(p.n, p.i + 1)
    block = tuple(x // d for x in facets[0].normal)
    if block != facets[0].primitive_normal:
        raise AssertionError(f"block normal of {p} is not primitive after dividing by {d}")
    return [block] + [f.primitive_normal for f in facets[1:]]


@dataclass
class _Truncation:
    strata: Strata
    normals: np.ndarray
    interior: list[np.ndarray]  # per degree, decoded points

    @property
    def dim(self) -> int:
        return self.strata.codec.dim

    def interior_codes(self, t: int) -> np.ndarray:
        return np.sort(self.strata.codec.encode(self.interior[t])) if len(self.interior[t]) else \
            np.zeros(0, dtype=np.int64)


def _truncate(generators: Sequence[Sequence[int]], normals: Sequence[Sequence[int]],
              bound: int) -> _Truncation:
    strata = monoid_strata(generators, bound)
    nrm = np.array([tuple(a) for a in normals], dtype=np.int64)
    if nrm.ndim != 2 or nrm.shape[1] != strata.codec.dim:
        raise PreconditionError("normals do not match the generator dimension")
    if (strata.generators @ nrm.T < 0).any():
        raise PreconditionError("a generator lies outside the given halfspaces")
    interior = []
    for t in range(bound + 1):
        pts = strata.points(t)
        interior.append(pts[_interior_mask(pts, nrm)])
    return _Truncation(strata, nrm, interior)


def monoid_points(p: Presentation, bound: int) -> dict[int, list[Vector]]:
    """Points of ``N A`` of degree ``0..bound``, keyed by degree."""
    strata = monoid_strata(enumerate_base(p).elements, bound)
    return {t: _as_points(strata.points(t)) for t in range(bound + 1)}


def interior_points(p: Presentation, bound: int) -> dict[int, list[Vector]]:
    """Monoid points strictly inside every facet, keyed by degree."""
    tr = _truncate(enumerate_base(p).elements, family_normals(p), bound)
    return {t: _as_points(tr.interior[t]) for t in range(bound + 1)}


@dataclass
class ShiftIdentityResult:
    """Outcome of checking ``interior = (1,...,1) + monoid`` up to a bound.

    ``missing_preimage``: interior points whose shift down leaves the monoid.
    ``missing_image``: monoid points whose shift up is not interior.
    ``divisibility``: ``(point, facet index, value)`` with the primitive facet
    value strictly between 0 and the value of ``(1,...,1)``.
    """

    bound: int
    missing_preimage: list[Vector] = field(default_factory=list)
    missing_image: list[Vector] = field(default_factory=list)
    divisibility: list[tuple[Vector, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.missing_preimage or self.missing_image or self.divisibility)

    def __bool__(self) -> bool:
        return self.ok

    @property
    def counterexample(self) -> Vector | None:
        for bucket in (self.missing_preimage, self.missing_image):
            if bucket:
                return bucket[0]
        return self.divisibility[0][0] if self.divisibility else None


def check_shift_identity(generators: Sequence[Sequence[int]],
                         normals: Sequence[Sequence[int]], bound: int) -> ShiftIdentityResult:
    """Shift identity and the facet-gap condition for a generic generator set.

    Generators must have coordinate sum equal to the dimension so that
    ``(1,...,1)`` sits in degree one.
    """
    return _shift_identity(_truncate(generators, normals, bound))


def _shift_identity(tr: _Truncation) -> ShiftIdentityResult:
    bound = tr.strata.bound
    dim = tr.dim
    if int(tr.strata.generators[0].sum()) != dim:
        raise PreconditionError("generator degree must equal the dimension")
    ones = np.ones(dim, dtype=np.int64)
    res = ShiftIdentityResult(bound)
    gaps = tr.normals @ ones
    for t in range(1, bound + 1):
        pts = tr.interior[t]
        if len(pts):
            down = pts - ones
            ok = tr.strata.contains(down, t - 1)
            res.missing_preimage += _as_points(pts[~ok])
            vals = pts @ tr.normals.T
            hit = (vals >= 1) & (vals < gaps[None, :])
            for r, c in zip(*np.nonzero(hit)):
                res.divisibility.append((tuple(int(x) for x in pts[r]), int(c), int(vals[r, c])))
    for t in range(bound):
        pts = tr.strata.points(t)
        up = pts + ones
        ok = np.isin(tr.strata.codec.encode(up), tr.interior_codes(t + 1))
        res.missing_image += _as_points(pts[~ok])
    res.missing_preimage.sort()
    res.missing_image.sort()
    res.divisibility.sort()
    return res


def verify_shift_identity(p: Presentation, bound: int = DEFAULT_BOUND) -> ShiftIdentityResult:
    return check_shift_identity(enumerate_base(p).elements, family_normals(p), bound)


@dataclass
class CanonicalModuleReport:
    degree_bound: int
    interior_points: dict[int, list[Vector]]
    minimal_generators: list[Vector]
    min_degree: int | None
    gorenstein: bool
    a_invariant: int | None
    shift_identity: ShiftIdentityResult | None = None

    @property
    def interior_counts(self) -> list[int]:
        return [len(self.interior_points[t]) for t in range(self.degree_bound + 1)]


def canonical_module(generators: Sequence[Sequence[int]], normals: Sequence[Sequence[int]],
                     bound: int) -> CanonicalModuleReport:
    """Interior points and minimal generators of the canonical module.

    An interior point is a minimal generator unless removing one generator
    of the monoid leaves another interior point.
    """
    return _canonical(_truncate(generators, normals, bound))


def _canonical(tr: _Truncation) -> CanonicalModuleReport:
    bound = tr.strata.bound
    gens = tr.strata.generators
    minimal: list[Vector] = []
    for t in range(1, bound + 1):
        pts = tr.interior[t]
        if not len(pts):
            continue
        lower = tr.interior_codes(t - 1)
        if lower.size == 0:
            minimal += _as_points(pts)
            continue
        diff = pts[:, None, :] - gens[None, :, :]
        valid = (diff >= 0).all(axis=2)
        codes = diff.reshape(-1, tr.dim) @ tr.strata.codec.weights
        reducible = (np.isin(codes, lower).reshape(valid.shape) & valid).any(axis=1)
        minimal += _as_points(pts[~reducible])
    degrees = [t for t in range(bound + 1) if len(tr.interior[t])]
    min_degree = degrees[0] if degrees else None
    dim = tr.dim
    gorenstein = minimal == [tuple([1] * dim)]
    return CanonicalModuleReport(
        degree_bound=bound,
        interior_points={t: _as_points(tr.interior[t]) for t in range(bound + 1)},
        minimal_generators=sorted(minimal),
        min_degree=min_degree,
        gorenstein=gorenstein,
        a_invariant=None if min_degree is None else -min_degree,
    )


def gorenstein_certificate(p: Presentation, bound: int = DEFAULT_BOUND) -> CanonicalModuleReport:
    if bound < 2:
        raise ParameterError(f"degree bound T >= 2 violated (T={bound})")
    tr = _truncate(enumerate_base(p).elements, family_normals(p), bound)
    report = _canonical(tr)
    report.shift_identity = _shift_identity(tr)
    return report

