"""Facets and extremal rays of the base cone, predicted and recomputed.

The predicted side writes down the ``n + 1`` facet normals and the
``(i + 1)(n - i)`` extremal rays directly from ``(n, i, shift)``.  The
oracle side (:func:`dd_hull`) knows nothing about the family and runs the
double description method on the raw generators.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from . import dd
from .errors import DomainError, ParameterError, PreconditionError
from .presentation import Presentation, Vector, permute_vector, shifted_block

# Printed n = 4 table, keyed by (k, i).  The (3, 3) entry disagrees with
# n * e_{[n] \ sigma^k[n-1]}, which gives (0, 0, 4, 0).
PRINTED_N4_NORMALS: dict[tuple[int, int], Vector] = {
    (0, 1): (-2, 2, 2, 2), (0, 2): (-1, -1, 3, 3), (0, 3): (0, 0, 0, 4),
    (1, 1): (2, -2, 2, 2), (1, 2): (3, -1, -1, 3), (1, 3): (4, 0, 0, 0),
    (2, 1): (2, 2, -2, 2), (2, 2): (3, 3, -1, -1), (2, 3): (0, 4, 0, 0),
    (3, 1): (2, 2, 2, -2), (3, 2): (-1, 3, 3, -1), (3, 3): (0, 0, 0, 4),
}
KNOWN_ERRATA: dict[tuple[int, int, int], str] = {
    (4, 3, 3): "printed nu_{1,2,4} = (0,0,0,4); n*e_{[n]\\sigma^3[3]} = (0,0,4,0)",
}


@dataclass(frozen=True)
class Halfspace:
    """``{x : <x, normal> >= 0}``."""

    normal: Vector

    def __post_init__(self) -> None:
        if not any(self.normal):
            raise ValueError("halfspace normal must be nonzero")

    @property
    def primitive_normal(self) -> Vector:
        return dd.primitive(self.normal)

    @property
    def scale(self) -> int:
        """The positive ``c`` with ``normal = c * primitive_normal``."""
        p = self.primitive_normal
        j = next(k for k, x in enumerate(p) if x)
        return self.normal[j] // p[j]

    def value(self, x: Sequence[int]) -> int:
        return dd.dot(self.normal, x)


class FacetKind(Enum):
    BLOCK = "block"
    COORDINATE = "coordinate"


@dataclass(frozen=True)
class SigmaNormal(Halfspace):
    k: int = 0
    kind: FacetKind = FacetKind.BLOCK


def sigma_normal(n: int, i: int, k: int) -> SigmaNormal:
    """Normal with ``-(n-i-1)`` on ``sigma^k[i]`` and ``i+1`` elsewhere."""
    if n < 3:
        raise ParameterError(f"n >= 3 violated (n={n})")
    if not 1 <= i <= n - 1:
        raise ParameterError(f"1 <= i <= n-1 violated (n={n}, i={i})")
    if not 0 <= k <= n - 1:
        raise ParameterError(f"0 <= k <= n-1 violated (n={n}, k={k})")
    block = shifted_block(n, i, k)
    normal = tuple(-(n - i - 1) if m in block else i + 1 for m in range(1, n + 1))
    kind = FacetKind.COORDINATE if i == n - 1 else FacetKind.BLOCK
    return SigmaNormal(normal, k=k, kind=kind)


def predicted_facets(p: Presentation) -> list[SigmaNormal]:
    """Block facet first, then the coordinate facets for ``k = 0..n-1``."""
    return [sigma_normal(p.n, p.i, p.shift)] + [
        sigma_normal(p.n, p.n - 1, k) for k in range(p.n)
    ]


def predicted_extremal_rays(p: Presentation) -> list[Vector]:
    n, i = p.n, p.i

    def e(k: int, c: int = 1) -> list[int]:
        v = [0] * n
        v[k - 1] = c
        return v

    rays = [tuple(e(k, n)) for k in range(i + 1, n + 1)]
    for j in range(1, i + 1):
        for k in range(i + 1, n + 1):
            rays.append(tuple(a + b for a, b in zip(e(j, i + 1), e(k, n - i - 1))))
    return sorted(permute_vector(r, p.shift) for r in rays)


@dataclass
class ConeDescription:
    generators: list[Vector]
    halfspaces: list[Halfspace]
    extremal_rays: list[Vector]
    equations: list[Vector] = field(default_factory=list)
    lineality: list[Vector] = field(default_factory=list)
    irreducible: bool = True

    @property
    def dim(self) -> int:
        return len(self.generators[0]) if self.generators else len(self.halfspaces[0].normal)

    @property
    def full_dimensional(self) -> bool:
        return not self.equations

    @property
    def primitive_normals(self) -> list[Vector]:
        return sorted(h.primitive_normal for h in self.halfspaces)


def dd_hull(generators: Iterable[Sequence[int]]) -> ConeDescription:
    """H- and V-description of the cone spanned by integer generators.

    Facets are the extreme rays of the dual cone; the extremal rays are then
    recovered by a second pass over the facet inequalities (and the linear
    equations when the cone is not full dimensional).
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        raise PreconditionError("dd_hull needs at least one generator")
    dim = len(gens[0])
    if any(len(g) != dim for g in gens):
        raise DomainError("generators have mixed lengths")
    if any(not any(g) for g in gens):
        raise PreconditionError("zero vector among generators")
    uniq = sorted(set(gens), reverse=True)
    dual = dd.double_description(uniq, dim)
    equations = sorted(dual.lineality)
    facets = [Halfspace(r) for r in dual.rays]
    rows = [h.normal for h in facets]
    for eq in equations:
        rows += [eq, tuple(-x for x in eq)]
    primal = dd.double_description(rows, dim)
    return ConeDescription(
        generators=sorted(set(gens)),
        halfspaces=sorted(facets, key=lambda h: h.normal),
        extremal_rays=primal.rays,
        equations=equations,
        lineality=sorted(primal.lineality),
    )


def predicted_cone(p: Presentation, generators: Iterable[Sequence[int]] = ()) -> ConeDescription:
    return ConeDescription(
        generators=sorted(tuple(g) for g in generators),
        halfspaces=list(predicted_facets(p)),
        extremal_rays=predicted_extremal_rays(p),
    )


def scale_to_sum(v: Sequence[int], total: int) -> Vector:
    s = sum(v)
    if s <= 0 or any((total * x) % s for x in v):
        raise ValueError(f"{tuple(v)} cannot be scaled to coordinate sum {total}")
    return tuple(total * x // s for x in v)


@dataclass
class IrreducibilityResult:
    irreducible: bool
    witnesses: dict[int, Vector]
    redundant: list[int]

    def __bool__(self) -> bool:
        return self.irreducible


def verify_irreducible(halfspaces: Sequence[Halfspace | Sequence[int]],
                       generators: Iterable[Sequence[int]] = ()) -> IrreducibilityResult:
    """Drop each halfspace in turn and look for a point the others let through.

    The witness for index ``k`` is an integer point of the relaxed cone with
    ``<x, a_k> < 0``; halfspaces with no witness are reported as redundant.
    """
    normals = [h.normal if isinstance(h, Halfspace) else tuple(h) for h in halfspaces]
    if not normals:
        return IrreducibilityResult(True, {}, [])
    dim = len(normals[0])
    for g in generators:
        for a in normals:
            if dd.dot(a, g) < 0:
                raise PreconditionError(f"generator {tuple(g)} violates normal {a}")
    witnesses: dict[int, Vector] = {}
    redundant: list[int] = []
    for k, a in enumerate(normals):
        others = normals[:k] + normals[k + 1:]
        relaxed = dd.double_description(others, dim)
        cands = list(relaxed.rays)
        for l in relaxed.lineality:
            cands += [l, tuple(-x for x in l)]
        hit = next((c for c in cands if dd.dot(a, c) < 0), None)
        if hit is None:
            redundant.append(k)
        else:
            witnesses[k] = hit
    return IrreducibilityResult(not redundant, witnesses, redundant)


class Position(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Membership:
    position: Position
    facets: tuple[int, ...] = ()


def membership(x: Sequence[int], c: ConeDescription | Sequence[Halfspace]) -> Membership:
    """Classify ``x`` against a full-dimensional H-description.

    ``facets`` lists the violated facets when outside and the tight facets on
    the boundary.
    """
    hs = c.halfspaces if isinstance(c, ConeDescription) else list(c)
    if any(len(h.normal) != len(x) for h in hs):
        raise DomainError(f"point of length {len(x)} does not match cone dimension")
    vals = [h.value(x) for h in hs]
    bad = tuple(k for k, v in enumerate(vals) if v < 0)
    if bad:
        return Membership(Position.OUTSIDE, bad)
    tight = tuple(k for k, v in enumerate(vals) if v == 0)
    if tight:
        return Membership(Position.BOUNDARY, tight)
    return Membership(Position.INTERIOR)


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [list(r) for r in matrix]
    size = len(m)
    if any(len(r) != size for r in m):
        raise DomainError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if m[r][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for r in range(k + 1, size):
            for c in range(k + 1, size):
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if size else 1


def certificate_matrix(p: Presentation) -> list[Vector]:
    """Rows ``J_1..J_i, J_{i+2}..J_n, J`` for the unshifted layout."""
    n, i = p.n, p.i

    def row(pairs: dict[int, int]) -> Vector:
        return tuple(pairs.get(m, 0) for m in range(1, n + 1))

    rows = [row({k: i + 1, i + 1: n - i - 1}) for k in range(1, i + 1)]
    rows += [row({1: i + 1, k: n - i - 1}) for k in range(i + 2, n + 1)]
    rows.append(row({n: n}))
    return rows


def det_closed_form(n: int, i: int) -> int:
    return n * (i + 1) ** i * (n - i - 1) ** (n - i - 1)


def det_certificate(p: Presentation) -> int:
    """``|det C|`` for the certificate matrix, checked against the closed form."""
    value = abs(bareiss_det(certificate_matrix(p)))
    expected = det_closed_form(p.n, p.i)
    if value != expected:
        raise AssertionError(f"|det C| = {value} but closed form gives {expected} for {p}")
    return value


def export_normaliz(generators: Iterable[Sequence[int]], path: str | os.PathLike[str]) -> Path:
    """Write generators as a Normaliz-classic input matrix."""
    if not str(path):
        raise ParameterError("empty output path")
    rows = [tuple(g) for g in generators]
    if not rows:
        raise PreconditionError("no generators to export")
    lines = [str(len(rows)), str(len(rows[0]))]
    lines += [" ".join(str(x) for x in r) for r in rows]
    lines.append("integral_closure")
    out = Path(path)
    out.write_text("\n".join(lines) + "\n", encoding="ascii")
    return out


def read_normaliz(path: str | os.PathLike[str]) -> tuple[list[Vector], str]:
    tokens = Path(path).read_text(encoding="ascii").split("\n")
    tokens = [t.strip() for t in tokens if t.strip()]
    nrows, ncols = int(tokens[0]), int(tokens[1])
    rows = [tuple(int(x) for x in t.split()) for t in tokens[2:2 + nrows]]
    if any(len(r) != ncols for r in rows):
        raise ValueError("row length does not match declared column count")
    return rows, tokens[2 + nrows]
