"""Exact double description for cones ``{x : <a, x> >= 0 for a in rows}``.

Everything is integer arithmetic on Python ints.  The cone is kept as
``L + cone(R)`` with ``L`` a lineality basis and ``R`` the extreme rays
modulo ``L``.  Adjacency of two rays is decided combinatorially: each ray
carries a bitmask of the processed rows it is tight on, and two rays are
adjacent iff no third ray is tight on every row they share.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries (sign kept)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def _combine(cu: int, u: Sequence[int], cv: int, v: Sequence[int]) -> Vector:
    return primitive([cu * x + cv * y for x, y in zip(u, v)])


@dataclass
class ConeVRep:
    """Output of :func:`double_description`."""

    rays: list[Vector]
    lineality: list[Vector]

    @property
    def pointed(self) -> bool:
        return not self.lineality


def double_description(rows: Iterable[Sequence[int]], dim: int) -> ConeVRep:
    """Extreme rays and lineality of ``{x in R^dim : <a, x> >= 0 for all rows}``.

    Rays come back primitive and sorted; the lineality basis is primitive
    but otherwise unnormalised.
    """
    lineality: list[Vector] = [tuple(int(k == j) for k in range(dim)) for j in range(dim)]
    rays: list[Vector] = []
    masks: list[int] = []
    bit = 0
    for a in rows:
        a = tuple(a)
        if len(a) != dim:
            raise ValueError(f"row {a} has length {len(a)}, expected {dim}")
        vals = [dot(a, l) for l in lineality]
        pivot = next((k for k, val in enumerate(vals) if val != 0), None)
        if pivot is not None:
            l0 = lineality[pivot]
            c0 = vals[pivot]
            if c0 < 0:
                l0 = tuple(-x for x in l0)
                c0 = -c0
            lineality = [
                _combine(c0, l, -val, l0)
                for k, (l, val) in enumerate(zip(lineality, vals)) if k != pivot
            ]
            new_rays = []
            for r in rays:
                ar = dot(a, r)
                new_rays.append(r if ar == 0 else _combine(c0, r, -ar, l0))
            # every processed row vanishes on l0; projected rays are tight on a
            prev_all = (1 << bit) - 1
            masks = [m | (1 << bit) for m in masks] + [prev_all]
            rays = new_rays + [l0]
            bit += 1
            continue

        vals = [dot(a, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        abit = 1 << bit
        bit += 1
        if not neg:
            masks = [m | abit if vals[k] == 0 else m for k, m in enumerate(masks)]
            continue
        # rays of the pointed quotient live in dimension dim - len(lineality);
        # two adjacent rays share at least (that - 2) tight rows
        rank_needed = dim - len(lineality) - 2
        created: list[tuple[Vector, int]] = []
        for p in pos:
            for m in neg:
                common = masks[p] & masks[m]
                if common.bit_count() < rank_needed:
                    continue
                adjacent = True
                for k in range(len(rays)):
                    if k != p and k != m and masks[k] & common == common:
                        adjacent = False
                        break
                if adjacent:
                    created.append((_combine(vals[p], rays[m], -vals[m], rays[p]), common | abit))
        keep = pos + zero
        rays = [rays[k] for k in keep] + [r for r, _ in created]
        masks = [masks[k] | (abit if vals[k] == 0 else 0) for k in keep] + [m for _, m in created]
    return ConeVRep(sorted(rays), lineality)


def row_basis(vectors: Iterable[Sequence[int]]) -> list[Vector]:
    """A maximal linearly independent subset of ``vectors`` (fraction-free)."""
    basis: list[Vector] = []
    reduced: list[tuple[int, list[int]]] = []  # (pivot column, reduced row)
    for v in vectors:
        w = list(v)
        for col, row in reduced:
            if w[col]:
                f, g = row[col], w[col]
                w = [f * x - g * y for x, y in zip(w, row)]
        piv = next((c for c, x in enumerate(w) if x), None)
        if piv is not None:
            reduced.append((piv, list(primitive(w))))
            basis.append(tuple(v))
    return basis


def rank(vectors: Iterable[Sequence[int]]) -> int:
    return len(row_basis(vectors))
