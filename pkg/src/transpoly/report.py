"""Per-case checks assembled into plain dicts for the CLI reports."""

from __future__ import annotations

from typing import Any

from .cone import (
    KNOWN_ERRATA,
    PRINTED_N4_NORMALS,
    bareiss_det,
    certificate_matrix,
    dd_hull,
    det_closed_form,
    predicted_extremal_rays,
    predicted_facets,
    scale_to_sum,
    sigma_normal,
    verify_irreducible,
)
from .ehrhart import DEFAULT_COMPOSITION_LIMIT, count_points_bruteforce, hilbert_closed_form, normality_check
from .gorenstein import gorenstein_certificate
from .hilbert import h_vector, series_eval_check
from .presentation import Presentation, enumerate_base, is_polymatroid_base


def _lists(vectors) -> list[list[int]]:
    return [list(v) for v in vectors]


def params(p: Presentation) -> dict[str, int]:
    return {"n": p.n, "i": p.i, "shift": p.shift}


def erratum_notes(p: Presentation) -> list[str]:
    """Errata touching any normal this presentation uses."""
    used = {(p.n, p.i, p.shift)} | {(p.n, p.n - 1, k) for k in range(p.n)}
    return [msg for key, msg in sorted(KNOWN_ERRATA.items()) if key in used]


def n4_table() -> list[dict[str, Any]]:
    rows = []
    for (k, i), printed in sorted(PRINTED_N4_NORMALS.items()):
        computed = sigma_normal(4, i, k).normal
        rows.append({"k": k, "i": i, "computed": list(computed), "printed": list(printed),
                     "erratum": computed != printed})
    return rows


def facets_case(p: Presentation) -> dict[str, Any]:
    base = enumerate_base(p)
    oracle = dd_hull(base.elements)
    predicted = predicted_facets(p)
    pred_prim = sorted(h.primitive_normal for h in predicted)
    irr = verify_irreducible(predicted, base.elements)
    match = oracle.primitive_normals == pred_prim and len(pred_prim) == p.n + 1
    return {
        "params": params(p),
        "predicted_facets": _lists(h.normal for h in predicted),
        "predicted_primitive": _lists(pred_prim),
        "oracle_facets": _lists(oracle.primitive_normals),
        "facet_count": len(oracle.halfspaces),
        "full_dimensional": oracle.full_dimensional,
        "facet_match": match,
        "irreducible": irr.irreducible,
        "pass": match and irr.irreducible and oracle.full_dimensional,
    }


def rays_case(p: Presentation) -> dict[str, Any]:
    oracle = dd_hull(enumerate_base(p).elements)
    scaled = sorted(scale_to_sum(r, p.n) for r in oracle.extremal_rays)
    predicted = predicted_extremal_rays(p)
    match = scaled == predicted and len(predicted) == (p.i + 1) * (p.n - p.i)
    return {
        "params": params(p),
        "predicted_rays": _lists(predicted),
        "oracle_rays": _lists(scaled),
        "ray_count": len(scaled),
        "ray_match": match,
        "pass": match,
    }


def hilbert_case(p: Presentation, t_max: int | None = None) -> dict[str, Any]:
    rep = h_vector(p)
    check = series_eval_check(rep, t_max if t_max is not None else p.n + 4)
    a = rep.a_invariant
    return {
        "params": params(p),
        "h_values": list(rep.h_values),
        "h_vector": list(rep.h_vector),
        "denominator_exponent": rep.denominator_exponent,
        "a_invariant": a,
        "palindromic": rep.palindromic,
        "multiplicity": rep.multiplicity,
        "series_check": {"ok": check.ok, "t_max": check.t_max,
                         "failing_index": check.failing_index},
        "pass": check.ok and rep.palindromic and a == -1,
    }


def gorenstein_case(p: Presentation, bound: int) -> dict[str, Any]:
    rep = gorenstein_certificate(p, bound)
    shift = rep.shift_identity
    expected_counts = [0] + [hilbert_closed_form(p.n, p.i, t - 1) for t in range(1, bound + 1)]
    counts_ok = rep.interior_counts == expected_counts
    return {
        "params": params(p),
        "bound": bound,
        "minimal_generators": _lists(rep.minimal_generators),
        "min_degree": rep.min_degree,
        "a_invariant": rep.a_invariant,
        "interior_counts": rep.interior_counts,
        "interior_counts_match": counts_ok,
        "shift_identity": {
            "ok": shift.ok,
            "counterexample": None if shift.counterexample is None else list(shift.counterexample),
            "divisibility_violations": len(shift.divisibility),
        },
        "gorenstein": rep.gorenstein,
        "pass": rep.gorenstein and shift.ok and counts_ok and rep.a_invariant == -1,
    }


def verify_case(p: Presentation, bound: int, t_max: int | None = None,
                ehrhart_degrees: int = 3,
                limit: int | None = DEFAULT_COMPOSITION_LIMIT) -> dict[str, Any]:
    f = facets_case(p)
    r = rays_case(p)
    h = hilbert_case(p, t_max)
    g = gorenstein_case(p, bound)
    det = abs(bareiss_det(certificate_matrix(p)))
    lim = limit if limit is not None else float("inf")
    ehr = {str(t): count_points_bruteforce(p, t, lim) == hilbert_closed_form(p.n, p.i, t)
           for t in range(ehrhart_degrees + 1)}
    normal = normality_check(p, min(bound, ehrhart_degrees))
    poly = is_polymatroid_base(enumerate_base(p))
    case = {
        "params": params(p),
        "facet_match": f["facet_match"],
        "ray_match": r["ray_match"],
        "irreducible": f["irreducible"],
        "det": det,
        "det_ok": det == det_closed_form(p.n, p.i),
        "ehrhart_match": ehr,
        "normality": normal.ok,
        "polymatroid": poly.ok,
        "h_vector": h["h_vector"],
        "palindromic": h["palindromic"],
        "series_ok": h["series_check"]["ok"],
        "a_invariant_series": h["a_invariant"],
        "a_invariant_canonical": g["a_invariant"],
        "gorenstein": g["gorenstein"],
        "shift_identity": g["shift_identity"]["ok"],
        "erratum_notes": erratum_notes(p),
    }
    flags = [case[k] for k in ("facet_match", "ray_match", "irreducible", "det_ok", "normality",
                               "polymatroid", "palindromic", "series_ok", "gorenstein",
                               "shift_identity")]
    case["pass"] = (all(flags) and all(ehr.values())
                    and case["a_invariant_series"] == case["a_invariant_canonical"] == -1)
    return case
