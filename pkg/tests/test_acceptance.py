"""Exit criteria. Each test prints one PASS/FAIL line; run with ``-s`` to see them live.

    pytest tests/test_acceptance.py -v -s
"""

import time

import pytest

from conftest import family
from transpoly.cone import (
    PRINTED_N4_NORMALS,
    dd_hull,
    det_certificate,
    det_closed_form,
    predicted_extremal_rays,
    predicted_facets,
    scale_to_sum,
    sigma_normal,
    verify_irreducible,
)
from transpoly.ehrhart import count_points_bruteforce, family_lattice, hilbert_closed_form, normality_check
from transpoly.gorenstein import gorenstein_certificate
from transpoly.hilbert import h_vector, series_eval_check
from transpoly.presentation import Presentation, enumerate_base, is_polymatroid_base

SWEEP_7 = list(family(3, 7))
# sum over n = 3..7 of (n - 2) * n
SWEEP_7_SIZE = 85
SWEEP_6 = list(family(3, 6))
GORENSTEIN_BOUND = 3


def _clear_caches():
    enumerate_base.cache_clear()
    family_lattice.cache_clear()


@pytest.fixture
def line(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number:2d}] {'PASS' if ok else 'FAIL'}: {detail}")
    return emit


@pytest.fixture(scope="module")
def oracle_sweep():
    """dd_hull over every (n, i, shift) with n <= 7, shared by the facet and ray criteria."""
    _clear_caches()
    start = time.perf_counter()
    out = {}
    for p in SWEEP_7:
        base = enumerate_base(p).elements
        hull = dd_hull(base)
        irr = verify_irreducible(predicted_facets(p), base)
        out[p] = (hull, irr)
    return out, time.perf_counter() - start


@pytest.fixture(scope="module")
def certificates():
    _clear_caches()
    start = time.perf_counter()
    reps = {p: gorenstein_certificate(p, GORENSTEIN_BOUND) for p in SWEEP_6}
    return reps, time.perf_counter() - start


def test_c01_printed_n4_table(line):
    start = time.perf_counter()
    computed = {(k, i): sigma_normal(4, i, k).normal for (k, i) in PRINTED_N4_NORMALS}
    elapsed = time.perf_counter() - start
    agree = [key for key, v in PRINTED_N4_NORMALS.items() if computed[key] == v]
    ok = (len(agree) == 11 and computed[(3, 3)] == (0, 0, 4, 0)
          and PRINTED_N4_NORMALS[(3, 3)] == (0, 0, 0, 4) and elapsed < 1e-3)
    line(1, ok, f"{len(agree)}/12 printed vectors reproduced, nu_{{1,2,4}} -> "
                f"{computed[(3, 3)]} (erratum), {elapsed * 1e3:.3f} ms")
    assert ok


def test_c02_facet_description(oracle_sweep, line):
    results, elapsed = oracle_sweep
    bad = []
    for p, (hull, irr) in results.items():
        predicted = sorted(h.primitive_normal for h in predicted_facets(p))
        if not (hull.primitive_normals == predicted and len(hull.halfspaces) == p.n + 1
                and hull.full_dimensional and irr.irreducible):
            bad.append(p)
    ok = len(results) == SWEEP_7_SIZE and not bad and elapsed < 60
    line(2, ok, f"{len(results) - len(bad)}/{len(results)} cases match with n+1 irreducible "
                f"facets, {elapsed:.1f} s")
    assert ok, bad


def test_c03_extremal_rays(oracle_sweep, line):
    results, _ = oracle_sweep
    bad = []
    for p, (hull, _) in results.items():
        rays = sorted(scale_to_sum(r, p.n) for r in hull.extremal_rays)
        if rays != predicted_extremal_rays(p) or len(rays) != (p.i + 1) * (p.n - p.i):
            bad.append(p)
    ok = not bad
    line(3, ok, f"{len(results) - len(bad)}/{len(results)} ray sets equal prediction")
    assert ok, bad


def test_c04_determinant(line):
    cases = [Presentation(n, i, 0) for n in range(3, 9) for i in range(1, n - 1)]
    bad = [p for p in cases if det_certificate(p) != det_closed_form(p.n, p.i)]
    ok = not bad
    line(4, ok, f"|det C| = n(i+1)^i(n-i-1)^(n-i-1) on {len(cases) - len(bad)}/{len(cases)} cases")
    assert ok, bad


def test_c05_ehrhart_agreement(line):
    _clear_caches()
    start = time.perf_counter()
    bad = [(p, t) for p in SWEEP_6 for t in range(4)
           if count_points_bruteforce(p, t) != hilbert_closed_form(p.n, p.i, t)]
    elapsed = time.perf_counter() - start
    total = 4 * len(SWEEP_6)
    ok = not bad and elapsed < 120
    line(5, ok, f"brute force = closed form on {total - len(bad)}/{total} (case, t), {elapsed:.1f} s")
    assert ok, bad


def test_c06_h_vector_and_series(line):
    bad = []
    for p in SWEEP_6:
        rep = h_vector(p)
        if not series_eval_check(rep, p.n + 4):
            bad.append(p)
    spot = h_vector(Presentation(3, 1, 0))
    spots_ok = spot.h_vector == (1, 6, 1) and spot.h_values[2] == 25
    ok = not bad and spots_ok
    line(6, ok, f"series check to n+4 on {len(SWEEP_6) - len(bad)}/{len(SWEEP_6)} cases; "
                f"(3,1): h-vector {spot.h_vector}, h(2) = {spot.h_values[2]}")
    assert ok, bad


def test_c07_a_invariant_two_routes(certificates, line):
    reps, _ = certificates
    bad = [p for p in SWEEP_6
           if not (h_vector(p).a_invariant == reps[p].a_invariant == -1)]
    ok = not bad
    line(7, ok, f"a = -1 by series and canonical module on {len(SWEEP_6) - len(bad)}/{len(SWEEP_6)}")
    assert ok, bad


def test_c08_gorenstein_certificate(certificates, line):
    reps, elapsed = certificates
    bad = []
    violations = 0
    for p, rep in reps.items():
        violations += len(rep.shift_identity.divisibility)
        if not (rep.minimal_generators == [tuple([1] * p.n)] and rep.shift_identity.ok
                and rep.degree_bound == GORENSTEIN_BOUND):
            bad.append(p)
    ok = not bad and violations == 0 and elapsed < 120
    line(8, ok, f"omega generated by (1,...,1) at T={GORENSTEIN_BOUND} on "
                f"{len(reps) - len(bad)}/{len(reps)} cases, {violations} divisibility "
                f"violations, {elapsed:.1f} s")
    assert ok, bad


def test_c09_polymatroid_axiom(line):
    bad = [p for p in SWEEP_6 if not is_polymatroid_base(enumerate_base(p))]
    ok = not bad
    line(9, ok, f"exchange axiom holds on {len(SWEEP_6) - len(bad)}/{len(SWEEP_6)} base sets")
    assert ok, bad


def test_c10_empirical_normality(line):
    bad = [p for p in SWEEP_6 if not normality_check(p, 3).ok]
    ok = not bad
    line(10, ok, f"monoid stratum = lattice-cone stratum for t <= 3 on "
                 f"{len(SWEEP_6) - len(bad)}/{len(SWEEP_6)} cases")
    assert ok, bad
