import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import family
from transpoly.ehrhart import hilbert_closed_form
from transpoly.hilbert import HilbertReport, a_invariant, difference_transform, h_vector, series_eval_check
from transpoly.presentation import Presentation


@pytest.mark.parametrize("values,k,expected", [
    ([1, 9, 25], 1, [1, 8, 16]),
    ([1, 9, 25], 3, [1, 6, 1]),
    ([1, 9, 25], 0, [1, 9, 25]),
    ([5], 4, [5]),
])
def test_difference_transform(values, k, expected):
    assert difference_transform(values, k) == expected


@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=10), st.integers(0, 10))
def test_difference_closed_form_is_iterated_recursion(values, k):
    out = difference_transform(values, k)
    cur = list(values)
    for _ in range(k):
        cur = [cur[j] - (cur[j - 1] if j else 0) for j in range(len(cur))]
    assert out == cur
    # the boundary convention D^k(h)_0 = h(0) falls out of zero extension
    assert out[0] == values[0]


def test_h_vector_small():
    rep = h_vector(Presentation(3, 1, 0))
    assert rep.h_values == (1, 9, 25)
    assert rep.h_vector == (1, 6, 1)
    assert rep.a_invariant == -1
    rep4 = h_vector(Presentation(4, 1, 0))
    assert rep4.palindromic and rep4.h_vector[0] == 1


def test_a_invariant_examples():
    assert a_invariant(h_vector(Presentation(3, 1, 0))) == -1
    assert a_invariant(h_vector(Presentation(5, 2, 4))) == -1
    assert a_invariant(HilbertReport((1,), (1,), 3)) == -3
    with pytest.raises(AssertionError):
        a_invariant(HilbertReport((0,), (0, 0), 2))


def test_series_examples():
    rep = h_vector(Presentation(3, 1, 0))
    assert series_eval_check(rep, 6)
    assert rep.coefficient(3) == 49 == hilbert_closed_form(3, 1, 3)
    assert series_eval_check(h_vector(Presentation(4, 1, 0)), 8)
    assert rep.coefficient(0) == 1


def test_series_check_reports_failure():
    bad = HilbertReport((1, 9, 25), (1, 6, 2), 3, 3, 1)
    res = series_eval_check(bad, 6)
    assert not res.ok and res.failing_index == 2
    with pytest.raises(ValueError):
        series_eval_check(h_vector(Presentation(3, 1, 0)), 2)


@pytest.mark.parametrize("p", list(family(3, 8, shifts=False)), ids=str)
def test_family_series(p):
    rep = h_vector(p)
    assert rep.h_vector[0] == 1
    assert min(rep.h_vector) >= 0
    assert rep.palindromic
    assert rep.a_invariant == -1
    assert series_eval_check(rep, p.n + 4)
