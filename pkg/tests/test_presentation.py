import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_force_base, family
from transpoly.errors import DomainError, ParameterError, PreconditionError
from transpoly.presentation import (
    BaseSet,
    Presentation,
    build_presentation,
    cycle_apply,
    enumerate_base,
    is_polymatroid_base,
    permute_vector,
)


@pytest.mark.parametrize("n,t,m,expected", [(4, 0, 3, 3), (4, 1, 4, 1), (5, 3, 4, 2)])
def test_cycle_apply(n, t, m, expected):
    assert cycle_apply(n, t, m) == expected


def test_cycle_apply_composes():
    for t in range(7):
        for m in range(1, 6):
            x = m
            for _ in range(t):
                x = cycle_apply(5, 1, x)
            assert cycle_apply(5, t, m) == x


@pytest.mark.parametrize("m", [0, 5, -1])
def test_cycle_apply_domain(m):
    with pytest.raises(DomainError):
        cycle_apply(4, 1, m)


def test_presentation_sets_unshifted():
    full, rest = frozenset({1, 2, 3, 4}), frozenset({2, 3, 4})
    assert build_presentation(4, 1, 0).member_sets() == (full, rest, rest, full)
    assert build_presentation(3, 1, 0).member_sets() == (
        frozenset({1, 2, 3}), frozenset({2, 3}), frozenset({1, 2, 3}))


def test_presentation_sets_shifted():
    p = build_presentation(4, 2, 1)
    assert p.block == {2, 3}
    sets = p.member_sets()
    assert sets[3] == frozenset({1, 4})
    assert sets[0] == sets[1] == sets[2] == frozenset({1, 2, 3, 4})
    # label view: A_{sigma(3)} = A_4 is the restricted set
    assert p.sets_by_label()[3] == frozenset({1, 4})


@pytest.mark.parametrize("args,needle", [
    ((2, 1, 0), "n >= 3"),
    ((4, 3, 0), "i <= n-2"),
    ((4, 0, 0), "i <= n-2"),
    ((4, 1, 4), "shift <= n-1"),
    ((4, 1, -1), "shift"),
])
def test_presentation_bounds(args, needle):
    with pytest.raises(ParameterError, match=needle):
        build_presentation(*args)


@pytest.mark.parametrize("args,count", [((3, 1, 0), 9), ((4, 1, 0), 31)])
def test_enumerate_base_counts(args, count):
    p = Presentation(*args)
    base = enumerate_base(p)
    assert len(base) == count
    assert list(base.elements) == brute_force_base(p)


@pytest.mark.parametrize("p", list(family(3, 6)), ids=str)
def test_enumerate_base_matches_grid(p):
    base = enumerate_base(p)
    assert list(base.elements) == brute_force_base(p)
    assert all(sum(v) == p.n for v in base)
    if p.shift == 0:
        assert tuple([0] * (p.n - 1) + [p.n]) in base


@pytest.mark.parametrize("p", list(family(3, 6)), ids=str)
def test_shift_is_coordinate_permutation(p):
    unshifted = enumerate_base(Presentation(p.n, p.i, 0)).elements
    moved = sorted(permute_vector(v, p.shift) for v in unshifted)
    assert moved == list(enumerate_base(p).elements)


def test_exchange_axiom_examples():
    assert is_polymatroid_base(enumerate_base(Presentation(3, 1, 0)))
    assert is_polymatroid_base(enumerate_base(Presentation(5, 2, 3)))
    res = is_polymatroid_base([(2, 0), (0, 2)])
    assert not res
    assert res.witness == ((2, 0), (0, 2), 1)
    assert is_polymatroid_base([(2, 0), (1, 1), (0, 2)])


def test_exchange_axiom_preconditions():
    with pytest.raises(PreconditionError):
        is_polymatroid_base([(1, 0), (1, 1)])
    with pytest.raises(PreconditionError):
        is_polymatroid_base([])


@pytest.mark.parametrize("p", list(family(3, 7, shifts=False)), ids=str)
def test_family_is_polymatroid_up_to_seven(p):
    assert is_polymatroid_base(enumerate_base(p))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(1, 3), min_size=1, max_size=3), min_size=3, max_size=3))
def test_transversal_sets_always_exchange(sets):
    # any transversal presentation yields a polymatroid base
    from transpoly.presentation import transversal_base
    elems = transversal_base([set(s) for s in sets], 3)
    assert is_polymatroid_base(elems)


@settings(max_examples=80, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
               .filter(lambda v: sum(v) == 3), min_size=1))
def test_exchange_checker_against_definition(vecs):
    members = set(vecs)

    def naive():
        for u in members:
            for v in members:
                for i in range(3):
                    if u[i] > v[i] and not any(
                        u[j] < v[j] and tuple(u[k] - (k == i) + (k == j) for k in range(3)) in members
                        for j in range(3)
                    ):
                        return False
        return True

    assert bool(is_polymatroid_base(sorted(members))) == naive()


def test_baseset_is_immutable_value():
    b = enumerate_base(Presentation(3, 1, 0))
    assert isinstance(b, BaseSet)
    assert b.degree == 3
    assert b == BaseSet(b.elements)
