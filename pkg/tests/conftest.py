import itertools

import pytest

from transpoly.presentation import Presentation


def family(n_lo, n_hi, shifts=True):
    for n in range(n_lo, n_hi + 1):
        for i in range(1, n - 1):
            for t in (range(n) if shifts else [0]):
                yield Presentation(n, i, t)


def brute_force_base(p):
    """All a in N^n with |a| = n and block sum <= i + 1, via a full grid scan."""
    block = [k - 1 for k in p.block]
    return sorted(
        a for a in itertools.product(range(p.n + 1), repeat=p.n)
        if sum(a) == p.n and sum(a[k] for k in block) <= p.i + 1
    )


@pytest.fixture
def p410():
    return Presentation(4, 1, 0)
