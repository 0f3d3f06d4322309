import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from apolar import BinaryForm

# -2x0^5 + 2x1^5 + (x0-x1)^5 and -6x0^5 + 3x1^5 + 2(x0-x1)^5, expanded by hand
F1 = BinaryForm((-1, -5, 10, -10, 5, 1))
F2 = BinaryForm((-4, -10, 20, -20, 10, 1))


@pytest.fixture
def quintic_pair():
    return [F1, F2]


def rand_form(rng: random.Random, d: int, cls=BinaryForm, bound: int = 9, nonzero: bool = True):
    while True:
        f = cls(tuple(rng.randint(-bound, bound) for _ in range(d + 1)))
        if not nonzero or not f.is_zero():
            return f


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def forms(cls, degree):
    return st.lists(rationals, min_size=degree + 1, max_size=degree + 1).map(lambda c: cls(tuple(c)))


def nonzero_forms(cls, degree):
    return forms(cls, degree).filter(lambda f: not f.is_zero())


__all__ = ["F1", "F2", "rand_form", "rationals", "forms", "nonzero_forms", "Fraction"]
