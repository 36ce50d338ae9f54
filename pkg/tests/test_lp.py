from fractions import Fraction
from itertools import combinations

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nefcones.lp import nonnegative_combination


def test_simple_feasible():
    c = nonnegative_combination([(1, 0), (0, 1)], (2, 3))
    assert c == (2, 3)


def test_simple_infeasible():
    assert nonnegative_combination([(1, 0), (0, 1)], (-1, 0)) is None


def test_empty_generators():
    assert nonnegative_combination([], (0, 0)) == ()
    assert nonnegative_combination([], (1, 0)) is None


def test_degenerate_instance_terminates():
    vecs = [(1, 1, 0), (1, -1, 0), (0, 0, 1), (1, 0, 0), (2, 0, 0)]
    c = nonnegative_combination(vecs, (1, 0, 0))
    assert c is not None


def test_rationals():
    c = nonnegative_combination([(Fraction(1, 2), 0), (0, Fraction(1, 3))], (1, 1))
    assert c == (2, 3)


def _feasible_by_sympy(vectors, target):
    """Caratheodory: feasible iff some independent subset solves it with c >= 0."""
    b = sympy.Matrix(target)
    if all(x == 0 for x in target):
        return True
    for k in range(1, len(target) + 1):
        for sub in combinations(vectors, k):
            A = sympy.Matrix([list(v) for v in sub]).T
            if A.rank() != k:
                continue
            sol = (A.T * A).solve(A.T * b)
            if A * sol == b and all(x >= 0 for x in sol):
                return True
    return False


coord = st.integers(min_value=-3, max_value=3)


@settings(max_examples=80, deadline=None)
@given(
    st.integers(min_value=1, max_value=3).flatmap(
        lambda m: st.tuples(
            st.lists(st.lists(coord, min_size=m, max_size=m), min_size=1, max_size=5),
            st.lists(coord, min_size=m, max_size=m),
        )
    )
)
def test_certificate_and_agreement(data):
    vectors, target = data
    c = nonnegative_combination(vectors, target)
    if c is not None:
        assert all(x >= 0 for x in c)
        assert [sum(ci * v[i] for ci, v in zip(c, vectors)) for i in range(len(target))] == target
    assert (c is not None) == _feasible_by_sympy(vectors, target)
