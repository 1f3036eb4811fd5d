import pytest
import sympy
from hypothesis import given, settings, strategies as st

from edgeideal.linalg import check_field, field_name, is_prime, nullspace, rank

matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=6))


@given(matrices)
@settings(max_examples=150, deadline=None)
def test_rank_matches_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()


@given(matrices)
@settings(max_examples=100, deadline=None)
def test_nullspace(rows):
    cols = len(rows[0])
    basis = nullspace(rows, cols)
    assert len(basis) == cols - rank(rows)
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


def test_characteristic_matters():
    M = [[1, 1], [1, -1]]
    assert rank(M) == 2 and rank(M, 2) == 1


def test_fields():
    assert is_prime(32003) and not is_prime(1)
    assert field_name(0) == "QQ" and field_name(7) == "GF(7)"
    with pytest.raises(ValueError):
        check_field(6)
