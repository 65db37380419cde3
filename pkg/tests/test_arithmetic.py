import math

import pytest
from hypothesis import given, strategies as st

from bicirc_forest.arithmetic import (
    parity_profile,
    rows_to_csv,
    select_constant,
    sequence_table,
    square_free_part,
    theorem4_constants,
    verify_square_structure,
)
from bicirc_forest.errors import NonPositive, NotAPerfectSquare, NotDivisible, OddOrderForHalfClass
from bicirc_forest.graph import BicirculantSpec
from bicirc_forest.laurent import build_P, forest_count_formula

from conftest import specs

FAM1 = BicirculantSpec(3, (1,), (), (0,))
FAM6 = BicirculantSpec(4, (1,), (1,), (0,), True, True)


@pytest.mark.parametrize("m,v", [(1, 1), (12, 3), (33, 33), (72, 2), (3 * 9**2, 3), (2**40 * 7, 7)])
def test_square_free_part(m, v):
    assert square_free_part(m) == v


@given(st.integers(1, 10**9))
def test_square_free_part_properties(m):
    v = square_free_part(m)
    assert square_free_part(v) == v
    assert m % v == 0
    q = m // v
    assert math.isqrt(q) ** 2 == q


def test_square_free_part_rejects():
    with pytest.raises(NonPositive):
        square_free_part(0)
    with pytest.raises(NonPositive):
        square_free_part(-4)


@given(specs())
def test_minus_one_value(spec):
    pack = build_P(spec)
    prof = parity_profile(spec)
    assert pack.P1(-1) == prof.value_at_minus_one()
    assert pack.P2(-1) == prof.value_at_minus_one(2, 0)
    assert pack.P3(-1) == prof.value_at_minus_one(0, 2)
    assert pack.P4(-1) == prof.value_at_minus_one(2, 2)


def test_family_one_sequence():
    rows = sequence_table(FAM1, 1, 10)
    assert [r.n for r in rows] == list(range(1, 11))
    assert [r.constant for r in rows] == [3, 33] * 5
    assert rows[2].f == 243 and rows[2].root == 9
    assert all(r.constant * r.root**2 == r.f for r in rows)


def test_family_six_sequence():
    rows = sequence_table(FAM6, 2, 10)
    assert [(r.n, r.constant) for r in rows] == [(2, 21), (4, 105), (6, 21), (8, 105), (10, 21)]
    assert sequence_table(FAM6, 5, 4) == []


def test_csv():
    text = rows_to_csv(sequence_table(FAM1, 1, 3))
    assert text == "n,f,constant,root\n1,3,3,1\n2,33,33,1\n3,243,3,9\n"


def test_falsification_errors():
    with pytest.raises(NotDivisible):
        verify_square_structure(FAM1, 3, 244)
    with pytest.raises(NotAPerfectSquare):
        verify_square_structure(FAM1, 3, 3 * 5)
    with pytest.raises(OddOrderForHalfClass):
        select_constant(FAM6, 3)


@given(specs(max_n=10), st.integers(1, 24))
def test_square_structure_on_random_specs(spec, n):
    if spec.half_in_R or spec.half_in_T:
        n += n % 2
    f = forest_count_formula(spec, n)
    constant, root = verify_square_structure(spec, n, f)
    assert constant * root * root == f


@given(specs())
def test_constants_positive(spec):
    st_ = theorem4_constants(spec)
    assert st_.odd >= 1 and st_.even >= 1
    assert square_free_part(st_.odd_raw) == st_.odd
