from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from arithmetic_metric.errors import InvalidArgumentError, OutOfRangeError
from arithmetic_metric.extended import (
    ONE,
    ExtendedNumber,
    dense,
    embed,
    ext_big_omega,
    ext_dist,
    from_rational,
    l1_norm,
    nth_root,
    parse_extended,
    sequence_difference,
)
from arithmetic_metric.metric import dist


def root2(k):
    return nth_root(from_rational(2, 1), k)


@pytest.mark.parametrize(
    "num, den, expected",
    [(3, 2, {2: F(-1), 3: F(1)}), (6, 6, {}), (12, 1, {2: F(2), 3: F(1)})],
)
def test_from_rational(num, den, expected):
    assert from_rational(num, den).as_dict() == expected


def test_from_rational_rejects_zero():
    with pytest.raises(InvalidArgumentError):
        from_rational(0, 1)
    with pytest.raises(InvalidArgumentError):
        from_rational(1, 0)


def test_nth_root():
    assert root2(2).as_dict() == {2: F(1, 2)}
    x = from_rational(360, 7)
    assert nth_root(x, 1) == x
    assert nth_root(from_rational(8, 1), 3).as_dict() == {2: F(1)}
    with pytest.raises(InvalidArgumentError):
        nth_root(x, 0)


def test_ext_dist_examples():
    assert ext_dist(from_rational(1, 2), from_rational(3, 1)) == 2
    x = from_rational(45, 28)
    assert ext_dist(x, x) == 0
    assert ext_dist(root2(2), root2(3)) == F(1, 6)


def test_ext_big_omega_examples():
    assert ext_big_omega(from_rational(3, 2)) == 0
    assert ext_big_omega(ONE) == 0
    assert ext_big_omega(root2(2)) == F(1, 2)


def test_embed_examples():
    assert dense(embed(from_rational(12, 1)), 4) == [2, 1, 0, 0]
    assert embed(ONE) == {}
    assert l1_norm(sequence_difference(embed(from_rational(8)), embed(from_rational(9)))) == 5


def test_canonical_form():
    x = ExtendedNumber.from_mapping({5: F(2, 4), 2: 0, 3: -1})
    assert x.entries == ((3, F(-1)), (5, F(1, 2)))
    assert x[7] == 0
    with pytest.raises(InvalidArgumentError):
        ExtendedNumber(((4, F(1)),))


def test_rational_overflow_is_an_error():
    with pytest.raises(OutOfRangeError):
        ExtendedNumber.from_mapping({2: F(2**130)})


def test_arithmetic():
    x, y = from_rational(12, 5), from_rational(10, 3)
    assert (x * y).as_dict() == from_rational(8, 1).as_dict()
    assert x / x == ONE
    assert x.inverse() == from_rational(5, 12)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("12", from_rational(12)),
        ("3/2", from_rational(3, 2)),
        ("root(2, 2)", root2(2)),
        (" root(3,2/1) ", root2(3)),
    ],
)
def test_parse_extended(text, expected):
    assert parse_extended(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "-3", "1/0", "root(0, 2)", "root(2)"])
def test_parse_extended_rejects(text):
    with pytest.raises(InvalidArgumentError):
        parse_extended(text)


@st.composite
def extended_numbers(draw):
    num = draw(st.integers(1, 10**6))
    den = draw(st.integers(1, 10**6))
    k = draw(st.integers(1, 12))
    return nth_root(from_rational(num, den), k)


@settings(max_examples=300, deadline=None)
@given(extended_numbers(), extended_numbers(), extended_numbers())
def test_extended_metric_axioms(x, y, z):
    assert ext_dist(x, y) >= 0
    assert (ext_dist(x, y) == 0) == (x == y)
    assert ext_dist(x, y) == ext_dist(y, x)
    assert ext_dist(x, z) <= ext_dist(x, y) + ext_dist(y, z)


@settings(max_examples=300, deadline=None)
@given(extended_numbers(), extended_numbers(), extended_numbers())
def test_extended_invariance(x, y, z):
    assert ext_dist(x * z, y * z) == ext_dist(x, y)


@settings(max_examples=300, deadline=None)
@given(extended_numbers(), extended_numbers())
def test_isometry(x, y):
    d = ext_dist(x, y)
    assert l1_norm(sequence_difference(embed(x), embed(y))) == d
    # Dense expansion gives the same sum term by term.
    diff = sequence_difference(embed(x), embed(y))
    assert sum((abs(c) for c in dense(diff)), F(0)) == d


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10**12), st.integers(1, 10**12))
def test_restriction_to_naturals(a, b):
    assert ext_dist(from_rational(a), from_rational(b)) == dist(a, b)
