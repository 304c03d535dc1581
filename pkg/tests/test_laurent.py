from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccfrieze import LaurentPoly, LaurentRing

RING = LaurentRing(["u", "v", "z"])
u, v, z = RING.gens()


def test_addition_examples():
    assert 1 + v * z == RING.parse("1+v*z")
    assert u * z**-1 + (-u * z**-1) == 0
    assert (1 + v * z) * z**-1 + 1 == z**-1 + v + 1


def test_multiplication_examples():
    assert u * u.inverse() == 1
    assert (1 + v * z) * z**-1 == z**-1 + v
    assert RING.parse("(u+z)/u*z") * u == RING.parse("(u+z)/z")


def test_evaluation_examples():
    assert RING.parse("(1+v*z)/z").evaluate({"u": 5, "v": 1, "z": 1}) == 2
    assert RING.one().evaluate({"u": 7, "v": Fraction(1, 3), "z": 2}) == 1
    assert RING.parse("(1+u*v+v*z)/u*v").evaluate({"u": 1, "v": 1, "z": 1}) == 3


def test_canonical_text():
    assert str((1 + v * z) * z**-1) == "(1+v*z)/z"
    assert str(z**-1) == "z^-1"
    assert str(u * z**-1) == "u*z^-1"
    assert str(RING.zero()) == "0"
    assert str(-2 * u**2 + 3) == "3-2*u^2"
    assert str((1 + u * v + v * z) * (u * v).inverse()) == "(1+u*v+v*z)/u*v"


def test_parse_forms():
    assert RING.parse("2*u") == 2 * u
    assert RING.parse("u^-1") == u.inverse()
    assert RING.parse("v/z") == v * z.inverse()
    assert RING.parse("(u+z)*v") == u * v + z * v
    assert RING.parse(" - u + 3 ") == 3 - u


def test_parse_errors():
    with pytest.raises(ValueError):
        RING.parse("u+")
    with pytest.raises(ValueError):
        RING.parse("w")
    with pytest.raises(ValueError):
        RING.parse("(u+v)/(u+v)")


def test_ring_mismatch_rejected():
    other = LaurentRing(["u", "v"])
    with pytest.raises(ValueError, match="variable-table mismatch"):
        u + other.gen("u")


def test_only_monomials_invert():
    with pytest.raises(ValueError):
        (u + v).inverse()
    assert (-u).inverse() == -(u.inverse())


def test_evaluate_rejects_zero_and_missing():
    with pytest.raises(ZeroDivisionError):
        u.inverse().evaluate({"u": 0, "v": 1, "z": 1})
    with pytest.raises(KeyError):
        u.evaluate({"v": 1})


def test_duplicate_variable_names_rejected():
    with pytest.raises(ValueError):
        LaurentRing(["u", "u"])


exps = st.tuples(*[st.integers(-3, 3)] * 3)
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=4).map(
    lambda d: LaurentPoly(RING, d)
)
points = st.tuples(*[st.fractions(min_value=-4, max_value=4).filter(bool)] * 3).map(
    lambda t: dict(zip("uvz", t))
)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@settings(max_examples=60, deadline=None)
@given(polys, polys, points)
def test_evaluation_is_a_homomorphism(a, b, pt):
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)


@settings(max_examples=80, deadline=None)
@given(polys)
def test_text_round_trip(a):
    assert RING.parse(str(a)) == a


@settings(max_examples=40, deadline=None)
@given(exps, st.sampled_from([1, -1]))
def test_signed_monomials_are_units(e, sign):
    m = RING.monomial(e, sign)
    assert m * m.inverse() == 1
