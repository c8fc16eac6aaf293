"""Laurent arithmetic: frozen examples plus randomized ring properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterlab.laurent import (
    LaurentError,
    LaurentParseError,
    LaurentPoly,
    VarSet,
    VarSetMismatch,
    denominator_vector,
    evaluate,
    has_nonnegative_coeffs,
    parse_laurent,
    poly_from_json,
    poly_to_json,
    substitute_fraction,
    try_exact_div,
)

XY = VarSet(["x", "y"])
X, Y = XY.gens()


def p(text: str, vs: VarSet = XY) -> LaurentPoly:
    return parse_laurent(text, vs)


# -- construction and varsets ---------------------------------------------------


def test_varset_rejects_duplicates_and_bad_names():
    with pytest.raises(LaurentError):
        VarSet(["x", "x"])
    with pytest.raises(LaurentError):
        VarSet(["a+b"])


def test_zero_is_empty_map():
    assert (X - X).terms == {}
    assert (X - X).is_zero()
    assert str(X - X) == "0"


def test_varset_mismatch_raises():
    other = VarSet(["x"])
    with pytest.raises(VarSetMismatch):
        X + other.var("x")


# -- add / mul examples -----------------------------------------------------------


def test_additive_inverse():
    assert (X + (-X)).is_zero()


def test_add_coefficients():
    assert p("x^2") + p("x^2") == p("2*x^2")


def test_add_disjoint_supports():
    assert p("x*y^-1") + p("y") == p("x*y^-1 + y")


def test_mul_identity():
    q = p("x^2*y^-3 - 4*y + 7")
    assert XY.one() * q == q


def test_mul_inverse_monomials():
    assert p("x^-1") * X == XY.one()


def test_difference_of_squares():
    assert p("x - y") * p("x + y") == p("x^2 - y^2")


def test_pow_negative_only_for_unit_monomials():
    assert p("x*y^-2") ** -2 == p("x^-2*y^4")
    with pytest.raises(LaurentError):
        (X + Y) ** -1
    with pytest.raises(LaurentError):
        p("2*x") ** -1


# -- exact division ----------------------------------------------------------------


def test_div_difference_of_squares():
    assert try_exact_div(p("x^2 - y^2"), p("x - y")) == p("x + y")


def test_div_cancelling_numerator():
    # the 2x2-minor exchange: (x11 x22 - x12 x21 + x12 x21) / x11 = x22
    vs = VarSet(["x11", "x12", "x21", "x22"])
    numerator = parse_laurent("x11*x22 - x12*x21", vs) + parse_laurent("x12*x21", vs)
    assert try_exact_div(numerator, vs.var("x11")) == vs.var("x22")


def test_div_by_monomial_always_succeeds():
    assert try_exact_div(p("x + 1"), X) == p("1 + x^-1")


def test_div_not_divisible():
    assert try_exact_div(p("x^2 + 1"), p("x + 1")) is None
    assert try_exact_div(p("x + 1"), p("x + 2")) is None


def test_div_requires_integer_coefficients():
    assert try_exact_div(p("3*x"), p("2*x")) is None


def test_div_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        try_exact_div(X, XY.zero())


def test_div_zero_numerator():
    assert try_exact_div(XY.zero(), X) == XY.zero()


# -- substitution -------------------------------------------------------------------


VABC = VarSet(["x", "a", "b", "c"])


def test_substitute_simple():
    x = VABC.var("x")
    num = parse_laurent("a + b", VABC)
    den = VABC.var("c")
    n, d = substitute_fraction(x, "x", num, den)
    assert n == num and d == den


def test_substitute_inverse():
    x_inv = parse_laurent("x^-1", VABC)
    num = parse_laurent("a + b", VABC)
    den = VABC.var("c")
    n, d = substitute_fraction(x_inv, "x", num, den)
    assert n == den and d == num


def test_substitute_mixed_powers():
    q = parse_laurent("x + x^-1", VABC)
    num = parse_laurent("a + b", VABC)
    den = VABC.var("c")
    n, d = substitute_fraction(q, "x", num, den)
    assert n == num * num + den * den
    assert d == den * num


def test_substitute_zero_denominator_raises():
    with pytest.raises(ZeroDivisionError):
        substitute_fraction(VABC.var("x"), "x", VABC.one(), VABC.zero())


# -- denominator vectors --------------------------------------------------------------


def test_denominator_vector_of_variable():
    assert denominator_vector(X, ["x", "y"]) == (-1, 0)


def test_denominator_vector_exchange_partner():
    assert denominator_vector(p("x^-1*y + x^-1"), ["x", "y"]) == (1, 0)


def test_denominator_vector_reads_min_exponents():
    assert denominator_vector(p("x^-1*y + x^-1"), ["x"]) == (1,)
    assert denominator_vector(p("x^2 + x^3"), ["x", "y"]) == (-2, 0)


def test_denominator_vector_zero_rejected():
    with pytest.raises(LaurentError):
        denominator_vector(XY.zero(), ["x"])


# -- coefficient positivity ------------------------------------------------------------


def test_has_nonnegative_coeffs():
    assert has_nonnegative_coeffs(p("x + 1"))
    assert not has_nonnegative_coeffs(p("x - 1"))
    assert has_nonnegative_coeffs(XY.zero())


# -- evaluation --------------------------------------------------------------------------


def test_evaluate_monomial():
    assert evaluate(p("x*y^-1"), {"x": 2, "y": 4}) == Fraction(1, 2)


def test_evaluate_constant():
    assert evaluate(XY.constant(7), {}) == 7


def test_evaluate_product():
    q = p("x - y") * p("x + y")
    assert evaluate(q, {"x": 3, "y": 1}) == 8


def test_evaluate_zero_at_negative_exponent_raises():
    with pytest.raises(ZeroDivisionError):
        evaluate(p("x^-1"), {"x": 0})


def test_evaluate_missing_variable_raises():
    with pytest.raises(LaurentError):
        evaluate(X, {})


# -- text format --------------------------------------------------------------------------


def test_str_examples():
    assert str(p("x^2*y^-1 - 2*y + 1")) == "x^2*y^-1 - 2*y + 1"
    assert str(-X) == "-x"
    assert str(XY.constant(-3)) == "-3"


def test_parse_whitespace_and_signs():
    assert p("  x +  y ") == X + Y
    assert p("-x - -y") == -X + Y
    assert p("3") == XY.constant(3)


def test_parse_errors():
    with pytest.raises(LaurentParseError):
        p("x + ")
    with pytest.raises(LaurentParseError):
        p("z")
    with pytest.raises(LaurentParseError):
        p("x ^ w")


# -- hypothesis strategies ------------------------------------------------------------------

exponents = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
term_maps = st.dictionaries(exponents, st.integers(-5, 5), max_size=4)
polys = term_maps.map(lambda t: LaurentPoly(XY, t))
nonzero_polys = polys.filter(lambda q: not q.is_zero())
points = st.fixed_dictionaries(
    {
        "x": st.integers(-4, 4).filter(bool).map(Fraction),
        "y": st.integers(-4, 4).filter(bool).map(Fraction),
    }
)


@settings(max_examples=350)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    # three laws per example; the suite checks >= 1000 random instances
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(polys, polys, polys)
def test_mul_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(nonzero_polys, polys)
def test_exact_division_round_trip(q, r):
    assert try_exact_div(q * r, q) == r


@given(polys, polys, points)
def test_evaluate_is_ring_homomorphism(a, b, pt):
    assert evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt)
    assert evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt)


@given(polys)
def test_text_round_trip(a):
    assert parse_laurent(str(a), XY) == a


@given(polys)
def test_json_round_trip(a):
    assert poly_from_json(poly_to_json(a), XY) == a
