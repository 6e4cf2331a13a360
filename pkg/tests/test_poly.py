from fractions import Fraction

import pytest
import sympy

from qhopf.poly import (
    Family,
    LaurentPoly,
    ParseError,
    Series,
    TensorPoly,
    VarId,
    euler_product,
    lam,
    one,
    parse_poly,
    series_ops,
    substitute,
    t,
    yvar,
    zero,
)
from qhopf.repring import kappa


def P(text, l=0):
    return parse_poly(text, l)


def test_cancellation():
    assert lam(1, 0) + (-lam(1, 0)) == 0
    assert not (lam(1, 0) - lam(1, 0)).terms


def test_distributivity_mod_2():
    x = (t(1, 0, 2) + t(1, 1, 2)) * t(1, 0, 2)
    assert x == P("t[1,0]^2 + t[1,0]*t[1,1]", 2)


def test_four_term_expansion():
    x = (lam(1, 0) + lam(2, 0)) * (lam(1, 1) + lam(2, 1))
    assert x == P("L[1,0]*L[1,1] + L[1,0]*L[2,1] + L[2,0]*L[1,1] + L[2,0]*L[2,1]")
    assert len(x) == 4


def test_lattice_mismatch():
    with pytest.raises(ValueError, match="lattice mismatch"):
        t(1, 0) + t(1, 0, 2)
    with pytest.raises(ValueError, match="lattice mismatch"):
        t(1, 0) * t(1, 0, 3)


def test_spectral_indices_reduced():
    assert t(1, 3, 2) == t(1, 1, 2)
    assert lam(2, -1, 3) == lam(2, 2, 3)


def test_generator_conventions():
    assert t(0, 5) == 1
    assert t(-1, 0) == 0


@pytest.mark.parametrize("text", [
    "t[1,0]*t[1,1] - t[2,0] - t[2,1]",
    "L[1,0]*L[2,-1]",
    "Y[1,0] + Y[1,2]^-1",
    "2*t[2,1]^3 - 7",
    "0",
    "1",
])
def test_print_parse_fixed_point(text):
    x = P(text)
    assert str(P(str(x))) == str(x)
    assert P(str(x)) == x


def test_parse_arithmetic():
    assert P("(t[1,0] + 1)^2") == t(1, 0) ** 2 + t(1, 0) * 2 + 1
    assert P("-t[1,0]*(t[1,1] - t[1,1])") == 0
    assert P("Y[1,0]^-2") == yvar(1, 0, -2)


@pytest.mark.parametrize("text,pos", [("t[1,0] +", 8), ("t[1,0)", 0), ("3 ** t[1,0]", 3), ("(t[1,0]", 7)])
def test_parse_error_positions(text, pos):
    with pytest.raises(ParseError) as err:
        P(text)
    assert err.value.position == pos


def test_laurent_inverse_only_for_unit_monomials():
    assert yvar(1, 0) ** -1 * yvar(1, 0) == 1
    with pytest.raises(ValueError):
        (t(1, 0) + 1) ** -1


def test_substitute_reduction_rule():
    x = substitute(lam(1, 3), lambda v: lam(v.row, v.spectral % 2, 2), modulus=2)
    assert x == lam(1, 1, 2)


def test_substitute_kappa_cancels():
    assert kappa(lam(1, 0) * lam(2, -1), 2) == 1


def test_substitute_bold_lambda_rule():
    bold = lam(1, 0, 1)
    x = substitute(bold, lambda v: lam(v.row, 0, 2) * lam(v.row, 1, 2), modulus=2)
    assert x == lam(1, 0, 2) * lam(1, 1, 2)


def test_substitute_negative_exponent_needs_monomial():
    with pytest.raises(ValueError, match="negative exponent"):
        substitute(yvar(1, 0, -1), lambda v: yvar(1, 0) + yvar(1, 2))
    assert substitute(yvar(1, 0, -1), lambda v: yvar(1, 2) * -1) == yvar(1, 2, -1) * -1


def test_homogeneous_parts():
    x = P("t[1,0]*t[1,1] + t[2,0] + t[1,0] + 3")
    parts = x.homogeneous_parts(lambda v: v[1])
    assert parts[2] == P("t[1,0]*t[1,1] + t[2,0]")
    assert parts[0] == 3


def test_integral_check():
    assert (t(1, 0) * Fraction(2, 2)).integral() == t(1, 0)
    with pytest.raises(ValueError):
        (t(1, 0) * Fraction(1, 2)).integral()


def test_varid_order_and_text():
    assert str(VarId(Family.T, 2, -1)) == "t[2,-1]"
    assert VarId(Family.LAMBDA, 9, 9) < VarId(Family.Y, 0, 0) < VarId(Family.T, 0, 0)


def test_json_matches_text_terms():
    x = P("t[1,0]*t[1,1] - 2*t[2,1]")
    assert sorted(x.to_json()) == sorted([["t[1,0]*t[1,1]", 1], ["t[2,1]", -2]])


# ---------------------------------------------------------------- tensors

def test_tensor_multiplication_and_coefficients():
    a = TensorPoly.pure(t(1, 0), one())
    b = TensorPoly.pure(one(), t(1, 0))
    x = (a + b) * (a + b)
    m = next(iter(t(1, 0).terms))
    assert x.coefficient(m, m) == 2
    assert len(x) == 3


def test_tensor_contract():
    x = TensorPoly.pure(t(1, 0), t(2, 0)) + TensorPoly.pure(one(), t(1, 1))
    mono = lambda m: LaurentPoly({m: 1})
    assert x.contract(mono, mono) == t(1, 0) * t(2, 0) + t(1, 1)


# ---------------------------------------------------------------- series

def test_geometric_series():
    assert Series([1, -1], 3).inv() == Series([1, 1, 1, 1])


def test_product_formula_example():
    x = series_ops("mul", [Series([1, -1], 3), euler_product(2, 3)], 3)
    assert list(x) == [1, 1, 3, 5]
    assert list(euler_product(2, 3)) == [1, 2, 5, 10]


def test_exp_of_zero():
    assert list(Series([0], 5).exp()) == [1, 0, 0, 0, 0, 0]


def test_euler_product_is_partition_count():
    assert list(euler_product(1, 12)) == [int(sympy.partition(n)) for n in range(13)]


def test_exp_log_inverse():
    s = Series([0, 1, Fraction(1, 2), 3, -2], 4)
    back = s.exp().log()
    assert back == s


def test_series_errors():
    with pytest.raises(ValueError):
        Series([2, 1], 3).inv()
    with pytest.raises(ValueError):
        Series([1, 1], 3).exp()
    with pytest.raises(ValueError, match="non-integral"):
        series_ops("exp", [Series([0, Fraction(1, 2)], 2)], 2)


def test_series_with_polynomial_coefficients():
    s = Series([one(), t(1, 0), zero()], 2)
    sq = s * s
    assert sq[1] == t(1, 0) * 2
    assert sq[2] == t(1, 0) ** 2
