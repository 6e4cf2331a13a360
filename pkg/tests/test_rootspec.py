import pytest

from qhopf.poly import TensorPoly, lam, one, parse_poly, t
from qhopf.repring import character, coproduct, fundamental_char, res
from qhopf.rootspec import (
    center_normal_form,
    det_coeff,
    frobenius_char,
    frobenius_pullback_fund,
    frobenius_sign,
    in_center_ideal,
    l2_closed_formula,
)


def P(text, l):
    return parse_poly(text, l)


def grouplike(i, l, convention="row"):
    out = TensorPoly(None, 2, l)
    for j in range(i + 1):
        out = out + TensorPoly.pure(det_coeff(j, l, convention), det_coeff(i - j, l, convention))
    return coproduct(det_coeff(i, l, convention)) == out


def test_det_coeff_examples():
    assert det_coeff(0, 2) == 1
    assert det_coeff(1, 2) == P("t[2,0] + t[2,1] - t[1,0]*t[1,1]", 2)
    assert det_coeff(1, 1) == t(1, 0, 1)


def test_pullback_examples():
    assert frobenius_pullback_fund(1, 2) == P("t[1,0]*t[1,1] - t[2,0] - t[2,1]", 2)
    assert frobenius_pullback_fund(2, 2) == P(
        "t[2,0]*t[2,1] - t[3,0]*t[1,1] - t[3,1]*t[1,0] + t[4,0] + t[4,1]", 2)
    for i in range(1, 5):
        assert frobenius_pullback_fund(i, 2) == l2_closed_formula(i)
    assert frobenius_pullback_fund(0, 3) == 1


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_sign_is_cyclic_shift_sign(l):
    for i in range(1, 4):
        assert frobenius_sign(i, l) == (-1) ** (i * (l - 1))


@pytest.mark.parametrize("l", [2, 3])
def test_pullbacks_killed_by_restrictions(l):
    for i in range(1, 5):
        for m in range(l):
            assert not res(frobenius_pullback_fund(i, l), [m])


def test_one_point_lattice_is_degenerate():
    assert res(det_coeff(1, 1), [0]) == 1


@pytest.mark.parametrize("l", [1, 2, 3])
def test_determinant_coefficients_grouplike(l):
    for i in range(1, 5):
        assert grouplike(i, l)


def test_column_convention_breaks_grouplikeness():
    # entries t_{ls+i-j, j}: fine for l = 2, not for l = 3
    assert all(grouplike(i, 2, "column") for i in range(1, 4))
    assert not any(grouplike(i, 3, "column") for i in range(1, 4))
    assert res(det_coeff(1, 3, "column"), [0])


def test_literal_sign_gives_negative_character():
    # (-1)^(l+i) at l = 3, i = 2 yields minus a module class
    l, i, N = 3, 2, 5
    literal = det_coeff(i, l) * (-1) ** (l + i)
    target = frobenius_char(fundamental_char(i, 0, N, 1), l)
    assert character(literal, N) == -target
    assert character(frobenius_pullback_fund(i, l), N) == target


def test_frobenius_char_examples():
    bold = lam(1, 0, 1) + lam(2, 0, 1)
    assert frobenius_char(bold, 2) == P("L[1,0]*L[1,1] + L[2,0]*L[2,1]", 2)
    assert character(frobenius_pullback_fund(1, 2), 2) == frobenius_char(bold, 2)
    assert frobenius_char(one(1), 3) == 1
    x, y = lam(1, 0, 1) + 2, lam(2, 0, 1) * lam(1, 0, 1)
    assert frobenius_char(x * y, 3) == frobenius_char(x, 3) * frobenius_char(y, 3)
    with pytest.raises(ValueError):
        frobenius_char(lam(1, 0), 2)


def test_ideal_examples():
    assert in_center_ideal(det_coeff(1, 2), 2)
    assert not in_center_ideal(t(1, 0, 2), 2)
    assert not in_center_ideal(P("t[2,0] + t[2,1]", 2), 2)
    with pytest.raises(ValueError):
        in_center_ideal(t(1, 0), 2)


@pytest.mark.parametrize("l", [2, 3])
def test_ideal_membership_matches_normal_form(l):
    a1, a2 = det_coeff(1, l), det_coeff(2, l)
    samples = [
        a1 * t(1, 0, l),
        a1 * t(2, 1, l) - a2,
        a1 * a1 + t(1, 1, l) * a1,
        a1 + t(1, 0, l) * t(1, 1, l),
        t(2 * l, 0, l),
        a2 * 3 - a1 * t(l, 1, l),
    ]
    D = 2 * l + 2
    for x in samples:
        assert in_center_ideal(x, D) == (center_normal_form(x, D) == 0)
