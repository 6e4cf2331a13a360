"""Root-of-unity layer: the l x l loop matrix of fundamental classes, its
determinant coefficients a_i, Frobenius pullbacks, and membership in the
ideal generated by the a_i.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .poly import Family, LaurentPoly, Series, VarId, lam, one, substitute, t, zero
from .repring import TElement, t_degree

# Spectral index of entry (i, j): either the row label i-1 (matching the
# unitriangular matrix picture) or the column label j.
CONVENTIONS = ("row", "column")


def loop_entry(i: int, j: int, l: int, degree: int, convention: str = "row") -> Series:
    """Entry (i, j), 0 <= i, j < l, as a series in u^{-1}."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    spec = i - 1 if convention == "row" else j
    coeffs = []
    for s in range(degree + 1):
        k = l * s + i - j
        coeffs.append(t(k, spec, l) if k >= 0 else zero(l))
    return Series(coeffs, degree)


def loop_matrix(l: int, degree: int, convention: str = "row") -> list[list[Series]]:
    return [[loop_entry(i, j, l, degree, convention) for j in range(l)] for i in range(l)]


def _perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for a in range(len(p)):
        while p[a] != a:
            b = p[a]
            p[a], p[b] = p[b], p[a]
            sign = -sign
    return sign


def determinant(mat: list[list[Series]]) -> Series:
    """Leibniz expansion over the series ring (fine for l <= 5)."""
    n = len(mat)
    degree = mat[0][0].degree
    total = Series([zero(mat[0][0][0].modulus)] * (degree + 1), degree)
    for p in itertools.permutations(range(n)):
        term = Series([one(mat[0][0][0].modulus)], degree)
        for r, c in enumerate(p):
            term = term * mat[r][c]
        total = total + term * _perm_sign(p)
    return total


@lru_cache(maxsize=None)
def det_coeffs(l: int, degree: int, convention: str = "row") -> tuple[TElement, ...]:
    det = determinant(loop_matrix(l, degree, convention))
    return tuple(det[k] if isinstance(det[k], LaurentPoly) else LaurentPoly.const(det[k], l) for k in range(degree + 1))


def det_coeff(i: int, l: int, convention: str = "row") -> TElement:
    """Coefficient a_i of u^{-i} in the determinant of the loop matrix."""
    if i < 0 or l < 1:
        raise ValueError("need i >= 0 and l >= 1")
    return det_coeffs(l, i, convention)[i]


def frobenius_sign(i: int, l: int) -> int:
    """Coefficient of prod_{j<l} t_{i,j} in a_i.

    The pullback has this monomial with coefficient 1 (same highest weight
    as the tensor product of the t_{i,j}), so it fixes the sign.  It equals
    the sign of the cyclic shift by i, i.e. (-1)^(i(l-1)).
    """
    mono = tuple((VarId(Family.T, i, j), 1) for j in range(l))
    return det_coeff(i, l).coefficient(mono)


def frobenius_pullback_fund(i: int, l: int) -> TElement:
    """Class of the Frobenius pullback of the i-th fundamental module."""
    if i == 0:
        return one(l)
    return det_coeff(i, l) * frobenius_sign(i, l)


def l2_closed_formula(i: int) -> TElement:
    """t_{i,0}t_{i,1} + sum_{j=1}^{i} (-1)^j (t_{i+j,0}t_{i-j,1} + t_{i+j,1}t_{i-j,0})."""
    out = t(i, 0, 2) * t(i, 1, 2)
    for j in range(1, i + 1):
        term = t(i + j, 0, 2) * t(i - j, 1, 2) + t(i + j, 1, 2) * t(i - j, 0, 2)
        out = out + (term if j % 2 == 0 else -term)
    return out


def frobenius_char(p: LaurentPoly, l: int) -> LaurentPoly:
    """Replace each Lambda_{i,0} on the one-point lattice by prod_m Lambda_{i,m}."""
    if p.modulus != 1:
        raise ValueError("expected a character on the one-point lattice (modulus 1)")

    def rule(v):
        if v.family != Family.LAMBDA:
            raise ValueError(f"{v} is not a Lambda variable")
        out = one(l)
        for m in range(l):
            out = out * lam(v.row, m, l)
        return out

    return substitute(p, rule, modulus=l)


# ---------------------------------------------------------------- the ideal (a_1, a_2, ...)

def _monomials_of_degree(d: int, l: int):
    """PBW monomials of t-degree ``d`` in the variables t_{i,n}, n mod l."""
    gens = [VarId(Family.T, i, n) for i in range(1, d + 1) for n in range(l)]

    def rec(start, rem, acc):
        if rem == 0:
            yield tuple(sorted(acc.items()))
            return
        for k in range(start, len(gens)):
            g = gens[k]
            if g.row <= rem:
                acc[g] = acc.get(g, 0) + 1
                yield from rec(k, rem - g.row, acc)
                acc[g] -= 1
                if not acc[g]:
                    del acc[g]

    yield from rec(0, d, {})


def _ideal_spanning_set(d: int, l: int) -> list[TElement]:
    out = []
    for i in range(1, d // l + 1):
        a = det_coeff(i, l)
        for m in _monomials_of_degree(d - l * i, l):
            out.append(LaurentPoly({m: 1}, l) * a)
    return out


def in_center_ideal(x: TElement, D: int) -> bool:
    """Is ``x`` in the ideal generated by a_1, ..., a_{D // l}?

    Each homogeneous component is tested for membership in the span of
    {monomial * a_i} by exact rank computation over Q.
    """
    l = x.modulus
    if l < 1:
        raise ValueError("expected an element with lattice modulus l >= 1")
    parts = x.homogeneous_parts(t_degree)
    if parts and max(parts) > D:
        raise ValueError(f"degree {max(parts)} exceeds bound {D}")
    for d, part in parts.items():
        if d == 0 or d < l:
            return False
        span = _ideal_spanning_set(d, l)
        monos = sorted({m for p in span + [part] for m in p.terms})
        index = {m: k for k, m in enumerate(monos)}

        def column(p):
            col = [QQ(0)] * len(monos)
            for m, c in p.terms.items():
                col[index[m]] = QQ(c)
            return col

        cols = [column(p) for p in span]
        A = DomainMatrix([list(r) for r in zip(*cols)], (len(monos), len(cols)), QQ)
        Ab = DomainMatrix([list(r) for r in zip(*(cols + [column(part)]))], (len(monos), len(cols) + 1), QQ)
        if A.rank() != Ab.rank():
            return False
    return True


def center_normal_form(x: TElement, D: int) -> TElement:
    """Remainder of ``x`` modulo a_1..a_{D // l} by exact division over Z.

    Lex order with t_{li,0} largest makes t_{li,0} the leading term of a_i;
    these are pairwise coprime, so the a_i form a Groebner basis and the
    remainder is zero exactly on the ideal.
    """
    l = x.modulus
    out = x
    for i in range(D // l, 0, -1):
        a = det_coeff(i, l)
        lead = VarId(Family.T, l * i, 0)
        repl = t(l * i, 0, l) - a
        out = substitute(out, {lead: repl})
    return out
