"""The representation ring Z[t_{i,n}] of fundamental classes, with its
q-characters, Hopf structure and restriction operators.

Elements (``TElement``) and characters (``CharPoly``) are both plain
``LaurentPoly`` values: T-family variables for the former, Lambda-family
variables for the latter.  With ``modulus = l > 0`` spectral indices live in
Z/l.

Matrix picture: the generator t_{i,n} is the entry M_{n+1, n+1-i} of a
lower unitriangular matrix, i.e. M_{r,c} = t_{r-c, r-1}.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from math import comb
from typing import Iterable

from .poly import (
    ONE,
    Family,
    LaurentPoly,
    TensorPoly,
    VarId,
    mono_mul,
    one,
    substitute,
    t,
    yvar,
    zero,
)
from .young import Partition, ssyt_enumerate

TElement = LaurentPoly
CharPoly = LaurentPoly


def _t_index(v) -> tuple[int, int]:
    if v[0] != Family.T:
        raise ValueError(f"{VarId(*v)} is not a fundamental class")
    return v[1], v[2]


def t_degree(v) -> int:
    """Grading: deg t_{i,n} = i."""
    return v[1]


# ---------------------------------------------------------------- characters

def qchar_eval(shape: Partition, n: int, N: int, modulus: int = 0) -> CharPoly:
    """Sum over tableaux of prod_boxes Lambda_{f(i,j), n + j - i}."""
    if len(shape) > N:
        raise ValueError(f"shape {shape} has more than N={N} rows")
    total: dict = {}
    for tab in ssyt_enumerate(shape, N):
        m = ONE
        for (i, j), v in tab.items():
            spec = n + j - i
            if modulus:
                spec %= modulus
            m = mono_mul(m, ((VarId(Family.LAMBDA, v, spec), 1),))
        total[m] = total.get(m, 0) + 1
    return LaurentPoly(total, modulus)


@lru_cache(maxsize=None)
def fundamental_char(i: int, n: int, N: int, modulus: int = 0) -> CharPoly:
    """Character of t_{i,n} at level N (zero when i > N)."""
    if i > N:
        return zero(modulus)
    return qchar_eval(Partition((1,) * i), n, N, modulus)


def character(x: TElement, N: int) -> CharPoly:
    """The character homomorphism at level N."""
    l = x.modulus

    def rule(v):
        i, n = _t_index(v)
        return fundamental_char(i, n, N, l)

    return substitute(x, rule)


def kappa(p: CharPoly, N: int) -> LaurentPoly:
    """Lambda_{i,n} -> Y_{i,2n+i-1} Y_{i-1,2n+i}^{-1}, with Y_0 = Y_N = 1."""
    if p.modulus:
        raise ValueError("kappa is defined on the generic lattice only")

    def rule(v):
        if v.family != Family.LAMBDA:
            raise ValueError(f"{v} is not a Lambda variable")
        i, n = v.row, v.spectral
        if i > N:
            raise ValueError(f"row {i} exceeds level {N}")
        out = one()
        if i < N:
            out = out * yvar(i, 2 * n + i - 1)
        if i > 1:
            out = out * yvar(i - 1, 2 * n + i, -1)
        return out

    return substitute(p, rule)


def is_dominant(mono, N: int) -> bool:
    """True iff kappa(mono) has no negative exponent."""
    if isinstance(mono, LaurentPoly):
        if len(mono) != 1:
            raise ValueError("expected a single monomial")
        (mono, _), = mono.terms.items()
    img = kappa(LaurentPoly({mono: 1}), N)
    (m, _), = img.terms.items()
    return all(e > 0 for _, e in m)


def _chi(i: int, b: int, N: int) -> LaurentPoly:
    second = yvar(i, b + 2, -1)
    if i - 1 >= 1:
        second = second * yvar(i - 1, b + 1)
    if i + 1 <= N - 1:
        second = second * yvar(i + 1, b + 1)
    return yvar(i, b) + second


def screening_kernel_member(p: LaurentPoly, i: int, N: int) -> bool:
    """Is ``p`` a polynomial in the chi_{i,b} with coefficients Laurent in
    the Y_{j,.}, j != i?  Decided by leading-term elimination."""
    if not 1 <= i < N:
        raise ValueError("need 1 <= i < N")
    rest = p
    chi_cache: dict = {}
    while rest:
        def key(item):
            m = item[0]
            return (sum(e for v, e in m if v[0] == Family.Y and v[1] == i), m)

        m, c = max(rest.terms.items(), key=key)
        ipart = [(v, e) for v, e in m if v[0] == Family.Y and v[1] == i]
        if any(e < 0 for _, e in ipart):
            return False
        free = tuple((v, e) for v, e in m if not (v[0] == Family.Y and v[1] == i))
        sub = LaurentPoly({free: c})
        for v, e in ipart:
            b = v[2]
            if b not in chi_cache:
                chi_cache[b] = _chi(i, b, N)
            sub = sub * chi_cache[b] ** e
        rest = rest - sub
    return True


# ---------------------------------------------------------------- Hopf structure

@lru_cache(maxsize=None)
def _delta_gen(i: int, n: int, modulus: int) -> TensorPoly:
    out = TensorPoly(None, 2, modulus)
    for j in range(i + 1):
        out = out + TensorPoly.pure(t(j, n, modulus), t(i - j, n - j, modulus))
    return out


def _coproduct_monomial(m, modulus: int) -> TensorPoly:
    out = TensorPoly({(ONE, ONE): 1}, 2, modulus)
    for v, e in m:
        if e < 0:
            raise ValueError("negative exponent in a representation-ring element")
        out = out * _delta_pow_m(v, e, modulus)
    return out


@lru_cache(maxsize=None)
def _delta_pow_m(v, e: int, modulus: int) -> TensorPoly:
    i, n = _t_index(v)
    base = _delta_gen(i, n, modulus)
    out = base
    for _ in range(e - 1):
        out = out * base
    return out


def coproduct(x: TElement) -> TensorPoly:
    """Delta t_{i,n} = sum_j t_{j,n} (x) t_{i-j,n-j}, extended multiplicatively."""
    out = TensorPoly(None, 2, x.modulus)
    for m, c in x.terms.items():
        out = out + _coproduct_monomial(m, x.modulus) * c
    return out


def coproduct_monomial(m, modulus: int = 0) -> TensorPoly:
    return _coproduct_monomial(m, modulus)


def counit(x: TElement) -> int:
    return x.constant_term()


@lru_cache(maxsize=None)
def _antipode_gen(i: int, n: int, modulus: int) -> TElement:
    r, c = n + 1, n + 1 - i
    return MatrixWindow(c, r, modulus).inverse_entry(r, c)


def antipode(x: TElement) -> TElement:
    l = x.modulus

    def rule(v):
        i, n = _t_index(v)
        return _antipode_gen(i, n, l)

    return substitute(x, rule)


# ---------------------------------------------------------------- matrix view

def entry_of(i: int, n: int) -> tuple[int, int]:
    """Position (r, c) of t_{i,n} in the unitriangular matrix."""
    return n + 1, n + 1 - i


def t_from_entry(r: int, c: int, modulus: int = 0) -> TElement:
    if r < c:
        return zero(modulus)
    return t(r - c, r - 1, modulus)


class MatrixWindow:
    """Square block of the unitriangular matrix on rows/columns lo..hi."""

    def __init__(self, lo: int, hi: int, modulus: int = 0):
        if hi < lo:
            raise ValueError("empty window")
        self.lo, self.hi, self.modulus = lo, hi, modulus
        self._inv: dict = {}

    def __contains__(self, rc) -> bool:
        r, c = rc
        return self.lo <= r <= self.hi and self.lo <= c <= self.hi

    def entry(self, r: int, c: int) -> TElement:
        if (r, c) not in self:
            raise ValueError(f"entry ({r},{c}) outside window [{self.lo},{self.hi}]")
        return t_from_entry(r, c, self.modulus)

    def rows(self) -> list[list[TElement]]:
        rng = range(self.lo, self.hi + 1)
        return [[self.entry(r, c) for c in rng] for r in rng]

    def inverse_entry(self, r: int, c: int) -> TElement:
        """(r, c) entry of the inverse, by unitriangular back-substitution."""
        if (r, c) not in self:
            raise ValueError("entry outside window")
        if r < c:
            return zero(self.modulus)
        if r == c:
            return one(self.modulus)
        key = (r, c)
        if key not in self._inv:
            acc = zero(self.modulus)
            for k in range(c, r):
                acc = acc + self.entry(r, k) * self.inverse_entry(k, c)
            self._inv[key] = -acc
        return self._inv[key]

    def coproduct_entry(self, r: int, c: int) -> TensorPoly:
        """sum_k M_{r,k} (x) M_{k,c}."""
        out = TensorPoly(None, 2, self.modulus)
        for k in range(c, r + 1):
            out = out + TensorPoly.pure(self.entry(r, k), self.entry(k, c))
        return out


def matrix_view(x: TElement, window: tuple[int, int]) -> MatrixWindow:
    """Window of the matrix picture, checked to contain every variable of ``x``."""
    w = MatrixWindow(window[0], window[1], x.modulus)
    for v in x.variables():
        i, n = _t_index(v)
        r, c = entry_of(i, n)
        if x.modulus:
            # periodic matrix: shift the entry to the leftmost translate inside
            c += -((c - w.lo) // x.modulus) * x.modulus
            r = c + i
        if (r, c) not in w:
            raise ValueError(f"window too small for t[{i},{n}]")
    return w


def specialize_l(x: LaurentPoly, l: int) -> LaurentPoly:
    """Reduce all spectral indices mod ``l``."""
    if l < 1:
        raise ValueError("l must be >= 1")
    return x.with_modulus(l)


# ---------------------------------------------------------------- restriction

def res(x: TElement, m: Iterable[int]) -> TElement:
    """Restriction operator res_m for a multiset ``m`` of column indices.

    On a generator, res_{(c)} t_{i,j} = t_{i-1,j} when c = j-i+1 (mod l)
    and 0 otherwise; on products the entries of ``m`` are spread over the
    factors, at most one per factor.
    """
    l = x.modulus
    need = Counter((c % l) if l else c for c in m)
    if not need:
        return x
    out: dict = {}
    for mono, coef in x.terms.items():
        for k, new in _res_monomial(mono, need, l):
            out[new] = out.get(new, 0) + coef * k
    return LaurentPoly(out, l)


def _column(v, l: int) -> int:
    i, j = _t_index(v)
    c = j - i + 1
    return c % l if l else c


def _res_monomial(mono, need: Counter, l: int):
    by_col: dict = {}
    for v, e in mono:
        by_col.setdefault(_column(v, l), []).append((v, e))
    choices = []
    for col, cnt in need.items():
        vs = by_col.get(col)
        if not vs or sum(e for _, e in vs) < cnt:
            return
        opts = []
        for ks in _bounded_compositions(cnt, [e for _, e in vs]):
            coef = 1
            delta = []
            for (v, e), k in zip(vs, ks):
                if k:
                    coef *= comb(e, k)
                    delta.append((v, k))
            opts.append((coef, delta))
        choices.append(opts)
    for combo in itertools.product(*choices):
        coef = 1
        d = dict(mono)
        for c, delta in combo:
            coef *= c
            for v, k in delta:
                d[v] -= k
                if not d[v]:
                    del d[v]
                if v[1] > 1:
                    w = VarId(v[0], v[1] - 1, v[2])
                    d[w] = d.get(w, 0) + k
        yield coef, tuple(sorted(d.items()))


def _bounded_compositions(total: int, caps: list[int]):
    if not caps:
        if total == 0:
            yield ()
        return
    for k in range(min(total, caps[0]) + 1):
        for rest in _bounded_compositions(total - k, caps[1:]):
            yield (k,) + rest


# ---------------------------------------------------------------- PBW expansion

def _row_sum(mono) -> int:
    return sum(v[1] * e for v, e in mono)


def dominant_factorization(mono, N: int) -> dict[tuple[int, int], int]:
    """Split a dominant Lambda-monomial into highest monomials of t_{i,n}.

    Returns exponents keyed by (i, n).
    """
    mult = {(v[1], v[2]): e for v, e in mono}
    diagonals = sorted({i + n for i, n in mult})
    out: dict = {}
    for D in diagonals:
        cs = [mult.get((i, D - i), 0) for i in range(1, N + 2)]
        for i in range(1, N + 1):
            k = cs[i - 1] - cs[i]
            if k < 0:
                raise ValueError("monomial is not dominant")
            if k:
                out[(i, D - 1)] = k
    return out


def express_in_pbw(p: CharPoly, N: int) -> TElement:
    """Write a character as a polynomial in the fundamental classes.

    The dominant monomial with the least total row index is always the
    highest monomial of some PBW term, so it is peeled off first.
    """
    if p.modulus:
        raise ValueError("PBW expansion is implemented on the generic lattice")
    rest = p
    result: dict = {}
    while rest:
        dominant = [(m, c) for m, c in rest.terms.items() if is_dominant(m, N)]
        if not dominant:
            raise ValueError("not a character")
        m, c = min(dominant, key=lambda mc: (_row_sum(mc[0]), mc[0]))
        fac = dominant_factorization(m, N)
        tm = tuple(sorted((VarId(Family.T, i, n), e) for (i, n), e in fac.items()))
        if any(i > N for i, _ in fac):
            raise ValueError("not a character")
        result[tm] = result.get(tm, 0) + c
        rest = rest - character(LaurentPoly({tm: c}), N)
    return LaurentPoly(result)


def pbw_monomials(max_degree: int, spectrals: Iterable[int], modulus: int = 0, min_degree: int = 1):
    """PBW monomials in t_{i,n} (n from ``spectrals``, reduced mod l) of
    t-degree between ``min_degree`` and ``max_degree``."""
    ns = sorted({(n % modulus) if modulus else n for n in spectrals})
    gens = [VarId(Family.T, i, n) for i in range(1, max_degree + 1) for n in ns]
    out = []

    def rec(start, rem, acc):
        deg = max_degree - rem
        if deg >= min_degree:
            out.append(tuple(sorted(acc.items())))
        for k in range(start, len(gens)):
            g = gens[k]
            if g.row <= rem:
                acc[g] = acc.get(g, 0) + 1
                rec(k, rem - g.row, acc)
                acc[g] -= 1
                if not acc[g]:
                    del acc[g]

    rec(0, max_degree, {})
    return out


def jacobi_trudi(shape: Partition, n: int = 0) -> TElement:
    """det(t_{mu_i - i + j, n + j - 1}) over the conjugate shape mu."""
    cols = shape.conjugate().parts
    k = len(cols)
    total = zero()
    for perm in itertools.permutations(range(k)):
        term = one()
        for a in range(k):
            b = perm[a]
            term = term * t(cols[a] - a + b, n + b)
            if not term:
                break
        sign = 1
        seen = list(perm)
        for a in range(k):
            while seen[a] != a:
                c = seen[a]
                seen[a], seen[c] = seen[c], seen[a]
                sign = -sign
        total = total + term * sign
    return total
