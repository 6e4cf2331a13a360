"""Sparse Laurent polynomials in indexed variable families, tensors of them,
and truncated power series in one formal variable.

Spectral parameters are plain integers.  A polynomial may carry a lattice
modulus ``l > 0``, in which case every spectral index is stored reduced to
``0 <= n < l``.
"""

from __future__ import annotations

import re
from enum import IntEnum
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Sequence, Union

Scalar = Union[int, Fraction]


class Family(IntEnum):
    LAMBDA = 0
    Y = 1
    T = 2

    @property
    def prefix(self) -> str:
        return _PREFIX[self]


_PREFIX = {Family.LAMBDA: "L", Family.Y: "Y", Family.T: "t"}
_FROM_PREFIX = {v: k for k, v in _PREFIX.items()}


class VarId(NamedTuple):
    family: int
    row: int
    spectral: int

    def __str__(self) -> str:
        return f"{_PREFIX[Family(self.family)]}[{self.row},{self.spectral}]"


# A monomial is a sorted tuple of (VarId, nonzero exponent) pairs.
Monomial = tuple

ONE: Monomial = ()


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return tuple(sorted(d.items()))


def mono_pow(a: Monomial, k: int) -> Monomial:
    if k == 0:
        return ONE
    return tuple((v, e * k) for v, e in a)


def mono_degree(a: Monomial, weight: Callable[[VarId], int] | None = None) -> int:
    if weight is None:
        return sum(e for _, e in a)
    return sum(weight(v) * e for v, e in a)


def mono_str(a: Monomial) -> str:
    if not a:
        return "1"
    parts = []
    for v, e in a:
        s = str(VarId(*v))
        parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts)


def _reduce_var(v, modulus: int):
    if modulus and not 0 <= v[2] < modulus:
        return VarId(v[0], v[1], v[2] % modulus)
    return v


class LaurentPoly:
    """Immutable sparse Laurent polynomial with exact coefficients.

    ``terms`` maps monomials to nonzero ``int`` (or ``Fraction`` for
    intermediate results).
    """

    __slots__ = ("terms", "modulus", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None, modulus: int = 0):
        if modulus < 0:
            raise ValueError("modulus must be >= 0")
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = _norm(c)
        self.terms: dict = clean
        self.modulus = modulus
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, modulus: int) -> "LaurentPoly":
        # trusted constructor: terms already zero-free and normalized
        p = object.__new__(cls)
        p.terms = terms
        p.modulus = modulus
        p._hash = None
        return p

    # constructors
    @classmethod
    def const(cls, c: Scalar, modulus: int = 0) -> "LaurentPoly":
        return cls({ONE: c}, modulus)

    @classmethod
    def var(cls, family: int, row: int, spectral: int, modulus: int = 0, exp: int = 1) -> "LaurentPoly":
        if row == 0:
            return cls.const(1, modulus)
        if row < 0:
            raise ValueError("row index must be >= 0")
        v = _reduce_var(VarId(int(family), row, spectral), modulus)
        return cls._raw({((v, exp),): 1}, modulus)

    @classmethod
    def monomial(cls, mono: Monomial, coef: Scalar = 1, modulus: int = 0) -> "LaurentPoly":
        return cls({mono: coef}, modulus)

    # structure
    def __iter__(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(mono, 0)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> Scalar:
        return self.terms.get(ONE, 0)

    def homogeneous_parts(self, weight: Callable[[VarId], int] | None = None) -> dict[int, "LaurentPoly"]:
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            out.setdefault(mono_degree(m, weight), {})[m] = c
        return {d: LaurentPoly._raw(t, self.modulus) for d, t in sorted(out.items())}

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def integral(self) -> "LaurentPoly":
        if not self.is_integral():
            raise ValueError("non-integral coefficient")
        return self

    # arithmetic
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.modulus != self.modulus:
                raise ValueError("lattice mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if len(o.terms) > len(self.terms):
            a, b = o.terms, self.terms
        else:
            a, b = self.terms, o.terms
        res = dict(a)
        for m, c in b.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = _norm(s)
            else:
                del res[m]
        return LaurentPoly._raw(res, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self.terms.items()}, self.modulus)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: Scalar) -> "LaurentPoly":
        if not k:
            return LaurentPoly(None, self.modulus)
        return LaurentPoly._raw({m: _norm(c * k) for m, c in self.terms.items()}, self.modulus)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        res: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                s = res.get(m, 0) + c1 * c2
                if s:
                    res[m] = s
                else:
                    del res[m]
        return LaurentPoly._raw({m: _norm(c) for m, c in res.items()}, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (m, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("negative power of a non-unit monomial")
            return LaurentPoly._raw({mono_pow(m, k): c ** (-k)}, self.modulus)
        result = LaurentPoly.const(1, self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {ONE: other}
        if isinstance(other, LaurentPoly):
            return self.modulus == other.modulus and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.terms.items()), self.modulus))
        return self._hash

    def __str__(self) -> str:
        return format_terms(sorted(self.terms.items()), mono_str)

    def __repr__(self) -> str:
        tag = f", modulus={self.modulus}" if self.modulus else ""
        return f"LaurentPoly({str(self)!r}{tag})"

    def to_json(self) -> list:
        return [[mono_str(m), _json_scalar(c)] for m, c in sorted(self.terms.items())]

    def map_coefficients(self, fn: Callable[[Scalar], Scalar]) -> "LaurentPoly":
        return LaurentPoly({m: fn(c) for m, c in self.terms.items()}, self.modulus)

    def with_modulus(self, l: int) -> "LaurentPoly":
        """Reduce spectral indices mod ``l`` (ring map from the generic lattice)."""
        if self.modulus:
            raise ValueError("already carries a lattice modulus")
        return substitute(self, lambda v: LaurentPoly.var(v.family, v.row, v.spectral, l), modulus=l)


def _json_scalar(c):
    return c if isinstance(c, int) else str(c)


def format_terms(items: Iterable[tuple[object, Scalar]], show: Callable[[object], str]) -> str:
    out = []
    for key, c in items:
        body = show(key)
        if body == "1":
            text, neg = str(abs(c)), c < 0
        elif c == 1 or c == -1:
            text, neg = body, c < 0
        else:
            text, neg = f"{abs(c)}*{body}", c < 0
        if not out:
            out.append("-" + text if neg else text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out) if out else "0"


def t(i: int, n: int, modulus: int = 0) -> LaurentPoly:
    """Fundamental class t_{i,n}; t_{0,n} is 1 and negative rows vanish."""
    if i < 0:
        return LaurentPoly(None, modulus)
    return LaurentPoly.var(Family.T, i, n, modulus)


def lam(i: int, n: int, modulus: int = 0) -> LaurentPoly:
    return LaurentPoly.var(Family.LAMBDA, i, n, modulus)


def yvar(i: int, n: int, exp: int = 1) -> LaurentPoly:
    return LaurentPoly.var(Family.Y, i, n, 0, exp)


def zero(modulus: int = 0) -> LaurentPoly:
    return LaurentPoly(None, modulus)


def one(modulus: int = 0) -> LaurentPoly:
    return LaurentPoly.const(1, modulus)


def poly_arith(op: str, a: LaurentPoly, b=None) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


def substitute(p: LaurentPoly, rule, modulus: int | None = None) -> LaurentPoly:
    """Apply the ring map sending each variable ``v`` to ``rule(v)``.

    ``rule`` is a callable or a mapping; a mapping may omit variables, which
    are then kept.  ``modulus`` is the modulus of the result (defaults to
    that of ``p``).
    """
    out_mod = p.modulus if modulus is None else modulus
    if callable(rule):
        get = rule
    else:
        def get(v):
            if v in rule:
                return rule[v]
            return LaurentPoly.var(v.family, v.row, v.spectral, out_mod)
    images: dict = {}
    powers: dict = {}

    def image_pow(v, e):
        key = (v, e)
        if key not in powers:
            if v not in images:
                img = get(VarId(*v))
                if isinstance(img, (int, Fraction)):
                    img = LaurentPoly.const(img, out_mod)
                if img.modulus != out_mod:
                    raise ValueError("lattice mismatch")
                images[v] = img
            img = images[v]
            if e < 0 and not (len(img.terms) == 1 and next(iter(img.terms.values())) in (1, -1)):
                raise ValueError(f"negative exponent on {VarId(*v)} mapped to a non-monomial")
            powers[key] = img ** e
        return powers[key]

    total = LaurentPoly(None, out_mod)
    for m, c in p.terms.items():
        term = LaurentPoly.const(c, out_mod)
        for v, e in m:
            term = term * image_pow(v, e)
            if not term:
                break
        total = total + term
    return total


class TensorPoly:
    """Element of a k-fold tensor power of a Laurent polynomial ring.

    Keys are tuples of monomials; multiplication is factor-wise.
    """

    __slots__ = ("terms", "arity", "modulus")

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None, arity: int = 2, modulus: int = 0):
        self.terms = {k: _norm(c) for k, c in (terms or {}).items() if c}
        self.arity = arity
        self.modulus = modulus

    @classmethod
    def pure(cls, *factors: LaurentPoly) -> "TensorPoly":
        mod = factors[0].modulus
        terms: dict = {(): 1}
        for f in factors:
            if f.modulus != mod:
                raise ValueError("lattice mismatch")
            new: dict = {}
            for k, c in terms.items():
                for m, d in f.terms.items():
                    new[k + (m,)] = c * d
            terms = new
        return cls(terms, len(factors), mod)

    def _check(self, other: "TensorPoly"):
        if other.arity != self.arity:
            raise ValueError("tensor arity mismatch")
        if other.modulus != self.modulus:
            raise ValueError("lattice mismatch")

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        self._check(other)
        res = dict(self.terms)
        for k, c in other.terms.items():
            res[k] = res.get(k, 0) + c
        return TensorPoly(res, self.arity, self.modulus)

    def __neg__(self):
        return TensorPoly({k: -c for k, c in self.terms.items()}, self.arity, self.modulus)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TensorPoly({k: c * other for k, c in self.terms.items()}, self.arity, self.modulus)
        self._check(other)
        res: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(mono_mul(a, b) for a, b in zip(k1, k2))
                res[k] = res.get(k, 0) + c1 * c2
        return TensorPoly(res, self.arity, self.modulus)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TensorPoly):
            return (self.arity, self.modulus, self.terms) == (other.arity, other.modulus, other.terms)
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, *monos: Monomial) -> Scalar:
        return self.terms.get(tuple(monos), 0)

    def expand_slot(self, pos: int, fn: Callable[[Monomial], "TensorPoly"]) -> "TensorPoly":
        """Replace slot ``pos`` by ``fn(monomial)`` (a tensor of any arity)."""
        res: dict = {}
        arity = None
        cache: dict = {}
        for k, c in self.terms.items():
            m = k[pos]
            if m not in cache:
                cache[m] = fn(m)
            img = cache[m]
            arity = self.arity - 1 + img.arity
            for k2, c2 in img.terms.items():
                key = k[:pos] + k2 + k[pos + 1:]
                res[key] = res.get(key, 0) + c * c2
        if arity is None:
            arity = self.arity
        return TensorPoly(res, arity, self.modulus)

    def contract(self, *maps: Callable[[Monomial], LaurentPoly]) -> LaurentPoly:
        """Apply one map per slot and multiply the results together."""
        total = zero(self.modulus)
        for k, c in self.terms.items():
            term = LaurentPoly.const(c, self.modulus)
            for fn, m in zip(maps, k):
                term = term * fn(m)
            total = total + term
        return total

    def __str__(self) -> str:
        def show(key):
            return " ⊗ ".join(mono_str(m) for m in key)
        items = sorted(self.terms.items())
        out = []
        for key, c in items:
            body = show(key)
            coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            out.append(f"{coef}{body}")
        return " + ".join(out).replace("+ -", "- ") if out else "0"

    def to_json(self) -> list:
        return [[[mono_str(m) for m in key], _json_scalar(c)] for key, c in sorted(self.terms.items())]


# ---------------------------------------------------------------- parsing

class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<var>[LYt]\[\s*-?\d+\s*,\s*-?\d+\s*\])|(?P<int>\d+)|(?P<op>[-+*^()]))")


def _tokens(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:pos + 1].strip() or text[pos:]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_poly(text: str, modulus: int = 0) -> LaurentPoly:
    """Parse the text syntax ``t[1,0]*t[1,1] - 2*t[2,1]^3``."""
    toks = _tokens(text)
    idx = 0

    def peek():
        return toks[idx]

    def take(kind=None, value=None):
        nonlocal idx
        tok = toks[idx]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"expected {value or kind}", tok[2])
        idx += 1
        return tok

    def expr():
        sign = 1
        if peek()[1] in "+-" and peek()[0] == "op":
            sign = -1 if take()[1] == "-" else 1
        acc = term() * sign
        while peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term():
        acc = factor()
        while peek()[0] == "op" and peek()[1] == "*":
            take()
            acc = acc * factor()
        return acc

    def factor():
        base = atom()
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            neg = False
            if peek()[1] == "-":
                take()
                neg = True
            e = int(take("int")[1])
            try:
                base = base ** (-e if neg else e)
            except ValueError as exc:
                raise ParseError(str(exc), peek()[2]) from None
        return base

    def atom():
        kind, val, pos = peek()
        if kind == "int":
            take()
            return LaurentPoly.const(int(val), modulus)
        if kind == "var":
            take()
            fam = _FROM_PREFIX[val[0]]
            i, n = (int(x) for x in val[2:-1].split(","))
            if i < 0:
                raise ParseError("negative row index", pos)
            return LaurentPoly.var(fam, i, n, modulus)
        if kind == "op" and val == "(":
            take()
            inner = expr()
            take("op", ")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)

    result = expr()
    if peek()[0] != "end":
        raise ParseError(f"unexpected {peek()[1]!r}", peek()[2])
    return result


# ---------------------------------------------------------------- series

class Series:
    """Power series c_0 + c_1 x + ... + c_D x^D truncated at degree D.

    Coefficients may be integers, fractions, or ring elements supporting
    ``+``, ``*`` and scalar multiplication (``LaurentPoly``, Hall elements).
    """

    __slots__ = ("coeffs", "degree")

    def __init__(self, coeffs: Sequence, degree: int | None = None):
        coeffs = list(coeffs)
        if degree is None:
            degree = len(coeffs) - 1
        coeffs = (coeffs + [0] * (degree + 1))[: degree + 1]
        self.coeffs = [_norm(c) if isinstance(c, Fraction) else c for c in coeffs]
        self.degree = degree

    @classmethod
    def monomial_term(cls, k: int, c, degree: int) -> "Series":
        s = [0] * (degree + 1)
        if k <= degree:
            s[k] = c
        return cls(s, degree)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def _deg(self, other: "Series") -> int:
        return min(self.degree, other.degree)

    def __add__(self, other):
        if not isinstance(other, Series):
            other = Series([other], self.degree)
        d = self._deg(other)
        return Series([self.coeffs[k] + other.coeffs[k] for k in range(d + 1)], d)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([c * other for c in self.coeffs], self.degree)
        d = self._deg(other)
        out = []
        for n in range(d + 1):
            acc = 0
            for k in range(n + 1):
                a, b = self.coeffs[k], other.coeffs[n - k]
                if _is_zero(a) or _is_zero(b):
                    continue
                acc = acc + a * b
            out.append(acc)
        return Series(out, d)

    def __rmul__(self, other):
        return Series([other * c for c in self.coeffs], self.degree)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        d = self._deg(other)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(d + 1))

    __hash__ = None

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return self.inv() ** (-k)
        out = Series([1], self.degree)
        for _ in range(k):
            out = out * self
        return out

    def truncate(self, degree: int) -> "Series":
        return Series(self.coeffs[: degree + 1], min(degree, self.degree))

    def inv(self) -> "Series":
        if self.coeffs[0] != 1:
            raise ValueError("non-invertible constant term")
        b = [1]
        for n in range(1, self.degree + 1):
            acc = 0
            for k in range(1, n + 1):
                if not _is_zero(self.coeffs[k]):
                    acc = acc + self.coeffs[k] * b[n - k]
            b.append(-acc)
        return Series(b, self.degree)

    def exp(self) -> "Series":
        if not _is_zero(self.coeffs[0]):
            raise ValueError("exp needs zero constant term")
        e = [1]
        for n in range(1, self.degree + 1):
            acc = 0
            for k in range(1, n + 1):
                if not _is_zero(self.coeffs[k]):
                    acc = acc + (self.coeffs[k] * k) * e[n - k]
            e.append(acc * Fraction(1, n))
        return Series(e, self.degree)

    def log(self) -> "Series":
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        a = self.coeffs
        lg = [0]
        for n in range(1, self.degree + 1):
            acc = 0
            for k in range(1, n):
                if not _is_zero(lg[k]) and not _is_zero(a[n - k]):
                    acc = acc + (lg[k] * k) * a[n - k]
            lg.append(a[n] - acc * Fraction(1, n))
        return Series(lg, self.degree)

    def integral(self) -> "Series":
        """Return the same series with every coefficient checked integral."""
        return Series([_integral(c) for c in self.coeffs], self.degree)

    def __repr__(self):
        return f"Series({self.coeffs!r})"


def _is_zero(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 0
    return not c


def _integral(c):
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ValueError(f"non-integral coefficient {c}")
        return int(c)
    if isinstance(c, int):
        return c
    return c.integral()


def euler_product(k: int, degree: int) -> Series:
    """prod_{i>=1} (1 - x^i)^(-k) truncated at ``degree``."""
    base = Series([1], degree)
    for i in range(1, degree + 1):
        base = base * (Series([1], degree) - Series.monomial_term(i, 1, degree))
    if k < 0:
        return base ** (-k)
    return base.inv() ** k


def series_ops(op: str, args: Sequence[Series], degree: int) -> Series:
    """Dispatch ``mul``, ``inv``, ``exp`` and ``log``; the final result is
    required to have integer coefficients."""
    args = [a.truncate(degree) if a.degree > degree else a for a in args]
    if op == "mul":
        out = Series([1], degree)
        for a in args:
            out = out * a
    elif op == "inv":
        out = args[0].inv()
    elif op == "exp":
        out = args[0].exp()
    elif op == "log":
        out = args[0].log()
    else:
        raise ValueError(f"unknown series operation {op!r}")
    return out.integral()
