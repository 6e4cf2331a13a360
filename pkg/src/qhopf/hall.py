"""Hall algebras (at parameter 1) of the linear quiver A_inf and the cyclic
quiver with l vertices.

A snake with tail ``tau`` and length ``L`` covers the vertices
tau, tau+1, ..., tau+L; its head is tau+L and arrows point toward the head.
An A-set is a multiset of snakes.  Quiver ``l = 0`` is A_inf; for ``l >= 1``
vertices are residues mod l.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, NamedTuple

from .poly import Family, LaurentPoly, ParseError, VarId, format_terms, mono_str
from .repring import coproduct_monomial


class Snake(NamedTuple):
    tail: int
    length: int

    @property
    def head(self) -> int:
        return self.tail + self.length

    def vertices(self) -> range:
        return range(self.tail, self.tail + self.length + 1)

    def __str__(self) -> str:
        return f"({self.tail}:{self.length})"


def _snake(tail: int, length: int, l: int) -> Snake:
    return Snake(tail % l if l else tail, length)


@dataclass(frozen=True, order=True)
class ASet:
    snakes: tuple
    l: int = 0

    def __post_init__(self):
        snakes = tuple(sorted(_snake(s[0], s[1], self.l) for s in self.snakes))
        if any(s.length < 0 for s in snakes):
            raise ValueError("snake length must be >= 0")
        object.__setattr__(self, "snakes", snakes)

    @classmethod
    def empty(cls, l: int = 0) -> "ASet":
        return cls((), l)

    @classmethod
    def from_counter(cls, counts: Mapping[Snake, int], l: int) -> "ASet":
        return cls(tuple(Counter(counts).elements()), l)

    def counter(self) -> Counter:
        return Counter(self.snakes)

    def __len__(self) -> int:
        return len(self.snakes)

    @property
    def size(self) -> int:
        """Number of elements (vertices counted with multiplicity)."""
        return sum(s.length + 1 for s in self.snakes)

    def degree(self) -> Counter:
        d: Counter = Counter()
        for s in self.snakes:
            for v in s.vertices():
                d[v % self.l if self.l else v] += 1
        return d

    def direct_sum(self, other: "ASet") -> "ASet":
        _same_quiver(self.l, other.l)
        return ASet(self.snakes + other.snakes, self.l)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.snakes)) + "}"


def _same_quiver(a: int, b: int):
    if a != b:
        raise ValueError("quiver mismatch")


_SNAKE = re.compile(r"\(\s*(-?\d+)\s*:\s*(\d+)\s*\)")


def parse_aset(text: str, l: int = 0) -> ASet:
    """Parse ``{(0:1),(1:0)}``; ``{}`` and ``1`` are the empty A-set."""
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body == "1":
        return ASet.empty(l)
    if not body.startswith("{"):
        raise ParseError("expected '{'", offset)
    if not body.endswith("}"):
        raise ParseError("expected '}'", offset + len(body))
    snakes = []
    pos = 1
    while True:
        while pos < len(body) - 1 and body[pos] in " \t":
            pos += 1
        if pos == len(body) - 1:
            break
        m = _SNAKE.match(body, pos)
        if not m:
            raise ParseError("expected a snake (tail:length)", offset + pos)
        snakes.append(Snake(int(m.group(1)), int(m.group(2))))
        pos = m.end()
        while pos < len(body) - 1 and body[pos] in " \t":
            pos += 1
        if body[pos] == ",":
            pos += 1
        elif pos != len(body) - 1:
            raise ParseError("expected ',' or '}'", offset + pos)
    return ASet(tuple(snakes), l)


def f_gen(d, l: int = 0) -> ASet:
    """The A-set of length-0 snakes with degree ``d`` (a vertex or a mapping)."""
    if isinstance(d, int):
        d = {d: 1}
    return ASet(tuple(Snake(v, 0) for v, k in d.items() for _ in range(k)), l)


class HallElement:
    """Finite Z-combination (Fractions allowed in intermediates) of A-sets."""

    __slots__ = ("terms", "l")

    def __init__(self, terms: Mapping[ASet, object] | None = None, l: int = 0):
        clean = {}
        for k, c in (terms or {}).items():
            _same_quiver(k.l, l)
            if c:
                clean[k] = _norm(c)
        self.terms = clean
        self.l = l

    @classmethod
    def basis(cls, a: ASet, coef=1) -> "HallElement":
        return cls({a: coef}, a.l)

    @classmethod
    def unit(cls, l: int = 0) -> "HallElement":
        return cls({ASet.empty(l): 1}, l)

    def _coerce(self, other):
        if isinstance(other, HallElement):
            _same_quiver(self.l, other.l)
            return other
        if isinstance(other, ASet):
            return HallElement.basis(other)
        if isinstance(other, (int, Fraction)):
            return HallElement({ASet.empty(self.l): other}, self.l)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        res = dict(self.terms)
        for k, c in o.terms.items():
            res[k] = res.get(k, 0) + c
        return HallElement(res, self.l)

    __radd__ = __add__

    def __neg__(self):
        return HallElement({k: -c for k, c in self.terms.items()}, self.l)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HallElement({k: c * other for k, c in self.terms.items()}, self.l)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        res: dict = {}
        for a, c1 in self.terms.items():
            for b, c2 in o.terms.items():
                for s, g in hall_mul(a, b).terms.items():
                    res[s] = res.get(s, 0) + c1 * c2 * g
        return HallElement(res, self.l)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return self._coerce(other) * self

    def __pow__(self, k: int):
        out = HallElement.unit(self.l)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, HallElement):
            return self.l == other.l and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, a: ASet):
        return self.terms.get(a, 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def integral(self) -> "HallElement":
        if not self.is_integral():
            raise ValueError("non-integral coefficient")
        return self

    def __str__(self) -> str:
        return format_terms(sorted(self.terms.items()), lambda a: "1" if not a.snakes else str(a))

    def __repr__(self):
        return f"HallElement({str(self)!r}, l={self.l})"

    def to_json(self) -> list:
        return [[str(a), c if isinstance(c, int) else str(c)] for a, c in sorted(self.terms.items())]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


# ---------------------------------------------------------------- cuts

def cut(s: Snake, k: int, l: int) -> tuple[Snake | None, Snake | None]:
    """Split ``s`` keeping its ``k`` head elements: (head part, tail part)."""
    head = _snake(s.tail + s.length + 1 - k, k - 1, l) if k >= 1 else None
    tail = _snake(s.tail, s.length - k, l) if k <= s.length else None
    return head, tail


def _multinomial(counts) -> int:
    n = sum(counts)
    out = factorial(n)
    for c in counts:
        out //= factorial(c)
    return out


def count_subsets(S: ASet, K: ASet, L: ASet) -> int:
    """Number of sub-A-sets M of S with M = K and S/M = L (up to isomorphism)."""
    l = S.l
    types = sorted(S.counter().items())
    need_k, need_l = K.counter(), L.counter()
    if S.size != K.size + L.size:
        return 0

    def rec(idx, rem_k: Counter, rem_l: Counter) -> int:
        if idx == len(types):
            return 1 if not +rem_k and not +rem_l else 0
        s, mu = types[idx]
        options = [cut(s, k, l) for k in range(s.length + 2)]
        total = 0
        for pick in itertools.combinations_with_replacement(range(len(options)), mu):
            heads = Counter(options[k][0] for k in pick if options[k][0] is not None)
            tails = Counter(options[k][1] for k in pick if options[k][1] is not None)
            if any(rem_k[h] < c for h, c in heads.items()) or any(rem_l[x] < c for x, c in tails.items()):
                continue
            mult = _multinomial(Counter(pick).values())
            total += mult * rec(idx + 1, rem_k - heads, rem_l - tails)
        return total

    return rec(0, need_k, need_l)


def _glue(lower: Snake, upper: Snake, l: int) -> Snake | None:
    """Snake whose tail part is ``lower`` and head part is ``upper``, if any."""
    nxt = lower.tail + lower.length + 1
    if (l and (nxt - upper.tail) % l) or (not l and nxt != upper.tail):
        return None
    return _snake(lower.tail, lower.length + upper.length + 1, l)


def product_candidates(K: ASet, L: ASet) -> set[ASet]:
    """Every A-set obtained by gluing some K-snakes on top of distinct L-snakes."""
    l = K.l
    ks = list(K.snakes)
    ls = list(L.snakes)
    out: set = set()

    def rec(i, used: tuple, glued: list):
        if i == len(ks):
            rest = [s for j, s in enumerate(ls) if j not in used]
            out.add(ASet(tuple(glued) + tuple(rest), l))
            return
        rec(i + 1, used, glued + [ks[i]])
        seen = set()
        for j, low in enumerate(ls):
            if j in used or low in seen:
                continue
            g = _glue(low, ks[i], l)
            if g is not None:
                seen.add(low)
                rec(i + 1, used + (j,), glued + [g])

    rec(0, (), [])
    return out


@lru_cache(maxsize=None)
def _mul_count(K: ASet, L: ASet) -> HallElement:
    res = {}
    for S in product_candidates(K, L):
        g = count_subsets(S, K, L)
        if g:
            res[S] = g
    return HallElement(res, K.l)


@lru_cache(maxsize=None)
def _mul_dual(K: ASet, L: ASet) -> HallElement:
    l = K.l
    mk, ml = aset_monomial(K), aset_monomial(L)
    res = {}
    for S in asets_of_degree(K.degree() + L.degree(), l):
        c = coproduct_monomial(aset_monomial(S), l).coefficient(mk, ml)
        if c:
            res[S] = c
    return HallElement(res, l)


def hall_mul(K: ASet, L: ASet, method: str = "count") -> HallElement:
    """Structure constants g^S_{K,L}, by cut counting or through the dual
    coproduct of the representation ring."""
    _same_quiver(K.l, L.l)
    if method == "count":
        return _mul_count(K, L)
    if method == "dual":
        return _mul_dual(K, L)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------- enumeration

def snakes_fitting(d: Mapping[int, int], l: int) -> list[Snake]:
    """All snakes whose degree vector is bounded by ``d``."""
    total = sum(d.values())
    out = []
    tails = range(l) if l else sorted(v for v, k in d.items() if k)
    for tau in tails:
        for length in range(total):
            need = Counter((v % l) if l else v for v in range(tau, tau + length + 1))
            if all(d.get(v, 0) >= k for v, k in need.items()):
                out.append(Snake(tau, length))
            elif not l:
                break
    return sorted(out)


def asets_of_degree(d: Mapping[int, int], l: int = 0) -> list[ASet]:
    """All A-sets with degree vector exactly ``d``."""
    target = Counter()
    for v, k in d.items():
        target[v % l if l else v] += k
    target = +target
    cands = snakes_fitting(target, l)
    out = []

    def rec(start: int, rem: Counter, chosen: list):
        if not rem:
            out.append(ASet(tuple(chosen), l))
            return
        for idx in range(start, len(cands)):
            s = cands[idx]
            if not l and s.tail != min(rem):
                # on A_inf the lowest remaining vertex must be a tail
                continue
            need = Counter((v % l) if l else v for v in s.vertices())
            if all(rem[v] >= k for v, k in need.items()):
                rec(idx, rem - need, chosen + [s])

    rec(0, target, [])
    return sorted(out)


def asets_up_to(n: int, l: int = 0, window: tuple[int, int] | None = None) -> list[ASet]:
    """All A-sets with at most ``n`` elements; on A_inf every snake lies in ``window``."""
    if not l and window is None:
        raise ValueError("A_inf enumeration needs a vertex window")
    verts = list(range(l)) if l else list(range(window[0], window[1] + 1))
    out = []
    for size in range(n + 1):
        for combo in itertools.combinations_with_replacement(verts, size):
            out.extend(asets_of_degree(Counter(combo), l))
    return sorted(set(out))


def asets_of_degree_bounded(bound: Mapping[int, int], l: int) -> list[ASet]:
    """All A-sets whose degree vector is bounded by ``bound`` entrywise."""
    verts = sorted(bound)
    out = []
    for ks in itertools.product(*(range(bound[v] + 1) for v in verts)):
        out.extend(asets_of_degree(dict(zip(verts, ks)), l))
    return out


# ---------------------------------------------------------------- comultiplication

class HallTensor:
    """Element of H (x) H; keys are pairs of A-sets."""

    __slots__ = ("terms", "l")

    def __init__(self, terms: Mapping[tuple, object] | None = None, l: int = 0):
        self.terms = {k: _norm(c) for k, c in (terms or {}).items() if c}
        self.l = l

    def __add__(self, other: "HallTensor") -> "HallTensor":
        res = dict(self.terms)
        for k, c in other.terms.items():
            res[k] = res.get(k, 0) + c
        return HallTensor(res, self.l)

    def __sub__(self, other: "HallTensor") -> "HallTensor":
        return self + HallTensor({k: -c for k, c in other.terms.items()}, other.l)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HallTensor({k: c * other for k, c in self.terms.items()}, self.l)
        res: dict = {}
        for (a, b), c1 in self.terms.items():
            for (x, y), c2 in other.terms.items():
                left, right = hall_mul(a, x), hall_mul(b, y)
                for s1, g1 in left.terms.items():
                    for s2, g2 in right.terms.items():
                        key = (s1, s2)
                        res[key] = res.get(key, 0) + c1 * c2 * g1 * g2
        return HallTensor(res, self.l)

    def __eq__(self, other):
        if isinstance(other, HallTensor):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __str__(self):
        return format_terms(sorted(self.terms.items()), lambda k: f"{_show(k[0])} ⊗ {_show(k[1])}")

    def to_json(self) -> list:
        return [[[str(a), str(b)], c if isinstance(c, int) else str(c)] for (a, b), c in sorted(self.terms.items())]


def _show(a: ASet) -> str:
    return "1" if not a.snakes else str(a)


def hall_comul(S: ASet) -> HallTensor:
    """Sum of K (x) L over the distinct ordered splittings S = K + L."""
    types = sorted(S.counter().items())
    res = {}
    for ks in itertools.product(*(range(mu + 1) for _, mu in types)):
        K = ASet(tuple(itertools.chain.from_iterable([s] * k for (s, _), k in zip(types, ks))), S.l)
        L = ASet(tuple(itertools.chain.from_iterable([s] * (mu - k) for (s, mu), k in zip(types, ks))), S.l)
        res[(K, L)] = 1
    return HallTensor(res, S.l)


def comul(x: HallElement) -> HallTensor:
    out = HallTensor(None, x.l)
    for a, c in x.terms.items():
        out = out + hall_comul(a) * c
    return out


# ---------------------------------------------------------------- pairing

def aset_monomial(S: ASet):
    """Monomial of the dual basis element: snake (tau, L) <-> t_{L+1, tau+L}."""
    d: Counter = Counter()
    for s in S.snakes:
        n = s.tail + s.length
        d[VarId(Family.T, s.length + 1, n % S.l if S.l else n)] += 1
    return tuple(sorted(d.items()))


def monomial_aset(mono, l: int = 0) -> ASet:
    snakes = []
    for v, e in mono:
        if v[0] != Family.T or e < 0:
            raise ValueError(f"{mono_str(mono)} is not a PBW monomial")
        i, n = v[1], v[2]
        snakes.extend([Snake(n - i + 1, i - 1)] * e)
    return ASet(tuple(snakes), l)


def pairing(h, T: LaurentPoly) -> int:
    """Bilinear pairing making A-sets dual to PBW monomials."""
    if isinstance(h, ASet):
        h = HallElement.basis(h)
    if h.l != T.modulus:
        raise ValueError("quiver/modulus mismatch")
    total = 0
    for a, c in h.terms.items():
        k = T.coefficient(aset_monomial(a))
        if k:
            total += c * k
    return _norm(total)


def tensor_pairing(x: HallTensor, T) -> int:
    """<K (x) L, A (x) B> = <K, A><L, B> for a TensorPoly ``T``."""
    total = 0
    for (a, b), c in x.terms.items():
        total += c * T.coefficient(aset_monomial(a), aset_monomial(b))
    return _norm(total)


# ---------------------------------------------------------------- center

def central_elements(kind: str, i: int, l: int) -> HallElement:
    if i < 0 or l < 1:
        raise ValueError("need i >= 0 and l >= 1")
    if i == 0:
        return HallElement.unit(l)
    if kind == "z":
        return HallElement({ASet((Snake(tau, l * i - 1),), l): 1 for tau in range(l)}, l)
    if kind == "p":
        return HallElement({ASet(tuple(Snake(tau, l - 1) for tau in tails), l): 1
                            for tails in itertools.combinations_with_replacement(range(l), i)}, l)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------- unwinding

def unwind(x, window: tuple[int, int]) -> HallElement:
    """Sum of all A_inf lifts supported in ``window``, each with coefficient 1."""
    if isinstance(x, ASet):
        x = HallElement.basis(x)
    l = x.l
    if l < 1:
        raise ValueError("unwinding starts from a cyclic quiver")
    lo, hi = window
    res: dict = {}
    for S, c in x.terms.items():
        per_type = []
        for s, mu in sorted(S.counter().items()):
            lifts = [Snake(tau, s.length) for tau in range(lo + (s.tail - lo) % l, hi - s.length + 1, l)]
            per_type.append(list(itertools.combinations_with_replacement(lifts, mu)))
        for combo in itertools.product(*per_type):
            lifted = ASet(tuple(itertools.chain.from_iterable(combo)), 0)
            res[lifted] = res.get(lifted, 0) + c
    return HallElement(res, 0)


def support_window(T: LaurentPoly) -> tuple[int, int]:
    """Smallest vertex window containing the A-sets dual to the terms of ``T``.

    Unwinding into this window suffices to evaluate <w(x), T>.
    """
    verts = [v for m in T.terms for s in monomial_aset(m).snakes for v in s.vertices()]
    if not verts:
        return (0, 0)
    return (min(verts), max(verts))


def word(indices: Iterable[int], l: int = 0) -> HallElement:
    """Product f_{i_1} f_{i_2} ... of one-vertex generators."""
    out = HallElement.unit(l)
    for i in indices:
        out = out * HallElement.basis(f_gen(i, l))
    return out
