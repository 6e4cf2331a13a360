"""Fock spaces: tensor products of partition spaces with the sl_inf action
and its l-folding, principal characters by exact rank, and the two
generating-function identities for shifted and folded diagrams.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .poly import Series, euler_product
from .repring import express_in_pbw, qchar_eval, res
from .young import Partition, content, fold_diagram, partitions_of, sdiagram_enumerate


class FockVector:
    """Exact combination of k-tuples of partitions.

    ``shifts[t]`` is the index n of the t-th factor: a box of content c in
    that factor carries the operator index n + c.
    """

    __slots__ = ("terms", "shifts")

    def __init__(self, terms: Mapping[tuple, object] | None = None, shifts: Sequence[int] = (0,)):
        self.shifts = tuple(shifts)
        clean = {}
        for k, c in (terms or {}).items():
            if len(k) != len(self.shifts):
                raise ValueError("tuple length does not match the number of factors")
            if c:
                clean[k] = _norm(c)
        self.terms = clean

    @classmethod
    def vacuum(cls, shifts: Sequence[int] = (0,)) -> "FockVector":
        return cls({tuple(Partition(()) for _ in shifts): 1}, shifts)

    @classmethod
    def basis(cls, parts: Sequence[Partition], shifts: Sequence[int] = (0,)) -> "FockVector":
        return cls({tuple(parts): 1}, shifts)

    def _check(self, other: "FockVector"):
        if other.shifts != self.shifts:
            raise ValueError("shift mismatch")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        res = dict(self.terms)
        for k, c in other.terms.items():
            res[k] = res.get(k, 0) + c
        return FockVector(res, self.shifts)

    def __neg__(self):
        return FockVector({k: -c for k, c in self.terms.items()}, self.shifts)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return FockVector({key: c * k for key, c in self.terms.items()}, self.shifts)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, FockVector):
            return self.shifts == other.shifts and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, parts: Sequence[Partition]):
        return self.terms.get(tuple(parts), 0)

    @property
    def degree(self) -> int | None:
        sizes = {sum(p.size for p in k) for k in self.terms}
        return sizes.pop() if len(sizes) == 1 else None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, c in sorted(self.terms.items(), key=lambda kc: [p.parts for p in kc[0]]):
            ket = "|" + ",".join(str(p) for p in k) + ">"
            out.append(ket if c == 1 else f"-{ket}" if c == -1 else f"{c}*{ket}")
        return " + ".join(out).replace("+ -", "- ")


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _matches(index: int, m: int, l: int | None) -> bool:
    if l:
        return (index - m) % l == 0
    return index == m


def fock_apply(op: str, m: int, v: FockVector, l: int | None = None) -> FockVector:
    """Apply e_m, f_m or h_m (folded at modulus ``l`` when given).

    Single factor: f adds a box with index m and e removes one, each with
    sign -1; h is +1 on an addable and -1 on a removable box of index m.
    Factors are acted on by the Leibniz rule.
    """
    if op not in ("e", "f", "h"):
        raise ValueError(f"unknown operator {op!r}")
    if l is not None and not 0 <= m < l:
        raise ValueError("folded index must lie in 0..l-1")
    res: dict = {}
    for key, c in v.terms.items():
        for pos, (lam, n) in enumerate(zip(key, v.shifts)):
            if op == "f":
                for b in lam.addable():
                    if _matches(n + content(b), m, l):
                        new = key[:pos] + (lam.add_box(b),) + key[pos + 1:]
                        res[new] = res.get(new, 0) - c
            elif op == "e":
                for b in lam.removable():
                    if _matches(n + content(b), m, l):
                        new = key[:pos] + (lam.remove_box(b),) + key[pos + 1:]
                        res[new] = res.get(new, 0) - c
            else:
                w = sum(1 for b in lam.addable() if _matches(n + content(b), m, l))
                w -= sum(1 for b in lam.removable() if _matches(n + content(b), m, l))
                if w:
                    res[key] = res.get(key, 0) + w * c
    return FockVector(res, v.shifts)


def _active_indices(v: FockVector) -> list[int]:
    """Unfolded indices m with f_m possibly nonzero on ``v``."""
    found = set()
    for key in v.terms:
        for lam, n in zip(key, v.shifts):
            found.update(n + content(b) for b in lam.addable())
    return sorted(found)


def _row_basis(vectors: list[FockVector], shifts) -> list[FockVector]:
    """A basis of the span of ``vectors`` (exact reduced row echelon form)."""
    vectors = [x for x in vectors if x]
    if not vectors:
        return []
    keys = sorted({k for x in vectors for k in x.terms}, key=lambda k: [p.parts for p in k])
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for x in vectors:
        row = [QQ(0)] * len(keys)
        for k, c in x.terms.items():
            row[index[k]] = QQ(c.numerator, c.denominator) if isinstance(c, Fraction) else QQ(c)
        rows.append(row)
    rref, pivots = DomainMatrix(rows, (len(rows), len(keys)), QQ).rref()
    out = []
    for r in range(len(pivots)):
        terms = {}
        for k, c in zip(keys, rref.to_Matrix().row(r)):
            if c:
                terms[k] = Fraction(int(c.p), int(c.q))
        out.append(FockVector(terms, shifts))
    return out


def principal_character(nu: Sequence[int], l: int, Dmax: int) -> Series:
    """Dimensions of the degree pieces of the cyclic submodule generated by
    the vacuum of the tensor product of Fock spaces with shifts ``nu``.

    ``l = 0`` uses the unfolded operators f_m, m in Z.
    """
    shifts = tuple(nu)
    level = [FockVector.vacuum(shifts)]
    dims = [1]
    for _ in range(Dmax):
        images = []
        for b in level:
            indices = range(l) if l else _active_indices(b)
            for m in indices:
                images.append(fock_apply("f", m, b, l or None))
        level = _row_basis(images, shifts)
        dims.append(len(level))
    return Series(dims, Dmax)


def sdiagram_genfun(s: Sequence[int], Dmax: int) -> tuple[Series, Series]:
    """(count of distinct s-diagrams per size, the closed product formula)."""
    s = tuple(s)
    counts = Series([len(sdiagram_enumerate(s, n)) for n in range(Dmax + 1)], Dmax)
    k = len(s)
    prod = euler_product(k, Dmax)
    for i in range(k):
        for j in range(i + 1, k):
            e = s[i] - s[j] + j - i
            prod = prod * (Series([1], Dmax) - Series.monomial_term(e, 1, Dmax))
    return counts, prod


def folded_counts(s: Sequence[int], l: int, Dmax: int) -> Series:
    """Number of distinct acyclic l-folded s-diagrams per size."""
    out = []
    for n in range(Dmax + 1):
        folded = {fold_diagram(d, l) for d in sdiagram_enumerate(tuple(s), n)}
        out.append(sum(1 for f in folded if f.acyclic))
    return Series(out, Dmax)


def folded_genfun(s: Sequence[int], l: int, Dmax: int) -> tuple[Series, Series]:
    """(acyclic folded diagram counts, principal character of the matching weight)."""
    return folded_counts(s, l, Dmax), principal_character(tuple(x % l for x in s), l, Dmax)


# ---------------------------------------------------------------- level-one duality

def eval_class(shape: Partition, n: int = 0):
    """Class of the evaluation module of ``shape`` at lattice point n in the
    PBW basis (computed at a level large enough to be stable)."""
    return express_in_pbw(qchar_eval(shape, n, shape.size + 1), shape.size + 1)


def decompose_eval(x, size: int, n: int = 0) -> dict[Partition, Fraction]:
    """Write ``x`` as a combination of evaluation classes of partitions of ``size``."""
    basis = [(lam, eval_class(lam, n)) for lam in partitions_of(size)]
    monos = sorted({m for _, b in basis for m in b.terms} | set(x.terms))
    index = {m: i for i, m in enumerate(monos)}
    cols = []
    for _, b in basis:
        col = [QQ(0)] * len(monos)
        for m, c in b.terms.items():
            col[index[m]] = QQ(c)
        cols.append(col)
    rhs = [QQ(0)] * len(monos)
    for m, c in x.terms.items():
        rhs[index[m]] = QQ(c)
    aug = DomainMatrix([list(r) + [b] for r, b in zip(zip(*cols), rhs)], (len(monos), len(cols) + 1), QQ)
    rref, pivots = aug.rref()
    if len(cols) in pivots:
        raise ValueError("not a combination of evaluation classes")
    mat = rref.to_Matrix()
    sol = {}
    for r, p in enumerate(pivots):
        v = mat[r, len(cols)]
        if v:
            sol[basis[p][0]] = Fraction(int(v.p), int(v.q))
    return sol


def level_one_defects(max_size: int) -> list[tuple]:
    """Cases violating <f_m x, y> + <x, res_m y> = 0 with |lambda> dual to the
    evaluation classes; returns (mu, m, lambda, value) for each failure."""
    bad = []
    for size in range(1, max_size + 1):
        for mu in partitions_of(size):
            y = eval_class(mu)
            for m in range(-size, size + 1):
                r = res(y, [m])
                coeffs = decompose_eval(r, size - 1) if r else {}
                for lam in partitions_of(size - 1):
                    fx = fock_apply("f", m, FockVector.basis([lam]))
                    val = fx.coefficient([mu]) + coeffs.get(lam, 0)
                    if val:
                        bad.append((mu, m, lam, val))
    return bad
