"""Partitions, semistandard tableaux, Gelfand-Zetlin schemes, shifted unions
of Young diagrams and their l-folded versions.

Boxes are 1-based ``(row, column)`` pairs; the content of ``(i, j)`` is
``j - i``.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from sympy.utilities.iterables import partitions as _sympy_partitions

from .poly import ParseError


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(p for p in parts if p))

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def row(self, i: int) -> int:
        """Length of 1-based row ``i`` (0 beyond the last row)."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def boxes(self):
        for i, p in enumerate(self.parts, 1):
            for j in range(1, p + 1):
                yield (i, j)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def addable(self) -> list[tuple[int, int]]:
        out = []
        for i in range(1, len(self.parts) + 2):
            j = self.row(i) + 1
            if i == 1 or self.row(i - 1) >= j:
                out.append((i, j))
        return out

    def removable(self) -> list[tuple[int, int]]:
        return [(i, p) for i, p in enumerate(self.parts, 1) if self.row(i + 1) < p]

    def add_box(self, box: tuple[int, int]) -> "Partition":
        i, _ = box
        parts = list(self.parts) + [0]
        parts[i - 1] += 1
        return Partition(tuple(p for p in parts if p))

    def remove_box(self, box: tuple[int, int]) -> "Partition":
        i, _ = box
        parts = list(self.parts)
        parts[i - 1] -= 1
        return Partition(tuple(p for p in parts if p))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


def parse_partition(text: str) -> Partition:
    """Parse ``[4,2,2,1]`` or ``4,2,2,1``; zeros are dropped."""
    body = text.rstrip()
    pos = len(body) - len(body.lstrip())
    bracket = body[pos:pos + 1] == "["
    if bracket:
        if not body.endswith("]"):
            raise ParseError("expected ']'", len(body))
        pos += 1
        end = len(body) - 1
    else:
        end = len(body)
    parts = []
    while True:
        while pos < end and body[pos] == " ":
            pos += 1
        if pos == end and not parts:
            break
        m = _PART.match(body, pos, end)
        if not m:
            raise ParseError("expected a non-negative integer", pos)
        parts.append(int(m.group(0)))
        pos = m.end()
        while pos < end and body[pos] == " ":
            pos += 1
        if pos == end:
            break
        if body[pos] != ",":
            raise ParseError("expected ','", pos)
        pos += 1
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ParseError("parts must weakly decrease", 0)
    return Partition.of(*parts)


_PART = re.compile(r"\d+")


def content(box: tuple[int, int]) -> int:
    return box[1] - box[0]


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, in decreasing lexicographic order."""
    if n == 0:
        return (Partition(()),)
    out = []
    for d in _sympy_partitions(n):
        out.append(Partition(tuple(sorted(Counter(d).elements(), reverse=True))))
    return tuple(sorted(out, reverse=True))


def multipartitions(k: int, n: int):
    """All k-tuples of partitions of total size ``n``."""
    for sizes in _compositions(n, k):
        yield from itertools.product(*(partitions_of(s) for s in sizes))


def _compositions(n: int, k: int):
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for a in range(n + 1):
        for rest in _compositions(n - a, k - 1):
            yield (a,) + rest


def boxes(shape: Partition, mode: str, content_filter: int | None = None, modulus: int | None = None):
    """Addable or removable boxes, optionally restricted to one content
    (or one content residue mod ``modulus``)."""
    if mode == "addable":
        found = shape.addable()
    elif mode == "removable":
        found = shape.removable()
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if content_filter is None:
        return found
    if modulus:
        return [b for b in found if (content(b) - content_filter) % modulus == 0]
    return [b for b in found if content(b) == content_filter]


# ---------------------------------------------------------------- tableaux

@dataclass(frozen=True)
class SSTableau:
    shape: Partition
    rows: tuple  # rows[i-1][j-1] = entry of box (i, j)

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != self.shape.parts:
            raise ValueError("filling does not match shape")
        for i, r in enumerate(self.rows):
            if any(a > b for a, b in zip(r, r[1:])):
                raise ValueError("rows must weakly increase")
            if i and any(self.rows[i - 1][j] >= r[j] for j in range(len(r))):
                raise ValueError("columns must strictly increase")

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def items(self):
        for i, r in enumerate(self.rows, 1):
            for j, v in enumerate(r, 1):
                yield (i, j), v

    def __str__(self) -> str:
        return "/".join("".join(map(str, r)) if max(r, default=0) < 10 else ",".join(map(str, r)) for r in self.rows)


def ssyt_enumerate(shape: Partition, N: int) -> list[SSTableau]:
    """Every semistandard tableau of ``shape`` with entries in 1..N."""
    if len(shape) > N:
        return []
    cells = list(shape.boxes())
    fill: dict = {}
    out = []

    def rec(k):
        if k == len(cells):
            rows = tuple(tuple(fill[(i, j)] for j in range(1, shape.row(i) + 1)) for i in range(1, len(shape) + 1))
            out.append(SSTableau(shape, rows))
            return
        i, j = cells[k]
        lo = 1
        if j > 1:
            lo = fill[(i, j - 1)]
        if i > 1:
            lo = max(lo, fill[(i - 1, j)] + 1)
        # entries of row i sit in rows i..N of the column, so the cap is N-(rows below)
        hi = N - (shape.conjugate().row(j) - i)
        for v in range(lo, hi + 1):
            fill[(i, j)] = v
            rec(k + 1)
        fill.pop((i, j), None)

    rec(0)
    return out


@dataclass(frozen=True)
class GZScheme:
    """Interlacing triangle; ``rows[M-1]`` is (lambda_{M,1}, ..., lambda_{M,M})."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for M, r in enumerate(rows, 1):
            if len(r) != M:
                raise ValueError(f"row {M} must have {M} entries")
            if any(x < 0 for x in r):
                raise ValueError("negative entry")
        for M in range(2, len(rows) + 1):
            up, low = rows[M - 1], rows[M - 2]
            for i in range(M - 1):
                if not up[i] >= low[i] >= up[i + 1]:
                    raise ValueError(f"interlacing violated at M={M}, i={i + 1}")

    @property
    def N(self) -> int:
        return len(self.rows)

    def top_down(self) -> list[tuple]:
        """Rows from M=N down to M=1, as usually displayed."""
        return list(reversed(self.rows))


def gz_bijection(x, N: int | None = None):
    """Tableau to scheme (row M counts entries <= M in each row), or back.

    For a tableau the scheme height defaults to its largest entry.
    """
    if isinstance(x, SSTableau):
        if N is None:
            N = max(max((v for _, v in x.items()), default=0), len(x.shape))
        return tableau_to_gz(x, N)
    if isinstance(x, GZScheme):
        return gz_to_tableau(x)
    raise TypeError("expected SSTableau or GZScheme")


def tableau_to_gz(tab: SSTableau, N: int) -> GZScheme:
    rows = []
    for M in range(1, N + 1):
        rows.append(tuple(sum(1 for v in tab.rows[i - 1] if v <= M) if i <= len(tab.rows) else 0 for i in range(1, M + 1)))
    return GZScheme(tuple(rows))


def gz_to_tableau(gz: GZScheme) -> SSTableau:
    top = gz.rows[-1]
    shape = Partition.of(*top)
    out = []
    for i in range(1, len(shape) + 1):
        r = []
        prev = 0
        for M in range(i, gz.N + 1):
            cur = gz.rows[M - 1][i - 1]
            r.extend([M] * (cur - prev))
            prev = cur
        out.append(tuple(r))
    return SSTableau(shape, tuple(out))


# ---------------------------------------------------------------- s-diagrams

@dataclass(frozen=True)
class SDiagram:
    """Multiset of boxes; ``boxes`` is a sorted tuple of ((i, j), mult).

    ``shifts`` records provenance only and does not enter equality.
    """

    boxes: tuple
    shifts: tuple = field(default=(), compare=False)

    @classmethod
    def from_counter(cls, counts, shifts=()) -> "SDiagram":
        return cls(tuple(sorted((b, m) for b, m in counts.items() if m)), tuple(shifts))

    def multiplicity(self, i: int, j: int) -> int:
        return dict(self.boxes).get((i, j), 0)

    @property
    def size(self) -> int:
        return sum(m for _, m in self.boxes)

    def triples(self) -> list[tuple[int, int, int]]:
        return [(i, j, m) for (i, j), m in self.boxes]


def sdiagram(partitions, shifts) -> SDiagram:
    """Union of the Young diagrams, the t-th shifted right by ``shifts[t]``."""
    counts: Counter = Counter()
    for lam, s in zip(partitions, shifts):
        for i, j in lam.boxes():
            counts[(i, j + s)] += 1
    return SDiagram.from_counter(counts, shifts)


def sdiagram_enumerate(s, n: int) -> list[SDiagram]:
    s = tuple(s)
    if not s or s[-1] != 0 or any(a < b for a, b in zip(s, s[1:])):
        raise ValueError("shifts must weakly decrease to 0")
    seen = {}
    for tup in multipartitions(len(s), n):
        d = sdiagram(tup, s)
        seen.setdefault(d, d)
    return sorted(seen.values(), key=lambda d: d.boxes)


@dataclass(frozen=True)
class FoldedDiagram:
    """Box multiplicities on rows i >= 1 and column residues 1..l."""

    l: int
    boxes: tuple

    def multiplicity(self, i: int, j: int) -> int:
        return dict(self.boxes).get((i, j), 0)

    def rows(self) -> list[int]:
        return sorted({i for (i, _), _ in self.boxes})

    @property
    def acyclic(self) -> bool:
        mult = dict(self.boxes)
        for i in self.rows():
            if not any(mult.get((i, j), 0) == mult.get((i + 1, j), 0) for j in range(1, self.l + 1)):
                return False
        return True

    def row_vector(self, i: int) -> tuple:
        return tuple(self.multiplicity(i, j) for j in range(1, self.l + 1))


def fold_diagram(d: SDiagram, l: int) -> FoldedDiagram:
    if l < 1:
        raise ValueError("l must be >= 1")
    counts: Counter = Counter()
    for (i, j), m in d.boxes:
        counts[(i, (j - 1) % l + 1)] += m
    return FoldedDiagram(l, tuple(sorted(counts.items())))


def diagram_from_rows(rows, first_column: int = 1) -> SDiagram:
    """Build a box multiset from row-wise multiplicity lists; zeros are holes."""
    counts: Counter = Counter()
    for i, r in enumerate(rows, 1):
        for k, m in enumerate(r):
            if m:
                counts[(i, first_column + k)] = m
    return SDiagram.from_counter(counts)
