from fractions import Fraction
from math import prod

import pytest
import sympy

from qhopf.young import (
    GZScheme,
    Partition,
    SSTableau,
    boxes,
    content,
    diagram_from_rows,
    fold_diagram,
    gz_bijection,
    gz_to_tableau,
    multipartitions,
    parse_partition,
    partitions_of,
    sdiagram,
    sdiagram_enumerate,
    ssyt_enumerate,
    tableau_to_gz,
)
from qhopf.poly import ParseError

SAMPLE_TABLEAU = SSTableau(Partition.of(4, 2, 2, 1), ((1, 1, 2, 3), (2, 2), (3, 4), (4,)))


def weyl_dimension(shape: Partition, N: int) -> int:
    """Hook-content formula."""
    num = prod(Fraction(N + content(b)) for b in shape.boxes())
    conj = shape.conjugate()
    hooks = prod(shape.row(i) - j + conj.row(j) - i + 1 for i, j in shape.boxes())
    return int(num / hooks)


def test_partition_basics():
    lam = Partition.of(4, 2, 2, 1)
    assert lam.size == 9
    assert lam.conjugate() == Partition.of(4, 3, 1, 1)
    assert str(lam) == "[4,2,2,1]"
    with pytest.raises(ValueError):
        Partition((1, 2))


@pytest.mark.parametrize("n", range(9))
def test_conjugation_is_an_involution(n):
    for lam in partitions_of(n):
        assert lam.conjugate().conjugate() == lam


@pytest.mark.parametrize("n", range(12))
def test_partition_counts(n):
    assert len(partitions_of(n)) == sympy.partition(n)
    assert len(set(partitions_of(n))) == len(partitions_of(n))


def test_multipartition_count():
    # coefficient of x^4 in prod (1-x^i)^-2
    assert sum(1 for _ in multipartitions(2, 4)) == 20


def test_parse_partition():
    assert parse_partition("[2,1]") == Partition.of(2, 1)
    assert parse_partition("2, 1, 0") == Partition.of(2, 1)
    assert parse_partition("[]") == Partition(())
    with pytest.raises(ParseError):
        parse_partition("[1,2]")
    with pytest.raises(ParseError):
        parse_partition("2;1")


def test_tableaux_small_shapes():
    assert [str(x) for x in ssyt_enumerate(Partition.of(1, 1), 2)] == ["1/2"]
    assert sorted(str(x) for x in ssyt_enumerate(Partition.of(2), 2)) == ["11", "12", "22"]


def test_sample_tableau_is_enumerated():
    tabs = ssyt_enumerate(Partition.of(4, 2, 2, 1), 4)
    assert len(tabs) == 36
    assert SAMPLE_TABLEAU in tabs


@pytest.mark.parametrize("N", range(1, 5))
@pytest.mark.parametrize("n", range(1, 6))
def test_tableau_count_matches_hook_content(n, N):
    for lam in partitions_of(n):
        assert len(ssyt_enumerate(lam, N)) == weyl_dimension(lam, N)


def test_invalid_tableau_rejected():
    with pytest.raises(ValueError):
        SSTableau(Partition.of(2), ((2, 1),))
    with pytest.raises(ValueError):
        SSTableau(Partition.of(1, 1), ((1,), (1,)))


def test_sample_gz_scheme():
    gz = gz_bijection(SAMPLE_TABLEAU)
    assert gz.top_down() == [(4, 2, 2, 1), (4, 2, 1), (3, 2), (2,)]
    assert gz_bijection(gz) == SAMPLE_TABLEAU


def test_single_row_scheme():
    tab = SSTableau(Partition.of(3), ((1, 1, 1),))
    assert tableau_to_gz(tab, 3).rows == ((3,), (3, 0), (3, 0, 0))


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2, 1)])
def test_gz_round_trip(shape):
    lam = Partition.of(*shape)
    tabs = ssyt_enumerate(lam, 3)
    if shape == (2, 1):
        assert len(tabs) == 8
    for tab in tabs:
        assert gz_to_tableau(tableau_to_gz(tab, 3)) == tab


def test_gz_interlacing_validated():
    with pytest.raises(ValueError, match="interlacing"):
        GZScheme(((1,), (0, 2)))


def test_addable_removable_boxes():
    one_box = Partition.of(1)
    assert boxes(one_box, "removable", 0) == [(1, 1)]
    assert boxes(one_box, "removable", 1) == []
    assert sorted((b, content(b)) for b in boxes(one_box, "addable")) == [((1, 2), 1), ((2, 1), -1)]
    assert boxes(one_box, "addable", 0, modulus=2) == []


def test_sdiagram_counts():
    assert len(sdiagram_enumerate((0,), 4)) == 5
    assert len(sdiagram_enumerate((0, 0), 2)) == 3


def test_shifted_union_multiplicities():
    d = sdiagram([Partition.of(2, 1), Partition.of(3, 1)], (1, 0))
    assert [d.multiplicity(1, j) for j in (1, 2, 3)] == [1, 2, 2]
    assert [d.multiplicity(2, j) for j in (1, 2)] == [1, 1]


def test_sdiagram_shifts_must_decrease():
    with pytest.raises(ValueError):
        sdiagram_enumerate((0, 1), 2)


def test_folding_example_l2():
    # the single box of row 3 sits in column 2
    d = diagram_from_rows([[1, 2, 1, 1], [1, 1, 1], [0, 1]])
    f = fold_diagram(d, 2)
    assert [f.row_vector(i) for i in (1, 2, 3)] == [(2, 3), (2, 1), (0, 1)]
    assert f.acyclic
    mult = f.multiplicity
    assert mult(1, 1) == mult(2, 1) and mult(2, 2) == mult(3, 2) and mult(3, 1) == mult(4, 1)


def test_folding_acyclicity_small():
    assert not fold_diagram(sdiagram([Partition.of(2)], (0,)), 2).acyclic
    assert fold_diagram(sdiagram([Partition.of(1, 1)], (0,)), 2).acyclic


def test_folded_degree_three_l2():
    acyclic = {lam for lam in partitions_of(3) if fold_diagram(sdiagram([lam], (0,)), 2).acyclic}
    assert acyclic == {Partition.of(2, 1), Partition.of(1, 1, 1)}
