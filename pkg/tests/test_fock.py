import pytest

from qhopf.fock import (
    FockVector,
    decompose_eval,
    eval_class,
    fock_apply,
    folded_counts,
    folded_genfun,
    level_one_defects,
    principal_character,
    sdiagram_genfun,
)
from qhopf.repring import jacobi_trudi
from qhopf.young import Partition, partitions_of


def ket(*shape, shifts=(0,)):
    return FockVector.basis([Partition.of(*shape)], shifts)


def test_operator_signs():
    vac = FockVector.vacuum()
    assert fock_apply("f", 0, vac) == ket(1) * -1
    for m in range(-2, 3):
        assert fock_apply("e", m, vac) == 0
    assert fock_apply("e", 0, ket(1)) == ket() * -1
    assert fock_apply("h", 0, vac) == vac
    assert fock_apply("h", 0, ket(1)) == ket(1) * -1


def test_folded_action():
    v = fock_apply("f", 1, ket(1), l=2)
    assert v == ket(2) * -1 - ket(1, 1)
    assert str(v) == "-|[1,1]> - |[2]>"
    assert fock_apply("f", 0, ket(1), l=2) == 0
    with pytest.raises(ValueError):
        fock_apply("f", 2, ket(1), l=2)


def test_tensor_product_leibniz():
    v = FockVector.vacuum((0, 1))
    w = fock_apply("f", 1, v)
    expected = FockVector.basis([Partition(()), Partition.of(1)], (0, 1)) * -1
    assert w == expected
    w2 = fock_apply("f", 0, FockVector.vacuum((0, 0)))
    assert len(w2.terms) == 2


def _states(max_size, shifts=(0,)):
    out = []
    for n in range(max_size + 1):
        for lam in partitions_of(n):
            out.append(FockVector.basis([lam], shifts))
    return out


@pytest.mark.parametrize("l", [None, 2, 3])
def test_chevalley_relations(l):
    indices = range(l) if l else range(-3, 4)
    for v in _states(4):
        for m in indices:
            for n in indices:
                ef = fock_apply("e", m, fock_apply("f", n, v, l), l)
                fe = fock_apply("f", n, fock_apply("e", m, v, l), l)
                expected = fock_apply("h", m, v, l) if m == n else FockVector(None, v.shifts)
                assert ef - fe == expected


def test_folded_serre_relations_l3():
    l = 3
    for v in _states(3):
        for i in range(l):
            for j in range(l):
                if i == j:
                    continue
                ff = lambda *w: _apply_word(w, v, l)
                assert ff(i, i, j) - ff(i, j, i) * 2 + ff(j, i, i) == 0


def _apply_word(word, v, l):
    for m in reversed(word):
        v = fock_apply("f", m, v, l)
    return v


def test_principal_character_examples():
    assert list(principal_character((0,), 2, 5)) == [1, 1, 1, 2, 2, 3]
    assert list(principal_character((0,), 0, 4)) == [1, 1, 2, 3, 5]
    for nu in [(0,), (1, 0), (2, 2, 1)]:
        assert principal_character(nu, 3, 0)[0] == 1


def test_sdiagram_genfun_examples():
    for s, D, expected in [((0,), 4, [1, 1, 2, 3, 5]), ((0, 0), 3, [1, 1, 3, 5]), ((1, 0), 2, [1, 2, 4])]:
        counts, prod = sdiagram_genfun(s, D)
        assert list(counts) == expected
        assert list(prod) == expected


def test_folded_examples():
    assert folded_counts((0,), 2, 3)[3] == 2
    counts, char = folded_genfun((0,), 2, 5)
    assert list(counts) == list(char) == [1, 1, 1, 2, 2, 3]


def test_eval_classes_are_jacobi_trudi_minors():
    for n in range(1, 5):
        for lam in partitions_of(n):
            assert eval_class(lam) == jacobi_trudi(lam)


def test_decompose_eval():
    x = eval_class(Partition.of(2, 1)) * 3 - eval_class(Partition.of(3))
    assert decompose_eval(x, 3) == {Partition.of(2, 1): 3, Partition.of(3): -1}


def test_level_one_duality_small():
    assert level_one_defects(3) == []


def test_fock_vector_arithmetic():
    a, b = ket(1), ket(2)
    assert (a + b) - b == a
    assert (a * 2).coefficient([Partition.of(1)]) == 2
    assert (a + b).degree is None and a.degree == 1
    with pytest.raises(ValueError):
        a + FockVector.basis([Partition.of(1)], (1,))
