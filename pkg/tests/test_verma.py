import pytest

from vermahowe.errors import ParseError
from vermahowe.scalar import SymbolicClassical, SymbolicQuantum
from vermahowe.sparse import apply, vsub
from vermahowe.verma import (
    Monomial,
    act_gl2_classical,
    act_gl2_quantum,
    random_monomials,
    slice_size,
    tensor_basis,
    unit,
    verma_matrix_n1,
    weight_and_grade,
)

Q1, Q2, Q3 = SymbolicQuantum(1), SymbolicQuantum(2), SymbolicQuantum(3)
C1, C2 = SymbolicClassical(1), SymbolicClassical(2)
ZERO2 = Monomial((0, 0), (0, 0))


def test_f_on_highest_vector_n1():
    m = Monomial((0,), (0,))
    assert act_gl2_quantum("F", m, Q1) == {Monomial((-1,), (1,)): Q1.qmu(1)}


def test_e_kills_s_zero():
    for m in random_monomials(3, 3, 20, smax=0):
        assert act_gl2_quantum("E", m, Q3) == {}
        assert act_gl2_classical("e", m, SymbolicClassical(3)) == {}


def test_f_on_highest_vector_n2():
    want = {
        Monomial((-1, 0), (1, 0)): Q2.qmu(1),
        Monomial((0, -1), (0, 1)): Q2.qmu(2) / Q2.upow(1),
    }
    assert act_gl2_quantum("F", ZERO2, Q2) == want


def test_classical_examples():
    m = Monomial((0,), (0,))
    assert act_gl2_classical("f", m, C1) == {Monomial((-1,), (1,)): C1.lam(1)}
    m = Monomial((-1,), (1,))
    assert act_gl2_classical("l1", m, C1) == {m: C1.lam(1, -1)}


def test_weight_and_grade():
    assert weight_and_grade(ZERO2) == (0, 0, (0, 0))
    m = Monomial.from_index((2, 1))
    assert weight_and_grade(m) == (-3, 3, (0, 0))


def test_tensor_basis():
    assert tensor_basis(2, 1) == [(1, 0), (0, 1)]
    assert len(tensor_basis(3, 2)) == 6 == slice_size(3, 2)
    assert len(tensor_basis(4, 3)) == 20
    b = tensor_basis(4, 3)
    assert b == sorted(b, reverse=True)
    with pytest.raises(ValueError):
        tensor_basis(0, 1)


def _op(gen, K, fn=act_gl2_quantum):
    return lambda m: fn(gen, m, K)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quantum_ef_relation(n):
    K = SymbolicQuantum(n)
    E, F, Kop, Ki = (_op(g, K) for g in ("E", "F", "K", "Kinv"))
    for m in random_monomials(n, n, 30):
        lhs = vsub(apply(E, F(m)), apply(F, E(m)))
        k = Kop(m)[m]
        assert lhs == ({m: (k - Ki(m)[m]) / K.vdiff()} if k != Ki(m)[m] else {})


@pytest.mark.parametrize("n", [1, 2, 3])
def test_classical_ef_relation(n):
    K = SymbolicClassical(n)
    e, f, l1, l2 = (_op(g, K, act_gl2_classical) for g in ("e", "f", "l1", "l2"))
    for m in random_monomials(n + 10, n, 30):
        lhs = vsub(apply(e, f(m)), apply(f, e(m)))
        assert lhs == vsub(l1(m), l2(m))


def test_generators_preserve_grade():
    for m in random_monomials(7, 3, 30):
        for g in ("E", "F", "L1", "L2", "K"):
            assert all(x.grade == m.grade for x in act_gl2_quantum(g, m, Q3))


def test_e_locally_nilpotent():
    E = _op("E", Q3)
    for m in random_monomials(8, 3, 15):
        vec = {m: Q3.one}
        for _ in range(sum(m.s) + 1):
            vec = apply(E, vec)
        assert vec == {}


def test_n1_matrix_picture():
    size = 5
    Emat, Fmat = verma_matrix_n1("E", size, Q1), verma_matrix_n1("F", size, Q1)
    for j in range(size):
        for i in range(size):
            e = Q1.qint(j) if i == j - 1 else Q1.zero
            f = Q1.qmu(1, -j) if i == j + 1 else Q1.zero
            assert Emat[i][j] == e and Fmat[i][j] == f


def test_monomial_strings():
    m = Monomial((1, -2), (0, 3))
    assert str(m) == "X[1,-2]Y[0,3]"
    assert Monomial.parse(str(m)) == m
    with pytest.raises(ParseError):
        Monomial.parse("X[1]Z[2]")
    with pytest.raises(ValueError):
        Monomial((0,), (-1,))
    assert Monomial.from_index((2, 0)).to_index() == (2, 0)
    assert unit(1, 3, 2) == (0, 2, 0)
