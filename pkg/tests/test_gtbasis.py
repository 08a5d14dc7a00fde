import itertools
import math
import random
from fractions import Fraction

import pytest

from vermahowe.errors import ParseError
from vermahowe.gtbasis import (
    DetMonomial,
    GTPattern,
    act_eij_det,
    casimir_apply,
    casimir_check,
    casimir_eigenvalue_expected,
    casimir_on_monomials,
    det_consistency_check,
    det_weight_space_rank,
    determinant_relation_check,
    expand_det,
    expand_det_vector,
    gt_eraise_expected,
    gt_span_rank,
    gt_vector,
    infbraid_apply,
    infbraid_relations_check,
    patterns,
    random_det_monomials,
)
from vermahowe.scalar import SymbolicClassical
from vermahowe.sparse import vscale, vsub
from vermahowe.verma import Monomial, random_monomials

C2, C3, C4 = SymbolicClassical(2), SymbolicClassical(3), SymbolicClassical(4)


def test_expand_det_examples():
    assert expand_det(DetMonomial((0, 0), (1,))) == {
        Monomial((1, 0), (0, 1)): 1, Monomial((0, 1), (1, 0)): -1}
    assert expand_det(DetMonomial((2, -1, 0), (0, 0))) == {Monomial((2, -1, 0), (0, 0, 0)): 1}
    sq = expand_det(DetMonomial((0, 0), (2,)))
    assert sorted(sq.values()) == [-2, 1, 1]


def test_det_monomial_fields():
    m = DetMonomial((1, -2, 0), (2, 1))
    assert m.n == 3 and m.block == (2, 3) and str(m) == "X[1,-2,0]a[2,1]"


def test_eii_diagonal():
    m = DetMonomial((1, -1, 2), (2, 1))
    for i in range(1, 4):
        lpad = (0, 2, 1, 0)
        want = C3.lam(i, m.r[i - 1] + lpad[i - 1] + lpad[i])
        assert act_eij_det(i, i, m, C3) == {m: want}


def test_e12_on_det_zero():
    # lambda_2, not lambda_1: e_12 = X_1 d/dX_2 differentiates the X_2 exponent
    out = act_eij_det(1, 2, DetMonomial((0, 0), (0,)), C2)
    assert out == {DetMonomial((1, -1), (0,)): C2.lam(2)}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_det_consistency(n):
    K = SymbolicClassical(n)
    rep = det_consistency_check(random_det_monomials(20 + n, n, 30), K)
    assert rep.ok and rep.checked == 30 * n * n


@pytest.mark.parametrize("n", [2, 3, 4])
def test_determinant_relation(n):
    assert determinant_relation_check(n).ok


def test_gt_vector_examples():
    assert gt_vector(GTPattern.from_d((0,), (0, 0)), C2) == {DetMonomial((0, 0), (0,)): C2.one}
    # n=2: one Pochhammer factor (lambda_1 + 1)_d
    g = gt_vector(GTPattern.from_d((2,), (1, 0)), C2)
    x = C2.lam(1, 2)
    assert g == {DetMonomial((1, 0), (2,)): x * (x + 1)}
    assert gt_vector(GTPattern.from_d((0, 0), (0, 0, 0)), C3) == {DetMonomial((0, 0, 0), (0, 0)): C3.one}


def test_gt_vector_d01_against_eigen_oracle():
    """Frozen value, cross-checked as a joint Casimir eigenvector on expanded polynomials."""
    p = GTPattern.from_d((0, 1), (0, 0, 0))
    g = gt_vector(p, C3)
    assert g == {
        DetMonomial((0, 0, 0), (0, 1)): C3.lam_sum(2, 1),
        DetMonomial((-1, 0, 1), (1, 0)): C3.lam(1),
    }
    poly = expand_det_vector(g, C3)
    for k in (1, 2, 3):
        ev = casimir_eigenvalue_expected(p, k, C3)
        assert casimir_on_monomials(k, poly, C3) == vscale(poly, ev)


def test_pattern_validation_and_strings():
    p = GTPattern(3, (0, 1, 2), (0, 0, 0))
    assert str(p) == "GT{n=3; c=[0,1,2]; r=[0,0,0]}"
    assert GTPattern.parse(str(p)) == p
    assert p.d == (1, 1)
    with pytest.raises(ValueError):
        GTPattern(3, (0, 2, 1), (0, 0, 0))
    with pytest.raises(ValueError):
        GTPattern(3, (1, 2, 3), (0, 0, 0))
    with pytest.raises(ParseError):
        GTPattern.parse("GT{n=3; c=[0,1]")


def test_x_k():
    p = GTPattern(3, (0, 1, 3), (1, 0, -1))
    assert p.x(1, C3) == C3.lam_sum(1, 1 + 1)
    assert p.x(2, C3) == C3.lam_sum(2, 1 + 3)
    assert p.x(3, C3) == C3.lam_sum(3, 0 + 3)


def test_casimir_examples():
    p = GTPattern(3, (0, 1, 1), (0, 0, 0))
    res = casimir_check(p, C3, cross_routes=True)
    assert all(r.ok and r.routes_agree for r in res)
    assert casimir_eigenvalue_expected(p, 1, C3) == p.x(1, C3) ** 2
    x2 = p.x(2, C3)
    assert casimir_eigenvalue_expected(p, 2, C3) == x2 * (x2 + 1) + 1 * (1 - 1)


def test_casimir_sweep_n3_small():
    for p in patterns(3, 2, 1):
        assert all(r.ok for r in casimir_check(p, C3))


def test_casimir_routes_agree_n4_sample():
    rng = random.Random(4)
    pats = list(patterns(4, 2, 1))
    for p in rng.sample(pats, 6):
        assert all(r.ok and r.routes_agree for r in casimir_check(p, C4, cross_routes=True))


def _weight(vec):
    m = next(iter(vec))
    lpad = (0, *m.l, 0)
    return tuple(m.r[i] + lpad[i] + lpad[i + 1] for i in range(m.n))


def test_gt_vectors_independent_in_weight_spaces():
    groups = {}
    for p in patterns(3, 2, 1):
        g = gt_vector(p, C3)
        groups.setdefault(_weight(g), []).append(g)
    point = (Fraction(7, 3), Fraction(-5, 11), Fraction(13, 2))
    multi = 0
    for vecs in groups.values():
        assert gt_span_rank(vecs, point) == len(vecs)
        multi += len(vecs) > 1
    assert multi > 0


@pytest.mark.parametrize("n", [3, 4])
def test_e_raising_formula(n):
    K = SymbolicClassical(n)
    for p in itertools.islice(patterns(n, 2, 1), 0, None, 7):
        for i in range(1, n):
            lhs = act_eij_det(i, i + 1, gt_vector(p, K), K)
            rhs = {}
            for q, c in gt_eraise_expected(p, i, K).items():
                for m, x in gt_vector(q, K).items():
                    rhs[m] = rhs.get(m, K.zero) + c * x
            assert lhs == {m: x for m, x in rhs.items() if x}, (p, i)


@pytest.mark.parametrize("n,c", [(2, 3), (3, 2), (4, 2), (3, 4)])
def test_weight_space_dimension(n, c):
    grade = (1,) + (0,) * (n - 1)
    count, rank = det_weight_space_rank(n, c, grade)
    assert count == rank == math.comb(c + n - 2, c)


def test_omega_on_highest_monomial():
    m = Monomial((0, 0), (0, 0))
    assert infbraid_apply(1, 2, m, C2) == {m: C2.lam(1) * C2.lam(2)}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_infbraid_relations_small(n):
    rep = infbraid_relations_check(n, random_monomials(40 + n, n, 15), SymbolicClassical(n))
    assert rep.ok


def test_casimir_apply_k1_is_e11_squared():
    m = DetMonomial((1, 0, -1), (1, 0))
    e11 = C3.lam(1, 1 + 1)
    assert casimir_apply(1, {m: C3.one}, C3) == {m: e11 * e11}
