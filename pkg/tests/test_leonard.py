import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import F, det_leibniz, lagrange_idempotents, mat, matmul

from billiard.errors import (
    DimensionError,
    DuplicateEigenvalueError,
    FieldMismatchError,
    LeonardSystemError,
    QRacahError,
)
from billiard.field import QQ, FieldSpec
from billiard.fixtures import krawtchouk, random_qracah
from billiard.leonard import (
    QRacahParams,
    border_correspondence,
    downarrow,
    leonard_cba,
    leonard_report,
    qracah_eigenvalues,
    qracah_value,
    split_decomposition,
    split_report,
    standard_seed,
    verify_leonard_system,
)
from billiard.linalg import Matrix, Vector, primitive_idempotents
from billiard.polycba import build_poly_cba, closed_form_value, edge_labels, value_function
from billiard.simplex import locations


def band_oracle(a, theta, a_star):
    """Zero pattern of E_i A* E_j from plain-Fraction idempotents."""
    es = lagrange_idempotents(mat(a), [F(x) for x in theta])
    n = len(es)
    return [[any(x for row in matmul(matmul(es[i], mat(a_star)), es[j]) for x in row) for j in range(n)] for i in range(n)]


def test_krawtchouk_d2_is_leonard(kraw2):
    a, theta, a_star, theta_star = krawtchouk(2)
    assert a == Matrix([[0, 2, 0], [1, 0, 1], [0, 2, 0]])
    assert a_star == Matrix.diag([2, 0, -2])
    assert list(theta) == [2, 0, -2] and list(theta_star) == [2, 0, -2]
    pattern = band_oracle(a.to_json(), [2, 0, -2], a_star.to_json())
    # a_i = 0 here, so the diagonal vanishes; the axioms only constrain |i-j| >= 1
    assert pattern == [[False, True, False], [True, False, True], [False, True, False]]
    assert kraw2.d == 2


def test_commuting_pair_fails_first_condition():
    a = Matrix.diag([0, 1, 2])
    with pytest.raises(LeonardSystemError) as info:
        verify_leonard_system(a, [0, 1, 2], a, [0, 1, 2])
    assert info.value.condition == "E A* E"
    assert info.value.pair == (0, 1)
    rep, ls = leonard_report(a, [0, 1, 2], a, [0, 1, 2])
    assert ls is None and rep.verdict == "FAIL"
    assert rep.failures()[0].subject == "(i,j)=(0, 1)"


def test_bad_eigenvalue_order_names_pair():
    a, _, a_star, theta_star = krawtchouk(2)
    order = [2, -2, 0]
    pattern = band_oracle(a.to_json(), order, a_star.to_json())
    assert pattern[0][1] is False  # adjacent in the given order but zero
    with pytest.raises(LeonardSystemError) as info:
        verify_leonard_system(a, order, a_star, theta_star)
    assert info.value.pair == (0, 1)


def test_dual_condition_checked():
    a, theta, a_star, _ = krawtchouk(3)
    with pytest.raises(LeonardSystemError) as info:
        verify_leonard_system(a, theta, a_star, [3, -1, 1, -3])
    assert info.value.condition == "E* A E*"


def test_structural_errors():
    a, theta, a_star, theta_star = krawtchouk(2)
    with pytest.raises(LeonardSystemError) as info:
        verify_leonard_system(a, [2, 0, 2], a_star, theta_star)
    assert info.value.condition == "multiplicity-free"
    with pytest.raises(DimensionError):
        verify_leonard_system(a, theta, Matrix.identity(2), [1, 2])
    with pytest.raises(FieldMismatchError):
        verify_leonard_system(a, theta, Matrix(a_star.to_json(), FieldSpec.gf(7)), theta_star)


def test_downarrow(kraw2):
    down = downarrow(kraw2)
    assert list(down.theta) == [-2, 0, 2]
    assert down.a == kraw2.a and down.a_star == kraw2.a_star
    assert down.eig_star == kraw2.eig_star
    assert down.eig.idempotents == tuple(reversed(kraw2.eig.idempotents))
    assert downarrow(down) == kraw2


def test_d0_system():
    ls = verify_leonard_system(Matrix([[4]]), [4], Matrix([[7]]), [7])
    assert ls.d == 0
    assert split_report(ls).passed
    assert border_correspondence(ls).passed


def test_split_spanners_krawtchouk(kraw2):
    assert standard_seed(kraw2) == Vector([1, 0, 0])
    split = split_decomposition(kraw2)
    assert list(split.spanners) == [Vector([1, 0, 0]), Vector([2, 1, 0]), Vector([2, 2, 2])]
    assert det_leibniz(mat([[1, 0, 0], [2, 1, 0], [2, 2, 2]])) == 2
    assert split_report(kraw2, split).passed


@pytest.mark.parametrize("d", range(1, 7))
def test_krawtchouk_split_and_borders(d):
    ls = verify_leonard_system(*krawtchouk(d))
    rep = split_report(ls)
    assert rep.passed
    assert len(rep.by_check("partial-sum")) == len(rep.by_check("partial-sum-star")) == d + 1
    assert split_report(downarrow(ls)).passed
    assert border_correspondence(ls).passed


def test_split_report_detects_wrong_spanners(kraw2):
    split = split_decomposition(kraw2)
    swapped = type(split)((split[1], split[0], split[2]))
    assert not split_report(kraw2, swapped).passed


def test_border_seed_independence(kraw2):
    v = standard_seed(kraw2)
    for c in (QQ(3), QQ("-2/5")):
        assert border_correspondence(kraw2, v * c).passed
        assert leonard_cba(kraw2, v * c).array == leonard_cba(kraw2, v).scaled(c).array
    rep = border_correspondence(kraw2, Vector([0, 1, 0]))
    assert not rep.passed


def test_borders_over_gf_p():
    ls = verify_leonard_system(*krawtchouk(4, FieldSpec.gf(11)))
    assert split_report(ls).passed
    assert border_correspondence(ls).passed


def test_qracah_worked_example():
    p = QRacahParams(QQ(2), QQ(0), QQ(1), QQ(1), 2)
    assert qracah_eigenvalues(p) == (QQ(2), QQ("5/2"), QQ("17/4"))
    assert qracah_value(p, (0, 0, 0)) == QQ("2/7")
    assert Fraction(2) * (2 - 1) / (8 - 1) == Fraction(2, 7)
    assert closed_form_value(p.eigenvalues(), (0, 0, 0)) == QQ("2/7")


def test_qracah_rejections():
    with pytest.raises(QRacahError):
        QRacahParams(QQ(2), QQ(0), QQ(1), QQ(0), 2)
    with pytest.raises(QRacahError):
        QRacahParams(QQ(0), QQ(0), QQ(1), QQ(1), 2)
    with pytest.raises(QRacahError):
        QRacahParams(QQ(-1), QQ(0), QQ(1), QQ(1), 2)
    with pytest.raises(QRacahError):
        QRacahParams(QQ(2), QQ(0), QQ(1), QQ(1), -1)
    with pytest.raises(DuplicateEigenvalueError) as info:
        QRacahParams(QQ(2), QQ(0), QQ(1), QQ(4), 2)  # theta = 5, 4, 5
    assert (info.value.i, info.value.j) == (0, 2)
    assert "theta_0 = theta_2 = 5" in str(info.value)
    with pytest.raises(ValueError):
        qracah_value(QRacahParams(QQ(2), QQ(0), QQ(1), QQ(1), 2), (1, 0, 0))


def test_zero_denominator_means_collision():
    # b q^{e+1} = c makes theta_{d-r} and theta_{t+1} collide, so construction rejects it
    with pytest.raises(DuplicateEigenvalueError):
        QRacahParams(QQ(2), QQ(0), QQ(1), QQ(8), 2)
    f = FieldSpec.gf(7)
    with pytest.raises(DuplicateEigenvalueError):
        QRacahParams(f(3), f(0), f(1), f(3 ** 3), 2)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32))
def test_qracah_matches_closed_form_and_cba(seed):
    p = random_qracah(random.Random(seed), 2, 6)
    theta = p.eigenvalues()
    for loc in locations(p.d - 2):
        assert qracah_value(p, loc) == closed_form_value(theta, loc)


def test_qracah_through_array():
    p = QRacahParams(QQ(3), QQ(1), QQ(2), QQ("1/3"), 4)
    theta = p.eigenvalues()
    eig = primitive_idempotents(Matrix.diag(theta), theta)
    vf = value_function(edge_labels(build_poly_cba(eig)))
    for loc in locations(p.d - 2):
        assert vf[loc] == qracah_value(p, loc)
