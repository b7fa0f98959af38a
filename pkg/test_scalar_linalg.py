#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
精确算术测试 - 高斯有理数、矩阵秩与核、二元二次型公共零点
"""

import os
import sys
from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

# 添加当前目录到Python路径
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from scalar_linalg import (
    I, ONE, ZERO, BinaryQuadratic, Matrix, ProjectiveZeros, Scalar,
    common_projective_roots, common_projective_zeros, independent_indices, inverse, kernel_basis,
    linear_relations, rank, same_span, solve_coordinates, sparse_rank,
)
from twist_errors import DomainError, ParseError

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=30)
scalars = st.builds(Scalar, fractions, fractions)


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

def test_canonical_text():
    assert str(ZERO) == "0"
    assert str(Scalar(3)) == "3/1"
    assert str(Scalar(Fraction(-2, 4))) == "-1/2"
    assert str(Scalar(1, 2)) == "1/1+2/1*i"
    assert str(Scalar(0, Fraction(-1, 2))) == "-1/2*i"
    assert str(Scalar(1, -1)) == "1/1+-1/1*i"


def test_lenient_parse():
    assert Scalar.parse("3") == Scalar(3)
    assert Scalar.parse("i") == I
    assert Scalar.parse("-i") == -I
    assert Scalar.parse("2*i") == Scalar(0, 2)
    assert Scalar.parse("1-i") == Scalar(1, -1)
    assert Scalar.parse(" 1/2 + 3/4*i ") == Scalar(Fraction(1, 2), Fraction(3, 4))
    assert Scalar.parse("1/1+-1/1*i") == Scalar(1, -1)


@pytest.mark.parametrize("text", ["", "abc", "1/0", "1/0*i", "1.5", "2**i"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        Scalar.parse(text)


@settings(max_examples=200, deadline=None)
@given(scalars)
def test_text_round_trip(x):
    assert Scalar.parse(str(x)) == x
    assert Scalar.parse(x.pretty()) == x


@settings(max_examples=200, deadline=None)
@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) * c == a * c + b * c
    assert a - a == ZERO
    if not a.is_zero:
        assert a * a.inverse() == ONE
        assert (b / a) * a == b


@settings(max_examples=100, deadline=None)
@given(scalars)
def test_reduced_representation(x):
    assert x.re.denominator > 0 and x.im.denominator > 0
    assert x == Scalar(x.re, x.im)
    assert hash(x) == hash(Scalar(x.re, x.im))


def test_hash_agrees_with_numbers():
    assert Scalar(1) == 1 and hash(Scalar(1)) == hash(1)
    assert hash(Scalar(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert hash(Scalar(-3, 0)) == hash(-3)
    table = {Scalar(1): 'a', Scalar(Fraction(2, 3)): 'b'}
    assert table[1] == 'a'
    assert table[Fraction(2, 3)] == 'b'
    assert {Scalar(2), 2} == {2}
    assert len({Scalar(1, 1), Scalar(1, -1), Scalar(1)}) == 3


def test_sqrt():
    assert Scalar(-4).sqrt() == Scalar(0, 2)
    assert Scalar(3, 4).sqrt() == Scalar(2, 1)
    assert Scalar(0, 2).sqrt() == Scalar(1, 1)
    assert Scalar(-3, 4).sqrt() == Scalar(1, 2)
    assert Scalar(2).sqrt() is None
    assert Scalar(1, 1).sqrt() is None
    assert ZERO.sqrt() == ZERO


def test_sympy_conversion():
    x = Scalar(Fraction(-3, 7), Fraction(5, 2))
    assert Scalar.from_sympy(x.to_sympy()) == x
    assert Scalar.from_sympy(sympy.Rational(1, 3) - 2 * sympy.I) == Scalar(Fraction(1, 3), -2)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


# ---------------------------------------------------------------------------
# 矩阵
# ---------------------------------------------------------------------------

def test_kernel_examples():
    assert kernel_basis(Matrix.identity(3)) == []
    assert len(kernel_basis(Matrix.zeros(2, 3))) == 3
    kernel = kernel_basis(Matrix([[ONE, I]]))
    assert len(kernel) == 1
    assert same_span(kernel, [[-I, ONE]], 2)


def test_rank_examples():
    assert rank(Matrix.identity(4)) == 4
    u = [Scalar(1, 1), Scalar(2), Scalar(0, -3)]
    v = [Scalar(1), Scalar(0, 1), Scalar(-2), Scalar(5)]
    outer = Matrix([[x * y for y in v] for x in u])
    assert rank(outer) == 1
    assert rank(Matrix([[ONE, I], [I, -ONE]])) == 1


def _random_matrix(rng, nrows, ncols, bound=2):
    rows = []
    for _ in range(nrows):
        rows.append([Scalar(int(rng.integers(-bound, bound + 1)), int(rng.integers(-bound, bound + 1)))
                     for _ in range(ncols)])
    return Matrix(rows, ncols)


def _low_rank_matrix(rng, nrows, ncols, r):
    left = _random_matrix(rng, nrows, r)
    right = _random_matrix(rng, r, ncols)
    return left * right


def test_rank_nullity_random():
    """随机小矩阵：秩 + 零化度 = 列数，核向量精确零化矩阵，秩与 sympy 一致"""
    rng = np.random.default_rng(2024)
    for trial in range(60):
        nrows, ncols = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        if trial % 2:
            m = _random_matrix(rng, nrows, ncols)
        else:
            m = _low_rank_matrix(rng, nrows, ncols, int(rng.integers(1, 3)))
        r = rank(m)
        kernel = kernel_basis(m)
        assert r <= min(nrows, ncols)
        assert r + len(kernel) == ncols
        for v in kernel:
            assert all(x.is_zero for x in m * v)
        assert len(kernel) == 0 or rank(Matrix(kernel, ncols)) == len(kernel)
        oracle = sympy.Matrix([[x.to_sympy() for x in row] for row in m.rows])
        assert oracle.rank(simplify=True) == r


def test_inverse_and_singular():
    rng = np.random.default_rng(7)
    m = _random_matrix(rng, 4, 4)
    while rank(m) != 4:
        m = _random_matrix(rng, 4, 4)
    assert m * inverse(m) == Matrix.identity(4)
    assert inverse(m) * m == Matrix.identity(4)
    with pytest.raises(DomainError):
        inverse(Matrix([[ONE, I], [I, -ONE]]))


def test_solve_coordinates():
    basis = [[ONE, ZERO, I], [ZERO, ONE, ONE]]
    target = [Scalar(2), Scalar(0, 1), Scalar(0, 3)]
    coords = solve_coordinates(basis, target)
    assert coords == [Scalar(2), Scalar(0, 1)]
    assert solve_coordinates(basis, [ZERO, ZERO, ONE]) is None


def test_sparse_rank_and_relations():
    """稀疏阶梯化与稠密秩、sympy 一致；线性关系精确成立"""
    rng = np.random.default_rng(2025)
    for trial in range(40):
        nrows, ncols = int(rng.integers(1, 9)), int(rng.integers(1, 7))
        if trial % 2:
            m = _low_rank_matrix(rng, nrows, ncols, int(rng.integers(1, 4)))
        else:
            m = _random_matrix(rng, nrows, ncols)
        sparse_rows = [{k: x for k, x in enumerate(row) if not x.is_zero} for row in m.rows]
        r = sparse_rank(sparse_rows)
        oracle = sympy.Matrix([[x.to_sympy() for x in row] for row in m.rows])
        assert r == oracle.rank(simplify=True)
        assert sparse_rank(m.rows) == r
        chosen = independent_indices(sparse_rows)
        assert len(chosen) == r
        assert same_span([m.rows[k] for k in chosen], m.rows, ncols)
        relations = linear_relations(sparse_rows)
        assert len(relations) == nrows - r
        for rel in relations:
            combo = [ZERO] * ncols
            for c, row in zip(rel, m.rows):
                combo = [a + c * b for a, b in zip(combo, row)]
            assert all(x.is_zero for x in combo)
            assert rel[max(k for k, c in enumerate(rel) if not c.is_zero)] == ONE


def test_sparse_rank_limit():
    rows = [{0: ONE}, {1: Scalar(Fraction(1, 3), 2)}, {0: I, 1: ONE}, {2: ONE}]
    assert sparse_rank(rows) == 3
    assert sparse_rank(rows, limit=2) == 2
    assert independent_indices(rows, limit=2) == [0, 1]
    assert sparse_rank([{}, {0: ZERO}]) == 0
    assert linear_relations([{0: ONE}, {0: Scalar(2)}]) == [[Scalar(-2), ONE]]


# ---------------------------------------------------------------------------
# 二元二次型
# ---------------------------------------------------------------------------

A2 = BinaryQuadratic(1, 0, 0)
AB = BinaryQuadratic(0, 1, 0)
B2 = BinaryQuadratic(0, 0, 1)


def test_common_zero_examples():
    assert common_projective_zeros([BinaryQuadratic(), BinaryQuadratic()]) is ProjectiveZeros.ALL_OF_P1
    assert common_projective_zeros([A2, B2]) is ProjectiveZeros.EMPTY
    assert common_projective_zeros([AB]) is ProjectiveZeros.TWO_POINTS
    assert common_projective_zeros([A2]) is ProjectiveZeros.ONE_POINT
    assert common_projective_zeros([B2]) is ProjectiveZeros.ONE_POINT
    assert common_projective_zeros([AB, B2]) is ProjectiveZeros.ONE_POINT
    assert common_projective_zeros([AB, BinaryQuadratic(), AB]) is ProjectiveZeros.TWO_POINTS
    assert common_projective_zeros([A2, AB, B2]) is ProjectiveZeros.EMPTY
    # a² + b² = (a + ib)(a − ib)
    assert common_projective_zeros([BinaryQuadratic(1, 0, 1)]) is ProjectiveZeros.TWO_POINTS
    # (a + b)² 与 (a + b)·b 只共享 a = −b
    assert common_projective_zeros([BinaryQuadratic(1, 2, 1), BinaryQuadratic(0, 1, 1)]) is ProjectiveZeros.ONE_POINT


def test_empty_family_is_error():
    with pytest.raises(DomainError):
        common_projective_zeros([])


def test_common_roots():
    roots = common_projective_roots([AB])
    assert set(roots) == {(ONE, ZERO), (ZERO, ONE)}
    assert common_projective_roots([A2, B2]) == []
    assert common_projective_roots([BinaryQuadratic()]) is None
    assert set(common_projective_roots([BinaryQuadratic(1, 0, 1)])) == {(I, ONE), (-I, ONE)}
    # a² − 2b² 的根不在 ℚ(i) 上
    assert common_projective_roots([BinaryQuadratic(1, 0, -2)]) is None


def _mp(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def _mpc(x: Scalar):
    return mpmath.mpc(_mp(x.re), _mp(x.im))


def _oracle_points(form: BinaryQuadratic):
    """按求根公式数值求出 P¹ 上的不同零点，None 表示 b = 0"""
    c20, c11, c02 = (_mpc(c) for c in form.coefficients())
    points = []
    if c20 == 0:
        points.append(None)
        if c11 != 0:
            points.append(-c02 / c11)
        return points
    root = mpmath.sqrt(c11 * c11 - 4 * c20 * c02)
    for candidate in ((-c11 + root) / (2 * c20), (-c11 - root) / (2 * c20)):
        if not any(p is not None and abs(p - candidate) < 1e-20 for p in points):
            points.append(candidate)
    return points


def _same_point(p, q):
    if p is None or q is None:
        return p is None and q is None
    return abs(p - q) < 1e-20


def _oracle_zeros(forms):
    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        return ProjectiveZeros.ALL_OF_P1
    common = _oracle_points(nonzero[0])
    for f in nonzero[1:]:
        others = _oracle_points(f)
        common = [p for p in common if any(_same_point(p, q) for q in others)]
    return {0: ProjectiveZeros.EMPTY, 1: ProjectiveZeros.ONE_POINT, 2: ProjectiveZeros.TWO_POINTS}[len(common)]


def _product(l1, l2) -> BinaryQuadratic:
    (p1, q1), (p2, q2) = l1, l2
    return BinaryQuadratic(p1 * p2, p1 * q2 + q1 * p2, q1 * q2)


def test_common_zeros_against_quadratic_formula():
    """与求根公式数值计数对照，覆盖共享线性因子与无穷远点的情形"""
    mpmath.mp.dps = 50
    rng = np.random.default_rng(99)
    linear = [(ONE, ZERO), (ZERO, ONE), (ONE, ONE), (ONE, -I), (ONE, I), (Scalar(2), Scalar(-1)), (I, Scalar(3))]

    def pick():
        return linear[int(rng.integers(0, len(linear)))]

    def rand_form():
        return BinaryQuadratic(*(Scalar(int(rng.integers(-2, 3)), int(rng.integers(-2, 3))) for _ in range(3)))

    for _ in range(240):
        kind = int(rng.integers(0, 3))
        if kind == 0:
            forms = [rand_form()]
        elif kind == 1:
            shared = pick()
            forms = [_product(shared, pick()) for _ in range(int(rng.integers(1, 4)))]
        else:
            forms = [_product(pick(), pick()) for _ in range(int(rng.integers(1, 3)))] + [BinaryQuadratic()]
        assert common_projective_zeros(forms) is _oracle_zeros(forms), forms
