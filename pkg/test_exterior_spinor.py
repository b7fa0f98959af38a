#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
外代数与旋量模型测试
外积、缩并、Ω^{-1}、γ 映射、零化子、纯旋量判定与迷向子空间对齐
"""

import os
import sys

import numpy as np
import pytest

# 添加当前目录到Python路径
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from exterior_spinor import (
    ALL_MASKS, EVEN_MASKS, SPINOR_KEYS, Form, Polyvector, Spinor, VectorV,
    align_isotropic_pairs, annihilator, apply_matrix, calibrate_omega_sign, clifford_act,
    contract, exp_pure, gamma, gamma_sq, intersection_dim, is_isotropic, is_orthogonal,
    is_pure, mask_degree, mask_from_key, omega_inv, omega_sign, pair_intersection_dim,
    pullback, subspace_dim, use_omega_sign, wedge,
)
from scalar_linalg import HALF, ONE, ZERO, Matrix, Scalar, same_span
from superalgebra import (
    PAIR_MASKS, random_form, random_gl_matrix, random_scalar, random_spinor, random_two_form,
)
from twist_errors import DomainError, ParseError

SIGMA = Form({'23': 1, '45': 1})


def _span(vectors):
    return [list(v.coords) for v in vectors]


def _random_pure(rng):
    """exp_pure 生成一般位置的纯旋量，再用 GL(L) 与 exp(X₋) 移动"""
    psi = exp_pure(random_two_form(rng))
    if rng.random() < 0.5:
        psi = Spinor.from_form(pullback(random_gl_matrix(rng), psi))
    if rng.random() < 0.5:
        pi = Polyvector._from_masks({m: random_scalar(rng, 1) for m in PAIR_MASKS})
        once = contract(pi, psi)
        psi = Spinor.from_form(psi + once + contract(pi, once).scale(HALF))
    return psi


# ---------------------------------------------------------------------------
# 单项式键与外代数
# ---------------------------------------------------------------------------

def test_monomial_keys():
    assert SPINOR_KEYS == ['', '12', '13', '14', '15', '23', '24', '25', '34', '35', '45',
                           '1234', '1235', '1245', '1345', '2345']
    assert len(ALL_MASKS) == 32
    assert mask_from_key('135') == 0b10101
    for bad in ('32', '16', 'ab', '11'):
        with pytest.raises(ParseError):
            mask_from_key(bad)


def test_wedge_examples():
    assert wedge(Form({'1': 1}), Form({'2': 1})) == Form({'12': 1})
    assert wedge(Form({'2': 1}), Form({'1': 1})) == Form({'12': -1})
    assert wedge(Form({'12': 1}), Form({'12': 1})).is_zero
    assert wedge(SIGMA, SIGMA) == Form({'2345': 2})


def test_wedge_graded_commutative_and_associative():
    rng = np.random.default_rng(11)
    for _ in range(40):
        da, db = int(rng.integers(0, 4)), int(rng.integers(0, 4))
        a = random_form(rng, [m for m in ALL_MASKS if mask_degree(m) == da], density=0.6)
        b = random_form(rng, [m for m in ALL_MASKS if mask_degree(m) == db], density=0.6)
        c = random_form(rng, ALL_MASKS, density=0.3)
        sign = -1 if (da * db) % 2 else 1
        assert wedge(a, b) == wedge(b, a).scale(sign)
        assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))
        f = random_form(rng, ALL_MASKS, density=0.5)
        assert f.even_part() + f.odd_part() == f


def test_contract_examples():
    assert contract(Polyvector({'1': 1}), Form({'1': 1})) == Form.one()
    assert contract(Polyvector({'1': 1}), Form({'23': 1})).is_zero
    assert contract(Polyvector({'23': 1}), Form({'23': 1})) == Form.one().scale(-1)


def test_contract_is_antiderivation():
    rng = np.random.default_rng(12)
    for _ in range(30):
        j = int(rng.integers(1, 6))
        p = Polyvector({str(j): 1})
        a = random_form(rng, [m for m in ALL_MASKS if mask_degree(m) == 2], density=0.5)
        b = random_form(rng, ALL_MASKS, density=0.4)
        # a 为偶次，ι(a∧b) = ι(a)∧b + a∧ι(b)
        assert contract(p, wedge(a, b)) == wedge(contract(p, a), b) + wedge(a, contract(p, b))


def test_pairing_is_perfect():
    for s in ALL_MASKS:
        for t in ALL_MASKS:
            expected = ONE if s == t else ZERO
            assert Polyvector._from_masks({s: ONE}).pair(Form._from_masks({t: ONE})) == expected


# ---------------------------------------------------------------------------
# Ω^{-1} 与 γ
# ---------------------------------------------------------------------------

def test_calibrated_sign():
    assert calibrate_omega_sign() in (1, -1)
    assert omega_sign() == calibrate_omega_sign()
    with use_omega_sign(-omega_sign()):
        assert omega_sign() == -calibrate_omega_sign()
    assert omega_sign() == calibrate_omega_sign()
    with pytest.raises(DomainError):
        with use_omega_sign(2):
            pass


def test_omega_inv_defining_identity():
    """a ∧ μ = ⟨Ω^{-1}(a), μ⟩ · Ω（相差全局符号 ε）"""
    eps = omega_sign()
    top = Form({'12345': 1})
    for s in ALL_MASKS:
        a = Form._from_masks({s: ONE})
        inv = omega_inv(a)
        for t in ALL_MASKS:
            if mask_degree(t) + mask_degree(s) != 5:
                continue
            mu = Form._from_masks({t: ONE})
            assert wedge(a, mu) == top.scale(inv.pair(mu) * eps)


def test_omega_inv_examples():
    eps = omega_sign()
    assert omega_inv(Form({'12345': 1})) == Polyvector.one().scale(eps)
    assert omega_inv(Form({'2345': 1})) == Polyvector({'1': eps})
    assert omega_inv(Form.one()) == Polyvector({'12345': eps})
    with pytest.raises(DomainError):
        omega_inv(Form({'': 1, '12': 1}))


def test_gamma_examples():
    assert gamma_sq(Spinor.one()).is_zero
    assert gamma_sq(SIGMA) == VectorV.e(1)
    assert gamma_sq(Form({'': 1, '12': 1})).is_zero
    assert gamma(Form.one(), Form({'2345': 1})) == VectorV.e(1).scale(HALF * omega_sign())
    assert gamma(Form.one(), Form({'45': 1})).is_zero
    psi = Form({'': 1, '2345': 1})
    for j in range(1, 6):
        key = ''.join(str(k) for k in range(1, 6) if k != j)
        value = gamma(psi, Form({key: 1}))
        assert not value.is_zero
        assert same_span([list(value.coords)], [list(VectorV.e(j).coords)], 10)


def test_gamma_is_polarization():
    rng = np.random.default_rng(13)
    for _ in range(30):
        psi, phi = random_spinor(rng), random_spinor(rng)
        assert gamma(psi, phi) == gamma(phi, psi)
        assert gamma(psi, psi) == gamma_sq(psi)
        polar = (gamma_sq(psi + phi) - gamma_sq(psi) - gamma_sq(phi)).scale(HALF)
        assert gamma(psi, phi) == polar


def test_gamma_lands_in_l_for_degree_zero_and_two():
    rng = np.random.default_rng(14)
    for _ in range(10):
        psi = Spinor.from_form(random_form(rng, [m for m in EVEN_MASKS if mask_degree(m) < 4]))
        value = gamma_sq(psi)
        assert all(c.is_zero for c in value.coords[5:])


def test_gamma_flips_with_sign_convention():
    rng = np.random.default_rng(15)
    psi = random_spinor(rng)
    with use_omega_sign(1):
        plus = gamma_sq(psi)
    with use_omega_sign(-1):
        minus = gamma_sq(psi)
    assert plus == -minus


# ---------------------------------------------------------------------------
# Clifford 作用与零化子
# ---------------------------------------------------------------------------

def test_clifford_examples():
    assert clifford_act(VectorV.e(1), Form.one()).is_zero
    assert clifford_act(VectorV.f(1), Form.one()) == Form({'1': 1})
    assert clifford_act(VectorV.e(5), Form({'15': 1})) == Form({'1': -1})


def test_clifford_square():
    rng = np.random.default_rng(16)
    for _ in range(40):
        v = VectorV([random_scalar(rng) for _ in range(10)])
        f = random_form(rng, ALL_MASKS, density=0.5)
        lam_of_l = sum((v.coords[5 + a] * v.coords[a] for a in range(5)), ZERO)
        assert clifford_act(v, clifford_act(v, f)) == f.scale(lam_of_l)
        assert lam_of_l * 2 == v.pairing(v)


def test_clifford_reverses_parity():
    rng = np.random.default_rng(17)
    psi = random_spinor(rng)
    for k in range(10):
        image = clifford_act(VectorV.basis(k), psi)
        assert all(d % 2 == 1 for d in image.degrees())


def test_annihilator_examples():
    assert same_span(_span(annihilator(Spinor.one())), _span([VectorV.e(j) for j in range(1, 6)]), 10)
    assert same_span(_span(annihilator(SIGMA)), _span([VectorV.e(1)]), 10)
    expected = [VectorV.e(1)] + [VectorV.f(j) for j in range(2, 6)]
    assert same_span(_span(annihilator(Form({'2345': 1}))), _span(expected), 10)
    with pytest.raises(DomainError):
        annihilator(Spinor())


def test_purity_examples():
    assert is_pure(Spinor.one())
    assert not is_pure(Form({'': 1, '2345': 1}))
    assert not is_pure(SIGMA)
    assert is_pure(Form({'': 1, '12': 1}))


def test_purity_equivalence():
    """γ(ψ,ψ) = 0 ⇔ dim Ann(ψ) = 5，且 dim Ann(ψ) 只取 1 或 5"""
    rng = np.random.default_rng(500)
    pure_count = 0
    for k in range(520):
        if k % 3 == 0:
            psi = _random_pure(rng)
        else:
            psi = random_spinor(rng, density=0.25 if k % 3 == 1 else 1.0)
        ann = annihilator(psi)
        assert len(ann) in (1, 5), psi
        assert is_isotropic(ann)
        assert gamma_sq(psi).is_zero == (len(ann) == 5), psi
        pure_count += len(ann) == 5
    print(f"✅ 520 个旋量中纯旋量 {pure_count} 个")
    assert pure_count >= 170


def test_exponential_purity():
    rng = np.random.default_rng(18)
    for _ in range(30):
        assert is_pure(exp_pure(random_two_form(rng, bound=2)))
    with pytest.raises(DomainError):
        exp_pure(Form({'1': 1}))


def test_pure_support_identity():
    """纯旋量 ψ 的 Im γ(ψ, −) 就是 Ann(ψ)"""
    rng = np.random.default_rng(19)
    for _ in range(15):
        psi = _random_pure(rng)
        image = [gamma(psi, chi) for chi in Spinor.basis()]
        assert same_span(_span(image), _span(annihilator(psi)), 10)


# ---------------------------------------------------------------------------
# 纯旋量对
# ---------------------------------------------------------------------------

def test_pair_intersection_examples():
    one = Spinor.one()
    assert pair_intersection_dim(one, one) == 5
    assert pair_intersection_dim(one, Form({'45': 1})) == 3
    assert pair_intersection_dim(one, Form({'2345': 1})) == 1
    with pytest.raises(DomainError):
        pair_intersection_dim(one, SIGMA)


def _random_pure_pair(rng, kind):
    """kind 0：一般位置；1：差一个秩二二次形式；2：同一条直线"""
    alpha = random_two_form(rng)
    psi1 = exp_pure(alpha)
    if kind == 0:
        psi2 = exp_pure(random_two_form(rng, bound=2))
    elif kind == 1:
        u = random_form(rng, [m for m in ALL_MASKS if mask_degree(m) == 1])
        v = random_form(rng, [m for m in ALL_MASKS if mask_degree(m) == 1])
        psi2 = exp_pure(alpha + wedge(u, v))
    else:
        psi2 = psi1.scale(random_scalar(rng) + 3)
    h = random_gl_matrix(rng)
    return Spinor.from_form(pullback(h, psi1)), Spinor.from_form(pullback(h, psi2))


def test_pure_pair_intersections():
    """r 为奇数；a·ψ1 + b·ψ2 全为纯旋量 ⇔ r ∈ {3, 5}"""
    rng = np.random.default_rng(200)
    seen = set()
    for k in range(200):
        psi1, psi2 = _random_pure_pair(rng, k % 3)
        r = pair_intersection_dim(psi1, psi2)
        assert r % 2 == 1
        seen.add(r)
        for _ in range(20):
            a = random_scalar(rng) + 3
            b = random_scalar(rng) + 3
            combo = Spinor.from_form(psi1.scale(a) + psi2.scale(b))
            if combo.is_zero:
                continue
            assert is_pure(combo) == (r in (3, 5))
    assert seen == {1, 3, 5}


# ---------------------------------------------------------------------------
# 迷向子空间对齐
# ---------------------------------------------------------------------------

def _maps_into(f: Matrix, source, target) -> bool:
    images = [apply_matrix(f, v) for v in source]
    return intersection_dim(images, target) == subspace_dim(target) == subspace_dim(images)


def test_align_identity():
    l1 = [VectorV.e(j) for j in range(1, 6)]
    l2 = [VectorV.e(1)] + [VectorV.f(j) for j in range(2, 6)]
    f = align_isotropic_pairs(l1, l2, l1, l2)
    assert f == Matrix.identity(10)


def test_align_examples():
    l1 = annihilator(Spinor.one())
    l2 = annihilator(Form({'45': 1}))
    l2_target = annihilator(Form({'23': 1}))
    f = align_isotropic_pairs(l1, l2, l1, l2_target)
    assert is_orthogonal(f)
    assert _maps_into(f, l1, l1)
    assert _maps_into(f, l2, l2_target)

    swap = align_isotropic_pairs(l1, l2, l2, l1)
    assert is_orthogonal(swap)
    assert _maps_into(swap, l1, l2)
    assert _maps_into(swap, l2, l1)


def test_align_random_pairs():
    rng = np.random.default_rng(201)
    standard = {
        5: annihilator(Spinor.one()),
        3: annihilator(Form({'45': 1})),
        1: annihilator(Form({'2345': 1})),
    }
    l_std = annihilator(Spinor.one())
    for k in range(30):
        psi1, psi2 = _random_pure_pair(rng, k % 3)
        l1, l2 = annihilator(psi1), annihilator(psi2)
        r = intersection_dim(l1, l2)
        f = align_isotropic_pairs(l1, l2, l_std, standard[r])
        assert is_orthogonal(f)
        assert _maps_into(f, l1, l_std)
        assert _maps_into(f, l2, standard[r])


def test_align_rejects_mismatch():
    l1 = annihilator(Spinor.one())
    with pytest.raises(DomainError):
        align_isotropic_pairs(l1, annihilator(Form({'45': 1})), l1, annihilator(Form({'2345': 1})))
    with pytest.raises(DomainError):
        align_isotropic_pairs(l1, l1, [VectorV.e(1) + VectorV.f(1)] + l1[1:], l1)


def test_pullback_requires_invertible():
    with pytest.raises(DomainError):
        pullback(Matrix.zeros(5, 5), Spinor.one())
    with pytest.raises(DomainError):
        pullback(Matrix.identity(4), Spinor.one())
    diag = Matrix([[Scalar(3) if i == j == 0 else (ONE if i == j else ZERO) for j in range(5)] for i in range(5)])
    assert pullback(diag, Form({'12': 1})) == Form({'12': 3})
    assert pullback(diag, Form({'2345': 1})) == Form({'2345': 1})
