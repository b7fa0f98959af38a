#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
平方零超荷轨道分类器
计算平方零超荷的全部不变量（秩、纯旋量交的形态、R 对称迷向性、
存活平移、射影轨道维数、稳定子维数），并归入七个层之一
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from exterior_spinor import EVEN_MASKS, Form, Spinor, gamma, is_pure, key_from_mask, omega_sign
from scalar_linalg import (
    I, ONE, ZERO, BinaryQuadratic, Matrix, ProjectiveZeros, Scalar,
    common_projective_roots, common_projective_zeros, kernel_basis, solve_coordinates,
)
from stabilizer_analysis import projective_orbit_dim, quoted_stabilizer
from superalgebra import (
    LIE_DIM, Supercharge, WVector, bracket, gamma_restriction_rank, group_generator_act,
    random_generator, random_scalar, random_spinor, rank_and_image,
    translations_image,
)
from twist_errors import ClassificationError, DomainError, NotSquareZeroError, ParseError

logger = logging.getLogger(__name__)


class OrbitLabel(Enum):
    """零层与六个非平凡轨道"""
    ZERO = 'Zero'
    R1_PURE_ISO = 'R1PureIso'
    R1_PURE_NON_ISO = 'R1PureNonIso'
    R1_IMPURE = 'R1Impure'
    R2_LINE = 'R2Line'
    R2_TWO_POINTS = 'R2TwoPoints'
    R2_TANGENT = 'R2Tangent'

    @classmethod
    def parse(cls, text: str) -> 'OrbitLabel':
        for label in cls:
            if label.value == text or label.name == text:
                return label
        raise ParseError(f"未知的轨道标签: {text}")


NONTRIVIAL_LABELS = [label for label in OrbitLabel if label is not OrbitLabel.ZERO]


class IntersectionPattern(Enum):
    """P(S_Q) 与纯旋量簇的相交形态"""
    LINE = 'Line'
    TWO_POINTS = 'TwoPoints'
    ONE_POINT = 'OnePoint'
    EMPTY = 'Empty'


_PATTERN_FROM_ZEROS = {
    ProjectiveZeros.ALL_OF_P1: IntersectionPattern.LINE,
    ProjectiveZeros.TWO_POINTS: IntersectionPattern.TWO_POINTS,
    ProjectiveZeros.ONE_POINT: IntersectionPattern.ONE_POINT,
    ProjectiveZeros.EMPTY: IntersectionPattern.EMPTY,
}

_LABEL_FROM_PATTERN = {
    IntersectionPattern.LINE: OrbitLabel.R2_LINE,
    IntersectionPattern.TWO_POINTS: OrbitLabel.R2_TWO_POINTS,
    IntersectionPattern.ONE_POINT: OrbitLabel.R2_TANGENT,
}


@dataclass
class InvariantReport:
    """分类结论及全部不变量"""
    label: OrbitLabel
    rank: int
    square_zero: bool
    pattern: Optional[IntersectionPattern] = None
    psi_pure: Optional[bool] = None
    w_isotropic: Optional[bool] = None
    translations_dim: int = 0
    projective_orbit_dim: Optional[int] = None
    stabilizer_dim: Optional[int] = None
    gamma_rank: Optional[int] = None
    background: Optional[str] = None

    def to_dict(self) -> Dict:
        data = {
            'label': self.label.value,
            'rank': self.rank,
            'square_zero': self.square_zero,
            'pattern': self.pattern.value if self.pattern else None,
            'psi_pure': self.psi_pure,
            'w_isotropic': self.w_isotropic,
            'translations_dim': self.translations_dim,
            'projective_orbit_dim': self.projective_orbit_dim,
            'stabilizer_dim': self.stabilizer_dim,
            'background': self.background,
        }
        if self.rank == 2:
            data['gamma_rank'] = self.gamma_rank
        return data


# ---------------------------------------------------------------------------
# 秩二：相交形态
# ---------------------------------------------------------------------------

def pencil_quadratics(psi1: Spinor, psi2: Spinor) -> List[BinaryQuadratic]:
    """q_k(a,b) = a²γ(ψ1,ψ1)_k + 2ab·γ(ψ1,ψ2)_k + b²γ(ψ2,ψ2)_k，k 遍历 V 的 10 个坐标"""
    g11 = gamma(psi1, psi1).coords
    g12 = gamma(psi1, psi2).coords
    g22 = gamma(psi2, psi2).coords
    return [BinaryQuadratic(a, b + b, c) for a, b, c in zip(g11, g12, g22)]


def _rank_two_basis(q: Supercharge) -> List[Spinor]:
    rank, basis = rank_and_image(q)
    if rank != 2:
        raise DomainError(f"要求秩为 2 的超荷，实际秩为 {rank}")
    return basis


def intersection_pattern(q: Supercharge) -> IntersectionPattern:
    """秩二超荷的 P(S_Q) 与纯旋量簇的相交形态"""
    psi1, psi2 = _rank_two_basis(q)
    return _PATTERN_FROM_ZEROS[common_projective_zeros(pencil_quadratics(psi1, psi2))]


def _combine(a: Scalar, psi1: Spinor, b: Scalar, psi2: Spinor) -> Spinor:
    return Spinor.from_form(psi1.scale(a) + psi2.scale(b))


def pure_points(q: Supercharge) -> List[Spinor]:
    """
    P(S_Q) 上的纯旋量

    秩一返回 [ψ]（ψ 纯时）；Line 形态返回像空间的两个基向量；
    其余情形返回各个有理纯点，若某纯点不在 ℚ(i) 上则抛出 DomainError。
    """
    rank, basis = rank_and_image(q)
    if rank == 0:
        return []
    if rank == 1:
        return basis if is_pure(basis[0]) else []
    psi1, psi2 = basis
    forms = pencil_quadratics(psi1, psi2)
    roots = common_projective_roots(forms)
    if roots is None:
        if all(f.is_zero for f in forms):
            return [psi1, psi2]
        raise DomainError("纯点不在 ℚ(i) 上")
    return [_combine(a, psi1, b, psi2) for a, b in roots]


def decompose_rank_two(q: Supercharge) -> Tuple[Spinor, WVector, Spinor, WVector]:
    """
    Q = ψ1⊗w1 + ψ2⊗w2，ψ1 为纯旋量；TwoPoints 与 Line 情形中 ψ2 也为纯旋量

    Returns:
        (ψ1, w1, ψ2, w2)
    """
    basis = _rank_two_basis(q)
    points = pure_points(q)
    if not points:
        raise ClassificationError("秩二平方零超荷的像中没有纯旋量")
    psi1 = points[0]
    if len(points) > 1:
        psi2 = points[1]
    else:
        psi2 = next(b for b in basis if solve_coordinates([psi1.to_vector()], b.to_vector()) is None)
    pair = [psi1.to_vector(), psi2.to_vector()]
    coeffs = [solve_coordinates(pair, col.to_vector()) for col in q.columns]
    if any(c is None for c in coeffs):
        raise ClassificationError("列不在所选纯旋量张成的空间中")
    w1 = WVector(coeffs[0][0], coeffs[1][0])
    w2 = WVector(coeffs[0][1], coeffs[1][1])
    return psi1, w1, psi2, w2


# ---------------------------------------------------------------------------
# 秩一：ψ ⊗ w 的提取
# ---------------------------------------------------------------------------

def rank_one_factor(q: Supercharge) -> Tuple[Spinor, WVector]:
    """秩一超荷写成 ψ ⊗ w：ψ 取第一个非零列，w 为两列对 ψ 的比值"""
    rank, _ = rank_and_image(q)
    if rank != 1:
        raise DomainError(f"要求秩为 1 的超荷，实际秩为 {rank}")
    psi = next(col for col in q.columns if not col.is_zero)
    mask, pivot = next(iter(psi.items()))
    w = WVector(*(col.coefficient(mask) / pivot for col in q.columns))
    return psi, w


# ---------------------------------------------------------------------------
# 分类
# ---------------------------------------------------------------------------

def background(translations_dim: int) -> Optional[str]:
    """
    由存活平移确定的扭曲背景

    10 − d 个全纯方向与 2d − 10 个拓扑方向，例如 C^5、R^4 x C^3、R^8 x C
    """
    if translations_dim < 5:
        return None
    holomorphic = 10 - translations_dim
    topological = 2 * translations_dim - 10
    parts = []
    if topological:
        parts.append(f"R^{topological}")
    if holomorphic:
        parts.append('C' if holomorphic == 1 else f"C^{holomorphic}")
    return ' x '.join(parts)


def classify(q: Supercharge, with_orbit: bool = True) -> InvariantReport:
    """
    平方零超荷的分类

    Args:
        q: 超荷
        with_orbit: 是否计算射影轨道维数与稳定子维数（批量测试时可关闭）

    Returns:
        InvariantReport
    """
    value = bracket(q, q)
    if not value.is_zero:
        raise NotSquareZeroError(f"[Q,Q] = {value.pretty()} ≠ 0", value)
    rank, _ = rank_and_image(q)
    if rank == 0:
        return InvariantReport(label=OrbitLabel.ZERO, rank=0, square_zero=True,
                               projective_orbit_dim=0 if with_orbit else None,
                               stabilizer_dim=LIE_DIM if with_orbit else None)

    report = InvariantReport(label=OrbitLabel.ZERO, rank=rank, square_zero=True)
    if rank == 1:
        psi, w = rank_one_factor(q)
        report.psi_pure = is_pure(psi)
        report.w_isotropic = w.is_isotropic
        if report.psi_pure:
            report.label = OrbitLabel.R1_PURE_ISO if report.w_isotropic else OrbitLabel.R1_PURE_NON_ISO
        elif report.w_isotropic:
            report.label = OrbitLabel.R1_IMPURE
        else:
            raise ClassificationError("非纯旋量配非迷向 w 不可能平方零")
    else:
        report.pattern = intersection_pattern(q)
        if report.pattern is IntersectionPattern.EMPTY:
            raise ClassificationError("秩二平方零超荷的 P(S_Q) 与纯旋量簇不交")
        report.label = _LABEL_FROM_PATTERN[report.pattern]
        report.gamma_rank = gamma_restriction_rank(q)

    report.translations_dim, _ = translations_image(q)
    report.background = background(report.translations_dim)
    if with_orbit:
        report.projective_orbit_dim = projective_orbit_dim(q)
        report.stabilizer_dim = LIE_DIM - report.projective_orbit_dim
    return report


def representative(label: OrbitLabel) -> Supercharge:
    """分类表中各轨道的代表元"""
    one = Form.one()
    sigma = Form({'23': 1, '45': 1})
    table = {
        OrbitLabel.ZERO: lambda: Supercharge(),
        OrbitLabel.R1_PURE_ISO: lambda: Supercharge.tensor(one, (ONE, I)),
        OrbitLabel.R1_PURE_NON_ISO: lambda: Supercharge.tensor(one, (ONE, ZERO)),
        OrbitLabel.R1_IMPURE: lambda: Supercharge.tensor(sigma, (ONE, I)),
        OrbitLabel.R2_LINE: lambda: Supercharge.tensor(one, (ONE, ZERO))
        + Supercharge.tensor(Form({'45': 1}), (ZERO, ONE)),
        OrbitLabel.R2_TWO_POINTS: lambda: Supercharge.tensor(one, (ONE, ZERO))
        + Supercharge.tensor(Form({'2345': 1}), (ZERO, ONE)),
        OrbitLabel.R2_TANGENT: lambda: Supercharge.tensor(one, (ONE, ZERO))
        + Supercharge.tensor(sigma, (ONE, I)),
    }
    return table[label]()


def sample_orbit(label: OrbitLabel, seed: int, word_length: int = 6) -> Supercharge:
    """
    在代表元上作用一串伪随机群生成元

    同一 seed 给出完全相同的结果
    """
    rng = np.random.default_rng(seed)
    q = representative(label)
    for _ in range(word_length):
        q = group_generator_act(random_generator(rng), q)
    return q


def sample_isotropic_pencil(seed: int) -> Supercharge:
    """
    随机秩二平方零超荷 ψ1⊗(1,i) + ψ2⊗(1,−i)

    平方零条件化为 γ(ψ1, ψ2) = 0，对 ψ2 是线性方程
    """
    rng = np.random.default_rng(seed)
    while True:
        psi1 = random_spinor(rng, density=0.6)
        columns = [list(gamma(psi1, chi).coords) for chi in Spinor.basis()]
        solutions = kernel_basis(Matrix.from_columns(columns, 10))
        coeffs = [random_scalar(rng) for _ in solutions]
        vec = [ZERO] * len(EVEN_MASKS)
        for c, sol in zip(coeffs, solutions):
            if not c.is_zero:
                vec = [v + c * s for v, s in zip(vec, sol)]
        psi2 = Spinor.from_vector(vec)
        q = Supercharge.tensor(psi1, (ONE, I)) + Supercharge.tensor(psi2, (ONE, -I))
        if rank_and_image(q)[0] == 2:
            return q


# ---------------------------------------------------------------------------
# 闭包扫描
# ---------------------------------------------------------------------------

@dataclass
class Pencil:
    """超荷线性族 Q(t) = base + t·direction"""
    base: Supercharge
    direction: Supercharge

    def member(self, t) -> Supercharge:
        return self.base + self.direction.scale(t)


@dataclass
class ScanEntry:
    t: Scalar
    label: Optional[OrbitLabel] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict:
        return {
            't': str(self.t),
            'label': self.label.value if self.label else None,
            'error': self.error,
        }


def closure_scan(family: Union[Pencil, Sequence[Tuple[Scalar, Supercharge]]],
                 sample_points: Sequence = ()) -> List[ScanEntry]:
    """
    逐点分类一族超荷；非平方零成员记录为错误条目而不中断

    Args:
        family: Pencil，或 (t, Q) 列表
        sample_points: 对 Pencil 取样的 t 值
    """
    if isinstance(family, Pencil):
        members = [(Scalar.coerce(t), family.member(Scalar.coerce(t))) for t in sample_points]
    else:
        members = [(Scalar.coerce(t), q) for t, q in family]
    entries = []
    for t, q in members:
        try:
            entries.append(ScanEntry(t, classify(q, with_orbit=False).label))
        except NotSquareZeroError as exc:
            entries.append(ScanEntry(t, error=str(exc)))
    return entries


# ---------------------------------------------------------------------------
# 幂零簇的理想
# ---------------------------------------------------------------------------

def coordinate_name(mask: int, column: int) -> str:
    key = key_from_mask(mask) or '0'
    return f"q_{{{key},{column}}}"


COORDINATE_SYMBOLS = [sympy.Symbol(coordinate_name(m, c)) for c in (1, 2) for m in EVEN_MASKS]


def emit_ideal() -> Tuple[sympy.Poly, ...]:
    """
    [Q,Q] 在 V 的 10 个坐标上的分量，作为 32 个超荷坐标的二次多项式
    """
    return _ideal_for_sign(omega_sign())


@lru_cache(maxsize=2)
def _ideal_for_sign(sign: int) -> Tuple[sympy.Poly, ...]:
    # sign 只作缓存键；gamma 读取当前约定
    basis = Spinor.basis()
    n = len(basis)
    table = {(i, j): gamma(basis[i], basis[j]).coords for i in range(n) for j in range(i, n)}
    exprs = [sympy.Integer(0)] * 10
    for column in range(2):
        symbols = COORDINATE_SYMBOLS[column * n:(column + 1) * n]
        for (i, j), values in table.items():
            factor = 1 if i == j else 2
            monomial = symbols[i] * symbols[j]
            for k, value in enumerate(values):
                if not value.is_zero:
                    exprs[k] += factor * value.to_sympy() * monomial
    return tuple(sympy.Poly(e, *COORDINATE_SYMBOLS, domain=sympy.QQ_I) for e in exprs)


@lru_cache(maxsize=2)
def _ideal_terms(sign: int) -> Tuple[Tuple[Tuple[Tuple[int, ...], Scalar], ...], ...]:
    return tuple(tuple((monom, Scalar.from_sympy(coeff)) for monom, coeff in poly.terms())
                 for poly in _ideal_for_sign(sign))


def evaluate_ideal(q: Supercharge) -> List[Scalar]:
    """在超荷坐标处求各多项式的值"""
    coords = q.coordinates()
    values = []
    for terms in _ideal_terms(omega_sign()):
        total = ZERO
        for monom, coeff in terms:
            term = coeff
            for slot, power in enumerate(monom):
                if power:
                    term = term * coords[slot] ** power
                    if term.is_zero:
                        break
            total = total + term
        values.append(total)
    return values


def render_polynomial(poly: sympy.Poly) -> str:
    """多项式的单行文本：项以 " + " 连接，系数在括号中"""
    pieces = []
    for monom, coeff in poly.terms():
        value = Scalar.from_sympy(coeff)
        factors = []
        for symbol, power in zip(COORDINATE_SYMBOLS, monom):
            factors.extend([symbol.name] * power)
        pieces.append(f"({value.pretty()})*{'*'.join(factors)}")
    return ' + '.join(pieces) if pieces else '0'


def annotation(label: OrbitLabel) -> Optional[str]:
    return quoted_stabilizer(label.value)
