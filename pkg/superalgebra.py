#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
(2,0) 超平移代数
R 对称空间 W、超荷、括号 [Q,Q']、平方零判定、秩与 [Q,−] 的像，
以及对称代数 𝔰𝔬(V) ⊕ 𝔬(W) ⊕ ℂ 与抛物型群生成元的作用
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from exterior_spinor import (
    DIM_L, EVEN_MASKS, Form, Polyvector, Spinor, VectorV,
    exp_contract, exp_wedge, gamma, mask_from_key, pullback, spin_act,
)
from scalar_linalg import (
    ONE, ZERO, Matrix, Scalar, column_space_basis, rank, vectors_rank,
)
from twist_errors import DomainError, ParseError

logger = logging.getLogger(__name__)

PAIR_KEYS = ['12', '13', '14', '15', '23', '24', '25', '34', '35', '45']
PAIR_MASKS = [mask_from_key(k) for k in PAIR_KEYS]

COORDINATE_NAMES = (
    [f"A_{i}{j}" for i in range(1, 6) for j in range(1, 6)]
    + [f"Xplus_{k}" for k in PAIR_KEYS]
    + [f"Xminus_{k}" for k in PAIR_KEYS]
    + ['t', 's']
)
LIE_DIM = len(COORDINATE_NAMES)
# 𝔰𝔬(V) ⊕ 𝔬(W)：去掉缩放生成元 s
ROTATION_DIM = LIE_DIM - 1
_NAME_INDEX = {name: k for k, name in enumerate(COORDINATE_NAMES)}


class WVector:
    """W = ℂ²，(−,−)_W 在该基下为单位矩阵"""

    __slots__ = ('w1', 'w2')

    def __init__(self, w1=0, w2=0):
        self.w1 = Scalar.coerce(w1)
        self.w2 = Scalar.coerce(w2)

    def norm(self) -> Scalar:
        return self.w1 * self.w1 + self.w2 * self.w2

    def pairing(self, other: 'WVector') -> Scalar:
        return self.w1 * other.w1 + self.w2 * other.w2

    @property
    def is_isotropic(self) -> bool:
        return self.norm().is_zero

    @property
    def is_zero(self) -> bool:
        return self.w1.is_zero and self.w2.is_zero

    def __iter__(self):
        return iter((self.w1, self.w2))

    def __eq__(self, other):
        if not isinstance(other, WVector):
            return NotImplemented
        return (self.w1, self.w2) == (other.w1, other.w2)

    def __hash__(self):
        return hash((self.w1, self.w2))

    def __repr__(self):
        return f"WVector({self.w1.pretty()}, {self.w2.pretty()})"


class Supercharge:
    """
    超荷 Q: W^∨ → S₊

    两列分别是 W^∨ 两个基向量的像；坐标顺序为第一列 16 个、第二列 16 个。
    """

    __slots__ = ('columns',)

    def __init__(self, col1: Form = None, col2: Form = None):
        col1 = Spinor() if col1 is None else col1
        col2 = Spinor() if col2 is None else col2
        self.columns: Tuple[Spinor, Spinor] = (_spinor(col1), _spinor(col2))

    @classmethod
    def tensor(cls, psi: Form, w: Sequence) -> 'Supercharge':
        """ψ ⊗ w"""
        w1, w2 = (Scalar.coerce(x) for x in w)
        psi = _spinor(psi)
        return cls(psi.scale(w1), psi.scale(w2))

    @classmethod
    def from_coordinates(cls, values: Sequence) -> 'Supercharge':
        if len(values) != 2 * len(EVEN_MASKS):
            raise DomainError("超荷坐标必须是 32 个")
        return cls(Spinor.from_vector(values[:16]), Spinor.from_vector(values[16:]))

    def coordinates(self) -> List[Scalar]:
        return self.columns[0].to_vector() + self.columns[1].to_vector()

    @property
    def is_zero(self) -> bool:
        return self.columns[0].is_zero and self.columns[1].is_zero

    def __add__(self, other: 'Supercharge') -> 'Supercharge':
        return Supercharge(self.columns[0] + other.columns[0], self.columns[1] + other.columns[1])

    def __sub__(self, other: 'Supercharge') -> 'Supercharge':
        return Supercharge(self.columns[0] - other.columns[0], self.columns[1] - other.columns[1])

    def scale(self, factor) -> 'Supercharge':
        return Supercharge(self.columns[0].scale(factor), self.columns[1].scale(factor))

    def __eq__(self, other):
        if not isinstance(other, Supercharge):
            return NotImplemented
        return self.columns == other.columns

    def __hash__(self):
        return hash(self.columns)

    def pretty(self) -> str:
        return f"[{self.columns[0].pretty()}] ⊗ u1 + [{self.columns[1].pretty()}] ⊗ u2"

    def __repr__(self):
        return f"Supercharge({self.pretty()})"


def _spinor(form: Form) -> Spinor:
    if isinstance(form, Spinor):
        return form
    return Spinor.from_form(form)


def _add_vectors(vectors: List[VectorV]) -> VectorV:
    total = VectorV()
    for v in vectors:
        total = total + v
    return total


# ---------------------------------------------------------------------------
# 括号与不变量
# ---------------------------------------------------------------------------

def bracket(q: Supercharge, q_other: Supercharge) -> VectorV:
    """[Q, Q'] = Σ_c γ(Q_c, Q'_c)，即 γ ⊗ (−,−)_W"""
    terms = []
    for col, col_other in zip(q.columns, q_other.columns):
        if col.is_zero or col_other.is_zero:
            continue
        terms.append(gamma(col, col_other))
    return _add_vectors(terms)


def is_square_zero(q: Supercharge) -> bool:
    return bracket(q, q).is_zero


def rank_and_image(q: Supercharge) -> Tuple[int, List[Spinor]]:
    """
    超荷的秩 dim S_Q 与像空间基

    Returns:
        (秩, S_Q 的基)
    """
    columns = [c.to_vector() for c in q.columns]
    basis = column_space_basis(Matrix.from_columns(columns, len(EVEN_MASKS)))
    return len(basis), [Spinor.from_vector(v) for v in basis]


def bracket_matrix(q: Supercharge) -> Matrix:
    """10×32 矩阵，列为 [Q, χ⊗u_c]，χ 取旋量基"""
    columns = []
    for col in q.columns:
        for chi in Spinor.basis():
            columns.append(list(gamma(col, chi).coords) if not col.is_zero else [ZERO] * 10)
    return Matrix.from_columns(columns, 10)


def translations_image(q: Supercharge) -> Tuple[int, List[VectorV]]:
    """Im([Q,−]) ⊆ V：存活平移的维数与基"""
    basis = column_space_basis(bracket_matrix(q))
    return len(basis), [VectorV(v) for v in basis]


def gamma_restriction_rank(q: Supercharge) -> int:
    """γ 限制在 Sym²(S_Q) 上的秩"""
    _, basis = rank_and_image(q)
    values = [gamma(basis[i], basis[j]).coords for i in range(len(basis)) for j in range(i, len(basis))]
    if not values:
        return 0
    return vectors_rank(values, 10)


# ---------------------------------------------------------------------------
# 李代数元素
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LieElement:
    """
    𝔤 = 𝔰𝔬(V) ⊕ 𝔬(W) ⊕ ℂ 在抛物坐标 (A, X₊, X₋, t, s) 下的元素

    Args:
        a: 5×5 矩阵 A ∈ 𝔤𝔩(L)，a[i][j] 为 A_{i+1,j+1}
        xplus: X₊ ∈ Λ²L^∨
        xminus: X₋ ∈ Λ²L
        t: 𝔰𝔬(W) 旋转参数
        s: 整体缩放
    """
    a: Tuple[Tuple[Scalar, ...], ...] = field(default_factory=lambda: tuple((ZERO,) * 5 for _ in range(5)))
    xplus: Form = field(default_factory=Form.zero)
    xminus: Polyvector = field(default_factory=Polyvector.zero)
    t: Scalar = ZERO
    s: Scalar = ZERO

    def __post_init__(self):
        a = tuple(tuple(Scalar.coerce(x) for x in row) for row in self.a)
        if len(a) != DIM_L or any(len(row) != DIM_L for row in a):
            raise DomainError("A 必须是 5×5 矩阵")
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 't', Scalar.coerce(self.t))
        object.__setattr__(self, 's', Scalar.coerce(self.s))
        for part in (self.xplus, self.xminus):
            if not part.is_zero and part.homogeneous_degree() != 2:
                raise DomainError("X₊ 与 X₋ 必须是二次元素")

    @classmethod
    def from_coordinates(cls, values: Sequence) -> 'LieElement':
        if len(values) != LIE_DIM:
            raise DomainError(f"李代数坐标必须是 {LIE_DIM} 个")
        values = [Scalar.coerce(v) for v in values]
        a = tuple(tuple(values[5 * i + j] for j in range(5)) for i in range(5))
        xplus = Form._from_masks(dict(zip(PAIR_MASKS, values[25:35])))
        xminus = Polyvector._from_masks(dict(zip(PAIR_MASKS, values[35:45])))
        return cls(a, xplus, xminus, values[45], values[46])

    @classmethod
    def from_named(cls, values: Dict[str, object]) -> 'LieElement':
        coords = [ZERO] * LIE_DIM
        for name, value in values.items():
            if name not in _NAME_INDEX:
                raise ParseError(f"未知的李代数坐标: {name}")
            coords[_NAME_INDEX[name]] = Scalar.coerce(value)
        return cls.from_coordinates(coords)

    @classmethod
    def generator(cls, index: int) -> 'LieElement':
        coords = [ZERO] * LIE_DIM
        coords[index] = ONE
        return cls.from_coordinates(coords)

    def coordinates(self) -> List[Scalar]:
        out = [x for row in self.a for x in row]
        out += [self.xplus.coefficient(m) for m in PAIR_MASKS]
        out += [self.xminus.coefficient(m) for m in PAIR_MASKS]
        return out + [self.t, self.s]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coordinates())

    def __add__(self, other: 'LieElement') -> 'LieElement':
        return LieElement.from_coordinates([x + y for x, y in zip(self.coordinates(), other.coordinates())])

    def scale(self, factor) -> 'LieElement':
        factor = Scalar.coerce(factor)
        return LieElement.from_coordinates([factor * x for x in self.coordinates()])

    def pretty(self) -> str:
        terms = []
        for name, c in zip(COORDINATE_NAMES, self.coordinates()):
            if not c.is_zero:
                terms.append(name if c == ONE else f"({c.pretty()})*{name}")
        return ' + '.join(terms) if terms else "0"


def lie_act(x: LieElement, q: Supercharge) -> Supercharge:
    """
    𝔤 在超荷上的作用

    𝔰𝔬(V) 部分逐列作用；t 将列 (c1, c2) 变为 (−t·c2, t·c1)；s 为整体缩放。
    """
    col1, col2 = q.columns
    new1 = spin_act(x, col1)
    new2 = spin_act(x, col2)
    if not x.t.is_zero:
        new1 = new1 - col2.scale(x.t)
        new2 = new2 + col1.scale(x.t)
    if not x.s.is_zero:
        new1 = new1 + col1.scale(x.s)
        new2 = new2 + col2.scale(x.s)
    return Supercharge(new1, new2)


def vector_matrix(x: LieElement) -> List[List[Scalar]]:
    """
    𝔰𝔬(V) 部分在 V 上的 10×10 矩阵 [[−Aᵀ, P], [W, A]]

    P、W 为 X₋、X₊ 的反对称矩阵；t 与 s 不作用在 V 上。
    """
    m = [[ZERO] * 10 for _ in range(10)]
    for i in range(DIM_L):
        for j in range(DIM_L):
            entry = x.a[i][j]
            if entry.is_zero:
                continue
            m[DIM_L + i][DIM_L + j] = entry
            m[j][i] = -entry
    for key, mask in zip(PAIR_KEYS, PAIR_MASKS):
        i, j = int(key[0]) - 1, int(key[1]) - 1
        minus = x.xminus.coefficient(mask)
        plus = x.xplus.coefficient(mask)
        if not minus.is_zero:
            m[i][DIM_L + j] = minus
            m[j][DIM_L + i] = -minus
        if not plus.is_zero:
            m[DIM_L + i][j] = plus
            m[DIM_L + j][i] = -plus
    return m


def vector_act(x: LieElement, v: VectorV) -> VectorV:
    """𝔰𝔬(V) 在 V 上的作用"""
    return VectorV(Matrix(vector_matrix(x), 10) * list(v.coords))


def _sparse_product(left: List[List[Scalar]], right: List[List[Scalar]]) -> List[List[Scalar]]:
    n = len(left)
    right_rows = [[(k, v) for k, v in enumerate(row) if not v.is_zero] for row in right]
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        row = out[i]
        for k, lv in enumerate(left[i]):
            if lv.is_zero:
                continue
            for j, rv in right_rows[k]:
                row[j] = row[j] + lv * rv
    return out


def lie_bracket(x: LieElement, y: LieElement) -> LieElement:
    """
    [x, y]，经由 V 上的忠实表示计算后读回抛物坐标

    𝔬(W) 交换且缩放居中，因此结果中 t = s = 0。
    """
    mx, my = vector_matrix(x), vector_matrix(y)
    xy, yx = _sparse_product(mx, my), _sparse_product(my, mx)
    c = [[xy[i][j] - yx[i][j] for j in range(10)] for i in range(10)]
    a = tuple(tuple(c[DIM_L + i][DIM_L + j] for j in range(DIM_L)) for i in range(DIM_L))
    xplus = {}
    xminus = {}
    for key, mask in zip(PAIR_KEYS, PAIR_MASKS):
        i, j = int(key[0]) - 1, int(key[1]) - 1
        xplus[mask] = c[DIM_L + i][j]
        xminus[mask] = c[i][DIM_L + j]
    return LieElement(a, Form._from_masks(xplus), Polyvector._from_masks(xminus))


# ---------------------------------------------------------------------------
# 群生成元
# ---------------------------------------------------------------------------

GENERATOR_KINDS = ('gl', 'exp_plus', 'exp_minus', 'w_matrix', 'scalar')


@dataclass(frozen=True)
class GroupGenerator:
    """
    抛物型群生成元

    Args:
        kind: gl（GL(L) 拉回）、exp_plus（exp X₊）、exp_minus（exp X₋）、
              w_matrix（O(W) 矩阵）、scalar（非零缩放）
        payload: 对应的矩阵、二次元素或标量
    """
    kind: str
    payload: object

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ParseError(f"未知的群生成元类型: {self.kind}")

    @classmethod
    def w_rotation(cls, u) -> 'GroupGenerator':
        """有理参数化的 SO(W) 旋转：c = (1−u²)/(1+u²)，s = 2u/(1+u²)"""
        u = Scalar.coerce(u)
        denom = ONE + u * u
        if denom.is_zero:
            raise DomainError("旋转参数使 1+u² = 0")
        c = (ONE - u * u) / denom
        s = (u + u) / denom
        return cls('w_matrix', Matrix([[c, -s], [s, c]]))

    @classmethod
    def w_reflection(cls) -> 'GroupGenerator':
        return cls('w_matrix', Matrix([[ONE, ZERO], [ZERO, -ONE]]))

    def describe(self) -> str:
        if isinstance(self.payload, Matrix):
            return f"{self.kind}{self.payload!r}"
        return f"{self.kind}({self.payload.pretty()})"


def group_generator_act(g: GroupGenerator, q: Supercharge) -> Supercharge:
    """群生成元作用在超荷上；GL(L) 为射影作用"""
    col1, col2 = q.columns
    if g.kind == 'gl':
        return Supercharge(pullback(g.payload, col1), pullback(g.payload, col2))
    if g.kind == 'exp_plus':
        return Supercharge(exp_wedge(g.payload, col1), exp_wedge(g.payload, col2))
    if g.kind == 'exp_minus':
        return Supercharge(exp_contract(g.payload, col1), exp_contract(g.payload, col2))
    if g.kind == 'w_matrix':
        r = g.payload
        if r.nrows != 2 or r.ncols != 2 or r.transpose() * r != Matrix.identity(2):
            raise DomainError("W 变换必须是 2×2 正交矩阵")
        return Supercharge(col1.scale(r[0, 0]) + col2.scale(r[0, 1]),
                           col1.scale(r[1, 0]) + col2.scale(r[1, 1]))
    factor = Scalar.coerce(g.payload)
    if factor.is_zero:
        raise DomainError("缩放因子不能为零")
    return q.scale(factor)


# ---------------------------------------------------------------------------
# 随机生成（测试与抽样共用）
# ---------------------------------------------------------------------------

def random_scalar(rng: np.random.Generator, bound: int = 2, gaussian: bool = True) -> Scalar:
    re = int(rng.integers(-bound, bound + 1))
    im = int(rng.integers(-bound, bound + 1)) if gaussian else 0
    return Scalar(re, im)


def random_nonzero_scalar(rng: np.random.Generator, bound: int = 2) -> Scalar:
    while True:
        value = random_scalar(rng, bound)
        if not value.is_zero:
            return value


def random_form(rng: np.random.Generator, masks: Sequence[int], bound: int = 2, density: float = 1.0) -> Form:
    coeffs = {}
    for m in masks:
        if rng.random() < density:
            coeffs[m] = random_scalar(rng, bound)
    return Form._from_masks(coeffs)


def random_spinor(rng: np.random.Generator, bound: int = 2, density: float = 1.0) -> Spinor:
    while True:
        psi = Spinor.from_form(random_form(rng, EVEN_MASKS, bound, density))
        if not psi.is_zero:
            return psi


def random_two_form(rng: np.random.Generator, bound: int = 1) -> Form:
    return random_form(rng, PAIR_MASKS, bound)


def random_lie_element(rng: np.random.Generator, bound: int = 2, with_w: bool = True) -> LieElement:
    coords = [random_scalar(rng, bound) for _ in range(ROTATION_DIM - 1)]
    t = random_scalar(rng, bound) if with_w else ZERO
    s = random_scalar(rng, bound) if with_w else ZERO
    return LieElement.from_coordinates(coords + [t, s])


def random_gl_matrix(rng: np.random.Generator, bound: int = 1) -> Matrix:
    while True:
        rows = [[random_scalar(rng, bound) for _ in range(DIM_L)] for _ in range(DIM_L)]
        for i in range(DIM_L):
            rows[i][i] = rows[i][i] + ONE
        h = Matrix(rows, DIM_L)
        if rank(h) == DIM_L:
            return h


def random_generator(rng: np.random.Generator, bound: int = 1) -> GroupGenerator:
    kind = GENERATOR_KINDS[int(rng.integers(0, len(GENERATOR_KINDS)))]
    if kind == 'gl':
        return GroupGenerator('gl', random_gl_matrix(rng, bound))
    if kind == 'exp_plus':
        return GroupGenerator('exp_plus', random_two_form(rng, bound))
    if kind == 'exp_minus':
        return GroupGenerator('exp_minus', Polyvector._from_masks(
            {m: random_scalar(rng, bound) for m in PAIR_MASKS}))
    if kind == 'w_matrix':
        if rng.random() < 0.25:
            return GroupGenerator.w_reflection()
        # u = ±i 使 1+u² = 0，只取实有理参数
        u = Scalar(int(rng.integers(-3, 4)), 0) / Scalar(int(rng.integers(1, 4)))
        return GroupGenerator.w_rotation(u)
    return GroupGenerator('scalar', random_nonzero_scalar(rng, bound + 1))
