#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
外代数与十维手征旋量模型
在固定的五维空间 L 上实现 Λ•L^∨、旋量模型 S₊ = Λ^even L^∨、
V = L ⊕ L^∨ 的 Clifford 作用、γ 映射、零化子与纯旋量判定
"""

import logging
from contextlib import contextmanager
from contextvars import ContextVar
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from scalar_linalg import (
    HALF, ONE, ZERO, Matrix, Scalar, kernel_basis, inverse, rank, vectors_rank,
)
from twist_errors import DomainError, ParseError

logger = logging.getLogger(__name__)

DIM_L = 5
FULL_MASK = (1 << DIM_L) - 1

# 下标 j（1..5）对应第 j-1 位
BIT = {j: 1 << (j - 1) for j in range(1, DIM_L + 1)}


def mask_indices(mask: int) -> Tuple[int, ...]:
    return tuple(j for j in range(1, DIM_L + 1) if mask & BIT[j])


def mask_degree(mask: int) -> int:
    return bin(mask).count('1')


def mask_from_key(key: Union[str, int, Iterable[int]]) -> int:
    """单项式键 "", "23", "2345" 转换为位掩码"""
    if isinstance(key, int):
        if not 0 <= key <= FULL_MASK:
            raise ParseError(f"单项式掩码越界: {key}")
        return key
    if isinstance(key, str):
        digits = key
    else:
        digits = ''.join(str(j) for j in key)
    mask = 0
    previous = 0
    for ch in digits:
        if not ch.isdigit() or not 1 <= int(ch) <= DIM_L:
            raise ParseError(f"未知的单项式键: {key!r}")
        j = int(ch)
        if j <= previous:
            raise ParseError(f"单项式键必须严格递增: {key!r}")
        previous = j
        mask |= BIT[j]
    return mask


def key_from_mask(mask: int) -> str:
    return ''.join(str(j) for j in mask_indices(mask))


def _canonical_masks(degrees: Iterable[int]) -> List[int]:
    out = []
    for k in degrees:
        for subset in combinations(range(1, DIM_L + 1), k):
            out.append(mask_from_key(subset))
    return out


ALL_MASKS = _canonical_masks(range(DIM_L + 1))
EVEN_MASKS = _canonical_masks((0, 2, 4))
ODD_MASKS = _canonical_masks((1, 3, 5))
SPINOR_KEYS = [key_from_mask(m) for m in EVEN_MASKS]
_ORDER = {m: pos for pos, m in enumerate(ALL_MASKS)}


def _wedge_sign(s: int, t: int) -> int:
    if s & t:
        return 0
    inversions = 0
    for a in mask_indices(s):
        inversions += mask_degree(t & ((1 << (a - 1)) - 1))
    return -1 if inversions % 2 else 1


def _iota_sign(j: int, mask: int) -> int:
    return -1 if mask_degree(mask & (BIT[j] - 1)) % 2 else 1


def _contract_sign(s: int, t: int) -> int:
    """ι_{e_S}(e^∨_T) 的符号，最小下标在最外层"""
    if s & ~t:
        return 0
    sign = 1
    current = t
    for j in reversed(mask_indices(s)):
        sign *= _iota_sign(j, current)
        current ^= BIT[j]
    return sign


WEDGE_SIGN = [[_wedge_sign(s, t) for t in range(FULL_MASK + 1)] for s in range(FULL_MASK + 1)]
CONTRACT_SIGN = [[_contract_sign(s, t) for t in range(FULL_MASK + 1)] for s in range(FULL_MASK + 1)]


# ---------------------------------------------------------------------------
# 分次元素
# ---------------------------------------------------------------------------

class _Graded:
    """以子集为下标的稀疏分次元素，零系数不保存"""

    __slots__ = ('_coeffs',)
    _suffix = ''

    def __init__(self, coeffs: Optional[Dict] = None):
        clean: Dict[int, Scalar] = {}
        for key, value in (coeffs or {}).items():
            mask = mask_from_key(key)
            value = Scalar.coerce(value)
            if not value.is_zero:
                clean[mask] = clean.get(mask, ZERO) + value
                if clean[mask].is_zero:
                    del clean[mask]
        self._coeffs = clean

    @classmethod
    def _from_masks(cls, coeffs: Dict[int, Scalar]):
        obj = object.__new__(cls)
        obj._coeffs = {m: c for m, c in coeffs.items() if not c.is_zero}
        return obj

    @classmethod
    def monomial(cls, key, coeff=1):
        return cls({key: coeff})

    @classmethod
    def one(cls):
        return cls._from_masks({0: ONE})

    @classmethod
    def zero(cls):
        return cls._from_masks({})

    def items(self) -> Iterator[Tuple[int, Scalar]]:
        return iter(sorted(self._coeffs.items(), key=lambda kv: _ORDER[kv[0]]))

    def coefficient(self, key) -> Scalar:
        return self._coeffs.get(mask_from_key(key), ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def degrees(self) -> List[int]:
        return sorted({mask_degree(m) for m in self._coeffs})

    def homogeneous_degree(self) -> Optional[int]:
        degrees = self.degrees()
        if len(degrees) == 1:
            return degrees[0]
        return None

    def part(self, degree: int):
        return type(self)._from_masks({m: c for m, c in self._coeffs.items() if mask_degree(m) == degree})

    def even_part(self):
        return type(self)._from_masks({m: c for m, c in self._coeffs.items() if mask_degree(m) % 2 == 0})

    def odd_part(self):
        return type(self)._from_masks({m: c for m, c in self._coeffs.items() if mask_degree(m) % 2 == 1})

    def _combine(self, other, factor: Scalar):
        if not isinstance(other, _Graded) or type(other)._suffix != type(self)._suffix:
            return NotImplemented
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, ZERO) + factor * c
        return type(self)._from_masks(out)

    def __add__(self, other):
        return self._combine(other, ONE)

    def __sub__(self, other):
        return self._combine(other, -ONE)

    def __neg__(self):
        return type(self)._from_masks({m: -c for m, c in self._coeffs.items()})

    def scale(self, factor):
        factor = Scalar.coerce(factor)
        if factor.is_zero:
            return type(self).zero()
        return type(self)._from_masks({m: factor * c for m, c in self._coeffs.items()})

    def __mul__(self, factor):
        if isinstance(factor, _Graded):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, _Graded):
            return NotImplemented
        return type(self)._suffix == type(other)._suffix and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((type(self)._suffix, frozenset(self._coeffs.items())))

    def to_dict(self) -> Dict[str, str]:
        return {key_from_mask(m): str(c) for m, c in self.items()}

    def pretty(self) -> str:
        """单项式记号，例如 "1 + e23^ + e45^" """
        if not self._coeffs:
            return "0"
        terms = []
        for m, c in self.items():
            name = f"e{key_from_mask(m)}{self._suffix}" if m else ''
            text = c.pretty()
            if not name:
                terms.append(text)
            elif c == ONE:
                terms.append(name)
            elif c == -ONE:
                terms.append(f"-{name}")
            elif not c.re or not c.im:
                terms.append(f"{text}*{name}")
            else:
                terms.append(f"({text})*{name}")
        return ' + '.join(terms).replace('+ -', '- ')

    def __repr__(self):
        return f"{type(self).__name__}({self.pretty()})"


class Form(_Graded):
    """Λ•L^∨ 的元素，单项式 e^∨_S 记作 eS^"""
    _suffix = '^'


class Polyvector(_Graded):
    """Λ•L 的元素，单项式 e_S；与 Form 的配对逐次完全"""
    _suffix = ''

    def pair(self, form: Form) -> Scalar:
        total = ZERO
        for m, c in self._coeffs.items():
            other = form._coeffs.get(m)
            if other is not None:
                total = total + c * other
        return total


class Spinor(Form):
    """偶次形式：S₊ 的 16 个坐标"""

    def __init__(self, coeffs: Optional[Dict] = None):
        super().__init__(coeffs)
        if any(mask_degree(m) % 2 for m in self._coeffs):
            raise DomainError("旋量只能包含偶次单项式")

    @classmethod
    def from_form(cls, form: Form) -> 'Spinor':
        if any(mask_degree(m) % 2 for m in form._coeffs):
            raise DomainError("旋量只能包含偶次单项式")
        return cls._from_masks(dict(form._coeffs))

    @classmethod
    def from_vector(cls, values: Sequence) -> 'Spinor':
        if len(values) != len(EVEN_MASKS):
            raise DomainError("旋量坐标必须是 16 个")
        return cls._from_masks({m: Scalar.coerce(v) for m, v in zip(EVEN_MASKS, values)})

    @classmethod
    def basis(cls) -> List['Spinor']:
        return [cls._from_masks({m: ONE}) for m in EVEN_MASKS]

    def to_vector(self) -> List[Scalar]:
        return [self._coeffs.get(m, ZERO) for m in EVEN_MASKS]


def _as_spinor(form: Form) -> Spinor:
    if isinstance(form, Spinor):
        return form
    return Spinor.from_form(form)


def odd_vector(form: Form) -> List[Scalar]:
    return [form._coeffs.get(m, ZERO) for m in ODD_MASKS]


# ---------------------------------------------------------------------------
# V = L ⊕ L^∨
# ---------------------------------------------------------------------------

V_KEYS = [f"e{j}" for j in range(1, DIM_L + 1)] + [f"f{j}" for j in range(1, DIM_L + 1)]


class VectorV:
    """
    V 中的向量，坐标顺序 (e1..e5, f1..f5)

    前五个是 L 分量 l，后五个是 L^∨ 分量 λ（f = 对偶基）。
    """

    __slots__ = ('coords',)

    def __init__(self, coords: Sequence = None):
        coords = [ZERO] * 10 if coords is None else [Scalar.coerce(c) for c in coords]
        if len(coords) != 10:
            raise DomainError("V 中的向量必须有 10 个坐标")
        self.coords = tuple(coords)

    @classmethod
    def basis(cls, index: int) -> 'VectorV':
        coords = [ZERO] * 10
        coords[index] = ONE
        return cls(coords)

    @classmethod
    def e(cls, j: int) -> 'VectorV':
        return cls.basis(j - 1)

    @classmethod
    def f(cls, j: int) -> 'VectorV':
        return cls.basis(DIM_L + j - 1)

    @classmethod
    def from_parts(cls, l: Polyvector, lam: Form) -> 'VectorV':
        if any(mask_degree(m) != 1 for m in l._coeffs) or any(mask_degree(m) != 1 for m in lam._coeffs):
            raise DomainError("V 的分量必须是一次元素")
        return cls([l.coefficient(BIT[j]) for j in range(1, 6)] + [lam.coefficient(BIT[j]) for j in range(1, 6)])

    @property
    def l(self) -> Polyvector:
        return Polyvector._from_masks({BIT[j]: self.coords[j - 1] for j in range(1, 6)})

    @property
    def lam(self) -> Form:
        return Form._from_masks({BIT[j]: self.coords[DIM_L + j - 1] for j in range(1, 6)})

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coords)

    def pairing(self, other: 'VectorV') -> Scalar:
        """⟨l+λ, l'+λ'⟩ = λ(l') + λ'(l)"""
        return inner(self.coords, other.coords)

    def __add__(self, other):
        return VectorV([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return VectorV([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return VectorV([-a for a in self.coords])

    def scale(self, factor) -> 'VectorV':
        factor = Scalar.coerce(factor)
        return VectorV([factor * a for a in self.coords])

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, VectorV):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def to_dict(self) -> Dict[str, str]:
        return {k: str(c) for k, c in zip(V_KEYS, self.coords)}

    def pretty(self) -> str:
        terms = []
        for name, c in zip(V_KEYS, self.coords):
            if c.is_zero:
                continue
            if c == ONE:
                terms.append(name)
            elif c == -ONE:
                terms.append(f"-{name}")
            else:
                terms.append(f"({c.pretty()})*{name}")
        return ' + '.join(terms).replace('+ -', '- ') if terms else "0"

    def __repr__(self):
        return f"VectorV({self.pretty()})"


def inner(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    total = ZERO
    for a in range(DIM_L):
        x, y = u[a], v[DIM_L + a]
        if not x.is_zero and not y.is_zero:
            total = total + x * y
        x, y = u[DIM_L + a], v[a]
        if not x.is_zero and not y.is_zero:
            total = total + x * y
    return total


def gram_matrix() -> Matrix:
    rows = [[ONE if (i < DIM_L and j == i + DIM_L) or (i >= DIM_L and j == i - DIM_L) else ZERO
             for j in range(10)] for i in range(10)]
    return Matrix(rows, 10)


# ---------------------------------------------------------------------------
# 外积与缩并
# ---------------------------------------------------------------------------

def wedge(a: Form, b: Form) -> Form:
    out: Dict[int, Scalar] = {}
    for m1, c1 in a._coeffs.items():
        for m2, c2 in b._coeffs.items():
            sign = WEDGE_SIGN[m1][m2]
            if not sign:
                continue
            m = m1 | m2
            term = c1 * c2 if sign > 0 else -(c1 * c2)
            out[m] = out.get(m, ZERO) + term
    return Form._from_masks(out)


def contract(p: Polyvector, a: Form) -> Form:
    """
    多重向量对形式的缩并

    ι_{e_S} = ι_{e_{s1}} ∘ … ∘ ι_{e_{sk}}，s1 < … < sk，最小下标最后作用
    """
    out: Dict[int, Scalar] = {}
    for m1, c1 in p._coeffs.items():
        for m2, c2 in a._coeffs.items():
            sign = CONTRACT_SIGN[m1][m2]
            if not sign:
                continue
            m = m2 ^ m1
            term = c1 * c2 if sign > 0 else -(c1 * c2)
            out[m] = out.get(m, ZERO) + term
    return Form._from_masks(out)


def clifford_act(v: VectorV, f: Form) -> Form:
    """v·f = ι_l f + λ ∧ f，满足 v·(v·f) = λ(l) f"""
    return contract(v.l, f) + wedge(v.lam, f)


# ---------------------------------------------------------------------------
# Ω^{-1} 的符号约定
# ---------------------------------------------------------------------------

_OMEGA_SIGN: ContextVar[Optional[int]] = ContextVar('omega_sign', default=None)
_calibrated: Optional[int] = None


def _omega_inv_signed(a: Form, sign: int) -> Polyvector:
    degree = a.homogeneous_degree()
    if degree is None and not a.is_zero:
        raise DomainError("omega_inv 只接受齐次形式")
    out = {}
    for m, c in a._coeffs.items():
        complement = FULL_MASK ^ m
        s = sign * WEDGE_SIGN[m][complement]
        out[complement] = c if s > 0 else -c
    return Polyvector._from_masks(out)


def _gamma_sq_signed(psi: Form, sign: int) -> VectorV:
    psi0 = psi.coefficient(0)
    psi2 = psi.part(2)
    psi4 = psi.part(4)
    top = wedge(psi2, psi2).scale(-HALF)
    if not psi0.is_zero:
        top = top + psi4.scale(psi0)
    l_part = _omega_inv_signed(top.part(4), sign)
    lam_part = -contract(_omega_inv_signed(psi4, sign), psi2)
    return VectorV.from_parts(l_part, lam_part)


def calibrate_omega_sign() -> int:
    """
    选择 Ω^{-1} 的全局符号，使 γ(e^∨_{23}+e^∨_{45}) = e₁

    Returns:
        +1 或 -1
    """
    global _calibrated
    if _calibrated is None:
        sigma = Form({'23': 1, '45': 1})
        target = VectorV.e(1)
        for sign in (1, -1):
            if _gamma_sq_signed(sigma, sign) == target:
                _calibrated = sign
                break
        else:
            raise DomainError("两种符号约定都无法复现 γ(e23^+e45^) = e1")
        logger.debug(f"Ω^-1 符号校准结果: {_calibrated:+d}")
    return _calibrated


def omega_sign() -> int:
    sign = _OMEGA_SIGN.get()
    return calibrate_omega_sign() if sign is None else sign


@contextmanager
def use_omega_sign(sign: Optional[int]):
    """在代码块内切换 Ω^{-1} 的符号约定（None 表示校准值）"""
    if sign not in (None, 1, -1):
        raise DomainError(f"符号约定只能是 +1 或 -1: {sign}")
    token = _OMEGA_SIGN.set(sign)
    try:
        yield
    finally:
        _OMEGA_SIGN.reset(token)


def omega_inv(a: Form) -> Polyvector:
    """
    由顶形式 Ω = e^∨_{12345} 诱导的同构 Λ^k L^∨ → Λ^{5-k} L

    e^∨_S ↦ ε·sign(S, S^c)·e_{S^c}，ε 为当前符号约定
    """
    return _omega_inv_signed(a, omega_sign())


# ---------------------------------------------------------------------------
# γ 映射
# ---------------------------------------------------------------------------

def gamma_sq(psi: Form) -> VectorV:
    """
    γ(ψ,ψ) = Ω^{-1}(ψ⁰ψ⁴) − ½Ω^{-1}(ψ²∧ψ²) + ψ² ∨ Ω^{-1}(ψ⁴)

    前两项落在 L，最后一项落在 L^∨；∨ 为右缩并。
    """
    return _gamma_sq_signed(_as_spinor(psi), omega_sign())


def gamma(psi: Form, phi: Form) -> VectorV:
    """γ(ψ,φ) = ½(γ(ψ+φ) − γ(ψ) − γ(φ))，按极化展开后直接计算"""
    psi, phi = _as_spinor(psi), _as_spinor(phi)
    sign = omega_sign()
    psi2, phi2 = psi.part(2), phi.part(2)
    psi4, phi4 = psi.part(4), phi.part(4)
    top = wedge(psi2, phi2).scale(-HALF)
    top = top + (phi4.scale(psi.coefficient(0)) + psi4.scale(phi.coefficient(0))).scale(HALF)
    l_part = _omega_inv_signed(top.part(4), sign)
    lam_part = (contract(_omega_inv_signed(phi4, sign), psi2)
                + contract(_omega_inv_signed(psi4, sign), phi2)).scale(-HALF)
    return VectorV.from_parts(l_part, lam_part)


# ---------------------------------------------------------------------------
# 零化子与纯旋量
# ---------------------------------------------------------------------------

def clifford_matrix(psi: Form) -> Matrix:
    """16×10 矩阵，第 k 列是 V 的第 k 个基向量作用在 ψ 上的奇次坐标"""
    columns = [odd_vector(clifford_act(VectorV.basis(k), psi)) for k in range(10)]
    return Matrix.from_columns(columns, len(ODD_MASKS))


def annihilator(psi: Form) -> List[VectorV]:
    """Ann(ψ) = {v ∈ V | v·ψ = 0} 的一组基"""
    if psi.is_zero:
        raise DomainError("零旋量的零化子无定义")
    return [VectorV(v) for v in kernel_basis(clifford_matrix(psi))]


def is_pure(psi: Form) -> bool:
    """零化子为极大迷向（五维）时为纯旋量"""
    return len(annihilator(psi)) == DIM_L


def subspace_dim(vectors: Sequence[VectorV]) -> int:
    return vectors_rank([v.coords for v in vectors], 10)


def intersection_dim(first: Sequence[VectorV], second: Sequence[VectorV]) -> int:
    return subspace_dim(first) + subspace_dim(second) - subspace_dim(list(first) + list(second))


def intersection_basis(first: Sequence[VectorV], second: Sequence[VectorV]) -> List[VectorV]:
    """两子空间交的一组基（经由 [A | -B] 的核）"""
    columns = [v.coords for v in first] + [[-x for x in v.coords] for v in second]
    relations = kernel_basis(Matrix.from_columns(columns, 10))
    out = []
    for rel in relations:
        vec = VectorV()
        for coeff, v in zip(rel[:len(first)], first):
            if not coeff.is_zero:
                vec = vec + v.scale(coeff)
        out.append(vec)
    return _independent(out)


def pair_intersection_dim(psi1: Form, psi2: Form) -> int:
    """
    两个纯旋量零化子交的维数 r ∈ {1, 3, 5}
    """
    ann1, ann2 = annihilator(psi1), annihilator(psi2)
    if len(ann1) != DIM_L or len(ann2) != DIM_L:
        raise DomainError("pair_intersection_dim 要求两个纯旋量")
    return intersection_dim(ann1, ann2)


def is_isotropic(vectors: Sequence[VectorV]) -> bool:
    return all(u.pairing(v).is_zero for u in vectors for v in vectors)


def exp_pure(alpha: Form) -> Spinor:
    """1 + α + ½α∧α，α ∈ Λ²L^∨，给出一般位置的纯旋量"""
    if not alpha.is_zero and alpha.homogeneous_degree() != 2:
        raise DomainError("exp_pure 需要二次形式")
    return Spinor.from_form(Form.one() + alpha + wedge(alpha, alpha).scale(HALF))


# ---------------------------------------------------------------------------
# 对称作用
# ---------------------------------------------------------------------------

def gl_derivation(a: Sequence[Sequence[Scalar]], f: Form) -> Form:
    """A ∈ 𝔤𝔩(L) 的导子作用，f_i ↦ Σ_j A_ji f_j"""
    out: Dict[int, Scalar] = {}
    for mask, c in f._coeffs.items():
        for i in mask_indices(mask):
            pos_sign = _iota_sign(i, mask)
            rest = mask ^ BIT[i]
            for j in range(1, DIM_L + 1):
                entry = a[j - 1][i - 1]
                if entry.is_zero or rest & BIT[j]:
                    continue
                sign = pos_sign * WEDGE_SIGN[BIT[j]][rest]
                target = rest | BIT[j]
                term = entry * c
                out[target] = out.get(target, ZERO) + (term if sign > 0 else -term)
    return Form._from_masks(out)


def trace(a: Sequence[Sequence[Scalar]]) -> Scalar:
    total = ZERO
    for j in range(DIM_L):
        total = total + a[j][j]
    return total


def spin_act(x, f: Form) -> Form:
    """
    𝔰𝔬(V) 在 Λ•L^∨ 上的作用

    x 需提供 a (5×5)、xplus (二次 Form)、xminus (二次 Polyvector)；
    ρ(x)f = D_A f − ½tr(A) f + X₊∧f + X₋ ∨ f
    """
    result = gl_derivation(x.a, f)
    tr = trace(x.a)
    if not tr.is_zero:
        result = result - f.scale(tr * HALF)
    if not x.xplus.is_zero:
        result = result + wedge(x.xplus, f)
    if not x.xminus.is_zero:
        result = result + contract(x.xminus, f)
    return result


def exp_wedge(omega: Form, psi: Form) -> Form:
    """exp(X₊)ψ = ψ + ω∧ψ + ½ω∧ω∧ψ"""
    once = wedge(omega, psi)
    return psi + once + wedge(omega, once).scale(HALF)


def exp_contract(pi: Polyvector, psi: Form) -> Form:
    """exp(X₋)ψ = ψ + ι_πψ + ½ι_π²ψ"""
    once = contract(pi, psi)
    return psi + once + contract(pi, once).scale(HALF)


def pullback(h: Matrix, f: Form) -> Form:
    """
    GL(L) 的函子性拉回（不带行列式扭转，仅在射影意义下与自旋作用一致）

    Args:
        h: 5×5 可逆矩阵，f_i ↦ Σ_j h[i][j] f_j
        f: 任意形式
    """
    if h.nrows != DIM_L or h.ncols != DIM_L:
        raise DomainError("GL(L) 元素必须是 5×5 矩阵")
    if rank(h) != DIM_L:
        raise DomainError("GL(L) 元素奇异")
    images = {j: Form._from_masks({BIT[k]: h[j - 1, k - 1] for k in range(1, DIM_L + 1)})
              for j in range(1, DIM_L + 1)}
    out = Form.zero()
    for mask, c in f._coeffs.items():
        term = Form._from_masks({0: c})
        for j in mask_indices(mask):
            term = wedge(term, images[j])
        out = out + term
    return out


# ---------------------------------------------------------------------------
# 迷向子空间对齐
# ---------------------------------------------------------------------------

def _independent(vectors: Sequence[VectorV]) -> List[VectorV]:
    chosen: List[VectorV] = []
    for v in vectors:
        if subspace_dim(chosen + [v]) > len(chosen):
            chosen.append(v)
    return chosen


def _greedy_complement(base: List[VectorV], candidates: Sequence[VectorV], needed: int) -> List[VectorV]:
    chosen: List[VectorV] = []
    for v in candidates:
        if len(chosen) == needed:
            break
        if subspace_dim(base + chosen + [v]) > len(base) + len(chosen):
            chosen.append(v)
    if len(chosen) != needed:
        raise DomainError("无法补全子空间基")
    return chosen


def _dualize(first: List[VectorV], second: List[VectorV]) -> List[VectorV]:
    """把 second 换基，使 ⟨first_i, second_j⟩ = δ_ij"""
    n = len(first)
    if n == 0:
        return []
    pairing = Matrix([[u.pairing(v) for v in second] for u in first], n)
    try:
        correction = inverse(pairing)
    except DomainError as exc:
        raise DomainError("配对退化，子空间不处于一般位置") from exc
    out = []
    for j in range(n):
        vec = VectorV()
        for k in range(n):
            coeff = correction[k, j]
            if not coeff.is_zero:
                vec = vec + second[k].scale(coeff)
        out.append(vec)
    return out


def _hyperbolic_basis(first: Sequence[VectorV], second: Sequence[VectorV]) -> List[VectorV]:
    """
    一对极大迷向子空间的标准基 (u, k, a, b)

    u 张成交 K，k 张成与 K 对偶的迷向补，a 补全 first，b 补全 second，
    除 ⟨u_i,k_i⟩ = ⟨a_i,b_i⟩ = 1 外所有配对为零。
    """
    for sub in (first, second):
        if subspace_dim(sub) != DIM_L or not is_isotropic(sub):
            raise DomainError("输入必须是极大迷向子空间")
    first, second = list(first), list(second)
    u = intersection_basis(first, second)
    r = len(u)
    a = _greedy_complement(u, first, DIM_L - r)
    b = _dualize(a, _greedy_complement(u, second, DIM_L - r))
    # (A ⊕ B)^⊥ 包含 K，是 2r 维非退化子空间
    constraints = Matrix([list(v.coords[DIM_L:]) + list(v.coords[:DIM_L]) for v in a + b], 10) if a else None
    if constraints is None:
        perp = [VectorV.basis(k) for k in range(10)]
    else:
        perp = [VectorV(v) for v in kernel_basis(constraints)]
    c = _greedy_complement(u, perp, r)
    y = _dualize(u, c)
    k = []
    for j in range(r):
        vec = y[j]
        for i in range(r):
            coeff = y[i].pairing(y[j])
            if not coeff.is_zero:
                vec = vec - u[i].scale(coeff * HALF)
        k.append(vec)
    return u + k + a + b


def align_isotropic_pairs(l1: Sequence[VectorV], l2: Sequence[VectorV],
                          l1_target: Sequence[VectorV], l2_target: Sequence[VectorV]) -> Matrix:
    """
    构造正交变换 f: V → V，使 f(L1) = L1'，f(L2) = L2'

    Returns:
        10×10 矩阵，满足 fᵀ G f = G
    """
    if intersection_dim(l1, l2) != intersection_dim(l1_target, l2_target):
        raise DomainError("两对子空间的交维数不同，无法对齐")
    source = _hyperbolic_basis(l1, l2)
    target = _hyperbolic_basis(l1_target, l2_target)
    p = Matrix.from_columns([v.coords for v in source], 10)
    p_target = Matrix.from_columns([v.coords for v in target], 10)
    return p_target * inverse(p)


def apply_matrix(f: Matrix, v: VectorV) -> VectorV:
    return VectorV(f * list(v.coords))


def is_orthogonal(f: Matrix) -> bool:
    g = gram_matrix()
    return f.transpose() * g * f == g
