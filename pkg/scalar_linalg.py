#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
高斯有理数域 ℚ(i) 上的精确算术与线性代数
提供标量、矩阵的秩与核、以及二元二次型公共零点的计数
"""

import logging
import re
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from twist_errors import DomainError, ParseError

logger = logging.getLogger(__name__)

_RATIONAL_RE = re.compile(r'^[+-]?\d+(?:/\d+)?$')


class Scalar:
    """
    高斯有理数 a/b + (c/d)i

    内部以 (a + b·i) / d 的整数三元组保存，d > 0 且 gcd(a, b, d) = 1，
    对外的实部、虚部为各自约分后的有理数。
    """

    __slots__ = ('_a', '_b', '_d')

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im:
                raise TypeError("Scalar 实部不能再带虚部参数")
            self._a, self._b, self._d = re._a, re._b, re._d
            return
        re = Fraction(re)
        im = Fraction(im)
        d = lcm(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def _set(self, a: int, b: int, d: int):
        if d < 0:
            a, b, d = -a, -b, -d
        if a == 0 and b == 0:
            d = 1
        else:
            g = gcd(a, b, d)
            if g != 1:
                a, b, d = a // g, b // g, d // g
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int = 1) -> 'Scalar':
        obj = object.__new__(cls)
        obj._set(a, b, d)
        return obj

    @classmethod
    def coerce(cls, value) -> 'Scalar':
        if isinstance(value, Scalar):
            return value
        if isinstance(value, int):
            return cls._raw(value, 0, 1)
        if isinstance(value, Fraction):
            return cls._raw(value.numerator, 0, value.denominator)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"无法转换为 Scalar: {value!r}")

    # ---- 基本属性 ----
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def __bool__(self):
        return not self.is_zero

    def inverse(self) -> 'Scalar':
        if self.is_zero:
            raise ZeroDivisionError("零元没有逆元")
        a, b, d = self._a, self._b, self._d
        return Scalar._raw(d * a, -d * b, a * a + b * b)

    # ---- 运算 ----
    def __add__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return Scalar._raw(self._a + o._a, self._b + o._b, self._d)
        return Scalar._raw(self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self._a, -self._b, self._d)

    def __sub__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return ZERO
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return Scalar._raw(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            o = Scalar.coerce(other)
        except (TypeError, ParseError):
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        # 实数与 int、Fraction 相等时哈希也须一致
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def sqrt(self) -> Optional['Scalar']:
        """
        精确平方根

        Returns:
            w 使 w*w == self；若平方根不在 ℚ(i) 中则返回 None
        """
        x, y = self.re, self.im
        if y == 0:
            if x >= 0:
                r = _rational_sqrt(x)
                return None if r is None else Scalar(r)
            r = _rational_sqrt(-x)
            return None if r is None else Scalar(0, r)
        norm = _rational_sqrt(x * x + y * y)
        if norm is None:
            return None
        u = _rational_sqrt((x + norm) / 2)
        if u is None or u == 0:
            return None
        return Scalar(u, y / (2 * u))

    # ---- 文本格式 ----
    def __str__(self):
        if self.is_zero:
            return "0"
        re_part, im_part = self.re, self.im
        re_text = f"{re_part.numerator}/{re_part.denominator}"
        im_text = f"{im_part.numerator}/{im_part.denominator}*i"
        if im_part == 0:
            return re_text
        if re_part == 0:
            return im_text
        return f"{re_text}+{im_text}"

    def __repr__(self):
        return f"Scalar('{self}')"

    def pretty(self) -> str:
        """人类可读格式：1、-1/2、i、2*i、1-i"""
        def rat(q: Fraction) -> str:
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

        re_part, im_part = self.re, self.im
        if im_part == 0:
            return rat(re_part)
        if abs(im_part) == 1:
            im_text = "i" if im_part > 0 else "-i"
        else:
            im_text = f"{rat(im_part)}*i"
        if re_part == 0:
            return im_text
        if im_text.startswith('-'):
            return f"{rat(re_part)}{im_text}"
        return f"{rat(re_part)}+{im_text}"

    @classmethod
    def parse(cls, text: str) -> 'Scalar':
        """
        解析标量文本

        Args:
            text: "p/q"、"p/q+r/s*i"、"r/s*i" 或 "0"；也接受整数简写与 "i"

        Returns:
            对应的 Scalar
        """
        if not isinstance(text, str):
            raise ParseError(f"标量必须是字符串: {text!r}")
        body = text.strip().replace(' ', '')
        if not body:
            raise ParseError("空的标量文本")
        try:
            if not body.endswith('i'):
                return cls(_parse_rational(body))
            body = body[:-1]
            if body.endswith('*'):
                body = body[:-1]
            split = None
            for pos in range(1, len(body)):
                if body[pos] in '+-' and body[pos - 1].isdigit():
                    split = pos
                    break
            if split is None:
                re_text, im_text = '', body
            else:
                re_text, im_text = body[:split], body[split:]
            if im_text.startswith('+') and len(im_text) > 1 and im_text[1] in '+-':
                im_text = im_text[1:]
            if im_text in ('', '+'):
                im_value = Fraction(1)
            elif im_text == '-':
                im_value = Fraction(-1)
            else:
                im_value = _parse_rational(im_text)
            re_value = _parse_rational(re_text) if re_text else Fraction(0)
            return cls(re_value, im_value)
        except ZeroDivisionError as exc:
            raise ParseError(f"标量分母为零: {text!r}") from exc

    def to_sympy(self):
        re_part, im_part = self.re, self.im
        return sympy.Rational(re_part.numerator, re_part.denominator) + \
            sympy.I * sympy.Rational(im_part.numerator, im_part.denominator)

    @classmethod
    def from_sympy(cls, value) -> 'Scalar':
        re_part, im_part = sympy.sympify(value).as_real_imag()
        re_part, im_part = sympy.Rational(re_part), sympy.Rational(im_part)
        return cls(Fraction(int(re_part.p), int(re_part.q)), Fraction(int(im_part.p), int(im_part.q)))


def _parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"无法解析的有理数: {text!r}")
    return Fraction(text)


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


ZERO = Scalar._raw(0, 0, 1)
ONE = Scalar._raw(1, 0, 1)
I = Scalar._raw(0, 1, 1)
HALF = Scalar._raw(1, 0, 2)


def scalars(values: Iterable) -> List[Scalar]:
    return [Scalar.coerce(v) for v in values]


# ---------------------------------------------------------------------------
# 矩阵
# ---------------------------------------------------------------------------

class Matrix:
    """ℚ(i) 上的不可变矩阵"""

    __slots__ = ('rows', 'nrows', 'ncols')

    def __init__(self, rows: Sequence[Sequence], ncols: Optional[int] = None):
        self.rows = tuple(tuple(Scalar.coerce(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            if not self.rows:
                raise DomainError("空矩阵必须显式给出列数")
            ncols = len(self.rows[0])
        if any(len(row) != ncols for row in self.rows):
            raise DomainError("矩阵各行长度不一致")
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> 'Matrix':
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> 'Matrix':
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> 'Matrix':
        cols = [list(c) for c in columns]
        return cls([[col[i] for col in cols] for i in range(nrows)], len(cols))

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> List[Scalar]:
        return [row[j] for row in self.rows]

    def columns(self) -> List[List[Scalar]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> 'Matrix':
        return Matrix([self.column(j) for j in range(self.ncols)], self.nrows)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DomainError("矩阵维数不匹配")
            cols = other.columns()
            return Matrix([[_dot(row, col) for col in cols] for row in self.rows], other.ncols)
        vec = list(other)
        if len(vec) != self.ncols:
            raise DomainError("矩阵与向量维数不匹配")
        return [_dot(row, vec) for row in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.nrows == other.nrows and self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = '; '.join(', '.join(x.pretty() for x in row) for row in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def rank(self) -> int:
        return rank(self)

    def kernel_basis(self) -> List[List[Scalar]]:
        return kernel_basis(self)

    def inverse(self) -> 'Matrix':
        return inverse(self)


def _dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    total = ZERO
    for x, y in zip(u, v):
        if x.is_zero or y.is_zero:
            continue
        total = total + x * y
    return total


# ---- 无分数消元：全部运算在高斯整数 (re, im) 上进行 ----

def _primitive(row: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    g = 0
    for a, b in row:
        if a:
            g = gcd(g, a)
        if b:
            g = gcd(g, b)
        if g == 1:
            return row
    if g in (0, 1):
        return row
    return [(a // g, b // g) for a, b in row]


def _gaussian_rows(rows: Iterable[Sequence[Scalar]]) -> List[List[Tuple[int, int]]]:
    out = []
    for row in rows:
        if all(x.is_zero for x in row):
            continue
        d = 1
        for x in row:
            if x._d != 1:
                d = lcm(d, x._d)
        out.append(_primitive([(x._a * (d // x._d), x._b * (d // x._d)) for x in row]))
    return out


def _gauss_jordan(rows: List[List[Tuple[int, int]]], ncols: int):
    """
    无分数 Gauss-Jordan 消元，每步按整数容量归一化以抑制系数增长

    Returns:
        (约化后的非零行, 主元列列表)；每个主元列只在其主元行上非零
    """
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    n = len(rows)
    for c in range(ncols):
        if r == n:
            break
        piv = None
        for i in range(r, n):
            if rows[i][c] != (0, 0):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pa, pb = prow[c]
        for i in range(n):
            if i == r:
                continue
            xa, xb = rows[i][c]
            if xa == 0 and xb == 0:
                continue
            new = []
            for (ua, ub), (va, vb) in zip(rows[i], prow):
                new.append((pa * ua - pb * ub - xa * va + xb * vb,
                            pa * ub + pb * ua - xa * vb - xb * va))
            rows[i] = _primitive(new)
        pivots.append(c)
        r += 1
    return rows[:r], pivots


# ---- 稀疏阶梯化：行是 {列: 高斯整数} 字典，只消主元以下，秩到上限即停 ----

SparseVector = Dict[int, Scalar]
_SparseRow = Dict[int, Tuple[int, int]]


def _sparse_gaussian(vector) -> _SparseRow:
    """稀疏字典或稠密序列清分母后的高斯整数行"""
    items = vector.items() if isinstance(vector, dict) else enumerate(vector)
    entries = [(k, Scalar.coerce(x)) for k, x in items]
    entries = [(k, x) for k, x in entries if not x.is_zero]
    d = 1
    for _, x in entries:
        if x._d != 1:
            d = lcm(d, x._d)
    return {k: (x._a * (d // x._d), x._b * (d // x._d)) for k, x in entries}


def _combine(u: _SparseRow, p: Tuple[int, int], v: _SparseRow, x: Tuple[int, int]) -> _SparseRow:
    """p·u − x·v"""
    pa, pb = p
    xa, xb = x
    out = {k: (pa * ua - pb * ub, pa * ub + pb * ua) for k, (ua, ub) in u.items()}
    for k, (va, vb) in v.items():
        oa, ob = out.get(k, (0, 0))
        na = oa - (xa * va - xb * vb)
        nb = ob - (xa * vb + xb * va)
        if na or nb:
            out[k] = (na, nb)
        else:
            out.pop(k, None)
    return out


def _content(*rows: _SparseRow) -> int:
    g = 0
    for row in rows:
        for a, b in row.values():
            g = gcd(g, a, b)
            if g == 1:
                return 1
    return g


def _sparse_reduce(row: _SparseRow, combo: Optional[_SparseRow], pivots: Dict[int, Tuple[_SparseRow, Optional[_SparseRow]]]):
    """
    用已有主元行约化 row

    主元行只在其主元列及之后非零，因此按主元列升序消一遍即可；
    combo 同步记录 row 是原向量的哪个组合
    """
    for col in sorted(pivots):
        x = row.get(col)
        if x is None:
            continue
        prow, pcombo = pivots[col]
        p = prow[col]
        row = _combine(row, p, prow, x)
        if combo is not None:
            combo = _combine(combo, p, pcombo, x)
        g = _content(row, combo or {})
        if g > 1:
            row = {k: (a // g, b // g) for k, (a, b) in row.items()}
            if combo is not None:
                combo = {k: (a // g, b // g) for k, (a, b) in combo.items()}
    return row, combo


def sparse_rank(vectors: Iterable, limit: Optional[int] = None) -> int:
    """
    向量组的秩（稀疏字典或稠密序列均可）

    Args:
        vectors: 向量组
        limit: 秩的已知上界，达到后不再处理剩余向量
    """
    pivots: Dict[int, Tuple[_SparseRow, None]] = {}
    for vector in vectors:
        if limit is not None and len(pivots) >= limit:
            break
        row, _ = _sparse_reduce(_sparse_gaussian(vector), None, pivots)
        if row:
            pivots[min(row)] = (row, None)
    return len(pivots)


def independent_indices(vectors: Sequence, limit: Optional[int] = None) -> List[int]:
    """贪心选出线性无关的向量下标，个数到 limit 即停"""
    pivots: Dict[int, Tuple[_SparseRow, None]] = {}
    chosen = []
    for k, vector in enumerate(vectors):
        if limit is not None and len(chosen) >= limit:
            break
        row, _ = _sparse_reduce(_sparse_gaussian(vector), None, pivots)
        if row:
            pivots[min(row)] = (row, None)
            chosen.append(k)
    return chosen


def linear_relations(vectors: Sequence) -> List[List[Scalar]]:
    """
    向量组的全部线性关系

    Returns:
        系数向量 c 的一组基，Σ c_k·v_k = 0；每个关系中下标最大的非零系数为 1
    """
    n = len(vectors)
    pivots: Dict[int, Tuple[_SparseRow, _SparseRow]] = {}
    relations = []
    for k, vector in enumerate(vectors):
        row, combo = _sparse_reduce(_sparse_gaussian(vector), {k: (1, 0)}, pivots)
        if row:
            pivots[min(row)] = (row, combo)
            continue
        lead = Scalar._raw(*combo[k])
        relation = [ZERO] * n
        for j, value in combo.items():
            relation[j] = Scalar._raw(*value) / lead
        relations.append(relation)
    return relations


def rank(matrix: Matrix) -> int:
    """精确秩"""
    return sparse_rank(matrix.rows, limit=min(matrix.nrows, matrix.ncols))


def kernel_basis(matrix: Matrix) -> List[List[Scalar]]:
    """
    零空间基

    Returns:
        线性无关向量列表，个数为 cols - rank，每个满足 M·v = 0
    """
    reduced, pivots = _gauss_jordan(_gaussian_rows(matrix.rows), matrix.ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * matrix.ncols
        vec[free] = ONE
        for row, pc in zip(reduced, pivots):
            fa, fb = row[free]
            if fa == 0 and fb == 0:
                continue
            pa, pb = row[pc]
            vec[pc] = -(Scalar._raw(fa, fb) / Scalar._raw(pa, pb))
        basis.append(vec)
    return basis


def row_space_basis(rows: Sequence[Sequence[Scalar]], ncols: int) -> List[List[Scalar]]:
    """行空间的约化基（主元归一为 1）"""
    reduced, pivots = _gauss_jordan(_gaussian_rows(rows), ncols)
    basis = []
    for row, pc in zip(reduced, pivots):
        pivot = Scalar._raw(*row[pc])
        basis.append([Scalar._raw(a, b) / pivot for a, b in row])
    return basis


def column_space_basis(matrix: Matrix) -> List[List[Scalar]]:
    """列空间基：取原矩阵主元所在的列"""
    _, pivots = _gauss_jordan(_gaussian_rows(matrix.rows), matrix.ncols)
    return [matrix.column(j) for j in pivots]


def vectors_rank(vectors: Sequence[Sequence[Scalar]], length: int) -> int:
    return sparse_rank(vectors, limit=length)


def same_span(first: Sequence[Sequence[Scalar]], second: Sequence[Sequence[Scalar]], length: int) -> bool:
    """两组向量张成的子空间是否相同"""
    r1 = vectors_rank(first, length)
    r2 = vectors_rank(second, length)
    return r1 == r2 == vectors_rank(list(first) + list(second), length)


def inverse(matrix: Matrix) -> Matrix:
    if matrix.nrows != matrix.ncols:
        raise DomainError("只有方阵可以求逆")
    n = matrix.nrows
    augmented = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(matrix.rows)]
    reduced, pivots = _gauss_jordan(_gaussian_rows(augmented), 2 * n)
    if pivots[:n] != list(range(n)) or len(reduced) < n:
        raise DomainError("矩阵奇异，不可逆")
    result = []
    for i in range(n):
        pivot = Scalar._raw(*reduced[i][i])
        result.append([Scalar._raw(a, b) / pivot for a, b in reduced[i][n:]])
    return Matrix(result, n)


def solve_coordinates(basis: Sequence[Sequence[Scalar]], vector: Sequence[Scalar]) -> Optional[List[Scalar]]:
    """把 vector 写成 basis 的线性组合，不在张成空间内时返回 None"""
    k = len(basis)
    length = len(vector)
    system = Matrix.from_columns(list(basis) + [[-x for x in vector]], length)
    for sol in kernel_basis(system):
        last = sol[k]
        if not last.is_zero:
            return [x / last for x in sol[:k]]
    return None


# ---------------------------------------------------------------------------
# 二元二次型
# ---------------------------------------------------------------------------

class ProjectiveZeros(Enum):
    """二元二次型族在 P¹ 上公共零点的形态"""
    ALL_OF_P1 = 'AllOfP1'
    TWO_POINTS = 'TwoPoints'
    ONE_POINT = 'OnePoint'
    EMPTY = 'Empty'


class BinaryQuadratic:
    """c20·a² + c11·ab + c02·b²"""

    __slots__ = ('c20', 'c11', 'c02')

    def __init__(self, c20=0, c11=0, c02=0):
        self.c20 = Scalar.coerce(c20)
        self.c11 = Scalar.coerce(c11)
        self.c02 = Scalar.coerce(c02)

    @property
    def is_zero(self) -> bool:
        return self.c20.is_zero and self.c11.is_zero and self.c02.is_zero

    def coefficients(self) -> List[Scalar]:
        return [self.c20, self.c11, self.c02]

    def discriminant(self) -> Scalar:
        return self.c11 * self.c11 - 4 * self.c20 * self.c02

    def evaluate(self, a, b) -> Scalar:
        a, b = Scalar.coerce(a), Scalar.coerce(b)
        return self.c20 * a * a + self.c11 * a * b + self.c02 * b * b

    def b_valuation(self) -> int:
        """可提出的 b 的幂次（仅对非零型有意义）"""
        if not self.c20.is_zero:
            return 0
        if not self.c11.is_zero:
            return 1
        return 2

    def dehomogenized(self, symbol):
        """f(a, 1)：b 的因子在去齐次化后自动消失"""
        expr = self.c20.to_sympy() * symbol ** 2 + self.c11.to_sympy() * symbol + self.c02.to_sympy()
        return sympy.Poly(expr, symbol, domain=sympy.QQ_I)

    def __eq__(self, other):
        if not isinstance(other, BinaryQuadratic):
            return NotImplemented
        return self.coefficients() == other.coefficients()

    def __repr__(self):
        return f"BinaryQuadratic({self.c20.pretty()}, {self.c11.pretty()}, {self.c02.pretty()})"


_A = sympy.Symbol('a')


def _reduced_family(forms: Sequence[BinaryQuadratic]) -> List[BinaryQuadratic]:
    basis = row_space_basis([f.coefficients() for f in forms], 3)
    return [BinaryQuadratic(*row) for row in basis]


def _homogeneous_gcd(forms: Sequence[BinaryQuadratic]):
    """
    非零二次型的齐次最大公因式

    Returns:
        (b 的公共幂次 m, 去齐次化后 a 的一元 gcd 多项式 G)；齐次 gcd = b^m · G 的齐次化
    """
    m = min(f.b_valuation() for f in forms)
    polys = [f.dehomogenized(_A) for f in forms]
    g = reduce(lambda p, q: p.gcd(q), polys)
    return m, g


def common_projective_zeros(forms: Sequence[BinaryQuadratic]) -> ProjectiveZeros:
    """
    二元二次型族在 P¹ 上的公共零点形态

    全为零型 → AllOfP1；否则由非零型的齐次 gcd 的次数与判别式决定。
    """
    if not forms:
        raise DomainError("二次型列表为空，公共零点形态无定义")
    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        return ProjectiveZeros.ALL_OF_P1
    family = _reduced_family(nonzero)
    if len(family) == 3:
        return ProjectiveZeros.EMPTY
    m, g = _homogeneous_gcd(family)
    degree = m + g.degree()
    if degree == 0:
        return ProjectiveZeros.EMPTY
    if degree == 1:
        return ProjectiveZeros.ONE_POINT
    if m == 2:
        return ProjectiveZeros.ONE_POINT
    if m == 1:
        return ProjectiveZeros.TWO_POINTS
    c2, c1, c0 = (Scalar.from_sympy(c) for c in g.all_coeffs())
    if (c1 * c1 - 4 * c2 * c0).is_zero:
        return ProjectiveZeros.ONE_POINT
    return ProjectiveZeros.TWO_POINTS


def common_projective_roots(forms: Sequence[BinaryQuadratic]) -> Optional[List[Tuple[Scalar, Scalar]]]:
    """
    公共零点的显式坐标 (a, b)

    Returns:
        各个不同零点的代表；零点全体为 P¹ 或某零点不在 ℚ(i) 上时返回 None
    """
    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        return None
    family = _reduced_family(nonzero)
    if len(family) == 3:
        return []
    m, g = _homogeneous_gcd(family)
    roots = []
    if m > 0:
        roots.append((ONE, ZERO))
    coeffs = [Scalar.from_sympy(c) for c in g.all_coeffs()]
    if len(coeffs) == 2:
        roots.append((-coeffs[1] / coeffs[0], ONE))
    elif len(coeffs) == 3:
        c2, c1, c0 = coeffs
        disc = c1 * c1 - 4 * c2 * c0
        root = disc.sqrt()
        if root is None:
            return None
        for candidate in ((-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)):
            if (candidate, ONE) not in roots:
                roots.append((candidate, ONE))
    return roots
