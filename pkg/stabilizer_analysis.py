#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
轨道维数与稳定子代数
在 47 维对称代数上做精确线性代数：射影轨道维数、直线稳定子、
向量稳定子的按次数分组条件，以及导出列与中心等结构探测
"""

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from exterior_spinor import EVEN_MASKS, mask_degree
from scalar_linalg import (
    ONE, ZERO, Scalar, SparseVector, independent_indices, linear_relations, row_space_basis,
    same_span, sparse_rank, vectors_rank,
)
from superalgebra import (
    COORDINATE_NAMES, LIE_DIM, ROTATION_DIM, LieElement, Supercharge, lie_act, lie_bracket,
)
from twist_errors import DomainError, ParseError

logger = logging.getLogger(__name__)

ROTATION_NAMES = COORDINATE_NAMES[:ROTATION_DIM]
_ROTATION_INDEX = {name: k for k, name in enumerate(ROTATION_NAMES)}
_XMINUS_SLOTS = [k for k, name in enumerate(COORDINATE_NAMES) if name.startswith('Xminus_')]
SUPERCHARGE_DIM = 32

# 超荷坐标的单项式次数：两列各 16 个
COORDINATE_DEGREES = [mask_degree(m) for m in EVEN_MASKS] * 2
GRID_DEGREES = ('0', '2', '4')

# 分类表所列的稳定子群，仅作注释，不参与断言
QUOTED_STABILIZERS = {
    'R1PureIso': 'SL(5) ⋉ N10 × C^×',
    'R1PureNonIso': 'SL(5) ⋉ N10',
    'R1Impure': 'Spin(7) ⋉ N8 × C^×',
    'R2Line': '(SL(2) × SL(3)) ⋉ N15 × C^×',
    'R2TwoPoints': 'SL(4) ⋉ N8',
    'R2Tangent': 'Sp(4) ⋉ N13 × C^×',
}


@dataclass
class StabilizerResult:
    """
    直线稳定子的计算结果

    Args:
        dim: 稳定子维数
        orbit_dim: 射影轨道维数，dim + orbit_dim = 47
        basis: 稳定子的一组基
        derived_series_dims: 导出列各项的维数
        center_dim: 中心维数
        degree_graded_conditions: 按单项式次数分组的向量稳定子方程
    """
    dim: int
    orbit_dim: int
    basis: List[LieElement]
    derived_series_dims: List[int] = field(default_factory=list)
    center_dim: Optional[int] = None
    degree_graded_conditions: Dict[str, List[str]] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            'dim': self.dim,
            'orbit_dim': self.orbit_dim,
            'derived_series': list(self.derived_series_dims),
            'center_dim': self.center_dim,
            'conditions_by_degree': {k: list(v) for k, v in self.degree_graded_conditions.items()},
        }


def _require_nonzero(q: Supercharge):
    if q.is_zero:
        raise DomainError("零超荷的轨道与稳定子无定义")


@lru_cache(maxsize=1)
def _generator_table() -> Tuple[Tuple[Tuple[Tuple[int, Scalar], ...], ...], ...]:
    """
    table[c][k]：第 k 个生成元作用在第 c 个单项式坐标上的稀疏像

    lie_act 对 Q 线性且与 Ω 符号无关，只需算一次
    """
    table = []
    for c in range(SUPERCHARGE_DIM):
        unit = [ZERO] * SUPERCHARGE_DIM
        unit[c] = ONE
        q = Supercharge.from_coordinates(unit)
        images = []
        for k in range(LIE_DIM):
            image = lie_act(LieElement.generator(k), q).coordinates()
            images.append(tuple((r, v) for r, v in enumerate(image) if not v.is_zero))
        table.append(tuple(images))
    logger.debug("生成元作用表已建立")
    return tuple(table)


def sparse_action_columns(q: Supercharge, count: int = LIE_DIM) -> List[SparseVector]:
    """前 count 个生成元作用在 Q 上的像，{坐标: 值} 字典"""
    table = _generator_table()
    columns: List[SparseVector] = [{} for _ in range(count)]
    for c, value in enumerate(q.coordinates()):
        if value.is_zero:
            continue
        for k in range(count):
            column = columns[k]
            for r, entry in table[c][k]:
                column[r] = column.get(r, ZERO) + value * entry
    return [{r: v for r, v in column.items() if not v.is_zero} for column in columns]


def projective_orbit_dim(q: Supercharge) -> int:
    """x ↦ lie_act(x, Q) mod span(Q) 的秩；s 的像即 Q 本身"""
    _require_nonzero(q)
    return sparse_rank(sparse_action_columns(q), limit=SUPERCHARGE_DIM) - 1


def stabilizer_basis(q: Supercharge) -> List[LieElement]:
    """
    所有把 Q 映入 span(Q) 的元素

    取 [Q, x_0·Q, …, x_46·Q] 的线性关系再去掉 Q 的系数；Q ≠ 0 时这一投影是单射
    """
    _require_nonzero(q)
    line = {k: v for k, v in enumerate(q.coordinates()) if not v.is_zero}
    relations = linear_relations([line] + sparse_action_columns(q))
    return [LieElement.from_coordinates(rel[1:]) for rel in relations]


def vector_stabilizer(q: Supercharge) -> List[LieElement]:
    """𝔰𝔬(V) ⊕ 𝔬(W) 中严格固定 Q 的元素"""
    relations = linear_relations(sparse_action_columns(q, ROTATION_DIM))
    return [LieElement.from_coordinates(list(v) + [ZERO]) for v in relations]


# ---------------------------------------------------------------------------
# 按次数分组的条件
# ---------------------------------------------------------------------------

def degree_condition_rows(q: Supercharge) -> Dict[str, List[List[Scalar]]]:
    """
    向量稳定子方程按单项式次数分组

    Returns:
        {"0": 行, "2": 行, "4": 行}，每行是 46 个非缩放坐标上的线性型
    """
    columns = sparse_action_columns(q, ROTATION_DIM)
    grouped: Dict[str, List[List[Scalar]]] = {d: [] for d in GRID_DEGREES}
    for r, degree in enumerate(COORDINATE_DEGREES):
        row = [column.get(r, ZERO) for column in columns]
        if any(not c.is_zero for c in row):
            grouped[str(degree)].append(row)
    return grouped


def render_linear_form(row: Sequence[Scalar], names: Sequence[str] = ROTATION_NAMES) -> str:
    """线性型渲染为 "A_11 + (1/2)*A_44 + -t = 0" 的形式"""
    terms = []
    for name, c in zip(names, row):
        if c.is_zero:
            continue
        if c == ONE:
            terms.append(name)
        elif c == -ONE:
            terms.append(f"-{name}")
        else:
            terms.append(f"({c.pretty()})*{name}")
    return f"{' + '.join(terms) if terms else '0'} = 0"


_TERM_RE = re.compile(r'^(?:\((?P<coeff>[^()]+)\)\*|(?P<neg>-))?(?P<name>[A-Za-z_][A-Za-z_0-9]*)$')


def parse_linear_form(text: str, names: Sequence[str] = ROTATION_NAMES) -> List[Scalar]:
    """render_linear_form 的逆运算"""
    index = {name: k for k, name in enumerate(names)}
    body = text.strip()
    if body.endswith('= 0'):
        body = body[:-3].strip()
    row = [ZERO] * len(names)
    if body == '0':
        return row
    for term in body.split(' + '):
        match = _TERM_RE.match(term.strip())
        if not match or match.group('name') not in index:
            raise ParseError(f"无法解析的线性项: {term!r}")
        if match.group('coeff'):
            coeff = Scalar.parse(match.group('coeff'))
        elif match.group('neg'):
            coeff = -ONE
        else:
            coeff = ONE
        slot = index[match.group('name')]
        row[slot] = row[slot] + coeff
    return row


def degree_conditions(q: Supercharge) -> Dict[str, List[str]]:
    """向量稳定子条件的文本形式，每个次数取约化行基"""
    out = {}
    for degree, rows in degree_condition_rows(q).items():
        out[degree] = [render_linear_form(r) for r in row_space_basis(rows, ROTATION_DIM)]
    return out


def _at_t_zero(rows: List[List[Scalar]]) -> List[List[Scalar]]:
    slot = _ROTATION_INDEX['t']
    return [row[:slot] + [ZERO] + row[slot + 1:] for row in rows]


def compare_condition_grids(q: Supercharge, expected: Dict) -> Dict[str, bool]:
    """
    与给定的方程表比较

    次数 d 的判定比较次数 ≤ d 的全部方程张成的空间，即模去低次方程后再比；
    total 比较整组方程的解空间。expected 带 t_slice 为真时，逐次数的比较
    放在 t = 0 的切片上，total 只比较解空间维数

    Returns:
        {"0": bool, "2": bool, "4": bool, "total": bool}
    """
    computed = degree_condition_rows(q)
    t_slice = bool(expected.get('t_slice', False))
    mine: List[List[Scalar]] = []
    theirs: List[List[Scalar]] = []
    verdict = {}
    for degree in GRID_DEGREES:
        mine.extend(computed[degree])
        theirs.extend(parse_linear_form(text) for text in expected.get(degree, []))
        if t_slice:
            verdict[degree] = same_span(_at_t_zero(mine), _at_t_zero(theirs), ROTATION_DIM)
        else:
            verdict[degree] = same_span(mine, theirs, ROTATION_DIM)
    if t_slice:
        verdict['total'] = vectors_rank(mine, ROTATION_DIM) == vectors_rank(theirs, ROTATION_DIM)
    else:
        verdict['total'] = verdict[GRID_DEGREES[-1]]
    return verdict


# ---------------------------------------------------------------------------
# 结构探测
# ---------------------------------------------------------------------------

def _span_basis(elements: Sequence[LieElement], limit: Optional[int] = None) -> List[LieElement]:
    """从 elements 中取出张成同一子空间的线性无关子集"""
    rows = [x.coordinates() for x in elements]
    return [elements[k] for k in independent_indices(rows, limit=limit if limit is not None else LIE_DIM)]


def derived_series(basis: Sequence[LieElement], max_steps: int = 8) -> List[int]:
    """
    导出列维数 [dim 𝔰, dim [𝔰,𝔰], …]

    到零或维数不再下降时停止；阿贝尔代数给出 [d, 0]。
    """
    current = _span_basis(basis)
    dims = [len(current)]
    for _ in range(max_steps):
        if not current:
            break
        brackets = [lie_bracket(current[i], current[j])
                    for i in range(len(current)) for j in range(i + 1, len(current))]
        # [𝔰, 𝔰] ⊂ 𝔰
        current = _span_basis([b for b in brackets if not b.is_zero], limit=len(current))
        dims.append(len(current))
        if len(current) in (0, dims[-2]):
            break
    return dims


def center_dim(basis: Sequence[LieElement]) -> int:
    """中心 = 伴随作用在 𝔰 上的核；第 i 个向量把所有 [b_i, b_j] 拼在一起"""
    basis = _span_basis(basis)
    n = len(basis)
    if not n:
        return 0
    stacked: List[SparseVector] = [{} for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for coord, value in enumerate(lie_bracket(basis[i], basis[j]).coordinates()):
                if value.is_zero:
                    continue
                stacked[i][j * LIE_DIM + coord] = value
                stacked[j][i * LIE_DIM + coord] = -value
    return n - sparse_rank(stacked, limit=n)


def xminus_ideal(basis: Sequence[LieElement]) -> Tuple[int, bool]:
    """
    稳定子与 Λ²L 方向的交 N，以及 N 是否为理想

    Λ²L 是固定的坐标方向，结果依赖代表元所在的框架

    Returns:
        (dim N, N 是否为理想)
    """
    basis = _span_basis(basis)
    if not basis:
        return 0, True
    others = [k for k in range(LIE_DIM) if k not in _XMINUS_SLOTS]
    restricted = []
    for x in basis:
        coords = x.coordinates()
        restricted.append({k: coords[k] for k in others if not coords[k].is_zero})
    n_part = []
    for combo in linear_relations(restricted):
        coords = [ZERO] * LIE_DIM
        for c, x in zip(combo, basis):
            if c.is_zero:
                continue
            coords = [a + c * b for a, b in zip(coords, x.coordinates())]
        n_part.append(LieElement.from_coordinates(coords))
    if not n_part:
        return 0, True
    span_rows = [x.coordinates() for x in n_part]
    base_rank = len(n_part)
    for x in basis:
        for n in n_part:
            bracket = lie_bracket(x, n).coordinates()
            if vectors_rank(span_rows + [bracket], LIE_DIM) != base_rank:
                return len(n_part), False
    return len(n_part), True


@lru_cache(maxsize=1)
def _trace_form() -> Dict[Tuple[int, int], Scalar]:
    """生成元在超荷表示上的迹型 tr(ρ(e_k)ρ(e_l))，只存非零项"""
    table = _generator_table()
    entries: List[Dict[Tuple[int, int], Scalar]] = [{} for _ in range(LIE_DIM)]
    for c in range(SUPERCHARGE_DIM):
        for k in range(LIE_DIM):
            for r, v in table[c][k]:
                entries[k][(r, c)] = v
    form = {}
    for k in range(LIE_DIM):
        for l in range(k, LIE_DIM):
            total = ZERO
            for (r, c), v in entries[k].items():
                w = entries[l].get((c, r))
                if w is not None:
                    total = total + v * w
            if not total.is_zero:
                form[(k, l)] = total
                form[(l, k)] = total
    return form


def trace_form_radical(basis: Sequence[LieElement]) -> List[LieElement]:
    """
    𝔰 中与整个 𝔰 迹型正交的元素

    迹型取超荷表示上的 tr(ρ(x)ρ(y))，在共轭下不变，所以根基是 𝔰 的理想，
    其维数不依赖于轨道中代表元的选取
    """
    basis = _span_basis(basis)
    if not basis:
        return []
    form = _trace_form()
    coords = [x.coordinates() for x in basis]
    gram: List[SparseVector] = []
    for x in coords:
        paired = {}
        for (k, l), v in form.items():
            if not x[k].is_zero:
                paired[l] = paired.get(l, ZERO) + x[k] * v
        row = {}
        for j, y in enumerate(coords):
            value = ZERO
            for l, p in paired.items():
                if not y[l].is_zero:
                    value = value + p * y[l]
            if not value.is_zero:
                row[j] = value
        gram.append(row)
    radical = []
    for combo in linear_relations(gram):
        total = [ZERO] * LIE_DIM
        for c, x in zip(combo, coords):
            if not c.is_zero:
                total = [a + c * b for a, b in zip(total, x)]
        radical.append(LieElement.from_coordinates(total))
    return radical


def structure_probe(result: StabilizerResult) -> Tuple[List[int], int, Dict[str, object]]:
    """
    导出列、中心与迹型根基

    三者都在共轭下不变，同一轨道的任一点给出相同结果

    Returns:
        (derived_series_dims, center_dim, nilpotency_report)
    """
    series = derived_series(result.basis)
    center = center_dim(result.basis)
    radical = trace_form_radical(result.basis)
    abelian = all(lie_bracket(x, y).is_zero for i, x in enumerate(radical) for y in radical[i + 1:])
    report = {'radical_dim': len(radical), 'radical_is_abelian': abelian}
    result.derived_series_dims = series
    result.center_dim = center
    return series, center, report


def stabilizer_subalgebra(q: Supercharge, with_structure: bool = True) -> StabilizerResult:
    """
    Q 所在直线的稳定子

    Args:
        q: 非零超荷
        with_structure: 是否同时计算导出列与中心
    """
    basis = stabilizer_basis(q)
    result = StabilizerResult(
        dim=len(basis),
        orbit_dim=LIE_DIM - len(basis),
        basis=basis,
        degree_graded_conditions=degree_conditions(q),
    )
    if with_structure:
        structure_probe(result)
    logger.debug(f"稳定子维数 {result.dim}，轨道维数 {result.orbit_dim}")
    return result


def quoted_stabilizer(label: str) -> Optional[str]:
    return QUOTED_STABILIZERS.get(label)
