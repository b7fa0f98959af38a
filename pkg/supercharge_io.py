#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
超荷数据导入导出工具
旋量、V 向量、超荷、线性族与报告的 JSON 编解码，以及样例文件与汇总表的读写
"""

import json
import logging
import os
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import pandas as pd

from exterior_spinor import SPINOR_KEYS, V_KEYS, Spinor, VectorV, mask_from_key
from orbit_classifier import InvariantReport, OrbitLabel, Pencil
from scalar_linalg import Scalar
from superalgebra import Supercharge
from twist_errors import ParseError

logger = logging.getLogger(__name__)

DEFAULT_FIXTURES_DIR = Path(__file__).resolve().parent / 'fixtures'

_ODD_OR_UNKNOWN = "旋量只接受偶次单项式键 " + ', '.join(repr(k) for k in SPINOR_KEYS)


# ---------------------------------------------------------------------------
# 编解码
# ---------------------------------------------------------------------------

def parse_scalar(value) -> Scalar:
    if not isinstance(value, str):
        raise ParseError(f"标量必须写成字符串: {value!r}")
    return Scalar.parse(value)


def spinor_to_json(psi: Spinor) -> Dict[str, str]:
    """只写出非零系数，键按规范顺序排列"""
    return psi.to_dict()


def spinor_from_json(data) -> Spinor:
    if not isinstance(data, dict):
        raise ParseError(f"旋量必须是 JSON 对象: {data!r}")
    coeffs = {}
    for key, value in data.items():
        if key not in SPINOR_KEYS:
            raise ParseError(f"未知的单项式键 {key!r}；{_ODD_OR_UNKNOWN}")
        coeffs[mask_from_key(key)] = parse_scalar(value)
    return Spinor(coeffs)


def vector_to_json(v: VectorV) -> Dict[str, str]:
    return v.to_dict()


def vector_from_json(data) -> VectorV:
    if not isinstance(data, dict):
        raise ParseError(f"V 向量必须是 JSON 对象: {data!r}")
    unknown = set(data) - set(V_KEYS)
    if unknown:
        raise ParseError(f"未知的 V 坐标: {sorted(unknown)}")
    return VectorV([parse_scalar(data.get(k, "0")) for k in V_KEYS])


def supercharge_to_json(q: Supercharge) -> Dict:
    return {'columns': [spinor_to_json(c) for c in q.columns]}


def supercharge_from_json(data) -> Supercharge:
    if not isinstance(data, dict) or 'columns' not in data:
        raise ParseError("超荷 JSON 必须包含 columns 字段")
    columns = data['columns']
    if not isinstance(columns, list) or len(columns) != 2:
        raise ParseError("columns 必须是两个旋量组成的列表")
    return Supercharge(spinor_from_json(columns[0]), spinor_from_json(columns[1]))


def pencil_from_json(data) -> Pencil:
    if not isinstance(data, dict) or 'base' not in data or 'direction' not in data:
        raise ParseError("线性族 JSON 必须包含 base 与 direction 字段")
    return Pencil(supercharge_from_json(data['base']), supercharge_from_json(data['direction']))


def report_to_json(report: InvariantReport) -> Dict:
    return report.to_dict()


def dumps(data) -> str:
    return json.dumps(data, ensure_ascii=False, sort_keys=False)


# ---------------------------------------------------------------------------
# 文件读写
# ---------------------------------------------------------------------------

class SuperchargeIO:
    """样例文件与报告的读写工具类"""

    def __init__(self, fixtures_dir: Optional[str] = None):
        """
        初始化读写工具

        Args:
            fixtures_dir: 样例目录，为 None 时使用仓库自带的 fixtures/
        """
        self.fixtures_dir = Path(fixtures_dir) if fixtures_dir else DEFAULT_FIXTURES_DIR

    @staticmethod
    def read_json(path) -> object:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except FileNotFoundError as exc:
            raise ParseError(f"文件不存在: {path}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"JSON 格式错误 {path}: {exc}") from exc

    @staticmethod
    def write_json(path, data) -> str:
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2, ensure_ascii=False)
        logger.info(f"已写出: {path}")
        return str(path)

    def load_supercharge(self, path) -> Supercharge:
        return supercharge_from_json(self.read_json(path))

    def save_supercharge(self, path, q: Supercharge) -> str:
        return self.write_json(path, supercharge_to_json(q))

    def load_pencil(self, path) -> Pencil:
        return pencil_from_json(self.read_json(path))

    def load_manifest(self) -> List[Dict]:
        """
        读取验证清单 table.json

        Returns:
            每行包含 label、file 及期望不变量
        """
        data = self.read_json(self.fixtures_dir / 'table.json')
        rows = data.get('rows') if isinstance(data, dict) else None
        if not isinstance(rows, list):
            raise ParseError("table.json 必须包含 rows 列表")
        logger.info(f"载入验证清单: {len(rows)} 行")
        return rows

    def load_representative(self, row: Dict) -> Supercharge:
        return self.load_supercharge(self.fixtures_dir / row['file'])

    def load_condition_grids(self) -> Dict[str, Dict]:
        """按轨道名读取条件表；下划线开头的键是说明文字"""
        data = self.read_json(self.fixtures_dir / 'stabilizer_grids.json')
        if not isinstance(data, dict):
            raise ParseError("stabilizer_grids.json 必须是对象")
        return {name: grid for name, grid in data.items() if not name.startswith('_')}

    @staticmethod
    def reports_frame(rows: Sequence[Dict]) -> pd.DataFrame:
        """把若干报告或验证行汇总为表格"""
        return pd.DataFrame(list(rows))

    @staticmethod
    def export_table(frame: pd.DataFrame, path) -> str:
        """按扩展名导出 CSV 或 JSON 表格"""
        suffix = os.path.splitext(str(path))[1].lower()
        if suffix == '.csv':
            frame.to_csv(path, index=False, encoding='utf-8')
        else:
            frame.to_json(path, orient='records', force_ascii=False, indent=2)
        logger.info(f"表格已导出: {path}")
        return str(path)


def parse_label(text: str) -> OrbitLabel:
    return OrbitLabel.parse(text)
