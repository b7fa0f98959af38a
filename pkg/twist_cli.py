#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
超荷分类系统 - 命令行界面
分类、分类表验证、理想导出、轨道抽样与闭包扫描，适合脚本与持续集成
"""

import argparse
import json
import logging
import sys
from contextlib import nullcontext
from typing import Dict, List, Optional, Sequence

import numpy as np

from exterior_spinor import use_omega_sign
from orbit_classifier import (
    OrbitLabel, annotation, classify, closure_scan, emit_ideal,
    render_polynomial, sample_orbit,
)
from scalar_linalg import Scalar
from stabilizer_analysis import compare_condition_grids
from superalgebra import LIE_DIM
from supercharge_io import (
    SuperchargeIO, dumps, parse_label, report_to_json, supercharge_to_json, vector_to_json,
)
from twist_config import FORMATS, RunConfig, load_defaults
from twist_errors import (
    ClassificationError, DomainError, NotSquareZeroError, ParseError, TwistError,
)

# 配置日志
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_DOMAIN_ERROR = 3

GRID_LABELS = {'0': 'deg0', '2': 'deg2', '4': 'deg4', 'total': '解空间'}


class TwistCLI:
    """超荷分类命令行界面"""

    def __init__(self, config: RunConfig, stdout=None, stderr=None):
        self.config = config
        self.io = SuperchargeIO(config.fixtures_dir)
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self._lines: List[str] = []

    # ---- 输出 ----
    def emit(self, text: str):
        self._lines.append(text)

    def flush(self):
        body = '\n'.join(self._lines) + ('\n' if self._lines else '')
        self._lines = []
        if self.config.output:
            with open(self.config.output, 'w', encoding='utf-8') as f:
                f.write(body)
            logger.info(f"输出已写入: {self.config.output}")
        else:
            self.stdout.write(body)

    def error(self, message: str):
        self.stderr.write(f"❌ {message}\n")

    @property
    def text_mode(self) -> bool:
        return self.config.format == 'text'

    # ---- classify ----
    def classify_file(self, path: str) -> int:
        """对单个超荷文件分类"""
        q = self.io.load_supercharge(path)
        try:
            report = classify(q)
        except NotSquareZeroError as exc:
            self.error(f"超荷不是平方零的: {exc}")
            if not self.text_mode:
                self.emit(dumps({'error': 'not_square_zero', 'bracket': vector_to_json(exc.bracket)}))
            else:
                self.emit(f"[Q,Q] = {exc.bracket.pretty()}")
            self.flush()
            return EXIT_DOMAIN_ERROR
        if self.text_mode:
            self.show_report(report)
        else:
            self.emit(json.dumps(report_to_json(report), indent=2, ensure_ascii=False))
        self.flush()
        return EXIT_OK

    def show_report(self, report):
        """文本模式的分类报告"""
        self.emit("=" * 60)
        self.emit(f"📊 轨道: {report.label.value}")
        self.emit("=" * 60)
        self.emit(f"秩: {report.rank}")
        if report.rank == 1:
            self.emit(f"ψ 纯旋量: {'✅' if report.psi_pure else '❌'}")
            self.emit(f"w 迷向: {'✅' if report.w_isotropic else '❌'}")
        if report.pattern is not None:
            self.emit(f"相交形态: {report.pattern.value}")
            self.emit(f"γ 在 Sym²(S_Q) 上的秩: {report.gamma_rank}")
        self.emit(f"存活平移维数: {report.translations_dim}")
        if report.background:
            self.emit(f"扭曲背景: {report.background}")
        self.emit(f"射影轨道维数: {report.projective_orbit_dim}")
        self.emit(f"稳定子维数: {report.stabilizer_dim}")
        quoted = annotation(report.label) if report.label is not OrbitLabel.ZERO else None
        if quoted:
            self.emit(f"（分类表所列稳定子: {quoted}）")

    # ---- verify-table ----
    def verify_row(self, row: Dict, grids: Dict) -> Dict:
        """验证清单中的一行，返回通过情况与失败原因"""
        name = row.get('label', '?')
        failures = []
        try:
            label = parse_label(name)
            q = self.io.load_representative(row)
            report = classify(q)
            observed = {
                'label': report.label.value,
                'rank': report.rank,
                'pattern': report.pattern.value if report.pattern else None,
                'psi_pure': report.psi_pure,
                'w_isotropic': report.w_isotropic,
                'translations_dim': report.translations_dim,
                'projective_orbit_dim': report.projective_orbit_dim,
                'stabilizer_dim': report.stabilizer_dim,
            }
            if report.label is not label:
                failures.append(f"label={report.label.value}")
            for key, value in observed.items():
                if key in row and key != 'label' and row[key] != value:
                    failures.append(f"{key}={value}（期望 {row[key]}）")
            if report.stabilizer_dim + report.projective_orbit_dim != LIE_DIM:
                failures.append("稳定子维数与轨道维数之和不是 47")
            if name in grids:
                verdict = compare_condition_grids(q, grids[name])
                failures.extend(f"{GRID_LABELS.get(d, d)} 条件不符" for d, ok in verdict.items() if not ok)
        except TwistError as exc:
            failures.append(f"{type(exc).__name__}: {exc}")
        status = '✅' if not failures else '❌'
        logger.info(f"{status} {name}")
        return {'label': name, 'passed': not failures, 'failures': '; '.join(failures)}

    def verify_table(self, table_path: Optional[str] = None) -> int:
        """
        逐行验证分类表，全部通过时退出码为 0

        Args:
            table_path: 另存逐行结果的表格文件（.csv 或 .json）
        """
        rows = self.io.load_manifest()
        grids = self.io.load_condition_grids()
        results = [self.verify_row(row, grids) for row in rows]
        passed = sum(1 for r in results if r['passed'])
        frame = self.io.reports_frame(results)
        if table_path:
            self.io.export_table(frame, table_path)
        if self.text_mode:
            self.emit("=" * 60)
            self.emit("📊 分类表验证")
            self.emit("=" * 60)
            self.emit(frame.to_string(index=False))
            self.emit(f"\n{'✅' if passed == len(results) else '❌'} {passed}/{len(results)} 行通过")
        else:
            self.emit(json.dumps({'rows': results, 'passed': passed, 'total': len(results)},
                                 indent=2, ensure_ascii=False))
        self.flush()
        return EXIT_OK if passed == len(results) else EXIT_VERIFY_FAILED

    # ---- emit-ideal ----
    def emit_ideal_file(self, path: str) -> int:
        """把 10 个二次多项式逐行写入文件"""
        lines = [render_polynomial(p) for p in emit_ideal()]
        with open(path, 'w', encoding='utf-8') as f:
            f.write('\n'.join(lines) + '\n')
        logger.info(f"✅ 已写出 {len(lines)} 个二次多项式: {path}")
        return EXIT_OK

    # ---- sample ----
    def sample(self, label_text: str) -> int:
        """按种子生成轨道样本，发出前逐个重新分类"""
        label = parse_label(label_text)
        seeds = np.random.SeedSequence(self.config.seed).generate_state(max(self.config.count, 1))
        for index in range(self.config.count):
            q = sample_orbit(label, int(seeds[index]), self.config.word_length)
            observed = classify(q, with_orbit=False).label
            if observed is not label:
                raise ClassificationError(f"样本 {index} 被分类为 {observed.value}，期望 {label.value}")
            if self.text_mode:
                self.emit(f"{index}: {q.pretty()}")
            else:
                self.emit(dumps({'index': index, 'label': label.value, 'supercharge': supercharge_to_json(q)}))
        logger.info(f"生成 {self.config.count} 个 {label.value} 样本")
        self.flush()
        return EXIT_OK

    # ---- closure-scan ----
    def closure_scan(self, path: str, t_values: Sequence[str]) -> int:
        """沿线性族逐点分类"""
        pencil = self.io.load_pencil(path)
        points = [Scalar.parse(t) for t in t_values]
        for entry in closure_scan(pencil, points):
            if self.text_mode:
                outcome = entry.label.value if entry.label else f"❌ {entry.error}"
                self.emit(f"t = {entry.t.pretty()}: {outcome}")
            else:
                self.emit(dumps(entry.to_dict()))
        self.flush()
        return EXIT_OK

    def run(self, args: argparse.Namespace) -> int:
        sign = self.config.omega_sign
        with use_omega_sign(sign) if sign is not None else nullcontext():
            if args.command == 'classify':
                return self.classify_file(args.input)
            if args.command == 'verify-table':
                return self.verify_table(args.table)
            if args.command == 'emit-ideal':
                return self.emit_ideal_file(args.out)
            if args.command == 'sample':
                return self.sample(args.label)
            if args.command == 'closure-scan':
                return self.closure_scan(args.pencil, args.t)
        raise ParseError(f"未知命令: {args.command}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='十维 (2,0) 平方零超荷分类系统')
    parser.add_argument('--format', choices=FORMATS, help='输出格式')
    parser.add_argument('--output', help='输出文件（默认标准输出）')
    parser.add_argument('--config', help='INI 配置文件，读取 [twist] 段')
    parser.add_argument('--omega-sign', type=int, choices=[1, -1], help='Ω^-1 符号约定（默认校准值）')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', action='store_true', help='输出调试日志')
    verbosity.add_argument('--quiet', action='store_true', help='只输出警告与错误')

    sub = parser.add_subparsers(dest='command', required=True)
    p = sub.add_parser('classify', help='对超荷 JSON 文件分类')
    p.add_argument('input', help='超荷 JSON 文件')

    p = sub.add_parser('verify-table', help='验证分类表的六个代表元')
    p.add_argument('--fixtures', help='样例目录')
    p.add_argument('--table', help='另存逐行结果的表格（.csv 或 .json）')

    p = sub.add_parser('emit-ideal', help='导出幂零簇的二次方程')
    p.add_argument('out', help='输出文件')

    p = sub.add_parser('sample', help='按种子生成轨道样本')
    p.add_argument('label', help='轨道标签，例如 R2Line')
    p.add_argument('--count', type=int, default=1, help='样本个数')
    p.add_argument('--seed', type=int, help='随机种子')
    p.add_argument('--word-length', type=int, help='群生成元串长度')

    p = sub.add_parser('closure-scan', help='沿线性族扫描轨道标签')
    p.add_argument('pencil', help='线性族 JSON 文件')
    p.add_argument('--t', nargs='+', required=True, help='取样点，例如 0 1 1/2')
    return parser


def make_config(args: argparse.Namespace) -> RunConfig:
    """命令行参数覆盖 INI 默认值，INI 默认值覆盖内置默认值"""
    values = dict(load_defaults(args.config))
    for key, attr in (('format', 'format'), ('output', 'output'), ('omega_sign', 'omega_sign'),
                      ('seed', 'seed'), ('count', 'count'), ('word_length', 'word_length'),
                      ('fixtures', 'fixtures_dir')):
        value = getattr(args, key, None)
        if value is not None:
            values[attr] = value
    inputs = [v for v in (getattr(args, 'input', None), getattr(args, 'pencil', None)) if v]
    return RunConfig(command=args.command, inputs=inputs, **values).validate()


def configure_logging(args: argparse.Namespace):
    root = logging.getLogger()
    if args.verbose:
        root.setLevel(logging.DEBUG)
    elif args.quiet:
        root.setLevel(logging.WARNING)
    else:
        root.setLevel(logging.INFO)


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    """主函数，返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE_ERROR if exc.code else EXIT_OK
    configure_logging(args)
    err = stderr or sys.stderr
    try:
        config = make_config(args)
        return TwistCLI(config, stdout=stdout, stderr=stderr).run(args)
    except ParseError as exc:
        err.write(f"❌ 输入错误: {exc}\n")
        return EXIT_PARSE_ERROR
    except DomainError as exc:
        err.write(f"❌ 数学前置条件不满足: {exc}\n")
        return EXIT_DOMAIN_ERROR
    except ClassificationError as exc:
        err.write(f"❌ 分类失败: {exc}\n")
        return EXIT_VERIFY_FAILED
    except OSError as exc:
        err.write(f"❌ 文件读写失败: {exc}\n")
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
