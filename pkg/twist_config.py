#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
运行配置
命令行参数与可选 INI 文件（[twist] 段）合并成 RunConfig
"""

import configparser
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from twist_errors import ParseError

logger = logging.getLogger(__name__)

SECTION = 'twist'
FORMATS = ('json', 'text')


@dataclass
class RunConfig:
    """
    一次命令运行的全部参数

    Args:
        command: 子命令名
        inputs: 输入文件
        seed: 随机种子，完全决定随机输出
        count: 样本个数
        output: 输出文件，None 表示标准输出
        format: json 或 text
        word_length: 抽样时群生成元串的长度
        omega_sign: Ω^{-1} 的符号约定，None 表示校准值
        fixtures_dir: 样例目录
    """
    command: str = ''
    inputs: List[str] = field(default_factory=list)
    seed: int = 0
    count: int = 1
    output: Optional[str] = None
    format: str = 'json'
    word_length: int = 6
    omega_sign: Optional[int] = None
    fixtures_dir: Optional[str] = None

    def validate(self) -> 'RunConfig':
        if self.format not in FORMATS:
            raise ParseError(f"输出格式只能是 {FORMATS}: {self.format}")
        if self.seed < 0:
            raise ParseError("seed 必须是非负整数")
        if self.count < 0 or self.word_length < 0:
            raise ParseError("count 与 word_length 不能为负")
        if self.omega_sign not in (None, 1, -1):
            raise ParseError("omega_sign 只能是 1 或 -1")
        return self


def load_defaults(path: Optional[str]) -> dict:
    """
    读取 INI 文件中的默认值

    Args:
        path: INI 文件路径，为 None 时返回空字典

    Returns:
        seed、word_length、format、fixtures_dir 中出现的键
    """
    if not path:
        return {}
    if not Path(path).exists():
        raise ParseError(f"配置文件不存在: {path}")
    parser = configparser.ConfigParser()
    try:
        parser.read(path, encoding='utf-8')
    except configparser.Error as exc:
        raise ParseError(f"配置文件格式错误: {exc}") from exc
    if not parser.has_section(SECTION):
        logger.warning(f"配置文件 {path} 中没有 [{SECTION}] 段")
        return {}
    section = parser[SECTION]
    defaults = {}
    try:
        if 'seed' in section:
            defaults['seed'] = section.getint('seed')
        if 'word_length' in section:
            defaults['word_length'] = section.getint('word_length')
    except ValueError as exc:
        raise ParseError(f"配置项必须是整数: {exc}") from exc
    if 'format' in section:
        defaults['format'] = section.get('format')
    if 'fixtures_dir' in section:
        defaults['fixtures_dir'] = section.get('fixtures_dir')
    logger.debug(f"配置文件默认值: {defaults}")
    return defaults


def write_defaults(path: str, **values) -> str:
    """生成一个 [twist] 配置文件"""
    parser = configparser.ConfigParser()
    parser[SECTION] = {k: str(v) for k, v in values.items() if v is not None}
    with open(path, 'w', encoding='utf-8') as f:
        parser.write(f)
    return str(path)
