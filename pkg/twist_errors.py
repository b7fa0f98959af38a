#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
异常定义
所有模块共用的错误层次，命令行界面据此映射退出码
"""


class TwistError(Exception):
    """所有错误的基类"""


class ParseError(TwistError, ValueError):
    """输入格式错误：标量文本、JSON结构、未知单项式或未知轨道标签"""


class DomainError(TwistError, ValueError):
    """数学前置条件不满足：零旋量、非纯旋量、奇异矩阵、秩不符等"""


class NotSquareZeroError(DomainError):
    """超荷不满足 [Q,Q] = 0，携带非零的括号值"""

    def __init__(self, message: str, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class ClassificationError(TwistError):
    """分类器内部错误（例如出现了不可达的秩二空交情形）"""
