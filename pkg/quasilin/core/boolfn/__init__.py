"""
布尔函数模块

提供布尔函数的表示、ANF 解析、生成器和真值表文件读写。
"""

from .function import BooleanFunction, MAX_VARIABLES, MIN_VARIABLES, check_variable_count
from .anf import AnfExpression, AnfParser, parse_anf, render_anf, anf_to_function, function_to_anf
from .generators import (
    SYMMETRIC_QUADRATIC_ANF,
    make_linear,
    make_inner_product_bent,
    plant_structure,
    random_function,
    flip_bits,
    symmetric_quadratic,
)
from .io import parse_truth_table, format_truth_table, read_truth_table, write_truth_table

__all__ = [
    "BooleanFunction",
    "MAX_VARIABLES",
    "MIN_VARIABLES",
    "check_variable_count",
    "AnfExpression",
    "AnfParser",
    "parse_anf",
    "render_anf",
    "anf_to_function",
    "function_to_anf",
    "SYMMETRIC_QUADRATIC_ANF",
    "make_linear",
    "make_inner_product_bent",
    "plant_structure",
    "random_function",
    "flip_bits",
    "symmetric_quadratic",
    "parse_truth_table",
    "format_truth_table",
    "read_truth_table",
    "write_truth_table",
]
