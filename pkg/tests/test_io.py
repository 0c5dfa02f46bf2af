"""
真值表文件格式测试
"""

import pytest

from quasilin.core.boolfn import (
    format_truth_table,
    parse_truth_table,
    read_truth_table,
    symmetric_quadratic,
    write_truth_table,
)
from quasilin.core.errors import TruthTableFormatError, VariableRangeError


def test_parse_binary_body():
    assert parse_truth_table("n=3\n00101011\n") == symmetric_quadratic()


def test_parse_hex_body():
    assert parse_truth_table("n=3\nhex:2b") == symmetric_quadratic()
    assert parse_truth_table("n=3\nHEX:2B") == symmetric_quadratic()


def test_hex_padding_for_small_tables():
    assert parse_truth_table("n=1\nhex:4").bitstring() == "01"
    with pytest.raises(TruthTableFormatError):
        parse_truth_table("n=1\nhex:5")


def test_format_both_spellings(symmetric):
    assert format_truth_table(symmetric) == "n=3\n00101011\n"
    assert format_truth_table(symmetric, use_hex=True) == "n=3\nhex:2b\n"
    assert parse_truth_table(format_truth_table(symmetric, use_hex=True)) == symmetric


@pytest.mark.parametrize("text", [
    "n=3",
    "m=3\n00101011",
    "n=x\n00101011",
    "n=3\n0010101",
    "n=3\n00101021",
    "n=3\nhex:2",
    "n=3\nhex:zz",
    "n=3\n00101011\n1",
])
def test_malformed_files(text):
    with pytest.raises(TruthTableFormatError):
        parse_truth_table(text)


def test_variable_count_out_of_range():
    with pytest.raises(VariableRangeError):
        parse_truth_table("n=0\n0")


def test_file_round_trip(tmp_path, symmetric):
    path = tmp_path / "nested" / "f.tt"
    write_truth_table(symmetric, path, use_hex=True)
    assert read_truth_table(path) == symmetric


def test_missing_file(tmp_path):
    with pytest.raises(TruthTableFormatError):
        read_truth_table(tmp_path / "absent.tt")
