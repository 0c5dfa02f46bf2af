"""
布尔函数表示与生成器测试
"""

import numpy as np
import pytest

from quasilin.core.boolfn import (
    BooleanFunction,
    flip_bits,
    make_inner_product_bent,
    make_linear,
    plant_structure,
    random_function,
    symmetric_quadratic,
)
from quasilin.core.errors import DomainError, VariableRangeError
from quasilin.core.spectral import derivative_counts, walsh_transform


class TestBooleanFunction:

    def test_evaluation_uses_x1_as_most_significant_bit(self):
        f = BooleanFunction.from_bits(2, [0, 0, 1, 1])  # f = x1
        assert f(0b10) == 1
        assert f(0b01) == 0

    def test_table_is_read_only(self):
        f = BooleanFunction.from_bits(2, [0, 1, 1, 0])
        with pytest.raises(ValueError):
            f.table[0] = 1

    def test_constructor_copies_caller_array(self):
        table = np.array([0, 1], dtype=np.uint8)
        f = BooleanFunction(1, table)
        table[0] = 1
        assert f.bitstring() == "01"

    @pytest.mark.parametrize("n", [0, 25, -1])
    def test_rejects_variable_count_out_of_range(self, n):
        with pytest.raises(VariableRangeError):
            BooleanFunction(n, np.zeros(1, dtype=np.uint8))

    def test_rejects_wrong_table_length(self):
        with pytest.raises(VariableRangeError):
            BooleanFunction(3, np.zeros(7, dtype=np.uint8))

    def test_rejects_non_binary_values(self):
        with pytest.raises(ValueError):
            BooleanFunction(1, np.array([0, 2]))

    def test_evaluation_outside_domain(self):
        with pytest.raises(VariableRangeError):
            BooleanFunction.from_bits(1, [0, 1])(2)

    def test_equality_and_hash(self):
        a = BooleanFunction.from_bits(2, [0, 1, 1, 0])
        b = BooleanFunction.from_bits(2, [0, 1, 1, 0])
        c = BooleanFunction.from_bits(2, [0, 1, 1, 1])
        assert a == b and hash(a) == hash(b)
        assert a != c

    def test_signs_and_weight(self):
        f = BooleanFunction.from_bits(2, [0, 1, 1, 1])
        assert f.signs().tolist() == [1, -1, -1, -1]
        assert f.weight() == 3


class TestGenerators:

    def test_linear_functions(self):
        assert make_linear(0b11, 2).bitstring() == "0110"
        assert make_linear(0b101, 3).bitstring() == "01011010"
        assert make_linear(0, 3).weight() == 0

    def test_linear_rejects_vector_outside_space(self):
        with pytest.raises(VariableRangeError):
            make_linear(0b100, 2)

    def test_inner_product_bent(self):
        assert make_inner_product_bent(2).bitstring() == "0001"
        spectrum = walsh_transform(make_inner_product_bent(6))
        assert set(np.abs(spectrum.coeffs).tolist()) == {8}

    def test_bent_requires_even_n(self):
        with pytest.raises(DomainError):
            make_inner_product_bent(5)

    @pytest.mark.parametrize("i", [0, 1])
    def test_plant_structure_creates_linear_structure(self, i):
        g = random_function(5, seed=11)
        f = plant_structure(g, i)
        assert f.n == 6
        counts = derivative_counts(f, 1 << 5)
        assert counts[i] == f.size

    def test_plant_structure_rejects_bad_bit(self):
        with pytest.raises(DomainError):
            plant_structure(random_function(3, seed=0), 2)

    def test_random_function_is_reproducible(self):
        assert random_function(6, seed=42) == random_function(6, seed=42)
        assert random_function(6, seed=1) != random_function(6, seed=2)

    def test_flip_bits_changes_exactly_count_positions(self):
        f = random_function(6, seed=3)
        g = flip_bits(f, 5, seed=9)
        assert int(np.sum(f.table != g.table)) == 5

    def test_flip_bits_bounds(self):
        f = random_function(2, seed=0)
        assert flip_bits(f, 0, seed=1) == f
        with pytest.raises(DomainError):
            flip_bits(f, 5, seed=1)

    def test_symmetric_quadratic_table(self):
        assert symmetric_quadratic().bitstring() == "00101011"
