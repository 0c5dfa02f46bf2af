"""
BV 采样模拟测试
"""

import numpy as np
import pytest
from scipy.stats import chisquare

from quasilin.core.boolfn import make_inner_product_bent, make_linear, random_function
from quasilin.core.errors import DomainError, SpectrumError
from quasilin.core.quantum_sim import BvSampler, new_sampler
from quasilin.core.spectral import WalshSpectrum, walsh_transform


def test_linear_function_always_returns_its_vector():
    sampler = BvSampler(walsh_transform(make_linear(0b101, 3)), seed=1)
    assert set(sampler.sample_batch(200).tolist()) == {0b101}
    assert sampler.sample() == 0b101
    assert sampler.draws == 201


def test_cumulative_table_ends_at_total_mass(symmetric):
    sampler = BvSampler(walsh_transform(symmetric), seed=0)
    assert sampler.cumulative.tolist() == [0, 16, 32, 32, 48, 48, 48, 64]
    assert not sampler.cumulative.flags.writeable


def test_same_seed_gives_same_stream(symmetric):
    spectrum = walsh_transform(symmetric)
    first = BvSampler(spectrum, seed=12).sample_batch(50)
    second = BvSampler(spectrum, seed=12).sample_batch(50)
    assert np.array_equal(first, second)


def test_batch_matches_sequential_draws():
    spectrum = walsh_transform(random_function(8, seed=4))
    batched = BvSampler(spectrum, seed=99).sample_batch(37).tolist()
    sequential_sampler = BvSampler(spectrum, seed=99)
    sequential = [sequential_sampler.sample() for _ in range(37)]
    assert batched == sequential


def test_draws_stay_on_support():
    spectrum = walsh_transform(random_function(10, seed=8))
    samples = BvSampler(spectrum, seed=5).sample_batch(5_000)
    assert np.all(spectrum.coeffs[samples] != 0)


def test_distribution_matches_squared_spectrum(symmetric):
    spectrum = walsh_transform(symmetric)
    samples = BvSampler(spectrum, seed=2024).sample_batch(40_000)
    observed = np.bincount(samples, minlength=8)
    expected = spectrum.squares() / 64 * samples.size
    support = expected > 0
    assert observed[~support].sum() == 0
    _, p_value = chisquare(observed[support], expected[support])
    assert p_value > 1e-6


def test_bent_distribution_is_uniform(bent4):
    samples = BvSampler(walsh_transform(bent4), seed=3).sample_batch(32_000)
    _, p_value = chisquare(np.bincount(samples, minlength=16))
    assert p_value > 1e-6


@pytest.mark.slow
def test_frequencies_within_half_percent(symmetric):
    spectrum = walsh_transform(symmetric)
    samples = BvSampler(spectrum, seed=1_000).sample_batch(1_000_000)
    frequencies = np.bincount(samples, minlength=8) / samples.size
    assert np.max(np.abs(frequencies - spectrum.squares() / 64)) <= 0.005


def test_rejects_spectrum_violating_parseval():
    with pytest.raises(SpectrumError):
        BvSampler(WalshSpectrum(1, np.array([1, 1])), seed=0)


@pytest.mark.parametrize("seed", [-1, True, 1.5, "7"])
def test_rejects_bad_seed(seed):
    with pytest.raises(DomainError):
        BvSampler(walsh_transform(make_inner_product_bent(2)), seed=seed)


@pytest.mark.parametrize("count", [0, -3, 2.0])
def test_rejects_bad_batch_size(count):
    sampler = BvSampler(walsh_transform(make_inner_product_bent(2)), seed=0)
    with pytest.raises(DomainError):
        sampler.sample_batch(count)


def test_new_sampler_uses_configured_seed(monkeypatch, symmetric):
    spectrum = walsh_transform(symmetric)
    monkeypatch.setenv("QUASILIN_DEFAULT_SEED", "17")
    sampler = new_sampler(spectrum)
    assert sampler.seed == 17
    assert np.array_equal(sampler.sample_batch(20), BvSampler(spectrum, 17).sample_batch(20))


def test_consecutive_batches_continue_the_stream(symmetric):
    spectrum = walsh_transform(symmetric)
    split = BvSampler(spectrum, seed=8)
    parts = np.concatenate([split.sample_batch(7), split.sample_batch(13)])
    assert np.array_equal(parts, BvSampler(spectrum, seed=8).sample_batch(20))


def test_constant_zero_always_returns_zero():
    sampler = BvSampler(walsh_transform(make_linear(0, 4)), seed=6)
    assert set(sampler.sample_batch(50).tolist()) == {0}
