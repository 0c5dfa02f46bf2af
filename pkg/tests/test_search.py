"""
准线性结构搜索、置信界与审计测试
"""

import math
import statistics
from fractions import Fraction

import pytest

from quasilin.core.boolfn import (
    flip_bits,
    make_inner_product_bent,
    make_linear,
    plant_structure,
    random_function,
)
from quasilin.core.errors import DomainError, VariableRangeError
from quasilin.core.gf2 import Gf2Eliminator
from quasilin.core.search import (
    QuasiCheck,
    QuasiStructureSearch,
    Verdict,
    audit_report,
    batch_size,
    confidence_interval,
    default_epsilon,
    default_rounds,
    expected_bv_runs,
    hoeffding_failure_bound,
    quasi_check,
    run_structure_search,
)
from quasilin.core.structures import brute_force_linear_structures


class TestBounds:

    def test_hoeffding_failure_bound(self):
        assert hoeffding_failure_bound(1, 1) == pytest.approx(math.exp(-2))
        assert hoeffding_failure_bound(100, Fraction(1, 10)) == pytest.approx(math.exp(-2))
        assert hoeffding_failure_bound(50, 0.5) == pytest.approx(math.exp(-25))

    @pytest.mark.parametrize("m, epsilon", [(0, 0.5), (-1, 0.5), (1.0, 0.5), (10, 0), (10, 1.5), (10, "x")])
    def test_hoeffding_rejects_bad_arguments(self, m, epsilon):
        with pytest.raises(DomainError):
            hoeffding_failure_bound(m, epsilon)

    def test_default_epsilon(self, monkeypatch):
        assert default_epsilon(100) == pytest.approx(0.1)
        assert default_epsilon(16, lam=0.25) == pytest.approx(0.5)
        monkeypatch.setenv("QUASILIN_CONFIDENCE_LAMBDA", "0.25")
        assert default_epsilon(16) == pytest.approx(0.5)

    @pytest.mark.parametrize("lam", [0, 0.6, -0.1])
    def test_default_epsilon_rejects_bad_lambda(self, lam):
        with pytest.raises(DomainError):
            default_epsilon(100, lam=lam)

    def test_confidence_interval(self):
        interval = confidence_interval(100, 0.5)
        assert interval.lower == pytest.approx(0.9)
        assert interval.confidence == pytest.approx(1 - math.exp(-2))
        wider = confidence_interval(100, 0.25)
        assert wider.lower < interval.lower
        assert wider.confidence == pytest.approx(1 - math.exp(-20))

    @pytest.mark.parametrize("delta, n, c, expected", [
        (Fraction(1, 2), 4, 1, 10),
        (Fraction(3, 4), 7, 2, 64),
        (Fraction(7, 8), 4, 1, 40),
        (0.5, 8, Fraction(3, 2), 27),
    ])
    def test_expected_bv_runs(self, delta, n, c, expected):
        assert expected_bv_runs(delta, n, c) == expected

    @pytest.mark.parametrize("delta, c", [(1, 1), (Fraction(1, 4), 1), (Fraction(3, 4), 0), (Fraction(3, 4), -1)])
    def test_expected_bv_runs_rejects_bad_arguments(self, delta, c):
        with pytest.raises(DomainError):
            expected_bv_runs(delta, 4, c)

    def test_expected_bv_runs_rejects_bad_n(self):
        with pytest.raises(VariableRangeError):
            expected_bv_runs(Fraction(1, 2), 0)


class TestSearch:

    def test_batch_and_round_defaults(self):
        assert batch_size(5) == 6
        assert default_rounds(5) == 25

    def test_linear_function_never_halts(self):
        report = run_structure_search(make_linear(0b101, 3), seed=0)
        assert report.verdict is Verdict.QUASI_STRUCTURES
        assert report.rounds_used == report.max_rounds == 9
        assert report.bv_runs == 36
        assert report.system.rows == frozenset({0b101})
        assert report.a0.elements() == [0b000, 0b010, 0b101, 0b111]
        assert report.a1.elements() == [0b001, 0b011, 0b100, 0b110]
        assert report.epsilon == pytest.approx(1 / 6)
        assert report.failure_bound == pytest.approx(math.exp(-2))
        assert report.candidate_count() == 7
        assert all(record.samples == (0b101,) * 4 for record in report.history)

    def test_symmetric_quadratic_keeps_its_structure(self, symmetric):
        report = QuasiStructureSearch(symmetric, seed=3).run()
        assert report.verdict is Verdict.QUASI_STRUCTURES
        assert report.a0.is_zero_only()
        assert report.a1.elements() == [7]
        assert list(report.candidates()) == [(7, 1)]

    def test_bent_function_halts_early(self, bent4):
        report = run_structure_search(bent4, seed=7)
        assert report.verdict is Verdict.NO_LINEAR_STRUCTURE
        assert report.found_no_structure
        assert report.rounds_used < report.max_rounds == 16
        assert report.bv_runs == report.rounds_used * batch_size(4)
        assert report.a0.is_zero_only() and report.a1.empty
        assert report.candidate_count() == 0
        assert list(report.candidates()) == []

    def test_same_seed_gives_identical_report(self):
        f = random_function(7, seed=1)
        assert run_structure_search(f, seed=42) == run_structure_search(f, seed=42)

    def test_history_is_monotone(self):
        report = run_structure_search(random_function(8, seed=6), max_rounds=30, seed=2)
        previous = None
        for record in report.history:
            assert len(record.samples) == batch_size(8)
            if previous is not None:
                assert record.round == previous.round + 1
                assert record.h_size >= previous.h_size
                assert record.rank >= previous.rank
                assert record.dim_a0 <= previous.dim_a0
                dim_a1 = -1 if record.dim_a1 is None else record.dim_a1
                previous_dim_a1 = -1 if previous.dim_a1 is None else previous.dim_a1
                assert dim_a1 <= previous_dim_a1
            previous = record
        last = report.history[-1]
        assert last.h_size == len(report.system)
        assert last.dim_a0 == report.a0.dimension
        assert last.dim_a1 == report.a1.dimension

    def test_explicit_epsilon(self):
        report = run_structure_search(make_linear(3, 2), max_rounds=2, seed=0, epsilon=0.25)
        assert report.bv_runs == 6
        assert report.epsilon == 0.25
        assert report.failure_bound == pytest.approx(math.exp(-2 * 6 * 0.25 ** 2))

    @pytest.mark.parametrize("kwargs", [{"max_rounds": 0}, {"max_rounds": 2.5}, {"epsilon": 0}, {"epsilon": 1.5}])
    def test_rejects_bad_parameters(self, kwargs, symmetric):
        with pytest.raises(DomainError):
            QuasiStructureSearch(symmetric, **kwargs)

    def test_seed_from_settings(self, monkeypatch, symmetric):
        monkeypatch.setenv("QUASILIN_DEFAULT_SEED", "5")
        assert run_structure_search(symmetric).seed == 5
        assert run_structure_search(symmetric) == run_structure_search(symmetric, seed=5)

    @pytest.mark.parametrize("seed", range(20))
    def test_planted_structure_is_never_missed(self, seed):
        n = 4 + seed % 5
        i = seed % 2
        f = plant_structure(random_function(n - 1, seed=seed), i)
        report = run_structure_search(f, seed=seed)
        assert report.verdict is Verdict.QUASI_STRUCTURES
        assert 1 << (n - 1) in (report.a1 if i else report.a0)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_bent_run_count_close_to_estimate(self, n):
        f = make_inner_product_bent(n)
        reports = [run_structure_search(f, max_rounds=4 * n, seed=1_000 + k) for k in range(200)]
        halted = [report.bv_runs for report in reports if report.found_no_structure]
        assert len(halted) >= 198
        ratio = statistics.mean(halted) / expected_bv_runs(Fraction(1, 2), n, 1)
        assert 1 / 3 <= ratio <= 3


def mixed_function(seed):
    """n = 3 … 10；每三个种子中一个是预置结构的函数，其余是随机函数"""
    n = 3 + seed % 8
    if seed % 3 == 0:
        return plant_structure(random_function(n - 1, seed=seed), seed % 2)
    return random_function(n, seed=seed)


class TestSearchInvariants:

    @pytest.mark.parametrize("seed", range(24))
    def test_every_round_contains_exact_structures(self, seed):
        f = mixed_function(seed)
        exact = brute_force_linear_structures(f)
        report = run_structure_search(f, seed=seed)

        eliminator = Gf2Eliminator(f.n)
        rows = set()
        for record in report.history:
            for w in record.samples:
                if w not in rows:
                    rows.add(w)
                    eliminator.add(w)
            a0 = eliminator.solution_set(0)
            a1 = eliminator.solution_set(1)
            assert (record.h_size, record.rank, record.zero_in_h) == (len(rows), eliminator.rank, 0 in rows)
            assert (record.dim_a0, record.dim_a1) == (a0.dimension, a1.dimension)
            assert exact.u0.issubset(a0)
            assert exact.u1.issubset(a1)
        assert (report.a0, report.a1) == (a0, a1)

    @pytest.mark.parametrize("seed", range(24))
    def test_shortcut_rules_hold_in_history(self, seed):
        report = run_structure_search(mixed_function(seed), seed=seed)
        zero_seen = False
        for record in report.history:
            zero_seen = zero_seen or record.zero_in_h
            if zero_seen:
                assert record.dim_a1 is None
            if record.rank == report.n:
                assert record.dim_a0 == 0
                assert record.dim_a1 in (None, 0)

    def test_zero_sample_rules_out_value_one(self):
        report = run_structure_search(make_linear(0, 4), max_rounds=3, seed=0)
        assert all(record.zero_in_h and record.dim_a1 is None for record in report.history)
        assert report.a0.dimension == 4
        assert report.a1.empty

    def test_full_rank_leaves_at_most_one_candidate(self, bent4):
        report = run_structure_search(bent4, seed=7)
        last = report.history[-1]
        assert last.rank == 4
        assert report.a0.is_zero_only()
        assert len(report.a1) <= 1

    def test_no_verdicts_are_confirmed_by_enumeration(self):
        confirmed = 0
        for seed in range(60):
            n = 3 + seed % 6
            f = random_function(n, seed=seed)
            report = run_structure_search(f, max_rounds=2 * n, seed=seed)
            if report.found_no_structure:
                assert not brute_force_linear_structures(f).has_nonzero_structure()
                confirmed += 1
        assert confirmed >= 20


class TestAudit:

    def test_quasi_check(self, symmetric):
        bent2 = make_inner_product_bent(2)
        assert quasi_check(bent2, 0b01, 0, 0.4) == QuasiCheck(False, Fraction(1, 2))
        assert quasi_check(bent2, 0b01, 0, 0.6) == QuasiCheck(True, Fraction(1, 2))
        assert quasi_check(symmetric, 0b111, 1, 0.01) == QuasiCheck(True, Fraction(0))

    @pytest.mark.parametrize("i, epsilon", [(2, 0.5), (0, 0), (1, -0.1)])
    def test_quasi_check_rejects_bad_arguments(self, symmetric, i, epsilon):
        with pytest.raises(DomainError):
            quasi_check(symmetric, 1, i, epsilon)

    def test_audit_of_exact_structures(self):
        f = make_linear(0b101, 3)
        audit = audit_report(run_structure_search(f, seed=0), f)
        assert audit.checked == 7
        assert audit.violations == 0
        assert audit.violation_fraction == 0.0
        assert all(entry.deficiency == 0 and entry.is_quasi for entry in audit.entries)

    def test_audit_matches_quasi_check(self):
        f = plant_structure(random_function(5, seed=13), 0)
        report = run_structure_search(f, max_rounds=2, seed=4)
        audit = audit_report(report, f, epsilon=0.3)
        for entry in audit.entries:
            check = quasi_check(f, entry.a, entry.i, 0.3)
            assert (entry.is_quasi, entry.deficiency) == (check.is_quasi, check.deficiency)
        assert audit.violations == sum(not entry.is_quasi for entry in audit.entries)

    def test_audit_rejects_mismatched_function(self, symmetric, bent4):
        with pytest.raises(DomainError):
            audit_report(run_structure_search(bent4, seed=0), symmetric)

    def test_audit_size_limit(self):
        f = random_function(6, seed=0)
        with pytest.raises(DomainError):
            audit_report(run_structure_search(f, seed=0), f, max_n=5)

    @pytest.mark.slow
    def test_violation_fraction_within_failure_bound(self):
        n, rounds = 8, 9
        m = rounds * batch_size(n)
        epsilon = m ** -0.5
        checked = violations = 0
        for k in range(200):
            seed = 1_000 + k
            # 翻转一位后预置向量的亏量为 2/2^n，远小于 ε
            perturbed = flip_bits(plant_structure(random_function(n - 1, seed=seed), k % 2), 1, seed=seed)
            for f in (random_function(n, seed=seed), perturbed):
                report = run_structure_search(f, max_rounds=rounds, seed=seed, epsilon=epsilon)
                assert report.failure_bound == pytest.approx(math.exp(-2))
                audit = audit_report(report, f)
                checked += audit.checked
                violations += audit.violations
        assert checked > 0
        assert violations / checked <= math.exp(-2)
