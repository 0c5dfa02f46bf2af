"""
子命令实现

每个 cmd_* 接收 argparse 结果，返回要写到标准输出的文本。
"""

import logging
from typing import Tuple

import numpy as np

from quasilin.config import settings
from quasilin.core.bits import to_bitstring
from quasilin.core.boolfn import BooleanFunction, function_to_anf, render_anf
from quasilin.core.gf2 import Gf2System, odd_dependency
from quasilin.core.quantum_sim import new_sampler
from quasilin.core.search import (
    QuasiStructureSearch,
    StructureReport,
    audit_report,
    batch_size,
    expected_bv_runs,
)
from quasilin.core.spectral import (
    differential_profile,
    high_probability_differentials,
    walsh_transform,
)
from quasilin.core.structures import (
    SpectralSupport,
    brute_force_linear_structures,
    spectral_linear_structures,
    support_dimensions,
    xor_closed_triple,
    zero_in_support,
)
from quasilin.interfaces.cli.checks import run_consistency_checks
from quasilin.interfaces.cli.errors import CliError, flag_context
from quasilin.interfaces.cli.models import (
    AffineSetModel,
    AuditEntryModel,
    AuditModel,
    CheckItem,
    CheckReport,
    ConfidenceModel,
    DifferentialModel,
    ExactReport,
    ProfileReport,
    Rational,
    RoundModel,
    SearchReport,
    SourceModel,
    SpectrumEntry,
    SpectrumReport,
    SupportDiagnostics,
)
from quasilin.interfaces.cli.sources import FunctionSource, resolve_function, source_from_args
from quasilin.utils.formatting import bitstrings

logger = logging.getLogger(__name__)


def _load(args) -> Tuple[FunctionSource, BooleanFunction, SourceModel]:
    source = source_from_args(args)
    f = resolve_function(source, args.n)
    model = SourceModel(kind=source.kind.value, payload=str(source.payload), n=f.n)
    return source, f, model


def _seed(args) -> int:
    return settings.default_seed if args.seed is None else args.seed


def _dump(model) -> str:
    return model.model_dump_json(indent=2)


def cmd_spectrum(args) -> str:
    """Walsh 谱，按下标或按 |Ŵ| 降序排列"""
    _, f, source = _load(args)
    spectrum = walsh_transform(f)

    if args.sort == "magnitude":
        order = np.argsort(-np.abs(spectrum.coeffs), kind="stable")
    else:
        order = np.arange(f.size)
    if args.support_only:
        order = order[spectrum.coeffs[order] != 0]

    entries = [
        SpectrumEntry(
            w=to_bitstring(w, f.n),
            walsh=spectrum[w],
            normalized=Rational.of(spectrum.normalized(w)),
        )
        for w in order.tolist()
    ]
    return _dump(SpectrumReport(
        source=source,
        order=args.sort,
        support_size=int(spectrum.support().size),
        parseval_holds=spectrum.satisfies_parseval(),
        entries=entries,
    ))


def cmd_exact(args) -> str:
    """精确线性结构与支撑集诊断"""
    _, f, source = _load(args)
    spectrum = walsh_transform(f)
    support = SpectralSupport.from_spectrum(spectrum)
    structures = spectral_linear_structures(spectrum, support)

    agrees = None
    if f.n <= settings.brute_force_max_n:
        agrees = brute_force_linear_structures(f) == structures
        if not agrees:
            logger.error("定义法与谱方法的结果不一致")
    else:
        logger.warning(f"n = {f.n} 超过定义法上限 {settings.brute_force_max_n}，跳过交叉验证")

    scanned = len(support) <= settings.prop2_max_support
    triple = xor_closed_triple(support) if scanned else None
    dependency = None
    if scanned:
        dependency = odd_dependency(Gf2System(f.n, frozenset(support.vectors.tolist())))
    dims = support_dimensions(spectrum, support)

    return _dump(ExactReport(
        source=source,
        anf=render_anf(function_to_anf(f)),
        delta_f=Rational.of(differential_profile(f, spectrum).delta_f),
        u0=AffineSetModel.of(structures.u0),
        u1=AffineSetModel.of(structures.u1),
        brute_force_agrees=agrees,
        diagnostics=SupportDiagnostics(
            zero_in_support=zero_in_support(support),
            xor_triple=bitstrings(triple, f.n) if triple else None,
            xor_triple_scanned=scanned,
            odd_dependency=bitstrings(dependency, f.n) if dependency else None,
            k=dims.k,
            dim_u0=dims.dim_u0,
            u1_nonempty=dims.u1_nonempty,
            dim_u=dims.dim_u,
        ),
    ))


def cmd_sample(args) -> str:
    """模拟 BV 运行，每行输出一个样本"""
    _, f, _ = _load(args)
    with flag_context("--seed"):
        sampler = new_sampler(walsh_transform(f), _seed(args))
    return "\n".join(bitstrings(sampler.sample_batch(args.count).tolist(), f.n))


def _audit_model(report: StructureReport, f: BooleanFunction) -> AuditModel:
    with flag_context("--audit"):
        result = audit_report(report, f)
    limit = settings.enumeration_limit
    return AuditModel(
        epsilon=result.epsilon,
        checked=result.checked,
        violations=result.violations,
        violation_fraction=result.violation_fraction,
        failure_bound=result.failure_bound,
        entries=[
            AuditEntryModel(
                a=to_bitstring(entry.a, f.n),
                i=entry.i,
                deficiency=Rational.of(entry.deficiency),
                is_quasi=entry.is_quasi,
            )
            for entry in result.entries[:limit]
        ],
        entries_truncated=result.checked > limit,
    )


def cmd_search(args) -> str:
    """迭代 BV 采样搜索准线性结构"""
    _, f, source = _load(args)
    with flag_context("--rounds"):
        search = QuasiStructureSearch(f, max_rounds=args.rounds, seed=_seed(args), epsilon=args.epsilon)
    report = search.run()

    history = [
        RoundModel(
            round=record.round,
            samples=bitstrings(record.samples, f.n),
            h_size=record.h_size,
            rank=record.rank,
            zero_in_h=record.zero_in_h,
            dim_a0=record.dim_a0,
            dim_a1=record.dim_a1,
        )
        for record in report.history
    ]
    interval = report.interval
    return _dump(SearchReport(
        source=source,
        verdict=report.verdict.value,
        a0=AffineSetModel.of(report.a0),
        a1=AffineSetModel.of(report.a1),
        bv_runs=report.bv_runs,
        rounds_used=report.rounds_used,
        max_rounds=report.max_rounds,
        batch_size=batch_size(f.n),
        seed=report.seed,
        h_size=len(report.system),
        epsilon=report.epsilon,
        failure_bound=report.failure_bound,
        confidence=ConfidenceModel(
            lam=interval.lam,
            epsilon=interval.epsilon,
            lower=interval.lower,
            confidence=interval.confidence,
        ),
        history=history,
        audit=_audit_model(report, f) if args.audit else None,
    ))


def cmd_profile(args) -> str:
    """差分均匀度与高概率差分"""
    _, f, source = _load(args)
    profile = differential_profile(f)
    top = high_probability_differentials(profile, args.top)
    expected = None
    if not profile.has_perfect_differential():
        expected = expected_bv_runs(profile.delta_f, f.n, 1)

    return _dump(ProfileReport(
        source=source,
        delta_f=Rational.of(profile.delta_f),
        perfect_differential=profile.has_perfect_differential(),
        expected_bv_runs=expected,
        top=[
            DifferentialModel(
                a=to_bitstring(d.a, f.n),
                i=d.i,
                count=d.count,
                probability=Rational.of(d.probability),
            )
            for d in top
        ],
    ))


def cmd_check(args) -> str:
    """逐项核对恒等式"""
    origin, f, source = _load(args)
    if f.n > settings.check_max_n:
        raise CliError(origin.flag, f"check 只支持 n ≤ {settings.check_max_n}: n = {f.n}")

    outcomes = run_consistency_checks(f)
    return _dump(CheckReport(
        source=source,
        passed=all(o.passed for o in outcomes),
        delta_f=Rational.of(differential_profile(f).delta_f),
        checks=[CheckItem(name=o.name, passed=o.passed, detail=o.detail) for o in outcomes],
    ))


COMMANDS = {
    "spectrum": cmd_spectrum,
    "exact": cmd_exact,
    "sample": cmd_sample,
    "algorithm1": cmd_search,
    "profile": cmd_profile,
    "check": cmd_check,
}
