"""
quasilin - 布尔函数线性结构与准线性结构分析

在经典计算机上按测量分布模拟 Bernstein–Vazirani 采样，迭代求解 GF(2)
方程组来寻找布尔函数的准线性结构，并用精确的谱方法和定义法交叉验证。

主要功能：
- 布尔函数：真值表、ANF 解析、生成器和文件读写
- 谱分析：快速 Walsh 变换、相关函数、差分统计和恒等式校验
- 线性结构：谱方法与定义法两条途径，以及支撑集诊断
- 采样模拟：BV 运行的精确整数采样
- 搜索：迭代采样、提前停止、置信界与审计

使用示例：
    from quasilin import symmetric_quadratic, walsh_transform, run_structure_search

    f = symmetric_quadratic()
    print(walsh_transform(f).coeffs.tolist())

    report = run_structure_search(f, seed=7)
    print(report.verdict.value, report.a1.elements())
"""

__version__ = "1.0.0"

# ============================================================================
# 延迟导入
# ============================================================================
# 只在实际使用时才导入对应的子模块

_LAZY_EXPORTS = {
    'settings': 'quasilin.config',
    'BooleanFunction': 'quasilin.core.boolfn',
    'parse_anf': 'quasilin.core.boolfn',
    'render_anf': 'quasilin.core.boolfn',
    'anf_to_function': 'quasilin.core.boolfn',
    'make_linear': 'quasilin.core.boolfn',
    'make_inner_product_bent': 'quasilin.core.boolfn',
    'plant_structure': 'quasilin.core.boolfn',
    'random_function': 'quasilin.core.boolfn',
    'symmetric_quadratic': 'quasilin.core.boolfn',
    'read_truth_table': 'quasilin.core.boolfn',
    'WalshSpectrum': 'quasilin.core.spectral',
    'walsh_transform': 'quasilin.core.spectral',
    'differential_profile': 'quasilin.core.spectral',
    'spectral_linear_structures': 'quasilin.core.structures',
    'brute_force_linear_structures': 'quasilin.core.structures',
    'BvSampler': 'quasilin.core.quantum_sim',
    'new_sampler': 'quasilin.core.quantum_sim',
    'QuasiStructureSearch': 'quasilin.core.search',
    'run_structure_search': 'quasilin.core.search',
    'solve_affine_system': 'quasilin.core.search',
    'QuasilinError': 'quasilin.core.errors',
}


def __getattr__(name):
    """延迟导入支持"""
    module_name = _LAZY_EXPORTS.get(name)
    if module_name is None:
        raise AttributeError(f"module 'quasilin' has no attribute '{name}'")
    import importlib
    return getattr(importlib.import_module(module_name), name)


__all__ = ['__version__', *_LAZY_EXPORTS]
