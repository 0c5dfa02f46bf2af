"""
核心模块

- boolfn: 布尔函数表示与构造
- spectral: Walsh 谱与差分统计
- gf2: GF(2) 上的线性方程组
- structures: 精确线性结构
- quantum_sim: Bernstein–Vazirani 采样模拟
- search: 准线性结构搜索及其统计界

子模块按需导入，这里不做预加载。
"""
