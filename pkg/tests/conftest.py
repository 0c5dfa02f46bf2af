"""
共享测试夹具
"""

import os

import pytest

from quasilin.core.boolfn import make_inner_product_bent, symmetric_quadratic
from quasilin.utils.logging_config import QuasilinLogger


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """每个测试都从默认配置开始，并在结束后重置日志系统"""
    for key in list(os.environ):
        if key.startswith("QUASILIN_"):
            monkeypatch.delenv(key, raising=False)
    yield
    QuasilinLogger.reset()


@pytest.fixture
def symmetric():
    """三元函数 x1+x2+x1x2+x2x3+x1x3，真值表 00101011"""
    return symmetric_quadratic()


@pytest.fixture
def bent4():
    return make_inner_product_bent(4)
