"""
顶层包的延迟导出
"""

import pytest

import quasilin


def test_lazy_exports_resolve():
    f = quasilin.symmetric_quadratic()
    assert quasilin.walsh_transform(f).coeffs.tolist() == [0, -4, 4, 0, 4, 0, 0, 4]
    assert quasilin.run_structure_search(f, seed=3).a1.elements() == [7]


def test_every_export_exists():
    for name in quasilin.__all__:
        assert getattr(quasilin, name) is not None


def test_unknown_attribute():
    with pytest.raises(AttributeError):
        quasilin.no_such_thing
