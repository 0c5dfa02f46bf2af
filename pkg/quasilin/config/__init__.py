"""
配置模块

提供统一的配置加载、验证和访问接口。

主要组件：
- settings: 全局配置单例
- Settings: 配置类，可用于创建自定义配置实例
- ConfigLoader: 配置加载器，从环境变量和 .env 文件加载配置
- ConfigValidator: 配置验证器
- defaults: 所有配置项的默认值

使用示例：
    from quasilin.config import settings
    print(settings.brute_force_max_n)
    settings.validate()
"""

from quasilin.config.settings import settings, Settings
from quasilin.config.loader import ConfigLoader
from quasilin.config.validator import ConfigValidator
from quasilin.config import defaults

__all__ = [
    'settings',
    'Settings',
    'ConfigLoader',
    'ConfigValidator',
    'defaults',
]
