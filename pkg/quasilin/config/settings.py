"""
配置访问接口模块

提供统一的配置访问接口，整合配置加载、验证和默认值。
"""

import logging
from pathlib import Path

from quasilin.config.loader import ConfigLoader
from quasilin.config.validator import ConfigValidator
from quasilin.config.defaults import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_LOG_FILE,
    DEFAULT_SEED,
    DEFAULT_MAX_VARIABLES,
    DEFAULT_BRUTE_FORCE_MAX_N,
    DEFAULT_CHECK_MAX_N,
    DEFAULT_NAIVE_PROFILE_MAX_N,
    DEFAULT_PROP2_MAX_SUPPORT,
    DEFAULT_CONFIDENCE_LAMBDA,
    DEFAULT_ENUMERATION_LIMIT,
)
from quasilin.core.errors import ConfigurationError

logger = logging.getLogger(__name__)


class Settings:
    """
    配置访问接口类

    所有配置项都是只读属性，每次访问时从环境变量读取，
    因此测试中可以用 monkeypatch.setenv 临时覆盖。

    示例:
        >>> from quasilin.config import settings
        >>> settings.brute_force_max_n
        16
        >>> settings.validate()
    """

    def __init__(self, env_file: str = '.env'):
        """
        初始化配置

        参数:
            env_file: .env 文件路径
        """
        self._loader = ConfigLoader()
        self._validator = ConfigValidator()

        env_path = Path(env_file)
        if not env_path.is_absolute():
            search_paths = [
                Path.cwd() / env_file,  # 工作目录
                Path(__file__).parent.parent.parent / env_file,  # 项目根目录
            ]
            for path in search_paths:
                if path.exists():
                    env_path = path
                    break

        if env_path.exists():
            self._loader.load_env_file(str(env_path))
        else:
            logger.debug(f".env 文件不存在: {env_file}，将使用默认配置")

    # ========================================================================
    # 日志配置属性
    # ========================================================================

    @property
    def log_level(self) -> str:
        """日志级别"""
        return self._loader.get_env('QUASILIN_LOG_LEVEL', DEFAULT_LOG_LEVEL).upper()

    @property
    def log_file(self) -> str:
        """日志文件路径，空字符串表示不写文件"""
        return self._loader.get_env('QUASILIN_LOG_FILE', DEFAULT_LOG_FILE)

    # ========================================================================
    # 随机数与规模限制
    # ========================================================================

    @property
    def default_seed(self) -> int:
        """未指定 --seed 时的默认种子"""
        return self._loader.get_env_int('QUASILIN_DEFAULT_SEED', DEFAULT_SEED)

    @property
    def max_variables(self) -> int:
        """变量个数上限"""
        return self._loader.get_env_int('QUASILIN_MAX_VARIABLES', DEFAULT_MAX_VARIABLES)

    @property
    def brute_force_max_n(self) -> int:
        """定义法枚举线性结构的变量个数上限"""
        return self._loader.get_env_int('QUASILIN_BRUTE_FORCE_MAX_N', DEFAULT_BRUTE_FORCE_MAX_N)

    @property
    def check_max_n(self) -> int:
        """check 子命令的变量个数上限"""
        return self._loader.get_env_int('QUASILIN_CHECK_MAX_N', DEFAULT_CHECK_MAX_N)

    @property
    def naive_profile_max_n(self) -> int:
        """朴素差分统计的变量个数上限"""
        return self._loader.get_env_int('QUASILIN_NAIVE_PROFILE_MAX_N', DEFAULT_NAIVE_PROFILE_MAX_N)

    @property
    def prop2_max_support(self) -> int:
        """两两扫描支撑集时的支撑集大小上限"""
        return self._loader.get_env_int('QUASILIN_PROP2_MAX_SUPPORT', DEFAULT_PROP2_MAX_SUPPORT)

    # ========================================================================
    # 搜索与报告参数
    # ========================================================================

    @property
    def confidence_lambda(self) -> float:
        """默认精度 ε = m^{-λ} 中的 λ"""
        return self._loader.get_env_float('QUASILIN_CONFIDENCE_LAMBDA', DEFAULT_CONFIDENCE_LAMBDA)

    @property
    def enumeration_limit(self) -> int:
        """报告中完整列出集合元素的上限"""
        return self._loader.get_env_int('QUASILIN_ENUMERATION_LIMIT', DEFAULT_ENUMERATION_LIMIT)

    # ========================================================================
    # 验证与导出
    # ========================================================================

    def validate(self) -> None:
        """
        验证所有配置项

        异常:
            ConfigurationError: 配置验证失败，消息中列出全部错误
        """
        errors = self._validator.validate_all(self.to_dict())
        if errors:
            message = "配置验证失败:\n" + "\n".join(f"  - {e}" for e in errors)
            logger.error(message)
            raise ConfigurationError(message)
        logger.debug("配置验证通过")

    def to_dict(self) -> dict:
        """
        将配置转换为字典

        返回:
            配置字典
        """
        return {
            'log_level': self.log_level,
            'log_file': self.log_file,
            'default_seed': self.default_seed,
            'max_variables': self.max_variables,
            'brute_force_max_n': self.brute_force_max_n,
            'check_max_n': self.check_max_n,
            'naive_profile_max_n': self.naive_profile_max_n,
            'prop2_max_support': self.prop2_max_support,
            'confidence_lambda': self.confidence_lambda,
            'enumeration_limit': self.enumeration_limit,
        }


# ============================================================================
# 全局配置单例
# ============================================================================

settings = Settings()
