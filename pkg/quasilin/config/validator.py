"""
配置验证器模块

负责验证配置值的有效性。
"""

import logging
from typing import List, Dict, Any

logger = logging.getLogger(__name__)

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

# 变量个数的硬上限
HARD_MAX_VARIABLES = 24


class ConfigValidator:
    """
    配置验证器类

    验证配置值的有效性，收集错误和警告。

    示例:
        >>> validator = ConfigValidator()
        >>> validator.validate_all({'max_variables': 24})
        []
    """

    def __init__(self):
        """初始化配置验证器"""
        self._errors: List[str] = []
        self._warnings: List[str] = []

    def validate_positive_int(self, value: int, field_name: str = "值") -> bool:
        """
        验证正整数

        参数:
            value: 要验证的整数
            field_name: 字段名称，用于错误消息

        返回:
            True 如果值是正整数，否则 False
        """
        if not isinstance(value, int) or isinstance(value, bool):
            self._errors.append(f"{field_name} 必须是整数: {value}")
            return False

        if value <= 0:
            self._errors.append(f"{field_name} 必须大于 0: {value}")
            return False

        return True

    def validate_non_negative_int(self, value: int, field_name: str = "值") -> bool:
        """验证非负整数"""
        if not isinstance(value, int) or isinstance(value, bool):
            self._errors.append(f"{field_name} 必须是整数: {value}")
            return False

        if value < 0:
            self._errors.append(f"{field_name} 不能为负数: {value}")
            return False

        return True

    def validate_range(self, value: float, min_val: float, max_val: float,
                       field_name: str = "值") -> bool:
        """
        验证值是否在指定范围内（两端包含）

        示例:
            >>> validator = ConfigValidator()
            >>> validator.validate_range(0.5, 0.0, 0.5, 'QUASILIN_CONFIDENCE_LAMBDA')
            True
        """
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            self._errors.append(f"{field_name} 必须是数字: {value}")
            return False

        if value < min_val or value > max_val:
            self._errors.append(f"{field_name} 必须在 {min_val} 到 {max_val} 之间: {value}")
            return False

        return True

    def validate_log_level(self, value: str, field_name: str = "LOG_LEVEL") -> bool:
        """验证日志级别名称"""
        if not isinstance(value, str) or value.upper() not in VALID_LOG_LEVELS:
            self._errors.append(
                f"{field_name} 必须是以下之一: {', '.join(VALID_LOG_LEVELS)}: {value}"
            )
            return False
        return True

    def validate_all(self, config: Dict[str, Any]) -> List[str]:
        """
        验证所有配置项

        参数:
            config: 配置字典

        返回:
            错误消息列表，如果没有错误则返回空列表
        """
        self._errors = []
        self._warnings = []

        if 'log_level' in config:
            self.validate_log_level(config['log_level'], 'QUASILIN_LOG_LEVEL')

        if 'default_seed' in config:
            self.validate_non_negative_int(config['default_seed'], 'QUASILIN_DEFAULT_SEED')

        limits = {
            'max_variables': 'QUASILIN_MAX_VARIABLES',
            'brute_force_max_n': 'QUASILIN_BRUTE_FORCE_MAX_N',
            'check_max_n': 'QUASILIN_CHECK_MAX_N',
            'naive_profile_max_n': 'QUASILIN_NAIVE_PROFILE_MAX_N',
        }
        for key, field_name in limits.items():
            if key in config and self.validate_positive_int(config[key], field_name):
                if config[key] > HARD_MAX_VARIABLES:
                    self._errors.append(
                        f"{field_name} 不能超过 {HARD_MAX_VARIABLES}: {config[key]}"
                    )

        brute_force_max_n = config.get('brute_force_max_n')
        if isinstance(brute_force_max_n, int) and brute_force_max_n > 16:
            self._warnings.append(
                f"QUASILIN_BRUTE_FORCE_MAX_N={brute_force_max_n} 时定义法枚举可能非常慢"
            )

        if 'prop2_max_support' in config:
            self.validate_positive_int(config['prop2_max_support'], 'QUASILIN_PROP2_MAX_SUPPORT')

        if 'confidence_lambda' in config:
            value = config['confidence_lambda']
            if self.validate_range(value, 0.0, 0.5, 'QUASILIN_CONFIDENCE_LAMBDA') and value == 0:
                self._errors.append("QUASILIN_CONFIDENCE_LAMBDA 必须大于 0")

        if 'enumeration_limit' in config:
            self.validate_non_negative_int(config['enumeration_limit'], 'QUASILIN_ENUMERATION_LIMIT')

        # 记录警告
        for warning in self._warnings:
            logger.warning(warning)

        return self._errors

    def get_errors(self) -> List[str]:
        """获取所有错误消息"""
        return self._errors

    def get_warnings(self) -> List[str]:
        """获取所有警告消息"""
        return self._warnings
