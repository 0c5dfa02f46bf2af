"""
配置加载器模块

负责从环境变量和 .env 文件加载配置。
"""

import os
import logging
from typing import Dict, Optional
from pathlib import Path

from dotenv import dotenv_values

logger = logging.getLogger(__name__)


class ConfigLoader:
    """
    配置加载器类

    从环境变量和 .env 文件加载配置值。.env 中的值会覆盖同名环境变量。

    示例:
        >>> loader = ConfigLoader()
        >>> loader.load_env_file('.env')
        >>> level = loader.get_env('QUASILIN_LOG_LEVEL', 'WARNING')
    """

    def __init__(self):
        """初始化配置加载器"""
        self._env_cache: Dict[str, str] = {}

    def load_env_file(self, path: str = '.env') -> Dict[str, str]:
        """
        从 .env 文件加载环境变量

        参数:
            path: .env 文件路径，默认为当前目录下的 .env

        返回:
            加载的环境变量字典
        """
        env_path = Path(path)

        if not env_path.exists():
            logger.debug(f".env 文件不存在: {path}")
            return {}

        values = dotenv_values(env_path, encoding='utf-8')
        env_vars = {key: value for key, value in values.items() if value is not None}
        for key in values:
            if values[key] is None:
                logger.warning(f".env 文件中 {key} 没有赋值，已忽略")
        os.environ.update(env_vars)

        self._env_cache.update(env_vars)
        logger.info(f"成功从 {path} 加载 {len(env_vars)} 个配置项")
        return env_vars

    def get_env(self, key: str, default: Optional[str] = None) -> str:
        """
        获取环境变量值

        参数:
            key: 环境变量名称
            default: 默认值，如果环境变量不存在则返回此值

        返回:
            环境变量的值或默认值（都不存在时为空字符串）
        """
        value = os.environ.get(key)

        if value is None:
            if default is not None:
                return default
            return ""

        return value

    def get_env_int(self, key: str, default: int) -> int:
        """获取整数类型的环境变量"""
        value = self.get_env(key)
        if not value:
            return default

        try:
            return int(value)
        except ValueError:
            logger.warning(f"环境变量 {key} 的值 '{value}' 不是有效的整数，使用默认值: {default}")
            return default

    def get_env_float(self, key: str, default: float) -> float:
        """获取浮点数类型的环境变量"""
        value = self.get_env(key)
        if not value:
            return default

        try:
            return float(value)
        except ValueError:
            logger.warning(f"环境变量 {key} 的值 '{value}' 不是有效的浮点数，使用默认值: {default}")
            return default
