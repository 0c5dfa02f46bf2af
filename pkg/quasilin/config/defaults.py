"""
配置默认值定义模块

定义所有配置项的默认值。
"""

# ============================================================================
# 日志配置默认值
# ============================================================================

# 日志级别（DEBUG, INFO, WARNING, ERROR, CRITICAL）
DEFAULT_LOG_LEVEL = "WARNING"

# 日志文件路径（空字符串表示不写文件）
DEFAULT_LOG_FILE = ""

# 日志格式：[时间戳] [级别] [模块名] [函数名] - 消息
DEFAULT_LOG_FORMAT = "[%(asctime)s] [%(levelname)s] [%(name)s] [%(funcName)s] - %(message)s"

# 时间格式
DEFAULT_LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


# ============================================================================
# 随机数配置默认值
# ============================================================================

# 未显式指定 --seed 时使用的种子
DEFAULT_SEED = 0


# ============================================================================
# 规模限制默认值
# ============================================================================

# 变量个数上限（真值表 2^24 位）
DEFAULT_MAX_VARIABLES = 24

# 定义法枚举线性结构的变量个数上限（O(4^n)）
DEFAULT_BRUTE_FORCE_MAX_N = 16

# check 子命令逐项核对恒等式的变量个数上限
DEFAULT_CHECK_MAX_N = 12

# 朴素差分统计（O(4^n)）的变量个数上限
DEFAULT_NAIVE_PROFILE_MAX_N = 12

# 两两扫描支撑集时支撑集大小上限
DEFAULT_PROP2_MAX_SUPPORT = 1 << 16


# ============================================================================
# 搜索算法默认值
# ============================================================================

# 置信区间参数 λ ∈ (0, 1/2]，默认 ε = m^{-λ}
DEFAULT_CONFIDENCE_LAMBDA = 0.5

# 报告中完整列出集合元素的上限，超过后只给出基和偏移
DEFAULT_ENUMERATION_LIMIT = 64
