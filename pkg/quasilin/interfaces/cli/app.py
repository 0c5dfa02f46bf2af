#!/usr/bin/env python3
"""
quasilin 命令行工具

子命令:
- spectrum: Walsh 谱
- exact: 精确线性结构与支撑集诊断
- sample: 模拟 BV 运行
- algorithm1 (别名 search): 迭代采样搜索准线性结构
- profile: 差分均匀度与高概率差分
- check: 逐项核对恒等式（n ≤ 12）

使用示例:
    quasilin exact --anf 'x1+x2+x1x2+x2x3+x1x3' -n 3
    quasilin spectrum --fixture paper-eq37
    quasilin algorithm1 --fixture bent-n4 --seed 7 --audit
"""

import argparse
import json
import sys
from typing import List, NoReturn, Optional

from quasilin.config import settings
from quasilin.core.boolfn import MAX_VARIABLES, MIN_VARIABLES
from quasilin.interfaces.cli.commands import COMMANDS
from quasilin.interfaces.cli.errors import (
    EXIT_INPUT_ERROR,
    EXIT_INTERRUPTED,
    EXIT_OK,
    CliUsageError,
    ErrorHandler,
)
from quasilin.interfaces.cli.sources import FIXTURE_HELP
from quasilin.utils.logging_config import setup_logging_from_settings

FORMAT_EPILOG = """
函数来源（四选一）:
  --file PATH        真值表文件。第一行 "n=<整数>"；第二行为 2^n 个 '0'/'1'
                     字符（下标 x 按 x1…xn 解释，x1 为最高位），或 "hex:" 后接
                     ceil(2^n/4) 个十六进制数字（最高半字节对应最小下标，尾部补 0）
  --anf TEXT -n N    ANF 表达式，语法:
                       expression := term ('+' term)*
                       term       := '0' | '1' | factor+
                       factor     := 'x' integer        (1 <= integer <= N)
                     忽略空白；重复的单项式按异或相互抵消
  --fixture NAME     内置函数: {fixtures}
  --random SEED -n N 随机函数

报告以 JSON 写到标准输出，日志写到标准错误；输入错误退出码为 2。
""".format(fixtures=FIXTURE_HELP)


class QuasilinArgumentParser(argparse.ArgumentParser):
    """解析失败时抛出异常而不是直接退出，由 main 统一输出一行诊断"""

    def error(self, message: str) -> NoReturn:
        raise CliUsageError(message)


def _int_type(name: str, minimum: int, maximum: Optional[int] = None):
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name}必须是整数: {text!r}")
        if value < minimum or (maximum is not None and value > maximum):
            if maximum is None:
                raise argparse.ArgumentTypeError(f"{name}不能小于 {minimum}: {value}")
            raise argparse.ArgumentTypeError(f"{name}必须在 [{minimum}, {maximum}] 内: {value}")
        return value
    return convert


def _epsilon_type(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"ε 必须是数字: {text!r}")
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"ε 必须在 (0, 1] 内: {value}")
    return value


def _add_source_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--file', help='真值表文件路径')
    group.add_argument('--anf', help="ANF 表达式，例如 'x1+x2+x1x2'")
    group.add_argument('--fixture', help=f'内置函数名称: {FIXTURE_HELP}')
    group.add_argument(
        '--random',
        type=_int_type("随机函数种子", 0),
        metavar='SEED',
        help='按种子生成随机函数'
    )
    parser.add_argument(
        '-n',
        type=_int_type("变量个数", MIN_VARIABLES, MAX_VARIABLES),
        help='变量个数（--anf 与 --random 必需）'
    )


def _add_seed_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--seed',
        type=_int_type("种子", 0),
        default=None,
        help=f'采样种子 (默认: {settings.default_seed})'
    )


def build_parser() -> argparse.ArgumentParser:
    """构造参数解析器"""
    parser = QuasilinArgumentParser(
        prog='quasilin',
        description='布尔函数的线性结构与准线性结构分析',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=FORMAT_EPILOG,
    )
    parser.add_argument(
        '-v', '--verbose',
        action='count',
        default=0,
        help='详细日志（-v 为 INFO，-vv 为 DEBUG）'
    )
    parser.add_argument(
        '--print-config',
        action='store_true',
        help='输出当前配置后退出'
    )

    subparsers = parser.add_subparsers(dest='command', help='可用命令')

    common = dict(formatter_class=argparse.RawDescriptionHelpFormatter, epilog=FORMAT_EPILOG)

    spectrum_parser = subparsers.add_parser('spectrum', help='Walsh 谱', **common)
    _add_source_arguments(spectrum_parser)
    spectrum_parser.add_argument(
        '--sort',
        choices=['index', 'magnitude'],
        default='index',
        help='按下标或按 |Ŵ| 降序排列 (默认: index)'
    )
    spectrum_parser.add_argument(
        '--support-only',
        action='store_true',
        help='只列出 Ŵ(w) ≠ 0 的 w'
    )
    spectrum_parser.set_defaults(command_name='spectrum')

    exact_parser = subparsers.add_parser('exact', help='精确线性结构', **common)
    _add_source_arguments(exact_parser)
    exact_parser.set_defaults(command_name='exact')

    sample_parser = subparsers.add_parser('sample', help='模拟 BV 运行', **common)
    _add_source_arguments(sample_parser)
    _add_seed_argument(sample_parser)
    sample_parser.add_argument(
        '--count',
        type=_int_type("样本数", 1),
        default=10,
        help='样本数 (默认: 10)'
    )
    sample_parser.set_defaults(command_name='sample')

    search_parser = subparsers.add_parser(
        'algorithm1',
        aliases=['search'],
        help='迭代采样搜索准线性结构',
        **common
    )
    _add_source_arguments(search_parser)
    _add_seed_argument(search_parser)
    search_parser.add_argument(
        '--rounds',
        type=_int_type("轮数", 1),
        default=None,
        help='轮数上限 r (默认: n²)'
    )
    search_parser.add_argument(
        '--epsilon',
        type=_epsilon_type,
        default=None,
        help=f'精度 ε (默认: m^(-λ)，λ = {settings.confidence_lambda})'
    )
    search_parser.add_argument(
        '--audit',
        action='store_true',
        help=f'逐个核对报告的候选向量（n ≤ {settings.brute_force_max_n}）'
    )
    search_parser.set_defaults(command_name='algorithm1')

    profile_parser = subparsers.add_parser('profile', help='差分均匀度', **common)
    _add_source_arguments(profile_parser)
    profile_parser.add_argument(
        '--top',
        type=_int_type("列出的差分个数", 0),
        default=10,
        help='列出概率最大的差分个数 (默认: 10)'
    )
    profile_parser.set_defaults(command_name='profile')

    check_parser = subparsers.add_parser(
        'check',
        help=f'逐项核对恒等式（n ≤ {settings.check_max_n}）',
        **common
    )
    _add_source_arguments(check_parser)
    check_parser.set_defaults(command_name='check')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    主函数

    参数:
        argv: 参数列表，默认取 sys.argv[1:]

    返回:
        退出码
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliUsageError as e:
        print(f"quasilin: error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    if args.print_config:
        print(json.dumps(settings.to_dict(), ensure_ascii=False, indent=2, sort_keys=True))
        return EXIT_OK

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        # 日志级别和日志文件都来自配置，先验证再初始化
        settings.validate()
        setup_logging_from_settings(args.verbose)
        output = COMMANDS[args.command_name](args)
    except KeyboardInterrupt:
        return EXIT_INTERRUPTED
    except Exception as e:
        print(ErrorHandler.handle(e), file=sys.stderr)
        return ErrorHandler.exit_code(e)

    sys.stdout.write(output + "\n")
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
