"""
脚本目录

包含恒等式、统计和性能验证脚本。
"""
