"""
接口模块

目前只有命令行接口。
"""
