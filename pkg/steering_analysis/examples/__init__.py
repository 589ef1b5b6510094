# Examples模块初始化
"""
示例脚本模块

提供使用 steering_analysis 模块的示例代码
"""
