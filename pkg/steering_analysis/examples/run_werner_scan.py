"""
Werner 族可导向阈值扫描示例脚本

在 η ∈ [0.5, 0.9] 上用 LHS 可行性判定二分，夹出 Z/X 测量下的阈值（理论值 1/√2）。
"""

import sys
import time

try:
    from steering_analysis.config import WERNER_SCAN_CONFIG
    from steering_analysis.pipeline import werner_transition
    from steering_analysis.utils import setup_logging
except ImportError as e:
    print("❌ 导入失败！请确保从项目根目录运行：")
    print("   python -m steering_analysis.examples.run_werner_scan")
    print(f"   错误详情: {e}")
    sys.exit(1)


def main():
    setup_logging("INFO")
    start = time.perf_counter()
    try:
        result = werner_transition(
            WERNER_SCAN_CONFIG['low'],
            WERNER_SCAN_CONFIG['high'],
            WERNER_SCAN_CONFIG['resolution'],
        )
    except ValueError as e:
        print(f"❌ 扫描失败: {e}")
        sys.exit(1)

    print("\n📊 Werner 扫描结果")
    for item in result.evaluations:
        print(f"   η = {item['visibility']:.4f} → {item['status']}")
    print(f"\n✅ 阈值位于 [{result.low:.4f}, {result.high:.4f}]（1/√2 ≈ 0.7071）")
    print(f"   用时 {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
