"""
受限相对熵导向量示例脚本

对几个可见度的 Werner 集合求 R_S^R 的认证区间、上界链与到 LHS 集合的距离上界。
"""

import sys

try:
    from steering_analysis.core.quantifiers import (
        lhs_proximity_upper_bound,
        restricted_res,
        restricted_upper_bound,
    )
    from steering_analysis.pipeline import werner_assemblage
    from steering_analysis.utils import setup_logging
except ImportError as e:
    print("❌ 导入失败！请确保从项目根目录运行：")
    print("   python -m steering_analysis.examples.run_restricted_res")
    print(f"   错误详情: {e}")
    sys.exit(1)


# 演示用的缩减求解配置
DEMO_CONFIG = {
    'outer_iters': 50,
    'final_inner_iters': 2000,
}


def main():
    setup_logging("WARNING")
    for eta in (0.5, 0.8, 1.0):
        assemblage = werner_assemblage(eta)
        interval = restricted_res(assemblage, DEMO_CONFIG)
        chain = restricted_upper_bound(assemblage)
        proximity = lhs_proximity_upper_bound(assemblage)
        print(f"\n🔍 η = {eta}")
        print(f"   R_S^R ∈ [{interval.lo:.5f}, {interval.hi:.5f}]")
        for layer in chain.to_dict()['layers']:
            print(f"   ≤ {layer['label']}: {layer['value']:.5f}")
        print(f"   近 LHS 连续性上界: {proximity:.5f}")


if __name__ == "__main__":
    main()
