"""
全局配置
"""

import os

# 路径配置
BASE_DIR = os.path.dirname(os.path.abspath(__file__))
GOLDEN_DIR = os.path.join(BASE_DIR, "tests", "golden")

# 筛法配置
SIEVE_CONFIG = {
    'segment_threshold': 1 << 22,        # 超过该上限改用分段筛
    'segment_size': 1 << 20,             # 每段覆盖的整数个数
    'max_limit': 1_000_000_000,          # 素数表上限，超过直接拒绝
}

# 估计公式配置
ESTIMATE_CONFIG = {
    'twin_prime_constant': 0.6601618158,  # 孪生素数常数 π₂
}

# 椭圆搜索配置
ELLIPSE_CONFIG = {
    'm_max_factor': 10,                   # m_max = ⌈factor·k·ln²(2n)⌉
    'coprime_m': False,                   # 是否要求 gcd(m, k) = 1
}

# 自相关配置
AUTOCORR_CONFIG = {
    'fft_threshold': 4096,                # 序列长度超过该值时默认走FFT
    'fft_tolerance': 1e-9,                # FFT与直接计算的允许误差
}

# 峰值与不等式统计
PEAK_CONFIG = {
    'default_offsets': (-10, -8, -6, -4, -2, 2, 4, 6, 8, 10),
}

CENSUS_CONFIG = {
    'default_modulus': 30,
}

# 输出配置
OUTPUT_CONFIG = {
    'significant_digits': 12,
    'json_indent': True,
}

# 并行配置
EXECUTION_CONFIG = {
    'workers': 1,
    'min_chunk': 256,                     # 单个任务最少处理的元素数
}
