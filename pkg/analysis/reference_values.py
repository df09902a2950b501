"""
参考数值
========
已发表的 g(n) 表、椭圆表及相关数值，用于回归校验。
原样录入，包括已知的笔误；笔误的处理见 reproduction.py
"""

# n ≤ 188 的 g(n)
COUNTS_TO_188 = {
    4: 1, 6: 1, 8: 1, 10: 2, 12: 1, 14: 2, 16: 2, 18: 2, 20: 2, 22: 3,
    24: 3, 26: 3, 28: 2, 30: 3, 32: 2, 34: 4, 36: 4, 38: 2, 40: 3, 42: 4,
    44: 3, 46: 4, 48: 5, 50: 4, 52: 3, 54: 5, 56: 3, 58: 4, 60: 6, 62: 3,
    64: 5, 66: 6, 68: 2, 70: 5, 72: 6, 74: 5, 76: 5, 78: 7, 80: 4, 82: 5,
    84: 8, 86: 5, 88: 4, 90: 9, 92: 4, 94: 5, 96: 7, 98: 3, 100: 6, 102: 8,
    104: 5, 106: 6, 108: 8, 110: 6, 112: 7, 114: 10, 116: 6, 118: 6, 120: 12, 122: 4,
    124: 5, 126: 10, 128: 3, 130: 7, 132: 9, 134: 6, 136: 5, 138: 8, 140: 7, 142: 8,
    144: 11, 146: 6, 148: 5, 150: 12, 152: 4, 154: 8, 156: 11, 158: 5, 160: 8, 162: 10,
    164: 5, 166: 6, 168: 13, 170: 9, 172: 6, 174: 11, 176: 7, 178: 7, 180: 14, 182: 6,
    184: 8, 186: 13, 188: 5,
}

# n ≤ 56 的子表
SMALL_COUNTS = {n: g for n, g in COUNTS_TO_188.items() if n <= 56}

# 素数阶乘附近的 g(n)，偏移 −10..+8
PRIMORIAL_NEIGHBOURHOODS = {
    30030: {
        30020: 318, 30022: 240, 30024: 470, 30026: 223, 30028: 237,
        30030: 905, 30032: 225, 30034: 224, 30036: 466, 30038: 232,
    },
    60060: {
        60050: 524, 60052: 397, 60054: 798, 60056: 406, 60058: 410,
        60060: 1564, 60062: 387, 60064: 394, 60066: 846, 60068: 400,
    },
    90090: {
        90080: 741, 90082: 577, 90084: 1119, 90086: 578, 90088: 552,
        90090: 2135, 90092: 552, 90094: 547, 90096: 1110, 90098: 594,
    },
    1021020: {
        1021010: 5567, 1021012: 4163, 1021014: 8402, 1021016: 4518, 1021018: 4127,
        1021020: 17075, 1021022: 4401, 1021024: 4140, 1021026: 8228, 1021028: 4179,
    },
}

NEIGHBOURHOOD_OFFSETS = (-10, -8, -6, -4, -2, 2, 4, 6, 8)

# n < 2000 内 g(n) 的最大值
MAX_BELOW_2000 = {'n': 1890, 'g': 91}

# 自相关旁瓣阈值
SIDELOBE_THRESHOLD = 0.10
SIDELOBE_RANGE_END = 2000          # 读作 n ∈ [4, 2000]
SIDELOBE_SEQUENCE_LENGTH = 2000    # 读作序列长度 2000

# 椭圆表，行为 (2n, 2n−m, 2n+km, m, 4n+(k−1)m)
ELLIPSE_K7 = [
    (4, 3, 11, 1, 14),
    (6, 5, 13, 1, 18),
    (8, 5, 29, 3, 34),
    (10, 7, 31, 3, 38),
    (12, 11, 19, 1, 30),
    (16, 13, 37, 3, 50),
    (18, 13, 53, 5, 66),
    (20, 17, 41, 3, 58),
    (22, 19, 43, 3, 62),
    (24, 23, 31, 1, 54),
    (26, 23, 47, 3, 70),
    (30, 29, 37, 1, 66),
    (32, 29, 53, 3, 82),
    (34, 19, 139, 15, 158),
]

ELLIPSE_K3 = [
    (4, 3, 7, 1, 10),
    (8, 7, 11, 1, 18),
    (10, 7, 19, 3, 26),
    (14, 13, 17, 1, 30),
    (16, 11, 31, 5, 42),
    (20, 19, 23, 1, 42),
    (22, 19, 31, 3, 50),
    (26, 19, 47, 7, 66),
    (30, 19, 43, 3, 62),
    (32, 29, 41, 3, 70),
    (34, 31, 43, 3, 74),
]

# k=7 表第四列映射后的前14项
MOD4_SEED_K7 = (1, 1, -1, -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, -1)

# 覆盖检查的例外素数
COVERAGE_EXCEPTIONS = {
    6: [],
    30: [],
    210: [],
    420: [233, 251, 277],
    630: [331, 383, 409, 421, 443, 461, 487, 509],
}

# 以 2003 为最大素数时的差值计数
DIFFERENCE_BOUND = 2003
DIFFERENCE_COUNTS = {2: 35, 4: 65, 6: 129}

# 30 与 210 的分拆（按 (较大, 较小) 记录）
PARTITIONS_30 = [(23, 7), (19, 11), (17, 13)]
PARTITIONS_210 = [
    (199, 11), (197, 13), (193, 17), (191, 19), (181, 29), (179, 31), (173, 37),
    (167, 43), (163, 47), (157, 54), (151, 59), (149, 61), (139, 71), (137, 73),
    (131, 79), (127, 83), (113, 97), (109, 101), (107, 103),
]
