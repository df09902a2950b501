"""
异常定义
========
所有领域错误都继承 GoldbachError，命令行据此区分领域错误(退出码1)与用法错误(退出码2)
"""


class GoldbachError(Exception):
    """领域错误基类"""


class InvalidArgumentError(GoldbachError, ValueError):
    """参数不合法（奇数n、n过小、偶数k等）"""


class OutOfRangeError(GoldbachError, IndexError):
    """查询超出素数表范围"""


class PrimorialOverflowError(GoldbachError, OverflowError):
    """素数阶乘超出机器字长"""


class ConjectureViolationError(GoldbachError):
    """找不到哥德巴赫分拆。桌面规模下出现即说明实现有误"""
