"""
并行计算
========
使用线程池按块划分区间，结果按输入顺序拼接
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

from config import EXECUTION_CONFIG

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def split_chunks(items: Sequence[T], workers: int, min_chunk: int = None) -> List[Sequence[T]]:
    """
    把序列切成连续的块

    Args:
        items: 输入序列
        workers: 线程数
        min_chunk: 每块最少元素数

    Returns:
        块列表（保持原顺序）
    """
    min_chunk = min_chunk or EXECUTION_CONFIG['min_chunk']
    n = len(items)
    if n == 0:
        return []

    chunk_count = max(1, min(workers * 4, (n + min_chunk - 1) // min_chunk))
    size = (n + chunk_count - 1) // chunk_count
    return [items[i:i + size] for i in range(0, n, size)]


def parallel_map_chunks(func: Callable[[Sequence[T]], List[R]],
                        items: Sequence[T],
                        workers: int = None,
                        min_chunk: int = None) -> List[R]:
    """
    按块并行执行 func，结果按块顺序展平

    func 接收一个块，返回与块等长（或任意长度）的结果列表。
    workers=1 时在当前线程顺序执行。
    """
    workers = workers or EXECUTION_CONFIG['workers']
    if workers < 1:
        raise ValueError(f"workers={workers} 必须不小于1")

    chunks = split_chunks(items, workers, min_chunk)
    if workers == 1 or len(chunks) <= 1:
        results = [func(chunk) for chunk in chunks]
    else:
        logger.debug("并行计算: %d 块, %d 线程", len(chunks), workers)
        with ThreadPoolExecutor(max_workers=workers) as executor:
            # map 保证结果顺序与提交顺序一致
            results = list(executor.map(func, chunks))

    merged: List[R] = []
    for part in results:
        merged.extend(part)
    return merged


def parallel_reduce_chunks(func: Callable[[Sequence[T]], R],
                           combine: Callable[[R, R], R],
                           items: Sequence[T],
                           workers: int = None,
                           min_chunk: int = None) -> R:
    """
    按块并行计算后归并（如各块的计数数组相加）

    归并按块顺序进行，结果与线程数无关。
    """
    workers = workers or EXECUTION_CONFIG['workers']
    chunks = split_chunks(items, workers, min_chunk)
    if not chunks:
        raise ValueError("输入为空，无法归并")

    if workers == 1 or len(chunks) <= 1:
        parts = [func(chunk) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(func, chunks))

    total = parts[0]
    for part in parts[1:]:
        total = combine(total, part)
    return total
