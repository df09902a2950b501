"""椭圆模块"""

from .ellipse_solver import (
    EllipseStatus,
    EllipseParams,
    EllipsePoint,
    EllipseOutcome,
    default_m_max,
    required_limit,
    solve_ellipse,
    ellipse_point,
    ellipse_series,
)

__all__ = [
    'EllipseStatus',
    'EllipseParams',
    'EllipsePoint',
    'EllipseOutcome',
    'default_m_max',
    'required_limit',
    'solve_ellipse',
    'ellipse_point',
    'ellipse_series',
]
