"""
运行配置
========
命令行的全局选项，统一在这里校验。不读取环境变量。
"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from config import EXECUTION_CONFIG


class ToolkitSettings(BaseModel):
    """运行配置"""

    model_config = ConfigDict(extra='ignore', frozen=True)

    # 输出配置
    output_format: Literal["csv", "json"] = "csv"
    out: Optional[str] = None

    # 计算配置
    workers: int = Field(default=EXECUTION_CONFIG['workers'], ge=1, le=256)
    sieve_limit: Optional[int] = Field(default=None, ge=2)

    # 日志
    verbose: bool = False
