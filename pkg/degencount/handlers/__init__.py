"""Handler classes for the command-line subcommands."""

from .approx_handlers import ApproxHandler
from .base import BaseHandler, RunContext
from .count_handlers import CountHandler
from .dtd_handlers import DtdHandler
from .param_handlers import ClassifyHandler, ParamsHandler
from .reduce_handlers import ReduceHandler
from .verify_handlers import VerifyHandler

__all__ = [
    "ApproxHandler",
    "BaseHandler",
    "ClassifyHandler",
    "CountHandler",
    "DtdHandler",
    "ParamsHandler",
    "ReduceHandler",
    "RunContext",
    "VerifyHandler",
]
