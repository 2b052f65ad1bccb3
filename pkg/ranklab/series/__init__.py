__all__ = [
    "QSeries",
    "ZQSeries",
    "qs_mul",
    "qs_invert",
    "zqs_mul",
    "zqs_invert_factor",
    "zqs_eval_root_of_unity",
]

from .qseries import QSeries, qs_mul, qs_invert
from .zqseries import ZQSeries, zqs_mul, zqs_invert_factor, zqs_eval_root_of_unity
