__all__ = ["HiddenPrints", "Profiler"]

from .hidden_prints import HiddenPrints
from .profiler import Profiler
