import os
import sys


class HiddenPrints:
    """silences progress lines on stdout while `enabled`"""

    def __init__(self, enabled: bool = True) -> None:
        self.enabled = enabled

    def __enter__(self):
        if self.enabled:
            self._original_stdout = sys.stdout
            sys.stdout = open(os.devnull, "w")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.enabled:
            sys.stdout.close()
            sys.stdout = self._original_stdout
