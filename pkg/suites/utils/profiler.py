import cProfile
import io
import pstats
import sys
from pstats import SortKey


class Profiler:
    """Profiles a suite run while `enabled`, then prints the `amount` most
    expensive calls by cumulative time to stderr, keeping stdout for
    progress lines."""

    def __init__(self, enabled: bool = True, amount: int = 20) -> None:
        self.enabled = enabled
        self.amount = amount
        self.pr = cProfile.Profile()

    def __enter__(self):
        if self.enabled:
            self.pr.enable()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if not self.enabled:
            return
        self.pr.disable()
        s = io.StringIO()
        ps = pstats.Stats(self.pr, stream=s).sort_stats(SortKey.CUMULATIVE)
        ps.print_stats(self.amount)
        print(s.getvalue(), file=sys.stderr, flush=True)
