from typing import Any


class RanklabError(Exception):
    """Base class for every error raised by ranklab."""


class DomainError(RanklabError, ValueError):
    pass


class TruncationMismatchError(RanklabError, ValueError):
    def __init__(self, left: int, right: int) -> None:
        super().__init__(
            f"truncation orders differ ({left} vs {right}); "
            "re-truncate explicitly before combining"
        )
        self.left = left
        self.right = right


class OracleLimitError(RanklabError, ValueError):
    def __init__(self, n: int, limit: int) -> None:
        super().__init__(
            f"brute-force enumeration refused for n={n} (limit is {limit})"
        )
        self.n = n
        self.limit = limit


class PoleProximityError(RanklabError, ArithmeticError):
    def __init__(self, what: str, modulus: Any, guard: float) -> None:
        super().__init__(f"{what}: modulus {modulus} is below pole guard {guard}")
        self.modulus = modulus
        self.guard = guard


class PrecisionError(RanklabError, ArithmeticError):
    pass


class QuadratureError(RanklabError, ArithmeticError):
    def __init__(self, message: str, required_truncation: float | None = None) -> None:
        super().__init__(message)
        self.required_truncation = required_truncation


class IdentityMismatchError(RanklabError, AssertionError):
    def __init__(self, check: str, deviation: Any, witness: dict[str, Any]) -> None:
        super().__init__(f"{check}: deviation {deviation} at {witness}")
        self.check = check
        self.deviation = deviation
        self.witness = witness


class UsageError(RanklabError):
    pass
