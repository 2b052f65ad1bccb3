from collections.abc import Iterable, Mapping

import numpy as np

from ranklab.errors import DomainError, TruncationMismatchError


class QSeries:
    """Truncated power series in q with exact integer coefficients.

    Coefficients live in a read-only numpy object array of python ints,
    indexed by the exponent of q. Exponents above `trunc_order` are unknown,
    so no operation ever reads or produces them.
    """

    __slots__ = ("_coeffs", "trunc_order")

    def __init__(self, coeffs: Iterable[int] | np.ndarray, trunc_order: int) -> None:
        if trunc_order < 0:
            raise DomainError(f"truncation order must be >= 0, got {trunc_order}")

        arr = np.array([int(c) for c in coeffs], dtype=object)
        if arr.shape != (trunc_order + 1,):
            raise DomainError(
                f"expected {trunc_order + 1} coefficients, got {arr.shape[0]}"
            )
        arr.flags.writeable = False
        self._coeffs = arr
        self.trunc_order = trunc_order

    @classmethod
    def _wrap(cls, arr: np.ndarray, trunc_order: int) -> "QSeries":
        # skips the per-element int() pass for arrays built internally
        obj = cls.__new__(cls)
        arr.flags.writeable = False
        obj._coeffs = arr
        obj.trunc_order = trunc_order
        return obj

    # constructors

    @classmethod
    def zero(cls, trunc_order: int) -> "QSeries":
        return cls._wrap(_zeros(trunc_order), trunc_order)

    @classmethod
    def one(cls, trunc_order: int) -> "QSeries":
        return cls.monomial(0, trunc_order)

    @classmethod
    def monomial(cls, k: int, trunc_order: int, coeff: int = 1) -> "QSeries":
        arr = _zeros(trunc_order)
        if 0 <= k <= trunc_order:
            arr[k] = coeff
        return cls._wrap(arr, trunc_order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], trunc_order: int) -> "QSeries":
        """Builds a series from {exponent: coefficient}; exponents above the
        truncation order are dropped."""
        arr = _zeros(trunc_order)
        for k, c in terms.items():
            if k < 0:
                raise DomainError(f"negative q-exponent {k}")
            if k <= trunc_order:
                arr[k] += int(c)
        return cls._wrap(arr, trunc_order)

    @classmethod
    def geometric(cls, step: int, trunc_order: int, start: int = 0) -> "QSeries":
        """sum_{j >= 0} q^(start + step*j), i.e. q^start / (1 - q^step)"""
        if step < 1:
            raise DomainError(f"geometric step must be >= 1, got {step}")
        arr = _zeros(trunc_order)
        if start <= trunc_order:
            arr[start::step] = 1
        return cls._wrap(arr, trunc_order)

    # accessors

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    def __getitem__(self, k: int) -> int:
        if not 0 <= k <= self.trunc_order:
            raise IndexError(f"q-exponent {k} outside 0..{self.trunc_order}")
        return self._coeffs[k]

    def __len__(self) -> int:
        return self.trunc_order + 1

    def __iter__(self):
        return iter(self._coeffs)

    def tolist(self) -> list[int]:
        return list(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc_order == other.trunc_order and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.trunc_order, tuple(self._coeffs)))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.trunc_order >= 8 else ""
        return f"QSeries([{head}{tail}], trunc_order={self.trunc_order})"

    # arithmetic

    def _check_order(self, other: "QSeries") -> None:
        if self.trunc_order != other.trunc_order:
            raise TruncationMismatchError(self.trunc_order, other.trunc_order)

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check_order(other)
        return QSeries._wrap(self._coeffs + other._coeffs, self.trunc_order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._check_order(other)
        return QSeries._wrap(self._coeffs - other._coeffs, self.trunc_order)

    def __neg__(self) -> "QSeries":
        return QSeries._wrap(-self._coeffs, self.trunc_order)

    def scale(self, c: int) -> "QSeries":
        return QSeries._wrap(self._coeffs * int(c), self.trunc_order)

    def __mul__(self, other: "QSeries") -> "QSeries":
        return qs_mul(self, other)

    def shift(self, k: int) -> "QSeries":
        """multiplies by q^k (k >= 0), keeping the truncation order"""
        if k < 0:
            raise DomainError(f"cannot shift by negative power q^{k}")
        arr = _zeros(self.trunc_order)
        if k <= self.trunc_order:
            arr[k:] = self._coeffs[: self.trunc_order + 1 - k]
        return QSeries._wrap(arr, self.trunc_order)

    def truncate(self, trunc_order: int) -> "QSeries":
        if trunc_order > self.trunc_order:
            raise DomainError(
                f"cannot raise truncation order {self.trunc_order} to {trunc_order}"
            )
        return QSeries._wrap(self._coeffs[: trunc_order + 1].copy(), trunc_order)

    def invert(self) -> "QSeries":
        return qs_invert(self)

    def divide_by_factor(self, j: int) -> "QSeries":
        """divides by (1 - q^j), j >= 1"""
        if j < 1:
            raise DomainError(f"1 - q^{j} is not a unit in the truncated ring")
        arr = self._coeffs.copy()
        for n in range(j, self.trunc_order + 1):
            arr[n] += arr[n - j]
        return QSeries._wrap(arr, self.trunc_order)

    def times_factor(self, j: int) -> "QSeries":
        """multiplies by (1 - q^j)"""
        return self - self.shift(j)


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    a._check_order(b)
    N = a.trunc_order
    out = _zeros(N)
    bc = b.coeffs
    for i in np.flatnonzero(a.coeffs):
        out[i:] += a.coeffs[i] * bc[: N + 1 - i]
    return QSeries._wrap(out, N)


def qs_invert(a: QSeries) -> QSeries:
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise DomainError(f"constant term {c0} is not a unit")

    N = a.trunc_order
    support = [int(i) for i in np.flatnonzero(a.coeffs) if i > 0]
    out = _zeros(N)
    out[0] = c0
    for n in range(1, N + 1):
        acc = 0
        for i in support:
            if i > n:
                break
            acc += a.coeffs[i] * out[n - i]
        out[n] = -c0 * acc
    return QSeries._wrap(out, N)


def _zeros(trunc_order: int) -> np.ndarray:
    arr = np.empty(trunc_order + 1, dtype=object)
    arr.fill(0)
    return arr
