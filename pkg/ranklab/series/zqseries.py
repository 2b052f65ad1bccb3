from collections.abc import Mapping

import numpy as np
from mpmath import mp

from ranklab.errors import DomainError, TruncationMismatchError
from .qseries import QSeries


class ZQSeries:
    """Truncated series in q whose coefficients are Laurent polynomials in z.

    Stored densely as a numpy object array of shape (N+1, 2W+1): row n holds
    the coefficient of q^n, column m+W the coefficient of z^m. W is a
    storage width only; `band(n)` reports the actual support of row n.
    """

    __slots__ = ("_coeffs", "trunc_order", "width")

    def __init__(self, coeffs: np.ndarray, trunc_order: int) -> None:
        arr = np.array(coeffs, dtype=object)
        if arr.ndim != 2 or arr.shape[0] != trunc_order + 1 or arr.shape[1] % 2 != 1:
            raise DomainError(
                f"coefficient array of shape {arr.shape} does not fit "
                f"truncation order {trunc_order} with an odd z-width"
            )
        arr = np.vectorize(int, otypes=[object])(arr) if arr.size else arr
        self._set(arr, trunc_order)

    def _set(self, arr: np.ndarray, trunc_order: int) -> None:
        arr.flags.writeable = False
        self._coeffs = arr
        self.trunc_order = trunc_order
        self.width = arr.shape[1] // 2

    @classmethod
    def _wrap(cls, arr: np.ndarray, trunc_order: int) -> "ZQSeries":
        obj = cls.__new__(cls)
        obj._set(arr, trunc_order)
        return obj

    # constructors

    @classmethod
    def zero(cls, trunc_order: int, width: int = 0) -> "ZQSeries":
        return cls._wrap(_zeros(trunc_order, width), trunc_order)

    @classmethod
    def one(cls, trunc_order: int) -> "ZQSeries":
        return cls.from_terms({(0, 0): 1}, trunc_order)

    @classmethod
    def from_terms(
        cls, terms: Mapping[tuple[int, int], int], trunc_order: int
    ) -> "ZQSeries":
        """Builds a series from {(z-exponent, q-exponent): coefficient}; terms
        above the truncation order are dropped."""
        kept = {(m, n): c for (m, n), c in terms.items() if n <= trunc_order}
        if any(n < 0 for _, n in kept):
            raise DomainError("negative q-exponent")
        width = max((abs(m) for m, _ in kept), default=0)
        arr = _zeros(trunc_order, width)
        for (m, n), c in kept.items():
            arr[n, m + width] += int(c)
        return cls._wrap(arr, trunc_order)

    @classmethod
    def from_qseries(cls, a: QSeries) -> "ZQSeries":
        """embeds a z-free series"""
        arr = _zeros(a.trunc_order, 0)
        arr[:, 0] = a.coeffs
        return cls._wrap(arr, a.trunc_order)

    # accessors

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    def coeff(self, m: int, n: int) -> int:
        if not 0 <= n <= self.trunc_order:
            raise IndexError(f"q-exponent {n} outside 0..{self.trunc_order}")
        if abs(m) > self.width:
            return 0
        return self._coeffs[n, m + self.width]

    def band(self, n: int) -> int:
        """largest |m| with a nonzero coefficient of z^m q^n (-1 if the row is
        zero)"""
        nz = np.flatnonzero(self._coeffs[n])
        if nz.size == 0:
            return -1
        return int(max(abs(nz[0] - self.width), abs(nz[-1] - self.width)))

    def z_coefficient(self, m: int) -> QSeries:
        """the q-series multiplying z^m"""
        if abs(m) > self.width:
            return QSeries.zero(self.trunc_order)
        return QSeries._wrap(self._coeffs[:, m + self.width].copy(), self.trunc_order)

    def z_free(self) -> QSeries:
        return self.z_coefficient(0)

    def column_sum(self) -> QSeries:
        """the series at z = 1"""
        return QSeries._wrap(_row_sums(self._coeffs), self.trunc_order)

    def fold(self, t: int) -> np.ndarray:
        """Exact residue fold: entry (n, r) is the sum of c(m, n) over
        m = r (mod t). Shape (N+1, t)."""
        if t < 1:
            raise DomainError(f"modulus must be >= 1, got {t}")
        out = np.empty((self.trunc_order + 1, t), dtype=object)
        out.fill(0)
        for col in range(self._coeffs.shape[1]):
            r = (col - self.width) % t
            out[:, r] += self._coeffs[:, col]
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZQSeries):
            return NotImplemented
        if self.trunc_order != other.trunc_order:
            return False
        w = max(self.width, other.width)
        return bool(np.all(self._padded(w) == other._padded(w)))

    def __hash__(self) -> int:
        t = self.trimmed()
        return hash((t.trunc_order, t.width, tuple(t._coeffs.ravel())))

    def __repr__(self) -> str:
        return f"ZQSeries(trunc_order={self.trunc_order}, width={self.width})"

    # shape helpers

    def _padded(self, width: int) -> np.ndarray:
        if width == self.width:
            return self._coeffs
        pad = width - self.width
        arr = _zeros(self.trunc_order, width)
        arr[:, pad : pad + 2 * self.width + 1] = self._coeffs
        return arr

    def trimmed(self) -> "ZQSeries":
        """drops outer all-zero z columns"""
        nz = np.flatnonzero(np.any(self._coeffs != 0, axis=0))
        if nz.size == 0:
            return ZQSeries.zero(self.trunc_order)
        w = int(max(abs(nz[0] - self.width), abs(nz[-1] - self.width)))
        if w == self.width:
            return self
        lo = self.width - w
        return ZQSeries._wrap(
            self._coeffs[:, lo : lo + 2 * w + 1].copy(), self.trunc_order
        )

    def truncate(self, trunc_order: int) -> "ZQSeries":
        if trunc_order > self.trunc_order:
            raise DomainError(
                f"cannot raise truncation order {self.trunc_order} to {trunc_order}"
            )
        return ZQSeries._wrap(
            self._coeffs[: trunc_order + 1].copy(), trunc_order
        ).trimmed()

    # arithmetic

    def _check_order(self, other: "ZQSeries") -> None:
        if self.trunc_order != other.trunc_order:
            raise TruncationMismatchError(self.trunc_order, other.trunc_order)

    def __add__(self, other: "ZQSeries") -> "ZQSeries":
        self._check_order(other)
        w = max(self.width, other.width)
        return ZQSeries._wrap(self._padded(w) + other._padded(w), self.trunc_order)

    def __sub__(self, other: "ZQSeries") -> "ZQSeries":
        self._check_order(other)
        w = max(self.width, other.width)
        return ZQSeries._wrap(self._padded(w) - other._padded(w), self.trunc_order)

    def __neg__(self) -> "ZQSeries":
        return ZQSeries._wrap(-self._coeffs, self.trunc_order)

    def scale(self, c: int) -> "ZQSeries":
        return ZQSeries._wrap(self._coeffs * int(c), self.trunc_order)

    def __mul__(self, other: "ZQSeries") -> "ZQSeries":
        return zqs_mul(self, other)

    def z_shift(self, s: int) -> "ZQSeries":
        """multiplies by z^s"""
        if s == 0:
            return self
        w = self.width + abs(s)
        arr = _zeros(self.trunc_order, w)
        lo = w - self.width + s
        arr[:, lo : lo + 2 * self.width + 1] = self._coeffs
        return ZQSeries._wrap(arr, self.trunc_order)

    def q_shift(self, k: int) -> "ZQSeries":
        """Multiplies by q^k. A series known modulo q^(N+1) times q^k is known
        modulo q^(N+k+1), so the truncation order grows by k."""
        if k < 0:
            raise DomainError(f"cannot shift by negative power q^{k}")
        arr = _zeros(self.trunc_order + k, self.width)
        arr[k:] = self._coeffs
        return ZQSeries._wrap(arr, self.trunc_order + k)

    def times_factor(self, s: int, j: int) -> "ZQSeries":
        """multiplies by (1 - z^s q^j)"""
        _check_factor(s, j)
        N = self.trunc_order
        shifted = self.z_shift(s)
        moved = _zeros(N, shifted.width)
        if j <= N:
            moved[j:] = shifted.coeffs[: N + 1 - j]
        out = self._padded(shifted.width) - moved
        return ZQSeries._wrap(out, N).trimmed()

    def divide_by_factor(self, s: int, j: int) -> "ZQSeries":
        """divides by (1 - z^s q^j) through b[n] = a[n] + z^s b[n-j]"""
        _check_factor(s, j)
        N = self.trunc_order
        w = self.width + abs(s) * (N // j)
        arr = self._padded(w).copy()
        for n in range(j, N + 1):
            if s == 0:
                arr[n] += arr[n - j]
            elif s > 0:
                arr[n, s:] += arr[n - j, :-s]
            else:
                arr[n, :s] += arr[n - j, -s:]
        return ZQSeries._wrap(arr, N).trimmed()

    def eval_root_of_unity(self, j: int, t: int, dps: int = 30) -> list:
        return zqs_eval_root_of_unity(self, j, t, dps)


def zqs_mul(a: ZQSeries, b: ZQSeries) -> ZQSeries:
    a._check_order(b)
    N = a.trunc_order
    wb = b.width
    out = _zeros(N, a.width + wb)
    bc = b.coeffs
    rows, cols = np.nonzero(a.coeffs != 0)
    for i, ja in zip(rows, cols):
        # z^(ja - Wa) * z^(jb - Wb) lands at column ja + jb of the output
        out[i:, ja : ja + 2 * wb + 1] += a.coeffs[i, ja] * bc[: N + 1 - i]
    return ZQSeries._wrap(out, N).trimmed()


def zqs_invert_factor(s: int, j: int, trunc_order: int) -> ZQSeries:
    """1 / (1 - z^s q^j) truncated at q^trunc_order"""
    return ZQSeries.one(trunc_order).divide_by_factor(s, j)


def zqs_eval_root_of_unity(a: ZQSeries, j: int, t: int, dps: int = 30) -> list:
    """Coefficients of q^n at z = exp(2 pi i j / t), as mpc values.

    Columns are first folded exactly by residue mod t, so only t complex
    multiplications happen per row."""
    if t < 1:
        raise DomainError(f"modulus must be >= 1, got {t}")
    if not 0 <= j < t:
        raise DomainError(f"root index {j} outside 0..{t - 1}")

    folded = a.fold(t)
    with mp.workdps(dps):
        roots = [mp.expjpi(mp.mpf(2 * j * r) / t) for r in range(t)]
        return [
            mp.fsum(mp.mpf(int(c)) * w for c, w in zip(row, roots) if c)
            + mp.mpc(0)
            for row in folded
        ]


def _check_factor(s: int, j: int) -> None:
    if s not in (-1, 0, 1):
        raise DomainError(f"z-exponent must be -1, 0 or 1, got {s}")
    if j < 1:
        raise DomainError(f"1 - z^{s} q^{j} is not a unit in the truncated ring")


def _zeros(trunc_order: int, width: int) -> np.ndarray:
    arr = np.empty((trunc_order + 1, 2 * width + 1), dtype=object)
    arr.fill(0)
    return arr


def _row_sums(arr: np.ndarray) -> np.ndarray:
    out = np.empty(arr.shape[0], dtype=object)
    for n in range(arr.shape[0]):
        out[n] = sum(arr[n], 0)
    return out
