"""Dense matrices over Python integers.

Everything here is integer-exact. Determinant and rank use fraction-free
(Bareiss) elimination: after eliminating with pivot ``p`` the previous pivot
divides every updated entry exactly, so entries stay integers and never
grow beyond the size of a minor. Pivots are the first nonzero entry found
scanning down the column, not the largest.
"""

from __future__ import annotations

from operator import index as _as_int
from typing import Iterable, List, Sequence, Tuple

from .errors import DimensionError, ParameterError


class ExactMatrix:
    """Immutable integer matrix, row-major."""

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(_as_int(x) for x in r) for r in rows)
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise DimensionError("ragged rows")
        self._rows: Tuple[Tuple[int, ...], ...] = data
        self.rows = len(data)
        self.cols = ncols

    @classmethod
    def identity(cls, m: int) -> "ExactMatrix":
        return cls.scalar(1, m)

    @classmethod
    def scalar(cls, c: int, m: int) -> "ExactMatrix":
        return cls([[c if i == j else 0 for j in range(m)] for i in range(m)])

    @classmethod
    def zeros(cls, rows: int, cols: int = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def ones(cls, rows: int, cols: int = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls([[1] * cols for _ in range(rows)])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self._rows[i]

    def tolist(self) -> List[List[int]]:
        return [list(r) for r in self._rows]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({[list(r) for r in self._rows]!r})"

    def _same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-x for x in r] for r in self._rows])

    def __mul__(self, c: int) -> "ExactMatrix":
        c = _as_int(c)
        return ExactMatrix([[c * x for x in r] for r in self._rows])

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return multiply(self, other)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self._rows)) if self.rows else ExactMatrix([])

    def minor_matrix(self, i: int, j: int) -> "ExactMatrix":
        """Copy with row ``i`` and column ``j`` deleted."""
        return ExactMatrix(
            [r[:j] + r[j + 1:] for t, r in enumerate(self._rows) if t != i]
        )

    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(r) for r in self._rows)

    def col_sums(self) -> Tuple[int, ...]:
        return tuple(sum(c) for c in zip(*self._rows))

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self._rows[i][i] for i in range(min(self.rows, self.cols)))


def _require_square(a: ExactMatrix, what: str) -> None:
    if not a.is_square:
        raise DimensionError(f"{what} needs a square matrix, got {a.rows}x{a.cols}")


def multiply(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    brows = b._rows
    width = b.cols
    out = []
    # Accumulate scaled rows of b; adjacency-type inputs are mostly zeros.
    for r in a._rows:
        acc = [0] * width
        for j, x in enumerate(r):
            if x:
                bj = brows[j]
                if x == 1:
                    acc = [s + y for s, y in zip(acc, bj)]
                else:
                    acc = [s + x * y for s, y in zip(acc, bj)]
        out.append(acc)
    return ExactMatrix(out) if out else ExactMatrix.zeros(0, width)


def power(a: ExactMatrix, e: int) -> ExactMatrix:
    """``a`` to the ``e``-th power by repeated multiplication (``a**0`` is I)."""
    _require_square(a, "power")
    if e < 0:
        raise ParameterError(f"exponent must be >= 0, got {e}")
    result = ExactMatrix.identity(a.rows)
    for _ in range(e):
        result = multiply(result, a)
    return result


def powers(a: ExactMatrix, top: int) -> List[ExactMatrix]:
    """[I, a, a^2, ..., a^top]."""
    _require_square(a, "powers")
    out = [ExactMatrix.identity(a.rows)]
    for _ in range(top):
        out.append(multiply(out[-1], a))
    return out


def trace(a: ExactMatrix) -> int:
    _require_square(a, "trace")
    return sum(a.diagonal())


def determinant(a: ExactMatrix) -> int:
    """Exact determinant by Bareiss elimination."""
    _require_square(a, "determinant")
    rows = [list(r) for r in a]
    if not rows:
        return 1
    sign = 1
    prev = 1
    while len(rows) > 1:
        for t, r in enumerate(rows):
            if r[0]:
                break
        else:
            return 0
        if t:
            rows[0], rows[t] = rows[t], rows[0]
            sign = -sign
        head = rows[0]
        p = head[0]
        tail = head[1:]
        rows = [
            [(p * x - r[0] * y) // prev for x, y in zip(r[1:], tail)]
            for r in rows[1:]
        ]
        prev = p
    return sign * rows[0][0]


def rank(a: ExactMatrix) -> int:
    """Rank over the rationals by Bareiss elimination with column skipping."""
    rows = [list(r) for r in a]
    r_count = 0
    prev = 1
    while rows and rows[0]:
        for t, r in enumerate(rows):
            if r[0]:
                break
        else:
            # zero column among the remaining rows
            rows = [r[1:] for r in rows]
            continue
        rows[0], rows[t] = rows[t], rows[0]
        head = rows[0]
        p = head[0]
        tail = head[1:]
        rows = [
            [(p * x - r[0] * y) // prev for x, y in zip(r[1:], tail)]
            for r in rows[1:]
        ]
        prev = p
        r_count += 1
    return r_count


def nullity(a: ExactMatrix) -> int:
    return a.cols - rank(a)


def eval_poly(coeffs: Sequence[int], a: ExactMatrix) -> ExactMatrix:
    """sum(coeffs[i] * a**i), by Horner's rule. ``coeffs`` is lowest degree first."""
    _require_square(a, "eval_poly")
    m = a.rows
    if not coeffs:
        return ExactMatrix.zeros(m)
    result = ExactMatrix.scalar(coeffs[-1], m)
    for c in reversed(coeffs[:-1]):
        result = multiply(result, a) + ExactMatrix.scalar(c, m)
    return result


def poly_mul(p: Sequence[int], q: Sequence[int]) -> List[int]:
    """Product of two integer polynomials, coefficients lowest degree first."""
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out
