"""Dense matrices over the three-element field.

Entries are held one per byte in a read-only ``numpy.uint8`` array. All
arithmetic reduces mod 3; the nonzero elements 1 and 2 are their own
inverses, which keeps elimination free of lookup tables.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

Q = 3

_NEG = np.array([0, 2, 1], dtype=np.uint8)


def _as_array(entries) -> np.ndarray:
    a = np.asarray(entries)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d array of field elements, got shape {a.shape}")
    if a.size and not np.issubdtype(a.dtype, np.integer):
        raise TypeError(f"field entries must be integers, got dtype {a.dtype}")
    return np.mod(a.astype(np.int64, copy=False), Q).astype(np.uint8)


class Gf3Matrix:
    """An immutable ``rows x cols`` matrix over GF(3).

    >>> m = Gf3Matrix([[1, 2, 0], [0, 1, 1]])
    >>> m.shape
    (2, 3)
    >>> rank(m)
    2
    """

    __slots__ = ("_a",)

    def __init__(self, entries) -> None:
        if isinstance(entries, Gf3Matrix):
            a = entries._a
        else:
            a = _as_array(entries)
            a.setflags(write=False)
        object.__setattr__(self, "_a", a)

    def __setattr__(self, name, value):
        raise AttributeError("Gf3Matrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Gf3Matrix:
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, size: int) -> Gf3Matrix:
        return cls(np.eye(size, dtype=np.uint8))

    @classmethod
    def ones(cls, rows: int, cols: int) -> Gf3Matrix:
        return cls(np.ones((rows, cols), dtype=np.uint8))

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the entries."""
        return self._a

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def T(self) -> Gf3Matrix:
        return Gf3Matrix(self._a.T.copy())

    def transpose(self) -> Gf3Matrix:
        return self.T

    def tolist(self) -> list[list[int]]:
        return self._a.astype(int).tolist()

    def __getitem__(self, key):
        out = self._a[key]
        if np.ndim(out) == 0:
            return int(out)
        if np.ndim(out) == 1:
            return tuple(int(x) for x in out)
        return Gf3Matrix(out.copy())

    def __matmul__(self, other: Gf3Matrix) -> Gf3Matrix:
        if not isinstance(other, Gf3Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        prod = self._a.astype(np.int64) @ other._a.astype(np.int64)
        return Gf3Matrix(prod % Q)

    def __add__(self, other: Gf3Matrix) -> Gf3Matrix:
        if not isinstance(other, Gf3Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Gf3Matrix((self._a + other._a) % Q)

    def __neg__(self) -> Gf3Matrix:
        return Gf3Matrix(_NEG[self._a])

    def __sub__(self, other: Gf3Matrix) -> Gf3Matrix:
        return self + (-other)

    def scale(self, c: int) -> Gf3Matrix:
        return Gf3Matrix((self._a.astype(np.int64) * c) % Q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gf3Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        return hash((self.shape, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"Gf3Matrix({self.tolist()})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(int(x)) for x in row) for row in self._a)

    def is_zero(self) -> bool:
        return not self._a.any()

    def row_weights(self) -> tuple[int, ...]:
        return tuple(int(w) for w in np.count_nonzero(self._a, axis=1))

    def row_supports(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(np.flatnonzero(row).tolist()) for row in self._a)

    def take_columns(self, cols: Iterable[int]) -> Gf3Matrix:
        return Gf3Matrix(self._a[:, list(cols)].copy())

    def delete_columns(self, cols: Iterable[int]) -> Gf3Matrix:
        return Gf3Matrix(np.delete(self._a, list(cols), axis=1))

    def take_rows(self, rows: Iterable[int]) -> Gf3Matrix:
        return Gf3Matrix(self._a[list(rows), :].copy())

    def permute_columns(self, perm: Sequence[int]) -> Gf3Matrix:
        return Gf3Matrix(self._a[:, list(perm)].copy())

    def scale_columns(self, factors: Sequence[int]) -> Gf3Matrix:
        f = np.asarray(factors, dtype=np.int64)
        return Gf3Matrix((self._a.astype(np.int64) * f[None, :]) % Q)


def hstack(*blocks: Gf3Matrix) -> Gf3Matrix:
    return Gf3Matrix(np.hstack([b.array for b in blocks]))


def vstack(*blocks: Gf3Matrix) -> Gf3Matrix:
    return Gf3Matrix(np.vstack([b.array for b in blocks]))


def _rref_array(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    a = np.array(a, dtype=np.uint8)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        if a[r, c] == 2:
            a[r] = (a[r] * 2) % Q
        factor = _NEG[a[:, c]]
        factor[r] = 0
        a = (a + factor[:, None] * a[r][None, :]) % Q
        pivots.append(c)
        r += 1
    return a, pivots


def rref_with_pivots(m: Gf3Matrix) -> tuple[Gf3Matrix, tuple[int, ...]]:
    """Reduced row echelon form together with the pivot columns.

    Pivots are taken leftmost-first and scaled to 1, so the result is
    canonical for the row space.
    """
    a, pivots = _rref_array(m.array)
    return Gf3Matrix(a), tuple(pivots)


def rref(m: Gf3Matrix) -> Gf3Matrix:
    return rref_with_pivots(m)[0]


def rank(m: Gf3Matrix) -> int:
    return len(_rref_array(m.array)[1])


def row_basis(m: Gf3Matrix) -> Gf3Matrix:
    """The nonzero rows of ``rref(m)``: a canonical basis of the row space."""
    a, pivots = _rref_array(m.array)
    return Gf3Matrix(a[: len(pivots)])


def null_space(m: Gf3Matrix) -> Gf3Matrix:
    """Basis (as rows) of ``{x : m @ x.T == 0}``.

    One basis vector per free column: it carries a 1 there and the negated
    reduced entries in the pivot positions.
    """
    a, pivots = _rref_array(m.array)
    n = m.cols
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, p in enumerate(pivots):
            basis[i, p] = _NEG[a[row, f]]
    return Gf3Matrix(basis)


def kronecker(a: Gf3Matrix, b: Gf3Matrix) -> Gf3Matrix:
    return Gf3Matrix(np.kron(a.array.astype(np.int64), b.array.astype(np.int64)) % Q)


def message_block(start: int, stop: int, k: int) -> np.ndarray:
    """Base-3 digit vectors of the integers in ``[start, stop)``.

    Column 0 is the most significant digit, so rows come out in
    lexicographic order of the digit sequence.
    """
    idx = np.arange(start, stop, dtype=np.int64)
    powers = Q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] // powers[None, :]) % Q).astype(np.uint8)


def span_block(basis: np.ndarray, start: int, stop: int) -> np.ndarray:
    """Linear combinations ``message @ basis`` for messages ``start..stop-1``."""
    msgs = message_block(start, stop, basis.shape[0]).astype(np.int64)
    return ((msgs @ basis.astype(np.int64)) % Q).astype(np.uint8)


def iter_span(basis: np.ndarray, chunk: int = 1 << 15):
    """Yield the whole row span of ``basis`` in chunks, zero vector first."""
    total = Q ** basis.shape[0]
    for start in range(0, total, chunk):
        yield span_block(basis, start, min(total, start + chunk))
