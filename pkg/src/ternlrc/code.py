"""Ternary linear codes given by a parity-check matrix.

Coordinates are 0-based throughout the library; the command line and the
fixture files translate to 1-based positions.

Note on terminology: deleting columns of a parity-check matrix *shortens*
the code (codewords vanishing there are kept, then truncated). Some of the
literature calls this "puncturing"; here :func:`shorten` and
:func:`puncture` keep their textbook meanings.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from functools import cached_property

import numpy as np

from .gf3 import (
    Gf3Matrix,
    Q,
    iter_span,
    message_block,
    null_space,
    rank,
    row_basis,
)

# Full codeword scans are refused beyond 3**ENUMERATION_CAP_K codewords.
ENUMERATION_CAP_K = 20
# Exhaustive subspace enumeration for generalized Hamming weights.
GHW_CAP_K = 7
GHW_CAP_N = 14


class EnumerationCapError(ValueError):
    """The requested exhaustive computation exceeds the configured cap."""


class EmptyCodeError(ValueError):
    """The code has dimension 0, so it has no nonzero codewords."""


def _full_rank_rows(m: Gf3Matrix) -> Gf3Matrix:
    # keep the caller's rows verbatim when they are already independent
    if rank(m) == m.rows:
        return m
    return row_basis(m)


class LinearCode:
    """A ternary ``[n, k]`` linear code.

    Holds a full-rank parity-check matrix and a full-rank generator matrix
    with ``parity_check @ generator.T == 0``. Build instances with
    :meth:`from_parity_check` or :meth:`from_generator`.
    """

    def __init__(self, parity_check: Gf3Matrix, generator: Gf3Matrix) -> None:
        if parity_check.cols != generator.cols:
            raise ValueError("parity-check and generator lengths differ")
        n = parity_check.cols
        if n < 1:
            raise ValueError("a code needs at least one coordinate")
        if parity_check.rows + generator.rows != n:
            raise ValueError("dimensions of code and dual do not add up to n")
        self.parity_check = parity_check
        self.generator = generator

    @classmethod
    def from_parity_check(cls, h: Gf3Matrix) -> LinearCode:
        if h.cols < 1:
            raise ValueError("parity-check matrix has no columns")
        h = _full_rank_rows(h)
        return cls(h, null_space(h))

    @classmethod
    def from_generator(cls, g: Gf3Matrix) -> LinearCode:
        if g.cols < 1:
            raise ValueError("generator matrix has no columns")
        g = _full_rank_rows(g)
        return cls(null_space(g), g)

    @property
    def n(self) -> int:
        return self.parity_check.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def redundancy(self) -> int:
        return self.parity_check.rows

    @cached_property
    def canonical_generator(self) -> Gf3Matrix:
        return row_basis(self.generator)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.n == other.n and self.canonical_generator == other.canonical_generator

    def __hash__(self) -> int:
        return hash(self.canonical_generator)

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k})"

    def contains(self, word) -> bool:
        w = Gf3Matrix(np.asarray(word, dtype=np.int64).reshape(1, -1))
        return (self.parity_check @ w.T).is_zero()

    def codewords(self) -> np.ndarray:
        """All ``3**k`` codewords, in message order (small codes only)."""
        _check_cap(self.k)
        return np.vstack(list(iter_span(self.generator.array)))


def _check_cap(k: int, cap: int = ENUMERATION_CAP_K) -> None:
    if k > cap:
        raise EnumerationCapError(f"3^{k} codewords exceed the enumeration cap 3^{cap}")


def dual(c: LinearCode) -> LinearCode:
    return LinearCode(c.generator, c.parity_check)


def weight_distribution(c: LinearCode, cap: int = ENUMERATION_CAP_K) -> tuple[int, ...]:
    """Counts ``(A_0, ..., A_n)`` of codewords by Hamming weight."""
    _check_cap(c.k, cap)
    counts = np.zeros(c.n + 1, dtype=np.int64)
    for block in iter_span(c.generator.array):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=c.n + 1)
    return tuple(int(x) for x in counts)


def _distance_by_enumeration(c: LinearCode) -> int:
    _check_cap(c.k)
    best = c.n
    for block in iter_span(c.generator.array):
        w = np.count_nonzero(block, axis=1)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def _distance_by_columns(c: LinearCode) -> int:
    h = c.parity_check
    for w in range(1, c.n - c.k + 2):
        for cols in itertools.combinations(range(c.n), w):
            if rank(h.take_columns(cols)) < w:
                return w
    raise AssertionError("no dependent column set up to the Singleton bound")


def min_distance(c: LinearCode, method: str = "auto") -> int:
    """Minimum Hamming weight of a nonzero codeword.

    ``method="enumerate"`` scans the span of the generator;
    ``method="columns"`` looks for the smallest linearly dependent set of
    parity-check columns. ``"auto"`` takes whichever is cheaper.
    """
    if c.k == 0:
        raise EmptyCodeError("k = 0: no nonzero codewords")
    if method == "auto":
        method = "enumerate" if c.k <= 10 or c.k <= c.n - c.k else "columns"
    if method == "enumerate":
        return _distance_by_enumeration(c)
    if method == "columns":
        return _distance_by_columns(c)
    raise ValueError(f"unknown distance method {method!r}")


def _coords(c: LinearCode, coords: Iterable[int]) -> list[int]:
    s = sorted(set(int(i) for i in coords))
    if any(i < 0 or i >= c.n for i in s):
        raise IndexError(f"coordinates {s} out of range for length {c.n}")
    if len(s) == c.n:
        raise ValueError("cannot remove every coordinate")
    return s


def shorten(c: LinearCode, coords: Iterable[int]) -> LinearCode:
    """Keep the codewords vanishing on ``coords`` and delete those positions."""
    s = _coords(c, coords)
    return LinearCode.from_parity_check(c.parity_check.delete_columns(s))


def puncture(c: LinearCode, coords: Iterable[int]) -> LinearCode:
    """Delete the positions ``coords`` from every codeword."""
    s = _coords(c, coords)
    return LinearCode.from_generator(row_basis(c.generator.delete_columns(s)))


def _rref_patterns(i: int, k: int):
    """Pivot sets and free slots of every ``i x k`` reduced echelon shape."""
    for pivots in itertools.combinations(range(k), i):
        free = [(row, col) for row, p in enumerate(pivots) for col in range(p + 1, k) if col not in pivots]
        yield pivots, free


def _support_masks(gen: np.ndarray) -> np.ndarray:
    """Support bitmask of every codeword, indexed by message number."""
    k, n = gen.shape
    words = np.vstack(list(iter_span(gen)))
    bits = (1 << np.arange(n, dtype=np.int64))[None, :]
    return ((words != 0).astype(np.int64) * bits).sum(axis=1)


def _popcount(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint64)
    out = np.zeros(x.shape, dtype=np.int64)
    while x.any():
        out += (x & np.uint64(1)).astype(np.int64)
        x = x >> np.uint64(1)
    return out


def _min_support_of_subspaces(
    masks: np.ndarray, k: int, n: int, i: int, floor: int, chunk: int = 1 << 15
) -> int:
    # weights strictly increase with i, so nothing below ``floor`` can occur
    powers = Q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    best = n
    for pivots, free in _rref_patterns(i, k):
        base = np.zeros((i, k), dtype=np.int64)
        for row, p in enumerate(pivots):
            base[row, p] = 1
        base_idx = base @ powers
        total = Q ** len(free)
        rows_idx = np.array([f[0] for f in free], dtype=np.int64)
        col_pow = powers[[f[1] for f in free]] if free else np.zeros(0, dtype=np.int64)
        for start in range(0, total, chunk):
            fill = message_block(start, min(total, start + chunk), len(free)).astype(np.int64)
            idx = np.broadcast_to(base_idx, (fill.shape[0], i)).copy()
            for slot in range(len(free)):
                idx[:, rows_idx[slot]] += fill[:, slot] * col_pow[slot]
            union = np.bitwise_or.reduce(masks[idx], axis=1)
            best = min(best, int(_popcount(union).min()))
            if best <= floor:
                return best
    return best


def _ghw_by_supports(c: LinearCode) -> tuple[int, ...]:
    # dim of the subcode supported inside S is k - rank(G restricted to the complement of S)
    g = c.generator
    out = []
    size = 0
    for i in range(1, c.k + 1):
        size = max(size, i)
        while True:
            found = False
            for s in itertools.combinations(range(c.n), size):
                rest = [j for j in range(c.n) if j not in s]
                if c.k - (rank(g.take_columns(rest)) if rest else 0) >= i:
                    found = True
                    break
            if found:
                break
            size += 1
        out.append(size)
    return tuple(out)


def generalized_hamming_weights(
    c: LinearCode,
    method: str = "subspaces",
    cap_k: int = GHW_CAP_K,
    cap_n: int = GHW_CAP_N,
) -> tuple[int, ...]:
    """``(d_1, ..., d_k)``: smallest support of an ``i``-dimensional subcode.

    The default walks every subspace of the message space once, via its
    reduced echelon basis. ``method="supports"`` instead finds the smallest
    coordinate set carrying an ``i``-dimensional subcode.
    """
    if c.k == 0:
        return ()
    if method == "supports":
        return _ghw_by_supports(c)
    if method != "subspaces":
        raise ValueError(f"unknown method {method!r}")
    if c.k > cap_k or c.n > cap_n:
        raise EnumerationCapError(
            f"subspace enumeration for [{c.n},{c.k}] exceeds the cap k<={cap_k}, n<={cap_n}"
        )
    masks = _support_masks(c.generator.array)
    out: list[int] = []
    for i in range(1, c.k + 1):
        out.append(_min_support_of_subspaces(masks, c.k, c.n, i, out[-1] + 1 if out else 1))
    return tuple(out)


def is_near_mds(c: LinearCode, ghw: tuple[int, ...] | None = None) -> bool:
    if ghw is None:
        ghw = generalized_hamming_weights(c)
    if not ghw:
        return False
    r = c.n - c.k
    return ghw[0] == r and all(ghw[i - 1] == r + i for i in range(2, c.k + 1))


def is_mds(c: LinearCode) -> bool:
    return min_distance(c) == c.n - c.k + 1
