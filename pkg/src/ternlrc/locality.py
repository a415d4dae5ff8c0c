"""Exact repair locality and greedy cover matrices.

A symbol ``i`` has locality ``r_i`` when the lightest dual codeword whose
support contains ``i`` has weight ``r_i + 1``: the other ``r_i`` positions of
that parity check repair it. A coordinate that is identically zero in the
code is covered by the weight-1 dual word ``e_i`` and gets locality 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .bounds import cover_chain_holds
from .code import LinearCode
from .gf3 import Gf3Matrix, Q, iter_span, null_space, rank, rref, span_block, vstack

# Dual-codeword enumeration is used while 3**(n-k) stays below this.
DUAL_ENUMERATION_CAP = 12


class NoLocalityError(ValueError):
    """Some symbol is not covered by any dual codeword, so it cannot be repaired."""


class LocalityExceededError(ValueError):
    """A symbol's exact locality is larger than the requested target."""


@dataclass(frozen=True)
class LocalityProfile:
    per_symbol: tuple[int, ...]

    @property
    def code_locality(self) -> int:
        return max(self.per_symbol)

    def complies(self, r: int) -> bool:
        return self.code_locality <= r


@dataclass(frozen=True)
class CoverMatrix:
    """Parity-check rows split into locality rows ``h1`` and the rest ``h2``."""

    h1: Gf3Matrix
    h2: Gf3Matrix

    @property
    def l(self) -> int:
        return self.h1.rows

    def stacked(self) -> Gf3Matrix:
        if self.h2.rows == 0:
            return self.h1
        return vstack(self.h1, self.h2)


def _profile_by_dual_enumeration(c: LinearCode) -> tuple[int, ...]:
    n = c.n
    big = n + 1
    best = np.full(n, big, dtype=np.int64)
    for block in iter_span(c.parity_check.array):
        nz = block != 0
        w = np.count_nonzero(nz, axis=1)
        cand = np.where(nz, w[:, None], big)
        best = np.minimum(best, cand.min(axis=0))
    if (best == big).any():
        missing = [int(i) for i in np.flatnonzero(best == big)]
        raise NoLocalityError(f"no dual codeword covers coordinates {missing}")
    return tuple(int(b) - 1 for b in best)


def _symbol_by_support_search(c: LinearCode, i: int) -> int:
    # a dual word supported in T+{i} and nonzero at i exists iff
    # column i of the generator lies in the span of the columns in T
    g = c.generator
    others = [j for j in range(c.n) if j != i]
    full = rank(g)
    if rank(g.take_columns(others)) < full:
        raise NoLocalityError(f"no dual codeword covers coordinate {i}")
    col = g.take_columns([i])
    if col.is_zero():
        return 0
    for size in range(1, c.n):
        for t in itertools.combinations(others, size):
            sub = g.take_columns(t)
            if rank(sub) == rank(Gf3Matrix(np.hstack([sub.array, col.array]))):
                return size
    raise NoLocalityError(f"no dual codeword covers coordinate {i}")


def symbol_locality(c: LinearCode, i: int, method: str = "auto") -> int:
    """Exact repair degree of coordinate ``i``.

    ``method="search"`` grows candidate repair sets one position at a time;
    ``method="dual"`` enumerates the whole dual code.
    """
    if not 0 <= i < c.n:
        raise IndexError(f"coordinate {i} out of range for length {c.n}")
    if c.redundancy == 0:
        raise NoLocalityError("the dual code is trivial; no symbol can be repaired")
    if method == "auto":
        method = "dual" if c.redundancy <= DUAL_ENUMERATION_CAP else "search"
    if method == "dual":
        return _profile_by_dual_enumeration(c)[i]
    if method == "search":
        return _symbol_by_support_search(c, i)
    raise ValueError(f"unknown locality method {method!r}")


def locality_profile(c: LinearCode, method: str = "auto") -> LocalityProfile:
    if c.redundancy == 0:
        raise NoLocalityError("the dual code is trivial; no symbol can be repaired")
    if method == "auto":
        method = "dual" if c.redundancy <= DUAL_ENUMERATION_CAP else "search"
    if method == "dual":
        return LocalityProfile(_profile_by_dual_enumeration(c))
    return LocalityProfile(tuple(symbol_locality(c, i, method) for i in range(c.n)))


code_locality = locality_profile


def _full_support_words(g: Gf3Matrix, support: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Dual codewords whose support is exactly ``support`` (as coefficient tuples)."""
    basis = null_space(g.take_columns(support))
    if basis.rows == 0:
        return []
    words = span_block(basis.array, 0, Q**basis.rows)
    full = words[(words != 0).all(axis=1)]
    return sorted(tuple(int(x) for x in w) for w in full)


def lightest_covering_dual_word(c: LinearCode, j: int, max_weight: int) -> np.ndarray | None:
    """Minimum-weight dual codeword with ``j`` in its support, weight at most ``max_weight``.

    Ties go to the lexicographically smallest support, then the smallest
    coefficient vector. Returns ``None`` if nothing light enough covers ``j``.
    """
    g = c.generator
    for w in range(1, max_weight + 1):
        for support in itertools.combinations(range(c.n), w):
            if j not in support:
                continue
            words = _full_support_words(g, support)
            if words:
                row = np.zeros(c.n, dtype=np.uint8)
                row[list(support)] = words[0]
                return row
    return None


def build_cover_matrix(c: LinearCode, r: int) -> CoverMatrix:
    """Greedy locality rows, then completion to a full-rank parity-check matrix.

    The lowest-index uncovered coordinate is covered by its lightest dual
    codeword (weight at most ``r+1``) until every coordinate is covered.
    Remaining rows come from the reduced echelon basis of the dual, added
    whenever they raise the rank.
    """
    n = c.n
    covered = np.zeros(n, dtype=bool)
    rows: list[np.ndarray] = []
    while not covered.all():
        j = int(np.flatnonzero(~covered)[0])
        row = lightest_covering_dual_word(c, j, r + 1)
        if row is None:
            raise LocalityExceededError(f"coordinate {j} has no repair set of size <= {r}")
        rows.append(row)
        covered |= row != 0
    h1 = Gf3Matrix(np.array(rows, dtype=np.uint8))
    extra: list[np.ndarray] = []
    current = h1
    target = c.redundancy
    for cand in rref(c.parity_check).array:
        if current.rows == target:
            break
        trial = Gf3Matrix(np.vstack([current.array, cand[None, :]]))
        if rank(trial) > current.rows:
            current = trial
            extra.append(cand)
    h2 = Gf3Matrix(np.array(extra, dtype=np.uint8).reshape(len(extra), n))
    cm = CoverMatrix(h1, h2)
    if rank(cm.stacked()) != target:
        raise AssertionError("cover matrix does not reach full rank")
    if c.k >= 1 and not cover_chain_holds(n, c.k, r, cm.l):
        raise AssertionError(f"row count {cm.l} breaks the locality-row chain for ({n},{c.k},{r})")
    return cm


def check_disjoint_uniform(cm: CoverMatrix, r: int) -> bool:
    """True iff the locality rows have pairwise disjoint supports, each of size r+1."""
    supports = cm.h1.row_supports()
    if any(len(s) != r + 1 for s in supports):
        return False
    seen: set[int] = set()
    for s in supports:
        if seen & s:
            return False
        seen |= s
    return True
