"""Brute-force ground truth for the existence of optimal ternary LRCs.

Every ``[n, k]`` code is monomially equivalent to one with a systematic
generator ``[I_k | A]``, and both distance and locality survive monomial
maps, so scanning all ``3**(k(n-k))`` matrices ``A`` settles existence.
Candidates are processed in vectorised blocks: first the distance filter,
then the locality test on the survivors.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bounds import singleton_like_d
from .classifier import ClassVerdict, check_preconditions, classify
from .gf3 import Gf3Matrix, Q, message_block

DEFAULT_CAP = 3**16
CHUNK = 1 << 13
TASK_SPAN = 3**10


class CapExceededError(ValueError):
    """The search space is larger than the configured cap."""


@dataclass(frozen=True)
class SearchTask:
    n: int
    k: int
    r: int
    target_d: int | None = None
    cap: int = DEFAULT_CAP
    mode: str = "find-first"
    workers: int = 1

    @property
    def d(self) -> int:
        return singleton_like_d(self.n, self.k, self.r) if self.target_d is None else self.target_d

    @property
    def space(self) -> int:
        return Q ** (self.k * (self.n - self.k))


@dataclass
class SearchResult:
    """Outcome of a scan. ``count`` counts systematic matrices, not inequivalent codes."""

    found: bool
    witness: Gf3Matrix | None
    examined: int
    elapsed: float
    count: int = 0
    index: int | None = None
    task: SearchTask | None = field(default=None, repr=False)


def check_cap(task: SearchTask) -> None:
    if not 1 <= task.k <= task.n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={task.n}, k={task.k}")
    if task.r < 1:
        raise ValueError("r must be positive")
    if task.mode not in ("find-first", "count-all"):
        raise ValueError(f"unknown mode {task.mode!r}")
    if task.space > task.cap:
        raise CapExceededError(
            f"3^{task.k * (task.n - task.k)} systematic candidates exceed the cap {task.cap}"
        )


def _projective(k: int) -> np.ndarray:
    """Nonzero vectors of length k whose first nonzero entry is 1."""
    allv = message_block(0, Q**k, k)
    nz = allv != 0
    first = allv[np.arange(allv.shape[0]), nz.argmax(axis=1)]
    keep = nz.any(axis=1) & (first == 1)
    return allv[keep].astype(np.int64)


def _block_mask(n: int, k: int, r: int, d: int, start: int, stop: int, msgs, ys) -> np.ndarray:
    """Boolean mask over candidates ``start..stop-1``: distance >= d and locality <= r."""
    m = n - k
    a = message_block(start, stop, k * m).astype(np.int64).reshape(-1, k, m)
    ok = np.ones(a.shape[0], dtype=bool)
    if d > 1:
        # codeword of message x is (x, xA)
        parity = np.einsum("pk,bkj->bpj", msgs, a) % Q
        wt = np.count_nonzero(msgs, axis=1)[None, :] + np.count_nonzero(parity, axis=2)
        ok = wt.min(axis=1) >= d
    idx = np.flatnonzero(ok)
    if idx.size == 0:
        return ok
    sub = a[idx]
    # dual word of y is (-(A y), y)
    ay = np.einsum("bkj,pj->bpk", sub, ys) % Q
    cover_info = ay != 0
    wt = np.count_nonzero(cover_info, axis=2) + np.count_nonzero(ys, axis=1)[None, :]
    big = n + 1
    best_info = np.where(cover_info, wt[:, :, None], big).min(axis=1)
    cover_par = (ys != 0)[None, :, :]
    best_par = np.where(cover_par, wt[:, :, None], big).min(axis=1)
    loc_ok = (best_info <= r + 1).all(axis=1) & (best_par <= r + 1).all(axis=1)
    ok[idx] = loc_ok
    return ok


def _scan(n: int, k: int, r: int, d: int, start: int, stop: int, find_first: bool) -> tuple[int | None, int, int]:
    """Scan ``[start, stop)``; returns (first hit, hit count, candidates examined)."""
    msgs = _projective(k)
    ys = _projective(n - k)
    first = None
    count = 0
    for lo in range(start, stop, CHUNK):
        hi = min(stop, lo + CHUNK)
        mask = _block_mask(n, k, r, d, lo, hi, msgs, ys)
        hits = np.flatnonzero(mask)
        if hits.size:
            if first is None:
                first = lo + int(hits[0])
            count += int(hits.size)
            if find_first:
                return first, count, first - start + 1
    return first, count, stop - start


def systematic_generator(n: int, k: int, index: int) -> Gf3Matrix:
    """``[I_k | A]`` where A's row-major entries are the base-3 digits of ``index``."""
    a = message_block(index, index + 1, k * (n - k)).reshape(k, n - k)
    return Gf3Matrix(np.hstack([np.eye(k, dtype=np.uint8), a]))


def exists_optimal_lrc(task: SearchTask) -> SearchResult:
    """Exhaustive search for a systematic ``[n, k]`` code with ``d >= target`` and locality ``<= r``.

    Candidates are visited in lexicographic order of A's entries, so
    find-first mode returns the same witness for any worker count.
    """
    check_cap(task)
    t0 = time.perf_counter()
    n, k, r, d = task.n, task.k, task.r, task.d
    find_first = task.mode == "find-first"
    total = task.space
    spans = [(lo, min(total, lo + TASK_SPAN)) for lo in range(0, total, TASK_SPAN)]
    first = None
    count = 0
    examined = 0
    if task.workers <= 1 or len(spans) == 1:
        for lo, hi in spans:
            f, c, e = _scan(n, k, r, d, lo, hi, find_first)
            count += c
            examined += e
            if f is not None and first is None:
                first = f
            if find_first and first is not None:
                break
    else:
        with ProcessPoolExecutor(max_workers=task.workers) as pool:
            futures = [pool.submit(_scan, n, k, r, d, lo, hi, find_first) for lo, hi in spans]
            for fut in futures:
                f, c, e = fut.result()
                count += c
                examined += e
                if f is not None and first is None:
                    first = f
                if find_first and first is not None:
                    for rest in futures:
                        rest.cancel()
                    break
    witness = systematic_generator(n, k, first) if first is not None else None
    return SearchResult(
        found=first is not None,
        witness=witness,
        examined=examined,
        elapsed=time.perf_counter() - t0,
        count=count,
        index=first,
        task=task,
    )


@dataclass(frozen=True)
class GridRow:
    n: int
    k: int
    r: int
    target_d: int
    oracle_found: bool
    examined: int
    verdict: ClassVerdict

    @property
    def agree(self) -> bool:
        return self.oracle_found == self.verdict.exists


def admissible_triples(n_max: int, cap: int = DEFAULT_CAP):
    for n in range(3, n_max + 1):
        for k in range(2, n):
            if Q ** (k * (n - k)) > cap:
                continue
            for r in range(1, k):
                check_preconditions(n, k, r)
                yield n, k, r


def scan_parameter_grid(n_max: int, cap: int = DEFAULT_CAP, workers: int = 1) -> list[GridRow]:
    """Oracle verdict next to the classifier's for every admissible triple with n <= n_max."""
    rows = []
    for n, k, r in admissible_triples(n_max, cap):
        res = exists_optimal_lrc(SearchTask(n, k, r, cap=cap, workers=workers))
        rows.append(GridRow(n, k, r, res.task.d, res.found, res.examined, classify(n, k, r)))
    return rows
