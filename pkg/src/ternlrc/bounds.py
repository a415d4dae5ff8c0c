"""Exact forms of the coding bounds used to pin down optimal ternary LRCs.

Every bound returns an ``int`` or a :class:`fractions.Fraction`; nothing
here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound: its value and whether the inputs respect it."""

    name: str
    inputs: dict[str, Any] = field(hash=False)
    value: Fraction | int | None
    satisfied: bool
    note: str = ""

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.inputs.items())
        status = "holds" if self.satisfied else "violated"
        tail = f" ({self.note})" if self.note else ""
        return f"{self.name}({args}) = {self.value}: {status}{tail}"


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def singleton_like_d(n: int, k: int, r: int) -> int:
    """Largest distance allowed for an ``(n, k, r)`` LRC: ``n - k - ceil(k/r) + 2``."""
    if min(n, k, r) < 1:
        raise ValueError(f"n, k, r must be positive, got ({n}, {k}, {r})")
    return n - k - _ceil_div(k, r) + 2


def plotkin_bound(n: int, M: int) -> Fraction:
    """Plotkin ceiling on the distance of a ternary code of length n and size M."""
    if M <= 1:
        raise ValueError("the Plotkin bound needs at least two codewords")
    return Fraction(2 * n * M, 3 * (M - 1))


def plotkin_feasible(n: int, M: int, d: int) -> bool:
    return d <= plotkin_bound(n, M)


def plotkin_max_size(n: int, d: int) -> int | None:
    """Largest M compatible with the Plotkin inequality, or ``None`` if unbounded.

    Rearranged, ``3d(M-1) <= 2nM`` reads ``M(3d - 2n) <= 3d``, which caps M
    only when ``2n < 3d``.
    """
    slack = 3 * d - 2 * n
    if slack <= 0:
        return None
    return (3 * d) // slack


def column_pair_bound(q: int, u: int, r: int) -> Fraction:
    """Most disjoint weight-(r+1) locality rows an ``(l+u)``-row matrix can hold
    when any 4 of its columns are independent: ``(q^u - 1) / ((q-1) C(r+1, 2))``.
    """
    if u < 1 or r < 1:
        raise ValueError("u and r must be positive")
    return Fraction(q**u - 1, (q - 1) * comb(r + 1, 2))


def shortening_seed(d: int) -> tuple[int, int]:
    """Length where the shortening chain starts and the Plotkin-derived size cap there.

    Even d starts at ``3d/2``: Plotkin caps length ``3d/2 - 1`` at ``3d/2``
    codewords, and one shortening step multiplies by 3. Odd d starts at
    ``(3d-1)/2`` with Plotkin's cap ``3d``.
    """
    if d < 2:
        raise ValueError("seed needs d >= 2")
    if d % 2 == 0:
        base = plotkin_max_size(3 * d // 2 - 1, d)
        return 3 * d // 2, 3 * base
    length = (3 * d - 1) // 2
    return length, plotkin_max_size(length, d)


def shortening_chain_bound(n: int, d: int) -> int | None:
    """Upper bound on ``M_3(n, d)`` from ``M_3(n, d) <= 3 M_3(n-1, d)``.

    Returns ``None`` when n is shorter than the seed length.
    """
    seed_len, seed_size = shortening_seed(d)
    if n < seed_len:
        return None
    return 3 ** (n - seed_len) * seed_size


def ternary_mds_admissible(n: int, k: int) -> bool:
    """Whether an ``[n, k, n-k+1]`` ternary code can exist (1 <= k <= n-1)."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    return k == 1 or k == n - 1 or (n, k) == (4, 2)


def locality_rows_range(n: int, k: int, r: int) -> tuple[int, int, int]:
    """``(ceil(k/r), ceil(n/(r+1)), n-k)``, the chain a cover matrix's row count sits in."""
    return _ceil_div(k, r), _ceil_div(n, r + 1), n - k


def cover_chain_holds(n: int, k: int, r: int, l: int) -> bool:
    lo1, lo2, hi = locality_rows_range(n, k, r)
    return lo1 <= lo2 <= l <= hi


# Report builders used by the classifier explanations and the CLI.


def report_singleton_like(n: int, k: int, r: int, d: int) -> BoundReport:
    value = singleton_like_d(n, k, r)
    return BoundReport("singleton_like", {"n": n, "k": k, "r": r, "d": d}, value, d <= value)


def report_plotkin(n: int, M: int, d: int, note: str = "") -> BoundReport:
    return BoundReport("plotkin", {"n": n, "M": M, "d": d}, plotkin_bound(n, M), plotkin_feasible(n, M, d), note)


def report_column_pairs(q: int, u: int, r: int, l: int, note: str = "") -> BoundReport:
    value = column_pair_bound(q, u, r)
    return BoundReport("column_pairs", {"q": q, "u": u, "r": r, "l": l}, value, l <= value, note)


def report_shortening_chain(n: int, d: int, needed: int, note: str = "") -> BoundReport:
    value = shortening_chain_bound(n, d)
    ok = value is None or needed <= value
    return BoundReport("shortening_chain", {"n": n, "d": d, "M": needed}, value, ok, note)
