"""Decide whether an optimal ternary ``(n, k, r)`` LRC exists.

:func:`classify` matches a triple against the eight parameter classes. For
triples that match nothing it also walks the structural case analysis
(which single-parity / [4,2,3] / repetition residue the parity-check
matrix must collapse to) and records the bound that rules each case out.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import (
    BoundReport,
    report_column_pairs,
    report_plotkin,
    report_shortening_chain,
    singleton_like_d,
)
from .constructions import NEAR_MDS_PARAMETERS


@dataclass(frozen=True)
class ClassMatch:
    class_id: int
    params: tuple[tuple[str, int], ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return f"class {self.class_id}"
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"class {self.class_id} ({inner})"


@dataclass(frozen=True)
class ClassVerdict:
    n: int
    k: int
    r: int
    target_d: int
    matches: tuple[ClassMatch, ...]
    explanation: tuple[BoundReport, ...]

    @property
    def exists(self) -> bool:
        return bool(self.matches)

    @property
    def class_ids(self) -> tuple[int, ...]:
        return tuple(m.class_id for m in self.matches)

    def summary(self) -> str:
        if self.exists:
            classes = ", ".join(str(m) for m in self.matches)
            return f"{classes}, d={self.target_d}, exists"
        return f"no class, d_target={self.target_d}, does not exist"


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _matches(n: int, k: int, r: int) -> list[ClassMatch]:
    out = []
    if n == k + _ceil_div(k, r):
        out.append(ClassMatch(1, (("k", k), ("r", r))))
    g = 13 - n
    if 0 <= g <= 4 and (k, r) == (10 - g, 8 - g):
        out.append(ClassMatch(2, (("g", g),)))
    if r == 1 and n == 2 * k + 2 and k >= 2:
        out.append(ClassMatch(3, (("k", k),)))
    if (n, k, r) == (8, 2, 1):
        out.append(ClassMatch(4))
    if r == k - 1 and (n, k) in NEAR_MDS_PARAMETERS:
        out.append(ClassMatch(5, (("n", n), ("k", k), ("index", NEAR_MDS_PARAMETERS.index((n, k))))))
    if r == 3 and n % 4 == 0 and n // 4 >= 3 and k == 3 * (n // 4) - 2:
        out.append(ClassMatch(6, (("l", n // 4),)))
    if r == 2 and n % 3 == 0 and n // 3 >= 3 and k == 2 * (n // 3) - 1:
        out.append(ClassMatch(7, (("l", n // 3),)))
    if (n, k, r) == (12, 5, 2):
        out.append(ClassMatch(8))
    return out


def _fail(name: str, inputs: dict, value, note: str) -> BoundReport:
    return BoundReport(name, inputs, value, False, note)


def _mds_residue_case(n: int, k: int, r: int, d: int) -> tuple[list[int], list[BoundReport]]:
    """Residue is the [4,2,3] code: forces d = 3, r >= 4, k = r + 2 and n <= 13."""
    b = _ceil_div(k, r)
    slack = k - b * r + r
    if slack > 2:
        return [], [_fail("covered_columns", {"k": k, "r": r}, slack, "[4,2,3] residue needs k - ceil(k/r) r + r <= 2")]
    if r < 4:
        return [], [_fail("residue_row_weight", {"r": r}, 4, "[4,2,3] residue needs r >= 4")]
    if slack != 2 or b != 2:
        return [], [_fail("residue_shape", {"k": k, "r": r}, slack, "[4,2,3] residue needs k = r + 2")]
    if n > 13:
        return [], [_fail("pairwise_independent_columns", {"n": n}, 13, "3 rows hold at most 13 independent columns")]
    return [2], []


def _repetition_residue_case(n: int, k: int, r: int, d: int) -> tuple[list[int], list[BoundReport]]:
    """Residue is a repetition code ``[d, 1, d]`` with ``d >= 3``."""
    b = _ceil_div(k, r)
    slack = k - b * r + r
    if slack > 1:
        return [], [_fail("covered_columns", {"k": k, "r": r}, slack, "repetition residue needs k - ceil(k/r) r + r <= 1")]
    if k % r == 0:
        # slack == r == 1
        if n % 2:
            return [], [_fail("disjoint_locality_rows", {"n": n, "r": r}, 2, "r | k forces (r+1) | n")]
        gap = n // 2 - k
        plot = report_plotkin(2 * (gap + 2), 9, 2 * (gap + 1), "shortened to k = 2")
        if not plot.satisfied:
            return [], [plot]
        if d == 4:
            return [3], []
        pairs = report_column_pairs(3, 2, 1, k + 2, "locality rows vs. 2 extra rows")
        if not pairs.satisfied:
            return [], [pairs]
        return [4], []
    # r does not divide k: slack == t == 1, k = s r + 1
    s = b - 1
    if s == 1:
        if (n, k) in NEAR_MDS_PARAMETERS:
            return [5], []
        return [], [_fail("near_mds_range", {"n": n, "k": k}, None, "near-MDS needs 3<=k<=6, 3<=n-k<=6, n<=12")]
    if n % (r + 1):
        return [], [_fail("disjoint_locality_rows", {"n": n, "r": r}, r + 1, "s >= 2 forces (r+1) | n")]
    l = n // (r + 1)
    gap = l - s
    plot = report_plotkin(
        (gap + 1) * (r + 1), 3 ** (r + 1), gap * (r + 1), "residue with s-1 more rows restored"
    )
    if not plot.satisfied:
        return [], [plot]
    u = n - k - l
    if gap == 1:
        chain = report_shortening_chain(2 * (r + 1), r + 1, 3 ** (r + 1))
        if not chain.satisfied:
            return [], [chain]
        if r == 3:
            return [6], []
        if r == 2:
            return [7], []
        pairs = report_column_pairs(3, u, r, l)
        if not pairs.satisfied:
            return [], [pairs]
        return [], [_fail("case_analysis", {"n": n, "k": k, "r": r}, None, "unresolved r in 2..5")]
    chain = report_shortening_chain(3 * (r + 1), 2 * (r + 1), 3 ** (r + 1))
    if not chain.satisfied:
        return [], [chain]
    pairs = report_column_pairs(3, u, r, l)
    if not pairs.satisfied:
        return [], [pairs]
    if (n, k, r) == (12, 5, 2):
        return [8], []
    return [], [_fail("case_analysis", {"n": n, "k": k, "r": r}, None, "l = 4 is the only survivor")]


def case_analysis(n: int, k: int, r: int) -> tuple[list[int], list[BoundReport]]:
    """Classes reached by the structural argument, and the bounds that cut off the rest.

    Independent of :func:`_matches`; the two must agree on every triple.
    """
    b = _ceil_div(k, r)
    d = singleton_like_d(n, k, r)
    if n - k < b:
        return [], [_fail("locality_rows", {"n": n, "k": k, "r": r}, b, "need ceil(k/r) <= n-k locality rows")]
    if d == 2:
        return [1], []
    derived: list[int] = []
    reports: list[BoundReport] = []
    if d == 3:
        got, why = _mds_residue_case(n, k, r, d)
        derived += got
        reports += why
    got, why = _repetition_residue_case(n, k, r, d)
    derived += got
    reports += why
    return sorted(set(derived)), ([] if derived else reports)


def check_preconditions(n: int, k: int, r: int) -> None:
    if not (1 <= r <= k - 1 and k <= n - 1):
        raise ValueError(f"need 1 <= r <= k-1 and k <= n-1, got (n, k, r) = ({n}, {k}, {r})")


def classify(n: int, k: int, r: int) -> ClassVerdict:
    check_preconditions(n, k, r)
    target = singleton_like_d(n, k, r)
    matches = tuple(_matches(n, k, r))
    explanation: tuple[BoundReport, ...] = ()
    if not matches:
        _, why = case_analysis(n, k, r)
        if not why:
            why = [_fail("case_analysis", {"n": n, "k": k, "r": r}, None, "excluded by the classification")]
        explanation = tuple(why)
    return ClassVerdict(n, k, r, target, matches, explanation)

