"""One canonical optimal ternary LRC per parameter point of each class.

Every builder returns a :class:`~ternlrc.code.LinearCode` whose parity-check
matrix is the one written down for that class (fixed matrices are embedded
verbatim below). :data:`NEAR_MDS_PARAMETERS` lists the sixteen class-5
shapes; all but ``[12, 6]`` are derived from the ``[12, 6, 6]`` code by the
puncture/shorten sequences stored in ``data/class5_sequences.txt``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .bounds import singleton_like_d
from .code import LinearCode, min_distance, puncture, shorten
from .gf3 import Gf3Matrix, kronecker, vstack
from .locality import NoLocalityError, locality_profile

# [4,2,3] code, the only nontrivial ternary MDS shape.
MDS_4_2_3 = Gf3Matrix(
    [
        [0, 1, 1, 1],
        [1, 0, 1, 2],
    ]
)

# Ternary Hamming code of redundancy 3; deleting its first g columns gives class 2.
HAMMING_13 = Gf3Matrix(
    [
        [1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0],
        [1, 1, 2, 2, 2, 1, 0, 0, 0, 0, 1, 1, 1],
        [1, 2, 1, 2, 0, 0, 1, 2, 0, 1, 0, 1, 2],
    ]
)

CODE_8_2_6 = Gf3Matrix(
    [
        [1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1],
        [0, 1, 0, 1, 0, 1, 0, 0],
        [0, 2, 0, 1, 0, 0, 0, 1],
    ]
)

# Extended ternary quadratic-residue (Golay) code, [12, 6, 6] with locality 5.
EXTENDED_QR_12 = Gf3Matrix(
    [
        [1, 2, 2, 1, 2, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 1, 1],
        [0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 0],
        [0, 1, 0, 2, 1, 0, 0, 0, 0, 1, 2, 2],
        [0, 0, 0, 2, 0, 1, 0, 1, 0, 2, 1, 2],
        [0, 0, 0, 1, 2, 1, 0, 0, 1, 0, 2, 2],
    ]
)

CODE_12_5_6 = Gf3Matrix(
    [
        [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
        [0, 2, 1, 0, 2, 1, 0, 2, 1, 0, 0, 0],
        [0, 0, 2, 0, 2, 2, 0, 2, 0, 0, 1, 0],
        [0, 1, 1, 0, 1, 0, 0, 2, 0, 0, 0, 1],
    ]
)

NEAR_MDS_PARAMETERS: tuple[tuple[int, int], ...] = (
    (12, 6), (11, 6), (11, 5), (10, 6), (10, 5), (10, 4),
    (9, 6), (9, 5), (9, 4), (9, 3), (8, 5), (8, 4), (8, 3),
    (7, 4), (7, 3), (6, 3),
)  # fmt: skip

SEQUENCE_FILE = "class5_sequences.txt"


class ConstructionError(ValueError):
    """Parameters outside the range a class is defined for."""


@dataclass(frozen=True)
class ConstructionSpec:
    """A class id, the parameters passed to its builder, and the promised ``(n, k, d, r)``."""

    class_id: int
    params: dict
    expected: tuple[int, int, int, int]

    def build(self) -> LinearCode:
        return BUILDERS[self.class_id](**self.params)

    def label(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"class {self.class_id}({inner})"


def _ones(width: int) -> Gf3Matrix:
    return Gf3Matrix.ones(1, width)


def class1(k: int, r: int) -> LinearCode:
    """``[k + ceil(k/r), k, 2]`` with locality r: disjoint all-ones blocks of width r+1.

    When r does not divide k the last ``r - t`` columns (``t = k mod r``)
    are dropped, leaving the final block of width ``t + 1``.
    """
    if not k > r >= 1:
        raise ConstructionError(f"class 1 needs k > r >= 1, got k={k}, r={r}")
    blocks = -(-k // r)
    h = kronecker(Gf3Matrix.identity(blocks), _ones(r + 1))
    t = k % r
    if t:
        h = h.delete_columns(range(h.cols - (r - t), h.cols))
    return LinearCode.from_parity_check(h)


def class2(g: int) -> LinearCode:
    if not 0 <= g <= 4:
        raise ConstructionError(f"class 2 needs 0 <= g <= 4, got g={g}")
    return LinearCode.from_parity_check(HAMMING_13.delete_columns(range(g)))


def class3(k: int) -> LinearCode:
    """``[2k+2, k, 4]`` with locality 1: pairs, plus one row hitting the second of each pair."""
    if k < 2:
        raise ConstructionError(f"class 3 needs k >= 2, got k={k}")
    top = kronecker(Gf3Matrix.identity(k + 1), _ones(2))
    bottom = kronecker(_ones(k + 1), Gf3Matrix([[0, 1]]))
    return LinearCode.from_parity_check(vstack(top, bottom))


def class4() -> LinearCode:
    return LinearCode.from_parity_check(CODE_8_2_6)


def class5(n: int, k: int) -> LinearCode:
    """Near-MDS ``[n, k, n-k]`` code with locality ``k - 1``."""
    if (n, k) not in NEAR_MDS_PARAMETERS:
        raise ConstructionError(f"class 5 has no [{n},{k}] member")
    code = LinearCode.from_parity_check(EXTENDED_QR_12)
    for op, pos in load_class5_sequences()[(n, k)]:
        code = apply_step(code, op, pos)
    return code


def class6(l: int) -> LinearCode:
    if l < 3:
        raise ConstructionError(f"class 6 needs l >= 3, got l={l}")
    top = kronecker(Gf3Matrix.identity(l), _ones(4))
    bottom = kronecker(_ones(l), Gf3Matrix([[0, 0, 1, 1], [0, 1, 0, 1]]))
    return LinearCode.from_parity_check(vstack(top, bottom))


def class7(l: int) -> LinearCode:
    if l < 3:
        raise ConstructionError(f"class 7 needs l >= 3, got l={l}")
    top = kronecker(Gf3Matrix.identity(l), _ones(3))
    bottom = kronecker(_ones(l), Gf3Matrix([[0, 1, 2]]))
    return LinearCode.from_parity_check(vstack(top, bottom))


def class8() -> LinearCode:
    return LinearCode.from_parity_check(CODE_12_5_6)


BUILDERS = {1: class1, 2: class2, 3: class3, 4: class4, 5: class5, 6: class6, 7: class7, 8: class8}


def expected_parameters(class_id: int, **params) -> tuple[int, int, int, int]:
    """The ``(n, k, d, r)`` a class promises for the given parameters."""
    if class_id == 1:
        k, r = params["k"], params["r"]
        return k + -(-k // r), k, 2, r
    if class_id == 2:
        g = params["g"]
        return 13 - g, 10 - g, 3, 8 - g
    if class_id == 3:
        k = params["k"]
        return 2 * k + 2, k, 4, 1
    if class_id == 4:
        return 8, 2, 6, 1
    if class_id == 5:
        n, k = params["n"], params["k"]
        return n, k, n - k, k - 1
    if class_id == 6:
        l = params["l"]
        return 4 * l, 3 * l - 2, 4, 3
    if class_id == 7:
        l = params["l"]
        return 3 * l, 2 * l - 1, 3, 2
    if class_id == 8:
        return 12, 5, 6, 2
    raise ConstructionError(f"unknown class {class_id}")


def spec(class_id: int, **params) -> ConstructionSpec:
    return ConstructionSpec(class_id, params, expected_parameters(class_id, **params))


def table_specs() -> list[ConstructionSpec]:
    """Smallest instance of each class, every class-2 member and every class-5 member."""
    out = [spec(1, k=2, r=1)]
    out += [spec(2, g=g) for g in range(5)]
    out += [spec(3, k=2), spec(4)]
    out += [spec(5, n=n, k=k) for n, k in NEAR_MDS_PARAMETERS]
    out += [spec(6, l=3), spec(7, l=3), spec(8)]
    return out


# Class-5 derivation sequences.

_STEP = re.compile(r"^(puncture|shorten)\((\d+)\)$")


def apply_step(code: LinearCode, op: str, pos: int) -> LinearCode:
    """Apply one fixture step; ``pos`` is 1-based relative to ``code``."""
    if op == "puncture":
        return puncture(code, [pos - 1])
    if op == "shorten":
        return shorten(code, [pos - 1])
    raise ValueError(f"unknown step {op!r}")


def parse_sequences(text: str) -> dict[tuple[int, int], list[tuple[str, int]]]:
    out: dict[tuple[int, int], list[tuple[str, int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ValueError(f"line {lineno}: missing ':'")
        try:
            n, k = (int(x) for x in head.split())
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'n k' before ':'") from None
        steps = []
        for tok in tail.split():
            m = _STEP.match(tok)
            if not m:
                raise ValueError(f"line {lineno}: bad step {tok!r}")
            steps.append((m.group(1), int(m.group(2))))
        out[(n, k)] = steps
    return out


def format_sequences(seqs: dict[tuple[int, int], list[tuple[str, int]]], version: int = 1) -> str:
    lines = [f"# class-5 derivations from the [12,6,6] code, version {version}"]
    for n, k in NEAR_MDS_PARAMETERS:
        steps = " ".join(f"{op}({pos})" for op, pos in seqs[(n, k)])
        lines.append(f"{n} {k} :" + (f" {steps}" if steps else ""))
    return "\n".join(lines) + "\n"


_sequence_cache: dict[tuple[int, int], list[tuple[str, int]]] | None = None


def load_class5_sequences() -> dict[tuple[int, int], list[tuple[str, int]]]:
    global _sequence_cache
    if _sequence_cache is None:
        text = resources.files("ternlrc.data").joinpath(SEQUENCE_FILE).read_text()
        _sequence_cache = parse_sequences(text)
    return _sequence_cache


def is_optimal_near_mds_step(code: LinearCode) -> bool:
    """``d = n - k`` and exact locality ``k - 1``: what every class-5 code must satisfy."""
    if code.k < 1:
        return False
    try:
        loc = locality_profile(code).code_locality
    except NoLocalityError:
        return False
    return loc == code.k - 1 and min_distance(code) == code.n - code.k


def search_class5_sequences() -> dict[tuple[int, int], list[tuple[str, int]]]:
    """Breadth-first search for a derivation of every class-5 shape.

    Children of a code are tried as ``puncture(1..n)`` then ``shorten(1..n)``;
    a child is kept only if it is itself an optimal near-MDS step. Each
    ``(n, k)`` node keeps the first code that reaches it.
    """
    root = LinearCode.from_parity_check(EXTENDED_QR_12)
    found: dict[tuple[int, int], tuple[LinearCode, list[tuple[str, int]]]] = {(12, 6): (root, [])}
    queue = deque([(12, 6)])
    targets = set(NEAR_MDS_PARAMETERS)
    while queue:
        key = queue.popleft()
        code, path = found[key]
        for op in ("puncture", "shorten"):
            for pos in range(1, code.n + 1):
                child = apply_step(code, op, pos)
                ckey = (child.n, child.k)
                if ckey in found or ckey not in targets:
                    continue
                if is_optimal_near_mds_step(child):
                    found[ckey] = (child, path + [(op, pos)])
                    queue.append(ckey)
    missing = targets - set(found)
    if missing:
        raise ConstructionError(f"no puncture/shorten derivation for {sorted(missing)}")
    return {key: found[key][1] for key in NEAR_MDS_PARAMETERS}


def write_class5_sequences(path: Path) -> None:
    path.write_text(format_sequences(search_class5_sequences()))


def verify_construction(s: ConstructionSpec) -> dict:
    """Build a spec and measure it; the result says whether it matches expectations."""
    code = s.build()
    d = min_distance(code)
    loc = locality_profile(code).code_locality
    n, k, d_exp, r_exp = s.expected
    return {
        "class_id": s.class_id,
        "params": dict(s.params),
        "n": code.n,
        "k": code.k,
        "d": d,
        "r": loc,
        "target_d": singleton_like_d(code.n, code.k, r_exp),
        "matches": (code.n, code.k, d, loc) == (n, k, d_exp, r_exp),
        "optimal": d == singleton_like_d(code.n, code.k, loc),
    }
