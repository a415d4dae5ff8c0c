"""Plain-text matrix files.

::

    GF3 <rows> <cols>
    <cols space-separated digits in {0,1,2}>   (one line per row)

Every line ends with a single newline and there are no trailing blank lines.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .gf3 import Gf3Matrix


class MatrixFormatError(ValueError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def dumps(m: Gf3Matrix) -> str:
    lines = [f"GF3 {m.rows} {m.cols}"]
    lines += [" ".join(str(int(x)) for x in row) for row in m.array]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Gf3Matrix:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MatrixFormatError(1, "empty file")
    head = lines[0].split(" ")
    if len(head) != 3 or head[0] != "GF3" or not all(h.isdigit() for h in head[1:]):
        raise MatrixFormatError(1, f"expected header 'GF3 <rows> <cols>', got {lines[0]!r}")
    rows, cols = int(head[1]), int(head[2])
    if cols < 1:
        raise MatrixFormatError(1, "a matrix needs at least one column")
    body = lines[1:]
    if len(body) != rows:
        where = min(len(body), rows) + 2
        raise MatrixFormatError(where, f"expected {rows} rows, found {len(body)}")
    data = np.zeros((rows, cols), dtype=np.uint8)
    for i, line in enumerate(body):
        lineno = i + 2
        toks = line.split(" ")
        if len(toks) != cols:
            raise MatrixFormatError(lineno, f"expected {cols} entries, found {len(toks)}")
        for j, tok in enumerate(toks):
            if tok not in ("0", "1", "2"):
                raise MatrixFormatError(lineno, f"entry {j + 1} is {tok!r}, not a digit in {{0,1,2}}")
            data[i, j] = int(tok)
    return Gf3Matrix(data)


def read(path: str | Path) -> Gf3Matrix:
    return loads(Path(path).read_text())


def write(path: str | Path, m: Gf3Matrix) -> None:
    Path(path).write_text(dumps(m))
