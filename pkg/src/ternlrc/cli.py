"""Command line: construct, verify, classify, search, and tabulate optimal ternary LRCs.

Exit codes: 0 success / found, 1 not optimal / not found / does not exist,
2 usage or input error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import matrixfile
from .bounds import BoundReport, report_plotkin, report_singleton_like, singleton_like_d
from .classifier import ClassVerdict, classify
from .code import LinearCode, min_distance
from .constructions import (
    BUILDERS,
    ConstructionError,
    expected_parameters,
    table_specs,
    verify_construction,
    write_class5_sequences,
)
from .gf3 import Gf3Matrix
from .locality import locality_profile
from .oracle import DEFAULT_CAP, SearchTask, exists_optimal_lrc, scan_parameter_grid

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

CLASS_PARAMS = {1: ("k", "r"), 2: ("g",), 3: ("k",), 4: (), 5: ("n", "k"), 6: ("l",), 7: ("l",), 8: ()}


class InvariantFailure(RuntimeError):
    pass


def _bool(b: bool) -> str:
    return "true" if b else "false"


@dataclass
class VerificationReport:
    n: int
    k: int
    d: int
    profile: tuple[int, ...]
    locality: int
    declared_r: int | None
    target_declared: int | None
    target_exact: int
    optimal: bool
    verdict: ClassVerdict | None
    bounds: list[BoundReport] = field(default_factory=list)
    elapsed: float = 0.0

    def kv_lines(self) -> list[str]:
        cls = ",".join(str(c) for c in self.verdict.class_ids) if self.verdict and self.verdict.exists else "none"
        lines = [
            f"n={self.n}",
            f"k={self.k}",
            f"d={self.d}",
            "locality_profile=" + ",".join(str(r) for r in self.profile),
            f"r={self.locality}",
            f"declared_r={self.declared_r if self.declared_r is not None else 'none'}",
            f"target_d_declared={self.target_declared if self.target_declared is not None else 'none'}",
            f"target_d_exact={self.target_exact}",
            f"within_declared={_bool(self.locality <= self.declared_r) if self.declared_r is not None else 'none'}",
            f"optimal={_bool(self.optimal)}",
            f"class={cls}",
        ]
        for b in self.bounds:
            lines.append(f"bound.{b.name}={b.value};{'holds' if b.satisfied else 'violated'}")
        lines.append(f"elapsed_s={self.elapsed:.3f}")
        return lines

    def text_lines(self) -> list[str]:
        out = [
            f"code: [{self.n}, {self.k}, {self.d}]",
            f"locality: {self.locality} (per symbol: {' '.join(str(r) for r in self.profile)})",
            f"singleton-like target at exact r={self.locality}: d <= {self.target_exact}",
        ]
        if self.declared_r is not None:
            ok = "meets" if self.locality <= self.declared_r else "exceeds"
            out.append(f"declared r={self.declared_r}: target d <= {self.target_declared}; exact locality {ok} it")
        out.append(f"optimal: {_bool(self.optimal)}")
        if self.verdict is None:
            out.append("class: n/a (outside 1 <= r <= k-1)")
        else:
            out.append(f"class: {self.verdict.summary()}")
        out.append("bounds:")
        out += [f"  {b}" for b in self.bounds]
        out.append(f"elapsed: {self.elapsed:.3f} s")
        return out


def verify_matrix(h: Gf3Matrix, declared_r: int | None = None) -> VerificationReport:
    t0 = time.perf_counter()
    code = LinearCode.from_parity_check(h)
    d = min_distance(code)
    prof = locality_profile(code)
    r = prof.code_locality
    target_exact = singleton_like_d(code.n, code.k, max(r, 1))
    target_declared = singleton_like_d(code.n, code.k, declared_r) if declared_r is not None else None
    r_cls = declared_r if declared_r is not None else r
    verdict = None
    if 1 <= r_cls <= code.k - 1 and code.k <= code.n - 1:
        verdict = classify(code.n, code.k, r_cls)
    bounds = [report_singleton_like(code.n, code.k, max(r, 1), d), report_plotkin(code.n, 3**code.k, d)]
    if not all(b.satisfied for b in bounds):
        raise InvariantFailure("a verified code violates a proven bound: " + "; ".join(map(str, bounds)))
    return VerificationReport(
        n=code.n,
        k=code.k,
        d=d,
        profile=prof.per_symbol,
        locality=r,
        declared_r=declared_r,
        target_declared=target_declared,
        target_exact=target_exact,
        optimal=d == target_exact,
        verdict=verdict,
        bounds=bounds,
        elapsed=time.perf_counter() - t0,
    )


def parse_cap(text: str) -> int:
    """Accept ``43046721`` or ``3^16``."""
    s = text.strip().replace("**", "^")
    try:
        if "^" in s:
            base, exp = s.split("^")
            return int(base) ** int(exp)
        return int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid cap {text!r}; use an integer or 3^N") from None


def _emit(lines, out) -> None:
    for line in lines:
        print(line, file=out)


def cmd_construct(args, out) -> int:
    names = CLASS_PARAMS[args.class_id]
    params = {}
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise ConstructionError(f"class {args.class_id} needs --{name}")
        params[name] = value
    code = BUILDERS[args.class_id](**params)
    n, k, d, r = expected_parameters(args.class_id, **params)
    text = matrixfile.dumps(code.parity_check)
    if args.output in (None, "-"):
        out.write(text)
    else:
        Path(args.output).write_text(text)
        print(f"wrote {code.parity_check.rows}x{code.parity_check.cols} parity-check matrix "
              f"of the ({n},{k},{r}) LRC with d={d} to {args.output}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    h = matrixfile.read(args.input)
    rep = verify_matrix(h, args.r)
    _emit(rep.kv_lines() if args.format == "kv" else rep.text_lines(), out)
    return EXIT_OK if rep.optimal else EXIT_NEGATIVE


def _verdict_lines(v: ClassVerdict, fmt: str) -> list[str]:
    if fmt == "kv":
        lines = [
            f"n={v.n}",
            f"k={v.k}",
            f"r={v.r}",
            f"target_d={v.target_d}",
            "class=" + (",".join(str(c) for c in v.class_ids) if v.exists else "none"),
            f"exists={_bool(v.exists)}",
        ]
        lines += [f"explanation.{i}={e}" for i, e in enumerate(v.explanation, 1)]
        return lines
    return [v.summary()] + [f"  because {e}" for e in v.explanation]


def cmd_classify(args, out) -> int:
    v = classify(args.n, args.k, args.r)
    _emit(_verdict_lines(v, args.format), out)
    return EXIT_OK if v.exists else EXIT_NEGATIVE


def cmd_search(args, out) -> int:
    task = SearchTask(args.n, args.k, args.r, cap=args.cap, mode=args.mode, workers=args.workers)
    res = exists_optimal_lrc(task)
    if args.format == "kv":
        lines = [
            f"n={task.n}", f"k={task.k}", f"r={task.r}", f"target_d={task.d}", f"mode={task.mode}",
            f"found={_bool(res.found)}", f"count={res.count}", f"examined={res.examined}",
            f"elapsed_s={res.elapsed:.3f}",
        ]  # fmt: skip
    elif task.mode == "count-all":
        lines = [f"{'FOUND' if res.found else 'NOT FOUND'}: {res.count} systematic matrices ({res.examined} examined)"]
    elif res.found:
        lines = [f"FOUND ({res.examined} examined)"]
    else:
        lines = [f"NOT FOUND ({res.examined} examined)"]
    if res.found and res.witness is not None:
        witness_h = LinearCode.from_generator(res.witness).parity_check
        if args.output:
            matrixfile.write(args.output, witness_h)
            lines.append(f"witness parity-check matrix written to {args.output}")
        elif args.format != "kv":
            lines.append("witness generator:")
            lines += ["  " + " ".join(str(x) for x in row) for row in res.witness.tolist()]
    _emit(lines, out)
    return EXIT_OK if res.found else EXIT_NEGATIVE


def build_table() -> list[dict]:
    return [verify_construction(s) for s in table_specs()]


def cmd_table(args, out) -> int:
    rows = build_table()
    if args.format == "kv":
        for row in rows:
            print(
                f"class={row['class_id']} n={row['n']} k={row['k']} r={row['r']} d={row['d']} "
                f"matches={_bool(row['matches'])} optimal={_bool(row['optimal'])}",
                file=out,
            )
    else:
        print(f"{'class':<6}{'params':<16}{'(n, k, r, d)':<18}", file=out)
        for row in rows:
            params = ",".join(f"{k}={v}" for k, v in row["params"].items()) or "-"
            quad = f"({row['n']}, {row['k']}, {row['r']}, {row['d']})"
            print(f"{row['class_id']:<6}{params:<16}{quad:<18}optimal: {_bool(row['optimal'] and row['matches'])}", file=out)
    if args.figure:
        from .report import plot_table

        plot_table(rows, args.figure)
    if not all(r["matches"] and r["optimal"] for r in rows):
        raise InvariantFailure("a construction does not meet its promised parameters")
    return EXIT_OK


def cmd_grid(args, out) -> int:
    rows = scan_parameter_grid(args.n_max, args.cap, args.workers)
    for row in rows:
        cls = ",".join(str(c) for c in row.verdict.class_ids) or "none"
        if args.format == "kv":
            print(
                f"n={row.n} k={row.k} r={row.r} target_d={row.target_d} oracle={_bool(row.oracle_found)} "
                f"classifier={_bool(row.verdict.exists)} class={cls} agree={_bool(row.agree)}",
                file=out,
            )
        else:
            mark = "ok" if row.agree else "MISMATCH"
            print(f"({row.n}, {row.k}, {row.r}) d={row.target_d}: oracle "
                  f"{'found' if row.oracle_found else 'none'}, classifier {cls}  {mark}", file=out)
    agree = sum(r.agree for r in rows)
    print(f"agreement: {agree}/{len(rows)}", file=out)
    if args.figure:
        from .report import plot_grid

        plot_grid(rows, args.figure)
    if agree != len(rows):
        raise InvariantFailure("oracle and classifier disagree")
    return EXIT_OK


def cmd_derive_class5(args, out) -> int:
    path = Path(args.output)
    write_class5_sequences(path)
    print(f"wrote class-5 derivations to {path}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ternlrc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("text", "kv"), default="text", help="output format (default: text)")

    c = sub.add_parser("construct", help="write the parity-check matrix of a class member")
    c.add_argument("--class", dest="class_id", type=int, required=True, choices=range(1, 9))
    for name in ("k", "r", "g", "l", "n"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("-o", "--output", help="output file (default: stdout)")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="measure a parity-check matrix file")
    v.add_argument("input")
    v.add_argument("--r", type=int, help="declared locality")
    v.add_argument("--format", **fmt)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("classify", help="decide whether an optimal (n, k, r) LRC exists")
    for name in ("n", "k", "r"):
        k.add_argument(name, type=int)
    k.add_argument("--format", **fmt)
    k.set_defaults(func=cmd_classify)

    s = sub.add_parser("search", help="exhaustive search over systematic generator matrices")
    for name in ("n", "k", "r"):
        s.add_argument(name, type=int)
    s.add_argument("--cap", type=parse_cap, default=DEFAULT_CAP, help="largest search space, e.g. 3^16")
    s.add_argument("--mode", choices=("find-first", "count-all"), default="find-first")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("-o", "--output", help="write the witness parity-check matrix here")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("table", help="construct and verify one code per class point")
    t.add_argument("--format", **fmt)
    t.add_argument("--figure", help="also render the table to this image file")
    t.set_defaults(func=cmd_table)

    g = sub.add_parser("grid", help="oracle vs. classifier on every small triple")
    g.add_argument("--n-max", type=int, default=7)
    g.add_argument("--cap", type=parse_cap, default=3**12)
    g.add_argument("--workers", type=int, default=1)
    g.add_argument("--format", **fmt)
    g.add_argument("--figure", help="also render the grid to this image file")
    g.set_defaults(func=cmd_grid)

    f = sub.add_parser("derive-class5", help="rerun the class-5 derivation search and write the sequence file")
    f.add_argument("-o", "--output", required=True)
    f.set_defaults(func=cmd_derive_class5)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (InvariantFailure, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
