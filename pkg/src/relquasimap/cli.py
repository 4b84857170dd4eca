"""
Batch command line: Bruhat path counts, KL tables, graded dimensions,
tilting decompositions and invariant suites.

Exit codes: 0 ok, 1 verification failed, 2 invalid input.

    relquasimap weyl --n 3 --edges all
    relquasimap dims --n 2 --lambda 3,1 --w 1,2 --box 5 --format csv
    relquasimap decompose --n 3 --lambda 2,1,0 --box 4,4
    relquasimap verify inverse-kl --n 4
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from .exceptions import InputError, VerificationError
from .kl import MAX_N, kl_polynomial, p_value
from .laumon import count_v
from .qmrel import WeightParameter, graded_dim_direct, graded_dim_formula
from .repn import check_decomposition, degrees_in_box, tilting_multiplicities
from .verify import SUITES, run_suite
from .weyl import EdgeMode, Permutation, identity, path_count, permutations_by_length

logger = logging.getLogger(__name__)


class Table:
    """Records plus metadata; JSON carries both, CSV and text only the records."""

    def __init__(self, fields, records, meta=None):
        self.fields = list(fields)
        self.records = list(records)
        self.meta = dict(meta or {})

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(dict(self.meta, records=self.records), indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=self.fields, lineterminator="\n")
            writer.writeheader()
            for rec in self.records:
                writer.writerow({k: _flat(rec[k]) for k in self.fields})
            return buf.getvalue()
        rows = [[_flat(rec[k]) for k in self.fields] for rec in self.records]
        widths = [max([len(f)] + [len(r[i]) for r in rows]) for i, f in enumerate(self.fields)]
        lines = ["  ".join(f.ljust(wd) for f, wd in zip(self.fields, widths))]
        lines += ["  ".join(c.ljust(wd) for c, wd in zip(r, widths)) for r in rows]
        lines += [f"# {k}: {_flat(v)}" for k, v in self.meta.items()]
        return "\n".join(lines) + "\n"


def _flat(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        if all(isinstance(v, int) and not isinstance(v, bool) for v in value):
            return ",".join(map(str, value))
        return json.dumps(value)
    return str(value)


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _n(args) -> int:
    if args.n is None or not 1 <= args.n <= MAX_N:
        raise InputError(f"--n must be between 1 and {MAX_N}")
    return args.n


def _w(args, n: int) -> Permutation:
    w = identity(n) if args.w is None else Permutation.parse(args.w)
    if w.n != n:
        raise InputError(f"--w must be a permutation of 1..{n}")
    return w


def _lam(args, n: int) -> WeightParameter:
    lam = args.lam if args.lam is not None else tuple(range(n - 1, -1, -1))
    if len(lam) != n:
        raise InputError(f"--lambda needs {n} entries")
    return WeightParameter(lam)


def _box(args, n: int, default: int = 4) -> tuple[int, ...]:
    box = args.box if args.box is not None else (default,) * (n - 1)
    if len(box) == 1 and n > 2:
        box = box * (n - 1)
    if len(box) != n - 1 or any(b < 0 for b in box):
        raise InputError(f"--box needs {n - 1} non-negative entries")
    return box


def cmd_weyl(args) -> tuple[Table, int]:
    n = _n(args)
    mode = EdgeMode.parse(args.edges)
    elements = permutations_by_length(n)
    sources = [_w(args, n)] if args.w is not None else elements
    matrix = [[path_count(w, u, mode) for u in elements] for w in sources]
    records = [{"w": str(w), "u": str(u), "b": b}
               for w, row in zip(sources, matrix) for u, b in zip(elements, row)]
    meta = {"command": "weyl", "n": n, "edges": mode.value,
            "elements": [str(u) for u in elements], "matrix": matrix}
    return Table(["w", "u", "b"], records, meta), 0


def cmd_kl(args) -> tuple[Table, int]:
    n = _n(args)
    elements = permutations_by_length(n)
    records = []
    for u in elements:
        for w in elements:
            poly = kl_polynomial(u, w)
            records.append({"u": str(u), "w": str(w), "P": poly.to_pairs(),
                            "P_str": str(poly), "p": p_value(u, w)})
    return Table(["u", "w", "P", "P_str", "p"], records, {"command": "kl", "n": n}), 0


def cmd_dims(args) -> tuple[Table, int]:
    n = _n(args)
    mode = EdgeMode.parse(args.edges)
    w, lam = _w(args, n), _lam(args, n)
    degrees = [args.degree] if args.degree is not None else degrees_in_box(_box(args, n))
    records, status = [], 0
    for d in degrees:
        if len(d) != n - 1:
            raise InputError(f"--degree needs {n - 1} entries")
        formula = graded_dim_formula(w, lam, d, mode)
        direct = graded_dim_direct(w, lam, d, mode)
        if formula != direct:
            status = 1
        records.append({"d": list(d), "formula": formula, "direct": direct,
                        "match": formula == direct, "verma": count_v(n, d)})
    meta = {"command": "dims", "n": n, "w": str(w), "lambda": list(lam.lam),
            "edges": mode.value}
    return Table(["d", "formula", "direct", "match", "verma"], records, meta), status


def cmd_decompose(args) -> tuple[Table, int]:
    n = _n(args)
    mode = EdgeMode.parse(args.edges)
    w, lam = _w(args, n), _lam(args, n)
    box = _box(args, n)
    row = tilting_multiplicities(w, lam, n, mode)
    verdict = check_decomposition(w, lam, box, mode)
    records = [{"y": str(y), "n": row.entries[y]} for y in permutations_by_length(n)]
    meta = {"command": "decompose", "w": str(w), "lambda": list(lam.lam),
            "edges": mode.value, "box": list(box), "verdict": "pass" if verdict else "fail"}
    return Table(["y", "n"], records, meta), 0 if verdict else 1


def cmd_verify(args) -> tuple[Table, int]:
    result = run_suite(args.suite, args.n, args.edges)
    record = result.to_dict()
    return (Table(["suite", "passed", "checked", "counterexample"], [record],
                  {"command": "verify", "edges": EdgeMode.parse(args.edges).value}),
            0 if result.passed else 1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="size of the symmetric group")
    common.add_argument("--lambda", dest="lam", type=_int_list,
                        help="strictly decreasing integers, e.g. 2,1,0")
    common.add_argument("--w", help="permutation in one-line notation, e.g. 2,3,1")
    common.add_argument("--degree", type=_int_list, help="a single degree vector")
    common.add_argument("--box", type=_int_list, help="box shape; degrees 0 <= d_i < box_i")
    common.add_argument("--edges", default="all", choices=["all", "simple"])
    common.add_argument("--format", default="text", choices=["json", "csv", "text"])
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="relquasimap", description=__doc__.splitlines()[1])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, func, helptext in [
        ("weyl", cmd_weyl, "Bruhat path counts b_{w,u}"),
        ("kl", cmd_kl, "Kazhdan-Lusztig polynomials and their values at 1"),
        ("dims", cmd_dims, "graded dimensions of H_{lambda,w} by both routes"),
        ("decompose", cmd_decompose, "tilting multiplicities and character check"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.set_defaults(func=func)
    p = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    p.add_argument("suite", help="one of: " + ", ".join(SUITES))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        table, status = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        print(json.dumps(exc.counterexample, indent=2), file=sys.stderr)
        return 1
    text = table.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if status == 1 and args.func is cmd_verify:
        print(json.dumps(table.records[0]["counterexample"]), file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
