"""Command-line interface: ``skewpm <subcommand> ...``.

Exit status: 0 for any decided result (including NOT_EQUIVALENT and
"none"), 1 for bad input, 2 when a search budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from . import digraph_orient as dg
from .equivalence import (
    DEFAULT_BUDGET,
    ENTRY_SETS,
    Status,
    conjecture_scan,
    decide_equivalence,
    verify_certificate,
)
from .errors import MatrixFormatError, SkewPMError
from .hlclan import ReversalCertificate, enumerate_hl_clans, invert
from .matrix_core import format_matrix, load_matrix
from .minor_engine import fingerprint_json
from .similarity import find_similarity_up_to_transpose, loewy_condition, pattern_mismatch
from .subsets import from_indices, to_indices

EXIT_OK, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2

MATRIX_FORMAT_HELP = """\
matrix files: the dimension n, then n*n integers in row-major order,
separated by any whitespace. The matrix must be skew-symmetric.
Vertices are numbered 1..n in all input and output. Example (n=3):

    3
     0  1 -1
    -1  0  1
     1 -1  0
"""


def _emit(args, payload, human: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _cmd_pm(args) -> int:
    A = load_matrix(args.matrix)
    data = fingerprint_json(A, args.order)
    lines = [f"{m['subset']}: {m['value']}" for m in data["minors"]]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _cmd_clans(args) -> int:
    A = load_matrix(args.matrix)
    clans = enumerate_hl_clans(A)
    data = clans.to_json()
    lines = [f"{c['subset']}{'' if c['trivial'] else '  (nontrivial)'}" for c in data]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _parse_subset(text: str, n: int) -> int:
    text = text.strip()
    if not text:
        return 0
    try:
        labels = [int(x) for x in text.split(",")]
    except ValueError:
        raise MatrixFormatError(f"bad subset {text!r}; expected e.g. 1,3,4") from None
    return from_indices(labels, n)


def _cmd_invert(args) -> int:
    A = load_matrix(args.matrix)
    X = _parse_subset(args.subset, A.n)
    sys.stdout.write(format_matrix(invert(A, X)))
    return EXIT_OK


def _cmd_triples(args) -> int:
    g1 = dg.from_skew(load_matrix(args.a))
    g2 = dg.from_skew(load_matrix(args.b))
    if g1.n != g2.n:
        raise SkewPMError(f"dimension mismatch: {g1.n} vs {g2.n}")
    rows = []
    for c in combinations(range(g1.n), 3):
        t = sum(1 << v for v in c)
        rows.append(
            {"triple": to_indices(t), "a": str(dg.triple_class(g1, t)), "b": str(dg.triple_class(g2, t))}
        )
    data: dict = {"triples": rows}
    if g1.edges() == g2.edges():
        res = dg.triples_hemimorphic(g1, g2)
        data["status"] = res.status
        data["first_mismatch"] = None if res.equal else to_indices(res.witness)
    else:
        data["status"] = "DIFFERENT-GRAPHS"
        data["first_mismatch"] = next(
            (r["triple"] for r in rows if r["a"] != r["b"]), None
        )
    lines = [f"{r['triple']}: {r['a']} | {r['b']}" for r in rows]
    lines.append(f"{data['status']}" + (f" first mismatch {data['first_mismatch']}" if data["first_mismatch"] else ""))
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _cmd_similar(args) -> int:
    A, B = load_matrix(args.a), load_matrix(args.b)
    if A.shape != B.shape:
        raise SkewPMError(f"dimension mismatch: {A.shape} vs {B.shape}")
    w = find_similarity_up_to_transpose(A, B)
    if w is None:
        data: object = "none"
        bad = pattern_mismatch(A, B)
        human = "none" + (f" (zero patterns differ at {bad[0] + 1},{bad[1] + 1})" if bad else "")
    else:
        data = w.to_json()
        human = f"diagonal {' '.join(data['diagonal'])} transposed={str(w.transposed).lower()}"
    _emit(args, data, human)
    return EXIT_OK


def _cmd_loewy(args) -> int:
    A = load_matrix(args.matrix)
    res = loewy_condition(A)
    data = res.to_json(A.n)
    human = "holds" if res.holds else f"fails ({res.reason}): {data['partition'][0]} | {data['partition'][1]}"
    _emit(args, data, human)
    return EXIT_OK


def _cmd_equiv(args) -> int:
    A, B = load_matrix(args.a), load_matrix(args.b)
    if A.shape != B.shape:
        raise SkewPMError(f"dimension mismatch: {A.shape} vs {B.shape}")
    v = decide_equivalence(A, B, max_states=args.budget)
    data = v.to_json()
    human = v.status.value
    if v.certificate is not None:
        human += f" steps={data['certificate']['steps']}"
    if v.witness is not None:
        w = data["witness"]
        human += f" subset={w['subset']} minors {w['value_a']} vs {w['value_b']}"
    _emit(args, data, human)
    return EXIT_UNDECIDED if v.status is Status.UNDECIDED else EXIT_OK


def _cmd_verify(args) -> int:
    A, B = load_matrix(args.a), load_matrix(args.b)
    try:
        with open(args.cert, encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"certificate is not JSON: {exc.msg}", exc.lineno, exc.colno) from None
    cert = ReversalCertificate.from_json(raw, A.n)
    check = verify_certificate(A, cert, B)
    human = "valid" if check else f"invalid at step {check.failed_step}: {check.reason}"
    _emit(args, check.to_json(), human)
    return EXIT_OK


def _cmd_scan(args) -> int:
    exhaustive = args.samples is None
    rep = conjecture_scan(
        args.n, args.entries, exhaustive=exhaustive, samples=args.samples or 0,
        seed=args.seed, max_states=args.budget,
    )
    data = rep.to_json()
    human = (
        f"n={rep.n} entries={rep.entries} mode={rep.mode} matrices={rep.matrices} "
        f"groups={rep.groups} orbits={rep.orbits} "
        f"max_certificate_length={rep.max_certificate_length} "
        f"counterexamples={len(rep.counterexamples)} incomplete={str(rep.incomplete).lower()}"
    )
    _emit(args, data, human)
    return EXIT_UNDECIDED if rep.incomplete else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "human"), default="json")

    p = _Parser(
        prog="skewpm",
        description="Principal-minor equivalence of skew-symmetric matrices via HL-clan reversals.",
        epilog=MATRIX_FORMAT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_, epilog=MATRIX_FORMAT_HELP,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.set_defaults(func=fn)
        return sp

    sp = add("pm", _cmd_pm, "principal minors (all orders, or one with --order)")
    sp.add_argument("--order", type=int, default=None)
    sp.add_argument("matrix")

    sp = add("clans", _cmd_clans, "list all HL-clans")
    sp.add_argument("matrix")

    sp = add("invert", _cmd_invert, "reverse a subset and print the matrix")
    sp.add_argument("--subset", required=True, help="comma-separated vertices, e.g. 1,3,4")
    sp.add_argument("matrix")

    sp = add("triples", _cmd_triples, "compare 3-vertex induced subdigraphs")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("similar", _cmd_similar, "diagonal similarity up to transposition")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("loewy", _cmd_loewy, "check the irreducibility and bipartition rank condition")
    sp.add_argument("matrix")

    sp = add("equiv", _cmd_equiv, "decide HL-clan-reversal equivalence")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max visited states")

    sp = add("verify", _cmd_verify, "check a reversal certificate")
    sp.add_argument("a")
    sp.add_argument("cert")
    sp.add_argument("b")

    sp = add("scan", _cmd_scan, "compare minor equality with reversal equivalence")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--entries", choices=sorted(ENTRY_SETS), default="pm1")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="every matrix (default)")
    mode.add_argument("--samples", type=int, default=None, help="random sample size")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max states per orbit")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SkewPMError, OSError) as exc:
        print(f"skewpm: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
