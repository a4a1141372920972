"""Command line interface.

Exit codes: 0 success, 2 invalid parameters, 3 unsatisfied precondition,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import classify, core, designs, recognition, roots
from .core import LatticeParams

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _params(args) -> LatticeParams:
    try:
        return LatticeParams(args.k, args.m, args.n)
    except (ValueError, TypeError) as exc:
        raise CliError(str(exc), EXIT_INVALID) from exc


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _md_table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines.extend("| " + " | ".join(str(c) for c in r) + " |" for r in rows)
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# commands

def cmd_info(args) -> str:
    p = _params(args)
    q = core.normalize_params(p)
    label = classify.classify_root_lattice(p)
    witness = None
    if 1 <= q.m <= q.n - 1:
        w = classify.unimodular_witness(q)
        witness = None if w is None else {"p": w.p, "q": w.q}
    doc = {
        "params": list(p),
        "det": core.det_lattice(p),
        "signature": list(core.signature(p)),
        "type": classify.det_sign_name(p),
        "normalized": list(q),
        "root_lattice": label.name,
        "root_lattice_note": label.note,
        "unimodular_witness": witness,
        "even": core.is_even(p),
        "names": classify.known_names(p),
    }
    if args.normalize:
        doc["params"] = list(q)
    if args.format == "json":
        return _dump(doc)
    rows = [(key, doc[key]) for key in sorted(doc)]
    return _md_table(["field", "value"], rows)


def cmd_roots(args) -> str:
    p = _params(args)
    try:
        if args.list:
            vecs = roots.enumerate_roots(p, args.bound)
        else:
            table = roots.shell_table(p, args.norm, args.bound)
    except (roots.IndefiniteWithoutBound, roots.RankTooLarge) as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    if args.list:
        if args.format == "json":
            return _dump([list(v) for v in vecs])
        return "".join(" ".join(map(str, v)) + "\n" for v in vecs)
    if args.format == "json":
        return table.to_json() + "\n"
    if args.format == "csv":
        return table.to_csv()
    return table.to_markdown()


def cmd_weyl(args) -> str:
    p = _params(args)
    try:
        chain = roots.weyl_chain(p)
    except roots.NotARootLattice as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    order = 1
    for _, c in chain:
        order *= c
    doc = {"params": list(p), "root_lattice": classify.classify_root_lattice(p).name,
           "chain": [{"params": list(q), "c": c} for q, c in chain], "order": order}
    if args.format == "json":
        return _dump(doc)
    rows = [(str(q), c) for q, c in chain]
    return _md_table(["lattice", "c"], rows) + f"\norder: {order}\n"


def _build_frame(choice: str) -> designs.Frame:
    name, _, arg = choice.partition(":")
    try:
        if name == "fano":
            return designs.frame_from_design(designs.fano())
        if name == "e8":
            return designs.e8_frame()
        value = int(arg)
        if name == "hadamard-sylvester":
            H = designs.sylvester_hadamard(value)
            return designs.frame_from_design(designs.design_from_hadamard(H))
        if name == "hadamard-paley":
            H = designs.paley_hadamard(value)
            return designs.frame_from_design(designs.design_from_hadamard(H))
        if name == "dplus":
            return designs.dplus_frame(value)
        if name == "dn":
            return designs.dn_frame(value)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID) from exc
    raise CliError(f"unknown design {choice!r}", EXIT_INVALID)


def _frame_report(frame: designs.Frame, check: designs.FrameCheck, fmt: str) -> str:
    doc = {"params": list(frame.params), "norm": frame.norm,
           "vectors": [list(v) for v in frame.vectors],
           "verified": check.ok, "reason": check.reason}
    if fmt == "json":
        return _dump(doc)
    verdict = "verified" if check.ok else f"FAILED: {check.reason}"
    return (f"orthogonal {frame.norm}-frame of {frame.params}: {verdict}\n"
            + frame.vectors_text())


def cmd_frame(args) -> str:
    frame = _build_frame(args.design)
    check = designs.verify_frame(frame)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "gram.txt").write_text(core.format_gram(
            frame.gram(), f"Gram of the frame in {frame.params}"))
        (out / "vectors.txt").write_text(frame.vectors_text())
        (out / "params.txt").write_text(" ".join(map(str, frame.params)) + "\n")
    report = _frame_report(frame, check, args.format)
    if not check:
        raise CliError(report, EXIT_VERIFY)
    return report


def cmd_verify_frame(args) -> str:
    p = _params(args)
    try:
        rows = core.parse_rows(Path(args.vectors).read_text())
        vecs = tuple(core.LatticeVector(r) for r in rows)
    except (OSError, ValueError) as exc:
        raise CliError(str(exc), EXIT_INVALID) from exc
    frame = designs.Frame(p, vecs, args.norm)
    check = designs.verify_frame(frame)
    report = _frame_report(frame, check, args.format)
    if not check:
        raise CliError(report, EXIT_VERIFY)
    return report


def cmd_solve_det(args) -> str:
    try:
        sols = classify.solve_det_equation(args.d, args.k, args.max_n)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID) from exc
    if args.format == "json":
        return _dump([{"m": m, "n": n, "p": w.p, "q": w.q} for m, n, w in sols])
    return _md_table(["m", "n", "p", "q"], [(m, n, w.p, w.q) for m, n, w in sols])


def cmd_unimodular(args) -> str:
    try:
        found = classify.enumerate_unimodular(args.n, args.even)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID) from exc
    rows = []
    for p in found:
        w = classify.unimodular_witness(p)
        rows.append({"k": p.k, "m": p.m, "n": p.n, "p": w.p, "q": w.q,
                     "even": core.is_even(p)})
    if args.format == "json":
        return _dump(rows)
    return _md_table(["k", "m", "n", "p", "q", "even"],
                     [tuple(r[c] for c in ("k", "m", "n", "p", "q", "even")) for r in rows])


def cmd_recognize(args) -> str:
    try:
        G = core.parse_gram(Path(args.gram).read_text())
        rows = core.parse_rows(Path(args.sub).read_text(), width=len(G))
        L = recognition.AbstractLattice(G)
        S = recognition.SublatticeEmbedding(rows, n=len(G))
    except (OSError, ValueError) as exc:
        raise CliError(str(exc), EXIT_INVALID) from exc
    try:
        res = recognition.recognize(L, S, normalize=args.normalize)
    except recognition.RecognitionError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    except recognition.InternalInconsistency as exc:
        raise CliError(str(exc), EXIT_VERIFY) from exc
    return json.dumps(res.to_dict(), sort_keys=True) + "\n"


def cmd_gram(args) -> str:
    p = _params(args)
    return core.format_gram(core.gram_matrix(p),
                            f"{p} on m e_1, e_2 - e_1, ..., e_n - e_(n-1)")


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="checkerboard",
        description="Generalised checkerboard lattices L(k, m, n).")
    sub = parser.add_subparsers(dest="command", required=True)

    def kmn(sp):
        sp.add_argument("k", type=int)
        sp.add_argument("m", type=int)
        sp.add_argument("n", type=int)

    def fmt(sp, choices=("markdown", "json")):
        sp.add_argument("--format", choices=choices, default="markdown")

    sp = sub.add_parser("info", help="determinant, signature and classification")
    kmn(sp)
    sp.add_argument("--normalize", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("roots", help="norm shells by latitude and shape")
    kmn(sp)
    sp.add_argument("--list", action="store_true", help="list the vectors")
    sp.add_argument("--norm", type=int, default=2)
    sp.add_argument("--bound", type=int, default=None,
                    help="bound on |latitude| (needed unless positive-definite)")
    fmt(sp, ("markdown", "json", "csv"))
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("weyl", help="Weyl group order by the orbit recursion")
    kmn(sp)
    fmt(sp)
    sp.set_defaults(func=cmd_weyl)

    sp = sub.add_parser("frame", help="orthogonal frames from designs")
    sp.add_argument("--design", required=True,
                    help="fano | e8 | hadamard-sylvester:T | hadamard-paley:Q | "
                         "dplus:K | dn:N")
    sp.add_argument("--out", default=None, help="directory for gram/vector files")
    fmt(sp)
    sp.set_defaults(func=cmd_frame)

    sp = sub.add_parser("verify-frame", help="check a vector file is a frame")
    kmn(sp)
    sp.add_argument("vectors")
    sp.add_argument("--norm", type=int, default=2)
    fmt(sp)
    sp.set_defaults(func=cmd_verify_frame)

    sp = sub.add_parser("solve-det", help="solve m^2 - m n + k n = d")
    sp.add_argument("d", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--max-n", type=int, default=30)
    fmt(sp)
    sp.set_defaults(func=cmd_solve_det)

    sp = sub.add_parser("unimodular", help="positive-definite unimodular L(k, m, n)")
    sp.add_argument("n", type=int)
    sp.add_argument("--even", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_unimodular)

    sp = sub.add_parser("recognize", help="identify a lattice from an A_(n-1) sublattice")
    sp.add_argument("--gram", required=True)
    sp.add_argument("--sub", required=True)
    sp.add_argument("--normalize", action="store_true")
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("gram", help="print the Gram matrix of L(k, m, n)")
    kmn(sp)
    sp.set_defaults(func=cmd_gram)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        out = args.func(args)
    except CliError as exc:
        stream = sys.stdout if exc.code == EXIT_VERIFY else sys.stderr
        stream.write(str(exc).rstrip("\n") + "\n")
        return exc.code
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
