"""Command line front end.

Exit status: 0 when everything checked passes, 1 on a verification
failure, 2 on a usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .identities import (
    IdentitySyntaxError,
    NotAnIdentityError,
    collapse_search,
    eval_sequence,
    format_sequence,
    is_basic,
    is_strictly_basic,
    normal_forms,
    parse_identity,
)
from .serialize import witness_to_dict
from .sweep import SweepConfig, cmd_verify_sweep
from .twisted import main_theorem, verify_witness
from .words import (
    WordSyntaxError,
    crp,
    cyc_reduce,
    format_word,
    parse_word,
    primitive_root,
    reduce,
    rotations,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _word(text: str):
    return parse_word(text)


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_reduce(args) -> int:
    r = format_word(reduce(_word(args.word)))
    _emit(args, r, {"result": r})
    return EXIT_OK


def cmd_cycreduce(args) -> int:
    t, c = cyc_reduce(_word(args.word))
    t, c = format_word(t), format_word(c)
    _emit(args, f"t={t} c={c}", {"t": t, "c": c})
    return EXIT_OK


def cmd_crprod(args) -> int:
    r = format_word(crp(_word(args.u), _word(args.v)))
    _emit(args, r, {"result": r})
    return EXIT_OK


def cmd_rotations(args) -> int:
    rots = [format_word(r) for r in rotations(_word(args.word))]
    _emit(args, "\n".join(rots), {"rotations": rots})
    return EXIT_OK


def cmd_root(args) -> int:
    w = reduce(_word(args.word))
    root, m = primitive_root(w)
    r = format_word(root)
    _emit(args, f"{r}^{m}", {"root": r, "exponent": m})
    return EXIT_OK


def format_witness_text(d: dict) -> str:
    lines = [f"case {d['case']}", f"u  = {d['u']}", f"w  = {d['w']}",
             f"f  = u^-1 * w = {d['f']}", f"g  = w * u^-1 = {d['g']}",
             f"u' = {d['u_prime']}"]
    if d["case"] == "A":
        lines.append(f"u''= {d['u_dblprime']}")
    else:
        lines.append(f"h  = {d['h']}")
    for name in ("cert1", "cert2"):
        c = d.get(name)
        if c:
            lines.append(f"{name} [{c['claim']}] {c['identity']}")
    for k, ok in d.get("checks", {}).items():
        lines.append(f"  {k}: {'true' if ok else 'false'}")
    lines.append("verified" if d.get("passed") else "FAILED")
    return "\n".join(lines)


def cmd_witness(args) -> int:
    u, w = _word(args.u), _word(args.w)
    mw = main_theorem(u, w)
    report = verify_witness(u, w, mw)
    d = witness_to_dict(mw, report)
    if args.json:
        print(json.dumps(d))
    else:
        print(format_witness_text(d))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        cfg = SweepConfig(alphabet_size=args.alphabet, max_len_u=args.max_u,
                          max_len_w=args.max_w, parallelism=args.jobs,
                          output_path=args.out, oracle_bound=args.oracle_bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        report = cmd_verify_sweep(cfg)
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(f"pairs {report.pairs_checked}  A {report.case_a_count}  "
              f"B {report.case_b_count}  oracle {report.oracle_checked}  "
              f"failures {report.failures}  ({report.wall_time:.1f}s)")
        for u, w, reason in report.failure_samples:
            print(f"  FAIL u={u} w={w}: {reason}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _identity_verdict(line: str, mode: str):
    ident = parse_identity(line)
    nf, _ = normal_forms(ident)
    if mode == "basic":
        return is_basic(nf), None
    if mode == "strict":
        return is_strictly_basic(nf), None
    bound = int(mode.split(":", 1)[1])
    trace = collapse_search(nf, bound)
    return trace is not None, (" ".join(map(str, trace)) if trace is not None else None)


def cmd_identity(args) -> int:
    mode = args.mode
    if mode not in ("basic", "strict"):
        head, _, n = mode.partition(":")
        if head != "collapse" or not n.isdigit():
            raise UsageError(f"mode must be basic, strict or collapse:N, got {mode!r}")
    try:
        with open(args.path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc}") from exc
    status = EXIT_OK
    results = []
    for no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            ok, detail = _identity_verdict(line, mode)
        except IdentitySyntaxError as exc:
            print(f"line {no}: malformed: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except NotAnIdentityError as exc:
            ok, detail = False, f"error: {exc}"
        if not ok:
            status = EXIT_FAIL
        results.append({"line": no, "ok": ok, "detail": detail})
        if not args.json:
            extra = f"  {detail}" if detail else ""
            print(f"line {no}: {'true' if ok else 'false'}{extra}")
    if args.json:
        print(json.dumps(results))
    return status


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")

    p = argparse.ArgumentParser(prog="crprod", description=(
        "Cyclically reduced products of free group words and twisted associativity witnesses."))
    sub = p.add_subparsers(dest="verb", required=True)

    for name, fn, helptext in (("reduce", cmd_reduce, "free reduction"),
                               ("cycreduce", cmd_cycreduce, "conjugator and cyclic core"),
                               ("rotations", cmd_rotations, "all rotations"),
                               ("root", cmd_root, "primitive root and exponent")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("word")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("crprod", parents=[common], help="cyclically reduced product u*v")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.set_defaults(func=cmd_crprod)

    sp = sub.add_parser("witness", parents=[common], help="certified witness for (u, w)")
    sp.add_argument("u")
    sp.add_argument("w")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("verify", parents=[common], help="exhaustive sweep over small words")
    sp.add_argument("--alphabet", type=int, default=2, metavar="K")
    sp.add_argument("--max-u", type=int, default=4, metavar="N")
    sp.add_argument("--max-w", type=int, default=6, metavar="M")
    sp.add_argument("--jobs", type=int, default=1, metavar="P")
    sp.add_argument("--out", default=None, metavar="PATH")
    sp.add_argument("--oracle-bound", type=int, default=5, metavar="L",
                    help="run the brute-force oracle when both lengths are <= L")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("identity", parents=[common], help="check an identity file")
    sp.add_argument("path")
    sp.add_argument("--mode", default="basic", help="basic, strict or collapse:N")
    sp.set_defaults(func=cmd_identity)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WordSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
