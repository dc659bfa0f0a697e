"""Command line front end: ``lensgenus present | verify | certify``.

Exit codes: 0 success, 1 a legitimate negative answer (no rank-1
presentation, search found nothing, matrix does not present the form,
step ceiling reached), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .certify import certificate_to_dict, embedding_report, report_to_dict, report_to_text
from .forms import (
    CyclicLinkingForm,
    GramPairing,
    as_cyclic,
    canonical_q,
    cyclic_equivalent,
    presented_linking_form,
)
from . import intmatrix as im
from .numtheory import DEFAULT_CEILING, CeilingExceeded, gcd
from .presentations import (
    definite_presentation,
    even_presentation,
    plumbing_presentation,
    rank1_presentation,
    rank2_constructive,
    rank2_presentation,
    search_definite_presentation,
)

__all__ = ["main", "encode_ints", "decode_int", "read_matrix_document", "InputError"]

SAFE_INT = 2**53 - 1

TARGETS = ("rank1", "rank2", "rank2-constructive", "even", "definite", "plumbing", "search")


class InputError(ValueError):
    """Malformed user input; maps to exit code 2."""


def encode_ints(obj):
    """Replace integers too large for a double with their decimal strings."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, dict):
        return {k: encode_ints(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode_ints(v) for v in obj]
    return obj


def decode_int(x) -> int:
    if isinstance(x, bool):
        raise InputError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            raise InputError(f"expected an integer, got {x!r}") from None
    if isinstance(x, float) and x.is_integer():
        return int(x)
    raise InputError(f"expected an integer, got {x!r}")


def dump(obj) -> str:
    return json.dumps(encode_ints(obj), indent=2, ensure_ascii=False) + "\n"


def read_matrix_document(text: str) -> im.IntMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"matrix document is not valid JSON: {e}") from None
    if not isinstance(doc, dict) or "gram" not in doc:
        raise InputError('matrix document must be an object with a "gram" field')
    gram = doc["gram"]
    if not isinstance(gram, list) or not all(isinstance(row, list) for row in gram):
        raise InputError("gram must be a list of rows")
    m = tuple(tuple(decode_int(x) for x in row) for row in gram)
    n = decode_int(doc.get("rank", len(m)))
    if n != len(m) or any(len(row) != n for row in m):
        raise InputError(f"gram is not {n} x {n}")
    if not im.is_symmetric(m):
        raise InputError("gram matrix is not symmetric")
    if im.determinant(m) == 0:
        raise InputError("gram matrix is singular (determinant 0)")
    return m


def _target(p: int, q: int) -> CyclicLinkingForm:
    if p < 1:
        raise InputError(f"p must be >= 1, got {p}")
    if gcd(p, q) != 1:
        raise InputError(f"gcd(p, q) = gcd({p}, {q}) = {gcd(p, q)}, need 1")
    return CyclicLinkingForm(p, q)


def _err(msg: str) -> None:
    sys.stderr.write(msg + "\n")


def cmd_present(p: int, q: int, target: str, max_rank: int = 4,
                ceiling: int = DEFAULT_CEILING) -> tuple[int, str]:
    t = _target(p, q)
    if target not in ("rank1", "even", "definite") and p < 2:
        raise InputError(f"--target {target} needs p >= 2")
    if target == "rank1":
        cert = rank1_presentation(p, t.q)
        if cert is None:
            return 1, f"no rank-1 presentation: neither ±{t.q} is a square mod {p}"
    elif target == "rank2":
        cert = rank2_presentation(p, t.q, ceiling)
    elif target == "rank2-constructive":
        cert = rank2_constructive(p, t.q, ceiling)
    elif target == "even":
        cert = even_presentation(p, t.q, ceiling)
    elif target == "definite":
        cert = definite_presentation(p, t.q, ceiling)
    elif target == "plumbing":
        cert = plumbing_presentation(p, t.q)
    elif target == "search":
        if not 1 <= max_rank <= 4:
            raise InputError(f"--max-rank must be between 1 and 4, got {max_rank}")
        cert = search_definite_presentation(p, t.q, max_rank)
        if cert is None:
            return 1, f"no positive definite presentation of rank <= {max_rank} found"
    else:
        raise InputError(f"unknown target {target!r}")
    return (0 if cert.verified else 1), dump(certificate_to_dict(cert))


def cmd_verify(p: int, q: int, matrix: im.IntMatrix) -> tuple[int, str]:
    t = _target(p, q)
    P = GramPairing(matrix)
    L = presented_linking_form(P)
    got = as_cyclic(L)
    presented = {"invariant_factors": list(L.invariant_factors)}
    if got is not None:
        presented["cyclic_q_canonical"] = canonical_q(got)
    ok = got is not None and abs(P.det) == t.p and cyclic_equivalent(got, t)
    doc = {"presents": ok, "presented": presented, "det": P.det}
    return (0 if ok else 1), dump(doc)


def cmd_certify(p: int, q: int, as_json: bool = False,
                ceiling: int = DEFAULT_CEILING) -> tuple[int, str]:
    t = _target(p, q)
    report = embedding_report(t.p, t.q, ceiling)
    if as_json:
        return 0, dump(report_to_dict(report))
    return 0, report_to_text(report)


def _int_arg(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lensgenus",
        description="Intersection-pairing presentations of lens-space linking forms (q/p).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("p", type=_int_arg)
        sp.add_argument("q", type=_int_arg)
        sp.add_argument("--ceiling", type=_int_arg, default=DEFAULT_CEILING,
                        metavar="STEPS", help="step limit for bounded searches")
        sp.add_argument("--json", action="store_true", help="JSON output")

    sp = sub.add_parser("present", help="construct a presentation of (q/p)")
    common(sp)
    sp.add_argument("--target", choices=TARGETS, default="rank2")
    sp.add_argument("--max-rank", type=_int_arg, default=4, dest="max_rank")

    sp = sub.add_parser("verify", help="check whether a matrix presents (q/p)")
    common(sp)
    sp.add_argument("--matrix-file", dest="matrix_file",
                    help="JSON matrix document; standard input if omitted")

    sp = sub.add_parser("certify", help="embedding report for L(p, q)")
    common(sp)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad flags already; keep 0 for --help
        return int(e.code or 0)
    try:
        if args.ceiling < 1:
            raise InputError(f"--ceiling must be >= 1, got {args.ceiling}")
        if args.command == "present":
            code, out = cmd_present(args.p, args.q, args.target, args.max_rank, args.ceiling)
        elif args.command == "verify":
            if args.matrix_file:
                try:
                    with open(args.matrix_file, encoding="utf-8") as fh:
                        text = fh.read()
                except OSError as e:
                    raise InputError(f"cannot read {args.matrix_file}: {e.strerror}") from None
            else:
                text = sys.stdin.read()
            code, out = cmd_verify(args.p, args.q, read_matrix_document(text))
        else:
            code, out = cmd_certify(args.p, args.q, args.json, args.ceiling)
    except InputError as e:
        _err(f"error: {e}")
        return 2
    except CeilingExceeded as e:
        _err(f"ceiling reached: {e}")
        return 1
    if code == 1 and not out.startswith("{"):
        _err(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
