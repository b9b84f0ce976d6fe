"""Command-line surface: polynomial printers, expansions, and scans.

Exit codes: 0 success, 2 malformed input or domain error, 3 scan recorded
bound violations, 4 I/O failure writing output.  Scan progress goes to
stderr only; stdout carries nothing but the requested payload, so pipelines
stay clean.  Set SCHUBERT_CACHE_DIR to persist the Schubert memo table
between runs (purely an accelerator; results never depend on it).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import lr, pieri
from .errors import BoundViolation, SchublrError
from .perms import Partition, Permutation, parse_partition, parse_permutation
from .poly import SparsePolynomial
from .schubert import (
    load_schubert_cache,
    save_schubert_cache,
    schubert,
    schur_jacobi_trudi_two_row,
    schur_ssyt,
)


def _parse_range(text: str) -> tuple[int, int]:
    """Parse 'A..B' or a single integer 'N' (meaning N..N)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    value = int(text)
    return value, value


def _parse_steps(text: str) -> tuple[tuple[int, int], ...]:
    cleaned = text.strip()
    matches = re.findall(r"\((\d+)\s*,\s*(\d+)\)", cleaned)
    if not matches or re.sub(r"\(\d+\s*,\s*\d+\)|\s", "", cleaned):
        raise SchublrError(f"cannot parse step list: {text!r}")
    return tuple((int(a), int(b)) for a, b in matches)


def _emit(payload: str, out_path: str | None) -> None:
    if out_path is None:
        print(payload)
        return
    with open(out_path, "w", encoding="utf-8") as handle:
        handle.write(payload)
        if not payload.endswith("\n"):
            handle.write("\n")


def _json_dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _render_poly(poly: SparsePolynomial, fmt: str) -> str:
    if fmt == "json":
        return _json_dumps(
            {"terms": [[list(m), c] for m, c in poly.sorted_terms()]}
        )
    return poly.render()


def _expansion_payload(
    w: Permutation, k: int, lam: tuple[int, int], counts: dict[Permutation, int], fmt: str
) -> str:
    items = sorted(counts.items(), key=lambda item: item[0].word)
    if fmt == "json":
        return _json_dumps(
            {
                "w": list(w.word),
                "k": k,
                "lambda": list(lam),
                "terms": [{"v": list(v.word), "coeff": c} for v, c in items],
            }
        )
    return "\n".join(f"{v}: {c}" for v, c in items) if items else "(empty)"


def _report_payload(report: lr.ScanReport, fmt: str) -> str:
    if fmt == "json":
        return _json_dumps(report.to_dict())
    lines = [
        f"cells={len(report.cells)} global_max={report.global_max} "
        f"violations={len(report.violations)}"
    ]
    for violation in report.violations:
        lines.append(
            f"VIOLATION w={','.join(map(str, violation.w))} k={violation.k} "
            f"lambda={violation.lam} v={','.join(map(str, violation.v))} "
            f"coeff={violation.coeff} bound={violation.bound}"
        )
    return "\n".join(lines)


def _progress(args, message: str) -> None:
    if args.verbose:
        print(message, file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_schubert(args) -> int:
    w = parse_permutation(args.w)
    _emit(_render_poly(schubert(w), args.format), args.out)
    return 0


def _cmd_schur(args) -> int:
    lam = parse_partition(args.lam)
    if args.method == "jacobi-trudi":
        poly = schur_jacobi_trudi_two_row(lam, args.k)
    else:
        poly = schur_ssyt(lam, args.k)
    _emit(_render_poly(poly, args.format), args.out)
    return 0


def _cmd_pieri(args) -> int:
    w = parse_permutation(args.w)
    endpoints = sorted(v.word for v in pieri.pieri_expand(w, args.m, args.k))
    if args.format == "json":
        payload = _json_dumps(
            {
                "w": list(w.word),
                "m": args.m,
                "k": args.k,
                "endpoints": [list(v) for v in endpoints],
            }
        )
    else:
        payload = "\n".join(",".join(map(str, v)) for v in endpoints)
    _emit(payload, args.out)
    return 0


def _cmd_expand(args) -> int:
    w = parse_permutation(args.w)
    lam = parse_partition(args.lam)
    counts = lr.lr_two_row(w, args.k, lam)
    _emit(
        _expansion_payload(w, args.k, lam.two_row(), counts, args.format),
        args.out,
    )
    return 0


def _cmd_classify(args) -> int:
    w = parse_permutation(args.w)
    chain = pieri.PieriChain(w, args.k, _parse_steps(args.steps))
    signature = pieri.classify_chain(chain, args.n2)
    if args.format == "json":
        payload = _json_dumps(
            {
                "i": signature.i,
                "j": signature.j,
                "i1": list(signature.i1),
                "i2": [list(p) for p in signature.i2],
            }
        )
    else:
        payload = signature.render()
    _emit(payload, args.out)
    return 0


def _cmd_scan(args) -> int:
    workers = args.workers if args.workers is not None else (os.cpu_count() or 1)
    if args.target == "conjecture":
        lo, hi = _parse_range(args.n2)
        k_values = None if args.k is None else range(*_add_one(_parse_range(args.k)))
        _progress(args, f"scanning conjecture bounds for n2 in {lo}..{hi}")
        report = lr.scan_conjecture(
            range(lo, hi + 1),
            k_values,
            args.m1_max,
            w_filter="antidominant_tail" if args.filter == "antidominant" else None,
            workers=workers,
        )
    elif args.target == "theorem1":
        _, hi = _parse_range(args.n2)
        _progress(args, f"verifying small-spread bounds up to n2={hi}")
        report = lr.verify_theorem_1(
            hi, args.m1_max, workers=workers, raise_on_violation=False
        )
    elif args.target == "theorem2":
        lo, hi = _parse_range(args.n2)
        _progress(args, f"verifying factorial bounds for n2 in {lo}..{hi}")
        report = _scan_theorem2_grid(lo, hi, args.m1_max, args.filter, workers)
    else:  # cell
        w = parse_permutation(args.w)
        lam = parse_partition(args.lam)
        _progress(args, f"expanding single cell w={w} k={args.k} lambda={lam}")
        report = lr.scan_cell(w, args.k, lam, workers=workers)
    _progress(
        args,
        f"scan finished: {len(report.cells)} cells, "
        f"{len(report.violations)} violations",
    )
    _emit(_report_payload(report, args.format), args.out)
    return 3 if report.violations else 0


def _add_one(bounds: tuple[int, int]) -> tuple[int, int]:
    lo, hi = bounds
    return lo, hi + 1


def _scan_theorem2_grid(
    n2_lo: int, n2_hi: int, m1_max: int, filter_name: str | None, workers: int
) -> lr.ScanReport:
    """Run the factorial-bound verifier over its whole eligible grid."""
    import time

    started = time.perf_counter()
    w_filter = "antidominant_tail" if filter_name == "antidominant" else "all"
    cells: list[lr.CellResult] = []
    violations: list[lr.ViolationRecord] = []
    for n2 in range(n2_lo, n2_hi + 1):
        for k in (n2, n2 - 1, n2 - 2):
            if k < 2:
                continue
            for m1 in range(m1_max + 1):
                for m2 in range(m1 + 1):
                    if n2 - k >= m2:
                        continue
                    sub = lr.verify_theorem_2(
                        n2,
                        k,
                        Partition((m1, m2)),
                        w_filter=w_filter,
                        workers=workers,
                        raise_on_violation=False,
                    )
                    cells.extend(sub.cells)
                    violations.extend(sub.violations)
    cells.sort(key=lr.CellResult.sort_key)
    violations.sort(key=lambda v: (v.n2, v.k, v.lam, v.w, v.v))
    return lr.ScanReport(
        config={
            "scan": "theorem2",
            "n2": [n2_lo, n2_hi],
            "m1_max": m1_max,
            "w_filter": w_filter,
        },
        cells=cells,
        violations=violations,
        global_max=max((c.max_coeff for c in cells), default=0),
        timing={"elapsed_seconds": round(time.perf_counter() - started, 6)},
    )


# ---------------------------------------------------------------------------
# parser assembly


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--out", default=None, help="write output to this path")
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="scan worker processes (default: available parallelism; 1 = inline)",
    )
    parser.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schublr",
        description="Exact Schubert-calculus products, chains, and bound scans",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schubert", help="print a Schubert polynomial")
    p.add_argument("w", help="one-line notation, e.g. 1,4,3,2")
    _add_common(p)
    p.set_defaults(handler=_cmd_schubert)

    p = sub.add_parser("schur", help="print a Schur polynomial")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("ssyt", "jacobi-trudi"), default="ssyt")
    _add_common(p)
    p.set_defaults(handler=_cmd_schur)

    p = sub.add_parser("pieri", help="endpoints of h_m * S_w")
    p.add_argument("--w", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_pieri)

    p = sub.add_parser("expand", help="expand S_w * s_lambda in the Schubert basis")
    p.add_argument("--w", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("classify", help="indexed-case signature of a chain")
    p.add_argument("--w", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--steps", required=True, help='e.g. "(1,3)(2,4)(2,5)"')
    p.add_argument("--n2", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("scan", help="grid scans against the proved/conjectured bounds")
    scan_sub = p.add_subparsers(dest="target", required=True)

    sp = scan_sub.add_parser("conjecture")
    sp.add_argument("--n2", required=True, help="range A..B")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--k", default=None, help="range A..B")
    group.add_argument("--k-all", action="store_true", help="all k in [2, n2]")
    sp.add_argument("--m1-max", type=int, required=True)
    sp.add_argument("--filter", choices=("antidominant",), default=None)
    _add_common(sp)
    sp.set_defaults(handler=_cmd_scan, target="conjecture")

    sp = scan_sub.add_parser("theorem1")
    sp.add_argument("--n2", required=True, help="range A..B (scan runs 2..B)")
    sp.add_argument("--m1-max", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(handler=_cmd_scan, target="theorem1")

    sp = scan_sub.add_parser("theorem2")
    sp.add_argument("--n2", required=True, help="range A..B")
    sp.add_argument("--m1-max", type=int, required=True)
    sp.add_argument("--filter", choices=("antidominant",), default=None)
    _add_common(sp)
    sp.set_defaults(handler=_cmd_scan, target="theorem2")

    sp = scan_sub.add_parser("cell")
    sp.add_argument("--w", required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--k", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(handler=_cmd_scan, target="cell")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cache_dir = os.environ.get("SCHUBERT_CACHE_DIR")
    if cache_dir:
        load_schubert_cache(cache_dir)
    try:
        code = args.handler(args)
    except SchublrError as exc:
        if isinstance(exc, BoundViolation) and exc.report is not None:
            print(f"error: {exc}", file=sys.stderr)
            return 3
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 4
    if cache_dir:
        try:
            save_schubert_cache(cache_dir)
        except OSError as exc:
            print(f"warning: could not save cache: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
