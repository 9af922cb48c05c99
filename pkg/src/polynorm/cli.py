"""Command line front end.

Subcommands read polytope documents from files or standard input and print
reports or certificates.  Exit code 0 means the queried property holds (or
the operation succeeded), 1 means it fails and a witness was printed, 2
means a usage or input error.

Batch inputs may be fanned out across processes; set POLYNORM_WORKERS to a
number greater than 1 to enable.  Results are merged in input order either
way, so output is deterministic.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .classify import is_simple, is_smooth, is_very_ample
from .cover import CoverError, parallelogram_cover
from .fibered import certify_fibered, detect_fibered
from .generators import (
    gen_bruns_gubeladze,
    gen_random_fibered,
    gen_random_smooth_polygon,
    gen_reeve,
)
from .io import ParseError, dump_certificate, dump_polytope, load_document
from .lattice import GeometryError, LatticePolytope, segment
from .normality import decompose_point, is_normal
from .prisms import CertificateError, certify_prism, certify_QA

WORKERS_ENV = "POLYNORM_WORKERS"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise SystemExit(f"{WORKERS_ENV} must be an integer, got {raw!r}")
    return max(1, n)


def _read_inputs(paths: list[str]) -> list[tuple[str, str]]:
    """Return (display name, text) pairs; '-' or no paths means stdin."""
    if not paths:
        paths = ["-"]
    out = []
    for path in paths:
        if path == "-":
            out.append(("<stdin>", sys.stdin.read()))
        else:
            try:
                with open(path) as fh:
                    out.append((path, fh.read()))
            except OSError as exc:
                raise ParseError(0, f"{path}: {exc.strerror}")
    return out


def _parse_point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(0, f"bad point {text!r}, expected comma-separated integers")


def _load(name: str, text: str) -> tuple[str, LatticePolytope]:
    doc = load_document(text)
    return doc.label or name, doc.polytope()


# -- check ---------------------------------------------------------------

CHECK_FLAGS = ("simple", "smooth", "very_ample", "normal")


def _check_one(task: tuple) -> tuple[int, str]:
    name, text, flags, timing = task
    started = time.perf_counter()
    label, p = _load(name, text)
    lines = [f"polytope {label}: dim {p.dim}, {len(p.vertices)} vertices"]
    code = EXIT_OK
    for flag in CHECK_FLAGS:
        if flag not in flags:
            continue
        if flag == "normal":
            res = is_normal(p)
            ok = res.normal
            if not ok and res.witness is not None:
                w = res.witness
                lines.append(
                    "  witness: "
                    + ",".join(str(c) for c in w.point)
                    + f" in {w.k}P has no {w.k}-fold decomposition"
                )
        elif flag == "very_ample":
            ok = is_very_ample(p)
        elif flag == "smooth":
            ok = is_smooth(p)
        else:
            ok = is_simple(p)
        lines.insert(1, f"  {flag}: {'yes' if ok else 'no'}")
        if not ok:
            code = EXIT_FAIL
    if timing:
        lines.append(f"  time: {time.perf_counter() - started:.3f}s")
    return code, "\n".join(lines) + "\n"


def _cmd_check(args) -> int:
    flags = [f for f in CHECK_FLAGS if getattr(args, f)]
    if not flags:
        flags = list(CHECK_FLAGS)
    tasks = [
        (name, text, tuple(flags), args.timing)
        for name, text in _read_inputs(args.files)
    ]
    return _emit(_fan_out(_check_one, tasks))


# -- certify -------------------------------------------------------------


def _certify_one(task: tuple) -> tuple[int, str]:
    name, text, mode, interval, floor_level = task
    label, p = _load(name, text)
    try:
        if mode == "fibered":
            f = detect_fibered(p)
            if f is None:
                return EXIT_FAIL, f"polytope {label}: not fibered along any edge direction\n"
            cert = certify_fibered(f)
        elif mode == "prism":
            cert = certify_prism(p, segment((0,) * 3, interval))
        else:
            cert = certify_QA(p, segment((0,) * 3, interval), floor_level)
    except (GeometryError, CoverError, CertificateError) as exc:
        return EXIT_FAIL, f"polytope {label}: {exc}\n"
    header = f"# certificate for {label}: {len(cert.pieces)} pieces\n"
    return EXIT_OK, header + dump_certificate(cert)


def _cmd_certify(args) -> int:
    mode = "fibered" if args.fibered else ("prism" if args.prism else "qa")
    interval = _parse_point(args.interval)
    if len(interval) != 3:
        raise ParseError(0, "--interval needs three coordinates")
    tasks = [
        (name, text, mode, interval, args.floor_level)
        for name, text in _read_inputs(args.files)
    ]
    return _emit(_fan_out(_certify_one, tasks))


# -- decompose -----------------------------------------------------------


def _cmd_decompose(args) -> int:
    point = _parse_point(args.point)
    (name, text), = _read_inputs(args.files)
    label, p = _load(name, text)
    parts = decompose_point(p, point, args.k)
    if parts is None:
        print(
            f"polytope {label}: "
            + ",".join(str(c) for c in point)
            + f" in {args.k}P admits no {args.k}-fold decomposition"
        )
        return EXIT_FAIL
    for part in parts:
        print("v " + " ".join(str(c) for c in part))
    return EXIT_OK


# -- cover ---------------------------------------------------------------


def _cover_one(task: tuple) -> tuple[int, str]:
    name, text = task
    label, p = _load(name, text)
    try:
        cov = parallelogram_cover(p)
    except (GeometryError, CoverError) as exc:
        return EXIT_FAIL, f"polytope {label}: {exc}\n"
    blocks = [f"# cover of {label}: {len(cov.pieces)} pieces"]
    for piece in cov.pieces:
        lines = ["piece parallelogram"]
        lines += ["v " + " ".join(str(c) for c in v) for v in piece.vertices]
        blocks.append("\n".join(lines))
    return EXIT_OK, "\n\n".join(blocks) + "\n"


def _cmd_cover(args) -> int:
    return _emit(_fan_out(_cover_one, list(_read_inputs(args.files))))


# -- gen -----------------------------------------------------------------


def _cmd_gen(args) -> int:
    kind = args.kind
    if kind == "reeve":
        p = gen_reeve(args.q)
        label = f"reeve-{args.q}"
    elif kind == "bg":
        p = gen_bruns_gubeladze(args.q)
        label = f"bg-{args.q}"
    elif kind == "random-polygon":
        p = gen_random_smooth_polygon(args.seed, args.size_bound)
        label = f"polygon-seed{args.seed}"
    else:
        p = gen_random_fibered(args.seed, args.size_bound).polytope
        label = f"fibered-seed{args.seed}"
    sys.stdout.write(dump_polytope(p, label))
    return EXIT_OK


# -- reproduce-paper -------------------------------------------------------


def _cmd_reproduce(args) -> int:
    rows = []
    ok = True
    for q in range(1, 6):
        qq = gen_reeve(q)
        pq = gen_bruns_gubeladze(q)
        qq_va = is_very_ample(qq)
        pq_va = is_very_ample(pq)
        pq_normal = is_normal(pq).normal
        rows.append((q, qq_va, pq_va, pq_normal))
        ok = ok and qq_va == (q == 1) and pq_va and pq_normal == (q <= 3)
    print("q  Q_q very ample  P_q very ample  P_q normal")
    for q, a, b, c in rows:
        print(
            f"{q}  {'yes' if a else 'no ':<14}  {'yes' if b else 'no ':<14}  "
            f"{'yes' if c else 'no'}"
        )
    print(
        "expected: Q_q very ample only for q = 1; "
        "P_q always very ample, normal only for q <= 3"
    )
    print("all rows match expectation" if ok else "MISMATCH against expectation")
    return EXIT_OK if ok else EXIT_FAIL


# -- plumbing --------------------------------------------------------------


def _fan_out(fn, tasks: list[tuple]) -> list[tuple[int, str]]:
    workers = _worker_count()
    if workers == 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _emit(results: list[tuple[int, str]]) -> int:
    code = EXIT_OK
    for rc, out in results:
        sys.stdout.write(out)
        code = max(code, rc)
    return code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polynorm",
        description="Check, certify and decompose lattice polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="evaluate classification flags")
    for flag in CHECK_FLAGS:
        c.add_argument(f"--{flag.replace('_', '-')}", dest=flag, action="store_true")
    c.add_argument("--timing", action="store_true", help="append wall time per input")
    c.add_argument("files", nargs="*", help="polytope documents; - for stdin")
    c.set_defaults(func=_cmd_check)

    c = sub.add_parser("certify", help="produce a normality certificate")
    grp = c.add_mutually_exclusive_group(required=True)
    grp.add_argument("--fibered", action="store_true")
    grp.add_argument("--prism", action="store_true")
    grp.add_argument("--qa", action="store_true")
    c.add_argument(
        "--interval",
        default="0,0,1",
        help="segment endpoint for --prism/--qa Minkowski summand (default 0,0,1)",
    )
    c.add_argument("--floor-level", type=int, default=0)
    c.add_argument("files", nargs="*")
    c.set_defaults(func=_cmd_certify)

    c = sub.add_parser("decompose", help="write a point of kP as a k-fold sum")
    c.add_argument("--point", required=True, help="comma-separated coordinates")
    c.add_argument("--k", type=int, default=2)
    c.add_argument("files", nargs="*")
    c.set_defaults(func=_cmd_decompose)

    c = sub.add_parser("cover", help="parallelogram cover of a smooth polygon")
    c.add_argument("files", nargs="*")
    c.set_defaults(func=_cmd_cover)

    c = sub.add_parser("gen", help="write a generated polytope document")
    c.add_argument(
        "kind", choices=("reeve", "bg", "random-polygon", "random-fibered")
    )
    c.add_argument("--q", type=int, default=2)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--size-bound", type=int, default=6)
    c.set_defaults(func=_cmd_gen)

    c = sub.add_parser(
        "reproduce-paper",
        help="tabulate the published very-ampleness and normality thresholds",
    )
    c.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; re-raise unchanged
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
