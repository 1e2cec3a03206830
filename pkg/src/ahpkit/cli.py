"""Command-line front door: solve, group, compare, serve.

Machine-readable output goes to standard out, diagnostics to standard
error. Exit codes: 0 success, 2 validation error, 3 parse error, 4
environment problem (unreadable files, occupied ports).
"""

from __future__ import annotations

import argparse
import os
import socket
import sys

import numpy as np

from .eigen import saaty_priorities
from .errors import AhpError, IoError, ParseError, ValidationError
from .formats import (
    dump_json,
    group_payload,
    load_matrix,
    priorities_payload,
    render_csv,
    render_table,
)
from .group import GroupJudgment, group_lls_priorities, verify_equivalence
from .lls import consistency_report, lls_priorities
from .matrix import ScaleMode
from .sampling import perturbed_matrix
from .store import SessionStore

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PARSE = 3
EXIT_ENVIRONMENT = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ahpkit",
        description="Priority vectors from pairwise comparison matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one judgment matrix")
    solve.add_argument("--input", required=True, help="matrix file (.json or .csv)")
    solve.add_argument("--method", choices=("lls", "se", "both"), default="lls")
    solve.add_argument("--format", choices=("json", "csv", "table"), default="json")
    solve.add_argument(
        "--strict-scale",
        action="store_true",
        help="reject entries outside the 1/9 .. 9 comparison scale",
    )

    group = sub.add_parser("group", help="aggregate weighted expert matrices")
    group.add_argument(
        "--input",
        action="append",
        required=True,
        help="expert matrix file; repeat once per expert",
    )
    group.add_argument(
        "--weight",
        action="append",
        type=float,
        help="expert weight; repeat once per expert, in input order",
    )
    group.add_argument("--format", choices=("json", "csv", "table"), default="json")
    group.add_argument(
        "--verify-kl",
        action="store_true",
        help="also check the divergence-minimization route gives the same answer",
    )

    compare = sub.add_parser(
        "compare", help="measure how well each method recovers known priorities"
    )
    compare.add_argument("--input", required=True, help="matrix whose priorities seed the trials")
    compare.add_argument("--trials", type=int, default=100)
    compare.add_argument("--noise", type=float, default=0.1)
    compare.add_argument("--seed", type=int, default=0)
    compare.add_argument("--format", choices=("json", "csv", "table"), default="json")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument(
        "--store",
        default=None,
        help="session snapshot file (AHP_STORE environment variable overrides)",
    )
    serve.add_argument(
        "--cors-origin",
        action="append",
        default=None,
        help="allowed browser origin; repeatable, default *",
    )
    return parser


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(dump_json(payload))
    elif fmt == "csv":
        sys.stdout.write(render_csv(payload))
    else:
        sys.stdout.write(render_table(payload))


def cmd_solve(args) -> int:
    scale = ScaleMode.STRICT_SAATY if args.strict_scale else ScaleMode.FREE_POSITIVE
    mat = load_matrix(args.input, scale_mode=scale)
    pv = report = se = None
    if args.method in ("lls", "both"):
        pv = lls_priorities(mat)
        report = consistency_report(mat, pv)
    if args.method in ("se", "both"):
        se = saaty_priorities(mat)
    payload = priorities_payload(mat, pv, report, se)
    payload["method"] = args.method
    _emit(payload, args.format)
    return EXIT_OK


def cmd_group(args) -> int:
    weights = args.weight or []
    if len(weights) != len(args.input):
        raise ValidationError(
            f"got {len(args.input)} inputs but {len(weights)} weights; "
            "pass one --weight per --input"
        )
    matrices = [load_matrix(path) for path in args.input]
    g = GroupJudgment(matrices, weights)
    result = group_lls_priorities(g)
    payload = group_payload(g, result)
    if args.verify_kl:
        ok = verify_equivalence(g)
        print(f"verify-kl: {'pass' if ok else 'FAIL'}", file=sys.stderr)
        payload["kl_check"] = "pass" if ok else "fail"
    _emit(payload, args.format)
    return EXIT_OK


def cmd_compare(args) -> int:
    if args.trials < 1:
        raise ValidationError(f"need at least 1 trial, got {args.trials}")
    if args.noise < 0:
        raise ValidationError(f"noise must be >= 0, got {args.noise}")
    mat = load_matrix(args.input)
    u_true = lls_priorities(mat).u
    w_true = u_true / u_true.sum()
    log_w_true = np.log(w_true)
    true_ranking = list(np.argsort(-w_true, kind="stable"))

    stats = {"lls": [], "se": []}
    agreement = {"lls": 0, "se": 0}
    for t in range(args.trials):
        rng = np.random.default_rng(args.seed + t)
        trial = perturbed_matrix(rng, u_true, args.noise)
        for name, w_est in (
            ("lls", lls_priorities(trial).w),
            ("se", saaty_priorities(trial).principal_w),
        ):
            stats[name].append(float(np.max(np.abs(np.log(w_est) - log_w_true))))
            if list(np.argsort(-w_est, kind="stable")) == true_ranking:
                agreement[name] += 1

    payload = {
        "n": mat.n,
        "labels": [mat.label_for(i) for i in range(mat.n)],
        "trials": args.trials,
        "noise": args.noise,
        "seed": args.seed,
        "methods": {
            name: {
                "mean_log_error": float(np.mean(errors)),
                "max_log_error": float(np.max(errors)),
                "rank_agreement": agreement[name] / args.trials,
            }
            for name, errors in stats.items()
        },
    }
    if args.format == "json":
        sys.stdout.write(dump_json(payload))
    else:
        rows = [("method", "mean_log_error", "max_log_error", "rank_agreement")]
        for name in ("lls", "se"):
            m = payload["methods"][name]
            rows.append(
                (
                    name,
                    repr(m["mean_log_error"]),
                    repr(m["max_log_error"]),
                    repr(m["rank_agreement"]),
                )
            )
        if args.format == "csv":
            sys.stdout.write("\n".join(",".join(r) for r in rows) + "\n")
        else:
            widths = [max(len(r[c]) for r in rows) for c in range(4)]
            for r in rows:
                sys.stdout.write(
                    "  ".join(f"{r[c]:<{widths[c]}}" for c in range(4)).rstrip() + "\n"
                )
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    store_path = os.environ.get("AHP_STORE") or args.store
    store = SessionStore(path=store_path)
    origins = args.cors_origin if args.cors_origin else ("*",)
    app = create_app(store=store, cors_origins=origins)

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, args.port))
        sock.listen(128)
    except OSError as exc:
        sock.close()
        print(f"cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return EXIT_ENVIRONMENT
    print(f"listening on http://{args.host}:{args.port}", file=sys.stderr)
    config = uvicorn.Config(app, log_level="warning")
    server = uvicorn.Server(config)
    server.run(sockets=[sock])
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {
        "solve": cmd_solve,
        "group": cmd_group,
        "compare": cmd_compare,
        "serve": cmd_serve,
    }[args.command]
    try:
        return handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENVIRONMENT
    except AhpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENVIRONMENT


if __name__ == "__main__":
    sys.exit(main())
