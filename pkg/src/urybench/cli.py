"""Command-line front end.

Every subcommand is a thin client over the HTTP service: by default the app
runs in-process (no server needed, identical behaviour), and ``--server URL``
points the same requests at a remote instance.  ``serve`` starts one.

Exit codes: 0 on success and positive verdicts, 1 on negative verdicts
(failed validation, axiom violations, a false independence query), 2 on
input errors.
"""

from __future__ import annotations

import argparse
import sys


class ClientError(Exception):
    """Input-side failure reported by the service."""


class _Backend:
    """POSTs JSON to the service, in-process unless a base URL is given."""

    def __init__(self, server: str | None):
        if server is None:
            import warnings
            with warnings.catch_warnings():
                # the bundled test client import warns about its own httpx pin
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import create_app
            self._client = TestClient(create_app())
        else:
            import httpx
            self._client = httpx.Client(base_url=server, timeout=None)

    def post(self, path: str, payload: dict) -> dict:
        resp = self._client.post(path, json=payload)
        if resp.status_code == 422:
            body = resp.json()
            message = body.get("message") or str(body.get("detail"))
            raise ClientError(message)
        resp.raise_for_status()
        return resp.json()


def _split_points(text: str) -> list[str]:
    return [p for p in text.replace(",", " ").split() if p]


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ClientError(f"cannot read {path}: {exc}") from exc


def _print_report(report: dict) -> int:
    print(f"{report['subject']}: {'pass' if report['passed'] else 'FAIL'}")
    for check in report["checks"]:
        if check["passed"]:
            print(f"  {check['name']}: ok")
        else:
            witness = ", ".join(check["witness"] or [])
            print(f"  {check['name']}: FAIL ({witness})")
    return 0 if report["passed"] else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urybench",
        description="Finite extended-metric spaces over distance monoids: "
                    "generators, validators, independence relations, and the "
                    "nine-axiom test harness.")
    parser.add_argument("--server", metavar="URL", default=None,
                        help="send requests to a running service instead of in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-monoid", help="validate the ordered-monoid laws")
    p.add_argument("--monoid", required=True)
    p.add_argument("--sample-bound", type=int, default=20)

    p = sub.add_parser("sauer", help="check a finite distance set for associativity")
    p.add_argument("--set", dest="values", required=True)

    p = sub.add_parser("gen", help="sample a random space")
    p.add_argument("--monoid", required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-finite", default=None)
    p.add_argument("--max-components", type=int, default=3)
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("validate", help="check the metric laws of a .dms file")
    p.add_argument("file")

    p = sub.add_parser("amalgamate", help="freely amalgamate two spaces over a common part")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--common", required=True)

    p = sub.add_parser("indep", help="evaluate an independence relation")
    p.add_argument("--rel", choices=("alg", "infty"), required=True)
    p.add_argument("--space", required=True)
    p.add_argument("--A", dest="a", required=True)
    p.add_argument("--B", dest="b", required=True)
    p.add_argument("--C", dest="c", required=True)

    p = sub.add_parser("axioms", help="run the nine-axiom harness")
    p.add_argument("--rel", choices=("alg", "infty"), required=True)
    p.add_argument("--monoid", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--axiom", default=None,
                   help="run a single axiom (i-ix) instead of all nine")

    p = sub.add_parser("counterexample",
                       help="the two-point configuration separating alg from infty")
    p.add_argument("--monoid", required=True)

    p = sub.add_parser("threshold", help="compare (n-1)-fold and n-fold sums of r")
    p.add_argument("--monoid", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "serve":
        import uvicorn

        from .service import create_app
        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    backend = _Backend(args.server)

    if args.command == "check-monoid":
        report = backend.post("/monoid/check",
                              {"monoid": args.monoid, "sample_bound": args.sample_bound})
        return _print_report(report)

    if args.command == "sauer":
        resp = backend.post("/distance-set/check", {"values": args.values})
        if resp["fraisse"]:
            print("pass")
            return 0
        print(" ".join(resp["witness"]))
        return 1

    if args.command == "gen":
        resp = backend.post("/spaces/generate",
                            {"monoid": args.monoid, "points": args.points,
                             "seed": args.seed, "max_finite": args.max_finite,
                             "max_components": args.max_components})
        if args.output:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(resp["dms"])
        else:
            print(resp["dms"], end="")
        return 0

    if args.command == "validate":
        report = backend.post("/spaces/validate", {"dms": _read(args.file)})
        return _print_report(report)

    if args.command == "amalgamate":
        resp = backend.post("/spaces/amalgamate",
                            {"left": _read(args.left), "right": _read(args.right),
                             "common": _split_points(args.common)})
        print(resp["dms"], end="")
        return 0

    if args.command == "indep":
        resp = backend.post("/independence/evaluate",
                            {"dms": _read(args.space), "rel": args.rel,
                             "a": _split_points(args.a), "b": _split_points(args.b),
                             "c": _split_points(args.c)})
        print("true" if resp["verdict"] else "false")
        return 0 if resp["verdict"] else 1

    if args.command == "axioms":
        resp = backend.post("/independence/axioms",
                            {"rel": args.rel, "monoid": args.monoid,
                             "trials": args.trials, "size": args.size,
                             "seed": args.seed, "axiom": args.axiom})
        print(resp["text"], end="")
        return 0 if resp["passed"] else 1

    if args.command == "counterexample":
        resp = backend.post("/independence/counterexample", {"monoid": args.monoid})
        print(resp["line"])
        return 0

    if args.command == "threshold":
        resp = backend.post("/monoid/threshold",
                            {"monoid": args.monoid, "r": args.r, "n": args.n})
        print("true" if resp["equivalence"] else "false")
        return 0 if resp["equivalence"] else 1

    raise AssertionError(f"unhandled command {args.command}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except ClientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
