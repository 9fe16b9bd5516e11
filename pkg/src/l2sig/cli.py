"""Command-line client for the compute service.

The CLI marshals arguments and input files into the service request
models, executes them (in-process by default, or against a remote
server with --server), and prints the canonical JSON report on stdout.
Errors go to stderr only; exit codes: 0 success, 1 domain/validation
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

import pydantic

from .exactnum import DomainError, FormatError, UsageError
from .formats import canonical_json, group_to_doc, parse_group_token
from .service import handlers, models

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _load_document(path: str) -> models.FormDocument:
    text = _read_text(path)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON: {exc.msg}",
                          line=exc.lineno, column=exc.colno) from exc
    try:
        return models.FormDocument.model_validate(raw)
    except pydantic.ValidationError as exc:
        raise FormatError(f"{path}: invalid form document: {exc.errors()[0]['msg']}") from exc


def _load_script(path: str) -> models.LedgerScript:
    text = _read_text(path)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON: {exc.msg}",
                          line=exc.lineno, column=exc.colno) from exc
    try:
        return models.LedgerScript.model_validate(raw)
    except pydantic.ValidationError as exc:
        raise FormatError(f"{path}: invalid ledger script: {exc.errors()[0]['msg']}") from exc


def _group_spec(token: str) -> models.GroupSpec:
    group = parse_group_token(token)
    if group is None:
        return models.GroupSpec(kind="Z")
    return models.GroupSpec(**group_to_doc(group))


def _post_remote(server: str, path: str, payload: dict) -> tuple[int, Any]:
    import httpx

    with httpx.Client(base_url=server, timeout=300.0) as client:
        response = client.post(path, json=payload)
        return response.status_code, response.json()


def _emit(server: str | None, path: str, request_payload: dict,
          local_call, stdout) -> int:
    """Run one request in-process or remotely and print the report."""
    if server:
        status, body = _post_remote(server, path, request_payload)
        if status == 200:
            stdout.write(canonical_json(body))
            return EXIT_OK
        message = body.get("error", "request failed") if isinstance(body, dict) else str(body)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_USAGE if status == 400 else EXIT_DOMAIN
    response = local_call()
    stdout.write(canonical_json(response.model_dump(mode="json")))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="l2sig",
        description="Exact L2-signature invariants of hermitian forms "
                    "over group algebras and Laurent rings.")
    parser.add_argument("--server", metavar="URL", default=None,
                        help="run against a remote l2sig service instead of in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="full invariant report for a finite-group form")
    p.add_argument("file", help="form document (JSON)")
    p.add_argument("--scale", default="1",
                   help="optional rational bookkeeping factor applied to alpha")

    p = sub.add_parser("induce", help="induce a form into a larger finite group")
    p.add_argument("file", help="form document (JSON)")
    p.add_argument("--into", required=True, metavar="GROUP",
                   help="target group: trivial | cyclic:N | abelian:d1,d2,...")

    p = sub.add_parser("family", help="family of forms with pairwise distinct alpha")
    p.add_argument("--n", type=int, required=True, help="order of the cyclic group (>= 2)")
    p.add_argument("--count", type=int, required=True, help="number of family members")

    p = sub.add_parser("zapprox", help="finite-quotient approximation of the "
                                       "circle L2-signature of a Laurent form")
    p.add_argument("file", help="Laurent form document (JSON, group kind 'Z')")
    p.add_argument("--k-max", type=int, default=996, dest="k_max",
                   help="largest quotient order in the schedule (default 996)")
    p.add_argument("--tol", default="1e-6",
                   help="enclosure tolerance for the circle integral (default 1e-6)")

    p = sub.add_parser("ledger", help="run an act/distinguish ledger script")
    p.add_argument("file", help="ledger script (JSON)")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "invariants":
            request = models.InvariantsRequest(document=_load_document(args.file),
                                               scale=args.scale)
            return _emit(args.server, "/forms/invariants",
                         request.model_dump(mode="json"),
                         lambda: handlers.compute_invariants(request), stdout)
        if args.command == "induce":
            request = models.InduceRequest(document=_load_document(args.file),
                                           into=_group_spec(args.into))
            return _emit(args.server, "/forms/induce",
                         request.model_dump(mode="json"),
                         lambda: handlers.compute_induce(request), stdout)
        if args.command == "family":
            request = models.FamilyRequest(n=args.n, count=args.count)
            return _emit(args.server, "/family",
                         request.model_dump(mode="json"),
                         lambda: handlers.compute_family(request), stdout)
        if args.command == "zapprox":
            request = models.ZapproxRequest(document=_load_document(args.file),
                                            k_max=args.k_max, tolerance=args.tol)
            return _emit(args.server, "/zapprox",
                         request.model_dump(mode="json"),
                         lambda: handlers.compute_zapprox(request), stdout)
        if args.command == "ledger":
            script = _load_script(args.file)
            return _emit(args.server, "/ledger",
                         script.model_dump(mode="json"),
                         lambda: handlers.run_ledger(script), stdout)
        if args.command == "serve":
            import uvicorn

            from .service.app import app

            uvicorn.run(app, host=args.host, port=args.port)
            return EXIT_OK
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, FormatError) as exc:
        location = ""
        if isinstance(exc, FormatError) and exc.line is not None:
            location = f" (line {exc.line}, column {exc.column})"
        print(f"error: {exc}{location}", file=sys.stderr)
        return EXIT_DOMAIN
    parser.error(f"unknown command {args.command!r}")
    return EXIT_USAGE  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
