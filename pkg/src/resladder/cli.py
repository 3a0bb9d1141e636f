"""Thin command-line client for the ladder service.

Every subcommand reads a JSON run configuration, posts it to the service
(an in-process instance by default, or a remote one via --server), and
renders the response.  No solving happens client-side.

Exit codes: 0 full success, 2 partial (some entries failed or failed
verification), 1 hard error (bad config, HTTP error, inadmissible problem).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from .tables import ladder_csv, scan_csv, series_csv


class CliError(Exception):
    pass


def _load_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise CliError(f"config {path} must be a JSON object")
    return payload


def _post(path: str, payload: dict, server: str | None) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            return client.post(path, json=payload)

    from .service.app import create_app

    transport = httpx.ASGITransport(app=create_app())

    async def go():
        async with httpx.AsyncClient(
            transport=transport, base_url="http://service.local", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _detail(resp: httpx.Response) -> str:
    try:
        body = resp.json()
    except Exception:
        return resp.text
    if isinstance(body, dict) and "detail" in body:
        detail = body["detail"]
        return detail if isinstance(detail, str) else json.dumps(detail)
    return resp.text


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(body) -> str:
    return json.dumps(body, indent=2) + "\n"


def _run(path: str, payload: dict, args) -> tuple[dict | None, int]:
    resp = _post(path, payload, args.server)
    if resp.status_code != 200:
        print(f"error: {_detail(resp)}", file=sys.stderr)
        return None, 1
    return resp.json(), 0


def _report_failures(failures) -> None:
    for item in failures:
        print(f"warning: n={item['n']}: {item['error']}", file=sys.stderr)


def _cmd_solve(args) -> int:
    body, rc = _run("/solve", _load_config(args.config), args)
    if body is None:
        return rc
    text = ladder_csv(body["entries"]) if args.format == "csv" else _json_text(body)
    _emit(text, args.out)
    if body["failures"]:
        _report_failures(body["failures"])
        return 2
    return 0


def _cmd_scan(args) -> int:
    payload = _load_config(args.config)
    payload.update(
        re_min=args.re_min,
        re_max=args.re_max,
        im_min=args.im_min,
        im_max=args.im_max,
        n_re=args.n_re,
        n_im=args.n_im,
    )
    body, rc = _run("/scan", payload, args)
    if body is None:
        return rc
    text = scan_csv(body["rows"]) if args.format == "csv" else _json_text(body)
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    body, rc = _run("/verify", _load_config(args.config), args)
    if body is None:
        return rc
    _emit(_json_text(body), args.out)
    if body["failures"]:
        _report_failures(body["failures"])
        return 2
    return 0 if body["all_agree"] else 2


def _cmd_series(args) -> int:
    body, rc = _run("/series", _load_config(args.config), args)
    if body is None:
        return rc
    text = series_csv(body["rows"]) if args.format == "csv" else _json_text(body)
    _emit(text, args.out)
    if body["failures"]:
        _report_failures(body["failures"])
        return 2
    return 0


def _cmd_radius(args) -> int:
    body, rc = _run("/radius", _load_config(args.config), args)
    if body is None:
        return rc
    _emit(_json_text(body), args.out)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def _add_client_args(p, formats=None):
    p.add_argument("--config", required=True, help="path to the JSON run configuration")
    p.add_argument(
        "--server",
        default=None,
        help="base URL of a running service; by default the request is served in process",
    )
    p.add_argument("--out", default=None, help="write output here instead of stdout")
    if formats:
        p.add_argument("--format", choices=formats, default=formats[0])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resladder",
        description="Resonance ladders of bipartite complex potentials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve the ladder over the configured index range")
    _add_client_args(p, ["csv", "json"])
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("scan", help="tabulate F and |F'| over a rectangle")
    _add_client_args(p, ["csv", "json"])
    p.add_argument("--re-min", type=float, required=True)
    p.add_argument("--re-max", type=float, required=True)
    p.add_argument("--im-min", type=float, required=True)
    p.add_argument("--im-max", type=float, required=True)
    p.add_argument("--n-re", type=int, required=True, help="grid points along Re k")
    p.add_argument("--n-im", type=int, required=True, help="grid points along Im k")
    p.set_defaults(fn=_cmd_scan)

    p = sub.add_parser("verify", help="cross-validate the ladder by the argument principle")
    _add_client_args(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("series", help="series approximations with remainder bounds")
    _add_client_args(p, ["csv", "json"])
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("radius", help="certified disk geometry and admissibility")
    _add_client_args(p)
    p.set_defaults(fn=_cmd_radius)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except httpx.HTTPError as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
