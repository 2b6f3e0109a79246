"""Command line front end, a thin client over the HTTP facade.

By default the service app is mounted in-process, so no server is needed and
batch usage stays a single command.  Pass ``--server URL`` to talk to a
running instance instead.  Exit codes: 0 success, 1 invalid input, 2 suite
violation, 3 Bottom reached mid operator word.
"""

from __future__ import annotations

import json
import sys
from typing import Any, Optional

import click
import httpx

from . import __version__
from .lagrangian import DEFAULT_PRIME
from .serialize import error_json
from .suites import DEFAULT_SEED, SUITE_NAMES

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VIOLATION = 2
EXIT_BOTTOM = 3


def _client(server: Optional[str]) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app, raise_server_exceptions=False)


def _echo_json(obj: Any) -> None:
    click.echo(json.dumps(obj, indent=2, sort_keys=True))


def _post(server: Optional[str], path: str, payload: dict) -> dict:
    """POST and return the body; exits with code 1 on any non-200 answer."""
    with _client(server) as client:
        try:
            resp = client.post(path, json=payload)
        except httpx.HTTPError as exc:
            _echo_json(error_json(f"request failed: {exc}"))
            sys.exit(EXIT_INVALID)
    try:
        body = resp.json()
    except ValueError:
        _echo_json(error_json(f"non-JSON response (status {resp.status_code})"))
        sys.exit(EXIT_INVALID)
    if resp.status_code != 200:
        _echo_json(body)
        sys.exit(EXIT_INVALID)
    return body


def _read_stdin_json() -> Any:
    text = click.get_text_stream("stdin").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        _echo_json(error_json(f"invalid JSON on standard input: {exc}"))
        sys.exit(EXIT_INVALID)


@click.group()
@click.version_option(version=__version__, prog_name="mvlab")
@click.option("--server", default=None, envvar="MVLAB_SERVER",
              help="Base URL of a running service; in-process by default.")
@click.pass_context
def main(ctx: click.Context, server: Optional[str]) -> None:
    """Crystal combinatorics toolkit: data, operators, maps, and suites."""
    ctx.obj = server


@main.command("enumerate")
@click.option("--n", "rank", type=int, required=True, help="Rank of the root system.")
@click.option("--max-height", type=int, required=True, help="Largest entry sum to emit.")
@click.pass_context
def enumerate_cmd(ctx: click.Context, rank: int, max_height: int) -> None:
    """List all data with entry sum up to the bound."""
    _echo_json(_post(ctx.obj, "/enumerate", {"n": rank, "max_height": max_height}))


@main.command("apply")
@click.option("--ops", required=True,
              help='Operator word, applied left to right, e.g. "f1 f2 e*1".')
@click.pass_context
def apply_cmd(ctx: click.Context, ops: str) -> None:
    """Apply an operator word to a datum read from standard input."""
    datum = _read_stdin_json()
    body = _post(ctx.obj, "/apply", {"datum": datum, "ops": ops})
    _echo_json(body)
    if body.get("bottom"):
        sys.exit(EXIT_BOTTOM)


@main.command("psi")
@click.pass_context
def psi_cmd(ctx: click.Context) -> None:
    """Map a datum (standard input) to its prime-field free datum."""
    datum = _read_stdin_json()
    _echo_json(_post(ctx.obj, "/psi", {"datum": datum}))


@main.command("polytope")
@click.pass_context
def polytope_cmd(ctx: click.Context) -> None:
    """Emit vertex and halfspace data of the polytope of a datum (standard input)."""
    datum = _read_stdin_json()
    _echo_json(_post(ctx.obj, "/polytope", {"datum": datum}))


@main.command("quiver")
@click.option("--n", "rank", type=int, required=True, help="Rank of the root system.")
@click.option("--maya", required=True,
              help="Comma-separated members of the Maya diagram, e.g. 2,3,5.")
@click.pass_context
def quiver_cmd(ctx: click.Context, rank: int, maya: str) -> None:
    """Emit the orientation, characterizing root, and adapted word of a diagram."""
    try:
        members = [int(part) for part in maya.split(",") if part.strip()]
    except ValueError:
        _echo_json(error_json(f"could not parse --maya value {maya!r}"))
        sys.exit(EXIT_INVALID)
    _echo_json(_post(ctx.obj, "/quiver", {"n": rank, "maya": members}))


@main.command("lagrangian")
@click.option("--p", "prime", type=int, default=DEFAULT_PRIME, show_default=True,
              help="Prime modulus for sampling.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def lagrangian_cmd(ctx: click.Context, prime: int, seed: int) -> None:
    """Sample a conormal point over a datum (standard input) and compare invariants."""
    datum = _read_stdin_json()
    body = _post(ctx.obj, "/lagrangian", {"datum": datum, "p": prime, "seed": seed})
    _echo_json(body)
    if not body.get("ok", False):
        sys.exit(EXIT_VIOLATION)


@main.command("verify")
@click.option("--suite", required=True, metavar="NAME",
              help="Which suite to run; one of: " + ", ".join(SUITE_NAMES) + ".")
@click.option("--n", "rank", type=int, default=None, help="Restrict to one rank.")
@click.option("--max-height", type=int, default=None, help="Override the entry-sum bound.")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Worker threads for instance evaluation.")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True,
              help="Seed for the randomized parts (mutations, sampling).")
@click.pass_context
def verify_cmd(ctx: click.Context, suite: str, rank: Optional[int],
               max_height: Optional[int], jobs: int, seed: int) -> None:
    """Run a named verification suite and emit its report."""
    body = _post(ctx.obj, "/verify", {
        "suite": suite, "n": rank, "max_height": max_height,
        "jobs": jobs, "seed": seed,
    })
    _echo_json(body)
    if not body.get("ok", False):
        sys.exit(EXIT_VIOLATION)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve_cmd(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
