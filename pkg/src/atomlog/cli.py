"""Thin command-line client for the service.

Every command serializes its arguments into a request model and calls a
service endpoint. With no --server (or ATOMLOG_SERVER) the requests run
against the app in-process through an ASGI transport, so the CLI works
standalone and deterministically; with a server URL they go over HTTP.

Exit codes: 0 for a positive outcome (valid, holds, proof ok, countermodel
found, all report claims pass), 1 for the negative outcome or any domain
error (printed as a JSON record), 2 for usage errors.
"""
from __future__ import annotations

import asyncio
import json
import re
import sys

import click
import httpx

_JSON_KW = dict(indent=2, sort_keys=True)


def _call(server: str | None, method: str, path: str, payload: dict | None = None) -> tuple[int, dict]:
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            response = client.request(method, path, json=payload)
            return response.status_code, response.json()

    from .service.app import create_app

    async def go():
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport, base_url="http://atomlog.local", timeout=None) as client:
            response = await client.request(method, path, json=payload)
            return response.status_code, response.json()

    return asyncio.run(go())


def _request(ctx: click.Context, method: str, path: str, payload: dict | None = None) -> dict:
    status, body = _call(ctx.obj["server"], method, path, payload)
    if status >= 400:
        click.echo(json.dumps(body, **_JSON_KW))
        ctx.exit(1)
    return body


@click.group()
@click.option("--server", envvar="ATOMLOG_SERVER", default=None, metavar="URL", help="Remote service URL; default runs the service in-process.")
@click.version_option(package_name="atomlog")
@click.pass_context
def main(ctx, server):
    """Three-valued matrix logic toolkit."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@click.argument("matrix", type=click.Choice(["m2", "md", "mdp"]))
@click.pass_context
def table(ctx, matrix):
    """Print every truth table of a built-in matrix."""
    body = _request(ctx, "GET", f"/tables/{matrix}")
    click.echo(body["text"], nl=False)


@main.command()
@click.option("--matrix", default="md", type=click.Choice(["m2", "md", "mdp"]), show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.argument("formula")
@click.pass_context
def valid(ctx, matrix, as_json, formula):
    """Decide validity; exit 0 if valid, 1 with the first counterexample."""
    body = _request(ctx, "POST", "/validity", {"matrix": matrix, "formula": formula})
    if as_json:
        click.echo(json.dumps(body, **_JSON_KW))
    elif body["valid"]:
        click.echo(f"valid in {body['matrix']}: {body['formula']}")
    else:
        witness = ", ".join(f"{k}={v}" for k, v in body["witness"].items())
        click.echo(f"not valid in {body['matrix']}: {body['formula']}")
        click.echo(f"counterexample: {witness} gives value {body['value']}")
    ctx.exit(0 if body["valid"] else 1)


_FO_HINT = re.compile(r"P[0-9]+_[0-9]+|\((all|ex) ")


@main.command()
@click.option("--atomic", "kind", flag_value="atomic", help="Atomic entailment.")
@click.option("--classical", "kind", flag_value="classical", help="Classical entailment.")
@click.option("--fo", is_flag=True, help="Treat the formulas as first-order.")
@click.option("--l2-mode", default="assume", type=click.Choice(["assume", "skeleton", "refute"]), show_default=True)
@click.option("--max-domain", default=2, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.argument("premise")
@click.argument("conclusion")
@click.pass_context
def entail(ctx, kind, fo, l2_mode, max_domain, as_json, premise, conclusion):
    """Decide whether CONCLUSION results from PREMISE; exit 0 iff it holds."""
    if kind is None:
        raise click.UsageError("choose one of --atomic or --classical")
    sort = "fo" if fo or _FO_HINT.search(premise) or _FO_HINT.search(conclusion) else "prop"
    body = _request(
        ctx,
        "POST",
        "/entail",
        {
            "kind": kind,
            "premise": premise,
            "conclusion": conclusion,
            "sort": sort,
            "l2_mode": l2_mode,
            "max_domain": max_domain,
        },
    )
    if as_json:
        click.echo(json.dumps(body, **_JSON_KW))
    else:
        click.echo(_entail_text(body))
    ctx.exit(0 if body["holds"] else 1)


def _entail_text(body: dict) -> str:
    if body["holds"]:
        line = "holds"
        if not body["authoritative"]:
            line += " (non-authoritative)"
    else:
        line = f"fails: {body.get('reason')}"
        if body.get("witness"):
            witness = ", ".join(f"{k}={v}" for k, v in body["witness"].items())
            line += f" [{witness} gives value {body.get('value')}]"
        if body.get("countermodel"):
            line += f" [countermodel: {json.dumps(body['countermodel'], sort_keys=True)}]"
    return line + f" ({body['evidence']})"


@main.command()
@click.option("--map", "map_", required=True, type=click.Choice(["j", "i"]), help="j erases a first-order formula, i an arithmetic one.")
@click.option("--json", "as_json", is_flag=True)
@click.argument("formula")
@click.pass_context
def translate(ctx, map_, as_json, formula):
    """Erase quantifiers and terms into a propositional skeleton."""
    body = _request(ctx, "POST", "/translate", {"map": map_, "formula": formula})
    if as_json:
        click.echo(json.dumps(body, **_JSON_KW))
    else:
        for warning in body["warnings"]:
            click.echo(f"warning: {warning}", err=True)
        click.echo(body["image"])


@main.command()
@click.option("--json", "as_json", is_flag=True)
@click.argument("name")
@click.pass_context
def axiom(ctx, as_json, name):
    """Print a specific arithmetic axiom, e.g. psi7."""
    body = _request(ctx, "GET", f"/axioms/{name}")
    click.echo(json.dumps(body, **_JSON_KW) if as_json else body["formula"])


@main.command()
@click.option("--var", "var", required=True, metavar="x<k>", help="Induction variable.")
@click.option("--json", "as_json", is_flag=True)
@click.argument("formula")
@click.pass_context
def induction(ctx, var, as_json, formula):
    """Build the induction instance for FORMULA over the given variable."""
    match = re.fullmatch(r"x?([0-9]+)", var)
    if match is None:
        raise click.UsageError("--var expects x<k>")
    body = _request(ctx, "POST", "/induction", {"formula": formula, "var": int(match.group(1))})
    click.echo(json.dumps(body, **_JSON_KW) if as_json else body["formula"])


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="One response object instead of JSON lines.")
@click.pass_context
def classify(ctx, spec_path, as_json):
    """Generate a certified corpus from a spec file and classify every member."""
    with open(spec_path, encoding="utf-8") as handle:
        spec = json.load(handle)
    body = _request(ctx, "POST", "/classify", spec)
    if as_json:
        click.echo(json.dumps(body, **_JSON_KW))
    else:
        for record in body["records"]:
            click.echo(json.dumps(record, sort_keys=True))


@main.command()
@click.option("--via", default="psi12", type=click.Choice(["psi12", "psi14"]), show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), help="Write the derivation (JSON lines) here instead of stdout.")
@click.option("--json", "as_json", is_flag=True)
@click.argument("alpha")
@click.pass_context
def bridge(ctx, via, output, as_json, alpha):
    """Derive an excluded logical axiom from psi12 (or psi14) by modus ponens."""
    body = _request(ctx, "POST", "/bridge", {"alpha": alpha, "via": via})
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(body["derivation"])
        if as_json:
            click.echo(json.dumps({k: v for k, v in body.items() if k != "derivation"}, **_JSON_KW))
        else:
            click.echo(f"wrote 3-step derivation to {output} (check: {body['check']})")
    elif as_json:
        click.echo(json.dumps(body, **_JSON_KW))
    else:
        click.echo(body["derivation"], nl=False)
    ctx.exit(0 if body["check"] == "ok" else 1)


@main.command()
@click.option("--premise", "premises", multiple=True, help="Extra formulas the premise/seed oracles accept.")
@click.option("--rule-set", default=None, type=click.Choice(["mp+gen", "mp+subst"]))
@click.option("--json", "as_json", is_flag=True)
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def checkproof(ctx, premises, rule_set, as_json, path):
    """Check a derivation file; exit 0 iff every step validates."""
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    payload = {"derivation": text, "premises": list(premises)}
    if rule_set:
        payload["rule_set"] = rule_set
    body = _request(ctx, "POST", "/checkproof", payload)
    if as_json:
        click.echo(json.dumps(body, **_JSON_KW))
    elif body["ok"]:
        click.echo(f"ok: {body['steps']} steps")
    else:
        click.echo(f"step {body['error_index']}: {body['error_reason']} ({body['error_detail']})")
    ctx.exit(0 if body["ok"] else 1)


@main.command()
@click.option("--max-domain", default=2, show_default=True)
@click.option("--sort", "sort_", default=None, type=click.Choice(["fo", "arith"]))
@click.option("--json", "as_json", is_flag=True)
@click.argument("formula")
@click.pass_context
def countermodel(ctx, max_domain, sort_, as_json, formula):
    """Search finite structures falsifying the universal closure of FORMULA."""
    payload = {"formula": formula, "max_domain": max_domain}
    if sort_:
        payload["sort"] = sort_
    body = _request(ctx, "POST", "/countermodel", payload)
    if as_json:
        click.echo(json.dumps(body, **_JSON_KW))
    elif body["found"]:
        click.echo(json.dumps(body["structure"], sort_keys=True))
    else:
        click.echo(f"no countermodel up to domain size {max_domain}")
    ctx.exit(0 if body["found"] else 1)


@main.command()
@click.option("--l2-mode", default="assume", type=click.Choice(["assume", "skeleton", "refute"]), show_default=True)
@click.option("--max-domain", default=2, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.argument("formula")
@click.pass_context
def membership(ctx, l2_mode, max_domain, as_json, formula):
    """Decide membership in the atomic predicate logic; exit 0 iff it holds."""
    body = _request(ctx, "POST", "/membership", {"formula": formula, "l2_mode": l2_mode, "max_domain": max_domain})
    click.echo(json.dumps(body, **_JSON_KW) if as_json else _entail_text(body))
    ctx.exit(0 if body["holds"] else 1)


@main.command()
@click.option("--seed", default=0, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def report(ctx, seed, as_json):
    """Run the full claim suite; exit 0 iff every claim passes."""
    body = _request(ctx, "POST", "/report", {"seed": seed})
    if as_json:
        click.echo(json.dumps(body, **_JSON_KW))
    else:
        for claim in body["claims"]:
            status = "PASS" if claim["passed"] else "FAIL"
            click.echo(f"[{claim['number']:2d}] {status} {claim['claim']:<24} {claim['summary']}")
        passed = sum(c["passed"] for c in body["claims"])
        click.echo(f"{passed}/{len(body['claims'])} claims passed")
    ctx.exit(0 if body["all_pass"] else 1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host, port):
    """Run the service under uvicorn."""
    import uvicorn

    uvicorn.run("atomlog.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
