"""FastAPI service wrapping the core package.

Stateless: every endpoint parses its request, calls the pure library and
returns a model. Domain errors map to 422 with a structured body; syntax
errors carry the byte offset and expected tokens.
"""
from __future__ import annotations

import warnings

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..arithmetic import (
    SPECIFIC_AXIOM_KEYS,
    SchemaSpec,
    bridge_derivation,
    classification_record,
    classify_axiom,
    generate_logical_axioms,
    induction_instance,
    specific_axiom,
)
from ..entailment import (
    Assume,
    BoundedRefute,
    SkeletonNecessary,
    atomic_entails_fo,
    atomic_entails_prop,
    classical_entails_prop,
    in_ld,
)
from ..errors import AtomlogError, ParseError, PreconditionError
from ..matrix import builtin, fo_countermodel_search, table_dump, validity
from ..proofcheck import (
    RULESET_MP_GEN,
    RULESET_MP_SUBST,
    SetOracle,
    check,
    default_oracles,
    derivation_from_jsonl,
    derivation_to_jsonl,
)
from ..report import report_json
from ..syntax import free_vars, parse, parse_arith, parse_fo, parse_prop, render
from ..translate import ArityCollisionWarning, translate_i, translate_j
from . import models as m

_L2_MODES = {
    "assume": lambda req: Assume(),
    "skeleton": lambda req: SkeletonNecessary(),
    "refute": lambda req: BoundedRefute(req.max_domain),
}


def create_app() -> FastAPI:
    app = FastAPI(title="atomlog", version=__version__)

    @app.exception_handler(AtomlogError)
    async def domain_error(request: Request, exc: AtomlogError):
        body = m.ErrorBody(error=type(exc).__name__, message=str(exc))
        if isinstance(exc, ParseError):
            body.position = exc.position
            body.expected = list(exc.expected)
        return JSONResponse(status_code=422, content=body.model_dump(exclude_none=True))

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError):
        body = m.ErrorBody(error="ValueError", message=str(exc))
        return JSONResponse(status_code=422, content=body.model_dump(exclude_none=True))

    @app.get("/health", response_model=m.HealthResponse)
    def health():
        return m.HealthResponse(status="ok", version=__version__)

    @app.post("/parse", response_model=m.ParseResponse)
    def parse_endpoint(req: m.ParseRequest):
        return m.ParseResponse(sort=req.sort, rendered=render(parse(req.sort, req.text)))

    @app.get("/tables/{matrix}", response_model=m.TablesResponse)
    def tables(matrix: str):
        mat = builtin(matrix)
        return m.TablesResponse(matrix=mat.name, text=table_dump(mat))

    @app.post("/validity", response_model=m.ValidityResponse)
    def validity_endpoint(req: m.ValidityRequest):
        mat = builtin(req.matrix)
        phi = parse_prop(req.formula)
        verdict = validity(mat, phi, cap=req.atom_cap)
        witness = None
        if verdict.witness is not None:
            witness = {str(v): t for v, t in sorted(verdict.witness.items(), key=lambda kv: kv[0].sort_key())}
        return m.ValidityResponse(
            matrix=mat.name, formula=render(phi), valid=verdict.valid, witness=witness, value=verdict.value
        )

    @app.post("/entail", response_model=m.EntailResponse)
    def entail(req: m.EntailRequest):
        if req.sort == "prop":
            phi, psi = parse_prop(req.premise), parse_prop(req.conclusion)
            fn = atomic_entails_prop if req.kind == "atomic" else classical_entails_prop
            verdict = fn(phi, psi)
        else:
            if req.kind == "classical":
                raise PreconditionError("classical entailment is decided at the propositional level only")
            phi, psi = parse_fo(req.premise), parse_fo(req.conclusion)
            verdict = atomic_entails_fo(phi, psi, _L2_MODES[req.l2_mode](req))
        return m.EntailResponse(**verdict.to_json())

    @app.post("/translate", response_model=m.TranslateResponse)
    def translate(req: m.TranslateRequest):
        captured: list[str] = []
        if req.map == "j":
            phi = parse_fo(req.formula)
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always", ArityCollisionWarning)
                image = translate_j(phi)
            captured = [str(w.message) for w in caught if issubclass(w.category, ArityCollisionWarning)]
        else:
            phi = parse_arith(req.formula)
            image = translate_i(phi)
        return m.TranslateResponse(map=req.map, formula=render(phi), image=render(image), warnings=captured)

    @app.get("/axioms/{name}", response_model=m.AxiomResponse)
    def axiom(name: str):
        if not name.startswith("psi"):
            raise PreconditionError(f"axiom names look like psi<k> with k in {SPECIFIC_AXIOM_KEYS}")
        try:
            k = int(name[3:])
        except ValueError:
            raise PreconditionError(f"axiom names look like psi<k> with k in {SPECIFIC_AXIOM_KEYS}") from None
        ast = specific_axiom(k)
        return m.AxiomResponse(name=name, formula=render(ast), free_variables=sorted(free_vars(ast)))

    @app.post("/induction", response_model=m.InductionResponse)
    def induction(req: m.InductionRequest):
        body = parse_arith(req.formula)
        return m.InductionResponse(formula=render(induction_instance(body, req.var)))

    @app.post("/membership", response_model=m.EntailResponse)
    def membership(req: m.MembershipRequest):
        phi = parse_fo(req.formula)
        verdict = in_ld(phi, _L2_MODES[req.l2_mode](req))
        return m.EntailResponse(**verdict.to_json())

    @app.post("/classify", response_model=m.ClassifyResponse)
    def classify(req: m.ClassifyRequest):
        spec = SchemaSpec.from_json(req.model_dump(exclude_none=True))
        records = []
        admitted = 0
        for member in generate_logical_axioms(spec):
            record = classification_record(member)
            records.append(record)
            admitted += record["class"] == "admitted"
        return m.ClassifyResponse(records=records, admitted=admitted, excluded=len(records) - admitted)

    @app.post("/bridge", response_model=m.BridgeResponse)
    def bridge(req: m.BridgeRequest):
        alpha = parse_arith(req.alpha)
        derivation = bridge_derivation(alpha, req.via)
        # the caller vouches for classical validity of a hand-supplied axiom
        oracles = default_oracles(registry=[alpha], policy="registry")
        outcome = check(derivation, oracles, RULESET_MP_GEN)
        cls = classify_axiom(alpha)
        return m.BridgeResponse(
            derivation=derivation_to_jsonl(derivation),
            image=render(cls.image),
            check="ok" if outcome.ok else f"step {outcome.error.index}: {outcome.error.reason}",
        )

    @app.post("/checkproof", response_model=m.CheckProofResponse)
    def checkproof(req: m.CheckProofRequest):
        derivation = derivation_from_jsonl(req.derivation)
        rule_set = req.rule_set or (RULESET_MP_SUBST if derivation.sort == "prop" else RULESET_MP_GEN)
        oracles = default_oracles()
        if req.premises:
            parsed = [parse(derivation.sort, text) for text in req.premises]
            oracles["premise"] = SetOracle("premise", list(oracles["premise"].formulas) + parsed)
            oracles["seed"] = SetOracle("seed", parsed)
        outcome = check(derivation, oracles, rule_set)
        resp = m.CheckProofResponse(ok=outcome.ok, steps=len(derivation.steps))
        if outcome.error is not None:
            resp.error_index = outcome.error.index
            resp.error_reason = outcome.error.reason
            resp.error_detail = outcome.error.detail
        return resp

    @app.post("/countermodel", response_model=m.CountermodelResponse)
    def countermodel(req: m.CountermodelRequest):
        if req.sort == "fo":
            phi = parse_fo(req.formula)
        elif req.sort == "arith":
            phi = parse_arith(req.formula)
        else:
            try:
                phi = parse_fo(req.formula)
            except ParseError:
                phi = parse_arith(req.formula)
        structure = fo_countermodel_search(phi, req.max_domain)
        if structure is None:
            return m.CountermodelResponse(found=False)
        return m.CountermodelResponse(found=True, structure=structure.to_json())

    @app.post("/report", response_model=m.ReportResponse)
    def report(req: m.ReportRequest):
        return m.ReportResponse(**report_json(req.seed))

    return app


app = create_app()
