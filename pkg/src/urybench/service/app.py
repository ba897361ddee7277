"""HTTP service exposing the workbench operations.

Stateless: every endpoint parses its inputs, runs one library call, and
returns the result.  Library input errors map to status 422 with a body
``{"kind": ..., "message": ...}``.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import UrybenchError
from ..harness import SuiteReport, check_axiom, run_all_axioms
from ..independence import Config, counterexample_cor35, indep
from ..monoid import (DistanceSet, _format_scalar, is_fraisse_distance_set,
                      monoid_from_designator, sop_scalar_witness,
                      threshold_is_equivalence, validate_monoid)
from ..reports import ValidationReport
from ..space import (RandomSpaceParams, free_amalgam, parse_dms, random_space,
                     validate_space)
from . import schemas as s


def _report(report: ValidationReport) -> s.ReportResponse:
    return s.ReportResponse(
        subject=report.subject,
        passed=report.passed,
        checks=[s.CheckResultModel(name=c.name, passed=c.passed,
                                   witness=list(c.witness) if c.witness else None)
                for c in report.checks],
    )


def _suite(report: SuiteReport) -> s.AxiomReportModel:
    return s.AxiomReportModel(
        relation=report.relation,
        axiom=report.axiom,
        trials=report.trials,
        seed=report.seed,
        violations=[s.ViolationModel(trial=v.trial, seed=v.seed,
                                     config=v.config_text, detail=v.detail)
                    for v in report.violations],
        kappa_bound_observed=report.kappa_bound_observed,
        line=report.line(),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="urybench", version="0.1.0")

    @app.exception_handler(UrybenchError)
    async def _input_error(_: Request, exc: UrybenchError) -> JSONResponse:
        return JSONResponse(status_code=422,
                            content={"kind": type(exc).__name__,
                                     "message": exc.message})

    @app.post("/monoid/check", response_model=s.ReportResponse)
    def monoid_check(req: s.MonoidCheckRequest) -> s.ReportResponse:
        m = monoid_from_designator(req.monoid)
        return _report(validate_monoid(m, req.sample_bound))

    @app.post("/monoid/threshold", response_model=s.ThresholdResponse)
    def monoid_threshold(req: s.ThresholdRequest) -> s.ThresholdResponse:
        m = monoid_from_designator(req.monoid)
        return s.ThresholdResponse(
            equivalence=threshold_is_equivalence(m, m.parse(req.r), req.n))

    @app.post("/monoid/sop", response_model=s.SopResponse)
    def monoid_sop(req: s.SopRequest) -> s.SopResponse:
        m = monoid_from_designator(req.monoid)
        witness = sop_scalar_witness(m, req.n, req.search_bound)
        return s.SopResponse(witness=None if witness is None else m.format(witness))

    @app.post("/distance-set/check", response_model=s.SauerResponse)
    def distance_set_check(req: s.SauerRequest) -> s.SauerResponse:
        dset = DistanceSet.from_text(req.values)
        ok, witness = is_fraisse_distance_set(dset)
        return s.SauerResponse(
            fraisse=ok,
            witness=None if witness is None else [_format_scalar(w) for w in witness])

    @app.post("/spaces/generate", response_model=s.SpaceResponse)
    def spaces_generate(req: s.GenerateRequest) -> s.SpaceResponse:
        m = monoid_from_designator(req.monoid)
        params = RandomSpaceParams(
            max_finite=None if req.max_finite is None else m.parse(req.max_finite),
            max_components=req.max_components)
        return s.SpaceResponse(dms=random_space(m, req.points, params, req.seed).serialize())

    @app.post("/spaces/validate", response_model=s.ReportResponse)
    def spaces_validate(req: s.ValidateRequest) -> s.ReportResponse:
        return _report(validate_space(parse_dms(req.dms)))

    @app.post("/spaces/amalgamate", response_model=s.SpaceResponse)
    def spaces_amalgamate(req: s.AmalgamateRequest) -> s.SpaceResponse:
        left = parse_dms(req.left)
        right = parse_dms(req.right)
        return s.SpaceResponse(dms=free_amalgam(left, right, req.common).serialize())

    @app.post("/independence/evaluate", response_model=s.IndepResponse)
    def independence_evaluate(req: s.IndepRequest) -> s.IndepResponse:
        cfg = Config(parse_dms(req.dms), tuple(req.a), tuple(req.b), tuple(req.c))
        return s.IndepResponse(verdict=indep(cfg, req.rel))

    @app.post("/independence/axioms", response_model=s.AxiomsResponse)
    def independence_axioms(req: s.AxiomsRequest) -> s.AxiomsResponse:
        m = monoid_from_designator(req.monoid)
        if req.axiom is None:
            reports = run_all_axioms(req.rel, m, req.trials, req.size, req.seed)
        else:
            reports = [check_axiom(req.rel, req.axiom, m, req.trials, req.size, req.seed)]
        return s.AxiomsResponse(
            reports=[_suite(r) for r in reports],
            passed=all(r.passed for r in reports),
            text="".join(r.render() for r in reports))

    @app.post("/independence/counterexample", response_model=s.CounterexampleResponse)
    def independence_counterexample(req: s.CounterexampleRequest) -> s.CounterexampleResponse:
        m = monoid_from_designator(req.monoid)
        cfg, alg, infty = counterexample_cor35(m)
        return s.CounterexampleResponse(
            config=cfg.serialize(), alg=alg, infty=infty,
            line=f"alg={str(alg).lower()} infty={str(infty).lower()}")

    return app
