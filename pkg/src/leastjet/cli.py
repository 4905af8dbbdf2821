"""Command-line interface and JSON report emission.

Subcommands: least, classify, bundle, project, tangents, artin, theta,
report-all.  Reports are byte-deterministic for a fixed config: fixed seeds,
insertion-ordered keys, exact scalars serialized as "p/q" or "p/q+r/s*i"
strings; the only decimal is the slope proxy, fixed to six digits and
labeled approximate.  Exit codes: 0 success, 1 usage/config error, 2
mathematical error (module-qualified code in the report).
"""

from __future__ import annotations

import argparse
import json
import sys
from math import inf as ORD_INF

from .artin import build_artin_algebra
from .config import COMMANDS, RunConfig
from .errors import (ComputationError, ConfigError, NotDInvariant,
                     TruncationInsufficient)
from .expressions import to_poly
from .invariants import classify_point, zero_estimate_table
from .least import compute_least_space, is_d_invariant
from .pairing import Projector, annihilator_basis
from .parametrization import (bos_calvi_tangents, polynomial_function_space,
                              pullback_polynomial)
from .wronskian import is_bundle_point, jet_rank_profile

SCHEMA_VERSION = 1


# -- serialization helpers --------------------------------------------------


def _least_dict(space):
    return {
        "dimension": space.dimension,
        "basis": [str(p) for p in space.basis],
        "maxDegree": space.max_degree(),
        "fullThroughDegree": space.full_through_degree(),
        "verifiedOrder": space.verified_order,
    }


def _annihilator_dict(ann):
    out = {
        "degreeBound": ann.degree_bound,
        "perDegree": {str(k): [str(p) for p in ps]
                      for k, ps in ann.per_degree.items()},
    }
    if ann.monomial_generators is not None:
        out["monomialGenerators"] = [str(p)
                                     for p in ann.monomial_generators]
    else:
        out["monomialGenerators"] = None
    return out


def _d_invariance_dict(least):
    flag, witness = is_d_invariant(least)
    out = {"flag": flag}
    if witness is not None:
        p, i, dp = witness
        out["witness"] = {"element": str(p), "variable": i,
                          "derivative": str(dp)}
    return out


def _bundle_dict(space, seed):
    flag, cert = is_bundle_point(space, seed=seed)
    profile = jet_rank_profile(space, space.dimension - 1, seed=seed)
    out = {
        "flag": flag,
        "ranks": profile.ranks,
        "genericRanks": profile.generic_ranks,
        "sampledPoints": [[str(c) for c in pt]
                          for pt in profile.sample_points],
        "status": cert.status if cert.young is None else "proved",
    }
    if cert.young is not None:
        out["witnessYoungLike"] = [list(nu) for nu in cert.young]
    return out


def _space_for(cfg, order):
    if cfg.generators is not None:
        return cfg.function_space(order or 16), None
    param = cfg.parametrization()
    pfs = polynomial_function_space(param, cfg.degree, order)
    return pfs.space, pfs


def _label_str(label, cfg):
    if isinstance(label, tuple):
        from .poly import Poly
        return str(Poly.monomial(cfg.target_variables, label))
    return str(label)


# -- command pipelines --------------------------------------------------


def cmd_least(cfg, order):
    space, pfs = _space_for(cfg, order)
    least = compute_least_space(space)
    out = {
        "leastSpace": _least_dict(least),
        "dInvariant": _d_invariance_dict(least),
        "annihilators": _annihilator_dict(annihilator_basis(least)),
    }
    if pfs is not None:
        out["dims"] = pfs.dims
        out["hilbert"] = pfs.chi
    return out


def cmd_bundle(cfg, order):
    space, _ = _space_for(cfg, order)
    return {"bundle": _bundle_dict(space, cfg.seed)}


def cmd_classify(cfg, order):
    param = cfg.parametrization()
    c = classify_point(param, cfg.degree, order, seed=cfg.seed)
    out = {
        "bundle": c.bundle,
        "dInvariant": c.d_invariant,
        "taylorian": c.taylorian if c.n == 1 else "not-applicable",
        "gapWitness": c.gap_witness,
    }
    if c.bundle_certificate.young is not None:
        out["witnessYoungLike"] = [list(nu)
                                   for nu in c.bundle_certificate.young]
    return out


def cmd_project(cfg, order):
    param = cfg.parametrization()
    F = to_poly(cfg.target_poly(), param.target_variables)
    pfs = polynomial_function_space(param, cfg.degree, order)
    projector = Projector(pfs.space)
    need = projector.max_degree()
    f = pullback_polynomial(
        param, F, None if param.exact else max(order or 0, need))
    coeffs, reconstituted = projector.project(f)
    residual = f - reconstituted
    out = {
        "coefficients": [
            {"monomial": _label_str(lab, cfg), "value": str(c)}
            for lab, c in zip(pfs.space.labels, coeffs)],
        "projectedJet": str(reconstituted),
        "projectorErrorOrder": _ord_str(residual),
        "ordinaryTaylorErrorOrder": _ord_str(
            f - f.truncate(cfg.degree)),
    }
    return out


def _ord_str(jet):
    if jet.is_zero_through_truncation():
        return "infinity" if jet.exact else f">{jet.order}"
    return str(jet.order_of())


def cmd_tangents(cfg, order):
    param = cfg.parametrization()
    tangent_set = bos_calvi_tangents(param, cfg.degree, order)
    return {
        "degree": cfg.degree,
        "cardinality": tangent_set.cardinality,
        "tangents": [str(t) for t in tangent_set.tangents],
        "sourceLeast": _least_dict(tangent_set.source_least),
    }


def cmd_artin(cfg, order):
    space, _ = _space_for(cfg, order)
    algebra = build_artin_algebra(Projector(space))
    return _artin_dict(algebra, cfg)


def _artin_dict(algebra, cfg):
    return {
        "dimension": algebra.dimension,
        "basisLabels": [_label_str(lab, cfg)
                        for lab in algebra.basis_labels],
        "unit": [str(c) for c in algebra.unit],
        "unitIndex": algebra.unit_index,
        "nilpotencyIndex": algebra.nilpotency_index,
        "structureConstants": [
            [[str(c) for c in row] for row in plane]
            for plane in algebra.constants],
        "annihilators": _annihilator_dict(algebra.annihilator),
    }


def cmd_theta(cfg, order):
    param = cfg.parametrization()
    report = zero_estimate_table(param, max(cfg.degree, 1), order,
                                 seed=cfg.seed)
    return _theta_dict(report)


def _theta_dict(report):
    return {
        "rows": [r.as_dict() for r in report.rows],
        "slope": None if report.slope is None else f"{report.slope:.6f}",
        "slopeNote": f"approximate; {report.slope_caveat}",
        "linearBound": report.linear_bound,
        "truncationUsed": report.truncation,
        "exactInputs": report.exact,
    }


def cmd_report_all(cfg, order):
    out = {}
    if cfg.components is not None:
        out["theta"] = cmd_theta(cfg, order)
        out["classify"] = cmd_classify(cfg, order)
        out["tangents"] = cmd_tangents(cfg, order)
    else:
        out["least"] = cmd_least(cfg, order)
        out["bundle"] = cmd_bundle(cfg, order)
    try:
        out["artin"] = cmd_artin(cfg, order)
    except NotDInvariant as exc:
        out["artin"] = {"skipped": exc.code, "reason": str(exc)}
    return out


PIPELINES = {
    "least": cmd_least,
    "classify": cmd_classify,
    "bundle": cmd_bundle,
    "project": cmd_project,
    "tangents": cmd_tangents,
    "artin": cmd_artin,
    "theta": cmd_theta,
    "report-all": cmd_report_all,
}


def run_report(cfg, command=None):
    """Execute a command pipeline with truncation-doubling retries.

    Returns (report dict, exit code).  TruncationInsufficient retries with
    doubled order up to the configured cap; every other ComputationError is
    final and becomes an error report with exit code 2.
    """
    command = command or cfg.command
    if command is None:
        raise ConfigError("no command given (config key or CLI subcommand)")
    if command not in COMMANDS:
        raise ConfigError(f"unknown command {command!r}")
    order = cfg.truncation
    retries = 0
    while True:
        try:
            results = PIPELINES[command](cfg, order)
            break
        except TruncationInsufficient as exc:
            current = order or 16
            if 2 * current > cfg.truncation_cap:
                return _error_report(cfg, command, exc, retries), 2
            order = 2 * current
            retries += 1
        except ComputationError as exc:
            return _error_report(cfg, command, exc, retries), 2
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "tool": "leastjet",
        "command": command,
        "seed": cfg.seed,
        "truncation": {
            "requested": cfg.truncation,
            "used": order,
            "retries": retries,
            "cap": cfg.truncation_cap,
        },
        "inputs": cfg.echo(),
        "results": results,
    }
    return report, 0


def _error_report(cfg, command, exc, retries):
    return {
        "schemaVersion": SCHEMA_VERSION,
        "tool": "leastjet",
        "command": command,
        "seed": cfg.seed,
        "inputs": cfg.echo(),
        "error": {
            "code": exc.code,
            "message": str(exc),
            "details": {k: str(v) for k, v in exc.details.items()},
            "retries": retries,
        },
    }


def render_report(report):
    return json.dumps(report, indent=2) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser():
    parser = _Parser(prog="leastjet", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand")
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="JSON config path")
        p.add_argument("--out", help="report output path (default stdout)")
        p.add_argument("--truncation", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--degree", type=int)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if not args.subcommand:
            raise ConfigError("missing subcommand")
        cfg = RunConfig.load(args.config)
        if args.truncation is not None:
            cfg.truncation = args.truncation
        if args.seed is not None:
            cfg.seed = args.seed
        if args.degree is not None:
            cfg.degree = args.degree
        if args.out is not None:
            cfg.out = args.out
        report, code = run_report(cfg, args.subcommand)
    except ConfigError as exc:
        print(f"leastjet: {exc}", file=sys.stderr)
        return 1
    text = render_report(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
