"""Command-line front end.

Subcommands: enumerate, gamma, dim, oracle, module, quotient, psi, verify.
All output is deterministic (fixed orderings, sorted JSON keys) and files
are written atomically.  ``verify`` exits nonzero iff a check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from . import branching, heckemod, levelmap, multisegments, orbits, realparams, sweeps
from .scalars import scalar_str

__all__ = ["main"]


def _parse_lambda(text: str) -> tuple[int, ...]:
    try:
        entries = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok != "")
    except ValueError as exc:
        raise SystemExit(f"error: --lambda must be comma-separated integers: {exc}")
    return entries


def _emit(text: str, out: "str | None") -> None:
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".glhecke-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _load_real_param(args) -> realparams.RealParam:
    sources = [s for s in (args.factors, args.param, args.param_file) if s]
    if len(sources) != 1:
        raise SystemExit("error: give exactly one of --factors, --param, --param-file")
    try:
        if args.factors:
            return realparams.parse_factors(args.factors)
        if args.param:
            return realparams.real_param_from_json(json.loads(args.param))
        with open(args.param_file) as fh:
            return realparams.real_param_from_json(json.load(fh))
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise SystemExit(f"error: bad parameter spec: {exc}")


def _load_multisegment(args) -> multisegments.Multisegment:
    sources = [s for s in (args.segments, args.param, getattr(args, "steinberg", None)) if s]
    if len(sources) != 1:
        raise SystemExit("error: give exactly one of --segments, --param, --steinberg")
    try:
        if args.segments:
            return multisegments.parse_segments(args.segments)
        if args.param:
            return multisegments.multisegment_from_json(json.loads(args.param))
        return multisegments.steinberg_param(int(args.steinberg))
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise SystemExit(f"error: bad multisegment spec: {exc}")


def _add_real_param_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--factors", help="compact spec, e.g. 'gl2(2,1/2);gl1(sgn,-1)'")
    p.add_argument("--param", help="inline JSON parameter")
    p.add_argument("--param-file", help="path to a JSON parameter file")


def _add_segment_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--segments", help="inline spec, e.g. '{0,1};{-1,0}'")
    p.add_argument("--param", help="inline JSON multisegment")
    p.add_argument("--steinberg", metavar="K", help="single full segment centered at 0")


def _check_n(args, lam) -> None:
    if getattr(args, "n", None) is not None and args.n != len(lam):
        raise SystemExit(f"error: --n {args.n} does not match the {len(lam)} lambda entries")


def cmd_enumerate(args) -> int:
    lam = _parse_lambda(args.lam)
    _check_n(args, lam)
    if args.side == "real":
        params = realparams.enumerate_real_params(lam, args.min_level)
        if args.format == "json":
            text = _json_text(
                [
                    {
                        "param": realparams.real_param_to_json(p),
                        "level": p.level,
                        "infinitesimal_character": [
                            scalar_str(c) for c in p.infinitesimal_character()
                        ],
                    }
                    for p in params
                ]
            )
        else:
            rows = [
                [
                    realparams.factors_str(p),
                    str(p.level),
                    ",".join(scalar_str(c) for c in p.infinitesimal_character()),
                ]
                for p in params
            ]
            if args.format == "csv":
                text = _csv_text(["factors", "level", "infinitesimal_character"], rows)
            else:
                text = "\n".join("  ".join(r) for r in rows) + "\n"
    else:
        classes = multisegments.enumerate_multisegments(lam)
        if args.format == "json":
            text = _json_text(
                [
                    {
                        "hecke": multisegments.multisegment_to_json(ms),
                        "k": ms.k,
                        "central_character": [
                            scalar_str(c) for c in multisegments.central_character(ms)
                        ],
                    }
                    for ms in classes
                ]
            )
        else:
            rows = [
                [
                    multisegments.segments_str(ms),
                    str(ms.k),
                    ",".join(scalar_str(c) for c in multisegments.central_character(ms)),
                ]
                for ms in classes
            ]
            if args.format == "csv":
                text = _csv_text(["segments", "k", "central_character"], rows)
            else:
                text = "\n".join("  ".join(r) for r in rows) + "\n"
    _emit(text, args.out)
    return 0


def cmd_gamma(args) -> int:
    param = _load_real_param(args)
    try:
        image = levelmap.gamma(param, args.k)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    payload = {"k": args.k, "level": param.level}
    if image is None:
        payload["result"] = "zero"
    else:
        payload["hecke"] = multisegments.multisegment_to_json(image)
        payload["central_character"] = [
            scalar_str(c) for c in multisegments.central_character(image)
        ]
    _emit(_json_text(payload), args.out)
    return 0


def cmd_dim(args) -> int:
    param = _load_real_param(args)
    try:
        d = levelmap.dimension_std(param, args.k)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    if args.format == "text":
        _emit(f"{d}\n", args.out)
    else:
        _emit(_json_text({"k": args.k, "level": param.level, "dim": d}), args.out)
    return 0


def cmd_oracle(args) -> int:
    if args.factors or args.param or args.param_file:
        param = _load_real_param(args)
        try:
            mult = branching.hom_multiplicity(param, args.k)
        except ValueError as exc:
            raise SystemExit(f"error: {exc}")
        _emit(_json_text({"k": args.k, "level": param.level, "multiplicity": mult}), args.out)
        return 0
    if args.s is None or args.m is None:
        raise SystemExit("error: oracle needs either a parameter or --s and --m")
    decomp = branching.tensor_power_standard(args.s, args.m, args.k)
    rows = sorted(
        ["|".join(str(lab) for lab in labels), str(mult)] for labels, mult in decomp.items()
    )
    _emit(_csv_text(["tuple", "multiplicity"], rows), args.out)
    return 0


def cmd_module(args) -> int:
    ms = _load_multisegment(args)
    module = heckemod.build_standard_module(ms)
    payload = heckemod.module_to_json(module)
    payload["central_character"] = [scalar_str(c) for c in module.weight()]
    if args.quotient:
        try:
            payload["quotient_dim"] = heckemod.irreducible_quotient(
                multisegments.dominant_representative(ms)
            ).dim
        except RuntimeError as exc:
            raise SystemExit(f"error: {exc}")
    _emit(_json_text(payload), args.out)
    return 0


def cmd_quotient(args) -> int:
    ms = multisegments.dominant_representative(_load_multisegment(args))
    try:
        q = heckemod.irreducible_quotient(ms)
    except RuntimeError as exc:
        raise SystemExit(f"error: {exc}")
    std_dim = heckemod.build_standard_module(ms).dim
    _emit(_json_text({"std_dim": std_dim, "quotient_dim": q.dim}), args.out)
    return 0


def cmd_psi(args) -> int:
    lam = _parse_lambda(args.lam)
    _check_n(args, lam)
    ms = _load_multisegment(args)
    try:
        diagram = orbits.build_diagram(ms, lam)
    except (ValueError, orbits.StructuralError) as exc:
        raise SystemExit(f"error: {exc}")
    sigma = orbits.flatten_diagram(diagram)
    cls = orbits.orbit_class(sigma, diagram.blocks())
    if args.format == "text":
        text = (
            orbits.render_diagram(diagram)
            + "\n\nflattening: "
            + orbits.render_involution(sigma)
            + f"\nclass size: {len(cls.members)}\ncanonical:  "
            + orbits.render_involution(cls.canonical)
            + "\n"
        )
    else:
        text = _json_text(
            {
                "lambda": list(lam),
                "blocks": list(diagram.blocks().sizes),
                "flattening": orbits.involution_to_json(sigma),
                "canonical": orbits.involution_to_json(cls.canonical),
                "class_size": len(cls.members),
            }
        )
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    lam = _parse_lambda(args.lam) if args.lam else None
    report = sweeps.run_suite(args.suite, args.max_n, args.max_k, lam)
    _emit(_json_text(report), args.out)
    return 0 if report["ok"] else 1


def main(argv: "list[str] | None" = None) -> int:
    parser = argparse.ArgumentParser(
        prog="glhecke",
        description="Exact parameter correspondences and induced modules for gl(k).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list parameter classes at a weight")
    p.add_argument("--lambda", dest="lam", required=True, help="e.g. '2,1,0'")
    p.add_argument("--n", type=int, help="expected number of lambda entries (guard)")
    p.add_argument("--side", choices=("real", "hecke"), required=True)
    p.add_argument("--min-level", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gamma", help="image of a real parameter at level k")
    _add_real_param_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("dim", help="dimension of the level-k image")
    _add_real_param_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("oracle", help="branching-rule multiplicities")
    _add_real_param_args(p)
    p.add_argument("--s", type=int, help="number of O(2) slots (dump mode)")
    p.add_argument("--m", type=int, help="number of O(1) slots (dump mode)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("module", help="explicit induced module matrices")
    _add_segment_args(p)
    p.add_argument("--quotient", action="store_true", help="also report the quotient dimension")
    p.add_argument("--out")
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("quotient", help="dimension of the unique irreducible quotient")
    _add_segment_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("psi", help="orbit class of a multisegment")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, help="expected number of lambda entries (guard)")
    _add_segment_args(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sweeps.SUITES, required=True)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--lambda", dest="lam", help="restrict the bijection suite to one weight")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
