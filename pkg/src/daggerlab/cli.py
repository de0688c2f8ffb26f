"""Campaign runner.

Subcommands expose the verifiers with reproducible seeds and JSON or
text reports:

    daggerlab verify-axioms --field C --dims 0,1,2,3 --seed 7
    daggerlab lemmas --field C --seed 42 --format json --out report.json
    daggerlab reconstruct --field H
    daggerlab sqrt --input unitary.json
    daggerlab span --dims 2,3,4,5 --seed 1

Exit codes: 0 all checks pass, 1 a genuine violation (expected for the
real and quaternion fields on the square-root axiom), 2 input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import projspan
from .axioms import strict_sqrt_complex
from .campaigns import (
    CampaignConfig,
    run_axiom_suite,
    run_lemma_suite,
    run_reconstruction_suite,
)
from .errors import DaggerLabError
from .matcat import Morphism
from .reports import PASS
from .scalars import Field, TolerancePolicy

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in text.split(",") if part != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad dimension list {text!r}") from exc
    if any(d < 0 for d in dims) or not dims:
        raise argparse.ArgumentTypeError("dimensions must be natural numbers")
    return dims


def _add_common(parser: argparse.ArgumentParser, default_dims: str) -> None:
    parser.add_argument("--field", choices=["R", "C", "H"], default="C")
    parser.add_argument("--dims", type=_parse_dims, default=_parse_dims(default_dims))
    parser.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("DAGGERLAB_SEED", "0")),
        help="campaign seed (falls back to DAGGERLAB_SEED, then 0)",
    )
    parser.add_argument("--trials", type=int, default=None,
                        help="override the per-check sample counts")
    parser.add_argument("--tol-abs", type=float, default=1e-9)
    parser.add_argument("--tol-rel", type=float, default=1e-9)
    parser.add_argument("--out", default=None, help="write the report here instead of stdout")
    parser.add_argument("--format", choices=["json", "text"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="daggerlab",
        description="verification campaigns for the matrix dagger category model",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-axioms", help="run the H1-H5 axiom suites")
    _add_common(p, "0,1,2,3,4")

    p = sub.add_parser("lemmas", help="run every invariant campaign")
    _add_common(p, "0,1,2,3,4,5,6")

    p = sub.add_parser("reconstruct", help="run the scalar-field and Hermitian-space suites")
    _add_common(p, "1,2,3,4,5,6")

    p = sub.add_parser("span", help="projection-word saturation reports")
    _add_common(p, "1,2,3,4,5")
    p.add_argument("--max-len", type=int, default=projspan.DEFAULT_MAX_LEN)

    p = sub.add_parser("sqrt", help="strict square root certificate for a unitary")
    p.add_argument("--input", default="-", help="morphism JSON file, '-' for stdin")
    p.add_argument("--out", default=None)
    p.add_argument("--tol-abs", type=float, default=1e-9)
    p.add_argument("--tol-rel", type=float, default=1e-9)
    return parser


def _config(args: argparse.Namespace) -> CampaignConfig:
    return CampaignConfig(
        field=Field.from_name(args.field),
        dims=args.dims,
        seed=args.seed,
        trials=args.trials,
        tol=TolerancePolicy(args.tol_abs, args.tol_rel),
    )


def _emit(args: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        body = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        body = "".join(line + "\n" for line in text_lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _suite_command(args: argparse.Namespace, runner) -> int:
    cfg = _config(args)
    # text to stdout streams per-check lines live; JSON streams progress
    # to stderr and emits the whole report at the end
    live_to_stdout = args.format == "text" and not args.out
    stream = sys.stdout if live_to_stdout else sys.stderr
    reports = runner(cfg, stream=stream)
    payload = {
        "command": args.command,
        "field": cfg.field.value,
        "seed": cfg.seed,
        "dims": list(cfg.dims),
        "tolerance": {"abs": cfg.tol.abs_eps, "rel": cfg.tol.rel_eps},
        "reports": [r.to_json() for r in reports],
        "passed": all(r.status == PASS for r in reports),
    }
    summary = (
        f"{'OK' if payload['passed'] else 'VIOLATIONS FOUND'}: "
        f"{sum(r.status == PASS for r in reports)}/{len(reports)} checks passed"
    )
    if live_to_stdout:
        sys.stdout.write(summary + "\n")
    else:
        lines = [
            f"[{r.status.upper()}] {r.axiom} field={r.field} residual={r.residual:.3e}"
            for r in reports
        ]
        _emit(args, payload, lines + [summary])
    return EXIT_OK if payload["passed"] else EXIT_VIOLATION


def _span_command(args: argparse.Namespace) -> int:
    cfg = _config(args)
    reports = [
        projspan.saturation_check(dim, cfg.seed, args.max_len, tol=cfg.tol)
        for dim in cfg.dims
        if dim >= 1
    ]
    payload = {
        "command": "span",
        "seed": cfg.seed,
        "max_len": args.max_len,
        "reports": [r.to_json() for r in reports],
    }
    lines = [
        f"[{r.status.upper()}] dim={r.dim} rank={r.rank}/{r.target} words={r.words} seed={r.seed}"
        for r in reports
    ]
    _emit(args, payload, lines)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION


def _sqrt_command(args: argparse.Namespace) -> int:
    try:
        if args.input == "-":
            raw = sys.stdin.read()
        else:
            with open(args.input) as fh:
                raw = fh.read()
        data = json.loads(raw)
        morphism = Morphism.from_json(data)
    except json.JSONDecodeError as exc:
        print(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
              file=sys.stderr)
        return EXIT_INPUT
    except (OSError, KeyError, TypeError, ValueError, DaggerLabError) as exc:
        print(f"bad morphism input: {exc}", file=sys.stderr)
        return EXIT_INPUT

    try:
        cert = strict_sqrt_complex(morphism, TolerancePolicy(args.tol_abs, args.tol_rel))
    except DaggerLabError as exc:
        print(f"cannot take a strict square root: {exc}", file=sys.stderr)
        return EXIT_INPUT

    payload = {
        "root": cert.root.to_json(),
        "interpolation_data": [
            {"eigenvalue": lam.to_json(), "root": val.to_json()}
            for lam, val in cert.interpolation_data
        ],
        "residual": cert.residual,
    }
    body = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify-axioms":
        return _suite_command(args, run_axiom_suite)
    if args.command == "lemmas":
        return _suite_command(args, run_lemma_suite)
    if args.command == "reconstruct":
        return _suite_command(args, run_reconstruction_suite)
    if args.command == "span":
        return _span_command(args)
    if args.command == "sqrt":
        return _sqrt_command(args)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
