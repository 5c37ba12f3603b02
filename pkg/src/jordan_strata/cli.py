"""Command-line front end: classify points, run verification campaigns,
reduce oscillator configurations and evaluate the homogeneous embeddings.

All verbs are thin wrappers over the library; reports are deterministic for
a fixed seed and are emitted as JSON (machine) or text (human).  Exit codes:
0 every check passed, 1 a mathematical check failed (the report carries an
exact witness), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .jordan import JordanElement, det, jordan_rank, matrix_model_rank, sharp
from .reduction import (
    OscillatorConfig,
    angular_momentum,
    classify_config,
    encode_oscillator,
    reduced_point,
    stratum,
)
from . import cdmatrix as cdm
from .scalars import Scalar
from .strata import plucker, rank1_projective_factor, rank1_sample, segre, veronese
from .suites import SUITES, run_suite

DEFAULT_SEED_ENV = "JORDAN_STRATA_SEED"


class UsageError(Exception):
    pass


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        report = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = _render(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
            fh.write("\n")
    print(out if args.format == "json" else out.rstrip("\n"))
    return 0 if report["verdict"] == "pass" else 1


def _build_parser():
    parser = argparse.ArgumentParser(prog="jordan-strata")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="write the full report here")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument(
            "--seed",
            type=int,
            default=int(os.environ.get(DEFAULT_SEED_ENV, "0")),
        )

    p = sub.add_parser("classify", help="stratify a Jordan element from JSON")
    p.add_argument("input", help="path to the element JSON, or - for stdin")
    common(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--case", default=None)
    p.add_argument("--samples", type=int, default=25)
    common(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("reduce", help="reduce an oscillator configuration")
    p.add_argument("input", help="path to the configuration JSON, or - for stdin")
    common(p)
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("embed", help="evaluate a homogeneous embedding")
    p.add_argument(
        "--kind", required=True, choices=("veronese", "segre", "plucker", "octonionic")
    )
    p.add_argument(
        "--vectors",
        default=None,
        help="JSON list of input vectors (entries: int, [n,d], or [[rn,rd],[in,id]])",
    )
    common(p)
    p.set_defaults(handler=cmd_embed)
    return parser


def _read_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _scalar_from_entry(entry) -> Scalar:
    if isinstance(entry, int):
        return Scalar(entry, 0, True)
    if isinstance(entry, list) and len(entry) == 2:
        if isinstance(entry[0], int):
            return Scalar(Fraction(entry[0], entry[1]), 0, True)
        (rn, rd), (im_n, im_d) = entry
        return Scalar(Fraction(rn, rd), Fraction(im_n, im_d), True)
    raise UsageError(f"cannot parse scalar entry {entry!r}")


def _report(command, seed, checks):
    failures = sum(c["failures"] for c in checks)
    return {
        "command": command,
        "seed": seed,
        "checks": sorted(checks, key=lambda c: (c["name"], str(c["case"]))),
        "verdict": "pass" if failures == 0 else "fail",
    }


def _render(report, fmt):
    if fmt == "json":
        return json.dumps(report, sort_keys=True)
    lines = [f"# {' '.join(report['command'])}  (seed {report['seed']})"]
    for c in report["checks"]:
        status = "PASS" if c["failures"] == 0 else "FAIL"
        lines.append(
            f"{status}  {c['name']} [{c['case']}]  samples={c['samples']} failures={c['failures']}"
        )
        if c["failures"] and c.get("witness"):
            lines.append(f"      witness: {c['witness']}")
    lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines)


def cmd_classify(args):
    obj = _read_json(args.input)
    elt = JordanElement.from_json(obj)
    rank = jordan_rank(elt)
    checks = [
        {
            "name": "classify",
            "case": elt.algebra + ("_C" if elt.gaussian else ""),
            "samples": 1,
            "failures": 0,
            "witness": None,
            "stratum": rank,
            "det": det(elt).to_json(),
            "sharp": sharp(elt).to_json(),
        }
    ]
    if elt.algebra in ("R", "C", "H") and elt.gaussian:
        checks[0]["matrix_rank"] = matrix_model_rank(elt)
        if rank == 1:
            factor = rank1_projective_factor(elt)
            if factor is not None:
                kind, data = factor
                vectors = [data] if kind == "veronese" else list(data)
                checks[0]["rank1_factor"] = {
                    "kind": kind,
                    "vectors": [[s.to_json() for s in vec] for vec in vectors],
                }
    return _report(["classify", args.input], args.seed, checks)


def cmd_verify(args):
    checks = run_suite(args.suite, case=args.case, samples=args.samples, seed=args.seed)
    return _report(
        [
            "verify",
            f"--suite={args.suite}",
            f"--case={args.case or '-'}",
            f"--samples={args.samples}",
        ],
        args.seed,
        checks,
    )


def cmd_reduce(args):
    obj = _read_json(args.input)
    config = OscillatorConfig.from_json(_normalize_config(obj))
    j = angular_momentum(config)
    j_zero = all(x == 0 for row in j for x in row)
    record = {
        "name": "reduce",
        "case": "real",
        "samples": 1,
        "failures": 0,
        "witness": None,
        "angular_momentum": [[[x.numerator, x.denominator] for x in row] for row in j],
        "mechanical_stratum": classify_config(config),
    }
    if j_zero:
        alpha = encode_oscillator(config)
        z = reduced_point(alpha)
        record["reduced_point"] = z.to_json()
        record["stratum"] = stratum(alpha)
    else:
        record["obstruction"] = "nonzero angular momentum"
    return _report(["reduce", args.input], args.seed, [record])


def _normalize_config(obj):
    def norm(rows):
        return [[x if isinstance(x, list) else [x, 1] for x in row] for row in rows]

    return {"q": norm(obj["q"]), "p": norm(obj["p"])}


def cmd_embed(args):
    rng = random.Random(args.seed)
    if args.kind == "octonionic":
        elt = rank1_sample("O", rng)
        vectors = None
    else:
        if args.vectors is None:
            raise UsageError(f"--vectors is required for kind={args.kind}")
        vectors = json.loads(args.vectors)
        parsed = [[_scalar_from_entry(e) for e in vec] for vec in vectors]
        if args.kind == "veronese":
            if len(parsed) != 1 or len(parsed[0]) != 3:
                raise UsageError("veronese expects one 3-vector")
            elt = veronese(parsed[0])
        elif args.kind == "segre":
            if len(parsed) != 2 or any(len(v) != 3 for v in parsed):
                raise UsageError("segre expects two 3-vectors")
            elt = segre(parsed[0], parsed[1])
        else:
            if len(parsed) != 2 or any(len(v) != 6 for v in parsed):
                raise UsageError("plucker expects two 6-vectors")
            elt = plucker(parsed[0], parsed[1])
    rank = jordan_rank(elt)
    record = {
        "name": f"embed-{args.kind}",
        "case": elt.algebra,
        "samples": 1,
        "failures": 0 if rank == 1 else 1,
        "witness": None if rank == 1 else elt.to_json(),
        "element": elt.to_json(),
        "stratum": rank,
        "sharp_vanishes": sharp(elt).is_zero(),
    }
    return _report(["embed", args.kind], args.seed, [record])


if __name__ == "__main__":
    sys.exit(main())
