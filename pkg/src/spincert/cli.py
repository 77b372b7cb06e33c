"""Command line entry point.

``spincert run`` executes verification suites and prints a certificate
table (or one JSON document); ``spincert list-suites`` names them.  Exit
codes: 0 all selected suites passed, 1 at least one check failed, 2 usage
error.  Every flag has an environment override with the NOETHER_ prefix;
flags win over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .fields import GF
from .kernels import backend
from .suites import SUITES, RunConfig, report_to_dict, run_selected

_ENV_PREFIX = "NOETHER_"


def _env(name: str, default):
    raw = os.environ.get(_ENV_PREFIX + name)
    if raw is None:
        return default
    if isinstance(default, bool):
        return raw.lower() in ("1", "true", "yes", "on")
    if isinstance(default, int):
        return int(raw)
    return raw


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincert",
        description="Exact certificates for spin, octonion and matrix-pair representation geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run verification suites")
    run.add_argument(
        "--suites",
        default=_env("SUITES", "all"),
        help="comma-separated suite names, or 'all' (default)",
    )
    run.add_argument("--prime", type=int, default=_env("PRIME", 1_000_003))
    run.add_argument("--confirm-prime", type=int, default=_env("CONFIRM_PRIME", 999_983))
    run.add_argument("--seed", type=int, default=_env("SEED", 0))
    run.add_argument("--trials", type=int, default=_env("TRIALS", 3))
    run.add_argument("--format", choices=("text", "json"), default=_env("FORMAT", "text"))
    run.add_argument(
        "--stretch",
        action="store_true",
        default=_env("STRETCH", False),
        help="enable the budgeted degree-4 invariant computation",
    )
    run.add_argument(
        "--dump",
        default=_env("DUMP", None),
        help="write the representations used by the selected suites to this JSON file",
    )
    run.add_argument("--jobs", type=int, default=_env("JOBS", 1))

    sub.add_parser("list-suites", help="list suite names with their certificate anchors")
    return parser


def _config_from_args(args) -> RunConfig:
    suites = args.suites
    if isinstance(suites, str):
        suites = [s.strip() for s in suites.split(",") if s.strip()] or ["all"]
    return RunConfig(
        suites=suites,
        prime=args.prime,
        confirm_prime=args.confirm_prime,
        seed=args.seed,
        trials=args.trials,
        fmt=args.format,
        stretch=args.stretch,
        dump=args.dump,
        jobs=args.jobs,
    )


def _print_text(reports, stream=None) -> None:
    stream = stream or sys.stdout
    for rep in reports:
        flag = "PASS" if rep.passed else "FAIL"
        print(f"suite {rep.suite:<16} [{flag}]  primes={rep.primes}  seed={rep.seed}  {rep.elapsed_ms} ms", file=stream)
        width = max((len(c.id) for c in rep.checks), default=10)
        for c in rep.checks:
            mark = "ok " if c.passed else "FAIL"
            print(
                f"  {mark} {c.id:<{width}}  expected={c.expected!r}  observed={c.observed!r}  [{c.provenance}]",
                file=stream,
            )
    total = sum(1 for r in reports if r.passed)
    print(f"suites passed: {total}/{len(reports)}  (elimination backend: {backend()})", file=stream)


def _dump_representations(cfg: RunConfig, path: str) -> None:
    """Write the standard representations the selected suites rely on."""
    from .clifford import QuadraticSpace
    from .octonion import derivation_algebra
    from .spinreps import half_spin_reps, spin_rep, vector_rep

    needed_n = {
        "spin7": [7],
        "spin10": [10],
        "spin11": [11],
        "spin14": [14],
        "branching": [5, 10, 11],
        "coregular_free": [7, 10, 11, 14],
        "g2_octonion": [],
        "sln_quotient": [],
    }
    ns = sorted({n for s in cfg.resolved_suites() for n in needed_n[s]})
    field = GF(cfg.prime)
    reps = []
    for n in ns:
        space = QuadraticSpace(n)
        reps.append(vector_rep(space, field).to_json_dict())
        reps.append(spin_rep(space, field).to_json_dict())
        if n % 2 == 0:
            even, odd = half_spin_reps(space, field)
            reps.append(even.to_json_dict())
            reps.append(odd.to_json_dict())
    doc = {"representations": reps}
    if "g2_octonion" in cfg.resolved_suites():
        doc["derivations"] = derivation_algebra(field).to_json_dict()
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "list-suites":
        for name, (_, anchor) in SUITES.items():
            print(f"{name} - {anchor}")
        return 0

    cfg = _config_from_args(args)
    try:
        cfg.validate()
    except ValueError as exc:
        parser.error(str(exc))  # exits with code 2

    reports = run_selected(cfg)
    if cfg.dump:
        _dump_representations(cfg, cfg.dump)

    if cfg.fmt == "json":
        doc = {
            "suites": [report_to_dict(r) for r in reports],
            "seed": cfg.seed,
            "primes": list(cfg.primes),
            "trials": cfg.trials,
            "pass": all(r.passed for r in reports),
        }
        json.dump(doc, sys.stdout, indent=1)
        print()
    else:
        _print_text(reports)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
