"""Command-line surface for the whole pipeline.

Commands: check-axioms, validate-lemmas, from-unit, play, represent,
brute-force, network-check, catalog.  All file formats are UTF-8 JSON
(DOT for diagrams); every command is deterministic given its flags and
inputs, and reports use a stable key order.

Exit codes: 0 success / all checks pass, 1 a check failed (the report
says which), 2 an I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import (
    build_concrete,
    dump_structure,
    dump_unit,
    load_structure_file,
    load_unit_file,
)
from .atoms import validate_lemmas
from .axioms import DEFAULT_BUDGET, DEFAULT_SAMPLES, check_axioms
from .errors import GuardError, ProfileError, RelgameError, StructureError
from .game import run_game
from .networks import check_network, network_from_json, network_to_dot
from .oracle import brute_force_representation, unit_catalog
from .represent import extract, verify_trace

IO_ERROR = 2
CHECK_FAILED = 1


def _dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _emit(data, out: str | None) -> None:
    text = _dumps(data)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_json_file(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def cmd_check_axioms(args) -> int:
    a = load_structure_file(args.structure)
    report = check_axioms(
        a, mode=args.mode, samples=args.samples, seed=args.seed, budget=args.budget
    )
    _emit(report.to_json(a), args.out)
    if not report.ok:
        failing = ", ".join(report.failing_axioms())
        print(f"axioms failed: {failing}", file=sys.stderr)
        return CHECK_FAILED
    return 0


def cmd_validate_lemmas(args) -> int:
    a = load_structure_file(args.structure)
    report = check_axioms(a, budget=args.budget)
    if not report.ok:
        print(
            "precondition failed: structure does not pass the axioms "
            f"({', '.join(report.failing_axioms())}); lemma validation not run",
            file=sys.stderr,
        )
        return CHECK_FAILED
    lemmas = validate_lemmas(a)
    _emit(lemmas.to_json(), args.out)
    return 0 if lemmas.passed else CHECK_FAILED


def cmd_from_unit(args) -> int:
    u = load_unit_file(args.unit)
    a = build_concrete(u)
    text = dump_structure(a)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_play(args) -> int:
    a = load_structure_file(args.structure)
    trace = run_game(a, args.rounds, seed=args.seed, mode=args.mode)
    text = trace.serialize(a)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_represent(args) -> int:
    a = load_structure_file(args.structure)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)

    axiom_report = check_axioms(a, seed=args.seed, budget=args.budget)
    (outdir / "axioms.json").write_text(
        _dumps(axiom_report.to_json(a)), encoding="utf-8"
    )
    if not axiom_report.ok:
        print(
            f"axioms failed: {', '.join(axiom_report.failing_axioms())}",
            file=sys.stderr,
        )
        return CHECK_FAILED

    lemmas = validate_lemmas(a)
    (outdir / "lemmas.json").write_text(_dumps(lemmas.to_json()), encoding="utf-8")
    if not lemmas.passed:
        print(f"lemma violated: {lemmas.first_violation.clause}", file=sys.stderr)
        return CHECK_FAILED

    trace = run_game(a, args.rounds, seed=args.seed, mode=args.mode,
                     axiom_report=axiom_report)
    (outdir / "trace.json").write_text(trace.serialize(a), encoding="utf-8")

    rep = extract(trace)
    (outdir / "representation.json").write_text(
        _dumps(rep.to_json()), encoding="utf-8"
    )
    verification = verify_trace(trace, rep, a)
    (outdir / "verification.json").write_text(
        _dumps(verification.to_json()), encoding="utf-8"
    )
    (outdir / "network.dot").write_text(
        network_to_dot(trace.final, a), encoding="utf-8"
    )

    if verification.all_ok(allow_partial=args.allow_partial):
        return 0
    if verification.composition_complete is None and not args.allow_partial:
        print(
            f"play unsaturated ({verification.pending_count} pending "
            "obligations); use --allow-partial to accept",
            file=sys.stderr,
        )
    else:
        print("verification failed; see verification.json", file=sys.stderr)
    return CHECK_FAILED


def cmd_brute_force(args) -> int:
    a = load_structure_file(args.structure)
    result = brute_force_representation(a, args.max_base)
    _emit(result.to_json(), args.out)
    return 0 if result.found else CHECK_FAILED


def cmd_network_check(args) -> int:
    a = load_structure_file(args.structure)
    net = network_from_json(_load_json_file(args.network), a)
    violation = check_network(net, a)
    if violation is None:
        _emit({"passed": True}, args.out)
        return 0
    _emit({"passed": False, "violation": violation.to_json()}, args.out)
    return CHECK_FAILED


def cmd_catalog(args) -> int:
    units = unit_catalog(args.max_base)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for i, u in enumerate(units):
        (outdir / f"unit_{i:03d}.json").write_text(dump_unit(u), encoding="utf-8")
    sys.stdout.write(_dumps({"count": len(units), "directory": str(outdir)}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relgame",
        description="Axiom checking, network games and relativized "
        "representations for finite relation-type atom structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-axioms", help="evaluate Ax 1-9, Ax s, Ax r")
    p.add_argument("structure")
    p.add_argument("--mode", choices=["auto", "exhaustive", "sampled"], default="auto")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_check_axioms)

    p = sub.add_parser("validate-lemmas", help="run the atom-lemma validators")
    p.add_argument("structure")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_validate_lemmas)

    p = sub.add_parser("from-unit", help="build a structure from a unit file")
    p.add_argument("unit")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_from_unit)

    p = sub.add_parser("play", help="run one game and emit the trace")
    p.add_argument("structure")
    p.add_argument("--rounds", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["fifo", "random"], default="fifo")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_play)

    p = sub.add_parser(
        "represent", help="full pipeline: check, validate, play, extract, verify"
    )
    p.add_argument("structure")
    p.add_argument("--rounds", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["fifo", "random"], default="fifo")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--allow-partial", action="store_true")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(fn=cmd_represent)

    p = sub.add_parser("brute-force", help="search small units for a representation")
    p.add_argument("structure")
    p.add_argument("--max-base", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_brute_force)

    p = sub.add_parser("network-check", help="check a network file against N1-N3")
    p.add_argument("network")
    p.add_argument("structure")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_network_check)

    p = sub.add_parser("catalog", help="emit the unit catalog as a directory")
    p.add_argument("--max-base", type=int, default=2)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (StructureError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return IO_ERROR
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return IO_ERROR
    except (GuardError, ProfileError, RelgameError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
