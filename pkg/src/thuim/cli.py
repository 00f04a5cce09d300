"""Command-line driver.

    thuim --input db.txt --min-util 130 --target 5,6 [--mode verify] [--stats json]
    thuim generate --n-transactions 10000 --seed 7 --output synth.txt
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys
import time
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Sequence, TextIO

from . import __version__
from .datagen import GenParams, generate
from .miner import MiningOutcome, mine
from .model import ORDERS, DatabaseFormatError, QuantitativeDatabase, read_database, write_database
from .oracle import MAX_BRUTE_FORCE_ITEMS, brute_force_thuis, mine_then_filter

log = logging.getLogger("thuim")

MODES = ("mine", "filter-baseline", "brute-force", "verify")
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    input_path: str
    min_util: int | None = None
    min_util_percent: float | None = None
    target: tuple[int, ...] = ()
    order: str = "twu-asc"
    mode: str = "mine"
    output_path: str | None = None
    stats_format: str = "human"


def parse_target(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        items = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"target must be comma-separated item ids, got {text!r}")
    if any(x < 0 for x in items):
        raise argparse.ArgumentTypeError("target item ids must be non-negative")
    return items


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def format_results(results) -> str:
    """Result file body: items ascending by id, lines sorted, ``#UTIL:`` suffix."""
    rows = sorted((tuple(sorted(X)), u) for X, u in results)
    return "".join(f"{' '.join(map(str, X))} #UTIL: {u}\n" for X, u in rows)


def resolve_min_util(config: RunConfig, db: QuantitativeDatabase) -> int:
    if config.min_util is not None:
        return config.min_util
    # utilities are integers, so ">= total * F%" is ">= ceil(total * F%)"
    return math.ceil(db.total_utility * Fraction(str(config.min_util_percent)) / 100)


def _write_stats(stats: dict, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(stats) + "\n")
    else:
        for key, value in stats.items():
            out.write(f"{key}: {value}\n")


def _outcome_stats(outcome: MiningOutcome, config: RunConfig, sigma: int) -> dict:
    return {
        "runtime_ms": round(outcome.elapsed * 1000, 3),
        "candidates": outcome.candidates,
        "thuis": len(outcome.results),
        "peak_elements": outcome.peak_elements,
        "order": config.order,
        "min_util": sigma,
        "target": list(config.target),
    }


def _diff_report(name: str, expected: dict, got: dict) -> list[str]:
    lines = []
    for X in sorted(expected.keys() - got.keys(), key=sorted):
        lines.append(f"{name}: missing {sorted(X)} (utility {expected[X]})")
    for X in sorted(got.keys() - expected.keys(), key=sorted):
        lines.append(f"{name}: unexpected {sorted(X)} (utility {got[X]})")
    for X in sorted(expected.keys() & got.keys(), key=sorted):
        if expected[X] != got[X]:
            lines.append(f"{name}: {sorted(X)} utility {got[X]} != {expected[X]}")
    return lines


def run(config: RunConfig, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        db = read_database(config.input_path)
    except OSError as exc:
        stderr.write(f"error: cannot read {config.input_path}: {exc}\n")
        return EXIT_USAGE
    except DatabaseFormatError as exc:
        stderr.write(f"error: {config.input_path}: {exc}\n")
        return EXIT_USAGE
    sigma = resolve_min_util(config, db)
    log.info("loaded %d transactions, min_util=%d", len(db), sigma)

    status = EXIT_OK
    if config.mode == "brute-force":
        start = time.perf_counter()
        try:
            found = brute_force_thuis(db, sigma, config.target)
        except ValueError as exc:
            stderr.write(f"error: {exc}\n")
            return EXIT_USAGE
        results = list(found.items())
        outcome = MiningOutcome(results, elapsed=time.perf_counter() - start)
    elif config.mode == "filter-baseline":
        outcome = mine_then_filter(db, sigma, config.target, config.order)
        results = outcome.results
    else:
        outcome = mine(db, sigma, config.target, config.order)
        results = outcome.results
        if config.mode == "verify":
            got = outcome.as_dict()
            problems = _diff_report(
                "filter-baseline", mine_then_filter(db, sigma, config.target).as_dict(), got)
            if len(db.items) <= MAX_BRUTE_FORCE_ITEMS:
                problems += _diff_report(
                    "brute-force", brute_force_thuis(db, sigma, config.target), got)
            else:
                stderr.write(f"note: {len(db.items)} items, brute-force check skipped\n")
            if problems:
                stderr.write("verify FAILED\n" + "".join(p + "\n" for p in problems))
                status = EXIT_MISMATCH
            else:
                stderr.write(f"verify OK ({len(got)} itemsets)\n")

    body = format_results(results)
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        stdout.write(body)
    _write_stats(_outcome_stats(outcome, config, sigma), config.stats_format, stderr)
    return status


def _mine_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="thuim",
        description="Mine target high-utility itemsets. "
                    "Use 'thuim generate --help' for the synthetic data generator.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--input", required=True, metavar="PATH")
    thr = p.add_mutually_exclusive_group(required=True)
    thr.add_argument("--min-util", type=_non_negative_int, metavar="N",
                     help="absolute minimum utility")
    thr.add_argument("--min-util-percent", type=float, metavar="F",
                     help="minimum utility as a percentage of total database utility")
    p.add_argument("--target", type=parse_target, default=(), metavar="a,b,c",
                   help="comma-separated item ids; empty string mines all HUIs")
    p.add_argument("--order", choices=ORDERS, default="twu-asc")
    p.add_argument("--mode", choices=MODES, default="mine")
    p.add_argument("--output", metavar="PATH")
    p.add_argument("--stats", choices=("human", "json"), default="human")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _generate_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thuim generate",
                                description="Write a synthetic quantitative database.")
    defaults = GenParams()
    for f in fields(GenParams):
        p.add_argument("--" + f.name.replace("_", "-"), type=type(getattr(defaults, f.name)),
                       default=getattr(defaults, f.name))
    p.add_argument("--output", metavar="PATH")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "generate":
        parser = _generate_parser()
        args = parser.parse_args(argv[1:])
        params = GenParams(**{f.name: getattr(args, f.name) for f in fields(GenParams)})
        try:
            db = generate(params)
        except ValueError as exc:
            parser.error(str(exc))
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                write_database(db, fh)
        else:
            write_database(db, sys.stdout)
        return EXIT_OK

    parser = _mine_parser()
    args = parser.parse_args(argv)
    if args.min_util_percent is not None and args.min_util_percent < 0:
        parser.error("--min-util-percent must be >= 0")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    config = RunConfig(
        input_path=args.input,
        min_util=args.min_util,
        min_util_percent=args.min_util_percent,
        target=args.target,
        order=args.order,
        mode=args.mode,
        output_path=args.output,
        stats_format=args.stats,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
