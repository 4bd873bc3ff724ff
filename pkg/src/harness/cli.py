from __future__ import annotations

import argparse
import json
import sys
import time
from datetime import datetime
from typing import Optional

from src.carry.lattice import submodule_lattice
from src.carry.serialize import lattice_to_dot, lattice_to_json, poset_to_dot, poset_to_json
from src.combinatorics.partitions import Partition, Prime, parse_partition, scale_partition
from src.core.config import FORMATS, Settings, load_settings, parse_bound_pairs
from src.core.errors import ConfigError, SpechtCohError
from src.core.logging_setup import configure_logger
from src.criteria.cohomology import h0_result, h1_twopart_result
from src.harness.report import format_reports, reports_to_json
from src.harness.suites import SUITES, run_all, run_suite
from src.oracle.cocycles import cocycle_summary
from src.oracle.specht import build_specht_rep
from src.oracle.sweep import format_table, oracle_row, oracle_sweep, to_json_lines
from src.weights.calculus import (
    Weight,
    ambient_rank,
    corollary63_check,
    lemma62_witness,
    pairing_vector,
    single_twist_gamma,
    steinberg_contains,
)

logger = configure_logger()

EXIT_OK = 0
EXIT_FAILED = 1


# =========================
# argument parsing
# =========================
def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset after it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--bound", action="append", metavar="KEY=VALUE", default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--heavy", action="store_true", default=argparse.SUPPRESS)
    return common


def _prime(text: str) -> int:
    try:
        return int(Prime(int(text)))
    except (ValueError, SpechtCohError) as e:
        raise argparse.ArgumentTypeError(str(e))


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except SpechtCohError as e:
        raise argparse.ArgumentTypeError(str(e))


def _degrees(text: str) -> tuple[int, ...]:
    try:
        degrees = tuple(sorted({int(x) for x in text.split(",") if x.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"degrees must be a comma-separated subset of 0,1, got {text!r}")
    if not degrees or not set(degrees) <= {0, 1}:
        raise argparse.ArgumentTypeError(f"degrees must be a comma-separated subset of 0,1, got {text!r}")
    return degrees


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    ap = argparse.ArgumentParser(prog="specht-coh", parents=[common],
                                 description="Cohomology of Specht modules in odd characteristic")
    sub = ap.add_subparsers(dest="command", required=True)

    h0 = sub.add_parser("h0", parents=[common], help="James' H⁰ criterion")
    h0.add_argument("-p", type=_prime, required=True)
    h0.add_argument("partition", type=_partition)

    h1 = sub.add_parser("h1-twopart", parents=[common], help="H¹ of a two-part Specht module")
    h1.add_argument("-p", type=_prime, required=True)
    h1.add_argument("l1", type=int)
    h1.add_argument("l2", type=int)

    sp = sub.add_parser("sympower", parents=[common], help="submodule lattice of the symmetric power H⁰(d)")
    sp.add_argument("-p", type=_prime, required=True)
    sp.add_argument("-d", type=int, required=True)
    sp.add_argument("-n", type=int, default=None, help="rank of GL_n (default: d)")
    sp.add_argument("--poset", action="store_true", help="emit the carry-pattern poset instead of the lattice")

    orc = sub.add_parser("oracle", parents=[common], help="brute-force H⁰/H¹ over F_p")
    orc.add_argument("-p", type=_prime, required=True)
    orc.add_argument("partition", type=_partition, nargs="?")
    orc.add_argument("--deg", type=_degrees, default=(0, 1))
    orc.add_argument("--sweep", type=int, metavar="D_MAX", help="every λ ⊢ d ≤ D_MAX instead of one partition")

    st = sub.add_parser("steinberg", parents=[common], help="double-twist weight checks for (λ, μ)")
    st.add_argument("-p", type=_prime, required=True)
    st.add_argument("lam", type=_partition)
    st.add_argument("mu", type=_partition)
    st.add_argument("--single", action="store_true", help="single twist: test λ − pμ − (p−1)ρ instead")

    ver = sub.add_parser("verify", parents=[common], help="run verification suites")
    ver.add_argument("suite", choices=sorted(SUITES) + ["all"])

    cfg = sub.add_parser("config", parents=[common], help="configuration")
    cfg.add_argument("action", choices=["show"])
    return ap


def resolve_settings(args: argparse.Namespace, base: Optional[Settings] = None) -> Settings:
    settings = base or load_settings()
    settings = settings.with_overrides(parse_bound_pairs(getattr(args, "bound", None)))
    changes = {}
    if hasattr(args, "format"):
        changes["output_format"] = args.format
    if hasattr(args, "threads"):
        changes["threads"] = args.threads
    if changes:
        settings = Settings(**{**settings.as_dict(), **changes})
    return settings


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def _no_dot(settings: Settings, command: str) -> None:
    if settings.output_format == "dot":
        raise ConfigError(f"--format dot is only available for sympower, not {command}")


# =========================
# subcommands
# =========================
def cmd_h0(args, settings: Settings) -> int:
    _no_dot(settings, "h0")
    result = h0_result(args.partition, args.p)
    if settings.output_format == "json":
        _emit(result.to_json())
        return EXIT_OK
    print(f"λ={args.partition} p={args.p}  H⁰ dim={result.dim} ({result.source.value})")
    for row in result.witness["congruences"]:
        rel = "≡" if row["holds"] else "≢"
        print(f"  λ{row['i']}={row['upper']} {rel} −1 mod {row['modulus']}  (λ{row['i'] + 1}={row['lower']})")
    return EXIT_OK


def cmd_h1_twopart(args, settings: Settings) -> int:
    _no_dot(settings, "h1-twopart")
    result = h1_twopart_result(args.l1, args.l2, args.p)
    agree = result.witness["agree"]
    if settings.output_format == "json":
        _emit({**result.to_json(), "psi_dim": result.dim,
               "criterion_dim": int(result.witness["criterion"] is not None)})
    else:
        psi, crit = result.witness["psi"], result.witness["criterion"]
        print(f"λ=({args.l1},{args.l2}) p={args.p}  H¹ dim={result.dim} ({result.source.value})")
        print(f"  Ψ route:         {result.dim}  witness={json.dumps(psi)}")
        print(f"  criterion route: {int(crit is not None)}  witness={json.dumps(crit)}")
        if not agree:
            print("  ROUTES DISAGREE")
    if not agree:
        logger.error("Ψ route and criterion route disagree on (%d,%d) at p=%d", args.l1, args.l2, args.p)
        return EXIT_FAILED
    return EXIT_OK


def cmd_sympower(args, settings: Settings) -> int:
    if args.d < 0:
        raise ConfigError(f"d must be >= 0, got {args.d}")
    n = args.n if args.n is not None else max(args.d, 1)
    lattice = submodule_lattice(args.d, n, args.p, settings)
    fmt = settings.output_format
    if fmt == "dot":
        sys.stdout.write(poset_to_dot(lattice.poset) if args.poset else lattice_to_dot(lattice))
    elif fmt == "json":
        _emit(poset_to_json(lattice.poset) if args.poset else lattice_to_json(lattice))
    else:
        poset = lattice.poset
        print(f"H⁰({args.d}) for GL_{n}, p={args.p}: {len(poset.patterns)} carry patterns, "
              f"{len(lattice.nodes)} submodules")
        for c in poset.patterns:
            print(f"  c={c}  L{poset.factors[c]}  compositions={poset.class_sizes[c]}")
        for a, b in poset.cover_edges:
            print(f"  {a} < {b}")
    return EXIT_OK


def cmd_oracle(args, settings: Settings) -> int:
    _no_dot(settings, "oracle")
    if args.sweep is not None:
        rows = oracle_sweep(args.sweep, args.p, args.deg, settings)
    elif args.partition is not None:
        rows = [oracle_row(args.partition, args.p, args.deg, settings, raise_errors=True)]
    else:
        raise ConfigError("oracle needs a partition or --sweep D_MAX")
    if settings.output_format == "json":
        sys.stdout.write(to_json_lines(rows))
    else:
        print(format_table(rows))
        if args.sweep is None and 1 in args.deg and rows[0].error is None:
            summary = cocycle_summary(build_specht_rep(args.partition, args.p, settings), settings)
            print(f"cocycles: {summary.unknowns} unknowns, {summary.relations} relations, "
                  f"Z¹={summary.z1}, B¹={summary.b1}")
    return EXIT_OK if all(row.match for row in rows) else EXIT_FAILED


def cmd_steinberg(args, settings: Settings) -> int:
    _no_dot(settings, "steinberg")
    lam, mu, p = args.lam, args.mu, args.p
    n = ambient_rank(lam, mu)
    if args.single:
        gamma = single_twist_gamma(lam, mu, p)
        payload = {
            "p": p, "lambda": lam.to_json(), "mu": mu.to_json(), "twist": 1,
            "gamma": gamma.to_json(), "pairings": list(pairing_vector(gamma)),
            "steinberg_member": steinberg_contains(gamma, p, 1, n),
        }
        ok = True
    else:
        witness = lemma62_witness(lam, mu, p)
        diff = Weight.from_partition(lam, n) - Weight.from_partition(scale_partition(mu, p * p), n)
        payload = {
            "p": p, "lambda": lam.to_json(), "mu": mu.to_json(), "twist": 2,
            "difference": diff.to_json(), "pairings": list(pairing_vector(diff)),
            "witness": witness, "not_steinberg_weight": corollary63_check(lam, mu, p),
        }
        ok = witness is not None and payload["not_steinberg_weight"]
    if settings.output_format == "json":
        _emit(payload)
    else:
        for key in sorted(payload):
            print(f"{key:>20}: {payload[key]}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_verify(args, settings: Settings) -> int:
    _no_dot(settings, "verify")
    heavy = getattr(args, "heavy", False)
    timing = getattr(args, "timing", False)
    if args.suite == "all":
        reports = run_all(settings, heavy)
    else:
        reports = [run_suite(args.suite, settings, heavy)]
    if settings.output_format == "json":
        sys.stdout.write(reports_to_json(reports, timing))
    else:
        sys.stdout.write(format_reports(reports, timing))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


def cmd_config(args, settings: Settings) -> int:
    values = settings.as_dict()
    if settings.output_format == "json":
        _emit(values)
    else:
        for key, value in values.items():
            print(f"{key} = {value}")
    return EXIT_OK


COMMANDS = {
    "h0": cmd_h0,
    "h1-twopart": cmd_h1_twopart,
    "sympower": cmd_sympower,
    "oracle": cmd_oracle,
    "steinberg": cmd_steinberg,
    "verify": cmd_verify,
    "config": cmd_config,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    start_time = time.time()
    logger.debug("start %s at %s", args.command, datetime.now().strftime("%Y-%m-%d %H:%M:%S"))
    try:
        settings = resolve_settings(args)
        code = COMMANDS[args.command](args, settings)
    except SpechtCohError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return e.exit_code
    elapsed = time.time() - start_time
    if getattr(args, "timing", False):
        logger.info("⏱️ %s finished in %.2f s", args.command, elapsed)
    return code


if __name__ == "__main__":
    sys.exit(main())
