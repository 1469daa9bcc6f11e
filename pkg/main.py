import argparse
import json
import logging
import sys

import pandas as pd

from models.verification_system import TraceCodeVerificationSystem
from utils.config import FORMATS, MODES, RunConfig
from utils.errors import TraceCodeError
from utils.export import report_json, sweep_frame, write_generator_matrix, write_text

logger = logging.getLogger(__name__)


def display_section(title):
    """Display a section title."""
    print("\n" + "=" * 80)
    print(title.center(80))
    print("=" * 80)


def pretty_print(data):
    """Pretty print dictionary data."""
    if isinstance(data, dict) or isinstance(data, list):
        print(json.dumps(data, indent=2))
    else:
        print(data)


def format_complex(z):
    return f"{z.real:.7f}{z.imag:+.7f}i"


def cmd_construct(system, config, args):
    result = system.construct(config)
    path = write_generator_matrix(result["matrix"], config.p, config.m, config.variant, config.out)
    print(f"[{result['length']}, {result['dimension']}]")
    logger.info("Generator matrix written to %s", path)
    return 0


def report_row(report):
    return {
        "p": report.p,
        "m": report.m,
        "variant": report.variant,
        "regime": report.regime,
        "N": report.length,
        "K": report.dimension,
        "d": report.min_distance,
        "match": report.match,
        "optimal": report.griesmer.optimal,
        "dual": report.dual_lee_distance,
        "runtime_ms": int(round(sum(report.timings.values()) * 1000)),
    }


def cmd_verify(system, config, args):
    report = system.verify(config)
    if config.format == "json":
        write_text(report_json(report), config.out)
    elif config.format == "text":
        if config.out is None:
            display_section("TRACE CODE VERIFICATION")
        write_text(system.render_text(report), config.out)
    else:
        write_text(sweep_frame([report_row(report)]).to_csv(index=False).rstrip("\n"), config.out)
    return 0 if report.passed else 1


def cmd_gauss(system, config, args):
    table = system.gauss_table(config.p, config.m)
    if config.format == "json":
        pretty_print({
            "p": table["p"],
            "m": table["m"],
            "tolerance": table["tolerance"],
            "rows": [
                {
                    "quantity": row["quantity"],
                    "closed": [row["closed"].real, row["closed"].imag],
                    "empirical": [row["empirical"].real, row["empirical"].imag],
                    "diff": row["diff"],
                    "pass": bool(row["pass"]),
                }
                for row in table["rows"]
            ],
        })
    else:
        frame = pd.DataFrame([
            {
                "quantity": row["quantity"],
                "closed": format_complex(row["closed"]),
                "empirical": format_complex(row["empirical"]),
                "|diff|": f"{row['diff']:.3e}",
                "pass": row["pass"],
            }
            for row in table["rows"]
        ])
        display_section(f"QUADRATIC GAUSS SUM OVER GF({config.p}^{config.m})")
        print(frame.to_string(index=False))
        print(f"\ntolerance: {table['tolerance']:.1e}")
    return 0 if table["status"] == "success" else 1


def cmd_sweep(system, config, args):
    instances = [(p, m, v) for p in args.primes for m in args.degrees for v in args.variants]
    rows = system.sweep(instances, config)
    write_text(sweep_frame(rows).to_csv(index=False).rstrip("\n"), config.out)
    return 1 if any(row["status"] != "success" for row in rows) else 0


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "gauss": cmd_gauss,
    "sweep": cmd_sweep,
}


def build_parser():
    parser = argparse.ArgumentParser(
        description="Trace codes over F_p + uF_p (u^2 = u): construction and verification"
    )
    parser.add_argument("--verbose", action="store_true", help="Log progress at INFO level")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def code_flags(sub, with_variant=True):
        sub.add_argument("-p", type=int, required=True, help="Odd prime p")
        sub.add_argument("-m", type=int, required=True, help="Extension degree m")
        if with_variant:
            sub.add_argument("--variant", choices=["L", "Lprime"], default="L", help="Defining set (default: L)")

    def run_flags(sub):
        sub.add_argument("--mode", choices=MODES, default="full", help="Enumeration mode (default: full)")
        sub.add_argument("--workers", type=int, help="Worker threads (default: available CPUs)")
        sub.add_argument("--budget", type=int, help="Maximum coordinate evaluations for full mode")
        sub.add_argument("--seed", type=int, help="Seed for randomised checks (default: 0)")

    construct = subparsers.add_parser("construct", help="Write the Gray generator matrix")
    code_flags(construct)
    construct.add_argument("--out", help="Output directory or .csv path")

    verify = subparsers.add_parser("verify", help="Verify predicted against computed results")
    code_flags(verify)
    run_flags(verify)
    verify.add_argument("--format", choices=FORMATS, default="json", help="Report format (default: json)")
    verify.add_argument("--out", help="Write the report to this file instead of stdout")

    gauss = subparsers.add_parser("gauss", help="Compare closed-form and summed Gauss sums")
    code_flags(gauss, with_variant=False)
    gauss.add_argument("--format", choices=["json", "text"], default="text", help="Output format (default: text)")

    sweep = subparsers.add_parser("sweep", help="Verify a grid of parameters into one CSV")
    sweep.add_argument("--primes", type=int, nargs="*", default=[], help="Values of p")
    sweep.add_argument("--degrees", type=int, nargs="*", default=[], help="Values of m")
    sweep.add_argument("--variants", nargs="*", choices=["L", "Lprime"], default=["L"], help="Variants")
    run_flags(sweep)
    sweep.add_argument("--out", help="Write the CSV to this file instead of stdout")
    return parser


def main(argv=None):
    """Parse arguments, run one command and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        config = RunConfig.from_args(args).validate()
        system = TraceCodeVerificationSystem()
        return COMMANDS[args.command](system, config, args)
    except TraceCodeError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
