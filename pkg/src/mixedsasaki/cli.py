"""Command-line runner: ``mixedsasaki --n 1 --suite einstein --format text``."""

import argparse
import sys

from .errors import ConfigError
from .report import emit, exit_code
from .suite import FAULT_SUITE, SUITES, SuiteConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def build_parser():
    d = SuiteConfig()
    p = argparse.ArgumentParser(
        prog="mixedsasaki",
        description="Seeded numerical verification of the mixed 3-Sasakian structure "
                    "on the pseudo-sphere S^{4n+3}_{2n+1}.")
    p.add_argument("--n", type=int, default=d.n, help="dimension parameter (default %(default)s)")
    p.add_argument("--seed", type=int, default=d.seed, help="RNG seed (default %(default)s)")
    p.add_argument("--samples", type=int, default=d.samples,
                   help="sampled points (default %(default)s)")
    p.add_argument("--probes", type=int, default=d.probes,
                   help="random tangent probes per point (default %(default)s)")
    p.add_argument("--tol", type=float, default=d.tol,
                   help="tolerance of the generic checks (default %(default)s)")
    p.add_argument("--fd-step", type=float, default=d.fd_step,
                   help="finite-difference step (default %(default)s)")
    p.add_argument("--suite", action="append", choices=SUITES + (FAULT_SUITE,), default=None,
                   help="suite to run; repeatable (default: all but fault_injection)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--exhaustive", action="store_true",
                   help="evaluate every basis tuple for low-rank forms instead of random probes")
    p.add_argument("--out", default=None, help="report path (default: standard output)")
    return p


def config_from_args(args):
    return SuiteConfig(n=args.n, seed=args.seed, samples=args.samples, probes=args.probes,
                       tol=args.tol, fd_step=args.fd_step,
                       suites=tuple(args.suite) if args.suite else SUITES,
                       exhaustive=args.exhaustive)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 on --help
        return exc.code if isinstance(exc.code, int) else EXIT_CONFIG
    try:
        config = config_from_args(args)
    except ConfigError as exc:
        print(f"mixedsasaki: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    report = run_suite(config)
    payload = emit(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
