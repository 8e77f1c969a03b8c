"""Command-line driver.

Examples::

    filmbie --interface flat --n 64 --out run1
    filmbie --interface cosine --mode convergence --n 16,32,64,128,256 --out tab3
    filmbie --config case.txt --n 128

A config file holds ``key = value`` lines using the long flag names
(``interface``, ``h0``, ``L``, ``A``, ``eps1``, ``eps2``, ``n``, ``mode``,
``reference``, ``out``).  Flags given on the command line win.
"""

import argparse
import logging
import sys

from .geometry import InterfaceError
from .harness import CaseConfig, ConfigError, run_case
from .solver import SolverError

KEYS = ("interface", "h0", "L", "A", "eps1", "eps2", "n", "mode", "reference", "out")
FLOAT_KEYS = ("h0", "L", "A", "eps1", "eps2")


def parse_n_list(text):
    try:
        return tuple(int(v) for v in str(text).replace(" ", "").split(",") if v)
    except ValueError:
        raise ConfigError(f"n must be an integer or comma-separated list, got {text!r}")


def read_config_file(path):
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            sep = "=" if "=" in line else (":" if ":" in line else None)
            if sep is None:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split(sep, 1))
            key = key.lstrip("-")
            if key not in KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value
    return values


def build_parser():
    p = argparse.ArgumentParser(
        prog="filmbie",
        description="Interface potential of an electrified periodic oil film.",
    )
    p.add_argument("--config", help="key = value file mirroring the flags")
    p.add_argument("--interface", help="flat | sine | cosine | file:<path> (default flat)")
    p.add_argument("--h0", help="mean film height (default 0.03 L)")
    p.add_argument("--L", help="half period (default 1)")
    p.add_argument("--A", help="amplitude of f = A cos(pi x / L) (default 1)")
    p.add_argument("--eps1", help="dielectric constant of the film (default 8)")
    p.add_argument("--eps2", help="dielectric constant of the air (default 1)")
    p.add_argument("--n", help="node count or comma list, e.g. 16,32,64 (default 64)")
    p.add_argument("--mode", choices=("solve", "convergence"))
    p.add_argument("--reference", choices=("analytic", "self"),
                   help="reference for convergence errors (analytic: flat only)")
    p.add_argument("--out", help="output directory (default ./out)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def config_from_args(args):
    values = read_config_file(args.config) if args.config else {}
    for key in KEYS:
        v = getattr(args, key)
        if v is not None:
            values[key] = v
    kwargs = {}
    for key, v in values.items():
        if key in FLOAT_KEYS:
            try:
                kwargs[key] = float(v)
            except ValueError:
                raise ConfigError(f"{key} must be a number, got {v!r}")
        elif key == "n":
            kwargs[key] = parse_n_list(v)
        else:
            kwargs[key] = v
    return CaseConfig(**kwargs)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = config_from_args(args)
        written = run_case(config)
    except (ConfigError, InterfaceError, OSError) as exc:
        print(f"filmbie: error: {exc}", file=sys.stderr)
        return 2
    except SolverError as exc:
        print(f"filmbie: solver failure: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
