# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
#!/usr/bin/env python3
import asyncio
import argparse
from typing import Sequence
from json_logging import setup_logging, get_logger
from .classify import Predicate
from .errors import ConfigError, FamilyError, Graph6Error, LimitExceeded, UnsupportedError
from .core import LapMult

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_LIMIT = 3


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph6", metavar="STR", help="graph in graph6 form")
    group.add_argument("--file", metavar="PATH", help="file with one graph6 per line")
    group.add_argument("--family", nargs="+", metavar="NAME_OR_PARAM", help="family name followed by integer parameters")


def _add_predicate(p: argparse.ArgumentParser) -> None:
    p.add_argument("--predicate", choices=[m.value for m in Predicate], help="membership predicate (default from config: max)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lapmult", exit_on_error=True)
    p.add_argument(
        "-c",
        "--config",
        default="~/.config/lapmult",
        help="Directory or file path for config.yaml (defaults to ~/.config/lapmult/config.yaml)",
    )
    p.add_argument("-q", "--quiet", action="store_true", help="print only the verdict line")
    sub = p.add_subparsers(dest="command", required=True)

    spectrum = sub.add_parser("spectrum", help="exact and numeric Laplacian spectrum")
    _add_graph_input(spectrum)

    classify = sub.add_parser("classify", help="class within G(n, n-3) and catalog match")
    _add_graph_input(classify)
    _add_predicate(classify)

    catalog = sub.add_parser("catalog", help="catalog of G(n, k) for k = n-1, n-2, n-3")
    catalog.add_argument("--n", type=int, required=True)
    catalog.add_argument("--k", type=int, required=True)

    verify = sub.add_parser("verify", help="exhaustive verification at one order")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--skip-dls", action="store_true", help="skip the cospectral bucket check")
    verify.add_argument("--stretch-n9", action="store_true", help="allow n = 9")
    verify.add_argument("--jobs", type=int, help="worker processes (default from config)")
    verify.add_argument("--cache", metavar="PATH", help="enumeration cache directory")
    verify.add_argument("--no-cache", action="store_true", help="neither read nor write the enumeration cache")
    _add_predicate(verify)

    sub.add_parser("families", help="list graph family names, arities and constraints")
    return p


async def async_main(argv: Sequence[str] | None = None) -> int:
    setup_logging()
    logger = get_logger(__name__)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse exits 2 on usage errors and 0 after --help
        return int(err.code) if isinstance(err.code, int) else EXIT_BAD_INPUT

    try:
        async with LapMult(args=args) as lapmult:
            return await lapmult.run_command()
    except ConfigError as err:
        logger.error(f"fatal config error was found: {err!r}")
        return EXIT_BAD_INPUT
    except (Graph6Error, FamilyError, UnsupportedError, FileNotFoundError) as err:
        logger.error(f"bad input: {err}")
        return EXIT_BAD_INPUT
    except LimitExceeded as err:
        logger.error(f"limit exceeded: {err}")
        return EXIT_LIMIT
    except KeyboardInterrupt:
        logger.warning("shutdown requested (Ctrl+C). exiting gracefully...")
        return EXIT_FAILED
    except asyncio.CancelledError:
        logger.warning("run cancelled.")
        return EXIT_FAILED
    except Exception as err:
        logger.error(f"unhandled exception: {err!r}", exc_info=True)
        return EXIT_FAILED
    finally:
        logger.debug("lapmult stopped.")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return asyncio.run(async_main(argv))
    except RuntimeError as err:
        # Fallback for nested loops (Jupyter, tests, etc.)
        if "asyncio.run() cannot be called from a running event loop" in str(err):
            loop = asyncio.get_event_loop()
            return loop.run_until_complete(async_main(argv))
        raise
