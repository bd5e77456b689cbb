import argparse
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from . import __version__
from .api.commands import COMMANDS, run_job
from .config import get_settings
from .exceptions import ConstaDesignError, UsageError
from .models.reports import ErrorReport, JobSpec
from .utils.export import to_json, write_report

logger = logging.getLogger("constadesign")

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


def configure_logging(level: str) -> None:
    """One stderr handler on the package logger; stdout carries reports only"""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.handlers[:] = [handler]
    logger.setLevel(level)
    logger.propagate = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="constadesign",
        description="Constacyclic codes of length q^2+1 over F_{q^2}: weights, designs, subfield subcodes, EAQECC and LRC",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--q", type=int, help="prime power q")
    parser.add_argument("--p", type=int, help="characteristic (with --m, instead of --q)")
    parser.add_argument("--m", type=int, help="q = p^m")
    parser.add_argument("--r", type=int, help="order of the shift constant lambda")
    parser.add_argument("--family", choices=["A", "B"])
    parser.add_argument("--k", type=int, default=1, help="equations: exponent p^k")
    parser.add_argument("--budget", type=int, help="evaluation budget for exhaustive enumerations")
    parser.add_argument("--threads", type=int, dest="workers", help="worker processes")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument("--dual", action="store_true", help="build: include the dual code")
    parser.add_argument("--analytic", action="store_true", help="wdist: closed form instead of enumeration")
    return parser


def _emit_error(error: ConstaDesignError) -> int:
    report = ErrorReport(error=error.code, message=error.message, detail=error.detail)
    print(to_json(report))
    logger.error("%s: %s", error.code, error.message)
    return error.exit_code


def run(argv: Optional[List[str]] = None) -> int:
    """Parse, dispatch and print; returns 0 pass, 1 verification failure, 2 usage/precondition"""
    load_dotenv()
    configure_logging(get_settings().log_level)
    args = build_parser().parse_args(argv)
    try:
        try:
            job = JobSpec(**vars(args))
        except ValidationError as e:
            raise UsageError("invalid arguments", {"errors": [err["msg"] for err in e.errors()]})
        report = run_job(job)
        text = write_report(report, job.out, job.format)
        if not job.out:
            sys.stdout.write(text)
    except ConstaDesignError as e:
        return _emit_error(e)

    if getattr(report, "passed", True) is False:
        logger.warning("Verification failed at: %s", report.first_failure)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
