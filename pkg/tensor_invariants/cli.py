"""Command-line front end: flags or a problem file in, one JSON document out."""
from __future__ import annotations
import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional, Sequence, Tuple
from .algebra.metric import Metric, minkowski
from .algebra.tensor import Tensor2, classify, mixed
from .common.config import Tolerances
from .common.errors import ConfigError, InvariantsError, NonFiniteResultError
from .common.lexer_utils import LexerError
from .common.log import configure_logging
from .common.parser_utils import ParseError
from .invariants.basis import Representation, minimal_integrity_basis
from .invariants.charpoly import cayley_hamilton_residual, faddeev_leverrier
from .invariants.eigen import eigen
from .literal.loader import load_document, load_problem
from .literal.parser import numbers
from .minkowski.audit import DiscrepancyReport, em_audit, stress_energy_invariants
from .minkowski.fields import EMField, em_invariants, em_tensor
from .minkowski.stress_energy import StressEnergyBlocks, block_trace_powers
from .selftest import run_selftest
from .transform.report import invariance_report

logger = logging.getLogger(__name__)

COMMANDS = ("invariants", "basis", "eigen", "check-invariance", "em", "stress-energy", "selftest")
REPRESENTATIONS = {"trace": Representation.TRACE_POWERS, "coeff": Representation.COEFFICIENTS}

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2


class ArgumentParser(argparse.ArgumentParser):
    """Reports bad flags as ParseError instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise ParseError(message)


@dataclass(frozen=True, slots=True)
class RunConfig:
    command: str
    tolerances: Tolerances
    input: Optional[Path] = None
    metric: Optional[str] = None
    tensor: Optional[str] = None
    seed: int = 0
    samples: int = 100
    scale: float = 1.0
    improper: bool = False
    rep: str = "trace"
    e: Optional[str] = None
    b: Optional[str] = None
    d: Optional[float] = None
    p: Optional[str] = None
    t: Optional[str] = None
    traceless: Optional[bool] = None
    output: Optional[Path] = None
    verbosity: int = 0


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--output", type=Path, help="write JSON here instead of standard output")
    common.add_argument("-v", "--verbose", dest="verbosity", action="count", default=0)
    common.add_argument("--tol", type=float, help="classification tolerance")

    problem = ArgumentParser(add_help=False)
    problem.add_argument("--input", type=Path, help="problem JSON file")
    problem.add_argument("--metric", help="'minkowski', 'euclidean:<n>' or a JSON metric object")
    problem.add_argument("--tensor", help='JSON tensor object {"variance": ..., "c": ...}')

    parser = ArgumentParser(prog="tensor_invariants", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)
    sub.add_parser("invariants", parents=[common, problem], help="class, a_k, trace powers, eigenvalues")
    basis = sub.add_parser("basis", parents=[common, problem], help="minimal integrity basis")
    basis.add_argument("--rep", choices=sorted(REPRESENTATIONS), default="trace")
    sub.add_parser("eigen", parents=[common, problem], help="eigenpairs of the mixed form")
    check = sub.add_parser("check-invariance", parents=[common, problem],
                           help="certify invariants over random isometries")
    check.add_argument("--samples", type=int, default=100)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--scale", type=float, default=1.0)
    check.add_argument("--improper", action="store_true")
    em = sub.add_parser("em", parents=[common], help="electromagnetic field invariants")
    em.add_argument("--input", type=Path)
    em.add_argument("--e", help="x,y,z")
    em.add_argument("--b", help="x,y,z")
    se = sub.add_parser("stress-energy", parents=[common], help="stress-energy invariants and audit")
    se.add_argument("--input", type=Path)
    se.add_argument("--d", type=float)
    se.add_argument("--p", help="x,y,z")
    se.add_argument("--t", help="9 values, row-major")
    se.add_argument("--traceless", action="store_true", default=None)
    selftest = sub.add_parser("selftest", parents=[common], help="run the property suite")
    selftest.add_argument("--seed", type=int, default=0)
    return parser


def parse_args(argv: Sequence[str], environ: Optional[Dict[str, str]] = None) -> RunConfig:
    """Flags > environment > defaults."""
    ns = vars(build_parser().parse_args(list(argv)))
    tolerances = Tolerances.from_env(environ).with_classify(ns.pop("tol"))
    return RunConfig(tolerances=tolerances, **ns)


def _complex(z: complex) -> List[float]:
    return [z.real, z.imag]


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e.strerror}") from e
    except UnicodeDecodeError as e:
        raise ParseError(f"Cannot read {path}: not UTF-8 text ({e.reason} at byte {e.start})") from e


def _document(config: RunConfig) -> Dict[str, Any]:
    return load_document(_read(config.input)) if config.input is not None else {}


def _missing(what: str) -> ParseError:
    return ParseError(f"No {what} given; pass --{what} or an --input file with a {what!r} key")


def load_config_problem(config: RunConfig) -> Tuple[Metric, Tensor2]:
    text = _read(config.input) if config.input is not None else None
    return load_problem(text, config.metric, config.tensor)


def _numbers_from(flag: Optional[str], doc: Dict[str, Any], key: str, length: int) -> List[float]:
    if flag is not None:
        return numbers(flag, length)
    if key not in doc:
        raise _missing(key)
    raw = doc[key]
    nested = isinstance(raw, list) and bool(raw) and all(isinstance(row, list) for row in raw)
    flat = [x for row in raw for x in row] if nested else raw
    if (not isinstance(flat, list) or len(flat) != length
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in flat)):
        raise ParseError(f"{key!r} must hold {length} numbers")
    return [float(x) for x in flat]


def report_to_json(report: DiscrepancyReport) -> List[Dict[str, Any]]:
    return [{
        "k": r.k,
        "formula": r.formula,
        "expression": r.expression,
        "closed_form_value": r.closed_form_value,
        "generic_value": r.generic_value,
        "abs_diff": r.abs_diff,
        "verdict": r.verdict.value,
        "note": r.note,
    } for r in report.records]


def run_invariants(config: RunConfig) -> Dict[str, Any]:
    m, t = load_config_problem(config)
    result = faddeev_leverrier(mixed(t, m))
    return {
        "class": classify(t, m, config.tolerances.classify).value,
        "a": list(result.poly.a),
        "trace_powers": list(result.trace_powers),
        "eigenvalues": [_complex(v) for v in eigen(t, m).values],
        "ch_residual": cayley_hamilton_residual(t, m),
    }


def run_basis(config: RunConfig) -> Dict[str, Any]:
    m, t = load_config_problem(config)
    basis = minimal_integrity_basis(t, m, REPRESENTATIONS[config.rep], config.tolerances.classify)
    return {
        "class": basis.tensor_class.value,
        "representation": basis.representation.value,
        "convention": basis.convention,
        "entries": [{"name": e.name, "degree": e.degree, "value": e.value} for e in basis.entries],
    }


def run_eigen(config: RunConfig) -> Dict[str, Any]:
    m, t = load_config_problem(config)
    return {"eigenpairs": [{
        "value": _complex(pair.value),
        "vector": [_complex(x) for x in pair.vector],
        "multiplicity": pair.multiplicity,
        "geometric": pair.geometric,
    } for pair in eigen(t, m).pairs]}


def run_check_invariance(config: RunConfig) -> Dict[str, Any]:
    m, t = load_config_problem(config)
    report = invariance_report(t, m, config.samples, config.seed, config.scale, config.improper,
                               config.tolerances.invariance, config.tolerances.classify)
    return {
        "samples": report.samples,
        "seed": report.seed,
        "scale": report.scale,
        "improper": report.improper,
        "tol": report.tol,
        "rows": [{
            "name": r.name,
            "max_invariance_dev": r.max_invariance_dev,
            "max_pseudo_dev": r.max_pseudo_dev,
            "verdict": r.verdict.value,
        } for r in report.rows],
    }


def run_em(config: RunConfig) -> Dict[str, Any]:
    doc = _document(config)
    f = EMField.of(_numbers_from(config.e, doc, "e", 3), _numbers_from(config.b, doc, "b", 3))
    closed = em_invariants(f)
    t = em_tensor(f)
    m = minkowski()
    return {
        "a2": closed.a2,
        "a4": closed.a4,
        "pseudoscalar": closed.pseudoscalar,
        "det_contravariant": closed.det_contravariant,
        "a": list(faddeev_leverrier(mixed(t, m)).poly.a),
        "class": classify(t, m, config.tolerances.classify).value,
        "audit": report_to_json(em_audit(f, config.tolerances.audit)),
    }


def run_stress_energy(config: RunConfig) -> Dict[str, Any]:
    doc = _document(config)
    if config.d is not None:
        d = config.d
    elif isinstance(doc.get("d"), (int, float)) and not isinstance(doc.get("d"), bool):
        d = float(doc["d"])
    else:
        raise _missing("d")
    p = _numbers_from(config.p, doc, "p", 3)
    t = _numbers_from(config.t, doc, "t", 9)
    traceless = config.traceless if config.traceless is not None else bool(doc.get("traceless", False))
    blocks = StressEnergyBlocks.of(d, p, [t[0:3], t[3:6], t[6:9]])
    result = stress_energy_invariants(blocks, traceless, config.tolerances.audit)
    return {
        "a": list(result.a),
        "trace_powers": list(result.trace_powers),
        "block_trace_powers": list(block_trace_powers(blocks)),
        "traceless": traceless,
        "audit": report_to_json(result.report),
    }


def run_selftest_command(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    result = run_selftest(config.seed)
    doc = {"passed": result.passed, "checks": [{
        "name": c.name, "passed": c.passed, "worst": c.worst, "limit": c.limit,
    } for c in result.checks]}
    return (EXIT_OK if result.passed else EXIT_DOMAIN), doc


def run(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    """Dispatch one command; returns the exit status and the JSON document."""
    logger.info("running %s", config.command)
    try:
        match config.command:
            case "invariants":
                return EXIT_OK, run_invariants(config)
            case "basis":
                return EXIT_OK, run_basis(config)
            case "eigen":
                return EXIT_OK, run_eigen(config)
            case "check-invariance":
                return EXIT_OK, run_check_invariance(config)
            case "em":
                return EXIT_OK, run_em(config)
            case "stress-energy":
                return EXIT_OK, run_stress_energy(config)
            case "selftest":
                return run_selftest_command(config)
            case _:
                raise ParseError(f"Unknown command {config.command!r}; expected one of {COMMANDS}")
    except InvariantsError as e:
        return EXIT_DOMAIN, error_document(e)
    except OverflowError as e:
        return EXIT_DOMAIN, error_document(NonFiniteResultError(f"Result is not finite: {e}"))
    except (LexerError, ParseError, ConfigError) as e:
        return EXIT_INPUT, error_document(e)


def error_document(e: Exception) -> Dict[str, Any]:
    return {"error": getattr(e, "code", type(e).__name__), "message": str(e)}


def render(doc: Dict[str, Any]) -> str:
    try:
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"
    except ValueError as e:
        raise NonFiniteResultError(f"Result is not finite: {e}") from e


def _write(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    try:
        output.write_text(text, encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot write {output}: {e.strerror}") from e


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_args(sys.argv[1:] if argv is None else argv)
    except (LexerError, ParseError, ConfigError) as e:
        _write(render(error_document(e)), None)
        return EXIT_INPUT
    configure_logging(config.verbosity)
    status, doc = run(config)
    try:
        text = render(doc)
    except NonFiniteResultError as e:
        logger.warning("%s", e)
        status, text = EXIT_DOMAIN, render(error_document(e))
    try:
        _write(text, config.output)
    except ParseError as e:
        _write(render(error_document(e)), None)
        return EXIT_INPUT
    return status
