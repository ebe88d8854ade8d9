"""Command-line surface: argument parsing, dispatch and report rendering."""
from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel
from pydantic import ValidationError as ModelValidationError

from errors import (
    CertificateError,
    DimensionMismatchError,
    InvalidQuiverError,
    ParseError,
    PreconditionError,
    SymbolicLimitExceeded,
    UnstableDecompositionError,
    WitnessSearchError,
)
from linalg.poly_matrix import format_polynomial
from linalg.rational_matrix import format_rational
from orbit.certificate_io import format_certificate, parse_certificates
from orbit.generic_service import canonical_decomposition, verify_multiple_rule
from orbit.membership_service import membership
from orbit.orbit_models import MembershipMode
from orbit.saturation_service import ScanConfig, scan_weights, verify_certificate
from quivers.classification import classify_quiver
from quivers.quiver_model import Quiver, format_vector, parse_vector
from quivers.quiver_parser import format_quiver, load_quiver
from representations.interaction import functional_determinant, hom_ext, schofield_eval
from representations.rep_model import Representation
from representations.rep_parser import format_representation, load_representation
from settings.config import settings
from thin.flows import fiber_count
from thin.thin_service import thin_membership, thin_saturation_check
from transforms.exceptional import validate_exceptional_sequence
from transforms.fixtures import load_fixture, load_fixture_quiver, run_reduction_chain
from transforms.reflection import Direction, reflect_dim, reflect_rep
from transforms.shrink import shrink

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


class CommandResult(BaseModel):
    exit_code: int = EXIT_OK
    report: str = ""
    certificates: List[str] = []


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quiver", help="quiver file")
    p.add_argument("--fixture", help="named fixture quiver")
    p.add_argument("--rep", action="append", default=[], help="representation file (repeatable)")
    p.add_argument("--trials", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--seed", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quiver-saturation", description="Orbit semigroups of quiver representations")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="Dynkin / Euclidean / Wild")
    _add_common(p)

    p = sub.add_parser("homext", help="dim Hom and dim Ext of two representations")
    _add_common(p)

    p = sub.add_parser("semiinv", help="Schofield semi-invariant or functional determinant")
    _add_common(p)

    orbit = sub.add_parser("orbit", help="orbit semigroup membership and saturation")
    orbit_sub = orbit.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = orbit_sub.add_parser("member")
    _add_common(p)
    p.add_argument("--weight", required=True)
    p.add_argument("--mode", choices=[m.value for m in MembershipMode], default=MembershipMode.RANDOMIZED.value)
    p.add_argument("--allow-fallback", action="store_true")
    p = orbit_sub.add_parser("scan")
    _add_common(p)
    p.add_argument("--box", required=True)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--out")
    p = orbit_sub.add_parser("verify-certificate")
    _add_common(p)
    p.add_argument("--certificate", required=True)

    p = sub.add_parser("reflect", help="reflection functor at a sink or source")
    _add_common(p)
    p.add_argument("--vertex", required=True)
    p.add_argument("--alpha")
    p.add_argument("--direction", choices=[d.value for d in Direction], default=Direction.PLUS.value)

    p = sub.add_parser("shrink", help="remove a through-vertex")
    _add_common(p)
    p.add_argument("--vertex", required=True)
    p.add_argument("--weight")
    p.add_argument("--alpha")

    p = sub.add_parser("exceptional", help="validate an exceptional sequence or a fixture chain")
    _add_common(p)
    p.add_argument("--sequence")

    p = sub.add_parser("candecomp", help="canonical decomposition of a dimension vector")
    _add_common(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--seeds", type=int)
    p.add_argument("--multiple", type=int)

    thin = sub.add_parser("thin", help="thin representations and flows")
    thin_sub = thin.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = thin_sub.add_parser("member")
    _add_common(p)
    p.add_argument("--weight", required=True)
    p = thin_sub.add_parser("count")
    _add_common(p)
    p.add_argument("--weight", required=True)
    p = thin_sub.add_parser("saturation")
    _add_common(p)
    p.add_argument("--box", required=True)
    p.add_argument("--nmax", type=int, default=4)

    p = sub.add_parser("verify-paper", help="run the bundled verification suite")
    p.add_argument("--only")
    return parser


def _quiver(args) -> Quiver:
    if args.fixture:
        return load_fixture_quiver(args.fixture)
    if args.quiver:
        return load_quiver(args.quiver)
    if args.rep:
        return load_representation(args.rep[0]).quiver
    raise UsageError("one of --quiver, --fixture or --rep is required")


def _reps(args, count: Optional[int] = None) -> List[Representation]:
    if count is not None and len(args.rep) != count:
        raise UsageError(f"expected {count} --rep argument(s), got {len(args.rep)}")
    if not args.rep:
        raise UsageError("--rep is required")
    quiver = load_quiver(args.quiver) if args.quiver else None
    return [load_representation(path, quiver) for path in args.rep]


def _vector(text: str):
    try:
        return parse_vector(text)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _quiver_ref(args) -> str:
    return args.quiver or "-"


def _box(text: str, quiver: Quiver):
    box = _vector(text)
    if len(box) == 1 and quiver.n > 1:
        box = box * quiver.n
    return box


def _config(args, n_max: int) -> ScanConfig:
    overrides = {k: v for k, v in (("trials", args.trials), ("bound", args.bound), ("seed", args.seed)) if v is not None}
    return ScanConfig(n_max=n_max, **overrides)


def cmd_classify(args) -> CommandResult:
    return CommandResult(report=str(classify_quiver(_quiver(args))))


def cmd_homext(args) -> CommandResult:
    V, W = _reps(args, 2)
    result = hom_ext(V, W)
    return CommandResult(report=f"hom {result.hom}\next {result.ext}")


def cmd_semiinv(args) -> CommandResult:
    reps = _reps(args)
    if len(reps) == 1:
        return CommandResult(report=f"det = {format_polynomial(functional_determinant(reps[0]))}")
    if len(reps) == 2:
        return CommandResult(report=f"c(V,W) = {format_rational(schofield_eval(*reps))}")
    raise UsageError("semiinv takes one or two --rep arguments")


def cmd_orbit_member(args) -> CommandResult:
    (W,) = _reps(args, 1)
    sigma = _vector(args.weight)
    verdict = membership(W, sigma, MembershipMode(args.mode), trials=args.trials, seed=args.seed,
                         bound=args.bound, allow_fallback=args.allow_fallback)
    lines = [f"weight {format_vector(verdict.weight)}", verdict.describe()]
    if verdict.witness is not None:
        lines.append("witness")
        lines.append(format_representation(verdict.witness, _quiver_ref(args)).rstrip("\n"))
        lines.append("end")
    return CommandResult(report="\n".join(lines))


def cmd_orbit_scan(args) -> CommandResult:
    (W,) = _reps(args, 1)
    results = scan_weights(W, _box(args.box, W.quiver), _config(args, args.nmax))
    ref = _quiver_ref(args)
    lines, blocks = [], []
    for r in results:
        if r.verdict is None:
            lines.append(f"{format_vector(r.weight)}: skipped ({r.skipped})")
            continue
        line = f"{format_vector(r.weight)}: {r.verdict.describe()}"
        if r.certificate is not None:
            line += f"; {r.certificate.multiple} x weight is a member"
            blocks.append(format_certificate(r.certificate, ref))
        lines.append(line)
    lines.append(f"{len(blocks)} saturation certificate(s)")
    if args.out:
        Path(args.out).write_text("".join(blocks), encoding="utf-8")
        logger.info(f"Wrote {len(blocks)} certificate(s) to {args.out}")
    return CommandResult(report="\n".join(lines), certificates=blocks)


def cmd_orbit_verify(args) -> CommandResult:
    (W,) = _reps(args, 1)
    certificates = parse_certificates(Path(args.certificate).read_text(encoding="utf-8"), W.quiver)
    if not certificates:
        raise CertificateError(f"no certificate blocks in {args.certificate}")
    lines, failed = [], False
    for cert in certificates:
        check = verify_certificate(W, cert)
        failed |= not check.passed
        status = "verified" if check.passed else "REJECTED: " + "; ".join(check.problems)
        lines.append(f"{format_vector(cert.weight)} x {cert.multiple}: {status}")
    return CommandResult(exit_code=EXIT_FAILED if failed else EXIT_OK, report="\n".join(lines))


def cmd_reflect(args) -> CommandResult:
    if args.alpha:
        quiver, alpha = reflect_dim(_quiver(args), args.vertex, _vector(args.alpha))
        return CommandResult(report=f"{format_quiver(quiver).rstrip()}\ndim {format_vector(alpha)}")
    (V,) = _reps(args, 1)
    reflected = reflect_rep(V, args.vertex, Direction(args.direction))
    return CommandResult(report=format_quiver(reflected.quiver).rstrip() + "\n" + format_representation(reflected).rstrip())


def cmd_shrink(args) -> CommandResult:
    W = _reps(args, 1)[0] if args.rep else None
    quiver = W.quiver if W is not None else _quiver(args)
    sigma = _vector(args.weight) if args.weight else None
    beta = _vector(args.alpha) if args.alpha else None
    result = shrink(quiver, args.vertex, W=W, sigma=sigma, beta=beta)
    lines = [format_quiver(result.quiver).rstrip()]
    lines += [f"# {name} = {outer} {inner}" for name, outer, inner in result.composed]
    if result.beta is not None:
        lines.append(f"dim {format_vector(result.beta)}")
    if result.weight is not None:
        lines.append(f"weight {format_vector(result.weight)}")
    if result.rep is not None:
        lines.append(format_representation(result.rep).rstrip())
    return CommandResult(report="\n".join(lines))


def _render_sequence(sequence) -> List[str]:
    lines = [f"  [{'ok' if c.passed else 'FAIL'}] {c.name} {c.detail}".rstrip() for c in sequence.checks]
    if sequence.derived is not None:
        lines.append(f"  derived quiver: {sequence.derived.n} vertices, {len(sequence.derived.arrows)} arrows")
    return lines


def cmd_exceptional(args) -> CommandResult:
    if args.fixture and not args.sequence:
        report = run_reduction_chain(load_fixture(args.fixture), trials=args.trials, seed=args.seed or 0)
        lines = []
        for k, sequence in enumerate(report.sequences, start=1):
            lines.append(f"stage {k}: {'valid' if sequence.valid else 'invalid'}")
            lines += _render_sequence(sequence)
        lines.append(f"terminal quiver is Kronecker(3): {'yes' if report.reaches_kronecker else 'no'}")
        return CommandResult(exit_code=EXIT_OK if report.reaches_kronecker else EXIT_FAILED, report="\n".join(lines))
    if not args.sequence:
        raise UsageError("exceptional needs --fixture or --sequence")
    quiver = _quiver(args)
    vectors = [_vector(part) for part in args.sequence.split(";") if part.strip()]
    sequence = validate_exceptional_sequence(quiver, vectors, trials=args.trials, seed=args.seed or 0)
    lines = [f"sequence: {'valid' if sequence.valid else 'invalid'}"] + _render_sequence(sequence)
    if sequence.derived is not None:
        lines.append(format_quiver(sequence.derived).rstrip())
    return CommandResult(exit_code=EXIT_OK if sequence.valid else EXIT_FAILED, report="\n".join(lines))


def cmd_candecomp(args) -> CommandResult:
    quiver = _quiver(args)
    alpha = _vector(args.alpha)
    seeds = args.seeds if args.seeds is not None else settings.CANONICAL_SEEDS
    if args.multiple is not None:
        rule = verify_multiple_rule(quiver, alpha, args.multiple, seeds)
        lines = [f"expected {rule.expected}", f"actual   {rule.actual}", "pass" if rule.passed else "FAIL"]
        return CommandResult(exit_code=EXIT_OK if rule.passed else EXIT_FAILED, report="\n".join(lines))
    return CommandResult(report=canonical_decomposition(quiver, alpha, seeds).describe())


def cmd_thin_member(args) -> CommandResult:
    (W,) = _reps(args, 1)
    verdict = thin_membership(W, _vector(args.weight))
    return CommandResult(report=verdict.describe())


def cmd_thin_count(args) -> CommandResult:
    return CommandResult(report=str(fiber_count(_quiver(args), _vector(args.weight))))


def cmd_thin_saturation(args) -> CommandResult:
    (W,) = _reps(args, 1)
    report = thin_saturation_check(W, _box(args.box, W.quiver), n_max=args.nmax)
    lines = [f"checked {report.checked} weights"]
    lines += [f"violation at {format_vector(s)} with multiple {n}" for s, n in report.violations]
    lines.append("saturated" if report.passed else "NOT saturated")
    return CommandResult(exit_code=EXIT_OK if report.passed else EXIT_FAILED, report="\n".join(lines))


def cmd_verify_paper(args) -> CommandResult:
    from cli.acceptance_checks import verify_paper_examples

    return verify_paper_examples(only=args.only)


COMMANDS: Dict[tuple, Callable] = {
    ("classify", None): cmd_classify,
    ("homext", None): cmd_homext,
    ("semiinv", None): cmd_semiinv,
    ("orbit", "member"): cmd_orbit_member,
    ("orbit", "scan"): cmd_orbit_scan,
    ("orbit", "verify-certificate"): cmd_orbit_verify,
    ("reflect", None): cmd_reflect,
    ("shrink", None): cmd_shrink,
    ("exceptional", None): cmd_exceptional,
    ("candecomp", None): cmd_candecomp,
    ("thin", "member"): cmd_thin_member,
    ("thin", "count"): cmd_thin_count,
    ("thin", "saturation"): cmd_thin_saturation,
    ("verify-paper", None): cmd_verify_paper,
}


def run_command(argv: List[str]) -> CommandResult:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return CommandResult(exit_code=EXIT_USAGE, report=str(e))
    except SystemExit as e:
        # --help
        return CommandResult(exit_code=int(e.code or 0))
    handler = COMMANDS[(args.command, getattr(args, "action", None))]
    logger.info(f"Running {args.command} {getattr(args, 'action', '') or ''}".rstrip())
    try:
        return handler(args)
    except UsageError as e:
        return CommandResult(exit_code=EXIT_USAGE, report=f"error: {e}")
    except (ParseError, InvalidQuiverError, OSError) as e:
        return CommandResult(exit_code=EXIT_USAGE, report=f"error: {e}")
    except (PreconditionError, DimensionMismatchError, SymbolicLimitExceeded, ModelValidationError, ValueError) as e:
        return CommandResult(exit_code=EXIT_PRECONDITION, report=f"precondition violated: {e}")
    except (CertificateError, UnstableDecompositionError, WitnessSearchError) as e:
        return CommandResult(exit_code=EXIT_FAILED, report=f"verification failed: {e}")
