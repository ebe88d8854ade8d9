"""Text blocks for saturation certificates.

    certificate
    weight 1,-1
    multiple 2
    witness
    rep - dim 2,4
    m a
    ...
    proof zero-symbolic-determinant
    end
"""
from __future__ import annotations

from typing import List

from errors import CertificateError, ParseError
from orbit.orbit_models import ProofTag, SaturationCertificate
from quivers.quiver_model import Quiver, format_vector, parse_vector
from representations.rep_parser import format_representation, parse_representation


def format_certificate(certificate: SaturationCertificate, quiver_ref: str = "-") -> str:
    lines = [
        "certificate",
        f"weight {format_vector(certificate.weight)}",
        f"multiple {certificate.multiple}",
        "witness",
        format_representation(certificate.witness, quiver_ref).rstrip("\n"),
        f"proof {certificate.proof.value}",
        "end",
    ]
    return "\n".join(lines) + "\n"


def parse_certificates(text: str, quiver: Quiver) -> List[SaturationCertificate]:
    lines = text.splitlines()
    out: List[SaturationCertificate] = []
    i = 0
    while i < len(lines):
        line = lines[i].strip()
        if not line or line.startswith("#"):
            i += 1
            continue
        if line != "certificate":
            raise ParseError(f"expected 'certificate', got {line!r}", i + 1)
        start = i + 1
        try:
            end = next(k for k in range(start, len(lines)) if lines[k].strip() == "end")
        except StopIteration:
            raise ParseError("certificate block is not closed by 'end'", i + 1) from None
        out.append(_parse_block(lines[start:end], quiver, start + 1))
        i = end + 1
    return out


def _parse_block(lines: List[str], quiver: Quiver, first_line: int) -> SaturationCertificate:
    fields = {}
    witness_lines: List[str] = []
    witness_start = None
    for offset, raw in enumerate(lines):
        line = raw.strip()
        lineno = first_line + offset
        if witness_start is not None and not line.startswith("proof"):
            witness_lines.append(raw)
            continue
        if not line:
            continue
        key, _, value = line.partition(" ")
        if key == "witness":
            witness_start = lineno + 1
        elif key in ("weight", "multiple", "proof"):
            if key == "proof":
                witness_start = None
            fields[key] = (value.strip(), lineno)
        else:
            raise ParseError(f"unknown certificate field {key!r}", lineno)
    missing = [k for k in ("weight", "multiple", "proof") if k not in fields]
    if missing or not witness_lines:
        raise ParseError(f"certificate is missing {', '.join(missing) or 'witness'}", first_line)
    try:
        weight = parse_vector(fields["weight"][0])
        multiple = int(fields["multiple"][0])
        proof = ProofTag(fields["proof"][0])
    except ValueError as exc:
        raise ParseError(str(exc), first_line) from exc
    header_line = first_line + next(k for k, l in enumerate(lines) if l.strip() == "witness") + 1
    witness = parse_representation("\n".join(witness_lines), quiver, header_line)
    try:
        return SaturationCertificate(weight=weight, multiple=multiple, witness=witness, proof=proof)
    except ValueError as exc:
        raise CertificateError(str(exc)) from exc
