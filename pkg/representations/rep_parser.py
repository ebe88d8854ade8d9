from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from errors import ParseError
from linalg.rational_matrix import format_rational, matrix, zeros
from quivers.quiver_model import Quiver, format_vector, parse_vector
from representations.rep_model import Representation

logger = logging.getLogger(__name__)


def parse_header(line: str, lineno: int = 1) -> Tuple[str, Tuple[int, ...]]:
    parts = line.split()
    if len(parts) != 4 or parts[0] != "rep" or parts[2] != "dim":
        raise ParseError("expected 'rep QUIVERFILE dim d1,...,dn'", lineno)
    try:
        dims = parse_vector(parts[3])
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from exc
    return parts[1], dims


def parse_representation(text: str, quiver: Quiver, first_line: int = 1) -> Representation:
    """Parse a representation block; ``first_line`` offsets reported line numbers."""
    lines = [(first_line + i, raw.strip()) for i, raw in enumerate(text.splitlines())]
    lines = [(n, s) for n, s in lines if s and not s.startswith("#")]
    if not lines:
        raise ParseError("empty representation", first_line)
    lineno, header = lines[0]
    _, dims = parse_header(header, lineno)
    if len(dims) != quiver.n:
        raise ParseError(f"dimension vector has {len(dims)} entries, quiver has {quiver.n} vertices", lineno)
    maps: Dict[str, DomainMatrix] = {}
    pos = 1
    while pos < len(lines):
        lineno, line = lines[pos]
        parts = line.split()
        if parts[0] != "m" or len(parts) != 2:
            raise ParseError("expected 'm ARROWNAME'", lineno)
        name = parts[1]
        if name not in quiver.arrow_index:
            raise ParseError(f"unknown arrow {name!r}", lineno)
        if name in maps:
            raise ParseError(f"matrix for arrow {name!r} given twice", lineno)
        arrow = quiver.arrow(name)
        nrows = dims[quiver.index(arrow.head)]
        ncols = dims[quiver.index(arrow.tail)]
        rows: List[List[str]] = []
        for k in range(nrows):
            if pos + 1 + k >= len(lines):
                raise ParseError(f"arrow {name!r} needs {nrows} rows", lineno)
            row_no, row = lines[pos + 1 + k]
            entries = row.split()
            if len(entries) != ncols:
                raise ParseError(f"row of arrow {name!r} has {len(entries)} entries, expected {ncols}", row_no)
            rows.append(entries)
        try:
            maps[name] = matrix(rows, nrows, ncols)
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from exc
        pos += 1 + nrows
    for a in quiver.arrows:
        if a.name not in maps:
            nrows = dims[quiver.index(a.head)]
            ncols = dims[quiver.index(a.tail)]
            if nrows and ncols:
                raise ParseError(f"missing matrix for arrow {a.name!r}")
            maps[a.name] = zeros(nrows, ncols)
    return Representation(quiver=quiver, dims=dims, maps=maps)


def load_representation(path: str | Path, quiver: Optional[Quiver] = None) -> Representation:
    """Read a representation file; without ``quiver`` the header's QUIVERFILE is loaded."""
    from quivers.quiver_parser import load_quiver

    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if quiver is None:
        first = next((s for s in (l.strip() for l in text.splitlines()) if s and not s.startswith("#")), None)
        if first is None:
            raise ParseError(f"{path.name}: missing 'rep QUIVERFILE dim ...' header", 1)
        quiver_ref, _ = parse_header(first)
        quiver = load_quiver(path.parent / quiver_ref)
    return parse_representation(text, quiver)


def format_representation(rep: Representation, quiver_ref: str = "-") -> str:
    lines = [f"rep {quiver_ref} dim {format_vector(rep.dims)}"]
    for a in rep.quiver.arrows:
        if 0 in rep.maps[a.name].shape:
            continue
        lines.append(f"m {a.name}")
        for row in rep.maps[a.name].to_list():
            lines.append(" ".join(format_rational(x) for x in row))
    return "\n".join(lines) + "\n"
