from __future__ import annotations

import logging
from pathlib import Path
from typing import List, Tuple

from errors import InvalidQuiverError, ParseError
from quivers.quiver_model import Quiver

logger = logging.getLogger(__name__)


def parse_quiver(text: str) -> Quiver:
    """Parse the line format ``v NAME`` / ``a NAME TAIL HEAD`` with ``#`` comments."""
    vertices: List[str] = []
    arrows: List[Tuple[str, str, str]] = []
    seen_vertices = set()
    seen_arrows = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v":
            if len(parts) != 2:
                raise ParseError("expected 'v NAME'", lineno)
            if parts[1] in seen_vertices:
                raise ParseError(f"duplicate vertex {parts[1]!r}", lineno)
            seen_vertices.add(parts[1])
            vertices.append(parts[1])
        elif parts[0] == "a":
            if len(parts) != 4:
                raise ParseError("expected 'a NAME TAIL HEAD'", lineno)
            name, tail, head = parts[1:]
            if name in seen_arrows:
                raise ParseError(f"duplicate arrow {name!r}", lineno)
            for end in (tail, head):
                if end not in seen_vertices:
                    raise ParseError(f"arrow {name!r} references undeclared vertex {end!r}", lineno)
            seen_arrows.add(name)
            arrows.append((name, tail, head))
        else:
            raise ParseError(f"unknown directive {parts[0]!r}", lineno)
    quiver = Quiver.build(vertices, arrows)
    logger.debug(f"Parsed quiver with {quiver.n} vertices and {len(quiver.arrows)} arrows")
    return quiver


def load_quiver(path: str | Path) -> Quiver:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidQuiverError(f"cannot read quiver file {path}: {exc}") from exc
    return parse_quiver(text)


def format_quiver(quiver: Quiver) -> str:
    lines = [f"v {v}" for v in quiver.vertices]
    lines += [f"a {a.name} {a.tail} {a.head}" for a in quiver.arrows]
    return "\n".join(lines) + "\n"
