"""Line-oriented text formats for polytopes and certificates.

A polytope document is a header line ``dim <n>`` followed by one
``v <int> <int> [<int>]`` line per vertex.  Lines starting with ``#`` and
blank lines are ignored; a ``label <text>`` line before the vertices is
optional.  A certificate document is a sequence of blank-line separated
blocks, each starting with ``piece <witness_kind>`` followed by vertex
lines in the same ``v`` syntax.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import LatticePolytope, Vec, convex_hull
from .prisms import WITNESS_KINDS, NormalityCertificate

__all__ = [
    "ParseError",
    "PolytopeDocument",
    "load_document",
    "dump_document",
    "load_polytope",
    "dump_polytope",
    "dump_certificate",
    "load_certificate_pieces",
]


class ParseError(ValueError):
    """Raised on malformed document text; carries a 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class PolytopeDocument:
    dim: int
    vertices: tuple[Vec, ...]
    label: str = ""
    _polytope: LatticePolytope | None = field(
        default=None, repr=False, compare=False
    )

    def polytope(self) -> LatticePolytope:
        p = self._polytope
        if p is None:
            p = convex_hull(self.vertices)
            object.__setattr__(self, "_polytope", p)
        return p

    @classmethod
    def from_polytope(
        cls, p: LatticePolytope, label: str = ""
    ) -> "PolytopeDocument":
        return cls(p.ambient, p.vertices, label, p)


def _parse_vertex(line_no: int, line: str, dim: int | None) -> Vec:
    parts = line.split()
    try:
        coords = tuple(int(x) for x in parts[1:])
    except ValueError:
        raise ParseError(line_no, f"non-integer coordinate in {line!r}")
    if not 1 <= len(coords) <= 3:
        raise ParseError(line_no, f"expected 1 to 3 coordinates, got {len(coords)}")
    if dim is not None and len(coords) != dim:
        raise ParseError(line_no, f"expected {dim} coordinates, got {len(coords)}")
    return coords


def load_document(text: str) -> PolytopeDocument:
    """Parse a polytope document; vertices are validated through the hull."""
    dim: int | None = None
    label = ""
    vertices: list[Vec] = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), 1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("dim"):
            if dim is not None:
                raise ParseError(line_no, "duplicate dim header")
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(line_no, f"bad header {line!r}, expected 'dim <n>'")
            dim = int(parts[1])
            if not 1 <= dim <= 3:
                raise ParseError(line_no, f"dim {dim} out of range 1..3")
        elif line.startswith("label"):
            label = line[len("label"):].strip()
        elif line.startswith("v "):
            if dim is None:
                raise ParseError(line_no, "vertex line before dim header")
            vertices.append(_parse_vertex(line_no, line, dim))
        else:
            raise ParseError(line_no, f"unrecognized line {line!r}")
    if dim is None:
        raise ParseError(last_line or 1, "missing 'dim <n>' header")
    if not vertices:
        raise ParseError(last_line, "no vertex lines")
    p = convex_hull(vertices)
    return PolytopeDocument(dim, p.vertices, label, p)


def dump_document(doc: PolytopeDocument) -> str:
    lines = [f"dim {doc.dim}"]
    if doc.label:
        lines.append(f"label {doc.label}")
    for v in doc.vertices:
        lines.append("v " + " ".join(str(c) for c in v))
    return "\n".join(lines) + "\n"


def load_polytope(text: str) -> LatticePolytope:
    return load_document(text).polytope()


def dump_polytope(p: LatticePolytope, label: str = "") -> str:
    return dump_document(PolytopeDocument.from_polytope(p, label))


def dump_certificate(cert: NormalityCertificate) -> str:
    blocks = []
    for piece in cert.pieces:
        lines = [f"piece {piece.witness_kind}"]
        for v in piece.polytope.vertices:
            lines.append("v " + " ".join(str(c) for c in v))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def load_certificate_pieces(text: str) -> tuple[tuple[str, LatticePolytope], ...]:
    """Parse certificate text into (witness_kind, polytope) pairs.

    Structural witness data is not serialized, so the result supports
    containment and cover checks but not re-running piece verification.
    """
    pieces: list[tuple[str, LatticePolytope]] = []
    kind: str | None = None
    vertices: list[Vec] = []
    start_line = 0

    def flush(line_no: int) -> None:
        nonlocal kind, vertices
        if kind is None:
            return
        if not vertices:
            raise ParseError(start_line, f"piece {kind!r} has no vertices")
        pieces.append((kind, convex_hull(vertices)))
        kind = None
        vertices = []

    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            flush(line_no)
            continue
        if line.startswith("piece"):
            flush(line_no)
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(line_no, "expected 'piece <witness_kind>'")
            if parts[1] not in WITNESS_KINDS:
                raise ParseError(line_no, f"unknown witness kind {parts[1]!r}")
            kind = parts[1]
            start_line = line_no
        elif line.startswith("v "):
            if kind is None:
                raise ParseError(line_no, "vertex line outside a piece block")
            vertices.append(_parse_vertex(line_no, line, None))
        else:
            raise ParseError(line_no, f"unrecognized line {line!r}")
    flush(0)
    if not pieces:
        raise ParseError(1, "no piece blocks")
    return tuple(pieces)
