"""Finite hypergraphs: representation, validation, rank, finite trace.

Vertices are opaque string tokens. Edges are sets of vertices; the empty
edge is representable (a hypergraph containing one is uncoverable, which
stays a checkable flag rather than a parse error). All values are
immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def canonical_edge(edge: Iterable[str]) -> frozenset[str]:
    return frozenset(edge)


def edge_sort_key(edge: frozenset[str]) -> tuple[str, ...]:
    """Canonical total order on edges: lexicographic on the sorted id tuple."""
    return tuple(sorted(edge))


@dataclass(frozen=True)
class Hypergraph:
    vertices: frozenset[str]
    edges: frozenset[frozenset[str]]

    def __post_init__(self) -> None:
        for v in self.vertices:
            if not isinstance(v, str) or not v:
                raise ValueError(f"vertex ids must be nonempty strings, got {v!r}")
        for e in self.edges:
            unknown = e - self.vertices
            if unknown:
                raise ValueError(
                    f"edge {sorted(e)} references unknown vertices {sorted(unknown)}"
                )

    @staticmethod
    def build(vertices: Iterable[str], edges: Iterable[Iterable[str]]) -> "Hypergraph":
        return Hypergraph(
            vertices=frozenset(vertices),
            edges=frozenset(canonical_edge(e) for e in edges),
        )

    @property
    def uncoverable(self) -> bool:
        return frozenset() in self.edges

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[frozenset[str]]:
        return sorted(self.edges, key=edge_sort_key)

    def isolated_vertices(self) -> list[str]:
        touched: set[str] = set()
        for e in self.edges:
            touched |= e
        return sorted(self.vertices - touched)


@dataclass(frozen=True)
class PartProfile:
    """An ordered partition of the vertex set into named parts.

    Per-part degrees are never stored; they are recomputed against a
    hypergraph via :func:`invcover.bounds.part_degrees`.
    """

    parts: tuple[tuple[str, frozenset[str]], ...]

    def __post_init__(self) -> None:
        names = [name for name, _ in self.parts]
        if len(names) != len(set(names)):
            raise ValueError("part names must be unique")

    @staticmethod
    def build(named_parts: dict[str, Iterable[str]]) -> "PartProfile":
        # Canonical part order: sorted by name.
        return PartProfile(
            tuple((name, frozenset(named_parts[name])) for name in sorted(named_parts))
        )

    @property
    def k(self) -> int:
        return len(self.parts)

    def part_names(self) -> list[str]:
        return [name for name, _ in self.parts]

    def part_of(self, v: str) -> str:
        for name, block in self.parts:
            if v in block:
                return name
        raise KeyError(v)

    def validate_for(self, hypergraph: Hypergraph) -> None:
        """Raise ValueError unless parts are disjoint and cover V exactly."""
        seen: set[str] = set()
        for name, block in self.parts:
            overlap = seen & block
            if overlap:
                raise ValueError(f"part {name!r} overlaps earlier parts on {sorted(overlap)}")
            seen |= block
        if seen != hypergraph.vertices:
            missing = hypergraph.vertices - seen
            extra = seen - hypergraph.vertices
            raise ValueError(
                f"parts must cover the vertex set exactly; missing {sorted(missing)},"
                f" extraneous {sorted(extra)}"
            )

    @staticmethod
    def trivial(hypergraph: Hypergraph) -> "PartProfile":
        """The single-part partition (used when an instance supplies no parts)."""
        return PartProfile((("all", hypergraph.vertices),))


def rank(hypergraph: Hypergraph) -> int:
    """Maximum edge cardinality; 0 for an empty edge set."""
    if not hypergraph.edges:
        return 0
    return max(len(e) for e in hypergraph.edges)


def finite_trace(hypergraph: Hypergraph, keep: Iterable[str]) -> Hypergraph:
    """The trace on a vertex subset K: edges become {e & K for e in E}.

    Empty intersections are retained as the empty edge, which makes the
    trace uncoverable; callers that need coverable traces must choose K
    meeting every edge.
    """
    kept = frozenset(keep)
    unknown = kept - hypergraph.vertices
    if unknown:
        raise ValueError(f"trace set contains unknown vertices {sorted(unknown)}")
    return Hypergraph(
        vertices=kept,
        edges=frozenset(e & kept for e in hypergraph.edges),
    )


@dataclass(frozen=True)
class ValidationIssue:
    severity: str  # "error" | "warning" | "info"
    kind: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[ValidationIssue, ...]
    hypergraph: Hypergraph | None = None

    @property
    def ok(self) -> bool:
        return not any(i.severity == "error" for i in self.issues)

    @property
    def clean(self) -> bool:
        return not self.issues

    def by_kind(self, kind: str) -> list[ValidationIssue]:
        return [i for i in self.issues if i.kind == kind]


def validate_definition(
    vertices: Iterable[str], edges: Iterable[Iterable[str]]
) -> ValidationReport:
    """Validate a raw vertex/edge listing before construction.

    Reports unknown vertex references (error), duplicate edges (removed,
    warning), empty edges (flagged, kept), isolated vertices (info, kept).
    On hard errors the report carries no hypergraph.
    """
    issues: list[ValidationIssue] = []
    vertex_set = frozenset(vertices)
    seen: set[frozenset[str]] = set()
    kept: list[frozenset[str]] = []
    hard_error = False
    for raw in edges:
        e = canonical_edge(raw)
        unknown = e - vertex_set
        if unknown:
            issues.append(
                ValidationIssue(
                    "error",
                    "unknown-vertex",
                    f"edge {sorted(raw)} references unknown vertices {sorted(unknown)}",
                )
            )
            hard_error = True
            continue
        if e in seen:
            issues.append(
                ValidationIssue(
                    "warning", "duplicate-edge", f"duplicate edge {sorted(e)} removed"
                )
            )
            continue
        seen.add(e)
        kept.append(e)
        if not e:
            issues.append(
                ValidationIssue(
                    "warning", "empty-edge", "empty edge present; instance is uncoverable"
                )
            )
    if hard_error:
        return ValidationReport(tuple(issues), None)
    hypergraph = Hypergraph(vertices=vertex_set, edges=frozenset(kept))
    for v in hypergraph.isolated_vertices():
        issues.append(ValidationIssue("info", "isolated-vertex", f"vertex {v} is in no edge"))
    return ValidationReport(tuple(issues), hypergraph)


def validate(hypergraph: Hypergraph) -> ValidationReport:
    """Validate an already-constructed hypergraph (empty edges, isolation)."""
    return validate_definition(
        hypergraph.vertices, [list(e) for e in hypergraph.sorted_edges()]
    )
