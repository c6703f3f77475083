"""Finite quivers with strictly positive rational edge weights.

A quiver here is a finite directed multigraph.  Each edge ``e`` carries a
positive rational ``weight(e)``; the weights of the edges pointing into a
vertex ``v`` (its *in-fiber*) form a finitely supported measure on that
fiber, and positivity of every weight is exactly the requirement that the
measure has full support.  On finite discrete vertex/edge sets every map
is continuous and proper and every fiber is compact, so those conditions
are recorded as automatic rather than checked.

Vertex and edge identifiers are opaque strings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable


@dataclass(frozen=True)
class Edge:
    """A directed edge ``src -> rng`` with a positive rational weight."""

    id: str
    src: str
    rng: str
    weight: Fraction

    def __post_init__(self):
        if isinstance(self.weight, int):
            object.__setattr__(self, "weight", Fraction(self.weight))


@dataclass(frozen=True)
class FiniteQuiver:
    """Immutable vertex/edge data; list order is the canonical order.

    Derived lookup tables are built eagerly so that fiber enumeration is
    cheap; they never enter equality or hashing.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    _vset: frozenset = field(init=False, repr=False, compare=False)
    _fibers: dict = field(init=False, repr=False, compare=False)
    _out: dict = field(init=False, repr=False, compare=False)
    _by_id: dict = field(init=False, repr=False, compare=False)
    _fiber_pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        vset = frozenset(self.vertices)
        fibers = {v: [] for v in self.vertices}
        out = {v: [] for v in self.vertices}
        by_id = {}
        for e in self.edges:
            by_id[e.id] = e
            if e.rng in fibers:
                fibers[e.rng].append(e)
            if e.src in out:
                out[e.src].append(e)
        fiber_pos = {}
        for v, es in fibers.items():
            for i, e in enumerate(es):
                fiber_pos[e.id] = i
        object.__setattr__(self, "_vset", vset)
        object.__setattr__(self, "_fibers", {v: tuple(es) for v, es in fibers.items()})
        object.__setattr__(self, "_out", {v: tuple(es) for v, es in out.items()})
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_fiber_pos", fiber_pos)

    def has_vertex(self, v: str) -> bool:
        return v in self._vset

    def has_edge(self, eid: str) -> bool:
        return eid in self._by_id

    def edge(self, eid: str) -> Edge:
        return self._by_id[eid]

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def fiber(self, v: str) -> tuple[Edge, ...]:
        """Edges with range ``v``, in edge-list order."""
        return self._fibers.get(v, ())

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        """Edges with source ``v``, in edge-list order."""
        return self._out.get(v, ())

    def fiber_position(self, eid: str) -> int:
        """Position of an edge within the in-fiber of its range vertex."""
        return self._fiber_pos[eid]


def make_quiver(vertices: Iterable[str], edges: Iterable[tuple]) -> FiniteQuiver:
    """Convenience builder: edges given as ``(id, src, rng, weight)`` tuples."""
    return FiniteQuiver(
        tuple(vertices),
        tuple(Edge(i, s, r, Fraction(w)) for (i, s, r, w) in edges),
    )


@dataclass(frozen=True)
class ValidationReport:
    """Every violated structural invariant, one entry per offense."""

    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_obj(self):
        return {"ok": self.ok, "violations": list(self.violations)}


@dataclass(frozen=True)
class VertexClassification:
    """Partition of the vertex set into regular and singular vertices.

    ``sinks`` emit no edge.  ``fin`` is the whole vertex set: on a finite
    discrete space every vertex has a compact neighborhood whose source
    preimage is finite and on which the range map restricts to a local
    homeomorphism, so the finiteness condition is constant.  ``reg`` is
    ``fin`` minus the sinks and ``sing`` is its complement.
    """

    sinks: frozenset
    fin: frozenset
    reg: frozenset
    sing: frozenset

    def to_obj(self):
        return {
            "sinks": sorted(self.sinks),
            "fin": sorted(self.fin),
            "reg": sorted(self.reg),
            "sing": sorted(self.sing),
        }


def validate(q: FiniteQuiver) -> ValidationReport:
    """Check id uniqueness, endpoint resolution and weight positivity.

    Violations are report entries, never exceptions; an empty report means
    the quiver is valid.
    """
    violations = []
    seen = set()
    for v in q.vertices:
        if v in seen:
            violations.append(f"duplicate vertex id {v}")
        seen.add(v)
    seen = set()
    for e in q.edges:
        if e.id in seen:
            violations.append(f"duplicate edge id {e.id}")
        seen.add(e.id)
    for e in q.edges:
        if not q.has_vertex(e.src):
            violations.append(f"dangling src {e.id}")
        if not q.has_vertex(e.rng):
            violations.append(f"dangling rng {e.id}")
        if e.weight <= 0:
            violations.append(f"non-positive weight {e.id}")
    return ValidationReport(tuple(violations))


def classify(q: FiniteQuiver) -> VertexClassification:
    """Classify vertices; rejects invalid quivers."""
    report = validate(q)
    if not report.ok:
        raise ValueError(f"invalid quiver: {'; '.join(report.violations)}")
    vertices = frozenset(q.vertices)
    sinks = frozenset(v for v in q.vertices if not q.out_edges(v))
    fin = vertices
    reg = fin - sinks
    sing = vertices - reg
    return VertexClassification(sinks=sinks, fin=fin, reg=reg, sing=sing)


def in_fiber(q: FiniteQuiver, v: str) -> list[tuple[str, Fraction]]:
    """The in-fiber of ``v`` with its weights, in edge-list order."""
    if not q.has_vertex(v):
        raise ValueError(f"unknown vertex {v!r}")
    return [(e.id, e.weight) for e in q.fiber(v)]
