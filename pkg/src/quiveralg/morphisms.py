"""Quiver morphisms, regularity checking and the category structure.

A morphism is a pair of total maps (on vertices and on edges) making the
source and range squares commute.  A morphism is *regular* when

* (A1) both maps are proper — automatic between finite discrete spaces,
  recorded as a note so the report shape is stable;
* (A2) on each in-fiber the edge map is injective and pushes the fiber
  weights forward onto exactly the target fiber's weights;
* (A3) every vertex sitting over a regular vertex is itself regular.

(A2) is decided by three separately witnessed sub-checks (injectivity,
surjectivity onto the target fiber, weight preservation) so that failures
carry actionable witnesses; ``pushforward`` provides the brute-force
measure computation the (A2) verdict is cross-validated against.
Fibers are processed in edge-list order, so reports are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Mapping

from .quivers import FiniteQuiver, classify, validate
from .scalars import ScalarQ

if TYPE_CHECKING:
    from .correspondence import EdgeVector

A1_NOTE = "A1 holds automatically: every map between finite discrete spaces is proper"


@dataclass(frozen=True)
class QuiverMorphism:
    """A vertex map and an edge map between two quivers."""

    dom: FiniteQuiver
    cod: FiniteQuiver
    vmap: Mapping[str, str]
    emap: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "vmap", dict(self.vmap))
        object.__setattr__(self, "emap", dict(self.emap))


@dataclass(frozen=True)
class SquareReport:
    """Edges violating the source or range commuting square."""

    src_failures: tuple[str, ...]
    rng_failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.src_failures and not self.rng_failures

    def to_obj(self):
        return {
            "ok": self.ok,
            "src_failures": list(self.src_failures),
            "rng_failures": list(self.rng_failures),
        }


@dataclass(frozen=True)
class A2Failure:
    vertex: str
    reason: str

    def to_obj(self):
        return {"vertex": self.vertex, "reason": self.reason}


@dataclass(frozen=True)
class RegularityReport:
    """Witnessed verdicts for (A1)-(A3); empty failure lists mean regular."""

    a1_note: str
    a2_failures: tuple[A2Failure, ...]
    a3_failures: tuple[str, ...]

    @property
    def a2_ok(self) -> bool:
        return not self.a2_failures

    @property
    def a3_ok(self) -> bool:
        return not self.a3_failures

    @property
    def ok(self) -> bool:
        return self.a2_ok and self.a3_ok

    def to_obj(self):
        return {
            "ok": self.ok,
            "a1_note": self.a1_note,
            "a2_failures": [f.to_obj() for f in self.a2_failures],
            "a3_failures": list(self.a3_failures),
        }


def _check_total(m: QuiverMorphism) -> None:
    for v in m.dom.vertices:
        if v not in m.vmap:
            raise ValueError(f"vmap is not total: missing vertex {v!r}")
        if not m.cod.has_vertex(m.vmap[v]):
            raise ValueError(f"vmap sends {v!r} to unknown vertex {m.vmap[v]!r}")
    for e in m.dom.edges:
        if e.id not in m.emap:
            raise ValueError(f"emap is not total: missing edge {e.id!r}")
        if not m.cod.has_edge(m.emap[e.id]):
            raise ValueError(f"emap sends {e.id!r} to unknown edge {m.emap[e.id]!r}")
    for v in m.vmap:
        if not m.dom.has_vertex(v):
            raise ValueError(f"vmap defined on unknown vertex {v!r}")
    for e in m.emap:
        if not m.dom.has_edge(e):
            raise ValueError(f"emap defined on unknown edge {e!r}")


def check_morphism(m: QuiverMorphism) -> SquareReport:
    """List every edge whose source or range square fails to commute."""
    for q, name in ((m.dom, "dom"), (m.cod, "cod")):
        report = validate(q)
        if not report.ok:
            raise ValueError(f"invalid {name} quiver: {'; '.join(report.violations)}")
    _check_total(m)
    src_failures = []
    rng_failures = []
    for e in m.dom.edges:
        image = m.cod.edge(m.emap[e.id])
        if m.vmap[e.src] != image.src:
            src_failures.append(e.id)
        if m.vmap[e.rng] != image.rng:
            rng_failures.append(e.id)
    return SquareReport(tuple(src_failures), tuple(rng_failures))


def check_regular(m: QuiverMorphism) -> RegularityReport:
    """Decide regularity; the input must already be a quiver morphism."""
    squares = check_morphism(m)
    if not squares.ok:
        raise ValueError("not a quiver morphism: commuting squares fail")

    a2_failures = []
    for v in m.dom.vertices:
        fiber = m.dom.fiber(v)
        target = m.cod.fiber(m.vmap[v])
        seen = set()
        injective = True
        for e in fiber:
            x = m.emap[e.id]
            if x in seen:
                injective = False
                break
            seen.add(x)
        if not injective:
            a2_failures.append(A2Failure(v, "fiber-not-injective"))
        image = {m.emap[e.id] for e in fiber}
        if any(x.id not in image for x in target):
            a2_failures.append(A2Failure(v, "not-onto-target-fiber"))
        for e in fiber:
            if m.cod.edge(m.emap[e.id]).weight != e.weight:
                a2_failures.append(A2Failure(v, f"weight-mismatch({e.id})"))

    dom_reg = classify(m.dom).reg
    cod_reg = classify(m.cod).reg
    a3_failures = tuple(
        v for v in m.dom.vertices if m.vmap[v] in cod_reg and v not in dom_reg
    )
    return RegularityReport(A1_NOTE, tuple(a2_failures), a3_failures)


def pushforward(m: QuiverMorphism, v: str) -> dict[str, Fraction]:
    """Push the in-fiber weights of ``v`` forward along the edge map.

    Returns the image measure as a map from target edge ids to total mass;
    edges receiving no mass are absent.  This is the brute-force oracle for
    the measure half of (A2): the condition holds at ``v`` exactly when the
    result equals the weight function of the in-fiber of ``vmap(v)``.
    """
    if not m.dom.has_vertex(v):
        raise ValueError(f"unknown vertex {v!r}")
    out: dict[str, Fraction] = {}
    for e in m.dom.fiber(v):
        x = m.emap[e.id]
        out[x] = out.get(x, Fraction(0)) + e.weight
    return out


def compose(n: QuiverMorphism, m: QuiverMorphism) -> QuiverMorphism:
    """Componentwise composite ``n ∘ m``; the middle quivers must agree."""
    if m.cod != n.dom:
        raise ValueError("cannot compose: codomain of the first factor "
                         "differs from domain of the second")
    return QuiverMorphism(
        dom=m.dom,
        cod=n.cod,
        vmap={v: n.vmap[m.vmap[v]] for v in m.dom.vertices},
        emap={e.id: n.emap[m.emap[e.id]] for e in m.dom.edges},
    )


def identity(q: FiniteQuiver) -> QuiverMorphism:
    report = validate(q)
    if not report.ok:
        raise ValueError(f"invalid quiver: {'; '.join(report.violations)}")
    return QuiverMorphism(
        dom=q,
        cod=q,
        vmap={v: v for v in q.vertices},
        emap={e.id: e.id for e in q.edges},
    )


def integral_identity_check(m: QuiverMorphism, xi: "EdgeVector") -> bool:
    """Exact check of the substitution identity regularity buys.

    For every vertex ``v`` of the domain, summing ``xi`` against the target
    fiber's weights must agree with summing ``xi ∘ emap`` against the
    fiber weights of ``v``.
    """
    if xi.quiver != m.cod:
        raise ValueError("vector is indexed by the wrong quiver")
    if not check_regular(m).ok:
        raise ValueError("morphism is not regular")
    for v in m.dom.vertices:
        lhs = sum(
            (xi[x.id] * x.weight for x in m.cod.fiber(m.vmap[v])),
            start=ScalarQ(),
        )
        rhs = sum(
            (xi[m.emap[e.id]] * e.weight for e in m.dom.fiber(v)),
            start=ScalarQ(),
        )
        if lhs != rhs:
            return False
    return True
