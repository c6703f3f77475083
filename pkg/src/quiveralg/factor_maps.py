"""Counting-measure quivers (topological graphs) and factor maps.

A quiver whose weights are all 1 carries counting measures on its fibers
and is exactly a finite topological graph.  For such quivers there is an
older notion of structure-preserving map, the *factor map*, defined on
one-point compactifications: (F1) asks that the source and range squares
commute wherever the edge map stays finite, (F2) asks that every codomain
edge lift uniquely into each fiber sitting over its range, and a factor
map is *regular* when vertices over regular vertices emit edges.

On finite quivers the compactification clauses (maps send the point at
infinity to itself; out-fibers stay inside the finite part) hold
automatically and are recorded as notes.  ``equivalence_check`` confirms
that the factor-map verdict and the regular-morphism verdict agree, which
is a theorem, so ``False`` signals a bug rather than a valid state.
"""

from __future__ import annotations

from dataclasses import dataclass

from .morphisms import QuiverMorphism, check_morphism, check_regular
from .pullback import ConditionResult
from .quivers import FiniteQuiver, classify, validate

_AUTOMATIC_NOTES = (
    "one-point compactification: finite maps extend by sending infinity to infinity",
    "out-fibers of finite quivers never meet the point at infinity",
)


@dataclass(frozen=True)
class FactorMapReport:
    f1: ConditionResult
    f2: ConditionResult
    regular_factor: ConditionResult
    notes: tuple[str, ...] = _AUTOMATIC_NOTES

    @property
    def is_factor_map(self) -> bool:
        return self.f1.passed and self.f2.passed

    @property
    def ok(self) -> bool:
        return self.is_factor_map and self.regular_factor.passed

    def to_obj(self):
        return {
            "ok": self.ok,
            "f1": self.f1.to_obj(),
            "f2": self.f2.to_obj(),
            "regular_factor": self.regular_factor.to_obj(),
            "notes": list(self.notes),
        }


def is_counting(q: FiniteQuiver) -> bool:
    """True when every weight is 1, i.e. fibers carry counting measures."""
    report = validate(q)
    if not report.ok:
        raise ValueError(f"invalid quiver: {'; '.join(report.violations)}")
    return all(e.weight == 1 for e in q.edges)


def _require_counting(m: QuiverMorphism) -> None:
    if not is_counting(m.dom) or not is_counting(m.cod):
        raise ValueError("factor maps are defined for counting-measure quivers only")


def check_factor_map(m: QuiverMorphism) -> FactorMapReport:
    """Decide (F1), (F2) and regularity by enumeration."""
    _require_counting(m)

    squares = check_morphism(m)
    if squares.ok:
        f1 = ConditionResult(True)
    else:
        witness = (squares.src_failures + squares.rng_failures)[0]
        f1 = ConditionResult(False, witness=f"edge {witness}")

    f2 = ConditionResult(True)
    for x in m.cod.edges:
        for v in m.dom.vertices:
            if m.vmap[v] != x.rng:
                continue
            count = sum(1 for e in m.dom.fiber(v) if m.emap[e.id] == x.id)
            if count != 1:
                f2 = ConditionResult(
                    False, witness=f"edge {x.id}, vertex {v}: {count} lifts"
                )
                break
        if not f2.passed:
            break

    cod_reg = classify(m.cod).reg
    regular_factor = ConditionResult(True)
    for v in m.dom.vertices:
        if m.vmap[v] in cod_reg and not m.dom.out_edges(v):
            regular_factor = ConditionResult(False, witness=f"vertex {v} emits no edge")
            break

    return FactorMapReport(f1, f2, regular_factor)


def equivalence_check(m: QuiverMorphism) -> bool:
    """Factor-map verdict == regular-morphism verdict (always, by theorem)."""
    _require_counting(m)
    factor_ok = check_factor_map(m).ok
    if not check_morphism(m).ok:
        regular_ok = False
    else:
        regular_ok = check_regular(m).ok
    return factor_ok == regular_ok
