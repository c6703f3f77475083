"""Pullback of a quiver morphism to the module/algebra level.

A quiver morphism ``m`` from ``E`` to ``F`` pulls vertex functions and
edge functions back in the other direction: ``mu0(f) = f ∘ vmap`` and
``mu1(xi) = xi ∘ emap``.  When the fiber condition (A2) holds this pair
is compatible with inner products and left actions (conditions C1 and C2),
it transports compact operators through their rank-one decompositions,
and it satisfies the two covariance conditions C3 and C4 as soon as (A3)
holds as well.  ``check_covariance`` verifies all four conditions on
basis elements with exact arithmetic and reports the first witness of
any failure.

C4 is checked by two independent routes that must agree: the scalar
identity ``mu1(f ∘ src) = mu0(f) ∘ src`` and the direct operator identity
comparing the two left actions.  A disagreement between the routes would
indicate an implementation bug, not a modelling ambiguity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .correspondence import (
    EdgeVector,
    FiberBlockOperator,
    VertexFunction,
    inner_product,
    module_actions,
    norm_sq,
    phi,
    rank_one_decompose,
    sigma,
    sum_thetas,
)
from .morphisms import QuiverMorphism, RegularityReport, check_morphism, check_regular
from .quivers import classify


@dataclass(frozen=True)
class ConditionResult:
    passed: bool
    witness: str | None = None
    note: str | None = None

    def to_obj(self):
        out = {"passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class CovarianceReport:
    c1: ConditionResult
    c2: ConditionResult
    c3: ConditionResult
    c4: ConditionResult

    @property
    def ok(self) -> bool:
        return all(c.passed for c in (self.c1, self.c2, self.c3, self.c4))

    def to_obj(self):
        return {
            "ok": self.ok,
            "c1": self.c1.to_obj(),
            "c2": self.c2.to_obj(),
            "c3": self.c3.to_obj(),
            "c4": self.c4.to_obj(),
        }


@dataclass(frozen=True)
class CorrMorphism:
    """Materialized pullback maps for a quiver morphism.

    ``vertex_matrix`` and ``edge_matrix`` are the 0/1 matrices of ``mu0``
    and ``mu1`` (rows indexed by the domain quiver, columns by the
    codomain quiver, both in list order).  The regularity report of the
    underlying morphism is computed once at build time.
    """

    morphism: QuiverMorphism
    regularity: RegularityReport
    vertex_matrix: tuple
    edge_matrix: tuple

    @property
    def dom(self):
        return self.morphism.dom

    @property
    def cod(self):
        return self.morphism.cod

    def mu0(self, f: VertexFunction) -> VertexFunction:
        """Pull a codomain vertex function back along the vertex map."""
        if f.quiver != self.cod:
            raise ValueError("function is indexed by the wrong quiver")
        vmap = self.morphism.vmap
        return VertexFunction(
            self.dom, {v: f.values[vmap[v]] for v in self.dom.vertices}
        )

    def mu1(self, xi: EdgeVector) -> EdgeVector:
        """Pull a codomain edge vector back along the edge map."""
        if xi.quiver != self.cod:
            raise ValueError("vector is indexed by the wrong quiver")
        emap = self.morphism.emap
        return EdgeVector(
            self.dom, {e.id: xi.values[emap[e.id]] for e in self.dom.edges}
        )


def build_corr_morphism(m: QuiverMorphism) -> CorrMorphism:
    """Materialize the pullback pair; requires only the commuting squares.

    Regularity is not required: C1 and C2 are meaningful for any morphism
    whose squares commute, and the stored regularity report lets callers
    gate the operator-level maps that do need (A2).
    """
    squares = check_morphism(m)
    if not squares.ok:
        raise ValueError("not a quiver morphism: commuting squares fail")
    regularity = check_regular(m)
    one, zero = Fraction(1), Fraction(0)
    vmat = tuple(
        tuple(one if m.vmap[v] == w else zero for w in m.cod.vertices)
        for v in m.dom.vertices
    )
    emat = tuple(
        tuple(one if m.emap[e.id] == x.id else zero for x in m.cod.edges)
        for e in m.dom.edges
    )
    return CorrMorphism(m, regularity, vmat, emat)


def mu1_super(cm: CorrMorphism, T: FiberBlockOperator) -> FiberBlockOperator:
    """Transport a codomain operator through its rank-one decomposition.

    Sends each rank-one piece ``theta(xi, eta)`` to
    ``theta(mu1(xi), mu1(eta))`` and sums; this is independent of the
    chosen decomposition exactly because (A2) makes the pullback compatible
    with inner products, so morphisms failing (A2) are rejected.
    """
    if T.quiver != cm.cod:
        raise ValueError("operator is indexed by the wrong quiver")
    if not cm.regularity.a2_ok:
        raise ValueError("operator transport undefined: (A2) fails")
    pairs = [(cm.mu1(xi), cm.mu1(eta)) for xi, eta in rank_one_decompose(T)]
    return sum_thetas(cm.dom, pairs)


def _through_src(f: VertexFunction) -> EdgeVector:
    q = f.quiver
    return EdgeVector(q, {e.id: f.values[e.src] for e in q.edges})


def check_covariance(cm: CorrMorphism) -> CovarianceReport:
    """Verify C1-C4 on basis elements; failures become witnessed entries."""
    dom, cod = cm.dom, cm.cod

    c1 = ConditionResult(True)
    for w in cod.vertices:
        f = VertexFunction.delta(cod, w)
        for x in cod.edge_ids:
            xi = EdgeVector.delta(cod, x)
            lhs = cm.mu1(module_actions(f, xi).left)
            rhs = module_actions(cm.mu0(f), cm.mu1(xi)).left
            if lhs != rhs:
                c1 = ConditionResult(False, witness=f"a=delta_{w}, xi=delta_{x}")
                break
        if not c1.passed:
            break

    c2 = ConditionResult(True)
    for x in cod.edge_ids:
        for y in cod.edge_ids:
            xi, eta = EdgeVector.delta(cod, x), EdgeVector.delta(cod, y)
            lhs = cm.mu0(inner_product(xi, eta))
            rhs = inner_product(cm.mu1(xi), cm.mu1(eta))
            if lhs != rhs:
                v = next(u for u in dom.vertices if lhs.values[u] != rhs.values[u])
                c2 = ConditionResult(
                    False, witness=f"xi=delta_{x}, eta=delta_{y} at vertex {v}"
                )
                break
        if not c2.passed:
            break

    dom_reg = classify(dom).reg
    cod_reg = classify(cod).reg
    c3 = ConditionResult(True)
    for v in dom.vertices:
        w = cm.morphism.vmap[v]
        if w in cod_reg and v not in dom_reg:
            c3 = ConditionResult(
                False,
                witness=f"a=delta_{w}: pullback is supported on non-regular vertex {v}",
            )
            break

    if not cm.regularity.a2_ok:
        c4 = ConditionResult(
            False, note="operator transport undefined: (A2) fails"
        )
    else:
        c4 = ConditionResult(True)
        for w in cod.vertices:
            if w not in cod_reg:
                continue
            f = VertexFunction.delta(cod, w)
            scalar_lhs = cm.mu1(_through_src(f))
            scalar_rhs = _through_src(cm.mu0(f))
            if scalar_lhs != scalar_rhs:
                c4 = ConditionResult(False, witness=f"a=delta_{w} (source-composition route)")
                break
            if phi(cm.mu0(f)) != mu1_super(cm, phi(f)):
                c4 = ConditionResult(False, witness=f"a=delta_{w} (operator route)")
                break

    return CovarianceReport(c1, c2, c3, c4)


def c4lemma_check(cm: CorrMorphism, g: EdgeVector) -> bool:
    """Exact equality of transported multiplication operators.

    Compares the rank-one transport of multiplication-by-``g`` on the
    codomain with multiplication by the pulled-back function on the
    domain.  Requires (A2); in the finite discrete model every ``g``
    satisfies the local-injectivity hypothesis, since the range map is
    injective on singletons.
    """
    if g.quiver != cm.cod:
        raise ValueError("vector is indexed by the wrong quiver")
    return mu1_super(cm, sigma(g)) == sigma(cm.mu1(g))


def contraction_check(cm: CorrMorphism, xi: EdgeVector) -> bool:
    """Pullback never increases the module norm (squared, exact)."""
    if xi.quiver != cm.cod:
        raise ValueError("vector is indexed by the wrong quiver")
    return norm_sq(cm.mu1(xi)) <= norm_sq(xi)
