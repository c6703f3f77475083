"""Weighted Cuntz-Krieger presentations and an exact degree-<=2 engine.

The generators-and-relations picture of a finite weighted quiver uses one
projection ``p_v`` per vertex and one partial-isometry symbol ``t_e`` per
edge, subject to

    (R1)  p_v p_w = [v=w] p_v,  p_v* = p_v
    (R2)  t_e* t_f = [e=f] weight(e) p_rng(e)
    (R3)  p_v t_e = [v=src(e)] t_e
    (R4)  t_e p_v = [v=rng(e)] t_e
    (R5)  p_v = sum over src(e)=v of weight(e)^-1 t_e t_e*  (v regular)

For weight-1 quivers these collapse to the classical Cuntz-Krieger
relations.  The full algebra is infinite dimensional, but every defining
relation and every generator image of an induced homomorphism lives in the
span of ``p_v``, ``t_e``, ``t_e*`` and the range-compatible products
``t_e t_f*``.  That span — the degree-<=2 fragment — is materialized here
as a finite-dimensional exact-coefficient vector space.

R1-R4 are orientable rewrite rules and reduction by them is confluent;
R5 is a genuine linear dependency, so equality in the fragment is
membership of a difference in the span of the R5 vectors.  Those vectors
have pairwise disjoint supports with unit pivots on the projections of
regular vertices, so the relation matrix is already in echelon form and
Gaussian elimination degenerates to one pivot subtraction per regular
vertex.

The grading puts ``p`` and ``t t*`` in degree 0, ``t`` in degree +1 and
``t*`` in degree -1; it mirrors the circle action that fixes the algebra
generators and rotates the module generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .morphisms import QuiverMorphism, check_regular
from .quivers import FiniteQuiver, classify
from .scalars import ScalarQ, as_scalar

_ZERO = ScalarQ()


class OutsideFragmentError(ValueError):
    """A product left the degree-<=2 fragment."""


# ---------------------------------------------------------------------------
# fragment elements


@dataclass(frozen=True)
class Deg2Element:
    """Exact linear combination of fragment basis symbols.

    Basis symbols are tuples: ``("P", v)``, ``("T", e)``, ``("S", e)`` for
    the adjoint of ``t_e``, and ``("TT", e, f)`` for ``t_e t_f*`` with
    ``rng(e) == rng(f)``.  Zero coefficients are never stored.
    """

    quiver: FiniteQuiver
    coeffs: Mapping[tuple, ScalarQ]

    def __post_init__(self):
        clean = {}
        for sym, c in self.coeffs.items():
            c = as_scalar(c)
            if c:
                _check_symbol(self.quiver, sym)
                clean[sym] = c
        object.__setattr__(self, "coeffs", clean)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Deg2Element") -> "Deg2Element":
        _same(self, other)
        out = dict(self.coeffs)
        for sym, c in other.coeffs.items():
            out[sym] = out.get(sym, _ZERO) + c
        return Deg2Element(self.quiver, out)

    def __sub__(self, other: "Deg2Element") -> "Deg2Element":
        return self + (-other)

    def __neg__(self) -> "Deg2Element":
        return Deg2Element(self.quiver, {s: -c for s, c in self.coeffs.items()})

    def scale(self, c) -> "Deg2Element":
        c = as_scalar(c)
        return Deg2Element(self.quiver, {s: c * x for s, x in self.coeffs.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, Deg2Element):
            return self.scale(other)
        _same(self, other)
        out: dict[tuple, ScalarQ] = {}
        for s1, c1 in self.coeffs.items():
            for s2, c2 in other.coeffs.items():
                for sym, c in _symbol_product(self.quiver, s1, s2):
                    prev = out.get(sym, _ZERO)
                    out[sym] = prev + c1 * c2 * c
        return Deg2Element(self.quiver, out)

    def adjoint(self) -> "Deg2Element":
        out = {}
        for sym, c in self.coeffs.items():
            out[_symbol_adjoint(sym)] = out.get(_symbol_adjoint(sym), _ZERO) + c.conjugate()
        return Deg2Element(self.quiver, out)

    def __str__(self):
        return format_deg2(self)


def _same(a: Deg2Element, b: Deg2Element) -> None:
    if a.quiver != b.quiver:
        raise ValueError("elements live over different quivers")


def _check_symbol(q: FiniteQuiver, sym: tuple) -> None:
    kind = sym[0]
    if kind == "P":
        if not q.has_vertex(sym[1]):
            raise ValueError(f"unknown vertex {sym[1]!r}")
    elif kind in ("T", "S"):
        if not q.has_edge(sym[1]):
            raise ValueError(f"unknown edge {sym[1]!r}")
    elif kind == "TT":
        _, e, f = sym
        if not q.has_edge(e) or not q.has_edge(f):
            raise ValueError(f"unknown edge in {sym!r}")
        if q.edge(e).rng != q.edge(f).rng:
            raise ValueError(f"{sym!r}: ranges differ, the product is zero, not a basis symbol")
    else:
        raise ValueError(f"unknown symbol kind {kind!r}")


def _symbol_adjoint(sym: tuple) -> tuple:
    kind = sym[0]
    if kind == "P":
        return sym
    if kind == "T":
        return ("S", sym[1])
    if kind == "S":
        return ("T", sym[1])
    return ("TT", sym[2], sym[1])


def _symbol_product(q: FiniteQuiver, a: tuple, b: tuple):
    """Product of two basis symbols as ``(symbol, scalar)`` pairs.

    Empty result means zero; products that leave the fragment raise.
    """
    ka, kb = a[0], b[0]
    one = Fraction(1)
    if ka == "P":
        v = a[1]
        if kb == "P":
            return [(a, one)] if v == b[1] else []
        if kb == "T":
            return [(b, one)] if v == q.edge(b[1]).src else []
        if kb == "S":
            return [(b, one)] if v == q.edge(b[1]).rng else []
        if kb == "TT":
            return [(b, one)] if v == q.edge(b[1]).src else []
    if ka == "T":
        e = a[1]
        if kb == "P":
            return [(a, one)] if b[1] == q.edge(e).rng else []
        if kb == "S":
            f = b[1]
            if q.edge(e).rng == q.edge(f).rng:
                return [(("TT", e, f), one)]
            return []
        raise OutsideFragmentError(f"t_{e} * {_fmt_symbol(b)} leaves the fragment")
    if ka == "S":
        e = a[1]
        if kb == "P":
            return [(a, one)] if b[1] == q.edge(e).src else []
        if kb == "T":
            f = b[1]
            if e == f:
                return [(("P", q.edge(e).rng), q.edge(e).weight)]
            return []
        if kb == "TT":
            _, f, g = b
            if e == f:
                return [(("S", g), q.edge(e).weight)]
            return []
        raise OutsideFragmentError(f"t_{e}* * {_fmt_symbol(b)} leaves the fragment")
    if ka == "TT":
        _, e, f = a
        if kb == "P":
            return [(a, one)] if b[1] == q.edge(f).src else []
        if kb == "T":
            if f == b[1]:
                return [(("T", e), q.edge(f).weight)]
            return []
        if kb == "TT":
            _, g, h = b
            if f == g:
                return [(("TT", e, h), q.edge(f).weight)]
            return []
        raise OutsideFragmentError(f"{_fmt_symbol(a)} * {_fmt_symbol(b)} leaves the fragment")
    raise ValueError(f"unknown symbol kinds {a!r}, {b!r}")


def proj(q: FiniteQuiver, v: str) -> Deg2Element:
    return Deg2Element(q, {("P", v): as_scalar(1)})


def isom(q: FiniteQuiver, e: str) -> Deg2Element:
    return Deg2Element(q, {("T", e): as_scalar(1)})


def isom_star(q: FiniteQuiver, e: str) -> Deg2Element:
    return Deg2Element(q, {("S", e): as_scalar(1)})


def zero(q: FiniteQuiver) -> Deg2Element:
    return Deg2Element(q, {})


# ---------------------------------------------------------------------------
# word reduction

_SHORTENING = {"pp", "pt", "ps", "tp", "sp", "st"}


def deg2_reduce(q: FiniteQuiver, word) -> Deg2Element:
    """Straighten a product of generator symbols into a fragment element.

    ``word`` is a sequence of symbols ``("p", v)``, ``("ps", v)``,
    ``("t", e)`` or ``("ts", e)``.  Adjacent pairs are contracted through
    R1-R4 until only an irreducible residue remains: a single generator or
    a range-compatible ``t t*`` pair.  Any other residue (for instance a
    genuine ``t t`` product) raises ``OutsideFragmentError``.  Reduction
    order does not matter: the rules implement associative products.
    """
    symbols = []
    for sym in word:
        kind = sym[0]
        if kind in ("p", "ps"):
            if not q.has_vertex(sym[1]):
                raise ValueError(f"unknown vertex {sym[1]!r}")
            symbols.append(("p", sym[1]))
        elif kind in ("t", "ts"):
            if not q.has_edge(sym[1]):
                raise ValueError(f"unknown edge {sym[1]!r}")
            symbols.append(("t" if kind == "t" else "s", sym[1]))
        else:
            raise ValueError(f"unknown generator symbol {sym!r}")
    if not symbols:
        raise ValueError("empty word")

    coeff = as_scalar(1)
    while True:
        reduced = False
        for i in range(len(symbols) - 1):
            a, b = symbols[i], symbols[i + 1]
            key = a[0] + b[0]
            if key not in _SHORTENING:
                continue
            replacement, factor = _contract(q, a, b)
            if replacement is None:
                return zero(q)
            coeff = coeff * factor
            symbols[i : i + 2] = [replacement]
            reduced = True
            break
        if not reduced:
            break

    if len(symbols) == 1:
        kind, x = symbols[0]
        sym = {"p": ("P", x), "t": ("T", x), "s": ("S", x)}[kind]
        return Deg2Element(q, {sym: coeff})
    if len(symbols) == 2 and symbols[0][0] == "t" and symbols[1][0] == "s":
        e, f = symbols[0][1], symbols[1][1]
        if q.edge(e).rng != q.edge(f).rng:
            return zero(q)
        return Deg2Element(q, {("TT", e, f): coeff})
    raise OutsideFragmentError(
        "word reduces to " + " ".join(_fmt_gen(s) for s in symbols)
        + ", outside deg-<=2 fragment"
    )


def _contract(q: FiniteQuiver, a, b):
    """One R1-R4 step on an adjacent pair; ``(None, _)`` means zero."""
    ka, kb = a[0], b[0]
    one = Fraction(1)
    if ka == "p" and kb == "p":
        return (a, one) if a[1] == b[1] else (None, one)
    if ka == "p" and kb == "t":
        return (b, one) if a[1] == q.edge(b[1]).src else (None, one)
    if ka == "p" and kb == "s":
        return (b, one) if a[1] == q.edge(b[1]).rng else (None, one)
    if ka == "t" and kb == "p":
        return (a, one) if b[1] == q.edge(a[1]).rng else (None, one)
    if ka == "s" and kb == "p":
        return (a, one) if b[1] == q.edge(a[1]).src else (None, one)
    if ka == "s" and kb == "t":
        if a[1] == b[1]:
            return (("p", q.edge(a[1]).rng), q.edge(a[1]).weight)
        return (None, one)
    raise AssertionError("not a shortening pair")


def reduce_side(q: FiniteQuiver, side) -> Deg2Element:
    """Reduce a formal sum of scalar-weighted words."""
    acc = zero(q)
    for c, word in side:
        acc = acc + deg2_reduce(q, word).scale(c)
    return acc


# ---------------------------------------------------------------------------
# equality modulo R5


def _r5_vector(q: FiniteQuiver, v: str) -> Deg2Element:
    coeffs = {("P", v): as_scalar(1)}
    for e in q.out_edges(v):
        coeffs[("TT", e.id, e.id)] = as_scalar(-(Fraction(1) / e.weight))
    return Deg2Element(q, coeffs)


def deg2_equal(q: FiniteQuiver, x: Deg2Element, y: Deg2Element) -> bool:
    """Equality in the quotient by the covariance relations.

    Decided by exact elimination of the difference against the R5 span;
    because the R5 vectors have disjoint supports with unit projection
    pivots, a single pass over regular vertices is a complete reduction.
    """
    if x.quiver != q or y.quiver != q:
        raise ValueError("elements live over different quivers")
    diff = x - y
    for v in classify(q).reg:
        c = diff.coeffs.get(("P", v))
        if c:
            diff = diff - _r5_vector(q, v).scale(c)
    return diff.is_zero


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Relation:
    """One defining relation, stored as unreduced words.

    ``lhs`` is a word (tuple of generator symbols); ``rhs`` is a formal sum
    of ``(rational coefficient, word)`` terms, empty when the right side
    is zero.  Keeping the words unreduced is what makes substitution under
    a generator map a meaningful check.
    """

    kind: str
    label: str
    lhs: tuple
    rhs: tuple

    def to_obj(self):
        return {"kind": self.kind, "relation": self.label}


@dataclass(frozen=True)
class Presentation:
    quiver: FiniteQuiver
    relations: tuple

    @property
    def projections(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def isometries(self) -> tuple[str, ...]:
        return self.quiver.edge_ids

    def lines(self) -> list[str]:
        return [r.label for r in self.relations]

    def to_obj(self):
        return {
            "projections": [f"p_{v}" for v in self.projections],
            "isometries": [f"t_{e}" for e in self.isometries],
            "relations": [r.to_obj() for r in self.relations],
        }


def emit_presentation(q: FiniteQuiver) -> Presentation:
    """All defining relations of the weighted presentation, in canonical order."""
    reg = classify(q).reg
    rels = []
    for v in q.vertices:
        for w in q.vertices:
            lhs = (("p", v), ("p", w))
            rhs = ((Fraction(1), (("p", v),)),) if v == w else ()
            rels.append(Relation("R1", _label(lhs, rhs), lhs, rhs))
    for v in q.vertices:
        lhs = (("ps", v),)
        rhs = ((Fraction(1), (("p", v),)),)
        rels.append(Relation("R1*", _label(lhs, rhs), lhs, rhs))
    for e in q.edges:
        for f in q.edges:
            lhs = (("ts", e.id), ("t", f.id))
            rhs = ((e.weight, (("p", e.rng),)),) if e.id == f.id else ()
            rels.append(Relation("R2", _label(lhs, rhs), lhs, rhs))
    for v in q.vertices:
        for e in q.edges:
            lhs = (("p", v), ("t", e.id))
            rhs = ((Fraction(1), (("t", e.id),)),) if v == e.src else ()
            rels.append(Relation("R3", _label(lhs, rhs), lhs, rhs))
    for e in q.edges:
        for v in q.vertices:
            lhs = (("t", e.id), ("p", v))
            rhs = ((Fraction(1), (("t", e.id),)),) if v == e.rng else ()
            rels.append(Relation("R4", _label(lhs, rhs), lhs, rhs))
    for v in q.vertices:
        if v not in reg:
            continue
        lhs = (("p", v),)
        rhs = tuple(
            (Fraction(1) / e.weight, (("t", e.id), ("ts", e.id)))
            for e in q.out_edges(v)
        )
        rels.append(Relation("R5", _label(lhs, rhs), lhs, rhs))
    return Presentation(q, tuple(rels))


def _fmt_gen(sym) -> str:
    kind, x = sym
    if kind in ("p",):
        return f"p_{x}"
    if kind == "ps":
        return f"p_{x}*"
    if kind == "t":
        return f"t_{x}"
    return f"t_{x}*"


def _fmt_symbol(sym) -> str:
    kind = sym[0]
    if kind == "P":
        return f"p_{sym[1]}"
    if kind == "T":
        return f"t_{sym[1]}"
    if kind == "S":
        return f"t_{sym[1]}*"
    return f"t_{sym[1]} t_{sym[2]}*"


def _fmt_coeff(c: Fraction) -> str:
    if c == 1:
        return ""
    if c.denominator == 1:
        return f"{c.numerator} "
    return f"({c.numerator}/{c.denominator}) "


def _label(lhs, rhs) -> str:
    left = " ".join(_fmt_gen(s) for s in lhs)
    if not rhs:
        return f"{left} = 0"
    right = " + ".join(
        _fmt_coeff(c) + " ".join(_fmt_gen(s) for s in word) for c, word in rhs
    )
    return f"{left} = {right}"


def format_deg2(x: Deg2Element) -> str:
    if x.is_zero:
        return "0"
    order = {"P": 0, "T": 1, "S": 2, "TT": 3}
    terms = []
    for sym in sorted(x.coeffs, key=lambda s: (order[s[0]], s[1:])):
        c = x.coeffs[sym]
        if c == ScalarQ(Fraction(1)):
            terms.append(_fmt_symbol(sym))
        else:
            terms.append(f"({c}) {_fmt_symbol(sym)}")
    return " + ".join(terms)


# ---------------------------------------------------------------------------
# induced generator homomorphism


@dataclass(frozen=True)
class GeneratorMap:
    """Generator-level homomorphism induced by a regular morphism.

    Contravariant: a morphism into a codomain quiver sends each codomain
    generator to the sum of its preimages' generators in the domain
    fragment — projections to projection sums, isometries to isometry
    sums, both degree homogeneous.
    """

    morphism: QuiverMorphism

    def _vertex_preimages(self, w: str) -> tuple[str, ...]:
        return tuple(v for v in self.morphism.dom.vertices if self.morphism.vmap[v] == w)

    def _edge_preimages(self, x: str) -> tuple[str, ...]:
        return tuple(
            e.id for e in self.morphism.dom.edges if self.morphism.emap[e.id] == x
        )

    def on_projection(self, w: str) -> Deg2Element:
        if not self.morphism.cod.has_vertex(w):
            raise ValueError(f"unknown vertex {w!r}")
        q = self.morphism.dom
        return Deg2Element(q, {("P", v): as_scalar(1) for v in self._vertex_preimages(w)})

    def on_isometry(self, x: str) -> Deg2Element:
        if not self.morphism.cod.has_edge(x):
            raise ValueError(f"unknown edge {x!r}")
        q = self.morphism.dom
        return Deg2Element(q, {("T", e): as_scalar(1) for e in self._edge_preimages(x)})

    def image_of_word(self, word) -> Deg2Element:
        """Image of a product of generator symbols, multiplied in the fragment."""
        out = None
        for sym in word:
            kind, x = sym
            if kind == "p":
                img = self.on_projection(x)
            elif kind == "ps":
                img = self.on_projection(x).adjoint()
            elif kind == "t":
                img = self.on_isometry(x)
            elif kind == "ts":
                img = self.on_isometry(x).adjoint()
            else:
                raise ValueError(f"unknown generator symbol {sym!r}")
            out = img if out is None else out * img
        if out is None:
            raise ValueError("empty word")
        return out

    def image_of_side(self, side) -> Deg2Element:
        acc = zero(self.morphism.dom)
        for c, word in side:
            acc = acc + self.image_of_word(word).scale(c)
        return acc

    def apply(self, elem: Deg2Element) -> Deg2Element:
        """Extend the generator map linearly to the whole codomain fragment."""
        if elem.quiver != self.morphism.cod:
            raise ValueError("element lives over the wrong quiver")
        acc = zero(self.morphism.dom)
        for sym, c in elem.coeffs.items():
            kind = sym[0]
            if kind == "P":
                img = self.on_projection(sym[1])
            elif kind == "T":
                img = self.on_isometry(sym[1])
            elif kind == "S":
                img = self.on_isometry(sym[1]).adjoint()
            else:
                img = self.on_isometry(sym[1]) * self.on_isometry(sym[2]).adjoint()
            acc = acc + img.scale(c)
        return acc

    def lines(self) -> list[str]:
        out = []
        for w in self.morphism.cod.vertices:
            out.append(f"p_{w} -> {format_deg2(self.on_projection(w))}")
        for x in self.morphism.cod.edge_ids:
            out.append(f"t_{x} -> {format_deg2(self.on_isometry(x))}")
        return out

    def to_obj(self):
        return {
            "projections": {
                w: sorted(self._vertex_preimages(w)) for w in self.morphism.cod.vertices
            },
            "isometries": {
                x: sorted(self._edge_preimages(x)) for x in self.morphism.cod.edge_ids
            },
        }


def induced_map(m: QuiverMorphism) -> GeneratorMap:
    """The generator homomorphism of a regular morphism; rejects others."""
    report = check_regular(m)
    if not report.ok:
        raise ValueError("morphism is not regular; no induced homomorphism")
    return GeneratorMap(m)


@dataclass(frozen=True)
class InducedReport:
    """Per-relation verdicts for the substituted codomain presentation."""

    entries: tuple
    internal_errors: tuple

    @property
    def ok(self) -> bool:
        return not self.internal_errors and all(passed for _, passed in self.entries)

    def failures(self) -> list[str]:
        return [label for label, passed in self.entries if not passed]

    def to_obj(self):
        return {
            "ok": self.ok,
            "checked": len(self.entries),
            "failures": self.failures(),
            "internal_errors": list(self.internal_errors),
        }


def verify_induced(m: QuiverMorphism) -> InducedReport:
    """Substitute generator images into every codomain relation and decide
    each one in the domain fragment modulo R5."""
    gm = induced_map(m)
    pres = emit_presentation(m.cod)
    dom = m.dom
    entries = []
    internal = []
    for rel in pres.relations:
        try:
            lhs = gm.image_of_word(rel.lhs)
            rhs = gm.image_of_side(rel.rhs)
        except OutsideFragmentError as exc:
            internal.append(f"{rel.label}: {exc}")
            continue
        entries.append((rel.label, deg2_equal(dom, lhs, rhs)))
    return InducedReport(tuple(entries), tuple(internal))


_DEGREES = {"P": 0, "TT": 0, "T": 1, "S": -1}


def grading(x: Deg2Element):
    """Degree of a homogeneous element, or ``"mixed"``.

    Projections and ``t t*`` products have degree 0, isometries degree +1,
    their adjoints degree -1.  The zero element is reported as degree 0.
    """
    degrees = {_DEGREES[sym[0]] for sym in x.coeffs}
    if not degrees:
        return 0
    if len(degrees) == 1:
        return degrees.pop()
    return "mixed"
