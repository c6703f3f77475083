"""Seeded random instances for property testing and the CLI.

Everything here is deterministic per seed.  Regular morphisms are built by
the cover construction: pick a codomain quiver, put a positive number of
vertices over each codomain vertex, lift every in-fiber bijectively with
its weights (which makes the fiber condition hold by construction), and
assign lifted-edge sources round-robin over the preimages of the edge
source so that vertices over regular vertices tend to emit edges.  The
round-robin does not always succeed, so the result is validated and the
generator retries with a derived seed; the retry limit being exceeded is
an internal error, not a user-facing condition.

Negative cases are targeted mutations of regular morphisms: dropping a
lifted edge breaks fiber surjectivity, merging (or duplicating) a lift
breaks fiber injectivity, and grafting a fresh sink over a regular vertex
breaks only the regular-vertex condition while keeping the fiber
condition intact.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .correspondence import EdgeVector, FiberBlockOperator, VertexFunction
from .morphisms import QuiverMorphism, check_regular
from .quivers import Edge, FiniteQuiver
from .scalars import ScalarQ

WEIGHT_POOL = (
    Fraction(1),
    Fraction(1),
    Fraction(1),
    Fraction(2),
    Fraction(1, 2),
    Fraction(3),
    Fraction(1, 3),
    Fraction(3, 2),
)

_SCALAR_POOL = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(1, 2),
    Fraction(-3, 2),
    Fraction(3),
)

_MAX_ATTEMPTS = 64


def _gen_quiver(rng: random.Random, max_vertices: int, max_edges: int,
                counting: bool) -> FiniteQuiver:
    n_v = rng.randint(1, max_vertices)
    vertices = tuple(f"v{i}" for i in range(n_v))
    n_e = rng.randint(0, max_edges)
    edges = []
    for i in range(n_e):
        weight = Fraction(1) if counting else rng.choice(WEIGHT_POOL)
        edges.append(Edge(f"e{i}", rng.choice(vertices), rng.choice(vertices), weight))
    return FiniteQuiver(vertices, tuple(edges))


def gen_quiver(seed: int, max_vertices: int = 8, max_edges: int = 16,
               counting: bool = False) -> FiniteQuiver:
    """A valid quiver, deterministic per seed."""
    if max_vertices < 1 or max_edges < 0:
        raise ValueError("bounds must be positive")
    return _gen_quiver(random.Random(seed), max_vertices, max_edges, counting)


def _cover_morphism(cod: FiniteQuiver, rng: random.Random,
                    max_cover: int) -> QuiverMorphism | None:
    """One cover attempt over ``cod``; None when round-robin missed (A3)."""
    k = {w: rng.randint(1, max_cover) for w in cod.vertices}
    dom_vertices = tuple(f"{w}.{i}" for w in cod.vertices for i in range(k[w]))
    vmap = {f"{w}.{i}": w for w in cod.vertices for i in range(k[w])}
    counters = {w: 0 for w in cod.vertices}
    edges = []
    emap = {}
    idx = 0
    for w in cod.vertices:
        for i in range(k[w]):
            v = f"{w}.{i}"
            for x in cod.fiber(w):
                pos = counters[x.src] % k[x.src]
                counters[x.src] += 1
                eid = f"d{idx}"
                idx += 1
                edges.append(Edge(eid, f"{x.src}.{pos}", v, x.weight))
                emap[eid] = x.id
    m = QuiverMorphism(FiniteQuiver(dom_vertices, tuple(edges)), cod, vmap, emap)
    return m if check_regular(m).ok else None


def gen_regular_morphism(seed: int, max_vertices: int = 8, max_edges: int = 16,
                         max_cover: int = 3, counting: bool = False) -> QuiverMorphism:
    """A morphism with an empty regularity report, deterministic per seed."""
    for attempt in range(_MAX_ATTEMPTS):
        rng = random.Random((seed << 6) + attempt)
        cod = _gen_quiver(rng, max_vertices, max_edges, counting)
        m = _cover_morphism(cod, rng, max_cover)
        if m is not None:
            return m
    raise RuntimeError("internal error: regular-morphism generator exhausted retries")


def gen_composable_pair(seed: int, max_vertices: int = 8, max_edges: int = 16,
                        max_cover: int = 2,
                        counting: bool = False) -> tuple[QuiverMorphism, QuiverMorphism]:
    """A pair ``(n, m)`` of regular morphisms with ``m.cod == n.dom``."""
    for attempt in range(_MAX_ATTEMPTS):
        rng = random.Random((seed << 6) + attempt)
        top = _gen_quiver(rng, max_vertices, max_edges, counting)
        n = _cover_morphism(top, rng, max_cover)
        if n is None:
            continue
        m = _cover_morphism(n.dom, rng, max_cover)
        if m is None:
            continue
        return n, m
    raise RuntimeError("internal error: composable-pair generator exhausted retries")


def gen_a2_broken_morphism(seed: int, max_vertices: int = 6, max_edges: int = 10,
                           max_cover: int = 3, counting: bool = False) -> QuiverMorphism:
    """A morphism whose squares commute but whose fiber condition fails."""
    for attempt in range(_MAX_ATTEMPTS):
        rng = random.Random((seed << 6) + attempt)
        cod = _gen_quiver(rng, max_vertices, max_edges, counting)
        base = _cover_morphism(cod, rng, max_cover)
        if base is None or not base.dom.edges:
            continue
        if rng.random() < 0.5:
            m = _drop_edge(base, rng)
        else:
            m = _merge_or_duplicate(base, rng)
        if not check_regular(m).a2_ok:
            return m
    raise RuntimeError("internal error: fiber-breaking generator exhausted retries")


def _drop_edge(base: QuiverMorphism, rng: random.Random) -> QuiverMorphism:
    dom = base.dom
    # prefer edges whose source keeps other out-edges, so only the fiber
    # condition breaks
    safe = [e for e in dom.edges if len(dom.out_edges(e.src)) > 1]
    victim = rng.choice(safe if safe else list(dom.edges))
    new_dom = FiniteQuiver(
        dom.vertices, tuple(e for e in dom.edges if e.id != victim.id)
    )
    emap = {e: x for e, x in base.emap.items() if e != victim.id}
    return QuiverMorphism(new_dom, base.cod, dict(base.vmap), emap)


def _merge_or_duplicate(base: QuiverMorphism, rng: random.Random) -> QuiverMorphism:
    dom, cod = base.dom, base.cod
    # merging two lifts is only a morphism when their targets share a
    # source; fall back to duplicating a lift, which breaks injectivity
    # just the same
    candidates = []
    for v in dom.vertices:
        fiber = dom.fiber(v)
        for i, e1 in enumerate(fiber):
            for e2 in fiber[i + 1 :]:
                x1, x2 = cod.edge(base.emap[e1.id]), cod.edge(base.emap[e2.id])
                if x1.id != x2.id and x1.src == x2.src:
                    candidates.append((e1, e2))
    if candidates:
        e1, e2 = rng.choice(candidates)
        emap = dict(base.emap)
        emap[e2.id] = base.emap[e1.id]
        return QuiverMorphism(dom, cod, dict(base.vmap), emap)
    lift = rng.choice([e for e in dom.edges])
    new_id = f"d{len(dom.edges)}"
    twin = Edge(new_id, lift.src, lift.rng, cod.edge(base.emap[lift.id]).weight)
    new_dom = FiniteQuiver(dom.vertices, dom.edges + (twin,))
    emap = dict(base.emap)
    emap[new_id] = base.emap[lift.id]
    return QuiverMorphism(new_dom, cod, dict(base.vmap), emap)


def gen_a3_broken_morphism(seed: int, max_vertices: int = 6, max_edges: int = 10,
                           max_cover: int = 3, counting: bool = False) -> QuiverMorphism:
    """Fiber condition intact, regular-vertex condition broken at one sink."""
    for attempt in range(_MAX_ATTEMPTS):
        rng = random.Random((seed << 6) + attempt)
        cod = _gen_quiver(rng, max_vertices, max_edges, counting)
        base = _cover_morphism(cod, rng, max_cover)
        if base is None:
            continue
        regular = [w for w in cod.vertices if cod.out_edges(w)]
        if not regular:
            continue
        w = rng.choice(regular)
        m = _graft_sink(base, w)
        report = check_regular(m)
        if report.a2_ok and not report.a3_ok:
            return m
    raise RuntimeError("internal error: sink-grafting generator exhausted retries")


def _graft_sink(base: QuiverMorphism, w: str) -> QuiverMorphism:
    dom, cod = base.dom, base.cod
    sink = "sink.0"
    vmap = dict(base.vmap)
    vmap[sink] = w
    preimages = {}
    for v in dom.vertices:
        preimages.setdefault(base.vmap[v], []).append(v)
    edges = list(dom.edges)
    emap = dict(base.emap)
    idx = len(edges)
    for x in cod.fiber(w):
        # source among the original preimages, never the grafted sink
        src = preimages[x.src][0]
        eid = f"d{idx}"
        idx += 1
        edges.append(Edge(eid, src, sink, x.weight))
        emap[eid] = x.id
    new_dom = FiniteQuiver(dom.vertices + (sink,), tuple(edges))
    return QuiverMorphism(new_dom, cod, vmap, emap)


# ---------------------------------------------------------------------------
# random module elements, for exercising exact identities


def random_scalar(rng: random.Random) -> ScalarQ:
    return ScalarQ(rng.choice(_SCALAR_POOL), rng.choice(_SCALAR_POOL))


def random_edge_vector(q: FiniteQuiver, rng: random.Random) -> EdgeVector:
    return EdgeVector(q, {e: random_scalar(rng) for e in q.edge_ids})


def random_vertex_function(q: FiniteQuiver, rng: random.Random) -> VertexFunction:
    return VertexFunction(q, {v: random_scalar(rng) for v in q.vertices})


def random_operator(q: FiniteQuiver, rng: random.Random) -> FiberBlockOperator:
    blocks = {}
    for v in q.vertices:
        n = len(q.fiber(v))
        if n:
            blocks[v] = tuple(
                tuple(random_scalar(rng) for _ in range(n)) for _ in range(n)
            )
    return FiberBlockOperator(q, blocks)
