"""The Hilbert-module correspondence of a finite weighted quiver, exactly.

Functions on the vertex set form a *-algebra ``A``; functions on the edge
set form a right Hilbert ``A``-module ``X`` with the weighted inner product

    <xi, eta>(v) = sum over the in-fiber of v of conj(xi(e)) eta(e) w(e).

``A`` acts on the left through the source map and on the right through the
range map.  Because everything is finite dimensional, every ``A``-linear
operator on ``X`` is adjointable and compact, and ``A``-linearity is the
same as being block diagonal over the in-fibers — which is how operators
are stored here.  Vertices with an empty in-fiber carry no block, so the
left action has an honest kernel: functions supported on sinks act as zero.

All arithmetic is exact; the only floating-point value in the module is
the reporting-only norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple

from .quivers import FiniteQuiver, classify, validate
from .scalars import ScalarQ, as_scalar

_ZERO = ScalarQ()
_ONE = ScalarQ(Fraction(1))


def _complete(values, ids, kind) -> dict[str, ScalarQ]:
    out = {i: _ZERO for i in ids}
    for k, v in values.items():
        if k not in out:
            raise ValueError(f"unknown {kind} id {k!r}")
        out[k] = as_scalar(v)
    return out


@dataclass(frozen=True)
class VertexFunction:
    """An element of the vertex algebra: one exact scalar per vertex."""

    quiver: FiniteQuiver
    values: Mapping[str, ScalarQ]

    def __post_init__(self):
        object.__setattr__(
            self, "values", _complete(self.values, self.quiver.vertices, "vertex")
        )

    @classmethod
    def zero(cls, q: FiniteQuiver) -> "VertexFunction":
        return cls(q, {})

    @classmethod
    def delta(cls, q: FiniteQuiver, v: str, value=1) -> "VertexFunction":
        return cls(q, {v: as_scalar(value)})

    @classmethod
    def constant(cls, q: FiniteQuiver, value=1) -> "VertexFunction":
        c = as_scalar(value)
        return cls(q, {v: c for v in q.vertices})

    def __getitem__(self, v: str) -> ScalarQ:
        return self.values[v]

    def __add__(self, other: "VertexFunction") -> "VertexFunction":
        _same_quiver(self, other)
        return VertexFunction(
            self.quiver, {v: self.values[v] + other.values[v] for v in self.values}
        )

    def __sub__(self, other: "VertexFunction") -> "VertexFunction":
        _same_quiver(self, other)
        return VertexFunction(
            self.quiver, {v: self.values[v] - other.values[v] for v in self.values}
        )

    def __neg__(self) -> "VertexFunction":
        return VertexFunction(self.quiver, {v: -x for v, x in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, VertexFunction):
            _same_quiver(self, other)
            return VertexFunction(
                self.quiver, {v: self.values[v] * other.values[v] for v in self.values}
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "VertexFunction":
        c = as_scalar(c)
        return VertexFunction(self.quiver, {v: c * x for v, x in self.values.items()})

    def conjugate(self) -> "VertexFunction":
        return VertexFunction(
            self.quiver, {v: x.conjugate() for v, x in self.values.items()}
        )

    def support(self) -> tuple[str, ...]:
        return tuple(v for v in self.quiver.vertices if self.values[v])

    @property
    def is_zero(self) -> bool:
        return not any(self.values.values())


@dataclass(frozen=True)
class EdgeVector:
    """An element of the edge module: one exact scalar per edge."""

    quiver: FiniteQuiver
    values: Mapping[str, ScalarQ]

    def __post_init__(self):
        object.__setattr__(
            self, "values", _complete(self.values, self.quiver.edge_ids, "edge")
        )

    @classmethod
    def zero(cls, q: FiniteQuiver) -> "EdgeVector":
        return cls(q, {})

    @classmethod
    def delta(cls, q: FiniteQuiver, e: str, value=1) -> "EdgeVector":
        return cls(q, {e: as_scalar(value)})

    def __getitem__(self, e: str) -> ScalarQ:
        return self.values[e]

    def __add__(self, other: "EdgeVector") -> "EdgeVector":
        _same_quiver(self, other)
        return EdgeVector(
            self.quiver, {e: self.values[e] + other.values[e] for e in self.values}
        )

    def __sub__(self, other: "EdgeVector") -> "EdgeVector":
        _same_quiver(self, other)
        return EdgeVector(
            self.quiver, {e: self.values[e] - other.values[e] for e in self.values}
        )

    def __neg__(self) -> "EdgeVector":
        return EdgeVector(self.quiver, {e: -x for e, x in self.values.items()})

    def __mul__(self, other):
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "EdgeVector":
        c = as_scalar(c)
        return EdgeVector(self.quiver, {e: c * x for e, x in self.values.items()})

    def support(self) -> tuple[str, ...]:
        return tuple(e for e in self.quiver.edge_ids if self.values[e])

    @property
    def is_zero(self) -> bool:
        return not any(self.values.values())


def _same_quiver(a, b) -> None:
    if a.quiver != b.quiver:
        raise ValueError("elements are indexed by different quivers")


def inner_product(xi: EdgeVector, eta: EdgeVector) -> VertexFunction:
    """Weighted inner product, conjugate linear in the first argument."""
    _same_quiver(xi, eta)
    q = xi.quiver
    values = {}
    for v in q.vertices:
        acc = _ZERO
        for e in q.fiber(v):
            acc = acc + xi.values[e.id].conjugate() * eta.values[e.id] * e.weight
        values[v] = acc
    return VertexFunction(q, values)


class ModuleActions(NamedTuple):
    left: EdgeVector
    right: EdgeVector


def module_actions(f: VertexFunction, xi: EdgeVector) -> ModuleActions:
    """Left action through the source map, right action through the range map."""
    _same_quiver(f, xi)
    q = xi.quiver
    left = {e.id: f.values[e.src] * xi.values[e.id] for e in q.edges}
    right = {e.id: xi.values[e.id] * f.values[e.rng] for e in q.edges}
    return ModuleActions(EdgeVector(q, left), EdgeVector(q, right))


def norm(xi: EdgeVector) -> float:
    """sup-over-vertices of sqrt(<xi,xi>(v)).  Reporting only: the maximum
    is taken over exact rationals and only the final square root floats."""
    sq = norm_sq(xi)
    return math.sqrt(sq)


def norm_sq(xi: EdgeVector) -> Fraction:
    """Exact squared norm: the largest diagonal inner-product value."""
    diag = inner_product(xi, xi)
    return max((diag.values[v].re for v in xi.quiver.vertices), default=Fraction(0))


@dataclass(frozen=True)
class FiberBlockOperator:
    """A block-diagonal operator: one square matrix per non-empty in-fiber.

    Rows and columns of the block at ``v`` are indexed by the in-fiber of
    ``v`` in edge-list order.  The block structure makes commutation with
    the right action automatic, and the adjoint is the weighted conjugate
    transpose ``W^-1 M† W`` with ``W`` the diagonal of fiber weights.
    """

    quiver: FiniteQuiver
    blocks: Mapping[str, tuple]

    def __post_init__(self):
        q = self.quiver
        fixed = {}
        for v in q.vertices:
            n = len(q.fiber(v))
            if n == 0:
                continue
            block = self.blocks.get(v)
            if block is None:
                fixed[v] = _zero_block(n)
            else:
                rows = tuple(tuple(as_scalar(x) for x in row) for row in block)
                if len(rows) != n or any(len(r) != n for r in rows):
                    raise ValueError(f"block at {v!r} must be {n}x{n}")
                fixed[v] = rows
        for v in self.blocks:
            if v not in fixed:
                raise ValueError(f"block at {v!r}: vertex unknown or fiber empty")
        object.__setattr__(self, "blocks", fixed)

    def block(self, v: str) -> tuple:
        return self.blocks[v]

    def entry(self, e: str, f: str) -> ScalarQ:
        """Matrix entry at a pair of edges with a common range vertex."""
        q = self.quiver
        v = q.edge(e).rng
        if q.edge(f).rng != v:
            raise ValueError("entries exist only for edges with a common range")
        return self.blocks[v][q.fiber_position(e)][q.fiber_position(f)]

    def apply(self, xi: EdgeVector) -> EdgeVector:
        if xi.quiver != self.quiver:
            raise ValueError("vector is indexed by the wrong quiver")
        q = self.quiver
        values = {}
        for v, block in self.blocks.items():
            fiber = q.fiber(v)
            for i, e in enumerate(fiber):
                acc = _ZERO
                for j, f in enumerate(fiber):
                    acc = acc + block[i][j] * xi.values[f.id]
                values[e.id] = acc
        return EdgeVector(q, values)

    def __add__(self, other: "FiberBlockOperator") -> "FiberBlockOperator":
        _same_quiver(self, other)
        return FiberBlockOperator(
            self.quiver,
            {
                v: tuple(
                    tuple(a + b for a, b in zip(ra, rb))
                    for ra, rb in zip(self.blocks[v], other.blocks[v])
                )
                for v in self.blocks
            },
        )

    def __sub__(self, other: "FiberBlockOperator") -> "FiberBlockOperator":
        return self + (-other)

    def __neg__(self) -> "FiberBlockOperator":
        return FiberBlockOperator(
            self.quiver,
            {v: tuple(tuple(-x for x in row) for row in b) for v, b in self.blocks.items()},
        )

    def scale(self, c) -> "FiberBlockOperator":
        c = as_scalar(c)
        return FiberBlockOperator(
            self.quiver,
            {v: tuple(tuple(c * x for x in row) for row in b) for v, b in self.blocks.items()},
        )

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other: "FiberBlockOperator") -> "FiberBlockOperator":
        """Operator composition, blockwise matrix product."""
        _same_quiver(self, other)
        out = {}
        for v, a in self.blocks.items():
            b = other.blocks[v]
            n = len(a)
            out[v] = tuple(
                tuple(
                    sum((a[i][k] * b[k][j] for k in range(n)), start=_ZERO)
                    for j in range(n)
                )
                for i in range(n)
            )
        return FiberBlockOperator(self.quiver, out)

    def adjoint(self) -> "FiberBlockOperator":
        q = self.quiver
        out = {}
        for v, block in self.blocks.items():
            w = [e.weight for e in q.fiber(v)]
            n = len(w)
            out[v] = tuple(
                tuple(block[j][i].conjugate() * (w[j] / w[i]) for j in range(n))
                for i in range(n)
            )
        return FiberBlockOperator(q, out)

    @property
    def is_zero(self) -> bool:
        return all(not x for b in self.blocks.values() for row in b for x in row)


def _zero_block(n: int) -> tuple:
    return tuple(tuple(_ZERO for _ in range(n)) for _ in range(n))


def zero_operator(q: FiniteQuiver) -> FiberBlockOperator:
    return FiberBlockOperator(q, {})


def identity_operator(q: FiniteQuiver) -> FiberBlockOperator:
    blocks = {}
    for v in q.vertices:
        n = len(q.fiber(v))
        if n:
            blocks[v] = tuple(
                tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)
            )
    return FiberBlockOperator(q, blocks)


class _BlockAccumulator:
    """Mutable scratch space for summing many rank-one operators cheaply."""

    def __init__(self, q: FiniteQuiver):
        self.q = q
        self.blocks = {
            v: [[_ZERO] * len(q.fiber(v)) for _ in q.fiber(v)]
            for v in q.vertices
            if q.fiber(v)
        }

    def add_rank_one(self, xi: EdgeVector, eta: EdgeVector) -> None:
        q = self.q
        by_rng: dict[str, list] = {}
        for f in eta.support():
            by_rng.setdefault(q.edge(f).rng, []).append(f)
        for e in xi.support():
            v = q.edge(e).rng
            i = q.fiber_position(e)
            block = self.blocks[v]
            for f in by_rng.get(v, ()):
                j = q.fiber_position(f)
                block[i][j] = block[i][j] + (
                    xi.values[e] * eta.values[f].conjugate() * q.edge(f).weight
                )

    def result(self) -> FiberBlockOperator:
        return FiberBlockOperator(
            self.q, {v: tuple(tuple(row) for row in b) for v, b in self.blocks.items()}
        )


def theta(xi: EdgeVector, eta: EdgeVector) -> FiberBlockOperator:
    """The rank-one operator sending ``zeta`` to ``xi * <eta, zeta>``."""
    _same_quiver(xi, eta)
    acc = _BlockAccumulator(xi.quiver)
    acc.add_rank_one(xi, eta)
    return acc.result()


def sum_thetas(q: FiniteQuiver, pairs) -> FiberBlockOperator:
    """Sum of rank-one operators for an iterable of ``(xi, eta)`` pairs."""
    acc = _BlockAccumulator(q)
    for xi, eta in pairs:
        if xi.quiver != q or eta.quiver != q:
            raise ValueError("pair is indexed by the wrong quiver")
        acc.add_rank_one(xi, eta)
    return acc.result()


def sigma(g: EdgeVector) -> FiberBlockOperator:
    """Multiplication by an edge function, as a diagonal block operator."""
    q = g.quiver
    blocks = {}
    for v in q.vertices:
        fiber = q.fiber(v)
        if fiber:
            blocks[v] = tuple(
                tuple(g.values[e.id] if i == j else _ZERO for j, _ in enumerate(fiber))
                for i, e in enumerate(fiber)
            )
    return FiberBlockOperator(q, blocks)


def phi(f: VertexFunction) -> FiberBlockOperator:
    """Left action of a vertex function: multiplication by ``f ∘ src``."""
    q = f.quiver
    return sigma(EdgeVector(q, {e.id: f.values[e.src] for e in q.edges}))


def rank_one_decompose(T: FiberBlockOperator) -> list[tuple[EdgeVector, EdgeVector]]:
    """Write ``T`` as a sum of rank-one operators, one per nonzero entry.

    The entry at ``(x, y)`` contributes the pair
    ``(T[x,y] * delta_x, delta_y / weight(y))``; summing the rank-one
    operators of all pairs reproduces ``T`` exactly.
    """
    q = T.quiver
    pairs = []
    for v in q.vertices:
        fiber = q.fiber(v)
        if not fiber:
            continue
        block = T.blocks[v]
        for i, x in enumerate(fiber):
            for j, y in enumerate(fiber):
                c = block[i][j]
                if c:
                    pairs.append(
                        (
                            EdgeVector.delta(q, x.id, c),
                            EdgeVector.delta(q, y.id, Fraction(1) / y.weight),
                        )
                    )
    return pairs


def ideal_JX(q: FiniteQuiver) -> frozenset:
    """Vertices whose indicator functions lie in the covariance ideal.

    A vertex function acts compactly always (finite dimensions) and is
    orthogonal to the kernel of the left action exactly when it vanishes
    on sinks, so the ideal is spanned by the regular vertices.
    """
    report = validate(q)
    if not report.ok:
        raise ValueError(f"invalid quiver: {'; '.join(report.violations)}")
    return classify(q).reg
