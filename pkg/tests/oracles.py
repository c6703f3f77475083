"""Independent brute-force oracles the library's answers are checked against.

These stay deliberately naive: plain Gaussian elimination over Fractions,
definition-chasing set computations, and dense matrix products.  They never
call the code paths they are used to verify.
"""

from fractions import Fraction

from quiveralg import FiniteQuiver, VertexFunction, phi


def nullspace(rows, ncols):
    """Basis of the exact kernel of a matrix given as a list of rows."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(vec)
    return basis


def jx_vertices_by_kernel(q: FiniteQuiver) -> frozenset:
    """The covariance-ideal vertex set straight from its definition.

    Enumerate the kernel of the left action by exact elimination, then keep
    the vertices whose indicator annihilates every kernel basis vector.
    Acting compactly is automatic in finite dimensions, so it contributes
    no constraint.
    """
    matrix = [
        [Fraction(1) if e.src == v else Fraction(0) for v in q.vertices]
        for e in q.edges
    ]
    kernel = nullspace(matrix, len(q.vertices))
    # sanity: kernel vectors really do act as zero on the left
    for vec in kernel:
        f = VertexFunction(q, {v: c for v, c in zip(q.vertices, vec)})
        assert phi(f).is_zero
    out = set()
    for i, v in enumerate(q.vertices):
        if all(vec[i] == 0 for vec in kernel):
            out.add(v)
    return frozenset(out)


def matmul(a, b):
    """Dense exact matrix product of row-major tuples/lists."""
    if not a or not b:
        return tuple(() for _ in a)
    n, k, m = len(a), len(b), len(b[0])
    assert all(len(row) == k for row in a)
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(k)), start=a[i][0] * 0)
              for j in range(m))
        for i in range(n)
    )


def pushforward_then_pushforward(n, m, v):
    """Chain two pushforwards by hand, for the functoriality check."""
    first = {}
    for e in m.dom.fiber(v):
        x = m.emap[e.id]
        first[x] = first.get(x, Fraction(0)) + e.weight
    second = {}
    for x, mass in first.items():
        z = n.emap[x]
        second[z] = second.get(z, Fraction(0)) + mass
    return second
