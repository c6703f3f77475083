"""The weighted edge module: inner products, actions, and block operators.

Edge functions form a right module over vertex functions, with an inner
product that integrates conjugate products against the fiber weights.
Operators commuting with the right action are block diagonal over the
in-fibers; all of them are sums of rank-one operators and everything here
is exact.
"""

from fractions import Fraction

from quiveralg import (
    EdgeVector,
    VertexFunction,
    ideal_JX,
    identity_operator,
    inner_product,
    make_quiver,
    module_actions,
    norm,
    norm_sq,
    phi,
    rank_one_decompose,
    sum_thetas,
    theta,
)

# One vertex, one loop of weight 2: the module is one dimensional but the
# weight shows up everywhere.
wloop = make_quiver(["u"], [("l", "u", "u", 2)])
d = EdgeVector.delta(wloop, "l")

print("<d,d>(u) =", inner_product(d, d)["u"])      # the weight: 2
print("norm^2   =", norm_sq(d), " norm ~", norm(d))

# Left action goes through sources, right action through ranges.
arrow = make_quiver(["a", "b"], [("e", "a", "b", 1)])
f = VertexFunction.delta(arrow, "a")
left, right = module_actions(f, EdgeVector.delta(arrow, "e"))
print("left action support: ", left.support())     # src(e) = a, so it acts
print("right action support:", right.support())    # rng(e) = b, so it kills

# Rank-one operators theta(xi, eta): zeta -> xi * <eta, zeta>.
t = theta(d, d)
print("theta block at u:", t.block("u"))           # [[2]] - the weight again

# Adjoints use the weighted conjugate transpose; rank-one adjoints swap legs.
print("theta* == theta(d,d)* :", t.adjoint() == theta(d, d))

# Every operator decomposes exactly into weighted matrix units.
pairs = rank_one_decompose(identity_operator(wloop))
for xi, eta in pairs:
    print("identity = theta(", dict(xi.values), ",", dict(eta.values), ")")
print("reconstruction exact:", sum_thetas(wloop, pairs) == identity_operator(wloop))

# The left action of a vertex indicator is diagonal over out-edges ...
print("phi(delta_a) block at b:", phi(VertexFunction.delta(arrow, "a")).block("b"))

# ... and the covariance ideal is spanned by the regular vertices.
print("ideal vertices of the arrow:", sorted(ideal_JX(arrow)))
print("ideal of an edgeless quiver:", sorted(ideal_JX(make_quiver(["x"], []))))
