"""Quiver morphisms: commuting squares, regularity, and composition.

A morphism is a vertex map and an edge map commuting with sources and
ranges.  It is regular when, over each vertex, the edge map restricts to a
weight-preserving bijection of in-fibers (A2) and vertices over regular
vertices are regular (A3); properness (A1) is automatic for finite spaces.
"""

from quiveralg import (
    QuiverMorphism,
    check_morphism,
    check_regular,
    compose,
    identity,
    make_quiver,
    pushforward,
)

loop = make_quiver(["u"], [("l", "u", "u", 1)])
two_cycle = make_quiver(["a", "b"], [("e1", "a", "b", 1), ("e2", "b", "a", 1)])

# Fold the two-cycle onto the loop.
fold = QuiverMorphism(
    dom=two_cycle, cod=loop,
    vmap={"a": "u", "b": "u"},
    emap={"e1": "l", "e2": "l"},
)

print("squares commute:", check_morphism(fold).ok)
report = check_regular(fold)
print("regular:", report.ok, "|", report.a1_note)

# The pushforward of the fiber measure at `a` lands exactly on the loop
# fiber's weights - the brute-force form of condition (A2).
print("pushforward at a:", pushforward(fold, "a"))

# A failing example: the single arrow cannot cover the loop.
arrow = make_quiver(["a", "b"], [("e", "a", "b", 1)])
squash = QuiverMorphism(arrow, loop, {"a": "u", "b": "u"}, {"e": "l"})
bad = check_regular(squash)
for f in bad.a2_failures:
    print(f"A2 fails at {f.vertex}: {f.reason}")

# Regular morphisms compose; the identity is the unit.
wrap = QuiverMorphism(
    dom=make_quiver(
        ["v0", "v1", "v2", "v3"],
        [(f"f{i}", f"v{i}", f"v{(i + 1) % 4}", 1) for i in range(4)],
    ),
    cod=two_cycle,
    vmap={"v0": "a", "v1": "b", "v2": "a", "v3": "b"},
    emap={"f0": "e1", "f1": "e2", "f2": "e1", "f3": "e2"},
)
both = compose(fold, wrap)
print("composite regular:", check_regular(both).ok)
print("identity law:", compose(fold, identity(two_cycle)) == fold)
