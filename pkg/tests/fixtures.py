"""Small named quivers and morphisms used across the test suite."""

from quiveralg import QuiverMorphism, make_quiver

# one vertex, one loop of weight 1
LOOP = make_quiver(["u"], [("l", "u", "u", 1)])

# one vertex, one loop of weight 2
WLOOP = make_quiver(["u"], [("l", "u", "u", 2)])

# a -> b, weight 1; b is a sink
ARROW = make_quiver(["a", "b"], [("e", "a", "b", 1)])

# two-cycle a -> b -> a
TWO_CYCLE = make_quiver(["a", "b"], [("e1", "a", "b", 1), ("e2", "b", "a", 1)])

# four-cycle v0 -> v1 -> v2 -> v3 -> v0
FOUR_CYCLE = make_quiver(
    ["v0", "v1", "v2", "v3"],
    [(f"f{i}", f"v{i}", f"v{(i + 1) % 4}", 1) for i in range(4)],
)

# a emits a loop and an edge into the sink b
FORK = make_quiver(["a", "b"], [("g1", "a", "a", 1), ("g2", "a", "b", 1)])

# fold the two-cycle onto the loop: regular
COLLAPSE = QuiverMorphism(
    dom=TWO_CYCLE, cod=LOOP,
    vmap={"a": "u", "b": "u"}, emap={"e1": "l", "e2": "l"},
)

# arrow onto loop: fiber of a is empty but the loop fiber is not (A2 fails)
ARROW_TO_LOOP = QuiverMorphism(
    dom=ARROW, cod=LOOP,
    vmap={"a": "u", "b": "u"}, emap={"e": "l"},
)

# fork onto loop: fibers match but the sink b sits over the regular vertex u
# (A3 fails, A2 holds)
FORK_TO_LOOP = QuiverMorphism(
    dom=FORK, cod=LOOP,
    vmap={"a": "u", "b": "u"}, emap={"g1": "l", "g2": "l"},
)

# wrap the four-cycle twice around the two-cycle: regular
MOD2 = QuiverMorphism(
    dom=FOUR_CYCLE, cod=TWO_CYCLE,
    vmap={"v0": "a", "v1": "b", "v2": "a", "v3": "b"},
    emap={"f0": "e1", "f1": "e2", "f2": "e1", "f3": "e2"},
)
