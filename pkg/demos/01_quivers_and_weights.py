"""Build finite weighted quivers, validate them, and inspect their fibers.

A quiver is a finite directed multigraph whose edges carry strictly
positive rational weights.  The weights of the edges arriving at a vertex
form a measure on that in-fiber; positivity is exactly full support.
"""

from fractions import Fraction

from quiveralg import classify, in_fiber, make_quiver, validate

# A two-vertex quiver: a loop at `a` of weight 1/2, a heavier edge into `b`.
q = make_quiver(
    ["a", "b"],
    [
        ("loop", "a", "a", Fraction(1, 2)),
        ("hop", "a", "b", Fraction(3)),
    ],
)

print("validation:", "ok" if validate(q).ok else validate(q).violations)

c = classify(q)
print("sinks:    ", sorted(c.sinks))      # b emits nothing
print("regular:  ", sorted(c.reg))        # a emits, so it is regular
print("singular: ", sorted(c.sing))

for v in q.vertices:
    print(f"in-fiber of {v}:", in_fiber(q, v))

# Violations are reported, never raised: a zero weight kills full support.
broken = make_quiver(["a"], [("z", "a", "a", 0)])
print("zero-weight report:", validate(broken).violations)

# Dangling endpoints are caught the same way.
dangling = make_quiver(["a"], [("e", "a", "ghost", 1)])
print("dangling report:   ", validate(dangling).violations)
