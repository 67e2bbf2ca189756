"""Lower bounds on crossing counts from component counts of the resolved sum."""

from embsum.bounds import (
    ClassRep,
    component_gap_bound,
    min_components,
    weighted_crossing_bound,
)

# On an orientable surface the least number of components of an embedded
# representative is the divisibility of the class.
a = ClassRep((1, 2))
b = ClassRep((2, 1))
total = a + b
print("sum class %s has divisibility %d" % (total.free, total.div))
print("min components:", min_components(total))

# Resolving all crossings of connected representatives yields the sum with
# at most (crossings + 1) components, so the component count forces crossings.
print("gap bound for (1,2) x (2,1):", component_gap_bound(a, b))
print("gap bound for (1,4) x (4,1):",
      component_gap_bound(ClassRep((1, 4)), ClassRep((4, 1))))
print("gap bound for (1,0) x (0,1):",
      component_gap_bound(ClassRep((1, 0)), ClassRep((0, 1))))  # too few parts

# Weighted variant: take parallel copies before resolving.  (2, 1) copies of
# representatives of (0,5) and (10,0) give a fractional bound and its ceiling.
wb = weighted_crossing_bound(2, 1, ClassRep((0, 5)), ClassRep((10, 0)))
print("weighted bound (2,1) copies of (0,5), (10,0): %s -> %d" % wb)

# Non-orientable surfaces halve the count, and the two-torsion summand can
# add one back.
print("non-orientable (5,0):", min_components(ClassRep((5, 0), ambient_orientable=False)))
print("non-orientable (4,0) with torsion:",
      min_components(ClassRep((4, 0), sigma=True, ambient_orientable=False)))
