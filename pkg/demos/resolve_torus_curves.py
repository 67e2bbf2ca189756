"""Resolve the crossings of two torus curves and draw the result.

Writes resolution.svg and resolution.json next to this script.
"""

import os

from embsum.curvefile import resolution_to_dict, dumps_report
from embsum.svg import render_resolution_svg
from embsum.torus import geodesic_curve, resolve_crossings, wavy_curve

here = os.path.dirname(os.path.abspath(__file__))

c1 = geodesic_curve((1, 2), ident="steep")
c2 = wavy_curve((2, 1), base=(0.31, 0.17), ident="flat")
print("inputs: %s %s, %s %s" % (c1.ident, c1.homology_class(),
                                c2.ident, c2.homology_class()))

res = resolve_crossings(c1, c2)
print("crossings:", len(res.crossings))
print("signed sum:", sum(c.sign for c in res.crossings))
for curve in res.curves:
    print("  component %s in class %s" % (curve.ident, curve.homology_class()))

with open(os.path.join(here, "resolution.svg"), "w") as fh:
    fh.write(render_resolution_svg(res))
with open(os.path.join(here, "resolution.json"), "w") as fh:
    fh.write(dumps_report(resolution_to_dict(res)))
print("wrote resolution.svg and resolution.json")

# The abstract reconnection graph of the same resolution, for the component
# count machinery.
inst = res.graph_instance()
print("graph: %d crossings, %d arcs per side"
      % (len(inst["crossings"]), len(inst["side1_arcs"])))
