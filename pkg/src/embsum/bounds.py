"""Component counts and crossing lower bounds for curve classes.

A class is an integer vector (its image in the free quotient of the first
homology of the surface) plus two flags: whether the ambient surface is
orientable, and, when it is not, whether the two-torsion summand is present.
The minimal number of connected components among embedded representatives
has a closed form in terms of the divisibility of the vector, and comparing
that count before and after resolving crossings yields lower bounds on how
many crossings two curves must have.

The same module holds the abstract arc-graph model of a resolution: arcs of
the two curves are vertices, each crossing contributes one edge per side,
and a reconnection choice at every ordinary crossing turns the double graph
into a bipartite graph whose connected components count the resolved curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ClassRep",
    "divisibility",
    "min_components",
    "component_gap_bound",
    "weighted_crossing_bound",
    "ArcGraph",
    "arc_graph",
    "resolved_edges",
    "resolved_components",
]


# ----------------------------------------------------------------------------
# Classes and the minimal-component formula
# ----------------------------------------------------------------------------

def divisibility(free):
    """gcd of the integer coordinates; 0 for the zero vector."""
    out = 0
    for v in free:
        out = math.gcd(out, abs(int(v)))
    return out


@dataclass(frozen=True)
class ClassRep:
    """Class in the codimension-1 homology of a surface.

    free: integer coordinates in a fixed basis of the free quotient;
    sigma: two-torsion summand present (only on non-orientable surfaces);
    ambient_orientable: whether the surface is orientable.
    """

    free: tuple
    sigma: bool = False
    ambient_orientable: bool = True

    def __post_init__(self):
        free = tuple(int(v) for v in self.free)
        if not free:
            raise ValueError("class needs at least one coordinate")
        if any(f != v for f, v in zip(free, self.free)):
            raise ValueError("class coordinates must be integers")
        object.__setattr__(self, "free", free)
        if self.ambient_orientable and self.sigma:
            raise ValueError("orientable surfaces have no torsion summand")

    def _compat(self, other):
        if len(self.free) != len(other.free):
            raise ValueError("classes live on different surfaces "
                             "(coordinate lengths %d and %d)"
                             % (len(self.free), len(other.free)))
        if self.ambient_orientable != other.ambient_orientable:
            raise ValueError("classes live on different surfaces "
                             "(orientability mismatch)")

    def __add__(self, other):
        self._compat(other)
        return ClassRep(
            free=tuple(a + b for a, b in zip(self.free, other.free)),
            sigma=self.sigma != other.sigma,
            ambient_orientable=self.ambient_orientable)

    def scale(self, n):
        """n times this class; the torsion part survives only for odd n."""
        n = int(n)
        return ClassRep(free=tuple(n * v for v in self.free),
                        sigma=self.sigma and n % 2 == 1,
                        ambient_orientable=self.ambient_orientable)

    @property
    def div(self):
        return divisibility(self.free)


def min_components(rep):
    """Least number of components of an embedded representative.

    Orientable surface: div.  Non-orientable without the torsion summand:
    floor(div / 2).  Non-orientable with the summand and even div:
    div / 2 + 1.  With the summand and odd div the class is a clean
    multiple of another primitive class, so the summand-free count applies.
    """
    d = rep.div
    if rep.ambient_orientable:
        return d
    if not rep.sigma or d % 2 == 1:
        return d // 2
    return d // 2 + 1


def component_gap_bound(rep1, rep2):
    """Crossing-count lower bound from the component count of the sum.

    Resolving all crossings of connected representatives of the two classes
    produces an embedded representative of the sum whose component count can
    exceed the crossing count by at most one, so when the sum needs C >= 3
    components any transversal pair meets at least C - 1 times.  Returns
    None when C < 3 (no information).
    """
    rep1._compat(rep2)
    c = min_components(rep1 + rep2)
    if c < 3:
        return None
    return c - 1


def weighted_crossing_bound(a, b, rep1, rep2):
    """Crossing bound from a weighted sum; exact rational plus its ceiling.

    Taking |a| near-parallel copies of the first curve and |b| of the second
    multiplies the crossing count by |ab| and adds at most min(|a|, |b|)
    extra components, so with C = min_components(a*rep1 + b*rep2) > |a|+|b|
    the original pair meets at least (C - min(|a|,|b|)) / |ab| times.
    Returns (Fraction, ceiling) or None when C <= |a| + |b|.
    """
    a = int(a)
    b = int(b)
    if a == 0 or b == 0:
        raise ValueError("weights must be nonzero")
    rep1._compat(rep2)
    c = min_components(rep1.scale(a) + rep2.scale(b))
    if c <= abs(a) + abs(b):
        return None
    bound = Fraction(c - min(abs(a), abs(b)), abs(a * b))
    return bound, math.ceil(bound)


# ----------------------------------------------------------------------------
# Arc graphs of resolutions
# ----------------------------------------------------------------------------

class _UnionFind:
    """Disjoint sets over hashable keys; path compression, union by size."""

    def __init__(self):
        self.parent = {}
        self.size = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]

    def n_components(self):
        return sum(1 for x in self.parent if self.parent[x] == x)


@dataclass
class ArcGraph:
    """Validated double graph of a crossing diagram.

    side1 and side2 list the arc identifiers of the two curves; crossings
    holds one record per crossing with, for each side, the ordered pair of
    adjacent arcs (incoming, outgoing) and a flag marking crossing
    components whose normal bundle within that side is non-trivial (such
    edges are loops on a single arc).
    """

    side1: list
    side2: list
    crossings: list

    def side_edges(self, side):
        """Edges of this side's subgraph, one (id, arcs, special) triple
        per crossing."""
        key = "side1" if side == 1 else "side2"
        return [(c["id"], tuple(c[key]["arcs"]), bool(c[key]["special"]))
                for c in self.crossings]


def arc_graph(instance):
    """Build and validate an ArcGraph from its JSON form.

    Expected shape::

        {"schema": 1,
         "side1_arcs": ["a0", ...],
         "side2_arcs": ["b0", ...],
         "crossings": [{"id": "m0",
                        "side1": {"arcs": ["a0", "a1"], "special": false},
                        "side2": {"arcs": ["b0", "b0"], "special": false}},
                       ...]}

    Every referenced arc must exist on its side, crossing ids must be
    unique, and a special side must be a loop (both arcs equal).
    """
    if not isinstance(instance, dict):
        raise ValueError("graph instance must be a mapping")
    if instance.get("schema") != 1:
        raise ValueError("unsupported graph schema %r" % (instance.get("schema"),))
    side1 = list(instance.get("side1_arcs", []))
    side2 = list(instance.get("side2_arcs", []))
    if not side1 or not side2:
        raise ValueError("both sides need at least one arc")
    if len(set(side1)) != len(side1) or len(set(side2)) != len(side2):
        raise ValueError("duplicate arc identifiers")
    crossings = []
    seen = set()
    for rec in instance.get("crossings", []):
        cid = rec.get("id")
        if cid in seen:
            raise ValueError("duplicate crossing id %r" % (cid,))
        seen.add(cid)
        parsed = {"id": cid}
        for key, arcs_known in (("side1", set(side1)), ("side2", set(side2))):
            part = rec.get(key)
            if not isinstance(part, dict) or "arcs" not in part:
                raise ValueError("crossing %r lacks %s arc data" % (cid, key))
            arcs = list(part["arcs"])
            if len(arcs) != 2:
                raise ValueError("crossing %r needs two %s arcs" % (cid, key))
            if any(a not in arcs_known for a in arcs):
                raise ValueError("crossing %r references unknown %s arc"
                                 % (cid, key))
            special = bool(part.get("special", False))
            if special and arcs[0] != arcs[1]:
                raise ValueError("special side of %r must be a loop" % (cid,))
            parsed[key] = {"arcs": arcs, "special": special}
        crossings.append(parsed)
    return ArcGraph(side1=side1, side2=side2, crossings=crossings)


def resolved_edges(graph, choices):
    """Reconnection edges between the two sides for the given choices.

    choices maps crossing id -> 0 or 1, supplied exactly for the crossings
    where neither side is special.  With side arcs (x1, x2) and (y1, y2),
    choice 0 joins x1-y1 and x2-y2; choice 1 joins x1-y2 and x2-y1.  A
    special side contributes its single arc to both edges; two special
    sides meet in one edge.
    """
    need = {c["id"] for c in graph.crossings
            if not c["side1"]["special"] and not c["side2"]["special"]}
    got = set(choices)
    if got != need:
        missing = sorted(need - got)
        extra = sorted(got - need)
        raise ValueError("choice keys mismatch (missing %r, extra %r)"
                         % (missing, extra))
    edges = []
    for c in graph.crossings:
        x1, x2 = c["side1"]["arcs"]
        y1, y2 = c["side2"]["arcs"]
        s1 = c["side1"]["special"]
        s2 = c["side2"]["special"]
        if s1 and s2:
            edges.append((x1, y1))
        elif s1:
            edges.append((x1, y1))
            edges.append((x1, y2))
        elif s2:
            edges.append((x1, y1))
            edges.append((x2, y1))
        else:
            choice = int(choices[c["id"]])
            if choice not in (0, 1):
                raise ValueError("choice for %r must be 0 or 1" % (c["id"],))
            if choice == 0:
                edges.append((x1, y1))
                edges.append((x2, y2))
            else:
                edges.append((x1, y2))
                edges.append((x2, y1))
    return edges


def resolved_components(graph, choices):
    """Connected components of the reconnected graph (resolved curves)."""
    uf = _UnionFind()
    for a in graph.side1:
        uf.add(("1", a))
    for b in graph.side2:
        uf.add(("2", b))
    for x, y in resolved_edges(graph, choices):
        uf.union(("1", x), ("2", y))
    return uf.n_components()
