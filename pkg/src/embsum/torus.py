"""Closed curves on the flat square torus and their oriented resolution.

A curve is stored as a lift: a polyline in the plane whose final vertex is
the first one shifted by an integer vector.  That vector is the homology
class of the curve in the standard basis of the torus, and all geometry
(crossings, distances, resolution) is computed by scanning segment pairs over
the finitely many integer translates whose bounding boxes can interact.

The oriented resolution replaces every transversal crossing by two short
straight connector segments ("chamfers") that join the incoming strand of
each curve to the outgoing strand of the other one.  That pairing is the
unique one compatible with the orientations, and the resulting closed curves
represent the sum of the two input classes.  Outside the chamfer balls the
input geometry is kept verbatim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "GeometryError",
    "NonTransversalError",
    "TorusCurve",
    "Crossing",
    "Resolution",
    "torus_dist",
    "find_crossings",
    "resolve_crossings",
    "orientation_consistent",
    "parallel_copies",
    "count_components",
    "geodesic_curve",
    "wavy_curve",
]

DEFAULT_ANGLE_MIN = 1e-3   # radians; crossings below this are non-transversal
_ENDPOINT_TOL = 1e-9       # distance scale for endpoint/overlap detection
_PARALLEL_SIN = 1e-9       # |sin| below which segment lines count as parallel


class GeometryError(ValueError):
    """Geometric rejection: invalid curve, chamfer too large, collision."""


class NonTransversalError(GeometryError):
    """Curves touch tangentially, at an endpoint, or along a sub-segment."""


def _cross(a, b):
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def torus_dist(a, b):
    """Distance on the unit torus between point arrays (..., 2)."""
    d = np.asarray(a, dtype=float) - np.asarray(b, dtype=float)
    d = d - np.round(d)
    return np.linalg.norm(d, axis=-1)


# ----------------------------------------------------------------------------
# Curves
# ----------------------------------------------------------------------------

@dataclass
class TorusCurve:
    """Closed oriented curve as a plane lift with integer displacement.

    vertices has shape (m+1, 2); the last vertex must equal the first plus
    an integer vector (the homology class).  Consecutive vertices must be
    distinct and, unless validate=False, the projected curve must be
    embedded: no self-crossings, endpoint touches, or overlaps among the
    integer translates of its segments.
    """

    vertices: np.ndarray
    ident: str = "c"
    validate: bool = True
    oriented: bool = True

    def __post_init__(self):
        V = np.array(self.vertices, dtype=float)
        if V.ndim != 2 or V.shape[1] != 2 or V.shape[0] < 2:
            raise GeometryError("curve needs an (m+1, 2) vertex array, m >= 1")
        disp = V[-1] - V[0]
        disp_int = np.round(disp)
        if np.max(np.abs(disp - disp_int)) > 1e-9:
            raise GeometryError("lift is not closed: displacement %r is not "
                                "an integer vector" % (disp,))
        V[-1] = V[0] + disp_int
        seg_len = np.linalg.norm(np.diff(V, axis=0), axis=1)
        if np.min(seg_len) < 1e-7:
            raise GeometryError("curve has a segment shorter than 1e-7")
        self.vertices = V
        if self.validate:
            _check_embedded(V, disp_int.astype(int))

    @property
    def displacement(self):
        return (self.vertices[-1] - self.vertices[0]).round().astype(int)

    def homology_class(self):
        """Integer class (p, q) read off the lift displacement."""
        d = self.displacement
        return int(d[0]), int(d[1])

    @property
    def n_segments(self):
        return self.vertices.shape[0] - 1

    def segment_arrays(self):
        return self.vertices[:-1], self.vertices[1:]

    def reversed(self, ident=None):
        return TorusCurve(self.vertices[::-1].copy(),
                          ident=ident or self.ident, validate=False,
                          oriented=self.oriented)

    def point_at(self, seg, t):
        """Lift point at parameter t in [0, 1] along segment seg."""
        V = self.vertices
        return (1.0 - t) * V[seg] + t * V[seg + 1]


# ----------------------------------------------------------------------------
# Segment-pair scanning over integer translates
# ----------------------------------------------------------------------------

def _translate_range(VA, VB, pad=1e-6):
    """Integer translates k for which bbox(A) can meet bbox(B) + k."""
    loA, hiA = VA.min(axis=0), VA.max(axis=0)
    loB, hiB = VB.min(axis=0), VB.max(axis=0)
    lo = np.ceil(loA - hiB - pad).astype(int)
    hi = np.floor(hiA - loB + pad).astype(int)
    ks = [(kx, ky)
          for kx in range(lo[0], hi[0] + 1)
          for ky in range(lo[1], hi[1] + 1)]
    return ks


def _candidate_pairs(P0, P1, Q0, Q1, pad=1e-6):
    """Index pairs whose segment bounding boxes overlap (after Q shift)."""
    loP = np.minimum(P0, P1)
    hiP = np.maximum(P0, P1)
    loQ = np.minimum(Q0, Q1)
    hiQ = np.maximum(Q0, Q1)
    ok = np.ones((P0.shape[0], Q0.shape[0]), dtype=bool)
    for ax in range(2):
        ok &= loP[:, None, ax] <= hiQ[None, :, ax] + pad
        ok &= hiP[:, None, ax] >= loQ[None, :, ax] - pad
    return np.nonzero(ok)


# Contact kinds.
_NONE, _PROPER, _TOUCH, _OVERLAP = 0, 1, 2, 3


def _classify(P0, P1, Q0, Q1, endpoint_tol):
    """Classify contacts between paired segment batches (n, 2) each.

    Returns (kind, s, u, den, ldot) arrays where s, u parametrize the contact
    on the P and Q segments, den = cross(dP, dQ) carries the crossing sign,
    and ldot = dot(dP, dQ) distinguishes parallel continuation from fold-back.
    """
    d1 = P1 - P0
    d2 = Q1 - Q0
    r = Q0 - P0
    L1 = np.linalg.norm(d1, axis=-1)
    L2 = np.linalg.norm(d2, axis=-1)
    den = _cross(d1, d2)
    ldot = np.sum(d1 * d2, axis=-1)
    sin_ang = np.abs(den) / (L1 * L2)

    kind = np.zeros(P0.shape[0], dtype=int)
    s = np.full(P0.shape[0], np.nan)
    u = np.full(P0.shape[0], np.nan)

    es = endpoint_tol / L1
    eu = endpoint_tol / L2

    nonpar = sin_ang >= _PARALLEL_SIN
    if np.any(nonpar):
        dn = np.where(nonpar, den, 1.0)
        s_np = _cross(r, d2) / dn
        u_np = _cross(r, d1) / dn
        inside = (nonpar
                  & (s_np > -es) & (s_np < 1.0 + es)
                  & (u_np > -eu) & (u_np < 1.0 + eu))
        at_end = (inside & ((np.abs(s_np) <= es) | (np.abs(s_np - 1.0) <= es)
                            | (np.abs(u_np) <= eu) | (np.abs(u_np - 1.0) <= eu)))
        proper = inside & ~at_end
        kind[proper] = _PROPER
        kind[at_end] = _TOUCH
        s = np.where(inside, s_np, s)
        u = np.where(inside, u_np, u)

    par = ~nonpar
    if np.any(par):
        # Perpendicular offset of the Q line from the P line.
        off = np.abs(_cross(d1, r)) / L1
        collinear = par & (off <= endpoint_tol)
        if np.any(collinear):
            t0 = np.sum((Q0 - P0) * d1, axis=-1) / (L1 * L1)
            t1 = np.sum((Q1 - P0) * d1, axis=-1) / (L1 * L1)
            lo = np.maximum(0.0, np.minimum(t0, t1))
            hi = np.minimum(1.0, np.maximum(t0, t1))
            ov_len = (hi - lo) * L1
            overlap = collinear & (ov_len > endpoint_tol)
            touch = collinear & ~overlap & (ov_len >= -endpoint_tol)
            kind[overlap] = _OVERLAP
            kind[touch] = _TOUCH
            sc = 0.5 * (lo + hi)
            contact = P0 + sc[:, None] * d1
            uc = np.sum((contact - Q0) * d2, axis=-1) / (L2 * L2)
            s = np.where(touch | overlap, sc, s)
            u = np.where(touch | overlap, uc, u)

    return kind, s, u, den, ldot


def _check_embedded(V, disp):
    """Raise GeometryError unless the projected closed polyline is embedded."""
    P0, P1 = V[:-1], V[1:]
    m = P0.shape[0]
    for k in _translate_range(V, V):
        kv = np.array(k, dtype=float)
        Q0 = P0 + kv
        Q1 = P1 + kv
        ii, jj = _candidate_pairs(P0, P1, Q0, Q1)
        if ii.size == 0:
            continue
        keep = ~((ii == jj) & (k == (0, 0)))
        ii, jj = ii[keep], jj[keep]
        if ii.size == 0:
            continue
        kind, s, u, _, _ = _classify(P0[ii], P1[ii], Q0[jj], Q1[jj],
                                     _ENDPOINT_TOL)
        hit = kind != _NONE
        if not np.any(hit):
            continue
        for idx in np.nonzero(hit)[0]:
            i, j = int(ii[idx]), int(jj[idx])
            # Consecutive segments share one vertex; the shared corner is the
            # only contact an embedded curve allows.
            fwd_k = tuple(disp) if i == m - 1 else (0, 0)
            rev_k = tuple(-disp) if j == m - 1 else (0, 0)
            if j == (i + 1) % m and k == fwd_k and kind[idx] == _TOUCH \
                    and abs(s[idx] - 1.0) < 1e-6 and abs(u[idx]) < 1e-6:
                continue
            if i == (j + 1) % m and k == rev_k and kind[idx] == _TOUCH \
                    and abs(s[idx]) < 1e-6 and abs(u[idx] - 1.0) < 1e-6:
                continue
            raise GeometryError(
                "curve is not embedded: segments %d and %d (translate %r) "
                "make contact of kind %d" % (i, j, k, int(kind[idx])))


# ----------------------------------------------------------------------------
# Crossings
# ----------------------------------------------------------------------------

@dataclass
class Crossing:
    """One transversal intersection of two torus curves.

    The crossing lies at parameter t1 on segment seg1 of the first curve's
    lift and at t2 on seg2 of the second one's; the first lift point equals
    the second plus the integer vector ``shift``.  sign is the sign of
    det(tangent1, tangent2) and angle the unsigned crossing angle.
    """

    point: np.ndarray
    seg1: int
    t1: float
    seg2: int
    t2: float
    shift: tuple
    sign: int
    angle: float
    ident: str = ""


def find_crossings(c1, c2, angle_min=DEFAULT_ANGLE_MIN,
                   endpoint_tol=_ENDPOINT_TOL):
    """All torus intersections of two embedded curves, as Crossing records.

    Raises NonTransversalError if any contact is tangential (angle below
    angle_min), hits a segment endpoint, or runs along a shared sub-segment.
    Crossings are sorted along the first curve and labeled m0, m1, ...
    """
    P0, P1 = c1.segment_arrays()
    Q0b, Q1b = c2.segment_arrays()
    found = []
    for k in _translate_range(c1.vertices, c2.vertices):
        kv = np.array(k, dtype=float)
        Q0 = Q0b + kv
        Q1 = Q1b + kv
        ii, jj = _candidate_pairs(P0, P1, Q0, Q1)
        if ii.size == 0:
            continue
        kind, s, u, den, _ = _classify(P0[ii], P1[ii], Q0[jj], Q1[jj],
                                       endpoint_tol)
        for idx in np.nonzero(kind != _NONE)[0]:
            i, j = int(ii[idx]), int(jj[idx])
            if kind[idx] == _TOUCH:
                raise NonTransversalError(
                    "segment endpoint lies on the other curve "
                    "(segments %d/%d, translate %r)" % (i, j, k))
            if kind[idx] == _OVERLAP:
                raise NonTransversalError(
                    "curves overlap along segments %d/%d (translate %r)"
                    % (i, j, k))
            d1 = P1[ii[idx]] - P0[ii[idx]]
            d2 = Q1[jj[idx]] - Q0[jj[idx]]
            sin_ang = abs(den[idx]) / (np.linalg.norm(d1) * np.linalg.norm(d2))
            angle = float(np.arcsin(min(sin_ang, 1.0)))
            if angle < angle_min:
                raise NonTransversalError(
                    "crossing angle %.2e below floor %.2e" % (angle, angle_min))
            pt = P0[ii[idx]] + s[idx] * d1
            found.append(Crossing(
                point=np.mod(pt, 1.0), seg1=i, t1=float(s[idx]),
                seg2=j, t2=float(u[idx]), shift=(int(k[0]), int(k[1])),
                sign=int(np.sign(den[idx])), angle=angle))
    found.sort(key=lambda c: (c.seg1, c.t1))
    for n, c in enumerate(found):
        c.ident = "m%d" % n
    return found


def orientation_consistent(c1, c2, angle_min=DEFAULT_ANGLE_MIN):
    """(all crossing signs equal, list of signs along the first curve).

    A uniform sign means the tangent frames of the two curves induce the
    same plane orientation at every crossing, the condition under which the
    resolved sum also carries compatible co-orientation data.  Disjoint
    curves are vacuously consistent.
    """
    signs = [c.sign for c in find_crossings(c1, c2, angle_min=angle_min)]
    return len(set(signs)) <= 1, signs


# ----------------------------------------------------------------------------
# Oriented resolution
# ----------------------------------------------------------------------------

@dataclass
class Resolution:
    """Output of ``resolve_crossings``.

    curves: the resolved closed curves (pairwise disjoint, embedded);
    provenance: per curve, one source tag per vertex;
    strands: the pre-stitching strand soup (arcs plus chamfer connectors),
    each an (n, 2) lift polyline whose endpoints match on the torus;
    crossing_arcs: per crossing, the (in, out) arc indices on both sides,
    enough to rebuild the abstract arc graph of the resolution.
    """

    curves: list
    provenance: list
    crossings: list
    chamfer: float
    strands: list
    crossing_arcs: list
    inputs: tuple = field(default=())

    def graph_instance(self):
        """Abstract arc-graph instance of this resolution (JSON-able)."""
        m = len(self.crossings)
        n_arcs = m if m else 1
        inst = {
            "schema": 1,
            "side1_arcs": ["a%d" % j for j in range(n_arcs)],
            "side2_arcs": ["b%d" % j for j in range(n_arcs)],
            "crossings": [],
        }
        for cr, arcs in zip(self.crossings, self.crossing_arcs):
            inst["crossings"].append({
                "id": cr.ident,
                "side1": {"arcs": ["a%d" % arcs["side1"][0],
                                   "a%d" % arcs["side1"][1]],
                          "special": False},
                "side2": {"arcs": ["b%d" % arcs["side2"][0],
                                   "b%d" % arcs["side2"][1]],
                          "special": False},
            })
        return inst

    def graph_choices(self):
        """Reconnection pattern realized by the oriented resolution.

        With each side's arcs listed (in, out), the oriented chamfers join
        in(1)-out(2) and in(2)-out(1): pattern 1 at every crossing.
        """
        return {cr.ident: 1 for cr in self.crossings}


def resolve_crossings(c1, c2, chamfer=None, angle_min=DEFAULT_ANGLE_MIN):
    """Oriented resolution of all crossings of two embedded torus curves.

    Every crossing is cut open at lift distance ``chamfer`` along both
    strands and reconnected so each incoming strand continues into the other
    curve's outgoing strand.  The default chamfer is a quarter of the
    minimum crossing separation, clamped below every segment clearance; an
    explicit value is validated against both limits.  Disjoint inputs pass
    through unchanged.  The resolved class is the sum of the input classes.
    """
    crossings = find_crossings(c1, c2, angle_min=angle_min)
    if not crossings:
        curves = [TorusCurve(c1.vertices.copy(), ident="r0", validate=False),
                  TorusCurve(c2.vertices.copy(), ident="r1", validate=False)]
        prov = [_passthrough_tags(c1, "input1"), _passthrough_tags(c2, "input2")]
        return Resolution(curves=curves, provenance=prov, crossings=[],
                          chamfer=0.0, strands=[c1.vertices.copy(),
                                                c2.vertices.copy()],
                          crossing_arcs=[], inputs=(c1, c2))

    pts = np.array([c.point for c in crossings])
    if len(crossings) > 1:
        dmat = torus_dist(pts[:, None, :], pts[None, :, :])
        np.fill_diagonal(dmat, np.inf)
        min_sep = float(dmat.min())
    else:
        min_sep = np.inf

    len1 = np.linalg.norm(np.diff(c1.vertices, axis=0), axis=1)
    len2 = np.linalg.norm(np.diff(c2.vertices, axis=0), axis=1)
    clear = min(
        min(min(c.t1, 1.0 - c.t1) * len1[c.seg1] for c in crossings),
        min(min(c.t2, 1.0 - c.t2) * len2[c.seg2] for c in crossings))

    if chamfer is None:
        chamfer = min(0.25 * min_sep, 0.9 * clear)
    else:
        chamfer = float(chamfer)
        if chamfer <= 0.0:
            raise GeometryError("chamfer must be positive")
        if chamfer >= 0.5 * min_sep:
            raise GeometryError(
                "chamfer %.3g reaches halfway to the nearest other crossing "
                "(min separation %.3g)" % (chamfer, min_sep))
        if chamfer >= clear:
            raise GeometryError(
                "chamfer %.3g exceeds a segment clearance (min %.3g)"
                % (chamfer, clear))

    return _stitch(c1, c2, crossings, chamfer)


def _passthrough_tags(c, src):
    return [{"src": src, "seg": min(i, c.n_segments - 1), "cut": False}
            for i in range(c.vertices.shape[0])]


def _unrolled_vertex(c, k):
    m = c.n_segments
    disp = c.displacement.astype(float)
    return c.vertices[k % m] + (k // m) * disp


def _arc_vertices(c, src, a_seg, a_t, b_seg, b_t, dt_a, dt_b):
    """Polyline from the out-cut after (a_seg, a_t) to the in-cut before
    (b_seg, b_t), following the curve; wraps one period when needed."""
    m = c.n_segments
    disp = c.displacement.astype(float)
    start = c.point_at(a_seg, a_t + dt_a)
    wrap = (b_seg, b_t) <= (a_seg, a_t)
    end_seg = b_seg + (m if wrap else 0)
    end = c.point_at(b_seg, b_t - dt_b) + (disp if wrap else 0.0)
    verts = [start]
    tags = [{"src": src, "seg": a_seg, "cut": True}]
    for k in range(a_seg + 1, end_seg + 1):
        verts.append(_unrolled_vertex(c, k))
        tags.append({"src": src, "seg": k % m, "cut": False})
    verts.append(end)
    tags.append({"src": src, "seg": b_seg, "cut": True})
    return np.array(verts), tags


def _stitch(c1, c2, crossings, chamfer):
    m = len(crossings)
    curves = [c1, c2]
    srcs = ["input1", "input2"]
    len_by_curve = [np.linalg.norm(np.diff(c.vertices, axis=0), axis=1)
                    for c in curves]

    # Per-curve crossing order and cut-parameter widths.
    locs = [[(c.seg1, c.t1) for c in crossings],
            [(c.seg2, c.t2) for c in crossings]]
    orders = [sorted(range(m), key=lambda i: locs[side][i])
              for side in range(2)]
    oidx = [{} , {}]
    for side in range(2):
        for pos, ci in enumerate(orders[side]):
            oidx[side][ci] = pos
    dts = [[chamfer / len_by_curve[side][locs[side][ci][0]] for ci in range(m)]
           for side in range(2)]

    # Arcs: arc (side, j) runs from the out-cut of the j-th crossing along
    # the curve to the in-cut of the (j+1)-th.
    arcs = {}
    arc_tags = {}
    for side in range(2):
        for j in range(m):
            ca = orders[side][j]
            cb = orders[side][(j + 1) % m]
            a_seg, a_t = locs[side][ca]
            b_seg, b_t = locs[side][cb]
            verts, tags = _arc_vertices(curves[side], srcs[side],
                                        a_seg, a_t, b_seg, b_t,
                                        dts[side][ca], dts[side][cb])
            arcs[(side, j)] = verts
            arc_tags[(side, j)] = tags

    # Chamfer connectors, both written in the first curve's lift frame.
    in_cut = {}
    out_cut = {}
    for ci, cr in enumerate(crossings):
        shift = np.array(cr.shift, dtype=float)
        in_cut[(0, ci)] = curves[0].point_at(cr.seg1, cr.t1 - dts[0][ci])
        out_cut[(0, ci)] = curves[0].point_at(cr.seg1, cr.t1 + dts[0][ci])
        in_cut[(1, ci)] = curves[1].point_at(cr.seg2, cr.t2 - dts[1][ci]) + shift
        out_cut[(1, ci)] = curves[1].point_at(cr.seg2, cr.t2 + dts[1][ci]) + shift
    chamfers = {}
    for ci in range(m):
        chamfers[(0, ci)] = np.array([in_cut[(0, ci)], out_cut[(1, ci)]])
        chamfers[(1, ci)] = np.array([in_cut[(1, ci)], out_cut[(0, ci)]])

    # Trace cycles: arc (side, j) -> chamfer at its terminal crossing ->
    # arc (other side, order index there).
    unused = {(side, j) for side in range(2) for j in range(m)}
    out_curves = []
    out_prov = []
    while unused:
        start = min(unused)
        cycle_verts = None
        cycle_tags = []
        cur = start
        while True:
            unused.discard(cur)
            side, j = cur
            averts = arcs[cur]
            atags = arc_tags[cur]
            if cycle_verts is None:
                cycle_verts = [averts[0]]
                cycle_tags.append(atags[0])
                shift = np.zeros(2)
            else:
                shift = np.round(cycle_verts[-1] - averts[0])
                if np.linalg.norm(cycle_verts[-1] - (averts[0] + shift)) > 1e-6:
                    raise GeometryError("strand endpoints failed to align")
            cycle_verts.extend(averts[1:] + shift)
            cycle_tags.extend(atags[1:])
            ci = orders[side][(j + 1) % m]
            cham = chamfers[(side, ci)]
            shift = np.round(cycle_verts[-1] - cham[0])
            if np.linalg.norm(cycle_verts[-1] - (cham[0] + shift)) > 1e-6:
                raise GeometryError("chamfer endpoints failed to align")
            nxt = (1 - side, oidx[1 - side][ci])
            if nxt == start:
                nxt_start = arcs[nxt][0]
                last = cham[1] + shift
                kshift = np.round(last - nxt_start)
                if np.linalg.norm(last - (nxt_start + kshift)) > 1e-6:
                    raise GeometryError("cycle failed to close")
                cycle_verts.append(last)
                cycle_tags.append(arc_tags[nxt][0])
                break
            cycle_verts.append(cham[1] + shift)
            cycle_tags.append(arc_tags[nxt][0])
            cur = nxt
        verts = np.array(cycle_verts)
        out_curves.append(TorusCurve(verts, ident="r%d" % len(out_curves)))
        out_prov.append(cycle_tags)

    _check_disjoint(out_curves)

    strands = [arcs[(side, j)] for side in range(2) for j in range(m)]
    strands += [chamfers[(side, ci)] for side in range(2) for ci in range(m)]
    crossing_arcs = []
    for ci in range(m):
        crossing_arcs.append({
            "side1": ((oidx[0][ci] - 1) % m, oidx[0][ci]),
            "side2": ((oidx[1][ci] - 1) % m, oidx[1][ci]),
        })
    return Resolution(curves=out_curves, provenance=out_prov,
                      crossings=crossings, chamfer=float(chamfer),
                      strands=strands, crossing_arcs=crossing_arcs,
                      inputs=(c1, c2))


def _check_disjoint(curves):
    """Raise GeometryError if any two distinct curves make contact."""
    for a in range(len(curves)):
        for b in range(a + 1, len(curves)):
            P0, P1 = curves[a].segment_arrays()
            Q0b, Q1b = curves[b].segment_arrays()
            for k in _translate_range(curves[a].vertices, curves[b].vertices):
                kv = np.array(k, dtype=float)
                ii, jj = _candidate_pairs(P0, P1, Q0b + kv, Q1b + kv)
                if ii.size == 0:
                    continue
                kind, _, _, _, _ = _classify(P0[ii], P1[ii],
                                             Q0b[jj] + kv, Q1b[jj] + kv,
                                             _ENDPOINT_TOL)
                if np.any(kind != _NONE):
                    raise GeometryError(
                        "resolved components %s and %s intersect"
                        % (curves[a].ident, curves[b].ident))


def count_components(resolution):
    """Number of closed curves in a Resolution."""
    return len(resolution.curves)


# ----------------------------------------------------------------------------
# Parallel copies (multiplicity bundles)
# ----------------------------------------------------------------------------

def parallel_copies(c, a, eps_schedule=()):
    """Embedded representative of a times the class of c, as |a| copies.

    Returns floor(|a|/2) pairs of normal-offset copies of c at distances
    +-eps_j from eps_schedule, plus the curve itself when |a| is odd; all
    copies are reversed when a < 0.  Offsets use miter joins and every output
    is validated embedded and pairwise disjoint.  a = 0 gives [].
    """
    a = int(a)
    if a == 0:
        return []
    n_pairs = abs(a) // 2
    eps = [float(e) for e in eps_schedule[:n_pairs]]
    if len(eps) < n_pairs:
        raise GeometryError("need %d offset values, got %d"
                            % (n_pairs, len(eps_schedule)))
    if any(e <= 0.0 for e in eps) or len(set(eps)) != len(eps):
        raise GeometryError("offsets must be positive and distinct")

    out = []
    for idx, e in enumerate(eps):
        for sgn in (+1.0, -1.0):
            out.append(TorusCurve(_offset_polyline(c.vertices, sgn * e),
                                  ident="%s_off%d%s" % (c.ident, idx,
                                                        "p" if sgn > 0 else "m")))
    if abs(a) % 2 == 1:
        out.append(TorusCurve(c.vertices.copy(), ident="%s_base" % c.ident,
                              validate=False))
    if a < 0:
        out = [cc.reversed() for cc in out]
    _check_disjoint(out)
    return out


def _offset_polyline(V, eps):
    """Miter offset of a closed lift polyline by signed distance eps."""
    d = np.diff(V, axis=0)
    L = np.linalg.norm(d, axis=1)
    n = np.stack([-d[:, 1], d[:, 0]], axis=1) / L[:, None]
    m = V.shape[0] - 1
    out = np.empty_like(V)
    for i in range(m):
        prev = n[(i - 1) % m]
        cur = n[i]
        cos = float(np.dot(prev, cur))
        if cos <= -0.5:
            raise GeometryError("corner too sharp for a parallel offset")
        out[i] = V[i] + eps * (prev + cur) / (1.0 + cos)
    out[m] = out[0] + (V[m] - V[0])
    return out


# ----------------------------------------------------------------------------
# Instance constructors
# ----------------------------------------------------------------------------

def geodesic_curve(pq, base=(0.0, 0.0), ident="g"):
    """Straight closed geodesic of primitive class pq through base."""
    p, q = int(pq[0]), int(pq[1])
    if math.gcd(abs(p), abs(q)) != 1:
        raise GeometryError("geodesic class must be primitive")
    b = np.asarray(base, dtype=float)
    return TorusCurve(np.array([b, b + (p, q)]), ident=ident)


def wavy_curve(pq, base=(0.0, 0.0), amplitude=0.04, waves=2, n=48, ident="w",
               phase=0.0):
    """Embedded perturbed geodesic of class pq: base line plus a normal wave."""
    p, q = int(pq[0]), int(pq[1])
    direction = np.array([p, q], dtype=float)
    length = np.linalg.norm(direction)
    if length == 0.0:
        raise GeometryError("class must be nonzero for a wavy representative")
    normal = np.array([-direction[1], direction[0]]) / length
    s = np.linspace(0.0, 1.0, n + 1)
    wave = amplitude * np.sin(2.0 * np.pi * waves * s + phase)
    wave[-1] = wave[0]
    verts = np.asarray(base, float) + s[:, None] * direction + wave[:, None] * normal
    return TorusCurve(verts, ident=ident)
