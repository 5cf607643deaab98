"""Exact stick embedding over a circular diagram.

Chords are lifted in page order above the disk.  A bi-initiating chord
becomes one horizontal stick one level above everything placed so far; its
ends become the junction points of its two binding points.  A uni-initiating
chord becomes one oblique stick from the existing junction over its
non-initiating end up to a fresh junction over the initiating end.  A
non-initiating chord becomes two sticks bent upward at the exact chord
midpoint, tied into the existing junctions at both ends.  Oblique and bent
lifts take the smallest integer height whose closed lift-to-horizontal
triangle region (minus the shared junction corners) misses all earlier
sticks, which forces every crossing to come out lower-page-under and keeps
the union embedded.  All coordinates are rational, so every predicate here
is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .circular_diagram import CircularDiagram

R3 = tuple[Fraction, Fraction, Fraction]
P2 = tuple[Fraction, Fraction]


class BuildError(ValueError):
    """Base class for stick construction failures."""


class MissingJunction(BuildError):
    """A non-initiating end has no junction yet; valid diagrams cannot do
    this, so it signals internal corruption."""


@dataclass(frozen=True)
class Stick:
    a: R3
    b: R3
    page: int
    edge: str
    piece: str  # "whole" | "left" | "right"


@dataclass(frozen=True)
class StickEmbedding:
    sticks: tuple[Stick, ...]
    junctions: dict[int, R3]  # axis index -> the single point over it
    heights: dict[int, int]   # page -> top integer level of its lift


def _sub2(a: P2, b: P2) -> P2:
    return (a[0] - b[0], a[1] - b[1])


def _cross2(a: P2, b: P2) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _dot2(a: P2, b: P2) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


class _ChordFrame:
    """Vertical plane over one chord, with exact in-plane coordinates.

    s is the unnormalized parameter along the chord direction (0 at the
    first endpoint, s_max at the second); z stays the height.
    """

    def __init__(self, a2: P2, b2: P2):
        self.a2 = a2
        self.d = _sub2(b2, a2)
        self.s_max = _dot2(self.d, self.d)
        if self.s_max == 0:
            raise BuildError("degenerate chord")

    def side(self, p: R3) -> Fraction:
        # signed offset of the xy-projection from the chord line
        return _cross2(self.d, _sub2((p[0], p[1]), self.a2))

    def param(self, p: R3) -> Fraction:
        return _dot2(_sub2((p[0], p[1]), self.a2), self.d)


def _segment_hits_triangle(p, q, tri, exempt) -> bool:
    """Exact: does segment pq meet the closed triangle anywhere besides the
    exempt corner points?  Integer coordinates in, pure integer arithmetic
    throughout; the parameter window is kept as positive-denominator pairs."""
    orient = ((tri[1][0] - tri[0][0]) * (tri[2][1] - tri[0][1])
              - (tri[1][1] - tri[0][1]) * (tri[2][0] - tri[0][0]))
    if orient == 0:
        raise BuildError("degenerate clearance triangle")
    sgn = 1 if orient > 0 else -1
    dx, dy = q[0] - p[0], q[1] - p[1]
    lo_n, lo_d = 0, 1
    hi_n, hi_d = 1, 1
    for i in range(3):
        a, b = tri[i], tri[(i + 1) % 3]
        ex, ey = b[0] - a[0], b[1] - a[1]
        g0 = sgn * (ex * (p[1] - a[1]) - ey * (p[0] - a[0]))
        g1 = sgn * (ex * (q[1] - a[1]) - ey * (q[0] - a[0]))
        delta = g1 - g0
        if delta == 0:
            if g0 < 0:
                return False
            continue
        tn, td = -g0, delta
        if td < 0:
            tn, td = -tn, -td
        if delta > 0:
            if tn * lo_d > lo_n * td:
                lo_n, lo_d = tn, td
        else:
            if tn * hi_d < hi_n * td:
                hi_n, hi_d = tn, td
        if lo_n * hi_d > hi_n * lo_d:
            return False
    cmp = lo_n * hi_d - hi_n * lo_d
    if cmp > 0:
        return False
    if cmp < 0:
        return True  # positive-length overlap cannot be all exempt points
    hx, hy = p[0] * lo_d + lo_n * dx, p[1] * lo_d + lo_n * dy
    return all(hx != e[0] * lo_d or hy != e[1] * lo_d for e in exempt)


def _point_in_triangle_hits(q, tri, sgn, exempt) -> bool:
    for i in range(3):
        a, b = tri[i], tri[(i + 1) % 3]
        if sgn * ((b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0])) < 0:
            return False
    return q not in exempt


def _project_earlier(frame: _ChordFrame, earlier: tuple[Stick, ...]):
    """In-plane view of the placed sticks: segments lying over the chord and
    punch-through points of transversal ones.  Independent of the probe
    height, so computed once per chord."""
    segs, pts = [], []
    for stick in earlier:
        fa, fb = frame.side(stick.a), frame.side(stick.b)
        if fa == 0 and fb == 0:
            segs.append(((frame.param(stick.a), Fraction(stick.a[2])),
                         (frame.param(stick.b), Fraction(stick.b[2]))))
        elif (fa > 0 and fb > 0) or (fa < 0 and fb < 0):
            continue
        else:
            t = fa / (fa - fb)
            hit3 = tuple(stick.a[i] + t * (stick.b[i] - stick.a[i]) for i in range(3))
            pts.append((frame.param(hit3), Fraction(hit3[2])))
    return segs, pts


def _min_clear_height(frame: _ChordFrame, lows, z_prev: int, earlier: tuple[Stick, ...]) -> int:
    """Smallest integer z > z_prev whose lift triangles are clear.

    Raising z only steepens the lift above every fixed earlier point, so the
    predicate is monotone over z > z_prev; gallop out then bisect back to
    the same minimal value a unit scan would find.

    Everything is scaled to integers by the common denominator of each
    coordinate axis before probing; signs and parameter ratios are invariant
    under per-axis scaling, so the integer tests decide exactly the same
    predicate as the rational ones.
    """
    segs_f, pts_f = _project_earlier(frame, earlier)

    Ls = Lz = 1
    for x in [c[0] for seg in segs_f for c in seg] + [p[0] for p in pts_f] \
            + [anchor[0] for anchor, _ in lows] + [s_hi for _, s_hi in lows]:
        d = Fraction(x).denominator
        Ls = Ls * d // math.gcd(Ls, d)
    for x in [c[1] for seg in segs_f for c in seg] + [p[1] for p in pts_f] \
            + [anchor[1] for anchor, _ in lows]:
        d = Fraction(x).denominator
        Lz = Lz * d // math.gcd(Lz, d)

    def si(x) -> int:
        v = Fraction(x) * Ls
        return v.numerator

    def zi(x) -> int:
        v = Fraction(x) * Lz
        return v.numerator

    segs = [((si(p[0]), zi(p[1])), (si(q[0]), zi(q[1]))) for p, q in segs_f]
    pts = [(si(p[0]), zi(p[1])) for p in pts_f]
    anchors = [((si(s_lo), zi(z_lo)), si(s_hi)) for (s_lo, z_lo), s_hi in lows]

    def ok(z: int) -> bool:
        zs = z * Lz
        for (s_lo, z_lo), s_hi in anchors:
            tri = ((s_lo, z_lo), (s_hi, zs), (s_lo, zs))
            exempt = ((s_lo, z_lo),)
            orient = ((tri[1][0] - tri[0][0]) * (tri[2][1] - tri[0][1])
                      - (tri[1][1] - tri[0][1]) * (tri[2][0] - tri[0][0]))
            if orient == 0:
                raise BuildError("degenerate clearance triangle")
            sgn = 1 if orient > 0 else -1
            for p, q in segs:
                if _segment_hits_triangle(p, q, tri, exempt):
                    return False
            for pt in pts:
                if _point_in_triangle_hits(pt, tri, sgn, exempt):
                    return False
        return True

    z = z_prev + 1
    if ok(z):
        return z
    step = 1
    lo_bad = z
    while True:
        step *= 2
        cand = z_prev + step
        if ok(cand):
            hi_good = cand
            break
        lo_bad = cand
    while hi_good - lo_bad > 1:
        mid = (hi_good + lo_bad) // 2
        if ok(mid):
            hi_good = mid
        else:
            lo_bad = mid
    return hi_good


def clearance_height(cd: CircularDiagram, k: int, partial: StickEmbedding) -> int:
    """Minimal admissible top level for chord of page k given the sticks
    already placed (pages below k)."""
    chord = cd.chords[k - 1]
    cls = cd.classes[k - 1]
    z_prev = max(partial.heights.values(), default=0)
    if cls.kind == "bi":
        return z_prev + 1
    earlier = tuple(s for s in partial.sticks if s.page < k)
    if cls.kind == "uni":
        other = chord.ends[1] if chord.ends[0] == cls.initiating_end else chord.ends[0]
        frame = _ChordFrame(cd.boundary[other], cd.boundary[cls.initiating_end])
        base = partial.junctions.get(other)
        if base is None:
            raise MissingJunction(f"no junction over point {other} for page {k}")
        lows = (((Fraction(0), base[2]), frame.s_max),)
        return _min_clear_height(frame, lows, z_prev, earlier)
    e0, e1 = chord.ends
    frame = _ChordFrame(cd.boundary[e0], cd.boundary[e1])
    j0, j1 = partial.junctions.get(e0), partial.junctions.get(e1)
    if j0 is None or j1 is None:
        raise MissingJunction(f"missing junction for page {k}")
    mid = frame.s_max / 2
    lows = (
        ((Fraction(0), j0[2]), mid),
        ((frame.s_max, j1[2]), mid),
    )
    return _min_clear_height(frame, lows, z_prev, earlier)


def build(cd: CircularDiagram, _height_overrides: dict[int, int] | None = None) -> StickEmbedding:
    """Lift every chord in page order.  _height_overrides pins chosen levels
    for diagnostics (the result may then fail verification, by design)."""
    sticks: list[Stick] = []
    junctions: dict[int, R3] = {}
    heights: dict[int, int] = {}
    partial = StickEmbedding((), junctions, heights)
    for chord, cls in zip(cd.chords, cd.classes):
        k = chord.page
        partial = StickEmbedding(tuple(sticks), junctions, heights)
        z = clearance_height(cd, k, partial)
        if _height_overrides and k in _height_overrides:
            z = _height_overrides[k]
        zf = Fraction(z)
        if cls.kind == "bi":
            pa = (*cd.boundary[chord.ends[0]], zf)
            pb = (*cd.boundary[chord.ends[1]], zf)
            sticks.append(Stick(pa, pb, k, chord.edge, "whole"))
            junctions[chord.ends[0]] = pa
            junctions[chord.ends[1]] = pb
        elif cls.kind == "uni":
            other = chord.ends[1] if chord.ends[0] == cls.initiating_end else chord.ends[0]
            top = (*cd.boundary[cls.initiating_end], zf)
            sticks.append(Stick(junctions[other], top, k, chord.edge, "whole"))
            junctions[cls.initiating_end] = top
        else:
            e0, e1 = chord.ends
            p0, p1 = cd.boundary[e0], cd.boundary[e1]
            apex = ((p0[0] + p1[0]) / 2, (p0[1] + p1[1]) / 2, zf)
            sticks.append(Stick(junctions[e0], apex, k, chord.edge, "left"))
            sticks.append(Stick(apex, junctions[e1], k, chord.edge, "right"))
        heights[k] = z
    return StickEmbedding(tuple(sticks), junctions, heights)


def _sub3(a: R3, b: R3) -> R3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _cross3(a: R3, b: R3) -> R3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def count_sticks(se: StickEmbedding) -> int:
    """Number of maximal straight segments: collinear segments that continue
    through a shared endpoint merge into one stick."""
    ends: dict[R3, list[int]] = {}
    for i, s in enumerate(se.sticks):
        ends.setdefault(s.a, []).append(i)
        ends.setdefault(s.b, []).append(i)

    parent = list(range(len(se.sticks)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for point, members in ends.items():
        for ai in range(len(members)):
            for bi in range(ai + 1, len(members)):
                sa, sb = se.sticks[members[ai]], se.sticks[members[bi]]
                va = _sub3(sa.b if sa.a == point else sa.a, point)
                vb = _sub3(sb.b if sb.a == point else sb.a, point)
                straight_through = _cross3(va, vb) == (0, 0, 0) and (
                    va[0] * vb[0] + va[1] * vb[1] + va[2] * vb[2] < 0
                )
                if straight_through:
                    ra, rb = find(members[ai]), find(members[bi])
                    if ra != rb:
                        parent[rb] = ra
    return len({find(i) for i in range(len(se.sticks))})
