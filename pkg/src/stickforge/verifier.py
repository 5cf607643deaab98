"""Independent geometric certification of built embeddings.

Every check here recomputes its facts from the embedding coordinates and
the circular diagram alone; nothing is trusted from the builders, and this
module imports none of their code.  Exact checks run on rational inputs
with zero tolerance.  Floating-point embeddings are judged against the
tolerances below, all relative to the stick length scale.

A passing simplicity + projection + crossing-order report certifies that
the embedded union of sticks projects to a diagram identical to the given
circular one (same crossings, same over/under, same incidences), which
pins down the spatial graph type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class Tolerances:
    """Relative to the length scale (exact checks ignore these)."""

    length_rel: float = 1e-9
    clearance_rel: float = 1e-6
    junction_rel: float = 1e-9


TOLERANCES = Tolerances()


@dataclass
class ReportEntry:
    check: str
    passed: bool
    witness: str = ""


@dataclass
class VerificationReport:
    entries: list[ReportEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[ReportEntry]:
        return [e for e in self.entries if not e.passed]

    def add(self, check: str, passed: bool, witness: str = "") -> None:
        self.entries.append(ReportEntry(check, passed, witness))

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.entries.extend(other.entries)
        return self

    def summary(self) -> str:
        lines = []
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            suffix = f"  [{e.witness}]" if (e.witness and not e.passed) else ""
            lines.append(f"{e.check}: {mark}{suffix}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# exact vector helpers (rational)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _is_exact(segments) -> bool:
    for a, b in segments:
        return isinstance(a[0], (Fraction, int))
    return True


def _seg_meet_exact(p, q, r, s):
    """('none', None) | ('point', pt) | ('overlap', None) for closed segments."""
    d1, d2, w = _sub(q, p), _sub(s, r), _sub(r, p)
    c = _cross(d1, d2)
    if c != (0, 0, 0):
        if _dot(w, c) != 0:
            return ("none", None)
        cc = _dot(c, c)
        t = _dot(_cross(w, d2), c) / cc
        u = _dot(_cross(w, d1), c) / cc
        if 0 <= t <= 1 and 0 <= u <= 1:
            return ("point", tuple(p[i] + t * d1[i] for i in range(3)))
        return ("none", None)
    if _cross(w, d1) != (0, 0, 0):
        return ("none", None)
    length2 = _dot(d1, d1)
    if length2 == 0:
        return ("overlap", None)  # degenerate stick; flag loudly
    t0 = _dot(_sub(r, p), d1) / length2
    t1 = _dot(_sub(s, p), d1) / length2
    lo, hi = min(t0, t1), max(t0, t1)
    olo, ohi = max(lo, Fraction(0)), min(hi, Fraction(1))
    if olo > ohi:
        return ("none", None)
    if olo == ohi:
        return ("point", tuple(p[i] + olo * d1[i] for i in range(3)))
    return ("overlap", None)


# float distance between closed segments (for decimal embeddings)


def _vsub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _vdot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _norm(a):
    return math.sqrt(_vdot(a, a))


def seg_distance(p, q, r, s) -> float:
    """Closest-point distance between segments pq and rs."""
    d1, d2, w = _vsub(q, p), _vsub(s, r), _vsub(p, r)
    a, b, c = _vdot(d1, d1), _vdot(d1, d2), _vdot(d2, d2)
    d, e = _vdot(d1, w), _vdot(d2, w)
    den = a * c - b * b
    sn, sd = (0.0, 1.0) if den <= 1e-14 * a * c else ((b * e - c * d), den)
    if sn < 0.0:
        sn, sd = 0.0, 1.0
    elif sn > sd:
        sn, sd = sd, sd
    sc = 0.0 if sd == 0.0 else sn / sd
    tn = e + sc * b
    if tn < 0.0:
        tc = 0.0
        sc = min(max(-d / a if a > 0 else 0.0, 0.0), 1.0)
    elif tn > c:
        tc = 1.0
        sc = min(max((b - d) / a if a > 0 else 0.0, 0.0), 1.0)
    else:
        tc = tn / c if c > 0 else 0.0
    cp1 = tuple(p[i] + sc * d1[i] for i in range(3))
    cp2 = tuple(r[i] + tc * d2[i] for i in range(3))
    return _norm(_vsub(cp1, cp2))


# ---------------------------------------------------------------------------
# checks


def check_simplicity(segments, scale: float | None = None,
                     tol: Tolerances = TOLERANCES) -> VerificationReport:
    """Pairwise disjointness, except single shared endpoints.

    segments: iterable of (a, b) point pairs.  Rational coordinates get the
    exact test; floats get clearance >= clearance_rel * scale for pairs not
    sharing an endpoint, and a non-overlap direction test for pairs that do.
    """
    segs = [(tuple(a), tuple(b)) for a, b in segments]
    report = VerificationReport()
    if _is_exact(segs):
        bad = 0
        witness = ""
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                (p, q), (r, s) = segs[i], segs[j]
                kind, pt = _seg_meet_exact(p, q, r, s)
                if kind == "none":
                    continue
                if kind == "overlap":
                    bad += 1
                    witness = witness or f"sticks {i} and {j} overlap along a segment"
                    continue
                shared = pt in (p, q) and pt in (r, s)
                if not shared:
                    bad += 1
                    witness = witness or (
                        f"sticks {i} and {j} meet at {tuple(str(x) for x in pt)}"
                        " away from a shared endpoint"
                    )
        report.add("simplicity", bad == 0,
                   witness if bad else f"{len(segs)} sticks pairwise disjoint away from junctions")
        return report

    if scale is None:
        scale = max(max(abs(c) for c in a + b) for a, b in segs) or 1.0
    snap = tol.junction_rel * scale
    clearance_min = tol.clearance_rel * scale
    bad = 0
    witness = ""
    min_clear = math.inf
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            (p, q), (r, s) = segs[i], segs[j]
            shared = None
            for x in (p, q):
                for y in (r, s):
                    if _norm(_vsub(x, y)) <= snap:
                        shared = x
            if shared is not None:
                u = _vsub(q if shared == p else p, shared)
                v = _vsub(s if _norm(_vsub(shared, r)) <= snap else r, shared)
                nu, nv = _norm(u), _norm(v)
                if nu > 0 and nv > 0 and _vdot(u, v) / (nu * nv) > 1.0 - 1e-12:
                    bad += 1
                    witness = witness or f"sticks {i} and {j} fold back along each other"
                continue
            dist = seg_distance(p, q, r, s)
            min_clear = min(min_clear, dist)
            if dist < clearance_min:
                bad += 1
                witness = witness or f"sticks {i} and {j} at distance {dist:.3e} < {clearance_min:.3e}"
    detail = witness if bad else f"min non-adjacent clearance {min_clear:.3e}"
    report.add("simplicity", bad == 0, detail)
    return report


def _chord_pieces(se, cd, k: int):
    """Sticks of page k as parameter intervals along the chord, or a failure
    string.  Verifies on-line projection and in-segment parameters."""
    chord = cd.chords[k - 1]
    a2 = cd.boundary[chord.ends[0]]
    b2 = cd.boundary[chord.ends[1]]
    d = (b2[0] - a2[0], b2[1] - a2[1])
    L2 = d[0] * d[0] + d[1] * d[1]
    pieces = []
    for idx, s in enumerate(se.sticks):
        if s.page != k:
            continue
        entry = []
        for pt in (s.a, s.b):
            off = d[0] * (pt[1] - a2[1]) - d[1] * (pt[0] - a2[0])
            if off != 0:
                return None, f"page {k} stick endpoint projects off the chord line"
            t = ((pt[0] - a2[0]) * d[0] + (pt[1] - a2[1]) * d[1]) / L2
            if not 0 <= t <= 1:
                return None, f"page {k} stick endpoint projects outside the chord"
            entry.append((t, pt))
        pieces.append(tuple(entry))
    if not pieces:
        return None, f"page {k} has no sticks"
    return pieces, ""


def check_projection(se, cd) -> VerificationReport:
    """Projection fidelity: every chord is tiled exactly by its sticks'
    shadows, chains are 3D-continuous between its junction endpoints, the
    junction table projects onto the boundary points, and the heights table
    matches the geometry (integral, strictly increasing in page order)."""
    report = VerificationReport()
    problems: list[str] = []

    for b, pt in se.junctions.items():
        if (pt[0], pt[1]) != cd.boundary[b]:
            problems.append(f"junction over point {b} projects off its boundary point")
    for b in range(cd.m):
        if b not in se.junctions:
            problems.append(f"no junction recorded over point {b}")
    report.add("projection.junctions", not problems, "; ".join(problems[:3]))

    tile_problems: list[str] = []
    chain_problems: list[str] = []
    for chord in cd.chords:
        k = chord.page
        pieces, err = _chord_pieces(se, cd, k)
        if pieces is None:
            tile_problems.append(err)
            continue
        pieces = [tuple(sorted(p)) for p in pieces]
        pieces.sort(key=lambda e: (e[0][0], e[1][0]))
        if pieces[0][0][0] != 0 or pieces[-1][1][0] != 1:
            tile_problems.append(f"page {k} shadow does not span its chord")
            continue
        ok = True
        for prev, cur in zip(pieces, pieces[1:]):
            if prev[1][0] != cur[0][0]:
                tile_problems.append(f"page {k} shadows leave a gap or overlap")
                ok = False
                break
            if prev[1][1] != cur[0][1]:
                chain_problems.append(f"page {k} sticks break apart in space")
                ok = False
                break
        if not ok:
            continue
        lo_pt, hi_pt = pieces[0][0][1], pieces[-1][1][1]
        expect = {se.junctions.get(chord.ends[0]), se.junctions.get(chord.ends[1])}
        if {lo_pt, hi_pt} != expect:
            chain_problems.append(f"page {k} does not end at its junctions")
    report.add("projection.tiling", not tile_problems, "; ".join(tile_problems[:3]))
    report.add("projection.chains", not chain_problems, "; ".join(chain_problems[:3]))

    height_problems: list[str] = []
    prev = 0
    for chord in cd.chords:
        k = chord.page
        z = se.heights.get(k)
        if z is None or z != int(z):
            height_problems.append(f"page {k} height missing or non-integer")
            continue
        if z <= prev:
            height_problems.append(f"page {k} height {z} not above page {k - 1}")
        prev = z
        tops = [max(s.a[2], s.b[2]) for s in se.sticks if s.page == k]
        if tops and max(tops) != z:
            height_problems.append(f"page {k} geometry tops out at {max(tops)}, table says {z}")
    report.add("projection.heights", not height_problems, "; ".join(height_problems[:3]))
    return report


def _height_on_chord(se, cd, k: int, t: Fraction):
    pieces, err = _chord_pieces(se, cd, k)
    if pieces is None:
        return None
    for (t0, p0), (t1, p1) in (tuple(sorted(p)) for p in pieces):
        if t0 <= t <= t1:
            if t0 == t1:
                return p0[2]
            return p0[2] + (p1[2] - p0[2]) * (t - t0) / (t1 - t0)
    return None


def check_crossing_order(se, cd) -> VerificationReport:
    """At every diagram crossing the earlier page passes strictly under."""
    report = VerificationReport()
    problems: list[str] = []
    for (i, j) in cd.crossings:
        ci, cj = cd.chords[i - 1], cd.chords[j - 1]
        a, b = cd.boundary[ci.ends[0]], cd.boundary[ci.ends[1]]
        c, d = cd.boundary[cj.ends[0]], cd.boundary[cj.ends[1]]
        di = (b[0] - a[0], b[1] - a[1])
        dj = (d[0] - c[0], d[1] - c[1])
        den = di[0] * dj[1] - di[1] * dj[0]
        if den == 0:
            problems.append(f"crossing ({i},{j}): chords parallel")
            continue
        w = (c[0] - a[0], c[1] - a[1])
        ti = (w[0] * dj[1] - w[1] * dj[0]) / den
        tj = (w[0] * di[1] - w[1] * di[0]) / den
        zi = _height_on_chord(se, cd, i, ti)
        zj = _height_on_chord(se, cd, j, tj)
        if zi is None or zj is None:
            problems.append(f"crossing ({i},{j}): geometry missing over the crossing")
        elif not zi < zj:
            problems.append(f"crossing ({i},{j}): page {i} at height {zi} not under page {j} at {zj}")
    report.add("crossing-order", not problems,
               "; ".join(problems[:3]) if problems else f"{len(cd.crossings)} crossings ordered")
    return report


def verify_stick_embedding(se, cd) -> VerificationReport:
    """Full exact certification bundle."""
    report = check_simplicity([(s.a, s.b) for s in se.sticks])
    report.merge(check_projection(se, cd))
    report.merge(check_crossing_order(se, cd))
    return report


def check_equilateral(emb, M: float | None = None,
                      tol: Tolerances = TOLERANCES) -> VerificationReport:
    """Equal lengths, per-component counts, junction coincidence, clearance.

    emb needs: sticks (each with a, b, component, ja, jb), M, components
    (each with index, n_arcs, reduced).  Counts accept 2n for embeddings
    flagged unreduced and 2n - 1 after reduction.
    """
    report = VerificationReport()
    M = float(M if M is not None else emb.M)
    sticks = list(emb.sticks)

    worst = 0.0
    for s in sticks:
        worst = max(worst, abs(_norm(_vsub(s.b, s.a)) - M) / M)
    report.add("equilateral.lengths", worst <= tol.length_rel,
               f"max relative length deviation {worst:.3e} vs {tol.length_rel:.0e}")

    count_problems = []
    for comp in emb.components:
        have = sum(1 for s in sticks if s.component == comp.index)
        want = 2 * comp.n_arcs - 1 if comp.reduced else 2 * comp.n_arcs
        note = "" if comp.reduced else " (pre-reduction)"
        if have != want:
            count_problems.append(
                f"component {comp.index}: {have} sticks, expected {want}{note}")
    unreduced = [c.index for c in emb.components if not c.reduced]
    detail = "; ".join(count_problems[:3]) if count_problems else (
        f"pre-reduction components: {unreduced}" if unreduced else "all components reduced")
    report.add("equilateral.counts", not count_problems, detail)

    snap = tol.junction_rel * M
    junction_problems = []
    groups: dict[tuple[int, str], list] = {}
    for s in sticks:
        groups.setdefault((s.component, s.ja), []).append(s.a)
        groups.setdefault((s.component, s.jb), []).append(s.b)
    for (compi, label), pts in groups.items():
        for pt in pts[1:]:
            if _norm(_vsub(pt, pts[0])) > snap:
                junction_problems.append(
                    f"component {compi} junction {label} spread over {_norm(_vsub(pt, pts[0])):.3e}")
                break
    report.add("equilateral.junctions", not junction_problems, "; ".join(junction_problems[:3]))

    clearance_min = math.inf
    clearance_problems = []
    for i in range(len(sticks)):
        for j in range(i + 1, len(sticks)):
            si, sj = sticks[i], sticks[j]
            pi = {(si.component, si.ja), (si.component, si.jb)}
            pj = {(sj.component, sj.ja), (sj.component, sj.jb)}
            if pi & pj:
                continue
            dist = seg_distance(si.a, si.b, sj.a, sj.b)
            clearance_min = min(clearance_min, dist)
            if dist < tol.clearance_rel * M:
                clearance_problems.append(f"sticks {i}/{j} at {dist:.3e}")
    report.add("equilateral.clearance", not clearance_problems,
               "; ".join(clearance_problems[:3]) if clearance_problems
               else f"min non-adjacent clearance {clearance_min:.3e} (>= {tol.clearance_rel * M:.3e})")
    return report
