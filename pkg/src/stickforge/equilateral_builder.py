"""Equal-length stick embeddings via open-book tents and top-point reduction.

The binding axis becomes the vertical coordinate axis with point i at height
i; page p is the half-plane at angle 2*pi*p/n.  Each arc stretches into a
tent of two sticks of length M meeting at an apex inside its own page, so
tents in distinct pages touch only along the axis at shared binding points.

The reduction removes the stick count the top binding point wastes: delete
every stick d_i that meets the top point, rotate the first partner stick
e_1 inside its page until its free end hugs the axis high above everything,
rotate each remaining partner e_i until its free end sits at distance
exactly M from e_1's free end (bisection), and glue a joining stick f_i
between those ends.  That trades deg sticks for deg - 1 and keeps every
stick at length M, giving 2n - 1 sticks per component.

Rotations are certified by sampled sweeps (engineering surrogate for the
continuous isotopy): the moving stick, and the stretching joiner with it,
must clear every parked stick at each sampled angle.  Any certificate or
bracketing failure doubles M and retries; clearances here have a fixed
absolute floor from the unit axis spacing, so growth in M eventually hurts
rather than helps and the retry count is capped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .arc_presentation import ValidatedPresentation

V3 = tuple[float, float, float]

DEFAULT_M_FACTOR = 4.0
AXIS_HUG_FRACTION = 1e-3      # e_1 free end ends up this * M from the axis
BISECT_REL_TOL = 1e-12
SWEEP_STEP_RAD = 1e-2
CERT_CLEARANCE_REL = 1e-6
SNAP_REL = 1e-9
MAX_RETRIES = 8


class EquilateralError(ValueError):
    """Base class for equal-length construction failures."""


class MTooSmall(EquilateralError):
    """M cannot span the axis: apexes would degenerate onto the axis."""


class NoRotationSolution(EquilateralError):
    """Bisection bracket failed; M is too small relative to the axis spread."""


class ClearanceViolation(EquilateralError):
    """Final sticks come closer than the certification clearance."""


class CertificateFailure(EquilateralError):
    """A sampled sweep came too close to a parked stick."""


@dataclass
class EStick:
    a: V3
    b: V3
    component: int
    tag: str   # "arc<p>.lower" | "arc<p>.upper" | "join<p>"
    ja: str    # junction label of endpoint a
    jb: str    # junction label of endpoint b


@dataclass
class SweepMove:
    """One recorded rotation: stick pivoting in its page, plus the joiner
    stretching toward the hub while it moves (hub is None for the first)."""

    tag: str
    pivot: V3
    page_angle: float
    phi_start: float
    phi_end: float
    hub: V3 | None


@dataclass
class ComponentInfo:
    index: int
    n_arcs: int
    n_points: int
    reduced: bool
    deleted_tags: tuple[str, ...] = ()
    moves: tuple[SweepMove, ...] = ()
    offset: V3 = (0.0, 0.0, 0.0)


@dataclass
class CertificateReport:
    passed: bool
    moves: list[tuple[str, float]] = field(default_factory=list)
    detail: str = ""


@dataclass
class ToleranceReport:
    max_length_dev_rel: float
    min_clearance: float
    min_clearance_rel: float


@dataclass
class OpenBookLayout:
    n_pages: int
    n_points: int
    M: float

    def page_dir(self, page: int) -> tuple[float, float]:
        ang = 2.0 * math.pi * page / self.n_pages
        return (math.cos(ang), math.sin(ang))

    def page_angle(self, page: int) -> float:
        return 2.0 * math.pi * page / self.n_pages


@dataclass
class EquilateralEmbedding:
    sticks: list[EStick]
    M: float
    components: list[ComponentInfo]
    layout: OpenBookLayout | None = None
    tolerance: ToleranceReport | None = None
    certificate: CertificateReport | None = None


def _vsub(a: V3, b: V3) -> V3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _norm(a: V3) -> float:
    return math.sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2])


def _dist(a: V3, b: V3) -> float:
    return _norm(_vsub(a, b))


def _seg_distance(p: V3, q: V3, r: V3, s: V3) -> float:
    d1, d2, w = _vsub(q, p), _vsub(s, r), _vsub(p, r)
    a = d1[0] ** 2 + d1[1] ** 2 + d1[2] ** 2
    b = d1[0] * d2[0] + d1[1] * d2[1] + d1[2] * d2[2]
    c = d2[0] ** 2 + d2[1] ** 2 + d2[2] ** 2
    d = d1[0] * w[0] + d1[1] * w[1] + d1[2] * w[2]
    e = d2[0] * w[0] + d2[1] * w[1] + d2[2] * w[2]
    den = a * c - b * b
    if den > 1e-14 * a * c:
        sc = min(max((b * e - c * d) / den, 0.0), 1.0)
    else:
        sc = 0.0
    tn = e + sc * b
    if c > 0:
        tc = min(max(tn / c, 0.0), 1.0)
    else:
        tc = 0.0
    if a > 0:
        sc = min(max((b * tc - d) / a, 0.0), 1.0)
    cp1 = (p[0] + sc * d1[0], p[1] + sc * d1[1], p[2] + sc * d1[2])
    cp2 = (r[0] + tc * d2[0], r[1] + tc * d2[1], r[2] + tc * d2[2])
    return _dist(cp1, cp2)


def _trimmed(a: V3, b: V3, cut: V3, frac: float = 0.01):
    """Segment ab with a short piece near endpoint cut removed."""
    if _dist(a, cut) <= _dist(b, cut):
        return ((a[0] + frac * (b[0] - a[0]), a[1] + frac * (b[1] - a[1]), a[2] + frac * (b[2] - a[2])), b)
    return (a, (b[0] + frac * (a[0] - b[0]), b[1] + frac * (a[1] - b[1]), b[2] + frac * (a[2] - b[2])))


def _clearance(p: V3, q: V3, r: V3, s: V3, snap: float) -> float:
    """Segment distance with shared endpoints trimmed away first."""
    for x in (p, q):
        for y in (r, s):
            if _dist(x, y) <= snap:
                (p2, q2) = _trimmed(p, q, x)
                (r2, s2) = _trimmed(r, s, y)
                return _seg_distance(p2, q2, r2, s2)
    return _seg_distance(p, q, r, s)


# ---------------------------------------------------------------------------
# tents


def build_tents(vp: ValidatedPresentation, M: float, component: int = 0) -> EquilateralEmbedding:
    """Two sticks of length M per arc, apex in the arc's own page."""
    n, m = vp.n, vp.m
    layout = OpenBookLayout(n_pages=n, n_points=m, M=float(M))
    if not M > (m - 1) / 2.0:
        raise MTooSmall(f"M={M} cannot span {m} axis points; need M > {(m - 1) / 2}")
    sticks: list[EStick] = []
    for arc in vp.arcs:
        lo, hi = sorted(arc.ends)
        half = (hi - lo) / 2.0
        d = math.sqrt(M * M - half * half)
        ux, uy = layout.page_dir(arc.page)
        apex = (d * ux, d * uy, (lo + hi) / 2.0)
        plo: V3 = (0.0, 0.0, float(lo))
        phi: V3 = (0.0, 0.0, float(hi))
        sticks.append(EStick(plo, apex, component, f"arc{arc.page}.lower", f"bp{lo}", f"apex{arc.page}"))
        sticks.append(EStick(apex, phi, component, f"arc{arc.page}.upper", f"apex{arc.page}", f"bp{hi}"))
    info = ComponentInfo(index=component, n_arcs=n, n_points=m, reduced=False)
    return EquilateralEmbedding(sticks=sticks, M=float(M), components=[info], layout=layout)


# ---------------------------------------------------------------------------
# top point reduction


def _free_end(pivot: V3, page_dir, M: float, phi: float) -> V3:
    r = M * math.cos(phi)
    return (r * page_dir[0], r * page_dir[1], pivot[2] + M * math.sin(phi))


def reduce_top(emb: EquilateralEmbedding) -> EquilateralEmbedding:
    """Delete the top point's sticks, rotate partners, glue joiners."""
    layout = emb.layout
    if layout is None:
        raise EquilateralError("embedding carries no layout")
    M = emb.M
    top = layout.n_points - 1
    top_label = f"bp{top}"
    doomed = [s for s in emb.sticks if top_label in (s.ja, s.jb)]
    if len(doomed) < 2:
        raise EquilateralError("top binding point has fewer than 2 sticks; nothing to trade")
    doomed.sort(key=lambda s: int(s.tag[3:].split(".")[0]))

    kept = [s for s in emb.sticks if s not in doomed]
    sticks: list[EStick] = [replace(s) for s in kept]
    moves: list[SweepMove] = []

    # partner stick of each deleted one: same arc, other role
    partners = []
    for d in doomed:
        page = int(d.tag[3:].split(".")[0])
        mate_tag = f"arc{page}.lower" if d.tag.endswith(".upper") else f"arc{page}.upper"
        mate = next(s for s in sticks if s.tag == mate_tag and s.component == d.component)
        partners.append((page, mate))

    def pivot_and_phi(stick: EStick):
        # pivot is the axis endpoint; phi measured in its page from horizontal
        if stick.ja.startswith("bp"):
            pivot, free = stick.a, stick.b
        else:
            pivot, free = stick.b, stick.a
        rad = math.hypot(free[0], free[1])
        phi = math.atan2(free[2] - pivot[2], rad)
        return pivot, free, phi

    # first partner rotates up until its free end hugs the axis
    page1, e1 = partners[0]
    pivot1, _, phi1_start = pivot_and_phi(e1)
    dir1 = layout.page_dir(page1)
    phi1_end = math.acos(AXIS_HUG_FRACTION)
    if phi1_end <= phi1_start:
        raise NoRotationSolution(f"arc {page1} stick already steeper than the axis hug angle")
    hub = _free_end(pivot1, dir1, M, phi1_end)
    moves.append(SweepMove(e1.tag, pivot1, layout.page_angle(page1), phi1_start, phi1_end, None))
    _set_stick(sticks, e1.tag, e1.component, pivot1, hub, pivot_label=_axis_label(e1), free_label="hub")

    # remaining partners rotate until their free end is at distance M from hub
    for page, ei in partners[1:]:
        pivot, free0, phi_lo = pivot_and_phi(ei)
        diri = layout.page_dir(page)

        def gap(phi: float) -> float:
            return _dist(_free_end(pivot, diri, M, phi), hub) - M

        g_lo, g_hi = gap(phi_lo), gap(math.pi / 2.0)
        if not (g_lo > 0.0 > g_hi):
            raise NoRotationSolution(
                f"arc {page}: no rotation bracket (gap {g_lo:.3e} .. {g_hi:.3e}); M too small")
        lo, hi = phi_lo, math.pi / 2.0
        while abs(gap((lo + hi) / 2.0)) > BISECT_REL_TOL * M:
            mid = (lo + hi) / 2.0
            if gap(mid) > 0.0:
                lo = mid
            else:
                hi = mid
            if hi - lo < 1e-17:
                break
        phi_end = (lo + hi) / 2.0
        fi = _free_end(pivot, diri, M, phi_end)
        moves.append(SweepMove(ei.tag, pivot, layout.page_angle(page), phi_lo, phi_end, hub))
        _set_stick(sticks, ei.tag, ei.component, pivot, fi, pivot_label=_axis_label(ei), free_label=f"end{page}")
        sticks.append(EStick(hub, fi, ei.component, f"join{page}", "hub", f"end{page}"))

    comp = emb.components[0]
    info = replace(
        comp,
        reduced=True,
        deleted_tags=tuple(d.tag for d in doomed),
        moves=tuple(moves),
    )
    return EquilateralEmbedding(sticks=sticks, M=M, components=[info], layout=layout)


def _axis_label(stick: EStick) -> str:
    return stick.ja if stick.ja.startswith("bp") else stick.jb


def _set_stick(sticks: list[EStick], tag: str, component: int, pivot: V3, free: V3,
               pivot_label: str, free_label: str) -> None:
    for i, s in enumerate(sticks):
        if s.tag == tag and s.component == component:
            sticks[i] = EStick(pivot, free, component, tag, pivot_label, free_label)
            return
    raise EquilateralError(f"stick {tag} vanished mid-reduction")


# ---------------------------------------------------------------------------
# certification


def tolerance_report(emb: EquilateralEmbedding) -> ToleranceReport:
    M = emb.M
    snap = SNAP_REL * M
    max_dev = 0.0
    for s in emb.sticks:
        max_dev = max(max_dev, abs(_dist(s.a, s.b) - M) / M)
    min_clear = math.inf
    ss = emb.sticks
    for i in range(len(ss)):
        for j in range(i + 1, len(ss)):
            si, sj = ss[i], ss[j]
            keys_i = {(si.component, si.ja), (si.component, si.jb)}
            keys_j = {(sj.component, sj.ja), (sj.component, sj.jb)}
            if keys_i & keys_j:
                continue
            min_clear = min(min_clear, _seg_distance(si.a, si.b, sj.a, sj.b))
    if min_clear is math.inf:
        min_clear = M
    return ToleranceReport(max_dev, min_clear, min_clear / M)


def _same_seg(u, v, snap: float) -> bool:
    (ua, ub), (va, vb) = u, v
    return (max(_dist(ua, va), _dist(ub, vb)) <= snap
            or max(_dist(ua, vb), _dist(ub, va)) <= snap)


def isotopy_certificate(before: EquilateralEmbedding, after: EquilateralEmbedding,
                        layout: OpenBookLayout | None = None) -> CertificateReport:
    """Replay the recorded sweeps against the parked sticks, sampled at
    SWEEP_STEP_RAD, then check final clearances.  Contacts at the pivot and
    hub junctions are trimmed out; everything else must keep a positive
    margin of CERT_CLEARANCE_REL * M.  Each sweep must also end exactly where
    the claimed embedding puts its stick, and sticks without a recorded sweep
    must not have moved at all."""
    layout = layout or after.layout
    if layout is None:
        raise EquilateralError("no layout to certify against")
    M = after.M
    snap = SNAP_REL * M
    floor = CERT_CLEARANCE_REL * M
    comp = after.components[0]

    # state: parked stick positions by tag, starting from tents minus deletions
    state: dict[str, tuple[V3, V3]] = {}
    for s in before.sticks:
        if s.tag not in comp.deleted_tags:
            state[s.tag] = (s.a, s.b)
    final = {s.tag: (s.a, s.b) for s in after.sticks}

    report = CertificateReport(passed=True)
    for move in comp.moves:
        diri = (math.cos(move.page_angle), math.sin(move.page_angle))
        steps = max(2, int(math.ceil(abs(move.phi_end - move.phi_start) / SWEEP_STEP_RAD)) + 1)
        min_seen = math.inf
        for step in range(steps + 1):
            phi = move.phi_start + (move.phi_end - move.phi_start) * step / steps
            free = _free_end(move.pivot, diri, M, phi)
            movers = [(move.pivot, free)]
            if move.hub is not None:
                movers.append((move.hub, free))
            for tag, (pa, pb) in state.items():
                if tag == move.tag:
                    continue
                for (qa, qb) in movers:
                    dist = _clearance(qa, qb, pa, pb, snap)
                    min_seen = min(min_seen, dist)
        report.moves.append((move.tag, min_seen))
        if min_seen <= floor:
            report.passed = False
            report.detail = f"sweep of {move.tag} pinched to {min_seen:.3e} (floor {floor:.3e})"
            return report
        end_free = _free_end(move.pivot, diri, M, move.phi_end)
        claimed = final.get(move.tag)
        if claimed is None or not _same_seg(claimed, (move.pivot, end_free), snap):
            report.passed = False
            report.detail = f"{move.tag} does not end where its sweep stops"
            return report
        state[move.tag] = claimed
        if move.hub is not None:
            page = move.tag[3:].split(".")[0]
            joiner = final.get(f"join{page}")
            if joiner is None or not _same_seg(joiner, (move.hub, end_free), snap):
                report.passed = False
                report.detail = f"join{page} does not glue the hub to the swept end"
                return report
            state[f"join{page}"] = joiner

    if set(state) != set(final):
        report.passed = False
        report.detail = "stick tags differ from the swept state"
        return report
    for tag, seg in state.items():
        if not _same_seg(seg, final[tag], snap):
            report.passed = False
            report.detail = f"{tag} moved without a recorded sweep"
            return report

    tol = tolerance_report(after)
    if tol.min_clearance < floor:
        report.passed = False
        report.detail = f"final clearance {tol.min_clearance:.3e} below floor {floor:.3e}"
    else:
        report.detail = f"{len(comp.moves)} sweeps clean; final clearance {tol.min_clearance:.3e}"
    return report


# ---------------------------------------------------------------------------
# drivers


def build_component(vp: ValidatedPresentation, M: float | None = None,
                    retries: int = MAX_RETRIES, component: int = 0) -> EquilateralEmbedding:
    """Tents, reduction and certificate with doubling-M retries."""
    M0 = float(M) if M is not None else DEFAULT_M_FACTOR * vp.m
    last: Exception | None = None
    for attempt in range(retries + 1):
        m_try = M0 * (2.0 ** attempt)
        try:
            tents = build_tents(vp, m_try, component=component)
            red = reduce_top(tents)
            cert = isotopy_certificate(tents, red)
            if not cert.passed:
                raise CertificateFailure(cert.detail)
            tol = tolerance_report(red)
            if tol.min_clearance < CERT_CLEARANCE_REL * m_try:
                raise ClearanceViolation(
                    f"clearance {tol.min_clearance:.3e} below {CERT_CLEARANCE_REL * m_try:.3e}")
            red.tolerance = tol
            red.certificate = cert
            return red
        except (MTooSmall, NoRotationSolution, ClearanceViolation, CertificateFailure) as err:
            last = err
    assert last is not None
    raise last


def assemble_split(parts: list[EquilateralEmbedding]) -> EquilateralEmbedding:
    """Translate component builds into boxes separated by at least M along x.

    All parts must share the same stick length; an equal-length embedding
    has exactly one.
    """
    if not parts:
        raise EquilateralError("nothing to assemble")
    M = parts[0].M
    for p in parts:
        if abs(p.M - M) > 1e-9 * M:
            raise EquilateralError("components were built with different stick lengths")
    sticks: list[EStick] = []
    components: list[ComponentInfo] = []
    cursor = 0.0
    for idx, part in enumerate(parts):
        xs = [c for s in part.sticks for c in (s.a[0], s.b[0])]
        lo, hi = min(xs), max(xs)
        shift = cursor - lo
        for s in part.sticks:
            sticks.append(EStick(
                (s.a[0] + shift, s.a[1], s.a[2]),
                (s.b[0] + shift, s.b[1], s.b[2]),
                idx, s.tag, s.ja, s.jb))
        info = replace(part.components[0], index=idx, offset=(shift, 0.0, 0.0))
        components.append(info)
        cursor += (hi - lo) + M
    out = EquilateralEmbedding(sticks=sticks, M=M, components=components, layout=None)
    out.tolerance = tolerance_report(out)
    certs = [p.certificate for p in parts]
    out.certificate = CertificateReport(
        passed=all(c is None or c.passed for c in certs),
        moves=[mv for c in certs if c for mv in c.moves],
        detail=f"{len(parts)} component certificates combined",
    )
    return out


def build_equilateral(vp: ValidatedPresentation, M: float | None = None,
                      retries: int = MAX_RETRIES) -> EquilateralEmbedding:
    """Build one presentation, splitting into boxed components when the
    declared split count matches the abstract component count.

    A declared k below the abstract count means some components are linked
    through each other, so the whole presentation goes up as one piece and
    the finer per-component stick count does not apply.
    """
    from .arc_presentation import split_components

    n_comp = len(vp.vgraph.components)
    k = vp.params.k if vp.params is not None else 1
    if n_comp > 1 and k == n_comp:
        vps = split_components(vp)
    else:
        vps = [vp]
    if len(vps) == 1:
        return build_component(vps[0], M, retries=retries)

    M0 = float(M) if M is not None else DEFAULT_M_FACTOR * max(p.m for p in vps)
    last: Exception | None = None
    for attempt in range(retries + 1):
        m_try = M0 * (2.0 ** attempt)
        try:
            parts = [build_component(p, m_try, retries=0, component=i) for i, p in enumerate(vps)]
        except (MTooSmall, NoRotationSolution, ClearanceViolation, CertificateFailure) as err:
            last = err
            continue
        return assemble_split(parts)
    assert last is not None
    raise last
