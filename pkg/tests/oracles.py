"""Independent brute-force oracles the tests check the library against.

Everything here is written straight from definitions and shares no code
with the package: interleaving by walking the circle once, segment
intersection by solving the parametric equations with Cramer's rule, knot
invariants (Fox 3-colorings, linking number) read off a generic exact shear
projection of the finished 3D sticks.  Known invariant values (trefoil 9
colorings, hopf |lk| = 1) then pin down the whole pipeline from outside.

All arithmetic is over Fraction; float inputs are dyadic rationals and
convert exactly, so the same predicates certify both builders.
"""

from __future__ import annotations

from fractions import Fraction


# ---------------------------------------------------------------------------
# circular interleaving


def circle_walk_crossing(m: int, ends_a, ends_b) -> bool:
    """Walk the m boundary positions once; crossing means the four endpoint
    labels read ABAB or BABA.  Chords sharing an endpoint never cross."""
    if set(ends_a) & set(ends_b):
        return False
    labels = []
    for pos in range(m):
        if pos in ends_a:
            labels.append("a")
        elif pos in ends_b:
            labels.append("b")
    return labels in (["a", "b", "a", "b"], ["b", "a", "b", "a"])


# ---------------------------------------------------------------------------
# exact 3D segment meeting


def _sub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _lerp(p, d, t):
    return (p[0] + t * d[0], p[1] + t * d[1], p[2] + t * d[2])


def _fr3(p):
    return tuple(Fraction(c) for c in p)


def segments_meet(p, q, r, s) -> str:
    """Exact closed-segment test: "none", "endpoint" (one shared declared
    endpoint), "point" (interior contact), or "overlap"."""
    p, q, r, s = _fr3(p), _fr3(q), _fr3(r), _fr3(s)
    d1, d2, w = _sub(q, p), _sub(s, r), _sub(r, p)
    n = _cross(d1, d2)
    if n != (0, 0, 0):
        if _dot(w, n) != 0:
            return "none"
        nn = _dot(n, n)
        t = Fraction(_dot(_cross(w, d2), n), nn)
        u = Fraction(_dot(_cross(w, d1), n), nn)
        if not (0 <= t <= 1 and 0 <= u <= 1):
            return "none"
        x = _lerp(p, d1, t)
        if x in (p, q) and x in (r, s):
            return "endpoint"
        return "point"
    # parallel
    if _cross(w, d1) != (0, 0, 0):
        return "none"
    dd = _dot(d1, d1)
    tr = Fraction(_dot(_sub(r, p), d1), dd)
    ts = Fraction(_dot(_sub(s, p), d1), dd)
    lo, hi = min(tr, ts), max(tr, ts)
    lo, hi = max(lo, Fraction(0)), min(hi, Fraction(1))
    if lo > hi:
        return "none"
    if lo == hi:
        x = _lerp(p, d1, lo)
        if x in (p, q) and x in (r, s):
            return "endpoint"
        return "point"
    return "overlap"


def embedding_is_simple(segments) -> tuple[bool, str]:
    """All-pairs check: only single shared endpoints allowed."""
    segs = list(segments)
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            kind = segments_meet(*segs[i], *segs[j])
            if kind not in ("none", "endpoint"):
                return False, f"pair ({i}, {j}): {kind}"
    return True, ""


# ---------------------------------------------------------------------------
# heights at a projected point, straight from raw sticks


def height_over_point(sticks, x2d) -> Fraction:
    """z of the unique stick whose projection covers the 2D point; linear
    interpolation in exact arithmetic."""
    hits = []
    for (a, b) in sticks:
        ax, ay, az = _fr3(a)
        bx, by, bz = _fr3(b)
        dx, dy = bx - ax, by - ay
        wx, wy = Fraction(x2d[0]) - ax, Fraction(x2d[1]) - ay
        if wx * dy - wy * dx != 0:
            continue
        dd = dx * dx + dy * dy
        if dd == 0:
            continue
        t = (wx * dx + wy * dy) / dd
        if 0 <= t <= 1:
            hits.append(az + t * (bz - az))
    if len(hits) != 1:
        raise AssertionError(f"{len(hits)} sticks over point {x2d}")
    return hits[0]


def chord_meeting_param(boundary, ends_i, ends_j) -> tuple[Fraction, Fraction]:
    """(t_i, t_j) of the meeting point of two straight chords, parameters
    measured from each chord's first endpoint.  2x2 Cramer solve."""
    a, b = boundary[ends_i[0]], boundary[ends_i[1]]
    c, d = boundary[ends_j[0]], boundary[ends_j[1]]
    d1 = (b[0] - a[0], b[1] - a[1])
    d2 = (d[0] - c[0], d[1] - c[1])
    rhs = (c[0] - a[0], c[1] - a[1])
    det = d1[0] * (-d2[1]) - (-d2[0]) * d1[1]
    if det == 0:
        raise AssertionError("parallel chords")
    t = (rhs[0] * (-d2[1]) - (-d2[0]) * rhs[1]) / det
    u = (d1[0] * rhs[1] - rhs[0] * d1[1]) / det
    return Fraction(t), Fraction(u)


# ---------------------------------------------------------------------------
# 3D walks and generic shear projection


def chain_walks(segments) -> list[list[tuple[int, tuple, tuple]]]:
    """Chain sticks into closed walks by exact endpoint equality.

    Each 3D endpoint value must occur exactly twice (knots and links, not
    theta graphs).  Returns walks as lists of (segment_index, tail, head)."""
    segs = [(_fr3(a), _fr3(b)) for a, b in segments]
    incid: dict[tuple, list[int]] = {}
    for idx, (a, b) in enumerate(segs):
        incid.setdefault(a, []).append(idx)
        incid.setdefault(b, []).append(idx)
    for pt, ids in incid.items():
        if len(ids) != 2:
            raise AssertionError(f"endpoint {pt} has degree {len(ids)}, want 2")
    seen: set[int] = set()
    walks = []
    for start in range(len(segs)):
        if start in seen:
            continue
        walk = []
        idx, tail = start, segs[start][0]
        while True:
            a, b = segs[idx]
            head = b if tail == a else a
            walk.append((idx, tail, head))
            seen.add(idx)
            nxt = [i for i in incid[head] if i != idx]
            idx, tail = nxt[0], head
            if idx == start:
                break
        walks.append(walk)
    return walks


_SHEARS = (
    (Fraction(1, 97), Fraction(1, 89)),
    (Fraction(2, 101), Fraction(3, 103)),
    (Fraction(5, 107), Fraction(7, 109)),
    (Fraction(11, 113), Fraction(13, 127)),
)


class _Crossing:
    __slots__ = ("under", "over", "sign")

    def __init__(self, under, over, sign):
        self.under = under      # (walk, step, param) of the lower strand
        self.over = over
        self.sign = sign


def _shear_diagram(walks, px, py):
    """Project (x, y, z) -> (x + px z, y + py z), depth = z.  Returns the
    crossings of a regular diagram or None when this shear is degenerate."""
    flat = []      # (walk_idx, step_idx, p2, q2, z_p, z_q)
    for wi, walk in enumerate(walks):
        for si, (_, tail, head) in enumerate(walk):
            p2 = (tail[0] + px * tail[2], tail[1] + py * tail[2])
            q2 = (head[0] + px * head[2], head[1] + py * head[2])
            if p2 == q2:
                return None
            flat.append((wi, si, p2, q2, tail[2], head[2]))

    crossings = []
    points = set()
    for i in range(len(flat)):
        for j in range(i + 1, len(flat)):
            wi, si, p, q, zp, zq = flat[i]
            wj, sj, r, s, zr, zs = flat[j]
            d1 = (q[0] - p[0], q[1] - p[1])
            d2 = (s[0] - r[0], s[1] - r[1])
            det = d1[0] * d2[1] - d1[1] * d2[0]
            # contacts are legitimate only at junctions shared in 3D
            shared_3d = {(p, zp), (q, zq)} & {(r, zr), (s, zs)}
            if det == 0:
                w = (r[0] - p[0], r[1] - p[1])
                if w[0] * d1[1] - w[1] * d1[0] == 0:
                    # collinear projections: abutting at one shared 3D
                    # junction is fine, anything else is degenerate
                    dd = d1[0] ** 2 + d1[1] ** 2
                    tr = Fraction((r[0] - p[0]) * d1[0] + (r[1] - p[1]) * d1[1], dd)
                    ts = Fraction((s[0] - p[0]) * d1[0] + (s[1] - p[1]) * d1[1], dd)
                    lo, hi = max(min(tr, ts), Fraction(0)), min(max(tr, ts), Fraction(1))
                    if lo < hi:
                        return None
                    if lo == hi:
                        x2 = (p[0] + lo * d1[0], p[1] + lo * d1[1])
                        if not any(pt == x2 for (pt, _) in shared_3d):
                            return None
                continue
            w = (r[0] - p[0], r[1] - p[1])
            t = Fraction(w[0] * d2[1] - w[1] * d2[0], det)
            u = Fraction(w[0] * d1[1] - w[1] * d1[0], det)
            if not (0 <= t <= 1 and 0 <= u <= 1):
                continue
            x2 = (p[0] + t * d1[0], p[1] + t * d1[1])
            if t in (0, 1) or u in (0, 1):
                if t in (0, 1) and u in (0, 1) and any(pt == x2 for (pt, _) in shared_3d):
                    continue        # the declared junction
                return None         # endpoint grazing the other segment
            if x2 in points:
                return None         # triple point
            points.add(x2)
            zi = zp + t * (zq - zp)
            zj = zr + u * (zs - zr)
            if zi == zj:
                raise AssertionError("projected crossing with equal depths")
            # epsilon = sign of cross2(d_over, d_under); det is cross2(d1, d2)
            if zi < zj:
                crossings.append(_Crossing((wi, si, t), (wj, sj, u),
                                           -1 if det > 0 else 1))
            else:
                crossings.append(_Crossing((wj, sj, u), (wi, si, t),
                                           1 if det > 0 else -1))
    return crossings


def generic_diagram(segments):
    """Walks plus regular-diagram crossings under the first good shear."""
    walks = chain_walks(segments)
    for (px, py) in _SHEARS:
        crossings = _shear_diagram(walks, px, py)
        if crossings is not None:
            return walks, crossings
    raise AssertionError("no shear direction gave a regular diagram")


def _strands(walks, crossings):
    """Cut each walk at its under-points; returns (count, strand lookup)."""
    cuts: dict[int, list[tuple[int, Fraction, _Crossing]]] = {w: [] for w in range(len(walks))}
    for c in crossings:
        wi, si, t = c.under
        cuts[wi].append((si, t, c))
    strand = 0
    under_pair: dict[int, tuple[int, int]] = {}
    cover: dict[int, list[tuple[int, Fraction, Fraction, int]]] = {}
    for wi, walk in enumerate(walks):
        mine = sorted(cuts[wi], key=lambda x: (x[0], x[1]))
        k = len(mine)
        first = strand
        strand += k if k else 1
        cur = first
        pieces: list[tuple[int, Fraction, Fraction, int]] = []
        pos = 0
        ptr = 0
        for si in range(len(walk)):
            lo = Fraction(0)
            while ptr < len(mine) and mine[ptr][0] == si:
                _, t, c = mine[ptr]
                pieces.append((si, lo, t, cur))
                nxt = first + (pos + 1) % k
                under_pair[id(c)] = (cur, nxt)
                cur, lo, pos, ptr = nxt, t, pos + 1, ptr + 1
            pieces.append((si, lo, Fraction(1), cur))
        cover[wi] = pieces
    return strand, under_pair, cover


def _strand_at(cover, walk, step, t) -> int:
    for (si, lo, hi, s) in cover[walk]:
        if si == step and lo <= t <= hi:
            return s
    raise AssertionError(f"no strand at walk {walk} step {step} t={t}")


def _rank_mod3(rows, cols) -> int:
    mat = [row[:] for row in rows]
    rank = 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] % 3), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 if mat[rank][col] % 3 == 1 else 2
        mat[rank] = [(x * inv) % 3 for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % 3:
                f = mat[r][col] % 3
                mat[r] = [(x - f * y) % 3 for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def tricolor_count(segments) -> int:
    """Fox 3-colorings of the link the 3D sticks form: at every crossing
    under_in + under_out + over = 0 (mod 3); count = 3^nullity."""
    walks, crossings = generic_diagram(segments)
    n_strands, under_pair, cover = _strands(walks, crossings)
    rows = []
    for c in crossings:
        under_in, under_out = under_pair[id(c)]
        over = _strand_at(cover, *c.over)
        row = [0] * n_strands
        for s in (under_in, under_out, over):
            row[s] = (row[s] + 1) % 3
        rows.append(row)
    return 3 ** (n_strands - _rank_mod3(rows, n_strands))


def linking_number_abs(segments) -> Fraction:
    """|lk| of a 2-component link: half the signed crossing sum between the
    two walks.  The sign convention cancels inside the absolute value."""
    walks, crossings = generic_diagram(segments)
    if len(walks) != 2:
        raise AssertionError(f"need 2 components, found {len(walks)}")
    total = 0
    for c in crossings:
        if c.under[0] != c.over[0]:
            total += c.sign
    return abs(Fraction(total, 2))
