"""Convex subsets of the complex plane held as vertex lists.

A :class:`ConvexRegion` is a point, a segment, or a counterclockwise convex
polygon.  Regions are closed; every predicate accepts an additive tolerance.
Intervals on the real line are ``(lo, hi)`` tuples, with ``None`` for empty.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

DEFAULT_TOL = 1e-9
INTERVAL_TOL = 1e-7


class Kind(str, enum.Enum):
    POINT = "Point"
    SEGMENT = "Segment"
    POLYGON = "Polygon"


@dataclass(frozen=True, eq=False)
class ConvexRegion:
    kind: Kind
    vertices: np.ndarray = field(repr=False)
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=complex).reshape(-1)
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "kind", Kind(self.kind))
        expected = {Kind.POINT: 1, Kind.SEGMENT: 2}.get(self.kind)
        if expected is not None and len(v) != expected:
            raise ValueError(f"{self.kind.value} needs {expected} vertices, got {len(v)}")
        if self.kind is Kind.POLYGON and len(v) < 3:
            raise ValueError("polygon needs at least 3 vertices")

    def __repr__(self) -> str:
        return f"ConvexRegion({self.kind.value}, {len(self.vertices)} vertices)"

    def diameter(self) -> float:
        v = self.vertices
        if self.kind is Kind.POINT:
            return 0.0
        if self.kind is Kind.SEGMENT:
            return float(abs(v[1] - v[0]))
        return _polygon_diameter(v)

    def area(self) -> float:
        if self.kind is not Kind.POLYGON:
            return 0.0
        x, y = self.vertices.real, self.vertices.imag
        return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))

    def perimeter(self) -> float:
        if self.kind is Kind.POINT:
            return 0.0
        v = self.vertices
        if self.kind is Kind.SEGMENT:
            return 2.0 * abs(v[1] - v[0])
        return float(np.sum(np.abs(np.roll(v, -1) - v)))

    def support(self, theta) -> np.ndarray:
        """``max Re(e^{-i theta} z)`` over the region, for each angle."""
        w = np.exp(-1j * np.asarray(theta, dtype=float))
        return np.max((w[..., None] * self.vertices).real, axis=-1)

    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        v = self.vertices
        if self.kind is Kind.POINT:
            return v, v
        if self.kind is Kind.SEGMENT:
            return v[:1], v[1:]
        return v, np.roll(v, -1)

    def distance(self, z) -> np.ndarray:
        """Euclidean distance from each point of ``z`` to the region (0 inside)."""
        z = np.asarray(z, dtype=complex)
        flat = z.reshape(-1)
        out = np.zeros(flat.shape)
        todo = ~self._inside(flat) if self.kind is Kind.POLYGON else np.ones(flat.shape, dtype=bool)
        idx = np.flatnonzero(todo)
        a, b = self.edges()
        step = max(1, (1 << 21) // len(a))
        for start in range(0, len(idx), step):
            sel = idx[start : start + step]
            out[sel] = _segment_distance(flat[sel, None], a, b).min(axis=-1)
        return out.reshape(z.shape)

    @cached_property
    def _fan(self) -> tuple[complex, complex, np.ndarray]:
        v = self.vertices
        base = v[1] - v[0]
        ang = np.angle((v[1:] - v[0]) / base)
        return complex(v[0]), complex(base), np.maximum.accumulate(ang)

    def _inside(self, z: np.ndarray) -> np.ndarray:
        """Point-in-convex-polygon by binary search over the fan at vertex 0."""
        v = self.vertices
        v0, base, ang = self._fan
        w = (z - v0) / base
        a = np.angle(w)
        ok = (a >= 0.0) & (a <= ang[-1])
        k = np.clip(np.searchsorted(ang, a, side="right") - 1, 0, len(v) - 3)
        p, q = v[k + 1], v[k + 2]
        cross = ((q - p).conj() * (z - p)).imag
        return (ok & (cross >= 0.0)) | (w == 0)

    def support_vertices(self, theta) -> np.ndarray:
        """A maximiser of ``Re(e^{-i theta} z)`` over the region for each angle."""
        breaks, owner = self._normal_fan
        t = np.mod(np.asarray(theta, dtype=float), 2.0 * np.pi)
        k = np.searchsorted(breaks, t, side="right") - 1
        return self.vertices[owner[k]]

    @cached_property
    def _normal_fan(self) -> tuple[np.ndarray, np.ndarray]:
        # breaks[k] starts the arc of outward normal angles owned by vertex owner[k]
        v = self.vertices
        if self.kind is Kind.POINT:
            return np.array([0.0]), np.array([0])
        a, b = self.edges()
        if self.kind is Kind.SEGMENT:
            phi = np.angle(b[0] - a[0]) - np.pi / 2.0
            starts = np.mod(np.array([phi, phi + np.pi]), 2.0 * np.pi)
            owners = np.array([1, 0])
        else:
            # edge k from v[k] to v[k+1] has outward normal arg(d) - pi/2; vertex k+1 owns
            # the arc from normal k to normal k+1
            starts = np.mod(np.angle(b - a) - np.pi / 2.0, 2.0 * np.pi)
            owners = (np.arange(len(v)) + 1) % len(v)
        order = np.argsort(starts, kind="stable")
        starts, owners = starts[order], owners[order]
        # the arc wrapping through angle 0 belongs to the owner of the last break
        return np.concatenate([[0.0], starts]), np.concatenate([[owners[-1]], owners])

    def __contains__(self, z) -> bool:
        return bool(contains(self, z, self.tol))


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def _segment_distance(z: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    d = b - a
    len2 = (d * d.conj()).real
    safe = np.where(len2 > 0.0, len2, 1.0)
    t = np.clip(((z - a) * d.conj()).real / safe, 0.0, 1.0)
    t = np.where(len2 > 0.0, t, 0.0)
    return np.abs(z - (a + t * d))


def _point_segment_distance(z: complex, a: complex, b: complex) -> float:
    d = b - a
    len2 = d.real * d.real + d.imag * d.imag
    if len2 == 0.0:
        return abs(z - a)
    w = z - a
    t = min(1.0, max(0.0, (w.real * d.real + w.imag * d.imag) / len2))
    return abs(w - t * d)


def _farthest_pair(points: np.ndarray) -> tuple[complex, complex]:
    d = np.abs(points[:, None] - points[None, :])
    i, j = np.unravel_index(np.argmax(d), d.shape)
    a, b = points[i], points[j]
    if (a.real, a.imag) > (b.real, b.imag):
        a, b = b, a
    return complex(a), complex(b)


def hull(points, tol: float = DEFAULT_TOL) -> ConvexRegion:
    """Convex hull by Andrew's monotone chain.

    Vertices closer than ``tol`` to the chord of their neighbours are dropped;
    sets of width at most ``tol`` become a Segment, and sets of diameter at
    most ``tol`` become a Point.
    """
    pts = np.unique(np.asarray(points, dtype=complex).reshape(-1))
    if len(pts) == 0:
        raise ValueError("hull of an empty point set")
    if math.hypot(np.ptp(pts.real), np.ptp(pts.imag)) <= tol:
        return ConvexRegion(Kind.POINT, [complex(np.mean(pts))], tol)
    # np.unique sorts complex numbers lexicographically by (real, imag)
    lower = _chain(pts)
    upper = _chain(pts[::-1])
    ring = [complex(z) for z in np.concatenate([lower[:-1], upper[:-1]])]
    if len(ring) >= 3 and not _is_thin(np.array(ring), tol):
        return ConvexRegion(Kind.POLYGON, _simplify(ring, tol), tol)
    a, b = _farthest_pair(np.array(ring if len(ring) >= 2 else [pts[0], pts[-1]]))
    return ConvexRegion(Kind.SEGMENT, [a, b], tol)


def _chain(pts: np.ndarray) -> np.ndarray:
    """Monotone-chain half hull of lexicographically sorted points.

    A point on or right of the chord between its current neighbours is not
    a strict hull vertex.  Each pass drops such points, but never two
    neighbours at once (every other one within a run), so every removal is
    justified by points that survive it, as in the sequential algorithm.
    Repeating until none remain leaves the strictly convex chain.
    """
    while len(pts) >= 3:
        a, b, c = pts[:-2], pts[1:-1], pts[2:]
        drop = ((b - a).conj() * (c - a)).imag <= 0.0
        if not drop.any():
            break
        i = np.arange(len(drop))
        starts = drop & ~np.concatenate([[False], drop[:-1]])
        run_start = np.maximum.accumulate(np.where(starts, i, 0))
        drop &= (i - run_start) % 2 == 0
        pts = np.concatenate([pts[:1], pts[1:-1][~drop], pts[-1:]])
    return pts


def _simplify(ring: list[complex], tol: float) -> list[complex]:
    """Drop vertices of a convex ring lying within ``tol`` of their neighbours' chord."""
    out: list[complex] = []
    for p in ring + ring[:1]:
        while len(out) >= 2 and _point_segment_distance(out[-1], out[-2], p) <= tol:
            out.pop()
        out.append(p)
    out.pop()
    return out if len(out) >= 3 else ring


def _is_thin(ring: np.ndarray, tol: float) -> bool:
    """Whether a convex ring has width at most about ``tol``.

    Uses area <= width * diameter <= 2 * area with a cheap diameter proxy.
    """
    x, y = ring.real, ring.imag
    area = 0.5 * abs(float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)))
    reach = float(np.max(np.abs(ring - ring[0])))
    return area <= tol * reach


def _polygon_diameter(v: np.ndarray) -> float:
    """Rotating calipers over a counterclockwise convex polygon."""
    n = len(v)
    pts = [complex(p) for p in v]

    def area2(a: complex, b: complex, c: complex) -> float:
        return abs(_cross(a, b, c))

    best = 0.0
    j = 1
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        while area2(a, b, pts[(j + 1) % n]) > area2(a, b, pts[j]):
            j = (j + 1) % n
        best = max(best, abs(a - pts[j]), abs(b - pts[j]))
    return best


def contains(R: ConvexRegion, z, tol: float | None = None):
    """Whether ``z`` lies within ``tol`` of ``R``; vectorised over ``z``."""
    tol = R.tol if tol is None else tol
    out = R.distance(z) <= tol
    return bool(out) if np.ndim(out) == 0 else out


def hausdorff(R: ConvexRegion, S: ConvexRegion) -> float:
    """Hausdorff distance as the sup-norm gap between support functions.

    Between consecutive breakpoints of the two normal fans both support
    points are fixed vertices, so the gap is a sinusoid whose maximum is
    taken in closed form.
    """
    br, _ = R._normal_fan
    bs, _ = S._normal_fan
    cuts = np.unique(np.concatenate([br, bs, [0.0]]))
    lo = cuts
    hi = np.append(cuts[1:], 2.0 * np.pi)
    keep = hi > lo
    lo, hi = lo[keep], hi[keep]
    mid = 0.5 * (lo + hi)
    d = R.support_vertices(mid) - S.support_vertices(mid)
    # gap(t) = Re(e^{-it} d) = |d| cos(t - arg d) on [lo, hi]
    best = np.maximum(np.abs((np.exp(-1j * lo) * d).real), np.abs((np.exp(-1j * hi) * d).real))
    peak = np.angle(d)
    for shift in (0.0, np.pi, 2.0 * np.pi, -np.pi):
        t = peak + shift
        inside = (t >= lo) & (t <= hi)
        best = np.where(inside, np.maximum(best, np.abs(d)), best)
    return float(np.max(best))


def real_projection(R: ConvexRegion) -> tuple[float, float]:
    re = R.vertices.real
    return float(re.min()), float(re.max())


def real_axis_section(R: ConvexRegion, tol: float | None = None):
    """``{x real : dist(x, R) <= tol}`` clipped to the real projection of ``R``.

    Returns ``(lo, hi)`` or ``None``.  The distance along the axis is convex,
    so its sublevel set is an interval found by bisection.
    """
    tol = R.tol if tol is None else tol
    lo_p, hi_p = real_projection(R)

    def dist(x: float) -> float:
        return float(R.distance(complex(x, 0.0)))

    # minimise the convex distance on [lo_p, hi_p] by golden-section search
    a, b = lo_p, hi_p
    g = (math.sqrt(5.0) - 1.0) / 2.0
    c, d = b - g * (b - a), a + g * (b - a)
    fc, fd = dist(c), dist(d)
    for _ in range(200):
        if b - a <= 1e-15 * max(1.0, abs(a), abs(b)):
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = dist(c)
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = dist(d)
    best = min((lo_p, dist(lo_p)), (hi_p, dist(hi_p)), (c, fc), (d, fd), key=lambda t: t[1])
    x0, f0 = best
    if f0 > tol:
        return None

    def edge(inside: float, outside: float) -> float:
        if dist(outside) <= tol:
            return outside
        for _ in range(200):
            mid = 0.5 * (inside + outside)
            if mid == inside or mid == outside:
                break
            if dist(mid) <= tol:
                inside = mid
            else:
                outside = mid
        return inside

    return edge(x0, lo_p), edge(x0, hi_p)


def intervals_equal(p, q, tol: float) -> bool:
    if p is None or q is None:
        return p is None and q is None
    return abs(p[0] - q[0]) <= tol and abs(p[1] - q[1]) <= tol


def union_conjugate_convex(R: ConvexRegion, tol: float = INTERVAL_TOL) -> bool:
    """Whether the real projection of ``R`` equals its real-axis section within ``tol``.

    Necessary for ``R`` together with its mirror image to be convex, but not
    sufficient: the parallelogram with vertices -1-i, 0, i, -1 passes while
    its union with its mirror is not convex.  For a numerical range the test
    still implies that the quaternionic range is convex.
    """
    return intervals_equal(real_projection(R), real_axis_section(R, tol), tol)


def conjugate(R: ConvexRegion) -> ConvexRegion:
    v = R.vertices.conj()
    if R.kind is Kind.POLYGON:
        # reflection reverses orientation; keep the lowest-leftmost vertex first
        v = v[::-1]
        start = int(np.lexsort((v.imag, v.real))[0])
        v = np.roll(v, -start)
    return ConvexRegion(R.kind, v, R.tol)


def union_hull(*regions: ConvexRegion, tol: float | None = None) -> ConvexRegion:
    tol = regions[0].tol if tol is None else tol
    return hull(np.concatenate([r.vertices for r in regions]), tol)


def disk_polygon(center: complex, radius: float, m: int = 720, tol: float = DEFAULT_TOL) -> ConvexRegion:
    """Regular ``m``-gon inscribed in a circle; a Point when ``radius`` is 0."""
    if radius <= tol:
        return ConvexRegion(Kind.POINT, [complex(center)], tol)
    t = 2.0 * np.pi * np.arange(m) / m
    return ConvexRegion(Kind.POLYGON, center + radius * np.exp(1j * t), tol)


def ellipse_polygon(center: complex, a: float, b: float, m: int = 720, tol: float = DEFAULT_TOL) -> ConvexRegion:
    """Inscribed polygon of the axis-aligned ellipse with semi-axes ``a`` (Re) and ``b`` (Im)."""
    t = 2.0 * np.pi * np.arange(m) / m
    return hull(center + a * np.cos(t) + 1j * b * np.sin(t), tol)
