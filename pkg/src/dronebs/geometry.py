"""Planar primitives: vectors, convex polygons, disks, and the rigid
three-drone fleet formation with its overlapped coverage area.

All coordinates are metres in a flat Cartesian plane. Containment is
closed (boundary points count as inside) with an absolute slack of
GEOM_TOL metres on every predicate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

# Absolute tolerance for geometric predicates, in metres.
GEOM_TOL = 1e-9

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class Vec2:
    """A 2-D point or displacement, components in metres."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite Vec2 components ({self.x}, {self.y})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> "Vec2":
        return Vec2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Vec2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def rotated(self, angle: float) -> "Vec2":
        c, s = math.cos(angle), math.sin(angle)
        return Vec2(self.x * c - self.y * s, self.x * s + self.y * c)

    def perp(self) -> "Vec2":
        """Counter-clockwise perpendicular."""
        return Vec2(-self.y, self.x)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


def _shoelace(vertices: Sequence[Vec2]) -> float:
    """Signed area; positive for counter-clockwise vertex order."""
    s = 0.0
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        s += a.x * b.y - b.x * a.y
    return 0.5 * s


class ConvexPolygon:
    """A strictly convex polygon stored counter-clockwise.

    Input vertices may be given in either orientation; clockwise input is
    reversed and collinear vertices are dropped. Degenerate input (fewer
    than 3 effective vertices, zero area, or a reflex corner) is rejected.
    """

    __slots__ = ("vertices", "area")

    def __init__(self, vertices: Sequence[Vec2]):
        verts = [v if isinstance(v, Vec2) else Vec2(*v) for v in vertices]
        if len(verts) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        if _shoelace(verts) < 0:
            verts.reverse()

        scale = max(max(abs(v.x), abs(v.y)) for v in verts) + 1.0
        cross_tol = GEOM_TOL * scale

        # Drop collinear (and repeated) vertices, reject reflex corners,
        # then demand strict convexity of what remains.
        kept: list[Vec2] = []
        n = len(verts)
        for i in range(n):
            prev, cur, nxt = verts[i - 1], verts[i], verts[(i + 1) % n]
            turn = (cur - prev).cross(nxt - cur)
            if turn < -cross_tol:
                raise ValueError("polygon is not convex")
            if turn > cross_tol:
                kept.append(cur)
        if len(kept) < 3:
            raise ValueError("degenerate polygon: fewer than 3 corner vertices")
        n = len(kept)
        for i in range(n):
            prev, cur, nxt = kept[i - 1], kept[i], kept[(i + 1) % n]
            if (cur - prev).cross(nxt - cur) <= cross_tol:
                raise ValueError("polygon is not strictly convex")

        self.vertices: tuple[Vec2, ...] = tuple(kept)
        self.area: float = _shoelace(kept)
        if self.area <= 0.0:
            raise ValueError("polygon area must be positive")

    def __repr__(self):
        pts = ", ".join(f"({v.x:g},{v.y:g})" for v in self.vertices)
        return f"ConvexPolygon[{pts}]"

    def centroid(self) -> Vec2:
        """Area centroid (not the vertex mean)."""
        cx = cy = 0.0
        n = len(self.vertices)
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            w = a.x * b.y - b.x * a.y
            cx += (a.x + b.x) * w
            cy += (a.y + b.y) * w
        k = 1.0 / (6.0 * self.area)
        return Vec2(cx * k, cy * k)

    def bounding_box(self) -> tuple[float, float, float, float]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def contains(self, p: Vec2) -> bool:
        """Closed containment: boundary points are inside."""
        n = len(self.vertices)
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            if (b - a).cross(p - a) < -GEOM_TOL * max(1.0, (b - a).norm()):
                return False
        return True

    def width(self, direction: float) -> float:
        """Extent of the projection onto the axis at angle `direction`.

        This is the polygon's diameter function evaluated at `direction`.
        """
        c, s = math.cos(direction), math.sin(direction)
        projs = [v.x * c + v.y * s for v in self.vertices]
        return max(projs) - min(projs)

    def clip_halfplane(self, normal: Vec2, offset: float) -> "ConvexPolygon | None":
        """Intersect with the half-plane {p : normal . p <= offset}.

        Returns None when the intersection is empty or degenerate.
        """
        out: list[Vec2] = []
        n = len(self.vertices)
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            da = normal.dot(a) - offset
            db = normal.dot(b) - offset
            if da <= 0.0:
                out.append(a)
            if (da < 0.0 < db) or (db < 0.0 < da):
                t = da / (da - db)
                out.append(Vec2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
        if len(out) < 3:
            return None
        try:
            return ConvexPolygon(out)
        except ValueError:
            return None


@dataclass(frozen=True)
class Disk:
    """A closed disk: coverage footprints and position-estimate regions."""

    center: Vec2
    radius: float

    def __post_init__(self):
        if self.radius < 0.0:
            raise ValueError(f"negative disk radius {self.radius}")

    def contains(self, p: Vec2) -> bool:
        return self.center.distance_to(p) <= self.radius + GEOM_TOL


@dataclass(frozen=True)
class FleetGeometry:
    """Rigid formation of three drones on an equilateral triangle.

    `side_d` is the mutual distance between any two drones and
    `coverage_radius_rc` the per-drone ground coverage radius. The triple
    overlap of the three coverage disks is nonempty iff side_d < sqrt(3)*Rc.
    """

    centroid: Vec2
    heading: float
    side_d: float
    coverage_radius_rc: float

    def __post_init__(self):
        if self.side_d < 0.0:
            raise ValueError(f"negative mutual distance {self.side_d}")
        if self.coverage_radius_rc <= 0.0:
            raise ValueError(f"coverage radius must be positive, got {self.coverage_radius_rc}")
        if self.side_d >= SQRT3 * self.coverage_radius_rc:
            raise ValueError(
                f"mutual distance {self.side_d} leaves no triple overlap "
                f"(must be < sqrt(3) * {self.coverage_radius_rc})"
            )

    def drone_positions(self) -> tuple[Vec2, Vec2, Vec2]:
        """Vertices of the formation triangle, one leading along `heading`.

        The circumradius of an equilateral triangle of side d is d/sqrt(3);
        drone 0 sits at that distance from the centroid in the heading
        direction, drones 1 and 2 at +/-120 degrees from it.
        """
        r = self.side_d / SQRT3
        out = []
        for k in range(3):
            a = self.heading + k * (2.0 * math.pi / 3.0)
            out.append(Vec2(self.centroid.x + r * math.cos(a), self.centroid.y + r * math.sin(a)))
        return tuple(out)

    def guaranteed_footprint(self) -> Disk:
        """Inscribed disk certain to lie inside all three coverage disks.

        Any point within rho = Rc - d/sqrt(3) of the centroid is, by the
        triangle inequality through the circumradius, within Rc of every
        drone. Conservative: the true triple-overlap region is larger.
        """
        rho = self.coverage_radius_rc - self.side_d / SQRT3
        return Disk(self.centroid, max(rho, 0.0))

    def coverage_disks(self) -> tuple[Disk, Disk, Disk]:
        return tuple(Disk(p, self.coverage_radius_rc) for p in self.drone_positions())


def overlap_area(d: float, rc: float) -> float:
    """Area of the triple overlap of three coverage disks whose centers
    form an equilateral triangle of side d, each disk of radius rc.

    Closed form: rc^2 (3a - pi/2) - (3d/2) sqrt(rc^2 - d^2/4) + (sqrt(3)/4) d^2
    with a = arccos(d / (2 rc)). Collapses to the full disk area pi rc^2 at
    d = 0 and to zero at d = sqrt(3) rc.
    """
    if rc <= 0.0:
        raise ValueError(f"coverage radius must be positive, got {rc}")
    if d < 0.0:
        raise ValueError(f"negative mutual distance {d}")
    if d > SQRT3 * rc * (1.0 + 1e-12):
        raise ValueError(f"mutual distance {d} exceeds sqrt(3) * {rc}: no triple overlap")
    d = min(d, SQRT3 * rc)
    alpha = math.acos(d / (2.0 * rc))
    area = (
        rc * rc * (3.0 * alpha - math.pi / 2.0)
        - 1.5 * d * math.sqrt(rc * rc - 0.25 * d * d)
        + (SQRT3 / 4.0) * d * d
    )
    return max(area, 0.0)


def point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> float:
    """Distance from p to the closed segment [a, b]."""
    ab = b - a
    ab2 = ab.dot(ab)
    if ab2 == 0.0:
        return p.distance_to(a)
    t = max(0.0, min(1.0, (p - a).dot(ab) / ab2))
    return p.distance_to(Vec2(a.x + t * ab.x, a.y + t * ab.y))


def point_polyline_distance(p: Vec2, polyline: Sequence[Vec2]) -> float:
    """Distance from p to the nearest point of an open polyline."""
    if not polyline:
        raise ValueError("empty polyline")
    if len(polyline) == 1:
        return p.distance_to(polyline[0])
    return min(
        point_segment_distance(p, polyline[i], polyline[i + 1])
        for i in range(len(polyline) - 1)
    )
