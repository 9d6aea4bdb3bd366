"""Stage-1 sweep planning: proportional decomposition of the operating
polygon, optimal sweep direction, and per-fleet zigzag lane paths.

The sweep direction is perpendicular to the direction of minimum polygon
width, which minimizes the number of lanes (turns). Divide lines between
sub-areas run parallel to the sweep direction, so neighbouring fleets
never share lane space.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

from .geometry import ConvexPolygon, FleetGeometry, Vec2, overlap_area

# Cut positions are bisected to floating-point exhaustion; 100 halvings of
# any metre-scale interval are far below coordinate resolution.
_BISECT_ITERS = 100


def _norm_angle_pi(a: float) -> float:
    """Fold an angle into [0, pi): directions are sign-free axes."""
    a = math.fmod(a, math.pi)
    if a < 0.0:
        a += math.pi
    if a >= math.pi:  # fmod edge
        a -= math.pi
    return a


@dataclass(frozen=True)
class DecompositionRequest:
    polygon: ConvexPolygon
    proportions: tuple[float, ...]

    def __post_init__(self):
        props = tuple(float(p) for p in self.proportions)
        object.__setattr__(self, "proportions", props)
        if len(props) < 1:
            raise ValueError("need at least one proportion")
        if any(p <= 0.0 for p in props):
            raise ValueError(f"proportions must be positive, got {props}")
        if abs(sum(props) - 1.0) > 1e-9:
            raise ValueError(f"proportions sum to {sum(props)}, expected 1.0")


@dataclass(frozen=True)
class Decomposition:
    sub_areas: tuple[ConvexPolygon, ...]
    sweep_direction: float


@dataclass(frozen=True)
class SweepPlan:
    fleet_id: int
    waypoints: tuple[Vec2, ...]
    lane_spacing: float
    estimated_duration: float
    sub_area: ConvexPolygon
    footprint_radius: float

    def path_length(self) -> float:
        return sum(
            self.waypoints[i].distance_to(self.waypoints[i + 1])
            for i in range(len(self.waypoints) - 1)
        )


def min_width_direction(poly: ConvexPolygon) -> float:
    """Direction in [0, pi) minimizing the polygon's width.

    The minimum width of a convex polygon is attained perpendicular to one
    of its edges, so only edge-normal directions are scanned. Ties go to
    the smallest angle.
    """
    n = len(poly.vertices)
    candidates = set()
    for i in range(n):
        e = poly.vertices[(i + 1) % n] - poly.vertices[i]
        candidates.add(_norm_angle_pi(math.atan2(e.y, e.x) + math.pi / 2.0))
    best_angle = None
    best_width = math.inf
    for angle in sorted(candidates):
        w = poly.width(angle)
        if w < best_width - 1e-9:
            best_width = w
            best_angle = angle
    return best_angle


def _clip_points(points: list[Vec2], normal: Vec2, offset: float) -> list[Vec2]:
    """Raw Sutherland-Hodgman clip against {p : normal . p <= offset}.

    Unlike ConvexPolygon.clip_halfplane this never validates the result,
    so degenerate slivers still yield their exact vertex set.
    """
    out: list[Vec2] = []
    n = len(points)
    for i in range(n):
        a, b = points[i], points[(i + 1) % n]
        da = normal.dot(a) - offset
        db = normal.dot(b) - offset
        if da <= 0.0:
            out.append(a)
        if (da < 0.0 < db) or (db < 0.0 < da):
            t = da / (da - db)
            out.append(Vec2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
    return out


def _area_left_of(poly: ConvexPolygon, axis: Vec2, t: float) -> float:
    piece = poly.clip_halfplane(axis, t)
    return piece.area if piece is not None else 0.0


def decompose(req: DecompositionRequest) -> Decomposition:
    """Slice the polygon into sub-areas matching the requested proportions.

    Divide lines are parallel to the sweep direction (the perpendicular of
    the minimum-width direction); cut positions along the slicing axis are
    bisected until the cumulative area matches the cumulative proportion.
    Sub-areas are returned in slicing-axis order.
    """
    poly = req.polygon
    theta_min = min_width_direction(poly)
    sweep_direction = _norm_angle_pi(theta_min + math.pi / 2.0)
    axis = Vec2(math.cos(theta_min), math.sin(theta_min))

    projs = [axis.dot(v) for v in poly.vertices]
    t_lo, t_hi = min(projs), max(projs)
    total = poly.area

    cuts: list[float] = []
    cum = 0.0
    for p in req.proportions[:-1]:
        cum += p
        target = cum * total
        lo, hi = t_lo, t_hi
        for _ in range(_BISECT_ITERS):
            mid = 0.5 * (lo + hi)
            if _area_left_of(poly, axis, mid) < target:
                lo = mid
            else:
                hi = mid
        cuts.append(0.5 * (lo + hi))

    sub_areas: list[ConvexPolygon] = []
    prev_cut: float | None = None
    for k in range(len(req.proportions)):
        piece = poly
        if prev_cut is not None:
            piece = piece.clip_halfplane(Vec2(-axis.x, -axis.y), -prev_cut)
            if piece is None:
                raise ValueError("degenerate sub-area produced by decomposition")
        if k < len(cuts):
            piece = piece.clip_halfplane(axis, cuts[k])
            if piece is None:
                raise ValueError("degenerate sub-area produced by decomposition")
            prev_cut = cuts[k]
        sub_areas.append(piece)
    return Decomposition(tuple(sub_areas), sweep_direction)


def lane_count_for_width(width: float, footprint_radius: float) -> int:
    """Number of lanes needed to cover extent `width` with swath radius
    `footprint_radius`: a single centered lane suffices up to 2*rho, after
    which lanes are pitched at most 2*rho apart with the first and last
    held rho in from the extremes.
    """
    if footprint_radius <= 0.0:
        raise ValueError("footprint radius must be positive")
    two_rho = 2.0 * footprint_radius
    if width <= two_rho:
        return 1
    return math.ceil((width - two_rho) / two_rho) + 1


def _lane_layout(
    verts_r: list[Vec2], footprint_radius: float
) -> tuple[list[tuple[float, float, float]], float]:
    """Lane geometry in the rotated frame where lanes run along +x.

    Returns ([(y, x_start, x_end)] bottom to top, spacing). Each lane's
    x-extent spans the polygon's x-range over the slab of heights the lane
    is responsible for, then overshoots by rho at both ends; this keeps
    every polygon point within rho of its nearest lane even when edges run
    nearly parallel to the lanes.
    """
    rho = footprint_radius
    ys = [v.y for v in verts_r]
    y_lo, y_hi = min(ys), max(ys)
    width = y_hi - y_lo
    count = lane_count_for_width(width, rho)
    if count == 1:
        lane_ys = [0.5 * (y_lo + y_hi)]
        spacing = 0.0
    else:
        spacing = (width - 2.0 * rho) / (count - 1)
        lane_ys = [y_lo + rho + k * spacing for k in range(count)]

    half = 0.5 * spacing if count > 1 else width
    lanes: list[tuple[float, float, float]] = []
    for k, y in enumerate(lane_ys):
        slab_lo = y_lo if k == 0 else y - half
        slab_hi = y_hi if k == count - 1 else y + half
        pts = _clip_points(list(verts_r), Vec2(0.0, 1.0), slab_hi)
        pts = _clip_points(pts, Vec2(0.0, -1.0), -slab_lo)
        if not pts:  # numerically vanished sliver: fall back to full extent
            pts = list(verts_r)
        xs = [p.x for p in pts]
        lanes.append((y, min(xs) - rho, max(xs) + rho))
    return lanes, spacing


def zigzag_path(
    sub_area: ConvexPolygon,
    sweep_direction: float,
    footprint_radius: float,
    entry_corner: Vec2,
) -> list[Vec2]:
    """Boustrophedon polyline covering `sub_area` with swath radius rho.

    Lanes run parallel to `sweep_direction`; traversal starts at the lane
    end nearest `entry_corner` and alternates direction lane to lane.
    """
    polyline, _ = _zigzag_with_spacing(sub_area, sweep_direction, footprint_radius, entry_corner)
    return polyline


def _zigzag_with_spacing(
    sub_area: ConvexPolygon,
    sweep_direction: float,
    footprint_radius: float,
    entry_corner: Vec2,
) -> tuple[list[Vec2], float]:
    if footprint_radius <= 0.0:
        raise ValueError("footprint radius must be positive")
    rot = -sweep_direction
    verts_r = [v.rotated(rot) for v in sub_area.vertices]
    lanes, spacing = _lane_layout(verts_r, footprint_radius)

    # Candidate starting points: both ends of the bottom and top lanes.
    first, last = lanes[0], lanes[-1]
    starts = [
        (0, False, Vec2(first[1], first[0])),
        (0, True, Vec2(first[2], first[0])),
        (len(lanes) - 1, False, Vec2(last[1], last[0])),
        (len(lanes) - 1, True, Vec2(last[2], last[0])),
    ]
    entry_r = entry_corner.rotated(rot)
    lane_idx, from_right, _ = min(starts, key=lambda s: s[2].distance_to(entry_r))

    order = list(range(len(lanes))) if lane_idx == 0 else list(range(len(lanes) - 1, -1, -1))
    waypoints_r: list[Vec2] = []
    rightward = not from_right
    for k in order:
        y, x0, x1 = lanes[k]
        a, b = (x0, x1) if rightward else (x1, x0)
        waypoints_r.append(Vec2(a, y))
        waypoints_r.append(Vec2(b, y))
        rightward = not rightward
    return [w.rotated(sweep_direction) for w in waypoints_r], spacing


def fleets_for(m: int, side_d: float, coverage_radius_rc: float) -> list[FleetGeometry]:
    """Split m drones into rigid three-drone fleets with shared geometry."""
    if m < 3 or m % 3 != 0:
        raise ValueError(f"drone count {m} is not a positive multiple of 3")
    return [
        FleetGeometry(Vec2(0.0, 0.0), 0.0, side_d, coverage_radius_rc)
        for _ in range(m // 3)
    ]


def plan_sweep(
    polygon: ConvexPolygon,
    proportions: Sequence[float],
    fleet_geometries: Sequence[FleetGeometry],
    speed: float,
) -> list[SweepPlan]:
    """One zigzag plan per fleet over its proportional sub-area.

    Fleets are assigned to sub-areas in slicing order, matching the order
    of the supplied proportions. Warns when the operating area is not
    comfortably larger than the fleets' combined overlap footprints (the
    sweep-phase scale assumption).
    """
    if speed <= 0.0:
        raise ValueError(f"speed must be positive, got {speed}")
    if len(fleet_geometries) != len(proportions):
        raise ValueError(
            f"{len(fleet_geometries)} fleets but {len(proportions)} proportions"
        )
    overlap_sum = sum(
        overlap_area(fg.side_d, fg.coverage_radius_rc) for fg in fleet_geometries
    )
    if polygon.area < 10.0 * overlap_sum:
        warnings.warn(
            f"operating area {polygon.area:.0f} m^2 is below 10x the fleets' "
            f"combined overlap area {overlap_sum:.0f} m^2; sweep-phase "
            "assumptions may be strained",
            stacklevel=2,
        )

    deco = decompose(DecompositionRequest(polygon, tuple(proportions)))
    plans: list[SweepPlan] = []
    for fid, (sub, fg) in enumerate(zip(deco.sub_areas, fleet_geometries)):
        rho = fg.guaranteed_footprint().radius
        entry = min(sub.vertices, key=lambda v: (v.x, v.y))
        waypoints, spacing = _zigzag_with_spacing(sub, deco.sweep_direction, rho, entry)
        plan = SweepPlan(
            fleet_id=fid,
            waypoints=tuple(waypoints),
            lane_spacing=spacing,
            estimated_duration=0.0,
            sub_area=sub,
            footprint_radius=rho,
        )
        plans.append(
            SweepPlan(
                fleet_id=fid,
                waypoints=plan.waypoints,
                lane_spacing=spacing,
                estimated_duration=plan.path_length() / speed,
                sub_area=sub,
                footprint_radius=rho,
            )
        )
    return plans


def waypoint_lines(plans: Sequence[SweepPlan]) -> list[str]:
    """Plain-text waypoint serialization: one `fleet_id x_m y_m` per line."""
    lines = []
    for plan in plans:
        for w in plan.waypoints:
            lines.append(f"{plan.fleet_id} {w.x!r} {w.y!r}")
    return lines
