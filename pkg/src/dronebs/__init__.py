"""Drone base-station deployment planning.

Stage 1 sweeps an operating polygon with rigid three-drone fleets that
localize users from uplink time-difference measurements; stage 2 places
the individual drones to entirely cover as many position-estimate disks
as possible. A random-search baseline and a batch experiment CLI are
included for head-to-head evaluation.
"""

from .geometry import ConvexPolygon, Disk, FleetGeometry, Vec2, overlap_area

__all__ = [
    "ConvexPolygon",
    "Disk",
    "FleetGeometry",
    "Vec2",
    "overlap_area",
]
