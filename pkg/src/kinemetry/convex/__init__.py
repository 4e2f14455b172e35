"""Convex bodies in the plane and in space, with their classical measures."""

from .bodies import Ball, Polygon, Polytope3, SupportBody2, as_support2
from .measures import (
    ball_volume,
    external_angle_3d,
    intrinsic_volumes,
    intrinsic_volumes_by_angles,
    minkowski_sum_2d,
    reflect,
    support_eval,
    surface_area_measure,
)
from .motion import RigidMotion, euler_intersects
from .regions import FULL, Arcs, Caps, FullSphere, region_measure

__all__ = [
    "Arcs", "Ball", "Caps", "FULL", "FullSphere", "Polygon", "Polytope3", "RigidMotion",
    "SupportBody2", "as_support2", "ball_volume", "euler_intersects", "external_angle_3d",
    "intrinsic_volumes", "intrinsic_volumes_by_angles", "minkowski_sum_2d", "reflect",
    "region_measure", "support_eval", "surface_area_measure",
]
