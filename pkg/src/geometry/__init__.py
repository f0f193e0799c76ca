"""
Planar convex bodies built from segments and origin-centered arcs.
"""

from .body import Arc, BoundaryPiece, ConvexBody, Point, Segment
from .measures import (
    area,
    circumradius,
    contact_count,
    enclosing_circle,
    in_ring,
    incircle,
    inradius,
    perimeter,
    support_value,
)
from .random_bodies import random_convex_polygon

__all__ = [
    'Arc',
    'BoundaryPiece',
    'ConvexBody',
    'Point',
    'Segment',
    'area',
    'circumradius',
    'contact_count',
    'enclosing_circle',
    'in_ring',
    'incircle',
    'inradius',
    'perimeter',
    'support_value',
    'random_convex_polygon',
]
