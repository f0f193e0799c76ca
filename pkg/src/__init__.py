"""
annulus-opt
Minimizers of lambda*|K| - P(K) over planar convex sets squeezed between two
concentric disks, with independent oracles and geometric inequality checks.
"""

__version__ = "1.0.0"
__author__ = "Lunar Lab"
