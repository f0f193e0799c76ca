"""
Visualization module for drawing optimal bodies and summarizing solutions.
"""

from .display import format_solution, render_body_svg, render_family_svg, render_solution_svg, side_class

__all__ = ['format_solution', 'render_body_svg', 'render_family_svg', 'render_solution_svg', 'side_class']
