"""
Proper edge colorings, Kempe chains and constructive König coloring of
bipartite graphs.
"""
from kecs.coloring.coloring import (
    ColoringReport,
    EdgeColoring,
    Violation,
    ViolationKind,
    color_classes_are_matchings,
    verify_coloring,
)
from kecs.coloring.kempe import KempePath, kempe_path, kempe_swap
from kecs.coloring.konig import konig_color

__all__ = [
    "ColoringReport",
    "EdgeColoring",
    "KempePath",
    "Violation",
    "ViolationKind",
    "color_classes_are_matchings",
    "kempe_path",
    "kempe_swap",
    "konig_color",
    "verify_coloring",
]
