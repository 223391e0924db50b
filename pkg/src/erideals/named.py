"""Small fixed graphs used by the documentation, demos and tests (0-based labels)."""

from .graph import Graph


def chorded_pentagon() -> Graph:
    """5-cycle ``0-1-2-3-4`` with chords ``1-4`` and ``2-4``.

    Its cover ideal is generated by ``x0x1x2x3, x0x2x4, x1x2x4, x1x3x4``
    (``x1x2x3x4, ...`` in 1-based labels).
    """
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4), (2, 4)])


def triangles_joined_by_path() -> Graph:
    """Triangles ``{0,1,2}`` and ``{4,5,6}`` joined through vertex 3.

    The two triangles form a Hochster configuration.
    """
    return Graph.from_edges(7, [(2, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)])


def seven_vertex_demo() -> Graph:
    """Seven-vertex graph whose restriction to ``{0, 1, 3, 4, 5}`` is a
    triangle plus a disjoint edge."""
    return Graph.from_edges(
        7, [(4, 3), (2, 3), (2, 0), (2, 1), (0, 1), (0, 5), (1, 6), (5, 6), (5, 1)]
    )


def two_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
