"""Shared builders and frozen expected values for the test suite.

The table constants below were derived by hand from the piecewise case
analysis of the bundled family: for each listed direction, every member's
argmax vertex set was enumerated and the hull of their union taken. They
are frozen here as an oracle independent of the fan-cell machinery.
"""

from demyanov import Collection, Direction, Point, convex_hull


def pt(x, y):
    return Point(x, y)


def poly(*coords):
    return convex_hull([Point(x, y) for x, y in coords])


def coll(*vertex_lists):
    return Collection.of(poly(*vl) for vl in vertex_lists)


def vertex_set(polytope):
    return {(v.x, v.y) for v in polytope.vertices}


# The bundled counterexample family.
P1 = ((1, 0), (1, 1), (-1, 0))
P2 = ((-1, 0), (-1, 1), (1, 0))
P3 = ((1, 2), (-1, 2), (0, 0))
P4 = ((2, 0), (-2, 0))
OMEGA0 = (P1, P2, P3, P4)

# Its first four iterates (members as unordered vertex sets; builders hull
# them into canonical form). Each right-half-plane case row appears with
# its mirror image; self-symmetric rows appear once.
OMEGA1 = (
    ((-2, 0), (2, 0)),
    ((0, 0), (2, 0)),
    ((-2, 0), (0, 0)),
    ((0, 0), (1, 2), (2, 0)),
    ((0, 0), (-1, 2), (-2, 0)),
    ((1, 0), (1, 2), (2, 0)),
    ((-1, 0), (-1, 2), (-2, 0)),
    ((1, 0), (-1, 1), (1, 2), (2, 0)),
    ((-1, 0), (1, 1), (-1, 2), (-2, 0)),
    ((-1, 1), (1, 2), (2, 0)),
    ((1, 1), (-1, 2), (-2, 0)),
    ((-1, 2), (1, 2), (2, 0), (-2, 0)),
)

OMEGA2 = (
    ((-2, 0), (2, 0)),
    ((-2, 0), (2, 0), (1, 1)),
    ((-2, 0), (2, 0), (-1, 1)),
    ((-1, 0), (1, 1), (2, 0)),
    ((1, 0), (-1, 1), (-2, 0)),
    ((-1, 0), (-1, 2), (2, 0), (1, 1)),
    ((1, 0), (1, 2), (-2, 0), (-1, 1)),
    ((0, 0), (-1, 2), (2, 0), (1, 1)),
    ((0, 0), (1, 2), (-2, 0), (-1, 1)),
    ((0, 0), (-1, 2), (2, 0), (1, 2)),
    ((0, 0), (1, 2), (-2, 0), (-1, 2)),
    ((-1, 2), (1, 2), (2, 0), (-2, 0)),
)

OMEGA3 = (
    ((-2, 0), (2, 0)),
    ((0, 0), (2, 0)),
    ((-2, 0), (0, 0)),
    ((0, 0), (1, 2), (2, 0)),
    ((0, 0), (-1, 2), (-2, 0)),
    ((1, 0), (1, 2), (2, 0)),
    ((-1, 0), (-1, 2), (-2, 0)),
    ((1, 0), (-1, 1), (1, 2), (2, 0), (-1, 2)),
    ((-1, 0), (1, 1), (-1, 2), (-2, 0), (1, 2)),
    ((-1, 1), (1, 2), (2, 0), (-1, 2)),
    ((1, 1), (-1, 2), (-2, 0), (1, 2)),
    ((-1, 2), (1, 2), (2, 0), (-2, 0)),
)

OMEGA4 = (
    ((-2, 0), (2, 0)),
    ((-2, 0), (2, 0), (1, 1)),
    ((-2, 0), (2, 0), (-1, 1)),
    ((-1, 0), (1, 1), (2, 0)),
    ((1, 0), (-1, 1), (-2, 0)),
    ((-1, 0), (-1, 2), (2, 0), (1, 2)),
    ((1, 0), (1, 2), (-2, 0), (-1, 2)),
    ((0, 0), (-1, 2), (2, 0), (1, 2)),
    ((0, 0), (1, 2), (-2, 0), (-1, 2)),
    ((-1, 2), (1, 2), (2, 0), (-2, 0)),
)

# One representative direction per case row: direction -> image vertex set.
TABLE_OMEGA0 = (
    ((0, -1), ((-2, 0), (2, 0))),
    ((1, -1), ((0, 0), (2, 0))),
    ((2, -1), ((0, 0), (1, 2), (2, 0))),
    ((1, 0), ((1, 0), (1, 2), (2, 0))),
    ((1, 2), ((1, 0), (-1, 1), (1, 2), (2, 0))),
    ((1, 3), ((-1, 1), (1, 2), (2, 0))),
    ((0, 1), ((-1, 2), (1, 2), (2, 0), (-2, 0))),
)

TABLE_OMEGA1 = (
    ((0, -1), ((-2, 0), (2, 0))),
    ((1, -4), ((-2, 0), (2, 0))),
    ((1, -3), ((-2, 0), (2, 0), (1, 1))),
    ((1, -2), ((-1, 0), (1, 1), (2, 0))),
    ((1, -1), ((-1, 0), (1, 1), (2, 0))),
    ((1, 0), ((-1, 0), (-1, 2), (2, 0), (1, 1))),
    ((3, 1), ((0, 0), (-1, 2), (2, 0), (1, 1))),
    ((2, 1), ((0, 0), (-1, 2), (2, 0), (1, 2))),
    ((1, 1), ((0, 0), (-1, 2), (2, 0), (1, 2))),
    ((1, 2), ((0, 0), (-1, 2), (2, 0), (1, 2))),
    ((0, 1), ((-1, 2), (1, 2), (2, 0), (-2, 0))),
)

TABLE_OMEGA2 = (
    ((0, -1), ((-2, 0), (2, 0))),
    ((1, -1), ((0, 0), (2, 0))),
    ((2, -1), ((0, 0), (1, 2), (2, 0))),
    ((1, 0), ((1, 0), (1, 2), (2, 0))),
    ((1, 2), ((1, 0), (-1, 1), (1, 2), (2, 0), (-1, 2))),
    ((1, 3), ((-1, 1), (1, 2), (2, 0), (-1, 2))),
    ((0, 1), ((-1, 2), (1, 2), (2, 0), (-2, 0))),
)

TABLE_OMEGA3 = (
    ((0, -1), ((-2, 0), (2, 0))),
    ((1, -4), ((-2, 0), (2, 0))),
    ((1, -3), ((-2, 0), (2, 0), (1, 1))),
    ((1, -1), ((-1, 0), (1, 1), (2, 0))),
    ((1, 0), ((-1, 0), (-1, 2), (2, 0), (1, 2))),
    ((1, 1), ((0, 0), (-1, 2), (2, 0), (1, 2))),
    ((0, 1), ((-1, 2), (1, 2), (2, 0), (-2, 0))),
)

# Per-member argmax faces of the starting family at the same directions.
ARGMAX_TABLES = (
    (
        P1,
        (
            ((0, -1), ((-1, 0), (1, 0))),
            ((1, -1), ((1, 0),)),
            ((2, -1), ((1, 0),)),
            ((1, 0), ((1, 0), (1, 1))),
            ((1, 2), ((1, 1),)),
            ((1, 3), ((1, 1),)),
            ((0, 1), ((1, 1),)),
        ),
    ),
    (
        P2,
        (
            ((0, -1), ((-1, 0), (1, 0))),
            ((1, -1), ((1, 0),)),
            ((2, -1), ((1, 0),)),
            ((1, 0), ((1, 0),)),
            ((1, 2), ((1, 0), (-1, 1))),
            ((1, 3), ((-1, 1),)),
            ((0, 1), ((-1, 1),)),
        ),
    ),
    (
        P3,
        (
            ((0, -1), ((0, 0),)),
            ((1, -1), ((0, 0),)),
            ((2, -1), ((0, 0), (1, 2))),
            ((1, 0), ((1, 2),)),
            ((1, 2), ((1, 2),)),
            ((1, 3), ((1, 2),)),
            ((0, 1), ((-1, 2), (1, 2))),
        ),
    ),
    (
        P4,
        (
            ((0, -1), ((-2, 0), (2, 0))),
            ((1, -1), ((2, 0),)),
            ((2, -1), ((2, 0),)),
            ((1, 0), ((2, 0),)),
            ((1, 2), ((2, 0),)),
            ((1, 3), ((2, 0),)),
            ((0, 1), ((-2, 0), (2, 0))),
        ),
    ),
)


def direction(pair):
    return Direction(pair[0], pair[1])
