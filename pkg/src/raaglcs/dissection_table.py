"""Bundled crossing pairs for the standard genus-g curve system, g = 2..8.

Generated by `raaglcs.surface.derive_intersections` (forced-pair analysis on
the freely reduced relator image, verified against the relator); regenerate
with:

    python -c "from raaglcs.surface import derive_intersections as d; \
print({g: d(g) for g in range(2, 9)})"

The pattern: y_k crosses x_{k-1} and x_k, and z crosses x_0 and x_g.
`standard_dissection` falls back to a live derivation for genus > 8.
"""

STANDARD_INTERSECTIONS = {
    2: (
        ('x0', 'y1'),
        ('x0', 'z'),
        ('x1', 'y1'),
        ('x1', 'y2'),
        ('x2', 'y2'),
        ('x2', 'z'),
    ),
    3: (
        ('x0', 'y1'),
        ('x0', 'z'),
        ('x1', 'y1'),
        ('x1', 'y2'),
        ('x2', 'y2'),
        ('x2', 'y3'),
        ('x3', 'y3'),
        ('x3', 'z'),
    ),
    4: (
        ('x0', 'y1'),
        ('x0', 'z'),
        ('x1', 'y1'),
        ('x1', 'y2'),
        ('x2', 'y2'),
        ('x2', 'y3'),
        ('x3', 'y3'),
        ('x3', 'y4'),
        ('x4', 'y4'),
        ('x4', 'z'),
    ),
    5: (
        ('x0', 'y1'),
        ('x0', 'z'),
        ('x1', 'y1'),
        ('x1', 'y2'),
        ('x2', 'y2'),
        ('x2', 'y3'),
        ('x3', 'y3'),
        ('x3', 'y4'),
        ('x4', 'y4'),
        ('x4', 'y5'),
        ('x5', 'y5'),
        ('x5', 'z'),
    ),
    6: (
        ('x0', 'y1'),
        ('x0', 'z'),
        ('x1', 'y1'),
        ('x1', 'y2'),
        ('x2', 'y2'),
        ('x2', 'y3'),
        ('x3', 'y3'),
        ('x3', 'y4'),
        ('x4', 'y4'),
        ('x4', 'y5'),
        ('x5', 'y5'),
        ('x5', 'y6'),
        ('x6', 'y6'),
        ('x6', 'z'),
    ),
    7: (
        ('x0', 'y1'),
        ('x0', 'z'),
        ('x1', 'y1'),
        ('x1', 'y2'),
        ('x2', 'y2'),
        ('x2', 'y3'),
        ('x3', 'y3'),
        ('x3', 'y4'),
        ('x4', 'y4'),
        ('x4', 'y5'),
        ('x5', 'y5'),
        ('x5', 'y6'),
        ('x6', 'y6'),
        ('x6', 'y7'),
        ('x7', 'y7'),
        ('x7', 'z'),
    ),
    8: (
        ('x0', 'y1'),
        ('x0', 'z'),
        ('x1', 'y1'),
        ('x1', 'y2'),
        ('x2', 'y2'),
        ('x2', 'y3'),
        ('x3', 'y3'),
        ('x3', 'y4'),
        ('x4', 'y4'),
        ('x4', 'y5'),
        ('x5', 'y5'),
        ('x5', 'y6'),
        ('x6', 'y6'),
        ('x6', 'y7'),
        ('x7', 'y7'),
        ('x7', 'y8'),
        ('x8', 'y8'),
        ('x8', 'z'),
    ),
}
