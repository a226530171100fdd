"""Numpy/scipy implementation of the geometry kernels.

This backend mirrors the compiled extension in ``_native.pyx`` operation by
operation; the two must produce bit-identical outputs (the test suite compares
them on random inputs).  Keep formulas in sync when editing either side.
"""

import numpy as np
from scipy import ndimage

# Direction table for crack following: E, S, W, N as (dx, dy), y pointing down.
_DIRS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def fill_polygon(vertices, height, width):
    """Rasterize a closed polygon into a uint8 mask.

    Pixel (i, j) is set iff its center (j + 0.5, i + 0.5) lies inside the
    polygon under the even-odd rule.  ``vertices`` is an (K, 2) float array of
    (x, y) pairs; the polygon is implicitly closed.
    """
    verts = np.asarray(vertices, dtype=np.float64)
    if verts.ndim != 2 or verts.shape[1] != 2 or verts.shape[0] < 3:
        raise ValueError("vertices must be an (K, 2) array with K >= 3")
    mask = np.zeros((height, width), dtype=np.uint8)
    if height == 0 or width == 0:
        return mask

    x0 = verts[:, 0]
    y0 = verts[:, 1]
    x1 = np.roll(x0, -1)
    y1 = np.roll(y0, -1)

    yc = np.arange(height, dtype=np.float64) + 0.5
    xc = np.arange(width, dtype=np.float64) + 0.5

    # Edge e crosses scanline y iff (y0 > y) != (y1 > y); the half-open
    # interval makes vertex hits count exactly once.
    crosses = (y0[None, :] > yc[:, None]) != (y1[None, :] > yc[:, None])
    with np.errstate(divide="ignore", invalid="ignore"):
        xint = x0[None, :] + (yc[:, None] - y0[None, :]) * (x1 - x0)[None, :] / (y1 - y0)[None, :]
    # Count crossings strictly to the right of each pixel center.
    hits = crosses[:, None, :] & (xc[None, :, None] < xint[:, None, :])
    mask[:] = (hits.sum(axis=2) & 1).astype(np.uint8)
    return mask


def label_components(mask):
    """4-connected component labelling.

    Returns ``(labels, count)`` where ``labels`` is int32 with background 0 and
    components numbered 1..count in raster order of their first pixel.
    """
    mask = np.ascontiguousarray(mask, dtype=np.uint8)
    structure = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=np.uint8)
    labels, count = ndimage.label(mask, structure=structure)
    labels = labels.astype(np.int32)
    if count == 0:
        return labels, 0
    # scipy already numbers components in raster order of first occurrence,
    # but that is an implementation detail; renumber to guarantee it.
    flat = labels.ravel()
    first = np.full(count + 1, flat.size, dtype=np.int64)
    nz = np.flatnonzero(flat)
    # reversed so the earliest index wins
    first[flat[nz[::-1]]] = nz[::-1]
    order = np.argsort(first[1:], kind="stable")
    remap = np.zeros(count + 1, dtype=np.int32)
    remap[1 + order] = np.arange(1, count + 1, dtype=np.int32)
    return remap[labels], int(count)


def trace_boundary(labels, label_id):
    """Trace the outer boundary of one labelled component.

    Walks pixel-corner "cracks" with the region kept on the right-hand side of
    the walk (y axis points down), starting from the top-left corner of the
    component's first pixel in raster order.  Returns an (K, 2) float64 array
    of (x, y) corner coordinates with collinear runs merged; the vertex order
    has positive shoelace area, and that area equals the component pixel count
    for hole-free regions.
    """
    labels = np.asarray(labels)
    height, width = labels.shape
    region = labels == label_id
    idx = np.flatnonzero(region.ravel())
    if idx.size == 0:
        return np.zeros((0, 2), dtype=np.float64)
    r0, c0 = divmod(int(idx[0]), width)

    def inside(x, y):
        # pixel (row y, col x)
        return 0 <= x < width and 0 <= y < height and region[y, x]

    start = (c0, r0)
    x, y = start
    d = 0  # heading east
    verts = [(float(x), float(y))]
    while True:
        dx, dy = _DIRS[d]
        x += dx
        y += dy
        # Pixels ahead of corner (x, y) along heading d, on its left and right.
        if d == 0:  # E
            left, right = inside(x, y - 1), inside(x, y)
        elif d == 1:  # S
            left, right = inside(x, y), inside(x - 1, y)
        elif d == 2:  # W
            left, right = inside(x - 1, y), inside(x - 1, y - 1)
        else:  # N
            left, right = inside(x - 1, y - 1), inside(x, y - 1)
        if right and left:
            nd = (d + 3) % 4  # turn left
        elif right:
            nd = d  # straight on
        else:
            nd = (d + 1) % 4  # turn right
        if (x, y) == start and nd == 0:
            break
        if nd != d:
            verts.append((float(x), float(y)))
            d = nd
    return np.asarray(verts, dtype=np.float64)
