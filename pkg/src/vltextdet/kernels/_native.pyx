# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled geometry kernels.

Must stay bit-compatible with ``_fallback.py``: same crossing rule, same
intersection formula, same vertex-walk conventions.  The test suite asserts
exact output equality between the two backends.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport ceil

cnp.import_array()


def fill_polygon(vertices, Py_ssize_t height, Py_ssize_t width):
    """Even-odd rasterization of a closed polygon at pixel centers."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] verts = np.ascontiguousarray(
        vertices, dtype=np.float64)
    if verts.shape[1] != 2 or verts.shape[0] < 3:
        raise ValueError("vertices must be an (K, 2) array with K >= 3")
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] mask = np.zeros(
        (height, width), dtype=np.uint8)
    if height == 0 or width == 0:
        return mask

    cdef Py_ssize_t nv = verts.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xs_buf = np.empty(nv, dtype=np.float64)
    cdef double[:, :] v = verts
    cdef double[:] xs = xs_buf
    cdef cnp.uint8_t[:, :] m = mask

    cdef Py_ssize_t i, e, k, n, jmin, jmax, j
    cdef double yc, x0, y0, x1, y1, xint, a, b
    cdef bint c0, c1

    for i in range(height):
        yc = i + 0.5
        n = 0
        for e in range(nv):
            x0 = v[e, 0]
            y0 = v[e, 1]
            x1 = v[(e + 1) % nv, 0]
            y1 = v[(e + 1) % nv, 1]
            c0 = y0 > yc
            c1 = y1 > yc
            if c0 != c1:
                xint = x0 + (yc - y0) * (x1 - x0) / (y1 - y0)
                xs[n] = xint
                n += 1
        if n == 0:
            continue
        # insertion sort; crossing counts are tiny
        for e in range(1, n):
            xint = xs[e]
            k = e - 1
            while k >= 0 and xs[k] > xint:
                xs[k + 1] = xs[k]
                k -= 1
            xs[k + 1] = xint
        for k in range(0, n - 1, 2):
            a = xs[k]
            b = xs[k + 1]
            # pixel j covered iff j + 0.5 in [a, b)
            jmin = <Py_ssize_t>ceil(a - 0.5)
            jmax = <Py_ssize_t>ceil(b - 0.5) - 1
            if jmin < 0:
                jmin = 0
            if jmax > width - 1:
                jmax = width - 1
            for j in range(jmin, jmax + 1):
                m[i, j] = 1
    return mask


def label_components(mask):
    """4-connected labelling; components numbered in raster order."""
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] src = np.ascontiguousarray(
        mask, dtype=np.uint8)
    cdef Py_ssize_t height = src.shape[0]
    cdef Py_ssize_t width = src.shape[1]
    cdef cnp.ndarray[cnp.int32_t, ndim=2] labels = np.zeros(
        (height, width), dtype=np.int32)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] stack_buf = np.empty(
        height * width, dtype=np.int64)
    cdef cnp.uint8_t[:, :] s = src
    cdef cnp.int32_t[:, :] lab = labels
    cdef cnp.int64_t[:] stack = stack_buf

    cdef Py_ssize_t r, c, top, rr, cc
    cdef cnp.int64_t pos
    cdef int count = 0

    for r in range(height):
        for c in range(width):
            if s[r, c] == 0 or lab[r, c] != 0:
                continue
            count += 1
            lab[r, c] = count
            stack[0] = r * width + c
            top = 1
            while top > 0:
                top -= 1
                pos = stack[top]
                rr = pos // width
                cc = pos % width
                if rr > 0 and s[rr - 1, cc] != 0 and lab[rr - 1, cc] == 0:
                    lab[rr - 1, cc] = count
                    stack[top] = pos - width
                    top += 1
                if rr + 1 < height and s[rr + 1, cc] != 0 and lab[rr + 1, cc] == 0:
                    lab[rr + 1, cc] = count
                    stack[top] = pos + width
                    top += 1
                if cc > 0 and s[rr, cc - 1] != 0 and lab[rr, cc - 1] == 0:
                    lab[rr, cc - 1] = count
                    stack[top] = pos - 1
                    top += 1
                if cc + 1 < width and s[rr, cc + 1] != 0 and lab[rr, cc + 1] == 0:
                    lab[rr, cc + 1] = count
                    stack[top] = pos + 1
                    top += 1
    return labels, count


cdef inline bint _inside(cnp.int32_t[:, :] lab, Py_ssize_t width,
                         Py_ssize_t height, Py_ssize_t x, Py_ssize_t y,
                         cnp.int32_t label_id) noexcept:
    # pixel (row y, col x)
    if x < 0 or x >= width or y < 0 or y >= height:
        return 0
    return lab[y, x] == label_id


def trace_boundary(labels, label_id):
    """Outer-boundary crack following; see the fallback for the conventions."""
    cdef cnp.ndarray[cnp.int32_t, ndim=2] src = np.ascontiguousarray(
        labels, dtype=np.int32)
    cdef Py_ssize_t height = src.shape[0]
    cdef Py_ssize_t width = src.shape[1]
    cdef cnp.int32_t[:, :] lab = src
    cdef cnp.int32_t lid = <cnp.int32_t>label_id

    cdef Py_ssize_t r0 = -1, c0 = -1, r, c
    for r in range(height):
        for c in range(width):
            if lab[r, c] == lid:
                r0 = r
                c0 = c
                break
        if r0 >= 0:
            break
    if r0 < 0:
        return np.zeros((0, 2), dtype=np.float64)

    cdef list verts = [(<double>c0, <double>r0)]
    cdef Py_ssize_t x = c0, y = r0
    cdef int d = 0, nd  # 0=E, 1=S, 2=W, 3=N
    cdef bint left, right

    while True:
        if d == 0:
            x += 1
        elif d == 1:
            y += 1
        elif d == 2:
            x -= 1
        else:
            y -= 1
        if d == 0:
            left = _inside(lab, width, height, x, y - 1, lid)
            right = _inside(lab, width, height, x, y, lid)
        elif d == 1:
            left = _inside(lab, width, height, x, y, lid)
            right = _inside(lab, width, height, x - 1, y, lid)
        elif d == 2:
            left = _inside(lab, width, height, x - 1, y, lid)
            right = _inside(lab, width, height, x - 1, y - 1, lid)
        else:
            left = _inside(lab, width, height, x - 1, y - 1, lid)
            right = _inside(lab, width, height, x, y - 1, lid)
        if right and left:
            nd = (d + 3) % 4
        elif right:
            nd = d
        else:
            nd = (d + 1) % 4
        if x == c0 and y == r0 and nd == 0:
            break
        if nd != d:
            verts.append((<double>x, <double>y))
            d = nd
    return np.asarray(verts, dtype=np.float64)
