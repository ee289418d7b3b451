# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for cyclotomic matrices (same contract as _pykernels).

Entries stay arbitrary-precision Python ints; the gain comes from skipping
zero entries and avoiding interpreter dispatch in the inner loops.
"""

from math import gcd

import numpy as np

from . import _pykernels

# above this product of operand densities numpy's object dot beats the sparse loop
DENSE_CUTOFF = 0.5


def cyc_matmul(a, b, reduction):
    cdef Py_ssize_t phi = a.shape[0], r = a.shape[1], inner = a.shape[2], c = b.shape[2]
    cdef Py_ssize_t i, k, j, e, f, t, nnz
    bmask = b.any(axis=0)
    amask = a.any(axis=0)
    if r and inner and c and amask.mean() * bmask.mean() > DENSE_CUTOFF:
        return _pykernels.cyc_matmul(a, b, reduction)
    cdef list al = a.tolist(), bl = b.tolist()
    cdef list conv_rows, row, idx, vals, bvec, avec
    cdef list brow_idx = [], brow_val = []
    # sparse rows of b: for each inner index, the columns with a nonzero coefficient vector
    for k in range(inner):
        idx = [int(j) for j in np.flatnonzero(bmask[k])]
        brow_idx.append(idx)
        brow_val.append([[bl[f][k][j] for f in range(phi)] for j in idx])
    cdef list red = [list(reduction[e]) for e in range(2 * phi - 1)]
    cdef list out = [[[0] * c for i in range(r)] for f in range(phi)]
    cdef list orow
    # sparse rows of a
    cdef list arow_idx = [[] for i in range(r)]
    for i, k in zip(*np.nonzero(amask)):
        arow_idx[i].append(k)
    cdef list aks
    for i in range(r):
        aks = arow_idx[i]
        if not aks:
            continue
        conv_rows = [[0] * c for e in range(2 * phi - 1)]
        for k in aks:
            idx = brow_idx[k]
            if not idx:
                continue
            avec = [al[f][i][k] for f in range(phi)]
            vals = brow_val[k]
            nnz = len(idx)
            for e in range(phi):
                x = avec[e]
                if not x:
                    continue
                for t in range(nnz):
                    j = idx[t]
                    bvec = vals[t]
                    for f in range(phi):
                        y = bvec[f]
                        if y:
                            conv_rows[e + f][j] += x * y
        for e in range(phi):
            out[e][i] = conv_rows[e]
        for e in range(phi, 2 * phi - 1):
            row = conv_rows[e]
            for f in range(phi):
                w = red[e][f]
                if w:
                    orow = out[f][i]
                    for j in range(c):
                        if row[j]:
                            orow[j] += w * row[j]
    res = np.empty((phi, r, c), dtype=object)
    res[...] = out
    return res


cdef list _scale(list vec, list row, Py_ssize_t phi, Py_ssize_t ncols, list red):
    # row is a list of phi lists of length ncols
    cdef Py_ssize_t i, k, j, e, f
    cdef list conv = [[0] * ncols for e in range(2 * phi - 1)]
    cdef list src, dst
    for i in range(phi):
        x = vec[i]
        if not x:
            continue
        for k in range(phi):
            src = row[k]
            dst = conv[i + k]
            for j in range(ncols):
                y = src[j]
                if y:
                    dst[j] += x * y
    cdef list out = conv[:phi]
    for e in range(phi, 2 * phi - 1):
        src = conv[e]
        for f in range(phi):
            w = red[e][f]
            if w:
                dst = out[f]
                for j in range(ncols):
                    y = src[j]
                    if y:
                        dst[j] += w * y
    return out


cdef object _row_content(list row):
    g = 0
    for part in row:
        for v in part:
            if v:
                g = gcd(g, v)
                if g == 1:
                    return 1
    return g


def cyc_rref(m, field):
    cdef Py_ssize_t phi = m.shape[0], nrows = m.shape[1], ncols = m.shape[2]
    cdef Py_ssize_t i, col, row, p, f, j
    cdef list red = [list(v) for v in field.reduction]
    # rows[i][f] = list of coefficients of zeta^f in row i
    cdef list ml = m.tolist()
    cdef list rows = [[ml[f][i] for f in range(phi)] for i in range(nrows)]
    cdef list prow, cur, e
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        p = -1
        for i in range(row, nrows):
            cur = rows[i]
            for f in range(phi):
                if cur[f][col]:
                    p = i
                    break
            if p >= 0:
                break
        if p < 0:
            continue
        if p != row:
            rows[row], rows[p] = rows[p], rows[row]
        prow = rows[row]
        piv = [prow[f][col] for f in range(phi)]
        if phi > 1 and any(piv[1:]):
            adj = field.conjugate_adjoint(piv)
            prow = _scale(list(adj), prow, phi, ncols, red)
        if prow[0][col] < 0:
            prow = [[-v for v in part] for part in prow]
        g = _row_content(prow)
        if g > 1:
            prow = [[v // g for v in part] for part in prow]
        rows[row] = prow
        q = prow[0][col]
        for i in range(nrows):
            if i == row:
                continue
            cur = rows[i]
            e = [cur[f][col] for f in range(phi)]
            if not any(e):
                continue
            sub = _scale(e, prow, phi, ncols, red)
            new = [[q * cur[f][j] - sub[f][j] for j in range(ncols)] for f in range(phi)]
            g = _row_content(new)
            if g > 1:
                new = [[v // g for v in part] for part in new]
            rows[i] = new
        pivots.append(col)
        row += 1
    out = np.empty((phi, nrows, ncols), dtype=object)
    out[...] = [[rows[i][f] for i in range(nrows)] for f in range(phi)]
    return out, pivots
