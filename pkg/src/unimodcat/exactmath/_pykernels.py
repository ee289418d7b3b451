"""Pure-Python (numpy object array) kernels for cyclotomic matrices.

A matrix over Q(zeta_N) is passed as an integer numerator array of shape
``(phi, rows, cols)``; slice ``[e]`` holds the coefficients of zeta^e.
Both kernels work with Python ints only, so results are exact.
"""

from math import gcd

import numpy as np


def _reduce(conv, phi, reduction, shape):
    out = np.zeros((phi,) + shape, dtype=object)
    for e, part in enumerate(conv):
        if part is None:
            continue
        if e < phi:
            out[e] += part
        else:
            for i, w in enumerate(reduction[e]):
                if w:
                    out[i] += w * part
    return out


def cyc_matmul(a, b, reduction):
    phi, r, _ = a.shape
    c = b.shape[2]
    conv = [None] * (2 * phi - 1)
    live_b = [k for k in range(phi) if b[k].any()]
    for i in range(phi):
        ai = a[i]
        if not ai.any():
            continue
        for k in live_b:
            part = ai.dot(b[k])
            conv[i + k] = part if conv[i + k] is None else conv[i + k] + part
    return _reduce(conv, phi, reduction, (r, c))


def _scale_row(vec, row, reduction):
    # vec: length-phi integer coefficients, row: (phi, cols) array
    phi = row.shape[0]
    conv = [None] * (2 * phi - 1)
    for i, x in enumerate(vec):
        if not x:
            continue
        for k in range(phi):
            part = x * row[k]
            conv[i + k] = part if conv[i + k] is None else conv[i + k] + part
    return _reduce(conv, phi, reduction, row.shape[1:])


def _content(row):
    g = 0
    for v in row.flat:
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def cyc_rref(m, field):
    """Fraction-free Gauss-Jordan elimination over Z[zeta].

    Returns ``(reduced, pivots)``.  Each pivot row has a positive rational
    integer at its pivot column and every other row is zero there.
    """
    m = np.array(m, dtype=object, copy=True)
    phi, nrows, ncols = m.shape
    reduction = field.reduction
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        p = None
        for i in range(row, nrows):
            if m[:, i, col].any():
                p = i
                break
        if p is None:
            continue
        if p != row:
            m[:, [row, p], :] = m[:, [p, row], :]
        piv = list(m[:, row, col])
        if phi > 1 and any(piv[1:]):
            adj = field.conjugate_adjoint(piv)
            m[:, row, :] = _scale_row(adj, m[:, row, :], reduction)
        if m[0, row, col] < 0:
            m[:, row, :] = -m[:, row, :]
        g = _content(m[:, row, :])
        if g > 1:
            m[:, row, :] //= g
        q = m[0, row, col]
        prow = m[:, row, :]
        for i in range(nrows):
            if i == row:
                continue
            e = list(m[:, i, col])
            if not any(e):
                continue
            new = q * m[:, i, :] - _scale_row(e, prow, reduction)
            g = _content(new)
            if g > 1:
                new //= g
            m[:, i, :] = new
        pivots.append(col)
        row += 1
    return m, pivots
