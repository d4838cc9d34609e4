# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled exact row reduction kernel.

Same elimination as _gauss_py (eager normalization, pivots by lowest column
then lowest row), but entries are (numerator, denominator) pairs of Python
ints stored flat per row, so the inner loops run without Fraction overhead.
Arbitrary precision is preserved: all arithmetic stays on Python ints.
"""

from math import gcd


def rref_pairs(list rows, Py_ssize_t ncols):
    """Reduce in place; rows[i] is [n0, d0, n1, d1, ...]. Returns pivot columns."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t pivot_row = 0
    cdef Py_ssize_t col, r, j, sel, nnz, idx
    cdef list prow, row, pivots, nz
    cdef object pn, pd, inv_n, inv_d, fn, fd, an, ad, bn, bd, num, den, g

    pivots = []
    for col in range(ncols):
        if pivot_row >= nrows:
            break
        sel = -1
        for r in range(pivot_row, nrows):
            if (<list>rows[r])[2 * col] != 0:
                sel = r
                break
        if sel < 0:
            continue
        if sel != pivot_row:
            rows[sel], rows[pivot_row] = rows[pivot_row], rows[sel]
        prow = <list>rows[pivot_row]
        pn = prow[2 * col]
        pd = prow[2 * col + 1]
        if pn != 1 or pd != 1:
            # scale pivot row by pd/pn (entries left of col are zero)
            inv_n = pd
            inv_d = pn
            if inv_d < 0:
                inv_n = -inv_n
                inv_d = -inv_d
            for j in range(col, ncols):
                an = prow[2 * j]
                if an == 0:
                    continue
                ad = prow[2 * j + 1]
                num = an * inv_n
                den = ad * inv_d
                g = gcd(num, den)
                if g > 1:
                    num //= g
                    den //= g
                prow[2 * j] = num
                prow[2 * j + 1] = den
        nz = []
        for j in range(col, ncols):
            if prow[2 * j] != 0:
                nz.append(j)
        nnz = len(nz)
        for r in range(nrows):
            if r == pivot_row:
                continue
            row = <list>rows[r]
            fn = row[2 * col]
            if fn == 0:
                continue
            fd = row[2 * col + 1]
            for idx in range(nnz):
                j = <Py_ssize_t>nz[idx]
                bn = prow[2 * j]
                bd = prow[2 * j + 1]
                an = row[2 * j]
                ad = row[2 * j + 1]
                # a - (fn/fd) * b
                num = an * fd * bd - fn * bn * ad
                if num == 0:
                    row[2 * j] = 0
                    row[2 * j + 1] = 1
                    continue
                den = ad * fd * bd
                g = gcd(num, den)
                if g > 1:
                    num //= g
                    den //= g
                row[2 * j] = num
                row[2 * j + 1] = den
        pivots.append(col)
        pivot_row += 1
    return pivots
