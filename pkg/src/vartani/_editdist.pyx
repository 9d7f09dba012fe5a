# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Levenshtein kernel.

Semantically identical to vartani._editdist_py.levenshtein; this version
exists because the distance is computed once per candidate per flagged
word, which dominates correction and evaluation runtime.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

__all__ = ["levenshtein"]


def levenshtein(str a, str b):
    """Unit-cost Levenshtein distance between two strings."""
    if a == b:
        return 0
    cdef str sa = a
    cdef str sb = b
    if len(sb) > len(sa):
        sa, sb = sb, sa
    cdef Py_ssize_t n = len(sa)
    cdef Py_ssize_t m = len(sb)
    if m == 0:
        return n
    cdef Py_ssize_t *row = <Py_ssize_t *> PyMem_Malloc((m + 1) * sizeof(Py_ssize_t))
    if row == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, diag, tmp, best, up, left
    cdef Py_UCS4 ca
    try:
        for j in range(m + 1):
            row[j] = j
        for i in range(1, n + 1):
            diag = row[0]
            row[0] = i
            ca = sa[i - 1]
            for j in range(1, m + 1):
                tmp = row[j]
                best = diag if ca == <Py_UCS4> sb[j - 1] else diag + 1
                up = tmp + 1
                if up < best:
                    best = up
                left = row[j - 1] + 1
                if left < best:
                    best = left
                row[j] = best
                diag = tmp
        return row[m]
    finally:
        PyMem_Free(row)
