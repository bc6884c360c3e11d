# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled braid-word kernels. Must agree exactly with _kernels_py."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


def free_reduce(letters):
    cdef Py_ssize_t m = len(letters)
    cdef long *stack = <long *> PyMem_Malloc((m + 1) * sizeof(long))
    cdef Py_ssize_t top = 0, i
    cdef long e
    if stack == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            e = letters[i]
            if top > 0 and stack[top - 1] == -e:
                top -= 1
            else:
                stack[top] = e
                top += 1
        return [stack[i] for i in range(top)]
    finally:
        PyMem_Free(stack)


cdef long *_positions(Py_ssize_t n) except NULL:
    cdef long *pos = <long *> PyMem_Malloc((n + 1) * sizeof(long))
    cdef Py_ssize_t i
    if pos == NULL:
        raise MemoryError()
    for i in range(n):
        pos[i] = i
    return pos


def permutation(Py_ssize_t n, letters):
    cdef long *pos = _positions(n)
    cdef Py_ssize_t i, a
    cdef long tmp
    try:
        for e in letters:
            a = abs(<long> e) - 1
            tmp = pos[a]
            pos[a] = pos[a + 1]
            pos[a + 1] = tmp
        images = [0] * n
        for i in range(n):
            images[pos[i]] = i + 1
        return images
    finally:
        PyMem_Free(pos)


def crossing_tally(Py_ssize_t n, letters, comp, Py_ssize_t ncomp):
    cdef long *pos = _positions(n)
    cdef long *cmap = <long *> PyMem_Malloc((n + 1) * sizeof(long))
    cdef long *tally = <long *> PyMem_Malloc((ncomp * ncomp + 1) * sizeof(long))
    cdef Py_ssize_t i, j, a
    cdef long e, sign, c1, c2, tmp
    if cmap == NULL or tally == NULL:
        PyMem_Free(pos)
        PyMem_Free(cmap)
        PyMem_Free(tally)
        raise MemoryError()
    try:
        for i in range(n):
            cmap[i] = comp[i]
        for i in range(ncomp * ncomp):
            tally[i] = 0
        for item in letters:
            e = item
            a = (e if e > 0 else -e) - 1
            sign = 1 if e > 0 else -1
            c1 = cmap[pos[a]]
            c2 = cmap[pos[a + 1]]
            tally[c1 * ncomp + c2] += sign
            if c1 != c2:
                tally[c2 * ncomp + c1] += sign
            tmp = pos[a]
            pos[a] = pos[a + 1]
            pos[a + 1] = tmp
        return [[tally[i * ncomp + j] for j in range(ncomp)] for i in range(ncomp)]
    finally:
        PyMem_Free(pos)
        PyMem_Free(cmap)
        PyMem_Free(tally)
