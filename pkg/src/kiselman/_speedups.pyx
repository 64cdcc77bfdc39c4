# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word reduction kernel; semantics identical to ``_reduce_py``."""

from libc.stdlib cimport free, malloc


def reduce_word(letters):
    """Reduce a word (sequence of 1-based generator indices) to canonical form.

    Returns a tuple of ints.
    """
    cdef Py_ssize_t length = len(letters)
    if length == 0:
        return ()
    cdef int *w = <int *> malloc(length * sizeof(int))
    if w == NULL:
        raise MemoryError()
    cdef Py_ssize_t k, p, q, t
    cdef int v
    cdef bint changed, below, above
    try:
        for k in range(length):
            w[k] = letters[k]
        changed = True
        while changed:
            changed = False
            for p in range(length - 1):
                v = w[p]
                q = p + 1
                while q < length and w[q] != v:
                    q += 1
                if q == length:
                    continue
                below = False
                above = False
                for t in range(p + 1, q):
                    if w[t] < v:
                        below = True
                    else:
                        above = True
                if not above:
                    # delete right occurrence
                    for t in range(q, length - 1):
                        w[t] = w[t + 1]
                    length -= 1
                    changed = True
                    break
                if not below:
                    # delete left occurrence
                    for t in range(p, length - 1):
                        w[t] = w[t + 1]
                    length -= 1
                    changed = True
                    break
        return tuple([w[k] for k in range(length)])
    finally:
        free(w)
