# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled diagram kernel; same contract as ``_kernel_py``."""

from libc.stdlib cimport malloc, free

cdef enum:
    VALID = 0
    NOT_INVOLUTION = 1
    NOT_PLANAR = 2
    DOT_HIDDEN = 3


cdef int* _to_c(seq, Py_ssize_t size) except NULL:
    cdef int* out = <int*>malloc((size if size > 0 else 1) * sizeof(int))
    cdef Py_ssize_t i
    if out == NULL:
        raise MemoryError()
    for i in range(size):
        out[i] = seq[i]
    return out


def compose(tpartner, tdots, bpartner, bdots, int k, int m, int n):
    cdef int size = k + n
    cdef int* tp = _to_c(tpartner, m + n)
    cdef int* td = _to_c(tdots, m + n)
    cdef int* bp = _to_c(bpartner, k + m)
    cdef int* bd = _to_c(bdots, k + m)
    cdef int* res = <int*>malloc((size if size > 0 else 1) * sizeof(int))
    cdef int* rdots = <int*>malloc((size if size > 0 else 1) * sizeof(int))
    cdef char* seen = <char*>malloc(m if m > 0 else 1)
    cdef int r, p, p2, end, parity, j, j2, j3, loops = 0
    cdef bint on_top, dotted = False
    try:
        for r in range(size):
            res[r] = -1
            rdots[r] = 0
        for j in range(m):
            seen[j] = 0
        for r in range(size):
            if res[r] != -1:
                continue
            parity = 0
            if r < k:
                on_top = False
                p = r
            else:
                on_top = True
                p = m + r - k
            while True:
                if on_top:
                    parity ^= td[p]
                    p2 = tp[p]
                    if p2 >= m:
                        end = k + p2 - m
                        break
                    seen[p2] = 1
                    on_top = False
                    p = k + p2
                else:
                    parity ^= bd[p]
                    p2 = bp[p]
                    if p2 < k:
                        end = p2
                        break
                    seen[p2 - k] = 1
                    on_top = True
                    p = p2 - k
            res[r] = end
            res[end] = r
            rdots[r] = parity
            rdots[end] = parity
        for j in range(m):
            if seen[j]:
                continue
            seen[j] = 1
            parity = 0
            p = j
            while True:
                parity ^= td[p]
                j2 = tp[p]
                seen[j2] = 1
                parity ^= bd[k + j2]
                j3 = bp[k + j2] - k
                if j3 == j:
                    break
                seen[j3] = 1
                p = j3
            if parity:
                dotted = True
            else:
                loops += 1
        return [res[r] for r in range(size)], [rdots[r] for r in range(size)], loops, dotted
    finally:
        free(tp)
        free(td)
        free(bp)
        free(bd)
        free(res)
        free(rdots)
        free(seen)


cdef inline bint _crosses(int a, int b, int c, int d) nogil:
    cdef int t
    if a > b:
        t = a
        a = b
        b = t
    return (a < c < b) != (a < d < b)


cdef inline int _pos(int e, int sign, int nb, int nt) nogil:
    cdef int i
    if e < nb:
        i = e + 1
        return nb - i if sign < 0 else nb + i - 1
    i = e - nb + 1
    return 2 * nb + (nt - i) if sign > 0 else 2 * nb + nt + i - 1


def validate(partner, dots, int nb, int nt):
    cdef int size = nb + nt
    if len(partner) != size or len(dots) != size:
        return NOT_INVOLUTION
    cdef int* pp = _to_c(partner, size)
    cdef int* dd = _to_c(dots, size)
    cdef int* ca = <int*>malloc((size if size > 0 else 1) * sizeof(int))
    cdef int* cb = <int*>malloc((size if size > 0 else 1) * sizeof(int))
    cdef int* ua = <int*>malloc((size if size > 0 else 1) * sizeof(int))
    cdef int* ub = <int*>malloc((size if size > 0 else 1) * sizeof(int))
    cdef int e, f, i, j, nc = 0, nu = 0
    try:
        for e in range(size):
            f = pp[e]
            if f < 0 or f >= size or f == e or pp[f] != e or dd[f] != dd[e]:
                return NOT_INVOLUTION
        for e in range(size):
            f = pp[e]
            if e < f:
                ca[nc] = e if e < nb else nb + (nt - 1 - (e - nb))
                cb[nc] = f if f < nb else nb + (nt - 1 - (f - nb))
                nc += 1
        for i in range(nc):
            for j in range(i + 1, nc):
                if _crosses(ca[i], cb[i], ca[j], cb[j]):
                    return NOT_PLANAR
        for e in range(size):
            f = pp[e]
            if e < f:
                if dd[e]:
                    ua[nu] = _pos(e, 1, nb, nt)
                    ub[nu] = _pos(f, -1, nb, nt)
                    ua[nu + 1] = _pos(e, -1, nb, nt)
                    ub[nu + 1] = _pos(f, 1, nb, nt)
                else:
                    ua[nu] = _pos(e, 1, nb, nt)
                    ub[nu] = _pos(f, 1, nb, nt)
                    ua[nu + 1] = _pos(e, -1, nb, nt)
                    ub[nu + 1] = _pos(f, -1, nb, nt)
                nu += 2
        for i in range(nu):
            for j in range(i + 1, nu):
                if (i >> 1) != (j >> 1) and _crosses(ua[i], ub[i], ua[j], ub[j]):
                    return DOT_HIDDEN
        return VALID
    finally:
        free(pp)
        free(dd)
        free(ca)
        free(cb)
        free(ua)
        free(ub)
