# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fraction-free simplex kernel.

Same contract and pivot rules as ``_kernel_py``; works on an int64 copy of the
tableau with 128-bit intermediates.  Every entry point returns ``None`` when a
value leaves the int64 range, in which case the caller reruns the pure-Python
kernel on the untouched input.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

cdef extern from *:
    """
    typedef __int128 mt_i128;
    #define MT_I64_MAX ((__int128)0x7fffffffffffffffLL)
    """
    ctypedef long long mt_i128
    mt_i128 MT_I64_MAX

cdef enum:
    OPTIMAL = 0
    UNBOUNDED = 1


cdef struct Tab:
    int64_t* a
    int rows
    int cols
    int64_t d


cdef inline int64_t* _at(Tab* t, int i, int j) nogil:
    return &t.a[i * t.cols + j]


cdef int _load(Tab* t, list M, object d) except -1:
    cdef int i, j
    t.rows = len(M)
    t.cols = len(M[0])
    t.a = <int64_t*> malloc(sizeof(int64_t) * t.rows * t.cols)
    if t.a == NULL:
        raise MemoryError()
    try:
        for i in range(t.rows):
            row = M[i]
            for j in range(t.cols):
                t.a[i * t.cols + j] = row[j]
        t.d = d
    except OverflowError:
        free(t.a)
        t.a = NULL
        return 1
    return 0


cdef void _store(Tab* t, list M):
    cdef int i, j
    for i in range(t.rows):
        row = M[i]
        for j in range(t.cols):
            row[j] = t.a[i * t.cols + j]


cdef int _pivot(Tab* t, int r, int c) nogil:
    """Return 1 on int64 overflow (tableau is then garbage)."""
    cdef int i, j
    cdef int cols = t.cols
    cdef int64_t p = t.a[r * cols + c]
    cdef int64_t f
    cdef int64_t* row
    cdef int64_t* prow = &t.a[r * cols]
    cdef mt_i128 v
    cdef mt_i128 d = t.d
    for i in range(t.rows):
        if i == r:
            continue
        row = &t.a[i * cols]
        f = row[c]
        if f == 0:
            if p != t.d:
                for j in range(cols):
                    if row[j] != 0:
                        v = (<mt_i128> row[j] * p) / d
                        if v > MT_I64_MAX or v < -MT_I64_MAX:
                            return 1
                        row[j] = <int64_t> v
        else:
            for j in range(cols):
                v = (<mt_i128> row[j] * p - <mt_i128> f * prow[j]) / d
                if v > MT_I64_MAX or v < -MT_I64_MAX:
                    return 1
                row[j] = <int64_t> v
    if p < 0:
        for j in range(t.rows * cols):
            t.a[j] = -t.a[j]
        p = -p
    t.d = p
    return 0


def pivot(list M, list basis, object d, int r, int c):
    cdef Tab t
    if _load(&t, M, d):
        return None
    try:
        if _pivot(&t, r, c):
            return None
        _store(&t, M)
        basis[r] = c
        return t.d
    finally:
        free(t.a)


def phase0(list M, list basis, object d, list free_cols, list row_ok):
    cdef Tab t
    cdef int r, c, nrows = len(row_ok)
    cdef list stuck = []
    cdef list new_basis = list(basis)
    cdef list new_ok = list(row_ok)
    if _load(&t, M, d):
        return None
    try:
        for c in free_cols:
            for r in range(nrows):
                if new_ok[r] and _at(&t, r, c)[0] != 0:
                    if _pivot(&t, r, c):
                        return None
                    new_basis[r] = c
                    new_ok[r] = 0
                    break
            else:
                stuck.append(c)
        _store(&t, M)
        basis[:] = new_basis
        row_ok[:] = new_ok
        return t.d, stuck
    finally:
        free(t.a)


def simplex(list M, list basis, object d, int obj_row, list col_ok, list row_ok):
    cdef Tab t
    cdef int i, j, r, c
    cdef int nrows = len(row_ok)
    cdef int ncols = len(col_ok)
    cdef int rhs
    cdef int64_t a, b, best_num, best_den
    cdef mt_i128 lhs, rhs_cmp
    cdef int status
    cdef list new_basis = list(basis)
    cdef char* cok
    cdef char* rok
    cdef int* bas
    if _load(&t, M, d):
        return None
    rhs = t.cols - 1
    cok = <char*> malloc(ncols)
    rok = <char*> malloc(nrows)
    bas = <int*> malloc(sizeof(int) * nrows)
    try:
        for j in range(ncols):
            cok[j] = 1 if col_ok[j] else 0
        for i in range(nrows):
            rok[i] = 1 if row_ok[i] else 0
            bas[i] = new_basis[i]
        with nogil:
            while True:
                c = -1
                for j in range(ncols):
                    if cok[j] and t.a[obj_row * t.cols + j] < 0:
                        c = j
                        break
                if c < 0:
                    status = OPTIMAL
                    break
                r = -1
                best_num = 0
                best_den = 0
                for i in range(nrows):
                    if not rok[i]:
                        continue
                    a = t.a[i * t.cols + c]
                    if a <= 0:
                        continue
                    b = t.a[i * t.cols + rhs]
                    if r < 0:
                        r = i
                        best_num = b
                        best_den = a
                        continue
                    lhs = <mt_i128> b * best_den
                    rhs_cmp = <mt_i128> best_num * a
                    if lhs < rhs_cmp or (lhs == rhs_cmp and bas[i] < bas[r]):
                        r = i
                        best_num = b
                        best_den = a
                if r < 0:
                    status = UNBOUNDED
                    break
                if _pivot(&t, r, c):
                    status = -1
                    break
                bas[r] = c
        if status < 0:
            return None
        _store(&t, M)
        for i in range(nrows):
            basis[i] = bas[i]
        return status, t.d
    finally:
        free(t.a)
        free(cok)
        free(rok)
        free(bas)
