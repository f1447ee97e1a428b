# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled candidate scan; same contract as ``_scan_py.scan``.

Values are C ints and sums are ``long long``; the dispatcher in
``kernel.py`` only routes instances here whose magnitudes fit.
"""

from libc.stdlib cimport malloc, calloc, free


cdef inline bint _next_comb(int* c, int k, int n) noexcept nogil:
    cdef int i = k - 1
    cdef int j
    while i >= 0 and c[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    c[i] += 1
    for j in range(i + 1, k):
        c[j] = c[j - 1] + 1
    return True


cdef tuple _sorted_at(int* a1, int na1, int* pool, int* c2, int k2, int* at, int nat,
                      bint sub):
    cdef int i = 0, j = 0, m = 0
    if not sub:
        return tuple([at[i] for i in range(nat)])
    out = []
    while i < na1 or j < k2:
        if j >= k2 or (i < na1 and a1[i] < pool[c2[j]]):
            out.append(a1[i])
            i += 1
        else:
            out.append(pool[c2[j]])
            j += 1
    return tuple(out)


def scan(int d1, int e, int r1, int f, bint zero, bint sub, bint use_e,
         y1, y2, z1, z2, bint zsub, Py_ssize_t witness_cap):
    cdef int top = d1 + e
    cdef int big_r = r1 + f
    cdef long long tri1 = <long long>r1 * (r1 + 1) // 2
    cdef long long tri2 = <long long>big_r * (big_r + 1) // 2
    cdef long long full1 = <long long>(r1 + 1) * d1
    cdef long long full2 = <long long>(big_r + 1) * top
    cdef bint has_y1 = y1 is not None, has_y2 = y2 is not None
    cdef bint has_z1 = z1 is not None, has_z2 = z2 is not None
    cdef long long by1 = y1 if has_y1 else 0
    cdef long long by2 = y2 if has_y2 else 0
    cdef long long bz1 = z1 if has_z1 else 0
    cdef long long bz2 = z2 if has_z2 else 0

    cdef int n1, k1, n2, k2, off1, off2, i, v, npool
    cdef long long s1, s2, count = 0
    cdef bint more1, more2, ok

    if zero:
        n1, k1, off1 = d1, r1, 1
    else:
        n1, k1, off1 = d1 + 1, r1 + 1, 0

    cdef int* c1 = <int*>malloc((k1 + 1) * sizeof(int))
    cdef int* a1 = <int*>malloc((r1 + 2) * sizeof(int))
    cdef int* c2 = <int*>malloc((big_r + 2) * sizeof(int))
    cdef int* at = <int*>malloc((big_r + 2) * sizeof(int))
    cdef int* pool = <int*>malloc((top + 2) * sizeof(int))
    cdef char* mark = <char*>calloc(top + 2, sizeof(char))
    witnesses = []
    try:
        if k1 > n1:
            return 0, witnesses
        for i in range(k1):
            c1[i] = i
        more1 = True
        while more1:
            if zero:
                a1[0] = 0
                for i in range(k1):
                    a1[i + 1] = c1[i] + off1
            else:
                for i in range(k1):
                    a1[i] = c1[i]
            s1 = 0
            for i in range(r1 + 1):
                s1 += a1[i]
            ok = True
            if has_y1 and s1 - tri1 > by1:
                ok = False
            if ok and has_z1 and full1 - s1 - tri1 > bz1:
                ok = False
            if ok:
                for i in range(r1 + 1):
                    mark[a1[i]] = 1
                if sub:
                    npool = 0
                    for v in range(top + 1):
                        if not mark[v]:
                            pool[npool] = v
                            npool += 1
                    n2, k2, off2 = npool, f, 0
                elif zero:
                    n2, k2, off2 = top, big_r, 1
                else:
                    n2, k2, off2 = top + 1, big_r + 1, 0
                # when sub is off the marks describe at, not a1
                if not sub:
                    for i in range(r1 + 1):
                        mark[a1[i]] = 0
                if k2 <= n2:
                    for i in range(k2):
                        c2[i] = i
                    more2 = True
                else:
                    more2 = False
                while more2:
                    s2 = 0
                    if sub:
                        s2 = s1
                        for i in range(k2):
                            s2 += pool[c2[i]]
                    else:
                        if zero:
                            at[0] = 0
                            for i in range(k2):
                                at[i + 1] = c2[i] + off2
                        else:
                            for i in range(k2):
                                at[i] = c2[i]
                        for i in range(big_r + 1):
                            s2 += at[i]
                    ok = True
                    if has_y2 and s2 - tri2 > by2:
                        ok = False
                    if ok and has_z2 and full2 - s2 - tri2 > bz2:
                        ok = False
                    if ok and (use_e or zsub):
                        if sub:
                            for i in range(k2):
                                mark[pool[c2[i]]] = 1
                        else:
                            for i in range(big_r + 1):
                                mark[at[i]] = 1
                        if use_e and (e > top or not mark[e]):
                            ok = False
                        if ok and zsub:
                            for i in range(r1 + 1):
                                v = a1[i] + e
                                if v > top or not mark[v]:
                                    ok = False
                                    break
                        if sub:
                            for i in range(k2):
                                mark[pool[c2[i]]] = 0
                        else:
                            for i in range(big_r + 1):
                                mark[at[i]] = 0
                    if ok:
                        count += 1
                        if len(witnesses) < witness_cap:
                            a1t = tuple([a1[i] for i in range(r1 + 1)])
                            witnesses.append(
                                (a1t, _sorted_at(a1, r1 + 1, pool, c2, k2, at,
                                                 big_r + 1, sub))
                            )
                    more2 = _next_comb(c2, k2, n2)
                if sub:
                    for i in range(r1 + 1):
                        mark[a1[i]] = 0
            more1 = _next_comb(c1, k1, n1)
        return count, witnesses
    finally:
        free(c1)
        free(a1)
        free(c2)
        free(at)
        free(pool)
        free(mark)
