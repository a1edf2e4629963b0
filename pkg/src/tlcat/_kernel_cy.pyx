# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled composition kernel; the semantics twin of _kernel_py.py.

Hot path: morphism composition calls this once per pair of diagram terms,
so symbolic End(n) products hit it hundreds of thousands of times.
"""

from libc.stdlib cimport malloc, free

KERNEL = "cython"


def compose_links(int kdst, int mid, int nsrc, tuple c_link, tuple b_link):
    cdef int total = kdst + nsrc
    cdef int nc = kdst + mid
    cdef int nb = mid + nsrc
    cdef int i, r, r0, start, side, node, partner, end, loops
    cdef int *cl = <int *> malloc(nc * sizeof(int)) if nc else <int *> malloc(sizeof(int))
    cdef int *bl = <int *> malloc(nb * sizeof(int)) if nb else <int *> malloc(sizeof(int))
    cdef int *out = <int *> malloc(total * sizeof(int)) if total else <int *> malloc(sizeof(int))
    cdef int *seen = <int *> malloc(mid * sizeof(int)) if mid else <int *> malloc(sizeof(int))
    try:
        for i in range(nc):
            cl[i] = c_link[i]
        for i in range(nb):
            bl[i] = b_link[i]
        for r in range(mid):
            if (cl[kdst + r] >= 0) != (bl[mid - 1 - r] >= 0):
                return None, 0, True
        for i in range(total):
            out[i] = -2
        for r in range(mid):
            seen[r] = 0

        for start in range(total):
            if out[start] != -2:
                continue
            if start < kdst:
                side = 0
                node = start
            else:
                side = 1
                node = mid + (start - kdst)
            while True:
                partner = cl[node] if side == 0 else bl[node]
                if partner < 0:
                    out[start] = -1
                    break
                if side == 0:
                    if partner < kdst:
                        out[start] = partner
                        out[partner] = start
                        break
                    r = partner - kdst
                    seen[r] = 1
                    side = 1
                    node = mid - 1 - r
                else:
                    if partner >= mid:
                        end = kdst + (partner - mid)
                        out[start] = end
                        out[end] = start
                        break
                    r = mid - 1 - partner
                    seen[r] = 1
                    side = 0
                    node = kdst + r

        loops = 0
        for r0 in range(mid):
            if seen[r0] or cl[kdst + r0] < 0:
                continue
            side = 0
            node = kdst + r0
            while True:
                partner = cl[node] if side == 0 else bl[node]
                if side == 0:
                    r = partner - kdst
                    seen[r] = 1
                    side = 1
                    node = mid - 1 - r
                else:
                    r = mid - 1 - partner
                    if seen[r]:
                        loops += 1
                        break
                    seen[r] = 1
                    side = 0
                    node = kdst + r
        return tuple([out[i] for i in range(total)]), loops, False
    finally:
        free(cl)
        free(bl)
        free(out)
        free(seen)
