"""Pure-Python composition kernel for planar diagrams.

The compiled twin in _kernel_cy.pyx implements the same two functions with
identical semantics; diagram.py picks whichever imports.

A link table encodes a pairing on the boundary nodes 0..(dst+src-1):
link[i] is the partner of node i, or -1 for a vacancy (dilute only).
"""

from __future__ import annotations

__all__ = ["compose_links", "KERNEL"]

KERNEL = "python"


def compose_links(kdst: int, mid: int, nsrc: int, c_link: tuple, b_link: tuple):
    """Glue c in Hom(mid, kdst) onto b in Hom(nsrc, mid).

    c's right column runs bottom to top, b's left column top to bottom, so
    middle height r joins c node kdst+r with b node mid-1-r.

    Returns (result_link tuple or None, loop count, annihilated flag).
    """
    # a string end meeting a vacancy kills the whole composite
    for r in range(mid):
        if (c_link[kdst + r] >= 0) != (b_link[mid - 1 - r] >= 0):
            return None, 0, True

    total = kdst + nsrc
    out = [-2] * total
    seen_c = [False] * mid  # middle junctions visited from the boundary

    for start in range(total):
        if out[start] != -2:
            continue
        if start < kdst:
            side, node = 0, start  # side 0 = c, 1 = b
        else:
            side, node = 1, mid + (start - kdst)
        while True:
            partner = c_link[node] if side == 0 else b_link[node]
            if partner < 0:
                out[start] = -1
                break
            if side == 0:
                if partner < kdst:
                    out[start] = partner
                    out[partner] = start
                    break
                r = partner - kdst
                seen_c[r] = True
                side, node = 1, mid - 1 - r
            else:
                if partner >= mid:
                    end = kdst + (partner - mid)
                    out[start] = end
                    out[end] = start
                    break
                r = mid - 1 - partner
                seen_c[r] = True
                side, node = 0, kdst + r

    loops = 0
    for r0 in range(mid):
        if seen_c[r0] or c_link[kdst + r0] < 0:
            continue
        r = r0
        side = 0
        node = kdst + r0
        while True:
            partner = c_link[node] if side == 0 else b_link[node]
            if side == 0:
                r = partner - kdst
                seen_c[r] = True
                side, node = 1, mid - 1 - r
            else:
                r = mid - 1 - partner
                if seen_c[r]:
                    loops += 1
                    break
                seen_c[r] = True
                side, node = 0, kdst + r
    return tuple(out), loops, False
