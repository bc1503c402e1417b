"""Pure-Python diagram kernel.

A diagram with ``nb`` bottom and ``nt`` top points is a pair of integer
sequences indexed by endpoint (bottom ``0..nb-1``, top ``nb..nb+nt-1``):
``partner[e]`` is the other end of the strand through ``e`` and ``dots[e]``
its dot parity.  The compiled module ``_kernel`` implements the same two
functions with identical results.
"""

from __future__ import annotations

VALID = 0
NOT_INVOLUTION = 1
NOT_PLANAR = 2
DOT_HIDDEN = 3


def compose(tpartner, tdots, bpartner, bdots, k, m, n):
    """Stack a (m -> n) diagram on top of a (k -> m) diagram.

    Returns ``(partner, dots, undotted_loops, dotted_loop)`` for the
    resulting (k -> n) diagram.
    """
    size = k + n
    res = [-1] * size
    rdots = [0] * size
    seen = [False] * m
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
                parity ^= tdots[p]
                p2 = tpartner[p]
                if p2 >= m:
                    end = k + p2 - m
                    break
                seen[p2] = True
                on_top = False
                p = k + p2
            else:
                parity ^= bdots[p]
                p2 = bpartner[p]
                if p2 < k:
                    end = p2
                    break
                seen[p2 - k] = True
                on_top = True
                p = p2 - k
        res[r] = end
        res[end] = r
        rdots[r] = parity
        rdots[end] = parity
    loops = 0
    dotted = False
    for j in range(m):
        if seen[j]:
            continue
        seen[j] = True
        parity = 0
        p = j
        while True:
            parity ^= tdots[p]
            j2 = tpartner[p]
            seen[j2] = True
            parity ^= bdots[k + j2]
            j3 = bpartner[k + j2] - k
            if j3 == j:
                break
            seen[j3] = True
            p = j3
        if parity:
            dotted = True
        else:
            loops += 1
    return res, rdots, loops, dotted


def _circle_position(e, nb, nt):
    # bottom left to right, then top right to left
    return e if e < nb else nb + (nt - 1 - (e - nb))


def _crosses(a, b, c, d):
    # chords {a,b} and {c,d} on a circle, all four distinct
    if a > b:
        a, b = b, a
    return (a < c < b) != (a < d < b)


def validate(partner, dots, nb, nt):
    """Return one of ``VALID``, ``NOT_INVOLUTION``, ``NOT_PLANAR``, ``DOT_HIDDEN``."""
    size = nb + nt
    if len(partner) != size or len(dots) != size:
        return NOT_INVOLUTION
    for e in range(size):
        f = partner[e]
        if f < 0 or f >= size or f == e or partner[f] != e or dots[f] != dots[e]:
            return NOT_INVOLUTION
    chords = []
    for e in range(size):
        f = partner[e]
        if e < f:
            chords.append((_circle_position(e, nb, nt), _circle_position(f, nb, nt)))
    for i in range(len(chords)):
        a, b = chords[i]
        for j in range(i + 1, len(chords)):
            if _crosses(a, b, *chords[j]):
                return NOT_PLANAR
    # unfold across the left wall: the doubled circle has the mirror images
    # of the bottom points to the left of the originals and the mirror images
    # of the top points after the originals (top is read right to left)
    def pos(e, sign):
        if e < nb:
            i = e + 1
            return nb - i if sign < 0 else nb + i - 1
        j = e - nb + 1
        return 2 * nb + (nt - j) if sign > 0 else 2 * nb + nt + j - 1

    unfolded = []
    for e in range(size):
        f = partner[e]
        if e < f:
            if dots[e]:
                unfolded.append((pos(e, 1), pos(f, -1), len(unfolded) // 2))
                unfolded.append((pos(e, -1), pos(f, 1), len(unfolded) // 2))
            else:
                unfolded.append((pos(e, 1), pos(f, 1), len(unfolded) // 2))
                unfolded.append((pos(e, -1), pos(f, -1), len(unfolded) // 2))
    for i in range(len(unfolded)):
        a, b, oi = unfolded[i]
        for j in range(i + 1, len(unfolded)):
            c, d, oj = unfolded[j]
            if oi != oj and _crosses(a, b, c, d):
                return DOT_HIDDEN
    return VALID
