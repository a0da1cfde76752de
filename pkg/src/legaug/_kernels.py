"""Inner loops: disk sweep, ruling search, augmentation search.

Every kernel takes and returns plain numpy integer arrays so that numba can
compile it in nopython mode.  Each kernel exists twice, ``<name>_jit`` and
``<name>_py``; the public name points at one of them according to
:data:`legaug._accel.USE_JIT`.  Crossing positions are 1-based (position ``s``
swaps the strands at heights ``s`` and ``s + 1``); crossing indices are 0-based.
"""
from __future__ import annotations

import numpy as np

from ._accel import USE_JIT, jit_pair


def _sweep(pos, start, lo, hi, stop, tlo, thi):
    """Leftward disk sweep.

    Starts at slice ``start`` (the slice right of crossing ``start - 1``) with
    the vertical interval ``(lo, hi)`` and crosses crossings ``start - 1`` down
    to ``stop``.  A branch completes at slice ``stop`` when ``(lo, hi)`` equals
    ``(tlo, thi)``, or, if ``tlo == 0``, when it is a left-cusp pair
    ``(2k - 1, 2k)``.

    Returns a flat record array: for every completed disk
    ``[nu, nl, upper_0 .. upper_{nu-1}, lower_0 .. lower_{nl-1}]`` with corners
    listed right to left as crossing indices.
    """
    n = pos.shape[0]
    depth = start - stop + 2
    width = n + 1
    st_i = np.empty(depth, np.int64)
    st_lo = np.empty(depth, np.int64)
    st_hi = np.empty(depth, np.int64)
    st_nu = np.empty(depth, np.int64)
    st_nl = np.empty(depth, np.int64)
    st_up = np.empty((depth, width), np.int64)
    st_lw = np.empty((depth, width), np.int64)
    out = np.empty(64, np.int64)
    m = 0

    st_i[0] = start - 1
    st_lo[0] = lo
    st_hi[0] = hi
    st_nu[0] = 0
    st_nl[0] = 0
    top = 1
    while top > 0:
        cur = top - 1
        i = st_i[cur]
        lo = st_lo[cur]
        hi = st_hi[cur]
        nu = st_nu[cur]
        nl = st_nl[cur]
        while True:
            if i < stop:
                if tlo > 0:
                    ok = lo == tlo and hi == thi
                else:
                    ok = lo % 2 == 1 and hi == lo + 1
                if ok:
                    need = m + 2 + nu + nl
                    if need > out.shape[0]:
                        grown = np.empty(max(2 * out.shape[0], need), np.int64)
                        grown[:m] = out[:m]
                        out = grown
                    out[m] = nu
                    out[m + 1] = nl
                    for a in range(nu):
                        out[m + 2 + a] = st_up[cur, a]
                    for a in range(nl):
                        out[m + 2 + nu + a] = st_lw[cur, a]
                    m = need
                top = cur
                break
            t = pos[i]
            if t + 1 < lo or t > hi or (lo < t and t + 1 < hi):
                i -= 1
            elif t == lo and t + 1 == hi:
                # pinch: a second positive corner, dead branch
                top = cur
                break
            elif t == hi or t + 1 == lo:
                # park the pass continuation in this slot, follow the corner
                nxt = cur + 1
                for a in range(nu):
                    st_up[nxt, a] = st_up[cur, a]
                for a in range(nl):
                    st_lw[nxt, a] = st_lw[cur, a]
                st_i[cur] = i - 1
                st_nu[cur] = nu
                st_nl[cur] = nl
                if t == hi:
                    st_lo[cur] = lo
                    st_hi[cur] = hi + 1
                    st_up[nxt, nu] = i
                    nu += 1
                else:
                    st_lo[cur] = lo - 1
                    st_hi[cur] = hi
                    st_lw[nxt, nl] = i
                    nl += 1
                cur = nxt
                top = cur + 1
                i -= 1
            elif t + 1 == hi:
                hi -= 1
                i -= 1
            else:
                # t == lo, t + 1 < hi
                lo += 1
                i -= 1
    return out[:m].copy()


def _rulings(pos, c, can_switch):
    """Depth-first search for normal rulings.

    ``can_switch[j]`` says whether crossing ``j`` has a grading that allows a
    switch.  Returns a ``(count, n)`` uint8 array of switch indicators.
    """
    n = pos.shape[0]
    npos = 2 * c
    width = max(n, 1)
    sig = np.empty((n + 1, npos + 1), np.int64)
    for k in range(1, c + 1):
        sig[0, 2 * k - 1] = 2 * k
        sig[0, 2 * k] = 2 * k - 1
    choice = np.zeros(n + 1, np.int64)
    act = np.zeros(width, np.uint8)
    out = np.empty((16, width), np.uint8)
    m = 0
    d = 0
    while d >= 0:
        if d == n:
            closed = True
            for k in range(1, c + 1):
                if sig[n, 2 * k - 1] != 2 * k:
                    closed = False
                    break
            if closed:
                if m == out.shape[0]:
                    grown = np.empty((2 * m, width), np.uint8)
                    grown[:m] = out[:m]
                    out = grown
                out[m, :] = act
                m += 1
            d -= 1
            continue
        ch = choice[d]
        s = pos[d]
        a = sig[d, s]
        b = sig[d, s + 1]
        if ch == 2 or a == s + 1:
            choice[d] = 0
            d -= 1
            continue
        if ch == 0:
            choice[d] = 1
            for p in range(1, npos + 1):
                q = sig[d, p]
                if p == s:
                    p2 = s + 1
                elif p == s + 1:
                    p2 = s
                else:
                    p2 = p
                if q == s:
                    q2 = s + 1
                elif q == s + 1:
                    q2 = s
                else:
                    q2 = q
                sig[d + 1, p2] = q2
            act[d] = 0
            d += 1
            continue
        choice[d] = 2
        normal = (a < s and b > s + 1) or (b < a and a < s) or (a > b and b > s + 1)
        if can_switch[d] and normal:
            for p in range(1, npos + 1):
                sig[d + 1, p] = sig[d, p]
            act[d] = 1
            d += 1
    return out[:m].copy()


def _augmentations(eligible, trig_ptr, cons_ptr, word_ptr, letters):
    """Backtracking search for augmentations.

    Generators are assigned in index order.  Constraint ``k`` (one per
    generator with a nonzero differential) owns words
    ``cons_ptr[k]:cons_ptr[k+1]``; word ``w`` owns letters
    ``word_ptr[w]:word_ptr[w+1]``.  Constraints are bucketed by the largest
    letter index they mention, shifted by one: bucket 0 holds constraints made
    only of constant words, bucket ``i + 1`` fires once generator ``i`` is set.

    Returns a ``(count, N)`` uint8 array of assignments.
    """
    N = eligible.shape[0]
    width = max(N, 1)
    vals = np.zeros(width, np.uint8)
    out = np.empty((16, width), np.uint8)
    m = 0
    for k in range(trig_ptr[0], trig_ptr[1]):
        parity = 0
        for w in range(cons_ptr[k], cons_ptr[k + 1]):
            hit = 1
            for x in range(word_ptr[w], word_ptr[w + 1]):
                if vals[letters[x]] == 0:
                    hit = 0
                    break
            parity ^= hit
        if parity == 1:
            return out[:0].copy()
    choice = np.full(N + 1, -1, np.int64)
    d = 0
    while d >= 0:
        if d == N:
            if m == out.shape[0]:
                grown = np.empty((2 * m, width), np.uint8)
                grown[:m] = out[:m]
                out = grown
            out[m, :] = vals
            m += 1
            d -= 1
            continue
        choice[d] += 1
        limit = 1 if eligible[d] else 0
        if choice[d] > limit:
            choice[d] = -1
            vals[d] = 0
            d -= 1
            continue
        vals[d] = choice[d]
        ok = True
        for k in range(trig_ptr[d + 1], trig_ptr[d + 2]):
            parity = 0
            for w in range(cons_ptr[k], cons_ptr[k + 1]):
                hit = 1
                for x in range(word_ptr[w], word_ptr[w + 1]):
                    if vals[letters[x]] == 0:
                        hit = 0
                        break
                parity ^= hit
            if parity == 1:
                ok = False
                break
        if ok:
            d += 1
    return out[:m].copy()


sweep_jit, sweep_py = jit_pair(_sweep)
rulings_jit, rulings_py = jit_pair(_rulings)
augmentations_jit, augmentations_py = jit_pair(_augmentations)

if USE_JIT:
    sweep, rulings_search, augmentations_search = sweep_jit, rulings_jit, augmentations_jit
else:
    sweep, rulings_search, augmentations_search = sweep_py, rulings_py, augmentations_py


def decode_sweep(records):
    """Split a flat sweep record array into ``(upper, lower)`` index tuples."""
    disks = []
    rec = records.tolist()
    k = 0
    while k < len(rec):
        nu, nl = rec[k], rec[k + 1]
        upper = tuple(rec[k + 2:k + 2 + nu])
        lower = tuple(rec[k + 2 + nu:k + 2 + nu + nl])
        disks.append((upper, lower))
        k += 2 + nu + nl
    return disks
