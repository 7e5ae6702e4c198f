"""Numeric inner loops: max-flow, brute-force densest subset, brute-force
injective coloring.

Every kernel is written in the numba-compatible subset of Python and operates
on int64 numpy arrays.  With numba disabled (see ``_accel``) the loop kernels
run as ordinary Python and the densest-subset search switches to a vectorized
numpy implementation.
"""

from __future__ import annotations

import numpy as np

from ._accel import HAVE_NUMBA, njit

# ---------------------------------------------------------------------------
# Dinic max-flow on an arc list.  Arcs come in pairs (2k, 2k+1); the reverse
# of arc e is e ^ 1 and the tail of e is to[e ^ 1].
# ---------------------------------------------------------------------------


@njit
def max_flow(n, s, t, head, nxt, to, cap):
    """Push a maximum s-t flow; ``cap`` is overwritten with residual capacities."""
    total = 0
    level = np.empty(n, np.int64)
    it = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    path = np.empty(n, np.int64)
    big = 0
    for e in range(cap.shape[0]):
        big += cap[e]
    big += 1
    while True:
        for i in range(n):
            level[i] = -1
        level[s] = 0
        qh = 0
        qt = 1
        queue[0] = s
        while qh < qt:
            v = queue[qh]
            qh += 1
            e = head[v]
            while e != -1:
                w = to[e]
                if cap[e] > 0 and level[w] < 0:
                    level[w] = level[v] + 1
                    queue[qt] = w
                    qt += 1
                e = nxt[e]
        if level[t] < 0:
            break
        for i in range(n):
            it[i] = head[i]
        while True:
            depth = 0
            v = s
            reached = False
            while True:
                if v == t:
                    reached = True
                    break
                e = it[v]
                advanced = False
                while e != -1:
                    w = to[e]
                    if cap[e] > 0 and level[w] == level[v] + 1:
                        path[depth] = e
                        depth += 1
                        v = w
                        advanced = True
                        break
                    e = nxt[e]
                    it[v] = e
                if not advanced:
                    if v == s:
                        break
                    level[v] = -1
                    depth -= 1
                    back = path[depth]
                    v = to[back ^ 1]
                    it[v] = nxt[it[v]]
            if not reached:
                break
            b = big
            for i in range(depth):
                if cap[path[i]] < b:
                    b = cap[path[i]]
            for i in range(depth):
                e = path[i]
                cap[e] -= b
                cap[e ^ 1] += b
            total += b
    return total


@njit
def residual_reachable(n, s, head, nxt, to, cap):
    """Mask of vertices reachable from ``s`` through arcs with spare capacity."""
    seen = np.zeros(n, np.bool_)
    stack = np.empty(n, np.int64)
    seen[s] = True
    stack[0] = s
    top = 1
    while top > 0:
        top -= 1
        v = stack[top]
        e = head[v]
        while e != -1:
            w = to[e]
            if cap[e] > 0 and not seen[w]:
                seen[w] = True
                stack[top] = w
                top += 1
            e = nxt[e]
    return seen


# ---------------------------------------------------------------------------
# Exhaustive densest subset (oracle for the flow-based maximum average degree).
# ---------------------------------------------------------------------------


@njit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit
def densest_subset_loop(n, nbr_mask):
    """Return (2e, k, mask) maximizing 2e/k over all nonempty vertex subsets.

    Ties keep the numerically smallest mask.
    """
    best_num = -1
    best_den = 1
    best_mask = 0
    for mask in range(1, 1 << n):
        k = 0
        e2 = 0
        for v in range(n):
            if (mask >> v) & 1:
                k += 1
                e2 += _popcount(nbr_mask[v] & mask)
        if e2 * best_den > best_num * k:
            best_num = e2
            best_den = k
            best_mask = mask
    return best_num, best_den, best_mask


def densest_subset_numpy(n, edges_u, edges_v, chunk=1 << 18):
    """Vectorized twin of :func:`densest_subset_loop` (same tie rule)."""
    best = (-1, 1, 0)
    total = 1 << n
    start = 1
    while start < total:
        stop = min(total, start + chunk)
        masks = np.arange(start, stop, dtype=np.int64)
        sizes = np.zeros(masks.shape[0], np.int64)
        for v in range(n):
            sizes += (masks >> v) & 1
        e2 = np.zeros(masks.shape[0], np.int64)
        for u, v in zip(edges_u, edges_v):
            e2 += ((masks >> u) & (masks >> v) & 1) * 2
        for k in range(1, n + 1):
            sel = sizes == k
            if not sel.any():
                continue
            vals = e2[sel]
            i = int(np.argmax(vals))
            num = int(vals[i])
            if num * best[1] > best[0] * k:
                best = (num, k, int(masks[sel][i]))
            elif num * best[1] == best[0] * k and int(masks[sel][i]) < best[2]:
                best = (num, k, int(masks[sel][i]))
        start = stop
    return best


def densest_subset(n, nbr_mask, edges_u, edges_v):
    if HAVE_NUMBA:
        return densest_subset_loop(n, nbr_mask)
    return densest_subset_numpy(n, edges_u, edges_v)


# ---------------------------------------------------------------------------
# Naive injective coloring search straight from the definition: vertices in id
# order, two vertices conflict when their neighbour masks intersect.
# ---------------------------------------------------------------------------


@njit
def injective_search(n, nbr_mask, k, out):
    """Fill ``out`` with an injective k-coloring (colors 1..k); False if none."""
    if n == 0:
        return True
    for i in range(n):
        out[i] = 0
    i = 0
    while i >= 0:
        c = out[i] + 1
        placed = False
        while c <= k:
            ok = True
            for j in range(i):
                if out[j] == c and (nbr_mask[i] & nbr_mask[j]) != 0:
                    ok = False
                    break
            if ok:
                out[i] = c
                placed = True
                break
            c += 1
        if placed:
            i += 1
            if i == n:
                return True
        else:
            out[i] = 0
            i -= 1
    return False
