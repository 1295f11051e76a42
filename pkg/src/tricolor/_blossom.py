"""Exact minimum-weight perfect matching on dense integer weight matrices.

This is a primal-dual blossom algorithm in the structure popularized by
Galil's survey and Van Rantwijk's reference implementation, specialized to
complete graphs given as dense matrices and written against flat arrays so
numba can compile it.  Differences from the reference:

* edges are implicit (every vertex pair), and "allowed" (tight) edges are
  recomputed from the duals instead of cached -- a tight edge stays tight
  under the dual updates that can occur while both ends stay labeled, so
  the recomputation is exact;
* duals are seeded greedily and a greedy matching on tight edges is taken
  before the first stage, which removes most augmentation stages on the
  clustered instances produced by syndrome decoding;
* all weights are doubled internally, which keeps every dual variable an
  even integer and all delta steps integral.

State is carried in flat arrays shared by all helpers:

  mate[v]        partner vertex or -1
  label[b]       0 free, 1 S, 2 T (5 = S with a tracing breadcrumb)
  ledge_v/_w[b]  edge (v, w) through which b got its label, w inside b
  inblossom[v]   top-level blossom containing vertex v
  bparent[b]     parent blossom, -1 at top level
  bbase[b]       base vertex of blossom b (-1 = slot unused)
  best_v/_w[b]   least-slack edge for delta2/delta3 bookkeeping
  y[v], z[b]     dual variables (doubled)
  childs/cu/cv   per-slot child blossoms and their connecting edges
  ccnt[row]      number of children of slot row
  queue          stack of unscanned S-vertices

Vertices are ids 0..n-1; non-trivial blossoms use slots n..2n-1 (row s-n).
If numba is unavailable the same code runs as plain Python, two orders of
magnitude slower but bit-identical.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def deco(f):
            return f

        return deco


NONE = -1


@njit(cache=True)
def _enqueue_leaves(b, n, childs, ccnt, queue, qtail, leafstack):
    """Push every leaf vertex of blossom b onto the scan queue."""
    if b < n:
        queue[qtail] = b
        return qtail + 1
    lt = 0
    leafstack[lt] = b
    lt += 1
    while lt > 0:
        lt -= 1
        s = leafstack[lt]
        if s < n:
            queue[qtail] = s
            qtail += 1
        else:
            row = s - n
            for k in range(ccnt[row]):
                leafstack[lt] = childs[row, k]
                lt += 1
    return qtail


@njit(cache=True)
def _collect_leaves(b, n, childs, ccnt, leafstack, leafbuf):
    """Write the leaf vertices of blossom b into leafbuf; return count."""
    if b < n:
        leafbuf[0] = b
        return 1
    nleaf = 0
    lt = 0
    leafstack[lt] = b
    lt += 1
    while lt > 0:
        lt -= 1
        s = leafstack[lt]
        if s < n:
            leafbuf[nleaf] = s
            nleaf += 1
        else:
            row = s - n
            for k in range(ccnt[row]):
                leafstack[lt] = childs[row, k]
                lt += 1
    return nleaf


@njit(cache=True)
def _assign_label(w, t, fro, n, mate, label, ledge_v, ledge_w, inblossom,
                  bbase, best_v, childs, ccnt, queue, qtail, leafstack):
    """Label w's blossom S (t=1) or T (t=2); T labels the base's mate S."""
    b = inblossom[w]
    label[w] = t
    label[b] = t
    ledge_v[w] = fro
    ledge_w[w] = w
    ledge_v[b] = fro
    ledge_w[b] = w
    best_v[w] = NONE
    best_v[b] = NONE
    if t == 1:
        qtail = _enqueue_leaves(b, n, childs, ccnt, queue, qtail, leafstack)
    else:
        base = bbase[b]
        mb = mate[base]
        b2 = inblossom[mb]
        label[mb] = 1
        label[b2] = 1
        ledge_v[mb] = base
        ledge_w[mb] = mb
        ledge_v[b2] = base
        ledge_w[b2] = mb
        best_v[mb] = NONE
        best_v[b2] = NONE
        qtail = _enqueue_leaves(b2, n, childs, ccnt, queue, qtail, leafstack)
    return qtail


@njit(cache=True)
def _scan_blossom(v, w, label, ledge_v, inblossom, bbase, path):
    """Trace back from v and w; return the base of a new blossom or -1 if
    the paths reach different roots (an augmenting path)."""
    pcnt = 0
    base = NONE
    while v != NONE:
        b = inblossom[v]
        if label[b] & 4:
            base = bbase[b]
            break
        path[pcnt] = b
        pcnt += 1
        label[b] = 5
        if ledge_v[b] == NONE:
            v = NONE
        else:
            v = ledge_v[b]
            b = inblossom[v]
            v = ledge_v[b]
        if w != NONE:
            tmp = v
            v = w
            w = tmp
    for k in range(pcnt):
        label[path[k]] = 1
    return base


@njit(cache=True)
def _add_blossom(base, v, w, n, w2, mate, label, ledge_v, ledge_w, inblossom,
                 bparent, bbase, best_v, best_w, y, z, childs, cu, cv, ccnt,
                 freelist, ftop, queue, qtail, leafstack, leafbuf, pbuf,
                 ebuf_u, ebuf_v):
    """Merge the blossoms on the v..base..w cycle into a new S-blossom."""
    bb = inblossom[base]
    bv = inblossom[v]
    bw = inblossom[w]
    ftop -= 1
    slot = freelist[ftop]
    row = slot - n
    bbase[slot] = base
    bparent[slot] = NONE
    bparent[bb] = slot

    # Trace from v back to the base, collecting sub-blossoms and the edges
    # between them; then lay them out base-first (reversing the v side).
    m = 0
    vv = v
    while bv != bb:
        bparent[bv] = slot
        pbuf[m] = bv
        ebuf_u[m] = ledge_v[bv]
        ebuf_v[m] = ledge_w[bv]
        m += 1
        vv = ledge_v[bv]
        bv = inblossom[vv]
    childs[row, 0] = bb
    for k in range(m):
        childs[row, 1 + k] = pbuf[m - 1 - k]
        cu[row, k] = ebuf_u[m - 1 - k]
        cv[row, k] = ebuf_v[m - 1 - k]
    cu[row, m] = v
    cv[row, m] = w
    cnt = m + 1
    ww = w
    while bw != bb:
        bparent[bw] = slot
        childs[row, cnt] = bw
        cu[row, cnt] = ledge_w[bw]
        cv[row, cnt] = ledge_v[bw]
        cnt += 1
        ww = ledge_v[bw]
        bw = inblossom[ww]
    ccnt[row] = cnt

    label[slot] = 1
    ledge_v[slot] = ledge_v[bb]
    ledge_w[slot] = ledge_w[bb]
    z[slot] = 0

    # Former T-vertices turn S: queue them.  Then repoint all leaves.
    nleaf = _collect_leaves(slot, n, childs, ccnt, leafstack, leafbuf)
    for k in range(nleaf):
        lv = leafbuf[k]
        if label[inblossom[lv]] == 2:
            queue[qtail] = lv
            qtail += 1
        inblossom[lv] = slot
    for k in range(cnt):
        best_v[childs[row, k]] = NONE

    # Fresh least-slack edge toward the other S-blossoms.
    bev = NONE
    bew = NONE
    bsl = np.int64(0)
    for k in range(nleaf):
        lv = leafbuf[k]
        for u in range(n):
            if inblossom[u] != slot and label[inblossom[u]] == 1:
                sl = y[lv] + y[u] - w2[lv, u]
                if bev == NONE or sl < bsl:
                    bsl = sl
                    bev = lv
                    bew = u
    best_v[slot] = bev
    best_w[slot] = bew
    return ftop, qtail


@njit(cache=True)
def _augment_blossom(b, v, n, mate, bparent, bbase, childs, cu, cv, ccnt,
                     rollbuf, astk_b, astk_v):
    """Swap matched edges inside blossom b so vertex v becomes its base."""
    atop = 0
    astk_b[atop] = b
    astk_v[atop] = v
    atop += 1
    while atop > 0:
        atop -= 1
        ab = astk_b[atop]
        av = astk_v[atop]
        t = av
        while bparent[t] != ab:
            t = bparent[t]
        if t >= n:
            astk_b[atop] = t
            astk_v[atop] = av
            atop += 1
        row = ab - n
        cnt = ccnt[row]
        i = 0
        for k in range(cnt):
            if childs[row, k] == t:
                i = k
                break
        j = i
        if i & 1:
            j -= cnt
            jstep = 1
        else:
            jstep = -1
        while j != 0:
            j += jstep
            kk = j % cnt
            t2 = childs[row, kk]
            if jstep == 1:
                wv = cu[row, kk]
                xv = cv[row, kk]
            else:
                kk2 = (j - 1) % cnt
                xv = cu[row, kk2]
                wv = cv[row, kk2]
            if t2 >= n:
                astk_b[atop] = t2
                astk_v[atop] = wv
                atop += 1
            j += jstep
            t2 = childs[row, j % cnt]
            if t2 >= n:
                astk_b[atop] = t2
                astk_v[atop] = xv
                atop += 1
            mate[wv] = xv
            mate[xv] = wv
        if i > 0:
            for k in range(cnt):
                rollbuf[k] = childs[row, (i + k) % cnt]
            for k in range(cnt):
                childs[row, k] = rollbuf[k]
            for k in range(cnt):
                rollbuf[k] = cu[row, (i + k) % cnt]
            for k in range(cnt):
                cu[row, k] = rollbuf[k]
            for k in range(cnt):
                rollbuf[k] = cv[row, (i + k) % cnt]
            for k in range(cnt):
                cv[row, k] = rollbuf[k]
        # The child containing av lands at position 0 and av becomes its
        # base once the deferred sub-blossom tasks run, so set it directly.
        bbase[ab] = av


@njit(cache=True)
def _augment_matching(v, w, n, mate, label, ledge_v, ledge_w, inblossom,
                      bparent, bbase, childs, cu, cv, ccnt, rollbuf,
                      astk_b, astk_v):
    """Flip matched/unmatched edges along the augmenting path through the
    tight edge (v, w), down to the single root of each side's tree."""
    for side in range(2):
        if side == 0:
            s = v
            j = w
        else:
            s = w
            j = v
        while True:
            bs = inblossom[s]
            if bs >= n:
                _augment_blossom(bs, s, n, mate, bparent, bbase, childs,
                                 cu, cv, ccnt, rollbuf, astk_b, astk_v)
            mate[s] = j
            if ledge_v[bs] == NONE:
                break
            t = ledge_v[bs]
            bt = inblossom[t]
            news = ledge_v[bt]
            newj = ledge_w[bt]
            if bt >= n:
                _augment_blossom(bt, newj, n, mate, bparent, bbase, childs,
                                 cu, cv, ccnt, rollbuf, astk_b, astk_v)
            mate[newj] = news
            s = news
            j = newj


@njit(cache=True)
def _expand_blossom_shallow(slot, n, mate, label, ledge_v, ledge_w,
                            inblossom, bparent, bbase, best_v, z, childs,
                            cu, cv, ccnt, freelist, ftop, queue, qtail,
                            leafstack):
    """Expand a top-level T-blossom whose dual reached zero (mid-stage).

    Children become top level; the alternating path through the blossom is
    relabeled from the entry vertex around to the base, and any other
    sub-blossom already reachable from outside is relabeled T.
    """
    row = slot - n
    cnt = ccnt[row]
    for k in range(cnt):
        s = childs[row, k]
        bparent[s] = NONE
        if s < n:
            inblossom[s] = s
        else:
            lt = 0
            leafstack[lt] = s
            lt += 1
            while lt > 0:
                lt -= 1
                s2 = leafstack[lt]
                if s2 < n:
                    inblossom[s2] = s
                else:
                    r2 = s2 - n
                    for k2 in range(ccnt[r2]):
                        leafstack[lt] = childs[r2, k2]
                        lt += 1

    if label[slot] == 2:
        entrychild = inblossom[ledge_w[slot]]
        j = 0
        for k in range(cnt):
            if childs[row, k] == entrychild:
                j = k
                break
        if j & 1:
            j -= cnt
            jstep = 1
        else:
            jstep = -1
        ev = ledge_v[slot]
        ew = ledge_w[slot]
        while j != 0:
            if jstep == 1:
                q = cv[row, j % cnt]
            else:
                q = cu[row, (j - 1) % cnt]
            label[ew] = 0
            label[q] = 0
            qtail = _assign_label(ew, 2, ev, n, mate, label, ledge_v,
                                  ledge_w, inblossom, bbase, best_v, childs,
                                  ccnt, queue, qtail, leafstack)
            j += jstep
            if jstep == 1:
                kk = j % cnt
                ev = cu[row, kk]
                ew = cv[row, kk]
            else:
                kk = (j - 1) % cnt
                ew = cu[row, kk]
                ev = cv[row, kk]
            j += jstep
        bwc = childs[row, 0]
        label[ew] = 2
        label[bwc] = 2
        ledge_v[ew] = ev
        ledge_w[ew] = ew
        ledge_v[bwc] = ev
        ledge_w[bwc] = ew
        best_v[bwc] = NONE
        j += jstep
        while childs[row, j % cnt] != entrychild:
            bv2 = childs[row, j % cnt]
            if label[bv2] == 1:
                j += jstep
                continue
            vv = NONE
            if bv2 >= n:
                lt = 0
                leafstack[lt] = bv2
                lt += 1
                while lt > 0:
                    lt -= 1
                    s2 = leafstack[lt]
                    if s2 < n:
                        if label[s2] != 0:
                            vv = s2
                            break
                    else:
                        r2 = s2 - n
                        for k2 in range(ccnt[r2]):
                            leafstack[lt] = childs[r2, k2]
                            lt += 1
            else:
                if label[bv2] != 0:
                    vv = bv2
            if vv != NONE:
                label[vv] = 0
                label[mate[bbase[bv2]]] = 0
                qtail = _assign_label(vv, 2, ledge_v[vv], n, mate, label,
                                      ledge_v, ledge_w, inblossom, bbase,
                                      best_v, childs, ccnt, queue, qtail,
                                      leafstack)
            j += jstep

    label[slot] = 0
    ledge_v[slot] = NONE
    ledge_w[slot] = NONE
    best_v[slot] = NONE
    bparent[slot] = NONE
    bbase[slot] = NONE
    z[slot] = 0
    freelist[ftop] = slot
    ftop += 1
    return ftop, qtail


@njit(cache=True)
def _expand_zero_blossoms(n, inblossom, bparent, bbase, label, ledge_v,
                          ledge_w, best_v, z, childs, ccnt, freelist, ftop,
                          leafstack, estk):
    """End of a stage: recursively dissolve S-blossoms with zero dual."""
    nslots = 2 * n
    for slot in range(n, nslots):
        if (bbase[slot] != NONE and bparent[slot] == NONE
                and label[slot] == 1 and z[slot] == 0):
            etop = 0
            estk[etop] = slot
            etop += 1
            while etop > 0:
                etop -= 1
                s = estk[etop]
                row = s - n
                for k in range(ccnt[row]):
                    ch = childs[row, k]
                    bparent[ch] = NONE
                    if ch < n:
                        inblossom[ch] = ch
                    elif z[ch] == 0:
                        estk[etop] = ch
                        etop += 1
                    else:
                        lt = 0
                        leafstack[lt] = ch
                        lt += 1
                        while lt > 0:
                            lt -= 1
                            s2 = leafstack[lt]
                            if s2 < n:
                                inblossom[s2] = ch
                            else:
                                r2 = s2 - n
                                for k2 in range(ccnt[r2]):
                                    leafstack[lt] = childs[r2, k2]
                                    lt += 1
                label[s] = 0
                ledge_v[s] = NONE
                ledge_w[s] = NONE
                best_v[s] = NONE
                bparent[s] = NONE
                bbase[s] = NONE
                z[s] = 0
                freelist[ftop] = s
                ftop += 1
    return ftop


@njit(cache=True)
def solve_max_matching(w2):
    """Maximum-weight perfect matching of a complete graph.

    w2 is a symmetric int64 matrix of doubled edge weights, all even and
    positive, with even dimension; positivity forces the optimum to be
    perfect.  Returns the mate array (-1 entries mean the kernel failed).
    """
    n = w2.shape[0]
    mate = np.full(n, NONE, np.int64)
    if n == 0:
        return mate
    nslots = 2 * n

    label = np.zeros(nslots, np.int64)
    ledge_v = np.full(nslots, NONE, np.int64)
    ledge_w = np.full(nslots, NONE, np.int64)
    inblossom = np.arange(n).astype(np.int64)
    bparent = np.full(nslots, NONE, np.int64)
    bbase = np.full(nslots, NONE, np.int64)
    for v in range(n):
        bbase[v] = v
    best_v = np.full(nslots, NONE, np.int64)
    best_w = np.full(nslots, NONE, np.int64)
    y = np.zeros(n, np.int64)
    z = np.zeros(nslots, np.int64)

    childs = np.empty((n, n + 1), np.int64)
    cu = np.empty((n, n + 1), np.int64)
    cv = np.empty((n, n + 1), np.int64)
    ccnt = np.zeros(n, np.int64)
    freelist = np.empty(n, np.int64)
    for k in range(n):
        freelist[k] = nslots - 1 - k
    ftop = n

    qcap = 8 * n + 16
    queue = np.empty(qcap, np.int64)
    qtail = 0

    path = np.empty(nslots, np.int64)
    leafbuf = np.empty(n, np.int64)
    leafstack = np.empty(nslots, np.int64)
    pbuf = np.empty(n, np.int64)
    ebuf_u = np.empty(n, np.int64)
    ebuf_v = np.empty(n, np.int64)
    rollbuf = np.empty(n + 1, np.int64)
    astk_b = np.empty(nslots, np.int64)
    astk_v = np.empty(nslots, np.int64)
    estk = np.empty(nslots, np.int64)

    # Greedy initialization.  Seeding y = max(w)/2 makes mutually-nearest
    # pairs tight (and is feasible: y_i + y_j >= w_ij/2 + w_ij/2); a dual
    # ascent pass then buys every leftover vertex one tight edge.  Weights
    # are multiples of 4, so every dual stays even.
    for v in range(n):
        big = np.int64(0)
        for u in range(n):
            if u != v and w2[v, u] > big:
                big = w2[v, u]
        y[v] = big // 2
    for v in range(n):
        if mate[v] != NONE:
            continue
        for u in range(v + 1, n):
            if mate[u] == NONE and y[v] + y[u] - w2[v, u] == 0:
                mate[v] = u
                mate[u] = v
                break
    for v in range(n):
        if mate[v] != NONE:
            continue
        usel = NONE
        smin = np.int64(0)
        for u in range(n):
            if u == v:
                continue
            s = y[v] + y[u] - w2[v, u]
            if usel == NONE or s < smin:
                smin = s
                usel = u
        y[v] -= smin
        if mate[usel] == NONE:
            mate[v] = usel
            mate[usel] = v

    for _stage in range(n // 2 + 2):
        for i in range(nslots):
            label[i] = 0
            ledge_v[i] = NONE
            ledge_w[i] = NONE
            best_v[i] = NONE
            best_w[i] = NONE
        qtail = 0
        augmented = False

        for v in range(n):
            if mate[v] == NONE and label[inblossom[v]] == 0:
                qtail = _assign_label(v, 1, NONE, n, mate, label, ledge_v,
                                      ledge_w, inblossom, bbase, best_v,
                                      childs, ccnt, queue, qtail, leafstack)
        if qtail == 0:
            break

        for _substage in range(8 * n + 64):
            while qtail > 0 and not augmented:
                qtail -= 1
                v = queue[qtail]
                for u in range(n):
                    if u == v:
                        continue
                    bv = inblossom[v]
                    bu = inblossom[u]
                    if bv == bu:
                        continue
                    kslack = y[v] + y[u] - w2[v, u]
                    if kslack <= 0:
                        lbu = label[bu]
                        if lbu == 0:
                            qtail = _assign_label(
                                u, 2, v, n, mate, label, ledge_v, ledge_w,
                                inblossom, bbase, best_v, childs, ccnt,
                                queue, qtail, leafstack)
                        elif lbu == 1:
                            base = _scan_blossom(v, u, label, ledge_v,
                                                 inblossom, bbase, path)
                            if base != NONE:
                                ftop, qtail = _add_blossom(
                                    base, v, u, n, w2, mate, label, ledge_v,
                                    ledge_w, inblossom, bparent, bbase,
                                    best_v, best_w, y, z, childs, cu, cv,
                                    ccnt, freelist, ftop, queue, qtail,
                                    leafstack, leafbuf, pbuf, ebuf_u, ebuf_v)
                            else:
                                _augment_matching(
                                    v, u, n, mate, label, ledge_v, ledge_w,
                                    inblossom, bparent, bbase, childs, cu,
                                    cv, ccnt, rollbuf, astk_b, astk_v)
                                augmented = True
                                break
                        elif label[u] == 0:
                            # u sits in a T-blossom but is now reachable
                            # from outside; remember the entry edge.
                            label[u] = 2
                            ledge_v[u] = v
                            ledge_w[u] = u
                    else:
                        lbu = label[bu]
                        if lbu == 1:
                            if best_v[bv] == NONE or kslack < (
                                    y[best_v[bv]] + y[best_w[bv]]
                                    - w2[best_v[bv], best_w[bv]]):
                                best_v[bv] = v
                                best_w[bv] = u
                        elif label[u] == 0:
                            if best_v[u] == NONE or kslack < (
                                    y[best_v[u]] + y[best_w[u]]
                                    - w2[best_v[u], best_w[u]]):
                                best_v[u] = v
                                best_w[u] = u

            if augmented:
                break

            deltatype = -1
            delta = np.int64(0)
            deltaedge_v = NONE
            deltablossom = NONE

            for v in range(n):
                if label[inblossom[v]] == 0 and best_v[v] != NONE:
                    d = y[best_v[v]] + y[best_w[v]] - w2[best_v[v], best_w[v]]
                    if deltatype == -1 or d < delta:
                        delta = d
                        deltatype = 2
                        deltaedge_v = best_v[v]

            for b in range(nslots):
                if (bparent[b] == NONE and label[b] == 1
                        and best_v[b] != NONE):
                    ks = y[best_v[b]] + y[best_w[b]] - w2[best_v[b], best_w[b]]
                    d = ks // 2
                    if deltatype == -1 or d < delta:
                        delta = d
                        deltatype = 3
                        deltaedge_v = best_v[b]

            for b in range(n, nslots):
                if (bbase[b] != NONE and bparent[b] == NONE
                        and label[b] == 2):
                    if deltatype == -1 or z[b] < delta:
                        delta = z[b]
                        deltatype = 4
                        deltablossom = b

            if deltatype == -1:
                deltatype = 1
                mn = y[0]
                for v in range(1, n):
                    if y[v] < mn:
                        mn = y[v]
                delta = mn if mn > 0 else np.int64(0)

            for v in range(n):
                lab = label[inblossom[v]]
                if lab == 1:
                    y[v] -= delta
                elif lab == 2:
                    y[v] += delta
            for b in range(n, nslots):
                if bbase[b] != NONE and bparent[b] == NONE:
                    if label[b] == 1:
                        z[b] += delta
                    elif label[b] == 2:
                        z[b] -= delta

            if deltatype == 1:
                break
            elif deltatype == 2 or deltatype == 3:
                queue[qtail] = deltaedge_v
                qtail += 1
            else:
                ftop, qtail = _expand_blossom_shallow(
                    deltablossom, n, mate, label, ledge_v, ledge_w,
                    inblossom, bparent, bbase, best_v, z, childs, cu, cv,
                    ccnt, freelist, ftop, queue, qtail, leafstack)

            if qtail >= qcap - n:
                raise RuntimeError("blossom queue overflow")

        if not augmented:
            break

        ftop = _expand_zero_blossoms(n, inblossom, bparent, bbase, label,
                                     ledge_v, ledge_w, best_v, z, childs,
                                     ccnt, freelist, ftop, leafstack, estk)

    return mate


def min_weight_perfect_matching_array(weights: np.ndarray) -> np.ndarray:
    """Mate array of an exact minimum-weight perfect matching.

    weights: symmetric non-negative integer matrix of even dimension.
    """
    w = np.ascontiguousarray(weights, dtype=np.int64)
    n = w.shape[0]
    if n % 2:
        raise ValueError("perfect matching requires an even number of vertices")
    if n == 0:
        return np.empty(0, dtype=np.int64)
    # Transform to a positive maximization problem; the factor 4 keeps all
    # dual variables even integers, including the greedy seed max(w)/2.
    w2 = 4 * (w.max() + 1 - w)
    np.fill_diagonal(w2, 0)
    mate = solve_max_matching(w2)
    if np.any(mate < 0):
        raise RuntimeError("matching is not perfect; kernel invariant broken")
    return mate
