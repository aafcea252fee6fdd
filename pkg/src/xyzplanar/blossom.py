"""Blossom algorithm for weighted matching on dense (complete) graphs.

Implements the classic O(V^3) primal-dual method: alternating-tree growth
over S/T-labeled blossoms, dual-variable updates chosen as the minimum of
the usual four delta cases, blossom shrinking on odd cycles and expansion
of zero-dual blossoms.  The kernel always maximizes cardinality first and
total weight second, which turns minimum-weight perfect matching into
maximum-weight matching on the negated weight matrix.

The kernel is written against flat numpy arrays only (no recursion, no
object graph) so that numba can JIT it; without numba it runs as plain
Python.  Set XYZPLANAR_NO_JIT=1 to force the interpreted path.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import DimensionError, StructureError

_NOLABEL = 0
_S = 1
_T = 2


def _mwm_kernel(W: np.ndarray) -> np.ndarray:  # noqa: C901 - one big solver
    nv = W.shape[0]
    mate = np.full(nv, -1, dtype=np.int64)
    if nv == 0:
        return mate
    cap = 2 * nv

    maxw = 0.0
    for i in range(nv):
        for j in range(nv):
            if i != j and W[i, j] > maxw:
                maxw = W[i, j]

    label = np.zeros(cap, dtype=np.int64)
    lblv = np.full(cap, -1, dtype=np.int64)  # labeledge = (lblv, lblw)
    lblw = np.full(cap, -1, dtype=np.int64)
    inblossom = np.arange(nv, dtype=np.int64)
    parent = np.full(cap, -1, dtype=np.int64)
    base = np.full(cap, -1, dtype=np.int64)
    base[:nv] = np.arange(nv, dtype=np.int64)
    bdual = np.zeros(cap, dtype=np.float64)
    dual = np.full(nv, maxw, dtype=np.float64)
    bev = np.full(cap, -1, dtype=np.int64)  # best (least-slack) edge per slot
    bew = np.full(cap, -1, dtype=np.int64)
    nchild = np.zeros(cap, dtype=np.int64)
    childs = np.full((cap, nv + 2), -1, dtype=np.int64)
    cedgev = np.full((cap, nv + 2), -1, dtype=np.int64)
    cedgew = np.full((cap, nv + 2), -1, dtype=np.int64)
    allowed = np.zeros((nv, nv), dtype=np.bool_)

    queue = np.zeros(nv * nv + 4 * nv + 16, dtype=np.int64)
    qstate = np.zeros(1, dtype=np.int64)  # queue length
    unused = np.zeros(nv + 1, dtype=np.int64)  # free nontrivial blossom slots
    ustate = np.zeros(1, dtype=np.int64)
    for b in range(cap - 1, nv - 1, -1):
        unused[ustate[0]] = b
        ustate[0] += 1

    dfsbuf = np.zeros(cap, dtype=np.int64)
    lbufA = np.zeros(nv, dtype=np.int64)  # leaves scratch for assign_label
    lbufB = np.zeros(nv, dtype=np.int64)  # leaves scratch for everything else
    pathbuf = np.zeros(cap, dtype=np.int64)  # scan_blossom breadcrumbs
    tmpc = np.zeros(nv + 2, dtype=np.int64)  # add_blossom child list
    tmpev = np.zeros(nv + 2, dtype=np.int64)
    tmpew = np.zeros(nv + 2, dtype=np.int64)
    rotbuf = np.zeros(nv + 2, dtype=np.int64)
    wl_b = np.zeros(cap, dtype=np.int64)  # augment_blossom worklist
    wl_v = np.zeros(cap, dtype=np.int64)
    est = np.zeros(cap, dtype=np.int64)  # expand_blossom stack

    def slack(u, x):
        return dual[u] + dual[x] - 2.0 * W[u, x]

    def collect_leaves(b, buf):
        if b < nv:
            buf[0] = b
            return 1
        sn = 0
        dfsbuf[sn] = b
        sn += 1
        cnt = 0
        while sn > 0:
            sn -= 1
            t = dfsbuf[sn]
            if t < nv:
                buf[cnt] = t
                cnt += 1
            else:
                for ci in range(nchild[t]):
                    dfsbuf[sn] = childs[t, ci]
                    sn += 1
        return cnt

    def queue_push(v):
        queue[qstate[0]] = v
        qstate[0] += 1

    def label_s(w, v):
        # assign label S (t=1) to vertex w via edge (v, w); v == -1 at roots
        b = inblossom[w]
        label[w] = _S
        label[b] = _S
        lblv[w] = v
        lblw[w] = w if v >= 0 else -1
        lblv[b] = v
        lblw[b] = w if v >= 0 else -1
        bev[w] = -1
        bew[w] = -1
        bev[b] = -1
        bew[b] = -1
        cnt = collect_leaves(b, lbufA)
        for i in range(cnt):
            queue_push(lbufA[i])

    def assign_label(w, t, v):
        b = inblossom[w]
        if t == _S:
            label_s(w, v)
            return
        label[w] = _T
        label[b] = _T
        lblv[w] = v
        lblw[w] = w
        lblv[b] = v
        lblw[b] = w
        bev[w] = -1
        bew[w] = -1
        bev[b] = -1
        bew[b] = -1
        bb = base[b]
        # the T-blossom's base is matched; its mate becomes an S vertex
        label_s(mate[bb], bb)

    def scan_blossom(v, w):
        # Trace back from v and w towards the tree roots. Returns the base
        # vertex of the first common blossom, or -1 when the paths reach two
        # different roots (an augmenting path exists).
        pn = 0
        vv = v
        ww = w
        found = -1
        while vv != -1:
            b = inblossom[vv]
            if label[b] & 4:
                found = base[b]
                break
            pathbuf[pn] = b
            pn += 1
            label[b] = 5
            if lblv[b] == -1:
                vv = -1  # reached an unmatched root
            else:
                vv = lblv[b]
                b2 = inblossom[vv]
                vv = lblv[b2]
            if ww != -1:
                tmp = vv
                vv = ww
                ww = tmp
        for i in range(pn):
            label[pathbuf[i]] = _S
        return found

    def add_blossom(bse, v, w):
        bb = inblossom[bse]
        bv = inblossom[v]
        bw = inblossom[w]
        ustate[0] -= 1
        b = unused[ustate[0]]
        base[b] = bse
        parent[b] = -1
        parent[bb] = b
        # collect the odd cycle: v-side path down to the base, then w-side
        pn = 0
        en = 0
        tmpev[en] = v
        tmpew[en] = w
        en += 1
        bv_ = bv
        while bv_ != bb:
            parent[bv_] = b
            tmpc[pn] = bv_
            pn += 1
            tmpev[en] = lblv[bv_]
            tmpew[en] = lblw[bv_]
            en += 1
            bv_ = inblossom[lblv[bv_]]
        tmpc[pn] = bb
        pn += 1
        i = 0
        j = pn - 1
        while i < j:
            t = tmpc[i]
            tmpc[i] = tmpc[j]
            tmpc[j] = t
            i += 1
            j -= 1
        i = 0
        j = en - 1
        while i < j:
            t = tmpev[i]
            tmpev[i] = tmpev[j]
            tmpev[j] = t
            t = tmpew[i]
            tmpew[i] = tmpew[j]
            tmpew[j] = t
            i += 1
            j -= 1
        bw_ = bw
        while bw_ != bb:
            parent[bw_] = b
            tmpc[pn] = bw_
            pn += 1
            tmpev[en] = lblw[bw_]  # reversed orientation on the w side
            tmpew[en] = lblv[bw_]
            en += 1
            bw_ = inblossom[lblv[bw_]]
        nchild[b] = pn
        for ci in range(pn):
            childs[b, ci] = tmpc[ci]
            cedgev[b, ci] = tmpev[ci]
            cedgew[b, ci] = tmpew[ci]
        label[b] = _S
        lblv[b] = lblv[bb]
        lblw[b] = lblw[bb]
        bdual[b] = 0.0
        cnt = collect_leaves(b, lbufB)
        for li in range(cnt):
            u = lbufB[li]
            if label[inblossom[u]] == _T:
                queue_push(u)  # former T-vertex turns S inside the new blossom
            inblossom[u] = b
        # recompute the least-slack edge towards other top-level S-blossoms
        bev[b] = -1
        bew[b] = -1
        best = 0.0
        for li in range(cnt):
            u = lbufB[li]
            for x in range(nv):
                if x == u:
                    continue
                bx = inblossom[x]
                if bx != b and label[bx] == _S:
                    sl = slack(u, x)
                    if bev[b] == -1 or sl < best:
                        best = sl
                        bev[b] = u
                        bew[b] = x
        for ci in range(pn):
            bev[childs[b, ci]] = -1
            bew[childs[b, ci]] = -1

    def augment_blossom(b0, v0):
        wn = 0
        wl_b[wn] = b0
        wl_v[wn] = v0
        wn += 1
        while wn > 0:
            wn -= 1
            b = wl_b[wn]
            v = wl_v[wn]
            # immediate child of b containing v
            t = v
            while parent[t] != b:
                t = parent[t]
            if t >= nv:
                wl_b[wn] = t
                wl_v[wn] = v
                wn += 1
            nch = nchild[b]
            i = 0
            for ci in range(nch):
                if childs[b, ci] == t:
                    i = ci
                    break
            if i & 1:
                j = i - nch
                jstep = 1
            else:
                j = i
                jstep = -1
            while j != 0:
                j += jstep
                jj = j % nch
                if jstep == 1:
                    w_ = cedgev[b, jj]
                    x_ = cedgew[b, jj]
                else:
                    x_ = cedgev[b, (j - 1) % nch]
                    w_ = cedgew[b, (j - 1) % nch]
                t2 = childs[b, jj]
                if t2 >= nv:
                    wl_b[wn] = t2
                    wl_v[wn] = w_
                    wn += 1
                j += jstep
                jj = j % nch
                t3 = childs[b, jj]
                if t3 >= nv:
                    wl_b[wn] = t3
                    wl_v[wn] = x_
                    wn += 1
                mate[w_] = x_
                mate[x_] = w_
            # rotate the cycle so the entry child becomes childs[0]
            if i > 0:
                for ci in range(nch):
                    rotbuf[ci] = childs[b, (ci + i) % nch]
                for ci in range(nch):
                    childs[b, ci] = rotbuf[ci]
                for ci in range(nch):
                    rotbuf[ci] = cedgev[b, (ci + i) % nch]
                for ci in range(nch):
                    cedgev[b, ci] = rotbuf[ci]
                for ci in range(nch):
                    rotbuf[ci] = cedgew[b, (ci + i) % nch]
                for ci in range(nch):
                    cedgew[b, ci] = rotbuf[ci]
            base[b] = v

    def augment_matching(v, w):
        for side in range(2):
            if side == 0:
                s = v
                j = w
            else:
                s = w
                j = v
            while True:
                bs = inblossom[s]
                if bs >= nv:
                    augment_blossom(bs, s)
                mate[s] = j
                if lblv[bs] == -1:
                    break  # reached an unmatched tree root
                t = lblv[bs]
                bt = inblossom[t]
                s = lblv[bt]
                j = lblw[bt]
                if bt >= nv:
                    augment_blossom(bt, j)
                mate[j] = s

    def expand_blossom(b0, endstage):
        sn = 0
        est[sn] = b0
        sn += 1
        while sn > 0:
            sn -= 1
            b = est[sn]
            nch = nchild[b]
            for ci in range(nch):
                s = childs[b, ci]
                parent[s] = -1
                if s < nv:
                    inblossom[s] = s
                elif endstage and bdual[s] == 0.0:
                    est[sn] = s
                    sn += 1
                else:
                    cnt = collect_leaves(s, lbufB)
                    for li in range(cnt):
                        inblossom[lbufB[li]] = s
            if (not endstage) and label[b] == _T:
                # relabel the cycle: the path from the entry child to the
                # base alternates T and S, the rest becomes unlabeled
                entrychild = inblossom[lblw[b]]
                j = 0
                for ci in range(nch):
                    if childs[b, ci] == entrychild:
                        j = ci
                        break
                if j & 1:
                    j -= nch
                    jstep = 1
                else:
                    jstep = -1
                v = lblv[b]
                w = lblw[b]
                while j != 0:
                    if jstep == 1:
                        p_ = cedgev[b, j % nch]
                        q_ = cedgew[b, j % nch]
                    else:
                        q_ = cedgev[b, (j - 1) % nch]
                        p_ = cedgew[b, (j - 1) % nch]
                    label[w] = _NOLABEL
                    label[q_] = _NOLABEL
                    assign_label(w, _T, v)
                    allowed[p_, q_] = True
                    allowed[q_, p_] = True
                    j += jstep
                    if jstep == 1:
                        v = cedgev[b, j % nch]
                        w = cedgew[b, j % nch]
                    else:
                        w = cedgev[b, (j - 1) % nch]
                        v = cedgew[b, (j - 1) % nch]
                    allowed[v, w] = True
                    allowed[w, v] = True
                    j += jstep
                bw = childs[b, 0]
                label[w] = _T
                label[bw] = _T
                lblv[w] = v
                lblw[w] = w
                lblv[bw] = v
                lblw[bw] = w
                bev[bw] = -1
                bew[bw] = -1
                j += jstep
                while childs[b, j % nch] != entrychild:
                    bv_ = childs[b, j % nch]
                    if label[bv_] == _S:
                        j += jstep
                        continue
                    vv = -1
                    if bv_ >= nv:
                        cnt = collect_leaves(bv_, lbufB)
                        vv = lbufB[cnt - 1]
                        for li in range(cnt):
                            if label[lbufB[li]] != _NOLABEL:
                                vv = lbufB[li]
                                break
                    else:
                        vv = bv_
                    if label[vv] != _NOLABEL:
                        label[vv] = _NOLABEL
                        label[mate[base[bv_]]] = _NOLABEL
                        assign_label(vv, _T, lblv[vv])
                    j += jstep
            # retire the slot
            label[b] = _NOLABEL
            lblv[b] = -1
            lblw[b] = -1
            bev[b] = -1
            bew[b] = -1
            parent[b] = -1
            base[b] = -1
            bdual[b] = 0.0
            nchild[b] = 0
            unused[ustate[0]] = b
            ustate[0] += 1

    for _stage in range(nv):
        for i in range(cap):
            label[i] = _NOLABEL
            lblv[i] = -1
            lblw[i] = -1
            bev[i] = -1
            bew[i] = -1
        allowed[:, :] = False
        qstate[0] = 0
        for v in range(nv):
            if mate[v] == -1 and label[inblossom[v]] == _NOLABEL:
                label_s(v, -1)
        augmented = False
        while True:
            while qstate[0] > 0 and not augmented:
                qstate[0] -= 1
                v = queue[qstate[0]]
                for w in range(nv):
                    if w == v:
                        continue
                    bv = inblossom[v]
                    bw = inblossom[w]
                    if bv == bw:
                        continue
                    kslack = 0.0
                    if not allowed[v, w]:
                        kslack = slack(v, w)
                        if kslack <= 0.0:
                            allowed[v, w] = True
                            allowed[w, v] = True
                    if allowed[v, w]:
                        lbw = label[bw]
                        if lbw == _NOLABEL:
                            assign_label(w, _T, v)
                        elif lbw == _S:
                            bse = scan_blossom(v, w)
                            if bse >= 0:
                                add_blossom(bse, v, w)
                            else:
                                augment_matching(v, w)
                                augmented = True
                                break
                        elif label[w] == _NOLABEL:
                            label[w] = _T
                            lblv[w] = v
                            lblw[w] = w
                    elif label[bw] == _S:
                        if bev[bv] == -1 or kslack < slack(bev[bv], bew[bv]):
                            bev[bv] = v
                            bew[bv] = w
                    elif label[w] == _NOLABEL:
                        if bev[w] == -1 or kslack < slack(bev[w], bew[w]):
                            bev[w] = v
                            bew[w] = w
            if augmented:
                break
            # choose the dual step as the minimum over the applicable cases
            deltatype = -1
            delta = 0.0
            de_v = -1
            de_w = -1
            dblossom = -1
            for v in range(nv):
                if label[inblossom[v]] == _NOLABEL and bev[v] != -1:
                    d = slack(bev[v], bew[v])
                    if deltatype == -1 or d < delta:
                        delta = d
                        deltatype = 2
                        de_v = bev[v]
                        de_w = bew[v]
            for bslot in range(cap):
                if (
                    parent[bslot] == -1
                    and (bslot < nv or base[bslot] >= 0)
                    and label[bslot] == _S
                    and bev[bslot] != -1
                ):
                    d = slack(bev[bslot], bew[bslot]) / 2.0
                    if deltatype == -1 or d < delta:
                        delta = d
                        deltatype = 3
                        de_v = bev[bslot]
                        de_w = bew[bslot]
            for bslot in range(nv, cap):
                if base[bslot] >= 0 and parent[bslot] == -1 and label[bslot] == _T:
                    if deltatype == -1 or bdual[bslot] < delta:
                        delta = bdual[bslot]
                        deltatype = 4
                        dblossom = bslot
            if deltatype == -1:
                # no further improvement possible: optimum at max cardinality
                deltatype = 1
                mind = dual[0]
                for v in range(1, nv):
                    if dual[v] < mind:
                        mind = dual[v]
                delta = mind if mind > 0.0 else 0.0
            for v in range(nv):
                lb = label[inblossom[v]]
                if lb == _S:
                    dual[v] -= delta
                elif lb == _T:
                    dual[v] += delta
            for bslot in range(nv, cap):
                if base[bslot] >= 0 and parent[bslot] == -1:
                    if label[bslot] == _S:
                        bdual[bslot] += delta
                    elif label[bslot] == _T:
                        bdual[bslot] -= delta
            if deltatype == 1:
                break
            elif deltatype == 2:
                allowed[de_v, de_w] = True
                allowed[de_w, de_v] = True
                queue_push(de_v)
            elif deltatype == 3:
                allowed[de_v, de_w] = True
                allowed[de_w, de_v] = True
                queue_push(de_v)
            else:
                expand_blossom(dblossom, False)
        if not augmented:
            break
        for bslot in range(nv, cap):
            if (
                base[bslot] >= 0
                and parent[bslot] == -1
                and label[bslot] == _S
                and bdual[bslot] == 0.0
            ):
                expand_blossom(bslot, True)
    return mate


_kernel_jit = None
if os.environ.get("XYZPLANAR_NO_JIT", "") != "1":
    try:
        import numba

        _kernel_jit = numba.njit(cache=True)(_mwm_kernel)
    except ImportError:  # pragma: no cover - numba is a hard dep, belt and braces
        _kernel_jit = None


def _as_weight_matrix(W) -> np.ndarray:
    W = np.ascontiguousarray(np.asarray(W, dtype=np.float64))
    if W.ndim != 2 or W.shape[0] != W.shape[1]:
        raise DimensionError("weight matrix must be square")
    if W.size and not np.allclose(W, W.T, rtol=0.0, atol=1e-9):
        raise DimensionError("weight matrix must be symmetric")
    if W.size and not np.isfinite(W[~np.eye(W.shape[0], dtype=bool)]).all():
        raise DimensionError("weights must be finite")
    return W


def max_weight_matching(W) -> np.ndarray:
    """Maximum-cardinality matching of maximum total weight.

    ``W`` is a symmetric matrix of edge weights on the complete graph
    (the diagonal is ignored).  Returns ``mate`` with mate[v] the partner
    of v; on a complete graph with an even vertex count the matching is
    perfect.
    """
    W = _as_weight_matrix(W)
    kernel = _kernel_jit if _kernel_jit is not None else _mwm_kernel
    return kernel(W)


def min_weight_perfect_matching(W) -> list[tuple[int, int]]:
    """Perfect matching minimizing total weight on a complete even graph."""
    W = _as_weight_matrix(W)
    n = W.shape[0]
    if n % 2 != 0:
        raise StructureError(f"perfect matching needs an even vertex count, got {n}")
    mate = max_weight_matching(-W)
    if n and (mate < 0).any():
        raise StructureError("matching is not perfect")
    return [(v, int(mate[v])) for v in range(n) if v < mate[v]]
