"""Hot loops of the enumeration and verification engine.

Every kernel exists twice: ``*_nb`` (numba, scalar loops with early exit) and
``*_np`` (vectorised numpy over a batch).  The public names dispatch to one of
them according to :mod:`resbinar._accel`.  Both variants must return identical
arrays; the test-suite checks this.

Conventions: element tables are ``uint8``; a batch of multiplication tables
has shape ``(B, n, n)``; ``ldiv[b, x, z]`` is ``x\\z`` and ``rdiv[b, z, y]``
is ``z/y``.
"""

from __future__ import annotations

import numpy as np

from ._accel import NUMBA_AVAILABLE, njit

# property ids: 0..14 follow laws.ALL_LAWS, then structural properties
P_ASSOC, P_COMM, P_UNITAL, P_INTEGRAL = 15, 16, 17, 18
N_PROPS = 19
LP, RP, ED = 12, 13, 14


# ---------------------------------------------------------------------------
# constrained cell enumeration
#
# Cells are assigned in order.  Cell k takes a value v in 0..n-1 such that
#   leq[val[c], v]                 for c in lb_idx[lb_ptr[k]:lb_ptr[k+1]]
#   v == join[val[a], val[b]]      for (a, b) in pairs[pr_ptr[k]:pr_ptr[k+1]]
# The first len(prefix) cells are pinned to the prefix values.
# ---------------------------------------------------------------------------


@njit
def _enter(k, vals, join, bot, lb_ptr, lb_idx, pr_ptr, pr_a, pr_b, lo, forced):
    # lo[k]: join of the lower bounds; forced[k]: value fixed by a join pair, or -1
    acc = bot
    for i in range(lb_ptr[k], lb_ptr[k + 1]):
        acc = join[acc, vals[lb_idx[i]]]
    lo[k] = acc
    f = -1
    for i in range(pr_ptr[k], pr_ptr[k + 1]):
        w = join[vals[pr_a[i]], vals[pr_b[i]]]
        if f == -1:
            f = w
        elif f != w:
            f = -2
            break
    forced[k] = f


@njit
def enumerate_cells_nb(n, leq, join, lb_ptr, lb_idx, pr_ptr, pr_a, pr_b, prefix, cap):
    ncells = lb_ptr.shape[0] - 1
    out = np.zeros((cap, ncells), dtype=np.uint8)
    vals = np.zeros(ncells, dtype=np.int64)
    nxt = np.zeros(ncells + 1, dtype=np.int64)
    lo = np.zeros(ncells + 1, dtype=np.int64)
    forced = np.zeros(ncells + 1, dtype=np.int64)
    plen = prefix.shape[0]
    bot = 0
    for x in range(n):
        ok = True
        for y in range(n):
            if not leq[x, y]:
                ok = False
                break
        if ok:
            bot = x
    count = 0
    if ncells == 0:
        if cap < 1:
            return out, -1
        return out, 1
    k = 0
    nxt[0] = prefix[0] if plen > 0 else 0
    _enter(0, vals, join, bot, lb_ptr, lb_idx, pr_ptr, pr_a, pr_b, lo, forced)
    while k >= 0:
        if k == ncells:
            if count >= cap:
                return out, -1
            for c in range(ncells):
                out[count, c] = vals[c]
            count += 1
            k -= 1
            continue
        hi = n - 1
        if k < plen:
            hi = prefix[k]
        v = nxt[k]
        found = False
        f = forced[k]
        if f == -2:
            v = hi + 1
        elif f >= 0:
            if v <= f and f <= hi and leq[lo[k], f]:
                v = f
                found = True
        else:
            while v <= hi:
                if leq[lo[k], v]:
                    found = True
                    break
                v += 1
        if not found:
            k -= 1
            continue
        vals[k] = v
        nxt[k] = v + 1
        k += 1
        if k < ncells:
            nxt[k] = prefix[k] if k < plen else 0
            _enter(k, vals, join, bot, lb_ptr, lb_idx, pr_ptr, pr_a, pr_b, lo, forced)
    return out, count


def enumerate_cells_np(n, leq, join, lb_ptr, lb_idx, pr_ptr, pr_a, pr_b, prefix, cap):
    ncells = lb_ptr.shape[0] - 1
    rows = np.zeros((1, 0), dtype=np.uint8)
    for k in range(ncells):
        if k < len(prefix):
            cand = np.array([prefix[k]], dtype=np.uint8)
        else:
            cand = np.arange(n, dtype=np.uint8)
        m = len(cand)
        grown = np.repeat(rows, m, axis=0)
        v = np.tile(cand, len(rows))
        ok = np.ones(len(v), dtype=bool)
        for i in range(lb_ptr[k], lb_ptr[k + 1]):
            ok &= leq[grown[:, lb_idx[i]], v]
        for i in range(pr_ptr[k], pr_ptr[k + 1]):
            ok &= join[grown[:, pr_a[i]], grown[:, pr_b[i]]] == v
        rows = np.concatenate([grown[ok], v[ok, None]], axis=1)
        if len(rows) > cap:
            return np.zeros((0, ncells), dtype=np.uint8), -1
        if len(rows) == 0:
            break
    if len(rows) > cap:
        return np.zeros((0, ncells), dtype=np.uint8), -1
    return rows, len(rows)


# ---------------------------------------------------------------------------
# cell values -> full multiplication tables
#   table[x, y] = join of vals[c] for c in ext_idx[ext_ptr[x*n+y]:ext_ptr[x*n+y+1]]
# ---------------------------------------------------------------------------


@njit
def extend_tables_nb(vals, ext_ptr, ext_idx, join, n, bot):
    B = vals.shape[0]
    out = np.empty((B, n, n), dtype=np.uint8)
    for b in range(B):
        for x in range(n):
            for y in range(n):
                acc = bot
                for i in range(ext_ptr[x * n + y], ext_ptr[x * n + y + 1]):
                    acc = join[acc, vals[b, ext_idx[i]]]
                out[b, x, y] = acc
    return out


def extend_tables_np(vals, ext_ptr, ext_idx, join, n, bot):
    B = vals.shape[0]
    out = np.full((B, n, n), bot, dtype=np.uint8)
    for x in range(n):
        for y in range(n):
            acc = np.full(B, bot, dtype=np.uint8)
            for i in range(ext_ptr[x * n + y], ext_ptr[x * n + y + 1]):
                acc = join[acc, vals[:, ext_idx[i]]]
            out[:, x, y] = acc
    return out


# ---------------------------------------------------------------------------
# orbit representatives under a group of lattice automorphisms
# A table is kept iff no relabelling p[t[q[i], q[j]]] (q = p^-1) is smaller in
# row-major lexicographic order.
# ---------------------------------------------------------------------------


@njit
def orbit_min_mask_nb(tables, perms, invs):
    B, n = tables.shape[0], tables.shape[1]
    K = perms.shape[0]
    keep = np.ones(B, dtype=np.bool_)
    for b in range(B):
        for k in range(K):
            decided = False
            for i in range(n):
                for j in range(n):
                    v = perms[k, tables[b, invs[k, i], invs[k, j]]]
                    w = tables[b, i, j]
                    if v != w:
                        if v < w:
                            keep[b] = False
                        decided = True
                        break
                if decided:
                    break
            if not keep[b]:
                break
    return keep


def orbit_min_mask_np(tables, perms, invs):
    B, n = tables.shape[0], tables.shape[1]
    keep = np.ones(B, dtype=bool)
    flat = tables.reshape(B, n * n)
    for p, q in zip(perms, invs):
        relab = p[tables[:, q[:, None], q[None, :]]].reshape(B, n * n)
        diff = relab != flat
        anydiff = diff.any(axis=1)
        first = np.argmax(diff, axis=1)
        rows = np.arange(B)
        smaller = anydiff & (relab[rows, first] < flat[rows, first])
        keep &= ~smaller
    return keep


# ---------------------------------------------------------------------------
# residuals
# ---------------------------------------------------------------------------


@njit
def residuals_nb(leq, join, bot, tables):
    B, n = tables.shape[0], tables.shape[1]
    ldiv = np.empty((B, n, n), dtype=np.uint8)
    rdiv = np.empty((B, n, n), dtype=np.uint8)
    ok = np.ones(B, dtype=np.bool_)
    for b in range(B):
        for x in range(n):
            for z in range(n):
                acc = bot
                acc2 = bot
                for y in range(n):
                    if leq[tables[b, x, y], z]:
                        acc = join[acc, y]
                    if leq[tables[b, y, x], z]:
                        acc2 = join[acc2, y]
                ldiv[b, x, z] = acc
                rdiv[b, z, x] = acc2
        # x*y <= z  iff  y <= x\z  iff  x <= z/y
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    below = leq[tables[b, x, y], z]
                    if below != leq[y, ldiv[b, x, z]] or below != leq[x, rdiv[b, z, y]]:
                        ok[b] = False
    return ldiv, rdiv, ok


def residuals_np(leq, join, bot, tables):
    B, n = tables.shape[0], tables.shape[1]
    below = leq[tables]  # (B, x, y, z): x*y <= z
    ldiv = np.full((B, n, n), bot, dtype=np.uint8)
    rdiv = np.full((B, n, n), bot, dtype=np.uint8)
    for y in range(n):
        ldiv = np.where(below[:, :, y, :], join[ldiv, y], ldiv)
        # rdiv[z, x] collects y with y*x <= z
        rdiv = np.where(below[:, y, :, :].transpose(0, 2, 1), join[rdiv, y], rdiv)
    # x*y <= z  iff  y <= x\z  iff  x <= z/y
    ok = (below == leq[np.arange(n)[None, None, :, None], ldiv[:, :, None, :]]).all(axis=(1, 2, 3))
    ok &= (below == leq[np.arange(n)[None, :, None, None], rdiv.transpose(0, 2, 1)[:, None]]).all(axis=(1, 2, 3))
    return ldiv, rdiv, ok


# ---------------------------------------------------------------------------
# property analysis
# ---------------------------------------------------------------------------


@njit
def _law_nb(pid, n, leq, M, J, m, ld, rd, e):
    # pid follows laws.ALL_LAWS
    if pid == LP or pid == RP:
        if e < 0:
            return False
        for x in range(n):
            for y in range(n):
                if pid == LP:
                    v = J[ld[x, y], ld[y, x]]
                else:
                    v = J[rd[x, y], rd[y, x]]
                if not leq[e, v]:
                    return False
        return True
    if pid == ED:
        if e < 0:
            return False
        for x in range(n):
            for y in range(n):
                if M[J[x, y], e] != J[M[x, e], M[y, e]]:
                    return False
        return True
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if pid == 0:
                    ok = m[x, J[y, z]] == J[m[x, y], m[x, z]]
                elif pid == 1:
                    ok = m[J[x, y], z] == J[m[x, z], m[y, z]]
                elif pid == 2:
                    ok = ld[x, M[y, z]] == M[ld[x, y], ld[x, z]]
                elif pid == 3:
                    ok = rd[M[x, y], z] == M[rd[x, z], rd[y, z]]
                elif pid == 4:
                    ok = rd[x, J[y, z]] == M[rd[x, y], rd[x, z]]
                elif pid == 5:
                    ok = ld[J[x, y], z] == M[ld[x, z], ld[y, z]]
                elif pid == 6:
                    ok = m[x, M[y, z]] == M[m[x, y], m[x, z]]
                elif pid == 7:
                    ok = m[M[x, y], z] == M[m[x, z], m[y, z]]
                elif pid == 8:
                    ok = ld[x, J[y, z]] == J[ld[x, y], ld[x, z]]
                elif pid == 9:
                    ok = rd[J[x, y], z] == J[rd[x, z], rd[y, z]]
                elif pid == 10:
                    ok = ld[M[x, y], z] == J[ld[x, z], ld[y, z]]
                elif pid == 11:
                    ok = rd[x, M[y, z]] == J[rd[x, y], rd[x, z]]
                else:
                    ok = m[m[x, y], z] == m[x, m[y, z]]
                if not ok:
                    return False
    return True


@njit
def _unit_nb(n, m):
    for e in range(n):
        good = True
        for x in range(n):
            if m[e, x] != x or m[x, e] != x:
                good = False
                break
        if good:
            return e
    return -1


@njit
def analyze_nb(leq, meet, join, top, tables, ldiv, rdiv, order, must_hold, must_fail):
    B, n = tables.shape[0], tables.shape[1]
    bits = np.zeros(B, dtype=np.uint32)
    units = np.full(B, -1, dtype=np.int8)
    accepted = np.ones(B, dtype=np.bool_)
    for b in range(B):
        m = tables[b]
        e = _unit_nb(n, m)
        units[b] = e
        word = np.uint32(0)
        for k in range(order.shape[0]):
            pid = order[k]
            if pid == P_UNITAL:
                val = e >= 0
            elif pid == P_INTEGRAL:
                val = e == top
            elif pid == P_COMM:
                val = True
                for x in range(n):
                    for y in range(x + 1, n):
                        if m[x, y] != m[y, x]:
                            val = False
                            break
                    if not val:
                        break
            elif pid == P_ASSOC:
                val = _law_nb(P_ASSOC, n, leq, meet, join, m, ldiv[b], rdiv[b], e)
            else:
                val = _law_nb(pid, n, leq, meet, join, m, ldiv[b], rdiv[b], e)
            flag = np.uint32(1) << np.uint32(pid)
            if val:
                word |= flag
                if must_fail & flag:
                    accepted[b] = False
                    break
            elif must_hold & flag:
                accepted[b] = False
                break
        bits[b] = word if accepted[b] else np.uint32(0)
    return bits, units, accepted


def _units_np(tables):
    B, n = tables.shape[0], tables.shape[1]
    ident = np.arange(n)
    rows_ok = (tables == ident[None, None, :]).all(axis=2)  # m[e, :] == id
    cols_ok = (tables == ident[None, :, None]).all(axis=1)  # m[:, e] == id
    good = rows_ok & cols_ok
    return np.where(good.any(axis=1), np.argmax(good, axis=1), -1).astype(np.int8)


def _law_np(pid, leq, M, J, top, tables, ld, rd, units):
    B, n = tables.shape[0], tables.shape[1]
    b = np.arange(B)[:, None, None, None]
    x = np.arange(n)[None, :, None, None]
    y = np.arange(n)[None, None, :, None]
    z = np.arange(n)[None, None, None, :]
    m = tables
    if pid in (LP, RP, ED):
        e = units.astype(np.int64)
        has = e >= 0
        ee = np.where(has, e, 0)[:, None, None]
        b2 = np.arange(B)[:, None, None]
        x2 = np.arange(n)[None, :, None]
        y2 = np.arange(n)[None, None, :]
        if pid == LP:
            v = J[ld[b2, x2, y2], ld[b2, y2, x2]]
            ok = leq[ee, v]
        elif pid == RP:
            v = J[rd[b2, x2, y2], rd[b2, y2, x2]]
            ok = leq[ee, v]
        else:
            ok = M[J[x2, y2], ee] == J[M[x2, ee], M[y2, ee]]
        return has & ok.reshape(B, -1).all(axis=1)
    if pid == 0:
        ok = m[b, x, J[y, z]] == J[m[b, x, y], m[b, x, z]]
    elif pid == 1:
        ok = m[b, J[x, y], z] == J[m[b, x, z], m[b, y, z]]
    elif pid == 2:
        ok = ld[b, x, M[y, z]] == M[ld[b, x, y], ld[b, x, z]]
    elif pid == 3:
        ok = rd[b, M[x, y], z] == M[rd[b, x, z], rd[b, y, z]]
    elif pid == 4:
        ok = rd[b, x, J[y, z]] == M[rd[b, x, y], rd[b, x, z]]
    elif pid == 5:
        ok = ld[b, J[x, y], z] == M[ld[b, x, z], ld[b, y, z]]
    elif pid == 6:
        ok = m[b, x, M[y, z]] == M[m[b, x, y], m[b, x, z]]
    elif pid == 7:
        ok = m[b, M[x, y], z] == M[m[b, x, z], m[b, y, z]]
    elif pid == 8:
        ok = ld[b, x, J[y, z]] == J[ld[b, x, y], ld[b, x, z]]
    elif pid == 9:
        ok = rd[b, J[x, y], z] == J[rd[b, x, z], rd[b, y, z]]
    elif pid == 10:
        ok = ld[b, M[x, y], z] == J[ld[b, x, z], ld[b, y, z]]
    elif pid == 11:
        ok = rd[b, x, M[y, z]] == J[rd[b, x, y], rd[b, x, z]]
    elif pid == P_ASSOC:
        ok = m[b, m[b, x, y], z] == m[b, x, m[b, y, z]]
    elif pid == P_COMM:
        return (tables == tables.transpose(0, 2, 1)).reshape(B, -1).all(axis=1)
    elif pid == P_UNITAL:
        return units >= 0
    elif pid == P_INTEGRAL:
        return units == top
    else:  # pragma: no cover
        raise ValueError(pid)
    return ok.reshape(B, -1).all(axis=1)


def analyze_np(leq, meet, join, top, tables, ldiv, rdiv, order, must_hold, must_fail,
               chunk=4096):
    B = tables.shape[0]
    units = _units_np(tables)
    bits = np.zeros(B, dtype=np.uint32)
    accepted = np.ones(B, dtype=bool)
    for s in range(0, B, chunk):
        sl = slice(s, s + chunk)
        live = np.ones(len(units[sl]), dtype=bool)
        word = np.zeros(len(live), dtype=np.uint32)
        for pid in order:
            idx = np.flatnonzero(live)
            if len(idx) == 0:
                break
            t = tables[sl][idx]
            val = _law_np(int(pid), leq, meet, join, top, t, ldiv[sl][idx], rdiv[sl][idx],
                          units[sl][idx])
            flag = np.uint32(1 << int(pid))
            word[idx[val]] |= flag
            if must_fail & int(flag):
                live[idx[val]] = False
            if must_hold & int(flag):
                live[idx[~val]] = False
        accepted[sl] = live
        bits[sl] = np.where(live, word, 0)
    return bits, units, accepted


# ---------------------------------------------------------------------------
# frames of distributive reducts
#   variant 0 literal: R(F,G,H) iff F is a subset of G.H
#   variant 1 upset:   R(F,G,H) iff F is a subset of the up-closure of G.H
#   variant 2 contains: R(F,G,H) iff G.H is a subset of F
# ``order[i, j]`` is the frame order between points i and j.
# Output bits: 1 = jr, 2 = ml, 4 = lj conditions hold.
# ---------------------------------------------------------------------------

V_LITERAL, V_UPSET, V_CONTAINS = 0, 1, 2


@njit
def relation_nb(points, upmask, table, variant):
    P, n = points.shape[0], table.shape[0]
    R = np.zeros((P, P, P), dtype=np.bool_)
    for g in range(P):
        for h in range(P):
            prod = np.uint64(0)
            for x in range(n):
                if (points[g] >> np.uint64(x)) & np.uint64(1):
                    for y in range(n):
                        if (points[h] >> np.uint64(y)) & np.uint64(1):
                            prod |= np.uint64(1) << np.uint64(table[x, y])
            if variant == V_UPSET:
                up = np.uint64(0)
                for s in range(n):
                    if (prod >> np.uint64(s)) & np.uint64(1):
                        up |= upmask[s]
                prod = up
            for f in range(P):
                if variant == V_CONTAINS:
                    R[f, g, h] = (prod & ~points[f]) == 0
                else:
                    R[f, g, h] = (points[f] & ~prod) == 0
    return R


@njit
def _conditions_nb(R, le):
    P = R.shape[0]
    out = 0
    for which in range(3):
        holds = True
        for x in range(P):
            for y in range(P):
                for p in range(P):
                    for q in range(P):
                        for j in range(P):
                            if which == 0:
                                pre = R[x, j, p] and R[y, j, q]
                            elif which == 1:
                                pre = R[p, x, j] and R[q, y, j]
                            else:
                                pre = R[x, p, j] and R[y, q, j]
                            if not pre:
                                continue
                            found = False
                            for z in range(P):
                                if which == 0:
                                    found = le[x, z] and le[y, z] and (R[z, j, p] or R[z, j, q])
                                elif which == 1:
                                    found = le[z, x] and le[z, y] and (R[p, z, j] or R[q, z, j])
                                else:
                                    found = le[x, z] and le[y, z] and (R[z, p, j] or R[z, q, j])
                                if found:
                                    break
                            if not found:
                                holds = False
                                break
                        if not holds:
                            break
                    if not holds:
                        break
                if not holds:
                    break
            if not holds:
                break
        if holds:
            out |= 1 << which
    return out


@njit
def _monotone_nb(R, le):
    P = R.shape[0]
    for f in range(P):
        for g in range(P):
            for h in range(P):
                if not R[f, g, h]:
                    continue
                for f2 in range(P):
                    if not le[f2, f]:
                        continue
                    for g2 in range(P):
                        if not le[g, g2]:
                            continue
                        for h2 in range(P):
                            if le[h, h2] and not R[f2, g2, h2]:
                                return False
    return True


@njit
def frame_conditions_nb(points, upmask, le, tables, variant):
    B = tables.shape[0]
    conds = np.zeros(B, dtype=np.uint8)
    mono = np.ones(B, dtype=np.bool_)
    for b in range(B):
        R = relation_nb(points, upmask, tables[b], variant)
        mono[b] = _monotone_nb(R, le)
        conds[b] = _conditions_nb(R, le)
    return conds, mono


def relation_np(points, upmask, tables, variant):
    B, n = tables.shape[0], tables.shape[1]
    P = len(points)
    member = ((points[:, None] >> np.arange(n, dtype=np.uint64)[None, :]) & np.uint64(1)).astype(bool)
    bit = (np.uint64(1) << tables.astype(np.uint64))  # (B, n, n)
    prod = np.zeros((B, P, P), dtype=np.uint64)
    for g in range(P):
        for h in range(P):
            sel = member[g][:, None] & member[h][None, :]
            prod[:, g, h] = np.bitwise_or.reduce(np.where(sel[None], bit, np.uint64(0)).reshape(B, -1), axis=1)
    if variant == V_UPSET:
        up = np.zeros_like(prod)
        for s in range(n):
            has = (prod >> np.uint64(s)) & np.uint64(1)
            up |= np.where(has.astype(bool), upmask[s], np.uint64(0))
        prod = up
    pts = points[None, :, None, None]
    if variant == V_CONTAINS:
        return (prod[:, None, :, :] & ~pts) == 0
    return (pts & ~prod[:, None, :, :]) == 0


def frame_conditions_np(points, upmask, le, tables, variant, chunk=None):
    B = tables.shape[0]
    conds = np.zeros(B, dtype=np.uint8)
    mono = np.ones(B, dtype=bool)
    P = len(points)
    if P == 0:
        conds[:] = 7
        return conds, mono
    I = np.arange(P)
    if chunk is None:
        chunk = max(1, (1 << 22) // P ** 6)
    for s in range(0, B, chunk):
        R = relation_np(points, upmask, tables[s:s + chunk], variant)
        nb = R.shape[0]
        # axes: b, x, y, p, q, j, z
        x = I[:, None, None, None, None, None]
        y = I[None, :, None, None, None, None]
        p = I[None, None, :, None, None, None]
        q = I[None, None, None, :, None, None]
        j = I[None, None, None, None, :, None]
        z = I[None, None, None, None, None, :]
        out = np.zeros(nb, dtype=np.uint8)
        specs = (
            (R[:, x, j, p] & R[:, y, j, q], le[x, z] & le[y, z], R[:, z, j, p] | R[:, z, j, q]),
            (R[:, p, x, j] & R[:, q, y, j], le[z, x] & le[z, y], R[:, p, z, j] | R[:, q, z, j]),
            (R[:, x, p, j] & R[:, y, q, j], le[x, z] & le[y, z], R[:, z, p, j] | R[:, z, q, j]),
        )
        for which, (pre, lez, post) in enumerate(specs):
            exists = (lez[None] & post).any(axis=-1)
            bad = pre[..., 0] & ~exists
            holds = ~bad.reshape(nb, -1).any(axis=1)
            out |= np.where(holds, np.uint8(1 << which), np.uint8(0))
        conds[s:s + nb] = out
        f, g, h = I[:, None, None], I[None, :, None], I[None, None, :]
        # R(f,g,h) & f2<=f & g<=g2 & h<=h2  =>  R(f2,g2,h2)
        r6 = R[:, f, g, h][..., None, None, None]
        lef = le[I[None, None, None, :, None, None], I[:, None, None, None, None, None]]
        leg = le[I[None, :, None, None, None, None], I[None, None, None, None, :, None]]
        leh = le[I[None, None, :, None, None, None], I[None, None, None, None, None, :]]
        r2 = R[:, I[:, None, None], I[None, :, None], I[None, None, :]][:, None, None, None]
        viol = r6 & lef[None] & leg[None] & leh[None] & ~r2
        mono[s:s + nb] = ~viol.reshape(nb, -1).any(axis=1)
    return conds, mono


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

if NUMBA_AVAILABLE:
    enumerate_cells = enumerate_cells_nb
    extend_tables = extend_tables_nb
    orbit_min_mask = orbit_min_mask_nb
    residuals = residuals_nb
    analyze = analyze_nb
    frame_conditions = frame_conditions_nb
else:
    enumerate_cells = enumerate_cells_np
    extend_tables = extend_tables_np
    orbit_min_mask = orbit_min_mask_np
    residuals = residuals_np
    analyze = analyze_np
    frame_conditions = frame_conditions_np
