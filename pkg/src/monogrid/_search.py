"""Backtracking search for a good spanning tree on a fixed rotation system.

Vertices are ``0..n-1``.  The tree is grown depth first: when a vertex ``c``
is processed, its neighbours clockwise from the parent are split into an
already placed block (which becomes its X set), a run of new children, and
the remaining vertices (which become its Z set and must be adopted later by
someone else).  The only free choice is the length of the run of children;
everything else is propagation that rejects doomed partial trees early.

This module is private; see ``monogrid._reembed`` for the caller.
"""

from __future__ import annotations


class Budget(Exception):
    """The step budget of a search ran out."""


def search(rot, root, s, choose=None, budget=None, prehook=None, rng=None, flex=(), pairs=()):
    """Return ``(parent, rotation)`` of a good tree rooted at ``root`` or ``None``.

    ``choose(c, p, lblock, rest, jmax)`` lists the allowed run lengths in
    preference order (default: only the longest).  ``prehook(c, placed, rot)``
    may offer alternative local rotations when ``c`` is placed; the rotations
    of vertices in ``flex`` may still change, so they are not propagated.
    ``pairs`` holds ``(a, b, ok)`` for floating leaves beside edge ``ab``
    that are re-inserted afterwards; ``ok`` names the allowed (pole, side).
    Raises :class:`Budget` after ``budget`` steps.
    """
    n = len(rot)
    rot = list(rot)
    pos = [{w: i for i, w in enumerate(r)} for r in rot]
    placed = [False] * n
    parent = [-1] * n
    reserved = [-1] * n
    kidx = [0] * n
    blockers = [0] * n
    blow = [-1] * n  # depth of the lowest blocking frame
    onstack = [False] * n
    depth = [-1] * n
    trail = []

    def setv(arr, i, val):
        trail.append((arr, i, arr[i]))
        arr[i] = val

    fv, fk, fi, fb = [], [], [], []
    sp = [0]
    cnt = [1]
    pend = [False]  # a placed vertex whose frame is not pushed yet

    def push(v, kids, blk):
        k = sp[0]
        if k == len(fv):
            fv.append(None)
            fk.append(None)
            fi.append(0)
            fb.append(None)
        setv(fv, k, v); setv(fk, k, kids); setv(fi, k, 0); setv(fb, k, blk)
        setv(depth, v, k)
        setv(sp, 0, k + 1)
        setv(pend, 0, False)

    def placeable_before(u, q):
        """Can unplaced u still be placed before reserved q is processed?"""
        c = reserved[q]
        dq = depth[c]
        x = reserved[u]
        if x >= 0:
            if x == c:
                return kidx[u] < kidx[q]
            return depth[x] > dq
        if blockers[u] > 0:
            return blow[u] > dq
        # free: only a vertex processed before q can adopt it
        return True

    flexset = set(flex)
    # pairs {a, b}: a floating leaf beside edge ab must fit in afterwards
    fp = {}
    for a, b, ok in pairs:
        fp.setdefault(a, []).append((b, ok))
        fp.setdefault(b, []).append((a, ok))
    need = {}
    for a, b, ok in pairs:
        need[(a, b)] = False
        need[(b, a)] = False

    def check_q(q):
        if q in flexset:
            return True
        c = reserved[q]
        rq = rot[q]
        d = len(rq)
        i = pos[q][c]
        dc = depth[c]
        imminent = not pend[0] and sp[0] - 1 == dc and fi[dc] == kidx[q]
        bad = False
        for t in range(1, d):
            w = rq[(i - t) % d]
            if placed[w]:
                if bad or (onstack[w] and w != c and depth[w] <= dc):
                    return False
            elif not bad and (imminent or not placeable_before(w, q)):
                bad = True
        return True

    def check_nbrs(v):
        for q in rot[v]:
            if reserved[q] >= 0 and not placed[q] and not check_q(q):
                return False
        return True

    placed[root] = True
    onstack[root] = True
    parent[root] = None
    rr = rot[root]
    i0 = pos[root][s]
    ch = [rr[(i0 + k) % len(rr)] for k in range(len(rr))]
    for k, c in enumerate(ch[::-1]):
        reserved[c] = root
        kidx[c] = k
    push(root, ch[::-1], [])
    trail.clear()
    for c in ch:
        if not check_q(c):
            return None
    decisions = []
    steps = 0

    def apply_rot(upd):
        for v, l in upd:
            setv(rot, v, l)
            setv(pos, v, {w: i for i, w in enumerate(l)})

    def process(c, v):
        if not check_nbrs(c):
            return False
        r = rot[c]
        d = len(r)
        i = pos[c][v]
        cw = [r[(i - t) % d] for t in range(1, d)]
        t = 0
        while t < len(cw) and placed[cw[t]]:
            if onstack[cw[t]]:
                return False
            t += 1
        rest = cw[t:]
        for w in rest:
            if placed[w]:
                return False
        if c in fp:
            for d, _ in fp[c]:
                if need[(d, c)] and (t == 0 or cw[t - 1] != d):
                    return False
        jmax = 0
        while jmax < len(rest) and reserved[rest[jmax]] < 0 and blockers[rest[jmax]] == 0:
            q = rest[jmax]
            if any(onstack[w] and w != c for w in rot[q]):
                break
            jmax += 1
        jmin = 0
        for k in range(len(rest) - 1, -1, -1):
            q = rest[k]
            if reserved[q] < 0 and all(placed[w] for w in rot[q]):
                jmin = k + 1
                break
        if jmin > jmax:
            return False
        if choose is None:
            cands = [jmax]
        else:
            cands = [j for j in choose(c, v, cw[:t], rest, jmax) if j >= jmin]
        if not cands:
            return False
        if rng is not None and len(cands) > 1:
            rng.shuffle(cands)
        decisions.append(['run', len(trail), c, (v, rest), cands, 0])
        if apply(c, rest, cands[0]):
            return True
        return 'retry'

    def apply(c, rest, j):
        k = sp[0]
        for t, q in enumerate(rest[:j]):
            setv(reserved, q, c)
            setv(kidx, q, t)
        for q in rest[j:]:
            if blockers[q] == 0:
                setv(blow, q, k)
            setv(blockers, q, blockers[q] + 1)
        push(c, rest[:j], rest[j:])
        if c in fp:
            for d, ok in fp[c]:
                if not placed[d]:
                    k = rest.index(d)
                    if k < j:
                        if (c, 'L') not in ok and (c, 'E') not in ok:
                            return False
                    elif k > j or (c, 'L') not in ok:
                        if (d, 'E') not in ok:
                            return False
                        setv(need, (c, d), True)
        for q in rest[:j]:
            if not check_q(q):
                return False
        for q in rest[j:]:
            if not check_nbrs(q):
                return False
        return True

    def backtrack():
        """Undo to the next untried alternative; ``False`` when none is left."""
        nonlocal steps
        while decisions:
            d = decisions[-1]
            tl = d[1]
            while len(trail) > tl:
                arr, i, old = trail.pop()
                arr[i] = old
            steps += 1
            if budget is not None and steps > budget:
                raise Budget
            if d[0] == 'run':
                d[5] += 1
                if d[5] < len(d[4]):
                    if apply(d[2], d[3][1], d[4][d[5]]):
                        return True
                    continue
                decisions.pop()
            else:
                d[4] += 1
                if d[4] < len(d[3]):
                    apply_rot(d[3][d[4]])
                    c = d[2]
                    res = process(c, parent[c])
                    if res is True:
                        return True
                    continue
                decisions.pop()
        return False

    while True:
        steps += 1
        if budget is not None and steps > budget:
            raise Budget
        ok = True
        while sp[0] > 0 and fi[sp[0] - 1] >= len(fk[sp[0] - 1]):
            k = sp[0] - 1
            setv(onstack, fv[k], False)
            for q in fb[k]:
                setv(blockers, q, blockers[q] - 1)
                if blockers[q] == 0:
                    setv(blow, q, -1)
            setv(sp, 0, k)
            # unblocked vertices may now be placeable
        if sp[0] == 0:
            if cnt[0] == n:
                return parent, rot
            ok = False
        else:
            k = sp[0] - 1
            v = fv[k]
            c = fk[k][fi[k]]
            setv(fi, k, fi[k] + 1)
            setv(placed, c, True)
            setv(parent, c, v)
            setv(onstack, c, True)
            setv(cnt, 0, cnt[0] + 1)
            setv(reserved, c, -1)
            setv(depth, c, sp[0])
            setv(pend, 0, True)
            if prehook is not None:
                alts = prehook(c, placed, rot)
                if alts:
                    if rng is not None:
                        alts = list(alts)
                        rng.shuffle(alts)
                    decisions.append(['rot', len(trail), c, alts, 0])
                    apply_rot(alts[0])
            ok = process(c, v) is True
        if ok:
            continue
        if not backtrack():
            return None


def all_lengths(c, p, lblock, rest, jmax):
    return range(jmax, -1, -1)
