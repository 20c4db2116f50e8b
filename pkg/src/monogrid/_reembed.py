"""Good spanning trees by re-embedding: block gluing plus a recursive solver.

A good spanning tree of a connected graph is glued from good trees of its
blocks, each rooted at the cut vertex nearest the global root.  For a single
2-connected block the embedding is searched recursively: maximal pieces
hanging off a separation pair are contracted to *gadget* vertices of degree
two, the skeleton is searched exactly with all reorderings of parallel
bundles allowed, and each gadget is expanded afterwards in the role (side of
the tree it ended up in) imposed by the skeleton.  Roles that cannot be
expanded are forbidden and the skeleton search is repeated.

All vertex ids are ints; gadget and helper vertices get fresh ids above the
original range, so iteration orders never depend on string hashing.
"""

from __future__ import annotations

import itertools

from ._search import Budget, search

__all__ = ["Budget", "block_good_tree", "greedy_good_tree", "glue_blocks", "biconnected_blocks"]


def mirror(rot: dict) -> dict:
    return {v: l[::-1] for v, l in rot.items()}


# connectivity helpers ----------------------------------------------------


def _art_points(rot: dict, removed) -> set:
    """Articulation points of ``rot`` minus ``removed`` (iterative Tarjan)."""
    disc: dict = {}
    low: dict = {}
    aps = set()
    for s in rot:
        if s == removed or s in disc:
            continue
        disc[s] = low[s] = len(disc)
        stack = [(s, None, iter(rot[s]))]
        rootkids = 0
        while stack:
            v, p, it = stack[-1]
            adv = False
            for w in it:
                if w == removed:
                    continue
                if w not in disc:
                    disc[w] = low[w] = len(disc)
                    stack.append((w, v, iter(rot[w])))
                    if v == s:
                        rootkids += 1
                    adv = True
                    break
                elif w != p:
                    low[v] = min(low[v], disc[w])
            if adv:
                continue
            stack.pop()
            if p is not None:
                low[p] = min(low[p], low[v])
                if p != s and low[v] >= disc[p]:
                    aps.add(p)
        if rootkids > 1:
            aps.add(s)
    return aps


def _comps_without(rot: dict, a, b) -> list[frozenset]:
    seen = {a, b}
    out = []
    for v in rot:
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        todo = [v]
        while todo:
            u = todo.pop()
            for w in rot[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    todo.append(w)
        out.append(frozenset(comp))
    return out


def biconnected_blocks(rotation) -> list[list[int]]:
    """Vertex lists of the blocks (bridges included), via an edge-stack DFS."""
    n = len(rotation)
    disc = [-1] * n
    low = [0] * n
    blocks = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        estack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(rotation[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    estack.append((u, v))
                    stack.append((v, u, iter(rotation[v])))
                    advanced = True
                    break
                if v != parent and disc[v] < disc[u]:
                    estack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    verts: dict[int, None] = {}
                    while True:
                        a, b = estack.pop()
                        verts.setdefault(a)
                        verts.setdefault(b)
                        if (a, b) == (parent, u):
                            break
                    blocks.append(list(verts))
    return blocks


# the recursive solver ----------------------------------------------------


def _cut_interval(lst, K):
    """Split a rotation into the cyclically contiguous run inside ``K`` and the rest."""
    d = len(lst)
    ins = [w in K for w in lst]
    if all(ins):
        return [], list(lst)
    start = next(i for i in range(d) if ins[i] and not ins[i - 1])
    run = []
    i = start
    while ins[i % d] and len(run) < d:
        run.append(lst[i % d])
        i += 1
    if len(run) != sum(ins):
        raise ValueError("component edges are not contiguous in the rotation")
    others = [lst[(i + k) % d] for k in range(d - len(run))]
    return others, run


def _postorder_info(rot, parent, root, s):
    children = {v: [] for v in rot}
    for v in rot:
        l = rot[v]
        i = l.index(s) if v == root else (l.index(parent[v]) + 1) % len(l)
        for k in range(len(l)):
            w = l[(i + k) % len(l)]
            if w != root and parent.get(w) == v:
                children[v].append(w)
    post: dict = {}
    lo: dict = {}
    stack = [(root, 0)]
    while stack:
        v, i = stack.pop()
        if i == 0:
            lo[v] = len(post)
        if i < len(children[v]):
            stack.append((v, i + 1))
            stack.append((children[v][i], 0))
        else:
            post[v] = len(post)
    return post, lo


def _perm_updates(rot, a, b, items):
    """All reorderings of a parallel bundle at ``a`` (mirrored at ``b``), current first."""
    ids_a = {x[0] for x in items}
    ids_b = {x[1] for x in items}
    try:
        others_a, run_a = _cut_interval(rot[a], ids_a)
        others_b, _ = _cut_interval(rot[b], ids_b)
    except ValueError:
        return [[]]
    if not others_a and others_b:
        return _perm_updates(rot, b, a, [(y, x, sig) for x, y, sig in items])
    bya = {x[0]: x for x in items}
    cur = [bya[w] for w in run_a]
    # with nothing else at a the cyclic order only matters up to rotation
    fixed = [] if others_a else [cur[0]]
    free = cur[len(fixed):]
    seen = set()
    res = []
    for p in itertools.permutations(free):
        sig = tuple(x[2] for x in p)
        if sig in seen:
            continue
        seen.add(sig)
        order = fixed + list(p)
        new_a = others_a + [x[0] for x in order]
        new_b = others_b + [x[1] for x in order[::-1]]
        res.append([(a, new_a), (b, new_b)])
        if len(res) >= 720:
            break
    return res


def _run_search(rot, root, s_list, choose, budget, groups=(), pairs=()):
    ids = list(rot)
    idx = {v: i for i, v in enumerate(ids)}
    R = [[idx[w] for w in rot[v]] for v in ids]
    gi: dict = {}
    for a, b, items in groups:
        ia, ib = idx[a], idx[b]
        it = [(idx[x], idx[y], sig) for x, y, sig in items]
        gi.setdefault(ia, []).append((ia, ib, it))
        gi.setdefault(ib, []).append((ib, ia, [(y, x, sig) for x, y, sig in it]))

    def ch(c, p, lblock, rest, jmax):
        return choose(ids[c], ids[p], [ids[x] for x in lblock], [ids[x] for x in rest], jmax)

    def compose(base_rot, groups_here):
        alts = [[]]
        for a, b, it in groups_here:
            nxt = []
            for u in alts:
                view = dict(u)
                cur = {a: view.get(a, base_rot[a]), b: view.get(b, base_rot[b])}
                for w in _perm_updates(cur, a, b, it):
                    d = dict(u)
                    d.update(w)
                    nxt.append(list(d.items()))
            alts = nxt
        return alts

    def pre(c, placed, live):
        if c not in gi:
            return None
        here = [(a, b, it) for a, b, it in gi[c]
                if not placed[b] and not any(placed[x] for x, _, _ in it)]
        alts = compose(live, here)
        return alts if len(alts) > 1 else None

    ipairs = [(idx[a], idx[b], {(idx[p], ct) for p, ct in ok}) for a, b, ok in pairs]
    for ra in compose(R, gi.get(idx[root], [])):
        R2 = list(R)
        for v, l in ra:
            R2[v] = l
        for s in s_list:
            if idx[s] not in R2[idx[root]]:
                continue
            try:
                out = search(R2, idx[root], idx[s], ch, budget, pre if gi else None,
                             flex=list(gi), pairs=ipairs)
            except Budget:
                out = None
            if out is not None:
                par, fr = out
                return ({ids[v]: (None if p is None else ids[p]) for v, p in enumerate(par)}, s,
                        {ids[v]: [ids[w] for w in fr[v]] for v in range(len(ids))})
    return None


class _Solver:
    """One top-level solve; owns the fresh-id counter."""

    def __init__(self, first_id: int, budget_scale: int = 1):
        self._ids = itertools.count(first_id)
        self.budget_scale = budget_scale

    def fresh(self) -> int:
        return next(self._ids)

    # skeleton construction

    def candidates(self, rot, protected):
        cands: dict = {}
        order = {v: i for i, v in enumerate(rot)}
        for u in rot:
            for v in sorted(_art_points(rot, u), key=order.__getitem__):
                if order[v] < order[u]:
                    continue
                for K in _comps_without(rot, u, v):
                    if K & protected:
                        continue
                    if all(len(rot[x]) == 2 for x in K):
                        continue
                    cands.setdefault(K, (u, v))
        return cands

    @staticmethod
    def select(cands):
        ks = list(cands)
        X = {K: K | set(cands[K]) for K in ks}
        ok = []
        for K in ks:
            if not any(not (K <= L or L <= K) and ((K & X[L]) or (L & X[K])) for L in ks):
                ok.append(K)
        ok.sort(key=len, reverse=True)
        top = []
        for K in ok:
            if not any(K <= L for L in top):
                top.append(K)
        return top

    def contract(self, rot, tops, cands):
        sk = {v: list(l) for v, l in rot.items()}
        hs = {}
        for K in tops:
            a, b = cands[K]
            h = self.fresh()
            for end in (a, b):
                others, _ = _cut_interval(sk[end], K)
                sk[end] = others + [h]
            sk[h] = [a, b]
            for x in K:
                del sk[x]
            hs[h] = (K, a, b)
        return sk, hs

    @staticmethod
    def xplus(rot, K, a, b):
        """``K`` plus a virtual edge ``ab`` where the rest of the graph was."""
        out = {}
        for v in set(K) | {a, b}:
            if v in (a, b):
                _, run = _cut_interval(rot[v], K)
                out[v] = [b if v == a else a] + run
            else:
                out[v] = list(rot[v])
        return {v: out[v] for v in rot if v in out}

    @staticmethod
    def pgroups(sk, hinfo, root=None):
        """Parallel bundles of chains, gadgets and an edge between one pole pair."""
        deg2 = {v for v, l in sk.items() if len(l) == 2}
        if len(deg2) == len(sk):
            return []
        seen = set()
        bund: dict = {}
        for v in sk:
            if v not in deg2 or v in seen:
                continue
            seen.add(v)
            ends = []
            for start in sk[v]:
                prev, cur = v, start
                seg = []
                while cur in deg2 and cur != v:
                    seen.add(cur)
                    seg.append(cur)
                    nxt = sk[cur][0] if sk[cur][1] == prev else sk[cur][1]
                    prev, cur = cur, nxt
                ends.append((cur, prev, seg))
            (a, fa, sa), (b, _, sb) = ends
            if a == b:
                continue
            chain = sa[::-1] + [v] + sb
            chain = chain[::-1] if chain and chain[0] != fa else chain
            if root in chain:
                continue
            bund.setdefault((a, b) if a < b else (b, a), []).append(chain)
        out = []
        for (a, b), chains in bund.items():
            items = []
            for ch in chains:
                if ch[0] not in sk[a]:
                    ch = ch[::-1]
                if len(ch) == 1 and ch[0] in hinfo:
                    sig = ('h', ch[0])
                else:
                    sig = ('c', len(ch))
                items.append((ch[0], ch[-1], sig))
            if b in sk[a]:
                items.append((b, a, ('e',)))
            if len(items) >= 2:
                out.append((a, b, items))
        return out

    # solving

    def solve(self, base, root, special=None, budget=None):
        """Good tree of the 2-connected ``base`` rooted at ``root``.

        ``special`` is ``None``, ``('L', b)`` (the first child must be ``b``
        and be a leaf-like X neighbour) or ``('P', b, lflag, eflag)`` (the
        tree must pass through ``b`` to a pendant standing for the caller).
        Returns ``(rot, parent, s)`` or ``None``.
        """
        if budget is None:
            budget = (50 * len(base) + 2000) * self.budget_scale
        protected = {root}
        if special is not None:
            protected.add(special[1])
        cands = self.candidates(base, protected)
        tops = self.select(cands)
        sk, hinfo = self.contract(base, tops, cands)
        t = None
        if special is not None and special[0] == 'P':
            b = special[1]
            t = self.fresh()
            i = sk[root].index(b)
            s_list = [sk[root][(i + 1) % len(sk[root])]]
            sk[root] = sk[root][:i] + sk[root][i + 1:]
            j = sk[b].index(root)
            sk[b] = sk[b][:j] + [t] + sk[b][j + 1:]
            sk[t] = [b]
        elif special is not None:
            s_list = [special[1]]
        else:
            s_list = list(sk[root])
        forbidden: set = set()
        groups = self.pgroups(sk, hinfo, root)
        floats = []
        keep = []
        for a, b, items in groups:
            sigs = [x[2] for x in items]
            leaves = [x[0] for x in items if x[2] != ('e',)]
            if (('e',) in sigs and all(g in (('e',), ('c', 1)) or g[0] == 'h' for g in sigs)
                    and a not in protected and b not in protected and t not in (a, b)):
                floats.append((a, b, leaves))
            else:
                keep.append((a, b, items))
        groups = keep
        sk_run = sk
        if floats:
            gone = {x for _, _, xs in floats for x in xs}
            sk_run = {v: [w for w in l if w not in gone] for v, l in sk.items() if v not in gone}

        def float_pairs():
            out = []
            for a, b, xs in floats:
                ok = set()
                for p in (a, b):
                    for ct in 'LE':
                        if all((h, ('L', p, ct)) not in forbidden for h in xs if h in hinfo):
                            ok.add((p, ct))
                out.append((a, b, ok))
            return out

        def choose(c, p, lblock, rest, jmax):
            opts = list(range(jmax, -1, -1))
            if c in hinfo:
                _, a, b = hinfo[c]
                other = b if p == a else a
                res = []
                if (c, ('L', p, 'E' if other in lblock else 'L')) not in forbidden:
                    res.append(0)
                if jmax >= 1 and rest[0] == other:
                    res.append(1)
                opts = res
            if special is not None and c == special[1]:
                if special[0] == 'L':
                    opts = [0] if 0 in opts else []
                else:
                    _, b, lflag, eflag = special
                    if not rest or (lflag and rest[0] != t):
                        return []
                    k = rest.index(t) if t in rest else -1
                    if k < 0 or k >= jmax:
                        return []
                    opts = [j for j in opts if j >= k + 1 and (not eflag or j == k + 1)]
            if p in hinfo:
                _, a, b = hinfo[p]
                if c in (a, b):
                    src = a if c == b else b
                    lf = len(lblock) > 0
                    opts = [j for j in opts if (p, ('P', src, lf, j < len(rest))) not in forbidden]
            return opts

        memo: dict = {}
        while True:
            fps = float_pairs()
            res = _run_search(sk_run, root, s_list, choose, budget, groups, fps)
            if res is None:
                return None
            par, s, sk_final = res
            if floats:
                _reinsert(sk_final, par, root, s, floats, fps)
            post, lo = _postorder_info(sk_final, par, root, s)
            failed = False
            pieces = {}
            for h, (K, a, b) in hinfo.items():
                p = par[h]
                other = b if p == a else a
                if par[other] == h:
                    lf = ef = False
                    for w in sk_final[other]:
                        if w == h:
                            continue
                        if w == t:
                            # the pendant stands for the caller's edges
                            lf = lf or special[2]
                            ef = ef or special[3]
                            continue
                        if lo[other] <= post[w] <= post[other]:
                            continue
                        if post[w] < post[other]:
                            ef = True
                        else:
                            lf = True
                    role = ('P', p, lf, ef)
                else:
                    role = ('L', p, 'E' if post[h] < post[other] else 'L')
                key = (h, role)
                if key not in memo:
                    memo[key] = self.expand(base, K, p, other, role, budget)
                if memo[key] is None:
                    forbidden.add(key)
                    failed = True
                    break
                pieces[h] = memo[key]
            if failed:
                continue
            return _splice(sk_final, par, s, hinfo, pieces, root)

    def expand(self, base, K, a, b, role, budget):
        Xp = self.xplus(base, K, a, b)
        if role[0] == 'L':
            if role[2] == 'L':
                r = self.solve(Xp, a, ('L', b), budget)
                return None if r is None else (r[0], r[1])
            r = self.solve(mirror(Xp), a, ('L', b), budget)
            return None if r is None else (mirror(r[0]), r[1])
        _, p, lf, ef = role
        for mir in (False, True):
            src = mirror(Xp) if mir else Xp
            sp = ('P', b, ef, lf) if mir else ('P', b, lf, ef)
            r = self.solve(src, a, sp, budget)
            if r is None:
                continue
            rot, par, s = r
            l = rot[a]
            i = l.index(s)
            rot[a] = [b] + l[i:] + l[:i]
            return (mirror(rot) if mir else rot, par)
        return None


def _splice(sk, par, s, hinfo, pieces, root):
    """Replace each gadget by its expanded piece."""
    rot = {v: list(l) for v, l in sk.items() if v not in hinfo}
    parent = {v: p for v, p in par.items() if v not in hinfo}
    for h, (K, a, b) in hinfo.items():
        xr, xp = pieces[h]
        for end in (a, b):
            l = xr[end]
            # the single neighbour outside K marks where the piece goes
            i = next(i for i, w in enumerate(l) if w not in K)
            seq = l[i + 1:] + l[:i]
            j = rot[end].index(h)
            rot[end] = rot[end][:j] + seq + rot[end][j + 1:]
        for v in K:
            rot[v] = list(xr[v])
            parent[v] = xp[v]
        p = par[h]
        other = b if p == a else a
        if par[other] == h:
            parent[other] = xp[other]
        for v, q in list(parent.items()):
            if q == h:
                parent[v] = p
    if s in hinfo:
        K, _, _ = hinfo[s]
        l = pieces[s][0][root]
        i = next(i for i, w in enumerate(l) if w not in K)
        s = l[(i + 1) % len(l)]
    return rot, parent, s


def _reinsert(rot, par, root, s, floats, fps):
    """Put floating leaves back beside their edge, each group in one face."""
    post, _ = _postorder_info(rot, par, root, s)

    def nontree(v, w):
        return w != par[v] and par.get(w) != v

    ops = []
    for (a, b, xs), (_, _, ok) in zip(floats, fps):
        if par.get(b) == a or par.get(a) == b:
            p, q = (a, b) if par.get(b) == a else (b, a)
            if (p, 'L') in ok:
                ops.append((p, q, xs, p))
            else:
                ops.append((q, p, xs, p))
            continue
        l, e = (a, b) if post[a] > post[b] else (b, a)
        L = rot[l]
        y = L[(L.index(e) + 1) % len(L)]
        if not (nontree(l, y) and post[y] < post[l]) and (l, 'L') in ok:
            ops.append((l, e, xs, l))
        else:
            ops.append((l, e, xs, e))
    for u, w, xs, pa in ops:
        for x in xs:
            ru = rot[u]
            ru.insert(ru.index(w) + 1, x)
            rw = rot[w]
            rw.insert(rw.index(u), x)
            rot[x] = [u, w]
            par[x] = pa


# entry points ------------------------------------------------------------


def greedy_good_tree(rot: dict, root: int, s_list, budget: int):
    """Fixed-embedding search taking the longest child run everywhere."""
    ids = list(rot)
    idx = {v: i for i, v in enumerate(ids)}
    R = [[idx[w] for w in rot[v]] for v in ids]
    for s in s_list:
        try:
            out = search(R, idx[root], idx[s], None, budget)
        except Budget:
            out = None
        if out is not None:
            par, _ = out
            return ({v: rot[v] for v in ids},
                    {ids[v]: (None if p is None else ids[p]) for v, p in enumerate(par)}, s)
    return None


def block_good_tree(rot: dict, root: int, first_id: int, budget_scale: int = 1):
    """Good tree of one 2-connected block: ``(rot, parent, s)`` or ``None``."""
    if len(rot) == 2:
        (other,) = [v for v in rot if v != root]
        return {root: [other], other: [root]}, {root: None, other: root}, other
    d = len(rot)
    res = greedy_good_tree(rot, root, list(rot[root])[:3], 20 * d + 200)
    if res is not None:
        return res
    return _Solver(first_id, budget_scale).solve(rot, root)


def glue_blocks(rotation, root: int, solve_block):
    """Glue good trees of all blocks into one for the whole graph.

    ``solve_block(rot, c)`` returns ``(rot, parent, s)`` for the block with
    local rotation ``rot`` rooted at its attachment vertex ``c``, or ``None``.
    Each child block is fitted in the Y run of its attachment vertex, just
    before the X run, with its root children in counterclockwise order from
    its own ``s``.  Returns ``(rotation, parent, s)`` or ``None``.
    """
    n = len(rotation)
    if n == 1:
        return [[]], [None], None
    blocks = biconnected_blocks(rotation)
    at: list[list[int]] = [[] for _ in range(n)]
    for i, b in enumerate(blocks):
        for v in b:
            at[v].append(i)
    # attach each block at the vertex where the block-cut tree reaches it
    attach = [-1] * len(blocks)
    order = []
    seen_v = {root}
    todo = [root]
    while todo:
        nxt = []
        for c in todo:
            for i in at[c]:
                if attach[i] == -1:
                    attach[i] = c
                    order.append(i)
                    for v in blocks[i]:
                        if v not in seen_v:
                            seen_v.add(v)
                            nxt.append(v)
        todo = nxt
    home_rot: list[list[int]] = [[] for _ in range(n)]
    parent: list = [None] * n
    child_runs: list[list[list[int]]] = [[] for _ in range(n)]
    home_cut = [0] * n
    root_s = None
    for i in order:
        verts = set(blocks[i])
        c = attach[i]
        local = {v: [w for w in rotation[v] if w in verts] for v in blocks[i]}
        res = solve_block(local, c)
        if res is None:
            return None
        brot, bpar, s = res
        post, _ = _postorder_info(brot, bpar, c, s)
        for v in blocks[i]:
            if v == c:
                continue
            home_rot[v] = list(brot[v])
            parent[v] = bpar[v]
            home_cut[v] = _x_run_start(brot[v], bpar, v, post)
        l = brot[c]
        k = l.index(s)
        child_runs[c].append(l[k:] + l[:k])
        if c == root and root_s is None:
            root_s = s
    rot_out: list[list[int]] = []
    for v in range(n):
        if v == root:
            out = [w for run in child_runs[v] for w in run]
        else:
            home = home_rot[v]
            i = home.index(parent[v])
            ccw = home[i + 1:] + home[:i]
            cut = home_cut[v]
            extra = [w for run in child_runs[v] for w in run]
            out = [parent[v]] + ccw[:cut] + extra + ccw[cut:]
        rot_out.append(out)
    return rot_out, parent, root_s


def _x_run_start(rot_v: list[int], bpar: dict, v: int, post: dict) -> int:
    """Index, counterclockwise after the parent, where the X run of ``v`` starts."""
    i = rot_v.index(bpar[v])
    ccw = rot_v[i + 1:] + rot_v[:i]
    cut = len(ccw)
    while cut > 0:
        w = ccw[cut - 1]
        if bpar.get(w) == v or post[w] < post[v]:
            break
        cut -= 1
    return cut
