"""Detection and enumeration of 0-algebraic and 0-minimally algebraic pairs.

A disjoint body B is 0-algebraic over a base A if delta(B/A) = 0 while
every proper nonempty sub-body has strictly positive relative delta; it is
0-minimally algebraic if additionally no proper sub-base works, which
happens exactly when every base vertex sends an edge into the body.

Since relative delta is additive over the connected components of a
sub-body, positivity only needs to be checked on connected sub-bodies;
that keeps the check polynomial for path- and cycle-shaped bodies of the
sizes that actually occur.
"""

import math
from dataclasses import dataclass

from .graph import GraphError
from .predimension import delta, delta_rel


@dataclass(frozen=True)
class ZeroAlgebraicPair:
    base: frozenset
    body: frozenset
    kind: str  # "algebraic" or "minimally_algebraic"


def _require_disjoint(g, base, body):
    base = g.check_subset(base)
    body = g.check_subset(body)
    if base & body:
        raise GraphError("base and body must be disjoint, share %s"
                         % sorted(base & body))
    return base, body


def connected_subsets(g, ground, max_size=None):
    """All nonempty connected subsets of `ground`, each exactly once."""
    ground = frozenset(ground)
    cap = len(ground) if max_size is None else max_size
    out = []

    def rec(root, current, ext, ext_set):
        out.append(frozenset(current))
        if len(current) >= cap:
            return
        for i, u in enumerate(ext):
            grown = [w for w in sorted(g.neighbors(u))
                     if w in ground and w > root and w not in current
                     and w not in ext_set]
            rec(root, current | {u}, ext[i + 1:] + grown,
                ext_set.union(grown))

    for root in sorted(ground):
        ext = [w for w in sorted(g.neighbors(root)) if w in ground and w > root]
        rec(root, {root}, ext, frozenset(ext))
    return out


def is_zero_algebraic(g, base, body):
    """delta(body/base) = 0 and every proper nonempty sub-body has
    positive relative delta."""
    base, body = _require_disjoint(g, base, body)
    if not body:
        return False
    if delta_rel(g, body, base) != 0:
        return False
    for sub in connected_subsets(g, body):
        if len(sub) < len(body) and delta_rel(g, sub, base) <= 0:
            return False
    return True


def minimal_base(g, base, body):
    """The unique sub-base over which the body is 0-minimally algebraic:
    exactly the base vertices with at least one edge into the body."""
    base, body = _require_disjoint(g, base, body)
    if not is_zero_algebraic(g, base, body):
        raise GraphError("body is not 0-algebraic over the given base")
    return frozenset(a for a in base if any(w in body for w in g.neighbors(a)))


def is_zero_minimally_algebraic(g, base, body):
    base, body = _require_disjoint(g, base, body)
    if not is_zero_algebraic(g, base, body):
        return False
    return minimal_base(g, base, body) == base


def degree_identity_check(g, base, body):
    """The edge-count identity |B|(n-1) = (n-2)(e(B) + e(B,A)) that every
    0-algebraic pair satisfies."""
    base, body = _require_disjoint(g, base, body)
    n = g.n
    return len(body) * (n - 1) == (n - 2) * (g.edge_count(body) + g.edge_count(body, base))


def default_body_cap(n, l_max=3):
    # Large enough for the cycle-with-spokes witnesses up to l_max.
    return 4 * l_max * (n - 2)


def _body_ground(g, cap):
    """Vertices that can belong to a body of size >= 2.

    In such a body every vertex v satisfies (n-2) e(v, rest of body union
    base) >= n with at most one edge into the base, so with
    t = ceil(n/(n-2)) it needs total degree at least t (3 for n = 3) and
    degree inside the body at least t-1.  Iterating the internal-degree
    condition peels the ambient graph down to a core; for n = 3 this cuts
    the graph at every plain path, so bodies cannot straddle sparsely
    connected regions.
    """
    n = g.n
    t = math.ceil(n / (n - 2))
    alive = {v for v in g.vertices if len(g.neighbors(v)) >= t}
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if sum(1 for w in g.neighbors(v) if w in alive) < t - 1:
                alive.discard(v)
                changed = True
    return alive


def enumerate_zero_min_pairs(g, max_body=None, around=None):
    """All pairs (A, B) with B 0-minimally algebraic over A and
    |B| <= max_body (default: large enough for the standard witnesses).

    Only connected bodies are searched: a disconnected body has a
    component with nonpositive relative delta, contradicting minimality.

    With `around` (a vertex set), only pairs whose base or body meets it
    are returned; the search is pruned accordingly.
    """
    n = g.n
    cap = default_body_cap(n) if max_body is None else max_body
    around = None if around is None else g.check_subset(around)
    pairs = []
    # Singleton bodies: delta(b/A) = 0 forces (n-2) | n-1, i.e. n = 3 with
    # exactly two base neighbours.
    if n == 3 and cap >= 1:
        for b in sorted(g.vertices):
            nbrs = sorted(g.neighbors(b))
            for i in range(len(nbrs)):
                for j in range(i + 1, len(nbrs)):
                    pairs.append(ZeroAlgebraicPair(
                        frozenset((nbrs[i], nbrs[j])), frozenset((b,)),
                        "minimally_algebraic"))
    if cap >= 2:
        ground = _body_ground(g, cap)
        touch = None
        if around is not None:
            # a relevant pair has base or body meeting `around`, so its
            # body meets `around` or the neighbourhood of `around`; a
            # connected body then stays within the cap-ball around that
            touch = set(around)
            for v in around:
                touch |= g.neighbors(v)
            dist = {v: 0 for v in touch if v in ground}
            frontier = sorted(dist)
            level = 0
            while frontier and level < cap - 1:
                level += 1
                nxt = []
                for u in frontier:
                    for w in g.neighbors(u):
                        if w in ground and w not in dist:
                            dist[w] = level
                            nxt.append(w)
                frontier = nxt
            ground = set(dist)
        for body in _candidate_bodies(g, ground, cap, touch):
            pairs.extend(_pairs_for_body(g, body))
    if around is not None:
        pairs = [p for p in pairs if (p.base | p.body) & around]
    return sorted(pairs, key=lambda p: (sorted(p.body), sorted(p.base)))


def _pairs_for_body(g, body):
    """All bases over which `body` is 0-minimally algebraic.

    For a candidate base A the sub-body condition reads
    delta(D) > (n-2) e(D, A) for every proper connected sub-body D, and
    e(D, A) <= |D| because each body vertex takes at most one base edge.
    Sub-bodies with delta(D) > (n-2)|D| therefore never fail and are
    dropped up front; for the rest the check is bitmask arithmetic.
    """
    n = g.n
    bases = list(_candidate_bases(g, body))
    if not bases:
        return []
    bverts = sorted(body)
    bpos = {v: i for i, v in enumerate(bverts)}
    k = len(bverts)
    adj = []
    for v in bverts:
        m = 0
        for w in g.neighbors(v):
            if w in bpos:
                m |= 1 << bpos[w]
        adj.append(m)
    subs = []

    def rec(gt_root, cur, size, dlt, ext, ext_mask, dead):
        if size < k and dlt <= (n - 2) * size:
            subs.append((cur, dlt))
        if size >= k:
            return
        now_dead = dead
        rest = ext_mask
        for i, u in enumerate(ext):
            rest &= ~(1 << u)
            cur2 = cur | (1 << u)
            d2 = dlt + (n - 1) - (n - 2) * (adj[u] & cur).bit_count()
            grown_mask = adj[u] & gt_root & ~cur2 & ~now_dead & ~rest
            rec(gt_root, cur2, size + 1, d2,
                ext[i + 1:] + [j for j in range(k) if grown_mask >> j & 1],
                rest | grown_mask, now_dead)
            now_dead |= 1 << u

    full = (1 << k) - 1
    for r in range(k):
        gt_root = full & ~((1 << (r + 1)) - 1)
        ext_mask = adj[r] & gt_root
        rec(gt_root, 1 << r, 1, n - 1,
            [j for j in range(k) if ext_mask >> j & 1], ext_mask, 0)
    # most dangerous sub-bodies first, for early rejection
    subs.sort(key=lambda s: s[1] - (n - 2) * s[0].bit_count())

    out = []
    for base in bases:
        amask = 0
        for a in base:
            for w in g.neighbors(a):
                if w in bpos:
                    amask |= 1 << bpos[w]
        ok = True
        for m, dlt in subs:
            if dlt <= (n - 2) * (m & amask).bit_count():
                ok = False
                break
        if ok:
            out.append(ZeroAlgebraicPair(base, body, "minimally_algebraic"))
    return out


def _candidate_bodies(g, ground, cap, touch=None):
    """Connected subsets of `ground` of size 2..cap in which every vertex
    has the internal degree a body vertex needs.

    The required internal degree is 2 for n = 3 and 1 otherwise (a body
    vertex has at most one base edge, and (n-2) e(v, rest + base) >= n).
    The search runs over bitmasks; a branch dies as soon as some chosen
    vertex cannot reach its quota from chosen plus still-undecided
    neighbours.  With `touch`, only subsets meeting it are produced and
    branches that cannot reach it within the size cap are cut.
    """
    need = 2 if g.n == 3 else 1
    verts = sorted(ground)
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        m = 0
        for w in g.neighbors(v):
            if w in pos:
                m |= 1 << pos[w]
        adj.append(m)
    full = (1 << len(verts)) - 1

    touch_mask = None
    dist = None
    if touch is not None:
        touch_mask = 0
        for v in touch:
            if v in pos:
                touch_mask |= 1 << pos[v]
        if not touch_mask:
            return []
        # BFS distance towards `touch` inside the ground graph: an
        # admissible lower bound on how many more vertices a branch needs.
        dist = [None] * len(verts)
        frontier = [i for i in range(len(verts)) if touch_mask >> i & 1]
        for i in frontier:
            dist[i] = 0
        level = 0
        while frontier:
            nxt = []
            for i in frontier:
                m = adj[i]
                while m:
                    j = (m & -m).bit_length() - 1
                    m &= m - 1
                    if dist[j] is None:
                        dist[j] = level + 1
                        nxt.append(j)
            frontier = nxt
            level += 1

    out = []

    def rec(gt_root, current, size, ext, ext_mask, dead):
        if size >= 2 and (touch_mask is None or current & touch_mask):
            m = current
            ok = True
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                if (adj[i] & current).bit_count() < need:
                    ok = False
                    break
            if ok:
                out.append(frozenset(verts[i] for i in range(len(verts))
                                     if current >> i & 1))
        if size >= cap:
            return
        now_dead = dead
        rest_mask = ext_mask
        for k, u in enumerate(ext):
            rest_mask &= ~(1 << u)
            cur2 = current | (1 << u)
            feasible = cur2 | (gt_root & ~now_dead & ~cur2)
            m = cur2
            bad = False
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                if (adj[i] & feasible).bit_count() < need:
                    bad = True
                    break
            if not bad and touch_mask is not None and not (cur2 & touch_mask):
                room = cap - size - 1
                reach = [dist[j] for j in range(len(verts))
                         if (feasible & ~cur2) >> j & 1 and dist[j] is not None]
                if not reach or min(reach) + 1 > room:
                    bad = True
            if bad:
                now_dead |= 1 << u
                continue
            grown_mask = adj[u] & gt_root & ~cur2 & ~now_dead & ~rest_mask
            grown = [j for j in range(len(verts)) if grown_mask >> j & 1]
            rec(gt_root, cur2, size + 1, ext[k + 1:] + grown,
                rest_mask | grown_mask, now_dead)
            now_dead |= 1 << u

    for r in range(len(verts)):
        gt_root = full & ~((1 << (r + 1)) - 1)
        ext_mask = adj[r] & gt_root
        ext = [j for j in range(len(verts)) if ext_mask >> j & 1]
        rec(gt_root, 1 << r, 1, ext, ext_mask, 0)
    return out


def _candidate_bases(g, body):
    """Subsets A of the outside neighbourhood with (n-2) e(B,A) = delta(B)
    and at most one edge per body vertex into A (forced for |B| >= 2).

    Two structural facts shape the search.  Since each body vertex takes
    at most one base edge, the chosen base vertices have pairwise disjoint
    neighbourhoods inside the body.  And a body vertex at the minimum
    internal degree must receive a base edge (removing it from the body
    would otherwise leave a sub-body with nonpositive relative delta), so
    those vertices pose an exact-cover problem: branching on the lowest
    uncovered one at each step visits every admissible base exactly once.
    """
    n = g.n
    dlt = delta(g, body)
    if dlt <= 0 or dlt % (n - 2) != 0:
        return
    target = dlt // (n - 2)
    need = 2 if n == 3 else 1
    bverts = sorted(body)
    bpos = {v: i for i, v in enumerate(bverts)}
    required = 0
    for v in bverts:
        deg = sum(1 for w in g.neighbors(v) if w in body)
        if deg < need:
            return
        if deg == need:
            required |= 1 << bpos[v]
    boundary = sorted(set().union(*(g.neighbors(v) for v in body)) - body)
    masks, weights, names = [], [], []
    for a in boundary:
        m = 0
        for w in g.neighbors(a):
            if w in body:
                m |= 1 << bpos[w]
        if m.bit_count() <= target:
            masks.append(m)
            weights.append(m.bit_count())
            names.append(a)
    covering = {}
    for j, m in enumerate(masks):
        mm = m & required
        while mm:
            i = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            covering.setdefault(i, []).append(j)
    suffix = [0] * (len(masks) + 1)
    for j in range(len(masks) - 1, -1, -1):
        suffix[j] = suffix[j + 1] + weights[j]

    def extend(idx, used, chosen, weight):
        # all required bits covered; add further disjoint base vertices in
        # index order until the edge count reaches the target
        if weight == target:
            yield frozenset(names[j] for j in chosen)
            return
        if weight + suffix[idx] < target:
            return
        for j in range(idx, len(masks)):
            if weight + weights[j] <= target and not masks[j] & used:
                yield from extend(j + 1, used | masks[j], chosen + [j],
                                  weight + weights[j])

    def cover(used, chosen, weight):
        missing = required & ~used
        if not missing:
            yield from extend(0, used, chosen, weight)
            return
        if weight + missing.bit_count() > target:
            return
        i = (missing & -missing).bit_length() - 1
        for j in covering.get(i, ()):
            if not masks[j] & used and weight + weights[j] <= target:
                yield from cover(used | masks[j], chosen + [j],
                                 weight + weights[j])

    yield from cover(0, [], 0)
