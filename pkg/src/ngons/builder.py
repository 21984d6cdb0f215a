"""Free amalgamation over strong subsets and a seeded growth engine.

`free_amalgam` glues a fresh extension onto an ambient graph along a
common induced subgraph that is strongly embedded in the extension,
adding no other cross edges.  `grow` repeatedly draws candidate
extensions from a template catalogue (pendant paths, path completions,
long-cycle attachments, cycle-with-spokes witnesses), keeps a candidate
only if the amalgam still passes the class membership check, and verifies
after every accepted step that the previous graph is still strongly
embedded.  Identical seeds give identical outputs.
"""

import random
from dataclasses import dataclass

from .graph import BipartiteGraph, GraphError, bfs_distances, INFINITY
from .predimension import is_strong
from .kmu import in_class, default_mu
from .witnesses import make_path, make_cycle, make_cl_witness


class AmalgamError(GraphError):
    pass


@dataclass(frozen=True)
class StepRecord:
    index: int
    template: str
    accepted: bool
    reason: str  # "" when accepted
    n_vertices: int
    n_edges: int

    def format(self):
        status = "accepted" if self.accepted else "rejected:%s" % self.reason
        return "STEP %d %s %s %d %d" % (
            self.index, self.template, status, self.n_vertices, self.n_edges)


def free_amalgam(m, e, gluing):
    """Glue extension e onto ambient m along the domain of `gluing`
    (a map from e-vertices to m-vertices).

    The gluing must be an isomorphism of induced subgraphs (parts and
    induced edges both match) and its domain must be strongly embedded in
    e.  Vertices of e outside the domain receive fresh ids above m's.
    """
    if m.n != e.n:
        raise AmalgamError("ambient and extension have different gonality")
    dom = e.check_subset(gluing.keys())
    img = m.check_subset(gluing.values())
    if len(img) != len(dom):
        raise AmalgamError("gluing map is not injective")
    for u in dom:
        if e.part(u) != m.part(gluing[u]):
            raise AmalgamError("gluing does not preserve parts at %r" % (u,))
    for u in dom:
        for v in dom:
            if u < v and e.has_edge(u, v) != m.has_edge(gluing[u], gluing[v]):
                raise AmalgamError(
                    "gluing is not an induced-subgraph isomorphism at (%r, %r)" % (u, v))
    ok, witness = is_strong(e, dom)
    if not ok:
        raise AmalgamError("gluing base is not strong in the extension; "
                           "violator %s" % sorted(witness))
    fresh = {}
    next_id = max(m.vertices, default=-1) + 1
    for v in sorted(e.vertices - dom):
        fresh[v] = next_id
        next_id += 1
    relabel = dict(gluing)
    relabel.update(fresh)
    verts = {v: m.part(v) for v in m.vertices}
    verts.update({fresh[v]: e.part(v) for v in fresh})
    edges = set(m.edges)
    for (u, v) in e.edges:
        a, b = relabel[u], relabel[v]
        edges.add((a, b) if a < b else (b, a))
    return BipartiteGraph(m.n, verts, edges, m.subsets)


def _pick_pair(rng, items):
    if not items:
        return None
    return items[rng.randrange(len(items))]


def _sites_pendant(g, rng):
    verts = sorted(g.vertices)
    return _pick_pair(rng, verts)


def _quiet(g, v):
    # sites of low degree keep the growth from piling structure onto a
    # few hub vertices, which would make later membership checks explode
    return len(g.neighbors(v)) <= 2


def _secluded(g, v, allowed=()):
    """A quiet vertex all of whose neighbours are quiet too.  Gluing
    cycle-creating templates only at secluded sites leaves a buffer of
    plain path vertices around every dense region, so the regions stay
    separated and the membership checks stay local."""
    if not _quiet(g, v):
        return False
    return all(_quiet(g, w) for w in g.neighbors(v) if w not in allowed)


def _sites_completion(g, rng, length):
    """Low-degree vertex pairs far enough apart that closing them with a
    path of the given length cannot create a cycle shorter than 2n."""
    want_same_part = (length % 2 == 0)
    pairs = []
    for u in sorted(g.vertices):
        if not _secluded(g, u):
            continue
        dist = bfs_distances(g, u)
        for v in sorted(g.vertices):
            if v <= u or not _secluded(g, v):
                continue
            if (g.part(u) == g.part(v)) != want_same_part:
                continue
            d = dist.get(v, INFINITY)
            if d + length >= 2 * g.n:
                pairs.append((u, v))
    return _pick_pair(rng, pairs)


def _sites_witness_base(g, rng, witness):
    """Four low-degree, pairwise distant vertices of m matching the parts
    of the witness base (the base is edgeless, so induced isomorphism just
    means parts match and no edges between the images).  Keeping the
    images at distance >= 3 rules out shared neighbours."""
    base = sorted(witness.subsets["A0"])
    parts = [witness.part(s) for s in base]
    by_part = {p: [v for v in sorted(g.part_vertices(p)) if _secluded(g, v)]
               for p in (0, 1)}
    dist = {}
    for _ in range(50):
        chosen = []
        ok = True
        for p in parts:
            pool = []
            for v in by_part[p]:
                if v in chosen:
                    continue
                if v not in dist:
                    dist[v] = bfs_distances(g, v)
                if all(dist[v].get(u, INFINITY) >= 3 for u in chosen):
                    pool.append(v)
            if not pool:
                ok = False
                break
            chosen.append(pool[rng.randrange(len(pool))])
        if ok:
            return dict(zip(base, chosen))
    return None


def _aligned_path(n, length, part0):
    """A path on 0..length whose vertex 0 has the requested part."""
    verts = {i: (i + part0) % 2 for i in range(length + 1)}
    edges = [(i, i + 1) for i in range(length)]
    return BipartiteGraph(n, verts, edges)


def _candidate(g, rng, template):
    """Build (extension, gluing) for a template, or None if no site."""
    n = g.n
    if template == "pendant_path":
        v = _sites_pendant(g, rng)
        if v is None:
            return None
        length = rng.choice(range(1, n + 1))
        path = _aligned_path(n, length, g.part(v))
        return path, {0: v}
    if template == "path_completion":
        length = n - 1
        pair = _sites_completion(g, rng, length)
        if pair is None:
            return None
        u, v = pair
        path = _aligned_path(n, length, g.part(u))
        if path.part(length) != g.part(v):
            return None
        return path, {0: u, length: v}
    if template == "cycle_attach":
        cyc = make_cycle(n, 2 * n + 2)
        edges = [(a, b) for (a, b) in sorted(g.edges)
                 if _secluded(g, a, allowed=(b,)) and _secluded(g, b, allowed=(a,))]
        if edges and rng.random() < 0.75:
            a, b = edges[rng.randrange(len(edges))]
            if cyc.part(0) != g.part(a):
                a, b = b, a
            return cyc, {0: a, 1: b}
        pool = [v for v in sorted(g.vertices) if _secluded(g, v)]
        v = _pick_pair(rng, pool)
        if v is None:
            return None
        anchor = 0 if cyc.part(0) == g.part(v) else 1
        return cyc, {anchor: v}
    if template == "cl_witness":
        l = rng.choice([2, 3])
        wit = make_cl_witness(n, l)
        gluing = _sites_witness_base(g, rng, wit)
        if gluing is None:
            return None
        return wit, gluing
    raise AmalgamError("unknown template %r" % (template,))


TEMPLATES = ("pendant_path", "path_completion", "cycle_attach", "cl_witness")


def grow(seed, steps, rng_seed, mu=None, horizon=None, max_body=None,
         templates=TEMPLATES):
    """Grow a class member by `steps` seeded amalgamation attempts.

    Returns (graph, log).  Rejected candidates are logged, never
    repaired; every intermediate graph is a class member.
    """
    if mu is None:
        mu = default_mu(seed.n)
    ok, reports = in_class(seed, mu, horizon=horizon, max_body=max_body)
    if not ok:
        raise AmalgamError("seed graph is not in the class: %s"
                           % "; ".join(r.format() for r in reports))
    rng = random.Random(rng_seed)
    g = seed
    log = []
    for k in range(steps):
        template = templates[rng.randrange(len(templates))]
        built = _candidate(g, rng, template)
        if built is None:
            log.append(StepRecord(k, template, False, "no_site",
                                  len(g.vertices), len(g.edges)))
            continue
        ext, gluing = built
        try:
            candidate = free_amalgam(g, ext, gluing)
        except AmalgamError as exc:
            log.append(StepRecord(k, template, False,
                                  "amalgam_error", len(g.vertices), len(g.edges)))
            continue
        still_strong, witness = is_strong(candidate, g.vertices)
        if not still_strong:
            raise AmalgamError(
                "strong persistence failed at step %d: previous graph is no "
                "longer strong, violator %s" % (k, sorted(witness)))
        # the previous graph is a member and strongly embedded, so the
        # membership check only needs to look at the new vertices
        ok, reports = in_class(candidate, mu, horizon=horizon,
                               max_body=max_body, member_base=g.vertices)
        if not ok:
            reason = "+".join(sorted({r.condition for r in reports}))
            log.append(StepRecord(k, template, False, reason,
                                  len(g.vertices), len(g.edges)))
            continue
        g = candidate
        log.append(StepRecord(k, template, True, "",
                              len(g.vertices), len(g.edges)))
    return g, log
