"""Constructors for the explicit configurations the theory names: paths,
cycles, the forked path gamma with its prefixes, and the cycle-with-spokes
witnesses over a four-point base, plus the search for base sets.

All witnesses are standalone graphs on fresh vertices; the delta
arithmetic they are used for depends only on their own edges.
"""

from dataclasses import dataclass
from itertools import combinations, permutations

from .graph import BipartiteGraph, GraphError, bfs_distances


def make_path(n, length):
    """A simple path with `length` edges on vertices 0..length, with
    subsets `endpoints` and `interior`."""
    if length < 0:
        raise GraphError("path length must be nonnegative")
    verts = {i: i % 2 for i in range(length + 1)}
    edges = [(i, i + 1) for i in range(length)]
    subsets = {
        "endpoints": frozenset({0, length}),
        "interior": frozenset(range(1, length)),
    }
    return BipartiteGraph(n, verts, edges, subsets)


def make_cycle(n, length):
    """A simple cycle of the given even length on vertices 0..length-1."""
    if length % 2 != 0 or length < 4:
        raise GraphError("cycle length must be even and >= 4, got %r" % (length,))
    verts = {i: i % 2 for i in range(length)}
    edges = [(i, (i + 1) % length) for i in range(length)]
    return BipartiteGraph(n, verts, edges, {"cycle": frozenset(verts)})


def make_gamma(n):
    """The forked path: a path x_0 ... x_n plus one extra neighbour
    x_{n+1} of x_{n-1}.  Subsets: `gamma` (everything) and the prefixes
    `gamma_0` ... `gamma_{n+1}`."""
    verts = {i: i % 2 for i in range(n + 1)}
    verts[n + 1] = n % 2  # same part as x_n, adjacent to x_{n-1}
    edges = [(i, i + 1) for i in range(n)] + [(n - 1, n + 1)]
    subsets = {"gamma": frozenset(verts)}
    for i in range(n + 2):
        subsets["gamma_%d" % i] = frozenset(range(i + 1))
    return BipartiteGraph(n, verts, edges, subsets)


def make_cl_witness(n, l, with_b=False):
    """The cycle-with-spokes witness: a simple cycle of length 4l(n-2)
    whose vertices c_{i(n-2)} are joined to fresh base vertices s_{i mod 4}.

    With `with_b` one spoke is redirected to an extra fresh vertex b, the
    variant whose body is 0-minimally algebraic over base + b.  Subsets:
    `A0` (the four base vertices), `C` (the cycle), and `b`/`A0b` for the
    variant.
    """
    if l < 2:
        raise GraphError("the cycle-with-spokes witness needs l >= 2")
    if n < 3:
        raise GraphError("n must be at least 3")
    length = 4 * l * (n - 2)
    verts = {i: i % 2 for i in range(length)}
    edges = [(i, (i + 1) % length) for i in range(length)]
    s = {j: length + j for j in range(4)}
    for j in range(4):
        # opposite part to the cycle vertices it will be joined to
        verts[s[j]] = 1 - ((j * (n - 2)) % 2)
    spokes = [(i * (n - 2) % length, s[i % 4]) for i in range(4 * l)]
    subsets = {
        "A0": frozenset(s.values()),
        "C": frozenset(range(length)),
    }
    if with_b:
        b = length + 4
        verts[b] = verts[s[0]]
        spokes[0] = (0, b)
        subsets["b"] = frozenset({b})
        subsets["A0b"] = subsets["A0"] | {b}
    return BipartiteGraph(n, verts, edges + spokes, subsets)


@dataclass(frozen=True)
class BaseSetSpec:
    """Four vertices s0..s3 with consecutive distances n and both diagonal
    distances n-1 (n odd) or n (n even)."""
    vertices: tuple  # (s0, s1, s2, s3)
    mode: str        # odd_n | even_n_type0 | even_n_type1


def find_base_set(g):
    """All base sets in g, one canonical ordering per 4-point set."""
    n = g.n
    diag = n - 1 if n % 2 else n
    dist = {v: bfs_distances(g, v) for v in g.vertices}

    def d(u, v):
        return dist[u].get(v)

    out = []
    for four in combinations(sorted(g.vertices), 4):
        best = None
        for perm in permutations(four):
            if perm[0] != min(four):
                continue
            s0, s1, s2, s3 = perm
            if (d(s0, s1) == d(s1, s2) == d(s2, s3) == d(s3, s0) == n
                    and d(s0, s2) == diag and d(s1, s3) == diag):
                if best is None or perm < best:
                    best = perm
        if best is not None:
            if n % 2:
                mode = "odd_n"
            else:
                mode = "even_n_type%d" % g.part(best[0])
            out.append(BaseSetSpec(best, mode))
    return out
