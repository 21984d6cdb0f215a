"""Bundled classical polygons, generated from their standard constructions.

* The Fano plane PG(2,2): 7 points, 7 lines, a thick generalized 3-gon.
* The generalized quadrangle GQ(2,2) = W(3,2) via duads and synthemes of
  six symbols: 15 points, 15 lines, a thick generalized 4-gon.

Points get part 0, lines part 1.
"""

from itertools import combinations

from .graph import BipartiteGraph


def fano_graph():
    """Incidence graph of PG(2,2).

    Points are the nonzero vectors of GF(2)^3 encoded as 1..7; a line is a
    triple with zero XOR.  Point p has vertex id p-1, lines get ids 7..13.
    """
    points = list(range(1, 8))
    lines = [frozenset(t) for t in combinations(points, 3)
             if t[0] ^ t[1] ^ t[2] == 0]
    lines.sort(key=sorted)
    verts = {p - 1: 0 for p in points}
    edges = []
    for i, line in enumerate(lines):
        lid = 7 + i
        verts[lid] = 1
        edges.extend((p - 1, lid) for p in line)
    return BipartiteGraph(3, verts, edges, {
        "points": frozenset(range(7)),
        "lines": frozenset(range(7, 14)),
    })


def gq22_graph():
    """Incidence graph of the generalized quadrangle GQ(2,2).

    Points are the 15 unordered pairs (duads) of {0..5}, lines the 15
    perfect matchings (synthemes); a duad lies on a syntheme containing
    it.  Duads get ids 0..14, synthemes 15..29.
    """
    duads = [frozenset(p) for p in combinations(range(6), 2)]
    synthemes = []
    for a in combinations(range(6), 2):
        rest = [x for x in range(6) if x not in a]
        b0 = rest[0]
        for b1 in rest[1:]:
            c = [x for x in rest if x not in (b0, b1)]
            syn = frozenset({frozenset(a), frozenset((b0, b1)), frozenset(c)})
            if syn not in synthemes:
                synthemes.append(syn)
    synthemes.sort(key=lambda s: sorted(sorted(d) for d in s))
    verts = {i: 0 for i in range(15)}
    edges = []
    for j, syn in enumerate(synthemes):
        lid = 15 + j
        verts[lid] = 1
        edges.extend((duads.index(d), lid) for d in syn)
    return BipartiteGraph(4, verts, edges, {
        "points": frozenset(range(15)),
        "lines": frozenset(range(15, 30)),
    })
