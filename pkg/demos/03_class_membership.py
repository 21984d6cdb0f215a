"""Membership in the amalgamation class.

A graph belongs to the class when it has no cycle shorter than 2n, every
set containing a longer cycle keeps delta >= 2n+2, and the number of
copies of each 0-minimally algebraic body stays within the mu-bound.
"""

from ngons import (BipartiteGraph, fano_graph, in_class, make_cl_witness,
                   make_cycle)


def double_path(n):
    verts = {0: 0, 1: (n - 1) % 2}
    edges, nid = [], 2
    for _ in range(2):
        prev = 0
        for i in range(1, n - 1):
            verts[nid] = i % 2
            edges.append((prev, nid))
            prev, nid = nid, nid + 1
        edges.append((prev, 1))
    return BipartiteGraph(n, verts, edges)


def report(name, g):
    ok, reports = in_class(g)
    print("  %-28s %s" % (name, "member" if ok else "NOT a member"))
    for r in reports:
        print("      %s" % r.format())


def main():
    n = 3
    print("== n = %d ==" % n)
    report("(2n+2)-cycle", make_cycle(n, 2 * n + 2))
    report("2(n-1)-cycle", make_cycle(n, 2 * (n - 1)))
    report("double path (two copies)", double_path(n))
    report("cycle-with-spokes witness", make_cl_witness(n, 2))

    print("\n== a classical polygon is NOT in the class ==")
    report("Fano incidence graph", fano_graph())
    print("  (the whole plane has delta 7 < 2n+2 = 8: classical polygons")
    print("   are too dense for the amalgamation class, by design)")


if __name__ == "__main__":
    main()
