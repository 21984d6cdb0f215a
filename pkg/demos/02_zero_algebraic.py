"""0-algebraic and 0-minimally algebraic pairs.

A body B over a disjoint base A with delta(B/A) = 0 and all proper
sub-bodies strictly positive is the atomic unit of algebraicity in this
calculus; the class membership check later bounds how many copies of each
such body a graph may carry.
"""

from ngons import (degree_identity_check, enumerate_zero_min_pairs,
                   is_zero_algebraic, is_zero_minimally_algebraic,
                   make_cl_witness, make_path, minimal_base)


def main():
    print("== the path configuration ==")
    for n in (3, 4, 5):
        for m in range(1, n + 1):
            g = make_path(n, m + 1)
            flag = is_zero_minimally_algebraic(
                g, g.subsets["endpoints"], g.subsets["interior"])
            mark = "  <-- m = n-2" if m == n - 2 else ""
            print("  n=%d, interior of %d vertices: %s%s" % (n, m, flag, mark))

    print("\n== minimal bases ==")
    g = make_path(4, 3)
    base = g.subsets["endpoints"]
    body = g.subsets["interior"]
    print("  is_zero_algebraic(endpoints, interior) = %s"
          % is_zero_algebraic(g, base, body))
    print("  minimal_base = %s (every base vertex touches the body)"
          % sorted(minimal_base(g, base, body)))

    print("\n== the cycle-with-spokes witnesses ==")
    for n, l in ((3, 2), (4, 2), (5, 3)):
        g = make_cl_witness(n, l)
        a0, c = g.subsets["A0"], g.subsets["C"]
        print("  n=%d, l=%d: cycle of length %d, 0-minimally algebraic "
              "over the 4-point base: %s, degree identity: %s"
              % (n, l, len(c), is_zero_minimally_algebraic(g, a0, c),
                 degree_identity_check(g, a0, c)))

    print("\n== enumeration ==")
    g = make_cl_witness(3, 2)
    pairs = enumerate_zero_min_pairs(g)
    print("  the n=3, l=2 witness carries %d pairs in total" % len(pairs))
    big = max(pairs, key=lambda p: len(p.body))
    print("  largest body: %d vertices over base %s"
          % (len(big.body), sorted(big.base)))


if __name__ == "__main__":
    main()
