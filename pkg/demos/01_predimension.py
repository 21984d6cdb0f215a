"""A tour of the predimension calculus.

delta(A) = (n-1)|A| - (n-2)e(A) measures how "free" a configuration is:
vertices add n-1 each, edges pay n-2 back.  Everything else -- strong
embeddings, the d-function, closures -- is built on top of it.
"""

from ngons import (acl_relative, closure, d_min, delta, is_strong,
                   make_cycle, make_path)


def main():
    n = 4
    print("== paths (n = %d) ==" % n)
    for r in range(0, 6):
        g = make_path(n, r)
        print("  path of length %d: delta = %d  (= (n-1) + r)"
              % (r, delta(g, g.vertices)))

    print("\n== strong embeddings ==")
    good = make_path(n, n - 1)
    ok, _ = is_strong(good, good.subsets["endpoints"])
    print("  endpoints of a length-%d path strong? %s" % (n - 1, ok))
    bad = make_path(n, n - 2)
    ok, witness = is_strong(bad, bad.subsets["endpoints"])
    print("  endpoints of a length-%d path strong? %s  (violator %s, "
          "delta %d < %d)" % (n - 2, ok, sorted(witness),
                              delta(bad, witness),
                              delta(bad, bad.subsets["endpoints"])))

    print("\n== d and closure ==")
    a = bad.subsets["endpoints"]
    print("  delta(endpoints) = %d but d(endpoints) = %d"
          % (delta(bad, a), d_min(bad, a)))
    print("  closure(endpoints) = %s  (the whole path)"
          % sorted(closure(bad, a)))
    print("  a set is strong exactly when delta = d")

    print("\n== algebraic closure, relativized ==")
    g = make_path(n, n - 1)
    a = g.subsets["endpoints"]
    print("  endpoints of a length-%d path: acl = %s"
          % (n - 1, sorted(acl_relative(g, a))))
    print("  each interior vertex leaves d unchanged (the interior is")
    print("  0-algebraic over the endpoints), so acl is the whole path,")
    print("  while the closure is just %s" % sorted(closure(g, a)))


if __name__ == "__main__":
    main()
