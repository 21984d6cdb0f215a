"""Seeded growth by free amalgamation.

Starting from a (2n+2)-cycle, the engine repeatedly glues template
extensions (pendant paths, path completions, long-cycle attachments,
cycle-with-spokes witnesses) onto strongly embedded sites, keeping a
candidate only if the result is still a class member.  Identical seeds
give identical outputs.
"""

from ngons import grow, in_class, is_strong, make_cycle


def main():
    n = 3
    seed = make_cycle(n, 2 * n + 2)
    print("seed: the %d-cycle, a class member" % (2 * n + 2))
    for rng_seed in (1, 2, 3):
        g, log = grow(seed, 20, rng_seed)
        accepted = sum(1 for r in log if r.accepted)
        print("\n== rng seed %d: %d/%d steps accepted, |V|=%d |E|=%d =="
              % (rng_seed, accepted, len(log), len(g.vertices), len(g.edges)))
        for r in log[:6]:
            print("  " + r.format())
        print("  ...")
        ok, _ = in_class(g)
        still = is_strong(g, seed.vertices)[0]
        print("  final graph in class: %s; seed still strong: %s"
              % (ok, still))


if __name__ == "__main__":
    main()
