#!/usr/bin/env python3
"""Walk the named reference instances end to end and print what the
pipeline computes for each: facet systems, interior points, verdicts,
witnesses and delta vectors.

Run: python scripts/reproduce_reference_instances.py
"""

import polylevel as pl


def banner(title):
    print()
    print("=" * 72)
    print(title)
    print("=" * 72)


def facet_lines(P):
    return "; ".join(" + ".join(f"x{i}" for i in A) + f" <= {t}"
                     for A, t in P.upper_facets)


def show_hull(G, c, name):
    banner(f"{name}: bounds {c}")
    B = pl.enumerate_bases(G, c)
    P = pl.facets(B)
    print(f"delta_c = {B.delta_c}; bases ({len(B.bases)}): {list(B.bases)}")
    print(f"facets: {facet_lines(P)}")
    print(f"interior points: {pl.lattice_points(P, 1, 'interior')}")
    lv, wit = pl.level_star(P)
    print(f"pseudo-Gorenstein*: {pl.pseudo_gorenstein_star(P)}   level*: {lv}")
    if wit:
        rem = tuple(x - 1 for x in wit[1])
        print(f"  failure witness at level {wit[0]}: {wit[1]}; "
              f"minus the interior point -> {rem}, inside the hull: "
              f"{pl.membership(P, rem, 1, 'full')}")
    dv = pl.delta_vector(P)
    print(f"delta vector: {dv.delta} (unimodal: {pl.is_unimodal(dv)})")
    return P


def main():
    show_hull(pl.path(3), (2, 3, 2), "path on 3 vertices")

    P = show_hull(pl.complete_bipartite(3, 4), (2,) * 7, "K(3,4)")
    print(f"reflexive up to translation: {pl.reflexive_up_to_translation(P)}")
    print(f"interior point of the double dilate: "
          f"{pl.membership(P, (3, 3, 3, 3, 3, 3, 2), 2, 'interior')}; its "
          f"remainder (2,2,2,2,2,2,1) inside the hull: "
          f"{pl.membership(P, (2, 2, 2, 2, 2, 2, 1), 1, 'full')}")

    show_hull(pl.cycle(3), (1, 1, 1), "triangle")
    holds, strict = pl.dilation_containment(pl.cycle(3), (1, 1, 1), 2)
    print(f"double dilate inside the doubled-bound hull: {holds}; "
          f"containment strict: {strict}")

    banner("box (5,3,3,3) cut at 6")
    spec = pl.VeroneseSpec(n=4, a=6, c=(5, 3, 3, 3))
    Q = pl.veronese_polytope(spec)
    ok, wit = pl.veronese_level_criterion(spec)
    print(f"subset criterion: {ok}; violating subset: {wit}")
    print(f"interior points: {pl.lattice_points(Q, 1, 'interior')}")
    print(f"reduced degree of (8,1,1,1) at level 2:  {pl.reduced_degree(Q, (8, 1, 1, 1), 2)}")
    print(f"reduced degree of (14,1,1,1) at level 3: {pl.reduced_degree(Q, (14, 1, 1, 1), 3)}")
    print(f"int* degree: {pl.int_star_degree(Q)}; "
          f"all lower degrees realized: {pl.conjecture_spectrum(Q)}")

    banner("boxes (n,2,...,2) cut at n+1")
    for n in (3, 4, 5):
        Q = pl.veronese_polytope(pl.VeroneseSpec(n=n, a=n + 1, c=(n,) + (2,) * (n - 1)))
        print(f"n={n}: int* degree {pl.int_star_degree(Q)}, "
              f"spectrum full: {pl.conjecture_spectrum(Q)}")

    banner("trees on up to 8 vertices: leaf-distance rule vs bound search")
    trees = [("path(2)", pl.path(2)), ("path(3)", pl.path(3)), ("path(4)", pl.path(4)),
             ("star(3)", pl.star(3)),
             ("spider 3x2", pl.tree_from_parents((1, 1, 1, 2, 3, 4)))]
    for name, T in trees:
        rule = pl.tree_labeling_pseudo_gorenstein(T)
        found = pl.search_labeling(T, 2)
        print(f"{name:12s} rule: {str(rule):5s} search witness: {found}")


if __name__ == "__main__":
    main()
