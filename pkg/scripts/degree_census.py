#!/usr/bin/env python3
"""Census of int* degrees over box-and-cutoff parameters.

For each dimension n, sweep the valid parameter choices (a; c_1 >= ... >=
c_n >= 2) with entries up to --cmax and tabulate which int* degrees occur.
The sweep is exploratory: a degree missing here is only missing from the
searched box, nothing more.

Run: python scripts/degree_census.py --nmax 5 --cmax 5
"""

import argparse
import itertools
from collections import defaultdict

import polylevel as pl


def census(n, cmax):
    degrees = defaultdict(list)
    for c in itertools.combinations_with_replacement(range(cmax, 1, -1), n):
        for a in range(max(c[0] + 1, n + 1), sum(c)):
            spec = pl.VeroneseSpec(n=n, a=a, c=c)
            d = pl.int_star_degree(pl.veronese_polytope(spec))
            degrees[d].append((a, c))
    return degrees


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=5)
    ap.add_argument("--cmax", type=int, default=4)
    args = ap.parse_args()

    for n in range(2, args.nmax + 1):
        degrees = census(n, args.cmax)
        total = sum(len(v) for v in degrees.values())
        print(f"n={n}: {total} parameter choices, degrees {sorted(degrees)}")
        for d in sorted(degrees):
            a, c = degrees[d][0]
            print(f"   degree {d}: {len(degrees[d]):4d} choices, e.g. a={a}, c={c}")


if __name__ == "__main__":
    main()
