"""Catalog sizes for N = 1..6 and extension orders m = 0..4.

Prints the enumerated count, the closed-form 2[(2N-1)m + N], and how many
of the entries are pointwise-distinct potentials.
"""
import argparse

from reflectionless_lab.catalog import distinct_potentials, enumerate_catalog, expected_count


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--N-max", type=int, default=6)
    ap.add_argument("--m-max", type=int, default=4)
    args = ap.parse_args()
    print(f"{'N':>2} {'m':>2} {'count':>6} {'formula':>8} {'distinct':>9}")
    for N in range(1, args.N_max + 1):
        for m in range(args.m_max + 1):
            entries = enumerate_catalog(N, m)
            print(f"{N:>2} {m:>2} {len(entries):>6} {expected_count(N, m):>8} "
                  f"{len(distinct_potentials(entries)):>9}")


if __name__ == "__main__":
    main()
