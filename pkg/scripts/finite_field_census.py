"""Orbit census of associative 2-dimensional algebras over F_p, with timings.

    python3 scripts/finite_field_census.py --primes 2 3 5
"""
import argparse
import time

from assoc2.census import enumerate_finite_field, standard_orbits


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()
    for p in args.primes:
        start = time.perf_counter()
        c = enumerate_finite_field(p)
        secs = time.perf_counter() - start
        print(f"F_{p}: {c.associative_count} associative of {c.total_tables}, {c.orbit_count} orbits, {secs:.2f}s")
        for o in c.orbits:
            print(f"   {o.algebra_class.value:<26} size {o.size:<5} rep {list(o.representative)}")
        if p > 2:
            print(f"   standard tables -> orbit index {standard_orbits(c)}")


if __name__ == "__main__":
    main()
