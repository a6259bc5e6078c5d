"""Print cohomology dimensions of the six standard codifferentials.

    python3 scripts/reproduce_table1.py --max-degree 6
"""
import argparse
import time

from assoc2.hochschild import cohomology_dims
from assoc2.moduli import standard_codifferential


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=6)
    args = ap.parse_args()
    header = "     " + " ".join(f"H^{n:<2}" for n in range(args.max_degree + 1))
    print(header)
    start = time.perf_counter()
    for k in range(1, 7):
        dims = cohomology_dims(standard_codifferential(k), args.max_degree)
        print(f"d{k}   " + " ".join(f"{x:<4}" for x in dims) + f"  {standard_codifferential(k)}")
    print(f"({time.perf_counter() - start:.2f}s)")


if __name__ == "__main__":
    main()
