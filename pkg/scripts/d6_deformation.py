"""Compare the printed two-parameter d6 family with the cohomologous one.

Prints both self-brackets, the coboundary relating the t1 directions, and
the classified strata of the unobstructed family on a rational grid.

    python3 scripts/d6_deformation.py --values -2 -1 -1/2 0 1/2 1 2
"""
import argparse

from assoc2.deformation import d6_family, d6_printed_family, jump_census, obstruction
from assoc2.hochschild import is_coboundary
from assoc2.syntax import parse_rational


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--values", nargs="+", default=["-2", "-1", "-1/2", "0", "1/2", "1", "2"])
    args = ap.parse_args()
    values = [parse_rational(v) for v in args.values]

    printed, fixed = d6_printed_family(), d6_family()
    for fam in (printed, fixed):
        print(f"{fam.name:<11} d_t = {fam.total()}")
        print(f"{'':<11} [d_t, d_t] = {obstruction(fam).bracket_polynomial}")
    diff = printed.directions[0][1] - fixed.directions[0][1]
    print(f"difference of t1 directions {diff} = D({is_coboundary(fixed.base, diff)})")

    grid = [{"t1": a, "t2": b} for a in values for b in values]
    graph = jump_census(fixed, grid)
    print("edges:", sorted(graph.edge_set()))
    for cls, pts in sorted(graph.strata().items()):
        print(f"  {cls:<26} {len(pts):>3} points, e.g. {[{k: str(v) for k, v in p.items()} for p in pts[:3]]}")


if __name__ == "__main__":
    main()
