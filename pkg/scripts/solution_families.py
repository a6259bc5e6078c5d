"""Check the eight solution families of [d, d] = 0 and list the classes
each one hits on a small grid, next to the claimed correspondence.

    python3 scripts/solution_families.py
"""
from assoc2.deformation import solution_families, solution_family_census, unconstrained_family, verify_solution_family


def main():
    for s in solution_families():
        observed = solution_family_census(s)
        print(
            f"family {s.index}: vanishes={verify_solution_family(s)} claimed={list(s.claimed_classes)} "
            f"observed={sorted(observed)} free={s.free_variables}"
        )
    print(f"unconstrained: vanishes={verify_solution_family(unconstrained_family())}")


if __name__ == "__main__":
    main()
