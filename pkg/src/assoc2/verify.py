"""Named reproduction checks, one per acceptance item, plus informational
findings that are reported but do not gate the exit status."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .census import enumerate_finite_field, standard_orbits
from .coderivation import (
    ODD_PLANE,
    Coderivation,
    bracket,
    cochain_basis,
    compose,
    corestriction_of_composite,
    decleene_cocycle,
    phi,
)
from .deformation import (
    d2_family,
    d5_family,
    d6_family,
    d6_printed_family,
    jump_census,
    obstruction,
    solution_families,
    solution_family_census,
    unconstrained_family,
    verify_solution_family,
)
from .hochschild import (
    cocycles_reach_component_class,
    cohomology,
    cohomology_dims,
    coboundary,
    extend_to_cocycle,
    is_coboundary,
    is_cocycle,
    project,
    verify_d_squared,
)
from .moduli import AlgebraClass, apply_automorphism, classify, det2, standard_codifferential, standard_table

TABLE_1 = {
    1: [2, 0, 0, 0, 0],
    2: [2, 1, 1, 1, 1],
    3: [0, 0, 0, 0, 0],
    4: [0, 0, 0, 0, 0],
    5: [2, 1, 1, 1, 1],
    6: [2, 2, 2, 2, 2],
}
CLOSED_FORM_TAIL = {1: 0, 2: 1, 3: 0, 4: 0, 5: 1, 6: 2}

#: Census numbers frozen from the first enumeration run.
GOLDEN_CENSUS = {
    2: {"associative_count": 28, "orbit_count": 8},
    3: {"associative_count": 121, "orbit_count": 8},
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    gating: bool = True

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "gating": self.gating, "detail": self.detail}


def check_codifferentials() -> CheckResult:
    sq = {f"d{k}": str(bracket(standard_codifferential(k), standard_codifferential(k))) for k in range(1, 7)}
    return CheckResult("codifferentials", all(v == "0" for v in sq.values()), {"brackets": sq})


def check_table1(max_degree: int = 6) -> CheckResult:
    observed = {f"d{k}": cohomology_dims(standard_codifferential(k), max_degree) for k in range(1, 7)}
    expected = {f"d{k}": TABLE_1[k] + [CLOSED_FORM_TAIL[k]] * (max_degree - 4) for k in range(1, 7)}
    expected = {k: v[: max_degree + 1] for k, v in expected.items()}
    return CheckResult("table1", observed == expected, {"observed": observed, "expected": expected})


def check_representatives(max_degree: int = 6) -> CheckResult:
    d2, d6 = standard_codifferential(2), standard_codifferential(6)
    detail: dict = {"d2": {}, "d6": {}}
    ok = True
    rep = cohomology(d2, max_degree)
    for n in range(1, max_degree + 1):
        f = phi((1,) * n, 1)
        good = rep[n].dim == 1 and is_cocycle(d2, f) and is_coboundary(d2, f) is None
        detail["d2"][n] = good
        ok &= good
    for n in range(max_degree + 1):
        ch1, ch2 = decleene_cocycle(n, 1), decleene_cocycle(n, 2)
        ch1_ok = is_cocycle(d6, ch1) and is_coboundary(d6, ch1) is None
        ch2_d2_cocycle = project(coboundary(d6, ch2), 2).is_zero()
        extends = extend_to_cocycle(d6, ch2, 1) is not None
        predicted = cocycles_reach_component_class(d6, n, 2)
        detail["d6"][n] = {
            "Ch1_nontrivial_cocycle": ch1_ok,
            "Ch2_component_cocycle": ch2_d2_cocycle,
            "Ch2_extends": extends,
            "extension_predicted": predicted,
        }
        ok &= ch1_ok and ch2_d2_cocycle and extends == predicted
    return CheckResult("representatives", ok, detail)


def check_d_squared(max_degree: int = 5) -> CheckResult:
    detail = {
        f"d{k}": all(verify_d_squared(standard_codifferential(k), n) for n in range(max_degree + 1)) for k in range(1, 7)
    }
    return CheckResult("d_squared", all(detail.values()), detail)


def check_oracle_equivalence(max_len: int = 3) -> CheckResult:
    start = time.perf_counter()
    basis = [b for n in range(max_len + 1) for b in cochain_basis(n)]
    mismatches = []
    for a in basis:
        fa = Coderivation(ODD_PLANE, {a: 1})
        for b in basis:
            fb = Coderivation(ODD_PLANE, {b: 1})
            n = a.degree + b.degree - 1
            if n < 0:
                continue
            if compose(fa, fb) != corestriction_of_composite(fa, fb, n):
                mismatches.append(f"{a} o {b}")
    elapsed = time.perf_counter() - start
    return CheckResult(
        "oracle_equivalence",
        not mismatches and elapsed < 1.0,
        {"pairs": len(basis) ** 2, "mismatches": mismatches[:10], "seconds": round(elapsed, 3)},
    )


def check_solution_families() -> CheckResult:
    detail = {f"family{s.index}": verify_solution_family(s) for s in solution_families()}
    detail["unconstrained_vanishes"] = verify_solution_family(unconstrained_family())
    ok = all(v for k, v in detail.items() if k != "unconstrained_vanishes") and not detail["unconstrained_vanishes"]
    return CheckResult("solution_families", ok, detail)


def check_versality() -> list[CheckResult]:
    out = []
    for fam in (d2_family(), d5_family(), d6_printed_family()):
        res = obstruction(fam)
        out.append(CheckResult(f"versality_{fam.name}", res.is_zero, {"family": fam.to_json(), "bracket": str(res.bracket_polynomial)}))
    fam = d6_family()
    res = obstruction(fam)
    printed = d6_printed_family()
    swap = printed.directions[0][1] - fam.directions[0][1]
    preimage = is_coboundary(fam.base, swap)
    out.append(
        CheckResult(
            "versality_d6_cohomologous_representatives",
            res.is_zero and preimage is not None,
            {
                "family": fam.to_json(),
                "bracket": str(res.bracket_polynomial),
                "direction_difference": str(swap),
                "difference_is_coboundary_of": None if preimage is None else str(preimage),
            },
            gating=False,
        )
    )
    return out


def check_jumps() -> CheckResult:
    d1 = AlgebraClass.D1
    g2 = jump_census(d2_family(), [{"t": t} for t in ("1", "2", "-1/3", "-2", "1/2")])
    g5 = jump_census(d5_family(), [{"t": t} for t in ("1", "-2", "1/2", "3")])
    g6 = jump_census(d6_family())
    ok2 = all(w.observed.over_closure() == d1 for w in g2.witnesses)
    ok5 = all(w.observed.over_closure() == d1 for w in g5.witnesses)
    targets6 = {t.value for t in g6.targets()}
    ok6 = {"d2", "d5"} <= targets6 and not targets6 & {"d3", "d4"}
    return CheckResult(
        "jump_deformations",
        ok2 and ok5 and ok6,
        {
            "d2": g2.to_json(),
            "d5": g5.to_json(),
            "d6": g6.to_json(),
            "d6_text_discrepancy": (
                "the printed d6 loci name d2 twice with undefined superscripts; observed strata: "
                "d2 on t2 = 0 (t1 != 0), d5 on t1^2 + 4*t2 = 0 (t2 != 0), d1 elsewhere off the origin"
            ),
        },
    )


def _random_invertible(rng: random.Random) -> tuple:
    while True:
        g = tuple(tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(2)) for _ in range(2))
        if det2(g) != 0:
            return g


def check_classifier_invariance(samples: int = 200, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    detail = {}
    ok = True
    for k in range(1, 7):
        m = standard_table(k)
        own = classify(m) == AlgebraClass(f"d{k}")
        constant = all(classify(apply_automorphism(_random_invertible(rng), m)) == classify(m) for _ in range(samples))
        detail[f"d{k}"] = {"own_class": own, "constant_on_conjugates": constant}
        ok &= own and constant
    return CheckResult("classifier_invariance", ok, detail)


def check_census() -> CheckResult:
    detail = {}
    ok = True
    for p in (2, 3):
        start = time.perf_counter()
        c = enumerate_finite_field(p)
        elapsed = time.perf_counter() - start
        constant = all(len(o.classes_seen) == 1 for o in c.orbits)
        golden = GOLDEN_CENSUS[p] == {"associative_count": c.associative_count, "orbit_count": c.orbit_count}
        entry = {
            "associative_count": c.associative_count,
            "orbit_count": c.orbit_count,
            "class_counts": c.class_counts(),
            "seconds": round(elapsed, 3),
            "class_constant_on_orbits": constant,
            "matches_golden": golden,
        }
        item_ok = constant and golden and elapsed < 10
        if p == 3:
            orbits = standard_orbits(c)
            entry["standard_orbits"] = orbits
            item_ok &= len(set(orbits.values())) == 6
        detail[f"F{p}"] = entry
        ok &= item_ok
    return CheckResult("finite_field_census", ok, detail)


def check_basis_count(max_degree: int = 8) -> CheckResult:
    counts = {n: len(cochain_basis(n)) for n in range(max_degree + 1)}
    return CheckResult("basis_count", all(c == 2 ** (n + 1) for n, c in counts.items()), {"counts": counts})


def solution_family_correspondences() -> CheckResult:
    detail = {}
    for s in solution_families():
        observed = solution_family_census(s)
        detail[f"family{s.index}"] = {
            "claimed": list(s.claimed_classes),
            "observed": sorted(observed),
            "observed_over_closure": sorted({AlgebraClass(c).over_closure().value for c in observed} - {"zero"}),
        }
    return CheckResult("solution_family_correspondences", True, detail, gating=False)


def _guarded(name: str, fn, *args) -> list[CheckResult]:
    """Run a check; an exception inside it is reported as a failed item."""
    try:
        out = fn(*args)
    except Exception as exc:  # noqa: BLE001 - any crash is a verification failure
        return [CheckResult(name, False, {"error": f"{type(exc).__name__}: {exc}"})]
    return out if isinstance(out, list) else [out]


def run_all(max_degree: int = 6) -> list[CheckResult]:
    plan = [
        ("codifferentials", check_codifferentials),
        ("table1", check_table1, max_degree),
        ("representatives", check_representatives, max_degree),
        ("d_squared", check_d_squared, min(max_degree, 5)),
        ("oracle_equivalence", check_oracle_equivalence),
        ("solution_families", check_solution_families),
        ("versality", check_versality),
        ("jump_deformations", check_jumps),
        ("classifier_invariance", check_classifier_invariance),
        ("finite_field_census", check_census),
        ("basis_count", check_basis_count),
        ("solution_family_correspondences", solution_family_correspondences),
    ]
    results = []
    for name, fn, *args in plan:
        results += _guarded(name, fn, *args)
    return results
