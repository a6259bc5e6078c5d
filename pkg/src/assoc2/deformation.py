"""Deformation families d_t = d + sum_i t_i psi_i with polynomial coefficients.

Obstructions are computed exactly as [d_t, d_t] over the polynomial ring, so
a vanishing obstruction means every specialization is a codifferential.
Jump censuses classify specializations at rational points.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .coderivation import ODD_PLANE, BasisCoderivation, Coderivation, bracket
from .hochschild import check_codifferential, cohomology, is_cocycle
from .moduli import AlgebraClass, NonAssociativeError, classify_codifferential, standard_codifferential
from .scalar import Poly, UnassignedVariableError, as_fraction, eval_coefficient
from .syntax import parse_coderivation

DEFAULT_GRID_VALUES = tuple(Fraction(v) for v in ("-2", "-1", "-1/2", "0", "1/2", "1", "2"))


class NonVersalFamilyError(ValueError):
    pass


class InvalidDirectionError(ValueError):
    pass


def infinitesimal_basis(d: Coderivation) -> list[Coderivation]:
    """Representatives of the odd classes in H^2(d): the deformation directions."""
    reps = cohomology(d, max_degree=2)[2].representatives
    return [r for r in reps if r.parity() == 1]


@dataclass
class DeformationFamily:
    base: Coderivation
    directions: list[tuple[str, Coderivation]]
    name: str = ""

    def __post_init__(self):
        check_codifferential(self.base)
        names = [n for n, _ in self.directions]
        if len(set(names)) != len(names):
            raise InvalidDirectionError(f"duplicate parameter names {names}")
        for pname, psi in self.directions:
            if psi.is_zero():
                raise InvalidDirectionError(f"direction {pname} is zero")
            if psi.degrees() != {2} or psi.parity() != 1:
                raise InvalidDirectionError(f"direction {pname} = {psi} is not an odd degree-2 coderivation")
            if not is_cocycle(self.base, psi):
                raise InvalidDirectionError(f"direction {pname} = {psi} is not a cocycle for {self.base}")

    @property
    def parameters(self) -> list[str]:
        return [n for n, _ in self.directions]

    def total(self) -> Coderivation:
        """d_t as a single coderivation with polynomial coefficients."""
        out = self.base.map_coefficients(Poly.coerce)
        for pname, psi in self.directions:
            out = out + Poly.var(pname) * psi
        return out

    def to_json(self) -> dict:
        return {"name": self.name, "base": str(self.base), "directions": {n: str(p) for n, p in self.directions}}


@dataclass
class ObstructionResult:
    bracket_polynomial: Coderivation
    is_zero: bool

    def to_json(self) -> dict:
        return {"is_zero": self.is_zero, "bracket": str(self.bracket_polynomial)}


def obstruction(f: DeformationFamily) -> ObstructionResult:
    sq = bracket(f.total(), f.total())
    return ObstructionResult(sq, sq.is_zero())


def specialize(f: DeformationFamily, point: Mapping[str, object]) -> Coderivation:
    missing = [p for p in f.parameters if p not in point]
    if missing:
        raise UnassignedVariableError(missing[0])
    vals = {k: as_fraction(v) for k, v in point.items()}
    return f.total().map_coefficients(lambda c: eval_coefficient(c, vals))


def default_grid(parameters: Sequence[str], values: Iterable = DEFAULT_GRID_VALUES) -> list[dict[str, Fraction]]:
    values = [as_fraction(v) for v in values]
    return [dict(zip(parameters, combo)) for combo in itertools.product(values, repeat=len(parameters))]


@dataclass
class Witness:
    point: dict
    observed: AlgebraClass

    def to_json(self) -> dict:
        return {"point": {k: str(v) for k, v in self.point.items()}, "class": self.observed.value}


@dataclass
class DeformationGraph:
    """Observed jumps; edges use classes over the algebraic closure."""

    base_class: AlgebraClass
    nodes: list[AlgebraClass]
    edges: dict[tuple[AlgebraClass, AlgebraClass], list[dict]]
    witnesses: list[Witness] = field(default_factory=list)

    def edge_set(self) -> set[tuple[str, str]]:
        return {(a.value, b.value) for a, b in self.edges}

    def targets(self) -> set[AlgebraClass]:
        return {b for _, b in self.edges}

    def strata(self) -> dict[str, list[dict]]:
        """Sample points grouped by the raw observed class."""
        out: dict[str, list[dict]] = {}
        for w in self.witnesses:
            out.setdefault(w.observed.value, []).append(w.point)
        return out

    def to_json(self) -> dict:
        return {
            "base": self.base_class.value,
            "nodes": [n.value for n in self.nodes],
            "edges": [
                {"source": a.value, "target": b.value, "witnesses": [{k: str(v) for k, v in pt.items()} for pt in pts]}
                for (a, b), pts in sorted(self.edges.items(), key=lambda e: (e[0][0].value, e[0][1].value))
            ],
            "strata": {
                cls: [{k: str(v) for k, v in pt.items()} for pt in pts] for cls, pts in sorted(self.strata().items())
            },
        }


def jump_census(f: DeformationFamily, points: Iterable[Mapping[str, object]] | None = None) -> DeformationGraph:
    if not obstruction(f).is_zero:
        raise NonVersalFamilyError(f"[d_t, d_t] does not vanish for family {f.name or f.base}")
    if points is None:
        points = default_grid(f.parameters)
    base_cls = classify_codifferential(f.base).over_closure()
    edges: dict = {}
    witnesses = []
    for pt in points:
        d = specialize(f, pt)
        try:
            raw = classify_codifferential(d)
        except NonAssociativeError as exc:
            raise NonAssociativeError(exc.triple) from None
        pt = {k: as_fraction(v) for k, v in pt.items()}
        witnesses.append(Witness(pt, raw))
        cls = raw.over_closure()
        if cls != base_cls:
            edges.setdefault((base_cls, cls), []).append(pt)
    nodes = sorted({base_cls} | {b for _, b in edges}, key=lambda c: c.value)
    return DeformationGraph(base_cls, nodes, edges, witnesses)


def merge_graphs(graphs: Iterable[DeformationGraph]) -> DeformationGraph:
    graphs = list(graphs)
    edges: dict = {}
    nodes = set()
    witnesses = []
    for g in graphs:
        nodes |= set(g.nodes)
        witnesses += g.witnesses
        for e, pts in g.edges.items():
            edges.setdefault(e, []).extend(pts)
    base = graphs[0].base_class if graphs else AlgebraClass.ZERO
    return DeformationGraph(base, sorted(nodes, key=lambda c: c.value), edges, witnesses)


# built-in families -----------------------------------------------------------


def _family(base: int, directions: Sequence[tuple[str, str]], name: str) -> DeformationFamily:
    return DeformationFamily(
        standard_codifferential(base), [(p, parse_coderivation(s)) for p, s in directions], name=name
    )


def d2_family() -> DeformationFamily:
    return _family(2, [("t", "psi[11->1]")], "d2")


def d5_family() -> DeformationFamily:
    return _family(5, [("t", "psi[11->2]")], "d5")


def d6_printed_family() -> DeformationFamily:
    """The two-parameter d6 family with the directions printed in the literature."""
    return _family(6, [("t1", "psi[21->1] + psi[12->1]"), ("t2", "psi[21->2] + psi[12->2] + psi[11->1]")], "d6-printed")


def d6_family() -> DeformationFamily:
    """d6 family whose t1 direction is the cohomologous representative psi[22->2].

    psi[22->2] and psi[21->1] + psi[12->1] differ by a coboundary, and with
    this choice [d_t, d_t] vanishes identically.
    """
    return _family(6, [("t1", "psi[22->2]"), ("t2", "psi[21->2] + psi[12->2] + psi[11->1]")], "d6")


def family_from_basis(base: int) -> DeformationFamily | None:
    """Family spanned by :func:`infinitesimal_basis`; None for rigid algebras."""
    d = standard_codifferential(base)
    reps = infinitesimal_basis(d)
    if not reps:
        return None
    names = ["t"] if len(reps) == 1 else [f"t{k + 1}" for k in range(len(reps))]
    return DeformationFamily(d, list(zip(names, reps)), name=f"d{base}-computed")


BUILTIN_FAMILIES = {
    "d2": d2_family,
    "d5": d5_family,
    "d6": d6_family,
    "d6-printed": d6_printed_family,
}


def family_from_json(data: Mapping) -> tuple[DeformationFamily, list[dict] | None]:
    """Parse ``{"base": str, "directions": {name: str}, "grid": {name: [str]}}``."""
    try:
        base = parse_coderivation(data["base"])
        directions = [(str(n), parse_coderivation(s)) for n, s in data["directions"].items()]
    except KeyError as exc:
        raise ValueError(f"family definition is missing {exc}") from None
    fam = DeformationFamily(base, directions, name=str(data.get("name", "")))
    grid = None
    if data.get("grid"):
        g = data["grid"]
        axes = [[as_fraction(v) for v in g.get(p, DEFAULT_GRID_VALUES)] for p in fam.parameters]
        grid = [dict(zip(fam.parameters, combo)) for combo in itertools.product(*axes)]
    return fam, grid


# the eight solution families of [d, d] = 0 ------------------------------------

#: Column order of the generic matrix: inputs 11, 12, 21, 22.
GENERIC_COLUMNS = ((1, 1), (1, 2), (2, 1), (2, 2))
GENERIC_ENTRIES = tuple(f"a{i}{j}" for i in (1, 2) for j in range(1, 5))


def generic_entry_basis(entry: str) -> BasisCoderivation:
    i, j = int(entry[1]), int(entry[2])
    return BasisCoderivation(GENERIC_COLUMNS[j - 1], i)


def generic_coderivation(assignments: Mapping[str, Poly] | None = None) -> Coderivation:
    """Sum of a_{ij} psi^{col j}_i; unassigned entries stay free variables."""
    assignments = assignments or {}
    terms = {}
    for e in GENERIC_ENTRIES:
        terms[generic_entry_basis(e)] = Poly.coerce(assignments[e]) if e in assignments else Poly.var(e)
    return Coderivation(ODD_PLANE, terms)


@dataclass
class SolutionFamily:
    """A solution family of [d, d] = 0, already multiplied by ``denominator``.

    ``assignments`` maps each of the 8 entries to a polynomial in the free
    variables; ``nonvanishing`` lists variables that must be nonzero.
    """

    index: int
    assignments: dict[str, Poly]
    nonvanishing: tuple[str, ...] = ()
    denominator: Poly = field(default_factory=lambda: Poly.const(1))
    claimed_classes: tuple[str, ...] = ()

    def __post_init__(self):
        missing = set(GENERIC_ENTRIES) - set(self.assignments)
        if missing:
            raise ValueError(f"family {self.index} leaves entries {sorted(missing)} unassigned")

    @property
    def free_variables(self) -> list[str]:
        out: set[str] = set()
        for p in self.assignments.values():
            out |= p.variables()
        return sorted(out)

    def coderivation(self) -> Coderivation:
        return generic_coderivation(self.assignments)


def verify_solution_family(s: SolutionFamily) -> bool:
    """Exact vanishing of [d, d] for the denominator-cleared family."""
    if set(s.assignments) != set(GENERIC_ENTRIES):
        raise ValueError(f"malformed family {s.index}")
    return bracket(s.coderivation(), s.coderivation()).is_zero()


def sample_solution_family(s: SolutionFamily, assignment: Mapping[str, object]) -> AlgebraClass:
    vals = {k: as_fraction(v) for k, v in assignment.items()}
    for v in s.nonvanishing:
        if vals.get(v, 0) == 0:
            raise ValueError(f"family {s.index} requires {v} != 0")
    d = s.coderivation().map_coefficients(lambda c: eval_coefficient(c, vals))
    return classify_codifferential(d)


def _v(name: str) -> Poly:
    return Poly.var(name)


def _build(index: int, fixed: Mapping[str, Poly], claimed, nonvanishing=(), denominator: Poly | None = None) -> SolutionFamily:
    den = denominator if denominator is not None else Poly.const(1)
    assignments = {}
    for e in GENERIC_ENTRIES:
        assignments[e] = fixed[e] if e in fixed else den * _v(e)
    return SolutionFamily(index, assignments, tuple(nonvanishing), den, tuple(claimed))


def solution_families() -> list[SolutionFamily]:
    """The eight families of odd degree-2 codifferentials, denominators cleared.

    Families 7 and 8 are scaled by a23 and a14 respectively; scaling a
    codifferential by a nonzero constant gives an isomorphic algebra.
    """
    Z = Poly()
    a = _v
    fams = [
        _build(1, {"a12": Z, "a23": Z, "a21": Z, "a14": Z, "a11": Z, "a22": Z, "a13": a("a24")}, ["d4"]),
        _build(2, {"a13": Z, "a23": Z, "a21": Z, "a14": Z, "a11": Z, "a22": Z, "a12": a("a24")}, ["d3"]),
        _build(3, {"a12": Z, "a13": Z, "a23": Z, "a21": Z, "a14": Z, "a22": Z, "a11": a("a24")}, ["d1"]),
        _build(4, {"a23": Z, "a14": Z, "a22": Z, "a13": a("a12"), "a24": a("a12")}, ["d1", "d2", "d6"]),
        _build(5, {"a13": Z, "a21": Z, "a14": Z, "a22": Z, "a24": a("a12"), "a11": a("a23")}, ["d3"]),
        _build(6, {"a12": Z, "a23": Z, "a21": Z, "a14": Z, "a24": a("a13"), "a11": a("a22")}, ["d4"]),
    ]
    d7 = a("a23")
    fams.append(
        _build(
            7,
            {
                "a12": Z,
                "a13": Z,
                "a14": Z,
                "a22": d7 * a("a23"),
                "a11": -(a("a21") * a("a24") - a("a23") ** 2),
            },
            ["d1", "d2", "d6"],
            nonvanishing=("a23",),
            denominator=d7,
        )
    )
    d8 = a("a14")
    fams.append(
        _build(
            8,
            {
                "a22": d8 * a("a23"),
                "a12": d8 * a("a13"),
                "a21": a("a13") * a("a23"),
                "a11": a("a13") ** 2 - a("a13") * a("a24") + a("a14") * a("a23"),
            },
            ["d1", "d2", "d5", "d6"],
            nonvanishing=("a14",),
            denominator=d8,
        )
    )
    return fams


def unconstrained_family() -> SolutionFamily:
    return SolutionFamily(0, {e: _v(e) for e in GENERIC_ENTRIES})


def solution_family_census(
    s: SolutionFamily, values: Iterable = (Fraction(-1), Fraction(0), Fraction(1), Fraction(2))
) -> dict[str, list[dict]]:
    """Classify the family at every grid point of its free variables.

    Returns raw class name -> list of witness assignments.
    """
    free = s.free_variables
    out: dict[str, list[dict]] = {}
    for combo in itertools.product([as_fraction(v) for v in values], repeat=len(free)):
        pt = dict(zip(free, combo))
        if any(pt.get(v, 0) == 0 for v in s.nonvanishing):
            continue
        cls = sample_solution_family(s, pt)
        out.setdefault(cls.value, []).append(pt)
    return dict(sorted(out.items()))
