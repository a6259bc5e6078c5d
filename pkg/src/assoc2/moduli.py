"""Two-dimensional associative algebras: multiplication tables, the six
standard codifferentials, structural invariants and classification.

Basis conventions: V = <x, theta> with index 1 = x and index 2 = theta, and
the parity-reversed space W = <w_1, w_2> uses the same indices.  A table
``c[i][j][k]`` (the coefficient of b_k in b_i * b_j) corresponds to the
codifferential ``sum c_{ij}^k psi^{ij}_k``; with this labelling every row of
the standard table pairs with its standard codifferential.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, asdict
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .coderivation import ODD_PLANE, BasisCoderivation, Coderivation, bracket
from .scalar import Fp, Poly, as_fraction
from .syntax import parse_coderivation

BASIS_NAMES = ("x", "theta")

#: Fixed order of the 8 structure constants c_{ij}^k.
CONSTANT_ORDER = tuple((i, j, k) for i in (1, 2) for j in (1, 2) for k in (1, 2))


class NonAssociativeError(ValueError):
    def __init__(self, triple):
        self.triple = triple
        names = ", ".join(BASIS_NAMES[i - 1] for i in triple)
        super().__init__(f"not associative: (ab)c != a(bc) for (a, b, c) = ({names})")


class SingularAutomorphismError(ValueError):
    pass


class AlgebraClass(str, Enum):
    D1 = "d1"
    D2 = "d2"
    D3 = "d3"
    D4 = "d4"
    D5 = "d5"
    D6 = "d6"
    ZERO = "zero"
    QUADRATIC_FIELD_EXTENSION = "quadratic_field_extension"
    INCONSISTENT = "inconsistent"

    def over_closure(self) -> "AlgebraClass":
        """Class after extending scalars to the algebraic closure."""
        return AlgebraClass.D1 if self is AlgebraClass.QUADRATIC_FIELD_EXTENSION else self

    def __str__(self):
        return self.value


STANDARD_CODIFFERENTIALS = {
    1: "psi[22->2] + psi[11->1]",
    2: "psi[22->2]",
    3: "psi[22->2] + psi[12->1]",
    4: "psi[22->2] + psi[21->1]",
    5: "psi[22->2] + psi[12->1] + psi[21->1]",
    6: "psi[22->1]",
}


def standard_codifferential(k: int) -> Coderivation:
    if k not in STANDARD_CODIFFERENTIALS:
        raise ValueError(f"standard codifferentials are d1..d6, got d{k}")
    return parse_coderivation(STANDARD_CODIFFERENTIALS[k])


@dataclass(frozen=True)
class MultiplicationTable:
    """Structure constants in :data:`CONSTANT_ORDER` over Fraction or Fp."""

    constants: tuple

    def __post_init__(self):
        if len(self.constants) != 8:
            raise ValueError(f"a table has 8 structure constants, got {len(self.constants)}")

    @classmethod
    def from_constants(cls, values: Iterable, p: int | None = None) -> "MultiplicationTable":
        values = list(values)
        if p is None:
            return cls(tuple(as_fraction(v) for v in values))
        return cls(tuple(v if isinstance(v, Fp) else Fp(int(v), p) for v in values))

    @classmethod
    def from_products(cls, products: dict, p: int | None = None) -> "MultiplicationTable":
        """``products[(i, j)] = (coef of x, coef of theta)``; missing products are 0."""
        vals = []
        for i, j, k in CONSTANT_ORDER:
            vals.append(products.get((i, j), (0, 0))[k - 1])
        return cls.from_constants(vals, p)

    @property
    def field_char(self) -> int:
        first = self.constants[0]
        return first.p if isinstance(first, Fp) else 0

    def zero_element(self):
        p = self.field_char
        return Fp(0, p) if p else Fraction(0)

    def one_element(self):
        p = self.field_char
        return Fp(1, p) if p else Fraction(1)

    def c(self, i: int, j: int, k: int):
        return self.constants[(i - 1) * 4 + (j - 1) * 2 + (k - 1)]

    def basis_product(self, i: int, j: int) -> tuple:
        return (self.c(i, j, 1), self.c(i, j, 2))

    def mul(self, u: Sequence, v: Sequence) -> tuple:
        out = [self.zero_element(), self.zero_element()]
        for i in (1, 2):
            if u[i - 1] == 0:
                continue
            for j in (1, 2):
                if v[j - 1] == 0:
                    continue
                s = u[i - 1] * v[j - 1]
                for k in (1, 2):
                    out[k - 1] = out[k - 1] + s * self.c(i, j, k)
        return tuple(out)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.constants)

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.constants]

    def describe(self) -> str:
        parts = []
        for i, j in itertools.product((1, 2), repeat=2):
            a, b = self.basis_product(i, j)
            lhs = BASIS_NAMES[i - 1] + BASIS_NAMES[j - 1] if i != j else BASIS_NAMES[i - 1] + "^2"
            parts.append(f"{lhs}={_vec_str(a, b)}")
        return ", ".join(parts)


def _vec_str(a, b) -> str:
    terms = []
    for c, name in ((a, "x"), (b, "theta")):
        if c == 0:
            continue
        if c == 1:
            terms.append(name)
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"{c}*{name}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


#: The standard multiplication tables, rows x^2, x theta, theta x, theta^2.
STANDARD_TABLE_PRODUCTS = {
    1: {(1, 1): (1, 0), (2, 2): (0, 1)},
    2: {(2, 2): (0, 1)},
    3: {(1, 2): (1, 0), (2, 2): (0, 1)},
    4: {(2, 1): (1, 0), (2, 2): (0, 1)},
    5: {(1, 2): (1, 0), (2, 1): (1, 0), (2, 2): (0, 1)},
    6: {(2, 2): (1, 0)},
}


def standard_table(k: int, p: int | None = None) -> MultiplicationTable:
    return MultiplicationTable.from_products(STANDARD_TABLE_PRODUCTS[k], p)


def zero_table(p: int | None = None) -> MultiplicationTable:
    return MultiplicationTable.from_constants([0] * 8, p)


def table_to_codifferential(m: MultiplicationTable) -> Coderivation:
    if m.field_char:
        raise ValueError("codifferentials are built from rational tables")
    return Coderivation(ODD_PLANE, {BasisCoderivation((i, j), k): m.c(i, j, k) for i, j, k in CONSTANT_ORDER})


def codifferential_to_table(d: Coderivation) -> MultiplicationTable:
    if d.space != ODD_PLANE:
        raise ValueError("expected a coderivation on the 0|2 space")
    if d.degrees() - {2}:
        raise ValueError(f"{d} has terms outside degree 2")
    vals = []
    for i, j, k in CONSTANT_ORDER:
        c = d.coefficient(BasisCoderivation((i, j), k))
        if isinstance(c, Poly):
            c = c.constant_value()
        vals.append(as_fraction(c))
    return MultiplicationTable(tuple(vals))


def associativity_defect(m: MultiplicationTable):
    """First basis triple (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k), or None."""
    e = _unit_vectors(m)
    for i, j, k in itertools.product((1, 2), repeat=3):
        lhs = m.mul(m.mul(e[i], e[j]), e[k])
        rhs = m.mul(e[i], m.mul(e[j], e[k]))
        if lhs != rhs:
            return (i, j, k)
    return None


def is_associative(m: MultiplicationTable) -> bool:
    return associativity_defect(m) is None


def _require_associative(m: MultiplicationTable):
    triple = associativity_defect(m)
    if triple is not None:
        raise NonAssociativeError(triple)


def _unit_vectors(m: MultiplicationTable) -> dict:
    z, o = m.zero_element(), m.one_element()
    return {1: (o, z), 2: (z, o)}


# automorphisms ------------------------------------------------------------

Matrix2 = tuple  # ((g11, g12), (g21, g22)); column j is g(b_j)


def det2(g: Matrix2):
    return g[0][0] * g[1][1] - g[0][1] * g[1][0]


def inv2(g: Matrix2) -> Matrix2:
    det = det2(g)
    if det == 0:
        raise SingularAutomorphismError(f"matrix {g} is singular")
    return ((g[1][1] / det, -g[0][1] / det), (-g[1][0] / det, g[0][0] / det))


def matmul2(a: Matrix2, b: Matrix2) -> Matrix2:
    return tuple(tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2))


def apply_automorphism(g: Matrix2, m: MultiplicationTable) -> MultiplicationTable:
    """Table of g^*(m) = g^{-1} o m o (g x g) in the same basis."""
    gi = inv2(g)
    zero = m.zero_element()
    vals = []
    for i, j, l in CONSTANT_ORDER:
        s = zero
        for a, b, k in CONSTANT_ORDER:
            c = m.c(a, b, k)
            if c == 0:
                continue
            s = s + g[a - 1][i - 1] * g[b - 1][j - 1] * c * gi[l - 1][k - 1]
        vals.append(s)
    return MultiplicationTable(tuple(vals))


SWAP = ((0, 1), (1, 0))


# invariants ---------------------------------------------------------------


@dataclass(frozen=True)
class StructuralInvariants:
    is_commutative: bool
    square_dim: int
    nilpotent: bool
    has_two_sided_identity: bool
    has_left_identity: bool
    has_right_identity: bool
    unital_discriminant_zero: bool | None

    def to_json(self) -> dict:
        return asdict(self)


def _identity_solution(m: MultiplicationTable, side: str):
    """Solve for e with e*b_j = b_j (left), b_j*e = b_j (right) or both."""
    rows = []
    z, o = m.zero_element(), m.one_element()
    sides = ("left", "right") if side == "both" else (side,)
    for s in sides:
        for j in (1, 2):
            for k in (1, 2):
                if s == "left":
                    row = {i - 1: m.c(i, j, k) for i in (1, 2) if m.c(i, j, k) != 0}
                else:
                    row = {i - 1: m.c(j, i, k) for i in (1, 2) if m.c(j, i, k) != 0}
                rows.append((row, o if j == k else z))
    x = linalg.solve([r for r, _ in rows], 2, {n: v for n, (_, v) in enumerate(rows) if v != 0})
    if x is None:
        return None
    return (x.get(0, z), x.get(1, z))


def _span_dim(vectors: list) -> int:
    return linalg.rank([{k: v for k, v in enumerate(vec) if v != 0} for vec in vectors], 2)


def _unital_quadratic(m: MultiplicationTable, e: tuple):
    """For a unital table, (alpha, beta) with y^2 = alpha*y + beta*e, y non-scalar."""
    z, o = m.zero_element(), m.one_element()
    y = (o, z) if _span_dim([e, (o, z)]) == 2 else (z, o)
    y2 = m.mul(y, y)
    # columns y and e; solve a*y + b*e = y2
    rows = [{0: y[0], 1: e[0]}, {0: y[1], 1: e[1]}]
    rows = [{k: v for k, v in r.items() if v != 0} for r in rows]
    x = linalg.solve(rows, 2, {n: v for n, v in enumerate(y2) if v != 0})
    assert x is not None, "y and e span the algebra"
    return x.get(0, z), x.get(1, z)


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


def _quadratic_kind(m: MultiplicationTable, alpha, beta) -> str:
    """'split', 'double' or 'irreducible' for t^2 - alpha t - beta over the base field."""
    p = m.field_char
    if p:
        roots = [r for r in range(p) if Fp(r * r, p) - alpha * r - beta == 0]
        return {0: "irreducible", 1: "double", 2: "split"}[len(roots)]
    disc = alpha * alpha + 4 * beta
    if disc == 0:
        return "double"
    return "split" if _is_rational_square(disc) else "irreducible"


def invariants(m: MultiplicationTable) -> StructuralInvariants:
    _require_associative(m)
    e = _unit_vectors(m)
    products = [m.basis_product(i, j) for i, j in itertools.product((1, 2), repeat=2)]
    cubes = [m.mul(m.basis_product(i, j), e[k]) for i, j, k in itertools.product((1, 2), repeat=3)]
    two = _identity_solution(m, "both")
    disc_zero = None
    if two is not None:
        disc_zero = _quadratic_kind(m, *_unital_quadratic(m, two)) == "double"
    return StructuralInvariants(
        is_commutative=all(m.c(i, j, k) == m.c(j, i, k) for i, j, k in CONSTANT_ORDER),
        square_dim=_span_dim(products),
        nilpotent=_span_dim(cubes) == 0,
        has_two_sided_identity=two is not None,
        has_left_identity=_identity_solution(m, "left") is not None,
        has_right_identity=_identity_solution(m, "right") is not None,
        unital_discriminant_zero=disc_zero,
    )


def classify(m: MultiplicationTable) -> AlgebraClass:
    inv = invariants(m)
    if m.is_zero():
        return AlgebraClass.ZERO
    if inv.nilpotent:
        return AlgebraClass.D6
    if inv.has_two_sided_identity:
        e = _identity_solution(m, "both")
        kind = _quadratic_kind(m, *_unital_quadratic(m, e))
        return {
            "double": AlgebraClass.D5,
            "split": AlgebraClass.D1,
            "irreducible": AlgebraClass.QUADRATIC_FIELD_EXTENSION,
        }[kind]
    if inv.has_right_identity and not inv.has_left_identity:
        return AlgebraClass.D3
    if inv.has_left_identity and not inv.has_right_identity:
        return AlgebraClass.D4
    if inv.is_commutative and inv.square_dim == 1:
        return AlgebraClass.D2
    return AlgebraClass.INCONSISTENT


def classify_codifferential(d: Coderivation) -> AlgebraClass:
    if not bracket(d, d).is_zero():
        raise NonAssociativeError(associativity_defect(codifferential_to_table(d)))
    return classify(codifferential_to_table(d))
