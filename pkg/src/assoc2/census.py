"""Brute-force census of 2-dimensional associative algebras over F_p.

Tables are enumerated as integer 8-tuples in lexicographic order, filtered by
associativity and split into GL_2(F_p)-orbits.  Orbits are labelled with
:func:`assoc2.moduli.classify`, which gives an independent check that the
classifier is an isomorphism invariant.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .moduli import (
    CONSTANT_ORDER,
    AlgebraClass,
    MultiplicationTable,
    classify,
    invariants,
    standard_table,
)

SUPPORTED_PRIMES = (2, 3, 5)

IntTable = tuple[int, ...]


class UnsupportedPrimeError(ValueError):
    pass


def _idx(i: int, j: int, k: int) -> int:
    return (i - 1) * 4 + (j - 1) * 2 + (k - 1)


def _is_associative_int(t: IntTable, p: int) -> bool:
    # (b_i b_j) b_k = sum_a c_ij^a c_ak^l ; b_i (b_j b_k) = sum_a c_jk^a c_ia^l
    for i in (0, 1):
        for j in (0, 1):
            cij = t[4 * i + 2 * j : 4 * i + 2 * j + 2]
            for k in (0, 1):
                cjk = t[4 * j + 2 * k : 4 * j + 2 * k + 2]
                for l in (0, 1):
                    lhs = cij[0] * t[2 * k + l] + cij[1] * t[4 + 2 * k + l]
                    rhs = cjk[0] * t[4 * i + l] + cjk[1] * t[4 * i + 2 + l]
                    if (lhs - rhs) % p:
                        return False
    return True


def general_linear_group(p: int) -> list[tuple[tuple[tuple[int, int], tuple[int, int]], tuple]]:
    """All invertible 2x2 matrices over F_p with their inverses."""
    out = []
    for a, b, c, d in itertools.product(range(p), repeat=4):
        det = (a * d - b * c) % p
        if det == 0:
            continue
        di = pow(det, p - 2, p)
        g = ((a, b), (c, d))
        gi = ((d * di % p, -b * di % p), (-c * di % p, a * di % p))
        out.append((g, gi))
    return out


def _transform_int(t: IntTable, g, gi, p: int) -> IntTable:
    out = []
    for i, j, l in CONSTANT_ORDER:
        s = 0
        for a, b, k in CONSTANT_ORDER:
            c = t[_idx(a, b, k)]
            if c:
                s += g[a - 1][i - 1] * g[b - 1][j - 1] * c * gi[l - 1][k - 1]
        out.append(s % p)
    return tuple(out)


@dataclass
class Orbit:
    representative: IntTable
    size: int
    algebra_class: AlgebraClass
    invariants: dict
    classes_seen: set = field(default_factory=set)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "representative": list(self.representative),
            "class": self.algebra_class.value,
            "invariants": self.invariants,
            "class_constant_on_orbit": len(self.classes_seen) == 1,
        }


@dataclass
class Census:
    p: int
    total_tables: int
    associative_count: int
    orbits: list[Orbit]
    orbit_of: dict  # associative table -> orbit index

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    def class_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for o in self.orbits:
            counts[o.algebra_class.value] = counts.get(o.algebra_class.value, 0) + 1
        return dict(sorted(counts.items()))

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "total_tables": self.total_tables,
            "associative_count": self.associative_count,
            "orbit_count": self.orbit_count,
            "class_counts": self.class_counts(),
            "orbits": [o.to_json() for o in self.orbits],
        }


def enumerate_finite_field(p: int, classify_every_member: bool = True) -> Census:
    """Enumerate all p^8 tables over F_p and split the associative ones into orbits.

    With ``classify_every_member`` the classifier runs on every table of
    every orbit, not only on the representative.
    """
    if p not in SUPPORTED_PRIMES:
        raise UnsupportedPrimeError(f"census supports p in {SUPPORTED_PRIMES}, got {p}")
    group = general_linear_group(p)
    assoc = [t for t in itertools.product(range(p), repeat=8) if _is_associative_int(t, p)]
    orbit_of: dict[IntTable, int] = {}
    raw = []
    for t in assoc:
        if t in orbit_of:
            continue
        members = {_transform_int(t, g, gi, p) for g, gi in group}
        idx = len(raw)
        for s in members:
            orbit_of[s] = idx
        raw.append(members)
    orbits = []
    for members in raw:
        rep = min(members)
        table = MultiplicationTable.from_constants(rep, p)
        cls = classify(table)
        seen = {classify(MultiplicationTable.from_constants(s, p)) for s in members} if classify_every_member else {cls}
        orbits.append(Orbit(rep, len(members), cls, invariants(table).to_json(), seen))
    order = sorted(range(len(orbits)), key=lambda k: (orbits[k].algebra_class.value, orbits[k].representative))
    remap = {old: new for new, old in enumerate(order)}
    return Census(
        p=p,
        total_tables=p**8,
        associative_count=len(assoc),
        orbits=[orbits[k] for k in order],
        orbit_of={t: remap[k] for t, k in orbit_of.items()},
    )


def reduce_table(m: MultiplicationTable, p: int) -> IntTable:
    vals = []
    for c in m.constants:
        if c.denominator % p == 0:
            raise ValueError(f"{c} has no reduction mod {p}")
        vals.append(c.numerator * pow(c.denominator, -1, p) % p)
    return tuple(vals)


def standard_orbits(census: Census) -> dict[int, int]:
    """Orbit index of each reduced standard table d1..d6."""
    return {k: census.orbit_of[reduce_table(standard_table(k), census.p)] for k in range(1, 7)}
