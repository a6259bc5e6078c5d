"""Hochschild cohomology of a codifferential d via D(f) = [d, f].

Cochains C^n are expanded in the canonical basis of
:func:`assoc2.coderivation.cochain_basis`; the coboundary is assembled as an
exact sparse matrix and everything else is exact linear algebra.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .coderivation import (
    ODD_PLANE,
    BasisCoderivation,
    Coderivation,
    GradedSpace,
    bracket,
    cochain_basis,
    parity_of,
)

DEFAULT_MAX_DEGREE = 6


class NotACodifferentialError(ValueError):
    pass


@dataclass(frozen=True)
class CochainBasis:
    degree: int
    elements: tuple[BasisCoderivation, ...]
    space: GradedSpace = ODD_PLANE

    @classmethod
    def of(cls, n: int, space: GradedSpace = ODD_PLANE) -> "CochainBasis":
        return cls(n, tuple(cochain_basis(n, space)), space)

    def __len__(self):
        return len(self.elements)

    @property
    def position(self) -> dict[BasisCoderivation, int]:
        return {b: k for k, b in enumerate(self.elements)}

    def to_vector(self, f: Coderivation) -> dict[int, Fraction]:
        pos = self.position
        vec = {}
        for b, c in f.terms.items():
            if b not in pos:
                raise ValueError(f"{b} is not in C^{self.degree}")
            vec[pos[b]] = c
        return vec

    def from_vector(self, vec: dict) -> Coderivation:
        return Coderivation(self.space, {self.elements[k]: c for k, c in vec.items()})

    def component(self, output: int) -> list[int]:
        """Positions of basis elements with the given output index (C^n_output)."""
        return [k for k, b in enumerate(self.elements) if b.output == output]


@dataclass
class CoboundaryMatrix:
    """Matrix of D: C^n -> C^{n+1}; columns are images of basis elements."""

    degree: int
    source: CochainBasis
    target: CochainBasis
    columns: list  # sparse column vectors indexed by target positions

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.target), len(self.source))

    @property
    def rows(self) -> list:
        return linalg.transpose(self.columns, len(self.target))

    def dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * len(self.source) for _ in range(len(self.target))]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = Fraction(v)
        return out

    def rank(self) -> int:
        return linalg.rank(self.rows, len(self.source))


@dataclass
class DegreeCohomology:
    degree: int
    dim_cochains: int
    dim_kernel: int
    dim_image_from_below: int
    representatives: list[Coderivation] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.dim_kernel - self.dim_image_from_below


@dataclass
class CohomologyReport:
    codifferential: Coderivation
    degrees: list[DegreeCohomology]

    @property
    def dims(self) -> list[int]:
        return [d.dim for d in self.degrees]

    def __getitem__(self, n: int) -> DegreeCohomology:
        return self.degrees[n]

    def to_json(self) -> dict:
        return {
            "codifferential": str(self.codifferential),
            "dims": self.dims,
            "degrees": {
                str(d.degree): {
                    "dim_cochains": d.dim_cochains,
                    "dim_kernel": d.dim_kernel,
                    "dim_image": d.dim_image_from_below,
                    "dim_cohomology": d.dim,
                    "representatives": [str(r) for r in d.representatives],
                }
                for d in self.degrees
            },
        }


def check_codifferential(d: Coderivation) -> None:
    """Raise unless d is an odd, degree-2 element with [d, d] = 0."""
    if d.is_zero():
        return
    if d.degrees() != {2}:
        raise NotACodifferentialError(f"{d} is not homogeneous of degree 2")
    try:
        p = parity_of(d)
    except ValueError as exc:
        raise NotACodifferentialError(str(exc)) from None
    if p != 1:
        raise NotACodifferentialError(f"{d} is even")
    sq = bracket(d, d)
    if not sq.is_zero():
        raise NotACodifferentialError(f"[d, d] = {sq} is not zero")


def is_codifferential(d: Coderivation) -> bool:
    try:
        check_codifferential(d)
    except NotACodifferentialError:
        return False
    return True


def coboundary(d: Coderivation, f: Coderivation) -> Coderivation:
    check_codifferential(d)
    if len(f.degrees()) > 1:
        raise ValueError(f"{f} mixes degrees {sorted(f.degrees())}")
    return _coboundary_unchecked(d, f)


def _coboundary_unchecked(d: Coderivation, f: Coderivation) -> Coderivation:
    if f.is_zero() or d.is_zero():
        return Coderivation.zero(f.space)
    return bracket(d, f)


def coboundary_matrix(d: Coderivation, n: int) -> CoboundaryMatrix:
    check_codifferential(d)
    return _coboundary_matrix(d, n)


def _coboundary_matrix(d: Coderivation, n: int) -> CoboundaryMatrix:
    src, tgt = CochainBasis.of(n, d.space), CochainBasis.of(n + 1, d.space)
    cols = [tgt.to_vector(_coboundary_unchecked(d, Coderivation(d.space, {b: Fraction(1)}))) for b in src.elements]
    return CoboundaryMatrix(n, src, tgt, cols)


def is_cocycle(d: Coderivation, f: Coderivation) -> bool:
    return coboundary(d, f).is_zero()


def is_coboundary(d: Coderivation, f: Coderivation) -> Coderivation | None:
    """A preimage x with D(x) = f, or None when f is not a coboundary."""
    check_codifferential(d)
    if f.is_zero():
        return Coderivation.zero(f.space)
    n = f.degree()
    if n < 1:
        return None
    mat = _coboundary_matrix(d, n - 1)
    x = linalg.solve(mat.rows, len(mat.source), mat.target.to_vector(f))
    return None if x is None else mat.source.from_vector(x)


def verify_d_squared(d: Coderivation, n: int) -> bool:
    check_codifferential(d)
    lower, upper = _coboundary_matrix(d, n), _coboundary_matrix(d, n + 1)
    product = linalg.mat_mul(upper.rows, lower.rows)
    return all(not row for row in product)


def cohomology(d: Coderivation, max_degree: int = DEFAULT_MAX_DEGREE) -> CohomologyReport:
    """dim H^n and representatives for 0 <= n <= max_degree.

    H^0 is the kernel of D on C^0; there is no incoming image.
    Representatives are the reduced kernel vectors modulo the image, in RREF.
    """
    check_codifferential(d)
    mats = [_coboundary_matrix(d, n) for n in range(max_degree + 1)]
    out = []
    prev_image: list = []
    for n, mat in enumerate(mats):
        ker = linalg.nullspace(mat.rows, len(mat.source))
        image_rank = linalg.rank(prev_image, len(mat.source)) if prev_image else 0
        reps = linalg.complement_basis(prev_image, ker, len(mat.source))
        out.append(
            DegreeCohomology(
                degree=n,
                dim_cochains=len(mat.source),
                dim_kernel=len(ker),
                dim_image_from_below=image_rank,
                representatives=[mat.source.from_vector(v) for v in reps],
            )
        )
        prev_image = [c for c in mat.columns if c]
    return CohomologyReport(d, out)


def cohomology_dims(d: Coderivation, max_degree: int = DEFAULT_MAX_DEGREE) -> list[int]:
    """Dimensions only, via ranks (rank-nullity, no kernel vectors)."""
    check_codifferential(d)
    ranks = [_coboundary_matrix(d, n).rank() for n in range(max_degree + 1)]
    dims = []
    for n in range(max_degree + 1):
        size = d.space.dim ** (n + 1)
        dims.append(size - ranks[n] - (ranks[n - 1] if n else 0))
    return dims


def project(f: Coderivation, output: int) -> Coderivation:
    """Component of f in C_output (terms whose output index is ``output``)."""
    return Coderivation(f.space, {b: c for b, c in f.terms.items() if b.output == output})


def extend_to_cocycle(d: Coderivation, f: Coderivation, free_output: int) -> Coderivation | None:
    """Find eta in C^n_{free_output} with D(f + eta) = 0, or None."""
    check_codifferential(d)
    n = f.degree()
    mat = _coboundary_matrix(d, n)
    cols = mat.source.component(free_output)
    sub_rows = linalg.transpose([mat.columns[c] for c in cols], len(mat.target))
    rhs = {i: -v for i, v in mat.target.to_vector(_coboundary_unchecked(d, f)).items()}
    if not rhs:
        return Coderivation.zero(f.space)
    x = linalg.solve(sub_rows, len(cols), rhs)
    if x is None:
        return None
    return mat.source.from_vector({cols[k]: v for k, v in x.items()})


def represents_same_classes(d: Coderivation, a: list[Coderivation], b: list[Coderivation]) -> bool:
    """True when span(a) + B^n == span(b) + B^n inside C^n (all cocycles of degree n)."""
    check_codifferential(d)
    elems = [f for f in a + b if not f.is_zero()]
    if not elems:
        return True
    n = elems[0].degree()
    basis = CochainBasis.of(n, d.space)
    image = [c for c in _coboundary_matrix(d, n - 1).columns if c] if n >= 1 else []
    va = image + [basis.to_vector(f) for f in a]
    vb = image + [basis.to_vector(f) for f in b]
    ra = linalg.rank(va, len(basis))
    return ra == linalg.rank(vb, len(basis)) == linalg.rank(va + vb, len(basis))


def component_operator(d: Coderivation, n: int, output: int) -> list:
    """Rows of D restricted to C^n_output and projected onto C^{n+1}_output."""
    mat = _coboundary_matrix(d, n)
    src = mat.source.component(output)
    tgt = mat.target.component(output)
    tpos = {t: r for r, t in enumerate(tgt)}
    cols = [{tpos[i]: v for i, v in mat.columns[c].items() if i in tpos} for c in src]
    return linalg.transpose(cols, len(tgt))


def component_cohomology_dims(d: Coderivation, output: int, max_degree: int = DEFAULT_MAX_DEGREE) -> list[int]:
    """dim H^n of the component operator on C_output (meaningful when it squares to zero)."""
    check_codifferential(d)
    ranks = []
    sizes = []
    for n in range(max_degree + 1):
        rows = component_operator(d, n, output)
        sizes.append(len(CochainBasis.of(n, d.space).component(output)))
        ranks.append(linalg.rank(rows, sizes[-1]))
    return [sizes[n] - ranks[n] - (ranks[n - 1] if n else 0) for n in range(max_degree + 1)]


def cocycles_reach_component_class(d: Coderivation, n: int, output: int) -> bool:
    """Whether some D-cocycle has a C_output component outside the image of
    the component operator, i.e. H^n of the component is hit by restriction.

    Computed from the full kernel of D; no particular cocycle is assumed.
    """
    check_codifferential(d)
    mat = _coboundary_matrix(d, n)
    keep = mat.source.component(output)
    kpos = {k: r for r, k in enumerate(keep)}
    kernel = linalg.nullspace(mat.rows, len(mat.source))
    projected = [{kpos[i]: v for i, v in z.items() if i in kpos} for z in kernel]
    image = []
    if n >= 1:
        below = component_operator(d, n - 1, output)
        n_src = len(CochainBasis.of(n - 1, d.space).component(output))
        image = [c for c in linalg.transpose(below, n_src) if c]
    base = linalg.rank(image, len(keep))
    return linalg.rank(image + [p for p in projected if p], len(keep)) > base
