"""Coderivations of the tensor coalgebra T(W) of a Z2-graded space W.

A coderivation is stored by its corestriction T(W) -> W, as a linear
combination of basis maps ``phi^I_i`` sending the word ``w_I`` to ``w_i``
and every other word to zero.  Composition inserts the inner index into a
matching slot of the outer index with a Koszul sign; the bracket is the
graded commutator of that composition.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .scalar import Poly

MultiIndex = tuple[int, ...]


class SpaceMismatchError(ValueError):
    pass


class MixedParityError(ValueError):
    def __init__(self, offending):
        self.offending = offending
        listing = ", ".join(f"{b} (parity {p})" for b, p in offending)
        super().__init__(f"coderivation has terms of both parities: {listing}")


@dataclass(frozen=True)
class GradedSpace:
    """Basis parities of w_1..w_m (0 even, 1 odd)."""

    parities: tuple[int, ...]

    def __post_init__(self):
        if len(self.parities) < 1:
            raise ValueError("a graded space needs at least one basis vector")
        if any(p not in (0, 1) for p in self.parities):
            raise ValueError(f"parities must be 0 or 1, got {self.parities}")

    @property
    def dim(self) -> int:
        return len(self.parities)

    def parity(self, i: int) -> int:
        return self.parities[i - 1]

    def word_parity(self, word: Iterable[int]) -> int:
        return sum(self.parities[i - 1] for i in word) % 2

    def check_index(self, word: Iterable[int]) -> None:
        for i in word:
            if not 1 <= i <= self.dim:
                raise ValueError(f"basis index {i} out of range 1..{self.dim}")

    def words(self, n: int) -> Iterator[MultiIndex]:
        """Basis words of W^n in lexicographic order."""
        return itertools.product(range(1, self.dim + 1), repeat=n)

    def __str__(self):
        even = self.parities.count(0)
        return f"{even}|{self.dim - even}"


#: The space W = ΠV for a 2-dimensional even V: both generators odd.
ODD_PLANE = GradedSpace((1, 1))


@dataclass(frozen=True)
class BasisCoderivation:
    """``phi^I_i``: maps the word ``w_I`` to ``w_i``."""

    inputs: MultiIndex
    output: int

    @property
    def degree(self) -> int:
        return len(self.inputs)

    def parity(self, space: GradedSpace) -> int:
        return (space.parity(self.output) + space.word_parity(self.inputs)) % 2

    def sort_key(self):
        return (len(self.inputs), self.inputs, self.output)

    def __str__(self):
        return f"phi[{''.join(map(str, self.inputs))}->{self.output}]"


def _is_zero(c) -> bool:
    return c == 0


class Coderivation:
    """Immutable formal linear combination of basis coderivations.

    Coefficients are Fractions or :class:`Poly`; zero coefficients are dropped
    so equality is structural.
    """

    __slots__ = ("space", "_terms")

    def __init__(self, space: GradedSpace, terms: Mapping[BasisCoderivation, object] | None = None):
        self.space = space
        clean = {}
        for b, c in (terms or {}).items():
            if isinstance(c, int):
                c = Fraction(c)
            if not _is_zero(c):
                space.check_index(b.inputs)
                space.check_index((b.output,))
                clean[b] = c
        self._terms = clean

    @classmethod
    def basis(cls, inputs: Sequence[int], output: int, coeff=1, space: GradedSpace = ODD_PLANE) -> "Coderivation":
        return cls(space, {BasisCoderivation(tuple(inputs), output): coeff})

    @classmethod
    def zero(cls, space: GradedSpace = ODD_PLANE) -> "Coderivation":
        return cls(space)

    @classmethod
    def from_pairs(cls, space: GradedSpace, pairs: Iterable[tuple[BasisCoderivation, object]]) -> "Coderivation":
        acc: dict[BasisCoderivation, object] = {}
        for b, c in pairs:
            acc[b] = acc[b] + c if b in acc else c
        return cls(space, acc)

    # inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[BasisCoderivation, object]:
        return dict(self._terms)

    def items(self) -> list[tuple[BasisCoderivation, object]]:
        return sorted(self._terms.items(), key=lambda bc: bc[0].sort_key())

    def coefficient(self, b: BasisCoderivation):
        return self._terms.get(b, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {b.degree for b in self._terms}

    def degree(self) -> int:
        """The common degree; raises if the element mixes degrees."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError(f"coderivation mixes degrees {sorted(ds)}")
        return ds.pop() if ds else 0

    def parity(self) -> int:
        return parity_of(self)

    def map_coefficients(self, f) -> "Coderivation":
        return Coderivation(self.space, {b: f(c) for b, c in self._terms.items()})

    # vector space structure -------------------------------------------

    def _check(self, other: "Coderivation"):
        if not isinstance(other, Coderivation):
            raise TypeError(f"expected a Coderivation, got {type(other).__name__}")
        if other.space != self.space:
            raise SpaceMismatchError(f"spaces differ: {self.space} vs {other.space}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self._terms)
        for b, c in other._terms.items():
            out[b] = out[b] + c if b in out else c
        return Coderivation(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return Coderivation(self.space, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction, Poly)):
            return NotImplemented
        return Coderivation(self.space, {b: c * scalar for b, c in self._terms.items()})

    def __rmul__(self, scalar):
        if not isinstance(scalar, (int, Fraction, Poly)):
            return NotImplemented
        return Coderivation(self.space, {b: scalar * c for b, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Coderivation):
            return NotImplemented
        return self.space == other.space and self._terms == other._terms

    def __hash__(self):
        return hash((self.space, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        from .syntax import format_coderivation

        return format_coderivation(self)

    def __repr__(self):
        return f"Coderivation({str(self)!r})"


def phi(inputs: Sequence[int] | str, output: int, coeff=1, space: GradedSpace = ODD_PLANE) -> Coderivation:
    """Shorthand: ``phi("12", 1)`` is phi^{12}_1; ``phi("", 2)`` is phi_2."""
    if isinstance(inputs, str):
        inputs = tuple(int(ch) for ch in inputs)
    return Coderivation.basis(inputs, output, coeff, space)


psi = phi


def parity_of(f: Coderivation) -> int:
    if f.is_zero():
        # zero is homogeneous of either parity; report even
        return 0
    seen: dict[int, list[BasisCoderivation]] = {}
    for b in f._terms:
        seen.setdefault(b.parity(f.space), []).append(b)
    if len(seen) > 1:
        offending = [(b, p) for p, bs in sorted(seen.items()) for b in sorted(bs, key=BasisCoderivation.sort_key)]
        raise MixedParityError(offending)
    return next(iter(seen))


def is_homogeneous(f: Coderivation) -> bool:
    try:
        parity_of(f)
    except MixedParityError:
        return False
    return True


def insert_index(outer: MultiIndex, inner: MultiIndex, k: int) -> MultiIndex:
    """Replace the k-th (1-based) entry of ``outer`` by the whole of ``inner``."""
    return outer[: k - 1] + inner + outer[k:]


def compose_basis(space: GradedSpace, a: BasisCoderivation, b: BasisCoderivation) -> list[tuple[BasisCoderivation, int]]:
    """phi^I_i o phi^J_j as a list of (basis term, sign)."""
    b_par = b.parity(space)
    out = []
    prefix_par = 0
    for k, ik in enumerate(a.inputs, start=1):
        if ik == b.output:
            sign = -1 if (prefix_par * b_par) % 2 else 1
            out.append((BasisCoderivation(insert_index(a.inputs, b.inputs, k), a.output), sign))
        prefix_par ^= space.parity(ik)
    return out


def compose(f: Coderivation, g: Coderivation) -> Coderivation:
    f._check(g)
    acc: dict[BasisCoderivation, object] = {}
    for a, ca in f._terms.items():
        for b, cb in g._terms.items():
            for term, sign in compose_basis(f.space, a, b):
                c = ca * cb if sign > 0 else -(ca * cb)
                acc[term] = acc[term] + c if term in acc else c
    return Coderivation(f.space, acc)


def bracket(f: Coderivation, g: Coderivation) -> Coderivation:
    """Graded commutator f o g - (-1)^{|f||g|} g o f."""
    f._check(g)
    pf, pg = parity_of(f), parity_of(g)
    fg, gf = compose(f, g), compose(g, f)
    return fg + gf if pf * pg else fg - gf


def evaluate_extended(f: Coderivation, word: Sequence[int]) -> dict[MultiIndex, object]:
    """Apply the coderivation extension of ``f`` to the basis word ``w_word``.

    Returns the result as ``{output word: coefficient}`` without zero entries.
    """
    word = tuple(word)
    f.space.check_index(word)
    n = len(word)
    out: dict[MultiIndex, object] = {}
    for b, c in f._terms.items():
        k = b.degree
        if k > n:
            continue
        bp = b.parity(f.space)
        prefix_par = 0
        for i in range(n - k + 1):
            if word[i : i + k] == b.inputs:
                sign = -1 if (prefix_par * bp) % 2 else 1
                w = word[:i] + (b.output,) + word[i + k :]
                v = c if sign > 0 else -c
                out[w] = out[w] + v if w in out else v
            if i < n:
                prefix_par ^= f.space.parity(word[i])
    return {w: c for w, c in out.items() if not _is_zero(c)}


def apply_to_combination(f: Coderivation, combo: Mapping[MultiIndex, object]) -> dict[MultiIndex, object]:
    """Linear extension of :func:`evaluate_extended` to combinations of words."""
    out: dict[MultiIndex, object] = {}
    for word, c in combo.items():
        for w, v in evaluate_extended(f, word).items():
            v = c * v
            out[w] = out[w] + v if w in out else v
    return {w: c for w, c in out.items() if not _is_zero(c)}


def corestriction_of_composite(f: Coderivation, g: Coderivation, n: int) -> Coderivation:
    """Build the element of C^n given by w_K -> f(g(w_K)), read off in W.

    This evaluates the extended maps directly and is independent of
    :func:`compose`; it serves as an oracle for it.
    """
    f._check(g)
    acc: dict[BasisCoderivation, object] = {}
    for K in f.space.words(n):
        image = apply_to_combination(f, evaluate_extended(g, K))
        for w, c in image.items():
            if len(w) == 1:
                acc[BasisCoderivation(K, w[0])] = c
    return Coderivation(f.space, acc)


def cochain_basis(n: int, space: GradedSpace = ODD_PLANE) -> list[BasisCoderivation]:
    """Basis of C^n = Hom(W^n, W) in canonical order (I lexicographic, then i)."""
    return [BasisCoderivation(I, i) for I in space.words(n) for i in range(1, space.dim + 1)]


def lambda_insert(prefix: Sequence[int], f: Coderivation) -> Coderivation:
    prefix = tuple(prefix)
    f.space.check_index(prefix)
    return Coderivation(f.space, {BasisCoderivation(prefix + b.inputs, b.output): c for b, c in f._terms.items()})


def _require_odd_plane(f: Coderivation):
    if f.space != ODD_PLANE:
        raise SpaceMismatchError(f"defined only on the 0|2 space, got {f.space}")


def decleene_map(f: Coderivation) -> Coderivation:
    """theta = lambda^{21} + lambda^{12}."""
    _require_odd_plane(f)
    return lambda_insert((2, 1), f) + lambda_insert((1, 2), f)


def decleene_cocycle(n: int, component: int) -> Coderivation:
    """Ch^n_c: theta^k phi_c for n = 2k, theta^k phi^2_c for n = 2k + 1."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if component not in (1, 2):
        raise ValueError("component must be 1 or 2")
    k, odd = divmod(n, 2)
    f = phi((2,) if odd else (), component)
    for _ in range(k):
        f = decleene_map(f)
    return f
