"""Exact coefficient rings: rationals, small prime fields, and sparse
multivariate polynomials over the rationals.

Rationals are :class:`fractions.Fraction`. Polynomials are immutable and kept
in canonical form (no zero coefficients, no zero exponents), so structural
equality is mathematical equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class UnassignedVariableError(ValueError):
    def __init__(self, name: str):
        super().__init__(f"no value assigned to variable {name!r}")
        self.name = name


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class Monomial:
    """Product of variables; ``powers`` is sorted by name with no zero exponents."""

    powers: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(cls, exponents: Mapping[str, int] | None = None, **kw: int) -> "Monomial":
        merged = dict(exponents or {})
        merged.update(kw)
        for name, e in merged.items():
            if e < 0:
                raise ValueError(f"negative exponent for {name}")
        return cls(tuple(sorted((n, e) for n, e in merged.items() if e)))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    def variables(self) -> set[str]:
        return {n for n, _ in self.powers}

    def exponent(self, name: str) -> int:
        for n, e in self.powers:
            if n == name:
                return e
        return 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self.powers)
        for n, e in other.powers:
            merged[n] = merged.get(n, 0) + e
        return Monomial(tuple(sorted(merged.items())))

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(n if e == 1 else f"{n}^{e}" for n, e in self.powers)


ONE_MONOMIAL = Monomial()


def _grlex_key(m: Monomial, names: list[str]) -> tuple:
    return (m.degree, tuple(m.exponent(n) for n in names))


class Poly:
    """Sparse polynomial: a mapping ``Monomial -> nonzero Fraction``.

    Supports ``+ - *`` and integer powers against other polynomials, ints and
    Fractions, so it can be used directly as a coefficient ring.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({Monomial.of({name: 1}): 1})

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return Poly.const(as_fraction(x))

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def variables(self) -> set[str]:
        out: set[str] = set()
        for m in self._terms:
            out |= m.variables()
        return out

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == ONE_MONOMIAL for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    @property
    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    def canonical(self) -> "Poly":
        return Poly(self._terms)

    # ring operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        other = Poly.coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        other = Poly.coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # evaluation ------------------------------------------------------

    def eval(self, point: Mapping[str, Scalar]):
        """Substitute rationals (or anything ring-like) for every variable."""
        total = 0
        for m, c in self._terms.items():
            term = c
            for name, e in m.powers:
                if name not in point:
                    raise UnassignedVariableError(name)
                term = term * point[name] ** e
            total = total + term
        return total

    def substitute(self, point: Mapping[str, "Poly | Scalar"]) -> "Poly":
        """Partial substitution; variables missing from ``point`` are kept."""
        total = Poly()
        for m, c in self._terms.items():
            term = Poly.const(c)
            for name, e in m.powers:
                factor = Poly.coerce(point[name]) if name in point else Poly.var(name)
                term = term * factor**e
            total = total + term
        return total

    # display ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        names = sorted(self.variables())
        return sorted(self._terms.items(), key=lambda mc: _grlex_key(mc[0], names), reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if m == ONE_MONOMIAL:
                body = str(a)
            elif a == 1:
                body = str(m)
            else:
                body = f"{a}*{m}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def poly_add(p: Poly, q: Poly) -> Poly:
    return Poly.coerce(p) + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return Poly.coerce(p) * q


def poly_eval(p: Poly, point: Mapping[str, Scalar]) -> Fraction:
    value = Poly.coerce(p).eval({k: as_fraction(v) for k, v in point.items()})
    return as_fraction(value)


def is_zero(c) -> bool:
    return c == 0


def eval_coefficient(c, point: Mapping[str, Scalar]):
    """Evaluate a Fraction-or-Poly coefficient to a Fraction."""
    if isinstance(c, Poly):
        return poly_eval(c, point)
    return as_fraction(c)


def variables_of(coefficients: Iterable) -> set[str]:
    out: set[str] = set()
    for c in coefficients:
        if isinstance(c, Poly):
            out |= c.variables()
    return out


class Fp:
    """Element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.p = p
        self.v = v % p

    def _lift(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else Fp(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else Fp(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else Fp(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else Fp(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.v == other % self.p
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)
