"""Sparse multivariate polynomials over the rationals.

Coefficients throughout the package are elements of Q[c, d, u, v, t0, t1, ...]
(any string is accepted as a variable name).  A polynomial is a dict mapping
monomials to nonzero Fractions, where a monomial is a sorted tuple of
(variable, exponent) pairs with positive exponents; the empty tuple is the
constant monomial.  Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

Scalar = Union[int, Fraction]
Monomial = tuple  # tuple[tuple[str, int], ...]

_ONE_MONO: Monomial = ()


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


class Poly:
    """A polynomial with Fraction coefficients in named commuting variables."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coef in terms.items():
                if coef:
                    self.terms[mono] = _as_fraction(coef)

    @staticmethod
    def const(x: Scalar) -> "Poly":
        x = _as_fraction(x)
        return Poly({_ONE_MONO: x}) if x else Poly()

    @staticmethod
    def var(name: str, exp: int = 1) -> "Poly":
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return Poly.const(1)
        return Poly({((name, exp),): Fraction(1)})

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return Poly.const(x)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == _ONE_MONO for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get(_ONE_MONO, Fraction(0))

    def variables(self) -> set:
        return {name for mono in self.terms for name, _ in mono}

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = Poly.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return Poly()
            return Poly({m: v * c for m, v in self.terms.items()})
        other = Poly.coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _as_fraction(other)
        return self * (Fraction(1) / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, values: Mapping[str, "Poly | Scalar"]) -> "Poly":
        """Replace variables by polynomials or scalars; others are kept."""
        out = Poly()
        for mono, coef in self.terms.items():
            term = Poly.const(coef)
            for name, exp in mono:
                if name in values:
                    term = term * (Poly.coerce(values[name]) ** exp)
                else:
                    term = term * Poly.var(name, exp)
            out = out + term
        return out

    def coefficient_of(self, name: str, exp: int = 1) -> "Poly":
        """Collect the (polynomial) coefficient of name**exp, ignoring other
        variables' contribution to that monomial slot."""
        out: dict[Monomial, Fraction] = {}
        for mono, coef in self.terms.items():
            d = dict(mono)
            if d.get(name, 0) == exp:
                rest = tuple(sorted((k, v) for k, v in d.items() if k != name))
                out[rest] = out.get(rest, Fraction(0)) + coef
        return Poly(out)

    def linear_parts(self) -> dict[str, Fraction]:
        """For a polynomial that is homogeneous linear in its variables,
        return {variable: coefficient}.  Raises if any term is nonlinear or
        constant."""
        out: dict[str, Fraction] = {}
        for mono, coef in self.terms.items():
            if len(mono) != 1 or mono[0][1] != 1:
                raise ValueError(f"not homogeneous linear: {self}")
            out[mono[0][0]] = out.get(mono[0][0], Fraction(0)) + coef
        return out

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (sum(e for _, e in m), m)):
            coef = self.terms[mono]
            factors = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in mono
            )
            if not factors:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(factors)
            elif coef == -1:
                parts.append(f"-{factors}")
            else:
                parts.append(f"{coef}*{factors}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for name, e in m2:
        d[name] = d.get(name, 0) + e
    return tuple(sorted(d.items()))


ZERO = Poly()
ONE = Poly.const(1)
