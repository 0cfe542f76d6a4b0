"""Exact scalars: rationals, Gaussian rationals, and sparse polynomials.

Every computation in this library is exact.  Rational numbers are
`fractions.Fraction`; Gaussian rationals (needed for the equal-rank Lie
models, where some compact-group elements have entries in Q(i)) and sparse
multivariate polynomials are the two small classes defined here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Q = Fraction

Scalar = Union[int, Fraction, "GaussRational"]


def as_fraction(x) -> Fraction:
    """Coerce an int/Fraction/real GaussRational to a Fraction."""
    if isinstance(x, GaussRational):
        if x.im != 0:
            raise ValueError(f"{x} is not real")
        return x.re
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or 'a' (exact; no floats accepted)."""
    text = text.strip()
    if "." in text or "e" in text.lower().replace("/", ""):
        # reject float-looking input outright rather than rounding it
        if "." in text:
            raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


class GaussRational:
    """A Gaussian rational re + im*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- coercion -----------------------------------------------------
    @staticmethod
    def of(x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        return GaussRational(x, 0)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        o = GaussRational.of(other)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussRational.of(other))

    def __rsub__(self, other):
        return GaussRational.of(other) + (-self)

    def __mul__(self, other):
        o = GaussRational.of(other)
        return GaussRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussRational.of(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussRational(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        return GaussRational.of(other) / self

    def __pow__(self, k: int):
        out = GaussRational(1)
        base = self
        for _ in range(k):
            out = out * base
        return out

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    # -- comparisons ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GaussRational(0, 1)


def conj(x: Scalar) -> Scalar:
    """Complex conjugation, identity on rationals."""
    if isinstance(x, GaussRational):
        return x.conjugate()
    return x


def real_part(x: Scalar) -> Fraction:
    if isinstance(x, GaussRational):
        return x.re
    return Fraction(x)


class Poly:
    """Sparse polynomial in ``nvars`` commuting variables over Q.

    Terms map exponent tuples to nonzero Fraction coefficients.  Used both
    for the polynomial part of Hecke algebra elements (variables eps_1..eps_k)
    and for symbolic spherical parameters (variables nu_1..nu_k).
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exp, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    self.terms[tuple(exp)] = c

    # -- constructors ---------------------------------------------------
    @staticmethod
    def const(nvars: int, c) -> "Poly":
        return Poly(nvars, {(0,) * nvars: Fraction(c)})

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly(nvars)

    @staticmethod
    def var(nvars: int, i: int) -> "Poly":
        exp = [0] * nvars
        exp[i] = 1
        return Poly(nvars, {tuple(exp): Fraction(1)})

    @staticmethod
    def linear(coeffs: Iterable, const=0) -> "Poly":
        coeffs = list(coeffs)
        n = len(coeffs)
        p = Poly.const(n, const)
        for i, c in enumerate(coeffs):
            if c:
                exp = [0] * n
                exp[i] = 1
                p = p + Poly(n, {tuple(exp): c})
        return p

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def linear_coeffs(self):
        """Return (coeffs list, const) assuming degree <= 1."""
        if self.degree() > 1:
            raise ValueError("not a linear polynomial")
        coeffs = [Fraction(0)] * self.nvars
        for exp, c in self.terms.items():
            if sum(exp) == 1:
                coeffs[exp.index(1)] = c
        return coeffs, self.constant_term()

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(
                self.nvars, {e: c * other for e, c in self.terms.items()}
            )
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structural operations ---------------------------------------------
    def evaluate(self, point):
        """Evaluate at a point (scalars supporting ring ops)."""
        total = None
        for exp, c in self.terms.items():
            v = c
            for i, e in enumerate(exp):
                for _ in range(e):
                    v = v * point[i]
            total = v if total is None else total + v
        if total is None:
            return Fraction(0)
        return total

    def subst_signed_perm(self, perm, signs) -> "Poly":
        """Apply the signed-permutation substitution x_i -> signs[i]*x_perm[i]."""
        out = {}
        for exp, c in self.terms.items():
            newexp = [0] * self.nvars
            coeff = c
            for i, e in enumerate(exp):
                if e:
                    newexp[perm[i]] += e
                    if signs[i] == -1 and e % 2 == 1:
                        coeff = -coeff
            e = tuple(newexp)
            s = out.get(e, Fraction(0)) + coeff
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.nvars, out)

    def divexact_linear(self, coeffs, const=0) -> "Poly":
        """Exact division by a linear form; raises if not divisible."""
        coeffs = [Fraction(c) for c in coeffs]
        const = Fraction(const)
        pivot = next(i for i, c in enumerate(coeffs) if c != 0)
        quot = {}
        rem = dict(self.terms)
        # synthetic division in the pivot variable, highest degree first
        while rem:
            exp = max(rem, key=lambda e: (e[pivot], e))
            c = rem[exp]
            if exp[pivot] == 0:
                raise ValueError("not divisible by the given linear form")
            qexp = list(exp)
            qexp[pivot] -= 1
            qexp = tuple(qexp)
            qc = c / coeffs[pivot]
            quot[qexp] = quot.get(qexp, Fraction(0)) + qc
            # subtract qc * qexp * (linear form) from the remainder
            for i, ci in enumerate(coeffs):
                if ci:
                    e = list(qexp)
                    e[i] += 1
                    e = tuple(e)
                    s = rem.get(e, Fraction(0)) - qc * ci
                    if s:
                        rem[e] = s
                    else:
                        rem.pop(e, None)
            if const:
                s = rem.get(qexp, Fraction(0)) - qc * const
                if s:
                    rem[qexp] = s
                else:
                    rem.pop(qexp, None)
        return Poly(self.nvars, quot)

    # -- printing -----------------------------------------------------------
    def to_text(self, names=None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"eps{i + 1}" for i in range(self.nvars)]
        parts = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[exp]
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            if not factors:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = format_rational(abs(c)) + "*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self.to_text()})"
