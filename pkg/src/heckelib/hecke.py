"""Graded Hecke algebras in their A / C realizations.

Elements are kept in PBW normal form: a finite sum of terms p * w with p a
polynomial in eps_1..eps_k and w a (signed) permutation.  Multiplication
pushes group elements through polynomials one simple reflection at a time
using the cross relation

    s_a f = (s_a . f) s_a + c(a) D_a(f)

where D_a is the Demazure-type divided difference (D_a f = (f - s_a.f)/a~
with a~ the coroot form; on a linear f it is the pairing f(a)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .rootdata import RestrictedRootDatum, RootSystem, WeylElement, reflection_action
from .scalars import Poly, Q


class HeckeAlgebra:
    """H(roots, c) on the A_{k-1} or C_k realization."""

    def __init__(self, realization: RootSystem, c_short: Q = Q(1), c_long: Optional[Q] = None):
        self.rs = realization
        self.k = realization.k
        self.c_short = Fraction(c_short)
        self.c_long = Fraction(c_long) if c_long is not None else Fraction(c_short)
        elements, words = realization.weyl_enumerate()
        self.weyl_elements = elements
        self.weyl_words = words
        self.gens = realization.generators()
        self.gen_names = realization.generator_names()
        # per simple reflection: (root, c, coroot form coefficients)
        self.simple_data = []
        for a in realization.simple_roots:
            self.simple_data.append((a, self.c_of_root(a), self._coroot_form(a)))

    @staticmethod
    def for_datum(datum: RestrictedRootDatum) -> "HeckeAlgebra":
        rs = datum.hecke_realization()
        if datum.algebra_family == "A":
            return HeckeAlgebra(rs, datum.algebra_c["all"])
        return HeckeAlgebra(rs, datum.algebra_c["short"], datum.algebra_c["long"])

    # -- parameters -----------------------------------------------------
    def c_of_root(self, root) -> Fraction:
        orbit = self.rs.root_orbit(root)
        if orbit == "all":
            return self.c_short
        return self.c_short if orbit == "short" else self.c_long

    def _coroot_form(self, root):
        """Coefficients of the linear form a~ in S(V*) with f - s_a.f = f(a)*a~."""
        norm = sum(c * c for c in root)
        return [Fraction(2 * c, norm) for c in root]

    def name(self) -> str:
        if self.rs.family == "A":
            return f"H_{self.k}"
        return f"Ht_{self.k}({self.c_long})"

    # -- element constructors ---------------------------------------------
    def zero(self) -> "HeckeElement":
        return HeckeElement(self, {})

    def one(self) -> "HeckeElement":
        return self.group_element(WeylElement.identity(self.k))

    def group_element(self, w: WeylElement) -> "HeckeElement":
        return HeckeElement(self, {w: Poly.const(self.k, 1)})

    def from_poly(self, p: Poly) -> "HeckeElement":
        return HeckeElement(self, {WeylElement.identity(self.k): p})

    def eps(self, i: int) -> "HeckeElement":
        return self.from_poly(Poly.var(self.k, i))

    def generator(self, gi: int) -> "HeckeElement":
        return self.group_element(self.gens[gi])

    # -- core rewriting ---------------------------------------------------
    def weyl_act_poly(self, w: WeylElement, p: Poly) -> Poly:
        return p.subst_signed_perm(w.perm, w.signs)

    def demazure(self, simple_index: int, p: Poly) -> Poly:
        """D_a(p) = (p - s_a.p) / a~, exact."""
        a, _, coroot = self.simple_data[simple_index]
        s = self.gens[simple_index]
        diff = p - self.weyl_act_poly(s, p)
        if diff.is_zero():
            return Poly.zero(self.k)
        return diff.divexact_linear(coroot)

    def _push(self, word: Tuple[int, ...], p: Poly) -> Dict[WeylElement, Poly]:
        """Rewrite w * p (w given by `word`) as sum of q_u * u."""
        if p.is_zero():
            return {}
        if not word:
            return {WeylElement.identity(self.k): p}
        *head, last = word
        s = self.gens[last]
        _, c, _ = self.simple_data[last]
        out: Dict[WeylElement, Poly] = {}
        # w = w' s:  w' s p = w' (s.p) s + c w' D(p)
        for u, q in self._push(tuple(head), self.weyl_act_poly(s, p)).items():
            us = u * s
            out[us] = out.get(us, Poly.zero(self.k)) + q
        if c:
            for u, q in self._push(tuple(head), self.demazure(last, p)).items():
                out[u] = out.get(u, Poly.zero(self.k)) + c * q
        return {u: q for u, q in out.items() if not q.is_zero()}

    def push_group_through(self, w: WeylElement, p: Poly) -> Dict[WeylElement, Poly]:
        return self._push(self.weyl_words[w], p)

    # -- derived elements ----------------------------------------------------
    def drinfeld_lift(self, f: Poly) -> "HeckeElement":
        """f~ = f - (1/2) sum_{b > 0} c(b) f(b) s_b  for linear f."""
        coeffs, const = f.linear_coeffs()
        terms: Dict[WeylElement, Poly] = {WeylElement.identity(self.k): f}
        for b in self.rs.positive_roots:
            c = self.c_of_root(b)
            if not c:
                continue
            fb = sum(x * y for x, y in zip(coeffs, b))
            if not fb:
                continue
            s = reflection_action(b)
            val = Poly.const(self.k, Fraction(-1, 2) * c * fb)
            terms[s] = terms.get(s, Poly.zero(self.k)) + val
        return HeckeElement(self, {w: p for w, p in terms.items() if not p.is_zero()})

    def eps_tilde(self, i: int) -> "HeckeElement":
        return self.drinfeld_lift(Poly.var(self.k, i))

    def star_linear(self, f: Poly) -> "HeckeElement":
        """f* = -f + sum_{b > 0} c(b) f(b) s_b for linear f (no constant)."""
        coeffs, const = f.linear_coeffs()
        if const:
            raise ValueError("star_linear expects a pure linear form")
        h = self.from_poly(-f)
        for b in self.rs.positive_roots:
            c = self.c_of_root(b)
            if not c:
                continue
            fb = sum(x * y for x, y in zip(coeffs, b))
            if fb:
                h = h + HeckeElement(
                    self, {reflection_action(b): Poly.const(self.k, c * fb)}
                )
        return h

    def star(self, h: "HeckeElement") -> "HeckeElement":
        """The anti-automorphism with w* = w^{-1}, f* as in `star_linear`."""
        out = self.zero()
        for w, p in h.terms.items():
            # (p w)* = w^{-1} p*; p* factors monomial-wise in reverse order.
            acc = self.group_element(w.inverse())
            for exp, coeff in p.terms.items():
                term = self.one().scale(coeff)
                for i, e in enumerate(exp):
                    for _ in range(e):
                        # anti-automorphism: reverse the monomial's factors;
                        # the eps_i commute, so any order works
                        term = term * self.star_linear(Poly.var(self.k, i))
                out = out + acc * term
        return out

    # -- verification --------------------------------------------------------
    def verify_relations(self, trials: int = 20, seed: int = 0) -> List[dict]:
        """Check the defining relations and Drinfeld/star identities.

        Returns a list of {check, status, witness?} dicts; every check uses
        exact arithmetic.
        """
        rng = random.Random(seed)
        report = []

        def rand_linear() -> Poly:
            return Poly.linear([Fraction(rng.randint(-3, 3)) for _ in range(self.k)])

        def record(check, ok, witness=None):
            entry = {"check": check, "status": "pass" if ok else "fail"}
            if witness is not None and not ok:
                entry["witness"] = witness
            report.append(entry)

        # polynomial generators commute
        ok = True
        for i in range(self.k):
            for j in range(i + 1, self.k):
                if self.eps(i) * self.eps(j) != self.eps(j) * self.eps(i):
                    ok = False
        record("polynomial generators commute", ok)

        # Coxeter relations among the simple reflections
        ok = True
        for gi, g in enumerate(self.gens):
            if not (g * g).is_identity():
                ok = False
        for gi in range(len(self.gens)):
            for gj in range(gi + 1, len(self.gens)):
                a = self.simple_data[gi][0]
                b = self.simple_data[gj][0]
                pair = self.gens[gi] * self.gens[gj]
                m = _coxeter_order(a, b)
                x = WeylElement.identity(self.k)
                for _ in range(m):
                    x = x * pair
                if not x.is_identity():
                    ok = False
        record("braid relations", ok)

        # cross relation on simple roots, random linear f
        ok, witness = True, None
        for t in range(trials):
            f = rand_linear()
            for gi, (a, c, _) in enumerate(self.simple_data):
                s = self.generator(gi)
                lhs = s * self.from_poly(f) - self.from_poly(
                    self.weyl_act_poly(self.gens[gi], f)
                ) * s
                coeffs, _ = f.linear_coeffs()
                fa = sum(x * y for x, y in zip(coeffs, a))
                rhs = self.one().scale(c * fa)
                if lhs != rhs:
                    ok, witness = False, f"f={f.to_text()} root={a}"
        record("cross relation s_a f - (s_a.f) s_a = c(a) f(a)", ok, witness)

        # Demazure equals exact division (f - s_a.f)/a~ against nonlinear f
        ok = True
        for t in range(trials):
            f = rand_linear() * rand_linear() + rand_linear()
            for gi in range(len(self.gens)):
                d = self.demazure(gi, f)
                s = self.gens[gi]
                coroot = self.simple_data[gi][2]
                back = d * Poly.linear(coroot)
                if back != f - self.weyl_act_poly(s, f):
                    ok = False
        record("divided difference is exact division", ok)

        # Drinfeld relations: s_a f~ = (s_a.f)~ s_a, and the group-algebra
        # commutator identity
        #   [f~, g~] = -[f~ - f, g~ - g]
        # (the sign is tied to the cross-relation convention above)
        ok, witness = True, None
        for t in range(max(4, trials // 4)):
            f = rand_linear()
            g = rand_linear()
            ft, gt = self.drinfeld_lift(f), self.drinfeld_lift(g)
            for gi in range(len(self.gens)):
                s = self.generator(gi)
                lhs = s * ft
                rhs = self.drinfeld_lift(self.weyl_act_poly(self.gens[gi], f)) * s
                if lhs != rhs:
                    ok, witness = False, f"s_{gi} f={f.to_text()}"
            fw, gw = ft - self.from_poly(f), gt - self.from_poly(g)
            lhs = ft * gt - gt * ft
            rhs = (fw * gw - gw * fw).scale(Fraction(-1))
            if lhs != rhs:
                ok, witness = False, f"[f~,g~] f={f.to_text()} g={g.to_text()}"
        record("Drinfeld presentation relations", ok, witness)

        # star is an involutive anti-automorphism; f~* = -f~
        ok, witness = True, None
        for t in range(trials):
            h1 = self.random_element(rng)
            h2 = self.random_element(rng)
            if self.star(self.star(h1)) != h1:
                ok, witness = False, "star not involutive"
            if self.star(h1 * h2) != self.star(h2) * self.star(h1):
                ok, witness = False, "star not anti-multiplicative"
        for i in range(self.k):
            if self.star(self.eps_tilde(i)) != self.eps_tilde(i).scale(Fraction(-1)):
                ok, witness = False, f"eps~_{i}* != -eps~_{i}"
        record("star anti-automorphism", ok, witness)
        return report

    def random_element(self, rng: random.Random, nterms: int = 2, maxdeg: int = 2) -> "HeckeElement":
        h = self.zero()
        for _ in range(nterms):
            w = self.weyl_elements[rng.randrange(len(self.weyl_elements))]
            exp = [0] * self.k
            for _ in range(rng.randint(0, maxdeg)):
                exp[rng.randrange(self.k)] += 1
            p = Poly(self.k, {tuple(exp): Fraction(rng.randint(-4, 4))})
            if p.is_zero():
                p = Poly.const(self.k, 1)
            h = h + HeckeElement(self, {w: p})
        return h

    # -- text format -----------------------------------------------------------
    def word_to_text(self, w: WeylElement) -> str:
        word = self.weyl_words[w]
        if not word:
            return "1"
        return " ".join(self.gen_names[g] for g in word)

    def parse_element(self, text: str) -> "HeckeElement":
        out = self.zero()
        for chunk in text.split("++"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "*|" in chunk:
                ptext, wtext = chunk.split("*|", 1)
            else:
                ptext, wtext = chunk, "1"
            p = _parse_poly(ptext.strip(), self.k)
            w = WeylElement.identity(self.k)
            wtext = wtext.strip()
            if wtext != "1":
                for name in wtext.split():
                    gi = self.gen_names.index(name)
                    w = w * self.gens[gi]
            out = out + HeckeElement(self, {w: p})
        return out


def _coxeter_order(a, b) -> int:
    """Order of s_a s_b for simple roots in the A/C realizations."""
    dot = sum(x * y for x, y in zip(a, b))
    if dot == 0:
        return 2
    na = sum(x * x for x in a)
    nb = sum(x * x for x in b)
    # cos^2 theta in {1/4: m=3, 1/2: m=4}
    c2 = Fraction(dot * dot, na * nb)
    if c2 == Fraction(1, 4):
        return 3
    if c2 == Fraction(1, 2):
        return 4
    raise ValueError(f"unexpected root pair {a}, {b}")


def _parse_poly(text: str, k: int) -> Poly:
    """Parse the polynomial factor of the textual element format."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    tokens = text.replace("-", "+-").split("+")
    p = Poly.zero(k)
    for tok in tokens:
        tok = tok.strip()
        if not tok:
            continue
        coeff = Fraction(1)
        exp = [0] * k
        neg = tok.startswith("-")
        if neg:
            tok = tok[1:].strip()
        for factor in tok.split("*"):
            factor = factor.strip()
            if not factor:
                continue
            if factor.startswith("eps"):
                if "^" in factor:
                    name, e = factor.split("^")
                    exp[int(name[3:]) - 1] += int(e)
                else:
                    exp[int(factor[3:]) - 1] += 1
            else:
                coeff *= Fraction(factor)
        if neg:
            coeff = -coeff
        p = p + Poly(k, {tuple(exp): coeff})
    return p


class HeckeElement:
    """A PBW-normal-form element sum_w p_w * w."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HeckeAlgebra, terms: Dict[WeylElement, Poly]):
        self.algebra = algebra
        self.terms = {w: p for w, p in terms.items() if not p.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out.get(w, Poly.zero(self.algebra.k)) + p
        return HeckeElement(self.algebra, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "HeckeElement":
        return HeckeElement(self.algebra, {w: p * c for w, p in self.terms.items()})

    def poly_mul(self, q: Poly) -> "HeckeElement":
        """Left multiplication by a polynomial."""
        return HeckeElement(self.algebra, {w: q * p for w, p in self.terms.items()})

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        alg = self.algebra
        out: Dict[WeylElement, Poly] = {}
        for w1, p1 in self.terms.items():
            for w2, p2 in other.terms.items():
                # (p1 w1)(p2 w2) = p1 * (w1 p2) * w2
                for u, q in alg.push_group_through(w1, p2).items():
                    uw = u * w2
                    out[uw] = out.get(uw, Poly.zero(alg.k)) + p1 * q
        return HeckeElement(alg, out)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset((w, p) for w, p in self.terms.items()))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        alg = self.algebra
        chunks = []
        keyed = sorted(
            self.terms.items(),
            key=lambda wp: (len(alg.weyl_words[wp[0]]), alg.weyl_words[wp[0]]),
        )
        for w, p in keyed:
            wtext = alg.word_to_text(w)
            chunks.append(f"({p.to_text()}) *| {wtext}")
        return " ++ ".join(chunks)

    def __repr__(self):
        return f"HeckeElement[{self.to_text()}]"
