"""Spherical principal series modules and their invariant Hermitian forms.

The module X(nu) = H (x)_{S(a)} C_nu has basis {w (x) 1 : w in W}.  The
action of a linear form f on a basis vector uses the cross relation

    f . (s u (x) 1) = s . ((s . f)(u (x) 1)) + c(a_s) f(a_s) (u (x) 1)

with base case f . (1 (x) 1) = f(nu) (1 (x) 1).

Invariant forms are parametrized by a class function-like map phi on W via
F(u (x) 1, v (x) 1) = phi(u^{-1} v); the star compatibility with the
polynomial generators cuts this down to a (generically one-dimensional)
solution space, and the signature of the resulting Gram matrix decides
unitarity of the spherical quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .hecke import HeckeAlgebra, HeckeElement
from .linalg import Mat, signature
from .rootdata import WeylElement, reflection_action
from .scalars import Poly


class PSModule:
    """X(nu) for a rational parameter nu (tuple of Fractions)."""

    def __init__(self, algebra: HeckeAlgebra, nu: Sequence):
        self.alg = algebra
        self.nu = tuple(Fraction(x) for x in nu)
        if len(self.nu) != algebra.k:
            raise ValueError("parameter length must equal the rank")
        self.basis = algebra.weyl_elements
        self.index = {w: i for i, w in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._eps_mats: Optional[List[Mat]] = None

    # -- actions ---------------------------------------------------------
    def group_matrix(self, w: WeylElement) -> Mat:
        """Left multiplication by w, a permutation of the basis."""
        m = Mat.zeros(self.dim, self.dim)
        for v, j in self.index.items():
            m[self.index[w * v], j] = Fraction(1)
        return m

    def _act_linear(self, coeffs: Tuple[Fraction, ...], w: WeylElement) -> Dict[int, Fraction]:
        """f . (w (x) 1) as a sparse vector, f = sum coeffs[i] eps_i."""
        word = self.alg.weyl_words[w]
        if not word:
            val = sum(c * t for c, t in zip(coeffs, self.nu))
            return {self.index[w]: Fraction(val)} if val else {}
        gi = word[0]
        s = self.alg.gens[gi]
        u = s * w
        root, cpar, _ = self.alg.simple_data[gi]
        # s . f under the signed permutation action
        sc = [Fraction(0)] * self.alg.k
        for i, c in enumerate(coeffs):
            sc[s.perm[i]] += s.signs[i] * c
        out: Dict[int, Fraction] = {}
        for idx, val in self._act_linear(tuple(sc), u).items():
            tgt = self.index[s * self.basis[idx]]
            out[tgt] = out.get(tgt, Fraction(0)) + val
        fa = sum(x * y for x, y in zip(coeffs, root))
        if cpar and fa:
            iu = self.index[u]
            out[iu] = out.get(iu, Fraction(0)) + cpar * fa
        return {i: v for i, v in out.items() if v}

    def eps_matrices(self) -> List[Mat]:
        """Action matrices of eps_1..eps_k."""
        if self._eps_mats is None:
            mats = []
            for j in range(self.alg.k):
                coeffs = tuple(
                    Fraction(1) if i == j else Fraction(0) for i in range(self.alg.k)
                )
                m = Mat.zeros(self.dim, self.dim)
                for w, col in self.index.items():
                    for row, val in self._act_linear(coeffs, w).items():
                        m[row, col] = val
                mats.append(m)
            self._eps_mats = mats
        return self._eps_mats

    def element_matrix(self, h: HeckeElement) -> Mat:
        """Action matrix of an arbitrary algebra element."""
        eps = self.eps_matrices()
        total = Mat.zeros(self.dim, self.dim)
        for w, p in h.terms.items():
            gm = self.group_matrix(w)
            for exp, coeff in p.terms.items():
                m = Mat.identity(self.dim).scale(Fraction(coeff))
                for i, e in enumerate(exp):
                    for _ in range(e):
                        m = eps[i] * m
                total = total + m * gm
        return total

    def star_eps_matrix(self, j: int) -> Mat:
        """Action matrix of eps_j* = -eps_j + sum_b c(b) eps_j(b) s_b."""
        m = self.eps_matrices()[j].scale(Fraction(-1))
        for b in self.alg.rs.positive_roots:
            c = self.alg.c_of_root(b)
            fb = Fraction(b[j])
            if c and fb:
                m = m + self.group_matrix(reflection_action(b)).scale(c * fb)
        return m

    def is_cyclic(self) -> bool:
        """Krylov check: 1 (x) 1 generates under W and the eps_j."""
        v0 = [Fraction(0)] * self.dim
        v0[self.index[WeylElement.identity(self.alg.k)]] = Fraction(1)
        frontier = [v0]
        mats = self.eps_matrices() + [self.group_matrix(g) for g in self.alg.gens]
        rank = 1
        vecs = [v0]
        while frontier and rank < self.dim:
            nxt = []
            for v in frontier:
                for m in mats:
                    mv = m.apply(v)
                    cand = Mat(vecs + [mv])
                    r = cand.rank()
                    if r > rank:
                        rank = r
                        vecs.append(mv)
                        nxt.append(mv)
            frontier = nxt
        return rank == self.dim

    # -- invariant Hermitian form ----------------------------------------
    def hermitian_form(self) -> Optional[Mat]:
        """Gram matrix of an invariant form with F(1,1) = 1, or None.

        None means no invariant Hermitian form exists, or none with a
        nonzero value on the cyclic vector.
        """
        n = self.dim
        k = self.alg.k
        eps = self.eps_matrices()
        stars = [self.star_eps_matrix(j) for j in range(k)]
        inv_index = [self.index[w.inverse()] for w in self.basis]

        def gram_from_phi(phi: Sequence[Fraction]) -> Mat:
            g = Mat.zeros(n, n)
            for u, iu in self.index.items():
                ui = u.inverse()
                for v, iv in self.index.items():
                    g[iu, iv] = phi[self.index[ui * v]]
            return g

        # Equations on phi: symmetry phi(w) = phi(w^-1) and the row of
        # M_j^T G = G M_j* at u = identity:
        #   sum_r (M_j)[r, e] phi(r) = sum_r (M_j*)[r, v] phi(r)   per v, j
        rows: List[list] = []
        e_idx = self.index[WeylElement.identity(k)]
        for w, i in self.index.items():
            ii = inv_index[i]
            if ii != i:
                row = [Fraction(0)] * n
                row[i] = Fraction(1)
                row[ii] = Fraction(-1)
                rows.append(row)
        for j in range(k):
            mj, sj = eps[j], stars[j]
            for v in range(n):
                # F(eps_j . e, v) = F(e, eps_j* . v)
                row = [Fraction(0)] * n
                for r in range(n):
                    if mj[r, e_idx]:
                        # F(r, v) = phi(r^{-1} v)
                        row[self.index[self.basis[r].inverse() * self.basis[v]]] += mj[
                            r, e_idx
                        ]
                    if sj[r, v]:
                        row[r] -= sj[r, v]
                if any(row):
                    rows.append(row)
        sols = Mat(rows).nullspace() if rows else [
            [Fraction(1) if i == t else Fraction(0) for i in range(n)] for t in range(n)
        ]
        checked = []
        for phi in sols:
            g = gram_from_phi(phi)
            if all((eps[j].transpose() * g - g * stars[j]).is_zero() for j in range(k)):
                checked.append(phi)
        if not checked and sols:
            # the reduced system admitted spurious directions: impose the
            # full compatibility equations
            full_rows = list(rows)
            for j in range(k):
                mj, sj = eps[j], stars[j]
                for u in range(n):
                    ui = self.basis[u].inverse()
                    for v in range(n):
                        row = [Fraction(0)] * n
                        for r in range(n):
                            if mj[r, u]:
                                row[
                                    self.index[self.basis[r].inverse() * self.basis[v]]
                                ] += mj[r, u]
                            if sj[r, v]:
                                row[self.index[ui * self.basis[r]]] -= sj[r, v]
                        if any(row):
                            full_rows.append(row)
            checked = Mat(full_rows).nullspace()
        if not checked:
            return None
        # prefer a solution with phi(e) = 1
        for phi in checked:
            if phi[e_idx]:
                scale = Fraction(1) / phi[e_idx]
                return gram_from_phi([scale * x for x in phi])
        return None

    def form_report(self) -> dict:
        """Hermitian form existence, inertia and unitarity at this nu."""
        g = self.hermitian_form()
        if g is None:
            return {
                "nu": [str(x) for x in self.nu],
                "hermitian": False,
                "radical_dim": None,
                "pos": None,
                "neg": None,
                "zero": None,
                "unitary": False,
            }
        pos, neg, zero = signature(g)
        return {
            "nu": [str(x) for x in self.nu],
            "hermitian": True,
            "radical_dim": zero,
            "pos": pos,
            "neg": neg,
            "zero": zero,
            "unitary": neg == 0,
        }


def scan_points(algebra: HeckeAlgebra, points: Sequence[Sequence]) -> List[dict]:
    """Form reports for a sequence of rational parameters."""
    return [PSModule(algebra, nu).form_report() for nu in points]


def line_points(direction: Sequence, start: Fraction, stop: Fraction, steps: int):
    """Evenly spaced rational points t * direction for t in [start, stop]."""
    direction = [Fraction(x) for x in direction]
    if steps < 1:
        raise ValueError("steps must be positive")
    out = []
    for i in range(steps + 1):
        t = start + (stop - start) * Fraction(i, steps)
        out.append(tuple(t * d for d in direction))
    return out
