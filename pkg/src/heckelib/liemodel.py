"""Matrix models of the classical real groups and their restricted roots.

Each model packages the real Lie algebra g as exact matrices over the
Gaussian rationals, a Cartan involution theta, an invariant trace form
kappa, a maximal flat a in p with a fixed coordinate system, restricted
root spaces found as simultaneous ad-eigenspaces, the compact centralizer
data (m and finite generators of M), the character mu_0 of K used to
normalize the spherical tensor functors, and - per positive restricted
root - a distinguished compact element Z_a with integral i-spectrum whose
quarter-turn exponential k_a realizes the root reflection on a.

Families:
  GL(n,R):  theta X = -X^T, K = O(n), a = diagonal matrices
  U(p,q):   J = diag(1^p, -1^q), theta X = J X J
  Sp(2n,R): realized with the symplectic form J_sp = [[0, J_n], [-J_n, 0]]
            (J_n the antidiagonal flip) so that theta is conjugation by
            xi = diag(1^n, -1^n)
  O(p,q):   J = diag(1^p, -1^q), theta X = J X J
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import Mat
from .rootdata import GroupDescriptor, RestrictedRootDatum, restricted_root_datum
from .scalars import GaussRational, I, Q

ZERO = GaussRational(0)
ONE = GaussRational(1)


def _gmat(n: int) -> Mat:
    return Mat([[GaussRational(0) for _ in range(n)] for _ in range(n)])


def _E(n: int, a: int, b: int, v=1) -> Mat:
    m = _gmat(n)
    m[a, b] = GaussRational.of(v)
    return m


def mat_to_flat(m: Mat) -> List[Fraction]:
    """Flatten a Gaussian-rational matrix to real coordinates."""
    out = []
    for r in m.rows:
        for a in r:
            g = a if isinstance(a, GaussRational) else GaussRational(a)
            out.append(g.re)
            out.append(g.im)
    return out


def flat_to_mat(v: Sequence[Fraction], n: int) -> Mat:
    m = _gmat(n)
    it = iter(v)
    for i in range(n):
        for j in range(n):
            m[i, j] = GaussRational(next(it), next(it))
    return m


def bracket(x: Mat, y: Mat) -> Mat:
    return x * y - y * x


def _coords(basis_flat: Mat, m: Mat, n: int) -> Optional[List[Fraction]]:
    """Coordinates of m in the real span of a basis (columns), or None."""
    return basis_flat.solve(mat_to_flat(m))


@dataclass
class LieModel:
    group: GroupDescriptor
    datum: RestrictedRootDatum
    n: int
    kappa_scale: Fraction
    g_basis: List[Mat] = field(default_factory=list)
    k_basis: List[Mat] = field(default_factory=list)
    p_basis: List[Mat] = field(default_factory=list)
    a_basis: List[Mat] = field(default_factory=list)
    m_basis: List[Mat] = field(default_factory=list)
    mR_generators: List[Mat] = field(default_factory=list)
    root_spaces: Dict[Tuple[Fraction, ...], List[Mat]] = field(default_factory=dict)
    _z_cache: Dict[Tuple[Fraction, ...], Mat] = field(default_factory=dict)

    # -- structure maps ---------------------------------------------------
    def theta(self, x: Mat) -> Mat:
        if self.group.family == "GL":
            return x.transpose().scale(GaussRational(-1))
        xi = self.xi()
        return xi * x * xi

    def xi(self) -> Mat:
        """The involution matrix (J for U/O, diag(1^n,-1^n) for Sp)."""
        n = self.n
        m = _gmat(n)
        if self.group.family == "GL":
            for i in range(n):
                m[i, i] = ONE
            return m
        split = self.n // 2 if self.group.family == "Sp" else self.group.p
        for i in range(n):
            m[i, i] = ONE if i < split else GaussRational(-1)
        return m

    def form_matrix(self) -> Mat:
        """Matrix of the defining bilinear/sesquilinear form of the group."""
        n = self.n
        if self.group.family == "GL":
            return Mat.identity(n)
        if self.group.family == "Sp":
            h = n // 2
            m = _gmat(n)
            for a in range(h):
                m[a, n - 1 - a] = ONE  # top-right antidiagonal block
                m[n - 1 - a, a] = GaussRational(-1)
            return m
        return self.xi()

    def kappa(self, x: Mat, y: Mat) -> Fraction:
        t = (x * y).trace()
        g = t if isinstance(t, GaussRational) else GaussRational(t)
        if g.im:
            raise ValueError("trace form produced a non-real value")
        return self.kappa_scale * g.re

    def in_group(self, g: Mat) -> bool:
        """Membership in the matrix group of the model."""
        fam = self.group.family
        w = self.form_matrix()
        if fam == "GL":
            return g.det() != 0
        if fam in ("U",):
            return (g.conjugate().transpose() * w * g - w).is_zero()
        return (g.transpose() * w * g - w).is_zero()

    def in_algebra(self, x: Mat) -> bool:
        return _coords(self._g_flat(), x, self.n) is not None

    def _g_flat(self) -> Mat:
        if not hasattr(self, "_g_flat_cache"):
            self._g_flat_cache = Mat.from_cols([mat_to_flat(b) for b in self.g_basis])
        return self._g_flat_cache

    # -- duals and Casimir --------------------------------------------------
    def kappa_dual(self, basis: List[Mat]) -> List[Mat]:
        gram = Mat(
            [[Fraction(self.kappa(x, y)) for y in basis] for x in basis]
        )
        ginv = gram.inverse()
        duals = []
        for j in range(len(basis)):
            d = _gmat(self.n)
            for i in range(len(basis)):
                if ginv[i, j]:
                    d = d + basis[i].scale(GaussRational(ginv[i, j]))
            duals.append(d)
        return duals

    def casimir_on_v(self) -> Mat:
        duals = self.kappa_dual(self.g_basis)
        c = _gmat(self.n)
        for b, d in zip(self.g_basis, duals):
            c = c + b * d
        return c

    # -- characters ----------------------------------------------------------
    def _q_block_det(self, g: Mat):
        p = self.group.p
        n = self.n
        rows = [[g[i, j] for j in range(p, n)] for i in range(p, n)]
        return Mat(rows).det()

    def mu0_group(self, g: Mat) -> GaussRational:
        """The character mu_0 of K evaluated on a group element."""
        fam = self.group.family
        if fam == "GL":
            d = g.det()
            return d if isinstance(d, GaussRational) else GaussRational(d)
        if fam == "Sp":
            h = self.n // 2
            rows = [[g[i, j] for j in range(h, self.n)] for i in range(h, self.n)]
            d = Mat(rows).det()
            return d if isinstance(d, GaussRational) else GaussRational(d)
        d = self._q_block_det(g)
        d = d if isinstance(d, GaussRational) else GaussRational(d)
        if fam == "O":
            # sign character: q-block of an element of O(p) x O(q) has
            # determinant +-1
            return d
        return d  # U: determinant of the q-block

    def dmu0(self, x: Mat) -> GaussRational:
        """Differential of mu_0 on k."""
        fam = self.group.family
        if fam in ("GL", "O"):
            return GaussRational(0)
        if fam == "Sp":
            h = self.n // 2
            t = GaussRational(0)
            for i in range(h, self.n):
                t = t + x[i, i]
            return t
        t = GaussRational(0)
        for i in range(self.group.p, self.n):
            t = t + x[i, i]
        return t

    # -- restricted roots --------------------------------------------------
    def root_norm_sq(self, alpha: Tuple[Fraction, ...]) -> Fraction:
        """|alpha|^2 with respect to the form kappa induces on a*."""
        gram = Mat(
            [[Fraction(self.kappa(x, y)) for y in self.a_basis] for x in self.a_basis]
        )
        ginv = gram.inverse()
        return sum(
            alpha[i] * alpha[j] * ginv[i, j]
            for i in range(len(alpha))
            for j in range(len(alpha))
        )

    def coroot_element(self, alpha: Tuple[Fraction, ...]) -> Mat:
        """H_alpha in a with kappa(H_alpha, A) = alpha(A)."""
        gram = Mat(
            [[Fraction(self.kappa(x, y)) for y in self.a_basis] for x in self.a_basis]
        )
        coeffs = gram.inverse().apply(list(alpha))
        h = _gmat(self.n)
        for c, a in zip(coeffs, self.a_basis):
            if c:
                h = h + a.scale(GaussRational(c))
        return h

    def reflection_on_a(self, alpha: Tuple[Fraction, ...]) -> Mat:
        """Matrix of s_alpha on a in the a-basis coordinates."""
        r = len(self.a_basis)
        nsq = self.root_norm_sq(alpha)
        gram = Mat(
            [[Fraction(self.kappa(x, y)) for y in self.a_basis] for x in self.a_basis]
        )
        hcoef = gram.inverse().apply(list(alpha))  # H_alpha in a-coords
        m = Mat.identity(r)
        for j in range(r):
            # s(A_j) = A_j - alpha(A_j) * 2 H_alpha / |alpha|^2
            for i in range(r):
                m[i, j] = m[i, j] - alpha[j] * Fraction(2) * hcoef[i] / nsq
        return m

    # -- Z_alpha construction ----------------------------------------------
    def z_alpha(self, alpha: Tuple[Fraction, ...]) -> Mat:
        """A verified compact representative Z = X + theta X for the root.

        X is found inside the computed root space g_alpha, scaled so that
        kappa(X, theta X) = -2/|alpha|^2, and accepted only when the
        i-spectrum of Z is integral and exp(pi Z / 2) implements s_alpha
        on a with square centralizing a.
        """
        alpha = tuple(Fraction(x) for x in alpha)
        if alpha in self._z_cache:
            return self._z_cache[alpha]
        space = self.root_spaces.get(alpha)
        if not space:
            raise ValueError(f"{alpha} is not a restricted root")
        target = Fraction(-2) / self.root_norm_sq(alpha)
        candidates: List[Mat] = []
        for b in space:
            candidates.append(b)
        for b1, b2 in itertools.combinations(space, 2):
            candidates.append(b1 + b2)
            candidates.append(b1 - b2)
        for x in candidates:
            val = self.kappa(x, self.theta(x))
            if val == 0 or (target / val) <= 0:
                continue
            ratio = Fraction(target, 1) / val
            root = _rational_sqrt(ratio)
            if root is None:
                continue
            xs = x.scale(GaussRational(root))
            z = xs + self.theta(xs)
            try:
                k = exp_pi_half(z)
            except ValueError:
                continue
            if not self._verify_k_alpha(alpha, z, k):
                continue
            self._z_cache[alpha] = z
            return z
        raise ValueError(f"no integral-spectrum representative found for {alpha}")

    def k_alpha(self, alpha: Tuple[Fraction, ...]) -> Mat:
        return exp_pi_half(self.z_alpha(tuple(Fraction(x) for x in alpha)))

    def _verify_k_alpha(self, alpha, z, k) -> bool:
        if not self.in_group(k):
            return False
        kinv = k.inverse()
        s = self.reflection_on_a(alpha)
        r = len(self.a_basis)
        for j in range(r):
            expect = _gmat(self.n)
            for i in range(r):
                if s[i, j]:
                    expect = expect + self.a_basis[i].scale(GaussRational(s[i, j]))
            if not (k * self.a_basis[j] * kinv - expect).is_zero():
                return False
        k2 = k * k
        for a in self.a_basis:
            if not (k2 * a - a * k2).is_zero():
                return False
        # k in K: fixed by the Cartan involution of the group
        if self.group.family == "GL":
            if not (k.transpose() * k - Mat.identity(self.n)).is_zero():
                return False
        else:
            xi = self.xi()
            if not (xi * k * xi - k).is_zero():
                return False
        return True

    # -- structural verification ----------------------------------------------
    def verify_structure(self) -> List[dict]:
        """Exact checks of the model against its restricted root datum."""
        report = []

        def record(check, ok, witness=None):
            entry = {"check": check, "status": "pass" if ok else "fail"}
            if witness is not None and not ok:
                entry["witness"] = witness
            report.append(entry)

        # g closed under bracket and theta
        ok = True
        for x in self.g_basis:
            if not self.in_algebra(self.theta(x)):
                ok = False
        for x, y in itertools.combinations(self.g_basis, 2):
            if not self.in_algebra(bracket(x, y)):
                ok = False
        record("algebra closed under bracket and involution", ok)

        # Cartan decomposition sizes
        ok = len(self.k_basis) + len(self.p_basis) == len(self.g_basis)
        record("Cartan decomposition spans the algebra", ok)

        # a is abelian, inside p
        ok = all(
            bracket(x, y).is_zero() for x, y in itertools.combinations(self.a_basis, 2)
        ) and all((self.theta(x) + x).is_zero() for x in self.a_basis)
        record("maximal flat is abelian and theta-odd", ok)

        # restricted roots with multiplicities match the root datum
        r = len(self.a_basis)
        expect = _expected_roots(self.datum, r)
        got = {a: len(b) for a, b in self.root_spaces.items() if any(a)}
        record(
            "restricted roots and multiplicities",
            got == expect,
            None if got == expect else f"got {sorted(got)} expected {sorted(expect)}",
        )

        # zero weight space = m + a
        zero = self.root_spaces.get(tuple(Fraction(0) for _ in range(r)), [])
        record(
            "zero weight space is m + a",
            len(zero) == len(self.m_basis) + len(self.a_basis),
        )

        # Casimir scalar on the defining module
        c = self.casimir_on_v()
        fam = self.group.family
        scalar = {
            "GL": Fraction(self.n),
            "U": Fraction(self.n),
            "Sp": Fraction(self.n + 1),
            "O": Fraction(self.n - 1),
        }[fam]
        ok = (c - Mat.identity(self.n).scale(GaussRational(scalar))).is_zero()
        record("Casimir acts by the expected scalar on V", ok, f"C|_V = {c.rows[0][0]}")

        # mu_0 is a character: its differential kills [k, k]
        ok = all(
            not self.dmu0(bracket(x, y))
            for x, y in itertools.combinations(self.k_basis, 2)
        )
        record("mu_0 differential vanishes on [k, k]", ok)
        ok = True
        for gmat in self.mR_generators:
            if not self.in_group(gmat):
                ok = False
            for a in self.a_basis:
                if not (gmat * a - a * gmat).is_zero():
                    ok = False
            v = self.mu0_group(gmat)
            if v * v != GaussRational(1):
                ok = False
        record("M generators centralize a and have unitary character values", ok)

        # Z_alpha for every positive restricted root
        ok, witness = True, None
        for alpha in sorted(self.root_spaces):
            if not _is_positive(alpha):
                continue
            try:
                z = self.z_alpha(alpha)
            except ValueError as e:
                ok, witness = False, str(e)
                continue
            if not (self.theta(z) - z).is_zero():
                ok, witness = False, f"Z for {alpha} not compact"
        record("root reflections realized by quarter-turn exponentials", ok, witness)
        return report


def _expected_roots(datum, r: int) -> Dict[Tuple[Fraction, ...], int]:
    """Expand the symbolic multiplicity table into explicit root tuples."""
    out: Dict[Tuple[Fraction, ...], int] = {}

    def tup(**entries):
        t = [Fraction(0)] * r
        for idx, v in entries.items():
            t[int(idx[1:])] = Fraction(v)
        return tuple(t)

    for kind, mult in datum.multiplicities.items():
        if kind == "e_i-e_j":
            for i in range(r):
                for j in range(r):
                    if i != j:
                        out[tup(**{f"i{i}": 1, f"i{j}": -1})] = mult
        elif kind == "e_i+-e_j":
            for i in range(r):
                for j in range(i + 1, r):
                    for s1, s2 in ((1, -1), (-1, 1), (1, 1), (-1, -1)):
                        out[tup(**{f"i{i}": s1, f"i{j}": s2})] = mult
        elif kind == "e_i":
            for i in range(r):
                out[tup(**{f"i{i}": 1})] = mult
                out[tup(**{f"i{i}": -1})] = mult
        elif kind == "2e_i":
            for i in range(r):
                out[tup(**{f"i{i}": 2})] = mult
                out[tup(**{f"i{i}": -2})] = mult
        else:
            raise ValueError(f"unknown root kind {kind}")
    return out


def _is_positive(alpha: Tuple[Fraction, ...]) -> bool:
    for x in alpha:
        if x:
            return x > 0
    return False


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    from math import isqrt

    pn, pd = isqrt(x.numerator), isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def exp_pi_half(z: Mat) -> Mat:
    """exp(pi z / 2) for z with spectrum in i*Z, by Lagrange interpolation.

    Raises ValueError if the spectrum is not contained in i*{-B..B}.
    """
    n = z.nrows
    bound = 6
    nodes = []
    for m in range(-bound, bound + 1):
        shifted = z - Mat.identity(n).scale(I * GaussRational(m))
        if shifted.det() == 0:
            nodes.append(m)
    if not nodes:
        raise ValueError("no integral i-eigenvalues found")
    prod = Mat.identity(n)
    for m in nodes:
        prod = prod * (z - Mat.identity(n).scale(I * GaussRational(m)))
    if not prod.is_zero():
        raise ValueError("spectrum is not integral in i units")
    result = _gmat(n)
    for m in nodes:
        # e^{i pi m / 2} = i^m
        term = Mat.identity(n)
        coeff = I ** (m % 4)
        for mp in nodes:
            if mp == m:
                continue
            term = term * (z - Mat.identity(n).scale(I * GaussRational(mp)))
            coeff = coeff / (I * GaussRational(m - mp))
        result = result + term.scale(coeff)
    return result


# -- model constructors ----------------------------------------------------


def build_model(group: GroupDescriptor) -> LieModel:
    datum = restricted_root_datum(group)
    fam = group.family
    if fam == "GL":
        model = _build_gl(group, datum)
    elif fam == "U":
        model = _build_u(group, datum)
    elif fam == "Sp":
        model = _build_sp(group, datum)
    else:
        model = _build_o(group, datum)
    _finish(model)
    return model


def _split_cartan(model: LieModel):
    """Populate k and p from the theta eigenspaces of the g basis span."""
    n = model.n
    kvecs, pvecs = [], []
    for x in model.g_basis:
        kpart = (x + model.theta(x)).scale(GaussRational(Fraction(1, 2)))
        ppart = (x - model.theta(x)).scale(GaussRational(Fraction(1, 2)))
        for part, acc in ((kpart, kvecs), (ppart, pvecs)):
            if part.is_zero():
                continue
            flat = mat_to_flat(part)
            if not acc or not _in_span_flat(acc, flat):
                acc.append(flat)
    model.k_basis = [flat_to_mat(v, n) for v in kvecs]
    model.p_basis = [flat_to_mat(v, n) for v in pvecs]


def _in_span_flat(vectors: List[List[Fraction]], target: List[Fraction]) -> bool:
    from .linalg import column_span_rank

    base = column_span_rank(vectors)
    return column_span_rank(vectors + [target]) == base


def _simultaneous_eigenspaces(model: LieModel):
    """Split g into joint ad(a)-eigenspaces over small rational eigenvalues."""
    n = model.n
    spaces: List[Tuple[Tuple[Fraction, ...], List[List[Fraction]]]] = [
        ((), [mat_to_flat(b) for b in model.g_basis])
    ]
    for a in model.a_basis:
        nxt = []
        for tag, vecs in spaces:
            # matrix of ad(a) on this subspace
            cols = Mat.from_cols(vecs)
            admat_cols = []
            for v in vecs:
                m = flat_to_mat(v, n)
                br = bracket(a, m)
                coords = cols.solve(mat_to_flat(br))
                if coords is None:
                    raise ValueError("flat does not normalize the subspace")
                admat_cols.append(coords)
            admat = Mat.from_cols(admat_cols)
            d = len(vecs)
            found = 0
            for ev in [Fraction(x) for x in (-2, -1, 0, 1, 2)]:
                shifted = admat - Mat.identity(d).scale(ev)
                null = shifted.nullspace()
                if not null:
                    continue
                sub = []
                for coeffs in null:
                    w = [Fraction(0)] * len(vecs[0])
                    for c, v in zip(coeffs, vecs):
                        if c:
                            w = [wi + c * vi for wi, vi in zip(w, v)]
                    sub.append(w)
                found += len(sub)
                nxt.append((tag + (ev,), sub))
            if found != d:
                raise ValueError("ad(a) is not semisimple with small eigenvalues")
        spaces = nxt
    model.root_spaces = {
        tag: [flat_to_mat(v, n) for v in vecs] for tag, vecs in spaces
    }


def _compute_m(model: LieModel):
    """m = centralizer of a inside k."""
    if not model.k_basis:
        model.m_basis = []
        return
    n = model.n
    cols = []
    for kb in model.k_basis:
        col = []
        for a in model.a_basis:
            col.extend(mat_to_flat(bracket(a, kb)))
        cols.append(col)
    null = Mat.from_cols(cols).nullspace()
    out = []
    for coeffs in null:
        m = _gmat(n)
        for c, kb in zip(coeffs, model.k_basis):
            if c:
                m = m + kb.scale(GaussRational(c))
        out.append(m)
    model.m_basis = out


def _finish(model: LieModel):
    _split_cartan(model)
    _simultaneous_eigenspaces(model)
    _compute_m(model)


def _diag_sign(n: int, flips: Sequence[int]) -> Mat:
    out = _gmat(n)
    for i in range(n):
        out[i, i] = GaussRational(-1 if i in flips else 1)
    return out


def _build_gl(group: GroupDescriptor, datum) -> LieModel:
    n = group.p
    model = LieModel(group, datum, n, Fraction(1))
    model.g_basis = [_E(n, a, b) for a in range(n) for b in range(n)]
    model.a_basis = [_E(n, i, i) for i in range(n)]
    model.mR_generators = [_diag_sign(n, [i]) for i in range(n)]
    return model


def _hermitian_family_basis(n: int, eta: List[int]) -> List[Mat]:
    """Basis of u(J) for J = diag(eta), eta entries +-1."""
    basis = []
    for a in range(n):
        m = _gmat(n)
        m[a, a] = I
        basis.append(m)
    for a in range(n):
        for b in range(a + 1, n):
            s = eta[a] * eta[b]
            m = _gmat(n)
            m[a, b] = ONE
            m[b, a] = GaussRational(-s)
            basis.append(m)
            m = _gmat(n)
            m[a, b] = I
            m[b, a] = I * GaussRational(s)
            basis.append(m)
    return basis


def _flat_pair_a_basis(p: int, q: int, n: int) -> List[Mat]:
    out = []
    for i in range(1, q + 1):
        m = _gmat(n)
        m[p - i, p + i - 1] = ONE
        m[p + i - 1, p - i] = ONE
        out.append(m)
    return out


def _build_u(group: GroupDescriptor, datum) -> LieModel:
    p, q = group.p, group.q
    n = p + q
    model = LieModel(group, datum, n, Fraction(1))
    eta = [1] * p + [-1] * q
    model.g_basis = _hermitian_family_basis(n, eta)
    model.a_basis = _flat_pair_a_basis(p, q, n)
    gens = []
    for i in range(1, q + 1):
        gens.append(_diag_sign(n, [p - i, p + i - 1]))
    for j in range(p - q):
        gens.append(_diag_sign(n, [j]))
    model.mR_generators = gens
    return model


def _build_o(group: GroupDescriptor, datum) -> LieModel:
    p, q = group.p, group.q
    n = p + q
    model = LieModel(group, datum, n, Fraction(1, 2))
    basis = []
    eta = [1] * p + [-1] * q
    for a in range(n):
        for b in range(a + 1, n):
            m = _gmat(n)
            m[a, b] = ONE
            m[b, a] = GaussRational(-eta[a] * eta[b])
            basis.append(m)
    model.g_basis = basis
    model.a_basis = _flat_pair_a_basis(p, q, n)
    gens = []
    for i in range(1, q + 1):
        gens.append(_diag_sign(n, [p - i, p + i - 1]))
    for j in range(p - q):
        gens.append(_diag_sign(n, [j]))
    model.mR_generators = gens
    return model


def _build_sp(group: GroupDescriptor, datum) -> LieModel:
    h = group.p
    nn = 2 * h
    model = LieModel(group, datum, nn, Fraction(1, 2))
    jflip = _gmat(h)
    for a in range(h):
        jflip[a, h - 1 - a] = ONE

    def embed(a_block: Optional[Mat], b_block: Optional[Mat]) -> Mat:
        # X = [[A, B], [B^dagger, -J A^T J]] in sp(2n,C) cap u(n,n)
        x = _gmat(nn)
        if a_block is not None:
            d_block = (jflip * a_block.transpose() * jflip).scale(GaussRational(-1))
            for i in range(h):
                for j in range(h):
                    x[i, j] = a_block[i, j]
                    x[h + i, h + j] = d_block[i, j]
        if b_block is not None:
            c_block = b_block.conjugate().transpose()
            for i in range(h):
                for j in range(h):
                    x[i, h + j] = b_block[i, j]
                    x[h + i, j] = c_block[i, j]
        return x

    basis = []
    # A ranges over u(n)
    for a_block in _hermitian_family_basis(h, [1] * h):
        basis.append(embed(a_block, None))
    # B = J S with S complex symmetric
    for a in range(h):
        for b in range(a, h):
            for scalar in (ONE, I):
                s = _gmat(h)
                s[a, b] = scalar
                s[b, a] = scalar
                basis.append(embed(None, jflip * s))
    model.g_basis = basis
    model.a_basis = _flat_pair_a_basis(h, h, nn)
    gens = []
    for i in range(h):
        gens.append(_diag_sign(nn, [i, nn - 1 - i]))
    model.mR_generators = gens
    return model
