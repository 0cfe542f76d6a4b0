"""Tensor-space models for graded Hecke algebra actions.

For a classical matrix model with defining representation V and real
rank ``k``, this module realizes the space ``mu_0^* (x) V^{(x)k}``, its
subspace of vectors fixed by the centralizer of the flat Cartan
subspace (computed and compared with a closed-form basis), and the slot
operators built from the Casimir tensor:

    Omega_{i,j}      = sum_E  E in slot i, dual(E) in slot j
    Omega_{i,j}^k/p  = the same sums restricted to the compact or
                       noncompact part of the Cartan decomposition

together with the signed symmetric-group action, the sign operators
``sbar_j = -(xi in slot j)``, the contraction maps coming from the
invariant bilinear form, and the geometric Weyl group action through
group elements ``k_alpha = exp(pi Z_alpha / 2)``.

Vectors are sparse dictionaries mapping index tuples (one index per V
slot) to Gaussian-rational coefficients; the one-dimensional character
factor in position 0 is carried implicitly as a twist on group and Lie
algebra actions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .linalg import Mat
from .liemodel import LieModel, _diag_sign
from .rootdata import WeylElement
from .scalars import GaussRational

Vec = Dict[Tuple[int, ...], GaussRational]

ZERO = GaussRational(0)
ONE = GaussRational(1)


# --------------------------------------------------------------------------
# sparse vector helpers
# --------------------------------------------------------------------------


def vec_add(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for idx, v in b.items():
        w = out.get(idx, ZERO) + v
        if w == 0:
            out.pop(idx, None)
        else:
            out[idx] = w
    return out


def vec_scale(a: Vec, c) -> Vec:
    if c == 0:
        return {}
    return {idx: v * c for idx, v in a.items()}

def vec_sub(a: Vec, b: Vec) -> Vec:
    return vec_add(a, vec_scale(b, GaussRational(-1)))


def vec_is_zero(a: Vec) -> bool:
    return all(v == 0 for v in a.values())


def vec_eq(a: Vec, b: Vec) -> bool:
    return vec_is_zero(vec_sub(a, b))


def apply_slot(mat: Mat, slot: int, vec: Vec) -> Vec:
    """Apply a matrix to one tensor slot (0-based) of a sparse vector."""
    out: Vec = {}
    n = mat.nrows
    for idx, coef in vec.items():
        col = idx[slot]
        for row in range(n):
            m = mat[row, col]
            if m == 0:
                continue
            nidx = idx[:slot] + (row,) + idx[slot + 1 :]
            w = out.get(nidx, ZERO) + coef * m
            if w == 0:
                out.pop(nidx, None)
            else:
                out[nidx] = w
    return out


def _as_gauss(x) -> GaussRational:
    return x if isinstance(x, GaussRational) else GaussRational(x)


class PivotSolver:
    """Express sparse vectors as coordinates in a fixed list of sparse vectors.

    Picks a square pivot submatrix once; each coordinate query is a single
    matrix application followed by an exact reconstruction check.
    """

    def __init__(self, basis: List[Vec]):
        self.basis = basis
        support = sorted({idx for vec in basis for idx in vec})
        rows = Mat([[vec.get(idx, ZERO) for vec in basis] for idx in support])
        _, pivots = rows.transpose().rref()
        self.chosen = [support[i] for i in pivots]
        square = Mat([[vec.get(idx, ZERO) for vec in basis] for idx in self.chosen])
        self.inverse = square.inverse()

    def coords(self, vec: Vec) -> Optional[List[GaussRational]]:
        out = self.inverse.apply([vec.get(idx, ZERO) for idx in self.chosen])
        recon: Vec = {}
        for c, b in zip(out, self.basis):
            if c != 0:
                recon = vec_add(recon, vec_scale(b, c))
        if not vec_eq(recon, vec):
            return None
        return out

    def matrix_of(self, op) -> Optional[Mat]:
        """Matrix of a vector-space operator in this basis; None if the
        operator does not preserve the span."""
        cols = []
        for b in self.basis:
            c = self.coords(op(b))
            if c is None:
                return None
            cols.append(c)
        return Mat.from_cols(cols)


# --------------------------------------------------------------------------
# the tensor space
# --------------------------------------------------------------------------


class TensorSpace:
    """The space mu_0^* (x) V^{(x)k} for a classical matrix model."""

    def __init__(self, model: LieModel, k: Optional[int] = None):
        self.model = model
        self.datum = model.datum
        self.group = model.group
        self.nv = model.n
        self.k = self.group.real_rank if k is None else k
        self.realization = self.datum.hecke_realization()
        self._pair_cache: Dict[str, List[Tuple[Mat, Mat]]] = {}
        self._kalpha_cache: Dict[Tuple[Fraction, ...], Mat] = {}
        self._invariants: Optional[List[Vec]] = None
        self._inv_solver = None

    # -- basic data --------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.nv**self.k

    def basis_indices(self):
        return itertools.product(range(self.nv), repeat=self.k)

    def pairs(self, part: str) -> List[Tuple[Mat, Mat]]:
        """(E, dual E) matrix pairs over a self-dual decomposition part."""
        if part not in self._pair_cache:
            basis = {
                "g": self.model.g_basis,
                "k": self.model.k_basis,
                "p": self.model.p_basis,
            }[part]
            duals = self.model.kappa_dual(basis)
            self._pair_cache[part] = list(zip(basis, duals))
        return self._pair_cache[part]

    # -- characters ----------------------------------------------------------

    def character_exponents_mu0(self):
        fam = self.group.family
        if fam == "GL":
            return ()
        if fam == "Sp":
            return (1,)
        return (0, 1)  # U/O: trivial on the first factor, det/sgn on the second

    def character_differential(self, x: Mat, exps) -> GaussRational:
        """Differential of det^m-type characters of the compact subgroup."""
        fam = self.group.family
        if fam == "GL" or fam == "O":
            return ZERO
        if fam == "Sp":
            (m,) = exps
            h = self.nv // 2
            t = ZERO
            for i in range(h, self.nv):
                t = t + _as_gauss(x[i, i])
            return t * GaussRational(m)
        mp, mq = exps
        p = self.group.p
        t = ZERO
        for i in range(p):
            t = t + _as_gauss(x[i, i]) * GaussRational(mp)
        for i in range(p, self.nv):
            t = t + _as_gauss(x[i, i]) * GaussRational(mq)
        return t

    def character_group(self, g: Mat, exps) -> GaussRational:
        fam = self.group.family
        if fam == "GL":
            d = _as_gauss(g.det())
            return d
        if fam == "Sp":
            (m,) = exps
            h = self.nv // 2
            d = _as_gauss(Mat([[g[i, j] for j in range(h, self.nv)] for i in range(h, self.nv)]).det())
            return d**m if m >= 0 else ONE / (d ** (-m))
        mp, mq = exps
        p = self.group.p
        dp = _as_gauss(Mat([[g[i, j] for j in range(p)] for i in range(p)]).det())
        dq = _as_gauss(Mat([[g[i, j] for j in range(p, self.nv)] for i in range(p, self.nv)]).det())

        def _pow(d, m):
            return d**m if m >= 0 else ONE / (d ** (-m))

        return _pow(dp, mp) * _pow(dq, mq)

    # -- Q_mu parameters -------------------------------------------------------

    def q_mu_parameters(self, exps) -> Tuple[Fraction, Fraction]:
        """Scalars (r, c) with C^k - dual(dmu) = r + c*xi as operators on V."""
        if self.group.family == "GL":
            raise ValueError("Q_mu parameters require an equal-rank family")
        n = self.nv
        q = Mat([[ZERO] * n for _ in range(n)])
        for e, ed in self.pairs("k"):
            q = q + e * ed
        for e, ed in self.pairs("k"):
            mu_e = self.character_differential(e, exps)
            if mu_e != 0:
                q = q - ed.scale(mu_e)
        xi = self.model.xi()
        # solve q = r*I + c*xi on the diagonal split
        split = self.nv // 2 if self.group.family == "Sp" else self.group.p
        a = _as_gauss(q[0, 0])
        b = _as_gauss(q[split, split]) if split < n else a
        r = (a + b) / GaussRational(2)
        c = (a - b) / GaussRational(2)
        check = Mat.identity(n).scale(r) + xi.scale(c)
        if not (q - check).is_zero():
            raise ValueError("Q_mu is not of the form r + c*xi on V")
        if r.im != 0 or c.im != 0:
            raise ValueError("Q_mu parameters are not real")
        return r.re, c.re

    # -- invariant vectors ---------------------------------------------------

    def invariant_space(self, m: Optional[int] = None) -> List[Vec]:
        """Vectors in mu_0^* (x) V^{(x)m} fixed by the flat centralizer."""
        m = self.k if m is None else m
        if m == self.k and self._invariants is not None:
            return self._invariants
        exps = self.character_exponents_mu0()
        # Finite diagonal generators: each index tuple is an eigenvector.
        filtered: List[Tuple[int, ...]] = []
        gens = []
        for g in self.model.mR_generators:
            diag = [_as_gauss(g[i, i]) for i in range(self.nv)]
            gens.append((diag, self.character_group(g, exps)))
        for idx in itertools.product(range(self.nv), repeat=m):
            ok = True
            for diag, val in gens:
                ev = ONE
                for t in idx:
                    ev = ev * diag[t]
                if ev != val:
                    ok = False
                    break
            if ok:
                filtered.append(idx)
        if not filtered or not self.model.m_basis:
            result = [{idx: ONE} for idx in filtered]
        else:
            # impose annihilation by the Lie algebra centralizer, twisted by mu_0
            rows: Dict[Tuple[int, Tuple[int, ...]], List[GaussRational]] = {}
            ncols = len(filtered)
            for xi_, x in enumerate(self.model.m_basis):
                shift = self.model.dmu0(x)
                for ci, idx in enumerate(filtered):
                    v: Vec = {idx: ONE}
                    acc: Vec = vec_scale(v, -shift)
                    for slot in range(m):
                        acc = vec_add(acc, apply_slot(x, slot, v))
                    for ridx, coef in acc.items():
                        key = (xi_, ridx)
                        if key not in rows:
                            rows[key] = [ZERO] * ncols
                        rows[key][ci] = coef
            mat = Mat(list(rows.values())) if rows else Mat([[ZERO] * ncols])
            null = mat.nullspace()
            result = []
            for coeffs in null:
                vec: Vec = {}
                for c, idx in zip(coeffs, filtered):
                    if c != 0:
                        vec[idx] = _as_gauss(c)
                result.append(vec)
        if m == self.k:
            self._invariants = result
        return result

    def closed_form_basis(self) -> Dict[WeylElement, Vec]:
        """The explicit invariant basis indexed by restricted Weyl elements."""
        fam = self.group.family
        k = self.k
        elements, _ = self.realization.weyl_enumerate()
        basis: Dict[WeylElement, Vec] = {}
        if fam == "GL":
            for w in elements:
                idx = tuple(w.perm[j] for j in range(k))
                basis[w] = {idx: ONE}
            return basis
        p = self.nv // 2 if fam == "Sp" else self.group.p
        for w in elements:
            vec: Vec = {(): ONE}
            for j in range(k):
                tgt = w.perm[j] + 1  # f^eta_{target}, 1-based
                eta = w.signs[j]
                lo, hi = p - tgt, p + tgt - 1  # 0-based entries of f^eta_tgt
                nxt: Vec = {}
                for idx, coef in vec.items():
                    nxt[idx + (lo,)] = coef
                    nxt[idx + (hi,)] = coef * GaussRational(eta)
                vec = nxt
            basis[w] = vec
        return basis

    def coords_in_invariants(self, vec: Vec) -> Optional[List[GaussRational]]:
        basis = self.invariant_space()
        if not basis:
            return None if vec else []
        if self._inv_solver is None:
            self._inv_solver = PivotSolver(basis)
        return self._inv_solver.coords(vec)

    # -- operators ------------------------------------------------------------

    def op_omega(self, i: int, j: int, part: str = "g") -> Callable[[Vec], Vec]:
        """Omega_{i,j} on 1-based V slots; position 0 is not handled here."""
        if not (1 <= i <= self.k and 1 <= j <= self.k and i != j):
            raise ValueError("omega slots must be distinct indices in 1..k")
        prs = self.pairs(part)

        def op(v: Vec) -> Vec:
            out: Vec = {}
            for e, ed in prs:
                out = vec_add(out, apply_slot(ed, j - 1, apply_slot(e, i - 1, v)))
            return out

        return op

    def op_omega_k_from0(self, j: int) -> Callable[[Vec], Vec]:
        """Omega^k_{0,j}: position 0 acts through the dual character -dmu_0."""
        if not 1 <= j <= self.k:
            raise ValueError("slot out of range")
        prs = self.pairs("k")
        exps = self.character_exponents_mu0()
        terms = []
        for e, ed in prs:
            c = -self.character_differential(e, exps)
            if c != 0:
                terms.append((c, ed))

        def op(v: Vec) -> Vec:
            out: Vec = {}
            for c, ed in terms:
                out = vec_add(out, vec_scale(apply_slot(ed, j - 1, v), c))
            return out

        return op

    def op_s(self, i: int, j: int) -> Callable[[Vec], Vec]:
        """Signed transposition action: minus the flip of slots i and j."""
        if not (1 <= i < j <= self.k):
            raise ValueError("transposition slots must satisfy 1 <= i < j <= k")
        a, b = i - 1, j - 1

        def op(v: Vec) -> Vec:
            out: Vec = {}
            for idx, c in v.items():
                l = list(idx)
                l[a], l[b] = l[b], l[a]
                out[tuple(l)] = -c
            return out

        return op

    def op_sbar(self, j: int) -> Callable[[Vec], Vec]:
        """Sign-flip action: minus the involution xi in slot j."""
        xi = self.model.xi()
        neg = xi.scale(GaussRational(-1))

        def op(v: Vec) -> Vec:
            return apply_slot(neg, j - 1, v)

        return op

    def op_diag(self, x: Mat) -> Callable[[Vec], Vec]:
        """Diagonal Lie algebra action, including the dual character twist."""
        exps = self.character_exponents_mu0()
        shift = self.character_differential(x, exps)

        def op(v: Vec) -> Vec:
            out = vec_scale(v, -shift)
            for slot in range(self.k):
                out = vec_add(out, apply_slot(x, slot, v))
            return out

        return op

    def op_group(self, g: Mat) -> Callable[[Vec], Vec]:
        """Twisted group action mu_0(g)^{-1} g^{(x)k}."""
        exps = self.character_exponents_mu0()
        scale = ONE / self.character_group(g, exps)

        def op(v: Vec) -> Vec:
            out = vec_scale(v, scale)
            for slot in range(self.k):
                out = apply_slot(g, slot, out)
            return out

        return op

    def contraction(self, v: Vec, i: int) -> Vec:
        """Pair slots i, i+1 with the invariant form and drop them."""
        if not 1 <= i < self.k:
            raise ValueError("contraction slot out of range")
        form = self.model.form_matrix()
        a, b = i - 1, i
        out: Vec = {}
        for idx, c in v.items():
            f = form[idx[a], idx[b]]
            if f == 0:
                continue
            nidx = idx[:a] + idx[b + 1 :]
            w = out.get(nidx, ZERO) + c * _as_gauss(f)
            if w == 0:
                out.pop(nidx, None)
            else:
                out[nidx] = w
        return out

    # -- geometric Weyl action ------------------------------------------------

    def _simple_group_element(self, gi: int) -> Mat:
        """A group element implementing the gi-th simple reflection on a."""
        root = self.realization.simple_roots[gi]
        k = self.k
        if any(root[i] and root[j] for i in range(k) for j in range(i + 1, k)):
            key = tuple(Fraction(x) for x in root)
            return self._cached_kalpha(key)
        # sign reflection in coordinate j0: prefer an actual restricted root
        j0 = next(i for i, x in enumerate(root) if x)
        for mult in (2, 1):
            key = tuple(Fraction(mult if i == j0 else 0) for i in range(k))
            if key in self.model.root_spaces:
                return self._cached_kalpha(key)
        # split orthogonal case: no e_j restricted root; use an explicit
        # compact diagonal element inverting the j0-th flat coordinate
        p = self.group.p
        return _diag_sign(self.nv, [p - (j0 + 1)])

    def _cached_kalpha(self, key) -> Mat:
        if key not in self._kalpha_cache:
            self._kalpha_cache[key] = self.model.k_alpha(key)
        return self._kalpha_cache[key]

    def geometric_op(self, word: Sequence[int]) -> Callable[[Vec], Vec]:
        g = Mat.identity(self.nv)
        for gi in word:
            g = g * self._simple_group_element(gi)
        return self.op_group(g)

    def hecke_simple_op(self, gi: int) -> Callable[[Vec], Vec]:
        """The Hecke-side action of the gi-th simple reflection."""
        root = self.realization.simple_roots[gi]
        k = self.k
        supp = [i for i, x in enumerate(root) if x]
        if len(supp) == 2:
            return self.op_s(supp[0] + 1, supp[1] + 1)
        return self.op_sbar(supp[0] + 1)

    # -- matrices on the invariant basis ---------------------------------------

    def matrix_on_invariants(self, op: Callable[[Vec], Vec]) -> Mat:
        basis = self.invariant_space()
        cols = []
        for vec in basis:
            coords = self.coords_in_invariants(op(vec))
            if coords is None:
                raise ValueError("operator does not preserve the invariant space")
            cols.append(coords)
        return Mat.from_cols(cols)


# --------------------------------------------------------------------------
# verification suite
# --------------------------------------------------------------------------


def _record(report, check, ok, witness=None):
    entry = {"check": check, "status": "pass" if ok else "fail"}
    if witness is not None and not ok:
        entry["witness"] = witness
    report.append(entry)


def _ops_equal_on(vectors: Sequence[Vec], op1, op2) -> Optional[int]:
    for i, v in enumerate(vectors):
        if not vec_eq(op1(v), op2(v)):
            return i
    return None


def verify_dimension_law(ts: TensorSpace) -> List[dict]:
    report: List[dict] = []
    ok = True
    witness = None
    for m in range(ts.k):
        space = ts.invariant_space(m)
        if space:
            ok = False
            witness = f"m={m} gives dimension {len(space)}"
            break
    _record(report, "invariants vanish below the real rank", ok, witness)
    basis = ts.invariant_space()
    wsize = ts.realization.weyl_order()
    _record(
        report,
        "invariant dimension equals the Weyl group order",
        len(basis) == wsize,
        f"dim {len(basis)} != {wsize}",
    )
    closed = ts.closed_form_basis()
    ok = len(closed) == len(basis)
    witness = None
    if ok:
        for w, vec in closed.items():
            if ts.coords_in_invariants(vec) is None:
                ok = False
                witness = f"closed-form vector for {w} outside computed space"
                break
    cols = []
    order = {idx: i for i, idx in enumerate(ts.basis_indices())}
    for vec in closed.values():
        col = [ZERO] * ts.dim
        for idx, c in vec.items():
            col[order[idx]] = c
        cols.append(col)
    if ok and Mat.from_cols(cols).rank() != len(basis):
        ok = False
        witness = "closed-form family does not span"
    _record(report, "closed-form basis spans the invariant space", ok, witness)
    return report


def verify_weyl_action(ts: TensorSpace) -> List[dict]:
    report: List[dict] = []
    closed = ts.closed_form_basis()
    elements = list(closed.keys())
    pos = {w: i for i, w in enumerate(elements)}
    solver = PivotSolver([closed[w] for w in elements])
    ngen = len(ts.realization.simple_roots)

    geo_mats = []
    alg_mats = []
    ok = True
    witness = None
    for gi in range(ngen):
        gm = solver.matrix_of(ts.geometric_op([gi]))
        am = solver.matrix_of(ts.hecke_simple_op(gi))
        if gm is None or am is None:
            ok = False
            witness = f"generator {gi} does not preserve the invariant space"
            break
        geo_mats.append(gm)
        alg_mats.append(am)
    _record(report, "Weyl generators preserve the invariant space", ok, witness)
    if not ok:
        return report

    # The geometric action multiplies the group index on the left while the
    # algebraic one multiplies it on the right; conjugating by inversion of
    # the index identifies the two.
    nb = len(elements)
    inv_rows = [[ZERO] * nb for _ in range(nb)]
    for w, i in pos.items():
        inv_rows[pos[w.inverse()]][i] = ONE
    inv_mat = Mat(inv_rows)
    ok = True
    witness = None
    for gi in range(ngen):
        if geo_mats[gi] != inv_mat * alg_mats[gi] * inv_mat:
            ok = False
            witness = f"generator {gi}"
            break
    _record(
        report,
        "geometric and algebraic Weyl actions agree after index inversion",
        ok,
        witness,
    )

    ok = True
    witness = None
    for i in range(ngen):
        for j in range(ngen):
            if geo_mats[i] * alg_mats[j] != alg_mats[j] * geo_mats[i]:
                ok = False
                witness = f"generators {i}, {j}"
                break
        if not ok:
            break
    _record(report, "geometric and algebraic Weyl actions commute", ok, witness)

    # regular representation character
    wrds = ts.realization.weyl_enumerate()[1]
    ok = True
    witness = None
    for w, word in wrds.items():
        mat = solver.matrix_of(ts.geometric_op(word))
        tr = _as_gauss(mat.trace())
        expect = GaussRational(nb) if w.is_identity() else ZERO
        if tr != expect:
            ok = False
            witness = f"trace at {w} is {tr}, expected {expect}"
            break
    _record(report, "Weyl action has the regular character", ok, witness)
    return report


def verify_operator_identities(ts: TensorSpace) -> List[dict]:
    report: List[dict] = []
    model, k = ts.model, ts.k
    full = [{idx: ONE} for idx in ts.basis_indices()]
    basis = ts.invariant_space()

    # Casimir tensor classification on V (x) V
    aux = ts if k == 2 else TensorSpace(model, 2)
    omega = aux.op_omega(1, 2, "g")

    def flip(v: Vec) -> Vec:
        return {(b, a): c for (a, b), c in v.items()}

    fam = ts.group.family
    aux_full = [{idx: ONE} for idx in aux.basis_indices()]
    if fam in ("GL", "U"):
        bad = _ops_equal_on(aux_full, omega, flip)
        _record(
            report,
            "Casimir tensor acts as the flip on V(x)V",
            bad is None,
            None if bad is None else f"basis vector {bad}",
        )
    else:
        form = model.form_matrix()
        finv = form.inverse()
        n = ts.nv
        u: Vec = {}
        for a in range(n):
            for b in range(n):
                if finv[a, b] != 0:
                    u[(a, b)] = _as_gauss(finv[a, b])
        c0 = ZERO
        for (a, b), c in u.items():
            c0 = c0 + _as_gauss(form[a, b]) * c

        def pr1(v: Vec) -> Vec:
            s = ZERO
            for (a, b), c in v.items():
                s = s + _as_gauss(form[a, b]) * c
            return vec_scale(u, s / c0)

        def expected(v: Vec) -> Vec:
            return vec_sub(flip(v), vec_scale(pr1(v), GaussRational(n)))

        bad = _ops_equal_on(aux_full, omega, expected)
        _record(
            report,
            "Casimir tensor acts as flip minus dim(V) times the invariant projection",
            bad is None,
            None if bad is None else f"basis vector {bad}",
        )

    # g-invariance of the Casimir tensor: [diagonal action, Omega_{1,2}] = 0
    ok = True
    witness = None
    for x in model.g_basis:
        def diag(v: Vec, x=x) -> Vec:
            out: Vec = {}
            for slot in range(2):
                out = vec_add(out, apply_slot(x, slot, v))
            return out

        bad = _ops_equal_on(
            aux_full,
            lambda v, d=diag: omega(d(v)),
            lambda v, d=diag: d(omega(v)),
        )
        if bad is not None:
            ok = False
            witness = f"basis element fails invariance on vector {bad}"
            break
    _record(report, "Casimir tensor commutes with the diagonal action", ok, witness)

    # compact/noncompact split and anticommutation with the sign operators
    if fam != "GL":
        omega_k = aux.op_omega(1, 2, "k")
        omega_p = aux.op_omega(1, 2, "p")
        bad = _ops_equal_on(
            aux_full,
            lambda v: vec_add(omega_k(v), omega_p(v)),
            omega,
        )
        _record(
            report,
            "Casimir tensor splits along the Cartan decomposition",
            bad is None,
            None if bad is None else f"basis vector {bad}",
        )
        sbar2 = aux.op_sbar(2)
        lhs = lambda v: vec_add(sbar2(omega(v)), omega(sbar2(v)))
        rhs = lambda v: vec_scale(sbar2(omega_k(v)), GaussRational(2))
        bad = _ops_equal_on(aux_full, lhs, rhs)
        _record(
            report,
            "sign operator anticommutes with the noncompact Casimir part",
            bad is None,
            None if bad is None else f"basis vector {bad}",
        )
        # half-flip description of the compact part
        xi = model.xi()

        def xi2(v: Vec) -> Vec:
            return apply_slot(xi, 1, v)

        if fam == "U":
            def kexp(v: Vec) -> Vec:
                return vec_scale(vec_add(flip(v), xi2(flip(xi2(v)))), Fraction(1, 2))
        else:
            # For the orthogonal and symplectic families the compact part
            # also picks up the contraction/copairing through the invariant
            # form, restricted to each eigenblock pattern of the involution.
            form = model.form_matrix()
            finv = form.inverse()
            n = ts.nv
            sign_of = [1 if xi[a, a] == 1 else -1 for a in range(n)]
            copair: Dict[Tuple[int, int], Vec] = {}
            for a in range(n):
                for b in range(n):
                    if finv[b, a] != 0:
                        key = (sign_of[a], sign_of[b])
                        blk = copair.setdefault(key, {})
                        blk[(a, b)] = _as_gauss(finv[b, a])

            def kexp(v: Vec) -> Vec:
                out = vec_scale(vec_add(flip(v), xi2(flip(xi2(v)))), Fraction(1, 2))
                traces: Dict[Tuple[int, int], GaussRational] = {}
                for (a, b), c in v.items():
                    if form[a, b] != 0:
                        key = (sign_of[a], sign_of[b])
                        traces[key] = traces.get(key, ZERO) + _as_gauss(form[a, b]) * c
                for key, tr in traces.items():
                    if tr != 0 and key in copair:
                        out = vec_sub(out, vec_scale(copair[key], tr))
                return out

        bad = _ops_equal_on(aux_full, omega_k, kexp)
        _record(
            report,
            "compact Casimir part matches its blockwise flip formula",
            bad is None,
            None if bad is None else f"basis vector {bad}",
        )

    # pairwise commutation relations of the Omega operators
    if k >= 3:
        om12 = ts.op_omega(1, 2)
        om13 = ts.op_omega(1, 3)
        om23 = ts.op_omega(2, 3)

        def comm(a, b):
            return lambda v: vec_sub(a(b(v)), b(a(v)))

        bad = _ops_equal_on(
            full,
            comm(om12, lambda v: vec_add(om13(v), om23(v))),
            lambda v: {},
        )
        _record(
            report,
            "Omega commutes with coupled sums on three slots",
            bad is None,
            None if bad is None else f"basis vector {bad}",
        )
    if k >= 4:
        om12 = ts.op_omega(1, 2)
        om34 = ts.op_omega(3, 4)
        bad = _ops_equal_on(
            full,
            lambda v: vec_sub(om12(om34(v)), om34(om12(v))),
            lambda v: {},
        )
        _record(
            report,
            "Omega operators on disjoint slots commute",
            bad is None,
            None if bad is None else f"basis vector {bad}",
        )
    if k >= 2:
        # cross relation for the partial Casimir sums; the position-0
        # contribution enters through its compact part, which conjugates
        # correctly under the flip of adjacent slots
        def eps(l):
            ops = [ts.op_omega(m, l) for m in range(1, l)]
            ops.append(ts.op_omega_k_from0(l))

            def act(v: Vec) -> Vec:
                out: Vec = {}
                for o in ops:
                    out = vec_add(out, o(v))
                return out

            return act

        ok = True
        witness = None
        for i in range(1, k):
            s = ts.op_s(i, i + 1)
            ei, ei1 = eps(i), eps(i + 1)
            om = ts.op_omega(i, i + 1)

            def lhs(v: Vec, s=s, ei=ei, ei1=ei1) -> Vec:
                return vec_sub(s(ei(v)), ei1(s(v)))

            def rhs(v: Vec, s=s, om=om) -> Vec:
                return vec_scale(om(s(v)), GaussRational(-1))

            bad = _ops_equal_on(full, lhs, rhs)
            if bad is not None:
                ok = False
                witness = f"cross relation fails at slot {i}, vector {bad}"
                break
        _record(report, "partial Casimir sums satisfy the cross relation", ok, witness)

    # compact-part identity on the invariant space
    if fam != "GL" and k >= 2:
        ok = True
        witness = None
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                if i == j:
                    continue
                a, b = min(i, j), max(i, j)
                om_k = ts.op_omega(i, j, "k")
                s = ts.op_s(a, b)
                sb = ts.op_sbar(j)
                rhs = lambda v: vec_scale(
                    vec_add(s(v), sb(s(sb(v)))), Fraction(-1, 2)
                )
                bad = _ops_equal_on(basis, om_k, rhs)
                if bad is not None:
                    ok = False
                    witness = f"slots ({i},{j}), basis vector {bad}"
                    break
            if not ok:
                break
        _record(
            report,
            "compact Casimir part acts by signed reflections on invariants",
            ok,
            witness,
        )

    # contraction kernels
    if fam in ("Sp", "O") and k >= 2:
        ok = True
        witness = None
        for i in range(1, k):
            for bi, vec in enumerate(basis):
                if not vec_is_zero(ts.contraction(vec, i)):
                    ok = False
                    witness = f"slot {i}, basis vector {bi}"
                    break
            if not ok:
                break
        _record(report, "form contraction annihilates the invariant space", ok, witness)

    return report


def verify_single_petal(ts: TensorSpace) -> List[dict]:
    report: List[dict] = []
    basis = ts.invariant_space()
    ok = True
    witness = None
    for gi, root in enumerate(ts.realization.simple_roots):
        key = None
        supp = [i for i, x in enumerate(root) if x]
        if len(supp) == 2:
            key = tuple(Fraction(x) for x in root)
        else:
            for mult in (2, 1):
                cand = tuple(
                    Fraction(mult if i == supp[0] else 0) for i in range(ts.k)
                )
                if cand in ts.model.root_spaces:
                    key = cand
                    break
        if key is None:
            continue  # no compact sl(2) for this generator (split O case)
        z = ts.model.z_alpha(key)
        dz = ts.op_diag(z)
        for bi, vec in enumerate(basis):
            w = dz(vec)
            w2 = dz(dz(w))
            res = vec_add(w2, vec_scale(w, GaussRational(4)))
            if not vec_is_zero(res):
                ok = False
                witness = f"generator {gi}, basis vector {bi}"
                break
        if not ok:
            break
    _record(report, "flat reflections act with cubic minimal polynomial", ok, witness)
    return report


def verify_q_mu_table(ts: TensorSpace) -> List[dict]:
    """Check the (r, c) parameter table for small character exponents."""
    report: List[dict] = []
    fam = ts.group.family
    if fam == "GL":
        return report
    p, q = ts.group.p, ts.group.q
    ok = True
    witness = None
    if fam == "Sp":
        n = ts.nv // 2
        for m in range(3):
            r, c = ts.q_mu_parameters((m,))
            if (r, c) != (Fraction(n), Fraction(m)):
                ok = False
                witness = f"m={m}: got ({r},{c})"
                break
    elif fam == "U":
        for mp in range(2):
            for mq in range(2):
                r, c = ts.q_mu_parameters((mp, mq))
                er = Fraction(p + q - (mp + mq), 2)
                ec = Fraction(p - q + mq - mp, 2)
                if (r, c) != (er, ec):
                    ok = False
                    witness = f"(mp,mq)=({mp},{mq}): got ({r},{c})"
                    break
            if not ok:
                break
    else:  # O: characters have trivial differential
        for mp in range(2):
            for mq in range(2):
                r, c = ts.q_mu_parameters((mp, mq))
                er = Fraction(p + q, 2) - 1
                ec = Fraction(p - q, 2)
                if (r, c) != (er, ec):
                    ok = False
                    witness = f"(mp,mq)=({mp},{mq}): got ({r},{c})"
                    break
            if not ok:
                break
    _record(report, "Casimir-shift parameters match the character table", ok, witness)
    # cross-consistency with the stored algebra parameter
    r, c = ts.q_mu_parameters(ts.character_exponents_mu0())
    expect = ts.datum.algebra_c["long"]
    _record(
        report,
        "spherical character parameter matches the algebra parameter",
        c == expect,
        f"c_mu0 = {c}, algebra long-root parameter = {expect}",
    )
    return report


def verify_form_compatibility(ts: TensorSpace) -> List[dict]:
    """The coordinate inner product has the required symmetry properties."""
    report: List[dict] = []
    model = ts.model
    n = ts.nv
    ok = all(
        (x.conjugate().transpose() + x).is_zero() for x in model.k_basis
    )
    _record(report, "compact generators are skew-adjoint for the inner product", ok)
    ok = all((x.conjugate().transpose() - x).is_zero() for x in model.p_basis)
    _record(report, "noncompact generators are self-adjoint for the inner product", ok)
    ok = True
    witness = None
    mats = list(model.mR_generators)
    for gi in range(len(ts.realization.simple_roots)):
        try:
            mats.append(ts._simple_group_element(gi))
        except ValueError:
            pass
    for g in mats:
        if not (g.conjugate().transpose() * g - Mat.identity(n)).is_zero():
            ok = False
            witness = "non-unitary compact element"
            break
    _record(report, "compact group elements are unitary for the inner product", ok, witness)
    return report


def verify_tensor_model(model: LieModel) -> List[dict]:
    """Full verification suite for the tensor-space model of one group."""
    ts = TensorSpace(model)
    report: List[dict] = []
    report.extend(verify_dimension_law(ts))
    report.extend(verify_weyl_action(ts))
    report.extend(verify_operator_identities(ts))
    report.extend(verify_single_petal(ts))
    report.extend(verify_q_mu_table(ts))
    report.extend(verify_form_compatibility(ts))
    for entry in report:
        entry.setdefault("group", str(model.group))
    return report
