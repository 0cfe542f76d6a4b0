"""Dense exact linear algebra over Q and Q(i).

Plain row-reduction over exact field scalars: no pivoting heuristics beyond
first-nonzero, no floats anywhere.  Signatures of rational symmetric matrices
are computed by congruence diagonalization (inertia), never through
characteristic polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .scalars import GaussRational, conj


class Mat:
    """A dense matrix over an exact field (Fraction or GaussRational)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [list(r) for r in rows]

    # -- constructors ----------------------------------------------------
    @staticmethod
    def zeros(n: int, m: int) -> "Mat":
        return Mat([[Fraction(0)] * m for _ in range(n)])

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(
            [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def from_cols(cols: Sequence[Sequence]) -> "Mat":
        n = len(cols[0])
        return Mat([[col[i] for col in cols] for i in range(n)])

    # -- shape ------------------------------------------------------------
    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, v):
        i, j = ij
        self.rows[i][j] = v

    def copy(self) -> "Mat":
        return Mat(self.rows)

    def col(self, j: int) -> list:
        return [r[j] for r in self.rows]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "Mat") -> "Mat":
        return Mat(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Mat") -> "Mat":
        return Mat(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Mat":
        return Mat([[c * a for a in r] for r in self.rows])

    def __mul__(self, other: "Mat") -> "Mat":
        n, k, m = self.nrows, self.ncols, other.ncols
        orows = other.rows
        out = [[Fraction(0)] * m for _ in range(n)]
        for i in range(n):
            arow = self.rows[i]
            orow = out[i]
            for t in range(k):
                a = arow[t]
                if a:
                    brow = orows[t]
                    for j in range(m):
                        b = brow[j]
                        if b:
                            orow[j] = orow[j] + a * b
        return Mat(out)

    def apply(self, vec: Sequence) -> list:
        out = []
        for r in self.rows:
            s = Fraction(0)
            for a, v in zip(r, vec):
                if a and v:
                    s = s + a * v
            out.append(s)
        return out

    def transpose(self) -> "Mat":
        return Mat([list(c) for c in zip(*self.rows)])

    def conjugate(self) -> "Mat":
        return Mat([[conj(a) for a in r] for r in self.rows])

    def trace(self):
        t = Fraction(0)
        for i in range(self.nrows):
            t = t + self.rows[i][i]
        return t

    def kron(self, other: "Mat") -> "Mat":
        out = []
        for r1 in self.rows:
            for r2 in other.rows:
                out.append([a * b for a in r1 for b in r2])
        return Mat(out)

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def __eq__(self, other):
        return isinstance(other, Mat) and (self - other).is_zero()

    def __repr__(self):
        return "Mat(" + "; ".join(" ".join(str(a) for a in r) for r in self.rows) + ")"

    # -- elimination -----------------------------------------------------------
    def rref(self):
        """Reduced row echelon form; returns (Mat, pivot column list)."""
        m = [list(r) for r in self.rows]
        nr, nc = len(m), self.ncols
        pivots = []
        row = 0
        for col in range(nc):
            piv = None
            for i in range(row, nr):
                if m[i][col]:
                    piv = i
                    break
            if piv is None:
                continue
            m[row], m[piv] = m[piv], m[row]
            inv = 1 / m[row][col] if not isinstance(m[row][col], GaussRational) else GaussRational(1) / m[row][col]
            m[row] = [a * inv for a in m[row]]
            for i in range(nr):
                if i != row and m[i][col]:
                    f = m[i][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[row])]
            pivots.append(col)
            row += 1
            if row == nr:
                break
        return Mat(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> List[list]:
        """Basis of the right kernel, one vector per free column."""
        R, pivots = self.rref()
        nc = self.ncols
        free = [j for j in range(nc) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * nc
            v[f] = Fraction(1)
            for r, p in enumerate(pivots):
                v[p] = -R.rows[r][f]
            basis.append(v)
        return basis

    def solve(self, rhs: Sequence):
        """One solution of self * x = rhs, or None if inconsistent."""
        aug = Mat([list(r) + [b] for r, b in zip(self.rows, rhs)])
        R, pivots = aug.rref()
        nc = self.ncols
        if nc in pivots:
            return None
        x = [Fraction(0)] * nc
        for r, p in enumerate(pivots):
            x[p] = R.rows[r][nc]
        return x

    def det(self):
        """Determinant by fraction-friendly Gaussian elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant needs a square matrix")
        m = [list(r) for r in self.rows]
        sign = 1
        result = Fraction(1)
        for col in range(n):
            piv = next((i for i in range(col, n) if m[i][col]), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                sign = -sign
            pv = m[col][col]
            result = result * pv
            inv = (
                Fraction(1) / pv
                if isinstance(pv, (int, Fraction))
                else GaussRational(1) / pv
            )
            for i in range(col + 1, n):
                f = m[i][col] * inv
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], m[col])]
        return result * sign

    def inverse(self) -> "Mat":
        n = self.nrows
        aug = Mat([list(r) + list(Mat.identity(n).rows[i]) for i, r in enumerate(self.rows)])
        R, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Mat([r[n:] for r in R.rows])


def column_span_rank(vectors: Sequence[Sequence]) -> int:
    """Rank of the span of a list of vectors."""
    if not vectors:
        return 0
    return Mat(vectors).rank()


def in_span(vectors: Sequence[Sequence], target: Sequence) -> bool:
    base = column_span_rank(vectors)
    return column_span_rank(list(vectors) + [list(target)]) == base


def signature(sym: Mat):
    """Inertia (pos, neg, zero) of a rational symmetric matrix.

    Congruence diagonalization: symmetric row/column elimination with the
    standard rank-2 fix when all remaining diagonal entries vanish.
    """
    n = sym.nrows
    m = [[Fraction(a) for a in r] for r in sym.rows]
    for i in range(n):
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = zero = 0
    idx = list(range(n))
    size = n

    def eliminate(a, k):
        """Clear row/column k of `a` (list-of-lists, square) using a[k][k]."""
        d = a[k][k]
        rest = [r for r in range(len(a)) if r != k]
        out = [[a[i][j] for j in rest] for i in rest]
        for ii, i in enumerate(rest):
            f = a[i][k] / d
            if f:
                for jj, j in enumerate(rest):
                    out[ii][jj] -= f * a[k][j]
        return out

    a = m
    while a:
        k = next((i for i in range(len(a)) if a[i][i]), None)
        if k is not None:
            if a[k][k] > 0:
                pos += 1
            else:
                neg += 1
            a = eliminate(a, k)
            continue
        # all diagonal entries are zero: find any nonzero off-diagonal pair
        pair = None
        for i in range(len(a)):
            for j in range(i + 1, len(a)):
                if a[i][j]:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            zero += len(a)
            break
        i, j = pair
        # rows/cols i,j carry a hyperbolic plane: add row j to row i (and
        # column j to column i) to create a nonzero diagonal entry, recurse
        for t in range(len(a)):
            a[i][t] += a[j][t]
        for t in range(len(a)):
            a[t][i] += a[t][j]
        # now a[i][i] = 2*a_ij != 0; loop continues
    return pos, neg, zero


def sparse_nullspace(rows, columns):
    """Nullspace basis of a sparse linear system.

    rows: iterable of dicts mapping column keys to scalars (each row is one
    homogeneous equation); columns: ordered list of all column keys.  Returns
    a list of sparse solution dicts over the same keys.  Exact arithmetic.
    """
    order = {c: i for i, c in enumerate(columns)}
    pivots = {}  # column key -> reduced row dict
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        # eliminate every pivot column present in the row, not just the
        # leading one, so stored pivot rows stay mutually reduced
        while True:
            hit = [c for c in row if c in pivots]
            if not hit:
                break
            c = min(hit, key=lambda k: order[k])
            f = row[c]
            for cc, vv in pivots[c].items():
                w = row.get(cc, 0) - f * vv
                if w:
                    row[cc] = w
                else:
                    row.pop(cc, None)
        if row:
            c = min(row, key=lambda k: order[k])
            inv = 1 / row[c]
            row = {cc: vv * inv for cc, vv in row.items()}
            # back-eliminate this column from the stored pivot rows
            for pc, prow in pivots.items():
                if c in prow:
                    f = prow[c]
                    for cc, vv in row.items():
                        w = prow.get(cc, 0) - f * vv
                        if w:
                            prow[cc] = w
                        else:
                            prow.pop(cc, None)
            pivots[c] = row
    free = [c for c in columns if c not in pivots]
    basis = []
    for f in free:
        sol = {f: 1}
        for pc, prow in pivots.items():
            v = prow.get(f)
            if v:
                sol[pc] = -v
        basis.append(sol)
    return basis
