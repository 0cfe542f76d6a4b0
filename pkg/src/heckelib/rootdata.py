"""Root data for the classical real groups and their graded Hecke algebras.

A group descriptor names one of GL(n,R), U(p,q), Sp(2n,R), O(p,q) (p >= q).
`restricted_root_datum` returns the restricted root system with
multiplicities, its reduced (indivisible) part, the raw parameter function
c(a) = dim g_a + 2 dim g_{2a}, and the normalized graded Hecke algebra datum:
type A_{n-1} with c = 1 for GL(n,R), and the type-C realization
Ht_k(c) = H(roots {e_i +- e_j, 2e_i}; c(short) = 1, c(long) = c) otherwise.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .scalars import Q


# --------------------------------------------------------------------------
# group descriptors
# --------------------------------------------------------------------------

_GROUP_RE = re.compile(r"^\s*(GL|U|Sp|O)\s*\(\s*(\d+)\s*(?:,\s*(\d+|R)\s*)?\)\s*$")


@dataclass(frozen=True)
class GroupDescriptor:
    family: str  # "GL", "U", "Sp", "O"
    p: int       # n for GL, p for U/O, n for Sp(2n,R)
    q: int = 0

    def __str__(self) -> str:
        if self.family == "GL":
            return f"GL({self.p},R)"
        if self.family == "Sp":
            return f"Sp({2 * self.p},R)"
        return f"{self.family}({self.p},{self.q})"

    @property
    def real_rank(self) -> int:
        return self.p if self.family in ("GL", "Sp") else self.q

    @property
    def dim_v(self) -> int:
        if self.family == "GL":
            return self.p
        if self.family == "Sp":
            return 2 * self.p
        return self.p + self.q


def parse_group(text: str) -> GroupDescriptor:
    m = _GROUP_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse group {text!r}")
    fam, a, b = m.group(1), int(m.group(2)), m.group(3)
    if fam == "GL":
        if b != "R":
            raise ValueError("GL groups must be written GL(n,R)")
        if a < 1:
            raise ValueError("GL(n,R) needs n >= 1")
        return GroupDescriptor("GL", a)
    if fam == "Sp":
        if b != "R":
            raise ValueError("Sp groups must be written Sp(2n,R)")
        if a < 2 or a % 2:
            raise ValueError("Sp(2n,R) needs an even positive size")
        return GroupDescriptor("Sp", a // 2)
    if b in (None, "R"):
        raise ValueError(f"{fam} groups need two integer parameters")
    p, q = a, int(b)
    if p < q:
        p, q = q, p
    if q < 1:
        raise ValueError(f"{fam}(p,q) needs p,q >= 1")
    return GroupDescriptor(fam, p, q)


# --------------------------------------------------------------------------
# signed permutations
# --------------------------------------------------------------------------


class WeylElement:
    """A signed permutation w: e_j -> signs[j] * e_{perm[j]} (0-indexed)."""

    __slots__ = ("perm", "signs", "_hash")

    def __init__(self, perm: Tuple[int, ...], signs: Tuple[int, ...]):
        self.perm = tuple(perm)
        self.signs = tuple(signs)
        self._hash = hash((self.perm, self.signs))

    @staticmethod
    def identity(k: int) -> "WeylElement":
        return WeylElement(tuple(range(k)), (1,) * k)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self*other)(e_j) = self(other(e_j))
        perm = tuple(self.perm[other.perm[j]] for j in range(len(self.perm)))
        signs = tuple(
            other.signs[j] * self.signs[other.perm[j]] for j in range(len(self.perm))
        )
        return WeylElement(perm, signs)

    def inverse(self) -> "WeylElement":
        k = len(self.perm)
        perm = [0] * k
        signs = [1] * k
        for j in range(k):
            perm[self.perm[j]] = j
            signs[self.perm[j]] = self.signs[j]
        return WeylElement(tuple(perm), tuple(signs))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and all(
            s == 1 for s in self.signs
        )

    def num_flips(self) -> int:
        return sum(1 for s in self.signs if s == -1)

    def act_on_vector(self, v):
        """Image of a coordinate vector under w."""
        out = [0] * len(v)
        for j, x in enumerate(v):
            if x:
                out[self.perm[j]] = self.signs[j] * x
        return out

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.perm == other.perm
            and self.signs == other.signs
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"W{self.perm}{self.signs}"


def reflection_action(root) -> WeylElement:
    """The reflection in a root of the form e_i - e_j, e_i + e_j, e_i, 2e_i."""
    k = len(root)
    support = [i for i, c in enumerate(root) if c]
    if len(support) == 1:
        i = support[0]
        signs = [1] * k
        signs[i] = -1
        return WeylElement(tuple(range(k)), tuple(signs))
    if len(support) == 2:
        i, j = support
        perm = list(range(k))
        perm[i], perm[j] = j, i
        signs = [1] * k
        if root[i] * root[j] > 0:  # e_i + e_j
            signs[i] = signs[j] = -1
        return WeylElement(tuple(perm), tuple(signs))
    raise ValueError(f"unsupported root {root}")


# --------------------------------------------------------------------------
# root system realizations carrying the Hecke algebra
# --------------------------------------------------------------------------

MAX_WEYL_RANK = 6


@dataclass
class RootSystem:
    """A realization of type A_{k-1} (on k coordinates) or C_k.

    Carries positive roots, simple roots, and the signed-permutation Weyl
    group; 'A' means roots e_i - e_j inside Q^k, 'C' means
    {e_i - e_j, e_i + e_j, 2 e_i}.
    """

    family: str  # "A" or "C"
    k: int
    positive_roots: List[Tuple[int, ...]] = field(default_factory=list)
    simple_roots: List[Tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        k = self.k
        if self.family == "A":
            for i in range(k):
                for j in range(i + 1, k):
                    r = [0] * k
                    r[i], r[j] = 1, -1
                    self.positive_roots.append(tuple(r))
            for i in range(k - 1):
                r = [0] * k
                r[i], r[i + 1] = 1, -1
                self.simple_roots.append(tuple(r))
        elif self.family == "C":
            for i in range(k):
                for j in range(i + 1, k):
                    for sj in (-1, 1):
                        r = [0] * k
                        r[i], r[j] = 1, sj
                        self.positive_roots.append(tuple(r))
            for i in range(k):
                r = [0] * k
                r[i] = 2
                self.positive_roots.append(tuple(r))
            for i in range(k - 1):
                r = [0] * k
                r[i], r[i + 1] = 1, -1
                self.simple_roots.append(tuple(r))
            r = [0] * k
            r[k - 1] = 2
            self.simple_roots.append(tuple(r))
        else:
            raise ValueError(f"unknown realization family {self.family}")

    # -- generators ------------------------------------------------------
    def generator_names(self) -> List[str]:
        names = [f"s{i + 1}" for i in range(self.k - 1)]
        if self.family == "C":
            names.append("sbar")
        if self.family == "A" and self.k == 1:
            return []
        return names

    def generators(self) -> List[WeylElement]:
        return [reflection_action(a) for a in self.simple_roots]

    def reflection(self, root) -> WeylElement:
        return reflection_action(root)

    def coroot_coeffs(self, root) -> List[Q]:
        """The coroot 2<.,a>/<a,a> as a linear form in the coordinates."""
        norm = sum(Q(c) * Q(c) for c in root)
        return [2 * Q(c) / norm for c in root]

    def root_orbit(self, root) -> str:
        """'short'/'long' in the C realization labelling, or 'all' for A."""
        if self.family == "A":
            return "all"
        support = [c for c in root if c]
        return "long" if len(support) == 1 else "short"

    # -- Weyl group enumeration -----------------------------------------
    def weyl_enumerate(self):
        """All Weyl elements with words and lengths, by BFS from the identity.

        Returns (elements, words) where `elements` is sorted by (length,
        discovery order) and `words` maps each element to a reduced word
        (tuple of generator indices).
        """
        if self.k > MAX_WEYL_RANK:
            raise ValueError(
                f"Weyl enumeration capped at rank {MAX_WEYL_RANK}, got {self.k}"
            )
        gens = self.generators()
        e = WeylElement.identity(self.k)
        words: Dict[WeylElement, Tuple[int, ...]] = {e: ()}
        order = [e]
        queue = deque([e])
        while queue:
            w = queue.popleft()
            for gi, g in enumerate(gens):
                nxt = g * w
                if nxt not in words:
                    words[nxt] = (gi,) + words[w]
                    order.append(nxt)
                    queue.append(nxt)
        return order, words

    def weyl_order(self) -> int:
        import math

        if self.family == "A":
            return math.factorial(self.k)
        return math.factorial(self.k) * 2**self.k

    def is_dominant(self, nu) -> bool:
        for a in self.simple_roots:
            if sum(c * x for c, x in zip(self.coroot_coeffs(a), nu)) < 0:
                return False
        return True


# --------------------------------------------------------------------------
# restricted root data (Table 1 of the group/Hecke dictionary)
# --------------------------------------------------------------------------


@dataclass
class ParameterFunction:
    """Parameter values per Weyl orbit ('all', or 'short'/'long')."""

    values: Dict[str, Q]

    def of_orbit(self, orbit: str) -> Q:
        return self.values[orbit]


@dataclass
class RestrictedRootDatum:
    group: GroupDescriptor
    phi_family: str            # "A", "B", "C", "BC", "D"
    phi_rank: int
    multiplicities: Dict[str, int]           # restricted root type -> dim g_a
    phi_reduced_family: str    # indivisible part
    raw_parameters: ParameterFunction        # eq-cal values on the reduced part
    table_parameters: ParameterFunction      # values as printed in the table
    rescale: Q                               # global c-rescale raw -> table
    algebra_family: str        # realization of the stored algebra: "A" or "C"
    algebra_c: Dict[str, Q]    # parameters of the stored normalized algebra
    algebra_name: str
    real_rank: int
    weyl_order: int
    decomposition: Optional[str] = None      # extra metadata for O(q,q)

    def hecke_realization(self) -> RootSystem:
        return RootSystem(self.algebra_family, self.real_rank)


def restricted_root_datum(g: GroupDescriptor) -> RestrictedRootDatum:
    import math

    fam, p, q = g.family, g.p, g.q
    if fam == "GL":
        n = p
        one = ParameterFunction({"all": Q(1)})
        return RestrictedRootDatum(
            group=g,
            phi_family="A",
            phi_rank=n - 1,
            multiplicities={"e_i-e_j": 1},
            phi_reduced_family="A",
            raw_parameters=one,
            table_parameters=one,
            rescale=Q(1),
            algebra_family="A",
            algebra_c={"all": Q(1)},
            algebra_name=f"H_{n}",
            real_rank=n,
            weyl_order=math.factorial(n),
        )
    if fam == "U":
        k = q
        if p == q:
            mult = {"e_i+-e_j": 2, "2e_i": 1}
            raw = ParameterFunction({"short": Q(2), "long": Q(1)})
            table = ParameterFunction({"short": Q(2), "long": Q(1)})
            clong = Q(1, 2)
            return RestrictedRootDatum(
                g, "C", k, mult, "C", raw, table, Q(1, 2), "C",
                {"short": Q(1), "long": clong}, f"Ht_{k}(1/2)",
                k, math.factorial(k) * 2**k,
            )
        mult = {"e_i+-e_j": 2, "e_i": 2 * (p - q), "2e_i": 1}
        # indivisible roots form B_k; c(e_i) = 2(p-q) + 2, c(e_i+-e_j) = 2
        raw = ParameterFunction({"short": Q(2), "long": Q(2 * (p - q) + 2)})
        table = ParameterFunction({"short": Q(1), "long": Q(p - q + 1)})
        clong = Q(p - q + 1, 2)
        return RestrictedRootDatum(
            g, "BC", k, mult, "B", raw, table, Q(1, 2), "C",
            {"short": Q(1), "long": clong}, f"Ht_{k}({clong})",
            k, math.factorial(k) * 2**k,
        )
    if fam == "Sp":
        k = p
        mult = {"e_i+-e_j": 1, "2e_i": 1}
        one = ParameterFunction({"short": Q(1), "long": Q(1)})
        return RestrictedRootDatum(
            g, "C", k, mult, "C", one, one, Q(1), "C",
            {"short": Q(1), "long": Q(1)}, f"Ht_{k}(1)",
            k, math.factorial(k) * 2**k,
        )
    if fam == "O":
        k = q
        if p == q:
            mult = {"e_i+-e_j": 1}
            one = ParameterFunction({"all": Q(1)})
            return RestrictedRootDatum(
                g, "D", k, mult, "D", one, one, Q(1), "C",
                {"short": Q(1), "long": Q(0)}, f"Ht_{k}(0)",
                k, math.factorial(k) * 2**k,  # stored algebra has the full C_k Weyl group
                decomposition=f"H(D_{k},1) x| Z/2Z",
            )
        mult = {"e_i+-e_j": 1, "e_i": p - q}
        raw = ParameterFunction({"short": Q(1), "long": Q(p - q)})
        clong = Q(p - q, 2)
        return RestrictedRootDatum(
            g, "B", k, mult, "B", raw, raw, Q(1), "C",
            {"short": Q(1), "long": clong}, f"Ht_{k}({clong})",
            k, math.factorial(k) * 2**k,
        )
    raise ValueError(f"unknown family {fam}")


