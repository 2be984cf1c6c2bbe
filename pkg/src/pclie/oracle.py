"""Brute-force cross-checks that do not use S(G).

* :func:`dims_by_linear_algebra` builds the ideal ``I(G)`` degree by degree
  inside the free Lie algebra and measures the quotient by exact rank.
* :func:`dims_by_clique_series` inverts the clique polynomial
  ``sum_k (-1)^k c_k t^k = prod_d (1 - t^d)^{dim L_d}``, the known
  Hilbert series identity for partially commutative algebras.
* :func:`necklace_count` gives the free Lie algebra (Witt) dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .graph import CommutationGraph, clique_counts
from .gsb import ResourceLimitError
from .lie import LiePolynomial, _bb_left
from .words import alsw_of_length, bracket_canonical

__all__ = [
    "DegreeComponent",
    "Echelon",
    "ideal_components",
    "dims_by_linear_algebra",
    "dims_by_clique_series",
    "ideal_membership",
    "necklace_count",
    "mobius",
]

MAX_COLUMNS = 50_000


class Echelon:
    """Sparse row echelon form over Q; rows are ``{word: coef}`` dicts.

    Each pivot row is monic at its lex-greatest word.
    """

    def __init__(self):
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            c = row[lead]
            for w, x in piv.items():
                v = row.get(w, 0) - c * x
                if v:
                    row[w] = v
                else:
                    row.pop(w, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert ``row``; False if it was already in the span."""
        row = self.reduce(row)
        if not row:
            return False
        lead = max(row)
        c = row[lead]
        self.pivots[lead] = {w: Fraction(x) / c for w, x in row.items()}
        return True

    def rows(self):
        return list(self.pivots.values())


@dataclass
class DegreeComponent:
    degree: int
    basis: list  # all Lyndon-Shirshov nwords of this degree, deglex order
    echelon: Echelon

    @property
    def rank(self) -> int:
        return len(self.echelon)

    @property
    def quotient_dim(self) -> int:
        return len(self.basis) - self.rank

    def matrix(self) -> list:
        """Ideal spanning rows as coordinate vectors in ``basis``."""
        from .words import word_of

        cols = {word_of(t): i for i, t in enumerate(self.basis)}
        out = []
        for row in self.echelon.rows():
            vec = [Fraction(0)] * len(cols)
            for w, x in row.items():
                vec[cols[w]] = Fraction(x)
            out.append(vec)
        return out


def _bracket_letter(row: dict, x: int) -> dict:
    acc = {}
    xw = (x,)
    for u, c in row.items():
        for w, z in _bb_left(u, xw):
            acc[w] = acc.get(w, 0) + c * z
    return {w: c for w, c in acc.items() if c}


@lru_cache(maxsize=256)
def _components(g: CommutationGraph, max_degree: int, max_columns: int) -> tuple:
    k = len(g)
    comps = [DegreeComponent(1, [bracket_canonical((a,)) for a in range(k)], Echelon())]
    if max_degree >= 2:
        ech = Echelon()
        for i, j in sorted(g.edges):
            ech.add({(j, i): 1})
        comps.append(DegreeComponent(2, [bracket_canonical(u) for u in alsw_of_length(k, 2)], ech))
    for d in range(3, max_degree + 1):
        words = alsw_of_length(k, d)
        if len(words) > max_columns:
            raise ResourceLimitError(
                f"degree {d} has {len(words)} basis words (limit {max_columns})"
            )
        ech = Echelon()
        for row in comps[-1].echelon.rows():
            for x in range(k):
                ech.add(_bracket_letter(row, x))
        comps.append(DegreeComponent(d, [bracket_canonical(u) for u in words], ech))
    return tuple(comps)


def ideal_components(g: CommutationGraph, max_degree: int, max_columns: int = MAX_COLUMNS) -> list:
    """``I(G)`` by degree: ``I_{d+1} = span{(r, x) : r in I_d, x a letter}``."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    return list(_components(g, max_degree, max_columns))


def dims_by_linear_algebra(g: CommutationGraph, max_degree: int, max_columns: int = MAX_COLUMNS) -> list:
    return [c.quotient_dim for c in ideal_components(g, max_degree, max_columns)]


def ideal_membership(p: LiePolynomial, g: CommutationGraph) -> bool:
    """True iff the homogeneous polynomial ``p`` lies in ``I(G)``."""
    if not p:
        return True
    if not p.is_homogeneous():
        raise ValueError("ideal membership needs a homogeneous polynomial")
    d = p.degree()
    comp = ideal_components(g, d)[d - 1]
    return not comp.echelon.reduce(dict(p.items()))


def dims_by_clique_series(g: CommutationGraph, max_degree: int) -> list:
    """Dimensions ``l_1..l_max_degree`` from the clique polynomial."""
    c = clique_counts(g, min(len(g), max_degree))
    target = [0] * (max_degree + 1)
    for k, ck in enumerate(c):
        target[k] = (-1) ** k * ck
    prod = [1] + [0] * max_degree
    dims = []
    for n in range(1, max_degree + 1):
        ln = prod[n] - target[n]
        if ln < 0:
            raise ArithmeticError(f"negative dimension {ln} in degree {n}")
        dims.append(ln)
        factor = [0] * (max_degree + 1)
        for j in range(max_degree // n + 1):
            factor[n * j] = (-1) ** j * comb(ln, j)
        prod = [
            sum(prod[i] * factor[m - i] for i in range(m + 1))
            for m in range(max_degree + 1)
        ]
    return dims


def mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def necklace_count(q: int, d: int) -> int:
    """Number of aperiodic necklaces of length ``d`` over ``q`` letters."""
    total = sum(mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0)
    return total // d
