"""Lie polynomials in the Lyndon-Shirshov basis of the free Lie algebra.

A basis element ``[u]`` is determined by its ALSW ``u``, so a
:class:`LiePolynomial` stores ``{u: coefficient}`` with ``u`` a word tuple
and exact coefficients (``int`` when integral, otherwise ``Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .words import (
    GREATER,
    LESS,
    NWord,
    Word,
    bracket_canonical,
    deglex_key,
    factorize_nondecreasing,
    is_alsw,
    is_leaf,
    is_nlsw,
    lex_cmp,
    word_of,
)

__all__ = [
    "LiePolynomial",
    "STAR",
    "DDecomposition",
    "expand",
    "bracket",
    "bracket_basis",
    "leading_monomial",
    "special_bracket",
    "left_normed",
    "d_decompose",
    "substitute",
    "derive",
    "format_pattern",
]

STRATEGIES = ("left", "right")


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _check_coef(c):
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficient must be an exact rational, got {c!r}")
    return _norm(c)


class LiePolynomial:
    """Finite combination of Lyndon-Shirshov basis words."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {}
        if terms:
            for u, c in dict(terms).items():
                u = tuple(u)
                if not u or not is_alsw(u):
                    raise ValueError(f"{u} is not an associative Lyndon-Shirshov word")
                c = _check_coef(c)
                if c:
                    self._terms[u] = c

    @classmethod
    def _wrap(cls, terms: dict) -> "LiePolynomial":
        # trusted constructor: keys are ALSWs, coefficients nonzero
        p = cls.__new__(cls)
        p._terms = terms
        return p

    @classmethod
    def basis(cls, u: Word, coef=1) -> "LiePolynomial":
        return cls({tuple(u): coef})

    @classmethod
    def from_nword(cls, t: NWord, coef=1) -> "LiePolynomial":
        """Lift a basis nword (must pass ``is_nlsw``) to a monomial."""
        if not is_nlsw(t):
            raise ValueError(f"{t!r} is not a Lyndon-Shirshov nword")
        return cls({word_of(t): coef})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def nword_terms(self):
        """``[(nword, coef)]`` sorted deglex descending."""
        return [(bracket_canonical(u), self._terms[u]) for u in self.words()]

    def words(self):
        return sorted(self._terms, key=deglex_key, reverse=True)

    def coefficient(self, u: Word):
        return self._terms.get(tuple(u), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if isinstance(other, LiePolynomial):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        inner = ", ".join(f"{u}: {c}" for u, c in ((u, self._terms[u]) for u in self.words()))
        return f"LiePolynomial({{{inner}}})"

    def _combine(self, other, sign):
        if not isinstance(other, LiePolynomial):
            if other == 0:
                return self
            return NotImplemented
        out = dict(self._terms)
        for u, c in other._terms.items():
            v = _norm(out.get(u, 0) + sign * c)
            if v:
                out[u] = v
            else:
                out.pop(u, None)
        return LiePolynomial._wrap(out)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        return LiePolynomial._wrap({u: -c for u, c in self._terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, LiePolynomial):
            return NotImplemented
        scalar = _check_coef(scalar)
        if not scalar:
            return LiePolynomial()
        return LiePolynomial._wrap({u: _norm(c * scalar) for u, c in self._terms.items()})

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((len(u) for u in self._terms), default=0)

    def degrees(self) -> set:
        return {len(u) for u in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def leading(self):
        return leading_monomial(self)


# --- structure constants -------------------------------------------------


@lru_cache(maxsize=None)
def _bb_left(u: Word, v: Word) -> tuple:
    c = lex_cmp(u, v)
    if c == 0:
        return ()
    if c == LESS:
        return tuple((w, -x) for w, x in _bb_left(v, u))
    if len(u) == 1:
        return ((u + v, 1),)
    t1, t2 = bracket_canonical(u)
    u1, u2 = word_of(t1), word_of(t2)
    if lex_cmp(u2, v) != GREATER:
        return ((u + v, 1),)
    # ((u1,u2),v) = ((u1,v),u2) + (u1,(u2,v))
    acc = {}
    for w, a in _bb_left(u1, v):
        for z, b in _bb_left(w, u2):
            acc[z] = acc.get(z, 0) + a * b
    for w, a in _bb_left(u2, v):
        for z, b in _bb_left(u1, w):
            acc[z] = acc.get(z, 0) + a * b
    return tuple((z, x) for z, x in acc.items() if x)


@lru_cache(maxsize=None)
def _bb_right(u: Word, v: Word) -> tuple:
    c = lex_cmp(u, v)
    if c == 0:
        return ()
    if c == LESS:
        return tuple((w, -x) for w, x in _bb_right(v, u))
    if len(u) == 1:
        return ((u + v, 1),)
    t1, t2 = bracket_canonical(u)
    u1, u2 = word_of(t1), word_of(t2)
    if lex_cmp(u2, v) != GREATER:
        return ((u + v, 1),)
    # ((u1,u2),v) = (u1,(u2,v)) - (u2,(u1,v))
    acc = {}
    for w, a in _bb_right(u1, v):
        for z, b in _bb_right(u2, w):
            acc[z] = acc.get(z, 0) - a * b
    for w, a in _bb_right(u2, v):
        for z, b in _bb_right(u1, w):
            acc[z] = acc.get(z, 0) + a * b
    return tuple((z, x) for z, x in acc.items() if x)


_BB = {"left": _bb_left, "right": _bb_right}


def bracket_basis(u: Word, v: Word, strategy: str = "left") -> LiePolynomial:
    """``([u],[v])`` for ALSWs ``u`` and ``v``, in the basis."""
    return LiePolynomial._wrap(dict(_BB[strategy](tuple(u), tuple(v))))


def _bracket_terms(a: dict, b: dict, bb) -> dict:
    acc = {}
    for u, x in a.items():
        for v, y in b.items():
            xy = x * y
            for w, z in bb(u, v):
                acc[w] = acc.get(w, 0) + xy * z
    return {w: _norm(c) for w, c in acc.items() if c}


def bracket(p: LiePolynomial, q: LiePolynomial, strategy: str = "left") -> LiePolynomial:
    """Lie product of two polynomials."""
    return LiePolynomial._wrap(_bracket_terms(p._terms, q._terms, _BB[strategy]))


@lru_cache(maxsize=1 << 16)
def _expand(t, strategy):
    if is_leaf(t):
        return ((t,), 1),
    bb = _BB[strategy]
    if strategy == "left":
        a, b = dict(_expand(t[0], strategy)), dict(_expand(t[1], strategy))
    else:
        b = dict(_expand(t[1], strategy))
        a = dict(_expand(t[0], strategy))
    return tuple(_bracket_terms(a, b, bb).items())


def expand(t: NWord, strategy: str = "left") -> LiePolynomial:
    """Write an arbitrary bracketing in the Lyndon-Shirshov basis.

    Pairs of basis words ``([u],[v])`` with ``u > v`` that violate
    condition (iii) are rewritten with the Jacobi identity.  ``"left"``
    uses ``((a,b),c) = ((a,c),b) + (a,(b,c))``, ``"right"`` uses
    ``((a,b),c) = (a,(b,c)) - (b,(a,c))``; both give the same result.
    """
    if strategy not in _BB:
        raise ValueError(f"unknown expansion strategy {strategy!r}")
    return LiePolynomial._wrap(dict(_expand(t, strategy)))


def leading_monomial(p: LiePolynomial):
    """Deglex-greatest basis nword of ``p`` and its coefficient."""
    if not p:
        raise ValueError("the zero polynomial has no leading monomial")
    u = max(p._terms, key=deglex_key)
    return bracket_canonical(u), p._terms[u]


# --- special bracketing ----------------------------------------------------


def left_normed(head: NWord, tails) -> NWord:
    t = head
    for c in tails:
        t = (t, c)
    return t


def _replace(t: NWord, path, new: NWord) -> NWord:
    if not path:
        return new
    if path[0] == 0:
        return (_replace(t[0], path[1:], new), t[1])
    return (t[0], _replace(t[1], path[1:], new))


def special_bracket(w: Word, d_start: int, d_len: int) -> NWord:
    """The bracketing ``[w]_d`` around the occurrence ``d = w[d_start:d_start+d_len]``.

    The smallest subtree of ``[w]`` covering ``d`` has word ``d c``; it is
    replaced by ``((([d],[c1]),[c2]),...,[cm])`` where ``c = c1...cm`` with
    ``c1 <= ... <= cm`` ALSWs.
    """
    w = tuple(w)
    if not w or not is_alsw(w):
        raise ValueError(f"{w} is not an associative Lyndon-Shirshov word")
    if d_len < 1 or d_start < 0 or d_start + d_len > len(w):
        raise ValueError("occurrence out of bounds")
    d = w[d_start:d_start + d_len]
    if not is_alsw(d):
        raise ValueError(f"designated occurrence {d} is not an ALSW")
    lo, hi = d_start, d_start + d_len
    tree = bracket_canonical(w)
    node, offset, path = tree, 0, []
    while not is_leaf(node):
        split = offset + len(word_of(node[0]))
        if hi <= split:
            node = node[0]
            path.append(0)
        elif lo >= split:
            offset = split
            node = node[1]
            path.append(1)
        else:
            break
    if offset != lo:
        raise AssertionError(f"minimal cover of {d} in {w} does not start with it")
    c = word_of(node)[d_len:]
    new = left_normed(bracket_canonical(d), [bracket_canonical(ci) for ci in factorize_nondecreasing(c)])
    return _replace(tree, path, new)


# --- d-decompositions, patterns and the derivation -------------------------

STAR = "*"


@dataclass(frozen=True)
class DDecomposition:
    factors: tuple
    pattern: object

    def rebuild(self) -> NWord:
        return substitute(self.pattern, self.factors)


def _check_d(t: NWord, d: Word):
    d = tuple(d)
    if not d or not is_alsw(d):
        raise ValueError(f"{d} is not an ALSW")
    if not is_nlsw(t):
        raise ValueError(f"{t!r} is not a Lyndon-Shirshov nword")
    if lex_cmp(word_of(t), d) != GREATER:
        raise ValueError("the word must be lex-greater than d")
    return d


def d_decompose(t: NWord, d: Word) -> DDecomposition:
    """Split ``t = (v, w)`` recursively while ``w > d``."""
    d = _check_d(t, d)
    factors = []

    def walk(node):
        if not is_leaf(node) and lex_cmp(word_of(node[1]), d) == GREATER:
            return (walk(node[0]), walk(node[1]))
        factors.append(node)
        return STAR

    pattern = walk(t)
    return DDecomposition(tuple(factors), pattern)


def substitute(pattern, items) -> NWord:
    """Fill the stars of ``pattern`` left to right with ``items``."""
    it = iter(items)

    def fill(p):
        if p == STAR:
            return next(it)
        return (fill(p[0]), fill(p[1]))

    out = fill(pattern)
    if next(it, None) is not None:
        raise ValueError("more items than stars in the pattern")
    return out


def format_pattern(pattern) -> str:
    if pattern == STAR:
        return "*"
    return f"({format_pattern(pattern[0])},{format_pattern(pattern[1])})"


def derive(t: NWord, d: Word) -> LiePolynomial:
    """Append ``[d]`` to each ``d``-indecomposable factor of ``t`` and sum.

    Under distinct-large-letter hypotheses each summand is already a basis
    word; otherwise the summands are normalised through :func:`expand`.
    """
    d = _check_d(t, d)
    dec = d_decompose(t, d)
    dt = bracket_canonical(d)
    acc = {}
    for i in range(len(dec.factors)):
        items = list(dec.factors)
        items[i] = (items[i], dt)
        for u, c in _expand(substitute(dec.pattern, items), "left"):
            acc[u] = acc.get(u, 0) + c
    return LiePolynomial._wrap({u: c for u, c in acc.items() if c})
