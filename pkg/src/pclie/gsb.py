"""The relation set S(G), reduction to normal form and composition checks.

``S(G)`` consists of the Lyndon-Shirshov nwords ``([v], b)`` where ``b`` is
a letter absent from ``v`` and adjacent in ``G`` to every letter of ``v``.
Every relator is a single basis word, so the leading word of a relator is
its own associative word.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import lru_cache

from .graph import CommutationGraph
from .lie import LiePolynomial, expand, special_bracket
from .words import (
    NWord,
    Word,
    alsw_of_length,
    bracket_canonical,
    deglex_key,
    is_alsw,
    is_leaf,
    is_nlsw,
    lex_cmp,
    word_of,
    GREATER,
)

__all__ = [
    "DegreeBoundError",
    "ResourceLimitError",
    "RelationSet",
    "Composition",
    "CompositionReport",
    "generate_s",
    "find_relator",
    "is_s_reduced",
    "normal_form",
    "find_compositions",
    "check_gsb",
    "enumerate_basis",
    "nilpotent_basis",
    "equal_in_pc",
    "left_normed_shape",
]


class DegreeBoundError(ValueError):
    """A word is longer than the degree the relation set was generated to."""


class ResourceLimitError(RuntimeError):
    """A polynomial grew past the configured term limit."""


class RelationSet:
    """``S(G)`` truncated at ``max_degree``, indexed by leading word."""

    def __init__(self, graph: CommutationGraph, max_degree: int, relators):
        self.graph = graph
        self.max_degree = max_degree
        by_degree = {n: [] for n in range(2, max_degree + 1)}
        for t in relators:
            by_degree[len(word_of(t))].append(t)
        for ts in by_degree.values():
            ts.sort(key=lambda t: word_of(t))
        self.by_degree = by_degree
        self.index = {word_of(t): t for ts in by_degree.values() for t in ts}
        self.lengths = sorted({len(u) for u in self.index})

    def __len__(self):
        return len(self.index)

    def __iter__(self):
        for n in sorted(self.by_degree):
            yield from self.by_degree[n]

    def __contains__(self, u):
        return tuple(u) in self.index

    def words(self):
        return [word_of(t) for t in self]


def _relator_invariants(t: NWord, graph: CommutationGraph) -> None:
    u = word_of(t)
    top = max(u)
    if u.count(top) != 1:
        raise AssertionError(f"relator {u}: largest letter occurs more than once")
    b = u[-1]
    if sorted(set(u))[-2] != b:
        raise AssertionError(f"relator {u}: last letter is not the second largest")
    if not all(graph.adjacent(b, y) for y in u[:-1]):
        raise AssertionError(f"relator {u}: {b} not adjacent to all letters")


def generate_s(g: CommutationGraph, max_degree: int) -> RelationSet:
    """All elements of ``S(G)`` of length ``2..max_degree``."""
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    relators = []
    for b in range(len(g)):
        nb = sorted(g.neighbors(b))
        if not nb:
            continue
        for n in range(1, max_degree):
            for v in alsw_of_length(len(nb), n):
                v = tuple(nb[a] for a in v)
                t = (bracket_canonical(v), b)
                if is_nlsw(t):
                    _relator_invariants(t, g)
                    relators.append(t)
    return RelationSet(g, max_degree, relators)


def find_relator(u: Word, s: RelationSet, prefer: str = "shortest", side: str = "left"):
    """Occurrence ``(start, length)`` of a relator word in ``u``, or ``None``.

    The default picks the leftmost position and, there, the shortest
    relator; ``side="right"``/``prefer="longest"`` give the alternatives.
    """
    n = len(u)
    starts = range(n) if side == "left" else range(n - 1, -1, -1)
    lengths = s.lengths if prefer == "shortest" else s.lengths[::-1]
    index = s.index
    for i in starts:
        for k in lengths:
            if i + k > n:
                if prefer == "shortest":
                    break
                continue
            if u[i:i + k] in index:
                return i, k
    return None


def is_s_reduced(u: Word, s: RelationSet) -> bool:
    """True iff no relator word is a factor of ``u``."""
    u = tuple(u)
    if not is_alsw(u):
        raise ValueError(f"{u} is not an associative Lyndon-Shirshov word")
    if len(u) > s.max_degree:
        raise DegreeBoundError(
            f"word of length {len(u)} exceeds relation degree {s.max_degree}"
        )
    return find_relator(u, s) is None


@lru_cache(maxsize=1 << 18)
def _reducer(u: Word, start: int, length: int) -> tuple:
    """``expand([u]_s) - [u]`` where ``s`` is the factor at ``start``."""
    terms = dict(expand(special_bracket(u, start, length)).items())
    if terms.pop(u, None) != 1 or any(lex_cmp(w, u) != -1 for w in terms):
        raise AssertionError(f"special bracketing of {u} does not lead with [{u}]")
    return tuple(terms.items())


def _heap_key(u):
    # max-heap on deglex
    return (-len(u), tuple(-a for a in u))


def normal_form(
    p: LiePolynomial,
    s: RelationSet,
    prefer: str = "shortest",
    side: str = "left",
    max_terms: int | None = None,
) -> LiePolynomial:
    """Reduce ``p`` modulo ``S(G)`` to a combination of S-reduced basis words."""
    degree = p.degree()
    if degree > s.max_degree:
        raise DegreeBoundError(
            f"polynomial of degree {degree} exceeds relation degree {s.max_degree}"
        )
    terms = dict(p.items())
    heap = [(_heap_key(u), u) for u in terms]
    heapq.heapify(heap)
    result = {}
    while heap:
        _, u = heapq.heappop(heap)
        c = terms.pop(u, 0)
        if not c:
            continue
        occ = find_relator(u, s, prefer, side)
        if occ is None:
            result[u] = c
            continue
        for w, x in _reducer(u, *occ):
            v = terms.get(w, 0) - c * x
            if v:
                if w not in terms:
                    heapq.heappush(heap, (_heap_key(w), w))
                terms[w] = v
            else:
                terms.pop(w, None)
        if max_terms is not None and len(terms) + len(result) > max_terms:
            raise ResourceLimitError(f"normal form exceeded {max_terms} terms")
    return LiePolynomial(result)


def equal_in_pc(p: LiePolynomial, q: LiePolynomial, s: RelationSet) -> bool:
    """Decide ``p == q`` in the partially commutative Lie algebra."""
    return not normal_form(p - q, s)


# --- compositions ---------------------------------------------------------


@dataclass
class Composition:
    kind: str  # "intersection" or "inclusion"
    f: NWord
    g: NWord
    w: Word
    offset: int  # position of g's word inside w
    polynomial: LiePolynomial
    remainder: LiePolynomial | None = None

    @property
    def trivial(self) -> bool:
        return self.remainder is not None and not self.remainder


def find_compositions(s: RelationSet, max_len: int | None = None) -> list[Composition]:
    """All intersection and inclusion compositions among relators.

    Overlap words are limited to ``max_len`` (default ``s.max_degree``).
    Sorted by overlap word (deglex), then kind, then the relator words.
    """
    bound = s.max_degree if max_len is None else max_len
    prefixes = {}
    for gw in s.index:
        for k in range(1, len(gw)):
            prefixes.setdefault(gw[:k], []).append(gw)
    out = []
    for fw, f in s.index.items():
        lf = len(fw)
        for k in range(1, lf):
            for gw in prefixes.get(fw[lf - k:], ()):
                w = fw + gw[k:]
                if len(w) > bound:
                    continue
                if not is_alsw(w):
                    raise AssertionError(f"overlap word {w} is not an ALSW")
                poly = expand(special_bracket(w, 0, lf)) - expand(
                    special_bracket(w, len(w) - len(gw), len(gw))
                )
                out.append(Composition("intersection", f, s.index[gw], w, len(w) - len(gw), poly))
        if lf > bound:
            continue
        for i in range(lf):
            for j in range(i + 1, min(lf, i + s.max_degree) + 1):
                gw = fw[i:j]
                if gw == fw or gw not in s.index:
                    continue
                poly = LiePolynomial._wrap({fw: 1}) - expand(special_bracket(fw, i, j - i))
                out.append(Composition("inclusion", f, s.index[gw], fw, i, poly))
    out.sort(key=lambda c: (deglex_key(c.w), c.kind, word_of(c.f), word_of(c.g), c.offset))
    return out


@dataclass
class CompositionReport:
    graph: CommutationGraph
    max_degree: int
    relator_count: int
    compositions: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [c for c in self.compositions if not c.trivial]

    @property
    def passed(self) -> bool:
        return not self.failures

    def counts(self) -> dict:
        out = {"intersection": 0, "inclusion": 0}
        for c in self.compositions:
            out[c.kind] += 1
        return out


def check_gsb(g: CommutationGraph, max_degree: int, max_terms: int | None = None) -> CompositionReport:
    """Verify that every composition of ``S(G)`` up to ``max_degree`` reduces to 0."""
    s = generate_s(g, max_degree)
    report = CompositionReport(g, max_degree, len(s))
    for comp in find_compositions(s, max_degree):
        comp.remainder = normal_form(comp.polynomial, s, max_terms=max_terms)
        report.compositions.append(comp)
    return report


# --- bases ----------------------------------------------------------------


def enumerate_basis(g: CommutationGraph, max_degree: int) -> dict[int, list]:
    """S-reduced Lyndon-Shirshov nwords by degree ``1..max_degree``."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    k = len(g)
    basis = {1: [bracket_canonical((a,)) for a in range(k)]}
    if max_degree == 1:
        return basis
    s = generate_s(g, max_degree)
    for n in range(2, max_degree + 1):
        basis[n] = [bracket_canonical(u) for u in alsw_of_length(k, n) if find_relator(u, s) is None]
    return basis


def nilpotent_basis(g: CommutationGraph, n: int) -> dict[int, list]:
    """Basis of the class ``n - 1`` nilpotent quotient ``L(G, n)``."""
    if n < 2:
        raise ValueError("nilpotency level must be at least 2")
    return enumerate_basis(g, n - 1)


def left_normed_shape(t: NWord):
    """Split a relator as ``((...(b', [v1]), ...), [vk]), c)``.

    Returns ``(b', [v1, ..., vk], c)`` with the ``vi`` as nwords, or
    ``None`` if ``t`` is not of the form ``(x, c)`` with ``c`` a letter.
    """
    if is_leaf(t) or not is_leaf(t[1]):
        return None
    c = t[1]
    tails = []
    node = t[0]
    while not is_leaf(node):
        tails.append(node[1])
        node = node[0]
    tails.reverse()
    return node, tails, c


def check_left_normed(t: NWord) -> bool:
    """``b' > c >= v_k >= ... >= v_1`` (lex) for the split of a relator."""
    shape = left_normed_shape(t)
    if shape is None:
        return False
    head, tails, c = shape
    if not head > c:
        return False
    chain = [word_of(v) for v in tails] + [(c,)]
    return all(lex_cmp(a, b) != GREATER for a, b in zip(chain, chain[1:]))
