"""Commutation graphs: an edge ``{x, y}`` means ``(x, y) = 0``."""

from __future__ import annotations

import json
from itertools import combinations

from .words import Alphabet

__all__ = ["CommutationGraph", "GraphFormatError", "parse_graph", "clique_counts"]


class GraphFormatError(ValueError):
    pass


class CommutationGraph:
    """Undirected loop-free graph on an ordered alphabet."""

    def __init__(self, alphabet, edges=()):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        self.alphabet = alphabet
        n = len(alphabet)
        adj = [set() for _ in range(n)]
        for a, b in edges:
            if isinstance(a, str):
                a = alphabet.index(a)
            if isinstance(b, str):
                b = alphabet.index(b)
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) references an unknown letter")
            if a == b:
                raise ValueError(f"loop edge on {alphabet.name(a)!r}")
            adj[a].add(b)
            adj[b].add(a)
        self.adjacency = tuple(frozenset(s) for s in adj)
        self.edges = frozenset(
            (min(a, b), max(a, b)) for a in range(n) for b in adj[a]
        )

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "CommutationGraph":
        """Graph on ``x1..xn`` whose edges are the set bits of ``mask``
        over the pairs ``combinations(range(n), 2)``."""
        pairs = list(combinations(range(n), 2))
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        return cls(Alphabet.standard(n), edges)

    def __len__(self):
        return len(self.alphabet)

    def __eq__(self, other):
        return (
            isinstance(other, CommutationGraph)
            and self.alphabet == other.alphabet
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.alphabet, self.edges))

    def __repr__(self):
        names = self.alphabet.names
        es = ", ".join(f"{names[a]}-{names[b]}" for a, b in sorted(self.edges))
        return f"CommutationGraph({list(names)}, [{es}])"

    def adjacent(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def neighbors(self, a: int) -> frozenset:
        return self.adjacency[a]

    def to_json(self) -> dict:
        names = self.alphabet.names
        return {
            "vertices": list(names),
            "edges": [[names[a], names[b]] for a, b in sorted(self.edges)],
        }

    def serialize(self) -> bytes:
        return json.dumps(self.to_json()).encode("utf-8")


def parse_graph(text) -> CommutationGraph:
    """Read the ``{"vertices": [...], "edges": [[a, b], ...]}`` format.

    Vertex order is the letter order.  Duplicate edges collapse; loops,
    unknown vertices, duplicate names and extra keys are errors.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"graph is not valid UTF-8: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed graph JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise GraphFormatError("graph JSON must be an object")
    extra = set(obj) - {"vertices", "edges"}
    if extra:
        raise GraphFormatError(f"unexpected keys in graph JSON: {sorted(extra)}")
    vertices = obj.get("vertices")
    edges = obj.get("edges", [])
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphFormatError('"vertices" must be an array of strings')
    if not isinstance(edges, list):
        raise GraphFormatError('"edges" must be an array')
    try:
        alphabet = Alphabet(vertices)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e)):
            raise GraphFormatError(f"edge {e!r} is not a pair of vertex names")
        a, b = e
        for v in (a, b):
            if v not in alphabet:
                raise GraphFormatError(f"edge {e!r} references unknown vertex {v!r}")
        if a == b:
            raise GraphFormatError(f"loop edge {e!r}")
        pairs.append((alphabet.index(a), alphabet.index(b)))
    return CommutationGraph(alphabet, pairs)


def clique_counts(g: CommutationGraph, max_k: int) -> list[int]:
    """``[c_0, ..., c_max_k]`` with ``c_k`` the number of ``k``-cliques."""
    if max_k < 0:
        raise ValueError("max_k must be nonnegative")
    counts = [0] * (max_k + 1)
    counts[0] = 1

    def extend(clique_size, candidates):
        # candidates: larger vertices adjacent to every clique member
        for v in candidates:
            size = clique_size + 1
            if size > max_k:
                return
            counts[size] += 1
            extend(size, [w for w in candidates if w > v and w in g.adjacency[v]])

    extend(0, list(range(len(g))))
    return counts
