"""Words over a finite ordered alphabet and Lyndon-Shirshov words.

Letters are plain ints (alphabet positions, smaller int = smaller letter).
An associative word is a tuple of ints.  A non-associative word (an
"nword") is either a letter ``int`` or a pair ``(left, right)`` of nwords,
so ``(2, (1, 0))`` stands for ``(x3,(x2,x1))``.

Two orders are used on words:

* ``lex``: first differing letter decides; a proper prefix is *greater*
  than any of its extensions (``x2 > x2x1``).
* ``deglex``: shorter words are smaller, equal lengths compare by ``lex``.

An associative Lyndon-Shirshov word (ALSW) is a non-empty word that is
strictly lex-greater than each of its proper rotations ``wv`` (``u = vw``).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence, Tuple, Union

Word = Tuple[int, ...]
NWord = Union[int, tuple]

LESS, EQUAL, GREATER = -1, 0, 1

__all__ = [
    "Alphabet",
    "Word",
    "NWord",
    "compare",
    "lex_cmp",
    "lex_lt",
    "deglex_key",
    "is_alsw",
    "enumerate_alsw",
    "alsw_of_length",
    "factorize_nondecreasing",
    "bracket_canonical",
    "is_nlsw",
    "word_of",
    "is_leaf",
    "letters_of",
]


class Alphabet:
    """Ordered set of letter names; list position defines the order."""

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if not names:
            raise ValueError("alphabet must contain at least one letter")
        for name in names:
            if not isinstance(name, str) or not name:
                raise ValueError(f"invalid letter name {name!r}")
        if len(set(names)) != len(names):
            seen = set()
            dup = next(n for n in names if n in seen or seen.add(n))
            raise ValueError(f"duplicate letter name {dup!r}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    @classmethod
    def standard(cls, n: int) -> "Alphabet":
        """``x1 < x2 < ... < xn``."""
        return cls([f"x{i}" for i in range(1, n + 1)])

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(range(len(self.names)))

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown letter {name!r}") from None

    def name(self, letter: int) -> str:
        return self.names[letter]

    def word(self, *names: str) -> Word:
        return tuple(self.index(n) for n in names)

    def format_word(self, u: Word) -> str:
        return "".join(self.names[a] for a in u)

    def format_nword(self, t: NWord) -> str:
        """Parenthesis notation, e.g. ``(x3,(x2,x1))``."""
        if is_leaf(t):
            return self.names[t]
        return f"({self.format_nword(t[0])},{self.format_nword(t[1])})"

    def nword_to_json(self, t: NWord):
        if is_leaf(t):
            return self.names[t]
        return [self.nword_to_json(t[0]), self.nword_to_json(t[1])]

    def nword_from_json(self, obj) -> NWord:
        if isinstance(obj, str):
            return self.index(obj)
        if isinstance(obj, list) and len(obj) == 2:
            return (self.nword_from_json(obj[0]), self.nword_from_json(obj[1]))
        raise ValueError(f"not an nword encoding: {obj!r}")

    def check_word(self, u: Word) -> None:
        n = len(self.names)
        for a in u:
            if not (isinstance(a, int) and 0 <= a < n):
                raise ValueError(f"letter {a!r} outside alphabet of size {n}")


def lex_cmp(u: Word, v: Word) -> int:
    n = min(len(u), len(v))
    if u[:n] != v[:n]:
        return LESS if u[:n] < v[:n] else GREATER
    # one is a prefix of the other: the longer word is smaller
    if len(u) == len(v):
        return EQUAL
    return LESS if len(u) > len(v) else GREATER


def lex_lt(u: Word, v: Word) -> bool:
    return lex_cmp(u, v) == LESS


def deglex_key(u: Word):
    # within one length, lex coincides with plain tuple order
    return (len(u), u)


def compare(order: str, u: Word, v: Word, alphabet: Alphabet | None = None) -> int:
    """Compare two words; returns -1, 0 or 1.

    ``order`` is ``"lex"`` or ``"deglex"``.  The empty word is allowed here
    (and only here); it is the lex-greatest word.
    """
    if alphabet is not None:
        alphabet.check_word(u)
        alphabet.check_word(v)
    if order == "lex":
        return lex_cmp(u, v)
    if order == "deglex":
        if len(u) != len(v):
            return LESS if len(u) < len(v) else GREATER
        return lex_cmp(u, v)
    raise ValueError(f"unknown order {order!r}")


@lru_cache(maxsize=None)
def is_alsw(u: Word) -> bool:
    """True iff ``wv < u`` (lex) for every split ``u = vw`` into non-empty parts."""
    if not u:
        raise ValueError("is_alsw of the empty word")
    for i in range(1, len(u)):
        if lex_cmp(u[i:] + u[:i], u) != LESS:
            return False
    return True


def _lyndon_std(k: int, max_len: int) -> Iterator[list]:
    # Duval's generator for Lyndon words in the usual (min-rotation) sense
    w = [-1]
    while w:
        w[-1] += 1
        yield w
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


def enumerate_alsw(alphabet: Alphabet | int, max_len: int) -> list[Word]:
    """All ALSWs of length ``1..max_len``, deglex ascending.

    Reversing the letter order turns an ALSW into an ordinary Lyndon word,
    so the words come from Duval's generator on the reversed alphabet.
    """
    k = alphabet if isinstance(alphabet, int) else len(alphabet)
    if max_len < 1:
        raise ValueError("max_len must be positive")
    if k < 1:
        return []
    top = k - 1
    words = [tuple(top - a for a in w) for w in _lyndon_std(k, max_len)]
    words.sort(key=deglex_key)
    return words


@lru_cache(maxsize=None)
def _alsw_of_length(k: int, n: int) -> tuple:
    return tuple(u for u in enumerate_alsw(k, n) if len(u) == n)


def alsw_of_length(alphabet: Alphabet | int, n: int) -> tuple:
    """ALSWs of length exactly ``n``, deglex (= lex) ascending."""
    k = alphabet if isinstance(alphabet, int) else len(alphabet)
    return _alsw_of_length(k, n)


def factorize_nondecreasing(c: Word) -> list[Word]:
    """Split ``c`` into ALSWs ``c1 <= c2 <= ... <= cm`` (lex).

    Greedy from the right: the last factor is the longest ALSW suffix.
    """
    factors = []
    end = len(c)
    while end:
        for start in range(end):
            if is_alsw(c[start:end]):
                break
        factors.append(c[start:end])
        end = start
    factors.reverse()
    for a, b in zip(factors, factors[1:]):
        if lex_cmp(a, b) == GREATER:
            raise AssertionError(f"factorization of {c} is not nondecreasing")
    return factors


@lru_cache(maxsize=None)
def bracket_canonical(u: Word) -> NWord:
    """The unique Lyndon-Shirshov bracketing of the ALSW ``u``.

    ``[u] = ([u1],[u2])`` where ``u2`` is the longest proper suffix of ``u``
    that is itself an ALSW.
    """
    u = tuple(u)
    if not u or not is_alsw(u):
        raise ValueError(f"{u} is not an associative Lyndon-Shirshov word")
    if len(u) == 1:
        return u[0]
    for i in range(1, len(u)):
        if is_alsw(u[i:]):
            return (bracket_canonical(u[:i]), bracket_canonical(u[i:]))
    raise AssertionError("unreachable: the last letter is always an ALSW")


def is_leaf(t: NWord) -> bool:
    return not isinstance(t, tuple)


@lru_cache(maxsize=None)
def word_of(t: NWord) -> Word:
    """Underlying associative word (leaves left to right)."""
    if is_leaf(t):
        return (t,)
    return word_of(t[0]) + word_of(t[1])


def letters_of(t: NWord) -> set:
    return set(word_of(t))


@lru_cache(maxsize=None)
def is_nlsw(t: NWord) -> bool:
    """Non-associative Lyndon-Shirshov word test (conditions i-iii)."""
    if is_leaf(t):
        return True
    if not is_alsw(word_of(t)):
        return False
    t1, t2 = t
    if not (is_nlsw(t1) and is_nlsw(t2)):
        return False
    w2 = word_of(t2)
    if lex_cmp(word_of(t1), w2) != GREATER:
        return False
    if not is_leaf(t1) and lex_cmp(w2, word_of(t1[1])) == LESS:
        return False
    return True
