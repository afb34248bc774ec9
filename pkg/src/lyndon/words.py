"""Words over an ordered alphabet and Lyndon word primitives.

Words are tuples of letter indices ``0 .. g-1``; index order is the alphabet
order, so Python's tuple comparison *is* the pure lexicographic order ``<``
(a proper prefix compares smaller).  Symbol names only appear at the I/O
boundary, through :class:`Alphabet`.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

Word = tuple  # tuple of int letter indices

EMPTY: Word = ()


class Alphabet:
    """An ordered alphabet of distinct symbol names."""

    def __init__(self, symbols: Sequence[str]):
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError("alphabet must have at least one symbol")
        if len(set(symbols)) != len(symbols):
            raise ValueError("alphabet symbols must be distinct")
        if any(not s for s in symbols):
            raise ValueError("alphabet symbols must be nonempty")
        self.symbols = symbols
        self._index = {s: i for i, s in enumerate(symbols)}

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} not in alphabet {self.symbols}") from None

    def word(self, text: str) -> Word:
        """Parse a word; compact (one char per letter) or dot-separated."""
        if text in ("", "1"):
            return EMPTY
        if all(len(s) == 1 for s in self.symbols) and "." not in text:
            return tuple(self.index(c) for c in text)
        return tuple(self.index(part) for part in text.split("."))

    def text(self, word: Word) -> str:
        if not word:
            return "1"
        if all(len(s) == 1 for s in self.symbols):
            return "".join(self.symbols[i] for i in word)
        return ".".join(self.symbols[i] for i in word)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __repr__(self):
        return f"Alphabet({list(self.symbols)!r})"


def lex_cmp(u: Word, v: Word) -> int:
    """Pure lexicographic comparison; a proper prefix is smaller."""
    if u == v:
        return 0
    return -1 if u < v else 1


def deglex_key(w: Word):
    """Sort key realising the degree-lexicographic order.

    Shorter words come first; words of equal length compare by *reversed*
    lexicographic order, so the deg-lex largest word of a given length is the
    lex smallest one.
    """
    return (len(w), tuple(-c for c in w))


def deglex_cmp(u: Word, v: Word) -> int:
    ku, kv = deglex_key(u), deglex_key(v)
    if ku == kv:
        return 0
    return -1 if ku < kv else 1


def multidegree(w: Word, g: int) -> tuple:
    """Per-letter occurrence counts of ``w`` over a ``g``-letter alphabet."""
    counts = [0] * g
    for c in w:
        counts[c] += 1
    return tuple(counts)


def is_factor(a: Word, b: Word) -> bool:
    """True iff ``a`` occurs in ``b`` as a contiguous segment (equality allowed)."""
    n, m = len(a), len(b)
    if n > m:
        return False
    return any(b[i : i + n] == a for i in range(m - n + 1))


def is_proper_factor(a: Word, b: Word) -> bool:
    return len(a) < len(b) and is_factor(a, b)


def find_factor(a: Word, b: Word) -> int:
    """Index of the leftmost occurrence of ``a`` in ``b``, or -1."""
    n, m = len(a), len(b)
    for i in range(m - n + 1):
        if b[i : i + n] == a:
            return i
    return -1


def rotations(w: Word) -> Iterator[Word]:
    for i in range(len(w)):
        yield w[i:] + w[:i]


def is_lyndon(w: Word) -> bool:
    """True iff ``w`` is strictly smaller than every proper suffix.

    Equivalent to being nonperiodic and minimal in its rotation class; the
    suffix form avoids materialising rotations.
    """
    n = len(w)
    if n == 0:
        return False
    if n == 1:
        return True
    return all(w < w[i:] for i in range(1, n))


def lyndon_words(g: int, max_len: int) -> list:
    """All Lyndon words of length <= ``max_len`` over ``g`` letters, lex sorted.

    Duval's successor algorithm; output is in lexicographic order, which for
    Lyndon words of bounded length is the generation order.
    """
    if g < 1:
        raise ValueError("alphabet size must be >= 1")
    if max_len < 1:
        return []
    out = []
    w = [0]
    while True:
        out.append(tuple(w))
        # extend periodically to full length, then increment the last slot
        w = [w[i % len(w)] for i in range(max_len)]
        while w and w[-1] == g - 1:
            w.pop()
        if not w:
            return out
        w[-1] += 1


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    mu, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    return -mu if n > 1 else mu


def witt_count(g: int, n: int) -> int:
    """Number of Lyndon words of length ``n`` over ``g`` letters (Witt formula)."""
    if g < 1 or n < 1:
        raise ValueError("need g >= 1 and n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += _mobius(d) * g ** (n // d)
            if d != n // d:
                total += _mobius(n // d) * g ** d
        d += 1
    assert total % n == 0
    return total // n


def cfl_factorize(w: Word) -> list:
    """Factor ``w`` as its unique non-increasing product of Lyndon words (Duval)."""
    if not w:
        raise ValueError("empty word has no factorization")
    out = []
    k, n = 0, len(w)
    while k < n:
        i, j = k, k + 1
        while j < n and w[i] <= w[j]:
            i = k if w[i] < w[j] else i + 1
            j += 1
        period = j - i
        while k <= i:
            out.append(w[k : k + period])
            k += period
    assert sum(out, ()) == w
    return out


@lru_cache(maxsize=None)
def right_standard_factorization(w: Word) -> tuple:
    """Split a Lyndon word as (u, v) with v the longest proper Lyndon suffix.

    Both parts are Lyndon; v is also the lex smallest proper suffix.
    """
    n = len(w)
    if n < 2 or not is_lyndon(w):
        raise ValueError(f"need a Lyndon word of length >= 2, got {w}")
    v = min(w[i:] for i in range(1, n))
    u = w[: n - len(v)]
    assert is_lyndon(u) and is_lyndon(v)
    return u, v


@lru_cache(maxsize=None)
def left_standard_factorization(w: Word) -> tuple:
    """Split a Lyndon word as (p, q) with p the longest proper Lyndon prefix."""
    n = len(w)
    if n < 2 or not is_lyndon(w):
        raise ValueError(f"need a Lyndon word of length >= 2, got {w}")
    for k in range(n - 1, 0, -1):
        if is_lyndon(w[:k]):
            p, q = w[:k], w[k:]
            assert is_lyndon(q)
            return p, q
    raise AssertionError("unreachable: single letters are Lyndon")
