"""Monomial algebra invariants from an obstruction antichain.

Everything here works on a plain finite antichain ``W`` of forbidden factors:
normal-word counting through a factor-avoidance automaton, overlap chains and
global dimension, Hilbert series, and the PBW-style normal basis built from
Lyndon atoms.
"""

from __future__ import annotations

from collections import namedtuple

from .words import Word, is_factor, is_lyndon


class SearchBoundExceeded(Exception):
    """A chain search hit its word-length bound before stabilising."""


def is_normal(w: Word, W) -> bool:
    """True iff no obstruction occurs in ``w`` as a factor."""
    return not any(is_factor(o, w) for o in W)


def avoidance_automaton(W, g: int):
    """Deterministic automaton tracking the longest obstruction-prefix suffix.

    Returns ``(states, delta)`` where states are obstruction prefixes (state 0
    is the empty word) and ``delta[s][letter]`` is the next state or ``None``
    when reading the letter completes an obstruction.
    """
    W = [tuple(w) for w in W]
    if any(len(w) == 0 for w in W):
        raise ValueError("obstructions must be nonempty words")
    prefixes = {()}
    for w in W:
        for k in range(1, len(w)):
            prefixes.add(w[:k])
    obstructions = set(W)
    states = sorted(prefixes, key=lambda p: (len(p), p))
    index = {p: i for i, p in enumerate(states)}
    delta = []
    for s in states:
        row = []
        for a in range(g):
            t = s + (a,)
            nxt = None
            for k in range(len(t)):
                suffix = t[k:]
                if suffix in obstructions:
                    nxt = None
                    break
                if suffix in index:
                    nxt = index[suffix]
                    break
            else:
                nxt = index[()]
            row.append(nxt)
        delta.append(row)
    return states, delta


def count_normal(W, g: int, m: int) -> list:
    """Numbers of W-normal words of each length 0..m (exact integers)."""
    _, delta = avoidance_automaton(W, g)
    counts = [1]
    vec = {0: 1}
    for _ in range(m):
        nxt = {}
        for s, c in vec.items():
            for a in range(g):
                t = delta[s][a]
                if t is not None:
                    nxt[t] = nxt.get(t, 0) + c
        vec = nxt
        counts.append(sum(vec.values()))
    return counts


def normal_words(W, g: int, max_len: int, min_len: int = 0):
    """Yield all W-normal words with min_len <= length <= max_len."""
    _, delta = avoidance_automaton(W, g)

    def walk(word, state):
        if len(word) >= min_len:
            yield tuple(word)
        if len(word) == max_len:
            return
        for a in range(g):
            t = delta[state][a]
            if t is not None:
                word.append(a)
                yield from walk(word, t)
                word.pop()

    yield from walk([], 0)


def language_is_polynomial(W, g: int) -> bool:
    """True iff the W-normal language has polynomial growth.

    A regular language grows polynomially iff every strongly connected
    component of its (trim, all-accepting) automaton is a simple cycle.
    """
    _, delta = avoidance_automaton(W, g)
    n = len(delta)
    edges = [[t for t in row if t is not None] for row in delta]
    # Tarjan SCC, iterative
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack, sccs, counter = [], [], [0]

    def strongconnect(v0):
        work = [(v0, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(pi, len(edges[v])):
                w = edges[v][i]
                if index[w] is None:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    for v in range(n):
        if index[v] is None:
            strongconnect(v)

    for comp in sccs:
        comp_set = set(comp)
        internal = sum(1 for v in comp for w in edges[v] if w in comp_set)
        if len(comp) == 1:
            if internal > 1:
                return False
        elif internal != len(comp):
            return False
        elif any(sum(1 for w in edges[v] if w in comp_set) != 1 for v in comp):
            return False
    return True


TwoChain = namedtuple("TwoChain", "word head overlap tail left right")


def two_chains(W, max_len: int | None = None) -> list:
    """All overlap 2-chains on ``W`` with their factorization data.

    A 2-prechain is ``word = head + overlap + tail`` with ``left = head +
    overlap`` and ``right = overlap + tail`` both obstructions and head, tail,
    overlap nonempty; it is a 2-chain when no proper prefix is a 2-prechain.
    """
    W = [tuple(w) for w in W]
    prechains = []
    for u in W:
        for v in W:
            for blen in range(1, min(len(u), len(v))):
                if u[len(u) - blen :] == v[:blen]:
                    word = u + v[blen:]
                    if max_len is not None and len(word) > max_len:
                        continue
                    prechains.append(
                        TwoChain(word, u[: len(u) - blen], v[:blen], v[blen:], u, v)
                    )
    words = {c.word for c in prechains}
    chains = [
        c
        for c in prechains
        if not any(c.word[:k] in words for k in range(1, len(c.word)))
    ]
    chains.sort(key=lambda c: (len(c.word), c.word, c.left))
    return chains


def min_two_chain_length(W):
    """Length of the shortest 2-chain on ``W``, or None if there is none."""
    chains = two_chains(W)
    return min(len(c.word) for c in chains) if chains else None


def chain_levels(W, g: int, word_bound: int):
    """Yield ``(n, chains_n)`` for n = 0, 1, 2, ... until a level is empty.

    Each chain is carried as ``(word, k)`` where ``word[:k]`` is the contained
    chain of the previous level.  Raises :class:`SearchBoundExceeded` if a
    prechain word would exceed ``word_bound``.
    """
    W = [tuple(w) for w in W]
    level = [((a,), 0) for a in range(g)]
    n = 0
    yield n, level
    level = [(w, 1) for w in sorted(W)]
    n = 1
    while level:
        yield n, level
        prechains = {}
        for word, k in level:
            for p in range(k, len(word)):
                rest = len(word) - p
                for t in W:
                    if len(t) > rest and t[:rest] == word[p:]:
                        new = word + t[rest:]
                        if len(new) > word_bound:
                            raise SearchBoundExceeded(
                                f"{n + 1}-prechain of length {len(new)} exceeds bound {word_bound}"
                            )
                        prechains.setdefault(new, len(word))
        chain_words = set(prechains)
        level = sorted(
            (w, k)
            for w, k in prechains.items()
            if not any(w[:j] in chain_words for j in range(1, len(w)))
        )
        n += 1
    yield n, []


def n_chain_exists(W, g: int, n: int, search_bound: int | None = None):
    """Whether an n-chain on ``W`` exists, with a witness word if so."""
    if n < -1:
        raise ValueError("chain level must be >= -1")
    if n == -1:
        return True, ()
    bound = search_bound if search_bound is not None else _default_chain_bound(W)
    for m, level in chain_levels(W, g, bound):
        if m == n:
            return (True, level[0][0]) if level else (False, None)
        if not level:
            return False, None
    return False, None


def _default_chain_bound(W) -> int:
    return 4 * max((len(w) for w in W), default=1)


def global_dimension(W, g: int, bound: int | None = None) -> int:
    """Global dimension of the monomial algebra with obstruction set ``W``.

    This is the first level carrying no chain: the algebra has global
    dimension d iff there is a (d-1)-chain but no d-chain.
    """
    if not W:
        return 1
    word_bound = bound if bound is not None else _default_chain_bound(W)
    for n, level in chain_levels(W, g, word_bound):
        if not level:
            return n
    raise AssertionError("unreachable: chain_levels ends with an empty level")


def hilbert_from_atoms(atoms, degree: int) -> list:
    """Coefficients 0..degree of prod 1/(1 - t^len(a)) over the atoms."""
    coeffs = [1] + [0] * degree
    for a in atoms:
        k = len(a)
        # multiply by 1/(1 - t^k) in place
        for i in range(k, degree + 1):
            coeffs[i] += coeffs[i - k]
    return coeffs


def pbw_normal_basis(atoms, m: int) -> list:
    """All non-increasing products of atom powers of total length ``m``.

    Atoms must be Lyndon; the result is the degree-m slice of the normal
    basis predicted by the PBW shape of the normal words.
    """
    atoms = sorted(atoms, reverse=True)
    assert all(is_lyndon(a) for a in atoms)
    out = []

    def build(i, remaining, prefix):
        if remaining == 0:
            out.append(prefix)
            return
        if i == len(atoms):
            return
        a = atoms[i]
        build(i + 1, remaining, prefix)
        k = 1
        while k * len(a) <= remaining:
            build(i + 1, remaining - k * len(a), prefix + a * k)
            k += 1

    build(0, m, ())
    return sorted(out)


def lyndon_avoiders(W, g: int, max_len: int, min_len: int = 1) -> list:
    """W-normal Lyndon words with min_len <= length <= max_len, lex sorted."""
    found = [w for w in normal_words(W, g, max_len, min_len=max(min_len, 1)) if is_lyndon(w)]
    return sorted(found)
