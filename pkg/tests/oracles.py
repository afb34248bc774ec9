"""Brute-force reference implementations used as test oracles.

Everything here recomputes results from definitions, independently of the
library's algorithmic shortcuts.
"""

from fractions import Fraction
from itertools import product


def all_words(g, n):
    return [tuple(w) for w in product(range(g), repeat=n)]


def lyndon_by_rotations(w):
    """Nonperiodic and lexicographically minimal among all rotations."""
    if not w:
        return False
    rots = [w[i:] + w[:i] for i in range(len(w))]
    return len(set(rots)) == len(w) and min(rots) == w


def normal_count_brute(W, g, n):
    return sum(
        1 for w in all_words(g, n) if not any(_occurs(o, w) for o in W)
    )


def _occurs(a, b):
    return any(b[i : i + len(a)] == a for i in range(len(b) - len(a) + 1))


def longest_lyndon_suffix(w):
    best = None
    for i in range(1, len(w)):
        if lyndon_by_rotations(w[i:]):
            if best is None or len(w[i:]) > len(best):
                best = w[i:]
    return best


def longest_lyndon_prefix(w):
    best = None
    for k in range(1, len(w)):
        if lyndon_by_rotations(w[:k]):
            best = w[:k]
    return best


def obstructions_brute(atoms, g, max_len):
    """Minimal Lyndon non-atoms, scanning every Lyndon word up to max_len."""
    from lyndon.words import lyndon_words

    atom_set = set(atoms)
    non_atoms = [u for u in lyndon_words(g, max_len) if u not in atom_set]
    out = []
    for u in non_atoms:
        factors = {
            u[i:j]
            for i in range(len(u))
            for j in range(i + 1, len(u) + 1)
            if j - i < len(u)
        }
        if all(f in atom_set for f in factors if lyndon_by_rotations(f)):
            out.append(u)
    return tuple(sorted(out))


def matrix_rank(rows):
    """Rank over the rationals of rows given as word -> coefficient dicts."""
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        row = rows.pop()
        if not row:
            continue
        pivot = max(row)
        pv = row[pivot]
        rank += 1
        reduced = []
        for other in rows:
            if pivot in other:
                factor = Fraction(other[pivot], pv)
                new = dict(other)
                for k, v in row.items():
                    nv = new.get(k, 0) - factor * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                other = new
            if other:
                reduced.append(other)
        rows = reduced
    return rank
