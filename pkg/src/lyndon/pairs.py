"""Atom/obstruction duality and the classification machinery for Lyndon pairs.

A Lyndon pair ``(N, W)`` couples a finite set ``N`` of Lyndon atoms (closed
under Lyndon factors and containing the alphabet) with the antichain ``W`` of
minimal Lyndon non-atoms.  Either side determines the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import monomial
from .words import (
    Alphabet,
    Word,
    is_factor,
    is_lyndon,
    is_proper_factor,
    lyndon_words,
    multidegree,
    right_standard_factorization,
)


def is_antichain(ws) -> bool:
    """True iff no word is a proper factor of another (duplicates collapse)."""
    ws = set(ws)
    return not any(
        is_proper_factor(a, b) for a in ws for b in ws if len(a) < len(b)
    )


def _check_obstruction_set(W, g: int):
    W = sorted(set(tuple(w) for w in W))
    for w in W:
        if len(w) < 2:
            raise ValueError(f"obstruction {w} meets the alphabet")
        if any(c < 0 or c >= g for c in w):
            raise ValueError(f"obstruction {w} uses letters outside 0..{g - 1}")
        if not is_lyndon(w):
            raise ValueError(f"obstruction {w} is not a Lyndon word")
    if not is_antichain(W):
        raise ValueError("obstruction set is not an antichain")
    return tuple(W)


def _check_atom_set(atoms, g: int):
    atoms = sorted(set(tuple(a) for a in atoms))
    for a in atoms:
        if not a or any(c < 0 or c >= g for c in a):
            raise ValueError(f"atom {a} uses letters outside 0..{g - 1}")
        if not is_lyndon(a):
            raise ValueError(f"atom {a} is not a Lyndon word")
    atom_set = set(atoms)
    for a in range(g):
        if (a,) not in atom_set:
            raise ValueError("atom set must contain every letter")
    for a in atoms:
        for i in range(len(a)):
            for j in range(i + 1, len(a) + 1):
                f = a[i : j]
                if len(f) < len(a) and is_lyndon(f) and f not in atom_set:
                    raise ValueError(
                        f"atom set not closed under Lyndon factors: {f} missing from {a}"
                    )
    return tuple(atoms)


def obstructions_from_atoms(atoms, g: int) -> tuple:
    """The antichain of Lyndon words that are minimal outside the atom set.

    Every obstruction is a product ``u + v`` of atoms ``u < v`` (its standard
    factorization has both parts among the atoms), so products are the only
    candidates; each is kept iff it is not an atom and every proper Lyndon
    factor is one.  Factors that do not straddle the ``u|v`` boundary lie in
    ``u`` or ``v`` and are atoms automatically.
    """
    atoms = _check_atom_set(atoms, g)
    atom_set = set(atoms)
    out = set()
    for u in atoms:
        for v in atoms:
            if not u < v:
                continue
            w = u + v
            assert is_lyndon(w)
            if w in atom_set or w in out:
                continue
            cut = len(u)
            ok = True
            for i in range(cut):
                for j in range(cut + 1, len(w) + 1):
                    if j - i == len(w):
                        continue
                    f = w[i:j]
                    if is_lyndon(f) and f not in atom_set:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.add(w)
    W = tuple(sorted(out))
    assert is_antichain(W)
    return W


def atoms_from_obstructions(W, g: int, length_bound: int | None = None):
    """All W-normal Lyndon words, with a finiteness flag.

    When the atom set is finite every atom is shorter than the longest
    obstruction, which bounds the search.  Finiteness itself is equivalent to
    polynomial growth of the W-normal language, decided on the avoidance
    automaton.  For an infinite atom set the atoms up to ``length_bound``
    (default: longest obstruction length - 1) are returned with the flag.
    """
    W = _check_obstruction_set(W, g)
    if not W:
        return tuple((a,) for a in range(g)), False
    m = max(len(w) for w in W)
    finite = monomial.language_is_polynomial(W, g)
    cap = m - 1 if length_bound is None else length_bound
    atoms = monomial.lyndon_avoiders(W, g, cap)
    if finite:
        assert all(len(a) <= m - 1 for a in atoms)
    return tuple(atoms), finite


@dataclass(frozen=True)
class LyndonPair:
    """A dual pair of Lyndon atoms and obstructions over ``g`` letters."""

    g: int
    atoms: tuple
    obstructions: tuple

    @property
    def d(self) -> int:
        return len(self.atoms)

    @property
    def m(self) -> int:
        return max(len(a) for a in self.atoms)

    def connected(self) -> bool:
        return is_connected(self.atoms)

    def validate(self):
        """Check both closure conditions and the duality round trip."""
        atoms = _check_atom_set(self.atoms, self.g)
        W = _check_obstruction_set(self.obstructions, self.g)
        if obstructions_from_atoms(atoms, self.g) != W:
            raise ValueError("obstructions do not match the atom set")
        back, finite = atoms_from_obstructions(W, self.g)
        if not finite or back != atoms:
            raise ValueError("atoms do not match the obstruction set")
        return self


def pair_from_atoms(atoms, g: int) -> LyndonPair:
    atoms = _check_atom_set(atoms, g)
    return LyndonPair(g, atoms, obstructions_from_atoms(atoms, g))


def pair_from_obstructions(W, g: int) -> LyndonPair:
    atoms, finite = atoms_from_obstructions(W, g)
    if not finite:
        raise ValueError("obstruction set has infinitely many atoms")
    pair = LyndonPair(g, atoms, tuple(sorted(set(tuple(w) for w in W))))
    if obstructions_from_atoms(atoms, g) != pair.obstructions:
        raise ValueError("obstruction set is not dual to its own atom set")
    return pair


def is_connected(atoms) -> bool:
    """True iff the atom lengths fill an initial interval 1..max."""
    lengths = {len(a) for a in atoms}
    return lengths == set(range(1, max(lengths) + 1))


def connected_component(atoms) -> tuple:
    """Atoms of length <= k for the largest k with all lengths 1..k present."""
    lengths = {len(a) for a in atoms}
    k = 1
    while k + 1 in lengths:
        k += 1
    return tuple(sorted(a for a in atoms if len(a) <= k))


def adjacent_products_property(pair: LyndonPair) -> bool:
    """Each product of lex-adjacent atoms must be an obstruction."""
    atoms = pair.atoms
    W = set(pair.obstructions)
    return all(atoms[i] + atoms[i + 1] in W for i in range(len(atoms) - 1))


def maximal_w_check(pair: LyndonPair) -> bool:
    """Check the three equivalent shapes of the quadratic extreme together.

    ``|W| = d(d-1)/2``, atoms = alphabet, and W = all products of two distinct
    letters must hold or fail simultaneously; disagreement is an error.
    """
    d = pair.d
    cond_count = len(pair.obstructions) == d * (d - 1) // 2
    cond_atoms = pair.atoms == tuple((a,) for a in range(pair.g))
    quadratic = tuple(
        sorted((i, j) for i in range(pair.g) for j in range(pair.g) if i < j)
    )
    cond_shape = pair.obstructions == quadratic
    if not (cond_count == cond_atoms == cond_shape):
        raise AssertionError(f"extreme-case conditions disagree on {pair}")
    return cond_count


def minimal_w_pair(d: int) -> LyndonPair:
    """The unique connected pair with d atoms and d-1 obstructions.

    Atoms x < xy < xy^2 < ... < xy^(d-2) < y over two letters; obstructions
    are the adjacent products plus x y^(d-1).
    """
    if d < 2:
        raise ValueError("need d >= 2")
    x, y = 0, 1
    atoms = [(x,) + (y,) * k for k in range(d - 1)] + [(y,)]
    pair = pair_from_atoms(atoms, 2)
    expected = sorted(
        [(x,) + (y,) * i + (x,) + (y,) * (i + 1) for i in range(d - 2)]
        + [(x,) + (y,) * (d - 1)]
    )
    assert list(pair.obstructions) == expected
    return pair


# ---------------------------------------------------------------------------
# Isomorphism of monomial algebras: relabelings and the reversal twin
# ---------------------------------------------------------------------------

def mirror_word(w: Word, g: int) -> Word:
    """Reverse the word and flip the alphabet order (i -> g-1-i)."""
    return tuple(g - 1 - c for c in reversed(w))


def _letter_permutations(g: int):
    if g == 1:
        return [(0,)]
    if g == 2:
        return [(0, 1), (1, 0)]
    import itertools

    return list(itertools.permutations(range(g)))


def symmetry_images(W, g: int) -> list:
    """Obstruction sets reachable by relabelings and reversal, kept Lyndon.

    Relabeling by a permutation and the order-reversing relabeling composed
    with word reversal are graded (anti)automorphisms of the free algebra, so
    each image presents an isomorphic monomial algebra; an image only stays in
    the Lyndon-pair world when all its words are again Lyndon.
    """
    W = tuple(sorted(W))
    images = []
    for perm in _letter_permutations(g):
        relabeled = tuple(sorted(tuple(perm[c] for c in w) for w in W))
        reversed_ = tuple(sorted(tuple(reversed(u)) for u in relabeled))
        for image in (relabeled, reversed_):
            if all(is_lyndon(u) for u in image) and image not in images:
                images.append(image)
    assert W in images
    return images


def mirror_pair(pair: LyndonPair):
    """The reversal twin of a pair, or None when it leaves the Lyndon world.

    Reversal plus the order-reversing relabeling maps the obstruction ideal to
    an isomorphic one, but the image obstructions need not be Lyndon words;
    only when they all are does the twin define a Lyndon pair again.
    """
    image = tuple(sorted(mirror_word(w, pair.g) for w in pair.obstructions))
    if not all(is_lyndon(u) for u in image):
        return None
    return pair_from_obstructions(image, pair.g)


def canonical_key(pair: LyndonPair) -> tuple:
    """The lex-least symmetry image of the sorted obstruction list."""
    return min(symmetry_images(pair.obstructions, pair.g))


def canonicalize(pair: LyndonPair) -> LyndonPair:
    key = canonical_key(pair)
    if key == pair.obstructions:
        return pair
    return pair_from_obstructions(key, pair.g)


def enumerate_pairs(g: int, d: int, progress=None) -> list:
    """All Lyndon pairs with ``d`` atoms, one per isomorphism class.

    Pairs grow inductively: adjoining any obstruction of a pair as a new atom
    yields a valid pair with one more atom, and every pair arises this way
    from the pair obtained by deleting a factor-maximal atom.  Classes are
    merged only at the end; pruning earlier would be wrong because the
    reversal twin of a pair need not exist at intermediate levels.
    """
    if g < 2:
        raise ValueError("need an alphabet with at least 2 letters")
    if d < g:
        raise ValueError(f"need d >= {g} atoms over {g} letters")
    level = {tuple((a,) for a in range(g))}
    size = g
    while size < d:
        nxt = set()
        for atoms in level:
            for w in obstructions_from_atoms(atoms, g):
                nxt.add(tuple(sorted(atoms + (w,))))
        level = nxt
        size += 1
        if progress is not None:
            progress(size, len(level))
    by_key = {}
    for atoms in level:
        pair = pair_from_atoms(atoms, g)
        by_key.setdefault(canonical_key(pair), pair)
    return [canonicalize(by_key[k]) for k in sorted(by_key)]


def pair_invariants(pair: LyndonPair) -> dict:
    c = monomial.min_two_chain_length(pair.obstructions)
    return {
        "d": pair.d,
        "m": pair.m,
        "c": c,
        "connected": pair.connected(),
    }


def pair_to_json(pair: LyndonPair, alphabet: Alphabet) -> dict:
    if alphabet.size != pair.g:
        raise ValueError("alphabet size does not match the pair")
    return {
        "alphabet": list(alphabet.symbols),
        "atoms": [alphabet.text(a) for a in pair.atoms],
        "obstructions": [alphabet.text(w) for w in pair.obstructions],
        "invariants": pair_invariants(pair),
    }


def pair_from_json(doc: dict) -> tuple:
    alphabet = Alphabet(doc["alphabet"])
    atoms = [alphabet.word(t) for t in doc.get("atoms", [])]
    if atoms:
        pair = pair_from_atoms(atoms, alphabet.size)
        declared = doc.get("obstructions")
        if declared is not None:
            declared = tuple(sorted(alphabet.word(t) for t in declared))
            if declared != pair.obstructions:
                raise ValueError("declared obstructions do not match the atoms")
    else:
        W = [alphabet.word(t) for t in doc["obstructions"]]
        pair = pair_from_obstructions(W, alphabet.size)
    return pair, alphabet
