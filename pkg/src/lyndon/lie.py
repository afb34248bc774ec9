"""Free Lie algebra over the rationals in the Lyndon basis.

Two complementary computation routes are provided.  Associative expansion of
bracket trees is transparent but exponential in the word length; it serves as
the oracle and powers :func:`lyndon_decompose`.  The bracket rewriting engine
(:func:`bracket_basis`) multiplies Lyndon basis elements entirely inside the
Lie algebra and stays cheap on the long words produced by overlap chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .words import (
    Word,
    deglex_key,
    is_lyndon,
    left_standard_factorization,
    right_standard_factorization,
)


class _Terms:
    """Word -> coefficient map with no stored zeros; treated as immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: Word) -> Fraction:
        return self.terms.get(w, Fraction(0))

    @property
    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero has no leading word")
        return max(self.terms, key=deglex_key)

    @property
    def leading_coeff(self) -> Fraction:
        return self.terms[self.leading_word]

    def items_desc(self):
        return sorted(self.terms.items(), key=lambda kv: deglex_key(kv[0]), reverse=True)

    def _combine(self, other, sign):
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) + sign * c
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
        return type(self)(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)({w: -c for w, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return type(self)()
        return type(self)({w: c * v for w, v in self.terms.items()})

    def monic(self):
        lc = self.leading_coeff
        return self if lc == 1 else self.scale(Fraction(1) / lc)

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return f"{type(self).__name__}(0)"
        bits = " + ".join(f"{c}*{w}" for w, c in self.items_desc())
        return f"{type(self).__name__}({bits})"

    def to_json(self, alphabet) -> list:
        return [
            {
                "word": alphabet.text(w),
                "numerator": c.numerator,
                "denominator": c.denominator,
            }
            for w, c in self.items_desc()
        ]


class AssocPoly(_Terms):
    """Rational linear combination of words in the free associative algebra."""

    @classmethod
    def monomial(cls, w: Word, coeff=1):
        return cls({tuple(w): Fraction(coeff)})

    def __mul__(self, other):
        out = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = u + v
                nc = out.get(w, 0) + cu * cv
                if nc:
                    out[w] = nc
                else:
                    del out[w]
        return AssocPoly(out)

    def commutator(self, other):
        return self * other - other * self


class LiePoly(_Terms):
    """Coordinates of a Lie element in the Lyndon basis (all keys Lyndon)."""

    @classmethod
    def monomial(cls, w: Word, coeff=1):
        w = tuple(w)
        if not is_lyndon(w):
            raise ValueError(f"{w} is not a Lyndon word")
        return cls({w: Fraction(coeff)})


def leading_lyndon(f: LiePoly) -> Word:
    """Deg-lex largest basis word of a nonzero Lie element."""
    return f.leading_word


# ---------------------------------------------------------------------------
# Bracket trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StdLeaf:
    """Shorthand subtree standing for the standard bracketing of a word."""

    word: Word


@dataclass(frozen=True)
class Slot:
    """Marked subtree: the standard bracketing of ``word``, substitutable."""

    word: Word


@lru_cache(maxsize=None)
def standard_bracket_tree(u: Word):
    """Right standard bracketing: recurse on the right standard factorization."""
    if not is_lyndon(u):
        raise ValueError(f"{u} is not a Lyndon word")
    if len(u) == 1:
        return u[0]
    a, b = right_standard_factorization(u)
    return (standard_bracket_tree(a), standard_bracket_tree(b))


@lru_cache(maxsize=None)
def left_standard_bracket_tree(u: Word):
    """Left standard bracketing, via the left standard factorization."""
    if not is_lyndon(u):
        raise ValueError(f"{u} is not a Lyndon word")
    if len(u) == 1:
        return u[0]
    a, b = left_standard_factorization(u)
    return (left_standard_bracket_tree(a), left_standard_bracket_tree(b))


def standard_bracketing(u: Word):
    return standard_bracket_tree(tuple(u))


def tree_word(tree) -> Word:
    if isinstance(tree, int):
        return (tree,)
    if isinstance(tree, (StdLeaf, Slot)):
        return tree.word
    left, right = tree
    return tree_word(left) + tree_word(right)


def full_tree(tree):
    """Resolve shorthand leaves into explicit letter trees."""
    if isinstance(tree, int):
        return tree
    if isinstance(tree, (StdLeaf, Slot)):
        return standard_bracket_tree(tree.word)
    left, right = tree
    return (full_tree(left), full_tree(right))


def expand(tree) -> AssocPoly:
    """Commutator expansion of a bracket tree in the free associative algebra."""
    if isinstance(tree, int):
        return AssocPoly.monomial((tree,))
    if isinstance(tree, (StdLeaf, Slot)):
        return expand_standard(tree.word)
    left, right = tree
    return expand(left).commutator(expand(right))


@lru_cache(maxsize=None)
def expand_standard(u: Word) -> AssocPoly:
    return expand(standard_bracket_tree(u))


def lyndon_decompose(p: AssocPoly) -> LiePoly:
    """Coordinates of a Lie element in the Lyndon basis, by leading-term peeling.

    Repeatedly subtracts leading-word multiples of expanded standard brackets;
    a non-Lyndon leading word at any stage certifies that the input is not a
    Lie element.
    """
    rem = AssocPoly(p.terms)
    out = {}
    while not rem.is_zero():
        w = rem.leading_word
        if not is_lyndon(w):
            raise ValueError(f"not a Lie element: leading word {w} is not Lyndon")
        c = rem.coeff(w)
        out[w] = out.get(w, 0) + c
        rem = rem - expand_standard(w).scale(c)
    return LiePoly(out)


# ---------------------------------------------------------------------------
# Lyndon basis multiplication (rewriting engine)
# ---------------------------------------------------------------------------

def _is_standard_product(u: Word, v: Word) -> bool:
    """Whether (u, v) is the right standard factorization of u + v.

    For Lyndon u < v this holds iff u is a letter or the right factor of u is
    >= v; otherwise a longer Lyndon suffix than v exists inside u + v.
    """
    return len(u) == 1 or right_standard_factorization(u)[1] >= v


@lru_cache(maxsize=None)
def bracket_basis(u: Word, v: Word) -> LiePoly:
    """[u, v] for Lyndon words u < v, expressed in the Lyndon basis.

    When (u, v) is standard the product is the basis element [u + v]; else
    u = (u1, u2) with u2 < v and Jacobi gives
    [u, v] = [u1, [u2, v]] + [[u1, v], u2], all pieces strictly smaller.
    """
    assert u < v, (u, v)
    if _is_standard_product(u, v):
        return LiePoly.monomial(u + v)
    u1, u2 = right_standard_factorization(u)
    assert u2 < v
    inner = bracket_basis(u2, v)
    t1 = bracket_poly(LiePoly.monomial(u1), inner)
    t2 = bracket_poly(bracket_basis(u1, v), LiePoly.monomial(u2))
    return t1 + t2


def bracket_pair(a: Word, b: Word) -> LiePoly:
    if a == b:
        return LiePoly()
    if a < b:
        return bracket_basis(a, b)
    return -bracket_basis(b, a)


def bracket_poly(f: LiePoly, g: LiePoly) -> LiePoly:
    out = LiePoly()
    for u, cu in f.terms.items():
        for v, cv in g.terms.items():
            if u != v:
                out = out + bracket_pair(u, v).scale(cu * cv)
    return out


def lie_bracket(f: LiePoly, g: LiePoly) -> LiePoly:
    """Lie bracket of two elements given in Lyndon coordinates.

    Computed by Lyndon basis rewriting; agrees with decomposing the
    commutator of the associative expansions (the oracle route, exercised in
    the tests but exponential in the degree).
    """
    return bracket_poly(f, g)


# ---------------------------------------------------------------------------
# Regular bracketings of a Lyndon word around a marked Lyndon factor
# ---------------------------------------------------------------------------

def _regular_tree(a: Word, u: Word, b: Word):
    """Bracketing of the Lyndon word a+u+b with a substitutable slot at u.

    The expansion is monic with leading word a+u+b.  When u is a prefix the
    *left* standard factorization (p, q) keeps the marked occurrence inside p
    (p is the longest Lyndon prefix); otherwise the right standard
    factorization splits the word without cutting the occurrence.
    """
    tau = a + u + b
    if not is_lyndon(tau):
        raise ValueError(f"{tau} is not a Lyndon word")
    if not is_lyndon(u):
        raise ValueError(f"marked factor {u} is not a Lyndon word")
    if not a and not b:
        return Slot(u)
    if not a:
        p, q = left_standard_factorization(tau)
        assert len(u) <= len(p)
        return (_regular_tree((), u, p[len(u):]), StdLeaf(q))
    p, q = right_standard_factorization(tau)
    if len(a) >= len(p):
        return (StdLeaf(p), _regular_tree(a[len(p):], u, b))
    if len(a) + len(u) > len(p):
        raise AssertionError(
            f"marked factor {u} straddles the standard factorization of {tau}"
        )
    return (_regular_tree(a, u, p[len(a) + len(u):]), StdLeaf(q))


def regular_bracketing(a: Word, u: Word, b: Word):
    """Public form of the marked bracketing, with all leaves resolved."""
    return full_tree(_regular_tree(tuple(a), tuple(u), tuple(b)))


def tree_to_lie(tree, slot_value: LiePoly | None = None) -> LiePoly:
    """Lyndon coordinates of a bracket tree via the rewriting engine.

    ``slot_value`` replaces the marked subtree; it must be monic with the
    slot's word as leading word so that substitution preserves the leading
    term of the ambient bracketing.
    """
    if isinstance(tree, int):
        return LiePoly.monomial((tree,))
    if isinstance(tree, StdLeaf):
        return LiePoly.monomial(tree.word)
    if isinstance(tree, Slot):
        if slot_value is None:
            return LiePoly.monomial(tree.word)
        assert slot_value.leading_word == tree.word and slot_value.leading_coeff == 1
        return slot_value
    left, right = tree
    return bracket_poly(tree_to_lie(left, slot_value), tree_to_lie(right, slot_value))
