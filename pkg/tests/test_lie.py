import random
from fractions import Fraction

import pytest

from lyndon.lie import (
    AssocPoly,
    LiePoly,
    Slot,
    StdLeaf,
    bracket_basis,
    bracket_pair,
    expand,
    expand_standard,
    full_tree,
    leading_lyndon,
    left_standard_bracket_tree,
    lie_bracket,
    lyndon_decompose,
    regular_bracketing,
    standard_bracket_tree,
    standard_bracketing,
    tree_to_lie,
    tree_word,
    _regular_tree,
)
from lyndon.words import Alphabet, is_lyndon, lyndon_words, multidegree
from oracles import matrix_rank

A = Alphabet(("x", "y"))
w = A.word
X, Y = 0, 1


def lp(token, coeff=1):
    return LiePoly.monomial(w(token), coeff)


def test_standard_bracketing_trees():
    assert standard_bracketing(w("x")) == X
    assert standard_bracketing(w("xyy")) == ((X, Y), Y)
    # x y^(k+1) is left nested
    tree = standard_bracketing(w("xyyyy"))
    assert tree == ((((X, Y), Y), Y), Y)
    assert tree_word(tree) == w("xyyyy")
    with pytest.raises(ValueError):
        standard_bracketing(w("yx"))


def test_left_standard_bracketing_tree():
    assert left_standard_bracket_tree(w("xxyy")) == ((X, (X, Y)), Y)
    assert tree_word(left_standard_bracket_tree(w("xxyxy"))) == w("xxyxy")


def test_expand_golden():
    assert expand((X, Y)).terms == {w("xy"): 1, w("yx"): -1}
    assert expand(((X, Y), Y)).terms == {w("xyy"): 1, w("yxy"): -2, w("yyx"): 1}


def test_expand_triangular_monic_same_multidegree():
    for u in lyndon_words(2, 8):
        p = expand_standard(u)
        assert p.leading_word == u and p.leading_coeff == 1
        degs = {multidegree(word, 2) for word in p.terms}
        assert degs == {multidegree(u, 2)}
        assert all(c.denominator == 1 for c in p.terms.values())


def test_lyndon_decompose_golden():
    assert lyndon_decompose(expand((X, Y))) == lp("xy")
    tree = ((standard_bracket_tree(w("xxy")), Y), Y)
    assert lyndon_decompose(expand(tree)) == lp("xyxyy") + lp("xxyyy")
    with pytest.raises(ValueError):
        lyndon_decompose(AssocPoly.monomial(w("xy")) + AssocPoly.monomial(w("yx")))


def test_lie_bracket_golden():
    assert lie_bracket(lp("x"), lp("y")) == lp("xy")
    assert lie_bracket(lp("xy"), lp("xy")).is_zero()
    total = lie_bracket(lp("xy"), lp("xyy")) + lie_bracket(lp("x"), lp("xyyy"))
    assert total == lp("xyxyy") + lp("xxyyy")


def test_bracket_engine_matches_expansion_oracle():
    words = lyndon_words(2, 7)
    for u in words:
        for v in words:
            if u < v and len(u) + len(v) <= 9:
                via_engine = bracket_basis(u, v)
                via_expand = lyndon_decompose(
                    expand_standard(u).commutator(expand_standard(v))
                )
                assert via_engine == via_expand


def test_lie_bracket_matches_expansion_on_polys():
    rng = random.Random(11)
    words = [u for u in lyndon_words(2, 5)]

    def rand_poly():
        out = LiePoly()
        for _ in range(rng.randint(1, 3)):
            out = out + LiePoly.monomial(rng.choice(words), Fraction(rng.randint(-3, 3)))
        return out

    def expand_poly(f):
        out = AssocPoly()
        for word, c in f.terms.items():
            out = out + expand_standard(word).scale(c)
        return out

    for _ in range(40):
        f, g = rand_poly(), rand_poly()
        direct = lie_bracket(f, g)
        oracle = lyndon_decompose(expand_poly(f).commutator(expand_poly(g)))
        assert direct == oracle


def test_antisymmetry_and_jacobi():
    rng = random.Random(5)
    words = [u for u in lyndon_words(2, 6)]
    for _ in range(60):
        a, b, c = (LiePoly.monomial(rng.choice(words)) for _ in range(3))
        assert (lie_bracket(a, b) + lie_bracket(b, a)).is_zero()
        jac = (
            lie_bracket(lie_bracket(a, b), c)
            + lie_bracket(lie_bracket(b, c), a)
            + lie_bracket(lie_bracket(c, a), b)
        )
        assert jac.is_zero()


def test_decompose_expand_round_trip():
    rng = random.Random(13)
    words = [u for u in lyndon_words(2, 7)]
    for _ in range(40):
        f = LiePoly()
        for _ in range(rng.randint(1, 4)):
            f = f + LiePoly.monomial(
                rng.choice(words), Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            )
        total = AssocPoly()
        for word, c in f.terms.items():
            total = total + expand_standard(word).scale(c)
        assert lyndon_decompose(total) == f


def test_regular_bracketing_trivial_cases():
    assert regular_bracketing((), w("xxy"), ()) == standard_bracketing(w("xxy"))
    # right-segment bracketings collapse to the standard bracketing
    for tau in lyndon_words(2, 7):
        for cut in range(1, len(tau)):
            u = tau[cut:]
            if is_lyndon(u):
                tree = _regular_tree(tau[:cut], u, ())
                assert tree_to_lie(tree) == LiePoly.monomial(tau)
                assert full_tree(tree) == standard_bracket_tree(tau)


def test_regular_bracketing_golden():
    tree = regular_bracketing((), w("xxy"), w("yy"))
    poly = lyndon_decompose(expand(tree))
    rest = poly - lp("xxyyy")
    assert poly.leading_word == w("xxyyy")
    assert set(rest.terms) == {w("xyxyy")}


def test_regular_bracketing_triangularity():
    rng = random.Random(17)
    for tau in lyndon_words(2, 9):
        n = len(tau)
        occurrences = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n + 1)
            if (i, j) != (0, n) and is_lyndon(tau[i:j])
        ]
        for i, j in rng.sample(occurrences, min(4, len(occurrences))):
            tree = _regular_tree(tau[:i], tau[i:j], tau[j:])
            via_engine = tree_to_lie(tree)
            assert via_engine.leading_word == tau and via_engine.leading_coeff == 1
            assert via_engine == lyndon_decompose(expand(tree))
            rest = via_engine - LiePoly.monomial(tau)
            alpha = multidegree(tau, 2)
            assert all(multidegree(t, 2) == alpha for t in rest.terms)
            assert all(t > tau for t in rest.terms)  # deg-lex smaller than tau


def test_regular_bracketing_rejects_non_lyndon():
    with pytest.raises(ValueError):
        regular_bracketing(w("y"), w("x"), ())


def test_slot_substitution_keeps_leading_term():
    # marked suffix occurrence of xxyyy inside xxxyyy, slot filled with a
    # genuine two-term monic relation
    tree = _regular_tree(w("x"), w("xxyyy"), ())
    rel = lp("xxyyy") + lp("xyxyy", 3)
    got = tree_to_lie(tree, rel)
    assert got.leading_word == w("xxxyyy") and got.leading_coeff == 1
    assert got == lp("xxxyyy") + bracket_pair(w("x"), w("xyxyy")).scale(3)


def test_graded_dimension_rank_check():
    # expansions of the basis brackets of one multidegree are independent
    by_degree = {}
    for u in lyndon_words(2, 7):
        by_degree.setdefault(multidegree(u, 2), []).append(u)
    for alpha, basis_words in by_degree.items():
        rows = [dict(expand_standard(u).terms) for u in basis_words]
        assert matrix_rank(rows) == len(basis_words)


def test_leading_lyndon():
    f = lp("xy") + lp("xxy", -2)
    assert leading_lyndon(f) == w("xxy")
    with pytest.raises(ValueError):
        leading_lyndon(LiePoly())


def test_poly_serialization():
    f = lp("xxy", Fraction(-3, 2)) + lp("xy")
    doc = f.to_json(A)
    assert doc == [
        {"word": "xxy", "numerator": -3, "denominator": 2},
        {"word": "xy", "numerator": 1, "denominator": 1},
    ]


def test_tree_markers():
    tree = _regular_tree((), w("xy"), w("yy"))
    assert isinstance(tree, tuple)
    flat = full_tree(tree)
    assert tree_word(flat) == w("xyyy")
    assert isinstance(StdLeaf(w("xy")), StdLeaf) and isinstance(Slot(w("xy")), Slot)
