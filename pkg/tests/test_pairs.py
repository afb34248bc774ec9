import json

import pytest

from lyndon import catalog
from lyndon.pairs import (
    LyndonPair,
    adjacent_products_property,
    atoms_from_obstructions,
    canonical_key,
    canonicalize,
    connected_component,
    enumerate_pairs,
    is_antichain,
    is_connected,
    maximal_w_check,
    minimal_w_pair,
    mirror_pair,
    mirror_word,
    obstructions_from_atoms,
    pair_from_atoms,
    pair_from_json,
    pair_from_obstructions,
    pair_invariants,
    pair_to_json,
)
from lyndon.words import Alphabet, is_lyndon, is_proper_factor, lyndon_words
from oracles import obstructions_brute

A = Alphabet(("x", "y"))
w = A.word


def words(*tokens):
    return [w(t) for t in tokens]


def test_is_antichain():
    assert is_antichain(words("xxy", "xyy"))
    assert not is_antichain(words("xy", "xxy"))
    assert is_antichain([])


def test_duality_golden_small():
    atoms, finite = atoms_from_obstructions(words("xxy", "xyy"), 2)
    assert finite and atoms == tuple(words("x", "xy", "y"))
    atoms, finite = atoms_from_obstructions(words("xy"), 2)
    assert finite and atoms == tuple(words("x", "y"))
    W = obstructions_from_atoms(words("x", "xy", "xyy", "y"), 2)
    assert W == tuple(sorted(words("xxy", "xyxyy", "xyyy")))
    assert obstructions_from_atoms(words("x", "y"), 2) == (w("xy"),)


def test_duality_fibonacci():
    pair = catalog.fibonacci_pair(6)
    assert pair.atoms == tuple(sorted(catalog.fibonacci_word(i) for i in range(6)))
    atoms, finite = atoms_from_obstructions(pair.obstructions, 2)
    assert finite and atoms == pair.atoms


def test_filiform_obstructions_match_pattern():
    pair = minimal_w_pair(6)
    expect = sorted(
        [w("x") + w("y") * i + w("x") + w("y") * (i + 1) for i in range(4)]
        + [w("x") + w("y") * 5]
    )
    assert list(pair.obstructions) == expect


def test_obstructions_match_definitional_filter():
    for atoms in (
        words("x", "xy", "y"),
        words("x", "xxy", "xy", "xyy", "y"),
        catalog.filiform_q(6).atoms,
        catalog.catalog_entry("6.4.2").pair.atoms,
    ):
        computed = obstructions_from_atoms(atoms, 2)
        brute = obstructions_brute(atoms, 2, 2 * max(len(a) for a in atoms))
        assert computed == brute


def test_obstruction_factors_are_atoms():
    for entry in catalog.golden_d6() + catalog.golden_d7():
        atom_set = set(entry.pair.atoms)
        for word in entry.pair.obstructions:
            for i in range(len(word)):
                for j in range(i + 1, len(word) + 1):
                    f = word[i:j]
                    if len(f) < len(word) and is_lyndon(f):
                        assert f in atom_set


def test_infinite_atom_sets_are_flagged():
    # truncation of the infinite one-string family: atoms x y^k never stop
    W = [w("x") + w("y") * k + w("x") + w("y") * (k + 1) for k in range(3)]
    atoms, finite = atoms_from_obstructions(W, 2, length_bound=9)
    assert not finite
    assert w("xyyyyy") in atoms  # sample beyond the obstruction lengths
    with pytest.raises(ValueError):
        pair_from_obstructions(W, 2)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        obstructions_from_atoms(words("x", "xyy", "y"), 2)  # missing factor xy
    with pytest.raises(ValueError):
        obstructions_from_atoms(words("xy", "y"), 2)  # missing letter
    with pytest.raises(ValueError):
        atoms_from_obstructions(words("yx"), 2)  # not Lyndon
    with pytest.raises(ValueError):
        atoms_from_obstructions(words("xy", "xxy"), 2)  # not an antichain


def test_connectedness():
    assert is_connected(minimal_w_pair(5).atoms)
    f6 = catalog.fibonacci_pair(6)
    assert not is_connected(f6.atoms)
    assert connected_component(f6.atoms) == tuple(sorted(words("x", "xy", "xyy", "y")))
    assert is_connected(words("x", "y"))


def test_adjacent_products():
    pair = pair_from_obstructions(words("xxy", "xyy"), 2)
    assert adjacent_products_property(pair)
    for entry in catalog.golden_d6() + catalog.golden_d7():
        assert adjacent_products_property(entry.pair)
        assert len(entry.pair.obstructions) >= entry.pair.d - 1


def test_obstruction_count_bounds():
    for d in range(2, 8):
        for pair in enumerate_pairs(2, d):
            assert d - 1 <= len(pair.obstructions) <= d * (d - 1) // 2


def test_maximal_w_check():
    quad = pair_from_atoms([(0,), (1,), (2,)], 3)
    assert maximal_w_check(quad)
    assert not maximal_w_check(minimal_w_pair(6))
    for pair in enumerate_pairs(2, 6):
        maximal_w_check(pair)  # raises if the equivalent conditions disagree


def test_mirror_word():
    assert mirror_word(w("xxy"), 2) == w("xyy")
    assert mirror_word(w("xyxyy"), 2) == w("xxyxy")
    assert mirror_word(w("xxyy"), 2) == w("xxyy")


def test_canonicalization_is_class_invariant():
    for d in range(3, 7):
        for pair in enumerate_pairs(2, d):
            twin = mirror_pair(pair)
            assert canonical_key(pair) == canonical_key(canonicalize(pair))
            if twin is not None:
                assert canonical_key(twin) == canonical_key(pair)
            again = canonicalize(canonicalize(pair))
            assert again == canonicalize(pair)


def test_mirror_twin_may_leave_the_lyndon_world():
    entry = catalog.catalog_entry("7.4.1")
    assert mirror_pair(entry.pair) is None
    entry = catalog.catalog_entry("6.4.1")
    twin = mirror_pair(entry.pair)
    assert twin is not None and twin.atoms != entry.pair.atoms


def test_enumerate_counts():
    assert len(enumerate_pairs(2, 2)) == 1
    only = enumerate_pairs(2, 2)[0]
    assert only.atoms == ((0,), (1,)) and only.obstructions == ((0, 1),)
    assert [len(enumerate_pairs(2, d)) for d in (3, 4, 5)] == [1, 1, 3]


def test_enumerate_rejects_degenerate():
    with pytest.raises(ValueError):
        enumerate_pairs(1, 3)
    with pytest.raises(ValueError):
        enumerate_pairs(2, 1)


def test_enumerate_three_letters():
    found = enumerate_pairs(3, 4)
    assert found
    for pair in found:
        assert pair.d == 4
        pair.validate()


def test_round_trip_on_enumerated_pairs():
    for d in (4, 5, 6):
        for pair in enumerate_pairs(2, d):
            assert obstructions_from_atoms(pair.atoms, 2) == pair.obstructions
            atoms, finite = atoms_from_obstructions(pair.obstructions, 2)
            assert finite and atoms == pair.atoms


def test_pair_invariants_and_json():
    pair = minimal_w_pair(6)
    inv = pair_invariants(pair)
    assert inv["d"] == 6 and inv["m"] == 5 and inv["connected"]
    assert inv["c"] == 6  # shortest chain: xxy overlapping xyxyy in xy
    doc = pair_to_json(pair, A)
    assert doc["atoms"] == ["x", "xy", "xyy", "xyyy", "xyyyy", "y"]
    back, alphabet = pair_from_json(json.loads(json.dumps(doc)))
    assert back == pair and alphabet == A
    with pytest.raises(ValueError):
        pair_from_json({"alphabet": ["x", "y"], "atoms": ["x", "y"], "obstructions": ["xxy"]})


def test_no_two_chain_gives_null_invariant():
    pair = pair_from_obstructions(words("xy"), 2)
    assert pair_invariants(pair)["c"] is None
