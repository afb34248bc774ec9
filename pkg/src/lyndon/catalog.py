"""Named pair families and the golden classification data for 6 and 7 atoms.

The golden tables live in ``data/golden_pairs.json``.  Atom sets are
transcribed verbatim; obstruction sets are always recomputed by duality, and
the transcribed obstruction tokens are checked against the computed sets with
known typographical errata excluded (the data file marks each one).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .pairs import LyndonPair, connected_component, pair_from_atoms
from .words import Alphabet, is_proper_factor, lyndon_words

BINARY = Alphabet(("x", "y"))


def filiform_l(d: int) -> LyndonPair:
    """Pair of the abelian-by-one-string filiform Lie algebra of dimension d."""
    from .pairs import minimal_w_pair

    if d < 3:
        raise ValueError("need d >= 3")
    return minimal_w_pair(d)


def filiform_q(d: int) -> LyndonPair:
    """Pair of the second filiform family; d = 2m >= 6 atoms over two letters.

    Atoms are x y^j for j <= d-3 plus the extra atom x y^(m-2) x y^(m-1)
    and the letter y.
    """
    if d < 6 or d % 2:
        raise ValueError("need even d >= 6")
    m = d // 2
    x, y = (0,), (1,)
    atoms = [x + y * j for j in range(d - 2)] + [x + y * (m - 2) + x + y * (m - 1), y]
    pair = pair_from_atoms(atoms, 2)
    assert pair.d == d
    return pair


def free_nilpotent(g: int, m: int) -> LyndonPair:
    """Pair whose atoms are all Lyndon words of length <= m over g letters."""
    if m < 1 or g < 2:
        raise ValueError("need g >= 2 and m >= 1")
    return pair_from_atoms(lyndon_words(g, m), g)


def fibonacci_word(n: int):
    """n-th Fibonacci-Lyndon word over x < y."""
    if n < 0:
        raise ValueError("need n >= 0")
    words = [(0,), (1,)]
    while len(words) <= n:
        k = len(words)
        if k % 2 == 0:
            words.append(words[k - 2] + words[k - 1])
        else:
            words.append(words[k - 1] + words[k - 2])
    return words[n]


def fibonacci_obstructions(n: int):
    """Minimal elements of the truncated Fibonacci product family.

    The infinite family consists of the products f(2k)f(2k+2) and
    f(2k+3)f(2k+1); truncating at f(n) and keeping factor-minimal words gives
    the obstruction set whose atoms are exactly f(0) .. f(n-1).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    candidates = {fibonacci_word(n)}
    for k in range(0, n + 3, 2):
        candidates.add(fibonacci_word(k) + fibonacci_word(k + 2))
        candidates.add(fibonacci_word(k + 3) + fibonacci_word(k + 1))
    minimal = {
        w
        for w in candidates
        if not any(is_proper_factor(v, w) for v in candidates if v != w)
    }
    return tuple(sorted(minimal))


def fibonacci_pair(n: int) -> LyndonPair:
    atoms = [fibonacci_word(i) for i in range(n)]
    pair = pair_from_atoms(atoms, 2)
    assert pair.obstructions == fibonacci_obstructions(n)
    return pair


@dataclass(frozen=True)
class CatalogEntry:
    """One classified pair: identity, expectations, and transcription data."""

    id: str
    pair: LyndonPair
    m: int
    standard: bool
    component_label: dict | None
    degenerates_to: dict | None
    printed_obstructions: tuple
    errata: tuple
    note: str

    @property
    def connected(self) -> bool:
        return self.pair.connected()


def resolve_label(label: dict) -> LyndonPair:
    """Pair named by a family reference or a catalog entry id."""
    kind = label["kind"]
    if kind == "filiform_L":
        return filiform_l(label["d"])
    if kind == "filiform_Q":
        return filiform_q(label["d"])
    if kind == "free_nilpotent":
        return free_nilpotent(label["g"], label["m"])
    if kind == "fibonacci":
        return fibonacci_pair(label["n"])
    if kind == "entry":
        return catalog_entry(label["id"]).pair
    raise ValueError(f"unknown label kind {kind!r}")


def _load_raw() -> dict:
    text = resources.files("lyndon").joinpath("data/golden_pairs.json").read_text()
    return json.loads(text)


_CACHE: dict = {}


def _entries(section: str) -> list:
    if section in _CACHE:
        return _CACHE[section]
    raw = _load_raw()
    alphabet = Alphabet(raw["alphabet"])
    out = []
    for doc in raw[section]:
        atoms = [alphabet.word(t) for t in doc["atoms"]]
        pair = pair_from_atoms(atoms, alphabet.size)
        m_claimed = int(doc["id"].split(".")[1])
        assert pair.m == m_claimed, (doc["id"], pair.m)
        printed = tuple(sorted(alphabet.word(t) for t in doc.get("obstructions", [])))
        errata = tuple(sorted(alphabet.word(t) for t in doc.get("errata", [])))
        derived = set(pair.obstructions)
        for token in printed:
            if token in errata:
                assert token not in derived, (doc["id"], token)
            else:
                assert token in derived, (doc["id"], token)
        out.append(
            CatalogEntry(
                id=doc["id"],
                pair=pair,
                m=pair.m,
                standard=doc["standard"],
                component_label=doc.get("component"),
                degenerates_to=doc.get("degenerates_to"),
                printed_obstructions=printed,
                errata=errata,
                note=doc.get("note", ""),
            )
        )
    _CACHE[section] = out
    return out


def golden_d6() -> list:
    """The eight classified pairs with six atoms, as printed."""
    return _entries("d6")


def golden_d7() -> list:
    """The thirty printed entries with seven atoms.

    Two of them (7.5.10 and 7.5.11) are reversal images of each other and so
    represent one isomorphism class; see :func:`golden_d7_classes` for the
    repaired class list.
    """
    return _entries("d7")


def golden_d7_classes() -> list:
    """One entry per isomorphism class with seven atoms (30 classes).

    The duplicate 7.5.11 is dropped and the class missing from the printed
    tables (supplied as the derived entry 7.6.31) is appended.
    """
    return [e for e in golden_d7() if e.id != "7.5.11"] + _entries("d7_derived")


def catalog_entry(entry_id: str) -> CatalogEntry:
    for entry in golden_d6() + golden_d7() + _entries("d7_derived"):
        if entry.id == entry_id:
            return entry
    raise ValueError(f"no catalog entry {entry_id!r}")


def component_pair(entry: CatalogEntry) -> LyndonPair:
    """Pair generated by the connected component of the entry's atoms."""
    return pair_from_atoms(connected_component(entry.pair.atoms), entry.pair.g)


def nonmonomial_basis_example() -> LyndonPair:
    """An 18-atom pair whose completed basis needs a non-monomial relation.

    The atoms are the Lyndon words of length at most 7 avoiding xxxy and
    xyyyy, except for two of the length-7 avoiders (xxyxxyy and xyyxyyy),
    which become obstructions.  The single overlap chain of length <= 7 is
    xxxyyyy, and resolving it adjoins a four-term relation whose leading word
    xxyxyyy then drops out of the atom set.
    """
    tokens = [
        "x", "xxy", "xxyxy", "xxyxyxy", "xxyxyy", "xxyxyyy", "xxyy", "xxyyxy",
        "xxyyxyy", "xxyyy", "xxyyyxy", "xy", "xyxyxyy", "xyxyy", "xyxyyy",
        "xyy", "xyyy", "y",
    ]
    return pair_from_atoms([BINARY.word(t) for t in tokens], 2)
