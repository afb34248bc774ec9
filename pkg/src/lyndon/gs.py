"""Groebner-Shirshov machinery for monomial Lie ideals.

The relations are Lie polynomials in Lyndon coordinates, monic on their
leading word.  Compositions come from overlap 2-chains of the leading words;
a composition is solvable when it reduces to zero, reduction being repeated
subtraction of regular bracketings of relations embedded at a factor
occurrence.  Two per-chain shortcuts certify solvability without computing:

* the chain is longer than every atom, or
* no atom shares the chain's multidegree while preceding it in deg-lex;

in both cases a nonzero normal form would need an atom that does not exist.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import monomial
from .lie import LiePoly, bracket_pair, tree_to_lie, _regular_tree
from .pairs import (
    LyndonPair,
    atoms_from_obstructions,
    connected_component,
    is_antichain,
    pair_from_obstructions,
)
from .words import Word, deglex_key, find_factor, multidegree

SKIP_LONG_CHAIN = "chain-longer-than-every-atom"
SKIP_EMPTY_WINDOW = "no-atom-below-chain-in-component"


@dataclass
class ChainOutcome:
    chain: monomial.TwoChain
    status: str  # "computed" | "skipped"
    shortcut: str | None = None
    solvable: bool | None = None
    normal_form: LiePoly | None = None


@dataclass
class GSReport:
    pair: LyndonPair
    verdict: str  # "standard" | "degenerates" | "bound_exhausted"
    basis: list = field(default_factory=list)
    atoms_after: tuple = ()
    obstructions_after: tuple = ()
    chain_log: list = field(default_factory=list)
    degree_bound: int | None = None

    def skipped(self):
        return [c for c in self.chain_log if c.status == "skipped"]

    def to_json(self, alphabet) -> dict:
        return {
            "verdict": self.verdict,
            "basis": [f.to_json(alphabet) for f in self.basis],
            "atoms": [alphabet.text(a) for a in self.atoms_after],
            "obstructions": [alphabet.text(w) for w in self.obstructions_after],
            "chains": [
                {
                    "omega": alphabet.text(c.chain.word),
                    "status": c.status,
                    "shortcut": c.shortcut,
                    "solvable": c.solvable,
                    "normal_form": None
                    if c.normal_form is None
                    else c.normal_form.to_json(alphabet),
                }
                for c in self.chain_log
            ],
            "skipped": [
                {"omega": alphabet.text(c.chain.word), "shortcut": c.shortcut}
                for c in self.skipped()
            ],
        }


def _overlap_split(left: Word, right: Word, omega: Word):
    blen = len(left) + len(right) - len(omega)
    if not (1 <= blen < len(left) and blen < len(right)):
        raise ValueError(f"{omega} is not an overlap of {left} and {right}")
    if left[len(left) - blen :] != right[:blen] or omega != left + right[blen:]:
        raise ValueError(f"{omega} is not an overlap of {left} and {right}")
    return left[: len(left) - blen], right[:blen], right[blen:]


def overlap_composition(left: Word, right: Word, omega: Word) -> LiePoly:
    """Composition ([left] tail) - (head [right]) of two monomial relations.

    The second regular bracketing embeds ``right`` as a right segment, so it
    collapses to the standard bracketing of the chain word; this identity is
    asserted rather than assumed.
    """
    head, _, tail = _overlap_split(left, right, omega)
    first = tree_to_lie(_regular_tree((), left, tail))
    second = tree_to_lie(_regular_tree(head, right, ()))
    assert second == LiePoly.monomial(omega)
    return first - second


def _relation_composition(rel_left, rel_right, chain) -> LiePoly:
    """Overlap composition with full relations substituted at the slots."""
    first = tree_to_lie(_regular_tree((), chain.left, chain.tail), rel_left)
    second = tree_to_lie(_regular_tree(chain.head, chain.right, ()), rel_right)
    value = first - second
    assert value.is_zero() or deglex_key(value.leading_word) < deglex_key(chain.word)
    return value


def _reducer(a: Word, lead: Word, b: Word, rel: LiePoly) -> LiePoly:
    red = tree_to_lie(_regular_tree(a, lead, b), rel)
    assert red.leading_word == a + lead + b and red.leading_coeff == 1
    return red


def reduce_mod(f: LiePoly, relations: dict) -> LiePoly:
    """Normal form of ``f`` modulo monic relations keyed by leading word.

    Repeatedly rewrites the deg-lex largest reducible term; each step trades a
    basis word for strictly deg-lex smaller words of the same multidegree, so
    the loop terminates.
    """
    if not relations:
        return f
    leads = sorted(relations, key=lambda w: (len(w), w))
    rem = f
    while True:
        target = None
        for w, c in rem.items_desc():
            for lead in leads:
                if len(lead) <= len(w):
                    idx = find_factor(lead, w)
                    if idx >= 0:
                        target = (w, c, lead, idx)
                        break
            if target:
                break
        if target is None:
            return rem
        w, c, lead, idx = target
        red = _reducer(w[:idx], lead, w[idx + len(lead):], relations[lead])
        rem = rem - red.scale(c)


def _window(atoms, omega: Word, g: int):
    """Atoms of the chain's multidegree that precede it in deg-lex order."""
    alpha = multidegree(omega, g)
    return [a for a in atoms if len(a) == len(omega) and multidegree(a, g) == alpha and a > omega]


def disconnected_shortcut(pair: LyndonPair) -> bool:
    """Disconnected atoms rule out any enveloping algebra in the class."""
    return not pair.connected()


def is_gs_basis(pair: LyndonPair, use_shortcuts: bool = True) -> GSReport:
    """Check whether the bracketed obstructions form a Groebner-Shirshov basis.

    Every overlap 2-chain is either discharged by a shortcut (only when
    ``use_shortcuts``) or its composition is computed and reduced modulo the
    bracketed obstructions; the verdict is ``standard`` iff all normal forms
    vanish.
    """
    W = pair.obstructions
    relations = {w: LiePoly.monomial(w) for w in W}
    m_atoms = pair.m
    log = []
    standard = True
    for chain in monomial.two_chains(W):
        omega = chain.word
        if use_shortcuts:
            if len(omega) > m_atoms:
                log.append(ChainOutcome(chain, "skipped", SKIP_LONG_CHAIN))
                continue
            if not _window(pair.atoms, omega, pair.g):
                log.append(ChainOutcome(chain, "skipped", SKIP_EMPTY_WINDOW))
                continue
        value = overlap_composition(chain.left, chain.right, omega)
        nf = reduce_mod(value, relations)
        solvable = nf.is_zero()
        standard = standard and solvable
        log.append(ChainOutcome(chain, "computed", None, solvable, nf))
    return GSReport(
        pair=pair,
        verdict="standard" if standard else "degenerates",
        basis=list(relations.values()),
        atoms_after=pair.atoms,
        obstructions_after=pair.obstructions,
        chain_log=log,
    )


def _interreduce(relations: dict) -> dict:
    """Reduce every relation against the others until nothing changes.

    Afterwards the leading words form an antichain and every tail is normal
    with respect to the rest of the basis.
    """
    rels = dict(relations)
    changed = True
    while changed:
        changed = False
        for lead in sorted(rels, key=lambda w: (len(w), w)):
            if lead not in rels:
                continue
            r = rels.pop(lead)
            nf = reduce_mod(r, rels)
            if nf.is_zero():
                changed = True
                continue
            nf = nf.monic()
            assert nf.leading_word not in rels
            rels[nf.leading_word] = nf
            if nf != r:
                changed = True
    assert is_antichain(rels.keys())
    return rels


def gs_complete(pair: LyndonPair, degree_bound: int | None = None) -> GSReport:
    """Bounded completion of the bracketed obstructions to a reduced basis.

    Rounds of: interreduce, then scan all overlap chains of the current
    leading words; chains whose window of surviving atoms is empty are
    provably solvable and skipped, others are computed and reduced.  The
    first nonzero normal form joins the basis and the scan restarts, so on
    termination every composition has been rechecked against the final basis.
    """
    bound = degree_bound if degree_bound is not None else 2 * pair.m + 2
    relations = {w: LiePoly.monomial(w) for w in pair.obstructions}
    while True:
        relations = _interreduce(relations)
        leads = sorted(relations)
        atoms_now, finite = atoms_from_obstructions(leads, pair.g)
        assert finite
        log = []
        new_rel = None
        for chain in monomial.two_chains(leads):
            omega = chain.word
            window = _window(atoms_now, omega, pair.g)
            if not window:
                shortcut = SKIP_LONG_CHAIN if len(omega) > max(
                    len(a) for a in atoms_now
                ) else SKIP_EMPTY_WINDOW
                log.append(ChainOutcome(chain, "skipped", shortcut))
                continue
            if len(omega) > bound:
                return GSReport(
                    pair=pair,
                    verdict="bound_exhausted",
                    basis=[relations[w] for w in sorted(relations, key=lambda w: (len(w), w))],
                    atoms_after=atoms_now,
                    obstructions_after=tuple(leads),
                    chain_log=log,
                    degree_bound=bound,
                )
            value = _relation_composition(
                relations[chain.left], relations[chain.right], chain
            )
            nf = reduce_mod(value, relations)
            if nf.is_zero():
                log.append(ChainOutcome(chain, "computed", None, True, nf))
            else:
                new_rel = nf.monic()
                break
        if new_rel is None:
            break
        lead = new_rel.leading_word
        assert lead not in relations
        assert len({multidegree(w, pair.g) for w in new_rel.terms}) == 1
        relations[lead] = new_rel

    completed = pair_from_obstructions(sorted(relations), pair.g)
    assert set(completed.atoms) <= set(connected_component(pair.atoms))
    unchanged = set(relations) == set(pair.obstructions) and all(
        relations[w] == LiePoly.monomial(w) for w in relations
    )
    return GSReport(
        pair=pair,
        verdict="standard" if unchanged else "degenerates",
        basis=[relations[w] for w in sorted(relations, key=lambda w: (len(w), w))],
        atoms_after=completed.atoms,
        obstructions_after=completed.obstructions,
        chain_log=log,
        degree_bound=bound,
    )


def structure_constants(pair: LyndonPair, check: bool = True) -> dict:
    """Bracket table of the atom basis for a standard pair.

    Entry ``(u, v)`` with atoms ``u < v`` holds the normal form of the free
    bracket [u, v], a combination of atoms again; antisymmetry and the Jacobi
    identity of the induced table are verified when ``check`` is set.
    """
    report = is_gs_basis(pair)
    if report.verdict != "standard":
        raise ValueError("structure constants need a standard pair")
    relations = {w: LiePoly.monomial(w) for w in pair.obstructions}
    atom_set = set(pair.atoms)
    table = {}
    for i, u in enumerate(pair.atoms):
        for v in pair.atoms[i + 1 :]:
            nf = reduce_mod(bracket_pair(u, v), relations)
            assert set(nf.terms) <= atom_set
            table[(u, v)] = nf
    if check:
        _check_lie_axioms(table, pair.atoms)
    return table


def _table_bracket(table, f: dict, g_: dict) -> dict:
    out = {}
    for u, cu in f.items():
        for v, cv in g_.items():
            if u == v:
                continue
            val, sign = (table[(u, v)], cu * cv) if u < v else (table[(v, u)], -cu * cv)
            for w, c in val.terms.items():
                nc = out.get(w, 0) + sign * c
                if nc:
                    out[w] = nc
                else:
                    del out[w]
    return out


def _check_lie_axioms(table, atoms):
    for i, u in enumerate(atoms):
        for j in range(i + 1, len(atoms)):
            for k in range(j + 1, len(atoms)):
                v, w = atoms[j], atoms[k]
                total = {}
                for a, b, c in ((u, v, w), (v, w, u), (w, u, v)):
                    inner = _table_bracket(table, {a: 1}, {b: 1})
                    for word, coeff in _table_bracket(table, inner, {c: 1}).items():
                        nc = total.get(word, 0) + coeff
                        if nc:
                            total[word] = nc
                        else:
                            del total[word]
                assert not total, f"Jacobi fails on {(u, v, w)}"
