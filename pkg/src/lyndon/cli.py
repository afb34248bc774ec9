"""Command-line interface for batch reproduction of the classification results.

Data goes to stdout (json or tsv, byte-deterministic for fixed inputs);
progress and diagnostics go to stderr.  Exit codes: 0 success, 1 malformed
input, 2 search/degree bound exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, gs, monomial, pairs
from .lie import expand, lyndon_decompose, standard_bracketing, tree_word
from .monomial import SearchBoundExceeded
from .words import Alphabet, cfl_factorize, is_lyndon, lyndon_words


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _alphabet(spec: str) -> Alphabet:
    return Alphabet(tuple(s for s in spec.split(",") if s))


def _words(alphabet: Alphabet, spec: str) -> list:
    return [alphabet.word(tok) for tok in spec.split(",") if tok]


def _emit(doc, fmt: str, tsv_rows=None):
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        for row in tsv_rows if tsv_rows is not None else [[doc]]:
            sys.stdout.write("\t".join(str(c) for c in row) + "\n")


def _load_pair(args, alphabet: Alphabet):
    if getattr(args, "pair_file", None):
        with open(args.pair_file) as fh:
            doc = json.load(fh)
        return pairs.pair_from_json(doc)
    if getattr(args, "atoms", None):
        return pairs.pair_from_atoms(_words(alphabet, args.atoms), alphabet.size), alphabet
    if getattr(args, "obstructions", None):
        return (
            pairs.pair_from_obstructions(_words(alphabet, args.obstructions), alphabet.size),
            alphabet,
        )
    raise ValueError("need --pair-file, --atoms, or --obstructions")


def _tree_text(tree, alphabet: Alphabet) -> str:
    if isinstance(tree, int):
        return alphabet.symbols[tree]
    left, right = tree
    return f"[{_tree_text(left, alphabet)},{_tree_text(right, alphabet)}]"


def cmd_lyndon(args):
    alphabet = _alphabet(args.alphabet)
    if args.action == "list":
        found = lyndon_words(alphabet.size, args.max_len)
        rows = [[alphabet.text(u)] for u in found]
        _emit([alphabet.text(u) for u in found], args.format, rows)
        return 0
    word = alphabet.word(args.word)
    if args.action == "factor":
        doc = {
            "word": alphabet.text(word),
            "lyndon": is_lyndon(word),
            "cfl": [alphabet.text(f) for f in cfl_factorize(word)],
        }
        if is_lyndon(word) and len(word) >= 2:
            from .words import left_standard_factorization, right_standard_factorization

            u, v = right_standard_factorization(word)
            p, q = left_standard_factorization(word)
            doc["right_standard"] = [alphabet.text(u), alphabet.text(v)]
            doc["left_standard"] = [alphabet.text(p), alphabet.text(q)]
        rows = [[doc["word"], doc["lyndon"], " ".join(doc["cfl"])]]
        _emit(doc, args.format, rows)
        return 0
    # bracket
    tree = standard_bracketing(word)
    poly = lyndon_decompose(expand(tree))
    assert tree_word(tree) == word
    doc = {
        "word": alphabet.text(word),
        "bracketing": _tree_text(tree, alphabet),
        "expansion": expand(tree).to_json(alphabet),
        "coordinates": poly.to_json(alphabet),
    }
    _emit(doc, args.format, [[doc["word"], doc["bracketing"]]])
    return 0


def cmd_pair(args):
    alphabet = _alphabet(args.alphabet)
    if args.action == "atoms":
        W = _words(alphabet, args.obstructions)
        atoms, finite = pairs.atoms_from_obstructions(W, alphabet.size, args.length_bound)
        doc = {"atoms": [alphabet.text(a) for a in atoms], "finite": finite}
        _emit(doc, args.format, [[t] for t in doc["atoms"]] + [["finite", finite]])
        return 0
    pair, alphabet = _load_pair(args, alphabet)
    if args.action == "connected":
        comp = pairs.connected_component(pair.atoms)
        doc = {
            "connected": pair.connected(),
            "component": [alphabet.text(a) for a in comp],
        }
        _emit(doc, args.format, [[doc["connected"], " ".join(doc["component"])]])
        return 0
    # obstructions / check both emit the validated pair document
    pair.validate()
    doc = pairs.pair_to_json(pair, alphabet)
    if args.action == "check":
        doc["valid"] = True
    rows = [["atoms", " ".join(doc["atoms"])], ["obstructions", " ".join(doc["obstructions"])]]
    _emit(doc, args.format, rows)
    return 0


def cmd_enumerate(args):
    alphabet = _alphabet(args.alphabet)

    def progress(size, count):
        print(f"enumerate: {count} atom sets with {size} atoms", file=sys.stderr)

    found = pairs.enumerate_pairs(alphabet.size, args.d, progress=progress)
    doc = [pairs.pair_to_json(p, alphabet) for p in found]
    rows = [
        [i, " ".join(d["atoms"]), " ".join(d["obstructions"])]
        for i, d in enumerate(doc, start=1)
    ]
    _emit(doc, args.format, rows)
    return 0


def cmd_gldim(args):
    alphabet = _alphabet(args.alphabet)
    W = _words(alphabet, args.obstructions)
    dim = monomial.global_dimension(W, alphabet.size, args.bound)
    _emit({"global_dimension": dim}, args.format, [[dim]])
    return 0


def cmd_hilbert(args):
    alphabet = _alphabet(args.alphabet)
    if args.atoms:
        atoms = _words(alphabet, args.atoms)
        coeffs = monomial.hilbert_from_atoms(atoms, args.degree)
    else:
        W = _words(alphabet, args.obstructions)
        coeffs = monomial.count_normal(W, alphabet.size, args.degree)
    doc = [str(c) for c in coeffs]
    _emit(doc, args.format, [[i, c] for i, c in enumerate(doc)])
    return 0


def cmd_gs(args):
    alphabet = _alphabet(args.alphabet)
    pair, alphabet = _load_pair(args, alphabet)
    if args.action == "check":
        report = gs.is_gs_basis(pair, use_shortcuts=not args.no_shortcuts)
    else:
        report = gs.gs_complete(pair, args.bound)
    doc = report.to_json(alphabet)
    rows = [["verdict", report.verdict]] + [
        ["relation", " ".join(f"{t['numerator']}/{t['denominator']}*{t['word']}" for t in f)]
        for f in doc["basis"]
    ]
    _emit(doc, args.format, rows)
    return 2 if report.verdict == "bound_exhausted" else 0


_FAMILIES = {
    "filiform_l": lambda params: catalog.filiform_l(int(params[0])),
    "filiform_q": lambda params: catalog.filiform_q(int(params[0])),
    "free_nilpotent": lambda params: catalog.free_nilpotent(int(params[0]), int(params[1])),
    "fibonacci": lambda params: catalog.fibonacci_pair(int(params[0])),
}


def cmd_catalog(args):
    if args.family in _FAMILIES:
        params = [p for p in (args.params or "").split(",") if p]
        pair = _FAMILIES[args.family](params)
        doc = pairs.pair_to_json(pair, catalog.BINARY)
        _emit(doc, args.format, [[" ".join(doc["atoms"]), " ".join(doc["obstructions"])]])
        return 0
    if args.family == "golden":
        entries = catalog.golden_d6() if args.params == "6" else catalog.golden_d7()
        doc = []
        for e in entries:
            d = pairs.pair_to_json(e.pair, catalog.BINARY)
            d["id"] = e.id
            d["standard"] = e.standard
            doc.append(d)
        rows = [[d["id"], d["standard"], " ".join(d["atoms"])] for d in doc]
        _emit(doc, args.format, rows)
        return 0
    raise ValueError(f"unknown family {args.family!r}")


def _classify_row(pair, alphabet):
    inv = pairs.pair_invariants(pair)
    report = gs.is_gs_basis(pair)
    row = {
        "atoms": [alphabet.text(a) for a in pair.atoms],
        "obstructions": [alphabet.text(w) for w in pair.obstructions],
        "d": inv["d"],
        "m": inv["m"],
        "c": inv["c"],
        "connected": inv["connected"],
        "gldim": monomial.global_dimension(pair.obstructions, pair.g),
        "standard": report.verdict == "standard",
    }
    if not row["standard"]:
        done = gs.gs_complete(pair)
        row["completion_atoms"] = [alphabet.text(a) for a in done.atoms_after]
        row["completion_gldim"] = len(done.atoms_after)
    return row


def _classify_worker(doc):
    pair, alphabet = pairs.pair_from_json(doc)
    return _classify_row(pair, alphabet)


def cmd_classify(args):
    alphabet = _alphabet(args.alphabet)
    found = pairs.enumerate_pairs(alphabet.size, args.d)
    print(f"classify: {len(found)} classes with {args.d} atoms", file=sys.stderr)
    docs = [pairs.pair_to_json(p, alphabet) for p in found]
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            table = list(pool.map(_classify_worker, docs))
    else:
        table = [_classify_row(p, alphabet) for p in found]
    table = [dict(row, index=i) for i, row in enumerate(table, start=1)]
    rows = [
        [
            r["index"],
            " ".join(r["atoms"]),
            len(r["obstructions"]),
            r["m"],
            r["c"] if r["c"] is not None else "-",
            r["connected"],
            r["gldim"],
            r["standard"],
            " ".join(r.get("completion_atoms", [])) or "-",
        ]
        for r in table
    ]
    _emit(table, args.format, rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "tsv"), default=argparse.SUPPRESS,
        help="output format (default json)",
    )
    common.add_argument(
        "--alphabet", default=argparse.SUPPRESS,
        help="comma-separated ordered symbols, smallest first (default x,y)",
    )
    parser = _Parser(prog="lyndon", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("lyndon", help="Lyndon word primitives")
    p.add_argument("action", choices=("list", "factor", "bracket"))
    p.add_argument("word", nargs="?", help="word for factor/bracket")
    p.add_argument("--max-len", type=int, default=6)
    p.set_defaults(func=cmd_lyndon)

    p = add_parser("pair", help="atom/obstruction duality")
    p.add_argument("action", choices=("atoms", "obstructions", "check", "connected"))
    p.add_argument("--atoms", help="comma-separated atom words")
    p.add_argument("--obstructions", help="comma-separated obstruction words")
    p.add_argument("--pair-file", help="path to a pair json document")
    p.add_argument("--length-bound", type=int, default=None)
    p.set_defaults(func=cmd_pair)

    p = add_parser("enumerate", help="all pairs with d atoms, up to isomorphism")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = add_parser("gldim", help="global dimension of the monomial algebra")
    p.add_argument("--obstructions", required=True)
    p.add_argument("--bound", type=int, default=None, help="chain word-length bound")
    p.set_defaults(func=cmd_gldim)

    p = add_parser("hilbert", help="Hilbert series prefix")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--atoms", help="use the atom product formula")
    p.add_argument("--obstructions", help="count normal words by automaton")
    p.set_defaults(func=cmd_hilbert)

    p = add_parser("gs", help="Groebner-Shirshov check / completion")
    p.add_argument("action", choices=("check", "complete"))
    p.add_argument("--atoms")
    p.add_argument("--obstructions")
    p.add_argument("--pair-file")
    p.add_argument("--no-shortcuts", action="store_true", help="compute every composition")
    p.add_argument("--bound", type=int, default=None, help="completion degree bound")
    p.set_defaults(func=cmd_gs)

    p = add_parser("catalog", help="named families and golden tables")
    p.add_argument("--family", required=True, choices=sorted(_FAMILIES) + ["golden"])
    p.add_argument("--params", help="comma-separated family parameters")
    p.set_defaults(func=cmd_catalog)

    p = add_parser("classify", help="enumerate + check + complete, as a table")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "json")
    args.alphabet = getattr(args, "alphabet", "x,y")
    try:
        return args.func(args)
    except SearchBoundExceeded as exc:
        print(f"lyndon: bound exhausted: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"lyndon: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
