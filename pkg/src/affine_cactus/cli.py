"""Command-line front end.

Exit codes: 0 success or true, 1 false predicate or failed check, 2 input
error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import checks
from .cactus import (
    ad_alphabet, classic_generators, d_alphabet, defining_relations, equal_words, generators, lift_reduce, order,
    phi, pi, is_pure, rep_matrices, rotate, split, INFINITE,
)
from .coxeter_cactus import CoxeterDiagram, iso_check, presentation
from .drawing import render_svg
from .words import CactusWord, ParseError

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3

KINDS = ("ajn", "adn", "jn", "dn", "coxeter-cactus")


class InputError(Exception):
    pass


def parse_word(text: str, n: int | None, cls=CactusWord) -> CactusWord:
    """Parse the text grammar, or a JSON object {"n": ..., "letters": [...]}."""
    stripped = text.strip()
    try:
        if stripped.startswith("{"):
            w = cls.from_json(json.loads(stripped))
            if n is not None and w.n != n:
                raise InputError(f"word is over n={w.n} but --n is {n}")
            return w
        if n is None:
            raise InputError("--n is required for words in text form")
        return cls.parse(text, n)
    except (ParseError, ValueError, KeyError, TypeError) as exc:
        raise InputError(str(exc)) from exc


def _words(args, count=None, cls=CactusWord) -> list[CactusWord]:
    words = [parse_word(t, args.n, cls) for t in args.words]
    if count is not None and len(words) != count:
        raise InputError(f"expected {count} word(s), got {len(words)}")
    if len({w.n for w in words}) > 1:
        raise InputError("words over different strand counts")
    return words


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    elif text:
        print(text)


# ---------------------------------------------------------------------------
# subcommands

def cmd_reduce(args) -> int:
    (w,) = _words(args, 1)
    out = lift_reduce(w)
    _emit(args, {"word": out.to_json(), "text": str(out), "phi": phi(out).normalized().to_json()}, str(out))
    return EXIT_OK


def cmd_equal(args) -> int:
    w1, w2 = _words(args, 2)
    verdict = equal_words(w1, w2)
    _emit(args, {"equal": verdict}, "equal" if verdict else "not equal")
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_order(args) -> int:
    (w,) = _words(args, 1)
    o = order(w)
    text = "infinite" if o == INFINITE else str(o)
    _emit(args, {"order": text if o == INFINITE else o}, text)
    return EXIT_OK


def cmd_perm(args) -> int:
    (w,) = _words(args, 1)
    s = pi(w)
    _emit(args, {"perm": s.to_list()}, str(s))
    return EXIT_OK


def cmd_pure(args) -> int:
    (w,) = _words(args, 1)
    verdict = is_pure(w)
    _emit(args, {"pure": verdict}, "pure" if verdict else "not pure")
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_phi(args) -> int:
    (w,) = _words(args, 1)
    image = phi(w)
    if args.normal:
        image = image.normalized()
    _emit(args, image.to_json(), str(image))
    return EXIT_OK


def cmd_rotate(args) -> int:
    (w,) = _words(args, 1)
    out = rotate(w, args.by)
    _emit(args, out.to_json(), str(out))
    return EXIT_OK


def cmd_split(args) -> int:
    (w,) = _words(args, 1)
    try:
        u, v = split(w, args.p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(args, {"kernel": u.to_json(), "quotient": v.to_json()}, f"{u}\n{v}")
    return EXIT_OK


def cmd_rep(args) -> int:
    words = _words(args)
    if not words:
        raise InputError("rep needs at least one word")
    mats = rep_matrices(*words)
    data = {
        "n": words[0].n,
        "words": [str(w) for w in words],
        "matrices": [[[str(x) for x in row] for row in m.tolist()] for m in mats],
    }
    print(json.dumps(data, sort_keys=True))
    return EXIT_OK


def cmd_iso_check(args) -> int:
    if args.n is None:
        raise InputError("--n is required")
    try:
        cert = iso_check(args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.json:
        print(json.dumps(cert.to_json(), sort_keys=True))
    else:
        for arc, letter in cert.table:
            print(f"{arc} <-> {letter}")
        print(f"relations: {cert.relation_count}")
        for rel in cert.unmatched_coxeter:
            print(f"unmatched diagram relation: {rel}")
        for rel in cert.unmatched_cactus:
            print(f"unmatched cactus relation: {rel}")
        print("ok" if cert.ok else "mismatch")
    return EXIT_OK if cert.ok else EXIT_FALSE


def cmd_diagram(args) -> int:
    (w,) = _words(args, 1)
    svg = render_svg(w)
    if args.out is None:
        sys.stdout.write(svg)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _racg_presentation(alphabet, name: str, label):
    gens = [label(g) for g in alphabet.generators]
    rels = [((g, g), ()) for g in gens]
    for x in range(len(gens)):
        for y in range(x + 1, len(gens)):
            if alphabet.commutes(alphabet.generators[x], alphabet.generators[y]):
                rels.append(((gens[x], gens[y]), (gens[y], gens[x])))
    return name, gens, rels


def build_presentation(kind: str, n: int, min_size: int = 2):
    """(name, generator labels, relations as pairs of label tuples)."""
    if kind == "ajn":
        rels = [(tuple(map(str, a)), tuple(map(str, b))) for a, b in defining_relations(n)]
        return f"AJ_{n}", [str(g) for g in generators(n)], rels
    if kind == "jn":
        return f"J_{n}", [str(g) for g in classic_generators(n)], _classic_presentation(n)
    if kind == "adn":
        full = ad_alphabet(n)
        alphabet = full.restrict([g for g in full.generators if len(g) >= min_size])
        return _racg_presentation(alphabet, f"AD_{n}", lambda g: f"t{g}")
    if kind == "dn":
        label = lambda g: "t{" + ",".join(map(str, sorted(g))) + "}"  # noqa: E731
        return _racg_presentation(d_alphabet(n), f"D_{n}", label)
    if kind == "coxeter-cactus":
        pres = presentation(CoxeterDiagram(n, "cycle"))
        rels = [(tuple(map(str, a)), tuple(map(str, b))) for a, b in pres.relations]
        return pres.name, [str(g) for g in pres.generators], rels
    raise InputError(f"unknown presentation kind {kind!r}")


def _classic_presentation(n: int):
    gens = classic_generators(n)
    rels = [((str(a), str(a)), ()) for a in gens]
    for a in gens:
        for b in gens:
            if a == b:
                continue
            if b.i <= a.i and a.j <= b.j:
                c = type(a)(b.i + b.j - a.j, b.i + b.j - a.i)
                rels.append(((str(a), str(b)), (str(b), str(c))))
            elif a.j < b.i and a < b:
                rels.append(((str(a), str(b)), (str(b), str(a))))
    return rels


def _symbol(label: str) -> str:
    """Identifier form of a generator label: s(1,2) -> s1_2, c{1,2} -> c1_2."""
    core = label[0] + "_".join(x for x in label[1:].replace("(", " ").replace(")", " ").replace("{", " ")
                                .replace("}", " ").replace(",", " ").split())
    return core


def format_presentation(name: str, gens, rels, fmt: str) -> str:
    if fmt == "plain":
        lines = [f"# {name}: {len(gens)} generators, {len(rels)} relations"]
        lines += [f"gen: {g}" for g in gens]
        lines += [f"rel: {' '.join(lhs) or '1'} = {' '.join(rhs) or '1'}" for lhs, rhs in rels]
        return "\n".join(lines)
    symbols = [_symbol(g) for g in gens]
    table = dict(zip(gens, symbols))
    relators = []
    for lhs, rhs in rels:
        word = [table[x] for x in lhs] + [f"{table[x]}^-1" for x in reversed(rhs)]
        relators.append("*".join(word))
    return "\n".join([
        f"# {name}",
        "F := FreeGroup(" + ", ".join(f'"{s}"' for s in symbols) + ");",
        "AssignGeneratorVariables(F);",
        "rels := [" + ", ".join(relators) + "];",
        "G := F / rels;",
    ])


def cmd_presentation(args) -> int:
    if args.n is None:
        raise InputError("--n is required")
    if args.n < 2 or (args.kind == "coxeter-cactus" and args.n < 3):
        raise InputError(f"n={args.n} is too small for {args.kind}")
    if not 2 <= args.min_size <= args.n:
        raise InputError(f"--min-size must lie in 2..{args.n}")
    name, gens, rels = build_presentation(args.kind, args.n, args.min_size)
    if args.json:
        print(json.dumps({"name": name, "generators": gens,
                          "relations": [[list(a), list(b)] for a, b in rels]}, sort_keys=True))
    else:
        print(format_presentation(name, gens, rels, args.format))
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = checks.run(args.level)
    for r in results:
        print(r.line())
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_FALSE


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of strands")
    common.add_argument("--json", action="store_true", help="structured output")

    parser = argparse.ArgumentParser(prog="affine-cactus", description="Word problem and friends for AJ_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_command(name, func, nargs="1", help=None, **extra):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("words", nargs={"1": 1, "2": 2, "+": "+"}[nargs], metavar="WORD")
        p.set_defaults(func=func)
        for flag, kw in extra.items():
            p.add_argument(flag, **kw)
        return p

    word_command("reduce", cmd_reduce, help="rewrite a word so its diagram part is geodesic")
    word_command("equal", cmd_equal, "2", help="exit 0 when two words are equal, 1 otherwise")
    word_command("order", cmd_order, help="order of a word")
    word_command("perm", cmd_perm, help="permutation image")
    word_command("pure", cmd_pure, help="exit 0 when the word is pure")
    p = word_command("phi", cmd_phi, help="image in the semidirect product")
    p.add_argument("--normal", action="store_true", help="normalize the diagram part")
    p = word_command("rotate", cmd_rotate, help="shift indices")
    p.add_argument("--by", type=int, default=1)
    p = word_command("split", cmd_split, help="kernel and quotient factors")
    p.add_argument("--p", type=int, required=True)
    word_command("rep", cmd_rep, "+", help="integer matrices of words (JSON)")
    p = word_command("diagram", cmd_diagram, help="SVG drawing")
    p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("presentation", parents=[common], help="export a presentation")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--format", choices=("plain", "algebra"), default="plain")
    p.add_argument("--min-size", type=int, default=2, help="smallest circular set for adn")
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("iso-check", parents=[common], help="match the cycle cactus presentation with AJ_n")
    p.set_defaults(func=cmd_iso_check)

    p = sub.add_parser("selftest", help="run the property checks")
    p.add_argument("level", choices=("quick", "full"), nargs="?", default="quick")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
