"""Property checks over AJ_n, shared by the acceptance tests and ``selftest``.

Each check returns a ``CheckResult``; a failing result carries a witness
(a word or a relation) that reproduces the failure.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations, product

from . import racg
from .cactus import (
    INFINITE, defining_relations, diagram_alphabet, embed_classic, epsilon, equal_classic, equal_words, generators,
    classic_generators, identity_element, is_decreasing, is_identity, is_pure, is_reduced, lift_reduce, order, phi, pi, rep_equal,
    split, torsion_element,
)
from .circular import act_adjacent, act_perm, enumerate_circular_sets
from .coxeter_cactus import iso_check
from .perm import Permutation, adjacent_decomposition, from_adjacent, wrap
from .words import CactusWord, ClassicCactusWord, Letter


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    witness: str | None = None
    stats: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}"
        if self.detail:
            text += f": {self.detail}"
        if self.witness is not None:
            text += f" [witness: {self.witness}]"
        return text


# ---------------------------------------------------------------------------
# random words

def random_word(rng: random.Random, n: int, length: int, letters=None) -> CactusWord:
    letters = letters or generators(n)
    return CactusWord(n, tuple(rng.choice(letters) for _ in range(length)))


def scramble(w: CactusWord, rng: random.Random, steps: int = 4, relations=None, gens=None) -> CactusWord:
    """A word equal to w, made by random insertions of squares and applications of relations."""
    n = w.n
    relations = relations if relations is not None else defining_relations(n)
    letters = list(w.letters)
    gens = gens or generators(n)
    for _ in range(steps):
        if rng.random() < 0.3 or not letters or not relations:
            a = rng.choice(gens)
            p = rng.randrange(len(letters) + 1)
            letters[p:p] = [a, a]
            continue
        lhs, rhs = rng.choice(relations)
        if rng.random() < 0.5:
            lhs, rhs = rhs, lhs
        lhs, rhs = list(lhs.letters), list(rhs.letters)
        spots = [p for p in range(len(letters) - len(lhs) + 1) if letters[p:p + len(lhs)] == lhs]
        if spots and lhs:
            p = rng.choice(spots)
            letters[p:p + len(lhs)] = rhs
    return type(w)(n, tuple(letters))


def _trim(w: CactusWord, limit: int) -> CactusWord:
    return w if len(w) <= limit else CactusWord(w.n, w.letters[:limit])


# ---------------------------------------------------------------------------
# the checks

def check_relations(ns=range(2, 7)) -> CheckResult:
    total = 0
    for n in ns:
        for lhs, rhs in defining_relations(n):
            total += 1
            if not equal_words(lhs, rhs):
                return CheckResult("relation soundness", False, "equal_words", f"{lhs} = {rhs}")
            if phi(lhs).normalized() != phi(rhs).normalized():
                return CheckResult("relation soundness", False, "phi normal forms", f"{lhs} = {rhs}")
            if not rep_equal(lhs, rhs):
                return CheckResult("relation soundness", False, "matrices", f"{lhs} = {rhs}")
    return CheckResult("relation soundness", True, f"{total} relations, n in {list(ns)}", stats={"relations": total})


def _diagram_brute_force(w1: CactusWord, w2: CactusWord, max_states: int) -> bool | None:
    e1, e2 = phi(w1), phi(w2)
    if e1.perm_part != e2.perm_part:
        return False
    return racg.brute_force_equal(e1.diagram_part, e2.diagram_part,
                                  max_length=len(w1) + len(w2), max_states=max_states)


def check_injectivity(pairs: int = 500, seed: int = 2, max_n: int = 4, max_len: int = 6,
                      max_states: int = 20_000) -> CheckResult:
    rng = random.Random(seed)
    stats = {"pairs": 0, "equal": 0, "conclusive": 0}
    for k in range(pairs):
        n = rng.randint(2, max_n)
        w1 = random_word(rng, n, rng.randint(0, max_len))
        w2 = _trim(scramble(w1, rng), max_len) if k % 2 else random_word(rng, n, rng.randint(0, max_len))
        verdict = equal_words(w1, w2)
        stats["pairs"] += 1
        stats["equal"] += verdict
        if rep_equal(w1, w2) != verdict:
            return CheckResult("injectivity evidence", False, "matrices disagree", f"n={n}: {w1} | {w2}", stats)
        brute = _diagram_brute_force(w1, w2, max_states)
        if brute is not None:
            stats["conclusive"] += 1
            if brute != verdict:
                return CheckResult("injectivity evidence", False, "brute force disagrees", f"n={n}: {w1} | {w2}",
                                   stats)
    detail = f"{stats['pairs']} pairs, {stats['equal']} equal, {stats['conclusive']} brute-force conclusive"
    return CheckResult("injectivity evidence", True, detail, stats=stats)


def check_word_problem(max_n: int = 5, random_words: int = 300, seed: int = 3) -> CheckResult:
    count = 0
    for n in range(2, max_n + 1):
        for lhs, rhs in defining_relations(n):
            relator = lhs * rhs.inverse()
            count += 1
            if len(lift_reduce(relator)) != 0:
                return CheckResult("word problem consistency", False, "relator not reduced to 1", str(relator))
    rng = random.Random(seed)
    for _ in range(random_words):
        n = rng.randint(2, max_n)
        w = random_word(rng, n, rng.randint(0, 10))
        if not equal_words(w, lift_reduce(w)):
            return CheckResult("word problem consistency", False, "lift_reduce changed the element", str(w))
    return CheckResult("word problem consistency", True, f"{count} relators, {random_words} random words")


def check_torsion_orders(cases=((1, 2), (2, 4), (3, 8))) -> CheckResult:
    found = {}
    for k, n in cases:
        found[f"t_{k} (n={n})"] = order(torsion_element(k, n))
        if found[f"t_{k} (n={n})"] != 2 ** k:
            return CheckResult("torsion orders", False, f"order {found[f't_{k} (n={n})']}, expected {2 ** k}",
                               str(torsion_element(k, n)))
    return CheckResult("torsion orders", True, ", ".join(f"{k} -> {v}" for k, v in found.items()))


def check_paj2(max_power: int = 16) -> CheckResult:
    base = CactusWord.parse("s(1,2) s(2,1)", 2)
    for m in range(1, max_power + 1):
        w = base ** m
        if not is_pure(w):
            return CheckResult("PAJ_2 infinite cyclic", False, "not pure", str(w))
        if is_identity(w):
            return CheckResult("PAJ_2 infinite cyclic", False, "power is trivial", str(w))
    return CheckResult("PAJ_2 infinite cyclic", True, f"m = 1..{max_power} pure and nontrivial")


def _smallest_trivial_power(w: CactusWord, bound: int) -> int | None:
    power = identity_element(w.n)
    step = phi(w).reduced()
    for m in range(1, bound + 1):
        power = (power * step).reduced()
        if power.is_identity():
            return m
    return None


def check_no_odd_torsion(words: int = 200, seed: int = 6, max_n: int = 4, max_len: int = 5) -> CheckResult:
    rng = random.Random(seed)
    finite = 0
    for _ in range(words):
        n = rng.randint(2, max_n)
        w = random_word(rng, n, rng.randint(1, max_len))
        o = order(w)
        direct = _smallest_trivial_power(w, 2 ** (n - 1))
        if o == INFINITE:
            if direct is not None:
                return CheckResult("no odd torsion", False, f"w^{direct} = 1 but order() is infinite", str(w))
            continue
        finite += 1
        if o & (o - 1) or direct != o:
            return CheckResult("no odd torsion", False, f"order {o}, smallest trivial power {direct}", str(w))
    return CheckResult("no odd torsion", True, f"{words} words, {finite} of finite order")


def reduced_decreasing_words(n: int, max_len: int):
    """Nonempty decreasing words with no two equal adjacent letters that are reduced.

    Reduced means no (quasi-)commutations and cancellations shorten the word,
    i.e. its diagram part is geodesic. Without that condition a word such as
    s(1,2) s(3,4) s(1,2) s(3,4) qualifies although it is the identity.
    """
    gens = generators(n)
    for length in range(1, max_len + 1):
        for letters in product(gens, repeat=length):
            if any(letters[k] == letters[k + 1] for k in range(length - 1)):
                continue
            w = CactusWord(n, letters)
            if is_decreasing(w) and is_reduced(w):
                yield w


def check_decreasing(n: int = 4, max_len: int = 4) -> CheckResult:
    count = 0
    for w in reduced_decreasing_words(n, max_len):
        count += 1
        if pi(w).is_identity():
            return CheckResult("decreasing words are not pure", False, "pi is the identity", str(w))
    return CheckResult("decreasing words are not pure", True, f"{count} words in AJ_{n}, length <= {max_len}")


def check_center(n: int = 3, max_len: int = 3) -> CheckResult:
    gens = generators(n)
    seen = 0
    for length in range(1, max_len + 1):
        for letters in product(gens, repeat=length):
            w = CactusWord(n, letters)
            if is_identity(w):
                continue
            seen += 1
            if all(equal_words(w * CactusWord(n, (g,)), CactusWord(n, (g,)) * w) for g in gens):
                return CheckResult("trivial center", False, "central element", str(w))
    return CheckResult("trivial center", True, f"{seen} nontrivial words in AJ_{n}, length <= {max_len}")


def check_iso(ns=(3, 4, 5, 6)) -> CheckResult:
    for n in ns:
        cert = iso_check(n)
        if not cert.ok:
            bad = (cert.unmatched_cactus + cert.unmatched_coxeter)[0]
            return CheckResult("cycle cactus isomorphism", False, f"n={n}", bad)
    return CheckResult("cycle cactus isomorphism", True, f"n in {list(ns)}")


def _classic_relations(n: int) -> list[tuple[ClassicCactusWord, ClassicCactusWord]]:
    gens = classic_generators(n)
    rels = []
    for a in gens:
        for b in gens:
            if a == b:
                continue
            if b.i <= a.i and a.j <= b.j:
                c = Letter(b.i + b.j - a.j, b.i + b.j - a.i)
                rels.append((ClassicCactusWord(n, (a, b)), ClassicCactusWord(n, (b, c))))
            elif a.j < b.i or b.j < a.i:
                rels.append((ClassicCactusWord(n, (a, b)), ClassicCactusWord(n, (b, a))))
    return rels


def check_classic_embedding(pairs: int = 300, seed: int = 10, max_n: int = 4, max_len: int = 6) -> CheckResult:
    rng = random.Random(seed)
    agree_equal = 0
    for k in range(pairs):
        n = rng.randint(2, max_n)
        gens = classic_generators(n)
        w1 = ClassicCactusWord(n, tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len))))
        if k % 2:
            w2 = _trim(scramble(w1, rng, relations=_classic_relations(n), gens=gens), max_len)
        else:
            w2 = ClassicCactusWord(n, tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len))))
        a, b = equal_classic(w1, w2), equal_words(embed_classic(w1), embed_classic(w2))
        agree_equal += a
        if a != b:
            return CheckResult("classic embedding", False, f"J_n says {a}, AJ_n says {b}", f"{w1} | {w2}")
    return CheckResult("classic embedding", True, f"{pairs} pairs, {agree_equal} equal")


def check_split(words: int = 200, seed: int = 11, max_n: int = 6, max_len: int = 8) -> CheckResult:
    rng = random.Random(seed)
    for _ in range(words):
        n = rng.randint(3, max_n)
        w = random_word(rng, n, rng.randint(0, max_len))
        for p in sorted({3, n}):
            u, v = split(w, p)
            if v != epsilon(w, p) or not is_identity(epsilon(u, p)) or not equal_words(w, u * v):
                return CheckResult("splitting", False, f"p={p}", str(w))
    return CheckResult("splitting", True, f"{words} words, p in {{3, n}}")


def _decompositions(s: Permutation, rng: random.Random) -> list[list[int]]:
    """Three different factorizations of s into rho_1..rho_{n-1}."""
    bubble = adjacent_decomposition(s)
    # insertion from the right end: sort s^-1 and invert the word
    inverse = adjacent_decomposition(s.inverse())[::-1]
    padded = list(bubble)
    for _ in range(2):
        m = rng.randint(1, s.n - 1)
        k = rng.randint(0, len(padded))
        padded[k:k] = [m, m]
    return [bubble, inverse, padded]


def check_action(decomposition_n: int = 4, max_n: int = 6, seed: int = 12) -> CheckResult:
    rng = random.Random(seed)
    n = decomposition_n
    sets = enumerate_circular_sets(n)
    for images in permutations(range(1, n + 1)):
        s = Permutation(n, images)
        decs = _decompositions(s, rng)
        for dec in decs:
            if from_adjacent(n, dec) != s:
                raise AssertionError(f"bad decomposition {dec} of {s}")
        for c in sets:
            results = {act_perm(s, c, dec) for dec in decs}
            if len(results) != 1:
                return CheckResult("action well-definedness", False, f"decompositions of {s} disagree", str(c))
    for m_n in range(2, max_n + 1):
        sets = enumerate_circular_sets(m_n)
        for m in range(1, m_n + 1):
            nxt = wrap(m + 1, m_n)
            for c in sets:
                if act_adjacent(m, act_adjacent(m, c)) != c:
                    return CheckResult("action well-definedness", False, f"rho_{m} not an involution", str(c))
                if m_n >= 3 and (act_adjacent(m, act_adjacent(nxt, act_adjacent(m, c)))
                                 != act_adjacent(nxt, act_adjacent(m, act_adjacent(nxt, c)))):
                    return CheckResult("action well-definedness", False, f"braid relation at {m}", str(c))
                for m2 in range(1, m_n + 1):
                    if min((m - m2) % m_n, (m2 - m) % m_n) >= 2 and \
                            act_adjacent(m, act_adjacent(m2, c)) != act_adjacent(m2, act_adjacent(m, c)):
                        return CheckResult("action well-definedness", False, f"rho_{m}, rho_{m2} do not commute",
                                           str(c))
    return CheckResult("action well-definedness", True, f"S_{n} exhaustive; relations for n <= {max_n}")


def check_torsion_bound(words: int = 300, seed: int = 13, max_n: int = 5, max_len: int = 6) -> CheckResult:
    rng = random.Random(seed)
    tested = [torsion_element(k, n) for k, n in ((1, 2), (2, 4), (2, 5), (3, 8))]
    tested += [random_word(rng, rng.randint(2, max_n), rng.randint(1, max_len)) for _ in range(words)]
    worst = 0
    for w in tested:
        o = order(w)
        if o != INFINITE:
            worst = max(worst, o)
            if o > 2 ** (w.n - 1):
                return CheckResult("torsion bound", False, f"order {o} > 2^{w.n - 1}", str(w))
    return CheckResult("torsion bound", True, f"{len(tested)} words, largest finite order {worst}")


def _diagram_generator_injectivity(max_n: int = 7) -> CheckResult:
    from .cactus import window
    for n in range(3, max_n + 1):
        images = {window(n, a) for a in generators(n)}
        if len(images) != len(generators(n)):
            return CheckResult("generator injectivity", False, f"n={n}")
    return CheckResult("generator injectivity", True, f"n in 3..{max_n}")


QUICK = (
    lambda: check_relations(range(2, 5)),
    lambda: check_injectivity(pairs=60, max_states=5_000),
    lambda: check_word_problem(max_n=4, random_words=60),
    check_torsion_orders,
    check_paj2,
    lambda: check_no_odd_torsion(words=40),
    lambda: check_decreasing(max_len=3),
    lambda: check_center(max_len=2),
    lambda: check_iso((3, 4)),
    lambda: check_classic_embedding(pairs=60),
    lambda: check_split(words=40),
    lambda: check_action(decomposition_n=4, max_n=5),
    lambda: check_torsion_bound(words=60),
)

FULL = (
    check_relations,
    check_injectivity,
    check_word_problem,
    check_torsion_orders,
    check_paj2,
    check_no_odd_torsion,
    check_decreasing,
    check_center,
    check_iso,
    check_classic_embedding,
    check_split,
    check_action,
    check_torsion_bound,
    _diagram_generator_injectivity,
)


def run(level: str = "quick") -> list[CheckResult]:
    suite = {"quick": QUICK, "full": FULL}[level]
    return [check() for check in suite]


__all__ = ["CheckResult", "run", "random_word", "scramble", "diagram_alphabet"]
