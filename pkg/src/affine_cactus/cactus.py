"""Affine cactus groups AJ_n through a faithful semidirect product.

The generator sigma_{i,j} goes to (tau_X, f) where f is the affine
permutation reversing the integer window X = i, i+1, ..., i+|[i,j]_c|-1 and
tau_X is the corresponding generator of a right-angled Coxeter group whose
generators are the conjugates of such windows (``AffineSet``). Two
generators commute when their sets are nested up to a shift by n or have
disjoint residues; affine permutations preserve both conditions, so the
semidirect product is well defined. A word is trivial exactly when its
diagram part is, and the swap/cancel moves that kill the diagram part lift
back to (quasi-)commutations and cancellations of cactus letters.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import racg
from .circular import (AffineSet, CircularSet, affine_disjoint, affine_within, commute_affine, commute_ad,
                       csubset, disjoint, enumerate_circular_sets, interval_set)
from .perm import AffinePermutation, Permutation, compose, interval_reversal
from .racg import RacgAlphabet, RacgWord, Swap
from .words import CactusWord, ClassicCactusWord, Letter, rotate_letter, support_size

INFINITE = math.inf


# ---------------------------------------------------------------------------
# generators, alphabets

def generators(n: int) -> list[Letter]:
    return [Letter(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def classic_generators(n: int) -> list[Letter]:
    return [Letter(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@lru_cache(maxsize=None)
def reversal(n: int, a: Letter) -> Permutation:
    return interval_reversal(n, a.i, a.j)


@lru_cache(maxsize=None)
def affine_reversal(n: int, a: Letter) -> AffinePermutation:
    return AffinePermutation.interval_reversal(n, a.i, a.j)


@lru_cache(maxsize=None)
def support(n: int, a: Letter) -> CircularSet:
    return interval_set(n, a.i, a.j)


@lru_cache(maxsize=None)
def window(n: int, a: Letter) -> AffineSet:
    """The integer window i..i+|[i,j]_c|-1 of a letter."""
    return AffineSet(n, tuple(range(a.i, a.i + support_size(a, n))))


def _is_diagram_generator(n: int):
    def contains(g) -> bool:
        return isinstance(g, AffineSet) and g.n == n and len(g) >= 2
    return contains


@lru_cache(maxsize=None)
def diagram_alphabet(n: int) -> RacgAlphabet:
    """Open alphabet of affine sets with at least two points, the home of phi's diagram part."""
    return RacgAlphabet(None, commute_affine, name=f"diagram group of AJ_{n}",
                        key=AffineSet.sort_key, contains=_is_diagram_generator(n))


@lru_cache(maxsize=None)
def ad_alphabet(n: int) -> RacgAlphabet:
    """Generators tau_I of AD_n, I a circular set with at least two strands."""
    return RacgAlphabet(enumerate_circular_sets(n, 2), commute_ad, name=f"AD_{n}")


def _d_commutes(a: frozenset, b: frozenset) -> bool:
    return a <= b or b <= a or not (a & b)


@lru_cache(maxsize=None)
def d_alphabet(n: int) -> RacgAlphabet:
    """Generators tau_I of the Gauss diagram group D_n, I a subset with at least two points."""
    subsets = [frozenset(c) for k in range(2, n + 1) for c in combinations(range(1, n + 1), k)]
    return RacgAlphabet(subsets, _d_commutes, name=f"D_{n}")


# ---------------------------------------------------------------------------
# the semidirect product

@dataclass(frozen=True)
class SemidirectElement:
    """A pair (tau, f) with (t1, f1)(t2, f2) = (t1 (f1.t2), f1 f2)."""
    diagram_part: RacgWord
    perm_part: AffinePermutation

    def __post_init__(self):
        for g in self.diagram_part:
            if g.n != self.perm_part.n:
                raise ValueError("diagram and permutation parts over different n")

    @property
    def n(self) -> int:
        return self.perm_part.n

    def __mul__(self, other: "SemidirectElement") -> "SemidirectElement":
        f = self.perm_part
        moved = RacgWord(self.diagram_part.alphabet, tuple(g.image(f) for g in other.diagram_part))
        return SemidirectElement(self.diagram_part * moved, f * other.perm_part)

    def normalized(self) -> "SemidirectElement":
        return SemidirectElement(racg.normal_form(self.diagram_part), self.perm_part)

    def reduced(self) -> "SemidirectElement":
        return SemidirectElement(racg.reduce_geodesic(self.diagram_part, with_trace=False)[0], self.perm_part)

    def same_element(self, other: "SemidirectElement") -> bool:
        return self.perm_part == other.perm_part and racg.equal(self.diagram_part, other.diagram_part)

    def is_identity(self) -> bool:
        return self.perm_part.is_identity() and racg.is_trivial(self.diagram_part)

    def to_json(self) -> dict:
        return {"n": self.n, "diagram": [list(g.lift) for g in self.diagram_part],
                "perm": self.perm_part.to_list()}

    def __str__(self) -> str:
        diagram = " ".join(f"t{g}" for g in self.diagram_part)
        return f"({diagram}, {self.perm_part})"


def generator_image(n: int, a: Letter) -> SemidirectElement:
    return SemidirectElement(diagram_alphabet(n).word([window(n, a)]), affine_reversal(n, a))


def identity_element(n: int) -> SemidirectElement:
    return SemidirectElement(diagram_alphabet(n).word(), AffinePermutation.identity(n))


# ---------------------------------------------------------------------------
# morphisms

def pi(w: CactusWord) -> Permutation:
    s = Permutation.identity(w.n)
    for a in w:
        s = compose(s, reversal(w.n, a))
    return s


def affine_image(w: CactusWord) -> AffinePermutation:
    f = AffinePermutation.identity(w.n)
    for a in w:
        f = f * affine_reversal(w.n, a)
    return f


def diagram_letters(w: CactusWord) -> list[AffineSet]:
    """X_r = f_{a_1} ... f_{a_{r-1}} . X_{a_r} for each letter a_r of w."""
    n = w.n
    prefix = AffinePermutation.identity(n)
    out = []
    for a in w:
        out.append(window(n, a).image(prefix))
        prefix = prefix * affine_reversal(n, a)
    return out


def phi(w: CactusWord) -> SemidirectElement:
    return SemidirectElement(diagram_alphabet(w.n).word(diagram_letters(w)), affine_image(w))


def is_identity(w: CactusWord) -> bool:
    """Decide whether w is trivial in AJ_n."""
    image = phi(w)
    if not racg.is_trivial(image.diagram_part):
        return False
    if not image.perm_part.is_identity():
        raise AssertionError(f"diagram part of {w} is trivial but its permutation is {image.perm_part}")
    return True


def equal_words(w1: CactusWord, w2: CactusWord) -> bool:
    if w1.n != w2.n:
        raise ValueError(f"words over different strand counts ({w1.n} vs {w2.n})")
    return is_identity(CactusWord(w1.n, w1.letters) * CactusWord(w2.n, w2.letters).inverse())


def is_pure(w: CactusWord) -> bool:
    return pi(w).is_identity()


# ---------------------------------------------------------------------------
# lifting diagram reductions back to cactus words

def lift_swap(n: int, a: Letter, b: Letter, first: AffineSet, second: AffineSet) -> tuple[Letter, Letter]:
    """Rewrite the adjacent cactus letters ``a b`` whose diagram letters commute.

    ``first`` and ``second`` are the diagram letters of ``a`` and ``b`` in the
    word; the result represents the same element and its diagram letters are
    ``second, first``.
    """
    if affine_disjoint(first, second):
        if not disjoint(support(n, a), support(n, b)):
            raise AssertionError(f"disjoint diagram letters over overlapping {a}, {b}")
        return b, a
    if affine_within(first, second):
        if not csubset(support(n, a), support(n, b)):
            raise AssertionError(f"nested diagram letters over non-nested {a}, {b}")
        return b, quasi_commuted(n, a, b)
    if affine_within(second, first):
        if not csubset(support(n, b), support(n, a)):
            raise AssertionError(f"nested diagram letters over non-nested {b}, {a}")
        return quasi_commuted(n, b, a), a
    raise ValueError(f"diagram letters {first} and {second} do not commute")


def lift_reduce(w: CactusWord) -> CactusWord:
    """Shorten w until its diagram part is geodesic, mirroring each diagram move."""
    n = w.n
    diagram = diagram_letters(w)
    geodesic, trace = racg.reduce_geodesic(diagram_alphabet(n).word(diagram))
    letters = list(w.letters)
    for move in trace:
        p = move.position - 1
        if isinstance(move, Swap):
            letters[p], letters[p + 1] = lift_swap(n, letters[p], letters[p + 1], diagram[p], diagram[p + 1])
            diagram[p], diagram[p + 1] = diagram[p + 1], diagram[p]
        else:
            if letters[p] != letters[p + 1]:
                raise AssertionError(f"equal diagram letters over distinct {letters[p]}, {letters[p + 1]}")
            del letters[p:p + 2]
            del diagram[p:p + 2]
    out = type(w)(n, tuple(letters))
    if tuple(diagram_letters(out)) != geodesic.letters:
        raise AssertionError(f"lifted word {out} does not follow the diagram reduction of {w}")
    return out


def is_reduced(w: CactusWord) -> bool:
    """Whether the diagram part of w is geodesic (then no shorter word has the same image)."""
    return racg.is_geodesic(diagram_alphabet(w.n).word(diagram_letters(w)))


# ---------------------------------------------------------------------------
# torsion

def order(w: CactusWord) -> int | float:
    """Order of w in AJ_n, or INFINITE.

    Finite orders are powers of two at most 2^(n-1), so only the powers
    w^(2^s), s < n, need testing. Squaring is done on the reduced image.
    """
    if is_identity(w):
        return 1
    power = phi(w).reduced()
    for s in range(1, w.n):
        power = (power * power).reduced()
        if len(power.diagram_part) == 0:
            if not power.perm_part.is_identity():
                raise AssertionError(f"trivial diagram part with permutation {power.perm_part}")
            return 2 ** s
    return INFINITE


def torsion_element(k: int, n: int) -> CactusWord:
    """t_k = s(1,2) s(1,4) ... s(1,2^k), an element of order 2^k."""
    if k < 1 or 2 ** k > n:
        raise ValueError(f"t_{k} needs 2^{k} <= n, got n={n}")
    return CactusWord(n, tuple(Letter(1, 2 ** m) for m in range(1, k + 1)))


def is_decreasing(w: CactusWord) -> bool:
    sup = [support(w.n, a) for a in w]
    return all(csubset(sup[q], sup[p]) or disjoint(sup[q], sup[p])
               for p in range(len(sup)) for q in range(p + 1, len(sup)))


def is_irreducibly_decreasing(w: CactusWord) -> bool:
    """Whether the decreasing word w does not split into two disjoint cacti."""
    if not is_decreasing(w):
        raise ValueError(f"{w} is not a decreasing word")
    if len(w) == 0:
        return False
    sup = [support(w.n, a).elements() for a in w]
    seen = {0}
    stack = [0]
    while stack:
        p = stack.pop()
        for q in range(len(sup)):
            if q not in seen and sup[p] & sup[q]:
                seen.add(q)
                stack.append(q)
    return len(seen) == len(sup)


# ---------------------------------------------------------------------------
# J_n and its embedding

def classic_reversal(n: int, a: Letter) -> Permutation:
    return interval_reversal(n, a.i, a.j)


def psi(w: ClassicCactusWord) -> tuple[RacgWord, Permutation]:
    """Image of a J_n word in D_n x| S_n, with S_n acting on subsets pointwise."""
    n = w.n
    prefix = Permutation.identity(n)
    diagram = []
    for a in w:
        diagram.append(frozenset(prefix(p) for p in range(a.i, a.j + 1)))
        prefix = compose(prefix, classic_reversal(n, a))
    return d_alphabet(n).word(diagram), prefix


def equal_classic(w1: ClassicCactusWord, w2: ClassicCactusWord) -> bool:
    if w1.n != w2.n:
        raise ValueError(f"words over different strand counts ({w1.n} vs {w2.n})")
    diagram, perm = psi(ClassicCactusWord(w1.n, w1.letters) * ClassicCactusWord(w2.n, w2.letters).inverse())
    if not racg.is_trivial(diagram):
        return False
    if not perm.is_identity():
        raise AssertionError(f"trivial D_{w1.n} part with permutation {perm}")
    return True


def embed_classic(w: ClassicCactusWord) -> CactusWord:
    return CactusWord(w.n, w.letters)


# ---------------------------------------------------------------------------
# the subgroups AJ_n^{p,q}, the retraction epsilon and the splitting

def _check_range(n: int, p: int, q: int | None = None) -> None:
    q = n if q is None else q
    if not 2 <= p <= q <= n:
        raise ValueError(f"need 2 <= p <= q <= n, got p={p}, q={q}, n={n}")


def in_range(w: CactusWord, p: int, q: int) -> bool:
    _check_range(w.n, p, q)
    return all(p <= support_size(a, w.n) <= q for a in w)


def epsilon(w: CactusWord, p: int) -> CactusWord:
    """Delete every letter whose support has fewer than p strands."""
    _check_range(w.n, p)
    return CactusWord(w.n, tuple(a for a in w if support_size(a, w.n) >= p))


def split(w: CactusWord, p: int) -> tuple[CactusWord, CactusWord]:
    """Factor w = u v with u in the normal closure of AJ_n^{2,p-1} and v = epsilon(w, p).

    Writing w = a_1 b_1 ... a_k b_k in maximal blocks of large (a) and small (b)
    letters, u is the product of the conjugates (a_1..a_t) b_t (a_1..a_t)^-1.
    """
    _check_range(w.n, p)
    n = w.n
    prefix: tuple[Letter, ...] = ()
    u: list[Letter] = []
    block: list[Letter] = []

    def flush():
        if block:
            u.extend(prefix + tuple(block) + prefix[::-1])
            block.clear()

    for a in w:
        if support_size(a, n) >= p:
            flush()
            prefix += (a,)
        else:
            block.append(a)
    flush()
    return CactusWord(n, tuple(u)), CactusWord(n, prefix)


def rotate(w: CactusWord, d: int) -> CactusWord:
    """Shift every index by d modulo n."""
    return CactusWord(w.n, tuple(rotate_letter(a, d, w.n) for a in w))


# ---------------------------------------------------------------------------
# relations

def quasi_commuted(n: int, a: Letter, b: Letter) -> Letter:
    """The letter c with sigma_a sigma_b = sigma_b sigma_c, for [a]_c inside [b]_c."""
    s = reversal(n, b)
    return Letter(s(a.j), s(a.i))


def defining_relations(n: int) -> list[tuple[CactusWord, CactusWord]]:
    """Involutions, disjoint commutations and nested quasi-commutations of AJ_n."""
    gens = generators(n)
    word = lambda *letters: CactusWord(n, letters)  # noqa: E731
    rels = [(word(a, a), word()) for a in gens]
    for a, b in combinations(gens, 2):
        if disjoint(support(n, a), support(n, b)):
            rels.append((word(a, b), word(b, a)))
    for a in gens:
        for b in gens:
            if a != b and csubset(support(n, a), support(n, b)):
                rels.append((word(a, b), word(b, quasi_commuted(n, a, b))))
    return rels


# ---------------------------------------------------------------------------
# faithful integer matrices

@dataclass(frozen=True)
class MatrixOracle:
    """Integer matrices for a finite family of words of AJ_n.

    The diagram group has infinitely many generators, so there is no single
    finite basis. The matrices here use the finite sub-alphabet of letters
    that actually occur: a word maps to R(tau) (+) A(f), with R the Tits
    representation of that parabolic subgroup and A the affine matrix of f.
    Two words of the family are equal in AJ_n iff their matrices agree.
    """
    n: int
    alphabet: RacgAlphabet

    @classmethod
    def for_words(cls, *words: CactusWord) -> "MatrixOracle":
        if not words:
            raise ValueError("need at least one word")
        n = words[0].n
        if any(w.n != n for w in words):
            raise ValueError("words over different strand counts")
        letters = {g for w in words for g in diagram_letters(w)}
        return cls(n, diagram_alphabet(n).restrict(letters, name=f"letters of {len(words)} words"))

    @property
    def dimension(self) -> int:
        return len(self.alphabet) + self.n + 1

    def basis(self) -> list[str]:
        return [f"t{g}" for g in self.alphabet.generators] + ["1"] + [f"e{p}" for p in range(1, self.n + 1)]

    def matrix(self, w: CactusWord) -> np.ndarray:
        image = phi(w)
        tau = racg.rep_matrix(self.alphabet.word(image.diagram_part.letters))
        d = len(self.alphabet)
        out = np.zeros((self.dimension, self.dimension), dtype=object)
        out[:d, :d] = tau
        out[d:, d:] = np.array(image.perm_part.affine_matrix(), dtype=object)
        return out


def rep_matrices(*words: CactusWord) -> list[np.ndarray]:
    oracle = MatrixOracle.for_words(*words)
    return [oracle.matrix(w) for w in words]


def rep_equal(w1: CactusWord, w2: CactusWord) -> bool:
    m1, m2 = rep_matrices(w1, w2)
    return racg.matrices_equal(m1, m2)
