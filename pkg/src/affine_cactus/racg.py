"""Right-angled Coxeter groups given by an alphabet and a commutation predicate.

Every generator is an involution and the only other relations say that
certain pairs commute. Words are reduced by the classical swap/cancel
moves: a word is geodesic exactly when no two equal letters can be brought
together by commuting them past the letters in between.
"""
from __future__ import annotations

import weakref
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

Generator = Hashable


class RacgAlphabet:
    """Ordered generators with a symmetric commutation predicate.

    A finite alphabet lists its generators; their order is the total order
    used by normal forms. An open alphabet instead takes a membership test
    ``contains`` and a sort ``key``; it supports every word operation except
    the geometric representation, which needs a finite basis (see ``restrict``).
    """

    def __init__(self, generators: Iterable[Generator] | None, commutes: Callable[[Generator, Generator], bool],
                 name: str = "", *, key: Callable[[Generator], object] | None = None,
                 contains: Callable[[Generator], bool] | None = None):
        self._commutes = commutes
        self._cache: dict[tuple, bool] = {}
        self.name = name
        if generators is None:
            if key is None or contains is None:
                raise ValueError("an open alphabet needs both key and contains")
            self.generators = None
            self.index = None
            self._key = key
            self._contains = contains
            return
        self.generators = tuple(generators)
        self.index = {g: k for k, g in enumerate(self.generators)}
        if len(self.index) != len(self.generators):
            raise ValueError("repeated generator labels")
        self._key = self.index.__getitem__
        self._contains = self.index.__contains__

    @property
    def finite(self) -> bool:
        return self.generators is not None

    def __len__(self) -> int:
        if not self.finite:
            raise TypeError(f"{self!r} is infinite")
        return len(self.generators)

    def __contains__(self, g) -> bool:
        try:
            return bool(self._contains(g))
        except TypeError:
            return False

    def __repr__(self) -> str:
        size = len(self.generators) if self.finite else "open"
        return f"RacgAlphabet({self.name or size}, {size} generators)"

    def order_key(self, g: Generator):
        return self._key(g)

    def commutes(self, a: Generator, b: Generator) -> bool:
        """Whether two distinct generators commute; a generator never commutes with itself here."""
        if a == b:
            return False
        key = (a, b) if self._key(a) < self._key(b) else (b, a)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = bool(self._commutes(a, b))
        return hit

    def word(self, letters: Iterable[Generator] = ()) -> "RacgWord":
        return RacgWord(self, tuple(letters))

    def non_commuting(self, g: Generator) -> list[Generator]:
        if not self.finite:
            raise TypeError(f"{self!r} is infinite")
        return [h for h in self.generators if h != g and not self.commutes(g, h)]

    def restrict(self, letters: Iterable[Generator], name: str = "") -> "RacgAlphabet":
        """The finite alphabet on the given generators, in this alphabet's order.

        Its group is a standard parabolic subgroup, so equality of words over
        it agrees with equality in the full group.
        """
        letters = sorted(set(letters), key=self._key)
        for g in letters:
            if g not in self:
                raise ValueError(f"letter {g!r} not in {self!r}")
        return RacgAlphabet(letters, self._commutes, name=name or self.name)


@dataclass(frozen=True)
class RacgWord:
    alphabet: RacgAlphabet
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g not in self.alphabet:
                raise ValueError(f"letter {g!r} not in {self.alphabet!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "RacgWord") -> "RacgWord":
        _same_alphabet(self, other)
        return RacgWord(self.alphabet, self.letters + other.letters)

    def inverse(self) -> "RacgWord":
        return RacgWord(self.alphabet, self.letters[::-1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RacgWord):
            return NotImplemented
        return self.alphabet is other.alphabet and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((id(self.alphabet), self.letters))


def _same_alphabet(a: RacgWord, b: RacgWord) -> None:
    if a.alphabet is not b.alphabet:
        raise ValueError("words over different alphabets")


@dataclass(frozen=True)
class Swap:
    """Exchange the commuting letters at 1-based positions ``position`` and ``position + 1``."""
    position: int


@dataclass(frozen=True)
class Cancel:
    """Delete the equal letters at 1-based positions ``position`` and ``position + 1``."""
    position: int


Move = Swap | Cancel


def apply_move(alphabet: RacgAlphabet, letters: list, move: Move) -> None:
    """Apply one move in place, raising ValueError if it is illegal."""
    p = move.position - 1
    if not 0 <= p < len(letters) - 1:
        raise ValueError(f"{move} out of range for a word of length {len(letters)}")
    a, b = letters[p], letters[p + 1]
    if isinstance(move, Swap):
        if not alphabet.commutes(a, b):
            raise ValueError(f"{move}: letters {a!r}, {b!r} do not commute")
        letters[p], letters[p + 1] = b, a
    else:
        if a != b:
            raise ValueError(f"{move}: letters {a!r}, {b!r} differ")
        del letters[p:p + 2]


def replay(word: RacgWord, trace: Sequence[Move]) -> RacgWord:
    letters = list(word.letters)
    for move in trace:
        apply_move(word.alphabet, letters, move)
    return RacgWord(word.alphabet, tuple(letters))


def _find_pair(alphabet: RacgAlphabet, letters: Sequence, start: int) -> tuple[int, int] | None:
    """Leftmost cancellable pair (i, j), minimizing j, with j >= start."""
    for j in range(max(start, 1), len(letters)):
        x = letters[j]
        for i in range(j - 1, -1, -1):
            y = letters[i]
            if y == x:
                return i, j
            if not alphabet.commutes(x, y):
                break
    return None


def reduce_geodesic(word: RacgWord, with_trace: bool = True) -> tuple[RacgWord, list[Move]]:
    """Reduce ``word`` to a geodesic, recording the swap/cancel moves used.

    Each step takes the cancellable pair whose right letter is leftmost, slides
    that letter left next to its partner and deletes both.
    """
    alphabet = word.alphabet
    letters = list(word.letters)
    trace: list[Move] = []
    start = 1
    while (pair := _find_pair(alphabet, letters, start)) is not None:
        i, j = pair
        if with_trace:
            trace.extend(Swap(q) for q in range(j, i + 1, -1))
        del letters[j]
        del letters[i]
        if with_trace:
            trace.append(Cancel(i + 1))
        start = i
    return RacgWord(alphabet, tuple(letters)), trace


def is_geodesic(word: RacgWord) -> bool:
    return _find_pair(word.alphabet, word.letters, 1) is None


def _lex_least(alphabet: RacgAlphabet, letters: list) -> list:
    out = []
    key = alphabet.order_key
    while letters:
        best = None
        for p, x in enumerate(letters):
            if best is not None and key(x) >= key(letters[best]):
                continue
            if all(alphabet.commutes(x, y) for y in letters[:p]):
                best = p
        out.append(letters.pop(best))
    return out


def normal_form(word: RacgWord) -> RacgWord:
    """Lexicographically least geodesic representing the same element."""
    geodesic, _ = reduce_geodesic(word, with_trace=False)
    return RacgWord(word.alphabet, tuple(_lex_least(word.alphabet, list(geodesic.letters))))


def equal(w1: RacgWord, w2: RacgWord) -> bool:
    _same_alphabet(w1, w2)
    return normal_form(w1).letters == normal_form(w2).letters


def is_trivial(word: RacgWord) -> bool:
    return len(reduce_geodesic(word, with_trace=False)[0]) == 0


def brute_force_equal(w1: RacgWord, w2: RacgWord, max_length: int | None = None,
                      max_states: int = 200_000) -> bool | None:
    """Bounded breadth-first search for a chain of moves from ``w1`` to ``w2``.

    Moves are swaps of adjacent commuting letters, deletion of adjacent equal
    letters and insertion of a pair ``gg`` for a letter g occurring in either
    word, never exceeding ``max_length`` letters. Returns True when ``w2`` is
    reached, False when the bounded space is exhausted, and None when more than
    ``max_states`` words would have to be visited (inconclusive).
    """
    _same_alphabet(w1, w2)
    alphabet = w1.alphabet
    if max_length is None:
        max_length = max(len(w1), len(w2))
    if len(w1) > max_length or len(w2) > max_length:
        raise ValueError("words longer than the search bound")
    source, target = w1.letters, w2.letters
    inserts = sorted(set(source) | set(target), key=alphabet.order_key)
    seen = {source}
    queue = deque([source])
    while queue:
        word = queue.popleft()
        if word == target:
            return True
        for nxt in _neighbours(alphabet, word, inserts, max_length):
            if nxt not in seen:
                if len(seen) >= max_states:
                    return None
                seen.add(nxt)
                queue.append(nxt)
    return False


def _neighbours(alphabet, word, inserts, max_length):
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if a == b:
            yield word[:p] + word[p + 2:]
        elif alphabet.commutes(a, b):
            yield word[:p] + (b, a) + word[p + 2:]
    if len(word) + 2 <= max_length:
        for p in range(len(word) + 1):
            for g in inserts:
                yield word[:p] + (g, g) + word[p:]


class GeometricRepresentation:
    """Tits representation over the integers.

    The bilinear form is B(g,g) = 1, B(g,h) = 0 for commuting pairs and -1
    otherwise; the generator g acts by e_h -> e_h - 2 B(g,h) e_g. Matrices are
    numpy arrays of Python integers so entries never overflow.
    """

    def __init__(self, alphabet: RacgAlphabet):
        if not alphabet.finite:
            raise TypeError("the geometric representation needs a finite alphabet")
        self.alphabet = alphabet
        self.dimension = len(alphabet)
        self._neighbours = {
            g: np.array([alphabet.index[h] for h in alphabet.non_commuting(g)], dtype=np.intp)
            for g in alphabet.generators
        }

    def identity(self) -> np.ndarray:
        eye = np.zeros((self.dimension, self.dimension), dtype=object)
        for k in range(self.dimension):
            eye[k, k] = 1
        return eye

    def left_multiply(self, g: Generator, m: np.ndarray, inplace: bool = False) -> np.ndarray:
        """R_g @ m. Only row g of m changes."""
        k = self.alphabet.index[g]
        out = m if inplace else m.copy()
        nbrs = self._neighbours[g]
        row = -m[k]
        if len(nbrs):
            row = row + 2 * m[nbrs].sum(axis=0)
        out[k] = row
        return out

    def matrix(self, g: Generator) -> np.ndarray:
        return self.left_multiply(g, self.identity())

    def word_matrix(self, word: RacgWord) -> np.ndarray:
        if word.alphabet is not self.alphabet:
            raise ValueError("word over a different alphabet")
        m = self.identity()
        for g in reversed(word.letters):
            m = self.left_multiply(g, m)
        return m


_REPS: "weakref.WeakKeyDictionary[RacgAlphabet, GeometricRepresentation]" = weakref.WeakKeyDictionary()


def geometric_rep(alphabet: RacgAlphabet) -> GeometricRepresentation:
    rep = _REPS.get(alphabet)
    if rep is None:
        rep = _REPS[alphabet] = GeometricRepresentation(alphabet)
    return rep


def rep_matrix(word: RacgWord) -> np.ndarray:
    return geometric_rep(word.alphabet).word_matrix(word)


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool((a == b).all())
